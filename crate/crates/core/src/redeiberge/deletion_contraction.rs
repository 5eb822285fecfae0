//! `W_X` by the recursion `W_X = W_{X∖e} − W_{X/e}↑` on `e = (n−1, n)`.

use num_rational::BigRational;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ncsym::{Basis, NcSym};
use crate::perm::Perm;
use crate::setpart::partitions_of;

pub const MAX_DELETION_CONTRACTION: usize = 7;

/// Which non-loop edge the recursion removes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeRule {
    /// Lexicographically smallest `(u, v)`.
    #[default]
    Smallest,
    /// Lexicographically largest `(u, v)`.
    Largest,
}

/// `W_{D_n} = Σ_π π! m_π`; loops do not change it.
pub fn discrete_w(n: usize) -> NcSym {
    NcSym::from_terms(
        n,
        Basis::M,
        partitions_of(n).into_iter().map(|pi| {
            let w = pi.factorial_weight();
            (pi, BigRational::from_integer(w))
        }),
    )
    .expect("partitions of n have degree n")
}

/// The relabeling sending `u ↦ n−1`, `v ↦ n` and keeping the other vertices in order.
pub fn edge_to_end(n: usize, u: usize, v: usize) -> Result<Perm> {
    if u == v || u == 0 || v == 0 || u > n || v > n {
        return Err(Error::InvalidPermutation(format!(
            "cannot move ({u}, {v}) to ({}, {n})",
            n.saturating_sub(1)
        )));
    }
    let mut images = vec![0; n];
    let mut next = 1;
    for (i, image) in images.iter_mut().enumerate() {
        let w = i + 1;
        *image = if w == u {
            n - 1
        } else if w == v {
            n
        } else {
            next += 1;
            next - 1
        };
    }
    Perm::new(images)
}

pub fn w_by_deletion_contraction(x: &Digraph) -> Result<NcSym> {
    w_by_deletion_contraction_with(x, EdgeRule::Smallest)
}

/// `W_X` in the `m` basis, removing edges in the order chosen by `rule`.
pub fn w_by_deletion_contraction_with(x: &Digraph, rule: EdgeRule) -> Result<NcSym> {
    if x.n() > MAX_DELETION_CONTRACTION {
        return Err(Error::SizeLimit {
            what: "deletion-contraction",
            size: x.n(),
            limit: MAX_DELETION_CONTRACTION,
        });
    }
    recurse(x, rule)
}

fn recurse(x: &Digraph, rule: EdgeRule) -> Result<NcSym> {
    let n = x.n();
    let edges = x.non_loop_edges();
    let chosen = match rule {
        EdgeRule::Smallest => edges.first(),
        EdgeRule::Largest => edges.last(),
    };
    let Some(&(u, v)) = chosen else {
        return Ok(discrete_w(n));
    };
    let delta = edge_to_end(n, u, v)?;
    let moved = x.relabel(&delta)?;
    let deleted = recurse(&moved.delete_edges(&[(n - 1, n)])?, rule)?;
    let contracted = recurse(&moved.contract_last_edge()?, rule)?.induct()?;
    deleted.sub(&contracted)?.act(&delta.inverse())
}

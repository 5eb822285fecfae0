//! `W_X` straight from friendly listings.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ncsym::{Basis, NcSym};
use crate::perm::next_permutation;
use crate::setpart::partitions_of;

pub const MAX_DEFINITION: usize = 8;

/// A coloring `f: V → ℙ`, one color per vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::InvariantViolation(
                "colors must be positive integers".into(),
            ));
        }
        Ok(Coloring(colors))
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every coloring of `n` vertices with values in `1..=k`.
    pub fn all(n: usize, k: usize) -> impl Iterator<Item = Coloring> {
        let total = (k as u64).pow(n as u32);
        (0..total).map(move |mut code| {
            let mut colors = vec![0; n];
            for c in colors.iter_mut() {
                *c = (code % k as u64) as usize + 1;
                code /= k as u64;
            }
            Coloring(colors)
        })
    }
}

/// `#Σ_V(f, X)`: listings weakly increasing in `f`, strictly across every edge.
pub fn count_friendly(x: &Digraph, f: &Coloring) -> Result<u64> {
    let n = x.n();
    if f.len() != n {
        return Err(Error::DegreeMismatch {
            left: f.len(),
            right: n,
        });
    }
    fn extend(x: &Digraph, f: &[usize], last: usize, used: u64, placed: usize) -> u64 {
        if placed == f.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..f.len() {
            if used & (1 << v) != 0 || f[v] < f[last] {
                continue;
            }
            if f[v] == f[last] && x.has_edge0(last, v) {
                continue;
            }
            total += extend(x, f, v, used | (1 << v), placed + 1);
        }
        total
    }
    if n == 0 {
        return Ok(1);
    }
    let colors = f.colors();
    Ok((0..n).map(|s| extend(x, colors, s, 1 << s, 1)).sum())
}

/// `W_X` in the `m` basis from the defining sum. For each set partition `π`
/// the coefficient of `m_π` is the friendly count of any coloring whose
/// equality pattern is `π`; all `k!` relative orders of the block colors are
/// evaluated and must agree.
pub fn w_by_definition(x: &Digraph) -> Result<NcSym> {
    let n = x.n();
    if n > MAX_DEFINITION {
        return Err(Error::SizeLimit {
            what: "definition algorithm",
            size: n,
            limit: MAX_DEFINITION,
        });
    }
    let mut terms = Vec::new();
    for pi in partitions_of(n) {
        let k = pi.num_blocks();
        // rank[b] = color given to block b
        let mut rank: Vec<usize> = (1..=k).collect();
        let mut counts = Vec::new();
        loop {
            let colors = pi.labels().iter().map(|&b| rank[b as usize]).collect();
            counts.push(count_friendly(x, &Coloring(colors))?);
            if !next_permutation(&mut rank) {
                break;
            }
        }
        if counts.iter().any(|&c| c != counts[0]) {
            return Err(Error::SymmetryViolation {
                partition: pi.to_string(),
                counts,
            });
        }
        if counts[0] != 0 {
            terms.push((pi, BigRational::from_integer(BigInt::from(counts[0]))));
        }
    }
    NcSym::from_terms(n, Basis::M, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::SetPartition;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn m(terms: &[(&str, i64)]) -> NcSym {
        let n = sp(terms[0].0).n();
        NcSym::from_int_terms(n, Basis::M, terms.iter().map(|(s, c)| (sp(s), *c))).unwrap()
    }

    #[test]
    fn friendly_count_examples() {
        let f11 = Coloring::new(vec![1, 1]).unwrap();
        let f12 = Coloring::new(vec![1, 2]).unwrap();
        assert_eq!(count_friendly(&Digraph::discrete(2), &f11).unwrap(), 2);
        assert_eq!(count_friendly(&Digraph::path(2), &f11).unwrap(), 1);
        assert_eq!(count_friendly(&Digraph::path(2), &f12).unwrap(), 1);
        assert!(count_friendly(&Digraph::path(3), &f12).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn friendly_count_matches_listing_filter() {
        use crate::perm::all_perms;
        for x in Digraph::all(3, true).into_iter().step_by(7) {
            for f in Coloring::all(3, 3) {
                let c = f.colors();
                let brute = all_perms(3)
                    .into_iter()
                    .filter(|s| {
                        let l = s.images();
                        (0..2).all(|i| {
                            let (a, b) = (l[i], l[i + 1]);
                            c[a - 1] < c[b - 1] || (c[a - 1] == c[b - 1] && !x.has_edge(a, b))
                        })
                    })
                    .count() as u64;
                assert_eq!(count_friendly(&x, &f).unwrap(), brute, "{x} {f:?}");
            }
        }
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(
            w_by_definition(&Digraph::complete(2)).unwrap(),
            m(&[("1/2", 1)])
        );
        assert_eq!(
            w_by_definition(&Digraph::discrete(2)).unwrap(),
            m(&[("1/2", 1), ("12", 2)])
        );
        assert_eq!(
            w_by_definition(&Digraph::discrete(1)).unwrap(),
            m(&[("1", 1)])
        );
        assert_eq!(
            w_by_definition(&Digraph::discrete(0)).unwrap(),
            NcSym::one().to_basis(Basis::M)
        );
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            w_by_definition(&Digraph::discrete(9)),
            Err(Error::SizeLimit { .. })
        ));
    }
}

//! The commutative `U_X` through X-descent sets and fundamental quasisymmetric functions.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ncsym::{Basis, CSym};
use crate::perm::next_permutation;
use crate::setpart::IntPartition;

pub const MAX_DESCENTS: usize = 8;

/// A nonnegative integer combination of `F_I`, keyed by descent set `I ⊆ {1..n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSym {
    degree: usize,
    terms: BTreeMap<Vec<usize>, u64>,
}

impl QSym {
    pub fn zero(degree: usize) -> Self {
        QSym {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.terms
    }

    /// Adds `count · F_I`. `I` must be a sorted subset of `{1..n−1}`.
    pub fn add_term(&mut self, descents: Vec<usize>, count: u64) -> Result<()> {
        let sorted = descents.windows(2).all(|w| w[0] < w[1]);
        let in_range = descents.iter().all(|&i| i >= 1 && i < self.degree);
        if !sorted || !in_range {
            return Err(Error::InvariantViolation(format!(
                "{descents:?} is not a descent set of degree {}",
                self.degree
            )));
        }
        if count > 0 {
            *self.terms.entry(descents).or_insert(0) += count;
        }
        Ok(())
    }

    /// Monomial coefficients in `n` variables, keyed by exponent vector.
    pub fn monomial_expansion(&self) -> HashMap<Vec<usize>, u64> {
        let n = self.degree;
        let mut out = HashMap::new();
        if n == 0 {
            let c = self.terms.get(&Vec::new()).copied().unwrap_or(0);
            if c > 0 {
                out.insert(Vec::new(), c);
            }
            return out;
        }
        let mut word = vec![1usize; n];
        loop {
            // F_I takes every weakly increasing word that ascends strictly at each i ∈ I
            let ascents: Vec<usize> = (1..n).filter(|&i| word[i - 1] < word[i]).collect();
            let weight: u64 = self
                .terms
                .iter()
                .filter(|(set, _)| set.iter().all(|i| ascents.binary_search(i).is_ok()))
                .map(|(_, c)| c)
                .sum();
            if weight > 0 {
                let mut exponents = vec![0; n];
                for &letter in &word {
                    exponents[letter - 1] += 1;
                }
                *out.entry(exponents).or_insert(0) += weight;
            }
            if !next_weak_word(&mut word, n) {
                break;
            }
        }
        out
    }

    /// The `m`-expansion of this function, which must be symmetric.
    pub fn to_symmetric(&self) -> Result<CSym> {
        let n = self.degree;
        let monomials = self.monomial_expansion();
        let mut terms = Vec::new();
        for lambda in IntPartition::all(n) {
            let mut exponents: Vec<usize> = lambda.parts().to_vec();
            exponents.resize(n, 0);
            exponents.sort_unstable();
            let mut seen = Vec::new();
            loop {
                seen.push(monomials.get(&exponents).copied().unwrap_or(0));
                if !next_permutation(&mut exponents) {
                    break;
                }
            }
            if seen.iter().any(|&c| c != seen[0]) {
                return Err(Error::InvariantViolation(format!(
                    "descent aggregate is not symmetric at {lambda}: {seen:?}"
                )));
            }
            if seen[0] > 0 {
                terms.push((lambda, BigRational::from_integer(BigInt::from(seen[0]))));
            }
        }
        CSym::from_terms(n, Basis::M, terms)
    }
}

fn next_weak_word(word: &mut [usize], max: usize) -> bool {
    let Some(i) = word.iter().rposition(|&c| c < max) else {
        return false;
    };
    let c = word[i] + 1;
    for w in &mut word[i..] {
        *w = c;
    }
    true
}

/// `XDes(σ)` for a listing given as 1-based vertices.
pub fn x_descent_set(x: &Digraph, listing: &[usize]) -> Vec<usize> {
    (1..listing.len())
        .filter(|&i| x.has_edge(listing[i - 1], listing[i]))
        .collect()
}

/// `Σ_σ F_{XDes(σ)}` over all vertex listings.
pub fn descent_aggregate(x: &Digraph) -> Result<QSym> {
    let n = x.n();
    if n > MAX_DESCENTS {
        return Err(Error::SizeLimit {
            what: "descent aggregate",
            size: n,
            limit: MAX_DESCENTS,
        });
    }
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut listing: Vec<usize> = (1..=n).collect();
    loop {
        *counts.entry(x_descent_set(x, &listing)).or_insert(0) += 1;
        if !next_permutation(&mut listing) {
            break;
        }
    }
    let mut q = QSym::zero(n);
    for (set, c) in counts {
        q.add_term(set, c)?;
    }
    Ok(q)
}

/// `U_X` in the commutative `m` basis.
pub fn u_by_descents(x: &Digraph) -> Result<CSym> {
    descent_aggregate(x)?.to_symmetric()
}

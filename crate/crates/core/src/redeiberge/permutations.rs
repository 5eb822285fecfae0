//! Power-sum expansions of `W_X` by enumerating permutations cycle by cycle.
//!
//! Cycles are grown from the least unassigned vertex; a partial cycle is only
//! extended along edges that keep it realizable, so permutations that fail on
//! their first bad cycle are never completed.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ncsym::{Basis, NcSym};
use crate::setpart::{mobius, SetPartition};

pub const MAX_PERMUTATIONS: usize = 8;

/// One admissible permutation, reduced to what the expansions need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    /// `Type(σ)`.
    pub cycle_type: SetPartition,
    /// `φ(σ)`: Σ (length − 1) over the cycles lying in `X`.
    pub phi: usize,
    /// `ψ(σ)`: number of cycles of length ≥ 2.
    pub psi: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// `S_V(X, X̄)`: every cycle, fixed points included, lies in `X` or in `X̄`.
    XOrComplement,
    /// `S_V(X)` restricted to odd cycle lengths: nontrivial cycles lie in `X`.
    OddCyclesOfX,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    X,
    Complement,
}

struct Search<'a, F> {
    x: &'a Digraph,
    rule: Rule,
    cycle_of: Vec<usize>,
    cycles: usize,
    phi: usize,
    psi: usize,
    visit: F,
}

impl<F: FnMut(SignedPermutation)> Search<'_, F> {
    fn side(&self, u: usize, v: usize) -> Side {
        if self.x.has_edge0(u, v) {
            Side::X
        } else {
            Side::Complement
        }
    }

    fn start_cycle(&mut self) -> Result<()> {
        let n = self.x.n();
        let Some(s) = self.cycle_of.iter().position(|&c| c == usize::MAX) else {
            (self.visit)(SignedPermutation {
                cycle_type: SetPartition::from_assignment(&self.cycle_of),
                phi: self.phi,
                psi: self.psi,
            });
            return Ok(());
        };
        let id = self.cycles;
        self.cycles += 1;
        self.cycle_of[s] = id;

        // a fixed point is always admissible: its loop is in X or in X̄, and φ gains 0
        self.start_cycle()?;

        let mut path = vec![s];
        for v in s + 1..n {
            if self.cycle_of[v] != usize::MAX {
                continue;
            }
            let side = self.side(s, v);
            if self.rule == Rule::OddCyclesOfX && side != Side::X {
                continue;
            }
            self.cycle_of[v] = id;
            path.push(v);
            self.grow(&mut path, side)?;
            path.pop();
            self.cycle_of[v] = usize::MAX;
        }

        self.cycle_of[s] = usize::MAX;
        self.cycles -= 1;
        Ok(())
    }

    fn grow(&mut self, path: &mut Vec<usize>, side: Side) -> Result<()> {
        let n = self.x.n();
        let (s, last) = (path[0], *path.last().expect("nonempty"));
        let len = path.len();

        if self.side(last, s) == side {
            let closable = match self.rule {
                Rule::XOrComplement => true,
                Rule::OddCyclesOfX => len % 2 == 1,
            };
            if closable {
                self.check_classification(path)?;
                let phi_step = if side == Side::X { len - 1 } else { 0 };
                self.phi += phi_step;
                self.psi += 1;
                self.start_cycle()?;
                self.psi -= 1;
                self.phi -= phi_step;
            }
        }

        for v in s + 1..n {
            if self.cycle_of[v] != usize::MAX || self.side(last, v) != side {
                continue;
            }
            self.cycle_of[v] = self.cycle_of[s];
            path.push(v);
            self.grow(path, side)?;
            path.pop();
            self.cycle_of[v] = usize::MAX;
        }
        Ok(())
    }

    fn check_classification(&self, path: &[usize]) -> Result<()> {
        let edges = (0..path.len()).map(|i| (path[i], path[(i + 1) % path.len()]));
        let in_x = edges.clone().all(|(u, v)| self.x.has_edge0(u, v));
        let in_complement = edges.clone().all(|(u, v)| !self.x.has_edge0(u, v));
        if in_x == in_complement {
            let cycle: Vec<usize> = path.iter().map(|v| v + 1).collect();
            return Err(Error::InvariantViolation(format!(
                "cycle {cycle:?} classified as {} X and X̄",
                if in_x { "both" } else { "neither" }
            )));
        }
        Ok(())
    }
}

fn check_size(x: &Digraph, what: &'static str) -> Result<()> {
    if x.n() > MAX_PERMUTATIONS {
        return Err(Error::SizeLimit {
            what,
            size: x.n(),
            limit: MAX_PERMUTATIONS,
        });
    }
    Ok(())
}

fn search<F: FnMut(SignedPermutation)>(x: &Digraph, rule: Rule, visit: F) -> Result<()> {
    Search {
        x,
        rule,
        cycle_of: vec![usize::MAX; x.n()],
        cycles: 0,
        phi: 0,
        psi: 0,
        visit,
    }
    .start_cycle()
}

/// Calls `visit` once for every `σ ∈ S_V(X, X̄)`.
pub fn for_each_signed_permutation<F>(x: &Digraph, visit: F) -> Result<()>
where
    F: FnMut(SignedPermutation),
{
    check_size(x, "permutation enumeration")?;
    search(x, Rule::XOrComplement, visit)
}

fn collect(n: usize, counts: HashMap<SetPartition, i64>) -> Result<NcSym> {
    NcSym::from_terms(
        n,
        Basis::P,
        counts
            .into_iter()
            .map(|(pi, c)| (pi, BigRational::from_integer(BigInt::from(c)))),
    )
}

/// `W_X = Σ_{σ ∈ S_V(X, X̄)} (−1)^φ(σ) p_Type(σ)`.
pub fn w_by_permutations(x: &Digraph) -> Result<NcSym> {
    let mut counts: HashMap<SetPartition, i64> = HashMap::new();
    for_each_signed_permutation(x, |s| {
        let sign = if s.phi % 2 == 0 { 1 } else { -1 };
        *counts.entry(s.cycle_type).or_default() += sign;
    })?;
    collect(x.n(), counts)
}

/// For a tournament: `W_X = Σ 2^ψ(σ) p_Type(σ)` over `σ ∈ S_V(X)` with every cycle of odd length.
pub fn w_tournament(x: &Digraph) -> Result<NcSym> {
    if !x.is_tournament() {
        return Err(Error::NotATournament);
    }
    check_size(x, "tournament enumeration")?;
    let mut counts: HashMap<SetPartition, i64> = HashMap::new();
    search(x, Rule::OddCyclesOfX, |s| {
        *counts.entry(s.cycle_type).or_default() += 1i64 << s.psi;
    })?;
    collect(x.n(), counts)
}

fn check_pi(x: &Digraph, pi: &SetPartition) -> Result<()> {
    if pi.n() != x.n() {
        return Err(Error::DegreeMismatch {
            left: pi.n(),
            right: x.n(),
        });
    }
    Ok(())
}

/// `[m_π] W_X = Σ (−1)^φ(σ)` over `σ ∈ S_V(X, X̄)` with `Type(σ) ≤ π`.
pub fn m_coefficient_formula(x: &Digraph, pi: &SetPartition) -> Result<BigInt> {
    check_pi(x, pi)?;
    let mut total = 0i64;
    for_each_signed_permutation(x, |s| {
        if s.cycle_type.refines(pi).expect("degrees checked") {
            total += if s.phi % 2 == 0 { 1 } else { -1 };
        }
    })?;
    Ok(BigInt::from(total))
}

/// `[e_π] W_X = Σ (−1)^φ(σ) μ(π, Type σ) / μ(0̂, Type σ)` over `σ ∈ S_V(X, X̄)` with `π ≤ Type(σ)`.
pub fn e_coefficient_formula(x: &Digraph, pi: &SetPartition) -> Result<BigRational> {
    check_pi(x, pi)?;
    let bottom = SetPartition::singletons(x.n());
    let mut total = BigRational::zero();
    for_each_signed_permutation(x, |s| {
        if pi.refines(&s.cycle_type).expect("degrees checked") {
            let num = mobius(pi, &s.cycle_type).expect("π refines the type");
            let den = mobius(&bottom, &s.cycle_type).expect("0̂ refines everything");
            let term = BigRational::new(num, den);
            if s.phi % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    })?;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;
    use crate::setpart::cycle_type_partition;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn p(terms: &[(&str, i64)]) -> NcSym {
        let n = sp(terms[0].0).n();
        NcSym::from_int_terms(n, Basis::P, terms.iter().map(|(s, c)| (sp(s), *c))).unwrap()
    }

    /// Filter over all n! permutations, classifying each cycle directly.
    fn brute_force(x: &Digraph) -> NcSym {
        let mut counts: HashMap<SetPartition, i64> = HashMap::new();
        for sigma in all_perms(x.n()) {
            let mut phi = 0;
            let mut ok = true;
            for cycle in sigma.cycles() {
                let edges: Vec<_> = (0..cycle.len())
                    .map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]))
                    .collect();
                if edges.iter().all(|&(u, v)| x.has_edge(u, v)) {
                    phi += cycle.len() - 1;
                } else if !edges.iter().all(|&(u, v)| !x.has_edge(u, v)) {
                    ok = false;
                }
            }
            if ok {
                let sign = if phi % 2 == 0 { 1 } else { -1 };
                *counts.entry(cycle_type_partition(&sigma)).or_default() += sign;
            }
        }
        collect(x.n(), counts).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            w_by_permutations(&Digraph::complete(2)).unwrap(),
            p(&[("1/2", 1), ("12", -1)])
        );
        assert_eq!(
            w_by_permutations(&Digraph::discrete(2)).unwrap(),
            p(&[("1/2", 1), ("12", 1)])
        );
        assert_eq!(
            w_by_permutations(&Digraph::path(2)).unwrap(),
            p(&[("1/2", 1)])
        );
        assert_eq!(
            w_by_permutations(&Digraph::discrete(0)).unwrap(),
            NcSym::one()
        );
    }

    #[test]
    fn pruned_search_matches_filter() {
        for x in Digraph::all(3, true) {
            assert_eq!(w_by_permutations(&x).unwrap(), brute_force(&x), "{x}");
        }
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in 4..=6 {
            for _ in 0..15 {
                let x = Digraph::random(n, 0.4, &mut rng);
                assert_eq!(w_by_permutations(&x).unwrap(), brute_force(&x), "{x}");
            }
        }
    }

    #[test]
    fn discrete_digraph_sums_every_permutation() {
        let mut count = 0;
        for_each_signed_permutation(&Digraph::discrete(5), |s| {
            assert_eq!(s.phi, 0);
            count += 1;
        })
        .unwrap();
        assert_eq!(count, 120);
    }

    #[test]
    fn tournament_examples() {
        assert_eq!(w_tournament(&Digraph::path(2)).unwrap(), p(&[("1/2", 1)]));
        assert_eq!(
            w_tournament(&Digraph::cycle(3)).unwrap(),
            p(&[("1/2/3", 1), ("123", 2)])
        );
        let transitive = Digraph::from_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(w_tournament(&transitive).unwrap(), p(&[("1/2/3", 1)]));
        assert!(matches!(
            w_tournament(&Digraph::discrete(2)),
            Err(Error::NotATournament)
        ));
    }

    #[test]
    fn coefficient_formula_examples() {
        let k2 = Digraph::complete(2);
        assert_eq!(
            m_coefficient_formula(&k2, &sp("12")).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            m_coefficient_formula(&k2, &sp("1/2")).unwrap(),
            BigInt::from(1)
        );
        let d2 = Digraph::discrete(2);
        let e = w_by_permutations(&d2).unwrap().to_basis(Basis::E);
        // m_{1/2} + 2 m_{12} = 2 e_{1/2} - e_{12}
        assert_eq!(
            e,
            NcSym::from_int_terms(2, Basis::E, [(sp("1/2"), 2), (sp("12"), -1)]).unwrap()
        );
        assert_eq!(
            e_coefficient_formula(&d2, &sp("1/2")).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            e_coefficient_formula(&d2, &sp("12")).unwrap(),
            BigRational::from_integer((-1).into())
        );
        assert!(m_coefficient_formula(&d2, &sp("123")).is_err());
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            w_by_permutations(&Digraph::discrete(9)),
            Err(Error::SizeLimit { .. })
        ));
    }
}

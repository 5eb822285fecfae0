//! Exact checks of the identities satisfied by `W_X` on a single instance.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ncsym::{Basis, NcSym};
use crate::setpart::{partitions_of, SetPartition};

use super::definition::{count_friendly, w_by_definition, Coloring};
use super::deletion_contraction::{
    edge_to_end, w_by_deletion_contraction, MAX_DELETION_CONTRACTION,
};
use super::descents::u_by_descents;
use super::permutations::{
    e_coefficient_formula, m_coefficient_formula, w_by_permutations, w_tournament, MAX_PERMUTATIONS,
};

/// Largest edge set summed over by the subset decomposition.
pub const MAX_SUBSET_EDGES: usize = 12;
/// Largest instance for the counting lemma, which runs over all `n^n` colorings.
pub const MAX_COUNTING_LEMMA: usize = 5;
/// Largest instance for the definition oracle inside the cross-algorithm check.
pub const MAX_CROSS_DEFINITION: usize = 6;
/// Largest instance for the per-partition coefficient formulas.
pub const MAX_COEFFICIENT_FORMULAS: usize = 6;

const COUNTING_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Opposite,
    TournamentComplement,
    Product,
    DeletionContraction,
    SubsetDecomposition,
    CycleDecomposition,
    Triangle,
    CountingLemma,
    CrossAlgorithm,
    CommutativeConsistency,
    Integrality,
    PNonnegativity,
    TournamentFormula,
    BergeParity,
    RedeiParity,
    CoefficientFormulas,
}

impl Check {
    pub const ALL: [Check; 16] = [
        Check::Opposite,
        Check::TournamentComplement,
        Check::Product,
        Check::DeletionContraction,
        Check::SubsetDecomposition,
        Check::CycleDecomposition,
        Check::Triangle,
        Check::CountingLemma,
        Check::CrossAlgorithm,
        Check::CommutativeConsistency,
        Check::Integrality,
        Check::PNonnegativity,
        Check::TournamentFormula,
        Check::BergeParity,
        Check::RedeiParity,
        Check::CoefficientFormulas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Opposite => "opposite",
            Check::TournamentComplement => "tournament-complement",
            Check::Product => "product",
            Check::DeletionContraction => "deletion-contraction",
            Check::SubsetDecomposition => "subset-decomposition",
            Check::CycleDecomposition => "cycle-decomposition",
            Check::Triangle => "triangle",
            Check::CountingLemma => "counting-lemma",
            Check::CrossAlgorithm => "cross-algorithm",
            Check::CommutativeConsistency => "commutative-consistency",
            Check::Integrality => "integrality",
            Check::PNonnegativity => "p-nonnegativity",
            Check::TournamentFormula => "tournament-formula",
            Check::BergeParity => "berge-parity",
            Check::RedeiParity => "redei-parity",
            Check::CoefficientFormulas => "coefficient-formulas",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("unknown check '{s}'"),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail { .. } => "fail",
            Outcome::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: Check,
    pub instance: String,
    pub outcome: Outcome,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<24} {}", self.check.name(), self.outcome.status())?;
        match &self.outcome {
            Outcome::Pass => Ok(()),
            Outcome::Fail { witness } => write!(f, "  {witness}"),
            Outcome::Skipped { reason } => write!(f, "  ({reason})"),
        }
    }
}

pub fn check_identities(x: &Digraph, checks: &[Check]) -> Vec<VerificationReport> {
    check_identities_with_partner(x, None, checks)
}

/// Runs `checks` on `x`. The product check pairs `x` with `partner`, or with
/// itself when no partner is given and the product stays within range.
pub fn check_identities_with_partner(
    x: &Digraph,
    partner: Option<&Digraph>,
    checks: &[Check],
) -> Vec<VerificationReport> {
    checks
        .iter()
        .map(|&check| {
            let outcome = match run_check(x, partner, check) {
                Ok(o) => o,
                Err(e @ Error::SizeLimit { .. }) => skipped(e.to_string()),
                Err(e) => Outcome::Fail {
                    witness: e.to_string(),
                },
            };
            VerificationReport {
                check,
                instance: x.to_string(),
                outcome,
            }
        })
        .collect()
}

fn skipped(reason: impl Into<String>) -> Outcome {
    Outcome::Skipped {
        reason: reason.into(),
    }
}

fn hypothesis_unmet(what: &str) -> Outcome {
    skipped(format!("hypothesis unmet: {what}"))
}

fn w(x: &Digraph) -> Result<NcSym> {
    w_by_permutations(x)
}

fn compare(left: &NcSym, right: &NcSym) -> Outcome {
    let (a, b) = (left.to_basis(Basis::P), right.to_basis(Basis::P));
    if a == b {
        Outcome::Pass
    } else {
        Outcome::Fail {
            witness: format!("left: {a}; right: {b}"),
        }
    }
}

/// `Σ_{S ⊆ F, S ≠ ∅} (−1)^{|S|−1} W_{X∖S}`.
pub fn inclusion_exclusion(x: &Digraph, edges: &[(usize, usize)]) -> Result<NcSym> {
    let mut total = NcSym::zero(x.n(), Basis::P);
    for mask in 1u64..(1 << edges.len()) {
        let subset: Vec<_> = (0..edges.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| edges[i])
            .collect();
        let term = w(&x.delete_edges(&subset)?)?;
        total = if subset.len() % 2 == 1 {
            total.add(&term)?
        } else {
            total.sub(&term)?
        };
    }
    Ok(total)
}

fn run_check(x: &Digraph, partner: Option<&Digraph>, check: Check) -> Result<Outcome> {
    let n = x.n();
    match check {
        Check::Opposite => Ok(compare(&w(x)?, &w(&x.opposite())?)),
        Check::TournamentComplement => {
            if !x.is_tournament() {
                return Ok(hypothesis_unmet("not a tournament"));
            }
            Ok(compare(&w(x)?, &w(&x.complement())?))
        }
        Check::Product => {
            let y = match partner {
                Some(y) => y,
                None if 2 * n <= MAX_PERMUTATIONS => x,
                None => return Ok(skipped("no partner within the size limit")),
            };
            let joined = w(&x.product(y)?)?;
            Ok(compare(&joined, &w(x)?.multiply(&w(y)?)))
        }
        Check::DeletionContraction => {
            let edges = x.non_loop_edges();
            if edges.is_empty() {
                return Ok(hypothesis_unmet("no non-loop edge"));
            }
            let whole = w(x)?;
            for (u, v) in edges {
                let delta = edge_to_end(n, u, v)?;
                let y = x.relabel(&delta)?;
                let deleted = w(&y.delete_edges(&[(n - 1, n)])?)?;
                let contracted = w(&y.contract_last_edge()?)?.induct()?;
                let rhs = deleted.sub(&contracted)?.act(&delta.inverse())?;
                if let Outcome::Fail { witness } = compare(&whole, &rhs) {
                    return Ok(Outcome::Fail {
                        witness: format!("edge ({u},{v}): {witness}"),
                    });
                }
            }
            Ok(Outcome::Pass)
        }
        Check::SubsetDecomposition => {
            if x.is_disjoint_union_of_paths() {
                return Ok(hypothesis_unmet("disjoint union of paths"));
            }
            let edges = x.edges();
            if edges.len() > MAX_SUBSET_EDGES {
                return Ok(skipped(format!(
                    "{} edges exceeds limit {MAX_SUBSET_EDGES}",
                    edges.len()
                )));
            }
            Ok(compare(&w(x)?, &inclusion_exclusion(x, &edges)?))
        }
        Check::CycleDecomposition => match x.find_directed_cycle(false) {
            None => Ok(hypothesis_unmet("no directed cycle")),
            Some(cycle) => Ok(compare(&w(x)?, &inclusion_exclusion(x, &cycle)?)),
        },
        Check::Triangle => {
            let Some(t) = x.simple_cycles().into_iter().find(|c| c.len() == 3) else {
                return Ok(hypothesis_unmet("no directed triangle"));
            };
            let (a, b, c) = ((t[0], t[1]), (t[1], t[2]), (t[2], t[0]));
            let del = |s: &[(usize, usize)]| -> Result<NcSym> { w(&x.delete_edges(s)?) };
            let rhs = del(&[a])?
                .add(&del(&[b])?)?
                .add(&del(&[c])?)?
                .sub(&del(&[a, b])?)?
                .sub(&del(&[a, c])?)?
                .sub(&del(&[b, c])?)?
                .add(&del(&[a, b, c])?)?;
            Ok(compare(&w(x)?, &rhs))
        }
        Check::CountingLemma => counting_lemma(x),
        Check::CrossAlgorithm => {
            let reference = w(x)?.to_basis(Basis::M);
            let mut others = Vec::new();
            if n <= MAX_CROSS_DEFINITION {
                others.push(("definition", w_by_definition(x)?));
            }
            if n <= MAX_DELETION_CONTRACTION {
                others.push(("deletion-contraction", w_by_deletion_contraction(x)?));
            }
            if others.is_empty() {
                return Ok(skipped("no second algorithm within its size limit"));
            }
            for (name, other) in others {
                if other != reference {
                    return Ok(Outcome::Fail {
                        witness: format!("permutations: {reference}; {name}: {other}"),
                    });
                }
            }
            Ok(Outcome::Pass)
        }
        Check::CommutativeConsistency => {
            let image = w(x)?.to_basis(Basis::M).commutative_image();
            let u = u_by_descents(x)?;
            if image == u {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::Fail {
                    witness: format!("image: {image}; descents: {u}"),
                })
            }
        }
        Check::Integrality => {
            let p = w(x)?;
            for e in [p.to_basis(Basis::M), p] {
                if let Some((pi, c)) = e.terms().iter().find(|(_, c)| !c.is_integer()) {
                    return Ok(Outcome::Fail {
                        witness: format!("{}[{pi}] has coefficient {c}", e.basis()),
                    });
                }
            }
            Ok(Outcome::Pass)
        }
        Check::PNonnegativity => {
            if x.has_even_cycle() {
                return Ok(hypothesis_unmet("has an even cycle"));
            }
            let p = w(x)?;
            if let Some((pi, c)) = p.terms().iter().find(|(_, c)| c.is_negative()) {
                return Ok(Outcome::Fail {
                    witness: format!("p[{pi}] has coefficient {c}"),
                });
            }
            let bottom = p.coefficient(&SetPartition::singletons(n));
            if bottom < One::one() {
                return Ok(Outcome::Fail {
                    witness: format!("all-singletons coefficient is {bottom}"),
                });
            }
            Ok(Outcome::Pass)
        }
        Check::TournamentFormula => {
            if !x.is_tournament() {
                return Ok(hypothesis_unmet("not a tournament"));
            }
            Ok(compare(&w_tournament(x)?, &w(x)?))
        }
        Check::BergeParity => {
            let a = x.hamiltonian_path_count()?;
            let b = x.complement().without_loops().hamiltonian_path_count()?;
            if a % 2 == b % 2 {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::Fail {
                    witness: format!("X has {a} Hamiltonian paths, its complement {b}"),
                })
            }
        }
        Check::RedeiParity => {
            if !x.is_tournament() {
                return Ok(hypothesis_unmet("not a tournament"));
            }
            let h = x.hamiltonian_path_count()?;
            if h % 2 == 1 {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::Fail {
                    witness: format!("{h} Hamiltonian paths"),
                })
            }
        }
        Check::CoefficientFormulas => {
            if n > MAX_COEFFICIENT_FORMULAS {
                return Err(Error::SizeLimit {
                    what: "coefficient formulas",
                    size: n,
                    limit: MAX_COEFFICIENT_FORMULAS,
                });
            }
            let p = w(x)?;
            let (m, e) = (p.to_basis(Basis::M), p.to_basis(Basis::E));
            for pi in partitions_of(n) {
                let mc = m_coefficient_formula(x, &pi)?;
                if m.coefficient(&pi) != mc.clone().into() {
                    return Ok(Outcome::Fail {
                        witness: format!(
                            "m[{pi}]: formula {mc}, conversion {}",
                            m.coefficient(&pi)
                        ),
                    });
                }
                let ec = e_coefficient_formula(x, &pi)?;
                if e.coefficient(&pi) != ec {
                    return Ok(Outcome::Fail {
                        witness: format!(
                            "e[{pi}]: formula {ec}, conversion {}",
                            e.coefficient(&pi)
                        ),
                    });
                }
            }
            Ok(Outcome::Pass)
        }
    }
}

/// Edge sets `F` the counting lemma is tested on: all of `E` when affordable,
/// and one directed cycle (loops included).
fn counting_lemma_edge_sets(x: &Digraph) -> Vec<Vec<(usize, usize)>> {
    let n = x.n() as u64;
    let colorings = n.pow(n as u32);
    let mut sets = Vec::new();
    let edges = x.edges();
    if !x.is_disjoint_union_of_paths() && colorings << edges.len().min(40) <= COUNTING_BUDGET {
        sets.push(edges);
    }
    if let Some(cycle) = x.find_directed_cycle(true) {
        if !sets.contains(&cycle) {
            sets.push(cycle);
        }
    }
    sets
}

/// `#Σ(f, X) = Σ_{S ⊆ F, S ≠ ∅} (−1)^{|S|−1} #Σ(f, X∖S)` for every coloring
/// with values in `1..=n`.
pub fn counting_lemma_holds(x: &Digraph, edges: &[(usize, usize)]) -> Result<Option<Coloring>> {
    let n = x.n();
    let mut deleted = Vec::new();
    for mask in 1u64..(1 << edges.len()) {
        let subset: Vec<_> = (0..edges.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| edges[i])
            .collect();
        deleted.push((subset.len() % 2 == 1, x.delete_edges(&subset)?));
    }
    for f in Coloring::all(n, n) {
        let lhs = count_friendly(x, &f)? as i64;
        let mut rhs = 0i64;
        for (odd, y) in &deleted {
            let c = count_friendly(y, &f)? as i64;
            rhs += if *odd { c } else { -c };
        }
        if lhs != rhs {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn counting_lemma(x: &Digraph) -> Result<Outcome> {
    let n = x.n();
    if n > MAX_COUNTING_LEMMA {
        return Err(Error::SizeLimit {
            what: "counting lemma",
            size: n,
            limit: MAX_COUNTING_LEMMA,
        });
    }
    let sets = counting_lemma_edge_sets(x);
    if sets.is_empty() {
        return Ok(hypothesis_unmet(
            "every edge set is a disjoint union of paths",
        ));
    }
    for f_edges in sets {
        if let Some(f) = counting_lemma_holds(x, &f_edges)? {
            return Ok(Outcome::Fail {
                witness: format!("F = {f_edges:?}, coloring {:?}", f.colors()),
            });
        }
    }
    Ok(Outcome::Pass)
}

//! Symmetric functions in noncommuting variables, and their commutative images.
//!
//! Elements are homogeneous and stored in one of the three set-partition
//! indexed bases (monomial `m`, power sum `p`, elementary `e`). Every basis
//! change goes through `p`:
//!
//! * `p_π = Σ_{σ ≥ π} m_σ` and, inverted, `m_π = Σ_{σ ≥ π} μ(π, σ) p_σ`;
//! * `e_π = Σ_{σ ≤ π} μ(0̂, σ) p_σ` and, inverted,
//!   `p_π = μ(0̂, π)⁻¹ Σ_{σ ≤ π} μ(σ, π) e_σ`.
//!
//! Products use `p_π · p_ρ = p_{π ⊔ ρ⁺}` where `ρ⁺` is `ρ` shifted past `π`'s ground set.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::setpart::{mobius, IntPartition, SetPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    P,
    E,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::M, Basis::P, Basis::E];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::P => 'p',
            Basis::E => 'e',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown basis {other:?}"),
            }),
        }
    }
}

/// A homogeneous element of NCSym with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SerializedElement", into = "SerializedElement")]
pub struct NcSym {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<SetPartition, BigRational>,
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, BigRational>, key: K, coeff: BigRational) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn int(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

impl NcSym {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        NcSym {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: degree 0, coefficient 1 on the empty partition.
    pub fn one() -> Self {
        Self::basis_element(Basis::P, SetPartition::singletons(0))
    }

    pub fn basis_element(basis: Basis, pi: SetPartition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = pi.n();
        terms.insert(pi, BigRational::one());
        NcSym {
            degree,
            basis,
            terms,
        }
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SetPartition, BigRational)>,
    {
        let mut out = Self::zero(degree, basis);
        for (pi, c) in terms {
            if pi.n() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: pi.n(),
                });
            }
            accumulate(&mut out.terms, pi, c);
        }
        Ok(out)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SetPartition, i64)>,
    {
        Self::from_terms(
            degree,
            basis,
            terms
                .into_iter()
                .map(|(pi, c)| (pi, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, pi: &SetPartition) -> BigRational {
        self.terms
            .get(pi)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn to_basis(&self, target: Basis) -> NcSym {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_p();
        match target {
            Basis::P => p,
            Basis::M => p.p_to_m(),
            Basis::E => p.p_to_e(),
        }
    }

    fn to_p(&self) -> NcSym {
        let mut out = Self::zero(self.degree, Basis::P);
        match self.basis {
            Basis::P => return self.clone(),
            Basis::M => {
                for (pi, c) in &self.terms {
                    for (sigma, mu) in pi.coarsenings_with_mobius() {
                        accumulate(&mut out.terms, sigma, c * int(mu));
                    }
                }
            }
            Basis::E => {
                let bottom = SetPartition::singletons(self.degree);
                for (pi, c) in &self.terms {
                    for (sigma, _) in pi.refinements_with_mobius() {
                        let mu = mobius(&bottom, &sigma).expect("0̂ refines everything");
                        accumulate(&mut out.terms, sigma, c * int(mu));
                    }
                }
            }
        }
        out
    }

    fn p_to_m(&self) -> NcSym {
        let mut out = Self::zero(self.degree, Basis::M);
        for (pi, c) in &self.terms {
            for (sigma, _) in pi.coarsenings_with_mobius() {
                accumulate(&mut out.terms, sigma, c.clone());
            }
        }
        out
    }

    fn p_to_e(&self) -> NcSym {
        let mut out = Self::zero(self.degree, Basis::E);
        let bottom = SetPartition::singletons(self.degree);
        for (pi, c) in &self.terms {
            let scale = c / int(mobius(&bottom, pi).expect("0̂ refines everything"));
            for (sigma, mu) in pi.refinements_with_mobius() {
                accumulate(&mut out.terms, sigma, &scale * int(mu));
            }
        }
        out
    }

    /// Sum in `self`'s basis.
    pub fn add(&self, other: &NcSym) -> Result<NcSym> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (pi, c) in other.to_basis(self.basis).terms {
            accumulate(&mut out.terms, pi, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcSym) -> Result<NcSym> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> NcSym {
        let mut out = Self::zero(self.degree, self.basis);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(pi, x)| (pi.clone(), x * c))
            .collect();
        out
    }

    fn check_degree(&self, other: &NcSym) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    /// Product of degree `deg(self) + deg(other)`, returned in the `p` basis.
    pub fn multiply(&self, other: &NcSym) -> NcSym {
        let left = self.to_basis(Basis::P);
        let right = other.to_basis(Basis::P);
        let mut out = Self::zero(self.degree + other.degree, Basis::P);
        for (pi, a) in &left.terms {
            for (rho, b) in &right.terms {
                accumulate(&mut out.terms, pi.shift_union(rho), a * b);
            }
        }
        out
    }

    /// `x↑`: the last variable of every monomial doubled. `e`-basis input is
    /// rewritten in `p` first, since `e_π↑` is not a single `e` term.
    pub fn induct(&self) -> Result<NcSym> {
        if self.degree == 0 {
            return Err(Error::InductOnDegreeZero);
        }
        let source = if self.basis == Basis::E {
            self.to_basis(Basis::P)
        } else {
            self.clone()
        };
        let mut out = Self::zero(self.degree + 1, source.basis);
        for (pi, c) in source.terms {
            out.terms.insert(pi.insert_last()?, c);
        }
        Ok(out)
    }

    /// `δ∘x`: permutes the positions of the variables.
    pub fn act(&self, delta: &Perm) -> Result<NcSym> {
        if delta.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: delta.degree(),
                right: self.degree,
            });
        }
        let mut out = Self::zero(self.degree, self.basis);
        for (pi, c) in &self.terms {
            out.terms.insert(pi.apply_perm(delta)?, c.clone());
        }
        Ok(out)
    }

    /// Lets the variables commute: `m_π ↦ |π| m_λ(π)`, `p_π ↦ p_λ(π)`, `e_π ↦ π! e_λ(π)`.
    pub fn commutative_image(&self) -> CSym {
        let mut out = CSym::zero(self.degree, self.basis);
        for (pi, c) in &self.terms {
            let weight = match self.basis {
                Basis::M => pi.multiplicity_weight(),
                Basis::P => BigInt::one(),
                Basis::E => pi.factorial_weight(),
            };
            accumulate(&mut out.terms, pi.lambda(), c * int(weight));
        }
        out
    }

    /// Coefficients of every monomial `x_{w₁}⋯x_{w_n}` with letters in `1..=k`,
    /// read straight off the defining sums. Zero coefficients are omitted.
    pub fn expand_truncated(&self, k: usize) -> BTreeMap<Vec<usize>, BigRational> {
        let n = self.degree;
        let mut out = BTreeMap::new();
        let mut word = vec![1usize; n];
        loop {
            let mut total = BigRational::zero();
            for (pi, c) in &self.terms {
                if word_matches(self.basis, pi, &word) {
                    total += c;
                }
            }
            if !total.is_zero() {
                out.insert(word.clone(), total);
            }
            // odometer over [k]^n
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if word[i] < k {
                    word[i] += 1;
                    break;
                }
                word[i] = 1;
            }
        }
    }
}

fn word_matches(basis: Basis, pi: &SetPartition, word: &[usize]) -> bool {
    let n = word.len();
    for j in 0..n {
        for l in j + 1..n {
            let same_block = pi.labels()[j] == pi.labels()[l];
            let equal = word[j] == word[l];
            let ok = match basis {
                Basis::M => same_block == equal,
                Basis::P => !same_block || equal,
                Basis::E => !same_block || !equal,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn format_terms<K: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    letter: char,
    open: &str,
    close: &str,
    terms: &BTreeMap<K, BigRational>,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (key, c)) in terms.iter().enumerate() {
        let negative = c < &BigRational::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude}*")?;
        }
        write!(f, "{letter}{open}{key}{close}")?;
    }
    Ok(())
}

impl fmt::Display for NcSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.basis.letter(), "[", "]", &self.terms)
    }
}

/// Parses `"3"`, `"-1/2"` or a finite decimal such as `"0.25"`.
pub fn parse_coefficient(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidCoefficient(s.to_string());
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = if whole < BigInt::zero() {
            -whole
        } else {
            whole
        } * &scale
            + frac;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(BigRational::new(num, scale));
    }
    Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedTerm {
    pub blocks: String,
    pub coeff: String,
}

/// Wire form of an [`NcSym`]: terms in canonical key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedElement {
    pub degree: usize,
    pub basis: Basis,
    pub terms: Vec<SerializedTerm>,
}

impl From<NcSym> for SerializedElement {
    fn from(x: NcSym) -> Self {
        SerializedElement {
            degree: x.degree,
            basis: x.basis,
            terms: x
                .terms
                .iter()
                .map(|(pi, c)| SerializedTerm {
                    blocks: pi.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SerializedElement> for NcSym {
    type Error = Error;

    fn try_from(s: SerializedElement) -> Result<Self> {
        let terms = s
            .terms
            .iter()
            .map(|t| {
                Ok((
                    t.blocks.parse::<SetPartition>()?,
                    parse_coefficient(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        NcSym::from_terms(s.degree, s.basis, terms)
    }
}

/// A homogeneous commutative symmetric function indexed by integer partitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SerializedCsym", into = "SerializedCsym")]
pub struct CSym {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<IntPartition, BigRational>,
}

impl CSym {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        CSym {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IntPartition, BigRational)>,
    {
        let mut out = Self::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: lambda.size(),
                });
            }
            accumulate(&mut out.terms, lambda, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<IntPartition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &IntPartition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rewrites in `target`. Each `b_λ` is lifted to `b_π / w(π)` for the
    /// standard set partition `π` of type `λ`, converted in NCSym, and projected back.
    pub fn to_basis(&self, target: Basis) -> CSym {
        if self.basis == target {
            return self.clone();
        }
        let mut out = CSym::zero(self.degree, target);
        for (lambda, c) in &self.terms {
            let pi = lambda.standard_set_partition();
            let weight = match self.basis {
                Basis::M => pi.multiplicity_weight(),
                Basis::P => BigInt::one(),
                Basis::E => pi.factorial_weight(),
            };
            let lifted = NcSym::basis_element(self.basis, pi).scale(&(c / int(weight)));
            for (mu, d) in lifted.to_basis(target).commutative_image().terms {
                accumulate(&mut out.terms, mu, d);
            }
        }
        out
    }

    pub fn add(&self, other: &CSym) -> Result<CSym> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (lambda, c) in other.to_basis(self.basis).terms {
            accumulate(&mut out.terms, lambda, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> CSym {
        let mut out = Self::zero(self.degree, self.basis);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect();
        }
        out
    }

    /// Product in the `p` basis: `p_λ p_μ = p_{λ ∪ μ}`.
    pub fn multiply(&self, other: &CSym) -> CSym {
        let left = self.to_basis(Basis::P);
        let right = other.to_basis(Basis::P);
        let mut out = CSym::zero(self.degree + other.degree, Basis::P);
        for (a, x) in &left.terms {
            for (b, y) in &right.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                accumulate(&mut out.terms, IntPartition::new(parts), x * y);
            }
        }
        out
    }
}

impl fmt::Display for CSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.basis.letter(), "", "", &self.terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedCsymTerm {
    pub parts: IntPartition,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedCsym {
    pub degree: usize,
    pub basis: Basis,
    pub terms: Vec<SerializedCsymTerm>,
}

impl From<CSym> for SerializedCsym {
    fn from(x: CSym) -> Self {
        SerializedCsym {
            degree: x.degree,
            basis: x.basis,
            terms: x
                .terms
                .iter()
                .map(|(l, c)| SerializedCsymTerm {
                    parts: l.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SerializedCsym> for CSym {
    type Error = Error;

    fn try_from(s: SerializedCsym) -> Result<Self> {
        let terms = s
            .terms
            .iter()
            .map(|t| Ok((t.parts.clone(), parse_coefficient(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        CSym::from_terms(s.degree, s.basis, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::enumerate_partitions;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn el(basis: Basis, terms: &[(&str, i64)]) -> NcSym {
        let degree = sp(terms[0].0).n();
        NcSym::from_int_terms(degree, basis, terms.iter().map(|(s, c)| (sp(s), *c))).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn word_map(entries: &[(&[usize], i64)]) -> BTreeMap<Vec<usize>, BigRational> {
        entries.iter().map(|(w, c)| (w.to_vec(), q(*c))).collect()
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(
            el(Basis::P, &[("1/2", 1)]).to_basis(Basis::M),
            el(Basis::M, &[("1/2", 1), ("12", 1)])
        );
        assert_eq!(
            el(Basis::E, &[("12", 1)]).to_basis(Basis::P),
            el(Basis::P, &[("1/2", 1), ("12", -1)])
        );
        let m1 = el(Basis::M, &[("1", 1)]);
        assert_eq!(m1.to_basis(Basis::P), el(Basis::P, &[("1", 1)]));
        assert_eq!(m1.to_basis(Basis::E), el(Basis::E, &[("1", 1)]));
    }

    #[test]
    fn p_in_e_needs_rationals() {
        // words with i1 = i2 are all words minus the unequal ones
        let p12 = el(Basis::P, &[("12", 1)]).to_basis(Basis::E);
        assert_eq!(p12, el(Basis::E, &[("1/2", 1), ("12", -1)]));
        let p123 = el(Basis::P, &[("123", 1)]).to_basis(Basis::E);
        assert!(!p123.is_integral());
        assert_eq!(
            p123.coefficient(&sp("123")),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn add_and_scale() {
        let p12 = el(Basis::P, &[("12", 1)]);
        assert!(p12.add(&p12.scale(&q(-1))).unwrap().is_zero());
        assert_eq!(
            el(Basis::M, &[("1/2", 1)]).scale(&q(2)),
            el(Basis::M, &[("1/2", 2)])
        );
        assert_eq!(
            el(Basis::M, &[("12", 1)]).add(&p12).unwrap(),
            el(Basis::M, &[("12", 2)])
        );
        assert!(matches!(
            p12.add(&el(Basis::P, &[("1", 1)])),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(p12.scale(&q(0)).is_zero());
    }

    #[test]
    fn multiply_examples() {
        let p1 = el(Basis::P, &[("1", 1)]);
        assert_eq!(p1.multiply(&p1), el(Basis::P, &[("1/2", 1)]));
        assert_eq!(
            el(Basis::P, &[("12", 1)]).multiply(&p1),
            el(Basis::P, &[("12/3", 1)])
        );
        let x = el(Basis::M, &[("12/3", 2), ("1/2/3", -1)]);
        assert_eq!(x.multiply(&NcSym::one()).to_basis(Basis::M), x);
        assert_eq!(NcSym::one().multiply(&x).to_basis(Basis::M), x);
    }

    /// Word-concatenation convolution of two truncated expansions.
    fn convolve(
        a: &BTreeMap<Vec<usize>, BigRational>,
        b: &BTreeMap<Vec<usize>, BigRational>,
    ) -> BTreeMap<Vec<usize>, BigRational> {
        let mut out = BTreeMap::new();
        for (u, x) in a {
            for (v, y) in b {
                let mut w = u.clone();
                w.extend_from_slice(v);
                accumulate(&mut out, w, x * y);
            }
        }
        out
    }

    #[test]
    fn shift_union_rule_matches_word_oracle() {
        for d1 in 0..=3 {
            for d2 in 0..=3 {
                let left: Vec<_> = crate::setpart::partitions_of(d1);
                let right: Vec<_> = crate::setpart::partitions_of(d2);
                for pi in &left {
                    for rho in &right {
                        let a = NcSym::basis_element(Basis::P, pi.clone());
                        let b = NcSym::basis_element(Basis::P, rho.clone());
                        let k = 3;
                        assert_eq!(
                            a.multiply(&b).expand_truncated(k),
                            convolve(&a.expand_truncated(k), &b.expand_truncated(k)),
                            "{pi} * {rho}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn induct_examples() {
        assert_eq!(
            el(Basis::M, &[("1", 1)]).induct().unwrap(),
            el(Basis::M, &[("12", 1)])
        );
        assert_eq!(
            el(Basis::P, &[("1/2", 1)]).induct().unwrap(),
            el(Basis::P, &[("1/23", 1)])
        );
        assert_eq!(
            el(Basis::M, &[("12", 1), ("1/2", 2)]).induct().unwrap(),
            el(Basis::M, &[("123", 1), ("1/23", 2)])
        );
        assert!(matches!(
            NcSym::one().induct(),
            Err(Error::InductOnDegreeZero)
        ));
    }

    #[test]
    fn induct_doubles_the_last_letter() {
        for n in 1..=3 {
            for pi in enumerate_partitions(n).unwrap() {
                for basis in Basis::ALL {
                    let x = NcSym::basis_element(basis, pi.clone());
                    let k = 3;
                    let expected: BTreeMap<_, _> = x
                        .expand_truncated(k)
                        .into_iter()
                        .map(|(mut w, c)| {
                            w.push(*w.last().unwrap());
                            (w, c)
                        })
                        .collect();
                    assert_eq!(
                        x.induct().unwrap().expand_truncated(k),
                        expected,
                        "{basis}{pi}"
                    );
                }
            }
        }
    }

    #[test]
    fn act_examples() {
        let x = el(Basis::M, &[("12/3", 2), ("1/2/3", -1)]);
        assert_eq!(x.act(&Perm::identity(3)).unwrap(), x);
        let swap = Perm::new(vec![2, 1]).unwrap();
        let m = el(Basis::M, &[("1/2", 1)]);
        assert_eq!(m.act(&swap).unwrap(), m);
        let rot = Perm::new(vec![2, 3, 1]).unwrap();
        assert_eq!(
            el(Basis::P, &[("13/2", 1)]).act(&rot).unwrap(),
            el(Basis::P, &[("12/3", 1)])
        );
        assert!(matches!(m.act(&rot), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn commutative_image_examples() {
        let image = el(Basis::P, &[("13/2", 1)]).commutative_image();
        assert_eq!(image.coefficient(&IntPartition::new(vec![2, 1])), q(1));
        let image = el(Basis::M, &[("1/2", 1)]).commutative_image();
        assert_eq!(image.coefficient(&IntPartition::new(vec![1, 1])), q(2));
        let image = el(Basis::E, &[("123", 1)]).commutative_image();
        assert_eq!(image.basis(), Basis::E);
        assert_eq!(image.coefficient(&IntPartition::new(vec![3])), q(6));
    }

    #[test]
    fn truncated_expansion_examples() {
        assert_eq!(
            el(Basis::M, &[("12", 1)]).expand_truncated(2),
            word_map(&[(&[1, 1], 1), (&[2, 2], 1)])
        );
        assert_eq!(
            el(Basis::P, &[("1/2", 1)]).expand_truncated(2),
            word_map(&[(&[1, 1], 1), (&[1, 2], 1), (&[2, 1], 1), (&[2, 2], 1)])
        );
        assert_eq!(
            el(Basis::E, &[("12", 1)]).expand_truncated(2),
            word_map(&[(&[1, 2], 1), (&[2, 1], 1)])
        );
    }

    #[test]
    fn csym_conversions_agree_with_classical_identities() {
        // p_1^2 = m_2 + 2 m_11, e_2 = m_11, p_2 = m_2
        let l = |v: Vec<usize>| IntPartition::new(v);
        let p11 = CSym::from_terms(2, Basis::P, [(l(vec![1, 1]), q(1))]).unwrap();
        let m = p11.to_basis(Basis::M);
        assert_eq!(m.coefficient(&l(vec![2])), q(1));
        assert_eq!(m.coefficient(&l(vec![1, 1])), q(2));
        let e2 = CSym::from_terms(2, Basis::E, [(l(vec![2]), q(1))]).unwrap();
        assert_eq!(
            e2.to_basis(Basis::M),
            CSym::from_terms(2, Basis::M, [(l(vec![1, 1]), q(1))]).unwrap()
        );
        // e_2 = (p_1^2 - p_2) / 2
        let e2p = e2.to_basis(Basis::P);
        assert_eq!(
            e2p.coefficient(&l(vec![1, 1])),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            e2p.coefficient(&l(vec![2])),
            BigRational::new((-1).into(), 2.into())
        );
        // h_3 = m_3 + m_21 + m_111 and e_3 = m_111 through e -> m
        let e3 = CSym::from_terms(3, Basis::E, [(l(vec![3]), q(1))]).unwrap();
        assert_eq!(
            e3.to_basis(Basis::M),
            CSym::from_terms(3, Basis::M, [(l(vec![1, 1, 1]), q(1))]).unwrap()
        );
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!(parse_coefficient("3").unwrap(), q(3));
        assert_eq!(
            parse_coefficient("-1/2").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_coefficient("-0.25").unwrap(),
            BigRational::new((-1).into(), 4.into())
        );
        assert_eq!(
            parse_coefficient("1.5").unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert!(parse_coefficient("1/0").is_err());
        assert!(parse_coefficient("x").is_err());
        assert!(parse_coefficient("1.").is_err());
    }

    #[test]
    fn serialized_form_is_stable() {
        let x = NcSym::from_terms(
            3,
            Basis::E,
            [
                (sp("13/2"), BigRational::new((-3).into(), 4.into())),
                (sp("123"), q(2)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"degree":3,"basis":"e","terms":[{"blocks":"123","coeff":"2"},{"blocks":"13/2","coeff":"-3/4"}]}"#
        );
        assert_eq!(serde_json::from_str::<NcSym>(&json).unwrap(), x);
        let bad = r#"{"degree":2,"basis":"e","terms":[{"blocks":"123","coeff":"2"}]}"#;
        assert!(serde_json::from_str::<NcSym>(bad).is_err());
    }

    #[test]
    fn display() {
        let x = el(Basis::M, &[("12", -2), ("1/2", 1)]);
        assert_eq!(x.to_string(), "-2*m[12] + m[1/2]");
        assert_eq!(NcSym::zero(2, Basis::P).to_string(), "0");
    }
}

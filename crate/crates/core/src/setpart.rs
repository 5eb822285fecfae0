//! The lattice of set partitions of `{1..n}` under refinement.
//!
//! A [`SetPartition`] is stored as its restricted growth string: position `i`
//! holds the index of the block containing `i + 1`, blocks numbered in order of
//! their least element. That encoding is unique per partition, so derived
//! equality, hashing and ordering all act on the canonical form. The derived
//! order (lexicographic on the growth string) is also the enumeration order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest ground set [`enumerate_partitions`] accepts (Bell(12) = 4213597).
pub const MAX_ENUMERATION: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u8>,
}

/// An integer partition, parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition(Vec<usize>);

impl IntPartition {
    /// Sorts the parts; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The set partition `1..λ₁ / λ₁+1..λ₁+λ₂ / …` of type `self`.
    pub fn standard_set_partition(&self) -> SetPartition {
        let mut labels = Vec::with_capacity(self.size());
        for (b, &part) in self.0.iter().enumerate() {
            labels.extend(std::iter::repeat_n(b as u8, part));
        }
        SetPartition { labels }
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<IntPartition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if remaining == 0 {
                out.push(IntPartition(prefix.clone()));
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for IntPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Ok(IntPartition::new(parts))
    }
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

impl SetPartition {
    /// Canonicalizes an arbitrary block assignment: elements `i` and `j`
    /// (1-based `i + 1`, `j + 1`) share a block iff `assignment[i] == assignment[j]`.
    pub fn from_assignment<T: PartialEq>(assignment: &[T]) -> Self {
        let mut firsts: Vec<&T> = Vec::new();
        let labels = assignment
            .iter()
            .map(|a| match firsts.iter().position(|f| *f == a) {
                Some(b) => b as u8,
                None => {
                    firsts.push(a);
                    (firsts.len() - 1) as u8
                }
            })
            .collect();
        SetPartition { labels }
    }

    /// Builds a partition of `{1..n}` from explicit blocks.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if n > u8::MAX as usize {
            return Err(Error::SizeLimit {
                what: "set partition ground set",
                size: n,
                limit: u8::MAX as usize,
            });
        }
        let mut assignment = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside 1..={n}"
                    )));
                }
                if assignment[x - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                assignment[x - 1] = b;
            }
        }
        if let Some(missing) = assignment.iter().position(|&a| a == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {} not covered",
                missing + 1
            )));
        }
        Ok(Self::from_assignment(&assignment))
    }

    /// 0̂, the all-singletons partition.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            labels: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// 1̂, the one-block partition (empty for `n = 0`).
    pub fn one_block(n: usize) -> Self {
        SetPartition { labels: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Block index (0-based, ordered by least element) of each element.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Block index of the 1-based element `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i - 1] as usize
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.labels[i - 1] == self.labels[j - 1]
    }

    /// Blocks in canonical form: elements ascending, blocks ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// `σ ≤ π`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        check_degree(self.n(), other.n())?;
        let mut image = vec![u8::MAX; self.num_blocks()];
        for (&s, &p) in self.labels.iter().zip(&other.labels) {
            let slot = &mut image[s as usize];
            if *slot == u8::MAX {
                *slot = p;
            } else if *slot != p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λ(π)`: the block sizes, sorted.
    pub fn lambda(&self) -> IntPartition {
        IntPartition::new(self.block_sizes())
    }

    /// `|π| = r₁!·r₂!⋯` where `r_i` counts blocks of size `i`.
    pub fn multiplicity_weight(&self) -> BigInt {
        let sizes = self.block_sizes();
        let mut counts = vec![0usize; self.n() + 1];
        for s in sizes {
            counts[s] += 1;
        }
        counts.into_iter().map(factorial).product()
    }

    /// `π! = ∏ |B|!` over the blocks.
    pub fn factorial_weight(&self) -> BigInt {
        self.block_sizes().into_iter().map(factorial).product()
    }

    /// `π + (n)`: the partition of `{1..n+1}` with `n + 1` joined to the block of `n`.
    pub fn insert_last(&self) -> Result<Self> {
        let Some(&last) = self.labels.last() else {
            return Err(Error::InductOnDegreeZero);
        };
        let mut labels = self.labels.clone();
        labels.push(last);
        Ok(SetPartition { labels })
    }

    /// `δ(π)`: each block mapped elementwise through `delta`.
    pub fn apply_perm(&self, delta: &Perm) -> Result<Self> {
        check_degree(delta.degree(), self.n())?;
        let mut assignment = vec![0u8; self.n()];
        for (i, &l) in self.labels.iter().enumerate() {
            assignment[delta.apply0(i)] = l;
        }
        Ok(Self::from_assignment(&assignment))
    }

    /// `π ⊔ shift(ρ)`: `other`'s elements moved up by `self.n()`.
    pub fn shift_union(&self, other: &SetPartition) -> Self {
        let offset = self.num_blocks() as u8;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| l + offset));
        SetPartition { labels }
    }

    /// Every `σ ≥ self`, each paired with `μ(self, σ)`.
    pub fn coarsenings_with_mobius(&self) -> Vec<(SetPartition, BigInt)> {
        let k = self.num_blocks();
        partitions_of(k)
            .into_iter()
            .map(|merge| {
                let labels = self
                    .labels
                    .iter()
                    .map(|&l| merge.labels[l as usize])
                    .collect();
                (
                    SetPartition { labels },
                    block_product_mobius(&merge.block_sizes()),
                )
            })
            .collect()
    }

    /// Every `σ ≤ self`, each paired with `μ(σ, self)`.
    pub fn refinements_with_mobius(&self) -> Vec<(SetPartition, BigInt)> {
        let blocks = self.blocks();
        // one set partition per block, chosen independently
        let per_block: Vec<Vec<SetPartition>> =
            blocks.iter().map(|b| partitions_of(b.len())).collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; blocks.len()];
        loop {
            let mut assignment = vec![(0usize, 0u8); self.n()];
            let mut counts = Vec::with_capacity(blocks.len());
            for (b, block) in blocks.iter().enumerate() {
                let sub = &per_block[b][choice[b]];
                counts.push(sub.num_blocks());
                for (pos, &x) in block.iter().enumerate() {
                    assignment[x - 1] = (b, sub.labels[pos]);
                }
            }
            out.push((
                Self::from_assignment(&assignment),
                block_product_mobius(&counts),
            ));
            // odometer step
            let mut b = 0;
            loop {
                if b == blocks.len() {
                    return out;
                }
                choice[b] += 1;
                if choice[b] < per_block[b].len() {
                    break;
                }
                choice[b] = 0;
                b += 1;
            }
        }
    }
}

/// `∏ (−1)^(k−1) (k−1)!` over the given counts.
fn block_product_mobius(counts: &[usize]) -> BigInt {
    counts
        .iter()
        .map(|&k| {
            let f = factorial(k - 1);
            if k % 2 == 0 {
                -f
            } else {
                f
            }
        })
        .product()
}

fn check_degree(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

/// `μ(σ, π)` in `Π_n`, by the block-product formula.
pub fn mobius(sigma: &SetPartition, pi: &SetPartition) -> Result<BigInt> {
    if !sigma.refines(pi)? {
        return Err(Error::OrderViolation {
            lower: sigma.to_string(),
            upper: pi.to_string(),
        });
    }
    // number of σ-blocks inside each π-block
    let mut seen = vec![false; sigma.num_blocks()];
    let mut counts = vec![0usize; pi.num_blocks()];
    for (&s, &p) in sigma.labels.iter().zip(&pi.labels) {
        if !seen[s as usize] {
            seen[s as usize] = true;
            counts[p as usize] += 1;
        }
    }
    Ok(block_product_mobius(&counts))
}

/// `Type(σ)`: the partition into the orbits of `sigma`.
pub fn cycle_type_partition(sigma: &Perm) -> SetPartition {
    let mut assignment = vec![0usize; sigma.degree()];
    for (c, cycle) in sigma.cycles().into_iter().enumerate() {
        for x in cycle {
            assignment[x - 1] = c;
        }
    }
    SetPartition::from_assignment(&assignment)
}

/// All set partitions of `{1..n}` in canonical order, `1 ≤ n ≤ 12`.
pub fn enumerate_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::SizeTooSmall {
            what: "set partition enumeration",
            size: n,
            min: 1,
        });
    }
    if n > MAX_ENUMERATION {
        return Err(Error::SizeLimit {
            what: "set partition enumeration",
            size: n,
            limit: MAX_ENUMERATION,
        });
    }
    Ok(partitions_of(n))
}

/// Restricted growth strings of length `n` in lexicographic order; `n = 0` yields the empty partition.
pub(crate) fn partitions_of(n: usize) -> Vec<SetPartition> {
    fn rec(labels: &mut Vec<u8>, max: u8, n: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            out.push(SetPartition {
                labels: labels.clone(),
            });
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            rec(labels, max.max(l), n, out);
            labels.pop();
        }
    }
    if n == 0 {
        return vec![SetPartition { labels: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut labels = vec![0u8];
    // `max` starts one below the first label so the first extension may open block 1
    rec(&mut labels, 0, n, &mut out);
    out
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let braces = self.n() > 9;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                write!(f, "/")?;
            }
            if braces {
                write!(f, "{{")?;
                for (i, x) in block.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")?;
            } else {
                for x in block {
                    write!(f, "{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Accepts `134/2` (single-digit elements) or `{1,3,4}/{2}`. The ground
    /// set is `{1..max}`; the empty string is the partition of the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition { labels: Vec::new() });
        }
        let bad = |msg: &str| Error::InvalidPartition(format!("{s:?}: {msg}"));
        let mut blocks = Vec::new();
        for chunk in s.split('/') {
            let chunk = chunk.trim();
            let block: Vec<usize> = if let Some(inner) = chunk.strip_prefix('{') {
                let inner = inner
                    .strip_suffix('}')
                    .ok_or_else(|| bad("unclosed brace"))?;
                inner
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| bad("bad element")))
                    .collect::<Result<_>>()?
            } else {
                chunk
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| bad("bad element"))
                    })
                    .collect::<Result<_>>()?
            };
            blocks.push(block);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::from_blocks(n, &blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

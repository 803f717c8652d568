//! Set partitions of `{1..n, 1'..n'}`, the partition monoid product, the
//! refinement lattice, propagating partitions, and the factorizable
//! submonoid generated by permutations and idempotents.
//!
//! Points are indexed internally as `0..2n`, with the primed copy at
//! `n..2n`. The product stacks two diagrams: the right factor on levels
//! `{1..n} ∪ {1'..n'}`, the left factor shifted to `{1'..n'} ∪ {1''..n''}`,
//! fuses connectivity on all `3n` points with a union-find, and reads off
//! the induced partition on the outer `2n` points.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::relations::Permutation;

/// Largest block count accepted by [`SetPartition::coarsenings`].
pub const MAX_COARSENING_BLOCKS: usize = 12;

/// Largest `n` accepted by [`enumerate_fstar`].
pub const MAX_FSTAR_N: usize = 5;

/// Path-compressed union-find over `0..size`.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = i;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
            self.parent[hi] = lo;
        }
    }

    /// Blocks sorted by minimal element, elements sorted within blocks.
    fn blocks(&mut self) -> Vec<Vec<usize>> {
        let size = self.parent.len();
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..size {
            let r = self.find(i);
            by_root.entry(r).or_default().push(i);
        }
        by_root.into_values().collect()
    }
}

/// Restricted-growth strings: all set partitions of `k` items, each as an
/// assignment vector `item → block index`, blocks numbered by first
/// appearance. Enumeration order is the lexicographic order of the strings,
/// so the all-in-one-block partition comes first.
pub fn restricted_growth_strings(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fn rec(cur: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max_used + 1 {
            cur[pos] = b;
            rec(cur, pos + 1, max_used.max(b), out);
        }
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    cur[0] = 0;
    rec(&mut cur, 1, 0, &mut out);
    out
}

/// A set partition of the `2n` points `{1..n, 1'..n'}` in canonical form:
/// blocks sorted by minimal element, elements sorted within blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn canonicalize(point_count: usize, mut blocks: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; point_count];
    for block in &mut blocks {
        if block.is_empty() {
            return Err(Error::InvalidValue("empty block".into()));
        }
        block.sort_unstable();
        for &p in block.iter() {
            if p >= point_count {
                return Err(Error::InvalidValue(format!(
                    "point index {p} out of range 0..{point_count}"
                )));
            }
            if seen[p] {
                return Err(Error::InvalidValue(format!("point {p} occurs twice")));
            }
            seen[p] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidValue("blocks do not cover all points".into()));
    }
    blocks.sort_by_key(|b| b[0]);
    Ok(blocks)
}

impl SetPartition {
    /// Builds a partition from blocks of internal indices `0..2n`
    /// (`0..n` unprimed, `n..2n` primed).
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidValue("ground set must be non-empty".into()));
        }
        Ok(Self {
            n,
            blocks: canonicalize(2 * n, blocks)?,
        })
    }

    /// Parses blocks of labels `"k"` (unprimed) and `"k'"` (primed), 1-based.
    pub fn parse(n: usize, blocks: &[&[&str]]) -> Result<Self> {
        let mut converted = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut b = Vec::with_capacity(block.len());
            for label in *block {
                b.push(parse_point(n, label)?);
            }
            converted.push(b);
        }
        Self::from_blocks(n, converted)
    }

    /// The identity: blocks `{x, x'}`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_blocks(n, (0..n).map(|i| vec![i, i + n]).collect())
    }

    /// The one-block partition, the maximum of the refinement order.
    pub fn single_block(n: usize) -> Result<Self> {
        Self::from_blocks(n, vec![(0..2 * n).collect()])
    }

    /// The all-singletons partition, the minimum of the refinement order.
    pub fn singletons(n: usize) -> Result<Self> {
        Self::from_blocks(n, (0..2 * n).map(|i| vec![i]).collect())
    }

    pub fn from_permutation(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let blocks = (0..n).map(|x0| vec![x0, sigma.apply(x0 + 1) - 1 + n]).collect();
        Self::from_blocks(n, blocks).expect("permutation blocks cover all points")
    }

    pub fn to_permutation(&self) -> Option<Permutation> {
        let mut images = vec![0usize; self.n];
        for block in &self.blocks {
            if block.len() != 2 {
                return None;
            }
            let (a, b) = (block[0], block[1]);
            if a < self.n && b >= self.n {
                images[a] = b - self.n + 1;
            } else {
                return None;
            }
        }
        Permutation::from_images(images).ok()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Block index of each point.
    fn assignment(&self) -> Vec<usize> {
        let mut assign = vec![0usize; 2 * self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                assign[p] = b;
            }
        }
        assign
    }

    /// The mini-max product `self ∘ other` (`other` applied first).
    ///
    /// `other` sits on levels `0..2n`, `self` is shifted up by `n` onto
    /// levels `n..3n`, connectivity is fused on all `3n` points, and the
    /// partition induced on the outer points `{0..n} ∪ {2n..3n}` is
    /// relabelled back to `{0..2n}`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let n = self.n;
        let mut uf = UnionFind::new(3 * n);
        for block in &other.blocks {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for block in &self.blocks {
            for w in block.windows(2) {
                uf.union(w[0] + n, w[1] + n);
            }
        }
        let mut outer_blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in (0..n).chain(2 * n..3 * n) {
            let root = uf.find(p);
            let outer = if p < n { p } else { p - n };
            outer_blocks.entry(root).or_default().push(outer);
        }
        Self::from_blocks(n, outer_blocks.into_values().collect())
    }

    /// `true` iff every block meets both the unprimed and the primed half.
    pub fn is_propagating(&self) -> bool {
        self.blocks.iter().all(|block| {
            block.iter().any(|&p| p < self.n) && block.iter().any(|&p| p >= self.n)
        })
    }

    /// Refinement order: `true` iff every block of `self` lies inside a
    /// block of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_same_n(other)?;
        let assign = other.assignment();
        Ok(self
            .blocks
            .iter()
            .all(|block| block.iter().all(|&p| assign[p] == assign[block[0]])))
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut uf = UnionFind::new(2 * self.n);
        for block in self.blocks.iter().chain(other.blocks.iter()) {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Self::from_blocks(self.n, uf.blocks())
    }

    /// Common refinement: blockwise intersections.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let (a, b) = (self.assignment(), other.assignment());
        for p in 0..2 * self.n {
            blocks.entry((a[p], b[p])).or_default().push(p);
        }
        Self::from_blocks(self.n, blocks.into_values().collect())
    }

    /// All partitions coarser than or equal to `self`, i.e. the upper set
    /// `{b : self ≤ b}`, enumerated through set partitions of the block set
    /// in restricted-growth-string order.
    pub fn coarsenings(&self) -> Result<Vec<Self>> {
        if self.block_count() > MAX_COARSENING_BLOCKS {
            return Err(Error::SizeGuard {
                what: "block count for coarsening enumeration",
                limit: MAX_COARSENING_BLOCKS,
                requested: self.block_count(),
            });
        }
        let mut out = Vec::new();
        for rgs in restricted_growth_strings(self.block_count()) {
            let group_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
            let mut merged: Vec<Vec<usize>> = vec![Vec::new(); group_count];
            for (block_idx, &group) in rgs.iter().enumerate() {
                merged[group].extend_from_slice(&self.blocks[block_idx]);
            }
            out.push(Self::from_blocks(self.n, merged)?);
        }
        Ok(out)
    }

    /// All set partitions of the `2n` points. Guarded to keep the Bell
    /// number manageable; used by oracles and exhaustive checks.
    pub fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        if n == 0 || 2 * n > 8 {
            return Err(Error::SizeGuard {
                what: "full partition-monoid enumeration",
                limit: 4,
                requested: n,
            });
        }
        restricted_growth_strings(2 * n)
            .into_iter()
            .map(|rgs| {
                let group_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); group_count];
                for (p, &g) in rgs.iter().enumerate() {
                    blocks[g].push(p);
                }
                Self::from_blocks(n, blocks)
            })
            .collect()
    }

    /// All propagating partitions of the `2n` points, sorted.
    pub fn enumerate_propagating(n: usize) -> Result<Vec<Self>> {
        let mut all: Vec<Self> = Self::enumerate_all(n)?
            .into_iter()
            .filter(Self::is_propagating)
            .collect();
        all.sort();
        Ok(all)
    }

    /// Swaps the primed and unprimed halves. On permutation diagrams this is
    /// the inverse; on a product it reverses the factor order.
    pub fn swap_primes(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&p| if p < self.n { p + self.n } else { p - self.n })
                    .collect()
            })
            .collect();
        Self::from_blocks(self.n, blocks).expect("swapping primes preserves validity")
    }

    /// Labels of one block, `"k"` or `"k'"`, 1-based.
    fn block_labels(block: &[usize], n: usize) -> Vec<String> {
        block
            .iter()
            .map(|&p| {
                if p < n {
                    format!("{}", p + 1)
                } else {
                    format!("{}'", p - n + 1)
                }
            })
            .collect()
    }
}

fn parse_point(n: usize, label: &str) -> Result<usize> {
    let (digits, primed) = match label.strip_suffix('\'') {
        Some(rest) => (rest, true),
        None => (label, false),
    };
    let k: usize = digits
        .parse()
        .map_err(|_| Error::InvalidValue(format!("bad point label {label:?}")))?;
    if k == 0 || k > n {
        return Err(Error::InvalidValue(format!(
            "point label {label:?} outside 1..={n}"
        )));
    }
    Ok(if primed { k - 1 + n } else { k - 1 })
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{}}}", Self::block_labels(block, self.n).join(","))?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SetPartition", 2)?;
        s.serialize_field("n", &self.n)?;
        let blocks: Vec<Vec<String>> = self
            .blocks
            .iter()
            .map(|b| Self::block_labels(b, self.n))
            .collect();
        s.serialize_field("blocks", &blocks)?;
        s.end()
    }
}

/// A partition of `{1..n}` only (a quotient of the ground set), canonical
/// form as for [`SetPartition`]. Indexes the idempotents above the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl QuotientPartition {
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidValue("ground set must be non-empty".into()));
        }
        Ok(Self {
            n,
            blocks: canonicalize(n, blocks)?,
        })
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::from_blocks(n, (0..n).map(|i| vec![i]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// All partitions of `{1..n}` in restricted-growth-string order.
    pub fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        if n == 0 || n > 8 {
            return Err(Error::SizeGuard {
                what: "quotient-partition enumeration",
                limit: 8,
                requested: n,
            });
        }
        restricted_growth_strings(n)
            .into_iter()
            .map(|rgs| {
                let group_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); group_count];
                for (p, &g) in rgs.iter().enumerate() {
                    blocks[g].push(p);
                }
                Self::from_blocks(n, blocks)
            })
            .collect()
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut assign = vec![0usize; self.n];
        for (b, block) in other.blocks.iter().enumerate() {
            for &p in block {
                assign[p] = b;
            }
        }
        Ok(self
            .blocks
            .iter()
            .all(|block| block.iter().all(|&p| assign[p] == assign[block[0]])))
    }

    /// The idempotent partition with blocks `B ∪ B'`.
    pub fn to_idempotent(&self) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|block| {
                let mut b: Vec<usize> = block.clone();
                b.extend(block.iter().map(|&p| p + self.n));
                b
            })
            .collect();
        SetPartition::from_blocks(self.n, blocks).expect("doubling a quotient is a partition")
    }

    /// Reads a quotient off a partition lying above the identity (each
    /// block closed under priming). Returns `None` otherwise.
    pub fn from_idempotent(p: &SetPartition) -> Option<Self> {
        if !p
            .leq(&p.clone())
            .is_ok_and(|_| SetPartition::identity(p.n()).ok().is_some_and(|id| id.leq(p).unwrap_or(false)))
        {
            return None;
        }
        let blocks: Vec<Vec<usize>> = p
            .blocks()
            .iter()
            .map(|block| block.iter().filter(|&&q| q < p.n()).copied().collect())
            .collect();
        Self::from_blocks(p.n(), blocks).ok()
    }

    /// Pushes the quotient forward along a permutation.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: sigma.n(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .map(|block| block.iter().map(|&p| sigma.apply(p + 1) - 1).collect())
            .collect();
        Self::from_blocks(self.n, blocks)
    }
}

impl PartialOrd for QuotientPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuotientPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl fmt::Debug for QuotientPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuotientPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let labels: Vec<String> = block.iter().map(|&p| format!("{}", p + 1)).collect();
            write!(f, "{{{}}}", labels.join(","))?;
        }
        write!(f, "}}")
    }
}

/// The upper set `{s : x ≤ s for some x ∈ xs}` inside the propagating
/// partitions, realized by enumerating coarsenings. The result is sorted.
pub fn upper_set_closure(xs: &[SetPartition]) -> Result<Vec<SetPartition>> {
    let mut out = BTreeSet::new();
    for x in xs {
        if let Some(first) = xs.first() {
            if x.n() != first.n() {
                return Err(Error::DimensionMismatch {
                    left: first.n(),
                    right: x.n(),
                });
            }
        }
        for c in x.coarsenings()? {
            if c.is_propagating() {
                out.insert(c);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The factorizable elements: the upper closure of the permutation diagrams
/// among propagating partitions. Every returned element is verified to
/// factor as `e·σ` and as `σ·e'` with `σ` a permutation diagram and `e, e'`
/// idempotents above the identity.
pub fn enumerate_fstar(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 || n > MAX_FSTAR_N {
        return Err(Error::SizeGuard {
            what: "factorizable-submonoid enumeration",
            limit: MAX_FSTAR_N,
            requested: n,
        });
    }
    let perms = Permutation::all(n)?;
    let perm_parts: Vec<SetPartition> = perms.iter().map(SetPartition::from_permutation).collect();
    let closure = upper_set_closure(&perm_parts)?;
    let identity = SetPartition::identity(n)?;
    for rho in &closure {
        let sigma = perms
            .iter()
            .find(|p| SetPartition::from_permutation(p).leq(rho).unwrap())
            .ok_or_else(|| {
                Error::InvalidValue(format!("{rho} has no permutation below it"))
            })?;
        let sig = SetPartition::from_permutation(sigma);
        let sig_inv = SetPartition::from_permutation(&sigma.inverse());
        let left = rho.product(&sig_inv)?; // candidate e with e·σ = ρ
        let right = sig_inv.product(rho)?; // candidate e' with σ·e' = ρ
        for (e, recomposed) in [(&left, left.product(&sig)?), (&right, sig.product(&right)?)] {
            let idempotent = e.product(e)? == *e && identity.leq(e)?;
            if !idempotent || recomposed != *rho {
                return Err(Error::InvalidValue(format!(
                    "{rho} does not factor through a permutation and an idempotent"
                )));
            }
        }
    }
    Ok(closure)
}

/// Möbius function of a finite poset given by a containment predicate.
///
/// Returns the table `μ[i][j]` over element indices, with `μ(x,x) = 1`,
/// `μ(x,y) = −Σ_{x≤z<y} μ(x,z)` for `x < y` and `0` when `x ≰ y`. The
/// predicate is validated for reflexivity and antisymmetry.
pub fn mobius_table<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool) -> Result<Vec<Vec<i64>>> {
    let m = elements.len();
    let le: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| leq(&elements[i], &elements[j])).collect())
        .collect();
    for i in 0..m {
        if !le[i][i] {
            return Err(Error::Order(format!("element {i} is not ≤ itself")));
        }
        for j in 0..m {
            if i != j && le[i][j] && le[j][i] {
                return Err(Error::Order(format!(
                    "elements {i} and {j} are ≤ each other but distinct"
                )));
            }
        }
    }
    let mut mu = vec![vec![0i64; m]; m];
    // process targets in topological order so every μ(x,z) with z < y is ready
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&j| (0..m).filter(|&i| le[i][j]).count());
    for i in 0..m {
        mu[i][i] = 1;
        for &j in &order {
            if i == j || !le[i][j] {
                continue;
            }
            let mut sum = 0i64;
            for z in 0..m {
                if z != j && le[i][z] && le[z][j] {
                    sum += mu[i][z];
                }
            }
            mu[i][j] = -sum;
        }
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps() -> SetPartition {
        SetPartition::identity(2).unwrap()
    }
    fn sig() -> SetPartition {
        SetPartition::parse(2, &[&["1", "2'"], &["2", "1'"]]).unwrap()
    }
    fn tau() -> SetPartition {
        SetPartition::single_block(2).unwrap()
    }

    #[test]
    fn product_basics() {
        assert_eq!(sig().product(&sig()).unwrap(), eps());
        assert_eq!(tau().product(&tau()).unwrap(), tau());
        assert_eq!(eps().product(&sig()).unwrap(), sig());
        assert_eq!(sig().product(&eps()).unwrap(), sig());
    }

    #[test]
    fn product_matches_permutation_composition() {
        for p in Permutation::all(3).unwrap() {
            for q in Permutation::all(3).unwrap() {
                let lhs = SetPartition::from_permutation(&p)
                    .product(&SetPartition::from_permutation(&q))
                    .unwrap();
                let rhs = SetPartition::from_permutation(&p.compose(&q).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn propagating_detection() {
        assert!(sig().is_propagating());
        assert!(tau().is_propagating());
        let with_singleton =
            SetPartition::parse(2, &[&["1"], &["2", "1'", "2'"]]).unwrap();
        assert!(!with_singleton.is_propagating());
    }

    #[test]
    fn refinement_order() {
        assert!(eps().leq(&tau()).unwrap());
        assert!(eps().leq(&eps()).unwrap());
        assert!(!tau().leq(&eps()).unwrap());
        assert!(!eps().leq(&sig()).unwrap());
    }

    #[test]
    fn join_and_meet() {
        assert_eq!(eps().join(&sig()).unwrap(), tau());
        assert_eq!(sig().join(&sig()).unwrap(), sig());
        assert_eq!(eps().meet(&sig()).unwrap(), SetPartition::singletons(2).unwrap());
    }

    #[test]
    fn coarsening_enumeration() {
        let of_eps = eps().coarsenings().unwrap();
        assert_eq!(of_eps.len(), 2);
        assert!(of_eps.contains(&eps()) && of_eps.contains(&tau()));
        assert_eq!(tau().coarsenings().unwrap(), vec![tau()]);
        let of_sig = sig().coarsenings().unwrap();
        assert_eq!(of_sig.len(), 2);
        assert!(of_sig.contains(&sig()) && of_sig.contains(&tau()));
        // coarsenings of a propagating partition stay propagating
        for c in SetPartition::from_permutation(&Permutation::from_images(vec![2, 3, 1]).unwrap())
            .coarsenings()
            .unwrap()
        {
            assert!(c.is_propagating());
        }
    }

    #[test]
    fn factorizable_submonoid() {
        let f2 = enumerate_fstar(2).unwrap();
        assert_eq!(f2, {
            let mut v = vec![eps(), sig(), tau()];
            v.sort();
            v
        });
        assert_eq!(enumerate_fstar(1).unwrap().len(), 1);
        // counts follow n!/∏(block sizes)! summed over quotients
        assert_eq!(enumerate_fstar(3).unwrap().len(), 16);
        assert_eq!(enumerate_fstar(4).unwrap().len(), 131);
    }

    #[test]
    fn upper_closure_examples() {
        let s2: Vec<SetPartition> = Permutation::all(2)
            .unwrap()
            .iter()
            .map(SetPartition::from_permutation)
            .collect();
        assert_eq!(upper_set_closure(&s2).unwrap().len(), 3);
        assert_eq!(upper_set_closure(&[tau()]).unwrap(), vec![tau()]);
        let above_eps = upper_set_closure(&[eps()]).unwrap();
        assert_eq!(above_eps.len(), 2); // the idempotents above the identity
    }

    #[test]
    fn propagating_counts() {
        assert_eq!(SetPartition::enumerate_all(2).unwrap().len(), 15);
        assert_eq!(SetPartition::enumerate_propagating(2).unwrap().len(), 3);
        assert_eq!(SetPartition::enumerate_propagating(3).unwrap().len(), 25);
    }

    #[test]
    fn mobius_on_boolean_lattice() {
        let subsets: Vec<BTreeSet<usize>> = (0u32..4)
            .map(|mask| (0..2).filter(|&b| mask & (1 << b) != 0).collect())
            .collect();
        let mu = mobius_table(&subsets, |a, b| a.is_subset(b)).unwrap();
        let idx = |s: &[usize]| {
            subsets
                .iter()
                .position(|t| t == &s.iter().copied().collect::<BTreeSet<_>>())
                .unwrap()
        };
        assert_eq!(mu[idx(&[])][idx(&[0, 1])], 1);
        assert_eq!(mu[idx(&[0])][idx(&[0, 1])], -1);
        assert_eq!(mu[idx(&[])][idx(&[0])], -1);
        assert_eq!(mu[idx(&[0])][idx(&[])], 0);
    }

    #[test]
    fn mobius_on_three_point_partition_lattice() {
        let elements = QuotientPartition::enumerate_all(3).unwrap();
        assert_eq!(elements.len(), 5);
        let mu = mobius_table(&elements, |a, b| a.leq(b).unwrap()).unwrap();
        let bottom = elements
            .iter()
            .position(|p| p.block_count() == 3)
            .unwrap();
        let top = elements.iter().position(|p| p.block_count() == 1).unwrap();
        assert_eq!(mu[bottom][top], 2);
        // adjacent chain steps carry −1
        for (i, p) in elements.iter().enumerate() {
            if p.block_count() == 2 {
                assert_eq!(mu[i][top], -1);
                assert_eq!(mu[bottom][i], -1);
            }
        }
    }

    #[test]
    fn mobius_rejects_non_antisymmetric_input() {
        let elements = vec![0, 1];
        assert!(matches!(
            mobius_table(&elements, |_, _| true),
            Err(Error::Order(_))
        ));
    }

    #[test]
    fn quotient_roundtrip() {
        for q in QuotientPartition::enumerate_all(3).unwrap() {
            let e = q.to_idempotent();
            assert!(e.is_propagating());
            assert!(SetPartition::identity(3).unwrap().leq(&e).unwrap());
            assert_eq!(e.product(&e).unwrap(), e);
            assert_eq!(QuotientPartition::from_idempotent(&e), Some(q.clone()));
        }
    }

    #[test]
    fn swap_primes_is_an_antiautomorphism() {
        let parts = SetPartition::enumerate_all(2).unwrap();
        for a in &parts {
            assert_eq!(a.swap_primes().swap_primes(), *a);
            for b in &parts {
                assert_eq!(
                    a.product(b).unwrap().swap_primes(),
                    b.swap_primes().product(&a.swap_primes()).unwrap()
                );
            }
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            serde_json::to_string(&eps()).unwrap(),
            r#"{"n":2,"blocks":[["1","1'"],["2","2'"]]}"#
        );
    }
}

//! Binary relations on `{1..n}`, permutations, and partial bijections.
//!
//! A relation is a set of pairs `(y, x)` read as "column `x` maps to row `y`",
//! so that composition of relations is the boolean matrix product: the pair
//! `(z, x)` lies in `a ∘ b` iff there is `y` with `(z, y) ∈ a` and `(y, x) ∈ b`.
//! Permutations and partial bijections embed as relations `{(σ(x), x)}`;
//! composition of the relation forms then agrees with composition of maps,
//! applying the right factor first.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ground-set size representable by the bit-row storage.
pub const MAX_GROUND_SET: usize = 16;

/// Largest pair count accepted by [`BinaryRelation::subrelations`].
pub const MAX_SUBSET_PAIRS: usize = 24;

/// Largest `n` accepted by [`PartialBijection::enumerate_all`].
pub const MAX_ENUMERATE_N: usize = 6;

fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::SizeGuard {
            what: "ground-set size",
            limit: MAX_GROUND_SET,
            requested: n,
        });
    }
    Ok(())
}

/// A binary relation on `{1..n}`, stored as one bit row per target point.
///
/// Bit `x` of `rows[y]` is set iff the pair `(y+1, x+1)` belongs to the
/// relation. Equality and ordering are by `(n, lexicographic pair list)`,
/// which fixes the enumeration order everywhere.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    n: usize,
    rows: Vec<u32>,
}

impl BinaryRelation {
    /// Builds a relation from 1-based `(y, x)` pairs.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_ground_set(n)?;
        let mut rows = vec![0u32; n];
        for &(y, x) in pairs {
            if y == 0 || y > n || x == 0 || x > n {
                return Err(Error::InvalidValue(format!(
                    "pair ({y},{x}) outside ground set 1..={n}"
                )));
            }
            rows[y - 1] |= 1 << (x - 1);
        }
        Ok(Self { n, rows })
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(Self {
            n,
            rows: vec![0; n],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(Self {
            n,
            rows: (0..n).map(|i| 1 << i).collect(),
        })
    }

    /// The diagonal relation `{(x, x) : x ∈ set}`, `set` given 1-based.
    pub fn diagonal(n: usize, set: &BTreeSet<usize>) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = set.iter().map(|&x| (x, x)).collect();
        Self::new(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, y: usize, x: usize) -> bool {
        y >= 1 && y <= self.n && x >= 1 && x <= self.n && self.rows[y - 1] & (1 << (x - 1)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All pairs `(y, x)`, 1-based, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.pair_count());
        for y in 0..self.n {
            let mut bits = self.rows[y];
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                out.push((y + 1, x + 1));
                bits &= bits - 1;
            }
        }
        out
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

    /// Relation composition `self ∘ other` (boolean matrix product, `other`
    /// applied first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut rows = vec![0u32; self.n];
        for z in 0..self.n {
            let mut bits = self.rows[z];
            let mut acc = 0u32;
            while bits != 0 {
                let y = bits.trailing_zeros() as usize;
                acc |= other.rows[y];
                bits &= bits - 1;
            }
            rows[z] = acc;
        }
        Ok(Self { n: self.n, rows })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self { n: self.n, rows })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Self { n: self.n, rows })
    }

    /// Inclusion order: `true` iff every pair of `self` lies in `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a & !b == 0))
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![0u32; self.n];
        for y in 0..self.n {
            let mut bits = self.rows[y];
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                rows[x] |= 1 << y;
                bits &= bits - 1;
            }
        }
        Self { n: self.n, rows }
    }

    /// All subsets of the pair set, enumerated by binary counter over the
    /// lexicographic pair list (so the empty relation comes first and the
    /// full relation last).
    pub fn subrelations(&self) -> Result<Vec<Self>> {
        let pairs = self.pairs();
        if pairs.len() > MAX_SUBSET_PAIRS {
            return Err(Error::SizeGuard {
                what: "pair count for subset enumeration",
                limit: MAX_SUBSET_PAIRS,
                requested: pairs.len(),
            });
        }
        let mut out = Vec::with_capacity(1 << pairs.len());
        for mask in 0u32..(1 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            out.push(Self::new(self.n, &chosen)?);
        }
        Ok(out)
    }

    /// At most one pair per row and per column.
    pub fn is_partial_bijection(&self) -> bool {
        let mut cols = 0u32;
        for &row in &self.rows {
            if row.count_ones() > 1 || cols & row != 0 {
                return false;
            }
            cols |= row;
        }
        true
    }

    pub fn is_permutation(&self) -> bool {
        self.is_partial_bijection() && self.pair_count() == self.n
    }

    /// For subrelations of the identity: the fixed set, 1-based.
    pub fn diagonal_support(&self) -> Option<BTreeSet<usize>> {
        let mut set = BTreeSet::new();
        for y in 0..self.n {
            match self.rows[y] {
                0 => {}
                r if r == 1 << y => {
                    set.insert(y + 1);
                }
                _ => return None,
            }
        }
        Some(set)
    }

    /// Column set `{x : (y, x) ∈ r}`, 1-based.
    pub fn column_support(&self) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        for &row in &self.rows {
            let mut bits = row;
            while bits != 0 {
                set.insert(bits.trailing_zeros() as usize + 1);
                bits &= bits - 1;
            }
        }
        set
    }
}

impl PartialOrd for BinaryRelation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinaryRelation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.pairs().cmp(&other.pairs()))
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (y, x)) in self.pairs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({y},{x})")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for BinaryRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BinaryRelation", 2)?;
        s.serialize_field("n", &self.n)?;
        let pairs: Vec<[usize; 2]> = self.pairs().into_iter().map(|(y, x)| [y, x]).collect();
        s.serialize_field("pairs", &pairs)?;
        s.end()
    }
}

/// A permutation of `{1..n}` stored by its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images `σ(1), …, σ(n)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        check_ground_set(n)?;
        let mut seen = vec![false; n];
        for &y in &images {
            if y == 0 || y > n || seen[y - 1] {
                return Err(Error::InvalidValue(format!(
                    "images {images:?} are not a bijection of 1..={n}"
                )));
            }
            seen[y - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(Self {
            images: (1..=n).collect(),
        })
    }

    /// All permutations of `{1..n}` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        check_ground_set(n)?;
        if n > 8 {
            return Err(Error::SizeGuard {
                what: "permutation enumeration",
                limit: 8,
                requested: n,
            });
        }
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self {
                images: images.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (x0, &y) in self.images.iter().enumerate() {
            images[y - 1] = x0 + 1;
        }
        Self { images }
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            images: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        })
    }

    pub fn as_relation(&self) -> BinaryRelation {
        let pairs: Vec<(usize, usize)> = self
            .images
            .iter()
            .enumerate()
            .map(|(x0, &y)| (y, x0 + 1))
            .collect();
        BinaryRelation::new(self.n(), &pairs).expect("images validated at construction")
    }

    pub fn from_relation(rel: &BinaryRelation) -> Option<Self> {
        if !rel.is_permutation() {
            return None;
        }
        let mut images = vec![0; rel.n()];
        for (y, x) in rel.pairs() {
            images[x - 1] = y;
        }
        Some(Self { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|y| y.to_string()).collect::<Vec<_>>().join(" "))
    }
}

/// A bijection between two subsets of `{1..n}`.
///
/// `map[x-1] = Some(y)` means `x ↦ y`; injectivity is enforced at
/// construction. The relation form is `{(y, x)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    n: usize,
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    /// Builds a partial bijection from 1-based `(x, y)` assignments `x ↦ y`.
    pub fn new(n: usize, assignments: &[(usize, usize)]) -> Result<Self> {
        check_ground_set(n)?;
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        for &(x, y) in assignments {
            if x == 0 || x > n || y == 0 || y > n {
                return Err(Error::InvalidValue(format!(
                    "assignment {x}↦{y} outside ground set 1..={n}"
                )));
            }
            if map[x - 1].is_some() || used[y - 1] {
                return Err(Error::InvalidValue(format!(
                    "assignments are not injective at {x}↦{y}"
                )));
            }
            map[x - 1] = Some(y);
            used[y - 1] = true;
        }
        Ok(Self { n, map })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(Self {
            n,
            map: (1..=n).map(Some).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x - 1]
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    pub fn domain(&self) -> BTreeSet<usize> {
        (1..=self.n).filter(|&x| self.map[x - 1].is_some()).collect()
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.map.iter().flatten().copied().collect()
    }

    pub fn to_relation(&self) -> BinaryRelation {
        let pairs: Vec<(usize, usize)> = self
            .map
            .iter()
            .enumerate()
            .filter_map(|(x0, y)| y.map(|y| (y, x0 + 1)))
            .collect();
        BinaryRelation::new(self.n, &pairs).expect("validated at construction")
    }

    pub fn from_relation(rel: &BinaryRelation) -> Option<Self> {
        if !rel.is_partial_bijection() {
            return None;
        }
        let assignments: Vec<(usize, usize)> =
            rel.pairs().into_iter().map(|(y, x)| (x, y)).collect();
        Some(Self::new(rel.n(), &assignments).expect("partial bijection validated"))
    }

    /// `self ∘ other`, applying `other` first; the domain shrinks to the
    /// points that pass through both maps.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let assignments: Vec<(usize, usize)> = (1..=self.n)
            .filter_map(|x| other.apply(x).and_then(|y| self.apply(y)).map(|z| (x, z)))
            .collect();
        Self::new(self.n, &assignments)
    }

    pub fn inverse(&self) -> Self {
        let assignments: Vec<(usize, usize)> = self
            .map
            .iter()
            .enumerate()
            .filter_map(|(x0, y)| y.map(|y| (y, x0 + 1)))
            .collect();
        Self::new(self.n, &assignments).expect("inverse of injective map is injective")
    }

    /// All partial bijections of `{1..n}`, sorted by their relation form.
    ///
    /// They are exactly the subrelations of permutations, so the enumeration
    /// walks `S_n` and deduplicates.
    pub fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        if n == 0 || n > MAX_ENUMERATE_N {
            return Err(Error::SizeGuard {
                what: "partial-bijection enumeration",
                limit: MAX_ENUMERATE_N,
                requested: n,
            });
        }
        let mut rels = BTreeSet::new();
        for perm in Permutation::all(n)? {
            for sub in perm.as_relation().subrelations()? {
                rels.insert(sub);
            }
        }
        Ok(rels
            .into_iter()
            .map(|r| Self::from_relation(&r).expect("subrelation of a permutation is injective"))
            .collect())
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for x in 1..=self.n {
            if let Some(y) = self.map[x - 1] {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{x}↦{y}")?;
                first = false;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for PartialBijection {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            map: MapRepr<'a>,
        }
        struct MapRepr<'a>(&'a PartialBijection);
        impl Serialize for MapRepr<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let entries: Vec<(String, String)> = (1..=self.0.n)
                    .filter_map(|x| self.0.apply(x).map(|y| (x.to_string(), y.to_string())))
                    .collect();
                let mut m = serializer.serialize_map(Some(entries.len()))?;
                for (k, v) in entries {
                    m.serialize_entry(&k, &v)?;
                }
                m.end()
            }
        }
        Repr {
            n: self.n,
            map: MapRepr(self),
        }
        .serialize(serializer)
    }
}

/// Restriction of a permutation to a 1-based domain subset.
pub fn restrict_permutation(sigma: &Permutation, domain: &BTreeSet<usize>) -> Result<PartialBijection> {
    for &x in domain {
        if x == 0 || x > sigma.n() {
            return Err(Error::InvalidValue(format!(
                "domain point {x} outside ground set 1..={}",
                sigma.n()
            )));
        }
    }
    let assignments: Vec<(usize, usize)> = domain.iter().map(|&x| (x, sigma.apply(x))).collect();
    PartialBijection::new(sigma.n(), &assignments)
}

/// The lower set `{s : s ≤ x for some x ∈ xs}` under inclusion of relations,
/// realized by enumerating all subrelations. The result is sorted.
pub fn lower_set_closure(xs: &[BinaryRelation]) -> Result<Vec<BinaryRelation>> {
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
        for sub in x.subrelations()? {
            out.insert(sub);
        }
    }
    Ok(out.into_iter().collect())
}

/// Number of partial bijections of `{1..n}`: `Σ_k C(n,k)² k!`.
pub fn partial_bijection_count(n: usize) -> u64 {
    let binom = |n: u64, k: u64| -> u64 {
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let fact = |k: u64| -> u64 { (1..=k).product::<u64>().max(1) };
    (0..=n as u64).map(|k| binom(n as u64, k).pow(2) * fact(k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
        BinaryRelation::new(n, pairs).unwrap()
    }

    // The seven partial bijections of a 2-point set, in the naming used by
    // the n=2 tables: ε identity, σ swap, τ empty, α fixes 1, β 1↦2,
    // γ 2↦1, δ fixes 2.
    fn named2() -> [BinaryRelation; 7] {
        [
            rel(2, &[(1, 1), (2, 2)]), // ε
            rel(2, &[(2, 1), (1, 2)]), // σ
            rel(2, &[]),               // τ
            rel(2, &[(1, 1)]),         // α
            rel(2, &[(2, 1)]),         // β
            rel(2, &[(1, 2)]),         // γ
            rel(2, &[(2, 2)]),         // δ
        ]
    }

    #[test]
    fn compose_matches_boolean_matrix_product() {
        let [_, sigma, _, alpha, _, gamma, _] = named2();
        // α ∘ σ picks out the pair routed through the fixed point of α.
        assert_eq!(alpha.compose(&sigma).unwrap(), gamma);
        // group inverse composes to the identity
        let inv = sigma.transpose();
        assert_eq!(sigma.compose(&inv).unwrap(), BinaryRelation::identity(2).unwrap());
        // the empty relation is absorbing
        let empty = BinaryRelation::empty(2).unwrap();
        assert_eq!(empty.compose(&sigma).unwrap(), empty);
        assert_eq!(sigma.compose(&empty).unwrap(), empty);
    }

    #[test]
    fn compose_dimension_mismatch() {
        let a = BinaryRelation::identity(2).unwrap();
        let b = BinaryRelation::identity(3).unwrap();
        assert!(matches!(
            a.compose(&b),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(a.leq(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn intersect_basics() {
        let [eps, sigma, tau, alpha, ..] = named2();
        assert_eq!(eps.intersect(&sigma).unwrap(), tau);
        assert_eq!(sigma.intersect(&sigma).unwrap(), sigma);
        assert_eq!(eps.intersect(&alpha).unwrap(), alpha);
    }

    #[test]
    fn leq_basics() {
        let [eps, sigma, tau, alpha, ..] = named2();
        assert!(tau.leq(&sigma).unwrap());
        assert!(alpha.leq(&eps).unwrap());
        assert!(!eps.leq(&alpha).unwrap());
    }

    #[test]
    fn subrelations_of_identity_and_swap() {
        let [eps, sigma, tau, alpha, beta, gamma, delta] = named2();
        let of_eps = eps.subrelations().unwrap();
        assert_eq!(of_eps.len(), 4);
        for r in [&tau, &alpha, &delta, &eps] {
            assert!(of_eps.contains(r));
        }
        let of_sigma = sigma.subrelations().unwrap();
        assert_eq!(of_sigma.len(), 4);
        for r in [&tau, &beta, &gamma, &sigma] {
            assert!(of_sigma.contains(r));
        }
        assert_eq!(tau.subrelations().unwrap(), vec![tau.clone()]);
    }

    #[test]
    fn subrelation_guard_fires() {
        let full = rel(6, &(1..=6).flat_map(|y| (1..=6).map(move |x| (y, x))).collect::<Vec<_>>());
        assert!(matches!(
            full.subrelations(),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn enumerate_partial_bijections() {
        assert_eq!(PartialBijection::enumerate_all(1).unwrap().len(), 2);
        let is2 = PartialBijection::enumerate_all(2).unwrap();
        assert_eq!(is2.len(), 7);
        assert_eq!(PartialBijection::enumerate_all(3).unwrap().len(), 34);
        assert!(matches!(
            PartialBijection::enumerate_all(7),
            Err(Error::SizeGuard { .. })
        ));
        // counting formula agrees with the enumeration
        for n in 1..=4 {
            assert_eq!(
                PartialBijection::enumerate_all(n).unwrap().len() as u64,
                partial_bijection_count(n)
            );
        }
    }

    #[test]
    fn domain_and_image() {
        let alpha = PartialBijection::new(2, &[(1, 1)]).unwrap();
        assert_eq!(alpha.domain(), BTreeSet::from([1]));
        assert_eq!(alpha.image(), BTreeSet::from([1]));
        let tau = PartialBijection::empty(2).unwrap();
        assert!(tau.domain().is_empty() && tau.image().is_empty());
        let gamma = PartialBijection::new(2, &[(2, 1)]).unwrap();
        assert_eq!(gamma.domain(), BTreeSet::from([2]));
        assert_eq!(gamma.image(), BTreeSet::from([1]));
    }

    #[test]
    fn restriction_of_permutations() {
        let id2 = Permutation::identity(2).unwrap();
        let swap = Permutation::from_images(vec![2, 1]).unwrap();
        let alpha = restrict_permutation(&id2, &BTreeSet::from([1])).unwrap();
        assert_eq!(alpha.to_relation(), rel(2, &[(1, 1)]));
        let tau = restrict_permutation(&swap, &BTreeSet::new()).unwrap();
        assert_eq!(tau, PartialBijection::empty(2).unwrap());
        let beta = restrict_permutation(&swap, &BTreeSet::from([1])).unwrap();
        assert_eq!(beta.to_relation(), rel(2, &[(2, 1)]));
    }

    #[test]
    fn lower_closure_of_symmetric_group() {
        let s2: Vec<BinaryRelation> = Permutation::all(2)
            .unwrap()
            .iter()
            .map(Permutation::as_relation)
            .collect();
        let is2 = lower_set_closure(&s2).unwrap();
        assert_eq!(is2.len(), 7);
        let s1: Vec<BinaryRelation> = Permutation::all(1)
            .unwrap()
            .iter()
            .map(Permutation::as_relation)
            .collect();
        assert_eq!(lower_set_closure(&s1).unwrap().len(), 2);
        let empty = BinaryRelation::empty(2).unwrap();
        assert_eq!(lower_set_closure(&[empty.clone()]).unwrap(), vec![empty]);
    }

    #[test]
    fn permutation_composition_and_inverse() {
        for p in Permutation::all(3).unwrap() {
            let q = p.inverse();
            assert_eq!(
                p.compose(&q).unwrap(),
                Permutation::identity(3).unwrap()
            );
            // relation form commutes with composition
            for r in Permutation::all(3).unwrap() {
                assert_eq!(
                    p.compose(&r).unwrap().as_relation(),
                    p.as_relation().compose(&r.as_relation()).unwrap()
                );
            }
        }
    }

    #[test]
    fn partial_bijection_relation_roundtrip() {
        for pb in PartialBijection::enumerate_all(3).unwrap() {
            let rel = pb.to_relation();
            assert!(rel.is_partial_bijection());
            assert_eq!(PartialBijection::from_relation(&rel), Some(pb.clone()));
        }
    }

    #[test]
    fn json_shapes() {
        let [_, sigma, ..] = named2();
        assert_eq!(
            serde_json::to_string(&sigma).unwrap(),
            r#"{"n":2,"pairs":[[1,2],[2,1]]}"#
        );
        let beta = PartialBijection::new(2, &[(1, 2)]).unwrap();
        assert_eq!(
            serde_json::to_string(&beta).unwrap(),
            r#"{"n":2,"map":{"1":"2"}}"#
        );
    }
}

//! Finite strict 2-categories presented by composition tables, their
//! instantiations on binary relations, partitions, and ordered monoids,
//! and exhaustive/sampled verification of the axioms.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_fstar, SetPartition};
use crate::relations::{lower_set_closure, BinaryRelation, Permutation};

/// Largest `n` for the relation and partition 2-categories.
pub const MAX_CAT_N: usize = 4;

/// A finite strict 2-category with a single object.
///
/// 1-morphisms form a finite monoid under `compose1`; 2-morphisms are plain
/// values, and membership of a value in a hom-set is recomputed from the
/// bounding pair of 1-morphisms (the same value may inhabit many hom-sets).
/// Vertical and horizontal composition must only be called on composable
/// arguments.
pub trait TwoCategory {
    type Mor1: Clone + Eq + Ord + Hash + Debug + Serialize;
    type Mor2: Clone + Eq + Ord + Hash + Debug + Serialize;

    /// Short label used in reports.
    fn label(&self) -> String;
    fn n(&self) -> usize;
    fn one_morphisms(&self) -> &[Self::Mor1];
    fn identity1(&self) -> Self::Mor1;
    /// `f ∘ g`, applying `g` first.
    fn compose1(&self, f: &Self::Mor1, g: &Self::Mor1) -> Self::Mor1;
    fn inverse1(&self, f: &Self::Mor1) -> Option<Self::Mor1>;
    /// The 2-morphisms from `f` to `g`, sorted canonically.
    fn two_hom(&self, f: &Self::Mor1, g: &Self::Mor1) -> Vec<Self::Mor2>;
    /// `β ∘₁ α` for vertically composable `α: f → g`, `β: g → h`.
    fn vertical(&self, beta: &Self::Mor2, alpha: &Self::Mor2) -> Self::Mor2;
    /// `β ∘₀ α` for `α: π → σ`, `β: τ → ρ`, landing in `Hom(τπ, ρσ)`.
    fn horizontal(&self, beta: &Self::Mor2, alpha: &Self::Mor2) -> Self::Mor2;
    fn identity2(&self, f: &Self::Mor1) -> Self::Mor2;
}

/// A compatible contravariant star on both levels, reversing 1-morphism
/// composition and horizontal composition of 2-morphisms.
pub trait StarStructure: TwoCategory {
    fn star1(&self, f: &Self::Mor1) -> Self::Mor1;
    fn star2(&self, a: &Self::Mor2) -> Self::Mor2;
}

fn check_cat_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CAT_N {
        return Err(Error::SizeGuard {
            what: "2-category ground-set size",
            limit: MAX_CAT_N,
            requested: n,
        });
    }
    Ok(())
}

/// The 2-category on binary relations: 1-morphisms are the permutations of
/// `{1..n}` as relations, `Hom(π, σ)` is the set of subrelations of `π ∩ σ`,
/// vertical composition is intersection, horizontal composition is relation
/// composition, and the identity 2-morphism of `π` is `π` itself.
pub struct RelationCat {
    n: usize,
    perms: Vec<BinaryRelation>,
}

impl RelationCat {
    pub fn new(n: usize) -> Result<Self> {
        check_cat_n(n)?;
        let perms = Permutation::all(n)?
            .iter()
            .map(Permutation::as_relation)
            .collect();
        Ok(Self { n, perms })
    }
}

impl TwoCategory for RelationCat {
    type Mor1 = BinaryRelation;
    type Mor2 = BinaryRelation;

    fn label(&self) -> String {
        "A".into()
    }

    fn n(&self) -> usize {
        self.n
    }

    fn one_morphisms(&self) -> &[BinaryRelation] {
        &self.perms
    }

    fn identity1(&self) -> BinaryRelation {
        BinaryRelation::identity(self.n).expect("n validated")
    }

    fn compose1(&self, f: &BinaryRelation, g: &BinaryRelation) -> BinaryRelation {
        f.compose(g).expect("same ground set")
    }

    fn inverse1(&self, f: &BinaryRelation) -> Option<BinaryRelation> {
        f.is_permutation().then(|| f.transpose())
    }

    fn two_hom(&self, f: &BinaryRelation, g: &BinaryRelation) -> Vec<BinaryRelation> {
        let mut subs = f
            .intersect(g)
            .expect("same ground set")
            .subrelations()
            .expect("at most n pairs");
        subs.sort();
        subs
    }

    fn vertical(&self, beta: &BinaryRelation, alpha: &BinaryRelation) -> BinaryRelation {
        beta.intersect(alpha).expect("same ground set")
    }

    fn horizontal(&self, beta: &BinaryRelation, alpha: &BinaryRelation) -> BinaryRelation {
        beta.compose(alpha).expect("same ground set")
    }

    fn identity2(&self, f: &BinaryRelation) -> BinaryRelation {
        f.clone()
    }
}

impl StarStructure for RelationCat {
    fn star1(&self, f: &BinaryRelation) -> BinaryRelation {
        f.transpose()
    }

    fn star2(&self, a: &BinaryRelation) -> BinaryRelation {
        a.transpose()
    }
}

/// The 2-category on partitions: 1-morphisms are the permutation diagrams,
/// `Hom(π, σ)` is the set of propagating partitions above both `π` and `σ`,
/// vertical composition is the lattice join, horizontal composition is the
/// partition product, and the identity 2-morphism of `π` is `π` itself.
pub struct PartitionCat {
    n: usize,
    perms: Vec<SetPartition>,
}

impl PartitionCat {
    pub fn new(n: usize) -> Result<Self> {
        check_cat_n(n)?;
        let perms = Permutation::all(n)?
            .iter()
            .map(SetPartition::from_permutation)
            .collect();
        Ok(Self { n, perms })
    }
}

impl TwoCategory for PartitionCat {
    type Mor1 = SetPartition;
    type Mor2 = SetPartition;

    fn label(&self) -> String {
        "B".into()
    }

    fn n(&self) -> usize {
        self.n
    }

    fn one_morphisms(&self) -> &[SetPartition] {
        &self.perms
    }

    fn identity1(&self) -> SetPartition {
        SetPartition::identity(self.n).expect("n validated")
    }

    fn compose1(&self, f: &SetPartition, g: &SetPartition) -> SetPartition {
        f.product(g).expect("same ground set")
    }

    fn inverse1(&self, f: &SetPartition) -> Option<SetPartition> {
        f.to_permutation().map(|_| f.swap_primes())
    }

    fn two_hom(&self, f: &SetPartition, g: &SetPartition) -> Vec<SetPartition> {
        let mut coarser = f
            .join(g)
            .expect("same ground set")
            .coarsenings()
            .expect("at most n blocks");
        coarser.sort();
        coarser
    }

    fn vertical(&self, beta: &SetPartition, alpha: &SetPartition) -> SetPartition {
        beta.join(alpha).expect("same ground set")
    }

    fn horizontal(&self, beta: &SetPartition, alpha: &SetPartition) -> SetPartition {
        beta.product(alpha).expect("same ground set")
    }

    fn identity2(&self, f: &SetPartition) -> SetPartition {
        f.clone()
    }
}

impl StarStructure for PartitionCat {
    fn star1(&self, f: &SetPartition) -> SetPartition {
        f.swap_primes()
    }

    fn star2(&self, a: &SetPartition) -> SetPartition {
        a.swap_primes()
    }
}

/// The 2-category of a finite monoid with an admissible partial order:
/// `Hom(s, t)` is the singleton `(s, t)` when `s ≤ t` and empty otherwise,
/// so all 2-compositions are forced.
pub struct OrderedMonoidCat<E> {
    label: String,
    n: usize,
    elements: Vec<E>,
    index: BTreeMap<E, usize>,
    product: Vec<Vec<usize>>,
    below: Vec<Vec<bool>>,
    unit: usize,
}

impl<E: Clone + Eq + Ord + Hash + Debug + Serialize> OrderedMonoidCat<E> {
    /// Builds the 2-category after verifying closure of the product, the
    /// unit laws, and admissibility of the order on both sides.
    pub fn new(
        label: &str,
        n: usize,
        elements: Vec<E>,
        unit: &E,
        product_fn: impl Fn(&E, &E) -> E,
        leq_fn: impl Fn(&E, &E) -> bool,
    ) -> Result<Self> {
        let index: BTreeMap<E, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidValue("duplicate monoid elements".into()));
        }
        let unit = *index
            .get(unit)
            .ok_or_else(|| Error::InvalidValue("unit not among elements".into()))?;
        let m = elements.len();
        let mut product = vec![vec![0usize; m]; m];
        for i in 0..m {
            for j in 0..m {
                let p = product_fn(&elements[i], &elements[j]);
                product[i][j] = *index.get(&p).ok_or_else(|| {
                    Error::InvalidValue(format!(
                        "product of {:?} and {:?} escapes the element set",
                        elements[i], elements[j]
                    ))
                })?;
            }
        }
        for i in 0..m {
            if product[unit][i] != i || product[i][unit] != i {
                return Err(Error::InvalidValue(format!(
                    "unit laws fail at {:?}",
                    elements[i]
                )));
            }
        }
        let below: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..m).map(|j| leq_fn(&elements[i], &elements[j])).collect())
            .collect();
        for i in 0..m {
            if !below[i][i] {
                return Err(Error::Order(format!("{:?} is not ≤ itself", elements[i])));
            }
            for j in 0..m {
                if below[i][j] {
                    if i != j && below[j][i] {
                        return Err(Error::Order(format!(
                            "{:?} and {:?} are ≤ each other",
                            elements[i], elements[j]
                        )));
                    }
                    for x in 0..m {
                        if !below[product[i][x]][product[j][x]] || !below[product[x][i]][product[x][j]]
                        {
                            return Err(Error::Order(format!(
                                "order is not admissible at {:?} ≤ {:?} with {:?}",
                                elements[i], elements[j], elements[x]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self {
            label: label.into(),
            n,
            elements: elements.clone(),
            index,
            product,
            below,
            unit,
        })
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn leq(&self, a: &E, b: &E) -> bool {
        self.below[self.index[a]][self.index[b]]
    }

    pub fn product_of(&self, a: &E, b: &E) -> &E {
        &self.elements[self.product[self.index[a]][self.index[b]]]
    }

    pub fn unit_element(&self) -> &E {
        &self.elements[self.unit]
    }

    pub fn is_invertible(&self, a: &E) -> bool {
        let i = self.index[&a.clone()];
        (0..self.elements.len())
            .any(|j| self.product[i][j] == self.unit && self.product[j][i] == self.unit)
    }
}

impl<E: Clone + Eq + Ord + Hash + Debug + Serialize> TwoCategory for OrderedMonoidCat<E> {
    type Mor1 = E;
    type Mor2 = (E, E);

    fn label(&self) -> String {
        self.label.clone()
    }

    fn n(&self) -> usize {
        self.n
    }

    fn one_morphisms(&self) -> &[E] {
        &self.elements
    }

    fn identity1(&self) -> E {
        self.elements[self.unit].clone()
    }

    fn compose1(&self, f: &E, g: &E) -> E {
        self.elements[self.product[self.index[f]][self.index[g]]].clone()
    }

    fn inverse1(&self, f: &E) -> Option<E> {
        let i = self.index[f];
        (0..self.elements.len())
            .find(|&j| self.product[i][j] == self.unit && self.product[j][i] == self.unit)
            .map(|j| self.elements[j].clone())
    }

    fn two_hom(&self, f: &E, g: &E) -> Vec<(E, E)> {
        if self.below[self.index[f]][self.index[g]] {
            vec![(f.clone(), g.clone())]
        } else {
            Vec::new()
        }
    }

    fn vertical(&self, beta: &(E, E), alpha: &(E, E)) -> (E, E) {
        assert_eq!(alpha.1, beta.0, "vertically non-composable 2-morphisms");
        (alpha.0.clone(), beta.1.clone())
    }

    fn horizontal(&self, beta: &(E, E), alpha: &(E, E)) -> (E, E) {
        (
            self.compose1(&beta.0, &alpha.0),
            self.compose1(&beta.1, &alpha.1),
        )
    }

    fn identity2(&self, f: &E) -> (E, E) {
        (f.clone(), f.clone())
    }
}

/// The ordered-monoid 2-category of the partial bijections of `{1..n}`
/// under the inclusion order of their relation forms.
pub fn ordered_isn(n: usize) -> Result<OrderedMonoidCat<BinaryRelation>> {
    check_cat_n(n)?;
    let perms: Vec<BinaryRelation> = Permutation::all(n)?
        .iter()
        .map(Permutation::as_relation)
        .collect();
    let elements = lower_set_closure(&perms)?;
    OrderedMonoidCat::new(
        "ordered-ISn",
        n,
        elements,
        &BinaryRelation::identity(n)?,
        |a, b| a.compose(b).expect("same ground set"),
        |a, b| a.leq(b).expect("same ground set"),
    )
}

/// The ordered-monoid 2-category of the factorizable block bijections of
/// `{1..n}` under the refinement order.
pub fn ordered_fstar(n: usize) -> Result<OrderedMonoidCat<SetPartition>> {
    check_cat_n(n)?;
    let elements = enumerate_fstar(n)?;
    OrderedMonoidCat::new(
        "ordered-Fstar",
        n,
        elements,
        &SetPartition::identity(n)?,
        |a, b| a.product(b).expect("same ground set"),
        |a, b| a.leq(b).expect("same ground set"),
    )
}

/// How a verification pass walks its search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { seed: u64, count: u64 },
}

impl CheckMode {
    fn mode_str(&self) -> String {
        match self {
            CheckMode::Exhaustive => "exhaustive".into(),
            CheckMode::Sampled { .. } => "sampled".into(),
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            CheckMode::Exhaustive => None,
            CheckMode::Sampled { seed, .. } => Some(*seed),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub status: String,
    pub checked: u64,
    pub witness: Option<serde_json::Value>,
}

impl AxiomCheck {
    fn pass(name: &str, checked: u64) -> Self {
        Self {
            name: name.into(),
            status: "pass".into(),
            checked,
            witness: None,
        }
    }

    fn fail(name: &str, checked: u64, witness: serde_json::Value) -> Self {
        Self {
            name: name.into(),
            status: "fail".into(),
            checked,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub category: String,
    pub n: usize,
    pub mode: String,
    pub seed: Option<u64>,
    pub axioms: Vec<AxiomCheck>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(AxiomCheck::passed)
    }

    pub fn find(&self, name: &str) -> Option<&AxiomCheck> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.gen_range(0..items.len())]
    }
}

/// Draws a vertically composable chain `f₀ → f₁ → … → f_k` of 1-morphisms
/// together with one 2-morphism per step. Retries while some hom along the
/// randomly chosen spine is empty (every `Hom(f, f)` is inhabited, so this
/// terminates).
fn sample_chain<C: TwoCategory>(
    cat: &C,
    sampler: &mut Sampler,
    steps: usize,
) -> (Vec<C::Mor1>, Vec<C::Mor2>) {
    loop {
        let spine: Vec<C::Mor1> = (0..=steps)
            .map(|_| sampler.pick(cat.one_morphisms()).clone())
            .collect();
        let mut cells = Vec::with_capacity(steps);
        let mut ok = true;
        for w in spine.windows(2) {
            let hom = cat.two_hom(&w[0], &w[1]);
            if hom.is_empty() {
                ok = false;
                break;
            }
            cells.push(sampler.pick(&hom).clone());
        }
        if ok {
            return (spine, cells);
        }
    }
}

fn jval<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("serializable value")
}

/// Verifies the strict 2-category axioms: associativity and units on both
/// composition levels, hom-typing closure, and the interchange law. Failures
/// are reported with a witness, never raised as errors.
pub fn check_axioms<C: TwoCategory>(cat: &C, mode: CheckMode) -> CheckReport {
    let mut axioms = Vec::new();
    axioms.push(check_one_associativity(cat, mode));
    axioms.push(check_one_units(cat));
    axioms.push(check_vertical_units(cat, mode));
    axioms.push(check_vertical_associativity(cat, mode));
    axioms.push(check_horizontal_units(cat, mode));
    axioms.push(check_horizontal_associativity(cat, mode));
    axioms.push(check_hom_typing(cat, mode));
    axioms.push(check_interchange(cat, mode));
    CheckReport {
        category: cat.label(),
        n: cat.n(),
        mode: mode.mode_str(),
        seed: mode.seed(),
        axioms,
    }
}

fn check_one_associativity<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "one-composition associativity";
    let mors = cat.one_morphisms();
    let mut verify = |f: &C::Mor1, g: &C::Mor1, h: &C::Mor1| -> Option<serde_json::Value> {
        let lhs = cat.compose1(&cat.compose1(f, g), h);
        let rhs = cat.compose1(f, &cat.compose1(g, h));
        (lhs != rhs).then(|| json!({"f": jval(f), "g": jval(g), "h": jval(h)}))
    };
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            for f in mors {
                for g in mors {
                    for h in mors {
                        checked += 1;
                        if let Some(w) = verify(f, g, h) {
                            return AxiomCheck::fail(name, checked, w);
                        }
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (f, g, h) = (
                    sampler.pick(mors).clone(),
                    sampler.pick(mors).clone(),
                    sampler.pick(mors).clone(),
                );
                checked += 1;
                if let Some(w) = verify(&f, &g, &h) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_one_units<C: TwoCategory>(cat: &C) -> AxiomCheck {
    let name = "one-composition units";
    let id = cat.identity1();
    let mut checked = 0;
    for f in cat.one_morphisms() {
        checked += 1;
        if &cat.compose1(&id, f) != f || &cat.compose1(f, &id) != f {
            return AxiomCheck::fail(name, checked, json!({"f": jval(f)}));
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_vertical_units<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "vertical units";
    let mors = cat.one_morphisms();
    let mut verify = |f: &C::Mor1, g: &C::Mor1, alpha: &C::Mor2| -> Option<serde_json::Value> {
        let left = cat.vertical(&cat.identity2(g), alpha);
        let right = cat.vertical(alpha, &cat.identity2(f));
        (&left != alpha || &right != alpha)
            .then(|| json!({"f": jval(f), "g": jval(g), "alpha": jval(alpha)}))
    };
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            for f in mors {
                for g in mors {
                    for alpha in cat.two_hom(f, g) {
                        checked += 1;
                        if let Some(w) = verify(f, g, &alpha) {
                            return AxiomCheck::fail(name, checked, w);
                        }
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (spine, cells) = sample_chain(cat, &mut sampler, 1);
                checked += 1;
                if let Some(w) = verify(&spine[0], &spine[1], &cells[0]) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_vertical_associativity<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "vertical associativity";
    let mors = cat.one_morphisms();
    let mut verify =
        |alpha: &C::Mor2, beta: &C::Mor2, gamma: &C::Mor2| -> Option<serde_json::Value> {
            let lhs = cat.vertical(&cat.vertical(gamma, beta), alpha);
            let rhs = cat.vertical(gamma, &cat.vertical(beta, alpha));
            (lhs != rhs).then(|| {
                json!({"alpha": jval(alpha), "beta": jval(beta), "gamma": jval(gamma)})
            })
        };
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            for f in mors {
                for g in mors {
                    let fg = cat.two_hom(f, g);
                    for h in mors {
                        let gh = cat.two_hom(g, h);
                        for k in mors {
                            let hk = cat.two_hom(h, k);
                            for alpha in &fg {
                                for beta in &gh {
                                    for gamma in &hk {
                                        checked += 1;
                                        if let Some(w) = verify(alpha, beta, gamma) {
                                            return AxiomCheck::fail(name, checked, w);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (_, cells) = sample_chain(cat, &mut sampler, 3);
                checked += 1;
                if let Some(w) = verify(&cells[0], &cells[1], &cells[2]) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_horizontal_units<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "horizontal units";
    let mors = cat.one_morphisms();
    let id2 = cat.identity2(&cat.identity1());
    let mut verify = |alpha: &C::Mor2| -> Option<serde_json::Value> {
        let left = cat.horizontal(&id2, alpha);
        let right = cat.horizontal(alpha, &id2);
        (&left != alpha || &right != alpha).then(|| json!({"alpha": jval(alpha)}))
    };
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            for f in mors {
                for g in mors {
                    for alpha in cat.two_hom(f, g) {
                        checked += 1;
                        if let Some(w) = verify(&alpha) {
                            return AxiomCheck::fail(name, checked, w);
                        }
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (_, cells) = sample_chain(cat, &mut sampler, 1);
                checked += 1;
                if let Some(w) = verify(&cells[0]) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_horizontal_associativity<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "horizontal associativity";
    let mors = cat.one_morphisms();
    let mut verify =
        |alpha: &C::Mor2, beta: &C::Mor2, gamma: &C::Mor2| -> Option<serde_json::Value> {
            let lhs = cat.horizontal(&cat.horizontal(gamma, beta), alpha);
            let rhs = cat.horizontal(gamma, &cat.horizontal(beta, alpha));
            (lhs != rhs).then(|| {
                json!({"alpha": jval(alpha), "beta": jval(beta), "gamma": jval(gamma)})
            })
        };
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            let mut all_cells = Vec::new();
            for f in mors {
                for g in mors {
                    all_cells.extend(cat.two_hom(f, g));
                }
            }
            for alpha in &all_cells {
                for beta in &all_cells {
                    for gamma in &all_cells {
                        checked += 1;
                        if let Some(w) = verify(alpha, beta, gamma) {
                            return AxiomCheck::fail(name, checked, w);
                        }
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (_, a) = sample_chain(cat, &mut sampler, 1);
                let (_, b) = sample_chain(cat, &mut sampler, 1);
                let (_, c) = sample_chain(cat, &mut sampler, 1);
                checked += 1;
                if let Some(w) = verify(&a[0], &b[0], &c[0]) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_hom_typing<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "hom typing";
    let mors = cat.one_morphisms();
    let contains = |f: &C::Mor1, g: &C::Mor1, value: &C::Mor2| -> bool {
        cat.two_hom(f, g).contains(value)
    };
    // identity membership is cheap; always exhaustive
    let mut checked = 0;
    for f in mors {
        checked += 1;
        if !contains(f, f, &cat.identity2(f)) {
            return AxiomCheck::fail(name, checked, json!({"identity2_of": jval(f)}));
        }
    }
    let mut verify_pair = |pi: &C::Mor1,
                           sigma: &C::Mor1,
                           rho: &C::Mor1,
                           alpha: &C::Mor2,
                           beta: &C::Mor2|
     -> Option<serde_json::Value> {
        // vertical: α: π→σ, β: σ→ρ
        let v = cat.vertical(beta, alpha);
        if !contains(pi, rho, &v) {
            return Some(json!({"kind": "vertical", "alpha": jval(alpha), "beta": jval(beta)}));
        }
        None
    };
    let mut verify_hpair = |pi: &C::Mor1,
                            sigma: &C::Mor1,
                            tau: &C::Mor1,
                            rho: &C::Mor1,
                            alpha: &C::Mor2,
                            beta: &C::Mor2|
     -> Option<serde_json::Value> {
        let h = cat.horizontal(beta, alpha);
        let src = cat.compose1(tau, pi);
        let dst = cat.compose1(rho, sigma);
        if !contains(&src, &dst, &h) {
            return Some(json!({"kind": "horizontal", "alpha": jval(alpha), "beta": jval(beta)}));
        }
        None
    };
    match mode {
        CheckMode::Exhaustive => {
            for pi in mors {
                for sigma in mors {
                    let lower = cat.two_hom(pi, sigma);
                    for rho in mors {
                        let upper = cat.two_hom(sigma, rho);
                        for alpha in &lower {
                            for beta in &upper {
                                checked += 1;
                                if let Some(w) = verify_pair(pi, sigma, rho, alpha, beta) {
                                    return AxiomCheck::fail(name, checked, w);
                                }
                            }
                        }
                    }
                    for tau in mors {
                        for rho in mors {
                            let right = cat.two_hom(tau, rho);
                            for alpha in &lower {
                                for beta in &right {
                                    checked += 1;
                                    if let Some(w) = verify_hpair(pi, sigma, tau, rho, alpha, beta)
                                    {
                                        return AxiomCheck::fail(name, checked, w);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (spine, cells) = sample_chain(cat, &mut sampler, 2);
                checked += 1;
                if let Some(w) = verify_pair(&spine[0], &spine[1], &spine[2], &cells[0], &cells[1])
                {
                    return AxiomCheck::fail(name, checked, w);
                }
                let (s1, c1) = sample_chain(cat, &mut sampler, 1);
                let (s2, c2) = sample_chain(cat, &mut sampler, 1);
                checked += 1;
                if let Some(w) = verify_hpair(&s1[0], &s1[1], &s2[0], &s2[1], &c1[0], &c2[0]) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

fn check_interchange<C: TwoCategory>(cat: &C, mode: CheckMode) -> AxiomCheck {
    let name = "interchange";
    let mors = cat.one_morphisms();
    let mut verify = |alpha: &C::Mor2,
                      gamma: &C::Mor2,
                      beta: &C::Mor2,
                      delta: &C::Mor2|
     -> Option<serde_json::Value> {
        // α: π→σ, γ: σ→ρ on the right; β: τ→μ, δ: μ→ν on the left
        let lhs = cat.vertical(&cat.horizontal(delta, gamma), &cat.horizontal(beta, alpha));
        let rhs = cat.horizontal(&cat.vertical(delta, beta), &cat.vertical(gamma, alpha));
        (lhs != rhs).then(|| {
            json!({
                "alpha": jval(alpha), "beta": jval(beta),
                "gamma": jval(gamma), "delta": jval(delta),
            })
        })
    };
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            let mut chains: Vec<(C::Mor2, C::Mor2)> = Vec::new();
            for pi in mors {
                for sigma in mors {
                    let lower = cat.two_hom(pi, sigma);
                    for rho in mors {
                        let upper = cat.two_hom(sigma, rho);
                        for alpha in &lower {
                            for gamma in &upper {
                                chains.push((alpha.clone(), gamma.clone()));
                            }
                        }
                    }
                }
            }
            for (alpha, gamma) in &chains {
                for (beta, delta) in &chains {
                    checked += 1;
                    if let Some(w) = verify(alpha, gamma, beta, delta) {
                        return AxiomCheck::fail(name, checked, w);
                    }
                }
            }
        }
        CheckMode::Sampled { seed, count } => {
            let mut sampler = Sampler::new(seed);
            for _ in 0..count {
                let (_, right) = sample_chain(cat, &mut sampler, 2);
                let (_, left) = sample_chain(cat, &mut sampler, 2);
                checked += 1;
                if let Some(w) = verify(&right[0], &right[1], &left[0], &left[1]) {
                    return AxiomCheck::fail(name, checked, w);
                }
            }
        }
    }
    AxiomCheck::pass(name, checked)
}

/// Verifies that composing with an invertible 1-morphism translates
/// hom-sets bijectively and distributes over vertical composition, on the
/// left and on the right.
pub fn check_translation_lemmas<C: TwoCategory>(cat: &C, mode: CheckMode) -> CheckReport {
    let mors = cat.one_morphisms();
    let mut axioms = Vec::new();

    let bijection = |pi: &C::Mor1, sigma: &C::Mor1, tau: &C::Mor1, left: bool| -> Option<serde_json::Value> {
        let source = cat.two_hom(sigma, tau);
        let (f, g) = if left {
            (cat.compose1(pi, sigma), cat.compose1(pi, tau))
        } else {
            (cat.compose1(sigma, pi), cat.compose1(tau, pi))
        };
        let target = cat.two_hom(&f, &g);
        let id_pi = cat.identity2(pi);
        let mut image: Vec<C::Mor2> = source
            .iter()
            .map(|alpha| {
                if left {
                    cat.horizontal(&id_pi, alpha)
                } else {
                    cat.horizontal(alpha, &id_pi)
                }
            })
            .collect();
        image.sort();
        let distinct = image.windows(2).all(|w| w[0] != w[1]);
        let mut expected = target.clone();
        expected.sort();
        (!distinct || image != expected).then(|| {
            json!({
                "pi": jval(pi), "sigma": jval(sigma), "tau": jval(tau),
                "side": if left { "left" } else { "right" },
            })
        })
    };

    let distributivity = |pi: &C::Mor1,
                          sigma: &C::Mor1,
                          tau: &C::Mor1,
                          rho: &C::Mor1,
                          left: bool|
     -> Option<serde_json::Value> {
        let id_pi = cat.identity2(pi);
        for alpha in cat.two_hom(sigma, tau) {
            for beta in cat.two_hom(tau, rho) {
                let v = cat.vertical(&beta, &alpha);
                let (lhs, rhs) = if left {
                    (
                        cat.horizontal(&id_pi, &v),
                        cat.vertical(&cat.horizontal(&id_pi, &beta), &cat.horizontal(&id_pi, &alpha)),
                    )
                } else {
                    (
                        cat.horizontal(&v, &id_pi),
                        cat.vertical(&cat.horizontal(&beta, &id_pi), &cat.horizontal(&alpha, &id_pi)),
                    )
                };
                if lhs != rhs {
                    return Some(json!({
                        "pi": jval(pi), "alpha": jval(&alpha), "beta": jval(&beta),
                        "side": if left { "left" } else { "right" },
                    }));
                }
            }
        }
        None
    };

    for (side, left) in [("left", true), ("right", false)] {
        let bij_name = format!("{side} translation bijection");
        let dist_name = format!("{side} translation distributivity");
        let mut bij = None;
        let mut dist = None;
        let mut bij_checked = 0;
        let mut dist_checked = 0;
        match mode {
            CheckMode::Exhaustive => {
                'bij: for pi in mors {
                    for sigma in mors {
                        for tau in mors {
                            bij_checked += 1;
                            if let Some(w) = bijection(pi, sigma, tau, left) {
                                bij = Some(w);
                                break 'bij;
                            }
                        }
                    }
                }
                'dist: for pi in mors {
                    for sigma in mors {
                        for tau in mors {
                            for rho in mors {
                                dist_checked += 1;
                                if let Some(w) = distributivity(pi, sigma, tau, rho, left) {
                                    dist = Some(w);
                                    break 'dist;
                                }
                            }
                        }
                    }
                }
            }
            CheckMode::Sampled { seed, count } => {
                let mut sampler = Sampler::new(seed);
                for _ in 0..count {
                    let pi = sampler.pick(mors).clone();
                    let sigma = sampler.pick(mors).clone();
                    let tau = sampler.pick(mors).clone();
                    let rho = sampler.pick(mors).clone();
                    bij_checked += 1;
                    if bij.is_none() {
                        bij = bijection(&pi, &sigma, &tau, left);
                    }
                    dist_checked += 1;
                    if dist.is_none() {
                        dist = distributivity(&pi, &sigma, &tau, &rho, left);
                    }
                    if bij.is_some() && dist.is_some() {
                        break;
                    }
                }
            }
        }
        axioms.push(match bij {
            None => AxiomCheck::pass(&bij_name, bij_checked),
            Some(w) => AxiomCheck::fail(&bij_name, bij_checked, w),
        });
        axioms.push(match dist {
            None => AxiomCheck::pass(&dist_name, dist_checked),
            Some(w) => AxiomCheck::fail(&dist_name, dist_checked, w),
        });
    }

    CheckReport {
        category: cat.label(),
        n: cat.n(),
        mode: mode.mode_str(),
        seed: mode.seed(),
        axioms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_cat_axioms_exhaustive() {
        for n in 1..=2 {
            let cat = RelationCat::new(n).unwrap();
            let report = check_axioms(&cat, CheckMode::Exhaustive);
            assert!(report.all_passed(), "{report:?}");
        }
    }

    #[test]
    fn partition_cat_axioms_exhaustive() {
        for n in 1..=2 {
            let cat = PartitionCat::new(n).unwrap();
            let report = check_axioms(&cat, CheckMode::Exhaustive);
            assert!(report.all_passed(), "{report:?}");
        }
    }

    #[test]
    fn sampled_axioms_n3() {
        let cat = RelationCat::new(3).unwrap();
        let report = check_axioms(
            &cat,
            CheckMode::Sampled {
                seed: 7,
                count: 2000,
            },
        );
        assert!(report.all_passed(), "{report:?}");
        let cat = PartitionCat::new(3).unwrap();
        let report = check_axioms(
            &cat,
            CheckMode::Sampled {
                seed: 7,
                count: 2000,
            },
        );
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn ordered_monoid_axioms() {
        let cat = ordered_isn(2).unwrap();
        assert!(check_axioms(&cat, CheckMode::Exhaustive).all_passed());
        let cat = ordered_fstar(2).unwrap();
        assert!(check_axioms(&cat, CheckMode::Exhaustive).all_passed());
    }

    #[test]
    fn ordered_monoid_hom_shape() {
        let cat = ordered_isn(2).unwrap();
        let id = cat.identity1();
        let tau = BinaryRelation::empty(2).unwrap();
        assert_eq!(cat.two_hom(&tau, &id).len(), 1);
        assert!(cat.two_hom(&id, &tau).is_empty());
        for s in cat.one_morphisms() {
            assert_eq!(cat.two_hom(s, s).len(), 1);
        }

        let cat = ordered_fstar(2).unwrap();
        let eps = SetPartition::identity(2).unwrap();
        let tau = SetPartition::single_block(2).unwrap();
        assert_eq!(cat.two_hom(&eps, &tau).len(), 1);
        assert!(cat.two_hom(&tau, &eps).is_empty());
    }

    #[test]
    fn hom_tables_for_n2() {
        let cat = RelationCat::new(2).unwrap();
        let eps = BinaryRelation::identity(2).unwrap();
        let sigma = BinaryRelation::new(2, &[(2, 1), (1, 2)]).unwrap();
        assert_eq!(cat.two_hom(&eps, &eps).len(), 4);
        assert_eq!(cat.two_hom(&eps, &sigma).len(), 1);
        assert_eq!(cat.two_hom(&sigma, &sigma).len(), 4);

        let cat = PartitionCat::new(2).unwrap();
        let eps = SetPartition::identity(2).unwrap();
        let sig = SetPartition::parse(2, &[&["1", "2'"], &["2", "1'"]]).unwrap();
        let tau = SetPartition::single_block(2).unwrap();
        assert_eq!(cat.two_hom(&eps, &eps), {
            let mut v = vec![eps.clone(), tau.clone()];
            v.sort();
            v
        });
        assert_eq!(cat.two_hom(&eps, &sig), vec![tau.clone()]);
    }

    #[test]
    fn identity_is_two_sided_vertical_unit() {
        let cat = RelationCat::new(2).unwrap();
        for pi in cat.one_morphisms() {
            for sigma in cat.one_morphisms() {
                for alpha in cat.two_hom(pi, sigma) {
                    assert_eq!(cat.vertical(&cat.identity2(sigma), &alpha), alpha);
                    assert_eq!(cat.vertical(&alpha, &cat.identity2(pi)), alpha);
                }
            }
        }
    }

    #[test]
    fn hom_membership_bell_count_n3() {
        let cat = PartitionCat::new(3).unwrap();
        let eps = SetPartition::identity(3).unwrap();
        assert_eq!(cat.two_hom(&eps, &eps).len(), 5);
    }

    #[test]
    fn translation_lemmas_pass() {
        for n in 1..=2 {
            let cat = RelationCat::new(n).unwrap();
            assert!(check_translation_lemmas(&cat, CheckMode::Exhaustive).all_passed());
            let cat = PartitionCat::new(n).unwrap();
            assert!(check_translation_lemmas(&cat, CheckMode::Exhaustive).all_passed());
        }
        let cat = RelationCat::new(3).unwrap();
        assert!(check_translation_lemmas(
            &cat,
            CheckMode::Sampled {
                seed: 11,
                count: 300
            }
        )
        .all_passed());
    }

    #[test]
    fn translation_by_swap_maps_identity_homs() {
        // translating Hom(ε,ε) by σ lands in Hom(σ,σ)
        let cat = PartitionCat::new(2).unwrap();
        let eps = SetPartition::identity(2).unwrap();
        let sig = SetPartition::parse(2, &[&["1", "2'"], &["2", "1'"]]).unwrap();
        let image: Vec<SetPartition> = cat
            .two_hom(&eps, &eps)
            .iter()
            .map(|alpha| cat.horizontal(&cat.identity2(&sig), alpha))
            .collect();
        let mut image = image;
        image.sort();
        assert_eq!(image, cat.two_hom(&sig, &sig));
    }

    /// Wrapper that corrupts a single vertical composition, for checking
    /// that the axiom checker actually detects violations.
    struct CorruptedVertical {
        inner: RelationCat,
        at: (BinaryRelation, BinaryRelation),
    }

    impl TwoCategory for CorruptedVertical {
        type Mor1 = BinaryRelation;
        type Mor2 = BinaryRelation;

        fn label(&self) -> String {
            "A-corrupted".into()
        }
        fn n(&self) -> usize {
            self.inner.n()
        }
        fn one_morphisms(&self) -> &[BinaryRelation] {
            self.inner.one_morphisms()
        }
        fn identity1(&self) -> BinaryRelation {
            self.inner.identity1()
        }
        fn compose1(&self, f: &BinaryRelation, g: &BinaryRelation) -> BinaryRelation {
            self.inner.compose1(f, g)
        }
        fn inverse1(&self, f: &BinaryRelation) -> Option<BinaryRelation> {
            self.inner.inverse1(f)
        }
        fn two_hom(&self, f: &BinaryRelation, g: &BinaryRelation) -> Vec<BinaryRelation> {
            self.inner.two_hom(f, g)
        }
        fn vertical(&self, beta: &BinaryRelation, alpha: &BinaryRelation) -> BinaryRelation {
            if (beta, alpha) == (&self.at.0, &self.at.1) {
                // swap the intended intersection for a union
                return beta.union(alpha).expect("same ground set");
            }
            self.inner.vertical(beta, alpha)
        }
        fn horizontal(&self, beta: &BinaryRelation, alpha: &BinaryRelation) -> BinaryRelation {
            self.inner.horizontal(beta, alpha)
        }
        fn identity2(&self, f: &BinaryRelation) -> BinaryRelation {
            self.inner.identity2(f)
        }
    }

    #[test]
    fn corrupted_vertical_composition_is_detected() {
        let inner = RelationCat::new(2).unwrap();
        let eps = BinaryRelation::identity(2).unwrap();
        let alpha = BinaryRelation::new(2, &[(1, 1)]).unwrap();
        let cat = CorruptedVertical {
            inner,
            at: (eps.clone(), alpha.clone()),
        };
        let report = check_axioms(&cat, CheckMode::Exhaustive);
        assert!(!report.all_passed());
        let failed: Vec<&str> = report
            .axioms
            .iter()
            .filter(|a| !a.passed())
            .map(|a| a.name.as_str())
            .collect();
        assert!(!failed.is_empty());
        for axiom in report.axioms.iter().filter(|a| !a.passed()) {
            assert!(axiom.witness.is_some());
        }
    }

    #[test]
    fn report_json_shape() {
        let cat = RelationCat::new(1).unwrap();
        let report = check_axioms(&cat, CheckMode::Exhaustive);
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["category"], "A");
        assert_eq!(value["mode"], "exhaustive");
        assert!(value["seed"].is_null());
        assert_eq!(value["axioms"][0]["status"], "pass");
    }
}

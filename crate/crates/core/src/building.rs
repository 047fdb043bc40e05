//! Building sets, ground-set orders and built matroids.

use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::lattice::{GeomLattice, Matroid};
use std::collections::HashSet;
use std::sync::Arc;

/// Structural cross-checks in validation run up to this lattice size.
pub const STRUCTURAL_CHECK_LIMIT: usize = 2000;

/// A total order ⊴ on `0..n`. `order[k]` is the k-th smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl GroundSet {
    pub fn natural(n: usize) -> GroundSet {
        GroundSet { order: (0..n).collect(), pos: (0..n).collect() }
    }

    /// Elements listed from ⊴-smallest to ⊴-largest.
    pub fn from_sequence(order: Vec<usize>) -> Result<GroundSet> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (k, &e) in order.iter().enumerate() {
            if e >= n || pos[e] != usize::MAX {
                return Err(Error::BadParameters(format!("order {order:?} is not a permutation of 0..{n}")));
            }
            pos[e] = k;
        }
        Ok(GroundSet { order, pos })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.order
    }

    /// Position of `e` in the order (0 = smallest).
    pub fn pos(&self, e: usize) -> usize {
        self.pos[e]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.pos[a] < self.pos[b]
    }

    pub fn min_of(&self, s: Flat) -> Option<usize> {
        s.elements().min_by_key(|&e| self.pos[e])
    }

    pub fn max_of(&self, s: Flat) -> Option<usize> {
        s.elements().max_by_key(|&e| self.pos[e])
    }

    pub fn max_element(&self) -> Option<usize> {
        self.order.last().copied()
    }

    pub fn sorted(&self, s: Flat) -> Vec<usize> {
        let mut v = s.to_vec();
        v.sort_by_key(|&e| self.pos[e]);
        v
    }

    /// The induced order on the elements of `keep`, relabeled as by
    /// [`crate::flat::compress`].
    pub fn compressed(&self, keep: u64) -> GroundSet {
        let order = self
            .order
            .iter()
            .filter(|&&e| keep >> e & 1 == 1)
            .map(|&e| crate::flat::compress_index(e, keep).unwrap())
            .collect();
        GroundSet::from_sequence(order).unwrap()
    }

    /// Adds element `n` as the new maximum.
    pub fn with_new_max(&self) -> GroundSet {
        let mut order = self.order.clone();
        order.push(order.len());
        GroundSet::from_sequence(order).unwrap()
    }
}

/// A building set of a geometric lattice, kept in lattice order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildingSet {
    elements: Vec<Flat>,
}

impl BuildingSet {
    pub(crate) fn trusted(l: &GeomLattice, elements: Vec<Flat>) -> BuildingSet {
        let mut elements = elements;
        elements.sort_by_key(|&f| l.index_of(f).expect("building set element must be a flat"));
        elements.dedup();
        BuildingSet { elements }
    }

    /// Elements in increasing rank.
    pub fn elements(&self) -> &[Flat] {
        &self.elements
    }

    pub fn contains(&self, f: Flat) -> bool {
        self.elements.contains(&f)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Flat> + '_ {
        self.elements.iter().copied()
    }

    pub fn maximal(&self) -> Vec<Flat> {
        self.elements
            .iter()
            .copied()
            .filter(|&f| !self.elements.iter().any(|&g| f.is_proper_subset(g)))
            .collect()
    }

    pub fn is_subset(&self, other: &BuildingSet) -> bool {
        self.elements.iter().all(|&f| other.elements.contains(&f))
    }
}

/// Irreducible flats: the smallest building set.
pub fn g_min(l: &GeomLattice) -> BuildingSet {
    let elements = l.flats().iter().copied().skip(1).filter(|&f| l.is_irreducible(f)).collect();
    BuildingSet::trusted(l, elements)
}

/// Every flat except the bottom.
pub fn g_max(l: &GeomLattice) -> BuildingSet {
    BuildingSet::trusted(l, l.flats()[1..].to_vec())
}

/// Maximal elements of `bset` below `f`, by decreasing rank scan.
pub(crate) fn factors_in(bset: &[Flat], f: Flat) -> Vec<Flat> {
    let mut picked: Vec<Flat> = Vec::new();
    for &g in bset.iter().rev() {
        if g.is_subset(f) && !picked.iter().any(|p| g.is_subset(*p)) {
            picked.push(g);
        }
    }
    picked.sort_by_key(|g| g.min_element());
    picked
}

/// Accepts `s` iff it contains every irreducible flat and is closed under
/// joins of pairs that meet above the bottom. On lattices with at most
/// [`STRUCTURAL_CHECK_LIMIT`] flats the product decomposition of every lower
/// interval is verified as well.
pub fn validate_building_set(l: &GeomLattice, s: &[Flat]) -> Result<BuildingSet> {
    for &f in s {
        l.check_flat(f)?;
        if f == l.bottom() {
            return Err(Error::ContainsBottom);
        }
    }
    let set: HashSet<Flat> = s.iter().copied().collect();
    for f in g_min(l).iter() {
        if !set.contains(&f) {
            return Err(Error::MissingIrreducible(f));
        }
    }
    let bs = BuildingSet::trusted(l, s.to_vec());
    let el = bs.elements();
    for (i, &a) in el.iter().enumerate() {
        for &b in &el[i + 1..] {
            if !a.intersection(b).is_empty() && !set.contains(&l.join(a, b)) {
                return Err(Error::JoinClosureViolation(a, b));
            }
        }
    }
    if l.len() <= STRUCTURAL_CHECK_LIMIT {
        structural_check(l, &bs)?;
    }
    Ok(bs)
}

/// The definition itself: for every flat `F` the join map from the product
/// of the intervals below its factors onto `[0̂, F]` is an isomorphism.
pub fn structural_check(l: &GeomLattice, bs: &BuildingSet) -> Result<()> {
    for &f in &l.flats()[1..] {
        let fac = factors_in(bs.elements(), f);
        let intervals: Vec<Vec<Flat>> = fac.iter().map(|&g| l.interval(Flat::EMPTY, g)).collect();
        let total: usize = intervals.iter().map(|v| v.len()).product();
        let target = l.interval(Flat::EMPTY, f);
        if total != target.len() {
            return Err(Error::StructuralMismatch(f));
        }
        let mut seen = HashSet::new();
        let mut idx = vec![0usize; intervals.len()];
        loop {
            let parts: Vec<Flat> = idx.iter().zip(&intervals).map(|(&i, v)| v[i]).collect();
            let j = l.join_all(parts.iter().copied());
            if !seen.insert(j) || parts.iter().zip(&fac).any(|(&h, &g)| j.intersection(g) != h) {
                return Err(Error::StructuralMismatch(f));
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < intervals[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(())
}

/// A loopless matroid with a building set on its lattice of flats and a total
/// order on its ground set. Values are immutable and cheap to clone.
#[derive(Debug, Clone)]
pub struct BuiltMatroid {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    matroid: Matroid,
    bset: BuildingSet,
    order: GroundSet,
    maximal: Vec<Flat>,
    in_bset: Vec<bool>,
    factor_table: Vec<Vec<Flat>>,
}

impl PartialEq for BuiltMatroid {
    fn eq(&self, other: &BuiltMatroid) -> bool {
        self.matroid() == other.matroid() && self.bset() == other.bset() && self.order() == other.order()
    }
}

impl Eq for BuiltMatroid {}

impl BuiltMatroid {
    /// Validates `flats` as a building set of `matroid`.
    pub fn new(matroid: Matroid, flats: &[Flat], order: GroundSet) -> Result<BuiltMatroid> {
        if order.n() != matroid.n() {
            return Err(Error::BadParameters(format!(
                "order has {} elements, matroid has {}",
                order.n(),
                matroid.n()
            )));
        }
        let bset = validate_building_set(matroid.lattice(), flats)?;
        Ok(BuiltMatroid::trusted(matroid, bset, order))
    }

    pub fn with_min(matroid: Matroid) -> BuiltMatroid {
        let b = g_min(matroid.lattice());
        let n = matroid.n();
        BuiltMatroid::trusted(matroid, b, GroundSet::natural(n))
    }

    pub fn with_max(matroid: Matroid) -> BuiltMatroid {
        let b = g_max(matroid.lattice());
        let n = matroid.n();
        BuiltMatroid::trusted(matroid, b, GroundSet::natural(n))
    }

    pub(crate) fn trusted(matroid: Matroid, bset: BuildingSet, order: GroundSet) -> BuiltMatroid {
        let l = matroid.lattice();
        let maximal = bset.maximal();
        let mut in_bset = vec![false; l.len()];
        for f in bset.iter() {
            in_bset[l.index_of(f).unwrap()] = true;
        }
        let factor_table = l.flats().iter().map(|&f| factors_in(bset.elements(), f)).collect();
        BuiltMatroid { inner: Arc::new(Inner { matroid, bset, order, maximal, in_bset, factor_table }) }
    }

    /// Same matroid and building set with another order.
    pub fn with_order(&self, order: GroundSet) -> Result<BuiltMatroid> {
        if order.n() != self.n() {
            return Err(Error::BadParameters("order has the wrong size".into()));
        }
        Ok(BuiltMatroid::trusted(self.matroid().clone(), self.bset().clone(), order))
    }

    pub fn matroid(&self) -> &Matroid {
        &self.inner.matroid
    }

    pub fn lattice(&self) -> &GeomLattice {
        self.inner.matroid.lattice()
    }

    pub fn bset(&self) -> &BuildingSet {
        &self.inner.bset
    }

    pub fn order(&self) -> &GroundSet {
        &self.inner.order
    }

    pub fn n(&self) -> usize {
        self.inner.matroid.n()
    }

    pub fn rank(&self) -> usize {
        self.inner.matroid.rank()
    }

    pub fn top(&self) -> Flat {
        self.lattice().top()
    }

    pub fn rank_of(&self, f: Flat) -> usize {
        self.lattice().rank_of(f)
    }

    pub fn in_bset(&self, f: Flat) -> bool {
        self.lattice().index_of(f).is_some_and(|i| self.inner.in_bset[i])
    }

    pub fn max_elements(&self) -> &[Flat] {
        &self.inner.maximal
    }

    pub fn is_max_element(&self, f: Flat) -> bool {
        self.inner.maximal.contains(&f)
    }

    /// `1̂ ∈ G`.
    pub fn is_irreducible(&self) -> bool {
        self.n() > 0 && self.in_bset(self.top())
    }

    /// The G-factors of the flat `f`, ordered by least element.
    pub fn factors(&self, f: Flat) -> &[Flat] {
        let i = self.lattice().index_of(f).expect("factors of a non-flat");
        &self.inner.factor_table[i]
    }

    pub fn try_factors(&self, f: Flat) -> Result<Vec<Flat>> {
        self.lattice().check_flat(f)?;
        Ok(self.factors(f).to_vec())
    }
}

/// The G-factors of `f`.
pub fn factors(bm: &BuiltMatroid, f: Flat) -> Vec<Flat> {
    bm.factors(f).to_vec()
}

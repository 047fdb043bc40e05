//! Nested sets: the nesting test, face and facet enumeration of the nested
//! set complexes, local intervals, composition and completion.

use crate::building::BuiltMatroid;
use crate::complete::{chain_unchecked, in_contracted};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::flat::{compress, expand, Flat};
use crate::ops::interval;

/// Tests the nesting condition through the forest structure: any two
/// incomparable elements are disjoint, and every family of siblings (the
/// maximal elements below a common element, or the roots) is exactly the set
/// of factors of its join.
pub fn is_nested(bm: &BuiltMatroid, s: &[Flat]) -> bool {
    let l = bm.lattice();
    if s.iter().any(|&f| !bm.in_bset(f)) {
        return false;
    }
    let mut el = s.to_vec();
    el.sort_by_key(|&f| l.index_of(f));
    el.dedup();
    for (i, &a) in el.iter().enumerate() {
        for &b in &el[i + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) && !a.intersection(b).is_empty() {
                return false;
            }
        }
    }
    let parents = parent_indices(&el);
    let mut groups: Vec<(Option<usize>, Vec<Flat>)> = Vec::new();
    for (i, p) in parents.iter().enumerate() {
        match groups.iter_mut().find(|(q, _)| q == p) {
            Some((_, g)) => g.push(el[i]),
            None => groups.push((*p, vec![el[i]])),
        }
    }
    groups.into_iter().all(|(_, mut g)| {
        if g.len() < 2 {
            return true;
        }
        g.sort_by_key(|f| f.min_element());
        bm.factors(l.join_all(g.iter().copied())) == g.as_slice()
    })
}

/// The nesting condition read literally: every antichain of size at least
/// two joins outside the building set. Exponential; for small inputs.
pub fn is_nested_bruteforce(bm: &BuiltMatroid, s: &[Flat]) -> bool {
    let l = bm.lattice();
    if s.iter().any(|&f| !bm.in_bset(f)) {
        return false;
    }
    let mut el = s.to_vec();
    el.sort();
    el.dedup();
    assert!(el.len() <= 24, "brute-force nesting test is exponential");
    for mask in 1u32..1 << el.len() {
        if mask.count_ones() < 2 {
            continue;
        }
        let a: Vec<Flat> = (0..el.len()).filter(|i| mask >> i & 1 == 1).map(|i| el[i]).collect();
        let antichain = a.iter().all(|&x| a.iter().all(|&y| x == y || !x.is_subset(y)));
        if antichain && bm.in_bset(l.join_all(a.iter().copied())) {
            return false;
        }
    }
    true
}

/// For elements sorted by rank, the index of the smallest strict superset.
fn parent_indices(el: &[Flat]) -> Vec<Option<usize>> {
    (0..el.len()).map(|i| (i + 1..el.len()).find(|&j| el[i].is_proper_subset(el[j]))).collect()
}

/// A nested set with its forest structure: parents and the bottoms `J^G`
/// of the local intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedSet {
    elements: Vec<Flat>,
    parent: Vec<Option<usize>>,
    jbottom: Vec<Flat>,
}

impl NestedSet {
    pub fn new(bm: &BuiltMatroid, elements: &[Flat]) -> Result<NestedSet> {
        if !is_nested(bm, elements) {
            return Err(Error::NotNested);
        }
        Ok(NestedSet::trusted(bm, elements.to_vec()))
    }

    pub fn empty() -> NestedSet {
        NestedSet { elements: Vec::new(), parent: Vec::new(), jbottom: Vec::new() }
    }

    pub(crate) fn trusted(bm: &BuiltMatroid, mut elements: Vec<Flat>) -> NestedSet {
        let l = bm.lattice();
        elements.sort_by_key(|&f| l.index_of(f));
        elements.dedup();
        let parent = parent_indices(&elements);
        let jbottom = (0..elements.len())
            .map(|i| l.join_all((0..i).filter(|&j| parent[j] == Some(i)).map(|j| elements[j])))
            .collect();
        NestedSet { elements, parent, jbottom }
    }

    /// Elements in lattice order (increasing rank).
    pub fn elements(&self) -> &[Flat] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, f: Flat) -> bool {
        self.elements.contains(&f)
    }

    fn idx(&self, g: Flat) -> Option<usize> {
        self.elements.iter().position(|&x| x == g)
    }

    /// The smallest element of the set strictly above `g`.
    pub fn parent(&self, g: Flat) -> Option<Flat> {
        self.idx(g).and_then(|i| self.parent[i]).map(|j| self.elements[j])
    }

    /// `J^g`, the join of the elements strictly below `g`.
    pub fn jbottom(&self, g: Flat) -> Option<Flat> {
        self.idx(g).map(|i| self.jbottom[i])
    }

    pub fn children(&self, g: Flat) -> Vec<Flat> {
        match self.idx(g) {
            Some(i) => (0..self.len()).filter(|&j| self.parent[j] == Some(i)).map(|j| self.elements[j]).collect(),
            None => Vec::new(),
        }
    }

    pub fn roots(&self) -> Vec<Flat> {
        (0..self.len()).filter(|&j| self.parent[j].is_none()).map(|j| self.elements[j]).collect()
    }
}

/// The pairs `(G, J^G)` for `G` in `S ∪ max G`, in lattice order. For an
/// irreducible built matroid this is `S ∪ {1̂}`.
pub fn local_bottoms(bm: &BuiltMatroid, s: &NestedSet) -> Vec<(Flat, Flat)> {
    let l = bm.lattice();
    let mut tops: Vec<Flat> = s.elements().to_vec();
    tops.extend(bm.max_elements().iter().copied().filter(|m| !s.contains(*m)));
    tops.sort_by_key(|&f| l.index_of(f));
    tops.into_iter()
        .map(|g| {
            let below = s.elements().iter().copied().filter(|&h| h.is_proper_subset(g));
            (g, l.join_all(below))
        })
        .collect()
}

/// The interval `[J^G, G]` with its induced building set, relabeled onto
/// the elements of `G ∖ J^G`.
#[derive(Debug, Clone)]
pub struct LocalInterval {
    pub bottom: Flat,
    pub top: Flat,
    pub built: BuiltMatroid,
}

impl LocalInterval {
    pub fn new(bm: &BuiltMatroid, bottom: Flat, top: Flat) -> Result<LocalInterval> {
        Ok(LocalInterval { bottom, top, built: interval(bm, bottom, top)? })
    }

    fn keep(&self) -> u64 {
        self.top.0 & !self.bottom.0
    }

    /// A flat of `[bottom, top]` in local labels.
    pub fn to_local(&self, x: Flat) -> Flat {
        Flat(compress(x.0, self.keep()))
    }

    pub fn from_local(&self, x: Flat) -> Flat {
        Flat(expand(x.0, self.keep()) | self.bottom.0)
    }

    pub fn rank(&self) -> usize {
        self.built.rank()
    }
}

/// The local intervals over `S ∪ max G`; the link of `S` in the nested set
/// complex is the join of their nested set complexes.
pub fn link_decomposition(bm: &BuiltMatroid, s: &NestedSet) -> Result<Vec<LocalInterval>> {
    local_bottoms(bm, s).into_iter().map(|(g, j)| LocalInterval::new(bm, j, g)).collect()
}

/// The unique factor of `g` that is not a factor of `f`, for `g ∈ G_f`.
pub fn new_factor(bm: &BuiltMatroid, g: Flat, f: Flat) -> Result<Flat> {
    let l = bm.lattice();
    l.check_flat(g)?;
    l.check_flat(f)?;
    let ff = bm.factors(f);
    let fresh: Vec<Flat> = bm.factors(g).iter().copied().filter(|h| !ff.contains(h)).collect();
    match fresh.as_slice() {
        [h] if in_contracted(bm, f, g) => Ok(*h),
        _ => Err(Error::NotUnique(g, f)),
    }
}

/// Grafts local nested sets onto `s`. Each entry `(G, H)` gives a nested
/// set `H` of the local interval at `G ∈ S ∪ max G`, written as flats of
/// the original lattice lying strictly between `J^G` and `G`.
pub fn compose(bm: &BuiltMatroid, s: &NestedSet, locals: &[(Flat, Vec<Flat>)]) -> Result<NestedSet> {
    let bottoms = local_bottoms(bm, s);
    let mut out = s.elements().to_vec();
    for (g, hs) in locals {
        let Some(&(_, j)) = bottoms.iter().find(|(t, _)| t == g) else {
            return Err(Error::NotNestedLocal(*g));
        };
        if hs.iter().any(|&h| !(j.is_proper_subset(h) && h.is_proper_subset(*g) && in_contracted(bm, j, h))) {
            return Err(Error::NotNestedLocal(*g));
        }
        let local = LocalInterval::new(bm, j, *g)?;
        let mapped: Vec<Flat> = hs.iter().map(|&h| local.to_local(h)).collect();
        if !is_nested(&local.built, &mapped) {
            return Err(Error::NotNestedLocal(*g));
        }
        for &h in hs {
            out.push(new_factor(bm, h, j)?);
        }
    }
    NestedSet::new(bm, &out)
}

/// Composes `s` with the ⊴-chains of all its local intervals. The result is
/// a facet of the nested set complex when every chain stays in its local
/// building set, which holds for complete built matroids.
pub fn completion(bm: &BuiltMatroid, s: &NestedSet) -> Result<NestedSet> {
    let mut out = s.elements().to_vec();
    for (g, j) in local_bottoms(bm, s) {
        let chain = chain_unchecked(bm, j, g);
        for &x in &chain[1..chain.len() - 1] {
            if !in_contracted(bm, j, x) {
                return Err(Error::ChainLeavesBuildingSet(j, x));
            }
            out.push(new_factor(bm, x, j)?);
        }
    }
    NestedSet::new(bm, &out)
}

/// `λ_S(g)`: the ⊴-least element generating the cover `J^g ⋖ g`.
pub fn lambda_label(bm: &BuiltMatroid, s: &NestedSet, g: Flat) -> Result<usize> {
    let (_, j) = local_bottoms(bm, s)
        .into_iter()
        .find(|&(t, _)| t == g)
        .ok_or_else(|| Error::BadParameters(format!("{g} is not in the nested set or maximal")))?;
    let gap = bm.rank_of(g) - bm.rank_of(j);
    if gap != 1 {
        return Err(Error::RankNotOne(g, gap));
    }
    Ok(bm.order().min_of(g.minus(j)).unwrap())
}

/// What the face walker visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Walk {
    /// Every face of `cN`.
    All,
    /// Every face of `N`.
    Reduced,
    /// Facets of `N`: all local intervals have rank 1.
    Facets,
    /// FY monomials: every local interval has rank at least 2 and every
    /// element carries an exponent below its rank gap.
    Fy,
}

/// Flats strictly below each flat, by lattice index.
pub(crate) fn lower_sets(bm: &BuiltMatroid) -> Vec<Vec<usize>> {
    let fl = bm.lattice().flats();
    (0..fl.len()).map(|i| (0..i).filter(|&j| fl[j].is_proper_subset(fl[i])).collect()).collect()
}

/// Receives each support with its exponent bounds.
pub(crate) type Emit<'a> = dyn FnMut(&[Flat], &[(Flat, u32)]) + 'a;

/// Depth-first enumeration of nested sets. Every nested set arises once:
/// its roots are the factors of their join, and the children of each
/// element are the factors of its local bottom.
pub(crate) fn walk(bm: &BuiltMatroid, mode: Walk, emit: &mut Emit<'_>) {
    let l = bm.lattice();
    let below = lower_sets(bm);
    let maxg = bm.max_elements();
    let tops: Vec<usize> = match mode {
        Walk::Facets => vec![l.len() - 1],
        Walk::Reduced => (0..l.len()).filter(|&i| !bm.factors(l.flats()[i]).iter().any(|f| maxg.contains(f))).collect(),
        Walk::All | Walk::Fy => (0..l.len()).collect(),
    };
    let mut st = WalkState { bm, below: &below, mode, cur: Vec::new(), pending: Vec::new(), exps: Vec::new() };
    for x in tops {
        let roots = bm.factors(l.flats()[x]);
        st.cur.extend_from_slice(roots);
        st.pending.extend_from_slice(roots);
        if mode == Walk::Facets {
            let mut inner = |s: &[Flat], e: &[(Flat, u32)]| {
                let kept: Vec<Flat> = s.iter().copied().filter(|f| !maxg.contains(f)).collect();
                emit(&kept, e)
            };
            st.rec(&mut inner);
        } else {
            st.rec(emit);
        }
        st.cur.clear();
        st.pending.clear();
    }
}

struct WalkState<'a> {
    bm: &'a BuiltMatroid,
    below: &'a [Vec<usize>],
    mode: Walk,
    cur: Vec<Flat>,
    pending: Vec<Flat>,
    exps: Vec<(Flat, u32)>,
}

impl WalkState<'_> {
    fn rec(&mut self, emit: &mut Emit<'_>) {
        let Some(r) = self.pending.pop() else {
            emit(&self.cur, &self.exps);
            return;
        };
        let l = self.bm.lattice();
        let ri = l.index_of(r).unwrap();
        let rr = l.rank_at(ri);
        for k in 0..self.below[ri].len() {
            let xi = self.below[ri][k];
            let gap = rr - l.rank_at(xi);
            let ok = match self.mode {
                Walk::All | Walk::Reduced => true,
                Walk::Facets => gap == 1,
                Walk::Fy => gap >= 2,
            };
            if !ok {
                continue;
            }
            let kids = self.bm.factors(l.flats()[xi]);
            let (nc, np) = (self.cur.len(), self.pending.len());
            self.cur.extend_from_slice(kids);
            self.pending.extend_from_slice(kids);
            if self.mode == Walk::Fy {
                for a in 1..gap as u32 {
                    self.exps.push((r, a));
                    self.rec(emit);
                    self.exps.pop();
                }
            } else {
                self.rec(emit);
            }
            self.cur.truncate(nc);
            self.pending.truncate(np);
        }
        self.pending.push(r);
    }
}

/// Calls `f` on every face of `cN(L, G)` (`reduced = false`) or of
/// `N(L, G)` (`reduced = true`).
pub fn for_each_nested_set(bm: &BuiltMatroid, reduced: bool, f: &mut dyn FnMut(&[Flat])) {
    let mode = if reduced { Walk::Reduced } else { Walk::All };
    walk(bm, mode, &mut |s, _| f(s));
}

/// Which of the two nested set complexes to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `cN`, on all of `G`.
    Full,
    /// `N`, on `G ∖ max G`.
    Reduced,
}

pub fn nested_complex(bm: &BuiltMatroid, variant: Variant) -> SimplicialComplex {
    let reduced = variant == Variant::Reduced;
    let vertices: Vec<Flat> = bm.bset().iter().filter(|g| !(reduced && bm.is_max_element(*g))).collect();
    let mut faces = Vec::new();
    for_each_nested_set(bm, reduced, &mut |s| {
        let mut idx: Vec<usize> = s.iter().map(|f| vertices.iter().position(|v| v == f).unwrap()).collect();
        idx.sort_unstable();
        faces.push(idx);
    });
    SimplicialComplex::from_faces(vertices, faces)
}

/// Facets of `N(L, G)`, sorted.
pub fn maximal_nested_sets(bm: &BuiltMatroid) -> Vec<NestedSet> {
    let mut out = Vec::new();
    walk(bm, Walk::Facets, &mut |s, _| out.push(NestedSet::trusted(bm, s.to_vec())));
    out.sort();
    out
}

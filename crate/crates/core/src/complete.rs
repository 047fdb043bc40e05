//! Completeness and flagness of built matroids, and filtrations between
//! building sets.

use crate::building::{factors_in, validate_building_set, BuildingSet, BuiltMatroid, GroundSet};
use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::nested::is_nested;

/// The ⊴-chain from `f` to `g`: close in the elements of `g ∖ f` one at a
/// time in ⊴ order, keeping each new flat once.
pub fn tl_chain(bm: &BuiltMatroid, f: Flat, g: Flat) -> Result<Vec<Flat>> {
    let l = bm.lattice();
    l.check_flat(f)?;
    l.check_flat(g)?;
    if !f.is_subset(g) {
        return Err(Error::NotContained(f));
    }
    Ok(chain_unchecked(bm, f, g))
}

pub(crate) fn chain_unchecked(bm: &BuiltMatroid, f: Flat, g: Flat) -> Vec<Flat> {
    let l = bm.lattice();
    let mut out = vec![f];
    let mut cur = f;
    for e in bm.order().sorted(g.minus(f)) {
        if cur.contains(e) {
            continue;
        }
        cur = l.closure(cur.with(e));
        out.push(cur);
    }
    out
}

/// `x ∈ G_f`, tested through the factors of `x`.
pub(crate) fn in_contracted(bm: &BuiltMatroid, f: Flat, x: Flat) -> bool {
    x != f && f.is_subset(x) && bm.factors(x).iter().any(|&h| bm.lattice().join(f, h) == x)
}

/// Checks `C_⊴(0̂, G) ⊆ G ∪ {0̂}` for every `G ∈ G`, returning the first
/// offending pair.
fn fast_witness(bm: &BuiltMatroid) -> Option<(Flat, Flat, Flat)> {
    let bottom = bm.lattice().bottom();
    for g in bm.bset().iter() {
        for x in chain_unchecked(bm, bottom, g).into_iter().skip(1) {
            if !bm.in_bset(x) {
                return Some((bottom, g, x));
            }
        }
    }
    None
}

/// Searches the full definition: for every flat `F ≠ 1̂` and every `G ∈ G_F`
/// the chain `C_⊴(F, G)` stays in `G_F ∪ {F}`. Returns `(F, G, X)` with `X`
/// the first chain element outside.
pub fn completeness_witness(bm: &BuiltMatroid) -> Option<(Flat, Flat, Flat)> {
    let l = bm.lattice();
    let top = l.top();
    for &f in l.flats() {
        if f == top {
            continue;
        }
        let mut targets: Vec<Flat> = bm.bset().iter().map(|g| l.join(f, g)).filter(|&x| x != f).collect();
        targets.sort_by_key(|x| l.index_of(*x));
        targets.dedup();
        for g in targets {
            for x in chain_unchecked(bm, f, g).into_iter().skip(1) {
                if !in_contracted(bm, f, x) {
                    return Some((f, g, x));
                }
            }
        }
    }
    None
}

/// Completeness for the stored order. The initial-chain criterion is tried
/// first; the full definition decides otherwise.
pub fn is_complete(bm: &BuiltMatroid) -> bool {
    fast_witness(bm).is_none() || completeness_witness(bm).is_none()
}

/// Completeness by the full definition only.
pub fn is_complete_full(bm: &BuiltMatroid) -> bool {
    completeness_witness(bm).is_none()
}

/// Tries every order in lexicographic order of the sequence and returns the
/// first one for which `bm` is complete.
pub fn find_complete_order(bm: &BuiltMatroid) -> Result<Option<GroundSet>> {
    let n = bm.n();
    if n > 8 {
        return Err(Error::TooLarge(format!("order search is limited to 8 elements, got {n}")));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let order = GroundSet::from_sequence(perm.clone())?;
        let cand = bm.with_order(order.clone())?;
        if fast_witness(&cand).is_none() {
            return Ok(Some(order));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A minimal non-face of `N(L, G)` of size at least 3, if any. Among the
/// candidates found, the one with the smallest size and then the smallest
/// union under [`Flat::lex_key`] is returned.
pub fn flag_witness(bm: &BuiltMatroid) -> Option<Vec<Flat>> {
    let verts: Vec<Flat> = bm.bset().iter().filter(|g| !bm.is_max_element(*g)).collect();
    let k = verts.len();
    let l = bm.lattice();
    let mut adj = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (verts[i], verts[j]);
            let ok = a.is_subset(b) || b.is_subset(a) || !bm.in_bset(l.join(a, b));
            adj[i][j] = ok;
            adj[j][i] = ok;
        }
    }
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, Vec::new(), (0..k).collect(), Vec::new(), &mut cliques);
    let mut best: Option<Vec<Flat>> = None;
    for c in cliques {
        let mut set: Vec<Flat> = c.iter().map(|&i| verts[i]).collect();
        if is_nested(bm, &set) {
            continue;
        }
        let mut i = 0;
        while i < set.len() {
            let mut smaller = set.clone();
            smaller.remove(i);
            if !is_nested(bm, &smaller) {
                set = smaller;
            } else {
                i += 1;
            }
        }
        let key = |s: &Vec<Flat>| {
            let u = s.iter().fold(Flat::EMPTY, |a, &b| a.union(b));
            (s.len(), u.lex_key())
        };
        set.sort_by_key(|&f| l.index_of(f));
        if best.as_ref().is_none_or(|b| key(&set) < key(b)) {
            best = Some(set);
        }
    }
    best
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p.iter().chain(x.iter()).copied().max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
    let mut p = p;
    let mut x = x;
    let cands: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in cands {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Flag: every set of pairwise nested elements of `G ∖ max G` is nested.
pub fn is_flag(bm: &BuiltMatroid) -> bool {
    flag_witness(bm).is_none()
}

/// A chain of building sets, each obtained from the previous one by adding
/// a single flat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub sets: Vec<BuildingSet>,
    pub added: Vec<Flat>,
    /// Number of factors of each added flat in the set it is added to.
    pub factor_counts: Vec<usize>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.added.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.factor_counts.iter().all(|&c| c == 2)
    }

    fn from_removals(l: &crate::lattice::GeomLattice, mut sets: Vec<Vec<Flat>>, mut removed: Vec<Flat>) -> Filtration {
        sets.reverse();
        removed.reverse();
        let factor_counts = removed.iter().zip(&sets).map(|(&g, prev)| factors_in(prev, g).len()).collect();
        let sets = sets.into_iter().map(|s| BuildingSet::trusted(l, s)).collect();
        Filtration { sets, added: removed, factor_counts }
    }
}

fn check_contained(small: &BuildingSet, big: &BuildingSet) -> Result<()> {
    for f in small.iter() {
        if !big.contains(f) {
            return Err(Error::NotContained(f));
        }
    }
    Ok(())
}

/// `G ∖ {g}` is still a building set: the maximal remaining elements below
/// `g` split it as a direct sum.
pub fn is_removable(bm: &BuiltMatroid, g: Flat) -> bool {
    removable_in(bm.lattice(), bm.bset().elements(), g)
}

pub(crate) fn removable_in(l: &crate::lattice::GeomLattice, set: &[Flat], g: Flat) -> bool {
    let rest: Vec<Flat> = set.iter().copied().filter(|&x| x != g).collect();
    let below = factors_in(&rest, g);
    let mut union = Flat::EMPTY;
    let mut rank = 0;
    for &h in &below {
        if !union.intersection(h).is_empty() {
            return false;
        }
        union = union.union(h);
        rank += l.rank_of(h);
    }
    union == g && rank == l.rank_of(g)
}

/// A filtration from `small` up to the building set of `big`, built in
/// reverse by removing a minimal element of the difference at each step.
pub fn filtration(big: &BuiltMatroid, small: &BuildingSet) -> Result<Filtration> {
    check_contained(small, big.bset())?;
    let l = big.lattice();
    let mut cur: Vec<Flat> = big.bset().elements().to_vec();
    let mut sets = vec![cur.clone()];
    let mut removed = Vec::new();
    while cur.len() > small.len() {
        let diff: Vec<Flat> = cur.iter().copied().filter(|&f| !small.contains(f)).collect();
        let mut minimal: Vec<Flat> = diff.iter().copied().filter(|&f| !diff.iter().any(|&h| h.is_proper_subset(f))).collect();
        minimal.sort_by_key(|f| f.lex_key());
        let mut done = false;
        for g in minimal {
            let next: Vec<Flat> = cur.iter().copied().filter(|&x| x != g).collect();
            if validate_building_set(l, &next).is_ok() {
                cur = next;
                sets.push(cur.clone());
                removed.push(g);
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::Stuck(cur.len()));
        }
    }
    Ok(Filtration::from_removals(l, sets, removed))
}

/// Greedy binary filtration: repeatedly remove a maximal removable element
/// of the difference whose removal leaves it with exactly two factors; ties
/// go to the smallest [`Flat::lex_key`].
pub(crate) fn greedy_binary(big: &BuiltMatroid, small: &BuildingSet) -> Result<Filtration> {
    check_contained(small, big.bset())?;
    let l = big.lattice();
    let mut cur: Vec<Flat> = big.bset().elements().to_vec();
    let mut sets = vec![cur.clone()];
    let mut removed = Vec::new();
    while cur.len() > small.len() {
        let cands: Vec<Flat> = cur.iter().copied().filter(|&f| !small.contains(f) && removable_in(l, &cur, f)).collect();
        let mut maximal: Vec<Flat> = cands.iter().copied().filter(|&f| !cands.iter().any(|&h| f.is_proper_subset(h))).collect();
        maximal.sort_by_key(|f| f.lex_key());
        let pick = maximal.into_iter().find(|&g| {
            let rest: Vec<Flat> = cur.iter().copied().filter(|&x| x != g).collect();
            factors_in(&rest, g).len() == 2
        });
        match pick {
            Some(g) => {
                cur.retain(|&x| x != g);
                sets.push(cur.clone());
                removed.push(g);
            }
            None => return Err(Error::Stuck(cur.len())),
        }
    }
    Ok(Filtration::from_removals(l, sets, removed))
}

/// A filtration from `small` to the building set of `big` in which every
/// added flat has exactly two factors. Requires `big` to be flag.
pub fn binary_filtration(big: &BuiltMatroid, small: &BuildingSet) -> Result<Filtration> {
    check_contained(small, big.bset())?;
    if !is_flag(big) {
        return Err(Error::NotFlag);
    }
    greedy_binary(big, small)
}

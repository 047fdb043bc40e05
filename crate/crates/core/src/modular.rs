//! Modular cuts: upward closed families of flats that are closed under meets
//! of modular pairs.

use crate::error::{Error, Result};
use crate::flat::{expand, full_mask, Flat};
use crate::lattice::{GeomLattice, Matroid};
use std::collections::{HashSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularCut {
    members: Vec<Flat>,
    pub proper: bool,
    pub nonempty: bool,
    pub atom_free: bool,
}

impl ModularCut {
    pub(crate) fn trusted(l: &GeomLattice, members: Vec<Flat>) -> ModularCut {
        let mut members = members;
        members.sort_by_key(|&f| (l.rank_of(f), f.0));
        members.dedup();
        let proper = !members.contains(&l.bottom());
        let nonempty = !members.is_empty();
        let atom_free = members.iter().all(|&f| l.rank_of(f) != 1);
        ModularCut { members, proper, nonempty, atom_free }
    }

    pub fn empty() -> ModularCut {
        ModularCut { members: Vec::new(), proper: true, nonempty: false, atom_free: true }
    }

    /// Members in increasing rank.
    pub fn members(&self) -> &[Flat] {
        &self.members
    }

    pub fn contains(&self, f: Flat) -> bool {
        self.members.contains(&f)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Inclusion-minimal members.
    pub fn minimal(&self) -> Vec<Flat> {
        self.members
            .iter()
            .copied()
            .filter(|&f| !self.members.iter().any(|&g| g.is_proper_subset(f)))
            .collect()
    }
}

/// Checks upward closure and closure under meets of modular pairs.
pub fn validate_modular_cut(l: &GeomLattice, cut: &[Flat]) -> Result<ModularCut> {
    for &f in cut {
        l.check_flat(f)?;
    }
    let set: HashSet<Flat> = cut.iter().copied().collect();
    let mut sorted: Vec<Flat> = set.iter().copied().collect();
    sorted.sort_by_key(|&f| (l.rank_of(f), f.0));
    for &f in &sorted {
        for c in l.upper_covers(f) {
            if !set.contains(&c) {
                return Err(Error::NotUpwardClosed(f, c));
            }
        }
    }
    for (i, &f) in sorted.iter().enumerate() {
        for &g in &sorted[i + 1..] {
            if l.is_modular_pair(f, g) && !set.contains(&l.meet(f, g)) {
                return Err(Error::NotMeetClosed(f, g));
            }
        }
    }
    Ok(ModularCut::trusted(l, sorted))
}

/// The cut of `M ∖ e` recording where `e` sits: flats of the deletion whose
/// closure in `M` contains `e`. Flats are labeled on `E ∖ e` with the
/// elements above `e` shifted down.
pub fn deletion_modular_cut(m: &Matroid, e: usize) -> ModularCut {
    let keep = full_mask(m.n()) & !(1u64 << e);
    let del = m.delete(e);
    let members = del
        .lattice()
        .flats()
        .iter()
        .copied()
        .filter(|f| m.closure(Flat(expand(f.0, keep))).contains(e))
        .collect();
    ModularCut::trusted(del.lattice(), members)
}

/// Precomputed cover and modular-pair tables for repeated cut closures.
pub struct CutCloser<'a> {
    lattice: &'a GeomLattice,
    covers: Vec<Vec<usize>>,
    modular_meets: Vec<Vec<(usize, usize)>>,
}

impl<'a> CutCloser<'a> {
    pub fn new(l: &'a GeomLattice) -> CutCloser<'a> {
        let flats = l.flats();
        let covers = flats
            .iter()
            .map(|&f| l.upper_covers(f).into_iter().map(|c| l.index_of(c).unwrap()).collect())
            .collect();
        let mut modular_meets = vec![Vec::new(); flats.len()];
        for i in 0..flats.len() {
            for j in i + 1..flats.len() {
                let (f, g) = (flats[i], flats[j]);
                if f.is_subset(g) || g.is_subset(f) {
                    continue;
                }
                if l.is_modular_pair(f, g) {
                    let k = l.index_of(l.meet(f, g)).unwrap();
                    modular_meets[i].push((j, k));
                    modular_meets[j].push((i, k));
                }
            }
        }
        CutCloser { lattice: l, covers, modular_meets }
    }

    /// Smallest modular cut containing the given flat indices.
    pub fn close(&self, start: &[bool]) -> Vec<bool> {
        let mut inside = start.to_vec();
        let mut queue: VecDeque<usize> = (0..inside.len()).filter(|&i| inside[i]).collect();
        while let Some(i) = queue.pop_front() {
            for &c in &self.covers[i] {
                if !inside[c] {
                    inside[c] = true;
                    queue.push_back(c);
                }
            }
            for &(j, k) in &self.modular_meets[i] {
                if inside[j] && !inside[k] {
                    inside[k] = true;
                    queue.push_back(k);
                }
            }
        }
        inside
    }

    fn to_cut(&self, inside: &[bool]) -> ModularCut {
        let members = (0..inside.len()).filter(|&i| inside[i]).map(|i| self.lattice.flats()[i]).collect();
        ModularCut::trusted(self.lattice, members)
    }

    /// Smallest modular cut containing `gens`.
    pub fn closure_of(&self, gens: &[Flat]) -> ModularCut {
        let mut start = vec![false; self.lattice.len()];
        for &g in gens {
            start[self.lattice.index_of(g).expect("generator must be a flat")] = true;
        }
        self.to_cut(&self.close(&start))
    }
}

/// Every nonempty proper modular cut, or only the atom-free ones. Stops with
/// `TooLarge` once `limit` cuts have been found.
pub fn enumerate_modular_cuts(l: &GeomLattice, atom_free_only: bool, limit: usize) -> Result<Vec<ModularCut>> {
    let closer = CutCloser::new(l);
    let n = l.len();
    let allowed = |i: usize| -> bool { i != 0 && (!atom_free_only || l.rank_at(i) != 1) };
    let bad = |inside: &[bool]| -> bool {
        inside[0] || (atom_free_only && (0..n).any(|i| inside[i] && l.rank_at(i) == 1))
    };
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in (0..n).filter(|&i| allowed(i)) {
        let mut start = vec![false; n];
        start[i] = true;
        let c = closer.close(&start);
        if !bad(&c) && seen.insert(c.clone()) {
            queue.push_back(c);
        }
    }
    while let Some(cur) = queue.pop_front() {
        for i in (0..n).filter(|&i| allowed(i) && !cur[i]) {
            let mut start = cur.clone();
            start[i] = true;
            let c = closer.close(&start);
            if !bad(&c) && !seen.contains(&c) {
                if seen.len() >= limit {
                    return Err(Error::TooLarge(format!("more than {limit} modular cuts")));
                }
                seen.insert(c.clone());
                queue.push_back(c);
            }
        }
    }
    let mut cuts: Vec<ModularCut> = seen.iter().map(|c| closer.to_cut(c)).collect();
    cuts.sort_by(|a, b| {
        let ka: Vec<u64> = a.members.iter().map(|f| f.0).collect();
        let kb: Vec<u64> = b.members.iter().map(|f| f.0).collect();
        (ka.len(), ka).cmp(&(kb.len(), kb))
    });
    Ok(cuts)
}

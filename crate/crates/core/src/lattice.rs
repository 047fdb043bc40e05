//! Loopless matroids stored through their fully materialized lattice of flats.

use crate::error::{Error, Result};
use crate::flat::{compress, full_mask, Flat, MAX_GROUND};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

/// The geometric lattice of flats of a loopless matroid.
///
/// Flats are kept sorted by rank and then by bit pattern, so index order is a
/// linear extension of inclusion. Closure is the intersection of the
/// hyperplanes containing a set.
#[derive(Debug, Clone)]
pub struct GeomLattice {
    n: usize,
    flats: Vec<Flat>,
    ranks: Vec<u32>,
    rank_start: Vec<usize>,
    index: HashMap<Flat, usize>,
    hyperplanes: Vec<Flat>,
}

impl GeomLattice {
    /// Builds the lattice from flats whose ranks are already known. No axiom
    /// checks are performed.
    pub(crate) fn from_ranked(n: usize, mut pairs: Vec<(Flat, u32)>) -> GeomLattice {
        pairs.sort_by_key(|&(f, r)| (r, f.0));
        pairs.dedup();
        let top_rank = pairs.last().map(|p| p.1).unwrap_or(0) as usize;
        let mut rank_start = vec![0usize; top_rank + 2];
        let mut counts = vec![0usize; top_rank + 1];
        for &(_, r) in &pairs {
            counts[r as usize] += 1;
        }
        for r in 0..=top_rank {
            rank_start[r + 1] = rank_start[r] + counts[r];
        }
        let flats: Vec<Flat> = pairs.iter().map(|p| p.0).collect();
        let ranks: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let hyperplanes = if top_rank == 0 {
            Vec::new()
        } else {
            flats[rank_start[top_rank - 1]..rank_start[top_rank]].to_vec()
        };
        GeomLattice { n, flats, ranks, rank_start, index, hyperplanes }
    }

    /// Validates an explicit family of flats: it must contain the ground set
    /// and the empty set, be closed under intersection, and the covers of
    /// every flat must partition its complement.
    pub fn from_flats(n: usize, flats: &[Flat]) -> Result<GeomLattice> {
        if n > MAX_GROUND {
            return Err(Error::BadParameters(format!("ground set of size {n} exceeds {MAX_GROUND}")));
        }
        let full = Flat::full(n);
        let mut set: Vec<Flat> = flats.to_vec();
        set.sort_by_key(|f| f.size_key());
        set.dedup();
        if let Some(f) = set.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::InvalidMatroid(format!("{f} is not a subset of the ground set")));
        }
        if !set.contains(&full) {
            return Err(Error::InvalidMatroid("the ground set is not a flat".into()));
        }
        if set[0] != Flat::EMPTY {
            return Err(Error::InvalidMatroid("the empty set is not a flat (loops are not supported)".into()));
        }
        let members: HashSet<Flat> = set.iter().copied().collect();
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if !members.contains(&a.intersection(b)) {
                    return Err(Error::InvalidMatroid(format!("{a} and {b} meet outside the family")));
                }
            }
        }
        let smallest_above = |s: Flat| -> Flat {
            let mut acc = full;
            for &f in &set {
                if s.is_subset(f) {
                    acc = acc.intersection(f);
                }
            }
            acc
        };
        let mut rank: HashMap<Flat, u32> = HashMap::new();
        rank.insert(Flat::EMPTY, 0);
        for &f in &set {
            let rf = *rank
                .get(&f)
                .ok_or_else(|| Error::InvalidMatroid(format!("{f} is not reachable by covers")))?;
            let mut seen = Flat::EMPTY;
            for x in full.minus(f).elements() {
                if seen.contains(x) {
                    continue;
                }
                let c = smallest_above(f.with(x));
                for y in c.minus(f).elements() {
                    if smallest_above(f.with(y)) != c {
                        return Err(Error::InvalidMatroid(format!(
                            "covers of {f} do not partition its complement"
                        )));
                    }
                }
                seen = seen.union(c);
                match rank.get(&c) {
                    Some(&rc) if rc != rf + 1 => {
                        return Err(Error::InvalidMatroid(format!("{c} has inconsistent rank")));
                    }
                    _ => {
                        rank.insert(c, rf + 1);
                    }
                }
            }
        }
        let pairs = set.iter().map(|&f| (f, rank[&f])).collect();
        Ok(GeomLattice::from_ranked(n, pairs))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the top flat.
    pub fn rank(&self) -> usize {
        self.rank_start.len() - 2
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flats_of_rank(&self, k: usize) -> &[Flat] {
        if k > self.rank() {
            return &[];
        }
        &self.flats[self.rank_start[k]..self.rank_start[k + 1]]
    }

    pub fn index_of(&self, f: Flat) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn is_flat(&self, f: Flat) -> bool {
        self.index.contains_key(&f)
    }

    pub fn rank_at(&self, i: usize) -> usize {
        self.ranks[i] as usize
    }

    /// Rank of a flat. Panics if `f` is not a flat.
    pub fn rank_of(&self, f: Flat) -> usize {
        self.ranks[self.index[&f]] as usize
    }

    pub fn bottom(&self) -> Flat {
        self.flats[0]
    }

    pub fn top(&self) -> Flat {
        *self.flats.last().unwrap()
    }

    pub fn atoms(&self) -> &[Flat] {
        self.flats_of_rank(1)
    }

    pub fn hyperplanes(&self) -> &[Flat] {
        &self.hyperplanes
    }

    pub fn closure(&self, s: Flat) -> Flat {
        if self.hyperplanes.is_empty() {
            return self.top();
        }
        let mut acc = full_mask(self.n);
        for h in &self.hyperplanes {
            if s.0 & !h.0 == 0 {
                acc &= h.0;
            }
        }
        Flat(acc)
    }

    pub fn rank_of_set(&self, s: Flat) -> usize {
        self.rank_of(self.closure(s))
    }

    pub fn join(&self, f: Flat, g: Flat) -> Flat {
        self.closure(f.union(g))
    }

    pub fn meet(&self, f: Flat, g: Flat) -> Flat {
        f.intersection(g)
    }

    pub fn try_join(&self, f: Flat, g: Flat) -> Result<Flat> {
        self.check_flat(f)?;
        self.check_flat(g)?;
        Ok(self.join(f, g))
    }

    pub fn try_meet(&self, f: Flat, g: Flat) -> Result<Flat> {
        self.check_flat(f)?;
        self.check_flat(g)?;
        Ok(self.meet(f, g))
    }

    pub fn check_flat(&self, f: Flat) -> Result<()> {
        if self.is_flat(f) {
            Ok(())
        } else {
            Err(Error::NotAFlat(f))
        }
    }

    pub fn join_all<I: IntoIterator<Item = Flat>>(&self, it: I) -> Flat {
        let mut s = Flat::EMPTY;
        for f in it {
            s = s.union(f);
        }
        self.closure(s)
    }

    /// Flats covering `f`.
    pub fn upper_covers(&self, f: Flat) -> Vec<Flat> {
        let mut out = Vec::new();
        let mut seen = f;
        for x in Flat::full(self.n).minus(f).elements() {
            if seen.contains(x) {
                continue;
            }
            let c = self.closure(f.with(x));
            seen = seen.union(c);
            out.push(c);
        }
        out
    }

    /// Flats `g` with `lo ⊆ g ⊆ hi`, in index order.
    pub fn interval(&self, lo: Flat, hi: Flat) -> Vec<Flat> {
        self.flats.iter().copied().filter(|g| lo.is_subset(*g) && g.is_subset(hi)).collect()
    }

    pub fn is_modular_pair(&self, f: Flat, g: Flat) -> bool {
        self.rank_of(self.join(f, g)) + self.rank_of(self.meet(f, g)) == self.rank_of(f) + self.rank_of(g)
    }

    /// The finest decomposition of `[0̂, f]` as a product of lower intervals,
    /// i.e. the connected components of the restriction to `f`, ordered by
    /// their least element.
    pub fn interval_factors(&self, f: Flat) -> Vec<Flat> {
        let elems = f.to_vec();
        if elems.is_empty() {
            return Vec::new();
        }
        let mut basis = Flat::EMPTY;
        let mut r = 0;
        for &x in &elems {
            if self.rank_of_set(basis.with(x)) > r {
                basis = basis.with(x);
                r += 1;
            }
        }
        let mut parent: Vec<usize> = (0..MAX_GROUND).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in f.minus(basis).elements() {
            for y in basis.elements() {
                if self.rank_of_set(basis.without(y).with(x)) == r {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    parent[a] = b;
                }
            }
        }
        let mut comps: HashMap<usize, Flat> = HashMap::new();
        for &x in &elems {
            let root = find(&mut parent, x);
            let c = comps.entry(root).or_default();
            *c = c.with(x);
        }
        let mut out: Vec<Flat> = comps.into_values().collect();
        out.sort_by_key(|c| c.min_element());
        out
    }

    pub fn is_irreducible(&self, f: Flat) -> bool {
        self.interval_factors(f).len() == 1
    }

    pub(crate) fn map_flats<F: Fn(Flat) -> Option<(Flat, u32)>>(&self, n: usize, f: F) -> GeomLattice {
        let pairs = self
            .flats
            .iter()
            .filter_map(|&x| f(x))
            .collect();
        GeomLattice::from_ranked(n, pairs)
    }
}

/// A loopless matroid. The rank function is materialized as the lattice of
/// flats; the rank of an arbitrary set is the rank of its closure.
#[derive(Debug, Clone)]
pub struct Matroid {
    lattice: Arc<GeomLattice>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Matroid) -> bool {
        self.n() == other.n() && self.lattice.flats == other.lattice.flats && self.lattice.ranks == other.lattice.ranks
    }
}

impl Eq for Matroid {}

impl Matroid {
    pub fn from_lattice(lattice: GeomLattice) -> Matroid {
        Matroid { lattice: Arc::new(lattice) }
    }

    pub fn from_flats(n: usize, flats: &[Flat]) -> Result<Matroid> {
        Ok(Matroid::from_lattice(GeomLattice::from_flats(n, flats)?))
    }

    /// Materializes the flats of a matroid given by a rank oracle on bitmasks.
    /// The oracle is trusted beyond the loop check; use
    /// [`Matroid::from_rank_table`] for validated input.
    pub fn from_rank_fn<F: Fn(u64) -> u32>(n: usize, rank: F) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::BadParameters(format!("ground set of size {n} exceeds {MAX_GROUND}")));
        }
        if rank(0) != 0 {
            return Err(Error::InvalidMatroid("the empty set has positive rank".into()));
        }
        for e in 0..n {
            if rank(1u64 << e) != 1 {
                return Err(Error::InvalidMatroid(format!("element {e} is a loop")));
            }
        }
        let full = full_mask(n);
        let close = |s: u64, r: u32| -> u64 {
            let mut c = s;
            let mut rest = full & !s;
            while rest != 0 {
                let x = rest.trailing_zeros();
                rest &= rest - 1;
                if rank(s | 1u64 << x) == r {
                    c |= 1u64 << x;
                }
            }
            c
        };
        let mut seen: HashMap<u64, u32> = HashMap::new();
        seen.insert(0, 0);
        let mut queue = VecDeque::from([(0u64, 0u32)]);
        while let Some((f, r)) = queue.pop_front() {
            let mut covered = f;
            let mut rest = full & !f;
            while rest != 0 {
                let x = rest.trailing_zeros();
                rest &= rest - 1;
                if covered >> x & 1 == 1 {
                    continue;
                }
                let s = f | 1u64 << x;
                let rs = rank(s);
                if rs != r + 1 {
                    return Err(Error::InvalidMatroid("rank function violates unit increase".into()));
                }
                let c = close(s, rs);
                covered |= c;
                if let std::collections::hash_map::Entry::Vacant(v) = seen.entry(c) {
                    v.insert(rs);
                    queue.push_back((c, rs));
                }
            }
        }
        let pairs = seen.into_iter().map(|(f, r)| (Flat(f), r)).collect();
        Ok(Matroid::from_lattice(GeomLattice::from_ranked(n, pairs)))
    }

    /// Validates an explicit rank table indexed by bitmask (exhaustively for
    /// n ≤ 16, by seeded sampling above) and materializes the matroid.
    pub fn from_rank_table(n: usize, table: &[u32]) -> Result<Matroid> {
        if n > 30 {
            return Err(Error::BadParameters("rank tables are limited to 30 elements".into()));
        }
        if table.len() != 1usize << n {
            return Err(Error::InvalidMatroid(format!("rank table has {} entries, expected {}", table.len(), 1usize << n)));
        }
        let r = |s: usize| table[s] as i64;
        let check = |s: usize, a: usize, b: usize| -> Result<()> {
            let (sa, sb, sab) = (s | 1 << a, s | 1 << b, s | 1 << a | 1 << b);
            if r(sa) < r(s) || r(sa) > r(s) + 1 {
                return Err(Error::InvalidMatroid(format!("unit increase fails at {:?} + {a}", Flat(s as u64))));
            }
            if r(sa) + r(sb) < r(sab) + r(s) {
                return Err(Error::InvalidMatroid(format!("submodularity fails at {:?} with {a},{b}", Flat(s as u64))));
            }
            Ok(())
        };
        if table[0] != 0 {
            return Err(Error::InvalidMatroid("the empty set has positive rank".into()));
        }
        if n <= 16 {
            for s in 0..1usize << n {
                for a in 0..n {
                    if s >> a & 1 == 1 {
                        continue;
                    }
                    if r(s | 1 << a) < r(s) || r(s | 1 << a) > r(s) + 1 {
                        return Err(Error::InvalidMatroid(format!("unit increase fails at {:?} + {a}", Flat(s as u64))));
                    }
                    for b in a + 1..n {
                        if s >> b & 1 == 0 {
                            check(s, a, b)?;
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..200_000 {
                let s: usize = rng.gen_range(0..1usize << n);
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b && s >> a & 1 == 0 && s >> b & 1 == 0 {
                    check(s, a, b)?;
                }
            }
        }
        Matroid::from_rank_fn(n, |s| table[s as usize])
    }

    pub fn lattice(&self) -> &GeomLattice {
        &self.lattice
    }

    pub fn n(&self) -> usize {
        self.lattice.n
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn closure(&self, s: Flat) -> Flat {
        self.lattice.closure(s)
    }

    pub fn rank_of(&self, s: Flat) -> usize {
        self.lattice.rank_of_set(s)
    }

    pub fn is_simple(&self) -> bool {
        self.lattice.atoms().iter().all(|a| a.len() == 1)
    }

    /// `M ∖ e`, with elements above `e` shifted down by one.
    pub fn delete(&self, e: usize) -> Matroid {
        let keep = full_mask(self.n()) & !(1u64 << e);
        let l = &self.lattice;
        let pairs = l
            .flats
            .iter()
            .map(|&f| {
                let g = f.without(e);
                (Flat(compress(g.0, keep)), l.rank_of_set(g) as u32)
            })
            .collect();
        Matroid::from_lattice(GeomLattice::from_ranked(self.n() - 1, pairs))
    }

    /// `M|F`, relabeled onto the elements of `F`.
    pub fn restrict(&self, f: Flat) -> Matroid {
        let l = &self.lattice;
        let lat = l.map_flats(f.len(), |x| x.is_subset(f).then(|| (Flat(compress(x.0, f.0)), l.rank_of(x) as u32)));
        Matroid::from_lattice(lat)
    }

    /// `M/F`, relabeled onto the elements outside `F`.
    pub fn contract(&self, f: Flat) -> Matroid {
        let l = &self.lattice;
        let keep = full_mask(self.n()) & !f.0;
        let rf = l.rank_of(f) as u32;
        let lat = l.map_flats(self.n() - f.len(), |x| {
            f.is_subset(x).then(|| (Flat(compress(x.0, keep)), l.rank_of(x) as u32 - rf))
        });
        Matroid::from_lattice(lat)
    }

    /// Replaces the ground set by the given atoms: each flat becomes the set
    /// of indices of the atoms it contains.
    pub fn simplify_with(&self, atoms: &[Flat]) -> Matroid {
        let l = &self.lattice;
        let lat = l.map_flats(atoms.len(), |x| {
            let mut m = 0u64;
            for (i, a) in atoms.iter().enumerate() {
                if a.is_subset(x) {
                    m |= 1u64 << i;
                }
            }
            Some((Flat(m), l.rank_of(x) as u32))
        });
        Matroid::from_lattice(lat)
    }

    /// The simple matroid on the atoms (ordered by least element) together with
    /// the map sending each element to its atom.
    pub fn simplify(&self) -> (Matroid, Vec<usize>) {
        let atoms = self.lattice.atoms().to_vec();
        let mut sorted = atoms.clone();
        sorted.sort_by_key(|a| a.min_element());
        let mut map = vec![0usize; self.n()];
        for (i, a) in sorted.iter().enumerate() {
            for e in a.elements() {
                map[e] = i;
            }
        }
        (self.simplify_with(&sorted), map)
    }
}

/// The closure of `s` in `m`.
pub fn closure(m: &Matroid, s: Flat) -> Flat {
    m.closure(s)
}

/// The lattice of flats of `m`.
pub fn lattice_of_flats(m: &Matroid) -> &GeomLattice {
    m.lattice()
}

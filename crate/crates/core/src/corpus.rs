//! The built-in test corpus: small uniform, Boolean, braid and graphic
//! matroids with their minimal and maximal building sets, every chordal
//! building set on small Boolean lattices, and seeded random building sets.

use crate::building::{g_max, g_min, BuildingSet, BuiltMatroid, GroundSet};
use crate::families::{chordal_building_sets, make_boolean, make_graphic, make_partition, make_uniform};
use crate::flat::Flat;
use crate::lattice::{GeomLattice, Matroid};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsetKind {
    Min,
    Max,
    Chordal,
    Random,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub kind: BsetKind,
    pub bm: BuiltMatroid,
}

/// Edge lists of the simple graphs on `v` vertices with at least one edge,
/// one per isomorphism class.
pub fn graphs_up_to_iso(v: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
    let m = pairs.len();
    let idx = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut perms: Vec<Vec<usize>> = vec![(0..v).collect()];
    // all permutations by repeated insertion
    for k in 1..v {
        let mut next = Vec::new();
        for p in &perms {
            for pos in 0..=k {
                let mut q: Vec<usize> = p.iter().copied().filter(|&x| x < k).collect();
                q.insert(pos, k);
                next.push(q);
            }
        }
        perms = next;
    }
    perms.retain(|p| p.len() == v);
    let maps: Vec<Vec<usize>> = perms.iter().map(|p| pairs.iter().map(|&(a, b)| idx(p[a], p[b])).collect()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in 1u32..1 << m {
        let canon = maps
            .iter()
            .map(|mp| (0..m).filter(|&e| g >> e & 1 == 1).fold(0u32, |acc, e| acc | 1 << mp[e]))
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push((0..m).filter(|&e| canon >> e & 1 == 1).map(|e| pairs[e]).collect());
        }
    }
    out
}

/// Adds each remaining flat with probability `p` to the minimal building set
/// and closes under joins of pairs that meet above the bottom.
pub fn random_building_set(l: &GeomLattice, p: f64, rng: &mut impl Rng) -> BuildingSet {
    let mut set: HashSet<Flat> = g_min(l).iter().collect();
    for &f in &l.flats()[1..] {
        if rng.gen_bool(p) {
            set.insert(f);
        }
    }
    loop {
        let el: Vec<Flat> = set.iter().copied().collect();
        let mut grew = false;
        for (i, &a) in el.iter().enumerate() {
            for &b in &el[i + 1..] {
                if !a.intersection(b).is_empty() && set.insert(l.join(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    BuildingSet::trusted(l, set.into_iter().collect())
}

fn matroid_name(r: usize, n: usize) -> String {
    if r == n {
        format!("B{n}")
    } else {
        format!("U({r},{n})")
    }
}

fn graph_name(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
    format!("G[{}]", parts.join(","))
}

struct Builder {
    out: Vec<Instance>,
}

impl Builder {
    fn push(&mut self, name: String, kind: BsetKind, bm: BuiltMatroid) -> bool {
        if self.out.iter().any(|x| x.bm == bm) {
            return false;
        }
        self.out.push(Instance { name, kind, bm });
        true
    }

    fn min_max(&mut self, name: &str, m: Matroid) {
        self.push(format!("{name}/min"), BsetKind::Min, BuiltMatroid::with_min(m.clone()));
        self.push(format!("{name}/max"), BsetKind::Max, BuiltMatroid::with_max(m));
    }

    fn chordal(&mut self, n: usize) {
        let b = make_boolean(n);
        let sets = chordal_building_sets(n).expect("n is small");
        for (i, s) in sets.iter().enumerate() {
            let bm = BuiltMatroid::new(b.clone(), s.elements(), GroundSet::natural(n)).expect("chordal sets are valid");
            self.push(format!("B{n}/chordal#{i}"), BsetKind::Chordal, bm);
        }
    }
}

/// Matroids used by the corpus: uniform `U(r,n)` for `1 ≤ r ≤ n ≤ 6`
/// (Boolean lattices are the case `r = n`), `Π_n` for `2 ≤ n ≤ 5` and the
/// graphs on five vertices.
pub fn corpus_matroids() -> Vec<(String, Matroid)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for r in 1..=n {
            out.push((matroid_name(r, n), make_uniform(r, n).expect("in range")));
        }
    }
    for n in 2..=5 {
        out.push((format!("Pi{n}"), make_partition(n).expect("in range")));
    }
    for g in graphs_up_to_iso(5) {
        out.push((graph_name(&g), make_graphic(5, &g).expect("simple graph")));
    }
    out
}

/// Number of random building sets in the corpus. The fixed families give
/// 151 distinct instances; the random sets bring the total past 200.
pub const RANDOM_COUNT: usize = 50;
const RANDOM_SEED: u64 = 0x5eed_0001;

fn add_random(b: &mut Builder, pool: &[(String, Matroid)]) {
    let pool: Vec<&(String, Matroid)> = pool.iter().filter(|(_, m)| g_min(m.lattice()).len() + 2 < m.lattice().len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut made = 0;
    let mut attempts = 0;
    while made < RANDOM_COUNT && attempts < 10_000 {
        attempts += 1;
        let (name, m) = *pool.choose(&mut rng).expect("nonempty pool");
        let p = rng.gen_range(0.1..0.5);
        let bs = random_building_set(m.lattice(), p, &mut rng);
        if bs == g_min(m.lattice()) || bs == g_max(m.lattice()) {
            continue;
        }
        let Ok(bm) = BuiltMatroid::new(m.clone(), bs.elements(), GroundSet::natural(m.n())) else { continue };
        if b.push(format!("{name}/random#{made}"), BsetKind::Random, bm) {
            made += 1;
        }
    }
}

/// The standard corpus, deduplicated, in a fixed order. Every instance uses
/// the natural order on its ground set; for `Π_n` this is the lexicographic
/// order on pairs.
pub fn standard_corpus() -> Vec<Instance> {
    let mut b = Builder { out: Vec::new() };
    let matroids = corpus_matroids();
    for (name, m) in &matroids {
        b.min_max(name, m.clone());
    }
    for n in 1..=4 {
        b.chordal(n);
    }
    add_random(&mut b, &matroids);
    b.out
}

/// The chordal building sets on `B_n`, each complete for the natural order.
pub fn chordal_instances(n: usize) -> Vec<Instance> {
    let mut b = Builder { out: Vec::new() };
    b.chordal(n);
    b.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_classes() {
        // 2, 4, 11 and 34 graphs on 2..=5 vertices, less the empty graph
        assert_eq!(graphs_up_to_iso(2).len(), 1);
        assert_eq!(graphs_up_to_iso(3).len(), 3);
        assert_eq!(graphs_up_to_iso(4).len(), 10);
        assert_eq!(graphs_up_to_iso(5).len(), 33);
    }

    #[test]
    fn corpus_shape() {
        let c = standard_corpus();
        assert!(c.len() >= 200, "{}", c.len());
        assert_eq!(c.iter().filter(|i| i.kind == BsetKind::Random).count(), RANDOM_COUNT);
        let names: HashSet<&str> = c.iter().map(|i| i.name.as_str()).collect();
        assert_eq!(names.len(), c.len());
    }
}

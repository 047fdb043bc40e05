//! Named matroids and building sets: uniform, Boolean, graphic and braid
//! matroids, the augmented construction and the chordal building sets of
//! Boolean lattices.

use crate::building::{validate_building_set, BuildingSet, BuiltMatroid, GroundSet};
use crate::error::{Error, Result};
use crate::flat::{full_mask, Flat, MAX_GROUND};
use crate::lattice::Matroid;

pub fn make_uniform(r: usize, n: usize) -> Result<Matroid> {
    if r < 1 || r > n || n > MAX_GROUND {
        return Err(Error::BadParameters(format!("uniform matroid needs 1 <= r <= n <= 64, got r={r}, n={n}")));
    }
    Matroid::from_rank_fn(n, |s| s.count_ones().min(r as u32))
}

pub fn make_boolean(n: usize) -> Matroid {
    assert!(n <= MAX_GROUND);
    Matroid::from_rank_fn(n, |s| s.count_ones()).unwrap()
}

/// Cycle matroid of a multigraph on `vertices` vertices. Elements are the
/// edges in the given order.
pub fn make_graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
    if edges.len() > MAX_GROUND {
        return Err(Error::BadParameters(format!("{} edges exceed 64", edges.len())));
    }
    for &(a, b) in edges {
        if a >= vertices || b >= vertices {
            return Err(Error::BadParameters(format!("edge ({a},{b}) leaves the vertex set")));
        }
        if a == b {
            return Err(Error::BadParameters(format!("edge ({a},{b}) is a loop")));
        }
    }
    let edges = edges.to_vec();
    Matroid::from_rank_fn(edges.len(), move |s| {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut r = 0;
        for e in Flat(s).elements() {
            let (a, b) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                r += 1;
            }
        }
        r
    })
}

/// Edges of the complete graph in lexicographic order.
pub fn complete_graph_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    edges
}

/// The braid matroid: cycle matroid of `K_n`, whose lattice of flats is the
/// partition lattice. Elements are the pairs `i < j` in lexicographic order.
pub fn make_partition(n: usize) -> Result<Matroid> {
    if n == 0 || n * (n - 1) / 2 > MAX_GROUND {
        return Err(Error::BadParameters(format!("partition lattice of {n} points is out of range")));
    }
    make_graphic(n, &complete_graph_edges(n))
}

/// `(Π_n, G_min)` with the lexicographic order on pairs.
pub fn braid_min(n: usize) -> Result<BuiltMatroid> {
    Ok(BuiltMatroid::with_min(make_partition(n)?))
}

/// The free coextension of `m` with the augmented building set: the new
/// element is 0 and ⊴-least, the original element `i` becomes `i + 1`. The
/// building set holds the flats `F ∪ {0}` for `F` a flat of `m`, plus every
/// atom.
pub fn augmented_built_matroid(m: &Matroid) -> Result<BuiltMatroid> {
    let n = m.n();
    if n + 1 > MAX_GROUND {
        return Err(Error::TooLarge("augmentation exceeds 64 elements".into()));
    }
    let full = full_mask(n);
    let r = |s: u64| m.rank_of(Flat(s)) as i64;
    let rk = r(full);
    let dual = |s: u64| s.count_ones() as i64 + r(full & !s) - rk;
    let dual_top = dual(full);
    // free extension of the dual by a new element placed at bit n
    let ext = |s: u64| -> i64 {
        let base = s & full;
        let d = dual(base);
        if s >> n & 1 == 1 {
            d + i64::from(d < dual_top)
        } else {
            d
        }
    };
    let all = full_mask(n + 1);
    let ext_top = ext(all);
    // dual of the extension, then move the new element to position 0
    let coext = |t: u64| -> u32 { (t.count_ones() as i64 + ext(all & !t) - ext_top) as u32 };
    let unshuffle = |t: u64| -> u64 { (t >> 1) | ((t & 1) << n) };
    let aug = Matroid::from_rank_fn(n + 1, |t| coext(unshuffle(t)))?;
    let mut elements: Vec<Flat> = m.lattice().flats().iter().map(|f| Flat((f.0 << 1) | 1)).collect();
    elements.extend(aug.lattice().atoms().iter().copied());
    elements.sort_by_key(|f| f.size_key());
    elements.dedup();
    BuiltMatroid::new(aug, &elements, GroundSet::natural(n + 1))
}

/// Building sets of `B_n` that contain, with every member, all of its
/// initial segments in the natural order. Each is complete for that order.
pub fn chordal_building_sets(n: usize) -> Result<Vec<BuildingSet>> {
    if n > 5 {
        return Err(Error::TooLarge(format!("chordal enumeration is exhaustive only for n <= 5, got {n}")));
    }
    let b = make_boolean(n);
    let mut candidates: Vec<Flat> = (1..1u64 << n).map(Flat).filter(|f| f.len() >= 2).collect();
    candidates.sort_by_key(|f| f.size_key());
    let atoms: Vec<Flat> = (0..n).map(Flat::singleton).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Flat> = Vec::new();
    fn prefix(f: Flat) -> Flat {
        let top = 63 - f.0.leading_zeros() as usize;
        f.without(top)
    }
    fn rec(i: usize, cands: &[Flat], chosen: &mut Vec<Flat>, atoms: &[Flat], out: &mut Vec<Vec<Flat>>) {
        if i == cands.len() {
            let all: Vec<Flat> = atoms.iter().chain(chosen.iter()).copied().collect();
            let closed = all.iter().all(|&a| {
                all.iter().all(|&b| a.intersection(b).is_empty() || all.contains(&a.union(b)))
            });
            if closed {
                out.push(all);
            }
            return;
        }
        let f = cands[i];
        rec(i + 1, cands, chosen, atoms, out);
        let p = prefix(f);
        if p.len() == 1 || chosen.contains(&p) {
            chosen.push(f);
            rec(i + 1, cands, chosen, atoms, out);
            chosen.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, &candidates, &mut chosen, &atoms, &mut raw);
    for s in raw {
        out.push(validate_building_set(b.lattice(), &s)?);
    }
    out.sort_by(|a, b| {
        let ka: Vec<(u32, u64)> = a.iter().map(|f| f.size_key()).collect();
        let kb: Vec<(u32, u64)> = b.iter().map(|f| f.size_key()).collect();
        (ka.len(), ka).cmp(&(kb.len(), kb))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complete::is_complete;

    fn fl(v: &[usize]) -> Flat {
        Flat::from_elements(v.iter().map(|&e| e - 1))
    }

    #[test]
    fn constructors() {
        assert_eq!(make_partition(3).unwrap().lattice().len(), 5);
        assert_eq!(make_uniform(4, 4).unwrap(), make_boolean(4));
        assert_eq!(make_graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(), make_partition(3).unwrap());
        assert!(make_uniform(0, 3).is_err());
        assert!(make_uniform(4, 3).is_err());
        assert!(make_graphic(2, &[(0, 0)]).is_err());
        let counts: Vec<usize> = (0..=3).map(|k| make_partition(4).unwrap().lattice().flats_of_rank(k).len()).collect();
        assert_eq!(counts, vec![1, 6, 7, 1]);
        assert_eq!(make_partition(5).unwrap().lattice().len(), 52);
    }

    #[test]
    fn augmented_small_cases() {
        let a = augmented_built_matroid(&make_uniform(1, 1).unwrap()).unwrap();
        assert_eq!(a.matroid(), &make_boolean(2));
        assert_eq!(a.rank(), 2);
        let a = augmented_built_matroid(&make_boolean(2)).unwrap();
        assert!(is_complete(&a));
        assert_eq!(a.rank(), 3);
        let a = augmented_built_matroid(&make_uniform(1, 2).unwrap()).unwrap();
        assert_eq!(a.matroid(), &make_uniform(2, 3).unwrap());
    }

    #[test]
    fn chordal_examples() {
        let two = chordal_building_sets(2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].elements(), &[fl(&[1]), fl(&[2])]);
        assert_eq!(two[1].elements(), &[fl(&[1]), fl(&[2]), fl(&[1, 2])]);
        let three = chordal_building_sets(3).unwrap();
        let target = [fl(&[1]), fl(&[2]), fl(&[3]), fl(&[1, 2]), fl(&[1, 2, 3])];
        assert!(three.iter().any(|b| b.elements() == target));
        for n in 1..=4 {
            let b = make_boolean(n);
            for s in chordal_building_sets(n).unwrap() {
                let bm = BuiltMatroid::new(b.clone(), s.elements(), GroundSet::natural(n)).unwrap();
                assert!(is_complete(&bm));
            }
        }
    }
}

//! Restriction, contraction, deletion, single-element extension and
//! truncation of built matroids, plus simplification.
//!
//! Ground sets are relabeled after every operation: surviving elements keep
//! their relative order and are packed into `0..n'`. An extension adds the new
//! element as index `n`.

use crate::building::{BuildingSet, BuiltMatroid, GroundSet};
use crate::error::{Error, Result};
use crate::flat::{compress, full_mask, Flat};
use crate::lattice::{GeomLattice, Matroid};
use crate::modular::ModularCut;
use std::collections::HashSet;

/// `(M^F, G^F)` on the elements of `f`.
pub fn restrict(bm: &BuiltMatroid, f: Flat) -> Result<BuiltMatroid> {
    bm.lattice().check_flat(f)?;
    let m = bm.matroid().restrict(f);
    let elements = bm.bset().iter().filter(|g| g.is_subset(f)).map(|g| Flat(compress(g.0, f.0))).collect();
    let bset = BuildingSet::trusted(m.lattice(), elements);
    Ok(BuiltMatroid::trusted(m, bset, bm.order().compressed(f.0)))
}

/// `(M_F, G_F)` on the elements outside `f`.
pub fn contract(bm: &BuiltMatroid, f: Flat) -> Result<BuiltMatroid> {
    let l = bm.lattice();
    l.check_flat(f)?;
    let keep = full_mask(bm.n()) & !f.0;
    let m = bm.matroid().contract(f);
    let elements = bm
        .bset()
        .iter()
        .map(|g| l.join(f, g))
        .filter(|&j| j != f)
        .map(|j| Flat(compress(j.0, keep)))
        .collect();
    let bset = BuildingSet::trusted(m.lattice(), elements);
    Ok(BuiltMatroid::trusted(m, bset, bm.order().compressed(keep)))
}

/// The built matroid on the interval `[lo, hi]`, i.e. `(G_lo)^hi`, on the
/// elements of `hi ∖ lo`.
pub fn interval(bm: &BuiltMatroid, lo: Flat, hi: Flat) -> Result<BuiltMatroid> {
    if !lo.is_subset(hi) {
        return Err(Error::NotContained(lo));
    }
    let c = contract(bm, lo)?;
    let keep = full_mask(bm.n()) & !lo.0;
    restrict(&c, Flat(compress(hi.0, keep)))
}

/// `(M ∖ e, G ∖ e)` where `G ∖ e` consists of the flats of `M ∖ e` whose
/// closure in `M` lies in `G`.
pub fn delete_element(bm: &BuiltMatroid, e: usize) -> Result<BuiltMatroid> {
    if e >= bm.n() {
        return Err(Error::BadParameters(format!("element {e} is not in the ground set")));
    }
    if !bm.matroid().is_simple() {
        return Err(Error::NotSimple);
    }
    let keep = full_mask(bm.n()) & !(1u64 << e);
    let m = bm.matroid().delete(e);
    let elements = m
        .lattice()
        .flats()
        .iter()
        .copied()
        .skip(1)
        .filter(|s| bm.in_bset(bm.matroid().closure(Flat(crate::flat::expand(s.0, keep)))))
        .collect();
    let bset = BuildingSet::trusted(m.lattice(), elements);
    Ok(BuiltMatroid::trusted(m, bset, bm.order().compressed(keep)))
}

fn check_compatible(bm: &BuiltMatroid, cut: &ModularCut) -> Result<()> {
    for &f in cut.members() {
        bm.lattice().check_flat(f)?;
    }
    for f in cut.minimal() {
        if !bm.in_bset(f) {
            return Err(Error::NotGCompatible(f));
        }
    }
    Ok(())
}

/// Whether every minimal member of `cut` lies in the building set.
pub fn is_g_compatible(bm: &BuiltMatroid, cut: &ModularCut) -> bool {
    check_compatible(bm, cut).is_ok()
}

/// The extension `(M ∪_cut e, G ∪_cut e)`. The new element is `n` and becomes
/// the ⊴-maximum.
pub fn extend(bm: &BuiltMatroid, cut: &ModularCut) -> Result<BuiltMatroid> {
    if !cut.proper || !cut.nonempty {
        return Err(Error::ImproperCut);
    }
    check_compatible(bm, cut)?;
    let n = bm.n();
    if n + 1 > crate::flat::MAX_GROUND {
        return Err(Error::TooLarge("extension exceeds 64 elements".into()));
    }
    let members: HashSet<Flat> = cut.members().iter().copied().collect();
    let m = bm.matroid();
    let ebit = 1u64 << n;
    let rank = |s: u64| -> u32 {
        if s & ebit == 0 {
            m.rank_of(Flat(s)) as u32
        } else {
            let rest = Flat(s & !ebit);
            let c = m.closure(rest);
            m.rank_of(c) as u32 + u32::from(!members.contains(&c))
        }
    };
    let ext = Matroid::from_rank_fn(n + 1, rank)?;
    let mut elements: Vec<Flat> =
        bm.bset().iter().map(|g| if members.contains(&g) { g.with(n) } else { g }).collect();
    elements.push(Flat::singleton(n));
    let bset = BuildingSet::trusted(ext.lattice(), elements);
    Ok(BuiltMatroid::trusted(ext, bset, bm.order().with_new_max()))
}

/// Truncation along an atom-free, G-compatible cut: the collar (flats outside
/// the cut covered by a member) is removed and members drop one rank.
pub fn truncate(bm: &BuiltMatroid, cut: &ModularCut) -> Result<BuiltMatroid> {
    if cut.is_empty() {
        return Ok(bm.clone());
    }
    let l = bm.lattice();
    for &f in cut.members() {
        l.check_flat(f)?;
        if l.rank_of(f) == 1 {
            return Err(Error::CutContainsAtom(f));
        }
        if l.rank_of(f) == 0 {
            return Err(Error::ImproperCut);
        }
    }
    check_compatible(bm, cut)?;
    let members: HashSet<Flat> = cut.members().iter().copied().collect();
    let collar: HashSet<Flat> = l
        .flats()
        .iter()
        .copied()
        .filter(|f| !members.contains(f) && l.upper_covers(*f).iter().any(|c| members.contains(c)))
        .collect();
    let pairs = l
        .flats()
        .iter()
        .filter(|f| !collar.contains(f))
        .map(|&f| (f, (l.rank_of(f) - usize::from(members.contains(&f))) as u32))
        .collect();
    let m = Matroid::from_lattice(GeomLattice::from_ranked(bm.n(), pairs));
    let elements = bm.bset().iter().filter(|g| !collar.contains(g)).collect();
    let bset = BuildingSet::trusted(m.lattice(), elements);
    Ok(BuiltMatroid::trusted(m, bset, bm.order().clone()))
}

/// Replaces the ground set by the atoms, listed by their ⊴-least elements.
/// Returns the simple built matroid and the element-to-atom map.
pub fn simplify(bm: &BuiltMatroid) -> (BuiltMatroid, Vec<usize>) {
    let l = bm.lattice();
    let order = bm.order();
    let mut atoms = l.atoms().to_vec();
    atoms.sort_by_key(|&a| order.pos(order.min_of(a).unwrap()));
    let mut map = vec![0usize; bm.n()];
    for (i, a) in atoms.iter().enumerate() {
        for e in a.elements() {
            map[e] = i;
        }
    }
    let m = bm.matroid().simplify_with(&atoms);
    let relabel = |f: Flat| -> Flat {
        let mut x = 0u64;
        for e in f.elements() {
            x |= 1u64 << map[e];
        }
        Flat(x)
    };
    let elements = bm.bset().iter().map(relabel).collect();
    let bset = BuildingSet::trusted(m.lattice(), elements);
    let n = atoms.len();
    (BuiltMatroid::trusted(m, bset, GroundSet::natural(n)), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{g_max, g_min, validate_building_set};
    use crate::families::{make_boolean, make_partition, make_uniform};
    use crate::modular::validate_modular_cut;

    fn fl(v: &[usize]) -> Flat {
        Flat::from_elements(v.iter().map(|&e| e - 1))
    }

    fn fls(v: &[&[usize]]) -> Vec<Flat> {
        v.iter().map(|s| fl(s)).collect()
    }

    fn built(m: Matroid, b: &[&[usize]]) -> BuiltMatroid {
        let n = m.n();
        BuiltMatroid::new(m, &fls(b), GroundSet::natural(n)).unwrap()
    }

    fn valid(bm: &BuiltMatroid) -> bool {
        validate_building_set(bm.lattice(), bm.bset().elements()).is_ok()
    }

    #[test]
    fn restrict_and_contract_examples() {
        let b3 = BuiltMatroid::with_max(make_boolean(3));
        let r = restrict(&b3, fl(&[1, 2])).unwrap();
        assert_eq!(r, BuiltMatroid::with_max(make_boolean(2)));

        let u34 = built(make_uniform(3, 4).unwrap(), &[&[1], &[2], &[3], &[4], &[1, 2], &[1, 2, 3, 4]]);
        let c = contract(&u34, fl(&[1, 2])).unwrap();
        assert_eq!(c.lattice().len(), 2);
        assert_eq!(c.bset().elements(), &[fl(&[1, 2])]);
        assert!(valid(&c));

        let p4 = BuiltMatroid::with_min(make_partition(4).unwrap());
        let atom = p4.lattice().atoms()[0];
        let r = restrict(&p4, atom).unwrap();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.bset().len(), 1);
    }

    #[test]
    fn delete_examples() {
        let b3 = BuiltMatroid::with_max(make_boolean(3));
        assert_eq!(delete_element(&b3, 2).unwrap(), BuiltMatroid::with_max(make_boolean(2)));

        let u34 = BuiltMatroid::with_min(make_uniform(3, 4).unwrap());
        let d = delete_element(&u34, 3).unwrap();
        assert_eq!(d.matroid(), &make_boolean(3));
        assert_eq!(d.bset().elements(), &fls(&[&[1], &[2], &[3], &[1, 2, 3]])[..]);

        // Definition applied directly: cl({1,2,3}) = {1,2,3} is not in G.
        let b4 = built(make_boolean(4), &[&[1], &[2], &[3], &[4], &[1, 2], &[3, 4], &[1, 2, 3, 4]]);
        let d = delete_element(&b4, 3).unwrap();
        assert_eq!(d.bset().elements(), &fls(&[&[1], &[2], &[3], &[1, 2]])[..]);
        assert!(valid(&d));

        let u23 = make_uniform(2, 3).unwrap();
        let non_simple = BuiltMatroid::with_max(u23.contract(fl(&[1])));
        assert_eq!(delete_element(&non_simple, 0), Err(Error::NotSimple));
    }

    #[test]
    fn extend_examples() {
        let u33 = BuiltMatroid::with_max(make_boolean(3));
        let g = built(make_boolean(3), &[&[1], &[2], &[3], &[1, 2, 3]]);
        let cut = validate_modular_cut(g.lattice(), &[fl(&[1, 2, 3])]).unwrap();
        let ext = extend(&g, &cut).unwrap();
        assert_eq!(ext.matroid(), &make_uniform(3, 4).unwrap());
        assert_eq!(ext.bset(), &g_min(ext.lattice()));

        let atoms = built(make_boolean(3), &[&[1], &[2], &[3]]);
        assert_eq!(extend(&atoms, &cut), Err(Error::NotGCompatible(fl(&[1, 2, 3]))));

        let b2 = BuiltMatroid::with_max(make_boolean(2));
        let cut = validate_modular_cut(b2.lattice(), &[fl(&[1, 2])]).unwrap();
        let ext = extend(&b2, &cut).unwrap();
        assert_eq!(ext.matroid(), &make_uniform(2, 3).unwrap());
        assert_eq!(ext.bset().elements(), &fls(&[&[1], &[2], &[3], &[1, 2, 3]])[..]);

        assert_eq!(extend(&u33, &ModularCut::empty()), Err(Error::ImproperCut));
    }

    #[test]
    fn truncate_examples() {
        let u34 = BuiltMatroid::with_max(make_uniform(3, 4).unwrap());
        let cut = validate_modular_cut(u34.lattice(), &[fl(&[1, 2]), fl(&[1, 2, 3, 4])]).unwrap();
        let t = truncate(&u34, &cut).unwrap();
        let (s, _) = simplify(&t);
        assert_eq!(s.matroid(), &make_uniform(2, 3).unwrap());

        assert_eq!(truncate(&u34, &ModularCut::empty()).unwrap(), u34);

        let b3 = BuiltMatroid::with_max(make_boolean(3));
        let cut = validate_modular_cut(b3.lattice(), &[fl(&[1, 2, 3])]).unwrap();
        let t = truncate(&b3, &cut).unwrap();
        assert_eq!(t.matroid(), &make_uniform(2, 3).unwrap());
        assert_eq!(t.bset(), &g_max(t.lattice()));

        let atom_cut = validate_modular_cut(b3.lattice(), &[fl(&[1]), fl(&[1, 2]), fl(&[1, 3]), fl(&[1, 2, 3])]).unwrap();
        assert_eq!(truncate(&b3, &atom_cut), Err(Error::CutContainsAtom(fl(&[1]))));
    }

    #[test]
    fn extend_then_contract_is_truncate() {
        let u34 = BuiltMatroid::with_max(make_uniform(3, 4).unwrap());
        let cut = validate_modular_cut(u34.lattice(), &[fl(&[1, 2]), fl(&[1, 2, 3, 4])]).unwrap();
        let ext = extend(&u34, &cut).unwrap();
        let c = contract(&ext, Flat::singleton(4)).unwrap();
        assert_eq!(c, truncate(&u34, &cut).unwrap());
        assert_eq!(delete_element(&ext, 4).unwrap(), u34);
    }

    #[test]
    fn interval_of_boolean() {
        let b4 = BuiltMatroid::with_max(make_boolean(4));
        let i = interval(&b4, fl(&[1]), fl(&[1, 2, 3])).unwrap();
        assert_eq!(i, BuiltMatroid::with_max(make_boolean(2)));
    }
}

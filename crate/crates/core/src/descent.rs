//! Descents of maximal nested sets, stable facets, the descent formula for
//! the γ-polynomial and the Γ-complex.

use crate::building::BuiltMatroid;
use crate::complete::{chain_unchecked, is_complete};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::nested::{local_bottoms, maximal_nested_sets, NestedSet};
use crate::poly::Polynomial;

/// Descents of a facet, with its bottom and double descents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentInfo {
    pub descents: Vec<Flat>,
    pub bottom: Vec<Flat>,
    pub double: Vec<Flat>,
}

impl DescentInfo {
    pub fn des(&self) -> usize {
        self.descents.len()
    }

    pub fn is_stable(&self) -> bool {
        self.bottom.is_empty() && self.double.is_empty()
    }
}

/// Descents of a facet `S` of `N(L, G)`: the elements whose label `λ_S`
/// comes after the label of their parent in `S ∪ {1̂}`. A bottom descent
/// has no children in `S`; a double descent has children, all of them
/// descents.
pub fn descent_set(bm: &BuiltMatroid, s: &NestedSet) -> Result<DescentInfo> {
    if !bm.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let top = bm.top();
    if s.contains(top) {
        return Err(Error::NotMaximal);
    }
    let order = bm.order();
    let mut label = Vec::new();
    for (g, j) in local_bottoms(bm, s) {
        if bm.rank_of(g) - bm.rank_of(j) != 1 {
            return Err(Error::NotMaximal);
        }
        label.push((g, order.min_of(g.minus(j)).unwrap()));
    }
    let lam = |g: Flat| label.iter().find(|(x, _)| *x == g).unwrap().1;
    let descents: Vec<Flat> = s
        .elements()
        .iter()
        .copied()
        .filter(|&g| order.less(lam(s.parent(g).unwrap_or(top)), lam(g)))
        .collect();
    let mut bottom = Vec::new();
    let mut double = Vec::new();
    for &g in &descents {
        let kids = s.children(g);
        if kids.is_empty() {
            bottom.push(g);
        } else if kids.iter().all(|k| descents.contains(k)) {
            double.push(g);
        }
    }
    Ok(DescentInfo { descents, bottom, double })
}

/// Whether some element of `d` has a local interval of rank 1 within `d`.
/// For a descent set this happens exactly when the facet is not stable.
pub fn has_rank_one_local(bm: &BuiltMatroid, d: &[Flat]) -> bool {
    let s = NestedSet::trusted(bm, d.to_vec());
    local_bottoms(bm, &s).into_iter().any(|(g, j)| s.contains(g) && bm.rank_of(g) - bm.rank_of(j) == 1)
}

/// Facets together with their descent data.
pub fn facets_with_descents(bm: &BuiltMatroid) -> Result<Vec<(NestedSet, DescentInfo)>> {
    if !bm.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    maximal_nested_sets(bm)
        .into_iter()
        .map(|s| {
            let d = descent_set(bm, &s)?;
            Ok((s, d))
        })
        .collect()
}

/// Facets with no bottom and no double descents.
pub fn stable_maximal_nested_sets(bm: &BuiltMatroid) -> Result<Vec<NestedSet>> {
    Ok(facets_with_descents(bm)?.into_iter().filter(|(_, d)| d.is_stable()).map(|(s, _)| s).collect())
}

/// `Σ t^des(S)` over the stable facets.
pub fn gamma_by_descents(bm: &BuiltMatroid) -> Result<Polynomial> {
    let mut c = Vec::new();
    for (_, d) in facets_with_descents(bm)? {
        if d.is_stable() {
            if c.len() <= d.des() {
                c.resize(d.des() + 1, 0);
            }
            c[d.des()] += 1;
        }
    }
    Ok(Polynomial::new(c))
}

/// The descent formula on each restriction to a maximal building-set
/// element, multiplied together. Agrees with [`gamma_by_descents`] on
/// irreducible input.
pub fn gamma_by_descents_factored(bm: &BuiltMatroid) -> Result<Polynomial> {
    if bm.is_irreducible() {
        return gamma_by_descents(bm);
    }
    let mut out = Polynomial::one();
    for &m in bm.max_elements() {
        out = &out * &gamma_by_descents(&crate::ops::restrict(bm, m)?)?;
    }
    Ok(out)
}

/// The Γ-complex with diagnostics.
#[derive(Debug, Clone)]
pub struct GammaComplex {
    pub complex: SimplicialComplex,
    /// Whether the built matroid is complete for its order.
    pub complete: bool,
    pub downward_closed: bool,
    /// Faces missing a codimension-one subface.
    pub violations: Vec<Vec<Flat>>,
    /// Vertices that lie in no face.
    pub unused: Vec<Flat>,
    /// Descents that fall outside the expected vertex set.
    pub outside: Vec<Flat>,
}

/// Descent sets of the stable facets, on the vertex set
/// `G ∖ (C_⊴(0̂, 1̂) ∪ atoms)`.
pub fn gamma_complex(bm: &BuiltMatroid) -> Result<GammaComplex> {
    let l = bm.lattice();
    let chain = chain_unchecked(bm, l.bottom(), l.top());
    let mut vertices: Vec<Flat> =
        bm.bset().iter().filter(|g| !chain.contains(g) && bm.rank_of(*g) != 1).collect();
    let mut outside = Vec::new();
    let mut raw = Vec::new();
    for (_, d) in facets_with_descents(bm)? {
        if !d.is_stable() {
            continue;
        }
        for &g in &d.descents {
            if !vertices.contains(&g) {
                outside.push(g);
                vertices.push(g);
            }
        }
        raw.push(d.descents);
    }
    vertices.sort_by_key(|&f| l.index_of(f));
    let faces: Vec<Vec<usize>> =
        raw.iter().map(|d| d.iter().map(|g| vertices.iter().position(|v| v == g).unwrap()).collect()).collect();
    let complex = SimplicialComplex::from_faces(vertices, faces);
    let label = |f: &Vec<usize>| -> Vec<Flat> { f.iter().map(|&i| complex.vertices[i]).collect() };
    let violations: Vec<Vec<Flat>> = complex.downward_violations().iter().map(label).collect();
    let unused = complex.unused_vertices().iter().map(|&i| complex.vertices[i]).collect();
    outside.sort_by_key(|&f| l.index_of(f));
    outside.dedup();
    Ok(GammaComplex {
        downward_closed: violations.is_empty(),
        complete: is_complete(bm),
        violations,
        unused,
        outside,
        complex,
    })
}

/// Properness of the coloring by `⌊rank / 2⌋` and purity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub proper_coloring: bool,
    pub pure: bool,
    /// Common facet size when pure.
    pub facet_size: Option<usize>,
}

impl BalanceReport {
    pub fn balanced(&self) -> bool {
        self.proper_coloring && self.pure
    }
}

pub fn balanced_check(bm: &BuiltMatroid, c: &SimplicialComplex) -> BalanceReport {
    let color = |i: usize| bm.rank_of(c.vertices[i]) / 2;
    let proper_coloring = c.faces.iter().all(|f| {
        let mut cols: Vec<usize> = f.iter().map(|&i| color(i)).collect();
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    });
    let facets = c.facets();
    let pure = facets.iter().all(|f| f.len() == facets[0].len());
    BalanceReport { proper_coloring, pure, facet_size: if pure { facets.first().map(|f| f.len()) } else { None } }
}

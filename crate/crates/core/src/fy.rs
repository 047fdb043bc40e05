//! Feichtner–Yuzvinsky monomials, the Chow polynomial, and the fibers of
//! the completion map on monomials.

use crate::building::BuiltMatroid;
use crate::complete::is_complete;
use crate::descent::facets_with_descents;
use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::nested::{completion, local_bottoms, lower_sets, walk, NestedSet, Walk};
use crate::poly::Polynomial;
use std::collections::BTreeMap;

/// `Π x_F^{α_F}` over a nested set of `cN`; `support` is in lattice order
/// and `exponents` runs parallel to it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FYMonomial {
    pub support: Vec<Flat>,
    pub exponents: Vec<u32>,
}

impl FYMonomial {
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&a| a as usize).sum()
    }

    /// Checks `0 < α_F < rank F − rank J^F` with `J^F` taken in the support.
    pub fn is_valid(&self, bm: &BuiltMatroid) -> bool {
        if !crate::nested::is_nested(bm, &self.support) {
            return false;
        }
        let s = NestedSet::trusted(bm, self.support.clone());
        self.support.iter().zip(&self.exponents).all(|(&f, &a)| {
            let j = s.jbottom(f).unwrap();
            a > 0 && (a as usize) < bm.rank_of(f) - bm.rank_of(j)
        })
    }
}

pub fn for_each_fy_monomial(bm: &BuiltMatroid, f: &mut dyn FnMut(&FYMonomial)) {
    let l = bm.lattice();
    walk(bm, Walk::Fy, &mut |_, exps| {
        let mut pairs = exps.to_vec();
        pairs.sort_by_key(|&(g, _)| l.index_of(g));
        let m = FYMonomial { support: pairs.iter().map(|p| p.0).collect(), exponents: pairs.iter().map(|p| p.1).collect() };
        f(&m)
    });
}

/// All FY monomials, sorted.
pub fn fy_monomials(bm: &BuiltMatroid) -> Vec<FYMonomial> {
    let mut out = Vec::new();
    for_each_fy_monomial(bm, &mut |m| out.push(m.clone()));
    out.sort();
    out
}

/// Counts FY monomials by degree, one at a time.
pub fn chow_by_enumeration(bm: &BuiltMatroid) -> Polynomial {
    let mut c = vec![0i64; bm.rank() + 1];
    for_each_fy_monomial(bm, &mut |m| c[m.degree()] += 1);
    Polynomial::new(c)
}

/// The Chow polynomial as the FY monomial count, by dynamic programming
/// over the lattice: `B(G)` sums monomials whose support has top element
/// `G`, and every flat `X` contributes the product of `B` over its factors.
pub fn chow_polynomial(bm: &BuiltMatroid) -> Polynomial {
    let l = bm.lattice();
    let below = lower_sets(bm);
    let mut b: Vec<Polynomial> = vec![Polynomial::zero(); l.len()];
    let mut p: Vec<Polynomial> = vec![Polynomial::zero(); l.len()];
    for i in 0..l.len() {
        let f = l.flats()[i];
        if bm.in_bset(f) {
            let r = l.rank_at(i);
            b[i] = below[i]
                .iter()
                .filter(|&&j| r - l.rank_at(j) >= 2)
                .map(|&j| &Polynomial::range(1, r - l.rank_at(j) - 1) * &p[j])
                .sum();
        }
        p[i] = bm.factors(f).iter().map(|&g| b[l.index_of(g).unwrap()].clone()).product();
    }
    p.into_iter().sum()
}

/// The completion of the support of `m` with maximal elements removed.
pub fn psi(bm: &BuiltMatroid, m: &FYMonomial) -> Result<NestedSet> {
    let s: Vec<Flat> = m.support.iter().copied().filter(|&f| !bm.is_max_element(f)).collect();
    completion(bm, &NestedSet::trusted(bm, s))
}

/// `t^d (1+t)^(r-1-2d)`.
pub fn fiber_target(rank: usize, des: usize) -> Polynomial {
    Polynomial::one_plus_t().pow(rank - 1 - 2 * des).shift(des)
}

/// Groups the FY monomials by `Ψ` and checks that the fibers are exactly
/// the stable facets, each with generating polynomial `t^des (1+t)^(r-1-2des)`.
pub fn psi_fibers(bm: &BuiltMatroid) -> Result<Vec<(NestedSet, Polynomial)>> {
    if !bm.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    if !is_complete(bm) {
        return Err(Error::NotComplete);
    }
    let mut fibers: BTreeMap<NestedSet, Vec<i64>> = BTreeMap::new();
    let mut err = None;
    for_each_fy_monomial(bm, &mut |m| {
        if err.is_some() {
            return;
        }
        match psi(bm, m) {
            Ok(s) => {
                let c = fibers.entry(s).or_default();
                if c.len() <= m.degree() {
                    c.resize(m.degree() + 1, 0);
                }
                c[m.degree()] += 1;
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let stable: Vec<(NestedSet, usize)> =
        facets_with_descents(bm)?.into_iter().filter(|(_, d)| d.is_stable()).map(|(s, d)| (s, d.des())).collect();
    let mut out = Vec::new();
    for (s, c) in fibers {
        let poly = Polynomial::new(c);
        match stable.iter().find(|(t, _)| *t == s) {
            Some(&(_, des)) if poly == fiber_target(bm.rank(), des) => out.push((s, poly)),
            _ => return Err(Error::FiberMismatch(s.elements().to_vec())),
        }
    }
    if let Some((s, _)) = stable.iter().find(|(s, _)| !out.iter().any(|(t, _)| t == s)) {
        return Err(Error::FiberMismatch(s.elements().to_vec()));
    }
    Ok(out)
}

/// The monomials in the fiber of `Ψ` over the facet `s`. Their supports lie
/// in `s ∪ max G`, so only those subsets are searched.
pub fn psi_fiber(bm: &BuiltMatroid, s: &NestedSet) -> Result<Vec<FYMonomial>> {
    let mut pool: Vec<Flat> = s.elements().to_vec();
    pool.extend(bm.max_elements().iter().copied().filter(|m| !s.contains(*m)));
    if pool.len() > 20 {
        return Err(Error::TooLarge(format!("fiber search over {} elements", pool.len())));
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << pool.len() {
        let sup: Vec<Flat> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
        if !crate::nested::is_nested(bm, &sup) {
            continue;
        }
        let ns = NestedSet::trusted(bm, sup);
        let gaps: Vec<usize> = local_bottoms(bm, &ns)
            .into_iter()
            .filter(|(g, _)| ns.contains(*g))
            .map(|(g, j)| bm.rank_of(g) - bm.rank_of(j))
            .collect();
        if gaps.iter().any(|&g| g < 2) {
            continue;
        }
        let mut exps = vec![1u32; gaps.len()];
        loop {
            let m = FYMonomial { support: ns.elements().to_vec(), exponents: exps.clone() };
            if psi(bm, &m)? == *s {
                out.push(m);
            }
            let mut k = 0;
            while k < exps.len() {
                exps[k] += 1;
                if (exps[k] as usize) < gaps[k] {
                    break;
                }
                exps[k] = 1;
                k += 1;
            }
            if k == exps.len() {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

//! The Chow polynomial along a binary filtration: each added flat is a
//! stellar subdivision of the nested set fan, whose effect on the Hilbert
//! series is known in two cases.

use crate::building::{BuildingSet, BuiltMatroid};
use crate::complete::greedy_binary;
use crate::error::{Error, Result};
use crate::fy::chow_polynomial;
use crate::nested::{link_decomposition, NestedSet};
use crate::poly::Polynomial;

/// One step of the computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StellarStep {
    pub added: crate::flat::Flat,
    pub both_maximal: bool,
    pub after: Polynomial,
}

/// Walks a binary filtration from `base` to the building set of `bm`. When
/// both factors of the added flat are maximal the series is multiplied by
/// `1 + t`; when neither is, `t` times the product of the local series of
/// the star of the two factors is added. Mixed steps are rejected.
pub fn chow_filtration_steps(bm: &BuiltMatroid, base: &BuildingSet) -> Result<(Polynomial, Vec<StellarStep>)> {
    let filt = greedy_binary(bm, base).map_err(|e| match e {
        Error::Stuck(_) => Error::NoBinaryFiltration,
        other => other,
    })?;
    let start = BuiltMatroid::trusted(bm.matroid().clone(), base.clone(), bm.order().clone());
    let mut h = chow_polynomial(&start);
    let mut steps = Vec::new();
    for (i, &a) in filt.added.iter().enumerate() {
        let prev = BuiltMatroid::trusted(bm.matroid().clone(), filt.sets[i].clone(), bm.order().clone());
        let fac = prev.factors(a).to_vec();
        if fac.len() != 2 {
            return Err(Error::NoBinaryFiltration);
        }
        let maxed: Vec<bool> = fac.iter().map(|&f| prev.is_max_element(f)).collect();
        if maxed[0] != maxed[1] {
            return Err(Error::MixedFactorStep(a));
        }
        if maxed[0] {
            h = &h * &Polynomial::one_plus_t();
        } else {
            let star = NestedSet::trusted(&prev, fac);
            let local: Polynomial = link_decomposition(&prev, &star)?.iter().map(|li| chow_polynomial(&li.built)).product();
            h = &h + &local.shift(1);
        }
        steps.push(StellarStep { added: a, both_maximal: maxed[0], after: h.clone() });
    }
    Ok((h, steps))
}

pub fn chow_by_filtration(bm: &BuiltMatroid, base: &BuildingSet) -> Result<Polynomial> {
    Ok(chow_filtration_steps(bm, base)?.0)
}

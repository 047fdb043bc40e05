//! The Chow polynomial by deleting the ⊴-largest element, recursively.

use crate::building::BuiltMatroid;
use crate::error::Result;
use crate::flat::{compress, full_mask, Flat};
use crate::ops::{contract, delete_element, restrict, simplify};
use crate::poly::Polynomial;
use std::collections::HashMap;

type Key = (usize, Vec<u64>, Vec<u64>);

/// Memoizes on the relabeled lattice and building set.
#[derive(Default)]
pub struct DeletionSolver {
    memo: HashMap<Key, Polynomial>,
}

impl DeletionSolver {
    pub fn new() -> DeletionSolver {
        DeletionSolver::default()
    }

    /// `H(M, G) = H(M∖e, G∖e) + Σ_{F ∈ S_e} (t + ⋯ + t^{n_F}) H((M∖e)^{F∖e}) H(M_F)`
    /// with `e` the ⊴-largest element and `S_e` the elements of `G` other
    /// than `{e}` in which `e` is a coloop.
    pub fn solve(&mut self, bm: &BuiltMatroid) -> Result<Polynomial> {
        let (bm, _) = simplify(bm);
        let key = (bm.n(), bm.lattice().flats().iter().map(|f| f.0).collect(), bm.bset().iter().map(|f| f.0).collect());
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let out = self.compute(&bm)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn compute(&mut self, bm: &BuiltMatroid) -> Result<Polynomial> {
        if bm.n() <= 1 {
            return Ok(Polynomial::one());
        }
        if !bm.is_irreducible() {
            let mut out = Polynomial::one();
            for &m in bm.max_elements() {
                out = &out * &self.solve(&restrict(bm, m)?)?;
            }
            return Ok(out);
        }
        let l = bm.lattice();
        let e = bm.order().max_element().unwrap();
        let del = delete_element(bm, e)?;
        let keep = full_mask(bm.n()) & !(1u64 << e);
        let mut out = self.solve(&del)?;
        for f in bm.bset().iter() {
            let rest = f.without(e);
            if !f.contains(e) || rest.is_empty() || l.rank_of_set(rest) + 1 != bm.rank_of(f) {
                continue;
            }
            let rest = Flat(compress(rest.0, keep));
            let n_f = del.factors(rest).len();
            let below = self.solve(&restrict(&del, rest)?)?;
            let above = if f == bm.top() { Polynomial::one() } else { self.solve(&contract(bm, f)?)? };
            out = &out + &(&(&Polynomial::range(1, n_f) * &below) * &above);
        }
        Ok(out)
    }
}

pub fn chow_by_deletion(bm: &BuiltMatroid) -> Result<Polynomial> {
    DeletionSolver::new().solve(bm)
}

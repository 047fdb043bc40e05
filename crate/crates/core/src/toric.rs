//! Graded dimensions of the toric presentation of the Chow ring: the
//! Stanley–Reisner ring of the reduced nested set complex modulo the linear
//! forms that vanish on the maximal elements. Exact rational linear algebra,
//! one degree at a time.

use crate::building::BuiltMatroid;
use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::nested::for_each_nested_set;
use crate::poly::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Largest number of rays the oracle accepts.
pub const MAX_RAYS: usize = 12;

/// The rays `e_G` for `G ∈ G ∖ max G`.
pub fn rays(bm: &BuiltMatroid) -> Vec<Flat> {
    bm.bset().iter().filter(|g| !bm.is_max_element(*g)).collect()
}

/// Incremental row echelon form over the rationals. Rows are kept with a
/// leading coefficient of one.
struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { pivots: HashMap::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut row: BTreeMap<usize, BigRational>) {
        loop {
            let Some((&c, lead)) = row.iter().next() else { return };
            let lead = lead.clone();
            match self.pivots.get(&c) {
                Some(p) => {
                    for (&k, v) in p {
                        let e = row.entry(k).or_insert_with(BigRational::zero);
                        *e -= &lead * v;
                        if e.is_zero() {
                            row.remove(&k);
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / lead;
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(c, row);
                    return;
                }
            }
        }
    }
}

/// Exponent vectors of degree `d` whose support is a face.
fn face_monomials(faces: &[u32], k: usize, d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for &f in faces {
        let idx: Vec<usize> = (0..k).filter(|i| f >> i & 1 == 1).collect();
        if idx.len() > d || (idx.is_empty() && d > 0) {
            continue;
        }
        // distribute d among the support, each at least one
        let mut e = vec![0u8; k];
        fn rec(idx: &[usize], pos: usize, left: usize, e: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if pos + 1 == idx.len() {
                e[idx[pos]] = left as u8;
                out.push(e.clone());
                return;
            }
            let rest = idx.len() - pos - 1;
            for a in 1..=left - rest {
                e[idx[pos]] = a as u8;
                rec(idx, pos + 1, left - a, e, out);
            }
            e[idx[pos]] = 0;
        }
        if idx.is_empty() {
            out.push(e);
        } else {
            rec(&idx, 0, d, &mut e, &mut out);
        }
    }
    out
}

/// Hilbert function of `Q[x_G]/(I + J)` degree by degree, where `I` is the
/// non-face ideal of `N(L, G)` and `J` is spanned by
/// `Σ_{G ∋ a} x_G − Σ_{G ∋ b} x_G` for `a, b` in the same maximal element.
pub fn toric_hilbert_oracle(bm: &BuiltMatroid, max_rank: usize) -> Result<Polynomial> {
    let rays = rays(bm);
    let k = rays.len();
    if k > MAX_RAYS || bm.rank() > max_rank {
        return Err(Error::TooLarge(format!("{k} rays at rank {}; limits are {MAX_RAYS} rays and rank {max_rank}", bm.rank())));
    }
    let mut faces = Vec::new();
    for_each_nested_set(bm, true, &mut |s| {
        faces.push(s.iter().fold(0u32, |acc, f| acc | 1 << rays.iter().position(|r| r == f).unwrap()));
    });
    let face_set: HashSet<u32> = faces.iter().copied().collect();
    let mut forms: Vec<Vec<i64>> = Vec::new();
    for &m in bm.max_elements() {
        let el = m.to_vec();
        for &b in &el[1..] {
            let c: Vec<i64> = rays.iter().map(|g| i64::from(g.contains(el[0])) - i64::from(g.contains(b))).collect();
            if c.iter().any(|&x| x != 0) {
                forms.push(c);
            }
        }
    }
    let support = |e: &[u8]| e.iter().enumerate().fold(0u32, |acc, (i, &a)| if a > 0 { acc | 1 << i } else { acc });
    let mut dims = vec![1i64];
    let mut prev = face_monomials(&faces, k, 0);
    for d in 1..=bm.rank() {
        let cols = face_monomials(&faces, k, d);
        if cols.is_empty() {
            break;
        }
        let index: HashMap<&Vec<u8>, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = Echelon::new();
        for th in &forms {
            for m in &prev {
                let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
                for (g, &c) in th.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mut e = m.clone();
                    e[g] += 1;
                    if !face_set.contains(&support(&e)) {
                        continue;
                    }
                    let col = index[&e];
                    let v = row.entry(col).or_insert_with(BigRational::zero);
                    *v += BigRational::from_integer(BigInt::from(c));
                    if v.is_zero() {
                        row.remove(&col);
                    }
                }
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
        let dim = cols.len() as i64 - ech.rank() as i64;
        dims.push(dim);
        if dim == 0 {
            break;
        }
        prev = cols;
    }
    Ok(Polynomial::new(dims))
}

//! Finite checks on polynomials: unimodality, log-concavity,
//! γ-positivity, exact real-rootedness, Kruskal–Katona and g-vectors.

use crate::poly::{binomial, gamma_expansion, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyReport {
    pub palindromic: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    pub no_internal_zeros: bool,
    /// `None` when the polynomial is not palindromic.
    pub gamma_positive: Option<bool>,
    pub real_rooted: bool,
    /// Distinct real roots found by the Sturm sequence.
    pub distinct_real_roots: usize,
}

pub fn is_unimodal(c: &[i64]) -> bool {
    let mut i = 0;
    while i + 1 < c.len() && c[i] <= c[i + 1] {
        i += 1;
    }
    while i + 1 < c.len() && c[i] >= c[i + 1] {
        i += 1;
    }
    i + 1 >= c.len()
}

pub fn is_log_concave(c: &[i64]) -> bool {
    (1..c.len().saturating_sub(1)).all(|i| (c[i] as i128) * (c[i] as i128) >= (c[i - 1] as i128) * (c[i + 1] as i128))
}

pub fn has_no_internal_zeros(c: &[i64]) -> bool {
    let nz: Vec<usize> = (0..c.len()).filter(|&i| c[i] != 0).collect();
    match (nz.first(), nz.last()) {
        (Some(&a), Some(&b)) => (a..=b).all(|i| c[i] != 0),
        _ => true,
    }
}

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / b.last().unwrap();
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
        r.pop();
        r = q_trim(r);
    }
    (q_trim(q), r)
}

fn q_rem(a: &QPoly, b: &QPoly) -> QPoly {
    q_divrem(a, b).1
}

fn q_div(a: &QPoly, b: &QPoly) -> QPoly {
    q_divrem(a, b).0
}

fn q_deriv(p: &QPoly) -> QPoly {
    q_trim((1..p.len()).map(|i| &p[i] * BigRational::from_integer(BigInt::from(i))).collect())
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = q_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Sign changes of the Sturm sequence at `±∞` give the number of distinct
/// real roots.
fn sturm_real_roots(p: &QPoly) -> usize {
    if p.len() <= 1 {
        return 0;
    }
    let mut seq = vec![p.clone(), q_deriv(p)];
    loop {
        let n = seq.len();
        let r = q_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|x| -x).collect());
    }
    let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let at_pos: Vec<bool> = seq.iter().map(|q| q.last().unwrap().is_positive()).collect();
    let at_neg: Vec<bool> =
        seq.iter().map(|q| q.last().unwrap().is_positive() == ((q.len() - 1) % 2 == 0)).collect();
    changes(at_neg) - changes(at_pos)
}

/// All roots real: the square-free part has as many distinct real roots as
/// its degree.
pub fn real_root_count(p: &Polynomial) -> (usize, bool) {
    let q: QPoly = p.coeffs().iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    if q.len() <= 1 {
        return (0, !q.is_empty());
    }
    let g = q_gcd(&q, &q_deriv(&q));
    let sf = q_div(&q, &g);
    let n = sturm_real_roots(&sf);
    (n, n == sf.len() - 1)
}

pub fn poly_diagnostics(p: &Polynomial) -> PolyReport {
    let c = p.coeffs();
    let (n, rr) = real_root_count(p);
    PolyReport {
        palindromic: p.is_palindromic(),
        unimodal: is_unimodal(c),
        log_concave: is_log_concave(c) && has_no_internal_zeros(c),
        no_internal_zeros: has_no_internal_zeros(c),
        gamma_positive: gamma_expansion(p).ok().map(|g| g.is_positive()),
        real_rooted: rr,
        distinct_real_roots: n,
    }
}

/// The `k`-cascade `m = C(a_k, k) + C(a_{k-1}, k-1) + ⋯` with
/// `a_k > a_{k-1} > ⋯`.
fn cascade(mut m: i64, k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut j = k;
    while m > 0 && j > 0 {
        let mut a = j;
        while binomial(a + 1, j) <= m {
            a += 1;
        }
        out.push((a, j));
        m -= binomial(a, j);
        j -= 1;
    }
    out
}

/// Kruskal–Katona: `f[i]` counts faces with `i` vertices, `f[0] = 1`, and
/// each `f[i+1]` is at most the Macaulay bound of `f[i]`.
pub fn kruskal_katona_check(f: &[i64]) -> bool {
    if f.is_empty() {
        return true;
    }
    if f[0] != 1 || f.iter().any(|&x| x < 0) {
        return false;
    }
    (1..f.len() - 1).all(|i| {
        let bound: i64 = cascade(f[i], i).iter().map(|&(a, j)| binomial(a, j + 1)).sum();
        f[i + 1] <= bound
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GReport {
    /// `g_i = h_i − h_{i−1}` for `i ≤ d/2`.
    pub g: Vec<i64>,
    pub g_nonnegative: bool,
    /// `g_2 ≤ C(g_1, 2)`, when `g_2` exists.
    pub g2_bound: Option<bool>,
    pub gamma: Option<Vec<i64>>,
    pub gamma_kruskal_katona: Option<bool>,
    /// `4 γ_2 ≤ γ_1^2` with `γ_2 = 0` when absent.
    pub balanced_bound: Option<bool>,
}

pub fn g_vector_report(p: &Polynomial) -> GReport {
    let h = p.coeffs();
    let d = p.degree();
    let g: Vec<i64> = (0..=d / 2).map(|i| h.get(i).copied().unwrap_or(0) - if i == 0 { 0 } else { h[i - 1] }).collect();
    let g2_bound = (g.len() > 2).then(|| g[2] <= binomial(g[1].max(0) as usize, 2));
    let gamma = gamma_expansion(p).ok().map(|gv| gv.gammas);
    let gamma_kruskal_katona = gamma.as_ref().map(|gm| kruskal_katona_check(gm));
    let balanced_bound = gamma.as_ref().filter(|gm| gm.len() >= 2).map(|gm| {
        let g2 = gm.get(2).copied().unwrap_or(0) as i128;
        4 * g2 <= (gm[1] as i128) * (gm[1] as i128)
    });
    GReport { g_nonnegative: g.iter().all(|&x| x >= 0), g, g2_bound, gamma, gamma_kruskal_katona, balanced_bound }
}

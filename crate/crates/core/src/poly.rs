//! Exact integer polynomials and γ-vectors.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul};

/// Integer coefficients in ascending degree with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Polynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial { coeffs: vec![1] }
    }

    pub fn monomial(k: usize) -> Polynomial {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Polynomial { coeffs: c }
    }

    /// `t^lo + ⋯ + t^hi`, zero when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Polynomial {
        if lo > hi {
            return Polynomial::zero();
        }
        let mut c = vec![0; hi + 1];
        for x in &mut c[lo..] {
            *x = 1;
        }
        Polynomial { coeffs: c }
    }

    /// `1 + t`.
    pub fn one_plus_t() -> Polynomial {
        Polynomial { coeffs: vec![1, 1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        Polynomial { coeffs: c }
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len()).all(|i| c[i] == c[c.len() - 1 - i])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::new(c)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |a, b| &a * &b)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients of a palindromic polynomial of degree `d` in the basis
/// `t^i (1+t)^(d-2i)`, `0 ≤ i ≤ d/2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaVector {
    pub gammas: Vec<i64>,
    pub degree: usize,
}

impl GammaVector {
    pub fn is_positive(&self) -> bool {
        self.gammas.iter().all(|&g| g >= 0)
    }

    pub fn as_polynomial(&self) -> Polynomial {
        Polynomial::new(self.gammas.clone())
    }

    /// `Σ γ_i t^i (1+t)^(d-2i)`.
    pub fn reconstruct(&self) -> Polynomial {
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, &g)| Polynomial::one_plus_t().pow(self.degree - 2 * i).shift(i).scale(g))
            .sum()
    }
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

/// The γ-vector of a palindromic polynomial, by peeling off
/// `t^i (1+t)^(d-2i)` from the lowest coefficient upward.
pub fn gamma_expansion(p: &Polynomial) -> Result<GammaVector> {
    if p.is_zero() || !p.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    let d = p.degree();
    let mut gammas: Vec<i64> = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let mut g = p.coeff(i);
        for (j, &gj) in gammas.iter().enumerate() {
            g -= gj * binomial(d - 2 * j, i - j);
        }
        gammas.push(g);
    }
    let gv = GammaVector { gammas, degree: d };
    debug_assert_eq!(&gv.reconstruct(), p);
    Ok(gv)
}

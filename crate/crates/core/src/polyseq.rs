//! Dense integer polynomials in one variable `q`, truncated bivariate series
//! in `q` and `t`, and the coefficient-sequence diagnostics (unimodality,
//! peaks, symmetry, flawlessness, log-concavity).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are always
/// trimmed, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    #[serde(with = "crate::bigser::vec")]
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `1 + q + ... + q^(len-1)`, i.e. the q-integer `[len]_q`.
    pub fn geometric(len: usize) -> Self {
        IntPoly {
            coeffs: vec![BigInt::one(); len],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Value at `q = 1`, by exact summation.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn add_assign_ref(&mut self, other: &IntPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }

    /// The coefficients as decimal strings, lowest degree first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn diagnose(&self) -> Result<SeqDiagnostics> {
        diagnose(self)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

pub fn poly_add(p: &IntPoly, r: &IntPoly) -> IntPoly {
    p + r
}

pub fn poly_mul(p: &IntPoly, r: &IntPoly) -> IntPoly {
    p * r
}

pub fn shift(p: &IntPoly, k: usize) -> IntPoly {
    p.shift(k)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Verdicts about the coefficient sequence `a_0, ..., a_N` of a nonzero
/// polynomial of degree `N`.
///
/// Peaks are counted after collapsing runs of equal adjacent coefficients
/// into blocks; a block is a peak when it is strictly above each adjacent
/// block. `peak_degrees` lists every degree covered by a peak block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqDiagnostics {
    pub unimodal: bool,
    pub peak_count: usize,
    pub peak_degrees: Vec<usize>,
    pub symmetric: bool,
    pub flawless: bool,
    pub log_concave: bool,
    /// Least `i` with `a_{i-1} > a_i < a_j` for some `j > i`.
    pub first_dip: Option<usize>,
}

pub fn diagnose(p: &IntPoly) -> Result<SeqDiagnostics> {
    let a = p.coeffs();
    if a.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let n = a.len() - 1;

    // blocks of equal adjacent values: (start, end inclusive)
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if a[i] != a[start] {
            blocks.push((start, i - 1));
            start = i;
        }
    }
    blocks.push((start, n));

    let mut peak_count = 0;
    let mut peak_degrees = Vec::new();
    for (k, &(s, e)) in blocks.iter().enumerate() {
        let v = &a[s];
        let left_ok = k == 0 || *v > a[blocks[k - 1].0];
        let right_ok = k + 1 == blocks.len() || *v > a[blocks[k + 1].0];
        if left_ok && right_ok {
            peak_count += 1;
            peak_degrees.extend(s..=e);
        }
    }

    // suffix maxima give the "some later a_j is larger" test in one pass
    let mut first_dip = None;
    if n >= 2 {
        let mut suffix_max = vec![BigInt::zero(); n + 1];
        suffix_max[n] = a[n].clone();
        for i in (0..n).rev() {
            suffix_max[i] = if a[i] > suffix_max[i + 1] {
                a[i].clone()
            } else {
                suffix_max[i + 1].clone()
            };
        }
        first_dip = (1..n).find(|&i| a[i - 1] > a[i] && suffix_max[i + 1] > a[i]);
    }

    let symmetric = (0..=n / 2).all(|i| a[i] == a[n - i]);
    let flawless = (0..=n / 2).all(|i| a[i] <= a[n - i]);

    let first_nz = a.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let no_internal_zeros = a[first_nz..].iter().all(|c| !c.is_zero());
    let log_concave = no_internal_zeros && (1..n).all(|i| &a[i] * &a[i] >= &a[i - 1] * &a[i + 1]);

    Ok(SeqDiagnostics {
        unimodal: first_dip.is_none(),
        peak_count,
        peak_degrees,
        symmetric,
        flawless,
        log_concave,
        first_dip,
    })
}

/// Denominator factor `1 - q^q_exp * t^t_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeomFactor {
    pub q_exp: usize,
    pub t_exp: usize,
}

impl GeomFactor {
    pub fn new(q_exp: usize, t_exp: usize) -> Self {
        GeomFactor { q_exp, t_exp }
    }
}

/// One numerator term `coef * q^q_exp * t^t_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub coef: i64,
    pub q_exp: usize,
    pub t_exp: usize,
}

impl Monomial {
    pub fn new(coef: i64, q_exp: usize, t_exp: usize) -> Self {
        Monomial { coef, q_exp, t_exp }
    }
}

/// A rational function `numerator / prod (1 - q^α t^β)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSpec {
    pub numerator: Vec<Monomial>,
    pub denominator: Vec<GeomFactor>,
}

impl RationalSpec {
    pub fn new(numerator: Vec<Monomial>, denominator: Vec<GeomFactor>) -> Self {
        RationalSpec { numerator, denominator }
    }
}

/// Power series in `q` and `t` truncated to `i <= qmax`, `j <= tmax`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivarSeries {
    qmax: usize,
    tmax: usize,
    #[serde(with = "crate::bigser::vec2")]
    coeffs: Vec<Vec<BigInt>>,
}

impl BivarSeries {
    pub fn zero(qmax: usize, tmax: usize) -> Self {
        BivarSeries {
            qmax,
            tmax,
            coeffs: vec![vec![BigInt::zero(); tmax + 1]; qmax + 1],
        }
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    pub fn tmax(&self) -> usize {
        self.tmax
    }

    /// Coefficient of `q^i t^j`; zero outside the truncation box.
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        if i > self.qmax || j > self.tmax {
            return BigInt::zero();
        }
        self.coeffs[i][j].clone()
    }

    /// The `q^i` slice as a polynomial in `t`.
    pub fn q_slice(&self, i: usize) -> IntPoly {
        if i > self.qmax {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs[i].clone())
    }

    fn add_monomial(&mut self, m: &Monomial) {
        if m.q_exp <= self.qmax && m.t_exp <= self.tmax {
            self.coeffs[m.q_exp][m.t_exp] += m.coef;
        }
    }

    /// Divide in place by `1 - q^α t^β`, i.e. multiply by the geometric
    /// series `sum_k q^{kα} t^{kβ}`.
    fn divide_by(&mut self, f: GeomFactor) {
        for i in f.q_exp..=self.qmax {
            for j in f.t_exp..=self.tmax {
                let prev = self.coeffs[i - f.q_exp][j - f.t_exp].clone();
                if !prev.is_zero() {
                    self.coeffs[i][j] += prev;
                }
            }
        }
    }

    /// Multiply by `(1 - q^α t^β)`, exact inside the truncation box.
    pub fn mul_one_minus(&self, f: GeomFactor) -> Self {
        let mut out = self.clone();
        for i in (f.q_exp..=self.qmax).rev() {
            for j in (f.t_exp..=self.tmax).rev() {
                let sub = self.coeffs[i - f.q_exp][j - f.t_exp].clone();
                out.coeffs[i][j] -= sub;
            }
        }
        out
    }

    pub fn add(&self, other: &BivarSeries) -> Result<Self> {
        if self.qmax != other.qmax || self.tmax != other.tmax {
            return Err(Error::TruncationMismatch);
        }
        let mut out = self.clone();
        for (row, orow) in out.coeffs.iter_mut().zip(&other.coeffs) {
            for (c, o) in row.iter_mut().zip(orow) {
                *c += o;
            }
        }
        Ok(out)
    }
}

pub fn bivar_expand(spec: &RationalSpec, qmax: usize, tmax: usize) -> Result<BivarSeries> {
    if let Some(bad) = spec.denominator.iter().find(|f| f.q_exp + f.t_exp == 0) {
        return Err(Error::MalformedFactor(bad.q_exp, bad.t_exp));
    }
    let mut s = BivarSeries::zero(qmax, tmax);
    for m in &spec.numerator {
        s.add_monomial(m);
    }
    for &f in &spec.denominator {
        s.divide_by(f);
    }
    Ok(s)
}

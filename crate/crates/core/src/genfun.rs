//! Rank-generating functions of containment posets.
//!
//! `F_λ` counts strict partitions inside a shifted shape, `G_λ` counts
//! arbitrary partitions inside a straight shape; both are computed by the
//! row recursion
//!
//! ```text
//! N(i, cap) = 1 + sum_{v=1}^{cap} q^v N(i+1, min(λ_{i+1}, v - 1))   (strict)
//! N(i, cap) = 1 + sum_{v=1}^{cap} q^v N(i+1, min(λ_{i+1}, v))       (weak)
//! ```
//!
//! tabulated per row over all caps. Consecutive caps differ by a single
//! shifted term, so each table entry costs one polynomial addition. The
//! table runs in `u64` and is redone over big integers only on overflow.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyseq::IntPoly;
use crate::shapes::{make_family, Shape, ShapeFamily, StraightShape, StrictShape};

pub const DEFAULT_ORACLE_BUDGET: usize = 60;

/// Whether the counted partitions `μ` must have distinct parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Strict,
    Weak,
}

trait Acc: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    /// `false` on overflow.
    fn try_add(&mut self, other: &Self) -> bool;
}

impl Acc for u64 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn try_add(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Acc for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn try_add(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
}

fn row_table<T: Acc>(parts: &[usize], mode: Containment) -> Option<Vec<T>> {
    // Row past the last: N = 1 for every cap.
    let mut next: Vec<Vec<T>> = vec![vec![T::one()]];
    let mut next_cap = 0usize;
    for &li in parts.iter().rev() {
        let mut cur: Vec<Vec<T>> = Vec::with_capacity(li + 1);
        cur.push(vec![T::one()]);
        for c in 1..=li {
            let below = match mode {
                Containment::Strict => c - 1,
                Containment::Weak => c,
            };
            let sub = &next[below.min(next_cap)];
            let mut poly = cur[c - 1].clone();
            if poly.len() < sub.len() + c {
                poly.resize(sub.len() + c, T::zero());
            }
            for (k, v) in sub.iter().enumerate() {
                if !poly[k + c].try_add(v) {
                    return None;
                }
            }
            cur.push(poly);
        }
        next = cur;
        next_cap = li;
    }
    next.pop()
}

fn containment_rgf(parts: &[usize], mode: Containment) -> IntPoly {
    match row_table::<u64>(parts, mode) {
        Some(c) => IntPoly::from_u64s(&c),
        None => IntPoly::from_coeffs(row_table::<BigInt>(parts, mode).expect("big integer addition cannot overflow")),
    }
}

/// `F_λ`: strict partitions inside the shifted shape `λ`, counted by size.
pub fn rgf_shifted(lambda: &StrictShape) -> IntPoly {
    containment_rgf(lambda.parts(), Containment::Strict)
}

/// `G_λ`: arbitrary partitions inside the straight shape `λ`, counted by size.
pub fn rgf_straight(lambda: &StraightShape) -> IntPoly {
    containment_rgf(lambda.parts(), Containment::Weak)
}

/// `F` for strict shapes and `G` for straight ones.
pub fn rgf(shape: &Shape) -> IntPoly {
    match shape {
        Shape::Strict(s) => rgf_shifted(s),
        Shape::Straight(s) => rgf_straight(s),
    }
}

/// Brute-force enumeration of every partition inside `parts`, used as an
/// independent check on the row recursion.
pub fn oracle_rgf(parts: &[usize], mode: Containment, budget: usize) -> Result<IntPoly> {
    let size: usize = parts.iter().sum();
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    fn walk(parts: &[usize], row: usize, prev: usize, sum: usize, mode: Containment, counts: &mut [u64]) {
        counts[sum] += 1;
        if row == parts.len() {
            return;
        }
        let hi = match mode {
            Containment::Strict if row > 0 => prev.saturating_sub(1),
            _ => prev,
        };
        for v in 1..=hi.min(parts[row]) {
            walk(parts, row + 1, v, sum + v, mode, counts);
        }
    }
    let mut counts = vec![0u64; size + 1];
    walk(parts, 0, usize::MAX, 0, mode, &mut counts);
    Ok(IntPoly::from_u64s(&counts))
}

fn qbinom_cache() -> &'static Mutex<HashMap<(usize, usize), IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `C(m, k)_q` for every `m` in `0..=nmax` (zero for `m < k`), in one pass
/// of the Pascal recursion `C(m+1, j) = C(m, j-1) + q^j C(m, j)`.
pub fn qbinom_column(k: usize, nmax: usize) -> Vec<IntPoly> {
    let mut row = vec![IntPoly::zero(); k + 1];
    row[0] = IntPoly::one();
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(row[k].clone());
    for _ in 0..nmax {
        for j in (1..=k).rev() {
            let shifted = row[j].shift(j);
            row[j] = &row[j - 1] + &shifted;
        }
        out.push(row[k].clone());
    }
    out
}

/// Gaussian polynomial `C(n, k)_q`. Results are cached process-wide.
pub fn qbinom(n: usize, k: usize) -> Result<IntPoly> {
    if k > n {
        return Err(Error::BinomBounds { n, k });
    }
    if let Some(p) = qbinom_cache().lock().expect("qbinom cache poisoned").get(&(n, k)) {
        return Ok(p.clone());
    }
    let p = qbinom_column(k, n).pop().expect("column has n + 1 entries");
    qbinom_cache()
        .lock()
        .expect("qbinom cache poisoned")
        .insert((n, k), p.clone());
    Ok(p)
}

/// `C(n, k)_q`, or zero when `k > n`.
pub fn qbinom_or_zero(n: usize, k: usize) -> IntPoly {
    qbinom(n, k).unwrap_or_default()
}

/// The shifted-shape q-analog of `binomial(a, b)`: `F` of
/// `⟨a-1, a-3, …, a-(2b-1)⟩`.
pub fn qanalog(a: usize, b: usize) -> Result<IntPoly> {
    let shape = make_family(&ShapeFamily::QAnalog { a, b })?;
    Ok(rgf(&shape))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strict(p: &[usize]) -> StrictShape {
        StrictShape::new(p.iter().copied()).unwrap()
    }

    fn straight(p: &[usize]) -> StraightShape {
        StraightShape::new(p.iter().copied()).unwrap()
    }

    #[test]
    fn four_two_one() {
        let f = rgf_shifted(&strict(&[4, 2, 1]));
        assert_eq!(f, IntPoly::from_i64s(&[1, 1, 1, 2, 2, 2, 2, 1]));
        let o = oracle_rgf(&[4, 2, 1], Containment::Strict, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(o, f);
        assert_eq!(o.eval_at_one(), BigInt::from(12));
    }

    #[test]
    fn small_cases() {
        assert_eq!(rgf_shifted(&StrictShape::empty()), IntPoly::one());
        assert_eq!(rgf_shifted(&strict(&[1])), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(rgf_straight(&straight(&[1])), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(
            oracle_rgf(&[1], Containment::Strict, 60).unwrap(),
            IntPoly::from_i64s(&[1, 1])
        );
    }

    #[test]
    fn oracle_budget() {
        let err = oracle_rgf(&[40, 30], Containment::Weak, 60).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { size: 70, budget: 60 }));
    }

    #[test]
    fn qbinom_small() {
        assert_eq!(qbinom(2, 1).unwrap(), IntPoly::from_i64s(&[1, 1]));
        // partitions in a 2x4 box by size
        assert_eq!(qbinom(6, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 2, 2, 3, 2, 2, 1, 1]));
        assert_eq!(qbinom(5, 0).unwrap(), IntPoly::one());
        assert_eq!(qbinom(0, 0).unwrap(), IntPoly::one());
        assert!(matches!(qbinom(3, 4), Err(Error::BinomBounds { n: 3, k: 4 })));
        assert!(qbinom_or_zero(3, 4).is_zero());
    }

    #[test]
    fn qanalog_examples() {
        assert_eq!(qanalog(5, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 1, 2, 2, 2, 1]));
        assert_eq!(qanalog(6, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 1, 2, 2, 3, 2, 2, 1]));
        assert!(matches!(qanalog(5, 3), Err(Error::QAnalogBounds { a: 5, b: 3 })));
        assert!(qanalog(4, 0).is_err());
    }

    #[test]
    fn bigint_fallback_agrees() {
        // middle coefficients of prod_{i<=80} (1+q^i) are far beyond u64
        let parts: Vec<usize> = (1..=80).rev().collect();
        let f = rgf_shifted(&StrictShape::new(parts.clone()).unwrap());
        assert_eq!(f.eval_at_one(), BigInt::from(1u8) << 80);
        let direct = row_table::<BigInt>(&parts, Containment::Strict).unwrap();
        assert_eq!(f, IntPoly::from_coeffs(direct));
        assert!(row_table::<u64>(&parts, Containment::Strict).is_none());
    }
}

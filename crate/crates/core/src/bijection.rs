//! Strict partitions inside `⟨a-1, a-3, …, a-(2b-1)⟩` as ballot words.
//!
//! A partition `μ` maps to the word `w_a w_{a-1} … w_1` with `w_i = 1`
//! exactly when `i` is a part of `μ`. Because the parts of the outer shape
//! step down by two, the image is the set of length-`a` words with at most
//! `b` ones in which no prefix has more ones than zeros.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::StrictShape;

/// Binary word stored in reading order `w_a, w_{a-1}, …, w_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BinaryWord(Vec<bool>);

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryWord(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w_i` for `1 <= i <= a`.
    pub fn bit(&self, i: usize) -> bool {
        self.0[self.0.len() - i]
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Index into the reading order of the first prefix with more ones
    /// than zeros, if any.
    pub fn ballot_violation(&self) -> Option<usize> {
        let mut balance = 0i64;
        for (pos, &b) in self.0.iter().enumerate() {
            balance += if b { 1 } else { -1 };
            if balance > 0 {
                return Some(pos);
            }
        }
        None
    }

    pub fn is_ballot(&self) -> bool {
        self.ballot_violation().is_none()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    what: "binary word",
                    input: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }
}

impl From<BinaryWord> for String {
    fn from(w: BinaryWord) -> Self {
        w.to_string()
    }
}

impl TryFrom<String> for BinaryWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn to_word(mu: &StrictShape, a: usize) -> Result<BinaryWord> {
    let mut bits = vec![false; a];
    for &p in mu.parts() {
        if p >= a {
            return Err(Error::PartTooLarge { part: p, len: a });
        }
        bits[a - p] = true;
    }
    Ok(BinaryWord(bits))
}

pub fn from_word(w: &BinaryWord) -> Result<StrictShape> {
    if let Some(position) = w.ballot_violation() {
        return Err(Error::BallotViolation {
            word: w.to_string(),
            position,
        });
    }
    let a = w.len();
    let parts = w.0.iter().enumerate().filter(|(_, &b)| b).map(|(pos, _)| a - pos);
    StrictShape::new(parts)
}

fn check_bounds(a: usize, b: usize) -> Result<()> {
    if b == 0 || 2 * b > a {
        return Err(Error::QAnalogBounds { a, b });
    }
    Ok(())
}

/// Counts ballot words by generating every one of them.
pub fn count_ballot_words_enum(a: usize, b: usize) -> Result<u64> {
    check_bounds(a, b)?;
    fn go(left: usize, ones: usize, zeros: usize, b: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut n = go(left - 1, ones, zeros + 1, b);
        if ones < b && ones < zeros {
            n += go(left - 1, ones + 1, zeros, b);
        }
        n
    }
    Ok(go(a, 0, 0, b))
}

/// Counts ballot words with a DP over (position, ones used); the prefix
/// balance is `position - 2 * ones`.
pub fn count_ballot_words_dp(a: usize, b: usize) -> Result<BigUint> {
    check_bounds(a, b)?;
    let mut ways = vec![BigUint::zero(); b + 1];
    ways[0] = BigUint::one();
    for pos in 0..a {
        let mut next = vec![BigUint::zero(); b + 1];
        for (ones, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            next[ones] += w;
            // appending a one keeps ones <= zeros
            if ones < b && 2 * (ones + 1) <= pos + 1 {
                next[ones + 1] += w;
            }
        }
        ways = next;
    }
    Ok(ways.into_iter().sum())
}

/// Number of ballot words of length `a` with at most `b` ones. Direct
/// enumeration up to `a = 24`, the DP beyond.
pub fn count_ballot_words(a: usize, b: usize) -> Result<BigUint> {
    if a <= 24 {
        count_ballot_words_enum(a, b).map(BigUint::from)
    } else {
        count_ballot_words_dp(a, b)
    }
}

/// Every strict partition inside `⟨a-1, a-3, …, a-(2b-1)⟩`.
pub fn qanalog_partitions(a: usize, b: usize) -> Result<Vec<StrictShape>> {
    check_bounds(a, b)?;
    let outer: Vec<usize> = (0..b).map(|i| a - (2 * i + 1)).collect();
    fn go(outer: &[usize], row: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictShape>) {
        out.push(StrictShape::new(cur.iter().copied()).expect("strictly decreasing by construction"));
        if row == outer.len() {
            return;
        }
        for v in 1..=outer[row].min(prev.saturating_sub(1)) {
            cur.push(v);
            go(outer, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&outer, 0, usize::MAX, &mut Vec::new(), &mut out);
    Ok(out)
}

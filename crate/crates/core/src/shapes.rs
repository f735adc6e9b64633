//! Shapes: strict partitions drawn as shifted diagrams, ordinary partitions
//! drawn as straight diagrams, and the named parametric families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with distinct parts `λ₁ > λ₂ > … > λ_b ≥ 1`, viewed as a
/// shifted Ferrers diagram. Also used for the partitions `μ` counted inside
/// a shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictShape(Vec<usize>);

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_b ≥ 1`, viewed as a straight Ferrers diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StraightShape(Vec<usize>);

/// Zero parts carry no cells and are dropped.
fn strip_zeros(parts: impl IntoIterator<Item = usize>) -> Vec<usize> {
    parts.into_iter().filter(|&p| p != 0).collect()
}

impl StrictShape {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let parts = strip_zeros(parts);
        for (i, w) in parts.windows(2).enumerate() {
            if w[1] >= w[0] {
                return Err(Error::NotStrict {
                    index: i + 1,
                    value: w[1],
                });
            }
        }
        Ok(StrictShape(parts))
    }

    pub fn empty() -> Self {
        StrictShape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// `true` when this is `⟨b, b-1, …, 1⟩` (including the empty shape).
    pub fn is_staircase(&self) -> bool {
        let b = self.0.len();
        self.0.iter().enumerate().all(|(i, &p)| p == b - i)
    }

    pub fn contains(&self, mu: &StrictShape) -> bool {
        contains(self, mu)
    }
}

impl StraightShape {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let parts = strip_zeros(parts);
        for (i, w) in parts.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::NotWeak {
                    index: i + 1,
                    value: w[1],
                });
            }
        }
        Ok(StraightShape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for StrictShape {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictShape::new(v)
    }
}

impl From<StrictShape> for Vec<usize> {
    fn from(s: StrictShape) -> Self {
        s.0
    }
}

impl TryFrom<Vec<usize>> for StraightShape {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        StraightShape::new(v)
    }
}

impl From<StraightShape> for Vec<usize> {
    fn from(s: StraightShape) -> Self {
        s.0
    }
}

impl From<StrictShape> for StraightShape {
    fn from(s: StrictShape) -> Self {
        StraightShape(s.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for StrictShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        write_parts(f, &self.0)?;
        write!(f, ">")
    }
}

impl fmt::Display for StraightShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_parts(f, &self.0)?;
        write!(f, ")")
    }
}

fn parse_parts(input: &str) -> Result<Vec<usize>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                what: "shape",
                input: input.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

impl FromStr for StrictShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictShape::new(parse_parts(s)?)
    }
}

impl FromStr for StraightShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StraightShape::new(parse_parts(s)?)
    }
}

/// `μ ⊆ outer` as diagrams: at most as many parts, each no larger.
pub fn contains(outer: &StrictShape, mu: &StrictShape) -> bool {
    mu.len() <= outer.len() && mu.0.iter().zip(&outer.0).all(|(m, o)| m <= o)
}

/// A named parametric family of shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShapeFamily {
    /// `⟨n, n-1, …, n-(b-1)⟩`
    TruncatedStaircase {
        n: usize,
        b: usize,
    },
    /// `⟨n, n-t, …, n-(b-1)t⟩`
    Arithmetic {
        n: usize,
        t: usize,
        b: usize,
    },
    /// `⟨a-1, a-3, …, a-(2b-1)⟩`
    QAnalog {
        a: usize,
        b: usize,
    },
    /// `⟨b, b-1, …, 1⟩`
    Staircase {
        b: usize,
    },
    /// `b` rows of length `n`, straight.
    Rectangle {
        b: usize,
        n: usize,
    },
    Explicit {
        parts: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "parts", rename_all = "snake_case")]
pub enum Shape {
    Strict(StrictShape),
    Straight(StraightShape),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Strict(s) => s.fmt(f),
            Shape::Straight(s) => s.fmt(f),
        }
    }
}

impl Shape {
    pub fn into_strict(self) -> Option<StrictShape> {
        match self {
            Shape::Strict(s) => Some(s),
            Shape::Straight(_) => None,
        }
    }

    pub fn into_straight(self) -> StraightShape {
        match self {
            Shape::Strict(s) => s.into(),
            Shape::Straight(s) => s,
        }
    }
}

fn arithmetic_parts(n: usize, t: usize, b: usize) -> Result<Vec<usize>> {
    (0..b)
        .map(|i| {
            let v = n as i64 - (i * t) as i64;
            if v < 1 {
                Err(Error::NonPositivePart { index: i + 1, value: v })
            } else {
                Ok(v as usize)
            }
        })
        .collect()
}

pub fn make_family(spec: &ShapeFamily) -> Result<Shape> {
    let strict = |parts: Vec<usize>| StrictShape::new(parts).map(Shape::Strict);
    match *spec {
        ShapeFamily::TruncatedStaircase { n, b } => {
            if b > n {
                return Err(Error::FamilyParams {
                    family: "truncated staircase",
                    reason: format!("b = {b} exceeds n = {n}"),
                });
            }
            strict(arithmetic_parts(n, 1, b)?)
        }
        ShapeFamily::Arithmetic { n, t, b } => {
            if t == 0 && b > 1 {
                return Err(Error::FamilyParams {
                    family: "arithmetic",
                    reason: "step t must be positive".into(),
                });
            }
            strict(arithmetic_parts(n, t, b)?)
        }
        ShapeFamily::QAnalog { a, b } => {
            if b == 0 || 2 * b > a {
                return Err(Error::QAnalogBounds { a, b });
            }
            strict((0..b).map(|i| a - (2 * i + 1)).collect())
        }
        ShapeFamily::Staircase { b } => strict((1..=b).rev().collect()),
        ShapeFamily::Rectangle { b, n } => StraightShape::new(std::iter::repeat_n(n, b)).map(Shape::Straight),
        ShapeFamily::Explicit { ref parts } => match StrictShape::new(parts.iter().copied()) {
            Ok(s) => Ok(Shape::Strict(s)),
            Err(_) => StraightShape::new(parts.iter().copied()).map(Shape::Straight),
        },
    }
}

impl FromStr for ShapeFamily {
    type Err = Error;

    /// `arith:n=19,t=2,b=4`, `trunc:n=9,b=4`, `qanalog:a=10,b=4`,
    /// `stair:b=5`, `rect:b=4,n=8`, or a bare part list `9,7,5,3`.
    fn from_str(s: &str) -> Result<Self> {
        let Some((name, rest)) = s.split_once(':') else {
            return Ok(ShapeFamily::Explicit { parts: parse_parts(s)? });
        };
        let bad = |reason: String| Error::Parse {
            what: "shape family",
            input: s.to_string(),
            reason,
        };
        let mut kv = std::collections::BTreeMap::new();
        for pair in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {pair:?}")))?;
            let v = v.trim().parse::<usize>().map_err(|e| bad(e.to_string()))?;
            kv.insert(k.trim().to_string(), v);
        }
        let get = |k: &str| kv.get(k).copied().ok_or_else(|| bad(format!("missing key {k:?}")));
        let fam = match name.trim() {
            "trunc" | "truncated" => ShapeFamily::TruncatedStaircase {
                n: get("n")?,
                b: get("b")?,
            },
            "arith" | "arithmetic" => ShapeFamily::Arithmetic {
                n: get("n")?,
                t: get("t")?,
                b: get("b")?,
            },
            "qanalog" => ShapeFamily::QAnalog {
                a: get("a")?,
                b: get("b")?,
            },
            "stair" | "staircase" => ShapeFamily::Staircase { b: get("b")? },
            "rect" | "rectangle" => ShapeFamily::Rectangle {
                b: get("b")?,
                n: get("n")?,
            },
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        Ok(fam)
    }
}

/// All strict partitions of `n`, in decreasing lexicographic order of parts.
pub fn strict_partitions_of(n: usize) -> Vec<StrictShape> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictShape>) {
        if rest == 0 {
            out.push(StrictShape(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict shapes with at most `max_len` parts and largest part at most
/// `max_part`, including the empty shape. Lexicographic order on parts.
pub fn strict_shapes_bounded(max_part: usize, max_len: usize) -> Vec<StrictShape> {
    fn go(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictShape>) {
        out.push(StrictShape(cur.clone()));
        if left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(p - 1, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_part, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All straight shapes with at most `max_len` parts and largest part at
/// most `max_part`, including the empty shape. Lexicographic order.
pub fn straight_shapes_bounded(max_part: usize, max_len: usize) -> Vec<StraightShape> {
    fn go(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<StraightShape>) {
        out.push(StraightShape(cur.clone()));
        if left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_part, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of ℕ^p.
///
/// Coordinates are stored as `i64` so that differences can be formed
/// without casts, but a `LatticePoint` never holds a negative coordinate:
/// subtraction leaving the orthant yields `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some(&c) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::NegativeCoordinate(c));
        }
        Ok(LatticePoint(coords))
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    /// The `i`-th unit vector of ℕ^dim.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut c = vec![0; dim];
        c[i] = 1;
        LatticePoint(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of the coordinates.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn check_dim(&self, other: &LatticePoint) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LatticePoint) -> Result<LatticePoint> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(LatticePoint)
    }

    /// `self - other`, or `None` when the difference leaves ℕ^p.
    ///
    /// Panics on a dimension mismatch.
    pub fn checked_sub(&self, other: &LatticePoint) -> Option<LatticePoint> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in subtraction");
        let mut out = Vec::with_capacity(self.dim());
        for (a, b) in self.0.iter().zip(&other.0) {
            let c = a - b;
            if c < 0 {
                return None;
            }
            out.push(c);
        }
        Some(LatticePoint(out))
    }

    pub fn scale(&self, k: i64) -> Result<LatticePoint> {
        if k < 0 {
            return Err(Error::NegativeCoordinate(k));
        }
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(LatticePoint)
    }

    /// Componentwise `self ≤ other`. Panics on a dimension mismatch.
    pub fn le_componentwise(&self, other: &LatticePoint) -> bool {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in comparison");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Whether every coordinate is divisible by `d` (`d > 0`).
    pub fn divisible_by(&self, d: i64) -> bool {
        self.0.iter().all(|c| c % d == 0)
    }

    /// `self / d` when every coordinate is divisible by `d`.
    pub fn div_exact(&self, d: i64) -> Option<LatticePoint> {
        if d <= 0 || !self.divisible_by(d) {
            return None;
        }
        Some(LatticePoint(self.0.iter().map(|c| c / d).collect()))
    }

    /// Componentwise remainder modulo `d` (`d > 0`).
    pub fn rem(&self, d: i64) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c.rem_euclid(d)).collect())
    }

    /// All coordinates odd.
    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|c| c % 2 == 1)
    }
}

impl TryFrom<Vec<i64>> for LatticePoint {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        LatticePoint::new(v)
    }
}

impl From<LatticePoint> for Vec<i64> {
    fn from(p: LatticePoint) -> Vec<i64> {
        p.0
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"9,3"`, `"(9, 3)"` or `"[9,3]"`.
impl FromStr for LatticePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.trim().is_empty() {
            return Err(Error::Schema(format!("empty point {s:?}")));
        }
        let coords = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Schema(format!("bad coordinate {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePoint::new(coords)
    }
}

/// Shorthand for literal points in code and tests. Panics on negative input.
pub fn pt(coords: &[i64]) -> LatticePoint {
    LatticePoint::new(coords.to_vec()).expect("literal point has a negative coordinate")
}

/// Every point of ℕ^dim with coordinate sum `degree`, in lexicographically
/// decreasing order of coordinates.
pub fn points_of_degree(dim: usize, degree: i64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    if dim == 0 {
        if degree == 0 {
            out.push(LatticePoint(Vec::new()));
        }
        return out;
    }
    let mut buf = vec![0i64; dim];
    fill_degree(&mut buf, 0, degree, &mut out);
    out
}

fn fill_degree(buf: &mut [i64], idx: usize, remaining: i64, out: &mut Vec<LatticePoint>) {
    if idx + 1 == buf.len() {
        buf[idx] = remaining;
        out.push(LatticePoint(buf.to_vec()));
        return;
    }
    for c in (0..=remaining).rev() {
        buf[idx] = c;
        fill_degree(buf, idx + 1, remaining - c, out);
    }
}

/// Every point of the box `0 ≤ x ≤ corner`, in lexicographic order.
pub fn box_points(corner: &LatticePoint) -> Vec<LatticePoint> {
    let dim = corner.dim();
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    loop {
        out.push(LatticePoint(cur.clone()));
        // odometer increment, last coordinate fastest
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < corner.0[i] {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

//! Minimal nonnegative solutions of homogeneous linear Diophantine systems.
//!
//! [`hilbert_basis`] runs the Contejean–Devie completion: starting from the
//! unit vectors, a candidate `v` is extended by `e_j` only when the step
//! points against the current residual (`⟨Av, Ae_j⟩ < 0`), and candidates
//! dominating an accepted solution are dropped. The search visits candidates
//! by increasing coordinate sum, so every solution it meets is minimal.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, OrderKind, TotalOrder};

#[derive(Deserialize)]
struct RawSystem {
    rows: Vec<Vec<i64>>,
}

/// A homogeneous system `A x = 0` with an integer `k × n` matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSystem")]
pub struct DiophantineSystem {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawSystem> for DiophantineSystem {
    type Error = Error;

    fn try_from(raw: RawSystem) -> Result<Self> {
        DiophantineSystem::new(raw.rows)
    }
}

impl DiophantineSystem {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = match rows.first() {
            Some(r) if !r.is_empty() => r.len(),
            _ => return Err(Error::Schema("a system needs at least one row and one column".into())),
        };
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(DiophantineSystem { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// `A x`, with overflow reported.
    pub fn apply(&self, x: &[i64]) -> Result<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter().zip(x).try_fold(0i64, |acc, (a, b)| {
                    a.checked_mul(*b).and_then(|t| acc.checked_add(t)).ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    pub fn is_solution(&self, x: &LatticePoint) -> Result<bool> {
        Ok(self.apply(x.coords())?.iter().all(|&v| v == 0))
    }
}

/// The minimal generating set of `{x ∈ ℕ^n : A x = 0}`, sorted under
/// graded-then-lex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertBasis {
    solutions: Vec<LatticePoint>,
}

impl HilbertBasis {
    pub fn solutions(&self) -> &[LatticePoint] {
        &self.solutions
    }

    pub fn into_solutions(self) -> Vec<LatticePoint> {
        self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

fn canonical_sort(points: &mut [LatticePoint]) {
    TotalOrder::of_kind(OrderKind::GradedLex).sort(points);
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y).and_then(|t| acc.checked_add(t)).ok_or(Error::Overflow)
    })
}

pub fn hilbert_basis(sys: &DiophantineSystem) -> Result<HilbertBasis> {
    let n = sys.num_cols();
    let columns: Vec<Vec<i64>> = (0..n).map(|j| sys.column(j)).collect();

    let mut minimal: Vec<Vec<i64>> = Vec::new();
    // (candidate, residual A·candidate)
    let mut frontier: Vec<(Vec<i64>, Vec<i64>)> = (0..n)
        .map(|j| {
            let mut v = vec![0; n];
            v[j] = 1;
            (v, columns[j].clone())
        })
        .collect();

    while !frontier.is_empty() {
        let mut open = Vec::with_capacity(frontier.len());
        for (v, r) in frontier {
            if r.iter().all(|&x| x == 0) {
                minimal.push(v);
            } else {
                open.push((v, r));
            }
        }
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut next = Vec::new();
        for (v, r) in &open {
            for (j, col) in columns.iter().enumerate() {
                if dot(r, col)? >= 0 {
                    continue;
                }
                let mut w = v.clone();
                w[j] = w[j].checked_add(1).ok_or(Error::Overflow)?;
                if seen.contains(&w) || minimal.iter().any(|m| m.iter().zip(&w).all(|(a, b)| a <= b)) {
                    continue;
                }
                let residual = r
                    .iter()
                    .zip(col)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()?;
                seen.insert(w.clone());
                next.push((w, residual));
            }
        }
        frontier = next;
    }

    let mut solutions = minimal
        .into_iter()
        .map(LatticePoint::new)
        .collect::<Result<Vec<_>>>()?;
    canonical_sort(&mut solutions);
    Ok(HilbertBasis { solutions })
}

/// Whether `x` is an ℕ-combination of the nonzero vectors `gens`.
pub fn in_monoid(gens: &[LatticePoint], x: &LatticePoint) -> bool {
    let mut memo = HashMap::new();
    in_monoid_memo(gens, x, &mut memo)
}

fn in_monoid_memo(gens: &[LatticePoint], x: &LatticePoint, memo: &mut HashMap<LatticePoint, bool>) -> bool {
    if x.is_zero() {
        return true;
    }
    if let Some(&hit) = memo.get(x) {
        return hit;
    }
    let found = gens
        .iter()
        .filter(|g| g.le_componentwise(x))
        .any(|g| in_monoid_memo(gens, &x.checked_sub(g).expect("g ≤ x"), memo));
    memo.insert(x.clone(), found);
    found
}

/// The unique minimal generating set of the monoid generated by `gens`.
///
/// Every generator must be nonzero, which bounds any decomposition of `x`
/// componentwise by `x` itself.
pub fn reduce_generating_set(gens: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    for g in gens {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: g.dim(),
            });
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
    }
    let mut sorted: Vec<LatticePoint> = gens.to_vec();
    sorted.sort_by_key(|g| (g.degree(), g.clone()));
    sorted.dedup();
    // a decomposition of x only uses strictly smaller-degree generators
    let mut kept: Vec<LatticePoint> = Vec::new();
    for g in sorted {
        if !in_monoid(&kept, &g) {
            kept.push(g);
        }
    }
    canonical_sort(&mut kept);
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    fn basis(rows: Vec<Vec<i64>>) -> Vec<LatticePoint> {
        hilbert_basis(&DiophantineSystem::new(rows).unwrap()).unwrap().into_solutions()
    }

    #[test]
    fn worked_systems() {
        assert_eq!(basis(vec![vec![1, -2]]), vec![pt(&[2, 1])]);
        let mut b = basis(vec![vec![1, 1, -1]]);
        b.sort();
        assert_eq!(b, vec![pt(&[0, 1, 1]), pt(&[1, 0, 1])]);
        // the quotient system for ⟨2,3⟩/2: 2a + 3b − 2x = 0
        let mut b = basis(vec![vec![2, 3, -2]]);
        b.sort();
        assert_eq!(b, vec![pt(&[0, 2, 3]), pt(&[1, 0, 1])]);
    }

    #[test]
    fn degenerate_systems() {
        // only the trivial solution
        assert!(basis(vec![vec![1, 2]]).is_empty());
        // zero column gives a unit solution
        assert_eq!(basis(vec![vec![0, 3]]), vec![pt(&[1, 0])]);
        assert_eq!(basis(vec![vec![0, 0]]).len(), 2);
        assert!(DiophantineSystem::new(vec![]).is_err());
        assert!(DiophantineSystem::new(vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn two_equation_system() {
        // x + y = z, x = 2w
        let b = basis(vec![vec![1, 1, -1, 0], vec![1, 0, 0, -2]]);
        let sys = DiophantineSystem::new(vec![vec![1, 1, -1, 0], vec![1, 0, 0, -2]]).unwrap();
        for s in &b {
            assert!(sys.is_solution(s).unwrap());
        }
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(sorted, vec![pt(&[0, 1, 1, 0]), pt(&[2, 0, 2, 1])]);
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_generating_set(&[pt(&[1]), pt(&[3])]).unwrap(), vec![pt(&[1])]);
        let r = reduce_generating_set(&[pt(&[4, 1]), pt(&[8, 2]), pt(&[5, 2])]).unwrap();
        assert_eq!(r, vec![pt(&[4, 1]), pt(&[5, 2])]);
        let r = reduce_generating_set(&[pt(&[4, 1]), pt(&[5, 2])]).unwrap();
        assert_eq!(r, vec![pt(&[4, 1]), pt(&[5, 2])]);
        assert_eq!(reduce_generating_set(&[pt(&[0, 0])]), Err(Error::ZeroGenerator));
        assert!(reduce_generating_set(&[pt(&[1]), pt(&[1, 1])]).is_err());
        assert_eq!(reduce_generating_set(&[pt(&[3]), pt(&[3]), pt(&[5])]).unwrap(), vec![pt(&[3]), pt(&[5])]);
    }

    #[test]
    fn monoid_membership() {
        let g = [pt(&[4, 1]), pt(&[5, 2])];
        assert!(in_monoid(&g, &pt(&[9, 3])));
        assert!(in_monoid(&g, &pt(&[0, 0])));
        assert!(!in_monoid(&g, &pt(&[9, 2])));
    }
}

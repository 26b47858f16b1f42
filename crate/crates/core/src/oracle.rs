//! Deliberately naive reference implementations. They share no search code
//! with the fast paths and exist so that tests and the CLI `--verify` flag
//! can cross-check them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hilbert::DiophantineSystem;
use crate::lattice::{box_points, LatticePoint};
use crate::linalg::{max_abs_minor, rank, rref, to_q, Q};
use crate::semigroup::{cone_down_set, validate, CSemigroup};

/// Largest enumeration an oracle will attempt.
pub const ORACLE_BUDGET: u128 = 50_000_000;

/// Largest candidate-gap window for [`brute_dd`].
pub const MAX_DD_WINDOW: usize = 16;

/// Whether `x` is an ℕ-combination of `gens`, by trying every multiplicity
/// vector bounded componentwise by `x`.
pub fn brute_member(gens: &[LatticePoint], x: &LatticePoint) -> bool {
    fn rec(gens: &[LatticePoint], rest: &LatticePoint) -> bool {
        let Some((g, tail)) = gens.split_first() else {
            return rest.is_zero();
        };
        let mut cur = rest.clone();
        loop {
            if rec(tail, &cur) {
                return true;
            }
            match cur.checked_sub(g) {
                Some(next) if !g.is_zero() => cur = next,
                _ => return false,
            }
        }
    }
    rec(gens, x)
}

/// A per-coordinate bound on minimal solutions of `A x = 0`, `x ≥ 0`.
///
/// With `r = rank A`, every minimal solution lies in the half-open
/// parallelepiped of at most `n − r` extreme rays, and extreme-ray entries
/// are minors of `A` of size at most `r`.
pub fn hilbert_search_bound(sys: &DiophantineSystem) -> i64 {
    let rows: Vec<Vec<i128>> = sys.rows().iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let n = sys.num_cols();
    let r = rank(&rows, n);
    let delta = (1..=r).map(|m| max_abs_minor(&rows, n, m)).max().unwrap_or(1).max(1);
    i64::try_from((n - r) as i128 * delta).unwrap_or(i64::MAX)
}

/// All nonzero solutions of `A x = 0` with `0 ≤ x ≤ corner`, reduced to
/// the componentwise-minimal ones and sorted by coordinate vector.
///
/// Only the free coordinates of the echelon form are enumerated; pivot
/// coordinates are then forced.
pub fn brute_hilbert(sys: &DiophantineSystem, corner: &LatticePoint) -> Result<Vec<LatticePoint>> {
    let n = sys.num_cols();
    if corner.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: corner.dim(),
        });
    }
    let rows: Vec<Vec<i128>> = sys.rows().iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let (m, pivots) = rref(to_q(&rows), n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let size: u128 = free.iter().map(|&c| corner.coords()[c] as u128 + 1).product();
    if size > ORACLE_BUDGET {
        return Err(Error::Ceiling(format!("box enumeration of {size} points exceeds the oracle budget")));
    }
    let free_corner = LatticePoint::new(free.iter().map(|&c| corner.coords()[c]).collect())?;
    let mut solutions = Vec::new();
    'outer: for fv in box_points(&free_corner) {
        let mut x = vec![0i64; n];
        for (&c, &v) in free.iter().zip(fv.coords()) {
            x[c] = v;
        }
        for (row, &pc) in pivots.iter().enumerate() {
            let mut val = Q::from_integer(0);
            for (&c, &v) in free.iter().zip(fv.coords()) {
                val -= m[row][c] * Q::from_integer(v as i128);
            }
            if !val.is_integer() {
                continue 'outer;
            }
            let v = val.to_integer();
            if v < 0 || v > corner.coords()[pc] as i128 {
                continue 'outer;
            }
            x[pc] = v as i64;
        }
        if x.iter().any(|&v| v != 0) {
            solutions.push(LatticePoint::new(x)?);
        }
    }
    solutions.sort_by_key(|x| x.degree());
    let mut minimal: Vec<LatticePoint> = Vec::new();
    for x in solutions {
        if !minimal.iter().any(|y| y.le_componentwise(&x)) {
            minimal.push(x);
        }
    }
    minimal.sort();
    Ok(minimal)
}

/// [`brute_hilbert`] over the box given by [`hilbert_search_bound`].
pub fn brute_hilbert_auto(sys: &DiophantineSystem) -> Result<Vec<LatticePoint>> {
    let b = hilbert_search_bound(sys);
    brute_hilbert(sys, &LatticePoint::new(vec![b; sys.num_cols()])?)
}

/// Every 𝒞-semigroup `T` over the cone of `s` whose gaps lie in
/// `{x ∈ 𝒞 : x ⪯ f}` and with `T/d = S`, found by trying all gap subsets.
/// Sorted by canonical form.
pub fn brute_dd(s: &CSemigroup, d: i64, f: &LatticePoint) -> Result<Vec<CSemigroup>> {
    if d <= 0 {
        return Err(Error::ZeroDivisor);
    }
    let window: Vec<LatticePoint> = cone_down_set(s.cone(), s.order(), f, true)?
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    if window.len() > MAX_DD_WINDOW {
        return Err(Error::Ceiling(format!(
            "{} candidate gaps exceed the oracle window of {MAX_DD_WINDOW}",
            window.len()
        )));
    }
    let target: BTreeSet<&LatticePoint> = s.gaps().iter().collect();
    let mut found: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << window.len()) {
        let gaps: Vec<LatticePoint> = (0..window.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| window[i].clone())
            .collect();
        // T/d = S means x is a gap of S exactly when d·x is a gap of T
        let quotient: BTreeSet<LatticePoint> = s
            .cone()
            .points_up_to_degree(f.degree())
            .filter(|x| !x.is_zero())
            .filter(|x| x.scale(d).is_ok_and(|dx| gaps.contains(&dx)))
            .collect();
        if quotient.iter().collect::<BTreeSet<_>>() != target || validate(s.cone(), &gaps).is_err() {
            continue;
        }
        let t = s.with_gaps(gaps)?;
        if found.insert(t.canonical_json()) {
            out.push(t);
        }
    }
    out.sort_by_key(|t| t.canonical_json());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{pt, Cone, TotalOrder};

    #[test]
    fn membership_oracle() {
        assert!(!brute_member(&[pt(&[2]), pt(&[3])], &pt(&[1])));
        assert!(brute_member(&[pt(&[2]), pt(&[3])], &pt(&[7])));
        assert!(brute_member(&[pt(&[4, 1]), pt(&[5, 2])], &pt(&[9, 3])));
        assert!(brute_member(&[], &pt(&[0])));
        assert!(!brute_member(&[], &pt(&[1])));
    }

    #[test]
    fn hilbert_oracle() {
        let sys = DiophantineSystem::new(vec![vec![1, -2]]).unwrap();
        assert_eq!(brute_hilbert(&sys, &pt(&[4, 4])).unwrap(), vec![pt(&[2, 1])]);
        let sys = DiophantineSystem::new(vec![vec![1, 1, -1]]).unwrap();
        assert_eq!(brute_hilbert(&sys, &pt(&[3, 3, 3])).unwrap(), vec![pt(&[0, 1, 1]), pt(&[1, 0, 1])]);
        let sys = DiophantineSystem::new(vec![vec![2, 3, -2]]).unwrap();
        assert_eq!(brute_hilbert_auto(&sys).unwrap(), vec![pt(&[0, 2, 3]), pt(&[1, 0, 1])]);
    }

    #[test]
    fn dd_oracle() {
        let nat = CSemigroup::full(Cone::orthant(1), TotalOrder::default()).unwrap();
        assert_eq!(brute_dd(&nat, 1, &pt(&[5])).unwrap(), vec![nat.clone()]);
        // T ⊆ ℕ with T/2 = ℕ and Fb(T) ≤ 3: ℕ, ⟨2,3⟩, ⟨2,5⟩
        let covers = brute_dd(&nat, 2, &pt(&[3])).unwrap();
        let gap_sets: BTreeSet<Vec<LatticePoint>> = covers.iter().map(|t| t.gaps().to_vec()).collect();
        let expected: BTreeSet<Vec<LatticePoint>> = [vec![], vec![pt(&[1])], vec![pt(&[1]), pt(&[3])]].into_iter().collect();
        assert_eq!(gap_sets, expected);
    }
}

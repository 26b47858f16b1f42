//! Small exact linear algebra over ℤ and ℚ, sized for ambient dimensions in
//! the single digits. Rationals are `Ratio<i128>`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i128>;

pub fn to_q(rows: &[Vec<i128>]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Q::from_integer(v)).collect())
        .collect()
}

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref(mut m: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= inv;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let factor = line[col];
                for (v, &p) in line.iter_mut().zip(&pivot).take(ncols) {
                    *v -= factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank(rows: &[Vec<i128>], ncols: usize) -> usize {
    rref(to_q(rows), ncols).1.len()
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[i128]) -> Vec<i128> {
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Integer basis of the right null space `{x : rows · x = 0}`, each vector
/// primitive.
pub fn nullspace(rows: &[Vec<i128>], ncols: usize) -> Vec<Vec<i128>> {
    let (m, pivots) = rref(to_q(rows), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Q::zero(); ncols];
            v[fc] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][fc];
            }
            let lcm = v.iter().fold(1i128, |acc, q| acc.lcm(q.denom()));
            let ints: Vec<i128> = v.iter().map(|q| (q * Q::from_integer(lcm)).to_integer()).collect();
            primitive(&ints)
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Generalized cross product of `p - 1` vectors in ℤ^p: the vector whose
/// dot product with any `x` equals `det(rows; x)`.
pub fn cross(rows: &[Vec<i128>], p: usize) -> Vec<i128> {
    debug_assert_eq!(rows.len() + 1, p);
    (0..p)
        .map(|j| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                .collect();
            let d = det(&minor);
            // det(rows; x) expanded along the last row
            if (p - 1 + j).is_multiple_of(2) {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Largest absolute value of an `r × r` minor of `rows`.
pub fn max_abs_minor(rows: &[Vec<i128>], ncols: usize, r: usize) -> i128 {
    if r == 0 {
        return 1;
    }
    let mut best = 0i128;
    for rs in subsets(rows.len(), r) {
        for cs in subsets(ncols, r) {
            let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j]).collect()).collect();
            best = best.max(det(&minor).abs());
        }
    }
    best
}

/// Solves `Σ_j c_j · columns[j] = rhs` exactly. Returns the coefficients when
/// the columns are linearly independent and the system is consistent.
pub fn solve_columns(columns: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let k = columns.len();
    let p = rhs.len();
    // augmented p × (k+1) matrix
    let m: Vec<Vec<Q>> = (0..p)
        .map(|i| {
            let mut row: Vec<Q> = columns.iter().map(|c| c[i]).collect();
            row.push(rhs[i]);
            row
        })
        .collect();
    let (r, pivots) = rref(m, k + 1);
    // dependent columns leave a pivot missing; a pivot in the rhs column
    // means the system is inconsistent
    if pivots.len() != k || pivots.contains(&k) {
        return None;
    }
    Some((0..k).map(|i| r[i][k]).collect())
}

pub fn is_nonnegative(v: &[Q]) -> bool {
    v.iter().all(|q| !q.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(det(&[]), 1);
    }

    #[test]
    fn cross_is_orthogonal() {
        let rows = vec![vec![1, 2, 3], vec![0, 1, 4]];
        let n = cross(&rows, 3);
        for r in &rows {
            assert_eq!(r.iter().zip(&n).map(|(a, b)| a * b).sum::<i128>(), 0);
        }
        assert_eq!(cross(&[vec![4, 1]], 2), vec![-1, 4]);
        assert_eq!(cross(&[], 1), vec![1]);
    }

    #[test]
    fn nullspace_and_rank() {
        let rows = vec![vec![1, 1, -1]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(v[0] + v[1] - v[2], 0);
        }
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]], 2), 1);
        assert_eq!(rank(&[vec![0, 0]], 2), 0);
        assert_eq!(nullspace(&[vec![4, 1], vec![9, 5]], 2).len(), 0);
    }

    #[test]
    fn solving() {
        let cols = to_q(&[vec![4, 1], vec![9, 5]]);
        let rhs = to_q(&[vec![13, 6]]).remove(0);
        let sol = solve_columns(&cols, &rhs).unwrap();
        assert_eq!(sol, vec![Q::one(), Q::one()]);
        // inconsistent: (1,0) is not on the ray (2,1)
        let cols = to_q(&[vec![2, 1]]);
        assert!(solve_columns(&cols, &[Q::one(), Q::zero()]).is_none());
        assert_eq!(
            solve_columns(&cols, &[Q::from_integer(4), Q::from_integer(2)]),
            Some(vec![Q::from_integer(2)])
        );
        // dependent columns
        let cols = to_q(&[vec![1, 1], vec![2, 2]]);
        assert!(solve_columns(&cols, &[Q::one(), Q::one()]).is_none());
    }

    #[test]
    fn minors_and_subsets() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(max_abs_minor(&[vec![1, -2, 6]], 3, 1), 6);
        assert_eq!(max_abs_minor(&[vec![1, 0], vec![0, 1]], 2, 2), 1);
    }
}

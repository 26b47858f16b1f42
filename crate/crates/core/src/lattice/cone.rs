use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{box_points, points_of_degree, LatticePoint};
use crate::linalg::{self, Q};

#[derive(Deserialize)]
struct RawCone {
    rays: Vec<LatticePoint>,
}

/// A finitely generated rational cone inside ℝ^p_≥, identified with its
/// lattice points 𝒞 ∩ ℕ^p.
///
/// The stored rays are the primitive generators of the extremal rays, sorted
/// lexicographically. Membership is decided against an exact integer
/// H-representation computed at construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawCone")]
pub struct Cone {
    rays: Vec<LatticePoint>,
    #[serde(skip)]
    dim: usize,
    /// Vectors orthogonal to the span of the rays.
    #[serde(skip)]
    equations: Vec<Vec<i128>>,
    /// Inward facet normals, relative to the linear span.
    #[serde(skip)]
    facets: Vec<Vec<i128>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.rays == other.rays
    }
}

impl Eq for Cone {}

impl std::hash::Hash for Cone {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rays.hash(state);
    }
}

impl TryFrom<RawCone> for Cone {
    type Error = Error;

    fn try_from(raw: RawCone) -> Result<Self> {
        Cone::new(raw.rays)
    }
}

fn dot(a: &[i128], x: &LatticePoint) -> i128 {
    a.iter().zip(x.coords()).map(|(u, &v)| u * v as i128).sum()
}

fn as_i128(p: &LatticePoint) -> Vec<i128> {
    p.coords().iter().map(|&c| c as i128).collect()
}

/// Whether `x` is a nonnegative rational combination of `gens`, decided by
/// Carathéodory: try every linearly independent subset.
pub(crate) fn in_rational_cone(gens: &[LatticePoint], x: &LatticePoint) -> bool {
    if x.is_zero() {
        return true;
    }
    let p = x.dim();
    let cols: Vec<Vec<Q>> = gens
        .iter()
        .map(|g| g.coords().iter().map(|&c| Q::from_integer(c as i128)).collect())
        .collect();
    let rhs: Vec<Q> = x.coords().iter().map(|&c| Q::from_integer(c as i128)).collect();
    for k in 1..=p.min(gens.len()) {
        for subset in linalg::subsets(gens.len(), k) {
            let chosen: Vec<Vec<Q>> = subset.iter().map(|&i| cols[i].clone()).collect();
            if let Some(sol) = linalg::solve_columns(&chosen, &rhs) {
                if linalg::is_nonnegative(&sol) {
                    return true;
                }
            }
        }
    }
    false
}

impl Cone {
    /// Builds the cone spanned by `gens`.
    ///
    /// Generators are scaled down to primitive vectors, duplicates removed,
    /// and generators that are not extremal dropped, so any finite generating
    /// set of the cone is accepted.
    pub fn new(gens: Vec<LatticePoint>) -> Result<Self> {
        let dim = match gens.first() {
            Some(g) => g.dim(),
            None => return Err(Error::InvalidCone("no rays".into())),
        };
        if dim == 0 {
            return Err(Error::InvalidCone("zero-dimensional ambient space".into()));
        }
        let mut prim: Vec<LatticePoint> = Vec::new();
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(Error::InvalidCone("zero ray".into()));
            }
            let v = linalg::primitive(&as_i128(g));
            let v = LatticePoint::new(v.into_iter().map(|c| c as i64).collect())?;
            if !prim.contains(&v) {
                prim.push(v);
            }
        }
        prim.sort();
        let mut rays = Vec::new();
        for i in 0..prim.len() {
            let others: Vec<LatticePoint> = prim
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect();
            if !in_rational_cone(&others, &prim[i]) {
                rays.push(prim[i].clone());
            }
        }
        let (equations, facets) = h_representation(&rays, dim);
        Ok(Cone {
            rays,
            dim,
            equations,
            facets,
        })
    }

    /// The positive orthant ℕ^p.
    pub fn orthant(dim: usize) -> Self {
        Cone::new((0..dim).map(|i| LatticePoint::unit(dim, i)).collect()).expect("unit vectors span the orthant")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    /// Simplicial: exactly `p` extremal rays.
    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    /// Whether `x` lies in the cone. Panics on a dimension mismatch.
    pub fn contains(&self, x: &LatticePoint) -> bool {
        assert_eq!(x.dim(), self.dim, "dimension mismatch in cone membership");
        self.equations.iter().all(|e| dot(e, x) == 0) && self.facets.iter().all(|f| dot(f, x) >= 0)
    }

    /// Membership of an integer vector that may have negative coordinates.
    pub fn contains_signed(&self, x: &[i64]) -> bool {
        match LatticePoint::new(x.to_vec()) {
            Ok(p) => self.contains(&p),
            Err(_) => false,
        }
    }

    /// Lattice points of the cone with coordinate sum exactly `degree`.
    pub fn points_of_degree(&self, degree: i64) -> impl Iterator<Item = LatticePoint> + '_ {
        points_of_degree(self.dim, degree).into_iter().filter(move |x| self.contains(x))
    }

    /// Lattice points of the cone with coordinate sum at most `degree`,
    /// by increasing degree.
    pub fn points_up_to_degree(&self, degree: i64) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..=degree).flat_map(move |t| self.points_of_degree(t))
    }

    /// The unique minimal generating set of the monoid 𝒞 ∩ ℕ^p.
    ///
    /// Every minimal generator lies in the parallelepiped spanned by some
    /// linearly independent rays, hence below the sum of all rays; the box up
    /// to that sum is enumerated and decomposable points discarded.
    pub fn hilbert_basis(&self) -> Vec<LatticePoint> {
        let mut corner = LatticePoint::zero(self.dim);
        for r in &self.rays {
            corner = corner.checked_add(r).expect("ray sum overflows");
        }
        let mut pts: Vec<LatticePoint> = box_points(&corner)
            .into_iter()
            .filter(|x| !x.is_zero() && self.contains(x))
            .collect();
        pts.sort_by_key(|x| x.degree());
        let mut basis: Vec<LatticePoint> = Vec::new();
        for x in pts {
            let decomposable = basis
                .iter()
                .any(|g| g.le_componentwise(&x) && x.checked_sub(g).is_some_and(|rest| self.contains(&rest)));
            if !decomposable {
                basis.push(x);
            }
        }
        basis.sort();
        basis
    }
}

/// Equations and facet inequalities of the cone spanned by `rays`.
fn h_representation(rays: &[LatticePoint], p: usize) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let ray_rows: Vec<Vec<i128>> = rays.iter().map(as_i128).collect();
    let equations = linalg::nullspace(&ray_rows, p);
    let r = p - equations.len();
    let mut facets: Vec<Vec<i128>> = Vec::new();
    for subset in linalg::subsets(rays.len(), r - 1) {
        let mut rows: Vec<Vec<i128>> = subset.iter().map(|&i| ray_rows[i].clone()).collect();
        rows.extend(equations.iter().cloned());
        if linalg::rank(&rows, p) != p - 1 {
            continue;
        }
        let n = linalg::primitive(&linalg::cross(&rows, p));
        let signs: Vec<i128> = ray_rows
            .iter()
            .map(|ray| ray.iter().zip(&n).map(|(a, b)| a * b).sum::<i128>().signum())
            .collect();
        let oriented = if signs.iter().all(|&s| s >= 0) {
            n
        } else if signs.iter().all(|&s| s <= 0) {
            n.iter().map(|v| -v).collect()
        } else {
            continue;
        };
        if !facets.contains(&oriented) {
            facets.push(oriented);
        }
    }
    (equations, facets)
}

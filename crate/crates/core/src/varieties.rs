//! Families of affine semigroups closed under intersection and quotient:
//! proportionally modular systems, convex-body semigroups, and bounded
//! refuters for the Arf, saturated and Cohen–Macaulay properties.
//!
//! The refuters only see a finite window, so `None` means no violation
//! inside it.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{box_points, Cone, LatticePoint};
use crate::linalg::{rank, solve_columns, subsets, Q};
use crate::semigroup::Membership;

#[derive(Deserialize)]
struct RawModular {
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    #[serde(rename = "G")]
    g: Vec<Vec<i64>>,
    b: Vec<i64>,
}

/// `{x ∈ ℕ^p : A x mod b ≤ G x}` rowwise, with `0 ≤ A_ij < b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawModular")]
pub struct ModularSystem {
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    #[serde(rename = "G")]
    g: Vec<Vec<i64>>,
    b: Vec<i64>,
}

impl TryFrom<RawModular> for ModularSystem {
    type Error = Error;

    fn try_from(raw: RawModular) -> Result<Self> {
        ModularSystem::new(raw.a, raw.g, raw.b)
    }
}

impl ModularSystem {
    pub fn new(a: Vec<Vec<i64>>, g: Vec<Vec<i64>>, b: Vec<i64>) -> Result<Self> {
        let k = b.len();
        if k == 0 || a.len() != k || g.len() != k {
            return Err(Error::Schema("A, G and b need the same positive number of rows".into()));
        }
        let p = a[0].len();
        if p == 0 || a.iter().chain(&g).any(|r| r.len() != p) {
            return Err(Error::Schema("rows of A and G need one common positive length".into()));
        }
        for (row, &bi) in a.iter().zip(&b) {
            if bi <= 0 {
                return Err(Error::Schema(format!("modulus {bi} is not positive")));
            }
            if let Some(v) = row.iter().find(|&&v| v < 0 || v >= bi) {
                return Err(Error::Schema(format!("entry {v} of A lies outside [0, {bi})")));
            }
        }
        Ok(ModularSystem { a, g, b })
    }

    pub fn num_rows(&self) -> usize {
        self.b.len()
    }

    /// `d·A mod b` and `d·G`.
    pub fn quotient(&self, d: i64) -> Result<ModularSystem> {
        if d <= 0 {
            return Err(Error::ZeroDivisor);
        }
        let a = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(row, &bi)| row.iter().map(|&v| ((v as i128 * d as i128) % bi as i128) as i64).collect())
            .collect();
        let g = self
            .g
            .iter()
            .map(|row| row.iter().map(|&v| v.checked_mul(d).ok_or(Error::Overflow)).collect())
            .collect::<Result<Vec<Vec<i64>>>>()?;
        ModularSystem::new(a, g, self.b.clone())
    }

    /// Both systems' rows together.
    pub fn intersect(&self, other: &ModularSystem) -> Result<ModularSystem> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let cat = |x: &[Vec<i64>], y: &[Vec<i64>]| x.iter().chain(y).cloned().collect::<Vec<_>>();
        ModularSystem::new(
            cat(&self.a, &other.a),
            cat(&self.g, &other.g),
            self.b.iter().chain(&other.b).copied().collect(),
        )
    }
}

impl Membership for ModularSystem {
    fn dim(&self) -> usize {
        self.a[0].len()
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        let dot = |row: &[i64]| row.iter().zip(x.coords()).map(|(&r, &c)| r as i128 * c as i128).sum::<i128>();
        x.dim() == self.dim()
            && self
                .a
                .iter()
                .zip(&self.g)
                .zip(&self.b)
                .all(|((ar, gr), &bi)| dot(ar).rem_euclid(bi as i128) <= dot(gr))
    }
}

pub fn pm_member(sys: &ModularSystem, x: &LatticePoint) -> bool {
    sys.contains(x)
}

pub fn pm_quotient(sys: &ModularSystem, d: i64) -> Result<ModularSystem> {
    sys.quotient(d)
}

pub fn pm_intersect(a: &ModularSystem, b: &ModularSystem) -> Result<ModularSystem> {
    a.intersect(b)
}

fn check_window(w: &LatticePoint) -> Result<()> {
    if w.coords().iter().any(|&c| c <= 0) {
        return Err(Error::Precondition(format!("window {w} must be componentwise positive")));
    }
    Ok(())
}

/// Members in the box, in lexicographic order.
fn members_in<M: Membership>(s: &M, window: &LatticePoint) -> Result<Vec<LatticePoint>> {
    if window.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: window.dim(),
        });
    }
    check_window(window)?;
    Ok(box_points(window).into_iter().filter(|x| s.contains(x)).collect())
}

/// `x ≥ y ≥ z` in `S` with `x + y − z ∉ S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArfViolation {
    pub x: LatticePoint,
    pub y: LatticePoint,
    pub z: LatticePoint,
}

/// Looks for an Arf violation with `x, y, z` in the window. The first one
/// in lexicographic order of `(x, y, z)` is returned.
pub fn arf_check<M: Membership>(s: &M, window: &LatticePoint) -> Result<Option<ArfViolation>> {
    let members = members_in(s, window)?;
    for x in &members {
        for y in members.iter().filter(|y| y.le_componentwise(x)) {
            for z in members.iter().filter(|z| z.le_componentwise(y)) {
                let w = x.checked_add(y)?.checked_sub(z).expect("z ≤ y");
                if !s.contains(&w) {
                    return Ok(Some(ArfViolation {
                        x: x.clone(),
                        y: y.clone(),
                        z: z.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// `s + Σ z_i s_i ∉ S` although `s_i ≤ s` and `Σ z_i s_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturatedViolation {
    pub s: LatticePoint,
    pub terms: Vec<(i64, LatticePoint)>,
    pub result: LatticePoint,
}

fn combine(terms: &[(i64, &LatticePoint)], dim: usize) -> Option<Vec<i64>> {
    let mut acc = vec![0i64; dim];
    for (z, p) in terms {
        for (a, c) in acc.iter_mut().zip(p.coords()) {
            *a = a.checked_add(z.checked_mul(*c)?)?;
        }
    }
    Some(acc)
}

/// Bounded refuter for saturation: tries every `s` in the window with one
/// or two terms `s_i ≤ s` from `S`, coefficients in
/// `[−coeff_bound, coeff_bound]`, `Σ z_i s_i ∈ ℕ^p`, and result inside the
/// window.
pub fn saturated_check<M: Membership>(
    s: &M,
    window: &LatticePoint,
    coeff_bound: i64,
) -> Result<Option<SaturatedViolation>> {
    if coeff_bound <= 0 {
        return Err(Error::Precondition("coefficient bound must be positive".into()));
    }
    let members = members_in(s, window)?;
    let dim = s.dim();
    let coeffs: Vec<i64> = (-coeff_bound..=coeff_bound).filter(|&z| z != 0).collect();
    let test = |base: &LatticePoint, terms: &[(i64, &LatticePoint)]| -> Option<SaturatedViolation> {
        let shift = combine(terms, dim)?;
        if shift.iter().any(|&c| c < 0) {
            return None;
        }
        let result: Vec<i64> = base.coords().iter().zip(&shift).map(|(a, b)| a + b).collect();
        let result = LatticePoint::new(result).ok()?;
        if !result.le_componentwise(window) || s.contains(&result) {
            return None;
        }
        Some(SaturatedViolation {
            s: base.clone(),
            terms: terms.iter().map(|(z, p)| (*z, (*p).clone())).collect(),
            result,
        })
    };
    for base in &members {
        let below: Vec<&LatticePoint> = members.iter().filter(|m| !m.is_zero() && m.le_componentwise(base)).collect();
        for (i, a) in below.iter().enumerate() {
            for &za in &coeffs {
                if let Some(v) = test(base, &[(za, a)]) {
                    return Ok(Some(v));
                }
            }
            for b in &below[i + 1..] {
                for &za in &coeffs {
                    for &zb in &coeffs {
                        if let Some(v) = test(base, &[(za, a), (zb, b)]) {
                            return Ok(Some(v));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `a + n_i = b + n_j` with `a − n_j ∉ S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmViolation {
    pub a: LatticePoint,
    pub b: LatticePoint,
    pub i: usize,
    pub j: usize,
}

/// The least multiple of each ray of `cone` lying in `S`, searching
/// multiples up to `max_multiple`.
pub fn default_ray_elements<M: Membership>(s: &M, cone: &Cone, max_multiple: i64) -> Result<Vec<LatticePoint>> {
    cone.rays()
        .iter()
        .map(|r| {
            (1..=max_multiple)
                .map(|k| r.scale(k))
                .find(|m| m.as_ref().is_ok_and(|m| s.contains(m)))
                .unwrap_or_else(|| Err(Error::Ceiling(format!("no multiple of {r} up to {max_multiple} lies in S"))))
        })
        .collect()
}

/// Bounded Cohen–Macaulay refuter for a simplicial semigroup: for members
/// `a, b` in the window and `i ≠ j` with `a + n_i = b + n_j`, checks
/// `a − n_j ∈ S`. The elements may be given in any order; indices in a
/// violation refer to the cone's ray order.
pub fn cm_check<M: Membership>(
    s: &M,
    cone: &Cone,
    ray_elements: &[LatticePoint],
    window: &LatticePoint,
) -> Result<Option<CmViolation>> {
    if !cone.is_simplicial() {
        return Err(Error::Precondition("the cone is not simplicial".into()));
    }
    if ray_elements.len() != cone.rays().len() {
        return Err(Error::Precondition("one element per extremal ray is required".into()));
    }
    let on_ray = |n: &LatticePoint, r: &LatticePoint| (1..=n.degree()).any(|k| r.scale(k).is_ok_and(|m| &m == n));
    // elements reordered to follow the cone's rays
    let mut ordered = Vec::with_capacity(ray_elements.len());
    for r in cone.rays() {
        let n = ray_elements
            .iter()
            .find(|n| on_ray(n, r))
            .ok_or_else(|| Error::Precondition(format!("no given element lies on the ray through {r}")))?;
        if !s.contains(n) {
            return Err(Error::Precondition(format!("{n} is not an element of S")));
        }
        ordered.push(n.clone());
    }
    let ray_elements = &ordered[..];
    let members = members_in(s, window)?;
    for a in &members {
        for (i, ni) in ray_elements.iter().enumerate() {
            let a_ni = a.checked_add(ni)?;
            for (j, nj) in ray_elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let Some(b) = a_ni.checked_sub(nj) else {
                    continue;
                };
                if !b.le_componentwise(window) || !s.contains(&b) {
                    continue;
                }
                if !a.checked_sub(nj).is_some_and(|w| s.contains(&w)) {
                    return Ok(Some(CmViolation { a: a.clone(), b, i, j }));
                }
            }
        }
    }
    Ok(None)
}

/// A coordinate given either as an integer or as a string `"p/q"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoord {
    Int(i64),
    Text(String),
}

fn parse_coord(c: RawCoord) -> Result<Q> {
    match c {
        RawCoord::Int(v) => Ok(Q::from_integer(v as i128)),
        RawCoord::Text(t) => {
            let parse = |s: &str| s.trim().parse::<i128>().map_err(|_| Error::Schema(format!("bad rational {t:?}")));
            match t.split_once('/') {
                Some((n, d)) => {
                    let d = parse(d)?;
                    if d == 0 {
                        return Err(Error::Schema(format!("zero denominator in {t:?}")));
                    }
                    Ok(Q::new(parse(n)?, d))
                }
                None => Ok(Q::from_integer(parse(&t)?)),
            }
        }
    }
}

#[derive(Deserialize)]
struct RawPolytope {
    vertices: Vec<Vec<RawCoord>>,
}

/// The convex hull of finitely many points of `ℚ^p_{≥0}`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawPolytope")]
pub struct RationalPolytope {
    vertices: Vec<Vec<Q>>,
}

impl TryFrom<RawPolytope> for RationalPolytope {
    type Error = Error;

    fn try_from(raw: RawPolytope) -> Result<Self> {
        let vertices = raw
            .vertices
            .into_iter()
            .map(|v| v.into_iter().map(parse_coord).collect::<Result<Vec<Q>>>())
            .collect::<Result<Vec<_>>>()?;
        RationalPolytope::new(vertices)
    }
}

impl Serialize for RationalPolytope {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            vertices: Vec<Vec<String>>,
        }
        Out {
            vertices: self.vertices.iter().map(|v| v.iter().map(|q| q.to_string()).collect()).collect(),
        }
        .serialize(serializer)
    }
}

impl RationalPolytope {
    pub fn new(mut vertices: Vec<Vec<Q>>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::Schema("a polytope needs at least one vertex".into()));
        };
        let p = first.len();
        if p == 0 || vertices.iter().any(|v| v.len() != p) {
            return Err(Error::Schema("vertices need one common positive dimension".into()));
        }
        if vertices.iter().flatten().any(|q| q.is_negative()) {
            return Err(Error::Schema("vertices must lie in the nonnegative orthant".into()));
        }
        vertices.sort();
        vertices.dedup();
        Ok(RationalPolytope { vertices })
    }

    pub fn from_integers(vertices: &[Vec<i64>]) -> Result<Self> {
        RationalPolytope::new(
            vertices
                .iter()
                .map(|v| v.iter().map(|&c| Q::from_integer(c as i128)).collect())
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Whether the polytope has nonempty interior.
    pub fn is_full_dimensional(&self) -> bool {
        let base = &self.vertices[0];
        let lcm = self
            .vertices
            .iter()
            .flatten()
            .fold(1i128, |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
        let rows: Vec<Vec<i128>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| ((a - b) * Q::from_integer(lcm)).to_integer()).collect())
            .collect();
        rows.len() >= self.dim() && rank(&rows, self.dim()) == self.dim()
    }

    /// `F/d`.
    pub fn scaled_down(&self, d: i64) -> Result<RationalPolytope> {
        if d <= 0 {
            return Err(Error::ZeroDivisor);
        }
        let k = Q::from_integer(d as i128);
        RationalPolytope::new(self.vertices.iter().map(|v| v.iter().map(|q| q / k).collect()).collect())
    }

    /// The closed interval of `t > 0` with `x ∈ tF`, `None` when empty; an
    /// upper end of `None` means unbounded.
    ///
    /// The convex weights `β ≥ 0` with `Σ β_k v_k = x` form a pointed
    /// polyhedron, and `t = Σ β_k` is extremal at its vertices. These are
    /// the solutions supported on linearly independent vertex subsets.
    pub fn scale_interval(&self, x: &LatticePoint) -> Option<(Q, Option<Q>)> {
        let rhs: Vec<Q> = x.coords().iter().map(|&c| Q::from_integer(c as i128)).collect();
        let unbounded = self.vertices.iter().any(|v| v.iter().all(Zero::is_zero));
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        let n = self.vertices.len();
        for k in 1..=self.dim().min(n) {
            for sub in subsets(n, k) {
                let cols: Vec<Vec<Q>> = sub.iter().map(|&i| self.vertices[i].clone()).collect();
                let Some(beta) = solve_columns(&cols, &rhs) else {
                    continue;
                };
                if beta.iter().any(|b| b.is_negative()) {
                    continue;
                }
                let t: Q = beta.iter().copied().sum();
                lo = Some(lo.map_or(t, |l| l.min(t)));
                hi = Some(hi.map_or(t, |h| h.max(t)));
            }
        }
        let lo = lo?;
        Some((lo, if unbounded { None } else { hi }))
    }
}

/// `x ∈ ⋃_{i ≥ 0} iF ∩ ℕ^p`.
pub fn convex_member(f: &RationalPolytope, x: &LatticePoint) -> bool {
    if x.is_zero() {
        return true;
    }
    if x.dim() != f.dim() {
        return false;
    }
    match f.scale_interval(x) {
        None => false,
        Some((lo, hi)) => {
            let first = lo.ceil().to_integer().max(1);
            hi.is_none_or(|h| Q::from_integer(first) <= h)
        }
    }
}

impl Membership for RationalPolytope {
    fn dim(&self) -> usize {
        RationalPolytope::dim(self)
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        convex_member(self, x)
    }
}

/// Checks `ℬ(F)/d = ℬ(F/d)` pointwise on the window; returns the first
/// point where they differ.
pub fn convex_quotient_equal(f: &RationalPolytope, d: i64, window: &LatticePoint) -> Result<Option<LatticePoint>> {
    if !f.is_full_dimensional() {
        return Err(Error::Precondition("the polytope has empty interior".into()));
    }
    if window.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: window.dim(),
        });
    }
    let small = f.scaled_down(d)?;
    for x in box_points(window) {
        if convex_member(f, &x.scale(d)?) != convex_member(&small, &x) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{pt, TotalOrder};
    use crate::semigroup::{CSemigroup, GeneratedSemigroup};

    fn numerical(gens: &[i64]) -> GeneratedSemigroup {
        GeneratedSemigroup::new(gens.iter().map(|&g| pt(&[g])).collect(), TotalOrder::default()).unwrap()
    }

    #[test]
    fn modular_membership() {
        let sys = ModularSystem::new(vec![vec![3]], vec![vec![2]], vec![7]).unwrap();
        assert!(pm_member(&sys, &pt(&[0])));
        assert!(pm_member(&sys, &pt(&[4])));
        assert!(!pm_member(&sys, &pt(&[1])));
        assert!(ModularSystem::new(vec![vec![7]], vec![vec![2]], vec![7]).is_err());
        assert!(ModularSystem::new(vec![vec![1]], vec![vec![2]], vec![0]).is_err());
        let q = pm_quotient(&sys, 2).unwrap();
        for x in 0..40 {
            assert_eq!(pm_member(&q, &pt(&[x])), pm_member(&sys, &pt(&[2 * x])));
        }
        let both = pm_intersect(&sys, &sys).unwrap();
        assert_eq!(both.num_rows(), 2);
        let json: ModularSystem = serde_json::from_str(r#"{"A":[[3]],"G":[[2]],"b":[7]}"#).unwrap();
        assert_eq!(json, sys);
    }

    #[test]
    fn arf() {
        let plane = CSemigroup::full(Cone::orthant(2), TotalOrder::default()).unwrap();
        assert_eq!(arf_check(&plane, &pt(&[6, 6])).unwrap(), None);
        let v = arf_check(&numerical(&[3, 5]), &pt(&[15])).unwrap().unwrap();
        assert_eq!((v.x, v.y, v.z), (pt(&[5]), pt(&[5]), pt(&[3])));
        assert!(arf_check(&plane, &pt(&[0, 3])).is_err());
    }

    #[test]
    fn saturation() {
        let plane = CSemigroup::full(Cone::orthant(2), TotalOrder::default()).unwrap();
        assert_eq!(saturated_check(&plane, &pt(&[5, 5]), 2).unwrap(), None);
        let v = saturated_check(&numerical(&[3, 5]), &pt(&[15]), 1).unwrap().unwrap();
        assert!(!numerical(&[3, 5]).contains(&v.result));
        // 5 − 3 + 5 = 7 is a gap
        assert_eq!(v.s, pt(&[5]));
        assert_eq!(v.result, pt(&[7]));
        // ⟨2,3⟩ is saturated
        assert_eq!(saturated_check(&numerical(&[2, 3]), &pt(&[20]), 3).unwrap(), None);
    }

    #[test]
    fn cohen_macaulay() {
        let plane = CSemigroup::full(Cone::orthant(2), TotalOrder::default()).unwrap();
        let units = vec![pt(&[1, 0]), pt(&[0, 1])];
        assert_eq!(cm_check(&plane, plane.cone(), &units, &pt(&[8, 8])).unwrap(), None);
        let g = GeneratedSemigroup::new(vec![pt(&[4, 0]), pt(&[0, 4]), pt(&[1, 3]), pt(&[3, 1])], TotalOrder::default())
            .unwrap();
        let cone = g.cone().unwrap();
        let rays = default_ray_elements(&g, &cone, 16).unwrap();
        let mut sorted = rays.clone();
        sorted.sort();
        assert_eq!(sorted, vec![pt(&[0, 4]), pt(&[4, 0])]);
        let v = cm_check(&g, &cone, &rays, &pt(&[8, 8])).unwrap().unwrap();
        assert!(v.a.checked_sub(&rays[v.j]).is_none_or(|w| !g.contains(&w)));
        let even = GeneratedSemigroup::new(vec![pt(&[2, 0]), pt(&[0, 2]), pt(&[1, 1])], TotalOrder::default()).unwrap();
        let cone = even.cone().unwrap();
        let rays = default_ray_elements(&even, &cone, 16).unwrap();
        assert_eq!(cm_check(&even, &cone, &rays, &pt(&[10, 10])).unwrap(), None);
        let tri = Cone::new(vec![pt(&[1, 0]), pt(&[1, 1]), pt(&[0, 1])]).unwrap();
        assert!(cm_check(&plane, &tri, &units, &pt(&[3, 3])).is_ok());
    }

    #[test]
    fn convex_bodies() {
        let seg = RationalPolytope::from_integers(&[vec![1, 1], vec![2, 1]]).unwrap();
        assert!(convex_member(&seg, &pt(&[0, 0])));
        assert!(convex_member(&seg, &pt(&[3, 2])));
        assert!(!convex_member(&seg, &pt(&[5, 2])));
        assert!(!seg.is_full_dimensional());
        assert!(convex_quotient_equal(&seg, 2, &pt(&[10, 10])).is_err());
        let tri: RationalPolytope = serde_json::from_str(r#"{"vertices":[[1,0],[0,1],["3/2","3/2"]]}"#).unwrap();
        assert!(tri.is_full_dimensional());
        assert!(convex_member(&tri, &pt(&[1, 0])));
        // (1,1) = t·(convex point) only for t ∈ [2/3, 1]
        assert!(convex_member(&tri, &pt(&[1, 1])));
        let thin = RationalPolytope::from_integers(&[vec![2, 0], vec![3, 0], vec![2, 1]]).unwrap();
        assert!(!convex_member(&thin, &pt(&[1, 0])));
        assert!(convex_member(&thin, &pt(&[4, 1])));
        assert_eq!(convex_quotient_equal(&tri, 2, &pt(&[10, 10])).unwrap(), None);
        assert_eq!(convex_quotient_equal(&tri, 3, &pt(&[10, 10])).unwrap(), None);
    }
}

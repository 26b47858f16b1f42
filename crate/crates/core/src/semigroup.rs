//! 𝒞-semigroups in gap representation, generated affine semigroups, and the
//! classical invariants: Frobenius element, pseudo-Frobenius elements, Apéry
//! sets, fundamental gaps and genus.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{in_monoid, reduce_generating_set};
use crate::lattice::{box_points, Cone, LatticePoint, TotalOrder};

/// Default degree ceiling for [`gaps_from_generators`].
pub const DEFAULT_DEGREE_CEILING: i64 = 1024;

/// Anything that can decide membership of a lattice point.
pub trait Membership {
    fn dim(&self) -> usize;
    fn contains(&self, x: &LatticePoint) -> bool;
}

impl<M: Membership + ?Sized> Membership for &M {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        (**self).contains(x)
    }
}

/// The quotient `M/d = {x : d·x ∈ M}` of any membership predicate.
#[derive(Clone, Copy, Debug)]
pub struct QuotientView<M> {
    inner: M,
    d: i64,
}

impl<M: Membership> QuotientView<M> {
    pub fn new(inner: M, d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(QuotientView { inner, d })
    }
}

impl<M: Membership> Membership for QuotientView<M> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        match x.scale(self.d) {
            Ok(y) => self.inner.contains(&y),
            Err(_) => false,
        }
    }
}

/// Membership given by a closure.
pub struct FnMembership<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&LatticePoint) -> bool> FnMembership<F> {
    pub fn new(dim: usize, f: F) -> Self {
        FnMembership { dim, f }
    }
}

impl<F: Fn(&LatticePoint) -> bool> Membership for FnMembership<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        (self.f)(x)
    }
}

/// Checks that `cone ∖ gaps` is a 𝒞-semigroup.
///
/// On failure returns either the first gap outside the cone or a witness
/// `u + (h − u) = h` with both summands in the complement and `h` a gap.
pub fn validate(cone: &Cone, gaps: &[LatticePoint]) -> Result<()> {
    let set: HashSet<&LatticePoint> = gaps.iter().collect();
    for h in gaps {
        if h.dim() != cone.dim() {
            return Err(Error::DimensionMismatch {
                expected: cone.dim(),
                found: h.dim(),
            });
        }
        if !cone.contains(h) {
            return Err(Error::GapOutsideCone(h.clone()));
        }
        if h.is_zero() {
            return Err(Error::Precondition("0 cannot be a gap".into()));
        }
    }
    let mut ordered: Vec<&LatticePoint> = gaps.iter().collect();
    ordered.sort_by_key(|h| (h.degree(), (*h).clone()));
    for h in ordered {
        for u in box_points(h) {
            if u.is_zero() || &u == h || !cone.contains(&u) || set.contains(&u) {
                continue;
            }
            let v = h.checked_sub(&u).expect("u lies in the box below h");
            if cone.contains(&v) && !set.contains(&v) {
                return Err(Error::NotClosed {
                    gap: h.clone(),
                    left: u,
                    right: v,
                });
            }
        }
    }
    Ok(())
}

/// Lattice points of `cone` below `f` (inclusive or strict), ascending under
/// `order`. Needs an order with finite initial segments.
pub fn cone_down_set(cone: &Cone, order: &TotalOrder, f: &LatticePoint, inclusive: bool) -> Result<Vec<LatticePoint>> {
    order.require_finite_segments(cone.dim())?;
    if f.dim() != cone.dim() {
        return Err(Error::DimensionMismatch {
            expected: cone.dim(),
            found: f.dim(),
        });
    }
    let mut out: Vec<LatticePoint> = cone
        .points_up_to_degree(f.degree())
        .filter(|x| {
            let o = order.cmp(x, f);
            o.is_lt() || (inclusive && o.is_eq())
        })
        .collect();
    order.sort(&mut out);
    Ok(out)
}

/// A 𝒞-semigroup `S = 𝒞 ∖ ℋ(S)` held as its cone and finite gap set.
///
/// Gaps are kept sorted ascending under the order; two values are equal iff
/// their canonical forms agree.
#[derive(Clone, Debug)]
pub struct CSemigroup {
    cone: Cone,
    order: TotalOrder,
    gaps: Vec<LatticePoint>,
    gap_set: HashSet<LatticePoint>,
    generators: OnceLock<Vec<LatticePoint>>,
}

impl PartialEq for CSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone && self.order == other.order && self.gaps == other.gaps
    }
}

impl Eq for CSemigroup {}

impl std::hash::Hash for CSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cone.hash(state);
        self.order.hash(state);
        self.gaps.hash(state);
    }
}

impl Membership for CSemigroup {
    fn dim(&self) -> usize {
        self.cone.dim()
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        self.cone.contains(x) && !self.gap_set.contains(x)
    }
}

impl CSemigroup {
    /// Validates and builds `cone ∖ gaps`.
    pub fn new(cone: Cone, gaps: Vec<LatticePoint>, order: TotalOrder) -> Result<Self> {
        let order = order.resolved(cone.dim())?;
        validate(&cone, &gaps)?;
        Ok(Self::from_valid(cone, gaps, order))
    }

    /// The whole cone, `S = 𝒞`.
    pub fn full(cone: Cone, order: TotalOrder) -> Result<Self> {
        Self::new(cone, Vec::new(), order)
    }

    /// Skips validation; `order` must already be resolved.
    pub(crate) fn from_valid(cone: Cone, mut gaps: Vec<LatticePoint>, order: TotalOrder) -> Self {
        order.sort(&mut gaps);
        gaps.dedup();
        let gap_set = gaps.iter().cloned().collect();
        CSemigroup {
            cone,
            order,
            gaps,
            gap_set,
            generators: OnceLock::new(),
        }
    }

    /// Same cone and order, different gaps; validated.
    pub fn with_gaps(&self, gaps: Vec<LatticePoint>) -> Result<Self> {
        validate(&self.cone, &gaps)?;
        Ok(Self::from_valid(self.cone.clone(), gaps, self.order.clone()))
    }

    pub(crate) fn with_gaps_unchecked(&self, gaps: Vec<LatticePoint>) -> Self {
        Self::from_valid(self.cone.clone(), gaps, self.order.clone())
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn order(&self) -> &TotalOrder {
        &self.order
    }

    /// ℋ(S), ascending under the order.
    pub fn gaps(&self) -> &[LatticePoint] {
        &self.gaps
    }

    pub fn is_gap(&self, x: &LatticePoint) -> bool {
        self.gap_set.contains(x)
    }

    pub fn is_full(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// Membership for a vector that may leave ℕ^p.
    pub fn contains_signed(&self, x: &[i64]) -> bool {
        match LatticePoint::new(x.to_vec()) {
            Ok(p) => self.contains(&p),
            Err(_) => false,
        }
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Fb(S), the largest gap; `None` when `S = 𝒞`.
    pub fn frobenius(&self) -> Option<&LatticePoint> {
        self.gaps.last()
    }

    /// The least `k ≥ 1` with `k·n ∈ S`.
    pub fn least_multiple_in(&self, n: &LatticePoint) -> i64 {
        debug_assert!(self.cone.contains(n) && !n.is_zero());
        (1..)
            .find(|&k| self.contains(&n.scale(k).expect("multiple overflows")))
            .expect("a C-semigroup contains large multiples of every cone point")
    }

    /// Degree bound for minimal generators: max gap degree plus
    /// `Σ k_i·deg(n_i)` over the Hilbert basis `n_i` of the cone.
    fn generator_window(&self) -> i64 {
        let top = self.gaps.iter().map(|g| g.degree()).max().unwrap_or(0);
        let slack: i64 = self
            .cone
            .hilbert_basis()
            .iter()
            .map(|n| self.least_multiple_in(n) * n.degree())
            .sum();
        top + slack
    }

    /// The unique minimal generating set, ascending under the order.
    pub fn minimal_generators(&self) -> &[LatticePoint] {
        self.generators.get_or_init(|| {
            let mut found: Vec<LatticePoint> = Vec::new();
            for x in self.cone.points_up_to_degree(self.generator_window()) {
                if x.is_zero() || !self.contains(&x) {
                    continue;
                }
                let decomposable = found
                    .iter()
                    .any(|g| g.le_componentwise(&x) && self.contains(&x.checked_sub(g).expect("g ≤ x")));
                if !decomposable {
                    found.push(x);
                }
            }
            self.order.sort(&mut found);
            found
        })
    }

    /// PF(S): gaps `x` with `x + a ∈ S` for every minimal generator `a`.
    pub fn pseudo_frobenius(&self) -> Vec<LatticePoint> {
        if self.gaps.is_empty() {
            return Vec::new();
        }
        let gens = self.minimal_generators();
        self.gaps
            .iter()
            .filter(|x| gens.iter().all(|a| self.contains(&x.checked_add(a).expect("overflow"))))
            .cloned()
            .collect()
    }

    fn require_nonzero_member(&self, m: &LatticePoint) -> Result<()> {
        if m.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: m.dim(),
            });
        }
        if m.is_zero() || !self.contains(m) {
            return Err(Error::NotAMember(m.clone()));
        }
        Ok(())
    }

    /// Ap(S, m) = {x ∈ S : x − m ∈ ℋ(S)} = (m + ℋ(S)) ∩ S.
    pub fn apery(&self, m: &LatticePoint) -> Result<Vec<LatticePoint>> {
        self.require_nonzero_member(m)?;
        let mut out = Vec::new();
        for h in &self.gaps {
            let x = m.checked_add(h)?;
            if self.contains(&x) {
                out.push(x);
            }
        }
        self.order.sort(&mut out);
        Ok(out)
    }

    /// The classical Apéry set `{x ∈ S : x − m ∉ S}` restricted to the box
    /// `0 ≤ x ≤ corner`. For `p ≥ 2` the unrestricted set is infinite.
    pub fn apery_classical(&self, m: &LatticePoint, corner: &LatticePoint) -> Result<Vec<LatticePoint>> {
        self.require_nonzero_member(m)?;
        let mut out: Vec<LatticePoint> = box_points(corner)
            .into_iter()
            .filter(|x| self.contains(x) && !x.checked_sub(m).is_some_and(|y| self.contains(&y)))
            .collect();
        self.order.sort(&mut out);
        Ok(out)
    }

    /// FG(S): gaps `x` with `2x, 3x ∈ S`.
    pub fn fundamental_gaps(&self) -> Vec<LatticePoint> {
        self.gaps
            .iter()
            .filter(|x| {
                let two = x.scale(2).expect("overflow");
                let three = x.scale(3).expect("overflow");
                self.contains(&two) && self.contains(&three)
            })
            .cloned()
            .collect()
    }

    /// `S ∩ T`; the gap sets are united.
    pub fn intersect(&self, other: &CSemigroup) -> Result<CSemigroup> {
        if self.cone != other.cone || self.order != other.order {
            return Err(Error::Incompatible);
        }
        let mut gaps = self.gaps.clone();
        gaps.extend(other.gaps.iter().filter(|g| !self.gap_set.contains(*g)).cloned());
        Ok(self.with_gaps_unchecked(gaps))
    }

    /// Canonical serialized form; equality of values is equality of this.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

#[derive(Serialize)]
struct CanonicalCone<'a> {
    rays: Vec<&'a LatticePoint>,
}

#[derive(Serialize)]
struct CanonicalSemigroup<'a> {
    cone: CanonicalCone<'a>,
    gaps: &'a [LatticePoint],
    order: &'a TotalOrder,
}

impl Serialize for CSemigroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rays: Vec<&LatticePoint> = self.cone.rays().iter().collect();
        rays.sort_by(|a, b| self.order.cmp(a, b));
        CanonicalSemigroup {
            cone: CanonicalCone { rays },
            gaps: &self.gaps,
            order: &self.order,
        }
        .serialize(serializer)
    }
}

/// The two accepted input shapes for a semigroup.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SemigroupSpec {
    Gaps {
        cone: Cone,
        gaps: Vec<LatticePoint>,
        #[serde(default)]
        order: TotalOrder,
    },
    Generators {
        generators: Vec<LatticePoint>,
        #[serde(default)]
        order: TotalOrder,
    },
}

impl SemigroupSpec {
    /// Converts either shape to gap representation.
    pub fn into_csemigroup(self, ceiling: i64) -> Result<CSemigroup> {
        match self {
            SemigroupSpec::Gaps { cone, gaps, order } => CSemigroup::new(cone, gaps, order),
            SemigroupSpec::Generators { generators, order } => {
                gaps_from_generators(&GeneratedSemigroup::new(generators, order)?, ceiling)
            }
        }
    }
}

impl<'de> Deserialize<'de> for CSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let spec = SemigroupSpec::deserialize(deserializer)?;
        spec.into_csemigroup(DEFAULT_DEGREE_CEILING).map_err(serde::de::Error::custom)
    }
}

/// An affine semigroup given by a finite list of nonzero generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedSemigroup {
    generators: Vec<LatticePoint>,
    order: TotalOrder,
}

impl Membership for GeneratedSemigroup {
    fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.dim() && in_monoid(&self.generators, x)
    }
}

impl GeneratedSemigroup {
    pub fn new(mut generators: Vec<LatticePoint>, order: TotalOrder) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::Precondition("at least one generator is required".into()));
        };
        let dim = first.dim();
        for g in &generators {
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
        let order = order.resolved(dim)?;
        order.sort(&mut generators);
        generators.dedup();
        Ok(GeneratedSemigroup { generators, order })
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    pub fn order(&self) -> &TotalOrder {
        &self.order
    }

    /// The smallest cone containing the semigroup.
    pub fn cone(&self) -> Result<Cone> {
        Cone::new(self.generators.clone())
    }

    pub fn minimal_generators(&self) -> Result<Vec<LatticePoint>> {
        let mut gens = reduce_generating_set(&self.generators)?;
        self.order.sort(&mut gens);
        Ok(gens)
    }
}

impl From<&CSemigroup> for GeneratedSemigroup {
    fn from(s: &CSemigroup) -> Self {
        GeneratedSemigroup {
            generators: s.minimal_generators().to_vec(),
            order: s.order().clone(),
        }
    }
}

/// Converts a generated semigroup into gap representation over the cone its
/// generators span.
///
/// Cone points are processed by increasing degree. With `G` the degree of
/// the last gap seen and `k_i` the least multiple of each cone Hilbert basis
/// element `n_i` lying in the semigroup, once every degree in
/// `(G, G + Σ k_i·deg(n_i)]` is gap-free no later gap can occur: any point
/// beyond splits as `k_i·n_i` plus a point of larger degree than `G`.
/// Fails with [`Error::Ceiling`] if no certificate is reached by degree
/// `ceiling`, as happens when the complement in the cone is infinite.
pub fn gaps_from_generators(g: &GeneratedSemigroup, ceiling: i64) -> Result<CSemigroup> {
    let cone = g.cone()?;
    let basis = cone.hilbert_basis();
    let mut multiples: Vec<Option<i64>> = vec![None; basis.len()];
    let mut members: HashSet<LatticePoint> = HashSet::new();
    members.insert(LatticePoint::zero(cone.dim()));
    let mut gaps = Vec::new();
    let mut last_gap_degree = 0i64;
    let mut t = 0i64;
    loop {
        t += 1;
        if t > ceiling {
            return Err(Error::Ceiling(format!(
                "no finite gap certificate up to degree {ceiling}; the complement in the cone may be infinite"
            )));
        }
        for x in cone.points_of_degree(t) {
            let member = g
                .generators()
                .iter()
                .any(|gen| x.checked_sub(gen).is_some_and(|rest| members.contains(&rest)));
            if member {
                members.insert(x);
            } else {
                gaps.push(x);
                last_gap_degree = t;
            }
        }
        for (n, k) in basis.iter().zip(multiples.iter_mut()) {
            if k.is_none() && t % n.degree() == 0 && members.contains(&n.scale(t / n.degree())?) {
                *k = Some(t / n.degree());
            }
        }
        if multiples.iter().all(Option::is_some) {
            let slack: i64 = basis.iter().zip(&multiples).map(|(n, k)| k.unwrap() * n.degree()).sum();
            if t - last_gap_degree >= slack {
                break;
            }
        }
    }
    Ok(CSemigroup::from_valid(cone, gaps, g.order().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{pt, OrderKind};

    pub(crate) fn sstar() -> CSemigroup {
        CSemigroup::new(
            Cone::new(vec![pt(&[4, 1]), pt(&[9, 5])]).unwrap(),
            vec![pt(&[2, 1]), pt(&[3, 1])],
            TotalOrder::of_kind(OrderKind::GradedRevCoordLex),
        )
        .unwrap()
    }

    fn sstar_generators() -> Vec<LatticePoint> {
        [[4, 1], [5, 2], [7, 2], [9, 5], [4, 2], [6, 2], [6, 3], [7, 3], [11, 6]]
            .iter()
            .map(|c| pt(c))
            .collect()
    }

    fn numerical(gens: &[i64]) -> CSemigroup {
        let g = GeneratedSemigroup::new(gens.iter().map(|&v| pt(&[v])).collect(), TotalOrder::default()).unwrap();
        gaps_from_generators(&g, DEFAULT_DEGREE_CEILING).unwrap()
    }

    #[test]
    fn validation() {
        let cone = Cone::new(vec![pt(&[4, 1]), pt(&[9, 5])]).unwrap();
        assert!(validate(&cone, &[pt(&[2, 1]), pt(&[3, 1])]).is_ok());
        assert_eq!(
            validate(&cone, &[pt(&[4, 2])]),
            Err(Error::NotClosed {
                gap: pt(&[4, 2]),
                left: pt(&[2, 1]),
                right: pt(&[2, 1])
            })
        );
        assert!(validate(&cone, &[]).is_ok());
        assert_eq!(validate(&cone, &[pt(&[1, 0])]), Err(Error::GapOutsideCone(pt(&[1, 0]))));
        assert!(validate(&cone, &[pt(&[0, 0])]).is_err());
    }

    #[test]
    fn membership() {
        let s = sstar();
        assert!(s.contains(&pt(&[4, 2])));
        assert!(!s.contains(&pt(&[2, 1])));
        assert!(!s.contains(&pt(&[1, 0])));
        let g = GeneratedSemigroup::new(vec![pt(&[4, 1]), pt(&[5, 2])], TotalOrder::default()).unwrap();
        assert!(g.contains(&pt(&[9, 3])));
        assert!(!g.contains(&pt(&[9, 2])));
    }

    #[test]
    fn conversion_from_generators() {
        let g = GeneratedSemigroup::new(sstar_generators(), TotalOrder::default()).unwrap();
        let s = gaps_from_generators(&g, DEFAULT_DEGREE_CEILING).unwrap();
        assert_eq!(s, sstar());
        let plane = GeneratedSemigroup::new(vec![pt(&[1, 0]), pt(&[0, 1])], TotalOrder::default()).unwrap();
        assert!(gaps_from_generators(&plane, 64).unwrap().gaps().is_empty());
        assert_eq!(numerical(&[2, 3]).gaps(), &[pt(&[1])]);
        assert_eq!(numerical(&[5, 6, 7, 9, 11]).gaps(), &[pt(&[1]), pt(&[2]), pt(&[3]), pt(&[4]), pt(&[8])]);
        // ⟨2⟩ ⊂ ℕ has infinitely many gaps
        let evens = GeneratedSemigroup::new(vec![pt(&[2])], TotalOrder::default()).unwrap();
        assert!(matches!(gaps_from_generators(&evens, 50), Err(Error::Ceiling(_))));
        // ⟨(1,0),(1,1),(1,2)⟩ over the cone spanned by (1,0),(1,2) is missing nothing
        let g = GeneratedSemigroup::new(vec![pt(&[1, 0]), pt(&[1, 2]), pt(&[1, 1])], TotalOrder::default()).unwrap();
        assert!(gaps_from_generators(&g, 64).unwrap().is_full());
    }

    #[test]
    fn minimal_generators_of_the_worked_example() {
        let mut expected = sstar_generators();
        TotalOrder::default().sort(&mut expected);
        assert_eq!(sstar().minimal_generators(), expected.as_slice());
        let plane = CSemigroup::full(Cone::orthant(2), TotalOrder::default()).unwrap();
        assert_eq!(plane.minimal_generators(), &[pt(&[1, 0]), pt(&[0, 1])]);
        assert_eq!(numerical(&[2, 3]).minimal_generators(), &[pt(&[2]), pt(&[3])]);
    }

    #[test]
    fn frobenius_and_pseudo_frobenius() {
        let s = sstar();
        assert_eq!(s.frobenius(), Some(&pt(&[3, 1])));
        assert_eq!(s.pseudo_frobenius(), vec![pt(&[2, 1]), pt(&[3, 1])]);
        let full = CSemigroup::full(s.cone().clone(), s.order().clone()).unwrap();
        assert_eq!(full.frobenius(), None);
        assert!(full.pseudo_frobenius().is_empty());
        let single = full.with_gaps(vec![pt(&[3, 1])]).unwrap();
        assert_eq!(single.pseudo_frobenius(), vec![pt(&[3, 1])]);
        assert_eq!(numerical(&[2, 3]).pseudo_frobenius(), vec![pt(&[1])]);
        assert_eq!(s.genus(), 2);
    }

    #[test]
    fn apery_sets() {
        let s = sstar();
        assert_eq!(s.apery(&pt(&[4, 2])).unwrap(), vec![pt(&[6, 3]), pt(&[7, 3])]);
        assert!(s.apery(&pt(&[2, 1])).is_err());
        assert!(s.apery(&pt(&[0, 0])).is_err());
        let full = CSemigroup::full(s.cone().clone(), s.order().clone()).unwrap();
        assert!(full.apery(&pt(&[4, 1])).unwrap().is_empty());
        let n23 = numerical(&[2, 3]);
        assert_eq!(n23.apery(&pt(&[2])).unwrap(), vec![pt(&[3])]);
        // the classical set also holds 0
        assert_eq!(n23.apery_classical(&pt(&[2]), &pt(&[20])).unwrap(), vec![pt(&[0]), pt(&[3])]);
    }

    #[test]
    fn fundamental_gaps() {
        assert_eq!(sstar().fundamental_gaps(), vec![pt(&[2, 1]), pt(&[3, 1])]);
        assert_eq!(numerical(&[2, 3]).fundamental_gaps(), vec![pt(&[1])]);
        // ⟨3,5⟩: gaps 1,2,4,7; 2·4 = 8 and 3·4 = 12 lie in S but 2·2 = 4 does not
        assert_eq!(numerical(&[3, 5]).fundamental_gaps(), vec![pt(&[4]), pt(&[7])]);
    }

    #[test]
    fn intersection_and_equality() {
        let s = sstar();
        assert_eq!(s.intersect(&s).unwrap(), s);
        let a = s.with_gaps(vec![pt(&[2, 1])]).unwrap();
        let b = s.with_gaps(vec![pt(&[3, 1])]).unwrap();
        let ab = a.intersect(&b).unwrap();
        assert_eq!(ab, s);
        assert_eq!(ab.canonical_json(), s.canonical_json());
        let other = CSemigroup::full(Cone::orthant(2), TotalOrder::default()).unwrap();
        assert_eq!(s.intersect(&other), Err(Error::Incompatible));
    }

    #[test]
    fn json_round_trip() {
        let s = sstar();
        let text = s.canonical_json();
        assert_eq!(
            text,
            r#"{"cone":{"rays":[[4,1],[9,5]]},"gaps":[[2,1],[3,1]],"order":{"kind":"graded-then-revcoordlex","perm":[0,1]}}"#
        );
        let back: CSemigroup = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let from_gens: CSemigroup = serde_json::from_str(
            r#"{"generators":[[4,1],[5,2],[7,2],[9,5],[4,2],[6,2],[6,3],[7,3],[11,6]],"order":{"kind":"graded-then-revcoordlex"}}"#,
        )
        .unwrap();
        assert_eq!(from_gens, s);
        assert!(serde_json::from_str::<CSemigroup>(r#"{"cone":{"rays":[[4,1],[9,5]]},"gaps":[[4,2]]}"#).is_err());
    }

    #[test]
    fn quotient_view() {
        let s = sstar();
        let half = QuotientView::new(&s, 3).unwrap();
        assert!(half.contains(&pt(&[2, 1])));
        assert!(QuotientView::new(&s, 0).is_err());
    }
}

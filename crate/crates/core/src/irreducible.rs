//! Symmetric and pseudo-symmetric 𝒞-semigroups: classification, the
//! characterizations through `Fb(S) − x`, and explicit covers by 2 and 4.
//!
//! Comparisons against `f/2` or `Fb/2` are made on doubled values.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{box_points, LatticePoint};
use crate::quotient::quotient_gaps;
use crate::semigroup::{cone_down_set, CSemigroup, Membership};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Classification {
    #[serde(rename = "symmetric")]
    Symmetric,
    #[serde(rename = "pseudo-symmetric")]
    PseudoSymmetric,
    #[serde(rename = "not-irreducible")]
    NotIrreducible,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Symmetric => "symmetric",
            Classification::PseudoSymmetric => "pseudo-symmetric",
            Classification::NotIrreducible => "not-irreducible",
        }
    }

    pub fn is_irreducible(&self) -> bool {
        *self != Classification::NotIrreducible
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn frobenius(s: &CSemigroup) -> Result<&LatticePoint> {
    s.frobenius()
        .ok_or_else(|| Error::Precondition("S is the whole cone and has no Frobenius element".into()))
}

/// Symmetric iff `PF(S) = {Fb}`, pseudo-symmetric iff `PF(S) = {Fb, Fb/2}`.
pub fn classify(s: &CSemigroup) -> Result<Classification> {
    let fb = frobenius(s)?;
    let pf = s.pseudo_frobenius();
    Ok(match pf.as_slice() {
        [only] if only == fb => Classification::Symmetric,
        [a, b] if b == fb && fb.div_exact(2).as_ref() == Some(a) => Classification::PseudoSymmetric,
        _ => Classification::NotIrreducible,
    })
}

/// `Fb − x` lies in `S`; false when it leaves ℕ^p.
fn complement_in(s: &CSemigroup, fb: &LatticePoint, x: &LatticePoint) -> bool {
    fb.checked_sub(x).is_some_and(|y| s.contains(&y))
}

/// Points where the characterizations can fail: the cone points below
/// `Fb` componentwise, and the gaps. Elsewhere `x ∈ S` and `Fb − x ∉ ℕ^p`.
fn scan_points(s: &CSemigroup, fb: &LatticePoint) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = box_points(fb).into_iter().filter(|x| s.cone().contains(x)).collect();
    pts.extend(s.gaps().iter().filter(|g| !g.le_componentwise(fb)).cloned());
    pts
}

/// `x ∈ S ⟺ Fb(S) − x ∉ S` for every `x ∈ 𝒞`.
pub fn check_symmetric_characterization(s: &CSemigroup) -> Result<bool> {
    let fb = frobenius(s)?;
    Ok(scan_points(s, fb).iter().all(|x| s.contains(x) == !complement_in(s, fb, x)))
}

/// `Fb(S) ∈ 2ℕ^p` and `x ∈ S ⟺ (Fb(S) − x ∉ S and x ≠ Fb(S)/2)`.
pub fn check_pseudosymmetric_characterization(s: &CSemigroup) -> Result<bool> {
    let fb = frobenius(s)?;
    let Some(half) = fb.div_exact(2) else {
        return Ok(false);
    };
    Ok(scan_points(s, fb)
        .iter()
        .all(|x| s.contains(x) == (!complement_in(s, fb, x) && *x != half)))
}

/// Checks the hypotheses for [`symmetric_double`]: `f ∈ 𝒞` with odd
/// coordinates and `f − f_i − f_j ∈ S` for all `f_i, f_j ∈ PF(S)`.
pub fn check_double_bound(s: &CSemigroup, f: &LatticePoint) -> Result<()> {
    if f.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: f.dim(),
        });
    }
    if !s.cone().contains(f) {
        return Err(Error::Precondition(format!("{f} lies outside the cone")));
    }
    if let Some(i) = f.coords().iter().position(|c| c % 2 == 0) {
        return Err(Error::Precondition(format!("coordinate {i} of {f} is even")));
    }
    let pf = s.pseudo_frobenius();
    for (i, a) in pf.iter().enumerate() {
        for b in &pf[i..] {
            let ok = f.checked_sub(a).and_then(|r| r.checked_sub(b)).is_some_and(|r| s.contains(&r));
            if !ok {
                return Err(Error::Precondition(format!("f − {a} − {b} is not in S")));
            }
        }
    }
    Ok(())
}

/// The symmetric `T` with `Fb(T) = f` and `T/2 = S`:
/// `T = 2S ∪ {x : f − x ∉ 𝒞} ∪ ⋃_i ((f − 2f_i) + 2S) ∪ {x ∉ 2ℕ^p ∪ 𝒪^p : 2x ≻ f, f − x ∈ 𝒞}`.
pub fn symmetric_double(s: &CSemigroup, f: &LatticePoint) -> Result<CSemigroup> {
    check_double_bound(s, f)?;
    let pf = s.pseudo_frobenius();
    let order = s.order();
    let in_double = |x: &LatticePoint| x.div_exact(2).is_some_and(|h| s.contains(&h));
    let member = |x: &LatticePoint| {
        if in_double(x) {
            return true;
        }
        let shifted = pf.iter().any(|fi| {
            // x − (f − 2f_i) ∈ 2S
            x.checked_add(&fi.scale(2).expect("overflow"))
                .ok()
                .and_then(|y| y.checked_sub(f))
                .is_some_and(|y| in_double(&y))
        });
        let mixed = !x.divisible_by(2) && !x.all_odd();
        shifted || (mixed && order.lt(f, &x.scale(2).expect("overflow")))
    };
    // every gap has f − x ∈ 𝒞
    let gaps: Vec<LatticePoint> = box_points(f)
        .into_iter()
        .filter(|x| s.cone().contains(x) && f.checked_sub(x).is_some_and(|r| s.cone().contains(&r)))
        .filter(|x| !member(x))
        .collect();
    let t = s.with_gaps(gaps)?;
    if t.frobenius() != Some(f) {
        return Err(Error::Postcondition(format!("Fb(T) differs from {f}")));
    }
    if classify(&t)? != Classification::Symmetric {
        return Err(Error::Postcondition("T is not symmetric".into()));
    }
    if quotient_gaps(&t, 2)? != *s {
        return Err(Error::Postcondition("T/2 differs from S".into()));
    }
    Ok(t)
}

/// Every `f ⪯ bound` accepted by [`symmetric_double`], ascending.
pub fn admissible_f_stream(s: &CSemigroup, bound: &LatticePoint) -> Result<Vec<LatticePoint>> {
    Ok(cone_down_set(s.cone(), s.order(), bound, true)?
        .into_iter()
        .filter(|f| check_double_bound(s, f).is_ok())
        .collect())
}

/// For irreducible `S` with `F = Fb(S)`, the pseudo-symmetric
/// `T = 2S ∪ {x ∉ 2ℕ^p : F ≺ x ≺ 2F} ∪ {x ≻ 2F} ∪ {x ∉ 2ℕ^p : 2F − x ∉ 𝒞}`,
/// with `Fb(T) = 2F` and `T/2 = S`.
///
/// The last part is forced by the pseudo-symmetric characterization and is
/// empty when `p = 1`. Without it `ℕ² ∖ {(0,1)}` would give a `T` missing
/// `(1,0)`, with three pseudo-Frobenius elements.
pub fn pseudo_symmetric_cover(s: &CSemigroup) -> Result<CSemigroup> {
    if !classify(s)?.is_irreducible() {
        return Err(Error::Precondition("S is not irreducible".into()));
    }
    let fb = frobenius(s)?.clone();
    let top = fb.scale(2)?;
    let order = s.order();
    let gaps: Vec<LatticePoint> = cone_down_set(s.cone(), order, &top, true)?
        .into_iter()
        .filter(|x| {
            let doubled = x.div_exact(2).is_some_and(|h| s.contains(&h));
            let mirror: Vec<i64> = top.coords().iter().zip(x.coords()).map(|(t, c)| t - c).collect();
            let odd_member = !x.divisible_by(2) && (order.lt(&fb, x) || !s.cone().contains_signed(&mirror));
            !x.is_zero() && !doubled && !odd_member
        })
        .collect();
    let t = s.with_gaps(gaps)?;
    if t.frobenius() != Some(&top) {
        return Err(Error::Postcondition(format!("Fb(T) differs from {top}")));
    }
    if classify(&t)? != Classification::PseudoSymmetric {
        return Err(Error::Postcondition("T is not pseudo-symmetric".into()));
    }
    if quotient_gaps(&t, 2)? != *s {
        return Err(Error::Postcondition("T/2 differs from S".into()));
    }
    Ok(t)
}

/// A pseudo-symmetric `T′` with `T′/4 = S`: the pseudo-symmetric cover of
/// the symmetric double of `S` at `f`.
pub fn fourth_pseudo_symmetric(s: &CSemigroup, f: &LatticePoint) -> Result<CSemigroup> {
    let t = pseudo_symmetric_cover(&symmetric_double(s, f)?)?;
    if quotient_gaps(&t, 4)? != *s {
        return Err(Error::Postcondition("T′/4 differs from S".into()));
    }
    Ok(t)
}

/// For irreducible `S` a pseudo-symmetric `T` with `T/2 = S`; `None` when
/// `S` is not irreducible, in which case no such `T` exists.
pub fn irreducible_iff_half_witness(s: &CSemigroup) -> Result<Option<CSemigroup>> {
    if classify(s)?.is_irreducible() {
        pseudo_symmetric_cover(s).map(Some)
    } else {
        Ok(None)
    }
}

/// What [`half_dichotomy`] observes for one pseudo-symmetric `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfReport {
    pub classification: Classification,
    pub frobenius_half: LatticePoint,
    /// `Fb(T/2)` reduced mod 4 coordinatewise.
    pub frobenius_half_mod4: Vec<i64>,
    /// Whether `Fb(T/2) = Fb(T)/2`.
    pub frobenius_halves: bool,
}

/// Classifies `T/2` for a pseudo-symmetric `T` and reports the residues of
/// its Frobenius element mod 4.
pub fn half_dichotomy(t: &CSemigroup) -> Result<HalfReport> {
    if classify(t)? != Classification::PseudoSymmetric {
        return Err(Error::Precondition("T is not pseudo-symmetric".into()));
    }
    let half = quotient_gaps(t, 2)?;
    let fb_half = frobenius(&half)?.clone();
    let fb = frobenius(t)?;
    Ok(HalfReport {
        classification: classify(&half)?,
        frobenius_half_mod4: fb_half.rem(4).into_coords(),
        frobenius_halves: fb.div_exact(2).as_ref() == Some(&fb_half),
        frobenius_half: fb_half,
    })
}

/// Counts of `(classification of T/2, Fb(T/2) ≡ 0 mod 4)` over a sample.
pub fn dichotomy_table<'a, I>(reports: I) -> BTreeMap<(Classification, bool), usize>
where
    I: IntoIterator<Item = &'a HalfReport>,
{
    let mut table = BTreeMap::new();
    for r in reports {
        let zero_mod4 = r.frobenius_half_mod4.iter().all(|&c| c == 0);
        *table.entry((r.classification, zero_mod4)).or_insert(0) += 1;
    }
    table
}

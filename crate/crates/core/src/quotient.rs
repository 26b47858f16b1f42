//! The quotient `S/d = {x ∈ ℕ^p : d·x ∈ S}`, computed from gaps and from
//! generators, and the transfer of fundamental gaps and Apéry sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hilbert::{reduce_generating_set, DiophantineSystem};
use crate::lattice::LatticePoint;
use crate::semigroup::{CSemigroup, GeneratedSemigroup};

fn check_divisor(d: i64) -> Result<()> {
    if d <= 0 {
        Err(Error::ZeroDivisor)
    } else {
        Ok(())
    }
}

/// `S/d` over the same cone: its gaps are the points `h/d` for the gaps
/// `h` of `S` divisible by `d`.
pub fn quotient_gaps(s: &CSemigroup, d: i64) -> Result<CSemigroup> {
    check_divisor(d)?;
    let gaps = s.gaps().iter().filter_map(|h| h.div_exact(d)).collect();
    Ok(s.with_gaps_unchecked(gaps))
}

/// The system `Σ λ_j a_j − d·x = 0` in the unknowns `(λ, x)`.
pub fn quotient_system(g: &GeneratedSemigroup, d: i64) -> Result<DiophantineSystem> {
    check_divisor(d)?;
    let gens = g.generators();
    let p = gens[0].dim();
    let rows: Vec<Vec<i64>> = (0..p)
        .map(|i| {
            let mut row: Vec<i64> = gens.iter().map(|a| a.coords()[i]).collect();
            row.extend((0..p).map(|j| if i == j { -d } else { 0 }));
            row
        })
        .collect();
    DiophantineSystem::new(rows)
}

/// Residues mod `d` as single indices into `(ℤ/d)^p`.
struct Residues {
    d: i64,
    p: usize,
}

impl Residues {
    fn encode(&self, v: impl Iterator<Item = i64>) -> usize {
        v.fold((0usize, 1usize), |(acc, w), c| (acc + c.rem_euclid(self.d) as usize * w, w * self.d as usize)).0
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let d = self.d as usize;
        let (mut a, mut b, mut out, mut w) = (a, b, 0, 1);
        for _ in 0..self.p {
            out += (a % d + b % d) % d * w;
            a /= d;
            b /= d;
            w *= d;
        }
        out
    }

    fn neg(&self, a: usize) -> usize {
        let d = self.d as usize;
        let (mut a, mut out, mut w) = (a, 0, 1);
        for _ in 0..self.p {
            out += (d - a % d) % d * w;
            a /= d;
            w *= d;
        }
        out
    }
}

/// Depth-first search over multisets of residues that have no nonempty
/// zero-sum submultiset; `sums` holds the subset sums of `counts`.
struct ZeroSums<'a> {
    group: Residues,
    residues: &'a [usize],
    counts: Vec<i64>,
    found: BTreeSet<Vec<i64>>,
}

impl ZeroSums<'_> {
    fn visit(&mut self, start: usize, sums: &[bool], total: usize) {
        // counts + e_j is zero-sum with all proper submultisets nonzero
        let wanted = self.group.neg(total);
        for j in 0..self.residues.len() {
            if self.residues[j] == wanted {
                self.counts[j] += 1;
                self.found.insert(self.counts.clone());
                self.counts[j] -= 1;
            }
        }
        for j in start..self.residues.len() {
            let r = self.residues[j];
            if r == 0 {
                continue;
            }
            let mut next = sums.to_vec();
            next[r] = true;
            for (g, &present) in sums.iter().enumerate() {
                if present {
                    next[self.group.add(g, r)] = true;
                }
            }
            if next[0] {
                continue;
            }
            self.counts[j] += 1;
            self.visit(j, &next, self.group.add(total, r));
            self.counts[j] -= 1;
        }
    }
}

/// The Hilbert basis of [`quotient_system`], as vectors `(λ, x)`.
///
/// `x` is determined by `λ`, so the solutions are the congruence monoid
/// `{λ : Σ λ_j a_j ≡ 0 mod d}` and its Hilbert basis consists of the
/// minimal zero-sum multisets of the residues `a_j mod d`. These are
/// enumerated over `(ℤ/d)^p` instead of by the general completion.
pub fn quotient_hilbert_basis(g: &GeneratedSemigroup, d: i64) -> Result<Vec<LatticePoint>> {
    check_divisor(d)?;
    let gens = g.generators();
    let p = gens[0].dim();
    let size = (d as u128).checked_pow(p as u32).filter(|&n| n <= 1 << 24);
    let Some(size) = size else {
        return Err(Error::Ceiling(format!("residue group of order {d}^{p} is too large")));
    };
    let group = Residues { d, p };
    let residues: Vec<usize> = gens.iter().map(|a| group.encode(a.coords().iter().copied())).collect();
    let mut search = ZeroSums {
        group,
        residues: &residues,
        counts: vec![0; gens.len()],
        found: BTreeSet::new(),
    };
    search.visit(0, &vec![false; size as usize], 0);
    search
        .found
        .into_iter()
        .map(|lambda| {
            let mut v = lambda.clone();
            for i in 0..p {
                let sum = lambda.iter().zip(gens).try_fold(0i64, |acc, (&l, a)| {
                    l.checked_mul(a.coords()[i]).and_then(|t| acc.checked_add(t))
                });
                v.push(sum.ok_or(Error::Overflow)? / d);
            }
            LatticePoint::new(v)
        })
        .collect()
}

/// Minimal generators of `⟨g⟩/d`: the projection of the Hilbert basis of
/// [`quotient_system`] onto `x`, reduced.
pub fn quotient_generated(g: &GeneratedSemigroup, d: i64) -> Result<Vec<LatticePoint>> {
    let q = g.generators().len();
    let projected: Vec<LatticePoint> = quotient_hilbert_basis(g, d)?
        .iter()
        .map(|sol| LatticePoint::new(sol.coords()[q..].to_vec()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    let mut out = reduce_generating_set(&projected)?;
    g.order().sort(&mut out);
    Ok(out)
}

/// `{h/d : h ∈ FG(S), d | h}`; equals `FG(S/d)`.
pub fn fg_transfer(fg: &[LatticePoint], d: i64) -> Result<Vec<LatticePoint>> {
    check_divisor(d)?;
    Ok(fg.iter().filter_map(|h| h.div_exact(d)).collect())
}

/// `{w/d : w ∈ Ap(S,m), d | w}`; equals `Ap(S/d, m/d)` when `d | m`.
pub fn apery_transfer(ap: &[LatticePoint], m: &LatticePoint, d: i64) -> Result<Vec<LatticePoint>> {
    check_divisor(d)?;
    if !m.divisible_by(d) {
        return Err(Error::Precondition(format!("{d} does not divide every coordinate of {m}")));
    }
    Ok(ap.iter().filter_map(|w| w.div_exact(d)).collect())
}

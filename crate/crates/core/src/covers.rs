//! The covers of a 𝒞-semigroup: all `T` with `T/d = S`, and the tree they
//! form over an arithmetic variety.
//!
//! For a bound `f` the candidates are the semigroups
//! `T(f, Λ) = {x ∈ 𝒞 : x ≻ f} ∪ (dS + E(Λ))`, where `Λ ⊆ M_f` and `E(Λ)`
//! holds the combinations `Σ a_i λ_i` with `0 ≤ a_i < d`. Every cover `T`
//! equals `T(Fb(T), M_Fb(T) ∩ T)`, so the covers with `Fb(T) ⪯ f` are the
//! union of these families over all bounds `f′` with `d·Fb(S) ⪯ f′ ⪯ f`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Cone, LatticePoint, TotalOrder};
use crate::quotient::quotient_gaps;
use crate::semigroup::{cone_down_set, validate, CSemigroup, Membership};

fn check_divisor(d: i64) -> Result<()> {
    if d <= 0 {
        Err(Error::ZeroDivisor)
    } else {
        Ok(())
    }
}

fn check_bound(s: &CSemigroup, f: &LatticePoint) -> Result<()> {
    if f.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: f.dim(),
        });
    }
    if !s.cone().contains(f) {
        return Err(Error::Precondition(format!("bound {f} lies outside the cone")));
    }
    s.order().require_finite_segments(s.dim())
}

fn check_lower_bound(s: &CSemigroup, d: i64, f: &LatticePoint) -> Result<()> {
    if let Some(fb) = s.frobenius() {
        let low = fb.scale(d)?;
        if s.order().lt(f, &low) {
            return Err(Error::Precondition(format!("bound {f} lies below d·Fb(S) = {low}")));
        }
    }
    Ok(())
}

/// `M_f`: the elements `m ≺ f` of `S` outside `dℕ^p`, ascending.
pub fn compute_mf(s: &CSemigroup, d: i64, f: &LatticePoint) -> Result<Vec<LatticePoint>> {
    check_divisor(d)?;
    check_bound(s, f)?;
    Ok(cone_down_set(s.cone(), s.order(), f, false)?
        .into_iter()
        .filter(|m| s.contains(m) && !m.divisible_by(d))
        .collect())
}

/// Whether `e/d ∈ S` for every combination `e` divisible by `d`.
fn combination_ok(s: &CSemigroup, d: i64, e: &LatticePoint) -> bool {
    match e.div_exact(d) {
        None => true,
        Some(q) => match s.frobenius() {
            // beyond the Frobenius element every cone point lies in S
            Some(fb) if s.order().lt(fb, &q) => true,
            _ => s.contains(&q),
        },
    }
}

/// Extends `E(Λ)` to `E(Λ ∪ {λ})`; `None` if a new combination breaks
/// admissibility.
fn extend_combinations(
    s: &CSemigroup,
    d: i64,
    combos: &HashSet<LatticePoint>,
    lambda: &LatticePoint,
) -> Result<Option<HashSet<LatticePoint>>> {
    let mut out = combos.clone();
    for e in combos {
        let mut cur = e.clone();
        for _ in 1..d {
            cur = cur.checked_add(lambda)?;
            if !combination_ok(s, d, &cur) {
                return Ok(None);
            }
            out.insert(cur.clone());
        }
    }
    Ok(Some(out))
}

fn zero_combinations(dim: usize) -> HashSet<LatticePoint> {
    HashSet::from([LatticePoint::zero(dim)])
}

/// Whether every combination `Σ a_i λ_i`, `0 ≤ a_i < d`, is either outside
/// `dℕ^p` or in `dS`.
pub fn is_admissible(s: &CSemigroup, d: i64, lambda: &[LatticePoint]) -> Result<bool> {
    check_divisor(d)?;
    let mut combos = zero_combinations(s.dim());
    for l in lambda {
        match extend_combinations(s, d, &combos, l)? {
            Some(next) => combos = next,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Gaps of `T(f, Λ)` given `E(Λ)`: points `x ⪯ f` of the cone not of the
/// form `d·s + e`.
fn cover_gaps(s: &CSemigroup, d: i64, window: &[LatticePoint], combos: &HashSet<LatticePoint>) -> Vec<LatticePoint> {
    window
        .iter()
        .filter(|x| {
            !combos.iter().any(|e| {
                x.checked_sub(e)
                    .and_then(|rest| rest.div_exact(d))
                    .is_some_and(|q| s.contains(&q))
            })
        })
        .cloned()
        .collect()
}

/// `T(f, Λ)`. Fails unless `Λ ⊆ M_f` is admissible and `f ⪰ d·Fb(S)`.
pub fn build_t(s: &CSemigroup, d: i64, f: &LatticePoint, lambda: &[LatticePoint]) -> Result<CSemigroup> {
    let mf = compute_mf(s, d, f)?;
    check_lower_bound(s, d, f)?;
    if let Some(bad) = lambda.iter().find(|l| !mf.contains(l)) {
        return Err(Error::Precondition(format!("{bad} is not in M_f")));
    }
    let mut combos = zero_combinations(s.dim());
    for l in lambda {
        combos = extend_combinations(s, d, &combos, l)?
            .ok_or_else(|| Error::Precondition(format!("Λ is not admissible: adding {l} breaks it")))?;
    }
    let window = cone_down_set(s.cone(), s.order(), f, true)?;
    let t = s.with_gaps(cover_gaps(s, d, &window, &combos))?;
    if quotient_gaps(&t, d)?.gaps() != s.gaps() {
        return Err(Error::Postcondition(format!("T(f, Λ)/{d} differs from S")));
    }
    Ok(t)
}

/// Counters collected by [`enumerate_dd_with_stats`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DdStats {
    /// Bounds `f′` with `d·Fb(S) ⪯ f′ ⪯ f` that were searched.
    pub bounds: usize,
    /// `|M_f|` for the requested `f`.
    pub mf_size: usize,
    /// `2^|M_f|`, the unpruned subset space at the requested `f`.
    pub raw_subset_space: u128,
    /// Admissible subsets `Λ ⊆ M_f` at the requested `f`, `∅` included.
    pub admissible_at_f: usize,
    /// Admissible subsets over all searched bounds.
    pub admissible_total: usize,
    /// Candidates discarded because a postcondition failed.
    pub rejected: usize,
    /// Distinct covers returned.
    pub distinct: usize,
}

struct Search<'a> {
    s: &'a CSemigroup,
    d: i64,
    window: Vec<LatticePoint>,
    mf: Vec<LatticePoint>,
    seen: HashSet<Vec<LatticePoint>>,
    out: Vec<CSemigroup>,
    admissible: usize,
    rejected: usize,
    bound: LatticePoint,
}

impl Search<'_> {
    fn visit(&mut self, start: usize, combos: &HashSet<LatticePoint>) -> Result<()> {
        self.admissible += 1;
        let gaps = cover_gaps(self.s, self.d, &self.window, combos);
        if !self.seen.contains(&gaps) {
            let ok = validate(self.s.cone(), &gaps).is_ok() && {
                let t = self.s.with_gaps_unchecked(gaps.clone());
                let fb_ok = t.frobenius().is_none_or(|fb| self.s.order().le(fb, &self.bound));
                fb_ok && quotient_gaps(&t, self.d)?.gaps() == self.s.gaps()
            };
            if ok {
                self.out.push(self.s.with_gaps_unchecked(gaps.clone()));
                self.seen.insert(gaps);
            } else {
                self.rejected += 1;
            }
        }
        for j in start..self.mf.len() {
            let lambda = self.mf[j].clone();
            if let Some(next) = extend_combinations(self.s, self.d, combos, &lambda)? {
                self.visit(j + 1, &next)?;
            }
        }
        Ok(())
    }
}

/// `D_d(S, f)`: every 𝒞-semigroup `T` with `T/d = S` and `Fb(T) ⪯ f`,
/// including `𝒞` itself when `S = 𝒞`.
pub fn enumerate_dd(s: &CSemigroup, d: i64, f: &LatticePoint) -> Result<Vec<CSemigroup>> {
    Ok(enumerate_dd_with_stats(s, d, f)?.0)
}

/// [`enumerate_dd`] together with search counters. Results are sorted by
/// genus, then by gap list under the active order.
pub fn enumerate_dd_with_stats(s: &CSemigroup, d: i64, f: &LatticePoint) -> Result<(Vec<CSemigroup>, DdStats)> {
    check_divisor(d)?;
    check_bound(s, f)?;
    check_lower_bound(s, d, f)?;
    let order = s.order();
    let low = s.frobenius().map(|fb| fb.scale(d)).transpose()?;
    let bounds: Vec<LatticePoint> = cone_down_set(s.cone(), order, f, true)?
        .into_iter()
        .filter(|b| low.as_ref().is_none_or(|l| order.le(l, b)))
        .collect();
    let mut stats = DdStats {
        bounds: bounds.len(),
        ..DdStats::default()
    };
    let mut search = Search {
        s,
        d,
        window: Vec::new(),
        mf: Vec::new(),
        seen: HashSet::new(),
        out: Vec::new(),
        admissible: 0,
        rejected: 0,
        bound: f.clone(),
    };
    for b in &bounds {
        search.window = cone_down_set(s.cone(), order, b, true)?;
        search.mf = compute_mf(s, d, b)?;
        search.admissible = 0;
        search.visit(0, &zero_combinations(s.dim()))?;
        stats.admissible_total += search.admissible;
        if b == f {
            stats.mf_size = search.mf.len();
            stats.raw_subset_space = 1u128.checked_shl(search.mf.len() as u32).unwrap_or(u128::MAX);
            stats.admissible_at_f = search.admissible;
        }
    }
    let mut out = search.out;
    sort_semigroups(&mut out);
    stats.rejected = search.rejected;
    stats.distinct = out.len();
    Ok((out, stats))
}

fn sort_semigroups(v: &mut [CSemigroup]) {
    v.sort_by(|a, b| {
        a.genus().cmp(&b.genus()).then_with(|| {
            let order = a.order();
            a.gaps()
                .iter()
                .zip(b.gaps())
                .map(|(x, y)| order.cmp(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
}

/// A rooted tree of 𝒞-semigroups; each edge joins `S` to a child `T` with
/// `T/d = S`. Vertex 0 is listed first in breadth-first order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTree {
    pub d: i64,
    pub vertices: Vec<CSemigroup>,
    pub root: usize,
    /// `(parent, child)` index pairs.
    pub edges: Vec<(usize, usize)>,
}

impl CoverTree {
    pub fn children(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|(p, _)| *p == v).map(|(_, c)| *c).collect()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.edges.iter().find(|(_, c)| *c == v).map(|(p, _)| *p)
    }

    /// Checks the tree shape and the quotient relation on every edge.
    pub fn check(&self) -> Result<()> {
        let n = self.vertices.len();
        if self.root >= n || self.edges.len() + 1 != n {
            return Err(Error::Postcondition("edge count must be one less than vertex count".into()));
        }
        let distinct: HashSet<&CSemigroup> = self.vertices.iter().collect();
        if distinct.len() != n {
            return Err(Error::Postcondition("a vertex repeats".into()));
        }
        let mut parents = vec![None; n];
        for &(p, c) in &self.edges {
            if p >= n || c >= n || c == self.root || parents[c].replace(p).is_some() {
                return Err(Error::Postcondition(format!("bad edge ({p}, {c})")));
            }
            if quotient_gaps(&self.vertices[c], self.d)? != self.vertices[p] {
                return Err(Error::Postcondition(format!("edge ({p}, {c}) is not a quotient")));
            }
        }
        for start in 0..n {
            let mut v = start;
            for _ in 0..n {
                match parents[v] {
                    Some(p) => v = p,
                    None => break,
                }
            }
            if v != self.root {
                return Err(Error::Postcondition(format!("vertex {start} does not reach the root")));
            }
        }
        Ok(())
    }
}

/// The tree `G_{𝒜_f, d}`: rooted at `𝒞`, children of `S` are the covers in
/// `D_d(S, f)` accepted by `variety`.
pub fn build_tree<V>(cone: &Cone, order: &TotalOrder, d: i64, f: &LatticePoint, variety: V) -> Result<CoverTree>
where
    V: Fn(&CSemigroup) -> bool,
{
    let root = CSemigroup::full(cone.clone(), order.clone())?;
    let mut vertices = vec![root];
    let mut index: HashMap<CSemigroup, usize> = HashMap::from([(vertices[0].clone(), 0)]);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let s = vertices[v].clone();
        // a cover has d·Fb(S) as a gap, so none fits below f
        if check_lower_bound(&s, d, f).is_err() {
            continue;
        }
        for t in enumerate_dd(&s, d, f)? {
            if t == s || !variety(&t) || index.contains_key(&t) {
                continue;
            }
            let id = vertices.len();
            index.insert(t.clone(), id);
            vertices.push(t);
            edges.push((v, id));
            queue.push_back(id);
        }
    }
    Ok(CoverTree {
        d,
        vertices,
        root: 0,
        edges,
    })
}

/// Output formats for [`export_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

fn gap_label(s: &CSemigroup) -> String {
    let inner: Vec<String> = s.gaps().iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Deterministic serialization; DOT nodes are labeled by their gap sets.
pub fn export_graph(t: &CoverTree, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => serde_json::to_string(t).expect("serialization cannot fail"),
        GraphFormat::Dot => {
            let mut out = String::from("digraph covers {\n");
            for (i, v) in t.vertices.iter().enumerate() {
                out.push_str(&format!("  n{i} [label=\"{}\"];\n", gap_label(v)));
            }
            for (p, c) in &t.edges {
                out.push_str(&format!("  n{p} -> n{c};\n"));
            }
            out.push_str("}\n");
            out
        }
    }
}

/// Re-imports the JSON form of [`export_graph`].
pub fn import_graph(json: &str) -> Result<CoverTree> {
    let t: CoverTree = serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
    t.check()?;
    Ok(t)
}

//! Seeded instance generators shared by the integration and acceptance
//! tests.

#![allow(dead_code)]

use csemigroup::hilbert::DiophantineSystem;
use csemigroup::lattice::{pt, Cone, LatticePoint, TotalOrder};
use csemigroup::varieties::{ModularSystem, RationalPolytope};
use csemigroup::linalg::Q;
use csemigroup::CSemigroup;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The cone of the worked example, spanned by (4,1) and (9,5).
pub fn example_cone() -> Cone {
    Cone::new(vec![pt(&[4, 1]), pt(&[9, 5])]).unwrap()
}

/// ⟨(4,1),(9,5)⟩-cone semigroup with gaps (2,1), (3,1).
pub fn s_star() -> CSemigroup {
    CSemigroup::new(example_cone(), vec![pt(&[2, 1]), pt(&[3, 1])], TotalOrder::default()).unwrap()
}

pub fn corpus_cones() -> Vec<Cone> {
    vec![
        Cone::orthant(2),
        example_cone(),
        Cone::new(vec![pt(&[1, 0]), pt(&[1, 2])]).unwrap(),
        Cone::new(vec![pt(&[2, 1]), pt(&[1, 3])]).unwrap(),
    ]
}

/// Removes up to `max_gaps` minimal generators one at a time, each drawn
/// from the four smallest of the current semigroup.
pub fn random_semigroup(rng: &mut impl Rng, cone: &Cone, max_gaps: usize) -> CSemigroup {
    let mut s = CSemigroup::full(cone.clone(), TotalOrder::default()).unwrap();
    let target = rng.gen_range(1..=max_gaps);
    while s.genus() < target {
        let gens = s.minimal_generators();
        let g = gens[..gens.len().min(4)].choose(rng).unwrap().clone();
        let mut gaps = s.gaps().to_vec();
        gaps.push(g);
        s = s.with_gaps(gaps).unwrap();
    }
    s
}

/// `n` semigroups cycling through [`corpus_cones`].
pub fn corpus(seed: u64, n: usize, max_gaps: usize) -> Vec<CSemigroup> {
    let mut r = rng(seed);
    let cones = corpus_cones();
    (0..n).map(|i| random_semigroup(&mut r, &cones[i % cones.len()], max_gaps)).collect()
}

pub fn random_system(rng: &mut impl Rng, max_rows: usize, max_cols: usize, bound: i64) -> DiophantineSystem {
    loop {
        let k = rng.gen_range(1..=max_rows);
        let n = rng.gen_range(2..=max_cols);
        let rows = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
        if let Ok(sys) = DiophantineSystem::new(rows) {
            return sys;
        }
    }
}

pub fn random_modular(rng: &mut impl Rng, dim: usize) -> ModularSystem {
    let k = rng.gen_range(1..=2);
    let b: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=12)).collect();
    let a = b.iter().map(|&bi| (0..dim).map(|_| rng.gen_range(0..bi)).collect()).collect();
    let g = (0..k).map(|_| (0..dim).map(|_| rng.gen_range(0..=4)).collect()).collect();
    ModularSystem::new(a, g, b).unwrap()
}

/// A full-dimensional polygon with 3 or 4 vertices in `[0,4]²`, each
/// coordinate with denominator at most 3.
pub fn random_polygon(rng: &mut impl Rng) -> RationalPolytope {
    loop {
        let n = rng.gen_range(3..=4);
        let vertices = (0..n)
            .map(|_| (0..2).map(|_| Q::new(rng.gen_range(0..=12), rng.gen_range(1..=3))).collect())
            .collect();
        let poly = RationalPolytope::new(vertices).unwrap();
        if poly.is_full_dimensional() {
            return poly;
        }
    }
}

/// All numerical semigroups with Frobenius number at most `max_fb`,
/// including ℕ.
pub fn numerical_semigroups(max_fb: i64) -> Vec<CSemigroup> {
    let cone = Cone::orthant(1);
    let order = TotalOrder::default();
    let mut out = Vec::new();
    for mask in 0u32..(1 << max_fb) {
        let gaps: Vec<LatticePoint> = (1..=max_fb).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| pt(&[i])).collect();
        if let Ok(s) = CSemigroup::new(cone.clone(), gaps, order.clone()) {
            out.push(s);
        }
    }
    out
}

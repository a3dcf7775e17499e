//! Test-side reference computations, kept independent of the library code
//! they check.

#![allow(dead_code)]

use fractal_tutte_core::{BiPoly, BigIntVal, ExactRational, Multigraph};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(v.into())
}

pub fn big_pow(base: u64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn four_pow(n: u32) -> u64 {
    1u64 << (2 * n)
}

/// Vertex and edge counts as the number of copies glued at each level.
pub fn expected_counts(family: fractal_tutte_core::LatticeFamily, n: u32) -> (u64, u64) {
    use fractal_tutte_core::LatticeFamily::*;
    // Each generation takes four copies, merges four pairs of hubs and
    // (for the fractal) adds one edge.
    let (mut v, mut e) = (2u64, 1u64);
    for _ in 0..n {
        v = 4 * v - 4;
        e = 4 * e + u64::from(family == Fractal);
    }
    (v, e)
}

/// Random polynomial with up to `max_terms` terms, exponents below 5 and
/// coefficients that occasionally exceed 64 bits.
pub fn random_poly(rng: &mut impl Rng, max_terms: usize) -> BiPoly {
    let count = rng.gen_range(0..=max_terms);
    BiPoly::from_terms((0..count).map(|_| {
        let mut c = BigInt::from(rng.gen_range(-20i64..=20));
        if rng.gen_bool(0.2) {
            c *= BigInt::from(u64::MAX) * BigInt::from(rng.gen_range(1u64..1000));
        }
        ((rng.gen_range(0..5), rng.gen_range(0..5)), c)
    }))
}

pub fn random_rational(rng: &mut impl Rng) -> ExactRational {
    let num = rng.gen_range(-40i64..=40);
    let den = rng.gen_range(1i64..=25);
    ExactRational::new(num.into(), den.into())
}

/// Connected multigraph on 2..=max_vertices vertices: a random spanning
/// tree plus extra edges that may be loops or parallels.
pub fn random_connected_multigraph(rng: &mut impl Rng, max_vertices: usize, max_extra: usize) -> Multigraph {
    let v = rng.gen_range(2..=max_vertices);
    let mut edges = Vec::new();
    for i in 1..v {
        edges.push((rng.gen_range(0..i), i));
    }
    for _ in 0..rng.gen_range(0..=max_extra) {
        edges.push((rng.gen_range(0..v), rng.gen_range(0..v)));
    }
    Multigraph::new(v, edges, 0, v - 1).expect("valid random graph")
}

/// Spanning-tree count by the matrix-tree theorem: determinant of the
/// reduced Laplacian, computed with fraction-free Bareiss elimination.
pub fn kirchhoff_trees(g: &Multigraph) -> BigIntVal {
    let n = g.vertex_count();
    if n <= 1 {
        return BigInt::one();
    }
    let mut lap = vec![vec![BigInt::zero(); n]; n];
    for &(a, b) in g.edges() {
        if a == b {
            continue;
        }
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    let mut m: Vec<Vec<BigInt>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    let size = n - 1;
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let val = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = val / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = sign * &m[size - 1][size - 1];
    assert!(!det.is_negative());
    det
}

/// `ln v` for a positive integer of any size, from its leading 64 bits.
pub fn ln_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top: BigInt = v >> shift;
    let top = u64::try_from(top).expect("fits in 64 bits") as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

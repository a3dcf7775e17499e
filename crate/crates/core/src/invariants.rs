//! Closed forms at special evaluation points and the Potts partition function.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bigpoly::{BiPoly, BigIntVal, ExactRational};
use crate::error::{check_cap, Error, Result};
use crate::lattice::{lattice_counts, LatticeFamily, Multigraph};
use crate::recursion::{tutte_eval, DEFAULT_SYMBOLIC_CAP};

/// Largest generation for the big-integer closed forms.
pub const MAX_CLOSED_FORM_GENERATION: u32 = 10;
/// Largest `q^|V|` that [`potts_direct`] will enumerate.
pub const MAX_POTTS_COLORINGS: u64 = 1 << 24;

fn four_pow(n: u32) -> u64 {
    4u64.pow(n)
}

/// `(4^n - 1) / 3`, the diagonal exponent and the bicycle-space dimension.
fn third_of_four_pow_minus_one(n: u32) -> u64 {
    (four_pow(n) - 1) / 3
}

fn big_pow(base: u32, exp: u64) -> BigInt {
    let exp = u32::try_from(exp).expect("closed-form exponent fits in u32");
    BigInt::from(base).pow(exp)
}

/// Exponents `(e3, e4)` with `tau(F_n) = 3^e3 * 4^e4` for the (1,3)-flower.
fn flower13_tree_exponents(n: u32) -> (u64, u64) {
    let f = four_pow(n);
    let m = 3 * n as u64;
    let e3 = f - m - 1;
    let e4 = 2 * f + m - 2;
    debug_assert!(e3.is_multiple_of(9) && e4.is_multiple_of(9));
    (e3 / 9, e4 / 9)
}

/// Number of spanning trees of generation `n`, from its closed form.
pub fn spanning_trees_closed(family: LatticeFamily, n: u32) -> Result<BigIntVal> {
    check_cap("closed-form generation", n as u64, MAX_CLOSED_FORM_GENERATION as u64)?;
    Ok(match family {
        LatticeFamily::Fractal => BigInt::one() << (four_pow(n) - 1),
        LatticeFamily::Flower22 => BigInt::one() << (2 * (four_pow(n) - 1) / 3),
        LatticeFamily::Flower13 => {
            let (e3, e4) = flower13_tree_exponents(n);
            big_pow(3, e3) * (BigInt::one() << (2 * e4))
        }
    })
}

/// Number of acyclic orientations of the fractal lattice with a unique
/// source at a fixed root, `T_n(1, 0) = prod_{i=0..=n} (i+1)^(2 * 4^(n-i))`.
pub fn acyclic_root_connected(n: u32) -> Result<BigIntVal> {
    check_cap("closed-form generation", n as u64, MAX_CLOSED_FORM_GENERATION as u64)?;
    Ok((0..=n).fold(BigInt::one(), |acc, i| {
        acc * big_pow(i + 1, 2 * four_pow(n - i))
    }))
}

/// Number of indegree sequences of strongly connected orientations of the
/// fractal lattice, `T_n(0, 1) = (n / 2) T_n(1, 0)`. Requires `n >= 1`.
pub fn indegree_sequences_strong(n: u32) -> Result<BigIntVal> {
    if n == 0 {
        return Err(Error::Domain(
            "strongly connected indegree count is defined for n >= 1".into(),
        ));
    }
    let product = acyclic_root_connected(n)?;
    let scaled = product * n;
    debug_assert!((&scaled % 2u32).is_zero());
    Ok(scaled / 2u32)
}

/// `x (x^2 + 5x + 2)^((4^n - 1)/3)`, the fractal polynomial on `y = x`.
pub fn diagonal_closed(n: u32) -> Result<BiPoly> {
    diagonal_closed_with_cap(n, DEFAULT_SYMBOLIC_CAP)
}

pub fn diagonal_closed_with_cap(n: u32, cap: u32) -> Result<BiPoly> {
    check_cap("symbolic generation", n as u64, cap as u64)?;
    let exponent = u32::try_from(third_of_four_pow_minus_one(n))
        .map_err(|_| Error::CapExceeded { what: "diagonal exponent", value: n as u64, cap: cap as u64 })?;
    let quadratic: BiPoly = "x^2 + 5x + 2".parse().expect("static polynomial");
    Ok(&BiPoly::x() * &quadratic.pow(exponent))
}

/// Dimension of the bicycle space of the fractal lattice, `(4^n - 1) / 3`.
pub fn bicycle_dimension(n: u32) -> BigIntVal {
    (BigInt::from(4).pow(n) - 1) / 3
}

/// Limit of `ln tau(G_n) / |V(G_n)|` together with the finite-`n` values.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthConstant {
    pub family: LatticeFamily,
    /// The limit as an expression in `ln 2` and `ln 3`.
    pub exact: &'static str,
    pub decimal: f64,
    /// `(n, ln tau / |V|)` for `n = 1..=n_max`.
    pub sequence: Vec<(u32, f64)>,
}

impl GrowthConstant {
    pub fn last(&self) -> f64 {
        self.sequence.last().map(|&(_, v)| v).unwrap_or(f64::NAN)
    }
}

/// `ln tau(n)` from the closed-form exponents, never materializing `tau`.
fn ln_spanning_trees(family: LatticeFamily, n: u32) -> f64 {
    let (ln2, ln3) = (2f64.ln(), 3f64.ln());
    match family {
        LatticeFamily::Fractal => (four_pow(n) - 1) as f64 * ln2,
        LatticeFamily::Flower22 => (2 * (four_pow(n) - 1) / 3) as f64 * ln2,
        LatticeFamily::Flower13 => {
            let (e3, e4) = flower13_tree_exponents(n);
            e3 as f64 * ln3 + (2 * e4) as f64 * ln2
        }
    }
}

pub fn growth_constant(family: LatticeFamily, n_max: u32) -> Result<GrowthConstant> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    check_cap("growth n_max", n_max as u64, MAX_CLOSED_FORM_GENERATION as u64)?;
    let (ln2, ln3) = (2f64.ln(), 3f64.ln());
    let (exact, decimal) = match family {
        LatticeFamily::Fractal => ("(3/2) ln 2", 1.5 * ln2),
        LatticeFamily::Flower22 => ("ln 2", ln2),
        LatticeFamily::Flower13 => ("(4 ln 2 + ln 3)/6", (4.0 * ln2 + ln3) / 6.0),
    };
    let sequence = (1..=n_max)
        .map(|n| {
            let vertices = lattice_counts(family, n).0.to_f64().expect("finite vertex count");
            (n, ln_spanning_trees(family, n) / vertices)
        })
        .collect();
    Ok(GrowthConstant {
        family,
        exact,
        decimal,
        sequence,
    })
}

/// Potts model parameters: `q` states and coupling `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PottsParams {
    pub q: ExactRational,
    pub v: ExactRational,
}

impl PottsParams {
    pub fn new(q: ExactRational, v: ExactRational) -> Self {
        Self { q, v }
    }

    /// The Tutte evaluation point `((q + v) / v, v + 1)`.
    pub fn tutte_point(&self) -> Result<(ExactRational, ExactRational)> {
        if self.v.is_zero() {
            return Err(Error::Domain("v = 0 has no Tutte-polynomial mapping".into()));
        }
        let x = (&self.q + &self.v) / &self.v;
        let y = &self.v + ExactRational::one();
        Ok((x, y))
    }
}

fn rational_pow(base: &ExactRational, exp: usize) -> ExactRational {
    let exp = i32::try_from(exp).expect("exponent fits in i32");
    num_traits::Pow::pow(base, exp)
}

/// `q^k v^(|V| - k) T((q + v)/v, v + 1)` from an already evaluated `T`.
pub fn potts_partition(
    vertex_count: usize,
    component_count: usize,
    t_value: &ExactRational,
    params: &PottsParams,
) -> Result<ExactRational> {
    if params.v.is_zero() {
        return Err(Error::Domain("v = 0 has no Tutte-polynomial mapping".into()));
    }
    if component_count > vertex_count {
        return Err(Error::Domain(format!(
            "{component_count} components exceed {vertex_count} vertices"
        )));
    }
    Ok(rational_pow(&params.q, component_count)
        * rational_pow(&params.v, vertex_count - component_count)
        * t_value)
}

/// Partition function of a lattice generation via [`tutte_eval`].
pub fn potts_lattice(family: LatticeFamily, n: u32, params: &PottsParams) -> Result<ExactRational> {
    let (x, y) = params.tutte_point()?;
    let t = tutte_eval(family, n, &x, &y)?;
    let vertices = lattice_counts(family, n)
        .0
        .to_usize()
        .ok_or(Error::CapExceeded { what: "Potts generation", value: n as u64, cap: 30 })?;
    potts_partition(vertices, 1, &t, params)
}

/// Sums `prod_edges (1 + v [same color])` over all `q^|V|` colorings.
pub fn potts_direct(g: &Multigraph, params: &PottsParams) -> Result<ExactRational> {
    if !params.q.is_integer() || !params.q.is_positive() {
        return Err(Error::Domain(format!(
            "direct summation needs a positive integer q, got {}",
            params.q
        )));
    }
    let q = params
        .q
        .to_integer()
        .to_u64()
        .filter(|&q| q <= MAX_POTTS_COLORINGS)
        .ok_or(Error::CapExceeded { what: "q", value: u64::MAX, cap: MAX_POTTS_COLORINGS })?;
    let n = g.vertex_count();
    let colorings = (0..n).try_fold(1u64, |acc, _| {
        acc.checked_mul(q).filter(|&c| c <= MAX_POTTS_COLORINGS)
    });
    let colorings = colorings.ok_or(Error::CapExceeded {
        what: "q^|V| colorings",
        value: u64::MAX,
        cap: MAX_POTTS_COLORINGS,
    })?;

    // Histogram of monochromatic edge counts.
    let edges = g.edges();
    let hist = (0..colorings)
        .into_par_iter()
        .fold(
            || vec![0u64; edges.len() + 1],
            |mut hist, index| {
                let mut color = vec![0u64; n];
                let mut rest = index;
                for c in color.iter_mut() {
                    *c = rest % q;
                    rest /= q;
                }
                let mono = edges.iter().filter(|&&(a, b)| color[a] == color[b]).count();
                hist[mono] += 1;
                hist
            },
        )
        .reduce(
            || vec![0u64; edges.len() + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let weight = &params.v + ExactRational::one();
    let mut total = ExactRational::zero();
    let mut power = ExactRational::one();
    for count in hist {
        total += &power * ExactRational::from_integer(count.into());
        power *= &weight;
    }
    Ok(total)
}

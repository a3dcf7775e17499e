//! Generation-to-generation Tutte recursions for the three lattice families.
//!
//! Each family carries a pair `(T1, N)`: `T1` sums the spanning subgraphs in
//! which the two special vertices are joined, and `N` is the cofactor of the
//! separated part, `T2 = (x - 1) N`. Both start at `(1, 1)` and the full
//! polynomial is `T = T1 + (x - 1) N`.
//!
//! Every step is a homogeneous quartic form in `(T1, N)`:
//!
//! ```text
//! T1' = sum_k a_k T1^(4-k) N^k        N' = sum_k b_k T1^(4-k) N^k
//! ```
//!
//! with small coefficient polynomials `a_k`, `b_k` stored in a
//! [`Recurrence`]. The step is generic over [`Ring`], so the same code drives
//! the symbolic computation over [`BiPoly`] and the pointwise evaluation over
//! [`ExactRational`].

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bigpoly::{BiPoly, ExactRational};
use crate::error::{check_cap, Result};
use crate::lattice::LatticeFamily;

/// Default largest generation for symbolic computation.
pub const DEFAULT_SYMBOLIC_CAP: u32 = 4;
/// Largest generation accepted by [`tutte_eval`].
pub const MAX_EVAL_GENERATION: u32 = 10;

/// The commutative-ring operations the recursion needs.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// `(T1, N)` for one generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair<R> {
    pub t1: R,
    pub n_part: R,
}

/// Symbolic state of the recursion.
pub type TuttePair = Pair<BiPoly>;
/// Pointwise state of the recursion at a fixed `(x, y)`.
pub type EvalPair = Pair<ExactRational>;

impl<R: Ring> Pair<R> {
    /// `(1, 1)`, the generation-0 state of every family.
    pub fn initial() -> Self {
        Self {
            t1: R::one(),
            n_part: R::one(),
        }
    }

    /// `T1 + (x - 1) N`, given the ring's value of `x - 1`.
    pub fn assemble(&self, x_minus_1: &R) -> R {
        self.t1.ring_add(&x_minus_1.ring_mul(&self.n_part))
    }
}

impl TuttePair {
    /// `T1 + (x - 1) N` as a polynomial.
    pub fn tutte(&self) -> BiPoly {
        self.assemble(&x_minus_one())
    }

    /// The separated part `T2 = (x - 1) N`.
    pub fn t2(&self) -> BiPoly {
        &x_minus_one() * &self.n_part
    }
}

fn x_minus_one() -> BiPoly {
    &BiPoly::x() - &BiPoly::one()
}

/// Coefficients of `T1^(4-k) N^k`, `k = 0..=4`, in both outputs of a step.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence<R> {
    pub t1: [R; 5],
    pub n_part: [R; 5],
}

impl Recurrence<BiPoly> {
    pub fn for_family(family: LatticeFamily) -> Self {
        let p = |s: &str| -> BiPoly { s.parse().expect("static coefficient") };
        let zero = BiPoly::zero;
        match family {
            LatticeFamily::Fractal => Self {
                t1: [p("y^2 - y"), p("4y"), p("2x + 2"), zero(), zero()],
                n_part: [zero(), zero(), p("2y + 2"), p("4x"), p("x^2 - x")],
            },
            LatticeFamily::Flower22 => Self {
                t1: [p("y - 1"), p("4"), p("2x - 2"), zero(), zero()],
                n_part: [zero(), zero(), p("4"), p("4x - 4"), p("x^2 - 2x + 1")],
            },
            LatticeFamily::Flower13 => Self {
                t1: [p("y - 1"), p("4"), p("3x - 3"), p("x^2 - 2x + 1"), zero()],
                n_part: [zero(), zero(), p("3"), p("3x - 3"), p("x^2 - 2x + 1")],
            },
        }
    }

    /// The same recurrence with every coefficient evaluated at `(x, y)`.
    pub fn at_point(&self, x: &ExactRational, y: &ExactRational) -> Recurrence<ExactRational> {
        Recurrence {
            t1: self.t1.clone().map(|c| c.eval(x, y)),
            n_part: self.n_part.clone().map(|c| c.eval(x, y)),
        }
    }
}

impl<R: Ring> Recurrence<R> {
    /// Advances one generation.
    pub fn step(&self, p: &Pair<R>) -> Pair<R> {
        let (tt, (tn, nn)) = rayon::join(
            || p.t1.ring_mul(&p.t1),
            || {
                rayon::join(
                    || p.t1.ring_mul(&p.n_part),
                    || p.n_part.ring_mul(&p.n_part),
                )
            },
        );
        let (t1, n_part) = rayon::join(
            || quartic(&self.t1, &tt, &tn, &nn),
            || quartic(&self.n_part, &tt, &tn, &nn),
        );
        Pair { t1, n_part }
    }

    /// Applies [`Recurrence::step`] `n` times from `(1, 1)`.
    pub fn iterate(&self, n: u32) -> Pair<R> {
        (0..n).fold(Pair::initial(), |p, _| self.step(&p))
    }
}

/// `sum_k c_k T^(4-k) N^k` from `tt = T^2`, `tn = T N`, `nn = N^2`, grouped as
/// `tt (c0 tt + c1 tn + c2 nn) + nn (c3 tn + c4 nn)` so only two large
/// products are formed.
fn quartic<R: Ring>(c: &[R; 5], tt: &R, tn: &R, nn: &R) -> R {
    let combine = |parts: &[(&R, &R)]| -> R {
        parts
            .iter()
            .filter(|(coeff, _)| !coeff.is_zero())
            .fold(R::zero(), |acc, (coeff, v)| acc.ring_add(&coeff.ring_mul(v)))
    };
    let left = combine(&[(&c[0], tt), (&c[1], tn), (&c[2], nn)]);
    let right = combine(&[(&c[3], tn), (&c[4], nn)]);
    let mut out = R::zero();
    if !left.is_zero() {
        out = out.ring_add(&tt.ring_mul(&left));
    }
    if !right.is_zero() {
        out = out.ring_add(&nn.ring_mul(&right));
    }
    out
}

pub fn step(family: LatticeFamily, p: &TuttePair) -> TuttePair {
    Recurrence::for_family(family).step(p)
}

pub fn step_fractal(p: &TuttePair) -> TuttePair {
    step(LatticeFamily::Fractal, p)
}

pub fn step_flower22(p: &TuttePair) -> TuttePair {
    step(LatticeFamily::Flower22, p)
}

pub fn step_flower13(p: &TuttePair) -> TuttePair {
    step(LatticeFamily::Flower13, p)
}

/// `(T1, N)` of generation `n`, bounded by `cap`.
pub fn tutte_pair_with_cap(family: LatticeFamily, n: u32, cap: u32) -> Result<TuttePair> {
    check_cap("symbolic generation", n as u64, cap as u64)?;
    Ok(Recurrence::for_family(family).iterate(n))
}

pub fn tutte_pair(family: LatticeFamily, n: u32) -> Result<TuttePair> {
    tutte_pair_with_cap(family, n, DEFAULT_SYMBOLIC_CAP)
}

/// Full Tutte polynomial of generation `n`, bounded by `cap`.
pub fn tutte_symbolic_with_cap(family: LatticeFamily, n: u32, cap: u32) -> Result<BiPoly> {
    Ok(tutte_pair_with_cap(family, n, cap)?.tutte())
}

/// Full Tutte polynomial of generation `n` (`n <= DEFAULT_SYMBOLIC_CAP`).
pub fn tutte_symbolic(family: LatticeFamily, n: u32) -> Result<BiPoly> {
    tutte_symbolic_with_cap(family, n, DEFAULT_SYMBOLIC_CAP)
}

/// A rational `numer / base^exp` over a fixed `base`.
///
/// Point evaluation multiplies huge rationals whose denominators are all
/// powers of `lcm(den x, den y)`; keeping that denominator implicit avoids a
/// gcd on every operation. `base` is `None` only for values built by
/// [`Ring::zero`] / [`Ring::one`], which always have `exp == 0`.
#[derive(Clone, Debug)]
struct ScaledRational {
    numer: BigInt,
    exp: u32,
    base: Option<Arc<BigInt>>,
}

impl ScaledRational {
    fn from_rational(r: &ExactRational, base: &Arc<BigInt>) -> Self {
        // Coefficient denominators divide base^2.
        let exp = 2;
        let scaled = r * ExactRational::from_integer(base.pow(exp));
        debug_assert!(scaled.is_integer());
        Self {
            numer: scaled.to_integer(),
            exp,
            base: Some(Arc::clone(base)),
        }
    }

    fn to_rational(&self) -> ExactRational {
        match &self.base {
            Some(base) => ExactRational::new(self.numer.clone(), base.pow(self.exp)),
            None => ExactRational::from_integer(self.numer.clone()),
        }
    }

    fn lifted(&self, exp: u32, base: &Arc<BigInt>) -> BigInt {
        if exp == self.exp {
            self.numer.clone()
        } else {
            &self.numer * base.pow(exp - self.exp)
        }
    }
}

impl PartialEq for ScaledRational {
    fn eq(&self, other: &Self) -> bool {
        self.to_rational() == other.to_rational()
    }
}

impl Ring for ScaledRational {
    fn zero() -> Self {
        Self { numer: BigInt::zero(), exp: 0, base: None }
    }
    fn one() -> Self {
        Self { numer: BigInt::one(), exp: 0, base: None }
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let exp = self.exp.max(other.exp);
        match self.base.as_ref().or(other.base.as_ref()) {
            None => Self { numer: &self.numer + &other.numer, exp: 0, base: None },
            Some(base) => Self {
                numer: self.lifted(exp, base) + other.lifted(exp, base),
                exp,
                base: Some(Arc::clone(base)),
            },
        }
    }
    fn ring_mul(&self, other: &Self) -> Self {
        Self {
            numer: &self.numer * &other.numer,
            exp: self.exp + other.exp,
            base: self.base.clone().or_else(|| other.base.clone()),
        }
    }
}

/// `(T1, N)` of generation `n` evaluated at `(x, y)`.
pub fn eval_pair(
    family: LatticeFamily,
    n: u32,
    x: &ExactRational,
    y: &ExactRational,
) -> Result<EvalPair> {
    check_cap("evaluation generation", n as u64, MAX_EVAL_GENERATION as u64)?;
    let base = Arc::new(x.denom().lcm(y.denom()));
    let symbolic = Recurrence::for_family(family);
    let scale = |coeffs: &[BiPoly; 5]| coeffs.clone().map(|c| ScaledRational::from_rational(&c.eval(x, y), &base));
    let rec = Recurrence {
        t1: scale(&symbolic.t1),
        n_part: scale(&symbolic.n_part),
    };
    let pair = rec.iterate(n);
    Ok(EvalPair {
        t1: pair.t1.to_rational(),
        n_part: pair.n_part.to_rational(),
    })
}

/// `T_n(x, y)` by iterating the recursion on exact rationals; the symbolic
/// polynomial is never built.
pub fn tutte_eval(
    family: LatticeFamily,
    n: u32,
    x: &ExactRational,
    y: &ExactRational,
) -> Result<ExactRational> {
    let pair = eval_pair(family, n, x, y)?;
    let x_minus_1 = x - ExactRational::from_integer(BigInt::one());
    Ok(pair.assemble(&x_minus_1))
}

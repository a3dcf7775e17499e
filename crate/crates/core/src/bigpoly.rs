//! Sparse bivariate polynomials over arbitrary-precision integers.
//!
//! [`BiPoly`] is the value type every Tutte computation in this crate
//! produces. Terms are keyed by the exponent pair `(i, j)` of `x^i y^j` and a
//! zero coefficient is never stored, so structural equality is polynomial
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type BigIntVal = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Exponent pair `(power of x, power of y)`.
pub type Exponents = (u32, u32);

/// Products with at least this many term pairs are split across the rayon pool.
const PARALLEL_MUL_THRESHOLD: usize = 1 << 14;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The variable `y`.
    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut map: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (non-zero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Highest power of `x`, `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    /// Highest power of `y`, `None` for the zero polynomial.
    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// `self^k` by repeated squaring; `p^0 = 1` for every `p`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact value at `(x, y)`.
    ///
    /// Works over a common denominator `b^dx * d^dy` (for `x = a/b`,
    /// `y = c/d`) so only one rational reduction happens at the end.
    pub fn eval(&self, x: &ExactRational, y: &ExactRational) -> ExactRational {
        let (Some(dx), Some(dy)) = (self.degree_x(), self.degree_y()) else {
            return ExactRational::zero();
        };
        let xs = homogeneous_powers(x, dx);
        let ys = homogeneous_powers(y, dy);

        let mut numer = BigInt::zero();
        let mut row_sum = BigInt::zero();
        let mut current_row = None;
        for ((i, j), c) in &self.terms {
            if current_row != Some(*i) {
                if let Some(r) = current_row {
                    numer += &xs[r as usize] * &row_sum;
                }
                row_sum = BigInt::zero();
                current_row = Some(*i);
            }
            row_sum += c * &ys[*j as usize];
        }
        if let Some(r) = current_row {
            numer += &xs[r as usize] * &row_sum;
        }

        let denom = x.denom().pow(dx) * y.denom().pow(dy);
        ExactRational::new(numer, denom)
    }

    /// `p(x, x)`, returned with every y-exponent zero.
    pub fn diagonal(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((i, j), c)| ((i + j, 0), c.clone())))
    }

    /// Exact quotient by `(x - 1)`.
    ///
    /// Each fixed-`y`-degree slice is a univariate polynomial in `x` and is
    /// divided synthetically; any non-zero remainder is an error.
    pub fn div_exact_x_minus_1(&self) -> Result<Self> {
        let mut slices: BTreeMap<u32, BTreeMap<u32, &BigInt>> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            slices.entry(*j).or_default().insert(*i, c);
        }

        let mut quotient = Vec::new();
        for (j, slice) in slices {
            let top = *slice.keys().next_back().expect("slices are non-empty");
            // p_k = q_{k-1} - q_k, so q_{k-1} = p_k + q_k walking down from the top.
            let mut carry = BigInt::zero();
            for k in (1..=top).rev() {
                if let Some(c) = slice.get(&k) {
                    carry += *c;
                }
                if !carry.is_zero() {
                    quotient.push(((k - 1, j), carry.clone()));
                }
            }
            let p0 = slice.get(&0).map(|c| (*c).clone()).unwrap_or_default();
            let remainder = p0 + carry;
            if !remainder.is_zero() {
                return Err(Error::NotDivisible {
                    remainder: format!("{remainder} * y^{j}"),
                });
            }
        }
        Ok(Self::from_terms(quotient))
    }

    /// Serializes to the canonical polynomial JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let rows_a = rows_by_x(self);
        let rows_b = rows_by_x(other);
        let y_width = (self.degree_y().unwrap() + other.degree_y().unwrap() + 1) as usize;
        let out_rows = rows_a.len() + rows_b.len() - 1;

        let row = |k: usize| -> Vec<(Exponents, BigInt)> {
            let mut acc = vec![BigInt::zero(); y_width];
            let lo = k.saturating_sub(rows_b.len() - 1);
            let hi = k.min(rows_a.len() - 1);
            for i in lo..=hi {
                for (ja, ca) in &rows_a[i] {
                    for (jb, cb) in &rows_b[k - i] {
                        acc[(ja + jb) as usize] += *ca * *cb;
                    }
                }
            }
            acc.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| ((k as u32, j as u32), c))
                .collect()
        };

        let work = self.len() * other.len();
        let rows: Vec<Vec<(Exponents, BigInt)>> = if work >= PARALLEL_MUL_THRESHOLD {
            (0..out_rows).into_par_iter().map(row).collect()
        } else {
            (0..out_rows).map(row).collect()
        };
        Self {
            terms: rows.into_iter().flatten().collect(),
        }
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_default();
            if negate_other {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Self { terms }
    }
}

/// `[a^i * b^(d-i)]` for `i in 0..=d`, where `r = a/b`.
fn homogeneous_powers(r: &ExactRational, d: u32) -> Vec<BigInt> {
    let d = d as usize;
    let mut num_pows = Vec::with_capacity(d + 1);
    let mut den_pows = Vec::with_capacity(d + 1);
    num_pows.push(BigInt::one());
    den_pows.push(BigInt::one());
    for k in 1..=d {
        num_pows.push(&num_pows[k - 1] * r.numer());
        den_pows.push(&den_pows[k - 1] * r.denom());
    }
    (0..=d).map(|i| &num_pows[i] * &den_pows[d - i]).collect()
}

fn rows_by_x(p: &BiPoly) -> Vec<Vec<(u32, &BigInt)>> {
    let dx = p.degree_x().unwrap_or(0) as usize;
    let mut rows = vec![Vec::new(); dx + 1];
    for ((i, j), c) in &p.terms {
        rows[*i as usize].push((*j, c));
    }
    rows
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.add_impl(rhs, false)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.add_impl(rhs, true)
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.mul_impl(rhs)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        self.mul_impl(&rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for BiPoly {
    /// Human-readable form, highest `x` power first, e.g. `x^3 + 2*x*y - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (*i == 0 && *j == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("x", *i), ("y", *j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    /// Parses sums of terms such as `x^3 + 2x^2 - 3*x*y + y^2 - 7`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        if chars.is_empty() {
            return Err(err("empty input"));
        }

        let read_digits = |pos: &mut usize| -> Option<String> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (*pos > start).then(|| chars[start..*pos].iter().collect())
        };

        let mut terms = Vec::new();
        let mut pos = 0;
        while pos < chars.len() {
            let negative = match chars[pos] {
                '+' => {
                    pos += 1;
                    false
                }
                '-' => {
                    pos += 1;
                    true
                }
                _ if terms.is_empty() => false,
                other => return Err(err(&format!("unexpected {other:?}"))),
            };

            let coeff_digits = read_digits(&mut pos);
            let mut exps = (0u32, 0u32);
            let mut saw_factor = false;
            while pos < chars.len() && !matches!(chars[pos], '+' | '-') {
                match chars[pos] {
                    '*' => pos += 1,
                    v @ ('x' | 'y') => {
                        pos += 1;
                        let mut e = 1u32;
                        if pos < chars.len() && chars[pos] == '^' {
                            pos += 1;
                            e = read_digits(&mut pos)
                                .ok_or_else(|| err("missing exponent"))?
                                .parse()
                                .map_err(|_| err("exponent out of range"))?;
                        }
                        if v == 'x' {
                            exps.0 += e;
                        } else {
                            exps.1 += e;
                        }
                        saw_factor = true;
                    }
                    other => return Err(err(&format!("unexpected {other:?}"))),
                }
            }

            let mut c: BigInt = match coeff_digits {
                Some(d) => d.parse().expect("ascii digits"),
                None if saw_factor => BigInt::one(),
                None => return Err(err("empty term")),
            };
            if negative {
                c = -c;
            }
            terms.push((exps, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    x: u32,
    y: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct WirePoly {
    terms: Vec<WireTerm>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Descending (x, y) order.
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| WireTerm {
                x: *i,
                y: *j,
                c: c.to_str_radix(10),
            })
            .collect();
        WirePoly { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WirePoly::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        for t in wire.terms {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            terms.push(((t.x, t.y), c));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(ExactRational::new(num, den))
}

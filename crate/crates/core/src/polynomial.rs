//! Dense univariate polynomials over [`Rat`] and Sturm sequences.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Polynomial with coefficients in ascending degree order.
///
/// The last stored coefficient is never zero; the zero polynomial stores
/// nothing and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> QPoly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> QPoly {
        QPoly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> QPoly {
        QPoly::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, degree: usize) -> QPoly {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        QPoly::new(coeffs)
    }

    /// `X - r`.
    pub fn linear_factor(r: &Rat) -> QPoly {
        QPoly::new(vec![-r, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `X^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        self.eval(x).signum()
    }

    /// Sign as the argument tends to +infinity (`positive`) or -infinity.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        let Some(lead) = self.leading() else { return 0 };
        let s = lead.signum();
        if positive || self.coeffs.len() % 2 == 1 {
            s
        } else {
            -s
        }
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = divisor * quot + rem` with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let factor = top.checked_div(dlead)?;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &factor * dc;
            }
            quot[k] = factor;
        }
        rem.truncate(ddeg);
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &QPoly) -> Result<QPoly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip().expect("leading coefficient is nonzero")),
            None => QPoly::zero(),
        }
    }

    /// Splits `self = content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient; the sign lives in `content`.
    pub fn content_primitive(&self) -> Result<(Rat, QPoly)> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm)?;
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip()?;
        Ok((content, self.scale(&inv)))
    }

    /// Integer coefficients of the primitive part.
    pub fn primitive_integer_coeffs(&self) -> Result<Vec<BigInt>> {
        let (_, prim) = self.content_primitive()?;
        Ok(prim.coeffs.iter().map(|c| c.numer().clone()).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &QPoly, b: &QPoly) -> Result<QPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic())
    }

    /// `self / gcd(self, self')`, made monic.
    pub fn square_free_part(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = QPoly::gcd(self, &self.derivative())?;
        Ok(self.divrem(&g)?.0.monic())
    }

    /// Renders in descending order with explicit `*` and `^`, e.g.
    /// `2*X^3 + 3*X^2 - 4*X - 1`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let _ = match (k, mag.is_one()) {
                (0, _) => write!(out, "{mag}"),
                (1, true) => write!(out, "{var}"),
                (1, false) => write!(out, "{mag}*{var}"),
                (_, true) => write!(out, "{var}^{k}"),
                (_, false) => write!(out, "{mag}*{var}^{k}"),
            };
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("X"))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self.render("X"))
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// Endpoint of a Sturm counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Rat),
    PosInfinity,
}

impl Endpoint {
    fn rank(&self) -> (i8, Option<&Rat>) {
        match self {
            Endpoint::NegInfinity => (-1, None),
            Endpoint::Finite(r) => (0, Some(r)),
            Endpoint::PosInfinity => (1, None),
        }
    }

    fn is_before(&self, other: &Endpoint) -> bool {
        match (self.rank(), other.rank()) {
            ((0, Some(a)), (0, Some(b))) => a < b,
            ((a, _), (b, _)) => a < b,
        }
    }
}

impl From<Rat> for Endpoint {
    fn from(r: Rat) -> Endpoint {
        Endpoint::Finite(r)
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...` ending at a nonzero constant.
///
/// `p` must be square-free; callers divide by `gcd(p, p')` first.
pub fn sturm_chain(p: &QPoly) -> Result<Vec<QPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = chain.last().expect("chain starts non-empty");
        let r = -prev.rem(&next)?;
        chain.push(next);
        next = r;
    }
    Ok(chain)
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[QPoly], at: &Endpoint) -> usize {
    match at {
        Endpoint::NegInfinity => sign_variations(chain.iter().map(|p| p.sign_at_infinity(false))),
        Endpoint::PosInfinity => sign_variations(chain.iter().map(|p| p.sign_at_infinity(true))),
        Endpoint::Finite(x) => sign_variations(chain.iter().map(|p| p.sign_at(x))),
    }
}

/// Number of distinct real roots of the chain head in `(lo, hi]`.
///
/// Finite endpoints that are roots of the head are rejected with
/// [`Error::EndpointIsRoot`]; perturbing them is the caller's job.
pub fn sturm_count(chain: &[QPoly], lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    let head = chain.first().ok_or(Error::ZeroPolynomial)?;
    if !lo.is_before(hi) {
        return Err(Error::InvalidInterval);
    }
    for end in [lo, hi] {
        if let Endpoint::Finite(x) = end {
            if head.eval(x).is_zero() {
                return Err(Error::EndpointIsRoot);
            }
        }
    }
    let vlo = variations_at(chain, lo);
    let vhi = variations_at(chain, hi);
    Ok(vlo.saturating_sub(vhi))
}

/// Cauchy bound `1 + max |a_i / a_n|`: every real root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &QPoly) -> Result<Rat> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    let n = p.coeffs().len() - 1;
    let mut max = Rat::zero();
    for c in &p.coeffs()[..n] {
        let r = c.checked_div(lead)?.abs();
        if r > max {
            max = r;
        }
    }
    Ok(max + Rat::one())
}

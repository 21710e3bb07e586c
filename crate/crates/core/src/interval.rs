//! Closed intervals with rational endpoints.
//!
//! Field operations are exact on the endpoints, so enclosures are only
//! widened by [`RatInterval::sqrt`], which brackets the true square root from
//! both sides.

use core::fmt;
use core::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::rational::{rat, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Result<RatInterval> {
        if lo > hi {
            return Err(Error::InvalidInterval);
        }
        Ok(RatInterval { lo, hi })
    }

    pub fn point(x: Rat) -> RatInterval {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        self.lo.midpoint(&self.hi)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Largest distance from `x` to any point of the interval.
    pub fn max_deviation(&self, x: &Rat) -> Rat {
        let a = (&self.lo - x).abs();
        let b = (&self.hi - x).abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn checked_div(&self, rhs: &RatInterval) -> Result<RatInterval> {
        if rhs.contains(&Rat::zero()) {
            return Err(Error::DivisionByZero);
        }
        let inv = RatInterval {
            lo: rhs.hi.recip()?,
            hi: rhs.lo.recip()?,
        };
        Ok(self * &inv)
    }

    /// Encloses `sqrt` of every point, with each endpoint bracketed to within `tol`.
    pub fn sqrt(&self, tol: &Rat) -> Result<RatInterval> {
        if self.lo.is_negative() {
            return Err(Error::InvalidInterval);
        }
        let (lo, _) = sqrt_bracket(&self.lo, tol)?;
        let (_, hi) = sqrt_bracket(&self.hi, tol)?;
        Ok(RatInterval { lo, hi })
    }

    pub fn square(&self) -> RatInterval {
        self * self
    }
}

/// Rationals `a <= sqrt(x) <= b` with `b - a <= tol`, by exact bisection.
pub fn sqrt_bracket(x: &Rat, tol: &Rat) -> Result<(Rat, Rat)> {
    if x.is_negative() {
        return Err(Error::InvalidInterval);
    }
    if !tol.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let (rn, rd) = (x.numer().sqrt(), x.denom().sqrt());
    if &(&rn * &rn) == x.numer() && &(&rd * &rd) == x.denom() {
        let root = Rat::new(rn, rd)?;
        return Ok((root.clone(), root));
    }
    let mut lo = Rat::zero();
    let mut hi = if x > &Rat::one() { x.clone() } else { Rat::one() };
    // seed with a coarse power of two so midpoints stay dyadic
    while &(&hi * rat(1, 2)).square() >= x && hi > *tol {
        hi = &hi * rat(1, 2);
    }
    while &(&hi - &lo) > tol {
        let mid = lo.midpoint(&hi);
        match mid.square().cmp(x) {
            core::cmp::Ordering::Equal => return Ok((mid.clone(), mid)),
            core::cmp::Ordering::Less => lo = mid,
            core::cmp::Ordering::Greater => hi = mid,
        }
    }
    Ok((lo, hi))
}

impl Add<&RatInterval> for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub<&RatInterval> for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul<&RatInterval> for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &RatInterval) -> RatInterval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        RatInterval { lo, hi }
    }
}

impl Mul<&Rat> for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &Rat) -> RatInterval {
        self * &RatInterval::point(rhs.clone())
    }
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

//! Exact rationals over arbitrary-precision integers.
//!
//! [`Rat`] is always kept in lowest terms with a positive denominator, so
//! structural equality is value equality. There is no floating-point path:
//! decimal strings are produced by exact long division.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `n/d` in canonical form.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rat> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(n.into(), d)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Rat {
        Rat(Pow::pow(&self.0, exp))
    }

    pub fn square(&self) -> Rat {
        self * self
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Exact midpoint `(self + other) / 2`.
    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn midpoint(&self, other: &Rat) -> Rat {
        Rat((&self.0 + &other.0) / BigInt::from(2))
    }

    /// `"num/den"`, including a `/1` denominator for integers.
    pub fn to_fraction_string(&self) -> String {
        alloc::format!("{}/{}", self.numer(), self.denom())
    }

    /// Decimal string with exactly `digits` fractional digits, rounded half to even.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        let scale = Pow::pow(BigInt::from(10u32), digits);
        let scaled = self.numer().abs() * &scale;
        let (mut q, r) = scaled.div_rem(self.denom());
        let twice = r * 2u32;
        match twice.cmp(self.denom()) {
            Ordering::Greater => q += 1u32,
            Ordering::Equal if q.is_odd() => q += 1u32,
            _ => {}
        }
        let (int_part, frac_part) = q.div_rem(&scale);
        let frac = frac_part.to_str_radix(10);
        let mut out = String::new();
        if self.is_negative() && !q.is_zero() {
            out.push('-');
        }
        out.push_str(&int_part.to_str_radix(10));
        out.push('.');
        for _ in frac.len()..digits {
            out.push('0');
        }
        out.push_str(&frac);
        out
    }

    /// Parses `[+-]?digits`, `[+-]?digits/digits` or `[+-]?digits.digits`.
    pub fn parse(text: &str) -> Result<Rat> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let negative = match bytes.first() {
            Some(b'-') => {
                pos = 1;
                true
            }
            Some(b'+') => {
                pos = 1;
                false
            }
            _ => false,
        };
        let int_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == int_start {
            return Err(Error::Parse {
                position: pos,
                reason: "expected a digit",
            });
        }
        let int_digits = &text[int_start..pos];
        let value = if pos == bytes.len() {
            Rat::from_int(parse_digits(int_digits))
        } else {
            let sep = bytes[pos];
            if sep != b'/' && sep != b'.' {
                return Err(Error::Parse {
                    position: pos,
                    reason: "expected '/', '.' or end of input",
                });
            }
            pos += 1;
            let tail_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == tail_start {
                return Err(Error::Parse {
                    position: pos,
                    reason: "expected a digit",
                });
            }
            if pos != bytes.len() {
                return Err(Error::Parse {
                    position: pos,
                    reason: "unexpected trailing character",
                });
            }
            let tail = &text[tail_start..];
            if sep == b'/' {
                Rat::new(parse_digits(int_digits), parse_digits(tail))?
            } else {
                let whole = parse_digits(int_digits) * Pow::pow(BigInt::from(10u32), tail.len())
                    + parse_digits(tail);
                Rat::new(whole, Pow::pow(BigInt::from(10u32), tail.len()))?
            }
        };
        Ok(if negative { -value } else { value })
    }
}

fn parse_digits(digits: &str) -> BigInt {
    // callers guarantee a non-empty ASCII digit run
    BigInt::parse_bytes(digits.as_bytes(), 10).unwrap_or_default()
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        Rat::parse(s)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $assign_trait<&Rat> for Rat {
            fn $assign_method(&mut self, rhs: &Rat) {
                self.0.$assign_method(&rhs.0);
            }
        }
        impl $assign_trait<Rat> for Rat {
            fn $assign_method(&mut self, rhs: Rat) {
                self.0.$assign_method(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl core::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for test and table code: `rat(n, d)` with a nonzero literal denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d).expect("literal denominator must be nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn make_canonicalizes() {
        let r = Rat::new(6, -4).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = Rat::new(0, 7).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::from(0), BigInt::from(1)));
        let r = Rat::new(121, 196).unwrap();
        assert_eq!(r.to_fraction_string(), "121/196");
        assert_eq!(Rat::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(5760, 169) * rat(338, 1), rat(11520, 1));
        assert_eq!(rat(1, 2).checked_div(&Rat::zero()), Err(Error::DivisionByZero));
        assert!(rat(-1, 2) < rat(1, 3));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Rat::parse("11/28").unwrap(), rat(11, 28));
        assert_eq!(Rat::parse("0.25").unwrap(), rat(1, 4));
        assert_eq!(Rat::parse("0.1").unwrap(), rat(1, 10));
        assert_eq!(Rat::parse("-7").unwrap(), rat(-7, 1));
        assert_eq!(Rat::parse("+3/6").unwrap(), rat(1, 2));
        assert_eq!(Rat::parse("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_errors_carry_position() {
        let cases = [("", 0), ("-", 1), ("1/", 2), ("1.", 2), ("1e5", 1), ("1/2/3", 3), ("1/-2", 2), (" 1", 0), ("1.5x", 3)];
        for (text, pos) in cases {
            match Rat::parse(text) {
                Err(Error::Parse { position, .. }) => assert_eq!(position, pos, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn decimal_examples() {
        assert_eq!(rat(1, 3).to_decimal(4), "0.3333");
        assert_eq!(rat(5760, 169).to_decimal(6), "34.082840");
        assert_eq!(rat(-3, 2).to_decimal(1), "-1.5");
        assert_eq!(rat(2, 3).to_decimal(2), "0.67");
    }

    #[test]
    fn decimal_rounds_half_to_even() {
        assert_eq!(rat(1, 8).to_decimal(2), "0.12");
        assert_eq!(rat(3, 8).to_decimal(2), "0.38");
        assert_eq!(rat(-1, 8).to_decimal(2), "-0.12");
        assert_eq!(rat(-1, 1000).to_decimal(2), "0.00");
        assert_eq!(rat(5, 1).to_decimal(3), "5.000");
        assert_eq!(rat(1, 20).to_decimal(1), "0.0");
        assert_eq!(rat(3, 20).to_decimal(1), "0.2");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
    }

    fn is_canonical(r: &Rat) -> bool {
        r.denom() > &BigInt::zero() && r.numer().gcd(r.denom()).is_one()
    }

    proptest! {
        #[test]
        fn parse_display_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000, frac in 0u32..1_000_000) {
            let r = rat(n, d);
            prop_assert_eq!(Rat::parse(&r.to_string()).unwrap(), r.clone());
            let decimal = alloc::format!("{}.{:06}", n, frac);
            let parsed = Rat::parse(&decimal).unwrap();
            prop_assert_eq!(Rat::parse(&parsed.to_string()).unwrap(), parsed);
        }

        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            let sum = &a + &b;
            let prod = &a * &b;
            prop_assert!(is_canonical(&sum) && is_canonical(&prod));
            if !b.is_zero() {
                let q = a.checked_div(&b).unwrap();
                prop_assert!(is_canonical(&q));
                prop_assert_eq!(q * &b, a);
            }
        }
    }
}

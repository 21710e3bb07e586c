//! Polynomials in `X` whose coefficients are polynomials in `q`, i.e. `Q[q][X]`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::polynomial::QPoly;
use crate::rational::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    xcoeffs: Vec<QPoly>,
}

/// `2X^3 + 3X^2 - 4q^2 X - 1`, the cubic satisfied by `t = l/b` once the
/// base-vertex bisector is normalized to unit length.
pub fn bisector_cubic() -> BiPoly {
    BiPoly::new(vec![
        QPoly::from_ints(&[-1]),
        QPoly::from_ints(&[0, 0, -4]),
        QPoly::from_ints(&[3]),
        QPoly::from_ints(&[2]),
    ])
}

/// `2p^2 X^3 + 3p^2 X^2 - 4q^2 X - p^2` for a base-vertex bisector of length `p`.
pub fn general_cubic(p: &Rat) -> Result<BiPoly> {
    if !p.is_positive() {
        return Err(Error::InvalidLength);
    }
    let p2 = p.square();
    Ok(BiPoly::new(vec![
        QPoly::constant(-&p2),
        QPoly::from_ints(&[0, 0, -4]),
        QPoly::constant(&p2 * Rat::from(3)),
        QPoly::constant(&p2 * Rat::from(2)),
    ]))
}

impl BiPoly {
    pub fn new(mut xcoeffs: Vec<QPoly>) -> BiPoly {
        while xcoeffs.last().is_some_and(QPoly::is_zero) {
            xcoeffs.pop();
        }
        BiPoly { xcoeffs }
    }

    /// Embeds a `q`-free polynomial in `X`.
    pub fn from_x_poly(p: &QPoly) -> BiPoly {
        BiPoly::new(p.coeffs().iter().cloned().map(QPoly::constant).collect())
    }

    pub fn xcoeffs(&self) -> &[QPoly] {
        &self.xcoeffs
    }

    /// Coefficient of `X^k` as a polynomial in `q`.
    pub fn x_coeff(&self, k: usize) -> QPoly {
        self.xcoeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.xcoeffs.len().checked_sub(1)
    }

    /// Largest power of `q` present in any coefficient.
    pub fn degree_q(&self) -> Option<usize> {
        self.xcoeffs.iter().filter_map(QPoly::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.xcoeffs.is_empty()
    }

    /// Specializes `q` to a rational value, leaving a polynomial in `X`.
    pub fn eval_q(&self, qval: &Rat) -> QPoly {
        QPoly::new(self.xcoeffs.iter().map(|c| c.eval(qval)).collect())
    }

    /// Substitutes `X = c`, leaving a polynomial in `q`.
    pub fn subst_x(&self, c: &Rat) -> QPoly {
        self.xcoeffs
            .iter()
            .rev()
            .fold(QPoly::zero(), |acc, coeff| acc.scale(c) + coeff)
    }

    /// Polynomial in `X` collecting the coefficients of `q^j`.
    pub fn q_coeff(&self, j: usize) -> QPoly {
        QPoly::new(self.xcoeffs.iter().map(|c| c.coeff(j)).collect())
    }

    /// Monic gcd in `Q[q]` of all `X`-coefficients.
    pub fn content_x(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = QPoly::zero();
        for c in &self.xcoeffs {
            g = QPoly::gcd(&g, c)?;
        }
        Ok(g)
    }

    /// `X^n F(1/X)` for `n = deg_X F`.
    pub fn reversed(&self) -> BiPoly {
        let mut coeffs = self.xcoeffs.clone();
        coeffs.reverse();
        BiPoly::new(coeffs)
    }

    /// Renders as `2*X^3 + 3*X^2 + (-4*q^2)*X + (-1)`; compound or negative
    /// `q`-coefficients are parenthesized.
    pub fn render(&self, xvar: &str, qvar: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.xcoeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let text = c.render(qvar);
            let bare = !text.contains(' ') && !text.starts_with('-');
            let coeff = if bare { text } else { alloc::format!("({text})") };
            let unit = c == &QPoly::one();
            let _ = match (k, unit) {
                (0, _) => write!(out, "{coeff}"),
                (1, true) => write!(out, "{xvar}"),
                (1, false) => write!(out, "{coeff}*{xvar}"),
                (_, true) => write!(out, "{xvar}^{k}"),
                (_, false) => write!(out, "{coeff}*{xvar}^{k}"),
            };
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("X", "q"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

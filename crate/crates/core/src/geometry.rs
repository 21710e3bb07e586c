//! The isosceles triangle `ABC` with `AB = AC = l`, base `BC = b`, apex
//! bisector `AM` (length `q`, also the height) and the bisector from base
//! vertex `B` meeting `AC` at `P` (length `p`, with `x = CP`).
//!
//! Lengths that may be irrational are carried as squares so that everything
//! on the forward path stays in `Q`.

use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::rational::{rat, Rat};
use crate::roots::{refine, Isolation};

/// Exact description of a triangle with rational sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleInstance {
    pub l: Rat,
    pub b: Rat,
    /// Squared apex bisector, `l^2 - b^2/4`.
    pub q_sq: Rat,
    /// Squared bisector from `B` to `AC`.
    pub p_sq: Rat,
    /// Base angle cosine, `b / 2l`.
    pub cos_theta: Rat,
    /// `CP = bl / (b + l)`.
    pub cp_x: Rat,
}

fn check_sides(l: &Rat, b: &Rat) -> Result<()> {
    let two_l = l * Rat::from(2);
    if !b.is_positive() || two_l <= *b {
        return Err(Error::DegenerateTriangle);
    }
    Ok(())
}

/// `q^2 = l^2 - b^2/4`, cross-checked against `(2l + b)(2l - b) = 4q^2`.
pub fn q_sq_from_sides(l: &Rat, b: &Rat) -> Result<Rat> {
    check_sides(l, b)?;
    let q_sq = l.square() - b.square() * rat(1, 4);
    let two_l = l * Rat::from(2);
    let factored = (&two_l + b) * (&two_l - b);
    if factored != &q_sq * Rat::from(4) {
        return Err(Error::IdentityMismatch("height relation"));
    }
    Ok(q_sq)
}

pub fn cos_theta(l: &Rat, b: &Rat) -> Result<Rat> {
    check_sides(l, b)?;
    b.checked_div(&(l * Rat::from(2)))
}

/// Segment `CP` cut by the bisector from `B`, from `(l - x)/x = l/b`.
pub fn cp_x(l: &Rat, b: &Rat) -> Result<Rat> {
    check_sides(l, b)?;
    (b * l).checked_div(&(b + l))
}

/// `p^2 = b^2 + x^2 - 2bx cos(theta)` in triangle `BPC`.
pub fn p_sq_cosine_law(l: &Rat, b: &Rat) -> Result<Rat> {
    let x = cp_x(l, b)?;
    let cos = cos_theta(l, b)?;
    Ok(b.square() + x.square() - Rat::from(2) * b * &x * cos)
}

/// `p^2 = b^2 l (b + 2l) / (b + l)^2`.
pub fn p_sq_closed_form(l: &Rat, b: &Rat) -> Result<Rat> {
    check_sides(l, b)?;
    let num = b.square() * l * (b + l * Rat::from(2));
    num.checked_div(&(b + l).square())
}

/// Squared base-vertex bisector; the closed form and the cosine-law chain must agree.
pub fn p_sq_from_sides(l: &Rat, b: &Rat) -> Result<Rat> {
    let closed = p_sq_closed_form(l, b)?;
    if closed != p_sq_cosine_law(l, b)? {
        return Err(Error::IdentityMismatch("bisector length"));
    }
    Ok(closed)
}

/// `p^2` for apex bisector `q` and shape `t = l/b`, eliminating `b` through
/// `b^2 (4t^2 - 1) = 4q^2`.
///
/// The result is exactly `1` iff `t` is a root of the normalized cubic at `q`.
pub fn p_sq_from_q_t(q: &Rat, t: &Rat) -> Result<Rat> {
    if !q.is_positive() {
        return Err(Error::InvalidLength);
    }
    if t <= &rat(1, 2) {
        return Err(Error::DegenerateTriangle);
    }
    let four = Rat::from(4);
    let b_sq = (&four * q.square()).checked_div(&(&four * t.square() - Rat::one()))?;
    let shape = (t * (Rat::one() + t * Rat::from(2))).checked_div(&(Rat::one() + t).square())?;
    Ok(b_sq * shape)
}

/// `2p^2 l^3 + 3p^2 b l^2 - 4q^2 b^2 l - p^2 b^3`; zero for consistent data.
pub fn cubic_residual(l: &Rat, b: &Rat, p_sq: &Rat, q_sq: &Rat) -> Rat {
    Rat::from(2) * p_sq * l.pow(3) + Rat::from(3) * p_sq * b * l.square()
        - Rat::from(4) * q_sq * b.square() * l
        - p_sq * b.pow(3)
}

/// Populates every derived quantity of the triangle with sides `(l, l, b)`.
pub fn forward_instance(l: &Rat, b: &Rat) -> Result<TriangleInstance> {
    let q_sq = q_sq_from_sides(l, b)?;
    let p_sq = p_sq_from_sides(l, b)?;
    let instance = TriangleInstance {
        l: l.clone(),
        b: b.clone(),
        cos_theta: cos_theta(l, b)?,
        cp_x: cp_x(l, b)?,
        q_sq,
        p_sq,
    };
    if !cubic_residual(l, b, &instance.p_sq, &instance.q_sq).is_zero() {
        return Err(Error::IdentityMismatch("cubic relation"));
    }
    Ok(instance)
}

/// Triangle rebuilt from `(q, t)` with certified enclosures of its lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub q: Rat,
    pub t: Isolation,
    pub b: RatInterval,
    pub l: RatInterval,
    /// Enclosure of the base-vertex bisector recomputed from `b` and `l`.
    pub p: RatInterval,
    /// `max |p - 1|` over the enclosure.
    pub p_deviation: Rat,
}

const MAX_TIGHTENINGS: u32 = 24;

/// Rebuilds the triangle with `p = 1` from apex bisector `q` and the root box
/// for `t = l/b`: `b = 2q / sqrt(4t^2 - 1)`, `l = t b`.
///
/// `b`, `l` and the recomputed `p` are enclosed in intervals of width at most
/// `eps`; the `p` enclosure must contain `1`.
pub fn reconstruct(q: &Rat, t_box: &Isolation, eps: &Rat) -> Result<Reconstruction> {
    if !q.is_positive() {
        return Err(Error::InvalidLength);
    }
    if !eps.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let half = rat(1, 2);
    if t_box.lo() < &half || (t_box.lo() == &half && t_box.is_exact()) {
        return Err(Error::DegenerateTriangle);
    }
    let one = RatInterval::point(Rat::one());
    let two = Rat::from(2);
    let four = RatInterval::point(Rat::from(4));
    let mut tol = eps * rat(1, 16);
    for _ in 0..MAX_TIGHTENINGS {
        let t = refine(t_box, &tol)?;
        let t_iv = RatInterval::new(t.lo().clone(), t.hi().clone())?;
        let disc = &(&four * &t_iv.square()) - &one;
        if !disc.is_positive() {
            tol = &tol * rat(1, 16);
            continue;
        }
        let root = disc.sqrt(&tol)?;
        let b = RatInterval::point(q * &two).checked_div(&root)?;
        let l = &t_iv * &b;
        let two_l = &l * &two;
        let b_plus_l = &b + &l;
        let p_sq = (&(&b.square() * &l) * &(&b + &two_l)).checked_div(&b_plus_l.square())?;
        let p = p_sq.sqrt(&tol)?;
        if &b.width() <= eps && &l.width() <= eps && &p.width() <= eps {
            if !p.contains(&Rat::one()) {
                return Err(Error::RootMismatch);
            }
            let p_deviation = p.max_deviation(&Rat::one());
            return Ok(Reconstruction { q: q.clone(), t, b, l, p, p_deviation });
        }
        tol = &tol * rat(1, 16);
    }
    Err(Error::PrecisionExceeded)
}

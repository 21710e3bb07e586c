//! Sturm-certified real-root isolation and exact bisection refinement.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::irreducibility::rational_roots;
use crate::polynomial::{cauchy_bound, sturm_chain, sturm_count, Endpoint, QPoly};
use crate::rational::{rat, Rat};

/// An interval holding exactly one real root of `poly`.
///
/// Either `lo < hi` with `poly` of opposite nonzero signs at the ends, or
/// `lo == hi` for a root known exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isolation {
    lo: Rat,
    hi: Rat,
    poly: QPoly,
}

impl Isolation {
    pub fn exact(root: Rat, poly: QPoly) -> Isolation {
        Isolation { lo: root.clone(), hi: root, poly }
    }

    /// Checks the bracketing invariant before accepting the interval.
    pub fn bracket(lo: Rat, hi: Rat, poly: QPoly) -> Result<Isolation> {
        if lo >= hi {
            return Err(Error::InvalidInterval);
        }
        let (slo, shi) = (poly.sign_at(&lo), poly.sign_at(&hi));
        if slo == 0 || shi == 0 {
            return Err(Error::EndpointIsRoot);
        }
        if slo == shi {
            return Err(Error::RootMismatch);
        }
        Ok(Isolation { lo, hi, poly })
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// Square-free polynomial whose root is isolated.
    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn exact_value(&self) -> Option<&Rat> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        self.lo.midpoint(&self.hi)
    }

    /// Whether the isolated root is also a root of `other`, decided by exact
    /// evaluation (exact boxes) or by a sign change across the box.
    ///
    /// For non-exact boxes this is only conclusive when `other` has at most one
    /// root in the box, which callers arrange by refining first.
    pub fn is_root_of(&self, other: &QPoly) -> bool {
        if self.is_exact() {
            return other.eval(&self.lo).is_zero();
        }
        let (a, b) = (other.sign_at(&self.lo), other.sign_at(&self.hi));
        a != 0 && b != 0 && a != b
    }

    /// Re-runs the Sturm count: exactly one root of `poly` in the box.
    pub fn is_certified(&self) -> bool {
        if self.is_exact() {
            return self.poly.eval(&self.lo).is_zero();
        }
        let Ok(chain) = sturm_chain(&self.poly) else { return false };
        matches!(
            sturm_count(&chain, &self.lo.clone().into(), &self.hi.clone().into()),
            Ok(1)
        )
    }
}

/// Isolates every root of `sf` in `(lo, hi)`; neither endpoint may be a root.
fn isolate_between(sf: &QPoly, chain: &[QPoly], lo: Rat, hi: Rat) -> Result<Vec<Isolation>> {
    let mut out = Vec::new();
    let mut pending = vec![(lo, hi)];
    while let Some((lo, hi)) = pending.pop() {
        let count = sturm_count(chain, &lo.clone().into(), &hi.clone().into())?;
        match count {
            0 => {}
            1 => out.push(Isolation::bracket(lo, hi, sf.clone())?),
            _ => {
                let mid = lo.midpoint(&hi);
                if sf.eval(&mid).is_zero() {
                    let (left, right) = separate_exact_root(sf, chain, &lo, &mid, &hi)?;
                    out.push(Isolation::exact(mid, sf.clone()));
                    pending.push((lo, left));
                    pending.push((right, hi));
                } else {
                    pending.push((lo, mid.clone()));
                    pending.push((mid, hi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Non-root points `left < root < right` inside `(lo, hi)` with no other root between them.
fn separate_exact_root(sf: &QPoly, chain: &[QPoly], lo: &Rat, root: &Rat, hi: &Rat) -> Result<(Rat, Rat)> {
    let mut delta = (hi - lo) * rat(1, 4);
    loop {
        let left = root - &delta;
        let right = root + &delta;
        if !sf.eval(&left).is_zero()
            && !sf.eval(&right).is_zero()
            && sturm_count(chain, &left.clone().into(), &right.clone().into())? == 1
        {
            return Ok((left, right));
        }
        delta = delta * rat(1, 2);
    }
}

/// Replaces boxes that contain a rational root of `sf` with exact hits.
fn promote_rational(sf: &QPoly, boxes: Vec<Isolation>) -> Result<Vec<Isolation>> {
    let rationals = rational_roots(sf)?;
    Ok(boxes
        .into_iter()
        .map(|iv| {
            if iv.is_exact() {
                return iv;
            }
            match rationals.iter().find(|r| **r > iv.lo && **r < iv.hi) {
                Some(r) => Isolation::exact(r.clone(), iv.poly),
                None => iv,
            }
        })
        .collect())
}

fn prepare(p: &QPoly) -> Result<(QPoly, Vec<QPoly>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let sf = p.square_free_part()?;
    let chain = sturm_chain(&sf)?;
    Ok((sf, chain))
}

/// Disjoint isolating boxes for all distinct real roots of `p`, ascending.
/// Rational roots come back as exact (zero-width) boxes.
pub fn isolate_real_roots(p: &QPoly) -> Result<Vec<Isolation>> {
    let (sf, chain) = prepare(p)?;
    let bound = cauchy_bound(&sf)?;
    let boxes = isolate_between(&sf, &chain, -&bound, bound)?;
    promote_rational(&sf, boxes)
}

/// Bisects until the box is at most `eps` wide. Exact boxes are returned as is;
/// a midpoint that hits the root exactly collapses the box.
pub fn refine(iv: &Isolation, eps: &Rat) -> Result<Isolation> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    if iv.is_exact() {
        return Ok(iv.clone());
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let lo_sign = iv.poly.sign_at(&lo);
    while &(&hi - &lo) > eps {
        let mid = lo.midpoint(&hi);
        let s = iv.poly.sign_at(&mid);
        if s == 0 {
            return Ok(Isolation::exact(mid, iv.poly.clone()));
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Isolation { lo, hi, poly: iv.poly.clone() })
}

/// The unique root above `1/2`, the only one compatible with `2l > b`.
///
/// Fails with [`Error::GeometricRootAnomaly`] unless the Sturm count on
/// `(1/2, +inf)` is exactly one.
pub fn geometric_root(fq: &QPoly) -> Result<Isolation> {
    let (sf, chain) = prepare(fq)?;
    let half = rat(1, 2);
    let count = match sturm_count(&chain, &half.clone().into(), &Endpoint::PosInfinity) {
        Ok(c) => c,
        Err(Error::EndpointIsRoot) => return Err(Error::GeometricRootAnomaly { count: 0 }),
        Err(e) => return Err(e),
    };
    if count != 1 {
        return Err(Error::GeometricRootAnomaly { count });
    }
    let mut bound = cauchy_bound(&sf)?;
    if bound <= half {
        bound = Rat::one();
    }
    let boxes = isolate_between(&sf, &chain, half, bound)?;
    let mut boxes = promote_rational(&sf, boxes)?;
    match boxes.len() {
        1 => Ok(boxes.pop().expect("one box")),
        n => Err(Error::GeometricRootAnomaly { count: n }),
    }
}

/// Sturm count of `fq` on `(1/2, +inf)`.
pub fn roots_above_half(fq: &QPoly) -> Result<usize> {
    let (_, chain) = prepare(fq)?;
    sturm_count(&chain, &rat(1, 2).into(), &Endpoint::PosInfinity)
}

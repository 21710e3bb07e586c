//! Straightedge-and-compass verdicts for the shape ratio `t = l/b`.
//!
//! `t` is constructible over the base field iff its minimal polynomial has
//! power-of-two degree. The cubic bounds that degree by 3, so the verdict is
//! decided by whether the degree is 3.

use alloc::vec::Vec;

use crate::bivariate::{bisector_cubic, general_cubic, BiPoly};
use crate::error::{Error, Result};
use crate::irreducibility::{
    rational_root_certificate, rational_roots, symbolic_irreducibility, verify_certificate, Irreducibility,
    RootSearchCertificate,
};
use crate::polynomial::QPoly;
use crate::rational::{rat, Rat};
use crate::roots::{geometric_root, refine, Isolation};

/// How the apex bisector `q` is given (the base-vertex bisector is `p = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSpec {
    Rational(Rat),
    /// `q` is taken to be transcendental over `Q`; this is a declaration, not
    /// something that can be checked.
    SymbolicTranscendental,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Constructible,
    NotConstructible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `t` itself is rational.
    RationalRoot(Rat),
    /// Primitive quadratic factor of `f_q` having `t` as a root.
    Quadratic { factor: QPoly, root: Isolation },
    /// The cubic has no root in the base field.
    Irreducible(RootSearchCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub q_spec: QSpec,
    /// `[K(t) : K]` for the base field `K`.
    pub degree: u8,
    pub decision: Decision,
    pub witness: Witness,
    /// Isolating box for `t`; absent in symbolic mode.
    pub root_box: Option<Isolation>,
}

/// Default width of the reported root box.
pub fn default_eps() -> Rat {
    rat(1, 1_000_000_000_000)
}

fn decide(degree: u8) -> Decision {
    if degree.is_power_of_two() {
        Decision::Constructible
    } else {
        Decision::NotConstructible
    }
}

/// Degree of `t` over `Q` together with a witness, given `f_q` and the box for `t`.
pub fn minimal_degree(fq: &QPoly, t: &Isolation) -> Result<(u8, Witness)> {
    if let Some(v) = t.exact_value() {
        if !fq.eval(v).is_zero() {
            return Err(Error::RootMismatch);
        }
        return Ok((1, Witness::RationalRoot(v.clone())));
    }
    let sf = fq.square_free_part()?;
    if t.poly() != &sf || !t.is_certified() {
        return Err(Error::RootMismatch);
    }
    let rationals = rational_roots(fq)?;
    if let Some(r) = rationals.iter().find(|r| *r >= t.lo() && *r <= t.hi()) {
        return Ok((1, Witness::RationalRoot(r.clone())));
    }
    let mut residual = fq.clone();
    for r in &rationals {
        loop {
            let (quot, rem) = residual.divrem(&QPoly::linear_factor(r))?;
            if !rem.is_zero() {
                break;
            }
            residual = quot;
        }
    }
    match residual.degree() {
        Some(3) => Ok((3, Witness::Irreducible(rational_root_certificate(fq)?))),
        Some(2) if t.is_root_of(&residual) => {
            let (_, factor) = residual.content_primitive()?;
            Ok((2, Witness::Quadratic { factor, root: t.clone() }))
        }
        Some(d) if d > 3 => Err(Error::UnsupportedDegree(d)),
        _ => Err(Error::RootMismatch),
    }
}

fn verdict_for(q_spec: QSpec, fq: &QPoly, eps: &Rat) -> Result<Verdict> {
    let t = refine(&geometric_root(fq)?, eps)?;
    let (degree, witness) = minimal_degree(fq, &t)?;
    Ok(Verdict {
        q_spec,
        degree,
        decision: decide(degree),
        witness,
        root_box: Some(t),
    })
}

/// Verdict with the root box refined to [`default_eps`].
pub fn analyze(q_spec: &QSpec) -> Result<Verdict> {
    analyze_with(q_spec, &default_eps())
}

pub fn analyze_with(q_spec: &QSpec, eps: &Rat) -> Result<Verdict> {
    match q_spec {
        QSpec::Rational(q) => {
            if !q.is_positive() {
                return Err(Error::InvalidLength);
            }
            verdict_for(q_spec.clone(), &bisector_cubic().eval_q(q), eps)
        }
        QSpec::SymbolicTranscendental => {
            let (degree, witness) = match symbolic_irreducibility(&bisector_cubic())? {
                Irreducibility::Irreducible(cert) => (3, Witness::Irreducible(cert)),
                Irreducibility::Reducible { root, .. } => (1, Witness::RationalRoot(root)),
            };
            Ok(Verdict {
                q_spec: q_spec.clone(),
                degree,
                decision: decide(degree),
                witness,
                root_box: None,
            })
        }
    }
}

/// Verdict for an unnormalized bisector pair `(p, q)` through the general cubic.
/// Only `q/p` matters; the result carries `q_spec = Rational(q/p)`.
pub fn analyze_pair(p: &Rat, q: &Rat, eps: &Rat) -> Result<Verdict> {
    if !q.is_positive() {
        return Err(Error::InvalidLength);
    }
    let fq = general_cubic(p)?.eval_q(q);
    verdict_for(QSpec::Rational(q.checked_div(p)?), &fq, eps)
}

/// Rational-root instances: `t = 1/(2 - s^2)` and `q = s(t + 1)/2`, which make
/// `4q^2 = (t + 1)^2 (2t - 1)/t` and hence `f_q(t) = 0`.
pub fn constructible_family(s: &Rat) -> Result<(Rat, Rat)> {
    let two = Rat::from(2);
    if !s.is_positive() || s.square() >= two {
        return Err(Error::DegenerateFamily);
    }
    let t = (&two - s.square()).recip()?;
    let q = s * (&t + Rat::one()) * rat(1, 2);
    Ok((q, t))
}

/// Re-checks a verdict's witness from scratch.
pub fn verify_verdict(v: &Verdict) -> bool {
    let expected = decide(v.degree);
    if expected != v.decision {
        return false;
    }
    let fq = match &v.q_spec {
        QSpec::Rational(q) => Some(bisector_cubic().eval_q(q)),
        QSpec::SymbolicTranscendental => None,
    };
    match (&v.witness, &fq) {
        (Witness::RationalRoot(t), Some(f)) => {
            v.degree == 1 && f.eval(t).is_zero() && t > &rat(1, 2)
        }
        (Witness::RationalRoot(t), None) => v.degree == 1 && bisector_cubic().subst_x(t).is_zero(),
        (Witness::Quadratic { factor, root }, Some(f)) => {
            let divides = f.divrem(factor).map(|(_, r)| r.is_zero()).unwrap_or(false);
            let in_box = v.root_box.as_ref().is_some_and(|b| b.is_root_of(factor) && b == root);
            v.degree == 2 && factor.degree() == Some(2) && divides && in_box
        }
        (Witness::Irreducible(cert), fq) => {
            let poly: BiPoly = match fq {
                Some(f) => BiPoly::from_x_poly(f),
                None => bisector_cubic(),
            };
            v.degree == 3
                && verify_certificate(&poly, cert)
                && cert.candidates.iter().all(|c| !c.residual.is_zero())
        }
        _ => false,
    }
}

/// Family members for `s = start, start + step, ...` up to `end`, skipping `s = 0`.
pub fn family_range(start: &Rat, end: &Rat, step: &Rat) -> Result<Vec<(Rat, Rat, Rat)>> {
    if !step.is_positive() || start.is_negative() || start > end || end.square() >= Rat::from(2) {
        return Err(Error::DegenerateFamily);
    }
    let mut out = Vec::new();
    let mut s = start.clone();
    while &s <= end {
        if !s.is_zero() {
            let (q, t) = constructible_family(&s)?;
            out.push((s.clone(), q, t));
        }
        s += step;
    }
    Ok(out)
}

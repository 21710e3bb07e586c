//! Root searches that decide irreducibility of cubics (and quadratics).
//!
//! Over `Q` this is the rational-root theorem. Over the function field
//! `Q(q)` with `q` transcendental the same divisor criterion runs in the UFD
//! `Q[q]`: a root `g/h` in lowest terms has `g` dividing the constant
//! coefficient and `h` dividing the leading one. When both are nonzero
//! constants the only candidates are rational constants, and those are
//! pinned down by comparing coefficients of powers of `q`.
//!
//! Every conclusion is returned as a [`RootSearchCertificate`] holding the
//! exact polynomials of each step, so it can be re-checked independently.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::One;

use crate::bivariate::{bisector_cubic, BiPoly};
use crate::divisors::divisors;
use crate::error::{Error, Result};
use crate::polynomial::QPoly;
use crate::rational::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// `q` is a concrete rational; the cubic lives in `Q[X]`.
    RationalQ,
    /// `q` is declared transcendental; the cubic lives in `Q(q)[X]`.
    SymbolicQ,
}

/// A tested root `g/h` and the exact value of the polynomial there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub g: QPoly,
    pub h: QPoly,
    /// `F(g/h)`, a polynomial in `q` (a constant in rational mode).
    pub residual: QPoly,
}

impl Candidate {
    pub fn value(&self) -> Result<Rat> {
        let g = constant_of(&self.g)?;
        let h = constant_of(&self.h)?;
        g.checked_div(&h)
    }
}

fn constant_of(p: &QPoly) -> Result<Rat> {
    if p.is_constant() {
        Ok(p.constant_term())
    } else {
        Err(Error::UnsupportedCoefficients)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    NoRootFound,
    /// The largest root found.
    RootFound(Rat),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepTag {
    /// Content in `Q[q]` is a unit, so irreducibility over `Q[q]` and `Q(q)` agree.
    Primitivity,
    /// The numerator `g` divides the constant coefficient; absorb units so `g = 1`.
    NumeratorDivisor,
    /// The denominator `h` divides the leading coefficient; `alpha = 1/h` gives the h-equation.
    DenominatorDivisor,
    /// Comparing `q`-degrees in the regrouped h-equation forces `h` to be constant.
    DegreeArgument,
    /// With `h = c` constant the coefficients of `q` cannot all vanish.
    ConstantCase,
    /// Rational-root candidates `±(divisors of a_0)/(divisors of a_n)`.
    RationalCandidates,
    /// Each candidate was evaluated exactly.
    CandidateEvaluation,
    /// A cubic (or quadratic) without roots in the base field is irreducible.
    LowDegreeCriterion,
}

impl StepTag {
    pub fn as_str(self) -> &'static str {
        match self {
            StepTag::Primitivity => "primitivity",
            StepTag::NumeratorDivisor => "numerator_divisor",
            StepTag::DenominatorDivisor => "denominator_divisor",
            StepTag::DegreeArgument => "degree_argument",
            StepTag::ConstantCase => "constant_case",
            StepTag::RationalCandidates => "rational_candidates",
            StepTag::CandidateEvaluation => "candidate_evaluation",
            StepTag::LowDegreeCriterion => "low_degree_criterion",
        }
    }
}

/// A polynomial recorded in a certificate, tagged with its variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepPoly {
    /// Univariate in `q`.
    InQ(QPoly),
    /// Univariate in `X`.
    InX(QPoly),
    /// Univariate in `h` (or in the constant `c`).
    InH(QPoly),
    /// In `Q[q][X]`.
    InQX(BiPoly),
    /// In `Q[q][h]`.
    InQH(BiPoly),
}

impl StepPoly {
    pub fn render(&self) -> alloc::string::String {
        match self {
            StepPoly::InQ(p) => p.render("q"),
            StepPoly::InX(p) => p.render("X"),
            StepPoly::InH(p) => p.render("h"),
            StepPoly::InQX(p) => p.render("X", "q"),
            StepPoly::InQH(p) => p.render("h", "q"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub tag: StepTag,
    pub polynomials: Vec<(&'static str, StepPoly)>,
    /// Exact quantity whose nonvanishing (or vanishing) the step relies on.
    pub residual: Option<StepPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSearchCertificate {
    pub mode: SearchMode,
    pub candidates: Vec<Candidate>,
    pub conclusion: Conclusion,
    pub narrative: Vec<ProofStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(RootSearchCertificate),
    Reducible { root: Rat, certificate: RootSearchCertificate },
}

/// Integer coefficients of the primitive part with every factor `X` removed;
/// also returns whether `0` was a root.
fn primitive_without_zero_roots(p: &QPoly) -> Result<(Vec<BigInt>, bool)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut ints = p.primitive_integer_coeffs()?;
    let zeros = ints.iter().take_while(|c| c.sign() == Sign::NoSign).count();
    ints.drain(..zeros);
    Ok((ints, zeros > 0))
}

/// Signed numerator/denominator pairs `(g, h)` in lowest terms with
/// `g | a_0` and `h | a_n`, ordered by `h` then `g`.
fn candidate_pairs(ints: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let (Some(a0), Some(an)) = (ints.first(), ints.last()) else {
        return Vec::new();
    };
    if ints.len() < 2 {
        return Vec::new();
    }
    let gs = divisors(a0.magnitude());
    let hs = divisors(an.magnitude());
    let mut out = Vec::new();
    for h in &hs {
        let h = BigInt::from(h.clone());
        for g in &gs {
            let g = BigInt::from(g.clone());
            if !g.gcd(&h).is_one() {
                continue;
            }
            out.push((-g.clone(), h.clone()));
            out.push((g, h.clone()));
        }
    }
    out
}

/// Every rational the rational-root theorem allows for `p`, ascending.
/// Includes `0` when it is a root.
pub fn rational_root_candidates(p: &QPoly) -> Result<Vec<Rat>> {
    let (ints, zero_root) = primitive_without_zero_roots(p)?;
    let mut out: Vec<Rat> = candidate_pairs(&ints)
        .into_iter()
        .map(|(g, h)| Rat::new(g, h))
        .collect::<Result<_>>()?;
    if zero_root {
        out.push(Rat::zero());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All rational roots of `p`, ascending and without repetition.
pub fn rational_roots(p: &QPoly) -> Result<Vec<Rat>> {
    Ok(rational_root_candidates(p)?
        .into_iter()
        .filter(|r| p.eval(r).is_zero())
        .collect())
}

/// Rational-root theorem certificate for a polynomial in `Q[X]` of degree 2 or 3.
pub fn rational_root_certificate(p: &QPoly) -> Result<RootSearchCertificate> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if degree > 3 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let (content, primitive) = p.content_primitive()?;
    let (ints, zero_root) = primitive_without_zero_roots(p)?;
    let mut candidates: Vec<Candidate> = candidate_pairs(&ints)
        .into_iter()
        .map(|(g, h)| {
            let value = Rat::new(g.clone(), h.clone())?;
            Ok(Candidate {
                g: QPoly::constant(Rat::from(g)),
                h: QPoly::constant(Rat::from(h)),
                residual: QPoly::constant(p.eval(&value)),
            })
        })
        .collect::<Result<_>>()?;
    if zero_root {
        candidates.push(Candidate {
            g: QPoly::zero(),
            h: QPoly::one(),
            residual: QPoly::zero(),
        });
    }
    let mut roots = Vec::new();
    for c in &candidates {
        if c.residual.is_zero() {
            roots.push(c.value()?);
        }
    }
    let conclusion = match roots.iter().max() {
        Some(r) => Conclusion::RootFound(r.clone()),
        None => Conclusion::NoRootFound,
    };
    let lead = QPoly::constant(Rat::from(ints.last().cloned().unwrap_or_default()));
    let constant = QPoly::constant(Rat::from(ints.first().cloned().unwrap_or_default()));
    let narrative = vec![
        ProofStep {
            tag: StepTag::Primitivity,
            polynomials: vec![("f", StepPoly::InX(p.clone())), ("primitive", StepPoly::InX(primitive))],
            residual: Some(StepPoly::InQ(QPoly::constant(content))),
        },
        ProofStep {
            tag: StepTag::RationalCandidates,
            polynomials: vec![("a_0", StepPoly::InQ(constant)), ("a_n", StepPoly::InQ(lead))],
            residual: None,
        },
        ProofStep {
            tag: StepTag::CandidateEvaluation,
            polynomials: candidates
                .iter()
                .map(|c| ("f(g/h)", StepPoly::InQ(c.residual.clone())))
                .collect(),
            residual: None,
        },
        ProofStep {
            tag: StepTag::LowDegreeCriterion,
            polynomials: vec![("f", StepPoly::InX(p.clone()))],
            residual: None,
        },
    ];
    Ok(RootSearchCertificate {
        mode: SearchMode::RationalQ,
        candidates,
        conclusion,
        narrative,
    })
}

/// Splits the h-equation `R(h) = 0` as `h^(j+1) * U(h) = L(h)`, where `L` has
/// `q`-free coefficients and degree at most `j`.
///
/// Returns `(j, U, L)`. Valid whenever the `h^0` coefficient of `R` is a nonzero
/// constant, which the coefficient gate guarantees.
fn regroup_h_equation(reversed: &BiPoly) -> (usize, BiPoly, QPoly) {
    let coeffs = reversed.xcoeffs();
    let j = coeffs
        .iter()
        .take_while(|c| c.is_constant())
        .count()
        .saturating_sub(1);
    let low = QPoly::new(coeffs[..=j].iter().map(QPoly::constant_term).collect());
    let upper = BiPoly::new(coeffs[j + 1..].iter().map(|c| -c).collect());
    (j, upper, low)
}

/// Divisor search for roots of `F` in `Q(q)`.
///
/// Only the case where the leading and constant `X`-coefficients are nonzero
/// rational constants is supported; then every root is a rational constant.
pub fn fraction_field_root_search(f: &BiPoly) -> Result<RootSearchCertificate> {
    let n = f.degree_x().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lead = f.x_coeff(n);
    let constant = f.x_coeff(0);
    if !lead.is_constant() || constant.is_zero() || !constant.is_constant() {
        return Err(Error::UnsupportedCoefficients);
    }
    let content = f.content_x()?;

    // alpha route: a constant root must kill the top power of q.
    let top = f.degree_q().unwrap_or(0);
    let forcing_alpha = f.q_coeff(top);
    let forced_alpha = if forcing_alpha.is_constant() {
        Vec::new()
    } else {
        rational_roots(&forcing_alpha)?
    };
    let candidates: Vec<Candidate> = forced_alpha
        .iter()
        .map(|a| {
            let (g, h) = if a.is_zero() {
                (QPoly::zero(), QPoly::one())
            } else {
                (QPoly::one(), QPoly::constant(a.recip().expect("nonzero")))
            };
            Candidate { g, h, residual: f.subst_x(a) }
        })
        .collect();
    let alpha_roots: Vec<Rat> = candidates
        .iter()
        .filter(|c| c.residual.is_zero())
        .map(Candidate::value)
        .collect::<Result<_>>()?;

    // h route: alpha = 1/h, R(h) = h^n F(1/h), regrouped to read off degrees.
    let reversed = f.reversed();
    let (split, upper, low) = regroup_h_equation(&reversed);
    let negated = BiPoly::new(reversed.xcoeffs().iter().map(|c| -c).collect());
    let forcing_h = negated.q_coeff(top);
    let forced_h = if forcing_h.is_constant() {
        Vec::new()
    } else {
        rational_roots(&forcing_h)?
    };
    let h_residuals: Vec<(Rat, QPoly)> = forced_h
        .iter()
        .map(|c| (c.clone(), negated.subst_x(c)))
        .collect();
    let mut h_roots: Vec<Rat> = h_residuals
        .iter()
        .filter(|(c, r)| !c.is_zero() && r.is_zero())
        .map(|(c, _)| c.recip().expect("nonzero"))
        .collect();
    h_roots.sort();
    let mut sorted_alpha = alpha_roots.clone();
    sorted_alpha.sort();
    if sorted_alpha != h_roots {
        return Err(Error::IdentityMismatch("root search routes"));
    }

    let conclusion = match sorted_alpha.last() {
        Some(r) => Conclusion::RootFound(r.clone()),
        None => Conclusion::NoRootFound,
    };
    let constant_case_residual = match h_residuals.as_slice() {
        [(_, r)] => Some(StepPoly::InQ(r.clone())),
        _ => None,
    };
    let mut constant_case_polys = vec![
        ("h_equation", StepPoly::InQH(negated.clone())),
        ("forcing", StepPoly::InH(forcing_h)),
    ];
    for (c, _) in &h_residuals {
        constant_case_polys.push(("forced_c", StepPoly::InH(QPoly::constant(c.clone()))));
    }
    let split_power = QPoly::monomial(Rat::one(), split + 1);
    let narrative = vec![
        ProofStep {
            tag: StepTag::Primitivity,
            polynomials: vec![("f", StepPoly::InQX(f.clone()))],
            residual: Some(StepPoly::InQ(content)),
        },
        ProofStep {
            tag: StepTag::NumeratorDivisor,
            polynomials: vec![("constant", StepPoly::InQ(constant)), ("g", StepPoly::InQ(QPoly::one()))],
            residual: None,
        },
        ProofStep {
            tag: StepTag::DenominatorDivisor,
            polynomials: vec![("leading", StepPoly::InQ(lead)), ("h_equation", StepPoly::InQH(reversed))],
            residual: None,
        },
        ProofStep {
            tag: StepTag::DegreeArgument,
            polynomials: vec![
                ("power", StepPoly::InH(split_power)),
                ("upper", StepPoly::InQH(upper)),
                ("lower", StepPoly::InH(low)),
            ],
            residual: None,
        },
        ProofStep {
            tag: StepTag::ConstantCase,
            polynomials: constant_case_polys,
            residual: constant_case_residual,
        },
    ];
    Ok(RootSearchCertificate {
        mode: SearchMode::SymbolicQ,
        candidates,
        conclusion,
        narrative,
    })
}

/// Decides irreducibility of `F` over `Q(q)` for `deg_X F` in `{2, 3}`.
pub fn symbolic_irreducibility(f: &BiPoly) -> Result<Irreducibility> {
    let degree = f.degree_x().ok_or(Error::ZeroPolynomial)?;
    if !(2..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    if f.content_x()? != QPoly::one() {
        return Err(Error::NotPrimitive);
    }
    let certificate = fraction_field_root_search(f)?;
    Ok(match certificate.conclusion.clone() {
        Conclusion::NoRootFound => Irreducibility::Irreducible(certificate),
        Conclusion::RootFound(root) => Irreducibility::Reducible { root, certificate },
    })
}

/// The constant case of the bisector cubic: `c^2 (4q^2 + c) - (3c + 2)` as a
/// polynomial in `q`. It is never zero for rational `c`.
pub fn h_equation_check(c: &Rat) -> QPoly {
    let reversed = bisector_cubic().reversed();
    -reversed.subst_x(c)
}

/// Independent re-check of a certificate: every stored residual is recomputed
/// from `f`, and the conclusion must match the recomputed residuals.
pub fn verify_certificate(f: &BiPoly, cert: &RootSearchCertificate) -> bool {
    let mut found = Vec::new();
    for c in &cert.candidates {
        let Ok(value) = c.value() else { return false };
        if f.subst_x(&value) != c.residual {
            return false;
        }
        if c.residual.is_zero() {
            found.push(value);
        }
    }
    match (&cert.conclusion, found.iter().max()) {
        (Conclusion::NoRootFound, None) => true,
        (Conclusion::RootFound(r), Some(m)) => r == m,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(rational_roots(&p(&[-1, -4, 3, 2])).unwrap(), [Rat::one()]);
        assert!(rational_roots(&p(&[-1, -16, 3, 2])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[-1, -1, 3, 2])).unwrap(), [rat(-1, 2)]);
        assert_eq!(rational_roots(&p(&[5])), Err(Error::ConstantPolynomial));
        // X^2 (2X - 1)
        assert_eq!(rational_roots(&p(&[0, 0, -1, 2])).unwrap(), [Rat::zero(), rat(1, 2)]);
    }

    #[test]
    fn q2_candidates_all_nonzero() {
        let f2 = p(&[-1, -16, 3, 2]);
        let candidates = rational_root_candidates(&f2).unwrap();
        assert_eq!(candidates, [rat(-1, 1), rat(-1, 2), rat(1, 2), rat(1, 1)]);
        let values: Vec<Rat> = candidates.iter().map(|c| f2.eval(c)).collect();
        assert_eq!(values, [rat(16, 1), rat(15, 2), rat(-8, 1), rat(-12, 1)]);
    }

    #[test]
    fn bisector_cubic_has_no_root_over_function_field() {
        let cert = fraction_field_root_search(&bisector_cubic()).unwrap();
        assert_eq!(cert.conclusion, Conclusion::NoRootFound);
        assert_eq!(cert.mode, SearchMode::SymbolicQ);
        // the q^2 coefficient -4c forces c = 0, and F(0) = -1
        assert_eq!(cert.candidates.len(), 1);
        assert_eq!(cert.candidates[0].value().unwrap(), Rat::zero());
        assert_eq!(cert.candidates[0].residual, p(&[-1]));
        let tags: Vec<_> = cert.narrative.iter().map(|s| s.tag).collect();
        assert_eq!(
            tags,
            [
                StepTag::Primitivity,
                StepTag::NumeratorDivisor,
                StepTag::DenominatorDivisor,
                StepTag::DegreeArgument,
                StepTag::ConstantCase
            ]
        );
        assert!(verify_certificate(&bisector_cubic(), &cert));
    }

    #[test]
    fn certificate_replays_h_equation_chain() {
        let cert = fraction_field_root_search(&bisector_cubic()).unwrap();
        let render = |tag: StepTag, label: &str| {
            let step = cert.narrative.iter().find(|s| s.tag == tag).unwrap();
            step.polynomials.iter().find(|(l, _)| *l == label).unwrap().1.render()
        };
        // 2 + 3h - 4q^2 h^2 - h^3 = 0
        assert_eq!(render(StepTag::DenominatorDivisor, "h_equation"), "(-1)*h^3 + (-4*q^2)*h^2 + 3*h + 2");
        // h^2 (4q^2 + h) = 3h + 2
        assert_eq!(render(StepTag::DegreeArgument, "power"), "h^2");
        assert_eq!(render(StepTag::DegreeArgument, "upper"), "h + 4*q^2");
        assert_eq!(render(StepTag::DegreeArgument, "lower"), "3*h + 2");
        // c^2 (4q^2 + c) - (3c + 2) at the forced c = 0 is -2
        let constant_case = cert.narrative.last().unwrap();
        assert_eq!(constant_case.residual, Some(StepPoly::InQ(p(&[-2]))));
        assert_eq!(render(StepTag::ConstantCase, "forcing"), "4*h^2");
    }

    #[test]
    fn q_free_quadratic_has_root() {
        let f = BiPoly::from_x_poly(&p(&[-1, 1, 2]));
        let cert = fraction_field_root_search(&f).unwrap();
        assert_eq!(cert.conclusion, Conclusion::RootFound(rat(1, 2)));
        assert!(verify_certificate(&f, &cert));
    }

    #[test]
    fn non_constant_coefficients_are_rejected() {
        let f = BiPoly::new(vec![p(&[0, -1]), p(&[1]), p(&[1])]);
        assert_eq!(fraction_field_root_search(&f), Err(Error::UnsupportedCoefficients));
        let x2_plus_q = BiPoly::new(vec![p(&[0, 1]), QPoly::zero(), p(&[1])]);
        assert_eq!(symbolic_irreducibility(&x2_plus_q), Err(Error::UnsupportedCoefficients));
    }

    #[test]
    fn symbolic_irreducibility_examples() {
        match symbolic_irreducibility(&bisector_cubic()).unwrap() {
            Irreducibility::Irreducible(cert) => assert_eq!(cert.narrative.len(), 5),
            other => panic!("{other:?}"),
        }
        let lifted = BiPoly::from_x_poly(&p(&[-1, -1, 3, 2]));
        match symbolic_irreducibility(&lifted).unwrap() {
            Irreducibility::Reducible { root, .. } => assert_eq!(root, rat(-1, 2)),
            other => panic!("{other:?}"),
        }
        let not_primitive = BiPoly::new(vec![p(&[0, 1]), p(&[0, 1]), p(&[0, 1])]);
        assert_eq!(symbolic_irreducibility(&not_primitive), Err(Error::NotPrimitive));
        let quartic = BiPoly::from_x_poly(&p(&[1, 0, 0, 0, 1]));
        assert_eq!(symbolic_irreducibility(&quartic), Err(Error::UnsupportedDegree(4)));
    }

    #[test]
    fn h_equation_examples() {
        assert_eq!(h_equation_check(&Rat::zero()), p(&[-2]));
        assert_eq!(h_equation_check(&Rat::one()), p(&[-4, 0, 4]));
        assert_eq!(h_equation_check(&rat(-1, 1)), p(&[0, 0, 4]));
    }

    #[test]
    fn rational_certificate_for_q2() {
        let f2 = p(&[-1, -16, 3, 2]);
        let cert = rational_root_certificate(&f2).unwrap();
        assert_eq!(cert.conclusion, Conclusion::NoRootFound);
        assert_eq!(cert.candidates.len(), 4);
        assert!(cert.candidates.iter().all(|c| !c.residual.is_zero()));
        assert!(verify_certificate(&BiPoly::from_x_poly(&f2), &cert));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let f2 = p(&[-1, -16, 3, 2]);
        let mut cert = rational_root_certificate(&f2).unwrap();
        cert.candidates[0].residual = p(&[1]);
        assert!(!verify_certificate(&BiPoly::from_x_poly(&f2), &cert));
    }

    fn arb_cubic() -> impl Strategy<Value = QPoly> {
        (1i64..30, -30i64..30, -30i64..30, -30i64..30)
            .prop_map(|(a3, a2, a1, a0)| p(&[a0, a1, a2, a3]))
    }

    proptest! {
        #[test]
        fn rational_roots_are_sound(f in arb_cubic()) {
            let candidates = rational_root_candidates(&f).unwrap();
            let roots = rational_roots(&f).unwrap();
            for c in &candidates {
                prop_assert_eq!(f.eval(c).is_zero(), roots.contains(c));
            }
            for r in &roots {
                let (_, rem) = f.divrem(&QPoly::linear_factor(r)).unwrap();
                prop_assert!(rem.is_zero());
            }
        }

        #[test]
        fn planted_roots_are_found(n in -20i64..20, d in 1i64..12, b in -10i64..10, c in -10i64..10) {
            let r = rat(n, d);
            let f = QPoly::linear_factor(&r) * p(&[c, b, 3]);
            prop_assert!(rational_roots(&f).unwrap().contains(&r));
        }

        #[test]
        fn constants_never_root_the_bisector_cubic(n in -500i64..500, d in 1i64..200) {
            let c = rat(n, d);
            prop_assert!(!bisector_cubic().subst_x(&c).is_zero());
            prop_assert!(!h_equation_check(&c).is_zero());
        }
    }
}

//! Serializable reports. Rationals are written as `"num/den"` strings.

use std::fmt::Write as _;

use bisector_core::constructibility::{Decision, QSpec, Verdict, Witness};
use bisector_core::derivation::DerivationStep;
use bisector_core::geometry::{p_sq_from_q_t, Reconstruction};
use bisector_core::interval::RatInterval;
use bisector_core::irreducibility::{Conclusion, ProofStep, RootSearchCertificate, SearchMode, StepPoly, StepTag};
use bisector_core::{Isolation, QPoly, Rat};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Rat::parse(&text).map(JsonRat).map_err(de::Error::custom)
    }
}

impl From<&Rat> for JsonRat {
    fn from(r: &Rat) -> Self {
        JsonRat(r.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub lo: JsonRat,
    pub hi: JsonRat,
    pub decimal: String,
}

impl RootReport {
    pub fn from_isolation(iv: &Isolation, digits: usize) -> Self {
        RootReport {
            lo: iv.lo().into(),
            hi: iv.hi().into(),
            decimal: iv.midpoint().to_decimal(digits),
        }
    }

    pub fn from_interval(iv: &RatInterval, digits: usize) -> Self {
        RootReport {
            lo: iv.lo().into(),
            hi: iv.hi().into(),
            decimal: iv.midpoint().to_decimal(digits),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum WitnessReport {
    RationalRoot(JsonRat),
    Quadratic {
        /// Ascending coefficients.
        coefficients: Vec<JsonRat>,
        rendered: String,
    },
    Irreducible {
        conclusion: String,
        candidates: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    /// `"symbolic"` or the rational `q`.
    pub q_spec: String,
    pub degree: u8,
    pub decision: String,
    pub witness: WitnessReport,
    pub root: Option<RootReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPoly {
    pub name: String,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub tag: String,
    pub statement: String,
    pub polynomials: Vec<NamedPoly>,
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub g: String,
    pub h: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub mode: String,
    pub conclusion: String,
    pub candidates: Vec<CandidateReport>,
    pub steps: Vec<StepReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub verdict: VerdictReport,
    pub certificate: Option<CertificateReport>,
    pub note: String,
}

pub fn decision_str(d: Decision) -> &'static str {
    match d {
        Decision::Constructible => "constructible",
        Decision::NotConstructible => "not_constructible",
    }
}

fn conclusion_str(c: &Conclusion) -> String {
    match c {
        Conclusion::NoRootFound => "no_root".to_string(),
        Conclusion::RootFound(r) => format!("root {}", r.to_fraction_string()),
    }
}

impl VerdictReport {
    pub fn new(v: &Verdict, digits: usize) -> Self {
        let q_spec = match &v.q_spec {
            QSpec::Rational(q) => q.to_fraction_string(),
            QSpec::SymbolicTranscendental => "symbolic".to_string(),
        };
        let witness = match &v.witness {
            Witness::RationalRoot(t) => WitnessReport::RationalRoot(t.into()),
            Witness::Quadratic { factor, .. } => WitnessReport::Quadratic {
                coefficients: factor.coeffs().iter().map(JsonRat::from).collect(),
                rendered: factor.render("X"),
            },
            Witness::Irreducible(cert) => WitnessReport::Irreducible {
                conclusion: conclusion_str(&cert.conclusion),
                candidates: cert.candidates.len(),
            },
        };
        VerdictReport {
            q_spec,
            degree: v.degree,
            decision: decision_str(v.decision).to_string(),
            witness,
            root: v.root_box.as_ref().map(|b| RootReport::from_isolation(b, digits)),
        }
    }
}

impl AnalyzeReport {
    pub fn new(v: &Verdict, digits: usize) -> Self {
        let certificate = match &v.witness {
            Witness::Irreducible(cert) => Some(CertificateReport::new(cert)),
            _ => None,
        };
        let note = match v.q_spec {
            QSpec::SymbolicTranscendental => {
                "q is taken transcendental over Q; the base field is Q(q)".to_string()
            }
            QSpec::Rational(_) => {
                "q is rational; the base field is Q and the decision uses the degree of t over Q".to_string()
            }
        };
        AnalyzeReport {
            verdict: VerdictReport::new(v, digits),
            certificate,
            note,
        }
    }
}

impl CertificateReport {
    pub fn new(cert: &RootSearchCertificate) -> Self {
        let mode = match cert.mode {
            SearchMode::RationalQ => "rational_q",
            SearchMode::SymbolicQ => "symbolic_q",
        };
        CertificateReport {
            mode: mode.to_string(),
            conclusion: conclusion_str(&cert.conclusion),
            candidates: cert
                .candidates
                .iter()
                .map(|c| CandidateReport {
                    g: c.g.render("q"),
                    h: c.h.render("q"),
                    residual: c.residual.render("q"),
                })
                .collect(),
            steps: cert.narrative.iter().map(StepReport::new).collect(),
        }
    }
}

impl StepReport {
    pub fn new(step: &ProofStep) -> Self {
        StepReport {
            tag: step.tag.as_str().to_string(),
            statement: statement(step),
            polynomials: step
                .polynomials
                .iter()
                .map(|(name, p)| NamedPoly {
                    name: name.to_string(),
                    poly: p.render(),
                })
                .collect(),
            residual: step.residual.as_ref().map(StepPoly::render),
        }
    }
}

/// `a*q^j*var^i` terms of a polynomial in `var` with coefficients in `Q[q]`.
fn render_terms(coeffs: &[QPoly], var: &str, ascending: bool) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    let order: Vec<usize> = if ascending {
        (0..coeffs.len()).collect()
    } else {
        (0..coeffs.len()).rev().collect()
    };
    for i in order {
        let c = &coeffs[i];
        if c.is_zero() {
            continue;
        }
        let power = match i {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{i}")),
        };
        let nonzero: Vec<(usize, &Rat)> = c.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()).collect();
        let (negative, mut factors) = if let [(j, a)] = nonzero.as_slice() {
            let mut f = Vec::new();
            let mag = a.abs();
            if !mag.is_one() || (*j == 0 && power.is_none()) {
                f.push(mag.to_string());
            }
            match j {
                0 => {}
                1 => f.push("q".to_string()),
                _ => f.push(format!("q^{j}")),
            }
            (a.is_negative(), f)
        } else if power.is_none() {
            (false, vec![c.render("q")])
        } else {
            (false, vec![format!("({})", c.render("q"))])
        };
        factors.extend(power);
        terms.push((negative, factors.join("*")));
    }
    let mut out = String::new();
    for (k, (negative, t)) in terms.iter().enumerate() {
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(t);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn lookup<'a>(step: &'a ProofStep, name: &str) -> Option<&'a StepPoly> {
    step.polynomials.iter().find(|(n, _)| *n == name).map(|(_, p)| p)
}

fn univariate(p: Option<&StepPoly>) -> Option<&QPoly> {
    match p? {
        StepPoly::InQ(p) | StepPoly::InX(p) | StepPoly::InH(p) => Some(p),
        _ => None,
    }
}

fn bivariate_coeffs(p: Option<&StepPoly>) -> Option<&[QPoly]> {
    match p? {
        StepPoly::InQX(b) | StepPoly::InQH(b) => Some(b.xcoeffs()),
        _ => None,
    }
}

/// One-line reading of a certificate step.
pub fn statement(step: &ProofStep) -> String {
    let univ = |name: &str, var: &str| univariate(lookup(step, name)).map(|p| p.render(var));
    let residual = step.residual.as_ref().map(StepPoly::render);
    match step.tag {
        StepTag::Primitivity => match lookup(step, "f") {
            Some(StepPoly::InQX(f)) => format!(
                "f = {} has content {} in Q[q], so a root in Q(q) is g(q)/h(q) with g, h coprime in Q[q]",
                render_terms(f.xcoeffs(), "X", false),
                residual.unwrap_or_default()
            ),
            _ => format!(
                "f = {} has content {}; its primitive part is {}",
                univ("f", "X").unwrap_or_default(),
                residual.unwrap_or_default(),
                univ("primitive", "X").unwrap_or_default()
            ),
        },
        StepTag::NumeratorDivisor => format!(
            "g(q) | {} in Q[q], a unit, so g(q) | 1; take g = 1",
            univ("constant", "q").unwrap_or_default()
        ),
        StepTag::DenominatorDivisor => {
            let eq = bivariate_coeffs(lookup(step, "h_equation")).map(|c| {
                let n = c.len() - 1;
                let lhs = render_terms(&c[..n], "h(q)", true);
                let mut top = vec![QPoly::zero(); n + 1];
                top[n] = -&c[n];
                format!("{lhs} = {}", render_terms(&top, "h(q)", true))
            });
            format!(
                "h(q) | {} in Q[q]; X = 1/h(q) gives {}",
                univ("leading", "q").unwrap_or_default(),
                eq.unwrap_or_default()
            )
        }
        StepTag::DegreeArgument => {
            let power = univ("power", "h(q)").unwrap_or_default();
            let upper = bivariate_coeffs(lookup(step, "upper")).map(|c| render_terms(c, "h(q)", true));
            let lower = univariate(lookup(step, "lower")).map(|p| {
                let as_bi: Vec<QPoly> = p.coeffs().iter().map(|a| QPoly::constant(a.clone())).collect();
                render_terms(&as_bi, "h(q)", true)
            });
            format!(
                "{power}*({}) = {}; the left side has larger q-degree unless deg h = 0, so h is a constant c",
                upper.unwrap_or_default(),
                lower.unwrap_or_default()
            )
        }
        StepTag::ConstantCase => {
            let forcing = univ("forcing", "c").unwrap_or_default();
            let forced: Vec<String> = step
                .polynomials
                .iter()
                .filter(|(n, _)| *n == "forced_c")
                .filter_map(|(_, p)| univariate(Some(p)).map(|p| p.constant_term().to_string()))
                .collect();
            let mut s = format!("with h = c in Q the coefficient {forcing} of the top power of q must vanish");
            if forced.is_empty() {
                s.push_str(", which no c does; contradiction");
            } else {
                let _ = write!(s, ", forcing c = {}", forced.join(", "));
                if let Some(r) = residual {
                    let _ = write!(s, "; the identity then leaves {r} = 0, a contradiction");
                }
            }
            s
        }
        StepTag::RationalCandidates => format!(
            "a rational root is +-(divisor of {})/(divisor of {})",
            univ("a_0", "q").unwrap_or_default(),
            univ("a_n", "q").unwrap_or_default()
        ),
        StepTag::CandidateEvaluation => {
            let values: Vec<&QPoly> = step.polynomials.iter().filter_map(|(_, p)| univariate(Some(p))).collect();
            let zeros = values.iter().filter(|p| p.is_zero()).count();
            format!("{} candidates evaluated exactly, {zeros} of them roots", values.len())
        }
        StepTag::LowDegreeCriterion => {
            "a polynomial of degree at most 3 without roots in the base field is irreducible".to_string()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub q: JsonRat,
    pub t: RootReport,
    pub t_exact: Option<JsonRat>,
    pub b: RootReport,
    pub l: RootReport,
    pub p: RootReport,
    /// Upper bound on `|p - 1|` over the enclosure.
    pub p_deviation: JsonRat,
    /// `p^2` computed exactly from `(q, t)` when `t` is rational.
    pub p_sq_exact: Option<JsonRat>,
    pub verified: bool,
}

impl SolveReport {
    pub fn new(r: &Reconstruction, digits: usize) -> Self {
        let t_exact = r.t.exact_value().cloned();
        let p_sq_exact = t_exact.as_ref().and_then(|t| p_sq_from_q_t(&r.q, t).ok());
        let verified = r.p.contains(&Rat::one()) && p_sq_exact.as_ref().map_or(true, Rat::is_one);
        SolveReport {
            q: (&r.q).into(),
            t: RootReport::from_isolation(&r.t, digits),
            t_exact: t_exact.map(JsonRat),
            b: RootReport::from_interval(&r.b, digits),
            l: RootReport::from_interval(&r.l, digits),
            p: RootReport::from_interval(&r.p, digits),
            p_deviation: (&r.p_deviation).into(),
            p_sq_exact: p_sq_exact.map(JsonRat),
            verified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeriveStepReport {
    pub step: usize,
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub given: Vec<String>,
    pub verified: bool,
}

impl From<&DerivationStep> for DeriveStepReport {
    fn from(s: &DerivationStep) -> Self {
        DeriveStepReport {
            step: s.step,
            name: s.name.to_string(),
            lhs: s.lhs.clone(),
            rhs: s.rhs.clone(),
            given: s.given.clone(),
            verified: s.verified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub s: JsonRat,
    pub q: JsonRat,
    pub t: JsonRat,
    pub degree: u8,
}

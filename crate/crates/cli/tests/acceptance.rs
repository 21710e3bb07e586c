//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bisector_cli::report::DeriveStepReport;
use bisector_cli::selftest::{
    forward_suite, root_equivalence_suite, unique_root_suite, DEFAULT_SEED, EQUIVALENCE_SAMPLES, FAMILY_SAMPLES,
    FORWARD_SAMPLES, UNIQUE_ROOT_SAMPLES,
};
use bisector_core::constructibility::{analyze, verify_verdict, Decision, QSpec, Verdict, Witness};
use bisector_core::derivation::derivation_chain;
use bisector_core::geometry::{p_sq_closed_form, p_sq_cosine_law, p_sq_from_sides, reconstruct};
use bisector_core::irreducibility::{h_equation_check, Conclusion, ProofStep, StepPoly, StepTag};
use bisector_core::rational::rat;
use bisector_core::roots::{geometric_root, refine};
use bisector_core::{bisector_cubic, BiPoly, QPoly, Rat};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn poly_of<'a>(step: &'a ProofStep, name: &str) -> Result<&'a StepPoly, String> {
    step.polynomials
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| p)
        .ok_or_else(|| format!("{:?} step lacks {name}", step.tag))
}

fn bi(p: &StepPoly) -> Result<&BiPoly, String> {
    match p {
        StepPoly::InQH(b) | StepPoly::InQX(b) => Ok(b),
        _ => Err("expected a bivariate polynomial".into()),
    }
}

fn uni(p: &StepPoly) -> Result<&QPoly, String> {
    match p {
        StepPoly::InQ(u) | StepPoly::InX(u) | StepPoly::InH(u) => Ok(u),
        _ => Err("expected a univariate polynomial".into()),
    }
}

fn c1_symbolic() -> Check {
    let v = analyze(&QSpec::SymbolicTranscendental).map_err(|e| e.to_string())?;
    ensure(v.decision == Decision::NotConstructible && v.degree == 3, "verdict is not (NotConstructible, 3)")?;
    ensure(v.root_box.is_none(), "symbolic verdict carries a root box")?;
    ensure(verify_verdict(&v), "certificate does not re-verify")?;
    let Witness::Irreducible(cert) = &v.witness else {
        return Err("witness is not an irreducibility certificate".into());
    };
    ensure(cert.conclusion == Conclusion::NoRootFound, "certificate found a root")?;
    let tags: Vec<StepTag> = cert.narrative.iter().map(|s| s.tag).collect();
    ensure(
        tags == [
            StepTag::Primitivity,
            StepTag::NumeratorDivisor,
            StepTag::DenominatorDivisor,
            StepTag::DegreeArgument,
            StepTag::ConstantCase,
        ],
        format!("unexpected step sequence {tags:?}"),
    )?;
    let [prim, num, den, deg, cst] = cert.narrative.as_slice() else { unreachable!() };

    // primitivity: content of f in Q[q] is 1
    ensure(prim.residual == Some(StepPoly::InQ(QPoly::one())), "content is not 1")?;
    ensure(bi(poly_of(prim, "f")?)? == &bisector_cubic(), "primitivity step is about another polynomial")?;

    // g(q) | 1: the constant coefficient is a unit
    let constant = uni(poly_of(num, "constant")?)?;
    ensure(constant.is_constant() && !constant.is_zero(), "constant coefficient is not a unit")?;
    ensure(uni(poly_of(num, "g")?)? == &QPoly::one(), "g is not normalized to 1")?;

    // 2 + 3h - 4q^2 h^2 = h^3, i.e. R(h) = 2 + 3h - 4q^2 h^2 - h^3
    let expected_r = BiPoly::new(vec![
        QPoly::from_ints(&[2]),
        QPoly::from_ints(&[3]),
        QPoly::from_ints(&[0, 0, -4]),
        QPoly::from_ints(&[-1]),
    ]);
    ensure(bi(poly_of(den, "h_equation")?)? == &expected_r, "h-equation differs")?;

    // degree argument: h^2 (h + 4q^2) = 3h + 2, checked as an identity on a grid
    let power = uni(poly_of(deg, "power")?)?;
    let upper = bi(poly_of(deg, "upper")?)?;
    let lower = uni(poly_of(deg, "lower")?)?;
    ensure(power == &QPoly::monomial(Rat::one(), 2), "split power is not h^2")?;
    ensure(lower == &QPoly::from_ints(&[2, 3]), "q-free side is not 3h + 2")?;
    ensure(upper.degree_q() == Some(2), "upper side lacks the q^2 term")?;
    for hn in -6..=6 {
        for qn in 0..=6 {
            let (h, q) = (rat(hn, 3), rat(qn, 2));
            let lhs = power.eval(&h) * upper.eval_q(&q).eval(&h);
            let rhs = lower.eval(&h);
            let r = expected_r.eval_q(&q).eval(&h);
            ensure(&lhs - &rhs == -r, format!("regrouping fails at h = {h}, q = {q}"))?;
        }
    }

    // constant case: c^2 (4q^2 + c) = 3c + 2 has no rational solution c
    ensure(uni(poly_of(cst, "forcing")?)? == &QPoly::from_ints(&[0, 0, 4]), "forcing term is not 4c^2")?;
    ensure(cst.residual == Some(StepPoly::InQ(QPoly::from_ints(&[-2]))), "c = 0 residual is not -2")?;
    for n in -40..=40 {
        for d in 1..=8 {
            ensure(!h_equation_check(&rat(n, d)).is_zero(), format!("c = {n}/{d} solves the constant case"))?;
        }
    }
    Ok(())
}

fn suite(out: bisector_cli::selftest::SuiteOutcome, total: usize) -> Check {
    ensure(out.total == total, format!("{} ran {} of {total}", out.name, out.total))?;
    match out.failure {
        None if out.passed == total => Ok(()),
        None => Err(format!("{}: {}/{}", out.name, out.passed, out.total)),
        Some(w) => Err(format!("{}: {}/{}; first failure {w}", out.name, out.passed, out.total)),
    }
}

fn c2_forward() -> Check {
    suite(forward_suite(DEFAULT_SEED, FORWARD_SAMPLES, p_sq_from_sides), 1000)
}

fn c3_equivalence() -> Check {
    ensure(EQUIVALENCE_SAMPLES == 500 && FAMILY_SAMPLES == 200, "sample sizes changed")?;
    suite(root_equivalence_suite(DEFAULT_SEED, 500, 200), 700)
}

fn c4_unique_root() -> Check {
    ensure(UNIQUE_ROOT_SAMPLES == 200, "sample size changed")?;
    suite(unique_root_suite(DEFAULT_SEED, 200), 200)
}

fn rational_verdict(q: Rat) -> Result<Verdict, String> {
    let v = analyze(&QSpec::Rational(q.clone())).map_err(|e| format!("q = {q}: {e}"))?;
    ensure(verify_verdict(&v), format!("q = {q}: witness does not re-verify"))?;
    Ok(v)
}

fn c5_named() -> Check {
    let eps = rat(1, 1_000_000_000_000);
    for (q, t) in [(Rat::one(), Rat::one()), (rat(11, 28), rat(4, 7))] {
        let v = rational_verdict(q.clone())?;
        ensure(
            v.decision == Decision::Constructible && v.degree == 1 && v.witness == Witness::RationalRoot(t.clone()),
            format!("q = {q}: expected (Constructible, 1, t = {t})"),
        )?;
    }
    for q in [rat(2, 1), rat(3, 1)] {
        let v = rational_verdict(q.clone())?;
        ensure(
            v.decision == Decision::NotConstructible && v.degree == 3,
            format!("q = {q}: expected (NotConstructible, 3)"),
        )?;
    }

    let v = rational_verdict(rat(1, 2))?;
    ensure(v.decision == Decision::Constructible && v.degree == 2, "q = 1/2: expected (Constructible, 2)")?;
    let Witness::Quadratic { factor, .. } = &v.witness else {
        return Err("q = 1/2: witness is not quadratic".into());
    };
    let fq = bisector_cubic().eval_q(&rat(1, 2));
    let doubled = QPoly::from_ints(&[-2, 2, 2]);
    let (cof, rem) = fq.divrem(&doubled).map_err(|e| e.to_string())?;
    ensure(rem.is_zero(), "2X^2 + 2X - 2 does not divide f_{1/2}")?;
    ensure(&cof * &doubled == fq, "division does not reconstruct f_{1/2}")?;
    ensure(factor.scale(&rat(2, 1)) == doubled, "witness factor is not X^2 + X - 1")?;
    let b = v.root_box.as_ref().ok_or("q = 1/2: no root box")?;
    ensure(b.width() <= eps, "q = 1/2: box wider than 1e-12")?;
    ensure(
        doubled.sign_at(b.lo()) * doubled.sign_at(b.hi()) < 0,
        "q = 1/2: box does not bracket a root of 2t^2 + 2t - 2",
    )?;
    // (-1 + sqrt 5)/2 in [lo, hi]  <=>  (2 lo + 1)^2 <= 5 <= (2 hi + 1)^2
    let two = Rat::from(2);
    let five = Rat::from(5);
    ensure(
        (&two * b.lo() + Rat::one()).square() <= five && (&two * b.hi() + Rat::one()).square() >= five,
        "q = 1/2: box misses (-1 + sqrt 5)/2",
    )?;
    Ok(())
}

fn c6_reconstruct() -> Check {
    let eps = rat(1, 1_000_000_000_000);
    let bound = rat(1, 10_000_000_000);
    for q in [Rat::one(), rat(1, 2), rat(2, 1), rat(3, 1)] {
        let fq = bisector_cubic().eval_q(&q);
        let t = geometric_root(&fq).and_then(|t| refine(&t, &eps)).map_err(|e| e.to_string())?;
        let r = reconstruct(&q, &t, &eps).map_err(|e| format!("q = {q}: {e}"))?;
        ensure(r.p.contains(&Rat::one()), format!("q = {q}: p enclosure misses 1"))?;
        ensure(r.p_deviation <= bound, format!("q = {q}: |p - 1| up to {}", r.p_deviation.to_f64()))?;
    }
    // 5-5-8: closed form, cosine-law chain and the classical length formula
    let (l, b) = (rat(5, 1), rat(8, 1));
    let closed = p_sq_closed_form(&l, &b).map_err(|e| e.to_string())?;
    let cosine = p_sq_cosine_law(&l, &b).map_err(|e| e.to_string())?;
    // bisector from B: a c (1 - (opp/(a + c))^2) with a = BC = 8, c = BA = 5, opp = AC = 5
    let classical = rat(40, 1) * (Rat::one() - rat(5, 13).square());
    let expected = rat(5760, 169);
    ensure(
        closed == expected && cosine == expected && classical == expected,
        format!("5-5-8 disagreement: {closed}, {cosine}, {classical}"),
    )
}

fn c7_derive() -> Check {
    let chain = derivation_chain();
    ensure(chain.len() == 6, format!("chain has {} steps", chain.len()))?;
    if let Some(s) = chain.iter().find(|s| !s.verified) {
        return Err(format!("step {} ({}) fails", s.step, s.name));
    }
    let out = Command::new(env!("CARGO_BIN_EXE_bisectorc"))
        .env_remove("BISECTORC_FORMAT")
        .args(["--format", "json", "derive"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), format!("derive exited with {:?}", out.status.code()))?;
    let steps: Vec<DeriveStepReport> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(steps.len() == 6 && steps.iter().all(|s| s.verified), "derive JSON reports a failed step")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 7] = [
        ("1 symbolic theorem", c1_symbolic, Some(Duration::from_secs(1))),
        ("2 forward identity", c2_forward, Some(Duration::from_secs(5))),
        ("3 root <=> unit bisector", c3_equivalence, Some(Duration::from_secs(5))),
        ("4 unique geometric root", c4_unique_root, Some(Duration::from_secs(5))),
        ("5 named instances", c5_named, None),
        ("6 reconstruction", c6_reconstruct, None),
        ("7 derivation chain", c7_derive, None),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Err(format!("took {:.2}s, limit {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()));
            }
        }
        match result {
            Ok(()) => println!("PASS criterion {name} ({:.2}s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.2}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

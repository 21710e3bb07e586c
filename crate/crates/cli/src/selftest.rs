//! Seeded randomized suites that re-check the algebra against the geometry.

use bisector_core::constructibility::{analyze, constructible_family, verify_verdict, Decision, QSpec};
use bisector_core::geometry::{cubic_residual, p_sq_from_q_t, p_sq_from_sides, q_sq_from_sides};
use bisector_core::rational::rat;
use bisector_core::roots::roots_above_half;
use bisector_core::{bisector_cubic, BiPoly, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::report::JsonRat;

pub const DEFAULT_SEED: u64 = 20_170_301;

pub const FORWARD_SAMPLES: usize = 1000;
pub const EQUIVALENCE_SAMPLES: usize = 500;
pub const FAMILY_SAMPLES: usize = 200;
pub const UNIQUE_ROOT_SAMPLES: usize = 200;

/// Squared base-vertex bisector as a function of `(l, b)`.
pub type PSqFn = fn(&Rat, &Rat) -> bisector_core::Result<Rat>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// First failing instance as JSON.
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.failure.is_none() && self.passed == self.total
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Positive rational `n/d` with `d <= max_den` and `n/d <= max`.
fn positive_rat(r: &mut ChaCha8Rng, max: i64, max_den: i64) -> Rat {
    let d = r.gen_range(1..=max_den);
    let n = r.gen_range(1..=max * d);
    rat(n, d)
}

/// Triangles with `2l > b > 0`.
pub fn sample_sides(seed: u64, n: usize) -> Vec<(Rat, Rat)> {
    let mut r = rng(seed, 1);
    (0..n)
        .map(|_| {
            let b = positive_rat(&mut r, 50, 1000);
            let l = &b * rat(1, 2) + positive_rat(&mut r, 50, 1000);
            (l, b)
        })
        .collect()
}

/// Pairs `(q, t)` with `q > 0` and `t > 1/2`.
pub fn sample_q_t(seed: u64, n: usize) -> Vec<(Rat, Rat)> {
    let mut r = rng(seed, 2);
    (0..n)
        .map(|_| {
            let q = positive_rat(&mut r, 20, 200);
            let t = rat(1, 2) + positive_rat(&mut r, 10, 200);
            (q, t)
        })
        .collect()
}

/// Family parameters `0 < s < sqrt(2)`.
pub fn sample_family(seed: u64, n: usize) -> Vec<Rat> {
    let mut r = rng(seed, 3);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let s = positive_rat(&mut r, 2, 1000);
        if s.square() < rat(2, 1) {
            out.push(s);
        }
    }
    out
}

/// `q` in `(0, 100]`.
pub fn sample_q(seed: u64, n: usize) -> Vec<Rat> {
    let mut r = rng(seed, 4);
    (0..n).map(|_| positive_rat(&mut r, 100, 1000)).collect()
}

fn s(r: &Rat) -> JsonRat {
    JsonRat(r.clone())
}

pub fn forward_suite(seed: u64, n: usize, p_sq: PSqFn) -> SuiteOutcome {
    let mut passed = 0;
    let mut failure = None;
    for (l, b) in sample_sides(seed, n) {
        let residual = match (p_sq(&l, &b), q_sq_from_sides(&l, &b)) {
            (Ok(p), Ok(q)) => Some(cubic_residual(&l, &b, &p, &q)),
            _ => None,
        };
        if residual.as_ref().is_some_and(Rat::is_zero) {
            passed += 1;
        } else if failure.is_none() {
            let residual = residual.map(|r| s(&r));
            failure = Some(json!({"l": s(&l), "b": s(&b), "residual": residual}).to_string());
        }
    }
    SuiteOutcome { name: "forward identity", passed, total: n, failure }
}

fn equivalence_case(f: &BiPoly, q: &Rat, t: &Rat, expect_root: bool) -> Result<(), String> {
    let unit = p_sq_from_q_t(q, t).map(|p| p.is_one());
    let root = f.eval_q(q).eval(t).is_zero();
    let ok = matches!(unit, Ok(u) if u == root) && (!expect_root || root);
    if ok {
        Ok(())
    } else {
        Err(json!({"q": s(q), "t": s(t), "unit_bisector": unit.ok(), "root": root}).to_string())
    }
}

/// `p^2(q, t) = 1` exactly when `f_q(t) = 0`, on random pairs and on family members
/// (where both must hold).
pub fn root_equivalence_suite(seed: u64, n: usize, family: usize) -> SuiteOutcome {
    let f = bisector_cubic();
    let random = sample_q_t(seed, n)
        .into_iter()
        .map(|(q, t)| equivalence_case(&f, &q, &t, false));
    let members = sample_family(seed, family).into_iter().map(|sv| match constructible_family(&sv) {
        Ok((q, t)) => equivalence_case(&f, &q, &t, true),
        Err(e) => Err(json!({"s": s(&sv), "error": e.to_string()}).to_string()),
    });
    let mut passed = 0;
    let mut failure = None;
    for result in random.chain(members) {
        match result {
            Ok(()) => passed += 1,
            Err(w) => {
                failure.get_or_insert(w);
            }
        }
    }
    SuiteOutcome { name: "root equivalence", passed, total: n + family, failure }
}

pub fn unique_root_suite(seed: u64, n: usize) -> SuiteOutcome {
    let f = bisector_cubic();
    let mut passed = 0;
    let mut failure = None;
    for q in sample_q(seed, n) {
        let count = roots_above_half(&f.eval_q(&q));
        if count == Ok(1) {
            passed += 1;
        } else if failure.is_none() {
            failure = Some(json!({"q": s(&q), "count": count.ok()}).to_string());
        }
    }
    SuiteOutcome { name: "unique geometric root", passed, total: n, failure }
}

pub fn symbolic_suite() -> SuiteOutcome {
    let ok = match analyze(&QSpec::SymbolicTranscendental) {
        Ok(v) => v.degree == 3 && v.decision == Decision::NotConstructible && verify_verdict(&v),
        Err(_) => false,
    };
    SuiteOutcome {
        name: "symbolic certificate",
        passed: usize::from(ok),
        total: 1,
        failure: (!ok).then(|| json!({"q": "symbolic"}).to_string()),
    }
}

pub fn run_all(seed: u64) -> Vec<SuiteOutcome> {
    vec![
        forward_suite(seed, FORWARD_SAMPLES, p_sq_from_sides),
        root_equivalence_suite(seed, EQUIVALENCE_SAMPLES, FAMILY_SAMPLES),
        unique_root_suite(seed, UNIQUE_ROOT_SAMPLES),
        symbolic_suite(),
    ]
}

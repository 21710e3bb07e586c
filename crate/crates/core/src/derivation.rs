//! The symbolic chain from the two bisector lengths to the cubic in `X = l/b`.
//!
//! Every step is an identity between two [`Expr`]s, optionally under
//! substitutions for some variables. Both sides are expanded into exact
//! rational functions of the remaining variables and compared by
//! cross-multiplication.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bivariate::bisector_cubic;
use crate::error::{Error, Result};
use crate::rational::Rat;

const NVARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    /// Leg length `AB = AC`.
    L,
    /// Base length `BC`.
    B,
    /// Squared base-vertex bisector `p^2`.
    PSq,
    /// Squared apex bisector `q^2`.
    QSq,
    /// Shape ratio `l/b`.
    X,
    Q,
    /// Segment `CP = x`.
    Seg,
    /// `cos(theta)` at the base vertex.
    Cos,
}

impl Var {
    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Var::L => "l",
            Var::B => "b",
            Var::PSq => "p^2",
            Var::QSq => "q^2",
            Var::X => "X",
            Var::Q => "q",
            Var::Seg => "x",
            Var::Cos => "cos(theta)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(Var),
    Const(Rat),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

fn v(x: Var) -> Expr {
    Expr::Var(x)
}

fn c(n: i64) -> Expr {
    Expr::Const(Rat::from(n))
}

fn add(a: Expr, b: Expr) -> Expr {
    Expr::Add(Box::new(a), Box::new(b))
}

fn sub(a: Expr, b: Expr) -> Expr {
    Expr::Sub(Box::new(a), Box::new(b))
}

fn mul(a: Expr, b: Expr) -> Expr {
    Expr::Mul(Box::new(a), Box::new(b))
}

fn div(a: Expr, b: Expr) -> Expr {
    Expr::Div(Box::new(a), Box::new(b))
}

fn pow(a: Expr, k: u32) -> Expr {
    Expr::Pow(Box::new(a), k)
}

fn product(factors: Vec<Expr>) -> Expr {
    factors.into_iter().reduce(mul).expect("nonempty product")
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Const(r) if r.is_negative() => 3,
            Expr::Const(r) if !r.is_integer() => 2,
            Expr::Pow(..) => 4,
            Expr::Var(Var::PSq) | Expr::Var(Var::QSq) => 4,
            _ => 5,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(x) => f.write_str(x.name()),
            Expr::Const(r) => write!(f, "{r}"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write_child(f, 4)
            }
            Expr::Add(a, b) => {
                a.write_child(f, 1)?;
                f.write_str(" + ")?;
                b.write_child(f, 1)
            }
            Expr::Sub(a, b) => {
                a.write_child(f, 1)?;
                f.write_str(" - ")?;
                b.write_child(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_child(f, 2)?;
                f.write_str("*")?;
                b.write_child(f, 3)
            }
            Expr::Div(a, b) => {
                a.write_child(f, 2)?;
                f.write_str("/")?;
                b.write_child(f, 4)
            }
            Expr::Pow(a, k) => {
                a.write_child(f, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

/// Sparse polynomial in the [`Var`]s.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct MPoly(BTreeMap<[u32; NVARS], Rat>);

impl MPoly {
    fn constant(r: Rat) -> MPoly {
        let mut m = BTreeMap::new();
        if !r.is_zero() {
            m.insert([0; NVARS], r);
        }
        MPoly(m)
    }

    fn var(x: Var) -> MPoly {
        let mut e = [0; NVARS];
        e[x.index()] = 1;
        MPoly(BTreeMap::from([(e, Rat::one())]))
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, e: [u32; NVARS], r: Rat) {
        let entry = self.0.entry(e).or_default();
        *entry += r;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, r) in &rhs.0 {
            out.add_term(*e, r.clone());
        }
        out
    }

    fn neg(&self) -> MPoly {
        MPoly(self.0.iter().map(|(e, r)| (*e, -r.clone())).collect())
    }

    fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ea, ra) in &self.0 {
            for (eb, rb) in &rhs.0 {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, ra * rb);
            }
        }
        out
    }
}

/// `num/den` with `den != 0`; not reduced.
#[derive(Clone, Debug)]
struct RatFn {
    num: MPoly,
    den: MPoly,
}

impl RatFn {
    fn poly(p: MPoly) -> RatFn {
        RatFn {
            num: p,
            den: MPoly::constant(Rat::one()),
        }
    }

    fn add(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }

    fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }

    fn div(&self, rhs: &RatFn) -> Result<RatFn> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFn {
            num: self.num.mul(&rhs.den),
            den: self.den.mul(&rhs.num),
        })
    }

    fn equals(&self, rhs: &RatFn) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }
}

/// Substitutions `var := expr`, applied once (the replacement is read in free variables).
pub type Hypotheses = Vec<(Var, Expr)>;

fn eval(e: &Expr, hyps: &[(Var, Expr)]) -> Result<RatFn> {
    Ok(match e {
        Expr::Var(x) => match hyps.iter().find(|(y, _)| y == x) {
            Some((_, rep)) => eval(rep, &[])?,
            None => RatFn::poly(MPoly::var(*x)),
        },
        Expr::Const(r) => RatFn::poly(MPoly::constant(r.clone())),
        Expr::Neg(a) => eval(a, hyps)?.neg(),
        Expr::Add(a, b) => eval(a, hyps)?.add(&eval(b, hyps)?),
        Expr::Sub(a, b) => eval(a, hyps)?.add(&eval(b, hyps)?.neg()),
        Expr::Mul(a, b) => eval(a, hyps)?.mul(&eval(b, hyps)?),
        Expr::Div(a, b) => eval(a, hyps)?.div(&eval(b, hyps)?)?,
        Expr::Pow(a, k) => {
            let base = eval(a, hyps)?;
            let mut acc = RatFn::poly(MPoly::constant(Rat::one()));
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

/// Whether `lhs = rhs` holds identically after applying `hyps` to both sides.
pub fn check_identity(lhs: &Expr, rhs: &Expr, hyps: &[(Var, Expr)]) -> Result<bool> {
    Ok(eval(lhs, hyps)?.equals(&eval(rhs, hyps)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub step: usize,
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    /// Substitutions the identity is checked under, rendered as `var = expr`.
    pub given: Vec<String>,
    pub verified: bool,
}

fn q_sq_sides() -> Expr {
    sub(pow(v(Var::L), 2), div(pow(v(Var::B), 2), c(4)))
}

fn p_sq_closed() -> Expr {
    div(
        product(vec![pow(v(Var::B), 2), v(Var::L), add(v(Var::B), mul(c(2), v(Var::L)))]),
        pow(add(v(Var::B), v(Var::L)), 2),
    )
}

fn cubic_in_sides() -> Expr {
    let (l, b, ps, qs) = (v(Var::L), v(Var::B), v(Var::PSq), v(Var::QSq));
    sub(
        sub(
            add(
                product(vec![c(2), ps.clone(), pow(l.clone(), 3)]),
                product(vec![c(3), ps.clone(), b.clone(), pow(l.clone(), 2)]),
            ),
            product(vec![c(4), qs, pow(b.clone(), 2), l]),
        ),
        mul(ps, pow(b, 3)),
    )
}

fn cubic_in_x() -> Expr {
    let (x, ps, qs) = (v(Var::X), v(Var::PSq), v(Var::QSq));
    sub(
        sub(
            add(
                product(vec![c(2), ps.clone(), pow(x.clone(), 3)]),
                product(vec![c(3), ps.clone(), pow(x.clone(), 2)]),
            ),
            product(vec![c(4), qs, x]),
        ),
        ps,
    )
}

/// The library's bisector cubic rebuilt as an expression in `X` and `q`.
fn library_cubic() -> Expr {
    let f = bisector_cubic();
    let mut terms: Vec<(bool, Expr)> = Vec::new();
    for i in (0..f.xcoeffs().len()).rev() {
        let qc = f.x_coeff(i);
        for j in (0..qc.coeffs().len()).rev() {
            let k = qc.coeff(j);
            if k.is_zero() {
                continue;
            }
            let mut factors = Vec::new();
            let mag = k.abs();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(Expr::Const(mag));
            }
            if j > 0 {
                factors.push(if j == 1 { v(Var::Q) } else { pow(v(Var::Q), j as u32) });
            }
            if i > 0 {
                factors.push(if i == 1 { v(Var::X) } else { pow(v(Var::X), i as u32) });
            }
            terms.push((k.is_negative(), product(factors)));
        }
    }
    let mut it = terms.into_iter();
    let (neg, first) = it.next().expect("cubic is nonzero");
    let start = if neg { Expr::Neg(Box::new(first)) } else { first };
    it.fold(start, |acc, (neg, t)| if neg { sub(acc, t) } else { add(acc, t) })
}

struct Spec {
    name: &'static str,
    lhs: Expr,
    rhs: Expr,
    hyps: Hypotheses,
    /// Extra identities tying the step to its neighbours.
    links: Vec<(Expr, Expr, Hypotheses)>,
}

fn specs() -> Vec<Spec> {
    let (l, b) = (v(Var::L), v(Var::B));
    let combined_lhs = div(mul(pow(b.clone(), 2), l.clone()), sub(mul(c(2), l.clone()), b.clone()));
    let combined_rhs = div(
        mul(v(Var::PSq), pow(add(b.clone(), l.clone()), 2)),
        mul(c(4), v(Var::QSq)),
    );
    let cleared = sub(
        product(vec![
            v(Var::PSq),
            pow(add(b.clone(), l.clone()), 2),
            sub(mul(c(2), l.clone()), b.clone()),
        ]),
        product(vec![c(4), v(Var::QSq), pow(b.clone(), 2), l.clone()]),
    );
    let cleared_link = product(vec![
        c(4),
        v(Var::QSq),
        sub(mul(c(2), l.clone()), b.clone()),
        sub(combined_rhs.clone(), combined_lhs.clone()),
    ]);
    vec![
        Spec {
            name: "apex bisector, factored",
            lhs: mul(add(mul(c(2), l.clone()), b.clone()), sub(mul(c(2), l.clone()), b.clone())),
            rhs: mul(c(4), v(Var::QSq)),
            hyps: vec![(Var::QSq, q_sq_sides())],
            links: vec![],
        },
        Spec {
            name: "base bisector, closed form",
            lhs: sub(
                add(pow(b.clone(), 2), pow(v(Var::Seg), 2)),
                product(vec![c(2), b.clone(), v(Var::Seg), v(Var::Cos)]),
            ),
            rhs: p_sq_closed(),
            hyps: vec![
                (Var::Seg, div(mul(b.clone(), l.clone()), add(b.clone(), l.clone()))),
                (Var::Cos, div(b.clone(), mul(c(2), l.clone()))),
            ],
            links: vec![],
        },
        Spec {
            name: "combined relation",
            lhs: combined_lhs,
            rhs: combined_rhs,
            hyps: vec![(Var::PSq, p_sq_closed()), (Var::QSq, q_sq_sides())],
            links: vec![],
        },
        Spec {
            name: "cleared denominators",
            lhs: cleared.clone(),
            rhs: cubic_in_sides(),
            hyps: vec![],
            links: vec![(cleared, cleared_link, vec![])],
        },
        Spec {
            name: "substitute l = X*b, divide by b^3",
            lhs: div(cubic_in_sides(), pow(b.clone(), 3)),
            rhs: cubic_in_x(),
            hyps: vec![(Var::L, mul(v(Var::X), b))],
            links: vec![],
        },
        Spec {
            name: "normalize p = 1",
            lhs: cubic_in_x(),
            rhs: library_cubic(),
            hyps: vec![(Var::PSq, c(1)), (Var::QSq, pow(v(Var::Q), 2))],
            links: vec![],
        },
    ]
}

fn verify_spec(s: &Spec) -> bool {
    let ok = |lhs: &Expr, rhs: &Expr, hyps: &[(Var, Expr)]| check_identity(lhs, rhs, hyps).unwrap_or(false);
    ok(&s.lhs, &s.rhs, &s.hyps) && s.links.iter().all(|(a, b, h)| ok(a, b, h))
}

/// The six-step chain, each step checked.
pub fn derivation_chain() -> Vec<DerivationStep> {
    specs()
        .iter()
        .enumerate()
        .map(|(i, s)| DerivationStep {
            step: i + 1,
            name: s.name,
            lhs: s.lhs.to_string(),
            rhs: s.rhs.to_string(),
            given: s
                .hyps
                .iter()
                .map(|(x, e)| (x.name(), e.to_string()))
                .filter(|(name, e)| name != e)
                .map(|(name, e)| alloc::format!("{name} = {e}"))
                .collect(),
            verified: verify_spec(s),
        })
        .collect()
}

/// The rendered cubic at the end of the chain, for display.
pub fn final_cubic() -> String {
    library_cubic().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn chain_verifies() {
        let chain = derivation_chain();
        assert_eq!(chain.len(), 6);
        for s in &chain {
            assert!(s.verified, "step {} failed: {} = {}", s.step, s.lhs, s.rhs);
        }
    }

    #[test]
    fn rendering() {
        let chain = derivation_chain();
        assert_eq!(chain[0].lhs, "(2*l + b)*(2*l - b)");
        assert_eq!(chain[0].rhs, "4*q^2");
        assert_eq!(chain[0].given, ["q^2 = l^2 - b^2/4"]);
        assert_eq!(chain[1].rhs, "b^2*l*(b + 2*l)/(b + l)^2");
        assert_eq!(chain[2].lhs, "b^2*l/(2*l - b)");
        assert_eq!(chain[2].rhs, "p^2*(b + l)^2/(4*q^2)");
        assert_eq!(chain[3].rhs, "2*p^2*l^3 + 3*p^2*b*l^2 - 4*q^2*b^2*l - p^2*b^3");
        assert_eq!(chain[4].rhs, "2*p^2*X^3 + 3*p^2*X^2 - 4*q^2*X - p^2");
        assert_eq!(chain[5].rhs, "2*X^3 + 3*X^2 - 4*q^2*X - 1");
        assert_eq!(chain[5].given, ["p^2 = 1"]);
        assert_eq!(final_cubic(), "2*X^3 + 3*X^2 - 4*q^2*X - 1");
    }

    #[test]
    fn mismatches_are_caught() {
        // sign flip in the closed form
        let wrong = div(
            product(vec![pow(v(Var::B), 2), v(Var::L), sub(v(Var::B), mul(c(2), v(Var::L)))]),
            pow(add(v(Var::B), v(Var::L)), 2),
        );
        let mut s = specs().remove(1);
        s.rhs = wrong;
        assert!(!verify_spec(&s));

        let mut s = specs().remove(5);
        s.hyps[1] = (Var::QSq, v(Var::Q));
        assert!(!verify_spec(&s));

        let mut s = specs().remove(3);
        s.links[0].1 = mul(c(2), s.links[0].1.clone());
        assert!(!verify_spec(&s));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let e = div(v(Var::L), sub(v(Var::B), v(Var::B)));
        assert_eq!(check_identity(&e, &c(0), &[]), Err(Error::DivisionByZero));
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(derivation_chain(), derivation_chain());
    }

    fn point_eval(e: &Expr, l: &Rat, b: &Rat) -> Rat {
        match e {
            Expr::Var(Var::L) => l.clone(),
            Expr::Var(Var::B) => b.clone(),
            Expr::Var(_) => unreachable!(),
            Expr::Const(r) => r.clone(),
            Expr::Neg(a) => -point_eval(a, l, b),
            Expr::Add(a, x) => point_eval(a, l, b) + point_eval(x, l, b),
            Expr::Sub(a, x) => point_eval(a, l, b) - point_eval(x, l, b),
            Expr::Mul(a, x) => point_eval(a, l, b) * point_eval(x, l, b),
            Expr::Div(a, x) => point_eval(a, l, b).checked_div(&point_eval(x, l, b)).unwrap(),
            Expr::Pow(a, k) => point_eval(a, l, b).pow(*k),
        }
    }

    proptest! {
        // The expanded rational-function arithmetic agrees with plain evaluation.
        #[test]
        fn expansion_matches_pointwise(ln in 1i64..200, bn in 1i64..200, d in 1i64..20) {
            let (l, b) = (rat(ln, d), rat(bn, d));
            prop_assume!(&l * rat(2, 1) != b);
            let e = sub(p_sq_closed(), div(pow(v(Var::L), 3), sub(mul(c(2), v(Var::L)), v(Var::B))));
            let f = eval(&e, &[]).unwrap();
            let at = |p: &MPoly| -> Rat {
                p.0.iter()
                    .map(|(ex, r)| r * l.pow(ex[Var::L.index()]) * b.pow(ex[Var::B.index()]))
                    .sum()
            };
            let expect = point_eval(&e, &l, &b);
            prop_assert_eq!(at(&f.num).checked_div(&at(&f.den)).unwrap(), expect);
        }
    }
}

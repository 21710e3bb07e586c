//! End-to-end runs through the public API only.

use bisector_core::constructibility::{analyze, constructible_family, verify_verdict, Decision, QSpec, Witness};
use bisector_core::geometry::{forward_instance, p_sq_from_q_t, reconstruct};
use bisector_core::rational::rat;
use bisector_core::roots::{geometric_root, refine};
use bisector_core::{bisector_cubic, general_cubic, Rat};

#[test]
fn triangle_to_bisectors_and_back() {
    let tri = forward_instance(&rat(5, 1), &rat(8, 1)).unwrap();
    assert_eq!((tri.q_sq.clone(), tri.p_sq.clone()), (rat(9, 1), rat(5760, 169)));
    assert_eq!(p_sq_from_q_t(&rat(3, 1), &rat(5, 8)).unwrap(), tri.p_sq);
    assert_eq!(general_cubic(&Rat::one()).unwrap(), bisector_cubic());
}

#[test]
fn family_member_reconstructs_exactly() {
    let (q, t) = constructible_family(&rat(3, 4)).unwrap();
    let v = analyze(&QSpec::Rational(q.clone())).unwrap();
    assert_eq!(v.decision, Decision::Constructible);
    assert_eq!(v.witness, Witness::RationalRoot(t.clone()));
    assert!(verify_verdict(&v));
    let eps = rat(1, 1_000_000_000);
    let r = reconstruct(&q, v.root_box.as_ref().unwrap(), &eps).unwrap();
    assert!(r.p.contains(&Rat::one()));
    assert!(r.b.width() <= eps && r.l.width() <= eps);
}

#[test]
fn irrational_root_round_trip() {
    let q = rat(7, 3);
    let fq = bisector_cubic().eval_q(&q);
    let t = refine(&geometric_root(&fq).unwrap(), &rat(1, 1_000_000)).unwrap();
    let v = analyze(&QSpec::Rational(q.clone())).unwrap();
    assert_eq!(v.degree, 3);
    let boxed = v.root_box.unwrap();
    assert!(boxed.lo() <= t.hi() && t.lo() <= boxed.hi());
    let r = reconstruct(&q, &t, &rat(1, 1_000_000)).unwrap();
    assert!(r.p_deviation <= rat(1, 1_000_000));
}

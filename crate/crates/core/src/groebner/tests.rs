use super::*;
use crate::polyring::{MonomialOrder, Polynomial, Ring, RingDescriptor};

fn ring(names: &[&str]) -> Ring {
    RingDescriptor::with_xblock(names.iter().copied()).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

fn gb(r: &Ring, gens: &[&str], ord: &MonomialOrder) -> Vec<Polynomial> {
    let gens: Vec<_> = gens.iter().map(|s| p(r, s)).collect();
    reduced_gb(&gens, ord, &GbConfig::default()).unwrap()
}

#[test]
fn reduced_gb_examples() {
    let r = ring(&["x", "y"]);
    assert_eq!(gb(&r, &["x", "x+y"], &MonomialOrder::Grevlex), vec![p(&r, "x"), p(&r, "y")]);
    assert_eq!(
        gb(&r, &["x*y-1", "y^2-1"], &MonomialOrder::Lex),
        vec![p(&r, "x-y"), p(&r, "y^2-1")]
    );
    assert_eq!(
        gb(&r, &["x^2", "x*y"], &MonomialOrder::Grevlex),
        vec![p(&r, "x^2"), p(&r, "x*y")]
    );
    assert!(gb(&r, &[], &MonomialOrder::Grevlex).is_empty());
    assert_eq!(gb(&r, &["x", "x-1"], &MonomialOrder::Grevlex), vec![p(&r, "1")]);
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let b = gb(&r, &["x^2-y"], &MonomialOrder::Grevlex);
    assert_eq!(normal_form(&p(&r, "x^2"), &b, &MonomialOrder::Grevlex), p(&r, "y"));
    assert!(normal_form(&p(&r, "x^2-y"), &b, &MonomialOrder::Grevlex).is_zero());
    let h = gb(&r, &["x^2", "x*y"], &MonomialOrder::Grevlex);
    assert_eq!(normal_form(&p(&r, "1"), &h, &MonomialOrder::Grevlex), p(&r, "1"));
}

#[test]
fn step_limit_reports_statistics() {
    let r = ring(&["a", "b", "c", "d"]);
    let gens: Vec<_> = ["a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"]
        .iter()
        .map(|s| p(&r, s))
        .collect();
    match reduced_gb(&gens, &MonomialOrder::Grevlex, &GbConfig::with_max_steps(2)) {
        Err(crate::Error::StepLimit { limit, stats }) => {
            assert_eq!(limit, 2);
            assert_eq!(stats.pairs_processed, 2);
            assert!(stats.pairs_remaining > 0);
        }
        other => panic!("{other:?}"),
    }
    let full = reduced_gb(&gens, &MonomialOrder::Grevlex, &GbConfig::default()).unwrap();
    assert!(is_groebner_basis(&full, &MonomialOrder::Grevlex));
}

#[test]
fn membership_examples() {
    let r = ring(&["x", "y", "x1", "x2", "x3"]);
    let cfg = GbConfig::default();
    assert!(Ideal::parse(&r, &["x", "y"]).unwrap().contains(&p(&r, "x+y"), &cfg).unwrap());
    assert!(!Ideal::parse(&r, &["x1^2*x2", "x3^3"]).unwrap().contains(&p(&r, "1"), &cfg).unwrap());
    assert!(!Ideal::parse(&r, &["x^2"]).unwrap().contains(&p(&r, "x"), &cfg).unwrap());
}

#[test]
fn elimination_examples() {
    let cfg = GbConfig::default();
    let r = ring(&["u", "x", "y"]);
    let i = Ideal::parse(&r, &["u*x", "(1-u)*y"]).unwrap();
    let e = i.eliminate(&[0], &cfg).unwrap();
    let s = e.ring().clone();
    assert_eq!(s.names(), ["x", "y"]);
    assert!(e.equals(&Ideal::parse(&s, &["x*y"]).unwrap(), &cfg).unwrap());

    let same = i.eliminate(&[], &cfg).unwrap();
    assert!(same.equals(&i.embed(same.ring()).unwrap(), &cfg).unwrap());

    let c = Ideal::parse(&r, &["x - u^2", "y - u^3"]).unwrap();
    let e = c.eliminate(&[0], &cfg).unwrap();
    let want = Ideal::parse(e.ring(), &["x^3 - y^2"]).unwrap();
    assert!(e.equals(&want, &cfg).unwrap());
}

#[test]
fn intersection_examples() {
    let cfg = GbConfig::default();
    let r = ring(&["x", "y"]);
    let x = Ideal::parse(&r, &["x"]).unwrap();
    let y = Ideal::parse(&r, &["y"]).unwrap();
    assert!(x.intersect(&y, &cfg).unwrap().equals(&Ideal::parse(&r, &["x*y"]).unwrap(), &cfg).unwrap());
    let a = Ideal::parse(&r, &["x^2", "y"]).unwrap();
    let want = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
    assert!(a.intersect(&x, &cfg).unwrap().equals(&want, &cfg).unwrap());
    assert!(a.intersect(&a, &cfg).unwrap().equals(&a, &cfg).unwrap());
}

#[test]
fn quotient_examples() {
    let cfg = GbConfig::default();
    let r = RingDescriptor::new([
        ("x", crate::polyring::BlockTag::X),
        ("y", crate::polyring::BlockTag::X),
        ("t", crate::polyring::BlockTag::T),
    ])
    .unwrap();
    let g = "x^2 + x*y - y^3";
    let tg = Ideal::parse(&r, &[&format!("t*({g})")]).unwrap();
    let q = tg.quotient(&Ideal::parse(&r, &[g]).unwrap(), &cfg).unwrap();
    assert!(q.equals(&Ideal::parse(&r, &["t"]).unwrap(), &cfg).unwrap());

    let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
    let q = i.quotient(&Ideal::parse(&r, &["x"]).unwrap(), &cfg).unwrap();
    assert!(q.equals(&Ideal::parse(&r, &["x", "y"]).unwrap(), &cfg).unwrap());

    // J inside I gives the unit ideal
    let q = i.quotient(&Ideal::parse(&r, &["x^2*t"]).unwrap(), &cfg).unwrap();
    assert!(q.is_unit(&cfg).unwrap());
}

#[test]
fn power_examples() {
    let cfg = GbConfig::default();
    let r = ring(&["x", "y"]);
    let m = Ideal::parse(&r, &["x", "y"]).unwrap();
    assert!(m.power(2).equals(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap(), &cfg).unwrap());
    assert!(m.power(0).is_unit(&cfg).unwrap());
    let x = Ideal::parse(&r, &["x"]).unwrap();
    assert_eq!(x.power(3).generators(), &[p(&r, "x^3")]);
}

#[test]
fn dimension_examples() {
    let cfg = GbConfig::default();
    let r = ring(&["x", "y"]);
    assert_eq!(Ideal::parse(&r, &["x"]).unwrap().dimension(&cfg).unwrap(), 1);
    assert_eq!(Ideal::unit(&r).dimension(&cfg).unwrap(), -1);
    assert_eq!(Ideal::zero(&r).dimension(&cfg).unwrap(), 2);
    let m = ring(&["x11", "x12", "x21", "x22", "x31", "x32"]);
    let minors = Ideal::parse(
        &m,
        &["x11*x22 - x12*x21", "x11*x32 - x12*x31", "x21*x32 - x22*x31"],
    )
    .unwrap();
    assert_eq!(minors.dimension(&cfg).unwrap(), 4);
}

mod common;

use common::{f7, simplicial_fixtures, square_inputs, two_crossed_inputs, Oracle};
use hocalg::cli::bundle::Structure;
use hocalg::cli::catalog::{fixture, FixtureParams};
use hocalg::exactalg::{kernel, Action, Bilinear, Field, FinAlgebra, LinMap, Subspace};
use hocalg::fixtures::MonomialAlgebra;
use hocalg::functors::{
    cone_functor, delta_functor, lambda_functor, lambda_with, m2_functor, psi_functor, simp_to_2crossed, LambdaOptions,
};
use hocalg::simplicial::TruncSimplicialAlgebra;
use hocalg::structures::{CrossedSquare, TwoCrossedModule};

fn simplicial(name: &str) -> TruncSimplicialAlgebra {
    match fixture(name, FixtureParams::default()).unwrap().structure {
        Structure::Simplicial(e) => e,
        _ => unreachable!(),
    }
}

fn two_crossed(name: &str) -> TwoCrossedModule {
    match fixture(name, FixtureParams::default()).unwrap().structure {
        Structure::TwoCrossed(t) => t,
        _ => unreachable!(),
    }
}

fn square(name: &str) -> CrossedSquare {
    match fixture(name, FixtureParams::default()).unwrap().structure {
        Structure::Square(s) => s,
        _ => unreachable!(),
    }
}

#[test]
fn lambda_on_ideal_inclusion_has_zero_top() {
    let t = two_crossed("ideal-2x");
    let (q, cert) = lambda_functor(&t).unwrap();
    assert_eq!(q.l.dim(), 0);
    // Inclusion of an ideal: all Peiffer elements vanish, so M = I.
    assert!(t.bottom().p3().is_zero());
    assert_eq!(q.m.dim(), t.c1.dim());
    assert!(cert.is_ok(), "{}", cert.render());
}

#[test]
fn lambda_on_truncated_polynomials() {
    let t = two_crossed("trunc-2x");
    let c1 = &t.c1;
    let x = c1.unit(0);
    let x3 = c1.mul(&c1.mul(&x, &x), &x);
    // With zero boundary the triple Peiffer elements are triple products.
    let p3 = t.bottom().p3();
    assert_eq!(p3, Subspace::span(c1.field(), c1.dim(), vec![x3]));
    let (q, cert) = lambda_functor(&t).unwrap();
    assert_eq!(q.m.dim(), 2);
    // P3' is spanned by {x ⊗ x²} = x³ as well.
    assert_eq!(q.l.dim(), 2);
    assert!(cert.is_ok(), "{}", cert.render());
    assert_eq!(cert.before.dims(), cert.after.dims());
}

#[test]
fn lambda_on_the_zero_two_crossed_module() {
    let f = Field::Rational;
    let r = MonomialAlgebra::truncated(f, 2).algebra;
    let z = FinAlgebra::zero_mul(f, 0);
    let t = TwoCrossedModule {
        c2: z.clone(),
        c1: z,
        c0: r.clone(),
        d2: LinMap::zero(f, 0, 0),
        d1: LinMap::zero(f, r.dim(), 0),
        act10: Action::trivial(f, r.dim(), 0),
        act20: Action::trivial(f, r.dim(), 0),
        act21: Action::trivial(f, 0, 0),
        lifting: Bilinear::zero(f, 0, 0, 0),
    };
    let (q, cert) = lambda_functor(&t).unwrap();
    assert_eq!((q.l.dim(), q.m.dim(), q.c_dim()), (0, 0, 0));
    assert_eq!(q.n, r);
    assert!(cert.is_ok());
}

#[test]
fn dropping_p3_prime_breaks_homotopy() {
    let t = two_crossed("trunc-2x");
    let (_, cert) = lambda_with(&t, LambdaOptions { drop_p3_prime: true }).unwrap();
    assert!(!cert.homotopy_preserved(), "{}", cert.render());
    let d3 = cert.degrees.iter().find(|d| d.degree == 3).unwrap();
    assert_eq!((d3.before, d3.after), (Some(0), Some(1)));
    assert!(!cert.construction.check("P3 inside d2(P3')").unwrap().passed());
}

#[test]
fn lambda_rejects_invalid_input() {
    let mut t = two_crossed("trunc-2x");
    let mut v = t.lifting.basis_value(0, 0).clone();
    common::bump(&mut v, 0);
    t.lifting.set_basis_value(0, 0, v);
    let err = lambda_functor(&t).unwrap_err().to_string();
    assert!(err.contains("2CM"), "{err}");
}

#[test]
fn delta_on_constant_is_zero_on_top() {
    let e = simplicial("const");
    let (q, cert) = delta_functor(&e).unwrap();
    assert_eq!((q.l.dim(), q.m.dim()), (0, 0));
    // NE0 = E0, relabelled.
    assert_eq!(q.n.clone().with_labels(e.level(0).labels().to_vec()), *e.level(0));
    assert!(cert.is_ok());
}

#[test]
fn delta_on_nerve_matches_lambda_after_simp2() {
    let e = simplicial("nerve");
    let (q, cert) = delta_functor(&e).unwrap();
    assert_eq!(q.l.dim(), 0);
    let (t, _) = simp_to_2crossed(&e).unwrap();
    let (q2, _) = lambda_functor(&t).unwrap();
    assert_eq!(q, q2);
    // M = C/P3 with C = (x) in k[x]/(x^3); the nerve's Peiffer elements vanish.
    assert_eq!(q.m.dim(), 2);
    assert!(cert.is_ok());
}

#[test]
fn delta_and_lambda_after_simp2_agree_on_homotopy() {
    for (name, e) in simplicial_fixtures() {
        let (q, _) = delta_functor(e).unwrap();
        let (t, _) = simp_to_2crossed(e).unwrap();
        let (q2, _) = lambda_functor(&t).unwrap();
        assert_eq!(q.homotopy(), q2.homotopy(), "{name}");
    }
}

#[test]
fn delta_on_dold_kan_preserves_homotopy() {
    for name in ["dk", "dk-mod2"] {
        let e = simplicial(name);
        let (q, cert) = delta_functor(&e).unwrap();
        assert!(q.validate().is_valid());
        let pi = e.homotopy().unwrap();
        let o = Oracle::of(e.field());
        let m = e.moore().unwrap();
        for n in 0..=2 {
            assert_eq!(pi.dim(n), Some(o.homology_dim(&m.boundaries[n + 1], &m.boundaries[n])));
            assert_eq!(q.homotopy().dim(n + 1), pi.dim(n), "{name} degree {}", n + 1);
        }
        assert!(cert.is_ok(), "{}", cert.render());
    }
}

#[test]
fn m2_on_constant_is_degenerate() {
    let e = simplicial("const");
    let (s, cert) = m2_functor(&e).unwrap();
    assert_eq!((s.l.dim(), s.m.dim(), s.n.dim()), (0, 0, 0));
    assert_eq!(s.r.dim(), e.level(1).dim());
    assert!(cert.verdict.is_valid());
}

#[test]
fn m2_squares_validate_and_check_the_h_identity() {
    for (name, e) in simplicial_fixtures() {
        let (s, cert) = m2_functor(e).unwrap();
        assert!(s.validate().is_valid(), "{name}");
        let c = cert.construction.checks.iter().find(|c| c.name.starts_with("λh(x,z)")).unwrap();
        assert!(c.passed(), "{name}");
        if name.starts_with("dk/") {
            assert!(c.instances > 0);
        }
    }
}

#[test]
fn cone_on_zero_square_is_zero() {
    let (t, cert) = cone_functor(&square("zerosq")).unwrap();
    assert_eq!((t.c2.dim(), t.c1.dim()), (0, 0));
    assert!(cert.is_ok());
}

#[test]
fn cone_on_ideal_square() {
    let s = square("idealsq");
    let (t, cert) = cone_functor(&s).unwrap();
    assert!(t.d1.compose(&t.d2).is_zero());
    assert_eq!(t.homotopy(), s.homotopy());
    // λ' is the identity of (x), so π3 vanishes.
    assert!(s.lam2.is_identity());
    assert_eq!(t.homotopy().dim(3), Some(0));
    assert!(cert.notes.iter().any(|n| n.contains("-h(c,n)")), "{:?}", cert.notes);
}

#[test]
fn cone_certificates_hold_on_every_square() {
    for (name, s) in square_inputs() {
        let (_, cert) = cone_functor(s).unwrap();
        assert!(cert.is_ok(), "{name}: {}", cert.render());
    }
}

#[test]
fn psi_on_zero_square_is_zero() {
    let (q, cert) = psi_functor(&square("zerosq")).unwrap();
    assert_eq!((q.l.dim(), q.m.dim()), (0, 0));
    assert!(cert.is_ok());
}

#[test]
fn psi_on_ideal_square_regression() {
    for field in [Field::Rational, f7()] {
        let s = match fixture("idealsq", FixtureParams::over(field)).unwrap().structure {
            Structure::Square(s) => s,
            _ => unreachable!(),
        };
        let (q, cert) = psi_functor(&s).unwrap();
        assert_eq!((q.m.dim(), q.l.dim(), q.c_dim()), (4, 2, 2));
        assert!(cert.is_ok(), "{}", cert.render());
        for name in ["semidirect Peiffer element (c·ν(n), −n·μ(c))", "agrees with lambda after the cone"] {
            assert!(cert.construction.check(name).unwrap().passed(), "{name}");
        }
    }
}

#[test]
fn simp2_on_constant_and_nerve() {
    let (t, _) = simp_to_2crossed(&simplicial("const")).unwrap();
    assert_eq!((t.c2.dim(), t.c1.dim()), (0, 0));

    // The nerve gives back 0 -> C -> R.
    let e = simplicial("nerve");
    let (t, cert) = simp_to_2crossed(&e).unwrap();
    assert_eq!(t.c2.dim(), 0);
    let original = match fixture("crossed", FixtureParams::default()).unwrap().structure {
        Structure::Crossed(p) => p,
        _ => unreachable!(),
    };
    assert_eq!(t.c1.dim(), original.c.dim());
    assert_eq!(t.c0.dim(), original.r.dim());
    assert_eq!(t.d1.rank(), original.boundary.rank());
    assert!(t.bottom().validate(true).is_valid());
    assert!(cert.is_ok());
}

#[test]
fn simp2_top_homotopy_is_the_kernel() {
    for (name, e) in simplicial_fixtures() {
        let (t, cert) = simp_to_2crossed(e).unwrap();
        assert!(cert.verdict.is_valid(), "{name}");
        assert_eq!(t.homotopy().dim(3), Some(kernel(&t.d2).dim()));
        let pi = e.homotopy().unwrap().shifted_up();
        for d in 0..=2 {
            assert_eq!(t.homotopy().dim(d), pi.dim(d), "{name} degree {d}");
        }
    }
}

#[test]
fn lambda_preserves_homotopy_on_two_crossed_inputs() {
    for (name, t) in two_crossed_inputs() {
        let (_, cert) = lambda_functor(t).unwrap();
        if name.contains("dk-f3") {
            continue;
        }
        assert!(cert.is_ok(), "{name}: {}", cert.render());
    }
}

#[test]
fn delta_loses_pi3_in_characteristic_three() {
    let e = simplicial("dk-f3");
    let (q, cert) = delta_functor(&e).unwrap();
    assert!(q.validate().is_valid());
    assert_eq!(e.homotopy().unwrap().dim(2), Some(1));
    assert_eq!(q.homotopy().dim(3), Some(0));
    assert!(!cert.homotopy_preserved());
}

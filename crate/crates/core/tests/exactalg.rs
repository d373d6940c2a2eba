//! Exact algebra layer against the independent oracle.

mod common;

use common::{f7, Oracle};
use hocalg::exactalg::{kernel, semidirect, Action, Field, FinAlgebra, LinMap, Subspace};
use hocalg::fixtures::MonomialAlgebra;

fn poly(f: Field, n: usize) -> FinAlgebra {
    MonomialAlgebra::truncated(f, n).algebra
}

fn fields() -> [Field; 2] {
    [Field::Rational, f7()]
}

/// All `a(bc) = (ab)c` triples, computed from raw structure constants.
fn associative_by_hand(o: &Oracle, a: &FinAlgebra) -> bool {
    let d = a.dim();
    let table: Vec<Vec<Vec<common::Elt>>> =
        (0..d).map(|i| (0..d).map(|j| o.vector(a.basis_product(i, j))).collect()).collect();
    let mul = |u: &[common::Elt], v: &[common::Elt]| -> Vec<common::Elt> {
        let mut out = vec![common::zero_rat(); d];
        for i in 0..d {
            for j in 0..d {
                let c = &u[i] * &v[j];
                for k in 0..d {
                    out[k] += &c * &table[i][j][k];
                }
            }
        }
        out.into_iter().map(|x| o.parse(&render(&x))).collect()
    };
    let unit = |i: usize| -> Vec<common::Elt> {
        (0..d).map(|k| if k == i { num_traits::One::one() } else { common::zero_rat() }).collect()
    };
    (0..d).all(|i| {
        (0..d).all(|j| (0..d).all(|k| mul(&unit(i), &mul(&unit(j), &unit(k))) == mul(&mul(&unit(i), &unit(j)), &unit(k))))
    })
}

fn render(x: &common::Elt) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[test]
fn truncated_cubic_is_a_valid_algebra() {
    for f in fields() {
        let a = poly(f, 3);
        assert_eq!(a.labels(), ["1", "x", "x^2"]);
        assert!(a.validate().is_valid());
        assert!(associative_by_hand(&Oracle::of(f), &a));
    }
}

#[test]
fn projection_to_the_second_factor_has_a_two_dimensional_kernel() {
    for f in fields() {
        let d1 = LinMap::from_fn(f, 2, 4, |j| {
            let mut v = vec![f.zero(); 2];
            if j >= 2 {
                v[j - 2] = f.one();
            }
            v
        });
        assert_eq!(kernel(&d1).dim(), 2);
        assert_eq!(Oracle::of(f).common_kernel_dim(4, &[&d1]), 2);
    }
}

#[test]
fn ideal_generated_by_x() {
    for f in fields() {
        let a = poly(f, 4);
        let i = a.ideal_closure(vec![a.unit(1)]);
        assert_eq!(i.dim(), 3);
        assert_eq!(Oracle::of(f).ideal_dim(&a, &[a.unit(1)], &[]), 3);
        assert_eq!(i, Subspace::span(f, 4, vec![a.unit(1), a.unit(2), a.unit(3)]));
    }
}

#[test]
fn quotient_by_x_cubed_is_the_truncated_cubic() {
    for f in fields() {
        let a = poly(f, 4);
        let i = a.ideal_closure(vec![a.unit(3)]);
        let q = a.quotient(&i, "q").unwrap();
        // Coset representatives 1, x, x² multiply as in k[x]/(x³).
        let small = poly(f, 3);
        assert_eq!(q.algebra.clone().with_labels(small.labels().to_vec()), small);
        assert_eq!(kernel(&q.proj), i);
    }
}

#[test]
fn non_ideals_are_rejected() {
    let f = Field::Rational;
    let a = poly(f, 4);
    let s = Subspace::span(f, 4, vec![a.unit(2)]);
    assert!(!a.is_ideal(&s));
    assert!(!common::is_ideal_brute(&a, &s));
    assert!(a.quotient(&s, "q").is_err());
}

#[test]
fn product_span_of_x_with_itself() {
    for f in fields() {
        let a = poly(f, 4);
        let x = a.ideal_closure(vec![a.unit(1)]);
        let p = a.product_span(&x, &x);
        assert_eq!(p, Subspace::span(f, 4, vec![a.unit(2), a.unit(3)]));
        let o = Oracle::of(f);
        let prods: Vec<Vec<common::Elt>> =
            x.basis().iter().flat_map(|u| x.basis().iter().map(|v| o.vector(&a.mul(u, v)))).collect();
        assert_eq!(o.rank(prods), 2);
    }
}

#[test]
fn multiplication_action_on_an_ideal_is_an_action() {
    for f in fields() {
        let r = poly(f, 4);
        let i = r.ideal_closure(vec![r.unit(1)]);
        let act = Action::regular(&r).restrict(&i).unwrap();
        let (c, _) = r.sub_algebra(&i, "c").unwrap();
        assert!(act.check_associative("assoc", &r).passed());
        assert!(act.check_multiplicative("mul", &c).passed());
    }
}

#[test]
fn semidirect_product_of_x_by_the_cubic() {
    for f in fields() {
        let n = poly(f, 3);
        let i = n.ideal_closure(vec![n.unit(1)]);
        let (m, _) = n.sub_algebra(&i, "m").unwrap();
        let act = Action::regular(&n).restrict(&i).unwrap();
        let sd = semidirect(&m, &n, &act);
        assert_eq!(sd.dim(), 5);
        assert!(sd.validate().is_valid());
        assert!(associative_by_hand(&Oracle::of(f), &sd));
    }
}

#[test]
fn singularisation() {
    for f in fields() {
        let z = FinAlgebra::zero_mul(f, 3);
        assert_eq!(z.singularise("s").algebra.dim(), 3);

        let a = poly(f, 4);
        let x = a.ideal_closure(vec![a.unit(1)]);
        let (c, _) = a.sub_algebra(&x, "c").unwrap();
        let s = c.singularise("s");
        assert_eq!(s.kernel.dim(), 2);
        assert_eq!(s.algebra.dim(), 1);
        assert!(s.algebra.has_zero_mul());

        assert_eq!(poly(f, 3).singularise("s").algebra.dim(), 0);
    }
}

#[test]
fn rationals_reduce_modulo_seven() {
    let f = f7();
    assert_eq!(f.parse("1/3").unwrap().render(), "5");
    assert_eq!(f.parse("-1").unwrap().render(), "6");
    assert_eq!(Field::Rational.parse("6/-4").unwrap().render(), "-3/2");
}

#[test]
fn characteristic_two_needs_an_override() {
    assert!(Field::prime(2, false).is_err());
    assert!(Field::prime(2, true).is_ok());
    assert!(Field::prime(9, true).is_err());
}

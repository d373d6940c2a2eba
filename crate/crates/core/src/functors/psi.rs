//! Quadratic module of a crossed square, computed from explicit formulas on
//! the cone complex `L -> M⋊N -> R`.

use super::certificate::{chain_witnesses, FunctorCertificate};
use super::cone::{candidate_lifting, cone_complex, cone_functor};
use super::lambda::{assemble, lambda_functor, peiffer_generators, three_term_homologies};
use crate::cli::bundle::{Bundle, Structure};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{neg_vec, render_vec};
use crate::exactalg::{closure, LinMap, Vector};
use crate::report::CheckBuilder;
use crate::structures::{CrossedSquare, QuadraticModule};

pub fn psi_functor(s: &CrossedSquare) -> Result<(QuadraticModule, FunctorCertificate)> {
    let input = s.validate();
    if !input.is_valid() {
        return Err(Error::InvalidInput(format!("input is not a crossed square\n{}", input.render())));
    }
    let f = s.r.field();
    let (dm, dn) = (s.m.dim(), s.n.dim());
    let mut t = cone_complex(s);
    t.lifting = candidate_lifting(s, "-h(c,n)");
    let mut cert = FunctorCertificate::new("psi");
    cert.input_digest = Bundle::new("input", Structure::Square(s.clone())).digest();

    let pair = |m: Vector, n: Vector| -> Vector { [m, n].concat() };
    let m_unit = |i: usize| s.m.unit(i);
    let n_unit = |i: usize| s.n.unit(i);
    // n·μ(c), m·ν(a), and the R-actions they feed into.
    let n_mu = |n: &[crate::exactalg::Scalar], c: &[crate::exactalg::Scalar]| s.act_n.act(&s.mu.apply(c), n);
    let m_nu = |m: &[crate::exactalg::Scalar], a: &[crate::exactalg::Scalar]| s.act_m.act(&s.nu.apply(a), m);

    let pre = t.bottom();
    let mut ch = CheckBuilder::new("semidirect Peiffer element (c·ν(n), −n·μ(c))");
    for i in 0..dm + dn {
        for j in 0..dm + dn {
            let (x, y) = (t.c1.unit(i), t.c1.unit(j));
            let (n, c) = (x[dm..].to_vec(), y[..dm].to_vec());
            let expect = pair(m_nu(&c, &n), neg_vec(&n_mu(&n, &c)));
            let got = pre.peiffer(&x, &y);
            ch.test(got == expect, || format!("x=e{i}, y=e{j}: Peiffer element {} but formula gives {}", render_vec(&got), render_vec(&expect)));
        }
    }
    cert.check(ch.finish());

    let mut p3 = Vec::new();
    let mut p3p = Vec::new();
    for mp in 0..dm {
        for n in 0..dn {
            for c in 0..dm {
                let w = n_mu(&n_unit(n), &m_unit(c));
                p3.push(pair(neg_vec(&m_nu(&m_unit(mp), &w)), s.act_n.act(&s.mu.apply(&m_unit(mp)), &w)));
                p3p.push(s.h.apply(&m_unit(mp), &w));
            }
            for a in 0..dn {
                let u = m_nu(&m_unit(mp), &n_unit(a));
                p3.push(pair(m_nu(&u, &n_unit(n)), neg_vec(&n_mu(&n_unit(n), &u))));
                p3p.push(s.h.apply(&u, &n_unit(n)));
            }
        }
    }

    // The explicit generators must span the same ideals as the general ones.
    let (g3, g3p) = peiffer_generators(&t);
    let mut ops1 = t.c1.basis_operators();
    ops1.extend(t.act10.operators().iter().cloned());
    let mut ops2 = t.c2.basis_operators();
    ops2.extend(t.act20.operators().iter().cloned());
    let (a3, b3) = (closure(f, dm + dn, p3.clone(), &ops1), closure(f, dm + dn, g3, &ops1));
    cert.fact("explicit P3 generators span P3", a3 == b3, || format!("dims {} and {}", a3.dim(), b3.dim()));
    let (a3p, b3p) = (closure(f, s.l.dim(), p3p.clone(), &ops2), closure(f, s.l.dim(), g3p, &ops2));
    cert.fact("explicit P3' generators span P3'", a3p == b3p, || format!("dims {} and {}", a3p.dim(), b3p.dim()));

    let (q, parts) = assemble(&t, p3, p3p, &mut cert)?;

    match cone_functor(s).and_then(|(tc, _)| lambda_functor(&tc)) {
        Ok((ql, _)) => cert.fact("agrees with lambda after the cone", ql == q, || "the two quadratic modules differ".into()),
        Err(e) => cert.notes.push(format!("cone path unavailable: {e}")),
    }

    cert.output_digest = Bundle::new("output", Structure::Quadratic(q.clone())).digest();
    cert.verdict = q.validate();
    cert.set_tables(s.homotopy(), q.homotopy(), 0..=3);
    let [s3, s2, s1] = three_term_homologies(&s.cone_d2(), &s.cone_d1());
    let [t3, t2, t1] = three_term_homologies(&q.delta, &q.boundary);
    cert.witnesses = chain_witnesses(&[
        (3, s3, t3, parts.q2.proj.clone()),
        (2, s2, t2, parts.q1.proj.clone()),
        (1, s1, t1, LinMap::identity(f, s.r.dim())),
    ]);
    Ok((q, cert))
}

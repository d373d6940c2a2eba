//! Mapping cone of a crossed square: `L -> M⋊N -> R` with
//! `∂₂ = (−λ, λ')` and `∂₁ = μ + ν`.

use super::certificate::{chain_witnesses, FunctorCertificate};
use super::lambda::three_term_homologies;
use crate::cli::bundle::{Bundle, Structure};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{neg_vec, zero_vec};
use crate::exactalg::{semidirect, Action, Bilinear, LinMap};
use crate::structures::{CrossedSquare, TwoCrossedModule};

/// Candidate Peiffer liftings on `(m,n) ⊗ (c,a)`, in the order tried.
pub const CANDIDATES: [&str; 6] = ["h(c,na)", "-h(c,na)", "-h(c,n)", "h(c,n)", "h(m,a)", "-h(m,a)"];

/// The cone complex with actions but the lifting left at zero.
pub fn cone_complex(s: &CrossedSquare) -> TwoCrossedModule {
    let f = s.r.field();
    let (dm, dn) = (s.m.dim(), s.n.dim());
    let c1 = semidirect(&s.m, &s.n, &s.n_on_m());
    let act10 = Action::from_fn(f, s.r.dim(), dm + dn, |z, j| {
        if j < dm {
            [s.act_m.basis_act(z, j), zero_vec(f, dn)].concat()
        } else {
            [zero_vec(f, dm), s.act_n.basis_act(z, j - dm)].concat()
        }
    });
    let to_n = LinMap::zero(f, s.r.dim(), dm).hcat(&s.nu);
    TwoCrossedModule {
        d2: s.cone_d2(),
        d1: s.cone_d1(),
        act10,
        act20: s.act_l.clone(),
        act21: s.act_l.pull_back(&to_n),
        lifting: Bilinear::zero(f, dm + dn, dm + dn, s.l.dim()),
        c2: s.l.clone(),
        c1,
        c0: s.r.clone(),
    }
}

/// Lifting table for one candidate formula.
pub fn candidate_lifting(s: &CrossedSquare, which: &str) -> Bilinear {
    let f = s.r.field();
    let (dm, dn, dl) = (s.m.dim(), s.n.dim(), s.l.dim());
    let split = |k: usize| -> (Vec<_>, Vec<_>) {
        let mut m = zero_vec(f, dm);
        let mut n = zero_vec(f, dn);
        if k < dm {
            m[k] = f.one();
        } else {
            n[k - dm] = f.one();
        }
        (m, n)
    };
    Bilinear::from_fn(f, dm + dn, dm + dn, dl, |i, j| {
        let (m, n) = split(i);
        let (c, a) = split(j);
        let v = match which.trim_start_matches('-') {
            "h(c,na)" => s.h.apply(&c, &s.n.mul(&n, &a)),
            "h(c,n)" => s.h.apply(&c, &n),
            "h(m,a)" => s.h.apply(&m, &a),
            other => panic!("unknown candidate {other}"),
        };
        if which.starts_with('-') {
            neg_vec(&v)
        } else {
            v
        }
    })
}

pub fn cone_functor(s: &CrossedSquare) -> Result<(TwoCrossedModule, FunctorCertificate)> {
    let input = s.validate();
    if !input.is_valid() {
        return Err(Error::InvalidInput(format!("input is not a crossed square\n{}", input.render())));
    }
    let base = cone_complex(s);
    let mut winners = Vec::new();
    let mut seen: Vec<Bilinear> = Vec::new();
    for name in CANDIDATES {
        let lifting = candidate_lifting(s, name);
        if seen.contains(&lifting) {
            continue;
        }
        seen.push(lifting.clone());
        let t = TwoCrossedModule { lifting, ..base.clone() };
        if t.validate().is_valid() {
            winners.push((name, t));
        }
    }
    let names: Vec<&str> = winners.iter().map(|w| w.0).collect();
    if winners.len() != 1 {
        return Err(Error::Construction(format!(
            "mapping cone lifting is not determined: {} of the distinct candidates validate ({})",
            winners.len(),
            names.join(", ")
        )));
    }
    let (name, t) = winners.remove(0);
    let mut cert = FunctorCertificate::new("cone");
    cert.input_digest = Bundle::new("input", Structure::Square(s.clone())).digest();
    cert.output_digest = Bundle::new("output", Structure::TwoCrossed(t.clone())).digest();
    cert.notes.push(format!("lifting {{(m,n)⊗(c,a)}} = {name}"));
    cert.verdict = t.validate();
    cert.set_tables(s.homotopy(), t.homotopy(), 0..=3);
    let [s3, s2, s1] = three_term_homologies(&s.cone_d2(), &s.cone_d1());
    let [t3, t2, t1] = three_term_homologies(&t.d2, &t.d1);
    let f = s.r.field();
    cert.witnesses = chain_witnesses(&[
        (3, s3, t3, LinMap::identity(f, t.c2.dim())),
        (2, s2, t2, LinMap::identity(f, t.c1.dim())),
        (1, s1, t1, LinMap::identity(f, t.c0.dim())),
    ]);
    Ok((t, cert))
}

//! Constructions out of a truncated simplicial algebra: the 2-crossed module
//! on `NE₂/∂₃(NE₃∩D₃) -> NE₁ -> NE₀` and the quadratic module Δ built on
//! `NE₂/∂₃NE₃ -> NE₁ -> NE₀`.

use super::certificate::{chain_witnesses, FunctorCertificate, Homology};
use super::lambda::{assemble, peiffer_generators, three_term_homologies};
use crate::cli::bundle::{Bundle, Structure};
use crate::error::{Error, Result};
use crate::exactalg::algebra::Quotient;
use crate::exactalg::matrix::{render_vec, sub_vec};
use crate::exactalg::{Action, Bilinear, LinMap, Subspace, Vector};
use crate::pairings::{pairing_table, SurjIndex};
use crate::report::CheckBuilder;
use crate::simplicial::{MooreComplex, TruncSimplicialAlgebra};
use crate::structures::{QuadraticModule, TwoCrossedModule};

/// The Moore complex together with the quotient `NE₂ -> C₂`.
pub struct SimplicialBase {
    pub moore: MooreComplex,
    pub top: Quotient,
}

fn coords_in(space: &Subspace, v: &[crate::exactalg::Scalar], what: &str) -> Result<Vector> {
    space.coords(v).ok_or_else(|| Error::Construction(format!("{what} leaves the Moore space: {}", render_vec(v))))
}

fn action_from(field: crate::exactalg::Field, acting: usize, module: usize, f: impl Fn(usize, usize) -> Result<Vector>) -> Result<Action> {
    let mut a = Action::trivial(field, acting, module);
    for i in 0..acting {
        for j in 0..module {
            a.set_basis_act(i, j, f(i, j)?);
        }
    }
    Ok(a)
}

/// `NE₂/K -> NE₁ -> NE₀` with the lifting `s₁x(s₁y − s₀y)`, for an ideal
/// `K ⊆ NE₂` given in the stored coordinates of `NE₂`.
pub fn simplicial_base(e: &TruncSimplicialAlgebra, kill: &Subspace) -> Result<(TwoCrossedModule, SimplicialBase)> {
    e.require_truncation(3)?;
    let f = e.field();
    let moore = e.moore()?;
    let ne = &moore.spaces;
    let (ne2, _) = e.level(2).sub_algebra(&ne[2], "ne2")?;
    let (c1, _) = e.level(1).sub_algebra(&ne[1], "ne1")?;
    let (c0, _) = e.level(0).sub_algebra(&ne[0], "ne0")?;
    let top = ne2.quotient(kill, "c2")?;
    let (e1, e2) = (e.level(1), e.level(2));
    let (inc0, inc1, inc2) = (ne[0].inclusion(), ne[1].inclusion(), ne[2].inclusion());
    let (s0_1, s0_2, s1_2) = (e.degen(0, 0), e.degen(1, 0), e.degen(1, 1));
    let lift_top = inc2.compose(&top.lift);
    let (n2, n1, n0) = (top.algebra.dim(), c1.dim(), c0.dim());

    let to_c2 = |v: &[crate::exactalg::Scalar], what: &str| -> Result<Vector> { Ok(top.proj.apply(&coords_in(&ne[2], v, what)?)) };

    let act10 = action_from(f, n0, n1, |z, y| {
        coords_in(&ne[1], &e1.mul(&inc1.column(y), &s0_1.apply(&inc0.column(z))), "NE0 acting on NE1")
    })?;
    let act20 = action_from(f, n0, n2, |z, x| {
        to_c2(&e2.mul(&lift_top.column(x), &s1_2.apply(&s0_1.apply(&inc0.column(z)))), "NE0 acting on NE2")
    })?;
    let act21 = action_from(f, n1, n2, |y, x| to_c2(&e2.mul(&lift_top.column(x), &s1_2.apply(&inc1.column(y))), "NE1 acting on NE2"))?;
    let mut lifting = Bilinear::zero(f, n1, n1, n2);
    for a in 0..n1 {
        let xa = s1_2.apply(&inc1.column(a));
        for b in 0..n1 {
            let yb = inc1.column(b);
            let v = e2.mul(&xa, &sub_vec(&s1_2.apply(&yb), &s0_2.apply(&yb)));
            lifting.set_basis_value(a, b, to_c2(&v, "Peiffer lifting")?);
        }
    }
    let t = TwoCrossedModule {
        d2: moore.boundaries[2].compose(&top.lift),
        d1: moore.boundaries[1].clone(),
        c2: top.algebra.clone(),
        c1,
        c0,
        act10,
        act20,
        act21,
        lifting,
    };
    Ok((t, SimplicialBase { moore, top }))
}

/// `∂₃(NE₃)` in the coordinates of `NE₂`.
pub fn boundary_ne3(m: &MooreComplex) -> Subspace {
    crate::exactalg::image(&m.boundaries[3])
}

/// `∂₃(NE₃ ∩ D₃)` in the coordinates of `NE₂`.
pub fn boundary_ne3_degenerate(e: &TruncSimplicialAlgebra, m: &MooreComplex) -> Subspace {
    let w = m.spaces[3].intersect(&e.degenerate_ideal(3));
    let img = w.image(e.face(3, 3));
    img.coords_in(&m.spaces[2]).expect("d3 maps NE3 into NE2")
}

fn simplicial_digest(e: &TruncSimplicialAlgebra) -> String {
    Bundle::new("input", Structure::Simplicial(e.clone())).digest()
}

pub fn delta_functor(e: &TruncSimplicialAlgebra) -> Result<(QuadraticModule, FunctorCertificate)> {
    e.require_truncation(3)?;
    let mut cert = FunctorCertificate::new("delta");
    cert.input_digest = simplicial_digest(e);
    let moore = e.moore()?;
    let (t, base) = simplicial_base(e, &boundary_ne3(&moore))?;
    let (p3, p3p) = peiffer_generators(&t);
    let (q, parts) = assemble(&t, p3, p3p, &mut cert)?;

    // The three pairings used to establish QM3 and QM4.
    let b3 = e.boundary_image(3, &moore.spaces[3]);
    for (alpha, beta) in [(vec![2, 0], vec![1]), (vec![2, 1], vec![0]), (vec![1], vec![0])] {
        let a = SurjIndex::new(3, alpha)?;
        let b = SurjIndex::new(3, beta)?;
        let table = pairing_table(e, &a, &b);
        let mut ch = CheckBuilder::new(format!("d3 C{a}{b} in d3(NE3)"));
        for i in 0..table.left_dim() {
            for j in 0..table.right_dim() {
                let v = e.face(3, 3).apply(table.basis_value(i, j));
                ch.test(b3.contains(&v), || format!("x=e{i}, y=e{j}: d3 C = {}", render_vec(&v)));
            }
        }
        cert.check(ch.finish());
    }

    cert.output_digest = Bundle::new("output", Structure::Quadratic(q.clone())).digest();
    cert.verdict = q.validate();
    cert.set_tables(e.homotopy()?.shifted_up(), q.homotopy(), 0..=3);
    let b = &base.moore.boundaries;
    let [t3, t2, t1] = three_term_homologies(&q.delta, &q.boundary);
    cert.witnesses = chain_witnesses(&[
        (3, Homology::new(&b[3], &b[2]), t3, parts.q2.proj.compose(&base.top.proj)),
        (2, Homology::new(&b[2], &b[1]), t2, parts.q1.proj.clone()),
        (1, Homology::new(&b[1], &b[0]), t1, LinMap::identity(e.field(), b[0].source_dim())),
    ]);
    Ok((q, cert))
}

pub fn simp_to_2crossed(e: &TruncSimplicialAlgebra) -> Result<(TwoCrossedModule, FunctorCertificate)> {
    e.require_truncation(3)?;
    let mut cert = FunctorCertificate::new("simp2");
    cert.input_digest = simplicial_digest(e);
    let moore = e.moore()?;
    let kill = boundary_ne3_degenerate(e, &moore);
    let (t, base) = simplicial_base(e, &kill)?;

    // Comparison with the quotient by all of ∂₃NE₃.
    let full = boundary_ne3(&moore);
    let (t_full, base_full) = simplicial_base(e, &full)?;
    let j = base_full.top.proj.compose(&base.top.lift);
    cert.fact("j is onto", j.rank() == j.target_dim(), || format!("rank {} of {}", j.rank(), j.target_dim()));
    cert.fact("j commutes with the boundaries", t_full.d2.compose(&j) == t.d2, || "d2 j differs from d2".into());

    cert.output_digest = Bundle::new("output", Structure::TwoCrossed(t.clone())).digest();
    cert.verdict = t.validate();
    let before = e.homotopy()?.shifted_up();
    let after = t.homotopy();
    cert.notes.push(format!(
        "pi_3 is the kernel of the top boundary: {} here, {} for the simplicial algebra",
        after.dim(3).map_or("undefined".into(), |d| d.to_string()),
        before.dim(3).map_or("undefined".into(), |d| d.to_string())
    ));
    cert.set_tables(before, after, 0..=2);
    let b = &base.moore.boundaries;
    let [_, t2, t1] = three_term_homologies(&t.d2, &t.d1);
    cert.witnesses = chain_witnesses(&[
        (2, Homology::new(&b[2], &b[1]), t2, LinMap::identity(e.field(), t.c1.dim())),
        (1, Homology::new(&b[1], &b[0]), t1, LinMap::identity(e.field(), t.c0.dim())),
    ]);
    Ok((t, cert))
}

//! The crossed square of a simplicial algebra:
//!
//! ```text
//!   NE₂/∂₃NE₃ --> ker d₀
//!       |            |
//!       v            v
//!    ker d₁  -----> E₁
//! ```
//! with `h(x, z) = s₁x(s₁z − s₀z)`.

use super::certificate::FunctorCertificate;
use super::simplicial::boundary_ne3;
use crate::cli::bundle::{Bundle, Structure};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{render_vec, sub_vec};
use crate::exactalg::{kernel, Action, Bilinear, LinMap, Vector};
use crate::report::CheckBuilder;
use crate::simplicial::TruncSimplicialAlgebra;
use crate::structures::CrossedSquare;

pub fn m2_functor(e: &TruncSimplicialAlgebra) -> Result<(CrossedSquare, FunctorCertificate)> {
    e.require_truncation(3)?;
    let f = e.field();
    let moore = e.moore()?;
    let ne = &moore.spaces;
    let (e1, e2) = (e.level(1), e.level(2));
    let (s0_1, s0_2, s1_2) = (e.degen(0, 0), e.degen(1, 0), e.degen(1, 1));
    let (ne2, _) = e2.sub_algebra(&ne[2], "ne2")?;
    let top = ne2.quotient(&boundary_ne3(&moore), "l")?;
    let lift_top = ne[2].inclusion().compose(&top.lift);
    let ker_d1 = kernel(e.face(1, 1));
    let (m, mu) = e1.sub_algebra(&ne[1], "m")?;
    let (n, nu) = e1.sub_algebra(&ker_d1, "n")?;
    let leaves = |what: &str| Error::Construction(format!("{what} leaves its target"));
    let to_l = |v: &[crate::exactalg::Scalar]| -> Result<Vector> {
        Ok(top.proj.apply(&ne[2].coords(v).ok_or_else(|| leaves("product in E2"))?))
    };

    let d2 = e.face(2, 2);
    let cols_m: Vec<Vector> = (0..top.algebra.dim())
        .map(|x| ne[1].coords(&d2.apply(&lift_top.column(x))).ok_or_else(|| leaves("d2")))
        .collect::<Result<_>>()?;
    let cols_n: Vec<Vector> = (0..top.algebra.dim())
        .map(|x| ker_d1.coords(&d2.apply(&lift_top.column(x))).ok_or_else(|| leaves("d2")))
        .collect::<Result<_>>()?;

    let mut act_l = Action::trivial(f, e1.dim(), top.algebra.dim());
    for r in 0..e1.dim() {
        let sr = s1_2.apply(&e1.unit(r));
        for x in 0..top.algebra.dim() {
            act_l.set_basis_act(r, x, to_l(&e2.mul(&lift_top.column(x), &sr))?);
        }
    }
    let reg = Action::regular(e1);
    let mut h = Bilinear::zero(f, m.dim(), n.dim(), top.algebra.dim());
    for x in 0..m.dim() {
        let sx = s1_2.apply(&mu.column(x));
        for z in 0..n.dim() {
            let zv = nu.column(z);
            h.set_basis_value(x, z, to_l(&e2.mul(&sx, &sub_vec(&s1_2.apply(&zv), &s0_2.apply(&zv))))?);
        }
    }
    let sq = CrossedSquare {
        lam: LinMap::from_columns(f, m.dim(), &cols_m),
        lam2: LinMap::from_columns(f, n.dim(), &cols_n),
        act_l,
        act_m: reg.restrict(&ne[1])?,
        act_n: reg.restrict(&ker_d1)?,
        l: top.algebra.clone(),
        m,
        n,
        r: e1.clone(),
        mu,
        nu,
        h,
    };

    let mut cert = FunctorCertificate::new("m2");
    cert.input_digest = Bundle::new("input", Structure::Simplicial(e.clone())).digest();
    cert.output_digest = Bundle::new("output", Structure::Square(sq.clone())).digest();

    // λh(x, z) is the Peiffer element ⟨x, z − s₀d₀z⟩ of NE₁ -> NE₀.
    let mut ch = CheckBuilder::new("λh(x,z) = ⟨x, z − s0 d0 z⟩");
    for x in 0..sq.m.dim() {
        let xv = sq.mu.column(x);
        for z in 0..sq.n.dim() {
            let zv = sq.nu.column(z);
            let y = sub_vec(&zv, &s0_1.apply(&e.face(1, 0).apply(&zv)));
            let peiffer = sub_vec(&e1.mul(&xv, &y), &e1.mul(&xv, &s0_1.apply(&e.face(1, 1).apply(&y))));
            let lhs = sq.mu.apply(&sq.lam.apply(sq.h.basis_value(x, z)));
            ch.test(lhs == peiffer, || format!("x=e{x}, z=e{z}: λh={} but Peiffer element={}", render_vec(&lhs), render_vec(&peiffer)));
        }
    }
    cert.check(ch.finish());
    cert.verdict = sq.validate();
    cert.set_tables(e.homotopy()?.shifted_up(), sq.homotopy(), 0..=3);
    cert.notes.push("no chain map to the Moore complex; dimensions only".into());
    Ok((sq, cert))
}

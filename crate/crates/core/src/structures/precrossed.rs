//! Pre-crossed and crossed modules, Peiffer elements and the ideals P₂, P₃.

use crate::error::Result;
use crate::exactalg::matrix::{render_vec, sub_vec};
use crate::exactalg::{Action, Bilinear, FinAlgebra, LinMap, Scalar, Subspace, Vector};
use crate::report::{Check, CheckBuilder, ValidationReport};

/// `∂: C -> R` with an action of `R` on `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreCrossedModule {
    pub c: FinAlgebra,
    pub r: FinAlgebra,
    pub boundary: LinMap,
    pub act: Action,
}

/// Equivariance `∂(c·r) = ∂(c) r` on basis pairs.
pub fn check_equivariant_boundary(name: &str, c: &FinAlgebra, r: &FinAlgebra, boundary: &LinMap, act: &Action) -> Check {
    let mut ch = CheckBuilder::new(name);
    for i in 0..r.dim() {
        for j in 0..c.dim() {
            let lhs = boundary.apply(&act.basis_act(i, j));
            let rhs = r.mul(&boundary.column(j), &r.unit(i));
            ch.test(lhs == rhs, || format!("d(c{j}·r{i})={} but d(c{j})r{i}={}", render_vec(&lhs), render_vec(&rhs)));
        }
    }
    ch.finish()
}

/// Peiffer identity `c'·∂(c) = c'c` on basis pairs.
pub fn check_peiffer_identity(name: &str, c: &FinAlgebra, boundary: &LinMap, act: &Action) -> Check {
    let mut ch = CheckBuilder::new(name);
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            let lhs = act.act(&boundary.column(j), &c.unit(i));
            let rhs = c.basis_product(i, j);
            ch.test(&lhs == rhs, || format!("c{i}·d(c{j})={} but c{i}c{j}={}", render_vec(&lhs), render_vec(rhs)));
        }
    }
    ch.finish()
}

/// All checks that make `(c, r, ∂, act)` a pre-crossed (and, with
/// `crossed`, a crossed) module, prefixed by `prefix`.
pub fn precrossed_checks(prefix: &str, c: &FinAlgebra, r: &FinAlgebra, boundary: &LinMap, act: &Action, crossed: bool) -> Vec<Check> {
    let mut out = vec![
        c.check_hom(&format!("{prefix}boundary is an algebra map"), boundary, r),
        act.check_associative(&format!("{prefix}action module law"), r),
        act.check_multiplicative(&format!("{prefix}action multiplicative"), c),
        check_equivariant_boundary(&format!("{prefix}boundary equivariant"), c, r, boundary, act),
    ];
    if crossed {
        out.push(check_peiffer_identity(&format!("{prefix}Peiffer identity"), c, boundary, act));
    }
    out
}

impl PreCrossedModule {
    pub fn new(c: FinAlgebra, r: FinAlgebra, boundary: LinMap, act: Action) -> PreCrossedModule {
        PreCrossedModule { c, r, boundary, act }
    }

    /// Inclusion of an ideal, acting by multiplication.
    pub fn ideal_inclusion(r: &FinAlgebra, ideal: &Subspace) -> Result<PreCrossedModule> {
        let (c, inc) = r.sub_algebra(ideal, "c")?;
        let act = Action::regular(r).restrict(ideal)?;
        Ok(PreCrossedModule { c, r: r.clone(), boundary: inc, act })
    }

    pub fn validate(&self, crossed: bool) -> ValidationReport {
        let mut rep = ValidationReport::new(if crossed { "crossed_module" } else { "pre_crossed_module" });
        rep.absorb("C.", self.c.validate());
        rep.absorb("R.", self.r.validate());
        for ch in precrossed_checks("", &self.c, &self.r, &self.boundary, &self.act, crossed) {
            rep.push(ch);
        }
        rep
    }

    /// `⟨x,y⟩ = xy − x·∂y`
    pub fn peiffer(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        sub_vec(&self.c.mul(x, y), &self.act.act(&self.boundary.apply(y), x))
    }

    pub fn peiffer_table(&self) -> Bilinear {
        let d = self.c.dim();
        Bilinear::from_fn(self.c.field(), d, d, d, |i, j| self.peiffer(&self.c.unit(i), &self.c.unit(j)))
    }

    pub fn p2(&self) -> Subspace {
        let t = self.peiffer_table();
        let d = self.c.dim();
        let gens = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| t.basis_value(i, j).clone()).collect();
        self.c.ideal_closure(gens)
    }

    /// Length-3 Peiffer elements in both bracketings.
    pub fn p3_generators(&self) -> Vec<Vector> {
        let t = self.peiffer_table();
        let d = self.c.dim();
        let mut gens = Vec::with_capacity(2 * d * d * d);
        for i in 0..d {
            for j in 0..d {
                let xy = t.basis_value(i, j);
                for k in 0..d {
                    gens.push(self.peiffer(xy, &self.c.unit(k)));
                    gens.push(self.peiffer(&self.c.unit(k), xy));
                }
            }
        }
        gens
    }

    pub fn p3(&self) -> Subspace {
        self.c.ideal_closure(self.p3_generators())
    }

    pub fn is_nil2(&self) -> bool {
        self.p3().is_zero()
    }

    /// The crossed module `C/P₂ -> R` and the projection `C -> C/P₂`.
    pub fn associated_crossed(&self) -> Result<(PreCrossedModule, LinMap)> {
        let p2 = self.p2();
        let q = self.c.quotient(&p2, "ccr")?;
        let act = self.act.descend(&p2, &q.proj, &q.lift)?;
        let boundary = self.boundary.compose(&q.lift);
        let out = PreCrossedModule { c: q.algebra, r: self.r.clone(), boundary, act };
        Ok((out, q.proj))
    }
}

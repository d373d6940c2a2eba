//! 2-crossed modules `C₂ -> C₁ -> C₀` with a Peiffer lifting.

use super::precrossed::{precrossed_checks, PreCrossedModule};
use crate::exactalg::matrix::{add_vec, render_vec, sub_vec};
use crate::exactalg::{image, Action, Bilinear, FinAlgebra, LinMap, Subspace, Vector};
use crate::homotopy::{three_term, HomotopyTable};
use crate::report::{CheckBuilder, ValidationReport};

/// `act10`, `act20`: actions of `C₀` on `C₁`, `C₂`.
/// `act21`: action of `C₁` on `C₂` making `∂₂` a crossed module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCrossedModule {
    pub c2: FinAlgebra,
    pub c1: FinAlgebra,
    pub c0: FinAlgebra,
    pub d2: LinMap,
    pub d1: LinMap,
    pub act10: Action,
    pub act20: Action,
    pub act21: Action,
    pub lifting: Bilinear,
}

impl TwoCrossedModule {
    /// The `C₁`-action on `C₂` obtained through `C₀`: `x·y := x·∂₁y`.
    pub fn derived_act21(act20: &Action, d1: &LinMap) -> Action {
        act20.pull_back(d1)
    }

    /// `0 -> I -> R` for an ideal `I`, zero lifting.
    pub fn from_ideal(r: &FinAlgebra, ideal: &Subspace) -> crate::Result<TwoCrossedModule> {
        let p = PreCrossedModule::ideal_inclusion(r, ideal)?;
        Ok(TwoCrossedModule::from_crossed(&p))
    }

    /// `0 -> C -> R` from a (pre-)crossed module.
    pub fn from_crossed(p: &PreCrossedModule) -> TwoCrossedModule {
        let f = p.c.field();
        let c2 = FinAlgebra::zero_mul(f, 0);
        TwoCrossedModule {
            d2: LinMap::zero(f, p.c.dim(), 0),
            d1: p.boundary.clone(),
            act10: p.act.clone(),
            act20: Action::trivial(f, p.r.dim(), 0),
            act21: Action::trivial(f, p.c.dim(), 0),
            lifting: Bilinear::zero(f, p.c.dim(), p.c.dim(), 0),
            c2,
            c1: p.c.clone(),
            c0: p.r.clone(),
        }
    }

    pub fn lift(&self, y0: &[crate::exactalg::Scalar], y1: &[crate::exactalg::Scalar]) -> Vector {
        self.lifting.apply(y0, y1)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("two_crossed");
        rep.absorb("C2.", self.c2.validate());
        rep.absorb("C1.", self.c1.validate());
        rep.absorb("C0.", self.c0.validate());
        let (c2, c1, c0) = (&self.c2, &self.c1, &self.c0);
        let (n2, n1, n0) = (c2.dim(), c1.dim(), c0.dim());

        let mut ch = CheckBuilder::new("d1 d2 = 0");
        let comp = self.d1.compose(&self.d2);
        for j in 0..n2 {
            let v = comp.column(j);
            ch.test(v.iter().all(|s| s.is_zero()), || format!("d1 d2(x{j})={}", render_vec(&v)));
        }
        rep.push(ch.finish());

        for c in precrossed_checks("d1: ", c1, c0, &self.d1, &self.act10, false) {
            rep.push(c);
        }
        rep.push(self.act20.check_associative("C0 on C2: action module law", c0));
        rep.push(self.act20.check_multiplicative("C0 on C2: action multiplicative", c2));
        let mut ch = CheckBuilder::new("d2 is C0-equivariant");
        for z in 0..n0 {
            for x in 0..n2 {
                let lhs = self.d2.apply(&self.act20.basis_act(z, x));
                let rhs = self.act10.act(&c0.unit(z), &self.d2.column(x));
                ch.test(lhs == rhs, || format!("d2(x{x}·z{z})={} but d2(x{x})·z{z}={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        rep.push(ch.finish());
        for c in precrossed_checks("d2: ", c2, c1, &self.d2, &self.act21, true) {
            rep.push(c);
        }

        let mut ch = CheckBuilder::new("mixed action law");
        for x in 0..n2 {
            for y in 0..n1 {
                let xy = self.act21.basis_act(y, x);
                for z in 0..n0 {
                    let lhs = self.act20.act(&c0.unit(z), &xy);
                    let rhs = self.act21.act(&self.act10.basis_act(z, y), &c2.unit(x));
                    ch.test(lhs == rhs, || format!("(x{x}·y{y})·z{z}={} but x{x}·(y{y}·z{z})={}", render_vec(&lhs), render_vec(&rhs)));
                }
            }
        }
        rep.push(ch.finish());

        let mut ch = CheckBuilder::new("2CM1");
        for a in 0..n1 {
            for b in 0..n1 {
                let lhs = self.d2.apply(self.lifting.basis_value(a, b));
                let rhs = sub_vec(c1.basis_product(a, b), &self.act10.act(&self.d1.column(b), &c1.unit(a)));
                ch.test(lhs == rhs, || format!("y0=e{a}, y1=e{b}: d2{{y0⊗y1}}={} but y0y1-y0·d1y1={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        rep.push(ch.finish());

        let mut ch = CheckBuilder::new("2CM2");
        for a in 0..n2 {
            for b in 0..n2 {
                let lhs = self.lift(&self.d2.column(a), &self.d2.column(b));
                let rhs = c2.basis_product(a, b);
                ch.test(&lhs == rhs, || format!("x1=e{a}, x2=e{b}: {{d2x1⊗d2x2}}={} but x1x2={}", render_vec(&lhs), render_vec(rhs)));
            }
        }
        rep.push(ch.finish());

        let mut ch = CheckBuilder::new("2CM3");
        for a in 0..n1 {
            for b in 0..n1 {
                for c in 0..n1 {
                    let lhs = self.lift(&c1.unit(a), c1.basis_product(b, c));
                    let first = self.lift(c1.basis_product(a, b), &c1.unit(c));
                    let second = self.act20.act(&self.d1.column(c), self.lifting.basis_value(a, b));
                    let rhs = add_vec(&first, &second);
                    ch.test(lhs == rhs, || format!("y=(e{a},e{b},e{c}): lhs={} rhs={}", render_vec(&lhs), render_vec(&rhs)));
                }
            }
        }
        rep.push(ch.finish());

        let mut a4 = CheckBuilder::new("2CM4a");
        let mut b4 = CheckBuilder::new("2CM4b");
        for x in 0..n2 {
            for y in 0..n1 {
                let xy = self.act21.basis_act(y, x);
                let lhs = self.lift(&self.d2.column(x), &c1.unit(y));
                let rhs = sub_vec(&xy, &self.act20.act(&self.d1.column(y), &c2.unit(x)));
                a4.test(lhs == rhs, || format!("x=e{x}, y=e{y}: {{d2x⊗y}}={} but x·y-x·d1y={}", render_vec(&lhs), render_vec(&rhs)));
                let lhs = self.lift(&c1.unit(y), &self.d2.column(x));
                b4.test(lhs == xy, || format!("x=e{x}, y=e{y}: {{y⊗d2x}}={} but x·y={}", render_vec(&lhs), render_vec(&xy)));
            }
        }
        rep.push(a4.finish());
        rep.push(b4.finish());

        let mut ch = CheckBuilder::new("2CM5");
        for a in 0..n1 {
            for b in 0..n1 {
                let l = self.lifting.basis_value(a, b);
                for z in 0..n0 {
                    let acted = self.act20.operator(z).apply(l);
                    let left = self.lift(&self.act10.basis_act(z, a), &c1.unit(b));
                    let right = self.lift(&c1.unit(a), &self.act10.basis_act(z, b));
                    ch.test(acted == left && acted == right, || {
                        format!("y0=e{a}, y1=e{b}, z=e{z}: {{y0⊗y1}}·z={} {{y0·z⊗y1}}={} {{y0⊗y1·z}}={}", render_vec(&acted), render_vec(&left), render_vec(&right))
                    });
                }
            }
        }
        rep.push(ch.finish());
        rep
    }

    /// The pre-crossed module `∂₁: C₁ -> C₀`.
    pub fn bottom(&self) -> PreCrossedModule {
        PreCrossedModule::new(self.c1.clone(), self.c0.clone(), self.d1.clone(), self.act10.clone())
    }

    /// Span of all lifting values.
    pub fn lifting_image(&self) -> Subspace {
        let n = self.c1.dim();
        let vals = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| self.lifting.basis_value(a, b).clone()).collect();
        Subspace::span(self.c2.field(), self.c2.dim(), vals)
    }

    /// `π₀ = 0, π₁ = C₀/∂₁C₁, π₂ = ker ∂₁/im ∂₂, π₃ = ker ∂₂`.
    pub fn homotopy(&self) -> HomotopyTable {
        three_term(&self.d2, &self.d1)
    }

    pub fn boundary_image(&self) -> Subspace {
        image(&self.d2)
    }
}

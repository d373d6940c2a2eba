//! Quadratic modules `(ω, δ, ∂)`: `L -δ-> M -∂-> N` with `ω: C ⊗ C -> L`,
//! where `C = M^cr / (M^cr)²`.

use super::precrossed::{precrossed_checks, PreCrossedModule};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{render_vec, sub_vec};
use crate::exactalg::{kernel, Action, Bilinear, FinAlgebra, LinMap, Subspace};
use crate::homotopy::{three_term, HomotopyTable};
use crate::report::{CheckBuilder, ValidationReport};

/// `proj_c: M -> C` is the quotient map onto `C`; `ω` is tabulated on the
/// basis of `C` fixed by `proj_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticModule {
    pub l: FinAlgebra,
    pub m: FinAlgebra,
    pub n: FinAlgebra,
    pub delta: LinMap,
    pub boundary: LinMap,
    pub act_l: Action,
    pub act_m: Action,
    pub proj_c: LinMap,
    pub omega: Bilinear,
}

/// Kernel of `M -> C` for the crossed module built from `∂`: `P₂(∂) + M²`.
pub fn singular_kernel(pre: &PreCrossedModule) -> Subspace {
    pre.p2().sum(&pre.c.square())
}

impl QuadraticModule {
    /// `0 -> 0 -> N`.
    pub fn zero(n: &FinAlgebra) -> QuadraticModule {
        let f = n.field();
        QuadraticModule {
            l: FinAlgebra::zero_mul(f, 0),
            m: FinAlgebra::zero_mul(f, 0),
            n: n.clone(),
            delta: LinMap::zero(f, 0, 0),
            boundary: LinMap::zero(f, n.dim(), 0),
            act_l: Action::trivial(f, n.dim(), 0),
            act_m: Action::trivial(f, n.dim(), 0),
            proj_c: LinMap::zero(f, 0, 0),
            omega: Bilinear::zero(f, 0, 0, 0),
        }
    }

    pub fn c_dim(&self) -> usize {
        self.proj_c.target_dim()
    }

    pub fn bottom(&self) -> PreCrossedModule {
        PreCrossedModule::new(self.m.clone(), self.n.clone(), self.boundary.clone(), self.act_m.clone())
    }

    /// A section `C -> M` of `proj_c`, if it is onto.
    pub fn section(&self) -> Option<LinMap> {
        let f = self.m.field();
        let cols = (0..self.c_dim())
            .map(|i| self.proj_c.solve(&crate::exactalg::matrix::unit_vec(f, self.c_dim(), i)))
            .collect::<Option<Vec<_>>>()?;
        Some(LinMap::from_columns(f, self.m.dim(), &cols))
    }

    /// Peiffer multiplication on `C ⊗ C`, computed through a section.
    pub fn w(&self) -> Result<Bilinear> {
        let s = self.section().ok_or_else(|| Error::InvalidInput("quotient map to C is not onto".into()))?;
        let pre = self.bottom();
        let c = self.c_dim();
        Ok(Bilinear::from_fn(self.m.field(), c, c, self.m.dim(), |i, j| pre.peiffer(&s.column(i), &s.column(j))))
    }

    /// The `N`-action on `C`, by descent from `M`.
    pub fn act_c(&self) -> Result<Action> {
        let s = self.section().ok_or_else(|| Error::InvalidInput("quotient map to C is not onto".into()))?;
        self.act_m.descend(&kernel(&self.proj_c), &self.proj_c, &s)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("quadratic");
        rep.absorb("L.", self.l.validate());
        rep.absorb("M.", self.m.validate());
        rep.absorb("N.", self.n.validate());
        let (l, m, n) = (&self.l, &self.m, &self.n);
        let pre = self.bottom();
        for c in precrossed_checks("d: ", m, n, &self.boundary, &self.act_m, false) {
            rep.push(c);
        }
        rep.push(l.check_hom("delta is an algebra map", &self.delta, m));
        rep.push(self.act_l.check_associative("N on L: action module law", n));
        rep.push(self.act_l.check_multiplicative("N on L: action multiplicative", l));

        let mut ch = CheckBuilder::new("QM1 nil(2)");
        for (k, g) in pre.p3_generators().iter().enumerate() {
            ch.test(g.iter().all(|s| s.is_zero()), || format!("length-3 Peiffer element #{k} = {}", render_vec(g)));
        }
        rep.push(ch.finish());

        let section = self.section();
        let mut ch = CheckBuilder::new("QM1 quotient map to C");
        let expected = singular_kernel(&pre);
        let actual = kernel(&self.proj_c);
        ch.test(section.is_some(), || "M -> C is not onto".into());
        ch.test(actual == expected, || format!("ker(M -> C) has dim {} but P2 + M^2 has dim {}", actual.dim(), expected.dim()));
        rep.push(ch.finish());

        let Some(section) = section else {
            return rep;
        };
        let c = self.c_dim();
        let lift = |i: usize| section.column(i);
        let w = Bilinear::from_fn(m.field(), c, c, m.dim(), |i, j| pre.peiffer(&lift(i), &lift(j)));

        let mut ch = CheckBuilder::new("QM2 d delta = 0");
        let comp = self.boundary.compose(&self.delta);
        for j in 0..l.dim() {
            let v = comp.column(j);
            ch.test(v.iter().all(|s| s.is_zero()), || format!("d delta(e{j})={}", render_vec(&v)));
        }
        rep.push(ch.finish());

        let mut ch = CheckBuilder::new("QM2 delta omega = w");
        for i in 0..c {
            for j in 0..c {
                let lhs = self.delta.apply(self.omega.basis_value(i, j));
                let rhs = w.basis_value(i, j);
                ch.test(&lhs == rhs, || format!("c=e{i}, c'=e{j}: delta omega={} but w={}", render_vec(&lhs), render_vec(rhs)));
            }
        }
        rep.push(ch.finish());

        rep.push(self.act_l.check_equivariant("QM3 delta equivariant", &self.delta, &self.act_m));
        match self.act_m.descend(&actual, &self.proj_c, &section) {
            Err(e) => {
                let mut ch = CheckBuilder::new("QM3 omega equivariant");
                ch.test(false, || e.to_string());
                rep.push(ch.finish());
            }
            Ok(act_c) => {
                let mut ch = CheckBuilder::new("QM3 omega equivariant");
                for i in 0..c {
                    for j in 0..c {
                        let v = self.omega.basis_value(i, j);
                        for z in 0..n.dim() {
                            let acted = self.act_l.operator(z).apply(v);
                            let left = self.omega.apply(&act_c.basis_act(z, i), &crate::exactalg::matrix::unit_vec(m.field(), c, j));
                            let right = self.omega.apply(&crate::exactalg::matrix::unit_vec(m.field(), c, i), &act_c.basis_act(z, j));
                            ch.test(acted == left && acted == right, || {
                                format!("c=e{i}, c'=e{j}, n=e{z}: omega·n={} omega(c·n,c')={} omega(c,c'·n)={}", render_vec(&acted), render_vec(&left), render_vec(&right))
                            });
                        }
                    }
                }
                rep.push(ch.finish());
            }
        }

        let mut ch = CheckBuilder::new("QM3 a·d(x) = omega([x]⊗[delta a]) - omega([delta a]⊗[x])");
        for a in 0..l.dim() {
            let da = self.proj_c.apply(&self.delta.column(a));
            for x in 0..m.dim() {
                let cx = self.proj_c.column(x);
                let lhs = self.act_l.act(&self.boundary.column(x), &l.unit(a));
                let rhs = sub_vec(&self.omega.apply(&cx, &da), &self.omega.apply(&da, &cx));
                ch.test(lhs == rhs, || format!("a=e{a}, x=e{x}: a·d(x)={} but omega difference={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        rep.push(ch.finish());

        let mut ch = CheckBuilder::new("QM4 omega([delta a]⊗[delta b]) = ab");
        for a in 0..l.dim() {
            let da = self.proj_c.apply(&self.delta.column(a));
            for b in 0..l.dim() {
                let db = self.proj_c.apply(&self.delta.column(b));
                let lhs = self.omega.apply(&da, &db);
                let rhs = l.basis_product(a, b);
                ch.test(&lhs == rhs, || format!("a=e{a}, b=e{b}: omega={} but ab={}", render_vec(&lhs), render_vec(rhs)));
            }
        }
        rep.push(ch.finish());
        rep
    }

    /// `π₁ = N/∂M, π₂ = ker ∂/im δ, π₃ = ker δ`.
    pub fn homotopy(&self) -> HomotopyTable {
        three_term(&self.delta, &self.boundary)
    }
}

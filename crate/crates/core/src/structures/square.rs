//! Crossed squares
//!
//! ```text
//!   L --λ--> M
//!   |λ'      |μ
//!   v        v
//!   N --ν--> R
//! ```
//! with `R` acting on every corner and `h: M × N -> L`.

use super::precrossed::precrossed_checks;
use crate::error::{Error, Result};
use crate::exactalg::matrix::render_vec;
use crate::exactalg::{Action, Bilinear, FinAlgebra, LinMap, Subspace, Vector};
use crate::homotopy::{three_term, HomotopyTable};
use crate::report::{CheckBuilder, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSquare {
    pub l: FinAlgebra,
    pub m: FinAlgebra,
    pub n: FinAlgebra,
    pub r: FinAlgebra,
    pub lam: LinMap,
    pub lam2: LinMap,
    pub mu: LinMap,
    pub nu: LinMap,
    pub act_l: Action,
    pub act_m: Action,
    pub act_n: Action,
    pub h: Bilinear,
}

/// Matrix of `inner ⊆ outer` in the stored bases of both subspaces.
pub(crate) fn inclusion_between(inner: &Subspace, outer: &Subspace) -> Result<LinMap> {
    let cols = inner
        .basis()
        .iter()
        .map(|b| outer.coords(b).ok_or_else(|| Error::Construction("subspace is not contained in the target".into())))
        .collect::<Result<Vec<Vector>>>()?;
    Ok(LinMap::from_columns(inner.field(), outer.dim(), &cols))
}

impl CrossedSquare {
    /// `I∩J -> I, J -> R` with inclusions, multiplication actions and
    /// `h(m, n) = mn`.
    pub fn from_ideals(r: &FinAlgebra, i: &Subspace, j: &Subspace) -> Result<CrossedSquare> {
        if !r.is_ideal(i) || !r.is_ideal(j) {
            return Err(Error::NotAnIdeal("crossed square corners must be ideals".into()));
        }
        let k = i.intersect(j);
        let (l, _) = r.sub_algebra(&k, "l")?;
        let (m, mu) = r.sub_algebra(i, "m")?;
        let (n, nu) = r.sub_algebra(j, "n")?;
        let reg = Action::regular(r);
        let h = Bilinear::from_fn(r.field(), i.dim(), j.dim(), k.dim(), |a, b| {
            k.coords(&r.mul(&i.basis()[a], &j.basis()[b])).expect("product of ideals lies in the intersection")
        });
        Ok(CrossedSquare {
            lam: inclusion_between(&k, i)?,
            lam2: inclusion_between(&k, j)?,
            act_l: reg.restrict(&k)?,
            act_m: reg.restrict(i)?,
            act_n: reg.restrict(j)?,
            l,
            m,
            n,
            r: r.clone(),
            mu,
            nu,
            h,
        })
    }

    pub fn zero(r: &FinAlgebra) -> CrossedSquare {
        let z = Subspace::zero(r.field(), r.dim());
        CrossedSquare::from_ideals(r, &z, &z).expect("zero ideals")
    }

    /// `M` acting on `L` through `μ`.
    pub fn m_on_l(&self) -> Action {
        self.act_l.pull_back(&self.mu)
    }

    pub fn n_on_l(&self) -> Action {
        self.act_l.pull_back(&self.nu)
    }

    pub fn m_on_n(&self) -> Action {
        self.act_n.pull_back(&self.mu)
    }

    pub fn n_on_m(&self) -> Action {
        self.act_m.pull_back(&self.nu)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("crossed_square");
        rep.absorb("L.", self.l.validate());
        rep.absorb("M.", self.m.validate());
        rep.absorb("N.", self.n.validate());
        rep.absorb("R.", self.r.validate());
        let (l, m, n, r) = (&self.l, &self.m, &self.n, &self.r);

        let mut ch = CheckBuilder::new("square commutes");
        let a = self.mu.compose(&self.lam);
        let b = self.nu.compose(&self.lam2);
        for j in 0..l.dim() {
            let (x, y) = (a.column(j), b.column(j));
            ch.test(x == y, || format!("l=e{j}: μλ(l)={} but νλ'(l)={}", render_vec(&x), render_vec(&y)));
        }
        rep.push(ch.finish());

        let (m_on_l, n_on_l, m_on_n, n_on_m) = (self.m_on_l(), self.n_on_l(), self.m_on_n(), self.n_on_m());
        let legs: [(&str, &FinAlgebra, &FinAlgebra, LinMap, &Action); 5] = [
            ("ax1 λ: ", l, m, self.lam.clone(), &m_on_l),
            ("ax1 λ': ", l, n, self.lam2.clone(), &n_on_l),
            ("ax1 μ: ", m, r, self.mu.clone(), &self.act_m),
            ("ax1 ν: ", n, r, self.nu.clone(), &self.act_n),
            ("ax1 μλ: ", l, r, a.clone(), &self.act_l),
        ];
        for (name, src, tgt, map, act) in legs {
            for c in precrossed_checks(name, src, tgt, &map, act, true) {
                rep.push(c);
            }
        }
        rep.push(self.act_l.check_equivariant("ax2 λ preserves the R-action", &self.lam, &self.act_m));
        rep.push(self.act_l.check_equivariant("ax2 λ' preserves the R-action", &self.lam2, &self.act_n));

        let mut ch = CheckBuilder::new("ax6 h is R-equivariant");
        for x in 0..m.dim() {
            for y in 0..n.dim() {
                let hv = self.h.basis_value(x, y);
                for z in 0..r.dim() {
                    let acted = self.act_l.operator(z).apply(hv);
                    let left = self.h.apply(&self.act_m.basis_act(z, x), &n.unit(y));
                    let right = self.h.apply(&m.unit(x), &self.act_n.basis_act(z, y));
                    ch.test(acted == left && acted == right, || {
                        format!("m=e{x}, n=e{y}, r=e{z}: h(m,n)·r={} h(m·r,n)={} h(m,n·r)={}", render_vec(&acted), render_vec(&left), render_vec(&right))
                    });
                }
            }
        }
        rep.push(ch.finish());

        let mut c7 = CheckBuilder::new("ax7 λh(m,n) = m·n");
        let mut c8 = CheckBuilder::new("ax8 λ'h(m,n) = n·m");
        for x in 0..m.dim() {
            for y in 0..n.dim() {
                let hv = self.h.basis_value(x, y);
                let lhs = self.lam.apply(hv);
                let rhs = n_on_m.basis_act(y, x);
                c7.test(lhs == rhs, || format!("m=e{x}, n=e{y}: λh={} but m·n={}", render_vec(&lhs), render_vec(&rhs)));
                let lhs = self.lam2.apply(hv);
                let rhs = m_on_n.basis_act(x, y);
                c8.test(lhs == rhs, || format!("m=e{x}, n=e{y}: λ'h={} but n·m={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        rep.push(c7.finish());
        rep.push(c8.finish());

        let mut c9 = CheckBuilder::new("ax9 h(m,λ'l) = m·l");
        for x in 0..m.dim() {
            for k in 0..l.dim() {
                let lhs = self.h.apply(&m.unit(x), &self.lam2.column(k));
                let rhs = m_on_l.basis_act(x, k);
                c9.test(lhs == rhs, || format!("m=e{x}, l=e{k}: h(m,λ'l)={} but l·m={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        rep.push(c9.finish());
        let mut c10 = CheckBuilder::new("ax10 h(λl,n) = n·l");
        for k in 0..l.dim() {
            for y in 0..n.dim() {
                let lhs = self.h.apply(&self.lam.column(k), &n.unit(y));
                let rhs = n_on_l.basis_act(y, k);
                c10.test(lhs == rhs, || format!("l=e{k}, n=e{y}: h(λl,n)={} but l·n={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        rep.push(c10.finish());
        rep
    }

    /// `(−λ, λ'): L -> M ⊕ N`, coordinates of `M` first.
    pub fn cone_d2(&self) -> LinMap {
        self.lam.neg().vcat(&self.lam2)
    }

    /// `μ + ν: M ⊕ N -> R`.
    pub fn cone_d1(&self) -> LinMap {
        self.mu.hcat(&self.nu)
    }

    /// Homology of `L -> M⋊N -> R`, in the classifying indexing.
    pub fn homotopy(&self) -> HomotopyTable {
        three_term(&self.cone_d2(), &self.cone_d1())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Field;
    use crate::exactalg::matrix::scale_vec;
    use crate::fixtures::MonomialAlgebra;

    fn xy_square() -> CrossedSquare {
        let ma = MonomialAlgebra::new(Field::Rational, &[2, 2]);
        let i = ma.monomial_ideal(&[vec![1, 0]]);
        let j = ma.monomial_ideal(&[vec![0, 1]]);
        CrossedSquare::from_ideals(&ma.algebra, &i, &j).unwrap()
    }

    #[test]
    fn ideal_pair_is_valid() {
        let s = xy_square();
        let rep = s.validate();
        assert!(rep.is_valid(), "{}", rep.render());
        assert_eq!((s.l.dim(), s.m.dim(), s.n.dim()), (1, 2, 2));
    }

    #[test]
    fn zero_square() {
        let r = MonomialAlgebra::truncated(Field::Rational, 3).algebra;
        let s = CrossedSquare::zero(&r);
        assert!(s.validate().is_valid());
        assert_eq!(s.homotopy().dims(), vec![Some(0), Some(3), Some(0), Some(0)]);
    }

    #[test]
    fn doubled_h_breaks_seven_and_eight() {
        let mut s = xy_square();
        let two = s.r.field().int(2);
        for a in 0..s.m.dim() {
            for b in 0..s.n.dim() {
                let v = scale_vec(&two, s.h.basis_value(a, b));
                s.h.set_basis_value(a, b, v);
            }
        }
        let rep = s.validate();
        let failed = rep.failed_names();
        assert!(failed.contains(&"ax7 λh(m,n) = m·n".to_string()));
        assert!(failed.contains(&"ax8 λ'h(m,n) = n·m".to_string()));
        assert!(!rep.check("ax7 λh(m,n) = m·n").unwrap().witnesses.is_empty());
    }
}

//! Actions of one algebra on another, bilinear maps and semidirect products.

use super::algebra::FinAlgebra;
use super::field::{Field, Scalar};
use super::matrix::{axpy, render_vec, unit_vec, zero_vec, LinMap, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::report::{Check, CheckBuilder};

/// Linear action `R × M -> M`, stored as one operator on `M` per basis
/// element of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    field: Field,
    module_dim: usize,
    ops: Vec<LinMap>,
}

impl Action {
    pub fn new(field: Field, module_dim: usize, ops: Vec<LinMap>) -> Result<Action> {
        for (i, op) in ops.iter().enumerate() {
            if op.source_dim() != module_dim || op.target_dim() != module_dim {
                return Err(Error::Dimension {
                    table: "action".into(),
                    msg: format!("operator {i} is {}x{}, module has dim {module_dim}", op.target_dim(), op.source_dim()),
                });
            }
        }
        Ok(Action { field, module_dim, ops })
    }

    pub fn from_fn(field: Field, acting_dim: usize, module_dim: usize, f: impl Fn(usize, usize) -> Vector) -> Action {
        let ops = (0..acting_dim).map(|i| LinMap::from_fn(field, module_dim, module_dim, |j| f(i, j))).collect();
        Action { field, module_dim, ops }
    }

    pub fn trivial(field: Field, acting_dim: usize, module_dim: usize) -> Action {
        Action { field, module_dim, ops: vec![LinMap::zero(field, module_dim, module_dim); acting_dim] }
    }

    /// An algebra acting on itself by multiplication.
    pub fn regular(a: &FinAlgebra) -> Action {
        Action { field: a.field(), module_dim: a.dim(), ops: a.basis_operators() }
    }

    /// `r · m = φ(r) m` for an algebra map `φ: R -> M`.
    pub fn via_hom(phi: &LinMap, target: &FinAlgebra) -> Action {
        let ops = phi.columns().iter().map(|c| target.mult_operator(c)).collect();
        Action { field: target.field(), module_dim: target.dim(), ops }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn acting_dim(&self) -> usize {
        self.ops.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn operator(&self, i: usize) -> &LinMap {
        &self.ops[i]
    }

    pub fn operators(&self) -> &[LinMap] {
        &self.ops
    }

    pub fn basis_act(&self, i: usize, j: usize) -> Vector {
        self.ops[i].column(j)
    }

    pub fn set_basis_act(&mut self, i: usize, j: usize, v: Vector) {
        for (row, x) in v.into_iter().enumerate() {
            self.ops[i].set(row, j, x);
        }
    }

    /// Operator of a general element `r`.
    pub fn operator_of(&self, r: &[Scalar]) -> LinMap {
        let mut out = LinMap::zero(self.field, self.module_dim, self.module_dim);
        for (c, op) in r.iter().zip(&self.ops) {
            if !c.is_zero() {
                let scaled = LinMap::from_fn(self.field, self.module_dim, self.module_dim, |j| {
                    op.column(j).iter().map(|x| c * x).collect()
                });
                out = out.add(&scaled);
            }
        }
        out
    }

    pub fn act(&self, r: &[Scalar], m: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.module_dim);
        for (c, op) in r.iter().zip(&self.ops) {
            if !c.is_zero() {
                axpy(&mut out, c, &op.apply(m));
            }
        }
        out
    }

    /// `(rs)·m = r·(s·m)` on basis triples.
    pub fn check_associative(&self, name: &str, acting: &FinAlgebra) -> Check {
        let mut c = CheckBuilder::new(name);
        let n = self.acting_dim();
        for i in 0..n {
            for j in 0..n {
                let rs = acting.basis_product(i, j);
                for k in 0..self.module_dim {
                    let m = unit_vec(self.field, self.module_dim, k);
                    let lhs = self.act(rs, &m);
                    let rhs = self.ops[i].apply(&self.ops[j].apply(&m));
                    c.test(lhs == rhs, || format!("(r{i}r{j})·m{k}={} but r{i}·(r{j}·m{k})={}", render_vec(&lhs), render_vec(&rhs)));
                }
            }
        }
        c.finish()
    }

    /// `r·(mn) = (r·m)n` on basis triples.
    pub fn check_multiplicative(&self, name: &str, module: &FinAlgebra) -> Check {
        let mut c = CheckBuilder::new(name);
        for (i, op) in self.ops.iter().enumerate() {
            for a in 0..self.module_dim {
                for b in 0..self.module_dim {
                    let lhs = op.apply(module.basis_product(a, b));
                    let rhs = module.mul(&op.column(a), &module.unit(b));
                    c.test(lhs == rhs, || format!("r{i}·(m{a}m{b})={} but (r{i}·m{a})m{b}={}", render_vec(&lhs), render_vec(&rhs)));
                }
            }
        }
        c.finish()
    }

    /// Equivariance of `f: M -> M'` between this action and `other`.
    pub fn check_equivariant(&self, name: &str, f: &LinMap, other: &Action) -> Check {
        let mut c = CheckBuilder::new(name);
        for i in 0..self.acting_dim().min(other.acting_dim()) {
            for j in 0..self.module_dim {
                let lhs = f.apply(&self.ops[i].column(j));
                let rhs = other.ops[i].apply(&f.column(j));
                c.test(lhs == rhs, || format!("f(r{i}·m{j})={} but r{i}·f(m{j})={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        c.finish()
    }

    /// Restriction along `φ: S -> R`.
    pub fn pull_back(&self, phi: &LinMap) -> Action {
        let ops = phi.columns().iter().map(|c| self.operator_of(c)).collect();
        Action { field: self.field, module_dim: self.module_dim, ops }
    }

    /// Composes with another action of the same algebra: acts on a
    /// subspace, expressed in its stored basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Action> {
        let basis = sub.basis();
        let mut ops = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let mut cols = Vec::with_capacity(basis.len());
            for b in basis {
                cols.push(sub.coords(&op.apply(b)).ok_or_else(|| Error::Descent("subspace is not stable under the action".into()))?);
            }
            ops.push(LinMap::from_columns(self.field, basis.len(), &cols));
        }
        Ok(Action { field: self.field, module_dim: basis.len(), ops })
    }

    /// Induced action on `M / K` given the projection and section of the
    /// quotient, requiring `K` to be stable.
    pub fn descend(&self, kernel: &Subspace, proj: &LinMap, lift: &LinMap) -> Result<Action> {
        for op in &self.ops {
            if kernel.basis().iter().any(|k| !kernel.contains(&op.apply(k))) {
                return Err(Error::Descent("kernel is not stable under the action".into()));
            }
        }
        let ops = self.ops.iter().map(|op| proj.compose(op).compose(lift)).collect();
        Ok(Action { field: self.field, module_dim: proj.target_dim(), ops })
    }

    /// Induced action of a quotient `R / J` of the acting algebra, requiring
    /// `J` to act trivially.
    pub fn descend_acting(&self, acting_kernel: &Subspace, acting_lift: &LinMap) -> Result<Action> {
        for k in acting_kernel.basis() {
            if !self.operator_of(k).is_zero() {
                return Err(Error::Descent("acting ideal does not act trivially".into()));
            }
        }
        Ok(self.pull_back(acting_lift))
    }
}

/// Bilinear map `U × V -> W` with `table[i * dim V + j] = B(u_i, v_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bilinear {
    field: Field,
    left: usize,
    right: usize,
    target: usize,
    table: Vec<Vector>,
}

impl Bilinear {
    pub fn new(field: Field, left: usize, right: usize, target: usize, table: Vec<Vector>) -> Result<Bilinear> {
        if table.len() != left * right || table.iter().any(|v| v.len() != target) {
            return Err(Error::Dimension { table: "bilinear".into(), msg: format!("expected {left}x{right} values in dim {target}") });
        }
        Ok(Bilinear { field, left, right, target, table })
    }

    pub fn from_fn(field: Field, left: usize, right: usize, target: usize, f: impl Fn(usize, usize) -> Vector) -> Bilinear {
        let mut table = Vec::with_capacity(left * right);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), target);
                table.push(v);
            }
        }
        Bilinear { field, left, right, target, table }
    }

    pub fn zero(field: Field, left: usize, right: usize, target: usize) -> Bilinear {
        Bilinear { field, left, right, target, table: vec![zero_vec(field, target); left * right] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn basis_value(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.right + j]
    }

    pub fn set_basis_value(&mut self, i: usize, j: usize, v: Vector) {
        let r = self.right;
        self.table[i * r + j] = v;
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.target);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    axpy(&mut out, &(a * b), &self.table[i * self.right + j]);
                }
            }
        }
        out
    }

    /// `(u, v) -> g(B(f1 u, f2 v))` for linear `f1: U' -> U`, `f2: V' -> V`,
    /// `g: W -> W'`.
    pub fn transform(&self, f1: &LinMap, f2: &LinMap, g: &LinMap) -> Bilinear {
        let (c1, c2) = (f1.columns(), f2.columns());
        Bilinear::from_fn(self.field, c1.len(), c2.len(), g.target_dim(), |i, j| g.apply(&self.apply(&c1[i], &c2[j])))
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Scalar::is_zero))
    }
}

/// Semidirect product `M ⋊ N` for an action of `N` on `M`, with product
/// `(m,n)(c,a) = (mc + a·m + n·c, na)`. Coordinates list `M` first.
pub fn semidirect(m: &FinAlgebra, n: &FinAlgebra, act: &Action) -> FinAlgebra {
    let (dm, dn) = (m.dim(), n.dim());
    let field = m.field();
    let mut labels: Vec<String> = m.labels().iter().map(|l| format!("m.{l}")).collect();
    labels.extend(n.labels().iter().map(|l| format!("n.{l}")));
    let split = |v: &[Scalar]| (v[..dm].to_vec(), v[dm..].to_vec());
    FinAlgebra::from_fn(field, labels, |i, j| {
        let mut ei = zero_vec(field, dm + dn);
        ei[i] = field.one();
        let mut ej = zero_vec(field, dm + dn);
        ej[j] = field.one();
        let (m1, n1) = split(&ei);
        let (m2, n2) = split(&ej);
        let mut top = m.mul(&m1, &m2);
        axpy(&mut top, &field.one(), &act.act(&n2, &m1));
        axpy(&mut top, &field.one(), &act.act(&n1, &m2));
        top.extend(n.mul(&n1, &n2));
        top
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trunc(field: Field, n: usize) -> FinAlgebra {
        FinAlgebra::from_fn(field, (0..n).map(|i| format!("x{i}")).collect(), |i, j| {
            let mut v = zero_vec(field, n);
            if i + j < n {
                v[i + j] = field.one();
            }
            v
        })
    }

    #[test]
    fn regular_action_is_an_action() {
        let a = trunc(Field::Rational, 3);
        let act = Action::regular(&a);
        assert!(act.check_associative("assoc", &a).passed());
        assert!(act.check_multiplicative("mul", &a).passed());
    }

    #[test]
    fn corrupted_action_is_detected() {
        let f = Field::Rational;
        let a = trunc(f, 3);
        let mut act = Action::regular(&a);
        act.set_basis_act(1, 1, a.unit(1));
        assert!(!act.check_associative("assoc", &a).passed());
    }

    #[test]
    fn semidirect_of_valid_action_is_an_algebra() {
        let f = Field::Rational;
        let r = trunc(f, 3);
        let ideal = r.ideal_closure(vec![r.unit(1)]);
        let (m, inc) = r.sub_algebra(&ideal, "m").unwrap();
        let act = Action::regular(&r).restrict(&ideal).unwrap();
        let s = semidirect(&m, &r, &act);
        assert_eq!(s.dim(), 5);
        assert!(s.validate().is_valid());
        assert_eq!(inc.source_dim(), 2);
    }

    #[test]
    fn descend_action_to_quotient() {
        let f = Field::Rational;
        let r = trunc(f, 4);
        let k = r.ideal_closure(vec![r.unit(2)]);
        let q = r.quotient(&k, "q").unwrap();
        let act = Action::regular(&r).descend(&k, &q.proj, &q.lift).unwrap();
        assert!(act.check_multiplicative("mul", &q.algebra).passed());
        let bad = Subspace::span(f, 4, vec![r.unit(1)]);
        assert!(Action::regular(&r).descend(&bad, &bad.quotient_projection(), &bad.quotient_lift()).is_err());
    }
}

//! Finite-dimensional commutative algebras given by structure constants.
//!
//! Algebras are not assumed unital. `mul[i * dim + j]` holds the coordinates
//! of `e_i e_j`.

use super::field::{Field, Scalar};
use super::matrix::{axpy, render_vec, unit_vec, zero_vec, LinMap, Vector};
use super::subspace::{kernel, Subspace};
use crate::error::{Error, Result};
use crate::report::{Check, CheckBuilder, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    field: Field,
    labels: Vec<String>,
    mul: Vec<Vector>,
}

/// Result of dividing an algebra by an ideal.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: FinAlgebra,
    /// surjection `A -> A/I`
    pub proj: LinMap,
    /// canonical section `A/I -> A` (linear only)
    pub lift: LinMap,
    pub kernel: Subspace,
}

fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("{prefix}{i}")).collect()
}

impl FinAlgebra {
    pub fn new(field: Field, labels: Vec<String>, mul: Vec<Vector>) -> Result<FinAlgebra> {
        let dim = labels.len();
        if mul.len() != dim * dim {
            return Err(Error::Dimension { table: "mul".into(), msg: format!("expected {} products, got {}", dim * dim, mul.len()) });
        }
        if let Some(v) = mul.iter().find(|v| v.len() != dim) {
            return Err(Error::Dimension { table: "mul".into(), msg: format!("product vector of length {} in dim {dim}", v.len()) });
        }
        Ok(FinAlgebra { field, labels, mul })
    }

    pub fn from_fn(field: Field, labels: Vec<String>, f: impl Fn(usize, usize) -> Vector) -> FinAlgebra {
        let dim = labels.len();
        let mut mul = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                mul.push(v);
            }
        }
        FinAlgebra { field, labels, mul }
    }

    /// Algebra with all products zero (a module viewed as a singular algebra).
    pub fn zero_mul(field: Field, dim: usize) -> FinAlgebra {
        Self::zero_mul_labelled(field, default_labels("e", dim))
    }

    pub fn zero_mul_labelled(field: Field, labels: Vec<String>) -> FinAlgebra {
        let dim = labels.len();
        FinAlgebra { field, labels, mul: vec![zero_vec(field, dim); dim * dim] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FinAlgebra {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.mul[i * self.dim() + j]
    }

    pub fn set_basis_product(&mut self, i: usize, j: usize, v: Vector) {
        let d = self.dim();
        self.mul[i * d + j] = v;
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vec(self.field, self.dim(), i)
    }

    pub fn zero_vec(&self) -> Vector {
        zero_vec(self.field, self.dim())
    }

    pub fn has_zero_mul(&self) -> bool {
        self.mul.iter().all(|v| v.iter().all(Scalar::is_zero))
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = zero_vec(self.field, d);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), &self.mul[i * d + j]);
            }
        }
        out
    }

    /// Multiplication by `u` as a linear operator.
    pub fn mult_operator(&self, u: &[Scalar]) -> LinMap {
        LinMap::from_fn(self.field, self.dim(), self.dim(), |j| self.mul(u, &self.unit(j)))
    }

    pub fn basis_operators(&self) -> Vec<LinMap> {
        (0..self.dim()).map(|i| self.mult_operator(&self.unit(i))).collect()
    }

    /// Commutativity and associativity on all basis pairs and triples.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut report = ValidationReport::new("algebra");
        let mut comm = CheckBuilder::new("commutativity");
        for i in 0..d {
            for j in i + 1..d {
                let (a, b) = (self.basis_product(i, j), self.basis_product(j, i));
                comm.test(a == b, || format!("e{i}e{j}={} but e{j}e{i}={}", render_vec(a), render_vec(b)));
            }
        }
        report.push(comm.finish());
        let mut assoc = CheckBuilder::new("associativity");
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for l in 0..d {
                    let left = self.mul(ij, &self.unit(l));
                    let right = self.mul(&self.unit(i), self.basis_product(j, l));
                    assoc.test(left == right, || {
                        format!("(e{i}e{j})e{l}={} but e{i}(e{j}e{l})={}", render_vec(&left), render_vec(&right))
                    });
                }
            }
        }
        report.push(assoc.finish());
        report
    }

    /// Multiplicativity of `f: self -> target` on basis pairs.
    pub fn check_hom(&self, name: &str, f: &LinMap, target: &FinAlgebra) -> Check {
        let mut c = CheckBuilder::new(name);
        if f.source_dim() != self.dim() || f.target_dim() != target.dim() {
            c.test(false, || format!("shape {}x{} for {} -> {}", f.target_dim(), f.source_dim(), self.dim(), target.dim()));
            return c.finish();
        }
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let lhs = f.apply(self.basis_product(i, j));
                let rhs = target.mul(&f.column(i), &f.column(j));
                c.test(lhs == rhs, || format!("f(e{i}e{j})={} but f(e{i})f(e{j})={}", render_vec(&lhs), render_vec(&rhs)));
            }
        }
        c.finish()
    }

    /// Smallest subspace containing `gens` and stable under multiplication
    /// by every basis element, computed as a fixed point.
    pub fn ideal_closure(&self, gens: Vec<Vector>) -> Subspace {
        closure(self.field, self.dim(), gens, &self.basis_operators())
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| s.basis().iter().all(|b| s.contains(&self.mul(&self.unit(i), b))))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|a| s.basis().iter().all(|b| s.contains(&self.mul(a, b))))
    }

    /// Span of pairwise products `u v` with `u ∈ U`, `v ∈ V`.
    pub fn product_span(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut prods = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                prods.push(self.mul(a, b));
            }
        }
        Subspace::span(self.field, self.dim(), prods)
    }

    /// The square `A^2 = span{ab}`.
    pub fn square(&self) -> Subspace {
        Subspace::span(self.field, self.dim(), self.mul.clone())
    }

    /// The subspace `S` as an algebra in its stored basis, with the inclusion.
    pub fn sub_algebra(&self, s: &Subspace, prefix: &str) -> Result<(FinAlgebra, LinMap)> {
        let basis = s.basis();
        let mut mul = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                let p = self.mul(a, b);
                let c = s.coords(&p).ok_or_else(|| Error::NotAnIdeal(format!("{prefix}: subspace not closed under multiplication")))?;
                mul.push(c);
            }
        }
        let alg = FinAlgebra { field: self.field, labels: default_labels(prefix, basis.len()), mul };
        Ok((alg, s.inclusion()))
    }

    /// Quotient by an ideal. Fails if `ideal` is not closed under
    /// multiplication by the algebra.
    pub fn quotient(&self, ideal: &Subspace, prefix: &str) -> Result<Quotient> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(format!("{prefix}: quotient by a non-ideal subspace")));
        }
        let proj = ideal.quotient_projection();
        let lift = ideal.quotient_lift();
        let n = proj.target_dim();
        let lifts = lift.columns();
        let alg = FinAlgebra::from_fn(self.field, default_labels(prefix, n), |i, j| proj.apply(&self.mul(&lifts[i], &lifts[j])));
        Ok(Quotient { algebra: alg, proj, lift, kernel: ideal.clone() })
    }

    /// `A / A^2` as a module (zero multiplication) with its projection.
    pub fn singularise(&self, prefix: &str) -> Quotient {
        let sq = self.square();
        let proj = sq.quotient_projection();
        let lift = sq.quotient_lift();
        let alg = FinAlgebra::zero_mul_labelled(self.field, default_labels(prefix, proj.target_dim()));
        Quotient { algebra: alg, proj, lift, kernel: sq }
    }

    /// Re-expresses the algebra in the basis given by the columns of the
    /// invertible matrix `p` (new basis vector `k` is column `k` of `p`).
    pub fn change_basis(&self, p: &LinMap) -> Option<FinAlgebra> {
        let inv = p.inverse()?;
        let cols = p.columns();
        Some(FinAlgebra::from_fn(self.field, self.labels.clone(), |i, j| inv.apply(&self.mul(&cols[i], &cols[j]))))
    }
}

/// Fixed-point closure of `span(gens)` under a family of linear operators.
pub fn closure(field: Field, dim: usize, gens: Vec<Vector>, ops: &[LinMap]) -> Subspace {
    let mut space = Subspace::span(field, dim, gens);
    let mut frontier: Vec<Vector> = space.basis().to_vec();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for v in &frontier {
            for op in ops {
                let w = op.apply(v);
                if !space.contains(&w) {
                    let mut vs = space.basis().to_vec();
                    vs.push(w.clone());
                    space = Subspace::span(field, dim, vs);
                    fresh.push(w);
                }
            }
        }
        frontier = fresh;
    }
    space
}

/// The kernel of a projection, for assertions in tests and certificates.
pub fn projection_kernel(q: &Quotient) -> Subspace {
    kernel(&q.proj)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k[x]/(x^n) with basis 1, x, ..., x^{n-1}
    fn trunc(field: Field, n: usize) -> FinAlgebra {
        FinAlgebra::from_fn(field, default_labels("x", n), |i, j| {
            let mut v = zero_vec(field, n);
            if i + j < n {
                v[i + j] = field.one();
            }
            v
        })
    }

    #[test]
    fn truncated_polynomials_are_valid() {
        let a = trunc(Field::Rational, 3);
        let r = a.validate();
        assert!(r.is_valid());
        assert_eq!(r.check("associativity").unwrap().instances, 27);
    }

    #[test]
    fn commutativity_violation_has_witness() {
        let f = Field::Rational;
        let mut a = trunc(f, 3);
        a.set_basis_product(0, 1, a.unit(2));
        let r = a.validate();
        assert!(!r.is_valid());
        assert!(r.check("commutativity").unwrap().witnesses[0].starts_with("e0e1"));
    }

    #[test]
    fn ideal_generated_by_x_in_k_x_mod_x4() {
        let f = Field::Rational;
        let a = trunc(f, 4);
        let i = a.ideal_closure(vec![a.unit(1)]);
        assert_eq!(i.dim(), 3);
        assert_eq!(a.ideal_closure(vec![]).dim(), 0);
        // idempotent
        assert_eq!(a.ideal_closure(i.basis().to_vec()), i);
    }

    #[test]
    fn quotient_by_x3_is_k_x_mod_x3() {
        let f = Field::Rational;
        let a = trunc(f, 4);
        let i = a.ideal_closure(vec![a.unit(3)]);
        let q = a.quotient(&i, "q").unwrap();
        assert_eq!(q.algebra, trunc(f, 3).with_labels(default_labels("q", 3)));
        assert_eq!(projection_kernel(&q), i);
        assert!(a.check_hom("proj", &q.proj, &q.algebra).passed());
    }

    #[test]
    fn quotient_by_non_ideal_faults() {
        let f = Field::Rational;
        let a = trunc(f, 3);
        let s = Subspace::span(f, 3, vec![a.unit(1)]);
        assert!(matches!(a.quotient(&s, "q"), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn product_span_of_x_with_itself() {
        let f = Field::Rational;
        let a = trunc(f, 4);
        let x = a.ideal_closure(vec![a.unit(1)]);
        let p = a.product_span(&x, &x);
        assert_eq!(p, Subspace::span(f, 4, vec![a.unit(2), a.unit(3)]));
    }

    #[test]
    fn singularisation_examples() {
        let f = Field::Rational;
        assert_eq!(FinAlgebra::zero_mul(f, 3).singularise("c").algebra.dim(), 3);
        assert_eq!(trunc(f, 3).singularise("c").algebra.dim(), 0);
        let a = trunc(f, 4);
        let x = a.ideal_closure(vec![a.unit(1)]);
        let (xa, _) = a.sub_algebra(&x, "y").unwrap();
        assert_eq!(xa.singularise("c").algebra.dim(), 1);
    }
}

//! Shared helpers for the integration tests: fixture sets and an independent
//! exact linear-algebra oracle that only reads rendered matrix entries.

#![allow(dead_code)]

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use hocalg::cli::bundle::{Bundle, Structure};
use hocalg::cli::catalog::{fixture, names, FixtureParams};
use hocalg::exactalg::{Field, FinAlgebra, LinMap, Vector};
use hocalg::functors::{cone_functor, m2_functor, simp_to_2crossed};
use hocalg::simplicial::TruncSimplicialAlgebra;
use hocalg::structures::{CrossedSquare, TwoCrossedModule};

pub fn f7() -> Field {
    Field::prime(7, false).unwrap()
}

/// Every catalog fixture over the rationals and over F_7. `dk-f3` keeps its
/// own field in the rational pass.
pub fn all_bundles() -> &'static [(String, Bundle)] {
    static CELL: OnceLock<Vec<(String, Bundle)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for field in [Field::Rational, f7()] {
            for name in names() {
                let b = fixture(name, FixtureParams::over(field)).unwrap();
                out.push((format!("{name}/{}", b.field().spec()), b));
            }
        }
        out
    })
}

pub fn simplicial_fixtures() -> Vec<(String, &'static TruncSimplicialAlgebra)> {
    all_bundles()
        .iter()
        .filter_map(|(n, b)| match &b.structure {
            Structure::Simplicial(e) => Some((n.clone(), e)),
            _ => None,
        })
        .collect()
}

/// Catalog 2-crossed modules plus the simplicial and mapping-cone ones.
pub fn two_crossed_inputs() -> &'static [(String, TwoCrossedModule)] {
    static CELL: OnceLock<Vec<(String, TwoCrossedModule)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for (n, b) in all_bundles() {
            match &b.structure {
                Structure::TwoCrossed(t) => out.push((n.clone(), t.clone())),
                Structure::Simplicial(e) => out.push((format!("simp2({n})"), simp_to_2crossed(e).unwrap().0)),
                _ => {}
            }
        }
        for (n, s) in square_inputs() {
            if let Ok((t, _)) = cone_functor(s) {
                out.push((format!("cone({n})"), t));
            }
        }
        out
    })
}

/// Catalog crossed squares plus the squares of the simplicial fixtures.
pub fn square_inputs() -> &'static [(String, CrossedSquare)] {
    static CELL: OnceLock<Vec<(String, CrossedSquare)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for (n, b) in all_bundles() {
            match &b.structure {
                Structure::Square(s) => out.push((n.clone(), s.clone())),
                Structure::Simplicial(e) => out.push((format!("m2({n})"), m2_functor(e).unwrap().0)),
                _ => {}
            }
        }
        out
    })
}

/// Exact oracle arithmetic: rationals, or residues mod `p` kept in `[0, p)`.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    p: Option<i64>,
}

pub type Elt = BigRational;

impl Oracle {
    pub fn of(field: Field) -> Oracle {
        match field.characteristic() {
            0 => Oracle { p: None },
            p => Oracle { p: Some(p as i64) },
        }
    }

    fn norm(&self, x: Elt) -> Elt {
        match self.p {
            None => x,
            Some(p) => {
                let p = BigInt::from(p);
                let n = ((x.numer() % &p) + &p) % &p;
                BigRational::from_integer(n)
            }
        }
    }

    pub fn parse(&self, s: &str) -> Elt {
        let q: BigRational = match s.split_once('/') {
            Some((a, b)) => BigRational::new(a.parse().unwrap(), b.parse().unwrap()),
            None => BigRational::from_integer(s.parse().unwrap()),
        };
        assert!(self.p.is_none() || q.is_integer(), "residues render as integers");
        self.norm(q)
    }

    fn inv(&self, x: &Elt) -> Elt {
        match self.p {
            None => x.recip(),
            Some(p) => {
                // Fermat.
                let mut acc = BigInt::one();
                let base = x.numer().clone();
                for _ in 0..(p - 2) {
                    acc = (acc * &base) % BigInt::from(p);
                }
                BigRational::from_integer(acc)
            }
        }
    }

    /// Row-major entries of a map.
    pub fn matrix(&self, m: &LinMap) -> Vec<Vec<Elt>> {
        m.render().iter().map(|r| r.iter().map(|s| self.parse(s)).collect()).collect()
    }

    pub fn vector(&self, v: &[hocalg::exactalg::Scalar]) -> Vec<Elt> {
        v.iter().map(|s| self.parse(&s.render())).collect()
    }

    pub fn rank(&self, mut rows: Vec<Vec<Elt>>) -> usize {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
            rows.swap(rank, piv);
            let inv = self.inv(&rows[rank][col]);
            let pivot_row: Vec<Elt> = rows[rank].iter().map(|x| self.norm(x * &inv)).collect();
            rows[rank] = pivot_row.clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let c = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x = self.norm(&*x - &c * p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn map_rank(&self, m: &LinMap) -> usize {
        self.rank(self.matrix(m))
    }

    /// `dim ker(out) − rank(inc)`.
    pub fn homology_dim(&self, inc: &LinMap, out: &LinMap) -> usize {
        out.source_dim() - self.map_rank(out) - self.map_rank(inc)
    }

    /// Dimension of the common kernel of maps sharing a source.
    pub fn common_kernel_dim(&self, dim: usize, maps: &[&LinMap]) -> usize {
        let rows: Vec<Vec<Elt>> = maps.iter().flat_map(|m| self.matrix(m)).collect();
        if rows.is_empty() {
            return dim;
        }
        dim - self.rank(rows)
    }

    fn apply(&self, m: &[Vec<Elt>], v: &[Elt]) -> Vec<Elt> {
        m.iter().map(|row| self.norm(row.iter().zip(v).map(|(a, b)| a * b).fold(Elt::zero(), |s, x| s + x))).collect()
    }

    /// Dimension of the smallest subspace containing `gens` and stable under
    /// `ops`, by saturating with every operator on every spanning vector
    /// until the rank stops growing.
    pub fn closure_dim(&self, gens: &[Vector], ops: &[LinMap]) -> usize {
        let ops: Vec<Vec<Vec<Elt>>> = ops.iter().map(|o| self.matrix(o)).collect();
        let mut vecs: Vec<Vec<Elt>> = gens.iter().map(|g| self.vector(g)).collect();
        if vecs.is_empty() {
            return 0;
        }
        let mut rank = self.rank(vecs.clone());
        loop {
            let mut next = vecs.clone();
            for v in &vecs {
                for o in &ops {
                    next.push(self.apply(o, v));
                }
            }
            let r = self.rank(next.clone());
            vecs = next;
            // Keep the spanning set small.
            vecs = self.prune(vecs);
            if r == rank {
                return r;
            }
            rank = r;
        }
    }

    fn prune(&self, vecs: Vec<Vec<Elt>>) -> Vec<Vec<Elt>> {
        let mut kept: Vec<Vec<Elt>> = Vec::new();
        let mut r = 0;
        for v in vecs {
            let mut trial = kept.clone();
            trial.push(v.clone());
            let nr = self.rank(trial);
            if nr > r {
                kept.push(v);
                r = nr;
            }
        }
        kept
    }

    /// Left multiplication operators of the basis elements.
    pub fn mult_ops(a: &FinAlgebra) -> Vec<LinMap> {
        (0..a.dim())
            .map(|i| LinMap::from_fn(a.field(), a.dim(), a.dim(), |j| a.basis_product(i, j).clone()))
            .collect()
    }

    pub fn ideal_dim(&self, a: &FinAlgebra, gens: &[Vector], extra_ops: &[LinMap]) -> usize {
        let mut ops = Oracle::mult_ops(a);
        ops.extend(extra_ops.iter().cloned());
        self.closure_dim(gens, &ops)
    }
}

pub fn one(field: Field) -> hocalg::exactalg::Scalar {
    field.one()
}

/// `v + 1` in one coordinate.
pub fn bump(v: &mut [hocalg::exactalg::Scalar], i: usize) {
    let f = v[i].field();
    v[i] = v[i].clone() + f.one();
}

pub fn is_ideal_brute(a: &FinAlgebra, space: &hocalg::exactalg::Subspace) -> bool {
    space.basis().iter().all(|v| (0..a.dim()).all(|i| space.contains(&a.mul(&a.unit(i), v)) && space.contains(&a.mul(v, &a.unit(i)))))
}

pub fn zero_rat() -> BigRational {
    BigRational::zero()
}

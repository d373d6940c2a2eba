//! Simplicial fixtures: constant, nerve of a crossed module, Dold–Kan.

use crate::error::{Error, Result};
use crate::exactalg::matrix::{add_vec, zero_vec};
use crate::exactalg::{Action, Field, FinAlgebra, LinMap, Scalar, Vector};
use crate::simplicial::TruncSimplicialAlgebra;

/// Nerve of the internal category of a crossed module `∂: C -> R`.
///
/// Level `n` has coordinates `(r; c_1, …, c_n)`; the product is taken
/// arrowwise in `C ⋊ R` where arrow `j` is `(c_j, r + ∂(c_1 + … + c_{j-1}))`.
pub fn nerve(c: &FinAlgebra, r: &FinAlgebra, boundary: &LinMap, act: &Action, truncation: usize) -> Result<TruncSimplicialAlgebra> {
    let f = r.field();
    let (dc, dr) = (c.dim(), r.dim());
    if boundary.source_dim() != dc || boundary.target_dim() != dr || act.acting_dim() != dr || act.module_dim() != dc {
        return Err(Error::Dimension { table: "nerve".into(), msg: "crossed module shapes disagree".into() });
    }
    let dim = |n: usize| dr + n * dc;
    let split = |n: usize, v: &[Scalar]| -> (Vector, Vec<Vector>) {
        let rr = v[..dr].to_vec();
        let cs = (0..n).map(|j| v[dr + j * dc..dr + (j + 1) * dc].to_vec()).collect();
        (rr, cs)
    };
    let join = |rr: Vector, cs: Vec<Vector>| -> Vector {
        let mut out = rr;
        for cj in cs {
            out.extend(cj);
        }
        out
    };
    // (c, r)(c', r') = (cc' + c·r' + c'·r, rr')
    let arrow_mul = |a: &(Vector, Vector), b: &(Vector, Vector)| -> (Vector, Vector) {
        let mut top = c.mul(&a.0, &b.0);
        top = add_vec(&top, &act.act(&b.1, &a.0));
        top = add_vec(&top, &act.act(&a.1, &b.0));
        (top, r.mul(&a.1, &b.1))
    };
    let arrows = |n: usize, v: &[Scalar]| -> Vec<(Vector, Vector)> {
        let (mut src, cs) = split(n, v);
        let mut out = Vec::with_capacity(n);
        for cj in cs {
            let next = add_vec(&src, &boundary.apply(&cj));
            out.push((cj, src));
            src = next;
        }
        out
    };

    let mut levels = Vec::new();
    for n in 0..=truncation {
        let d = dim(n);
        let labels: Vec<String> = (0..d)
            .map(|i| if i < dr { format!("r.{}", r.labels()[i]) } else { format!("c{}.{}", (i - dr) / dc + 1, c.labels()[(i - dr) % dc]) })
            .collect();
        let alg = if n == 0 {
            r.clone().with_labels(labels)
        } else {
            FinAlgebra::from_fn(f, labels, |i, j| {
                let (u, v) = (unit(f, d, i), unit(f, d, j));
                let prods: Vec<(Vector, Vector)> =
                    arrows(n, &u).iter().zip(arrows(n, &v).iter()).map(|(a, b)| arrow_mul(a, b)).collect();
                let rr = prods[0].1.clone();
                join(rr, prods.into_iter().map(|p| p.0).collect())
            })
        };
        levels.push(alg);
    }

    let mut faces = vec![Vec::new()];
    for n in 1..=truncation {
        let mut fs = Vec::new();
        for i in 0..=n {
            fs.push(LinMap::from_fn(f, dim(n - 1), dim(n), |col| {
                let (rr, mut cs) = split(n, &unit(f, dim(n), col));
                if i == 0 {
                    let rr = add_vec(&rr, &boundary.apply(&cs[0]));
                    cs.remove(0);
                    join(rr, cs)
                } else if i == n {
                    cs.pop();
                    join(rr, cs)
                } else {
                    let merged = add_vec(&cs[i - 1], &cs[i]);
                    cs[i - 1] = merged;
                    cs.remove(i);
                    join(rr, cs)
                }
            }));
        }
        faces.push(fs);
    }
    let mut degens = Vec::new();
    for n in 0..=truncation {
        let mut ss = Vec::new();
        if n < truncation {
            for i in 0..=n {
                ss.push(LinMap::from_fn(f, dim(n + 1), dim(n), |col| {
                    let (rr, mut cs) = split(n, &unit(f, dim(n), col));
                    cs.insert(i, zero_vec(f, dc));
                    join(rr, cs)
                }));
            }
        }
        degens.push(ss);
    }
    TruncSimplicialAlgebra::new(levels, faces, degens)
}

fn unit(f: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(f, n);
    v[i] = f.one();
    v
}

/// A finite chain complex of free `Z/m`-modules: `ranks[k]` is the rank of
/// `C_k`, `diffs[k]` the matrix of `∂: C_k -> C_{k-1}` (rows `ranks[k-1]`,
/// columns `ranks[k]`; `diffs[0]` is ignored).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub modulus: u64,
    pub ranks: Vec<usize>,
    pub diffs: Vec<Vec<Vec<i64>>>,
}

impl ChainComplex {
    pub fn new(modulus: u64, ranks: Vec<usize>, diffs: Vec<Vec<Vec<i64>>>) -> Result<ChainComplex> {
        if modulus < 2 {
            return Err(Error::InvalidInput("modulus must be at least 2".into()));
        }
        let mut diffs = diffs;
        diffs.resize(ranks.len(), Vec::new());
        for k in 1..ranks.len() {
            if diffs[k].is_empty() {
                diffs[k] = vec![vec![0; ranks[k]]; ranks[k - 1]];
            }
            if diffs[k].len() != ranks[k - 1] || diffs[k].iter().any(|row| row.len() != ranks[k]) {
                return Err(Error::Dimension { table: format!("diffs[{k}]"), msg: "shape does not match ranks".into() });
            }
        }
        let cc = ChainComplex { modulus, ranks, diffs };
        for k in 2..cc.ranks.len() {
            for col in 0..cc.ranks[k] {
                let mut e = vec![0; cc.ranks[k]];
                e[col] = 1;
                if cc.apply(k - 1, &cc.apply(k, &e)).iter().any(|&x| x != 0) {
                    return Err(Error::InvalidInput(format!("chain complex differential squares to nonzero at {k}")));
                }
            }
        }
        Ok(cc)
    }

    /// `∂_k` applied to a vector of residues.
    fn apply(&self, k: usize, v: &[u64]) -> Vec<u64> {
        let m = self.modulus as i128;
        (0..self.ranks[k - 1])
            .map(|row| {
                let s: i128 = v.iter().enumerate().map(|(c, &x)| self.diffs[k][row][c] as i128 * x as i128).sum();
                s.rem_euclid(m) as u64
            })
            .collect()
    }
}

/// Monotone map `[a] -> [b]` as its value list.
type Monotone = Vec<usize>;

/// Surjections `[n] ->> [k]` in a fixed order.
fn surjections(n: usize, k: usize) -> Vec<Monotone> {
    // choose which n-k of the n adjacent steps are flat
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != n - k {
            continue;
        }
        let mut vals = vec![0];
        for step in 0..n {
            let last = *vals.last().unwrap();
            vals.push(if mask & (1 << step) != 0 { last } else { last + 1 });
        }
        out.push(vals);
    }
    out
}

/// Summands `(σ: [n] ->> [k], basis index of C_k)` of `Γ(C)_n`.
fn gamma_basis(cc: &ChainComplex, n: usize) -> Vec<(Monotone, usize, usize)> {
    let mut out = Vec::new();
    for k in 0..cc.ranks.len().min(n + 1) {
        for s in surjections(n, k) {
            for b in 0..cc.ranks[k] {
                out.push((s.clone(), k, b));
            }
        }
    }
    out
}

/// `θ^*: Γ(C)_n -> Γ(C)_m` for `θ: [m] -> [n]`, as a matrix of residues.
fn gamma_operator(cc: &ChainComplex, theta: &Monotone, n: usize) -> Vec<Vec<u64>> {
    let m = theta.len() - 1;
    let src = gamma_basis(cc, n);
    let tgt = gamma_basis(cc, m);
    let mut mat = vec![vec![0u64; src.len()]; tgt.len()];
    for (col, (sigma, k, b)) in src.iter().enumerate() {
        let comp: Vec<usize> = theta.iter().map(|&t| sigma[t]).collect();
        let mut image: Vec<usize> = comp.clone();
        image.dedup();
        let p = image.len() - 1;
        let eta: Monotone = comp.iter().map(|v| image.iter().position(|w| w == v).unwrap()).collect();
        let value: Vec<u64> = if p == *k {
            let mut e = vec![0; cc.ranks[*k]];
            e[*b] = 1;
            e
        } else if p + 1 == *k && image == (0..*k).collect::<Vec<_>>() {
            let mut e = vec![0; cc.ranks[*k]];
            e[*b] = 1;
            cc.apply(*k, &e)
        } else {
            continue;
        };
        for (bb, x) in value.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            let row = tgt.iter().position(|(s2, k2, b2)| *s2 == eta && *k2 == p && *b2 == bb).unwrap();
            mat[row][col] = (mat[row][col] + x) % cc.modulus;
        }
    }
    mat
}

fn coface(n: usize, i: usize) -> Monotone {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

fn codegeneracy(n: usize, i: usize) -> Monotone {
    (0..n + 2).map(|j| if j <= i { j } else { j - 1 }).collect()
}

/// Decoded residues of group element `g` in `(Z/m)^d`.
fn digits(mut g: usize, m: u64, d: usize) -> Vec<u64> {
    let mut out = vec![0; d];
    for x in out.iter_mut() {
        *x = (g as u64) % m;
        g /= m as usize;
    }
    out
}

fn encode(v: &[u64], m: u64) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * m as usize + x as usize)
}

fn residue_apply(mat: &[Vec<u64>], v: &[u64], m: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| (row.iter().zip(v).map(|(a, b)| (*a as u128) * (*b as u128)).sum::<u128>() % m as u128) as u64)
        .collect()
}

/// The group algebra `k[Γ(C)]` of the Dold–Kan simplicial group.
pub fn dold_kan_group_algebra(field: Field, cc: &ChainComplex, truncation: usize) -> Result<TruncSimplicialAlgebra> {
    let m = cc.modulus;
    let rank = |n: usize| gamma_basis(cc, n).len();
    let size = |n: usize| -> Result<usize> {
        let d = rank(n) as u32;
        m.checked_pow(d).filter(|s| *s <= 4096).map(|s| s as usize).ok_or_else(|| {
            Error::InvalidInput(format!("group algebra at level {n} is too large ({m}^{d})"))
        })
    };
    let mut levels = Vec::new();
    for n in 0..=truncation {
        let (d, s) = (rank(n), size(n)?);
        let labels = (0..s).map(|g| format!("g{:?}", digits(g, m, d))).collect();
        levels.push(FinAlgebra::from_fn(field, labels, |i, j| {
            let (a, b) = (digits(i, m, d), digits(j, m, d));
            let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % m).collect();
            unit(field, s, encode(&sum, m))
        }));
    }
    let induced = |mat: &[Vec<u64>], src: usize, tgt: usize| -> Result<LinMap> {
        let (ds, ss, st) = (rank(src), size(src)?, size(tgt)?);
        Ok(LinMap::from_fn(field, st, ss, |g| unit(field, st, encode(&residue_apply(mat, &digits(g, m, ds), m), m))))
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=truncation {
        let mut fs = Vec::new();
        for i in 0..=n {
            fs.push(induced(&gamma_operator(cc, &coface(n, i), n), n, n - 1)?);
        }
        faces.push(fs);
    }
    let mut degens = Vec::new();
    for n in 0..=truncation {
        let mut ss = Vec::new();
        if n < truncation {
            for i in 0..=n {
                ss.push(induced(&gamma_operator(cc, &codegeneracy(n, i), n), n, n + 1)?);
            }
        }
        degens.push(ss);
    }
    TruncSimplicialAlgebra::new(levels, faces, degens)
}

/// `Γ(C) ⊗ k` as a simplicial module (zero multiplication). Requires the
/// field characteristic to divide the modulus, or the modulus to be
/// ignored over `Q` (entries read as integers).
pub fn dold_kan_linear(field: Field, cc: &ChainComplex, truncation: usize) -> Result<TruncSimplicialAlgebra> {
    let rank = |n: usize| gamma_basis(cc, n).len();
    let to_map = |mat: Vec<Vec<u64>>, rows: usize, cols: usize| {
        LinMap::from_fn(field, rows, cols, |c| {
            (0..rows)
                .map(|r| {
                    let v = mat[r][c] as i64;
                    let signed = if cc.modulus > 2 && v as u64 > cc.modulus / 2 { v - cc.modulus as i64 } else { v };
                    field.int(signed)
                })
                .collect()
        })
    };
    let levels = (0..=truncation).map(|n| FinAlgebra::zero_mul(field, rank(n))).collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=truncation {
        faces.push((0..=n).map(|i| to_map(gamma_operator(cc, &coface(n, i), n), rank(n - 1), rank(n))).collect());
    }
    let mut degens = Vec::new();
    for n in 0..=truncation {
        let ss = if n < truncation {
            (0..=n).map(|i| to_map(gamma_operator(cc, &codegeneracy(n, i), n), rank(n + 1), rank(n))).collect()
        } else {
            Vec::new()
        };
        degens.push(ss);
    }
    TruncSimplicialAlgebra::new(levels, faces, degens)
}


#[cfg(test)]
mod fixture_checks {
    use super::*;
    use crate::fixtures::MonomialAlgebra;

    fn x_in_trunc3() -> TruncSimplicialAlgebra {
        let f = Field::Rational;
        let r = MonomialAlgebra::truncated(f, 3).algebra;
        let ideal = r.ideal_closure(vec![r.unit(1)]);
        let (c, inc) = r.sub_algebra(&ideal, "c").unwrap();
        let act = Action::regular(&r).restrict(&ideal).unwrap();
        nerve(&c, &r, &inc, &act, 4).unwrap()
    }

    #[test]
    fn nerve_is_simplicial_with_moore_length_one() {
        let e = x_in_trunc3();
        let rep = e.validate();
        assert!(rep.is_valid(), "{}", rep.render());
        assert_eq!(e.moore().unwrap().dims(), vec![3, 2, 0, 0, 0]);
        assert_eq!(e.homotopy().unwrap().dims()[..2], [Some(1), Some(0)]);
        assert!(e.degenerate_ideal(2).is_full());
    }

    #[test]
    fn dold_kan_is_simplicial() {
        let cc = ChainComplex::new(2, vec![0, 1], vec![]).unwrap();
        let e = dold_kan_group_algebra(Field::Rational, &cc, 4).unwrap();
        let rep = e.validate();
        assert!(rep.is_valid(), "{}", rep.render());
        let lin = dold_kan_linear(Field::Rational, &ChainComplex::new(3, vec![1, 2, 1], vec![vec![], vec![vec![1, 0]], vec![vec![0], vec![0]]]).unwrap(), 3).unwrap();
        assert!(lin.validate().is_valid());
        assert_eq!(lin.moore().unwrap().dims(), vec![1, 2, 1, 0]);
    }
}

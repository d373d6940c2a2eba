//! Subspaces of coordinate spaces in canonical (reduced echelon) form.
//!
//! Two equal subspaces always have identical stored bases, so equality is
//! structural. Quotients `V / W` use the standard basis vectors at the
//! non-pivot columns of `W` as coset representatives.

use super::field::{Field, Scalar};
use super::matrix::{axpy, is_zero_vec, rref, unit_vec, zero_vec, LinMap, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, (0..ambient).map(|i| unit_vec(field, ambient, i)).collect())
    }

    pub fn span(field: Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        let (basis, pivots) = rref(field, ambient, vectors);
        Subspace { field, ambient, basis, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminates the pivot coordinates of `v`; the result is the canonical
    /// coset representative of `v + self`.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -&out[p];
                axpy(&mut out, &c, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` with respect to the stored basis.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Inclusion map `self -> ambient` in the stored basis.
    pub fn inclusion(&self) -> LinMap {
        LinMap::from_columns(self.field, self.ambient, &self.basis)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, v)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut rows = Vec::new();
        for b in &self.basis {
            let mut r = b.clone();
            r.extend(b.iter().cloned());
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(zero_vec(self.field, n));
            rows.push(r);
        }
        let (red, _) = rref(self.field, 2 * n, rows);
        let vecs = red
            .into_iter()
            .filter(|r| is_zero_vec(&r[..n]))
            .map(|r| r[n..].to_vec())
            .collect();
        Subspace::span(self.field, n, vecs)
    }

    /// Image under a linear map.
    pub fn image(&self, map: &LinMap) -> Subspace {
        assert_eq!(map.source_dim(), self.ambient);
        Subspace::span(self.field, map.target_dim(), self.basis.iter().map(|b| map.apply(b)).collect())
    }

    /// `{ v : map(v) ∈ target }`
    pub fn preimage(map: &LinMap, target: &Subspace) -> Subspace {
        let reduced = LinMap::from_fn(map.field(), map.target_dim(), map.source_dim(), |j| target.reduce(&map.column(j)));
        kernel(&reduced)
    }

    // --- quotient by self ---

    /// Dimension of `ambient / self`.
    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Ambient coordinates used as quotient coordinates.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }

    /// Projection `ambient -> ambient / self`.
    pub fn quotient_projection(&self) -> LinMap {
        let idx = self.complement_indices();
        LinMap::from_fn(self.field, idx.len(), self.ambient, |j| {
            let r = self.reduce(&unit_vec(self.field, self.ambient, j));
            idx.iter().map(|&i| r[i].clone()).collect()
        })
    }

    /// Section `ambient / self -> ambient` picking canonical representatives.
    pub fn quotient_lift(&self) -> LinMap {
        let idx = self.complement_indices();
        LinMap::from_columns(
            self.field,
            self.ambient,
            &idx.iter().map(|&i| unit_vec(self.field, self.ambient, i)).collect::<Vec<_>>(),
        )
    }

    /// Re-expresses `self` inside the coordinates of a larger subspace `outer`.
    pub fn coords_in(&self, outer: &Subspace) -> Option<Subspace> {
        let vecs: Option<Vec<Vector>> = self.basis.iter().map(|b| outer.coords(b)).collect();
        Some(Subspace::span(self.field, outer.dim(), vecs?))
    }
}

/// Canonical basis of the kernel of a linear map.
pub fn kernel(map: &LinMap) -> Subspace {
    let field = map.field();
    let n = map.source_dim();
    let rows: Vec<Vector> = (0..map.target_dim()).map(|i| map.row(i)).collect();
    let (red, pivots) = rref(field, n, rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vecs = free
        .iter()
        .map(|&f| {
            let mut v = unit_vec(field, n, f);
            for (r, &p) in red.iter().zip(&pivots) {
                v[p] = -&r[f];
            }
            v
        })
        .collect();
    Subspace::span(field, n, vecs)
}

/// Image (column space) of a linear map.
pub fn image(map: &LinMap) -> Subspace {
    Subspace::span(map.field(), map.target_dim(), map.columns())
}

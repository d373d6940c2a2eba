//! Dense matrices over an exact field.
//!
//! A [`LinMap`] stores column `j` as the image of the source basis vector
//! `e_j`, so a map `V -> W` has `dim W` rows and `dim V` columns.

use super::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn neg_vec(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn render_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::render).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinMap {
    pub fn zero(field: Field, target_dim: usize, source_dim: usize) -> LinMap {
        LinMap { field, rows: target_dim, cols: source_dim, data: vec![field.zero(); target_dim * source_dim] }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let mut m = LinMap::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a map from the images of the source basis vectors.
    pub fn from_columns(field: Field, target_dim: usize, columns: &[Vector]) -> LinMap {
        let mut m = LinMap::zero(field, target_dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), target_dim, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(field: Field, target_dim: usize, source_dim: usize, f: impl Fn(usize) -> Vector) -> LinMap {
        let cols: Vec<Vector> = (0..source_dim).map(f).collect();
        LinMap::from_columns(field, target_dim, &cols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn source_dim(&self) -> usize {
        self.cols
    }

    pub fn target_dim(&self) -> usize {
        self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        self.data[row * self.cols + col] = v;
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match source dimension");
        let mut out = zero_vec(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.cols, other.rows, "composition dimension mismatch");
        let cols: Vec<Vector> = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        LinMap::from_columns(self.field, self.rows, &cols)
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinMap { field: self.field, rows: self.rows, cols: self.cols, data: add_vec(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinMap { field: self.field, rows: self.rows, cols: self.cols, data: sub_vec(&self.data, &other.data) }
    }

    pub fn neg(&self) -> LinMap {
        LinMap { field: self.field, rows: self.rows, cols: self.cols, data: neg_vec(&self.data) }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_columns(self.field, self.cols, &(0..self.rows).map(|i| self.row(i)).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == LinMap::identity(self.field, self.rows)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vector> = (0..self.rows).map(|i| self.row(i)).collect();
        rref(self.field, self.cols, rows).1.len()
    }

    /// Horizontal concatenation `[self | other]` (same target).
    pub fn hcat(&self, other: &LinMap) -> LinMap {
        let mut cols = self.columns();
        cols.extend(other.columns());
        LinMap::from_columns(self.field, self.rows, &cols)
    }

    /// Vertical concatenation (same source): the map `v -> (self v, other v)`.
    pub fn vcat(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.cols, other.cols);
        LinMap::from_fn(self.field, self.rows + other.rows, self.cols, |j| {
            let mut c = self.column(j);
            c.extend(other.column(j));
            c
        })
    }

    /// Solves `self * x = b`, returning one solution if any exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        // augmented rows [A | b]
        let rows: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.push(b[i].clone());
                r
            })
            .collect();
        let (red, pivots) = rref(self.field, self.cols + 1, rows);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.field, self.cols);
        for (r, &p) in red.iter().zip(&pivots) {
            x[p] = r[self.cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let cols: Option<Vec<Vector>> = (0..n).map(|j| self.solve(&unit_vec(self.field, n, j))).collect();
        let inv = LinMap::from_columns(self.field, n, &cols?);
        if self.compose(&inv).is_identity() {
            Some(inv)
        } else {
            None
        }
    }

    pub fn render(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(Scalar::render).collect()).collect()
    }
}

/// Reduced row echelon form of a list of row vectors of width `ncols`.
/// Returns the nonzero reduced rows (ordered by pivot) and the pivot columns.
pub fn rref(field: Field, ncols: usize, mut rows: Vec<Vector>) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            rows[r] = scale_vec(&inv, &rows[r]);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -&row[c];
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    let _ = field;
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.int(v)
    }

    #[test]
    fn rref_is_reduced() {
        let f = Field::Rational;
        let rows = vec![vec![q(2), q(4), q(6)], vec![q(1), q(2), q(4)], vec![q(3), q(6), q(10)]];
        let (red, piv) = rref(f, 3, rows);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(red[0], vec![q(1), q(2), q(0)]);
        assert_eq!(red[1], vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn solve_and_inverse() {
        let f = Field::Rational;
        let m = LinMap::from_columns(f, 2, &[vec![q(1), q(1)], vec![q(1), q(-1)]]);
        let inv = m.inverse().unwrap();
        assert!(inv.compose(&m).is_identity());
        assert_eq!(m.solve(&[q(2), q(0)]).unwrap(), vec![q(1), q(1)]);
        let sing = LinMap::from_columns(f, 2, &[vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert!(sing.solve(&[q(1), q(0)]).is_none());
        assert!(sing.inverse().is_none());
    }
}

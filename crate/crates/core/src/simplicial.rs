//! Truncated simplicial commutative algebras and their Moore complexes.

use crate::error::{Error, Result};
use crate::exactalg::{kernel, image, Field, FinAlgebra, LinMap, Subspace, Vector};
use crate::homotopy::HomotopyTable;
use crate::report::{CheckBuilder, ValidationReport};

pub const MAX_TRUNCATION: usize = 5;

/// Levels `E_0..E_N` with faces `d_i: E_n -> E_{n-1}` and degeneracies
/// `s_i: E_n -> E_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSimplicialAlgebra {
    levels: Vec<FinAlgebra>,
    /// `faces[n][i]` for `1 <= n <= N`; `faces[0]` is empty.
    faces: Vec<Vec<LinMap>>,
    /// `degens[n][i]` for `n < N`.
    degens: Vec<Vec<LinMap>>,
}

#[derive(Clone, Debug)]
pub struct MooreComplex {
    /// `NE_n` inside `E_n`.
    pub spaces: Vec<Subspace>,
    /// `boundaries[n]: NE_n -> NE_{n-1}` in the stored bases of the spaces;
    /// `boundaries[0]` is the zero map to the zero space.
    pub boundaries: Vec<LinMap>,
}

impl MooreComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.boundaries.iter().map(LinMap::rank).collect()
    }
}

impl TruncSimplicialAlgebra {
    pub fn new(levels: Vec<FinAlgebra>, faces: Vec<Vec<LinMap>>, degens: Vec<Vec<LinMap>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidInput("simplicial algebra needs at least level 0".into()));
        }
        let n_top = levels.len() - 1;
        if n_top > MAX_TRUNCATION {
            return Err(Error::InvalidInput(format!("truncation {n_top} exceeds the supported maximum {MAX_TRUNCATION}")));
        }
        if faces.len() != n_top + 1 || degens.len() != n_top + 1 {
            return Err(Error::Dimension { table: "simplicial".into(), msg: "face/degeneracy lists must have one entry per level".into() });
        }
        for n in 0..=n_top {
            let want = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != want {
                return Err(Error::Dimension { table: format!("faces[{n}]"), msg: format!("expected {want} maps, got {}", faces[n].len()) });
            }
            for (i, d) in faces[n].iter().enumerate() {
                if d.source_dim() != levels[n].dim() || d.target_dim() != levels[n - 1].dim() {
                    return Err(Error::Dimension { table: format!("faces[{n}][{i}]"), msg: "shape does not match levels".into() });
                }
            }
            let want = if n < n_top { n + 1 } else { 0 };
            if degens[n].len() != want {
                return Err(Error::Dimension { table: format!("degens[{n}]"), msg: format!("expected {want} maps, got {}", degens[n].len()) });
            }
            for (i, s) in degens[n].iter().enumerate() {
                if s.source_dim() != levels[n].dim() || s.target_dim() != levels[n + 1].dim() {
                    return Err(Error::Dimension { table: format!("degens[{n}][{i}]"), msg: "shape does not match levels".into() });
                }
            }
        }
        Ok(TruncSimplicialAlgebra { levels, faces, degens })
    }

    /// Constant simplicial algebra: every level `A`, every map the identity.
    pub fn constant(a: &FinAlgebra, truncation: usize) -> Result<Self> {
        let id = LinMap::identity(a.field(), a.dim());
        let levels = vec![a.clone(); truncation + 1];
        let faces = (0..=truncation).map(|n| if n == 0 { vec![] } else { vec![id.clone(); n + 1] }).collect();
        let degens = (0..=truncation).map(|n| if n < truncation { vec![id.clone(); n + 1] } else { vec![] }).collect();
        Self::new(levels, faces, degens)
    }

    pub fn field(&self) -> Field {
        self.levels[0].field()
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &FinAlgebra {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[FinAlgebra] {
        &self.levels
    }

    pub fn face(&self, n: usize, i: usize) -> &LinMap {
        &self.faces[n][i]
    }

    pub fn degen(&self, n: usize, i: usize) -> &LinMap {
        &self.degens[n][i]
    }

    pub fn faces(&self) -> &[Vec<LinMap>] {
        &self.faces
    }

    pub fn degens(&self) -> &[Vec<LinMap>] {
        &self.degens
    }

    pub fn set_degen(&mut self, n: usize, i: usize, m: LinMap) {
        self.degens[n][i] = m;
    }

    pub fn set_face(&mut self, n: usize, i: usize, m: LinMap) {
        self.faces[n][i] = m;
    }

    pub fn require_truncation(&self, need: usize) -> Result<()> {
        if self.truncation() < need {
            return Err(Error::Truncation { need, have: self.truncation() });
        }
        Ok(())
    }

    /// Checks every simplicial identity instance and multiplicativity of every map.
    pub fn validate(&self) -> ValidationReport {
        let top = self.truncation();
        let mut report = ValidationReport::new("simplicial");
        for (n, a) in self.levels.iter().enumerate() {
            report.absorb(&format!("E{n}."), a.validate());
        }

        let mut dd = CheckBuilder::new("d_i d_j = d_{j-1} d_i (i<j)");
        for n in 2..=top {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = self.face(n - 1, i).compose(self.face(n, j));
                    let rhs = self.face(n - 1, j - 1).compose(self.face(n, i));
                    dd.test(lhs == rhs, || format!("n={n} i={i} j={j}"));
                }
            }
        }
        report.push(dd.finish());

        let mut ss = CheckBuilder::new("s_i s_j = s_{j+1} s_i (i<=j)");
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = self.degen(n + 1, i).compose(self.degen(n, j));
                    let rhs = self.degen(n + 1, j + 1).compose(self.degen(n, i));
                    ss.test(lhs == rhs, || format!("n={n} i={i} j={j}"));
                }
            }
        }
        report.push(ss.finish());

        let mut ds_lo = CheckBuilder::new("d_i s_j = s_{j-1} d_i (i<j)");
        let mut ds_id = CheckBuilder::new("d_j s_j = d_{j+1} s_j = id");
        let mut ds_hi = CheckBuilder::new("d_i s_j = s_j d_{i-1} (i>j+1)");
        for n in 0..top {
            let id = LinMap::identity(self.field(), self.levels[n].dim());
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = self.face(n + 1, i).compose(self.degen(n, j));
                    if i < j {
                        let rhs = self.degen(n - 1, j - 1).compose(self.face(n, i));
                        ds_lo.test(lhs == rhs, || format!("n={n} i={i} j={j}"));
                    } else if i == j || i == j + 1 {
                        ds_id.test(lhs == id, || format!("n={n} i={i} j={j}"));
                    } else {
                        let rhs = self.degen(n - 1, j).compose(self.face(n, i - 1));
                        ds_hi.test(lhs == rhs, || format!("n={n} i={i} j={j}"));
                    }
                }
            }
        }
        report.push(ds_lo.finish());
        report.push(ds_id.finish());
        report.push(ds_hi.finish());

        let mut homs = Vec::new();
        for n in 1..=top {
            for i in 0..=n {
                homs.push(self.levels[n].check_hom(&format!("d{i}@{n}"), self.face(n, i), &self.levels[n - 1]));
            }
        }
        for n in 0..top {
            for i in 0..=n {
                homs.push(self.levels[n].check_hom(&format!("s{i}@{n}"), self.degen(n, i), &self.levels[n + 1]));
            }
        }
        let mut mult = CheckBuilder::new("faces and degeneracies are algebra maps");
        for h in homs {
            let name = h.name.clone();
            mult.test(h.passed(), || format!("{name}: {}", h.witnesses.first().cloned().unwrap_or_default()));
        }
        report.push(mult.finish());
        report
    }

    /// `K_I = ∩_{i∈I} ker d_i` at level `n`.
    pub fn kernel_k(&self, n: usize, indices: &[usize]) -> Subspace {
        let mut k = Subspace::full(self.field(), self.levels[n].dim());
        for &i in indices {
            k = k.intersect(&kernel(self.face(n, i)));
        }
        k
    }

    /// `NE_n = ∩_{i<n} ker d_i`.
    pub fn moore_space(&self, n: usize) -> Subspace {
        self.kernel_k(n, &(0..n).collect::<Vec<_>>())
    }

    pub fn moore(&self) -> Result<MooreComplex> {
        let f = self.field();
        let spaces: Vec<Subspace> = (0..=self.truncation()).map(|n| self.moore_space(n)).collect();
        let mut boundaries = vec![LinMap::zero(f, 0, spaces[0].dim())];
        for n in 1..=self.truncation() {
            let d = self.face(n, n);
            let mut cols = Vec::new();
            for b in spaces[n].basis() {
                let c = spaces[n - 1]
                    .coords(&d.apply(b))
                    .ok_or_else(|| Error::InvalidInput(format!("d{n} does not map NE{n} into NE{}", n - 1)))?;
                cols.push(c);
            }
            boundaries.push(LinMap::from_columns(f, spaces[n - 1].dim(), &cols));
        }
        for n in 1..self.truncation() {
            if !boundaries[n].compose(&boundaries[n + 1]).is_zero() {
                return Err(Error::InvalidInput(format!("Moore boundary composite at level {} is nonzero", n + 1)));
            }
        }
        Ok(MooreComplex { spaces, boundaries })
    }

    /// Image `∂_n(S)` inside `E_{n-1}` of a subspace `S ⊆ E_n`.
    pub fn boundary_image(&self, n: usize, s: &Subspace) -> Subspace {
        s.image(self.face(n, n))
    }

    /// `D_n`: ideal generated by the images of all `s_i: E_{n-1} -> E_n`.
    pub fn degenerate_ideal(&self, n: usize) -> Subspace {
        let mut gens: Vec<Vector> = Vec::new();
        for i in 0..n {
            gens.extend(self.degen(n - 1, i).columns());
        }
        self.levels[n].ideal_closure(gens)
    }

    /// `π_n = H_n(NE)` for `n < N`; `π_N` is undefined.
    pub fn homotopy(&self) -> Result<HomotopyTable> {
        let m = self.moore()?;
        let top = self.truncation();
        let mut dims = Vec::new();
        for n in 0..=top {
            if n == top {
                dims.push(None);
                continue;
            }
            let cycles = kernel(&m.boundaries[n]);
            let bounds = image(&m.boundaries[n + 1]);
            dims.push(Some(cycles.dim() - bounds.dim()));
        }
        Ok(HomotopyTable::from_dims(dims))
    }

    /// Re-expresses every level in a new basis given by invertible matrices.
    pub fn change_basis(&self, ps: &[LinMap]) -> Option<Self> {
        let invs: Option<Vec<LinMap>> = ps.iter().map(LinMap::inverse).collect();
        let invs = invs?;
        let levels: Option<Vec<FinAlgebra>> = self.levels.iter().zip(ps).map(|(a, p)| a.change_basis(p)).collect();
        let faces = self
            .faces
            .iter()
            .enumerate()
            .map(|(n, fs)| fs.iter().map(|d| invs[n - 1].compose(d).compose(&ps[n])).collect())
            .collect();
        let degens = self
            .degens
            .iter()
            .enumerate()
            .map(|(n, ss)| ss.iter().map(|s| invs[n + 1].compose(s).compose(&ps[n])).collect())
            .collect();
        Self::new(levels?, faces, degens).ok()
    }
}

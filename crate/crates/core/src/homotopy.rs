//! Homotopy tables: homology dimensions of short complexes, degree by degree.

use serde::{Deserialize, Serialize};

use crate::exactalg::{kernel, LinMap, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyEntry {
    pub degree: usize,
    /// `None` when the degree needs data beyond the truncation.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyTable {
    pub entries: Vec<HomotopyEntry>,
}

impl HomotopyTable {
    pub fn from_dims(dims: Vec<Option<usize>>) -> HomotopyTable {
        HomotopyTable { entries: dims.into_iter().enumerate().map(|(degree, dim)| HomotopyEntry { degree, dim }).collect() }
    }

    /// Dimension in `degree`; degrees past the end of the table are zero.
    pub fn dim(&self, degree: usize) -> Option<usize> {
        self.entries.get(degree).map_or(Some(0), |e| e.dim)
    }

    pub fn dims(&self) -> Vec<Option<usize>> {
        self.entries.iter().map(|e| e.dim).collect()
    }

    /// Re-indexes a simplicial table (`H_n` of the Moore complex) into the
    /// convention used for 2-crossed modules, crossed squares and quadratic
    /// modules, where the top group of the complex sits in degree 1.
    pub fn shifted_up(&self) -> HomotopyTable {
        let mut dims = vec![Some(0)];
        dims.extend(self.dims());
        HomotopyTable::from_dims(dims)
    }

    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|e| match e.dim {
                Some(d) => format!("pi_{} = {d}", e.degree),
                None => format!("pi_{} undefined at this truncation", e.degree),
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Homology `ker(out) / im(inc)` at the middle of `A --inc--> B --out--> C`,
/// returned as (cycles, boundaries) inside `B`.
pub fn homology_at(inc: &LinMap, out: &LinMap) -> (Subspace, Subspace) {
    let cycles = kernel(out);
    let boundaries = crate::exactalg::image(inc);
    debug_assert!(boundaries.is_subspace_of(&cycles));
    (cycles, boundaries)
}

pub fn homology_dim(inc: &LinMap, out: &LinMap) -> usize {
    let (z, b) = homology_at(inc, out);
    z.dim() - b.dim()
}

/// Homotopy of a three-term complex `C2 -d2-> C1 -d1-> C0` in the
/// convention `π1 = coker d1`, `π2 = ker d1 / im d2`, `π3 = ker d2`, `π0 = 0`.
pub fn three_term(d2: &LinMap, d1: &LinMap) -> HomotopyTable {
    let f = d1.field();
    let c0 = d1.target_dim();
    let c2 = d2.source_dim();
    let pi1 = homology_dim(d1, &LinMap::zero(f, 0, c0));
    let pi2 = homology_dim(d2, d1);
    let pi3 = homology_dim(&LinMap::zero(f, c2, 0), d2);
    HomotopyTable::from_dims(vec![Some(0), Some(pi1), Some(pi2), Some(pi3)])
}

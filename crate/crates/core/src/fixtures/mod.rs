//! Deterministic example structures.

pub mod simplicial;

use crate::exactalg::matrix::zero_vec;
use crate::exactalg::{Field, FinAlgebra, Subspace};

/// `k[x_1, …, x_v] / (x_i^{a_i})` on the monomial basis, together with the
/// exponent vector of each basis element.
pub struct MonomialAlgebra {
    pub algebra: FinAlgebra,
    pub monomials: Vec<Vec<usize>>,
}

const VARS: [&str; 4] = ["x", "y", "z", "w"];

fn monomial_label(e: &[usize]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { VARS[i].to_string() } else { format!("{}^{k}", VARS[i]) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("")
    }
}

impl MonomialAlgebra {
    pub fn new(field: Field, bounds: &[usize]) -> MonomialAlgebra {
        assert!(bounds.len() <= VARS.len());
        let mut monomials: Vec<Vec<usize>> = vec![vec![]];
        for &b in bounds {
            monomials = monomials.into_iter().flat_map(|m| (0..b).map(move |k| [m.clone(), vec![k]].concat())).collect();
        }
        monomials.sort_by_key(|m| (m.iter().sum::<usize>(), std::cmp::Reverse(m.clone())));
        let d = monomials.len();
        let labels = monomials.iter().map(|m| monomial_label(m)).collect();
        let algebra = FinAlgebra::from_fn(field, labels, |i, j| {
            let mut v = zero_vec(field, d);
            let prod: Vec<usize> = monomials[i].iter().zip(&monomials[j]).map(|(a, b)| a + b).collect();
            if let Some(k) = monomials.iter().position(|m| *m == prod) {
                v[k] = field.one();
            }
            v
        });
        MonomialAlgebra { algebra, monomials }
    }

    /// `k[x]/(x^n)`
    pub fn truncated(field: Field, n: usize) -> MonomialAlgebra {
        MonomialAlgebra::new(field, &[n])
    }

    /// Ideal generated by monomials (exponent vectors).
    pub fn monomial_ideal(&self, gens: &[Vec<usize>]) -> Subspace {
        let a = &self.algebra;
        let vecs = self
            .monomials
            .iter()
            .enumerate()
            .filter(|(_, m)| gens.iter().any(|g| g.iter().zip(m.iter()).all(|(x, y)| x <= y)))
            .map(|(i, _)| a.unit(i))
            .collect();
        Subspace::span(a.field(), a.dim(), vecs)
    }
}

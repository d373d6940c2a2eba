//! Degeneracy multi-indices, the pair sets `P(n)`, the pairing composites
//! `C_{α,β}` and the boundary-image decomposition.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{Bilinear, LinMap, Subspace, Vector};
use crate::exactalg::matrix::{add_vec, render_vec, sub_vec};
use crate::report::{CheckBuilder, ValidationReport};
use crate::simplicial::TruncSimplicialAlgebra;

/// An element of `S(n)`: a set of collapsed positions, stored descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurjIndex {
    n: usize,
    indices: Vec<usize>,
}

impl SurjIndex {
    /// Accepts the indices in any order; they are stored descending.
    pub fn new(n: usize, mut indices: Vec<usize>) -> Result<SurjIndex> {
        indices.sort_unstable_by(|a, b| b.cmp(a));
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("repeated index in {indices:?}")));
        }
        if indices.iter().any(|&i| i >= n) {
            return Err(Error::InvalidInput(format!("index out of range [0,{}) in {indices:?}", n)));
        }
        Ok(SurjIndex { n, indices })
    }

    pub fn empty(n: usize) -> SurjIndex {
        SurjIndex { n, indices: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Descending, as written `(i_r, …, i_1)`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn ascending(&self) -> Vec<usize> {
        self.indices.iter().rev().copied().collect()
    }

    pub fn is_disjoint(&self, other: &SurjIndex) -> bool {
        self.indices.iter().all(|i| !other.indices.contains(i))
    }
}

impl fmt::Display for SurjIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Strict order on `S(n)`: compare from the smallest index upward; at the
/// first difference the larger index is smaller; a proper prefix is smaller.
pub fn lt_s(a: &SurjIndex, b: &SurjIndex) -> bool {
    cmp_s(a, b) == Ordering::Less
}

pub fn cmp_s(a: &SurjIndex, b: &SurjIndex) -> Ordering {
    let (xa, xb) = (a.ascending(), b.ascending());
    for (p, q) in xa.iter().zip(&xb) {
        if p != q {
            return q.cmp(p);
        }
    }
    xa.len().cmp(&xb.len())
}

/// All of `S(n)`, sorted by [`lt_s`].
pub fn gen_s(n: usize) -> Vec<SurjIndex> {
    let mut out: Vec<SurjIndex> = (0u32..1 << n)
        .map(|mask| SurjIndex { n, indices: (0..n).rev().filter(|i| mask & (1 << i) != 0).collect() })
        .collect();
    out.sort_by(cmp_s);
    out
}

/// `(α, β)` with disjoint nonempty index sets and `β < α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairIndex {
    pub alpha: SurjIndex,
    pub beta: SurjIndex,
}

impl PairIndex {
    pub fn new(alpha: SurjIndex, beta: SurjIndex) -> PairIndex {
        PairIndex { alpha, beta }
    }

    /// Same pair of index sets regardless of which one is called `α`.
    pub fn same_sets(&self, other: &PairIndex) -> bool {
        (self.alpha == other.alpha && self.beta == other.beta) || (self.alpha == other.beta && self.beta == other.alpha)
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

pub fn gen_p(n: usize) -> Vec<PairIndex> {
    let s = gen_s(n);
    let mut out = Vec::new();
    for a in &s {
        for b in &s {
            if !a.is_empty() && !b.is_empty() && a.is_disjoint(b) && lt_s(b, a) {
                out.push(PairIndex::new(a.clone(), b.clone()));
            }
        }
    }
    out
}

/// `s_α = s_{i_r} ⋯ s_{i_1}` applied to `x ∈ E_{n-#α}`.
pub fn apply_degens(e: &TruncSimplicialAlgebra, alpha: &SurjIndex, x: &[crate::exactalg::Scalar]) -> Vector {
    let start = alpha.n() - alpha.len();
    let mut v = x.to_vec();
    for (k, i) in alpha.ascending().into_iter().enumerate() {
        v = e.degen(start + k, i).apply(&v);
    }
    v
}

/// `p = p_{n-1} ⋯ p_0` with `p_j = 1 - s_j d_j` on `E_n`.
pub fn projector(e: &TruncSimplicialAlgebra, n: usize) -> LinMap {
    let f = e.field();
    let dim = e.level(n).dim();
    let mut p = LinMap::identity(f, dim);
    for j in 0..n {
        let pj = LinMap::identity(f, dim).sub(&e.degen(n - 1, j).compose(e.face(n, j)));
        p = pj.compose(&p);
    }
    p
}

/// Raw composite `p(s_α x · s_β y)` on ambient vectors.
pub fn c_pairing_raw(
    e: &TruncSimplicialAlgebra,
    alpha: &SurjIndex,
    beta: &SurjIndex,
    x: &[crate::exactalg::Scalar],
    y: &[crate::exactalg::Scalar],
) -> Vector {
    let n = alpha.n();
    let prod = e.level(n).mul(&apply_degens(e, alpha, x), &apply_degens(e, beta, y));
    projector(e, n).apply(&prod)
}

/// `C_{α,β}` on `x ∈ NE_{n-#α}`, `y ∈ NE_{n-#β}`, checked to land in `NE_n`.
pub fn c_pairing(
    e: &TruncSimplicialAlgebra,
    pair: &PairIndex,
    x: &[crate::exactalg::Scalar],
    y: &[crate::exactalg::Scalar],
) -> Result<Vector> {
    let n = pair.alpha.n();
    e.require_truncation(n)?;
    for (idx, v) in [(&pair.alpha, x), (&pair.beta, y)] {
        if !e.moore_space(n - idx.len()).contains(v) {
            return Err(Error::InvalidInput(format!("argument for {idx} is not in NE{}", n - idx.len())));
        }
    }
    let out = c_pairing_raw(e, &pair.alpha, &pair.beta, x, y);
    if !e.moore_space(n).contains(&out) {
        return Err(Error::InvalidInput(format!("C{pair} leaves NE{n}")));
    }
    Ok(out)
}

/// `C_{α,β}` tabulated on the stored bases of the two Moore spaces,
/// with values in `E_n`.
pub fn pairing_table(e: &TruncSimplicialAlgebra, alpha: &SurjIndex, beta: &SurjIndex) -> Bilinear {
    let n = alpha.n();
    let nx = e.moore_space(n - alpha.len());
    let ny = e.moore_space(n - beta.len());
    let p = projector(e, n);
    let sx: Vec<Vector> = nx.basis().iter().map(|b| apply_degens(e, alpha, b)).collect();
    let sy: Vec<Vector> = ny.basis().iter().map(|b| apply_degens(e, beta, b)).collect();
    Bilinear::from_fn(e.field(), sx.len(), sy.len(), e.level(n).dim(), |i, j| p.apply(&e.level(n).mul(&sx[i], &sy[j])))
}

/// Pairing tables for all of `P(n)`, built once.
pub struct PairingCache {
    pub n: usize,
    pub tables: Vec<(PairIndex, Bilinear)>,
}

impl PairingCache {
    pub fn build(e: &TruncSimplicialAlgebra, n: usize) -> Result<PairingCache> {
        e.require_truncation(n)?;
        let tables = gen_p(n).into_iter().map(|p| {
            let t = pairing_table(e, &p.alpha, &p.beta);
            (p, t)
        });
        Ok(PairingCache { n, tables: tables.collect() })
    }

    pub fn values(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        for (_, t) in &self.tables {
            for i in 0..t.left_dim() {
                for j in 0..t.right_dim() {
                    out.push(t.basis_value(i, j).clone());
                }
            }
        }
        out
    }
}

/// The ideal `I_n` of `E_n` generated by all pairing values.
pub fn ideal_in(e: &TruncSimplicialAlgebra, n: usize) -> Result<Subspace> {
    let cache = PairingCache::build(e, n)?;
    Ok(e.level(n).ideal_closure(cache.values()))
}

/// Nonempty proper subsets `I, J` of the face indices at level `m` with
/// `I ∪ J` everything, as unordered pairs.
pub fn covering_pairs(m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let faces = m + 1;
    let full: u32 = (1 << faces) - 1;
    let mut out = Vec::new();
    for a in 1..full {
        for b in a..full {
            if a | b == full {
                let set = |mask: u32| (0..faces).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>();
                out.push((set(a), set(b)));
            }
        }
    }
    out
}

/// `Σ K_I K_J` at level `m`.
pub fn sum_kk(e: &TruncSimplicialAlgebra, m: usize) -> Subspace {
    let a = e.level(m);
    let mut acc = Subspace::zero(e.field(), a.dim());
    for (i, j) in covering_pairs(m) {
        acc = acc.sum(&a.product_span(&e.kernel_k(m, &i), &e.kernel_k(m, &j)));
    }
    acc
}

/// One of the six level-3 generator families with the target its
/// boundary must lie in. `x` goes with the first label.
pub struct Membership {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Each term is `K_I K_J` at level 2.
    pub target: Vec<(Vec<usize>, Vec<usize>)>,
}

pub fn level3_memberships() -> Vec<Membership> {
    let m = |first: &[usize], second: &[usize], target: &[(&[usize], &[usize])]| Membership {
        first: first.to_vec(),
        second: second.to_vec(),
        target: target.iter().map(|(i, j)| (i.to_vec(), j.to_vec())).collect(),
    };
    vec![
        m(&[1, 0], &[2], &[(&[2], &[0, 1])]),
        m(&[2, 0], &[1], &[(&[1], &[0, 2])]),
        m(&[2, 1], &[0], &[(&[0], &[1, 2])]),
        m(&[2], &[1], &[(&[0, 1], &[0, 2])]),
        m(&[2], &[0], &[(&[0, 1], &[1, 2]), (&[0, 1], &[0, 2])]),
        m(&[1], &[0], &[(&[0, 2], &[1, 2]), (&[0, 1], &[1, 2]), (&[0, 1], &[0, 2])]),
    ]
}

pub struct DecompositionReport {
    pub n: usize,
    /// Whether `E_n = D_n`.
    pub hypothesis: bool,
    pub pairs: Vec<PairIndex>,
    pub ideal: Subspace,
    pub boundary_moore: Subspace,
    pub boundary_ideal: Subspace,
    pub sum_kk: Subspace,
    pub verdicts: ValidationReport,
}

impl DecompositionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "hypothesis_En_eq_Dn": self.hypothesis,
            "pairs": self.pairs.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "dim_I": self.ideal.dim(),
            "dim_boundary_NE": self.boundary_moore.dim(),
            "dim_boundary_I": self.boundary_ideal.dim(),
            "dim_sum_KK": self.sum_kk.dim(),
            "verdicts": self.verdicts,
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!("decomposition at n={}\n", self.n);
        out.push_str(&format!("  E_n = D_n: {}\n", self.hypothesis));
        let pairs: Vec<String> = self.pairs.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("  P(n) = {{{}}}\n", pairs.join(", ")));
        out.push_str(&format!(
            "  dim I_n = {}, dim d(NE_n) = {}, dim d(I_n) = {}, dim sum K_I K_J = {}\n",
            self.ideal.dim(),
            self.boundary_moore.dim(),
            self.boundary_ideal.dim(),
            self.sum_kk.dim()
        ));
        out.push_str(&self.verdicts.render());
        out
    }
}

pub fn boundary_decomposition_check(e: &TruncSimplicialAlgebra, n: usize) -> Result<DecompositionReport> {
    if n < 2 {
        return Err(Error::InvalidInput("decomposition needs n >= 2".into()));
    }
    e.require_truncation(n)?;
    let hypothesis = e.degenerate_ideal(n).is_full();
    let ne = e.moore_space(n);
    let ideal = ideal_in(e, n)?;
    let boundary_moore = e.boundary_image(n, &ne);
    let boundary_ideal = e.boundary_image(n, &ideal);
    let kk = sum_kk(e, n - 1);
    let mut verdicts = ValidationReport::new(format!("decomposition n={n}"));

    let mut c = CheckBuilder::new("I_n inside NE_n");
    c.test(ideal.is_subspace_of(&ne), || "I_n not contained in NE_n".into());
    verdicts.push(c.finish());

    let mut c = CheckBuilder::new("sum K_I K_J inside d(NE_n)");
    c.test(kk.is_subspace_of(&boundary_moore), || format!("dims {} vs {}", kk.dim(), boundary_moore.dim()));
    verdicts.push(c.finish());

    if hypothesis {
        let mut c = CheckBuilder::new("d(NE_n) = d(I_n)");
        c.test(boundary_moore == boundary_ideal, || format!("dims {} vs {}", boundary_moore.dim(), boundary_ideal.dim()));
        verdicts.push(c.finish());
        if n <= 4 {
            let mut c = CheckBuilder::new("d(NE_n) = sum K_I K_J");
            c.test(boundary_moore == kk, || format!("dims {} vs {}", boundary_moore.dim(), kk.dim()));
            verdicts.push(c.finish());
        }
    }

    if n == 3 {
        let a2 = e.level(2);
        for m in level3_memberships() {
            let first = SurjIndex::new(3, m.first.clone())?;
            let second = SurjIndex::new(3, m.second.clone())?;
            let mut target = Subspace::zero(e.field(), a2.dim());
            for (i, j) in &m.target {
                target = target.sum(&a2.product_span(&e.kernel_k(2, i), &e.kernel_k(2, j)));
            }
            let table = pairing_table(e, &first, &second);
            let mut c = CheckBuilder::new(format!("d C_{first}{second} in target"));
            for i in 0..table.left_dim() {
                for j in 0..table.right_dim() {
                    let img = e.face(3, 3).apply(table.basis_value(i, j));
                    c.test(target.contains(&img), || format!("x=b{i} y=b{j}: {}", render_vec(&img)));
                }
            }
            verdicts.push(c.finish());
        }
    }

    Ok(DecompositionReport { n, hypothesis, pairs: gen_p(n), ideal, boundary_moore, boundary_ideal, sum_kk: kk, verdicts })
}

/// Closed forms of the pairings for `n = 2, 3`, written out in face and
/// degeneracy maps. `x` goes with `first`. Returns `None` for labels
/// without a closed form here.
pub fn closed_form(
    e: &TruncSimplicialAlgebra,
    first: &[usize],
    second: &[usize],
    x: &[crate::exactalg::Scalar],
    y: &[crate::exactalg::Scalar],
) -> Option<Vector> {
    let s = |n: usize, i: usize, v: &[crate::exactalg::Scalar]| e.degen(n, i).apply(v);
    match (first, second) {
        // n = 2, x, y in NE_1
        ([1], [0]) if e.level(1).dim() == x.len() => {
            let m = e.level(2);
            Some(m.mul(&s(1, 1, x), &sub_vec(&s(1, 0, y), &s(1, 1, y))))
        }
        // n = 3, x in NE_1, y in NE_2
        ([1, 0], [2]) => {
            let m = e.level(3);
            let a = sub_vec(&s(2, 1, &s(1, 0, x)), &s(2, 2, &s(1, 0, x)));
            Some(m.mul(&a, &s(2, 2, y)))
        }
        ([2, 0], [1]) => {
            let m = e.level(3);
            let a = sub_vec(&s(2, 2, &s(1, 0, x)), &s(2, 2, &s(1, 1, x)));
            Some(m.mul(&a, &sub_vec(&s(2, 1, y), &s(2, 2, y))))
        }
        ([2, 1], [0]) => {
            let m = e.level(3);
            let b = add_vec(&sub_vec(&s(2, 0, y), &s(2, 1, y)), &s(2, 2, y));
            Some(m.mul(&s(2, 2, &s(1, 1, x)), &b))
        }
        // n = 3, x, y in NE_2
        ([2], [0]) => Some(e.level(3).mul(&s(2, 2, x), &s(2, 0, y))),
        ([2], [1]) => Some(e.level(3).mul(&s(2, 2, x), &sub_vec(&s(2, 1, y), &s(2, 2, y)))),
        ([1], [0]) => {
            let m = e.level(3);
            let a = m.mul(&s(2, 1, x), &sub_vec(&s(2, 0, y), &s(2, 1, y)));
            Some(add_vec(&a, &s(2, 2, &e.level(2).mul(x, y))))
        }
        _ => None,
    }
}


#[cfg(test)]
mod fixture_tests {
    use super::*;
    use crate::exactalg::Field;
    use crate::fixtures::simplicial::{dold_kan_group_algebra, ChainComplex};

    fn dk() -> TruncSimplicialAlgebra {
        dold_kan_group_algebra(Field::Rational, &ChainComplex::new(2, vec![0, 1], vec![]).unwrap(), 4).unwrap()
    }

    #[test]
    fn closed_forms_match_composite() {
        let e = dk();
        let labels: [(&[usize], &[usize], usize); 7] = [
            (&[1], &[0], 2),
            (&[1, 0], &[2], 3),
            (&[2, 0], &[1], 3),
            (&[2, 1], &[0], 3),
            (&[2], &[0], 3),
            (&[2], &[1], 3),
            (&[1], &[0], 3),
        ];
        for (a, b, n) in labels {
            let alpha = SurjIndex::new(n, a.to_vec()).unwrap();
            let beta = SurjIndex::new(n, b.to_vec()).unwrap();
            let nx = e.moore_space(n - alpha.len());
            let ny = e.moore_space(n - beta.len());
            assert!(nx.dim() > 0 && ny.dim() > 0);
            for x in nx.basis() {
                for y in ny.basis() {
                    let raw = c_pairing_raw(&e, &alpha, &beta, x, y);
                    let cf = if n == 2 {
                        let m = e.level(2);
                        m.mul(&e.degen(1, 1).apply(x), &sub_vec(&e.degen(1, 0).apply(y), &e.degen(1, 1).apply(y)))
                    } else {
                        closed_form(&e, a, b, x, y).unwrap()
                    };
                    assert_eq!(raw, cf, "{alpha}{beta}");
                }
            }
        }
    }

    #[test]
    fn decomposition_on_dk() {
        let e = dk();
        for n in 2..=4 {
            let r = boundary_decomposition_check(&e, n).unwrap();
            assert!(r.verdicts.is_valid(), "{}", r.render());
        }
    }
}

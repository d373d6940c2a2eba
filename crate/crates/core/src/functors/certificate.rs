//! Evidence attached to each construction: digests, output verdicts,
//! homotopy tables and isomorphism witnesses between homology groups.

use serde::{Deserialize, Serialize};

use crate::exactalg::{kernel, image, LinMap, Subspace};
use crate::homotopy::HomotopyTable;
use crate::report::{Check, CheckBuilder, ValidationReport};

/// `ker(out) / im(inc)` with a chosen complement basis.
#[derive(Clone, Debug)]
pub struct Homology {
    pub cycles: Subspace,
    pub boundaries: Subspace,
    /// Homology coordinates of a cycle, in cycle coordinates.
    proj: LinMap,
    /// Representatives of the homology basis, as cycle coordinates.
    lift: LinMap,
}

impl Homology {
    pub fn new(inc: &LinMap, out: &LinMap) -> Homology {
        let cycles = kernel(out);
        let boundaries = image(inc);
        let inner = boundaries.coords_in(&cycles).expect("boundaries are cycles");
        Homology { proj: inner.quotient_projection(), lift: inner.quotient_lift(), cycles, boundaries }
    }

    pub fn dim(&self) -> usize {
        self.proj.target_dim()
    }

    /// Homology class of a cycle, `None` for a non-cycle.
    pub fn class(&self, v: &[crate::exactalg::Scalar]) -> Option<crate::exactalg::Vector> {
        self.cycles.coords(v).map(|c| self.proj.apply(&c))
    }

    pub fn representative(&self, k: usize) -> crate::exactalg::Vector {
        self.cycles.inclusion().apply(&self.lift.column(k))
    }

    /// Matrix of the map on homology induced by the chain-level `f`, or
    /// `None` if `f` does not send cycles to cycles.
    pub fn induced(&self, f: &LinMap, target: &Homology) -> Option<LinMap> {
        let cols = (0..self.dim()).map(|k| target.class(&f.apply(&self.representative(k)))).collect::<Option<Vec<_>>>()?;
        Some(LinMap::from_columns(f.field(), target.dim(), &cols))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub before: Option<usize>,
    pub after: Option<usize>,
    pub equal: bool,
}

/// Mutually inverse matrices between `π_degree` before and after.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub degree: usize,
    pub forward: Vec<Vec<String>>,
    pub inverse: Vec<Vec<String>>,
    pub verified: bool,
}

impl IsoWitness {
    /// Inverts `forward` and checks both composites are identities.
    pub fn from_map(degree: usize, forward: &LinMap) -> IsoWitness {
        let inv = forward.inverse();
        let verified = match &inv {
            Some(g) => forward.compose(g).is_identity() && g.compose(forward).is_identity(),
            None => false,
        };
        IsoWitness {
            degree,
            forward: forward.render(),
            inverse: inv.map(|g| g.render()).unwrap_or_default(),
            verified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorCertificate {
    pub functor: String,
    pub input_digest: String,
    pub output_digest: String,
    /// The output structure's own validator.
    pub verdict: ValidationReport,
    /// Well-definedness and cross-checks carried out during construction.
    pub construction: ValidationReport,
    pub before: HomotopyTable,
    pub after: HomotopyTable,
    pub degrees: Vec<DegreeVerdict>,
    pub witnesses: Vec<IsoWitness>,
    pub notes: Vec<String>,
}

/// Per-degree comparison of two tables over `degrees`.
pub fn certify_homotopy_preservation(before: &HomotopyTable, after: &HomotopyTable, degrees: std::ops::RangeInclusive<usize>) -> Vec<DegreeVerdict> {
    degrees
        .map(|d| {
            let (b, a) = (before.dim(d), after.dim(d));
            DegreeVerdict { degree: d, before: b, after: a, equal: b.is_some() && b == a }
        })
        .collect()
}

impl FunctorCertificate {
    pub fn new(functor: &str) -> FunctorCertificate {
        FunctorCertificate {
            functor: functor.to_string(),
            input_digest: String::new(),
            output_digest: String::new(),
            verdict: ValidationReport::new("output"),
            construction: ValidationReport::new("construction"),
            before: HomotopyTable::default(),
            after: HomotopyTable::default(),
            degrees: vec![],
            witnesses: vec![],
            notes: vec![],
        }
    }

    pub fn check(&mut self, c: Check) {
        self.construction.push(c);
    }

    /// Records a single boolean fact as a named construction check.
    pub fn fact(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let mut ch = CheckBuilder::new(name);
        ch.test(ok, witness);
        self.construction.push(ch.finish());
    }

    pub fn set_tables(&mut self, before: HomotopyTable, after: HomotopyTable, degrees: std::ops::RangeInclusive<usize>) {
        self.degrees = certify_homotopy_preservation(&before, &after, degrees);
        self.before = before;
        self.after = after;
    }

    pub fn homotopy_preserved(&self) -> bool {
        self.degrees.iter().all(|d| d.equal)
    }

    pub fn witnesses_verified(&self) -> bool {
        self.witnesses.iter().all(|w| w.verified)
    }

    pub fn is_ok(&self) -> bool {
        self.verdict.is_valid() && self.construction.is_valid() && self.homotopy_preserved() && self.witnesses_verified()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificates serialize")
    }

    pub fn render(&self) -> String {
        let mut out = vec![format!("certificate for {}", self.functor)];
        out.push(format!("input digest  {}", self.input_digest));
        out.push(format!("output digest {}", self.output_digest));
        out.push(self.verdict.render());
        out.push(self.construction.render());
        for d in &self.degrees {
            let show = |x: Option<usize>| x.map_or("undefined".to_string(), |v| v.to_string());
            out.push(format!(
                "pi_{}: before {} after {} {}",
                d.degree,
                show(d.before),
                show(d.after),
                if d.equal { "ok" } else { "MISMATCH" }
            ));
        }
        for w in &self.witnesses {
            out.push(format!("pi_{} witness {}x{} {}", w.degree, w.forward.len(), w.forward.first().map_or(0, Vec::len), if w.verified { "verified" } else { "NOT INVERTIBLE" }));
        }
        for n in &self.notes {
            out.push(format!("note: {n}"));
        }
        out.join("\n")
    }
}

/// Witnesses for maps on homology induced by a chain map, one per
/// `(degree, source, target, chain-level map)`. A map that does not send
/// cycles to cycles gives an unverified witness.
pub fn chain_witnesses(items: &[(usize, Homology, Homology, LinMap)]) -> Vec<IsoWitness> {
    items
        .iter()
        .map(|(deg, src, tgt, f)| match src.induced(f, tgt) {
            Some(m) => IsoWitness::from_map(*deg, &m),
            None => IsoWitness { degree: *deg, forward: vec![], inverse: vec![], verified: false },
        })
        .collect()
}

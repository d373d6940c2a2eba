//! From 2-crossed modules to quadratic modules: divide `C₁` by `P₃` and `C₂`
//! by the matching ideal `P₃'`, then push the lifting through both quotients.

use super::certificate::{chain_witnesses, FunctorCertificate, Homology};
use crate::cli::bundle::{Bundle, Structure};
use crate::error::{Error, Result};
use crate::exactalg::algebra::Quotient;
use crate::exactalg::matrix::render_vec;
use crate::exactalg::{closure, LinMap, Subspace, Vector};
use crate::report::CheckBuilder;
use crate::structures::quadratic::singular_kernel;
use crate::structures::{PreCrossedModule, QuadraticModule, TwoCrossedModule};

/// Intermediate data of the quotient construction.
#[derive(Clone, Debug)]
pub struct QuadraticParts {
    pub p3: Subspace,
    pub p3_prime: Subspace,
    pub q1: Quotient,
    pub q2: Quotient,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LambdaOptions {
    /// Test hook: leave `C₂` undivided. Breaks homotopy preservation
    /// whenever `P₃ ≠ 0`.
    #[doc(hidden)]
    pub drop_p3_prime: bool,
}

/// Homology objects of `C₂ -> C₁ -> C₀` in degrees 3, 2, 1.
pub(crate) fn three_term_homologies(d2: &LinMap, d1: &LinMap) -> [Homology; 3] {
    let f = d1.field();
    [
        Homology::new(&LinMap::zero(f, d2.source_dim(), 0), d2),
        Homology::new(d2, d1),
        Homology::new(d1, &LinMap::zero(f, 0, d1.target_dim())),
    ]
}

/// The generators `⟨⟨x,y⟩,z⟩`, `⟨x,⟨y,z⟩⟩` of `P₃` and `{x⊗⟨y,z⟩}`,
/// `{⟨x,y⟩⊗z}` of `P₃'`, over basis triples.
pub fn peiffer_generators(t: &TwoCrossedModule) -> (Vec<Vector>, Vec<Vector>) {
    let pre = t.bottom();
    let n = t.c1.dim();
    let table = pre.peiffer_table();
    let mut p3p = Vec::with_capacity(2 * n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                p3p.push(t.lift(&t.c1.unit(x), table.basis_value(y, z)));
                p3p.push(t.lift(table.basis_value(x, y), &t.c1.unit(z)));
            }
        }
    }
    (pre.p3_generators(), p3p)
}

/// Quotient step shared by Λ, Δ and Ψ. `t` carries the complex, the actions
/// and the lifting used for `ω`; it need not be a valid 2-crossed module.
pub(crate) fn assemble(
    t: &TwoCrossedModule,
    p3_gens: Vec<Vector>,
    p3p_gens: Vec<Vector>,
    cert: &mut FunctorCertificate,
) -> Result<(QuadraticModule, QuadraticParts)> {
    let f = t.c0.field();
    let (n2, n1) = (t.c2.dim(), t.c1.dim());

    let mut ops1 = t.c1.basis_operators();
    ops1.extend(t.act10.operators().iter().cloned());
    let p3 = closure(f, n1, p3_gens, &ops1);
    let mut ops2 = t.c2.basis_operators();
    ops2.extend(t.act20.operators().iter().cloned());
    let p3p = closure(f, n2, p3p_gens, &ops2);

    let d1_p3 = p3.image(&t.d1);
    cert.fact("d1(P3) = 0", d1_p3.is_zero(), || format!("d1(P3) has dim {}", d1_p3.dim()));
    let d2_p3p = p3p.image(&t.d2);
    let down = d2_p3p.is_subspace_of(&p3);
    cert.fact("d2(P3') inside P3", down, || format!("dim d2(P3') = {}, dim P3 = {}", d2_p3p.dim(), p3.dim()));
    cert.fact("P3 inside d2(P3')", p3.is_subspace_of(&d2_p3p), || format!("dim d2(P3') = {}, dim P3 = {}", d2_p3p.dim(), p3.dim()));
    if !down {
        return Err(Error::Construction("d2(P3') is not contained in P3; the lifting is not a valid input".into()));
    }
    if !d1_p3.is_zero() {
        return Err(Error::Construction("d1 does not vanish on P3".into()));
    }

    let q1 = t.c1.quotient(&p3, "m")?;
    let q2 = t.c2.quotient(&p3p, "l")?;
    let act_m = t.act10.descend(&p3, &q1.proj, &q1.lift)?;
    let act_l = t.act20.descend(&p3p, &q2.proj, &q2.lift)?;
    let delta = q1.proj.compose(&t.d2).compose(&q2.lift);
    let boundary = t.d1.compose(&q1.lift);

    let pre_m = PreCrossedModule::new(q1.algebra.clone(), t.c0.clone(), boundary.clone(), act_m.clone());
    let k = singular_kernel(&pre_m);
    let proj_c = k.quotient_projection();
    let section = q1.lift.compose(&k.quotient_lift());
    let c = proj_c.target_dim();
    let omega = crate::exactalg::Bilinear::from_fn(f, c, c, q2.algebra.dim(), |i, j| {
        q2.proj.apply(&t.lift(&section.column(i), &section.column(j)))
    });

    // ω must not depend on the chosen representatives in C₁.
    let full_kernel = Subspace::preimage(&q1.proj, &k);
    let mut ch = CheckBuilder::new("omega descends to C⊗C");
    for kv in full_kernel.basis() {
        for y in 0..n1 {
            let yv = t.c1.unit(y);
            let a = q2.proj.apply(&t.lift(kv, &yv));
            let b = q2.proj.apply(&t.lift(&yv, kv));
            ch.test(a.iter().all(|s| s.is_zero()) && b.iter().all(|s| s.is_zero()), || {
                format!("k={} y=e{y}: {{k⊗y}}={} {{y⊗k}}={}", render_vec(kv), render_vec(&a), render_vec(&b))
            });
        }
    }
    cert.check(ch.finish());

    let q = QuadraticModule {
        l: q2.algebra.clone(),
        m: q1.algebra.clone(),
        n: t.c0.clone(),
        delta,
        boundary,
        act_l,
        act_m,
        proj_c,
        omega,
    };
    Ok((q, QuadraticParts { p3, p3_prime: p3p, q1, q2 }))
}

pub fn lambda_functor(t: &TwoCrossedModule) -> Result<(QuadraticModule, FunctorCertificate)> {
    lambda_with(t, LambdaOptions::default())
}

pub fn lambda_with(t: &TwoCrossedModule, opts: LambdaOptions) -> Result<(QuadraticModule, FunctorCertificate)> {
    let input = t.validate();
    if !input.is_valid() {
        return Err(Error::InvalidInput(format!("input is not a 2-crossed module\n{}", input.render())));
    }
    let mut cert = FunctorCertificate::new("lambda");
    cert.input_digest = Bundle::new("input", Structure::TwoCrossed(t.clone())).digest();
    let (p3, mut p3p) = peiffer_generators(t);
    if opts.drop_p3_prime {
        p3p.clear();
        cert.notes.push("P3' generators dropped".into());
    }
    let (q, parts) = assemble(t, p3, p3p, &mut cert)?;
    cert.output_digest = Bundle::new("output", Structure::Quadratic(q.clone())).digest();
    cert.verdict = q.validate();
    cert.set_tables(t.homotopy(), q.homotopy(), 0..=3);
    let [s3, s2, s1] = three_term_homologies(&t.d2, &t.d1);
    let [t3, t2, t1] = three_term_homologies(&q.delta, &q.boundary);
    cert.witnesses = chain_witnesses(&[
        (3, s3, t3, parts.q2.proj.clone()),
        (2, s2, t2, parts.q1.proj.clone()),
        (1, s1, t1, LinMap::identity(t.c0.field(), t.c0.dim())),
    ]);
    Ok((q, cert))
}

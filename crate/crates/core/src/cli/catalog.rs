//! Named, deterministic example bundles.

use super::bundle::{Bundle, Structure};
use crate::error::{Error, Result};
use crate::exactalg::{Action, Bilinear, Field, FinAlgebra, LinMap};
use crate::fixtures::simplicial::{dold_kan_group_algebra, nerve, ChainComplex};
use crate::fixtures::MonomialAlgebra;
use crate::simplicial::TruncSimplicialAlgebra;
use crate::structures::{CrossedSquare, PreCrossedModule, TwoCrossedModule};

#[derive(Clone, Copy, Debug)]
pub struct FixtureParams {
    pub field: Field,
    /// Simplicial truncation; each fixture has its own default.
    pub truncation: Option<usize>,
    /// Nilpotency degree `n` of `k[x]/(x^n)`.
    pub degree: Option<usize>,
}

impl FixtureParams {
    pub fn over(field: Field) -> FixtureParams {
        FixtureParams { field, truncation: None, degree: None }
    }
}

impl Default for FixtureParams {
    fn default() -> Self {
        FixtureParams::over(Field::Rational)
    }
}

/// `(name, kind, description)` for every catalog entry.
pub const CATALOG: &[(&str, &str, &str)] = &[
    ("const", "simplicial", "constant simplicial algebra on k[x]/(x^2), truncation 4"),
    ("nerve", "simplicial", "nerve of (x) -> k[x]/(x^3), truncation 4"),
    ("dk", "simplicial", "group algebra of the Dold-Kan simplicial group of Z/3 in degree 1, truncation 3"),
    ("dk-mod2", "simplicial", "group algebra of the Dold-Kan simplicial group of Z/2 in degree 1, truncation 4"),
    ("dk-f3", "simplicial", "as dk, over F_3 unless a field is given"),
    ("crossed", "crossed_module", "inclusion (x) -> k[x]/(x^n), n = 3"),
    ("precrossed-zero", "pre_crossed_module", "zero map (x) -> k[x]/(x^n), n = 4, multiplication action"),
    ("ideal-2x", "two_crossed", "0 -> (x) -> k[x]/(x^n), n = 3, zero lifting"),
    ("trunc-2x", "two_crossed", "(x) -id-> (x) -0-> k[x]/(x^n), n = 4, lifting y0 y1"),
    ("kernel-2x", "two_crossed", "k -0-> (x) -> k[x]/(x^n), n = 3, trivial actions on the top, zero lifting"),
    ("idealsq", "crossed_square", "ideal square on k[x]/(x^n) with I = J = (x), n = 3"),
    ("idealsq-xy", "crossed_square", "ideal square on k[x,y]/(x^2,y^2) with I = (x), J = (y)"),
    ("zerosq", "crossed_square", "zero square over k[x]/(x^n), n = 3"),
    ("algebra", "algebra", "k[x]/(x^n), n = 2"),
];

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|c| c.0).collect()
}

fn poly(field: Field, n: usize) -> FinAlgebra {
    MonomialAlgebra::truncated(field, n).algebra
}

fn x_ideal(field: Field, n: usize) -> Result<PreCrossedModule> {
    let r = poly(field, n);
    let i = r.ideal_closure(vec![r.unit(1)]);
    PreCrossedModule::ideal_inclusion(&r, &i)
}

pub fn constant(field: Field, truncation: usize) -> Result<TruncSimplicialAlgebra> {
    TruncSimplicialAlgebra::constant(&poly(field, 2), truncation)
}

pub fn nerve_fixture(field: Field, n: usize, truncation: usize) -> Result<TruncSimplicialAlgebra> {
    let p = x_ideal(field, n)?;
    nerve(&p.c, &p.r, &p.boundary, &p.act, truncation)
}

pub fn dold_kan(field: Field, modulus: u64, truncation: usize) -> Result<TruncSimplicialAlgebra> {
    let cc = ChainComplex::new(modulus, vec![0, 1], vec![])?;
    dold_kan_group_algebra(field, &cc, truncation)
}

/// `(x) -id-> (x) -0-> k[x]/(x^n)` with `{y₀⊗y₁} = y₀y₁`.
pub fn trunc_two_crossed(field: Field, n: usize) -> Result<TwoCrossedModule> {
    let p = x_ideal(field, n)?;
    let d = p.c.dim();
    Ok(TwoCrossedModule {
        c2: p.c.clone(),
        c1: p.c.clone(),
        c0: p.r.clone(),
        d2: LinMap::identity(field, d),
        d1: LinMap::zero(field, p.r.dim(), d),
        act10: p.act.clone(),
        act20: p.act.clone(),
        act21: Action::regular(&p.c),
        lifting: Bilinear::from_fn(field, d, d, d, |i, j| p.c.basis_product(i, j).clone()),
    })
}

/// A one-dimensional top `k` with zero product, mapped to zero; `π₃ = k`.
pub fn kernel_two_crossed(field: Field, n: usize) -> Result<TwoCrossedModule> {
    let p = x_ideal(field, n)?;
    let top = FinAlgebra::new(field, vec!["t".into()], vec![vec![field.zero()]])?;
    let (d1, d0) = (p.c.dim(), p.r.dim());
    Ok(TwoCrossedModule {
        d2: LinMap::zero(field, d1, 1),
        d1: p.boundary.clone(),
        act10: p.act.clone(),
        act20: Action::trivial(field, d0, 1),
        act21: Action::trivial(field, d1, 1),
        lifting: Bilinear::zero(field, d1, d1, 1),
        c2: top,
        c1: p.c,
        c0: p.r,
    })
}

pub fn ideal_square(field: Field, n: usize) -> Result<CrossedSquare> {
    let r = poly(field, n);
    let i = r.ideal_closure(vec![r.unit(1)]);
    CrossedSquare::from_ideals(&r, &i, &i)
}

pub fn xy_square(field: Field) -> Result<CrossedSquare> {
    let ma = MonomialAlgebra::new(field, &[2, 2]);
    let i = ma.monomial_ideal(&[vec![1, 0]]);
    let j = ma.monomial_ideal(&[vec![0, 1]]);
    CrossedSquare::from_ideals(&ma.algebra, &i, &j)
}

pub fn fixture(name: &str, params: FixtureParams) -> Result<Bundle> {
    let f = params.field;
    let trunc = |d: usize| params.truncation.unwrap_or(d);
    let deg = |d: usize| params.degree.unwrap_or(d);
    let structure = match name {
        "const" => Structure::Simplicial(constant(f, trunc(4))?),
        "nerve" => Structure::Simplicial(nerve_fixture(f, deg(3), trunc(4))?),
        "dk" => Structure::Simplicial(dold_kan(f, 3, trunc(3))?),
        "dk-mod2" => Structure::Simplicial(dold_kan(f, 2, trunc(4))?),
        "dk-f3" => {
            let field = if params.field == Field::Rational { Field::prime(3, false)? } else { f };
            Structure::Simplicial(dold_kan(field, 3, trunc(3))?)
        }
        "crossed" => Structure::Crossed(x_ideal(f, deg(3))?),
        "precrossed-zero" => {
            let mut p = x_ideal(f, deg(4))?;
            p.boundary = LinMap::zero(f, p.r.dim(), p.c.dim());
            Structure::PreCrossed(p)
        }
        "ideal-2x" => Structure::TwoCrossed(TwoCrossedModule::from_crossed(&x_ideal(f, deg(3))?)),
        "trunc-2x" => Structure::TwoCrossed(trunc_two_crossed(f, deg(4))?),
        "kernel-2x" => Structure::TwoCrossed(kernel_two_crossed(f, deg(3))?),
        "idealsq" => Structure::Square(ideal_square(f, deg(3))?),
        "idealsq-xy" => Structure::Square(xy_square(f)?),
        "zerosq" => Structure::Square(CrossedSquare::zero(&poly(f, deg(3)))),
        "algebra" => Structure::Algebra(poly(f, deg(2))),
        other => return Err(Error::Usage(format!("unknown fixture {other:?}; known: {}", names().join(", ")))),
    };
    let desc = CATALOG.iter().find(|c| c.0 == name).map(|c| c.2).unwrap_or_default();
    Ok(Bundle::new(name, structure).with_note(desc))
}

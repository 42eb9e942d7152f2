//! Symmetrising forms `(a, b) = λ(ab)` and condensation `A ↦ eAe`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactla::{dot, kernel, Matrix, Subspace};
use crate::gfield::Scalar;

/// A non-degenerate symmetric associative form, determined by the
/// functional `λ` through `(a, b) = λ(ab)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymForm {
    lambda: Vec<Scalar>,
    gram: Matrix,
    dual_basis: Vec<Element>,
}

impl SymForm {
    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    /// `gram[i][j] = λ(e_i e_j)`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `b*_j` with `(e_i, b*_j) = δ_ij`.
    pub fn dual_basis(&self) -> &[Element] {
        &self.dual_basis
    }

    pub fn eval(&self, a: &Algebra, x: &[Scalar]) -> Scalar {
        dot(a.field(), &self.lambda, x)
    }

    /// `(x, y) = λ(xy)`.
    pub fn pair(&self, a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.eval(a, &a.multiply(x, y))
    }

    /// Assembles a form from raw parts without any checks. Only meant for
    /// building deliberately inconsistent forms in negative tests.
    #[doc(hidden)]
    pub fn from_parts_unchecked(lambda: Vec<Scalar>, gram: Matrix, dual_basis: Vec<Element>) -> Self {
        SymForm { lambda, gram, dual_basis }
    }
}

pub fn gram_matrix(a: &Algebra, lambda: &[Scalar]) -> Matrix {
    let f = a.field();
    let d = a.dim();
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let v = a.basis_product(i, j).iter().fold(Scalar::ZERO, |acc, &(l, c)| f.add(acc, f.mul(c, lambda[l])));
            g.set(i, j, v);
        }
    }
    g
}

/// Checks that `λ` vanishes on commutators and gives a non-degenerate form.
/// Associativity `(a, cb) = (ac, b)` needs no check: both sides are `λ(acb)`.
pub fn validate_form(a: &Algebra, lambda: &[Scalar]) -> Result<SymForm> {
    if lambda.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: lambda.len() });
    }
    let f = a.field();
    let gram = gram_matrix(a, lambda);
    if gram != gram.transpose() {
        return Err(Error::NotSymmetricForm);
    }
    let inv = gram.inverse(f).ok_or(Error::DegenerateForm)?;
    let dual_basis = (0..a.dim()).map(|j| inv.column(j)).collect();
    Ok(SymForm { lambda: lambda.to_vec(), gram, dual_basis })
}

/// Functionals `λ` with `λ(KA) = 0`, as a subspace of the dual.
pub fn symmetric_functionals(a: &Algebra) -> Subspace {
    kernel(a.field(), a.commutator_space().basis())
}

/// Above this many candidates the search samples instead of enumerating.
const EXHAUSTIVE_LIMIT: u128 = 1 << 14;

/// Searches the symmetric functionals for a non-degenerate one.
///
/// Tries every basis functional, then every sum of two, then `trials`
/// seeded random combinations. When the whole space has at most
/// `EXHAUSTIVE_LIMIT` elements it is enumerated instead, and failure
/// certifies that `A` admits no symmetrising form.
pub fn find_form(a: &Algebra, trials: usize, seed: u64) -> Result<SymForm> {
    let f = a.field();
    let space = symmetric_functionals(a);
    let total = (f.q() as u128).checked_pow(space.dim() as u32).unwrap_or(u128::MAX);
    let attempt = |lambda: &[Scalar]| validate_form(a, lambda).ok();

    if total <= EXHAUSTIVE_LIMIT {
        for lambda in space.elements(f) {
            if let Some(form) = attempt(&lambda) {
                return Ok(form);
            }
        }
        return Err(Error::FormNotFound { trials: total as usize, exhausted: true });
    }

    let basis: Vec<Element> = space.basis_vectors().map(|v| v.to_vec()).collect();
    let mut tried = 0;
    for b in &basis {
        tried += 1;
        if let Some(form) = attempt(b) {
            return Ok(form);
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            tried += 1;
            if let Some(form) = attempt(&a.add(&basis[i], &basis[j])) {
                return Ok(form);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        tried += 1;
        let coords: Vec<Scalar> = (0..space.dim()).map(|_| Scalar(rng.gen_range(0..f.q()))).collect();
        if let Some(form) = attempt(&space.combine(f, &coords)) {
            return Ok(form);
        }
    }
    Err(Error::FormNotFound { trials: tried, exhausted: false })
}

/// Result of condensing `A` to `eAe`.
#[derive(Debug, Clone)]
pub struct Condensed {
    pub algebra: Algebra,
    pub form: SymForm,
    /// `dim eAe × dim A`: the map `z ↦ e·z·e` in `eAe` coordinates.
    pub centre_map: Matrix,
    /// `dim A × dim eAe`: columns are the chosen basis of `eAe` inside `A`.
    pub embedding: Matrix,
}

impl Condensed {
    /// True when `e = 0` produced the zero algebra.
    pub fn is_empty(&self) -> bool {
        self.algebra.dim() == 0
    }
}

pub fn is_idempotent(a: &Algebra, e: &[Scalar]) -> bool {
    a.multiply(e, e) == e
}

/// `eAe` with the restricted form; its basis is the canonical basis of the
/// subspace `{e x e}`, so coordinates are pivot entries.
pub fn condense(a: &Algebra, form: &SymForm, e: &[Scalar]) -> Result<Condensed> {
    if e.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: e.len() });
    }
    if !is_idempotent(a, e) {
        return Err(Error::NotIdempotent);
    }
    let f = a.field();
    let sandwich = |x: &[Scalar]| a.multiply(&a.multiply(e, x), e);
    let images: Vec<Element> = (0..a.dim()).map(|j| sandwich(&a.basis_element(j))).collect();
    let corner = Subspace::span(f, a.dim(), &images)?;
    let basis: Vec<Element> = corner.basis_vectors().map(|v| v.to_vec()).collect();
    let r = basis.len();
    let coords = |x: &[Scalar]| -> Result<Vec<Scalar>> {
        corner.coords(f, x)?.ok_or_else(|| Error::Internal("product left the corner algebra".into()))
    };

    let mut sc = Vec::new();
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            for (l, c) in coords(&a.multiply(bi, bj))?.into_iter().enumerate() {
                if !c.is_zero() {
                    sc.push((i, j, l, c));
                }
            }
        }
    }
    let unit = coords(e)?;
    let algebra = Algebra::new(f.clone(), r, &sc, unit)
        .map_err(|err| Error::Internal(format!("corner algebra invalid: {err}")))?;
    let lambda: Vec<Scalar> = basis.iter().map(|b| form.eval(a, b)).collect();
    let form = validate_form(&algebra, &lambda)?;
    let centre_cols: Vec<Element> = images.iter().map(|x| coords(x)).collect::<Result<_>>()?;
    let centre_map = Matrix::from_columns(r, &centre_cols)?;
    let embedding = Matrix::from_columns(a.dim(), &basis)?;
    Ok(Condensed { algebra, form, centre_map, embedding })
}

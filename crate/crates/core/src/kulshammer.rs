//! Külshammer spaces `T_nA = {x : x^{p^n} ∈ KA}`, their orthogonals
//! `T_nA^⊥ ⊆ ZA`, the semilinear maps `ζ_n`, and the Higman ideal.
//!
//! Worked example, `A = GF(2)[x]/(x²)` with `λ(a + bx) = b`: the gram
//! matrix is `[[0,1],[1,0]]`, `KA = 0` and `(a + bx)² = a²`, so
//! `T_1A = span{x}` and `T_1A^⊥ = span{x}`. For `ζ_1`, the defining
//! equation `(ζ_1(z), y)² = (z, y²)` gives `ζ_1(1) = 0` (since
//! `λ(y²) = 0` for every `y`) and `ζ_1(x) = x`.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactla::{orth_complement, semilinear_kernel, solve, Subspace};
use crate::form::SymForm;
use crate::gfield::Scalar;

/// `T_nA`. The map `x ↦ x^{p^n}` is semilinear modulo `KA`, so on the
/// quotient `A/KA` membership is the semilinear system
/// `Σ λ_i^{p^n} · π(s(ē_i)^{p^n}) = 0` for `x ≡ Σ λ_i s(ē_i)`.
pub fn t_space(a: &Algebra, n: u32) -> Result<Subspace> {
    let f = a.field();
    let k = a.commutator_space();
    let quotient = a.quotient_mod(&k)?;
    let qdim = quotient.complement.len();
    let values: Vec<Element> = (0..qdim)
        .map(|i| {
            let lift = quotient.section.column(i);
            quotient.projection.mul_vec(f, &a.power_pn(&lift, n))
        })
        .collect();
    let solutions = semilinear_kernel(f, qdim, &values, n)?;
    solutions.image_under(f, &quotient.section)?.sum(f, &k)
}

pub fn t_perp(a: &Algebra, form: &SymForm, n: u32) -> Result<Subspace> {
    orth_complement(a.field(), &t_space(a, n)?, form.gram())
}

/// `ζ_n(z)`: the unique central element with
/// `(ζ_n(z), x)^{p^n} = (z, x^{p^n})` for every `x ∈ A`.
///
/// Both sides are `p^n`-semilinear in `x` (the right side because `z`
/// kills `KA`), so it is enough to impose the equation on basis elements.
pub fn zeta(a: &Algebra, form: &SymForm, n: u32, z: &[Scalar]) -> Result<Element> {
    if z.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: z.len() });
    }
    if !a.is_central(z) {
        return Err(Error::NotCentral);
    }
    let f = a.field();
    let w: Vec<Scalar> = (0..a.dim())
        .map(|j| {
            let xp = a.power_pn(&a.basis_element(j), n);
            f.inv_frobenius_n(form.pair(a, z, &xp), n)
        })
        .collect();
    let image = solve(f, form.gram(), &w)?;
    if !a.is_central(&image) {
        return Err(Error::Internal("ζ_n left the centre".into()));
    }
    Ok(image)
}

/// `ζ_n(ZA)`, spanned by the images of a basis because `ζ_n` is additive
/// and semilinear for a field automorphism.
pub fn zeta_image(a: &Algebra, form: &SymForm, n: u32) -> Result<Subspace> {
    let centre = a.centre();
    let images: Vec<Element> = centre.basis_vectors().map(|z| zeta(a, form, n, z)).collect::<Result<_>>()?;
    Subspace::span(a.field(), a.dim(), &images)
}

/// `τ(y) = Σ_i e_i · y · e*_i` for the dual bases of the form.
pub fn trace_map(a: &Algebra, form: &SymForm, y: &[Scalar]) -> Element {
    let mut acc = a.zero_element();
    for (i, dual) in form.dual_basis().iter().enumerate() {
        let term = a.multiply(&a.multiply(&a.basis_element(i), y), dual);
        acc = a.add(&acc, &term);
    }
    acc
}

/// Higman ideal `HA = τ(A)`.
pub fn higman_ideal(a: &Algebra, form: &SymForm) -> Result<Subspace> {
    let mut images = Vec::with_capacity(a.dim());
    for j in 0..a.dim() {
        let t = trace_map(a, form, &a.basis_element(j));
        if !a.is_central(&t) {
            return Err(Error::Internal(format!("τ(e_{j}) is not central")));
        }
        images.push(t);
    }
    Subspace::span(a.field(), a.dim(), &images)
}

/// Span of all products `x·y` with `x ∈ u`, `y ∈ v`.
pub fn ideal_product(a: &Algebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    for s in [u, v] {
        if s.ambient_dim() != a.dim() {
            return Err(Error::AmbientMismatch { left: a.dim(), right: s.ambient_dim() });
        }
    }
    let mut rows = Vec::with_capacity(u.dim() * v.dim());
    for x in u.basis_vectors() {
        for y in v.basis_vectors() {
            rows.push(a.multiply(x, y));
        }
    }
    Subspace::span(a.field(), a.dim(), &rows)
}

/// The ascending chain `KA ⊆ T_1A ⊆ T_2A ⊆ …` up to its first repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KulsChain {
    /// `T_1A, …, T_{n_stab}A`.
    pub t_spaces: Vec<Subspace>,
    /// `T_1A^⊥, …, T_{n_stab}A^⊥`.
    pub t_perps: Vec<Subspace>,
    /// First `n` with `T_nA = T_{n+1}A`.
    pub n_stab: usize,
}

impl KulsChain {
    /// `T_nA` for any `n ≥ 1`; past stabilization the chain is constant.
    pub fn t_space(&self, n: usize) -> &Subspace {
        &self.t_spaces[n.clamp(1, self.n_stab) - 1]
    }

    pub fn t_perp(&self, n: usize) -> &Subspace {
        &self.t_perps[n.clamp(1, self.n_stab) - 1]
    }
}

/// `T_nA` for `n = 1, 2, …` until `T_nA = T_{n+1}A`. A strictly ascending
/// chain in a space of dimension `d` has at most `d + 1` terms.
pub fn t_chain(a: &Algebra) -> Result<Vec<Subspace>> {
    let mut spaces = vec![t_space(a, 1)?];
    loop {
        let n = spaces.len() as u32;
        let next = t_space(a, n + 1)?;
        if &next == spaces.last().unwrap() {
            return Ok(spaces);
        }
        if spaces.len() > a.dim() + 1 {
            return Err(Error::Internal("T-chain failed to stabilize".into()));
        }
        spaces.push(next);
    }
}

pub fn kuls_chain(a: &Algebra, form: &SymForm) -> Result<KulsChain> {
    let t_spaces = t_chain(a)?;
    let t_perps = t_spaces.iter().map(|t| orth_complement(a.field(), t, form.gram())).collect::<Result<Vec<_>>>()?;
    let n_stab = t_spaces.len();
    Ok(KulsChain { t_spaces, t_perps, n_stab })
}

/// The stabilized ideal `T_{n_stab}A^⊥`.
pub fn reynolds(chain: &KulsChain) -> Subspace {
    chain.t_perp(chain.n_stab).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{group_algebra, matrix_algebra, trunc_poly, CayleyTable};
    use crate::exactla::Matrix;
    use crate::gfield::FieldSpec;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn s(xs: &[u32]) -> Element {
        xs.iter().map(|&x| Scalar(x)).collect()
    }

    fn span(a: &Algebra, rows: &[Element]) -> Subspace {
        Subspace::span(a.field(), a.dim(), rows).unwrap()
    }

    #[test]
    fn trunc2_worked_example() {
        let (a, form) = trunc_poly(2, gf(2)).unwrap();
        let x = s(&[0, 1]);
        assert_eq!(t_space(&a, 1).unwrap(), span(&a, std::slice::from_ref(&x)));
        assert_eq!(t_perp(&a, &form, 1).unwrap(), span(&a, std::slice::from_ref(&x)));
        assert_eq!(zeta(&a, &form, 1, &s(&[1, 0])).unwrap(), s(&[0, 0]));
        assert_eq!(zeta(&a, &form, 1, &x).unwrap(), x);
        assert_eq!(zeta(&a, &form, 1, &s(&[0, 0])).unwrap(), s(&[0, 0]));
        assert_eq!(zeta_image(&a, &form, 1).unwrap(), span(&a, std::slice::from_ref(&x)));
        assert!(higman_ideal(&a, &form).unwrap().is_zero());
        let chain = kuls_chain(&a, &form).unwrap();
        assert_eq!(chain.n_stab, 1);
        assert_eq!(reynolds(&chain), span(&a, std::slice::from_ref(&x)));
        let xs = span(&a, &[x]);
        assert!(ideal_product(&a, &xs, &xs).unwrap().is_zero());
    }

    #[test]
    fn trunc4_chain() {
        let (a, _) = trunc_poly(4, gf(2)).unwrap();
        let t1 = t_space(&a, 1).unwrap();
        let t2 = t_space(&a, 2).unwrap();
        assert_eq!(t1, span(&a, &[s(&[0, 0, 1, 0]), s(&[0, 0, 0, 1])]));
        assert_eq!(t2, span(&a, &[s(&[0, 1, 0, 0]), s(&[0, 0, 1, 0]), s(&[0, 0, 0, 1])]));
        assert_eq!(t_chain(&a).unwrap().len(), 2);
    }

    #[test]
    fn matrix_algebras() {
        let (m2, form) = matrix_algebra(2, gf(2)).unwrap();
        let k = m2.commutator_space();
        for n in 1..4 {
            assert_eq!(t_space(&m2, n).unwrap(), k);
        }
        let (m3, form3) = matrix_algebra(2, gf(3)).unwrap();
        let centre = m3.centre();
        assert_eq!(t_perp(&m3, &form3, 1).unwrap(), centre);
        assert_eq!(zeta_image(&m3, &form3, 1).unwrap(), centre);
        assert_eq!(higman_ideal(&m3, &form3).unwrap(), centre);
        assert_eq!(ideal_product(&m3, &centre, &centre).unwrap(), centre);
        // ζ_1(I) = c·I with (cI, x)^3 = (I, x^3): x = E11 gives c^3 = 1, so c = 1
        assert_eq!(zeta(&m3, &form3, 1, m3.unit()).unwrap(), m3.unit().to_vec());
        assert_eq!(zeta(&m2, &form, 1, &s(&[1, 0, 0, 0])), Err(Error::NotCentral));
    }

    #[test]
    fn split_semisimple_commutative() {
        let (c2, form) = group_algebra(&CayleyTable::builtin("C2").unwrap(), gf(3)).unwrap();
        assert!(t_space(&c2, 1).unwrap().is_zero());
        assert!(t_perp(&c2, &form, 1).unwrap().is_full());
        assert!(higman_ideal(&c2, &form).unwrap().is_full());
    }

    #[test]
    fn zero_algebra() {
        let a = Algebra::zero(gf(2));
        let form = crate::form::validate_form(&a, &[]).unwrap();
        assert!(t_perp(&a, &form, 1).unwrap().is_zero());
        let chain = kuls_chain(&a, &form).unwrap();
        assert_eq!(chain.n_stab, 1);
        assert!(reynolds(&chain).is_zero());
        assert!(zeta_image(&a, &form, 1).unwrap().is_zero());
    }

    #[test]
    fn corrupted_gram_breaks_zeta() {
        let (a, form) = trunc_poly(2, gf(2)).unwrap();
        let bad =
            SymForm::from_parts_unchecked(form.lambda().to_vec(), Matrix::identity(2), form.dual_basis().to_vec());
        let z = zeta(&a, &bad, 1, &s(&[0, 1])).unwrap_or_default();
        assert_ne!(z, s(&[0, 1]));
    }
}

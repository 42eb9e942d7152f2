//! Enumeration oracles for small algebras. They evaluate the defining
//! conditions element by element instead of solving linear systems.

use std::collections::HashSet;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactla::{dot, Subspace};
use crate::form::SymForm;
use crate::gfield::Scalar;
use crate::kulshammer::{t_space, zeta};

/// Default enumeration budget (number of algebra elements visited).
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// `q^d`, saturating.
pub fn element_count(q: u32, d: usize) -> u128 {
    let mut n: u128 = 1;
    for _ in 0..d {
        n = n.saturating_mul(q as u128);
    }
    n
}

fn check_budget(size: u128, budget: u128) -> Result<()> {
    if size > budget {
        Err(Error::TooLarge { size, budget })
    } else {
        Ok(())
    }
}

fn all_elements(a: &Algebra) -> Vec<Element> {
    Subspace::full(a.dim()).elements(a.field()).collect()
}

/// Every `x ∈ A` with `x^{p^n} ∈ KA`, in enumeration order.
pub fn brute_t_space(a: &Algebra, n: u32, budget: u128) -> Result<Vec<Element>> {
    check_budget(element_count(a.field().q(), a.dim()), budget)?;
    let f = a.field();
    let k = a.commutator_space();
    let mut members = Vec::new();
    for x in all_elements(a) {
        if k.contains(f, &a.power_pn(&x, n))? {
            members.push(x);
        }
    }
    Ok(members)
}

/// Checks `(ζ_n(z), x)^{p^n} = (z, x^{p^n})` with the pairing evaluated as
/// `λ(ab)` directly, for every `x ∈ A` and every `z` in the centre (every
/// central element when `|ZA|·|A|` fits the budget, a basis otherwise).
/// Also checks that each `ζ_n(z)` is central. Failures of the computation
/// count as a failed check; only [`Error::TooLarge`] is returned as an error.
pub fn brute_zeta_check(a: &Algebra, form: &SymForm, n: u32, budget: u128) -> Result<bool> {
    let f = a.field();
    let size = element_count(f.q(), a.dim());
    check_budget(size, budget)?;
    let elements = all_elements(a);
    let centre = a.centre();
    let centre_size = element_count(f.q(), centre.dim());
    let zs: Vec<Element> = if centre_size.saturating_mul(size) <= budget {
        centre.elements(f).collect()
    } else {
        centre.basis_vectors().map(<[Scalar]>::to_vec).collect()
    };
    let lambda = form.lambda();
    let pair = |x: &[Scalar], y: &[Scalar]| dot(f, lambda, &a.multiply(x, y));
    let powers: Vec<Element> = elements.iter().map(|x| a.power_pn(x, n)).collect();
    for z in &zs {
        let image = match zeta(a, form, n, z) {
            Ok(v) => v,
            Err(_) => return Ok(false),
        };
        if !a.is_central(&image) {
            return Ok(false);
        }
        for (x, xp) in elements.iter().zip(&powers) {
            if f.frobenius_n(pair(&image, x), n) != pair(z, xp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every `x ∈ A`: `x` commutes with all basis elements exactly when
/// `λ(x·(e_i e_j − e_j e_i)) = 0` for all `i, j`.
pub fn brute_centre_check(a: &Algebra, form: &SymForm, budget: u128) -> Result<bool> {
    let f = a.field();
    check_budget(element_count(f.q(), a.dim()), budget)?;
    let basis: Vec<Element> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
    let mut commutators = Vec::new();
    for x in &basis {
        for y in &basis {
            commutators.push(a.sub(&a.multiply(x, y), &a.multiply(y, x)));
        }
    }
    let lambda = form.lambda();
    for x in all_elements(a) {
        let central = basis.iter().all(|b| a.multiply(&x, b) == a.multiply(b, &x));
        let orthogonal = commutators.iter().all(|c| dot(f, lambda, &a.multiply(&x, c)).is_zero());
        if central != orthogonal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates `T_nA^⊥ = {y : λ(y·t) = 0 for all t ∈ T_nA}` from the
/// enumerated `T_nA`, then checks that it is a set of central elements
/// closed under multiplication by every central element.
pub fn brute_ideal_check(a: &Algebra, form: &SymForm, n: u32, budget: u128) -> Result<bool> {
    let f = a.field();
    let t = brute_t_space(a, n, budget)?;
    let lambda = form.lambda();
    let elements = all_elements(a);
    let perp: HashSet<Element> =
        elements.iter().filter(|y| t.iter().all(|x| dot(f, lambda, &a.multiply(y, x)).is_zero())).cloned().collect();
    let basis: Vec<Element> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
    let central: Vec<&Element> =
        elements.iter().filter(|x| basis.iter().all(|b| a.multiply(x, b) == a.multiply(b, x))).collect();
    for y in &perp {
        if !central.contains(&y) {
            return Ok(false);
        }
        for z in &central {
            if !perp.contains(&a.multiply(y, z)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of one oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
}

/// All oracle checks for `n = 1..=n_max`: `T_n` set equality against the
/// linear-algebra answer, the `ζ_n` equation, `ZA = KA^⊥`, and the ideal
/// property of each `T_nA^⊥`.
pub fn run_oracle(a: &Algebra, form: &SymForm, n_max: u32, budget: u128) -> Result<Vec<OracleCheck>> {
    check_budget(element_count(a.field().q(), a.dim()), budget)?;
    let f = a.field();
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let members = brute_t_space(a, n, budget)?;
        let computed = t_space(a, n)?;
        let mut equal = members.len() as u128 == element_count(f.q(), computed.dim());
        for x in &members {
            equal &= computed.contains(f, x)?;
        }
        checks.push(OracleCheck { name: format!("T_{n} set equality"), passed: equal });
        checks.push(OracleCheck { name: format!("zeta_{n} equation"), passed: brute_zeta_check(a, form, n, budget)? });
    }
    checks.push(OracleCheck { name: "ZA = KA^perp".into(), passed: brute_centre_check(a, form, budget)? });
    for n in 1..=n_max {
        checks.push(OracleCheck {
            name: format!("T_{n}^perp ideal of ZA"),
            passed: brute_ideal_check(a, form, n, budget)?,
        });
    }
    Ok(checks)
}

//! Finite-dimensional associative algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{kernel, Matrix, Subspace};
use crate::gfield::{FieldSpec, Scalar};

/// Coordinates of an algebra element in the standard basis.
pub type Element = Vec<Scalar>;

/// Every failure found by [`Algebra::validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Basis triples `(i, j, k)` with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub associativity: Vec<(usize, usize, usize)>,
    /// Basis indices `i` with `1·e_i ≠ e_i` or `e_i·1 ≠ e_i`.
    pub unit_law: Vec<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.associativity.is_empty() && self.unit_law.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        if !self.associativity.is_empty() {
            let shown: Vec<String> =
                self.associativity.iter().take(5).map(|(i, j, k)| format!("({i},{j},{k})")).collect();
            parts.push(format!(
                "{} non-associative basis triples, first {}",
                self.associativity.len(),
                shown.join(" ")
            ));
        }
        if !self.unit_law.is_empty() {
            parts.push(format!("unit law fails on basis elements {:?}", self.unit_law));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Concrete model of a quotient `A/S`, using the non-pivot standard
/// coordinates of `S`'s canonical basis as a complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    /// `dim(A/S) × dim A`; kills `S`.
    pub projection: Matrix,
    /// `dim A × dim(A/S)`; `projection · section = 1`.
    pub section: Matrix,
    /// Standard coordinates spanning the complement.
    pub complement: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    /// `products[i * dim + j]` is `e_i · e_j`, sorted by basis index, zeros omitted.
    products: Vec<Vec<(usize, Scalar)>>,
    unit: Element,
    names: Option<Vec<String>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim, self.field)
    }
}

impl Algebra {
    /// Validated construction from `(i, j, l, c)` entries meaning
    /// "the `e_l`-coefficient of `e_i · e_j` is `c`". Repeated entries add up.
    pub fn new(field: FieldSpec, dim: usize, sc: &[(usize, usize, usize, Scalar)], unit: Element) -> Result<Self> {
        let a = Self::new_unchecked(field, dim, sc, unit)?;
        let report = a.validate();
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        Ok(a)
    }

    /// Construction without the associativity and unit checks. Shapes and
    /// index ranges are still checked.
    pub fn new_unchecked(
        field: FieldSpec,
        dim: usize,
        sc: &[(usize, usize, usize, Scalar)],
        unit: Element,
    ) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: unit.len() });
        }
        if unit.iter().chain(sc.iter().map(|e| &e.3)).any(|&c| !field.contains(c)) {
            return Err(Error::InvalidField("scalar out of range for field".into()));
        }
        let mut dense = vec![vec![Scalar::ZERO; dim]; dim * dim];
        for &(i, j, l, c) in sc {
            let bad = [i, j, l].into_iter().find(|&x| x >= dim);
            if let Some(x) = bad {
                return Err(Error::DimensionMismatch { expected: dim, got: x + 1 });
            }
            let cell = &mut dense[i * dim + j][l];
            *cell = field.add(*cell, c);
        }
        let products =
            dense.into_iter().map(|row| row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()).collect();
        Ok(Algebra { field, dim, products, unit, names: None })
    }

    /// The zero algebra over `field`.
    pub fn zero(field: FieldSpec) -> Self {
        Algebra { field, dim: 0, products: Vec::new(), unit: Vec::new(), names: None }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    /// Nonzero structure constants `(i, j, l, c)` in lexicographic order.
    pub fn sc_entries(&self) -> impl Iterator<Item = (usize, usize, usize, Scalar)> + '_ {
        (0..self.dim * self.dim).flat_map(move |ij| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            self.products[ij].iter().map(move |&(l, c)| (i, j, l, c))
        })
    }

    pub fn zero_element(&self) -> Element {
        vec![Scalar::ZERO; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.zero_element();
        v[i] = Scalar::ONE;
        v
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        assert_eq!(x.len(), self.dim, "left factor has wrong length");
        assert_eq!(y.len(), self.dim, "right factor has wrong length");
        let f = &self.field;
        let mut out = self.zero_element();
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for &(l, s) in &self.products[i * self.dim + j] {
                    out[l] = f.add(out[l], f.mul(c, s));
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: Scalar, x: &[Scalar]) -> Element {
        x.iter().map(|&a| self.field.mul(c, a)).collect()
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.multiply(x, &self.basis_element(j))).collect();
        Matrix::from_columns(self.dim, &cols).expect("products have length dim")
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.multiply(&self.basis_element(j), x)).collect();
        Matrix::from_columns(self.dim, &cols).expect("products have length dim")
    }

    pub fn power(&self, x: &[Scalar], mut e: u64) -> Element {
        let mut base = x.to_vec();
        let mut acc = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `x^(p^n)`.
    pub fn power_pn(&self, x: &[Scalar], n: u32) -> Element {
        let p = self.field.p() as u64;
        let mut y = x.to_vec();
        for _ in 0..n {
            y = self.power(&y, p);
        }
        y
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product_vec(i, j);
                for k in 0..d {
                    let left = self.multiply(&ij, &self.basis_element(k));
                    let jk = self.basis_product_vec(j, k);
                    let right = self.multiply(&self.basis_element(i), &jk);
                    if left != right {
                        report.associativity.push((i, j, k));
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_element(i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                report.unit_law.push(i);
            }
        }
        report
    }

    fn basis_product_vec(&self, i: usize, j: usize) -> Element {
        let mut v = self.zero_element();
        for &(l, c) in self.basis_product(i, j) {
            v[l] = c;
        }
        v
    }

    /// `ZA`: the common kernel of `L(e_i) − R(e_i)` over all basis elements.
    pub fn centre(&self) -> Subspace {
        let d = self.dim;
        let mut stacked = Matrix::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                let ji = self.basis_product(j, i);
                // column j of L(e_i) − R(e_i) is e_i e_j − e_j e_i
                for &(l, c) in ij {
                    let cur = stacked.get(i * d + l, j);
                    stacked.set(i * d + l, j, self.field.add(cur, c));
                }
                for &(l, c) in ji {
                    let cur = stacked.get(i * d + l, j);
                    stacked.set(i * d + l, j, self.field.sub(cur, c));
                }
            }
        }
        kernel(&self.field, &stacked)
    }

    pub fn is_central(&self, z: &[Scalar]) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_element(i);
            self.multiply(&e, z) == self.multiply(z, &e)
        })
    }

    /// `KA`: the span of all `e_i e_j − e_j e_i`.
    pub fn commutator_space(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = self.sub(&self.basis_product_vec(i, j), &self.basis_product_vec(j, i));
                if c.iter().any(|x| !x.is_zero()) {
                    rows.push(c);
                }
            }
        }
        Subspace::span(&self.field, self.dim, &rows).expect("commutators have length dim")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn quotient_mod(&self, s: &Subspace) -> Result<Quotient> {
        if s.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch { left: self.dim, right: s.ambient_dim() });
        }
        let f = &self.field;
        let mut is_pivot = vec![false; self.dim];
        for &p in s.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let mut projection = Matrix::zeros(complement.len(), self.dim);
        let mut section = Matrix::zeros(self.dim, complement.len());
        for (qi, &c) in complement.iter().enumerate() {
            // x ↦ x[c] − Σ_rows x[pivot] · row[c]
            projection.set(qi, c, Scalar::ONE);
            for (row, &p) in s.basis_vectors().zip(s.pivots()) {
                projection.set(qi, p, f.neg(row[c]));
            }
            section.set(c, qi, Scalar::ONE);
        }
        Ok(Quotient { projection, section, complement })
    }

    /// `A^op`: same basis, `e_i ∘ e_j = e_j e_i`.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let products = (0..d * d).map(|ij| self.products[(ij % d) * d + ij / d].clone()).collect();
        Algebra { field: self.field.clone(), dim: d, products, unit: self.unit.clone(), names: self.names.clone() }
    }

    /// Block-diagonal `A ⊕ B`; the basis of `B` follows that of `A`.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.to_string(), right: other.field.to_string() });
        }
        let (a, b) = (self.dim, other.dim);
        let d = a + b;
        let mut products = vec![Vec::new(); d * d];
        for i in 0..a {
            for j in 0..a {
                products[i * d + j] = self.products[i * a + j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                products[(a + i) * d + a + j] = other.products[i * b + j].iter().map(|&(l, c)| (a + l, c)).collect();
            }
        }
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        let names = match (&self.names, &other.names) {
            (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
            _ => None,
        };
        Ok(Algebra { field: self.field.clone(), dim: d, products, unit, names })
    }

    /// `e_i · e_j` as a dense vector.
    pub fn product_vector(&self, i: usize, j: usize) -> Element {
        self.basis_product_vec(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{group_algebra, matrix_algebra, trunc_poly, CayleyTable};

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn s(xs: &[u32]) -> Element {
        xs.iter().map(|&x| Scalar(x)).collect()
    }

    #[test]
    fn matrix_algebra_is_valid_and_multiplies() {
        let (m2, _) = matrix_algebra(2, gf(2)).unwrap();
        assert!(m2.validate().is_valid());
        // basis index i*2+j is E_ij
        let e12 = m2.basis_element(1);
        let e21 = m2.basis_element(2);
        assert_eq!(m2.multiply(&e12, &e21), m2.basis_element(0));
        let y = s(&[1, 0, 1, 1]);
        assert_eq!(m2.multiply(m2.unit(), &y), y);
        assert_eq!(m2.left_mul(&e12).mul_vec(m2.field(), &e21), m2.multiply(&e12, &e21));
        assert_eq!(m2.right_mul(&e21).mul_vec(m2.field(), &e12), m2.multiply(&e12, &e21));
    }

    #[test]
    fn broken_table_is_reported() {
        let one = Scalar::ONE;
        let sc = [(0, 0, 1, one), (0, 1, 0, one)];
        let a = Algebra::new_unchecked(gf(2), 2, &sc, s(&[1, 0])).unwrap();
        let report = a.validate();
        assert!(!report.is_valid());
        assert!(report.unit_law.contains(&0));
        assert!(report.associativity.contains(&(0, 0, 0)));
        assert!(matches!(Algebra::new(gf(2), 2, &sc, s(&[1, 0])), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn truncated_polynomial_basics() {
        let (a, _) = trunc_poly(2, gf(2)).unwrap();
        assert!(a.validate().is_valid());
        let x = a.basis_element(1);
        assert_eq!(a.multiply(&x, &x), a.zero_element());
        let (a4, _) = trunc_poly(4, gf(2)).unwrap();
        assert_eq!(a4.power_pn(&a4.basis_element(1), 1), a4.basis_element(2));
        assert_eq!(a4.power_pn(a4.unit(), 3), a4.unit().to_vec());
    }

    #[test]
    fn power_pn_of_nilpotent_matrix_unit() {
        let (m2, _) = matrix_algebra(2, gf(2)).unwrap();
        assert_eq!(m2.power_pn(&m2.basis_element(1), 1), m2.zero_element());
    }

    #[test]
    fn centre_examples() {
        let (m2, _) = matrix_algebra(2, gf(3)).unwrap();
        let z = m2.centre();
        assert_eq!(z, Subspace::span(m2.field(), 4, &[m2.unit().to_vec()]).unwrap());
        let klein = CayleyTable::builtin("C2xC2").unwrap();
        let (g, _) = group_algebra(&klein, gf(2)).unwrap();
        assert!(g.centre().is_full());
        assert!(g.commutator_space().is_zero());
        let (t, _) = trunc_poly(3, gf(3)).unwrap();
        assert!(t.centre().is_full());
        assert!(t.is_commutative());
    }

    #[test]
    fn commutator_space_examples() {
        let (m2, _) = matrix_algebra(2, gf(2)).unwrap();
        let k = m2.commutator_space();
        assert_eq!(k.dim(), 3);
        // trace-zero: E11 + E22 is in KA over GF(2), E11 is not
        assert!(k.contains(m2.field(), &s(&[1, 0, 0, 1])).unwrap());
        assert!(!k.contains(m2.field(), &s(&[1, 0, 0, 0])).unwrap());
        let s3 = CayleyTable::builtin("S3").unwrap();
        let (g, _) = group_algebra(&s3, gf(3)).unwrap();
        assert_eq!(g.commutator_space().dim(), 3);
        assert_eq!(g.centre().dim(), 3);
    }

    #[test]
    fn quotient_examples() {
        let (a, _) = trunc_poly(2, gf(2)).unwrap();
        let q = a.quotient_mod(&Subspace::zero(2)).unwrap();
        assert_eq!(q.projection, Matrix::identity(2));
        assert_eq!(q.section, Matrix::identity(2));
        let q = a.quotient_mod(&Subspace::full(2)).unwrap();
        assert_eq!(q.projection.rows(), 0);
        let line = Subspace::span(a.field(), 2, &[s(&[1, 1])]).unwrap();
        let q = a.quotient_mod(&line).unwrap();
        assert_eq!(q.complement, vec![1]);
        assert_eq!(q.projection.mul(a.field(), &q.section), Matrix::identity(1));
        assert_eq!(q.projection.mul_vec(a.field(), &s(&[1, 1])), s(&[0]));
    }

    #[test]
    fn opposite_and_direct_sum() {
        let (t, _) = trunc_poly(3, gf(3)).unwrap();
        assert_eq!(t.opposite(), t);
        let (m2, _) = matrix_algebra(2, gf(3)).unwrap();
        assert_eq!(m2.opposite().opposite(), m2);
        assert!(m2.opposite().validate().is_valid());
        let (k, _) = matrix_algebra(1, gf(3)).unwrap();
        let sum = k.direct_sum(&m2).unwrap();
        assert_eq!(sum.dim(), 5);
        assert!(sum.validate().is_valid());
        assert_eq!(sum.centre().dim(), 2);
        let (other, _) = trunc_poly(2, gf(2)).unwrap();
        assert!(matches!(k.direct_sum(&other), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn zero_algebra_is_total() {
        let z = Algebra::zero(gf(2));
        assert!(z.validate().is_valid());
        assert!(z.centre().is_zero());
        assert!(z.commutator_space().is_zero());
        assert_eq!(z.power_pn(&[], 2), Vec::<Scalar>::new());
    }
}

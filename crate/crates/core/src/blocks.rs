//! Block decomposition via primitive central idempotents.
//!
//! The Frobenius-fixed part `F = {z ∈ ZA : z^q = z}` of the centre is a
//! product of one copy of `GF(q)` per block, so its primitive idempotents
//! are the block idempotents of `A`. They are separated by splitting `F`
//! along the eigenvalues of multiplication by each basis vector.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactla::{kernel, Matrix, Subspace};
use crate::form::{condense, SymForm};
use crate::gfield::Scalar;
use crate::kulshammer::t_chain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub idempotent: Element,
    /// Dimension of `eA`.
    pub dim: usize,
    /// Whether `eA` is a simple algebra.
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Ordered by the first basis index in the support of the idempotent.
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn idempotents(&self) -> impl Iterator<Item = &Element> {
        self.blocks.iter().map(|b| &b.idempotent)
    }

    pub fn simple_flags(&self) -> Vec<bool> {
        self.blocks.iter().map(|b| b.simple).collect()
    }
}

/// `{z ∈ ZA : z^q = z}` as a subspace of `A`.
pub fn frobenius_fixed_centre(a: &Algebra) -> Result<Subspace> {
    let f = a.field();
    let centre = a.centre();
    let r = centre.dim();
    let mut columns = Vec::with_capacity(r);
    for z in centre.basis_vectors() {
        let diff = a.sub(&a.power(z, f.q() as u64), z);
        let coords = centre.coords(f, &diff)?.ok_or_else(|| Error::Internal("z^q left the centre".into()))?;
        columns.push(coords);
    }
    let map = Matrix::from_columns(r, &columns)?;
    let fixed: Vec<Element> = kernel(f, &map).basis_vectors().map(|c| centre.combine(f, c)).collect();
    Subspace::span(f, a.dim(), &fixed)
}

/// The primitive central idempotents of `A`.
pub fn central_idempotents(a: &Algebra) -> Result<Vec<Element>> {
    if a.dim() == 0 {
        return Ok(Vec::new());
    }
    let f = a.field();
    let fixed = frobenius_fixed_centre(a)?;
    let s = fixed.dim();
    let mut idempotents = vec![a.unit().to_vec()];
    for b in fixed.basis_vectors() {
        if idempotents.len() == s {
            break;
        }
        let mut columns = Vec::with_capacity(s);
        for v in fixed.basis_vectors() {
            let coords = fixed
                .coords(f, &a.multiply(b, v))?
                .ok_or_else(|| Error::Internal("fixed centre is not closed".into()))?;
            columns.push(coords);
        }
        let mult = Matrix::from_columns(s, &columns)?;
        let eigenvalues: Vec<Scalar> = f
            .elements()
            .filter(|&c| {
                let mut shifted = mult.clone();
                for i in 0..s {
                    shifted.set(i, i, f.sub(shifted.get(i, i), c));
                }
                shifted.rank(f) < s
            })
            .collect();
        let projectors: Vec<Element> = eigenvalues.iter().map(|&c| lagrange_projector(a, b, c, &eigenvalues)).collect();
        let mut refined = Vec::new();
        for e in &idempotents {
            for proj in &projectors {
                let piece = a.multiply(e, proj);
                if piece.iter().any(|x| !x.is_zero()) {
                    refined.push(piece);
                }
            }
        }
        idempotents = refined;
    }
    if idempotents.len() != s {
        return Err(Error::Internal(format!("found {} block idempotents, expected {s}", idempotents.len())));
    }
    idempotents.sort_by_key(|e| (e.iter().position(|x| !x.is_zero()), e.clone()));
    Ok(idempotents)
}

/// `Π_{c' ≠ c} (b − c')/(c − c')`.
fn lagrange_projector(a: &Algebra, b: &[Scalar], c: Scalar, eigenvalues: &[Scalar]) -> Element {
    let f = a.field();
    let mut acc = a.unit().to_vec();
    for &other in eigenvalues.iter().filter(|&&o| o != c) {
        let shifted = a.sub(b, &a.scale(other, a.unit()));
        let factor = f.inv_nonzero(f.sub(c, other));
        acc = a.scale(factor, &a.multiply(&acc, &shifted));
    }
    acc
}

/// Whether a symmetric algebra is semisimple, tested by its stabilized
/// `T`-space being `KA`. A block is simple exactly when it is semisimple.
pub fn is_semisimple(a: &Algebra) -> Result<bool> {
    if a.dim() == 0 {
        return Ok(false);
    }
    let stable = t_chain(a)?.pop().expect("chain is nonempty");
    Ok(stable == a.commutator_space())
}

pub fn blocks(a: &Algebra, form: &SymForm) -> Result<BlockDecomposition> {
    let mut blocks = Vec::new();
    for e in central_idempotents(a)? {
        let corner = condense(a, form, &e)?;
        let simple = is_semisimple(&corner.algebra)?;
        blocks.push(Block { dim: corner.algebra.dim(), idempotent: e, simple });
    }
    Ok(BlockDecomposition { blocks })
}

/// `Z_0A`: the sum of `e·ZA` over simple blocks `e`.
pub fn z0(a: &Algebra, decomposition: &BlockDecomposition) -> Result<Subspace> {
    let centre = a.centre();
    let mut rows = Vec::new();
    for block in decomposition.blocks.iter().filter(|b| b.simple) {
        for z in centre.basis_vectors() {
            rows.push(a.multiply(&block.idempotent, z));
        }
    }
    Subspace::span(a.field(), a.dim(), &rows)
}

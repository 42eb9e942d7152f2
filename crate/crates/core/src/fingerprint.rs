//! The full invariant computation for one algebra, its dimension
//! fingerprint, and the inclusion checks between the resulting ideals.

use std::fmt;

use crate::algebra::Algebra;
use crate::blocks::{blocks, z0, BlockDecomposition};
use crate::error::Result;
use crate::exactla::Subspace;
use crate::form::{condense, Condensed, SymForm};
use crate::gfield::{FieldSpec, Scalar};
use crate::kulshammer::{higman_ideal, ideal_product, kuls_chain, reynolds, KulsChain};

/// Pairwise products `T_i^⊥ · T_j^⊥` are recorded for `i ≤ j ≤ min(n_stab, 3)`.
pub const PRODUCT_DEPTH: usize = 3;
/// Powers `(T_1^⊥)^m` are recorded for `m = 1..=3`.
pub const POWER_DEPTH: usize = 3;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub field: FieldSpec,
    pub dim: usize,
    pub centre: Subspace,
    pub commutators: Subspace,
    pub chain: KulsChain,
    pub higman: Subspace,
    pub reynolds: Subspace,
    pub blocks: BlockDecomposition,
    pub z0: Subspace,
    /// `(i, j, T_i^⊥ · T_j^⊥)` with `i ≤ j`.
    pub products: Vec<(usize, usize, Subspace)>,
    /// `(T_1^⊥)^1, (T_1^⊥)^2, (T_1^⊥)^3`.
    pub powers: Vec<Subspace>,
}

pub fn analyze(a: &Algebra, form: &SymForm) -> Result<Analysis> {
    let chain = kuls_chain(a, form)?;
    let depth = chain.n_stab.min(PRODUCT_DEPTH);
    let mut products = Vec::new();
    for i in 1..=depth {
        for j in i..=depth {
            products.push((i, j, ideal_product(a, chain.t_perp(i), chain.t_perp(j))?));
        }
    }
    let t1 = chain.t_perp(1).clone();
    let mut powers = vec![t1.clone()];
    for _ in 1..POWER_DEPTH {
        let next = ideal_product(a, powers.last().unwrap(), &t1)?;
        powers.push(next);
    }
    let decomposition = blocks(a, form)?;
    Ok(Analysis {
        field: a.field().clone(),
        dim: a.dim(),
        centre: a.centre(),
        commutators: a.commutator_space(),
        higman: higman_ideal(a, form)?,
        reynolds: reynolds(&chain),
        z0: z0(a, &decomposition)?,
        blocks: decomposition,
        chain,
        products,
        powers,
    })
}

pub fn fingerprint(a: &Algebra, form: &SymForm) -> Result<Fingerprint> {
    Ok(analyze(a, form)?.fingerprint())
}

impl Analysis {
    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            p: self.field.p(),
            k: self.field.k(),
            dim_a: self.dim,
            dim_za: self.centre.dim(),
            dim_ka: self.commutators.dim(),
            n_stab: self.chain.n_stab,
            perp_dims: self.chain.t_perps.iter().map(Subspace::dim).collect(),
            dim_ha: self.higman.dim(),
            dim_reynolds: self.reynolds.dim(),
            dim_z0: self.z0.dim(),
            product_dims: self.products.iter().map(|(i, j, s)| (*i, *j, s.dim())).collect(),
            power_dims: self.powers.iter().map(Subspace::dim).collect(),
        }
    }

    /// `(T_1^⊥)^2`.
    pub fn t1_squared(&self) -> &Subspace {
        &self.powers[1]
    }

    pub fn product(&self, i: usize, j: usize) -> Option<&Subspace> {
        let (i, j) = (i.min(j), i.max(j));
        self.products.iter().find(|(a, b, _)| (*a, *b) == (i, j)).map(|(_, _, s)| s)
    }

    pub fn verdicts(&self) -> Result<Verdicts> {
        let f = &self.field;
        let sq = self.t1_squared();
        let identity = if f.p() == 2 {
            let mixed = ideal_product_of(self, 1, 2)?;
            Identity::CharTwo { z0_eq_t1_cubed: self.z0 == self.powers[2], z0_eq_t1_t2: self.z0 == mixed }
        } else {
            Identity::Odd { z0_eq_t1_squared: &self.z0 == sq }
        };
        Ok(Verdicts {
            z0_in_t1_squared: self.z0.is_subspace_of(f, sq)?,
            t1_squared_in_ha: sq.is_subspace_of(f, &self.higman)?,
            identity,
        })
    }
}

/// `T_i^⊥ · T_j^⊥`, falling back to the stabilized terms past `n_stab`.
fn ideal_product_of(an: &Analysis, i: usize, j: usize) -> Result<Subspace> {
    let clamp = |n: usize| n.min(an.chain.n_stab);
    match an.product(clamp(i), clamp(j)) {
        Some(s) => Ok(s.clone()),
        None => Err(crate::error::Error::Internal(format!("product T{i}·T{j} not computed"))),
    }
}

/// One row of the condensation check: `dim e·T_n^⊥·e` against `dim T_n(eAe)^⊥`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondenseRow {
    pub n: usize,
    pub image_dim: usize,
    pub corner_dim: usize,
    pub equal: bool,
}

#[derive(Debug, Clone)]
pub struct CondensationCheck {
    pub corner: Condensed,
    pub fingerprint: Fingerprint,
    /// One row per `n` up to the later of the two stabilization points.
    pub rows: Vec<CondenseRow>,
}

impl CondensationCheck {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }
}

/// Compares the image of `T_nA^⊥` under `z ↦ eze` with `T_n(eAe)^⊥`.
pub fn condensation_check(a: &Algebra, form: &SymForm, e: &[Scalar]) -> Result<CondensationCheck> {
    let corner = condense(a, form, e)?;
    let chain = kuls_chain(a, form)?;
    let corner_an = analyze(&corner.algebra, &corner.form)?;
    let n_max = chain.n_stab.max(corner_an.chain.n_stab);
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let image = chain.t_perp(n).image_under(a.field(), &corner.centre_map)?;
        let target = corner_an.chain.t_perp(n);
        rows.push(CondenseRow { n, image_dim: image.dim(), corner_dim: target.dim(), equal: &image == target });
    }
    Ok(CondensationCheck { fingerprint: corner_an.fingerprint(), corner, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// Odd characteristic: `Z_0A = (T_1A^⊥)^2`.
    Odd { z0_eq_t1_squared: bool },
    /// Characteristic two: `Z_0A = (T_1A^⊥)^3 = T_1A^⊥ · T_2A^⊥`.
    CharTwo { z0_eq_t1_cubed: bool, z0_eq_t1_t2: bool },
}

impl Identity {
    pub fn holds(&self) -> bool {
        match *self {
            Identity::Odd { z0_eq_t1_squared } => z0_eq_t1_squared,
            Identity::CharTwo { z0_eq_t1_cubed, z0_eq_t1_t2 } => z0_eq_t1_cubed && z0_eq_t1_t2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    /// `Z_0A ⊆ (T_1A^⊥)^2`.
    pub z0_in_t1_squared: bool,
    /// `(T_1A^⊥)^2 ⊆ HA`.
    pub t1_squared_in_ha: bool,
    pub identity: Identity,
}

impl Verdicts {
    pub fn all_hold(&self) -> bool {
        self.z0_in_t1_squared && self.t1_squared_in_ha && self.identity.holds()
    }
}

/// Dimensions of the ideals attached to a symmetric algebra.
///
/// `dim_a` and `dim_ka` are recorded for information; they are not Morita
/// invariants and are ignored by [`Fingerprint::differences`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub p: u32,
    pub k: u32,
    pub dim_a: usize,
    pub dim_za: usize,
    pub dim_ka: usize,
    pub n_stab: usize,
    /// `dim T_nA^⊥` for `n = 1..=n_stab`.
    pub perp_dims: Vec<usize>,
    pub dim_ha: usize,
    pub dim_reynolds: usize,
    pub dim_z0: usize,
    /// `(i, j, dim T_i^⊥·T_j^⊥)` for `i ≤ j ≤ min(n_stab, 3)`.
    pub product_dims: Vec<(usize, usize, usize)>,
    /// `dim (T_1^⊥)^m` for `m = 1..=3`.
    pub power_dims: Vec<usize>,
}

/// One line of a fingerprint: a stable key, its value, and whether it is
/// preserved under derived equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    pub key: String,
    pub left: String,
    pub right: String,
}

impl Fingerprint {
    pub fn entries(&self) -> Vec<Entry> {
        let mut out = Vec::new();
        let mut push = |key: String, value: String, invariant: bool| out.push(Entry { key, value, invariant });
        push("field.p".into(), self.p.to_string(), true);
        push("field.k".into(), self.k.to_string(), true);
        push("dim.A".into(), self.dim_a.to_string(), false);
        push("dim.ZA".into(), self.dim_za.to_string(), true);
        push("dim.KA".into(), self.dim_ka.to_string(), false);
        push("chain.n_stab".into(), self.n_stab.to_string(), true);
        for (n, d) in self.perp_dims.iter().enumerate() {
            push(format!("perp.{}", n + 1), d.to_string(), true);
        }
        push("dim.HA".into(), self.dim_ha.to_string(), true);
        push("dim.Reynolds".into(), self.dim_reynolds.to_string(), true);
        push("dim.Z0".into(), self.dim_z0.to_string(), true);
        for (i, j, d) in &self.product_dims {
            push(format!("product.{i}.{j}"), d.to_string(), true);
        }
        for (m, d) in self.power_dims.iter().enumerate() {
            push(format!("power.{}", m + 1), d.to_string(), true);
        }
        out
    }

    /// Invariant entries whose values differ, in entry order. A key present on
    /// one side only is reported with `-` on the other.
    pub fn differences(&self, other: &Fingerprint) -> Vec<Difference> {
        let left: Vec<Entry> = self.entries().into_iter().filter(|e| e.invariant).collect();
        let right: Vec<Entry> = other.entries().into_iter().filter(|e| e.invariant).collect();
        let mut keys: Vec<&str> = left.iter().map(|e| e.key.as_str()).collect();
        for e in &right {
            if !keys.contains(&e.key.as_str()) {
                keys.push(&e.key);
            }
        }
        let lookup =
            |side: &[Entry], key: &str| side.iter().find(|e| e.key == key).map_or("-".to_string(), |e| e.value.clone());
        keys.into_iter()
            .filter_map(|key| {
                let (l, r) = (lookup(&left, key), lookup(&right, key));
                (l != r).then(|| Difference { key: key.to_string(), left: l, right: r })
            })
            .collect()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perps: Vec<String> = self.perp_dims.iter().map(usize::to_string).collect();
        write!(
            f,
            "p={} k={} dim A={} ZA={} KA={} n_stab={} perp=[{}] HA={} Reynolds={} Z0={}",
            self.p,
            self.k,
            self.dim_a,
            self.dim_za,
            self.dim_ka,
            self.n_stab,
            perps.join(","),
            self.dim_ha,
            self.dim_reynolds,
            self.dim_z0
        )
    }
}

//! Standard symmetric algebras with their canonical symmetrising forms.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::form::{validate_form, SymForm};
use crate::gfield::{FieldSpec, Scalar};

pub use crate::brauer::{brauer_tree_algebra, BrauerTree};

const BUILTIN_GROUPS: &[(&str, &str)] = &[
    ("C2", include_str!("../corpus/groups/C2.cayley")),
    ("C3", include_str!("../corpus/groups/C3.cayley")),
    ("C4", include_str!("../corpus/groups/C4.cayley")),
    ("C2xC2", include_str!("../corpus/groups/C2xC2.cayley")),
    ("D8", include_str!("../corpus/groups/D8.cayley")),
    ("Q8", include_str!("../corpus/groups/Q8.cayley")),
    ("S3", include_str!("../corpus/groups/S3.cayley")),
];

/// Multiplication table of a finite group on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let order = table.len();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if order == 0 {
            return bad("empty table".into());
        }
        if identity >= order {
            return bad(format!("identity index {identity} out of range"));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != order {
                return bad(format!("row {g} has {} entries, expected {order}", row.len()));
            }
            if !is_permutation(row.iter().copied(), order) {
                return bad(format!("row {g} is not a permutation"));
            }
        }
        for h in 0..order {
            if !is_permutation(table.iter().map(|row| row[h]), order) {
                return bad(format!("column {h} is not a permutation"));
            }
        }
        for (g, row) in table.iter().enumerate() {
            if table[identity][g] != g || row[identity] != g {
                return bad(format!("{identity} does not act as identity on {g}"));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative on ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(CayleyTable { order, table, identity })
    }

    /// `.cayley` text: first line `order identity`, then `order` rows of indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::InvalidTable("missing header".into()))?;
        let nums = parse_usizes(header)?;
        let [order, identity] = nums[..] else {
            return Err(Error::InvalidTable("header must be `order identity`".into()));
        };
        let mut table = Vec::with_capacity(order);
        for line in lines {
            table.push(parse_usizes(line)?);
        }
        if table.len() != order {
            return Err(Error::InvalidTable(format!("expected {order} rows, found {}", table.len())));
        }
        Self::new(table, identity)
    }

    /// One of the tables shipped with the crate: C2, C3, C4, C2xC2, D8, Q8, S3.
    pub fn builtin(name: &str) -> Option<Self> {
        BUILTIN_GROUPS
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, text)| Self::parse(text).expect("shipped tables are valid"))
    }

    pub fn builtin_names() -> impl Iterator<Item = &'static str> {
        BUILTIN_GROUPS.iter().map(|(n, _)| *n)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }
}

fn parse_usizes(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace().map(|t| t.parse().map_err(|_| Error::InvalidTable(format!("bad index `{t}`")))).collect()
}

fn is_permutation(it: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for x in it {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    seen.into_iter().all(|s| s)
}

fn with_form(a: Algebra, lambda: Vec<Scalar>) -> Result<(Algebra, SymForm)> {
    let form = validate_form(&a, &lambda)?;
    Ok((a, form))
}

/// The group algebra `F[G]` with `λ` the coefficient of the identity.
pub fn group_algebra(t: &CayleyTable, field: FieldSpec) -> Result<(Algebra, SymForm)> {
    let n = t.order();
    let mut sc = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            sc.push((g, h, t.product(g, h), Scalar::ONE));
        }
    }
    let mut unit = vec![Scalar::ZERO; n];
    unit[t.identity()] = Scalar::ONE;
    let names = (0..n).map(|g| format!("g{g}")).collect();
    let a = Algebra::new(field, n, &sc, unit.clone())?.with_names(names)?;
    with_form(a, unit)
}

/// `M_d(F)` on matrix units (`E_ij` has index `i·d + j`) with the trace form.
pub fn matrix_algebra(d: usize, field: FieldSpec) -> Result<(Algebra, SymForm)> {
    if d == 0 {
        return Err(Error::BadParameters("matrix size must be positive".into()));
    }
    let idx = |i: usize, j: usize| i * d + j;
    let mut sc = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                sc.push((idx(i, j), idx(j, l), idx(i, l), Scalar::ONE));
            }
        }
    }
    let mut trace = vec![Scalar::ZERO; d * d];
    for i in 0..d {
        trace[idx(i, i)] = Scalar::ONE;
    }
    let names = (0..d * d).map(|k| format!("E{}{}", k / d + 1, k % d + 1)).collect();
    let a = Algebra::new(field, d * d, &sc, trace.clone())?.with_names(names)?;
    with_form(a, trace)
}

/// `F[x]/(x^m)` with `λ` the coefficient of `x^{m-1}`.
pub fn trunc_poly(m: usize, field: FieldSpec) -> Result<(Algebra, SymForm)> {
    if m == 0 {
        return Err(Error::BadParameters("truncation degree must be positive".into()));
    }
    let mut sc = Vec::new();
    for i in 0..m {
        for j in 0..m - i {
            sc.push((i, j, i + j, Scalar::ONE));
        }
    }
    let mut unit = vec![Scalar::ZERO; m];
    unit[0] = Scalar::ONE;
    let mut lambda = vec![Scalar::ZERO; m];
    lambda[m - 1] = Scalar::ONE;
    let names = (0..m)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let a = Algebra::new(field, m, &sc, unit)?.with_names(names)?;
    with_form(a, lambda)
}

/// Paths of length `< len` on the cyclic quiver with `e` vertices, multiplied
/// by concatenation and truncated at `len`. Symmetric exactly when
/// `len ≡ 1 (mod e)`; `λ` picks out the `e` longest paths.
pub fn nakayama_symmetric(e: usize, len: usize, field: FieldSpec) -> Result<(Algebra, SymForm)> {
    if e == 0 || len == 0 {
        return Err(Error::BadParameters("e and L must be positive".into()));
    }
    if len % e != 1 % e {
        return Err(Error::BadParameters(format!("L = {len} is not 1 mod e = {e}")));
    }
    // path (start s, length l) has index s·len + l and ends at s + l mod e
    let idx = |s: usize, l: usize| s * len + l;
    let mut sc = Vec::new();
    for s in 0..e {
        for l in 0..len {
            let end = (s + l) % e;
            for l2 in 0..len - l {
                sc.push((idx(s, l), idx(end, l2), idx(s, l + l2), Scalar::ONE));
            }
        }
    }
    let d = e * len;
    let mut unit = vec![Scalar::ZERO; d];
    let mut lambda = vec![Scalar::ZERO; d];
    for s in 0..e {
        unit[idx(s, 0)] = Scalar::ONE;
        lambda[idx(s, len - 1)] = Scalar::ONE;
    }
    let names = (0..d).map(|k| format!("p{}_{}", k / len, k % len)).collect();
    let a = Algebra::new(field, d, &sc, unit)?.with_names(names)?;
    with_form(a, lambda)
}

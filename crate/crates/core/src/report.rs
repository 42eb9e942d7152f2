//! Deterministic text and key=value renderings of analysis results.

use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::blocks::BlockDecomposition;
use crate::fingerprint::{Analysis, CondenseRow, Difference, Fingerprint, Identity, Verdicts};
use crate::gfield::{FieldSpec, Scalar};
use crate::oracle::OracleCheck;

/// Schema tag on the first line of machine-readable fingerprints.
pub const SCHEMA: &str = "symkuls.fingerprint.v1";

pub fn field_name(f: &FieldSpec) -> String {
    f.to_string()
}

pub fn format_vector(f: &FieldSpec, x: &[Scalar]) -> String {
    let parts: Vec<String> = x.iter().map(|&c| f.format_scalar(c)).collect();
    parts.join(" ")
}

pub fn identity_verdict(v: &Verdicts) -> &'static str {
    match (v.identity, v.identity.holds()) {
        (Identity::Odd { .. }, true) => "odd-p equality holds",
        (Identity::Odd { .. }, false) => "odd-p equality fails",
        (Identity::CharTwo { .. }, true) => "p=2 identities hold",
        (Identity::CharTwo { .. }, false) => "p=2 identities fail",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Fingerprint report. `nmax` chooses how many `T_n^⊥` dimensions are listed;
/// by default the chain up to stabilization.
pub fn fingerprint_report(
    name: &str,
    an: &Analysis,
    verdicts: &Verdicts,
    nmax: Option<usize>,
    machine: bool,
) -> String {
    let fp = an.fingerprint();
    let n_stab = fp.n_stab;
    let nmax = nmax.unwrap_or(n_stab);
    let perp_dims: Vec<usize> = (1..=nmax).map(|n| an.chain.t_perp(n).dim()).collect();
    let mut out = String::new();
    if machine {
        let _ = writeln!(out, "schema={SCHEMA}");
        let _ = writeln!(out, "algebra={name}");
        let mut perps_done = false;
        for e in fp.entries() {
            if e.key.starts_with("perp.") {
                if !perps_done {
                    let _ = writeln!(out, "chain.nmax={nmax}");
                    for (n, d) in perp_dims.iter().enumerate() {
                        let _ = writeln!(out, "perp.{}={d}", n + 1);
                    }
                    perps_done = true;
                }
                continue;
            }
            let _ = writeln!(out, "{}={}", e.key, e.value);
        }
        let _ = writeln!(out, "blocks.count={}", an.blocks.len());
        let simple = an.blocks.blocks.iter().filter(|b| b.simple).count();
        let _ = writeln!(out, "blocks.simple={simple}");
        let _ = writeln!(out, "inclusion.z0_in_t1sq={}", verdicts.z0_in_t1_squared);
        let _ = writeln!(out, "inclusion.t1sq_in_ha={}", verdicts.t1_squared_in_ha);
        match verdicts.identity {
            Identity::Odd { z0_eq_t1_squared } => {
                let _ = writeln!(out, "identity.z0_eq_t1sq={z0_eq_t1_squared}");
            }
            Identity::CharTwo { z0_eq_t1_cubed, z0_eq_t1_t2 } => {
                let _ = writeln!(out, "identity.z0_eq_t1cube={z0_eq_t1_cubed}");
                let _ = writeln!(out, "identity.z0_eq_t1t2={z0_eq_t1_t2}");
            }
        }
        let _ = writeln!(out, "verdict={}", identity_verdict(verdicts));
        return out;
    }

    let _ = writeln!(out, "algebra {name} over {}", field_name(&an.field));
    let row = |out: &mut String, label: &str, value: String| {
        let _ = writeln!(out, "  {label:<24} {value}");
    };
    row(&mut out, "dim A", fp.dim_a.to_string());
    row(&mut out, "dim ZA", fp.dim_za.to_string());
    row(&mut out, "dim KA", fp.dim_ka.to_string());
    row(&mut out, "n_stab", n_stab.to_string());
    for (n, d) in perp_dims.iter().enumerate() {
        let n = n + 1;
        let note = if n > n_stab { " (stabilized)" } else { "" };
        row(&mut out, &format!("dim T_{n}^perp"), format!("{d}{note}"));
    }
    row(&mut out, "dim HA", fp.dim_ha.to_string());
    row(&mut out, "dim Reynolds", fp.dim_reynolds.to_string());
    row(&mut out, "dim Z0", fp.dim_z0.to_string());
    for (i, j, d) in &fp.product_dims {
        row(&mut out, &format!("dim T_{i}^perp * T_{j}^perp"), d.to_string());
    }
    for (m, d) in fp.power_dims.iter().enumerate() {
        row(&mut out, &format!("dim (T_1^perp)^{}", m + 1), d.to_string());
    }
    let simple = an.blocks.blocks.iter().filter(|b| b.simple).count();
    row(&mut out, "blocks", format!("{} ({simple} simple)", an.blocks.len()));
    if nmax > n_stab {
        let _ = writeln!(out, "note: the chain stabilizes at n = {n_stab}; later terms repeat it");
    }
    let _ = writeln!(out, "inclusions");
    row(&mut out, "Z0 in (T_1^perp)^2", yes_no(verdicts.z0_in_t1_squared).into());
    row(&mut out, "(T_1^perp)^2 in HA", yes_no(verdicts.t1_squared_in_ha).into());
    match verdicts.identity {
        Identity::Odd { z0_eq_t1_squared } => {
            row(&mut out, "Z0 = (T_1^perp)^2", yes_no(z0_eq_t1_squared).into());
        }
        Identity::CharTwo { z0_eq_t1_cubed, z0_eq_t1_t2 } => {
            row(&mut out, "Z0 = (T_1^perp)^3", yes_no(z0_eq_t1_cubed).into());
            row(&mut out, "Z0 = T_1^perp * T_2^perp", yes_no(z0_eq_t1_t2).into());
        }
    }
    let _ = writeln!(out, "verdict: {}", identity_verdict(verdicts));
    out
}

/// Side-by-side comparison. Only invariant entries count towards the verdict.
pub fn compare_report(left: (&str, &Fingerprint), right: (&str, &Fingerprint), diffs: &[Difference]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "A: {}: {}", left.0, left.1);
    let _ = writeln!(out, "B: {}: {}", right.0, right.1);
    if diffs.is_empty() {
        let _ = writeln!(out, "all invariant entries agree");
        if left.1.dim_a != right.1.dim_a || left.1.dim_ka != right.1.dim_ka {
            let _ = writeln!(out, "note: dim A and dim KA differ but are not invariants");
        }
        let _ = writeln!(out, "verdict: not distinguished");
    } else {
        let _ = writeln!(out, "differences");
        for d in diffs {
            let _ = writeln!(out, "  {:<24} {} vs {}", d.key, d.left, d.right);
        }
        let _ = writeln!(out, "verdict: distinguished (not derived equivalent)");
    }
    out
}

pub fn condense_report(name: &str, f: &FieldSpec, e: &[Scalar], corner: &Fingerprint, rows: &[CondenseRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {name} over {}", field_name(f));
    let _ = writeln!(out, "idempotent: {}", format_vector(f, e));
    let _ = writeln!(out, "condensed dims: A={} ZA={} KA={}", corner.dim_a, corner.dim_za, corner.dim_ka);
    let _ = writeln!(out, "condensed fingerprint: {corner}");
    let _ = writeln!(out, "  {:<4} {:<16} {:<16} equal", "n", "e*T_n^perp*e", "T_n(eAe)^perp");
    for r in rows {
        let _ = writeln!(out, "  {:<4} {:<16} {:<16} {}", r.n, r.image_dim, r.corner_dim, yes_no(r.equal));
    }
    let holds = rows.iter().all(|r| r.equal);
    let _ = writeln!(out, "verdict: condensation identity {}", if holds { "holds" } else { "fails" });
    out
}

pub fn blocks_report(name: &str, a: &Algebra, d: &BlockDecomposition) -> String {
    let f = a.field();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {name} over {}", field_name(f));
    let simple = d.blocks.iter().filter(|b| b.simple).count();
    let _ = writeln!(out, "blocks: {} ({simple} simple)", d.len());
    for (i, b) in d.blocks.iter().enumerate() {
        let kind = if b.simple { "simple" } else { "non-simple" };
        let _ = writeln!(out, "  block {}: dim {} {kind}", i + 1, b.dim);
        let _ = writeln!(out, "    idempotent: {}", format_vector(f, &b.idempotent));
    }
    out
}

pub fn oracle_report(name: &str, checks: &[OracleCheck]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "oracle for {name}");
    for c in checks {
        let _ = writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(out, "{} checks, {failed} failed", checks.len());
    out
}

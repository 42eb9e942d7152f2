//! The `.alg` presentation format.
//!
//! ```text
//! # truncated polynomial ring
//! algebra K2
//! field 2 1
//! dim 2
//! unit 1 0
//! form 0 1
//! sc 0 0 0 1
//! sc 0 1 1 1
//! sc 1 0 1 1
//! ```
//!
//! Directives come in a fixed order: `algebra`, `field`, then either an
//! explicit body (`dim`, `unit`, `form`, any number of `sc i j l value`) or a
//! single constructor line (`matrix d`, `trunc m`, `nakayama e L`,
//! `group REF`, `brauer star e m`, `brauer line e m`, or `brauer tree`
//! followed by `vertices n`, one `cyclic v: edges…` line per vertex and an
//! optional `exceptional v m`). Scalars are integers or, in extension
//! fields, coefficient lists `[c0 c1 …]`. Text after `#` is kept as a
//! comment.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error as ThisError;

use crate::algebra::Algebra;
use crate::brauer::{brauer_tree_algebra, BrauerTree};
use crate::builders::{group_algebra, matrix_algebra, nakayama_symmetric, trunc_poly, CayleyTable};
use crate::error::Error;
use crate::form::{validate_form, SymForm};
use crate::gfield::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    Semantic,
}

/// A parse failure with a 1-based position and a stable code such as
/// `index-out-of-range` or `duplicate-sc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub code: &'static str,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            DiagnosticKind::Syntax => "syntax",
            DiagnosticKind::Semantic => "semantic",
        };
        write!(f, "{}:{}: {kind} error [{}]: {}", self.line, self.col, self.code, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDecl {
    pub field: FieldSpec,
    /// Whether the modulus was written out (and so is serialized).
    pub explicit_modulus: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explicit {
    pub dim: usize,
    pub unit: Vec<Scalar>,
    pub form: Vec<Scalar>,
    /// Nonzero structure constants keyed by `(i, j, l)`.
    pub sc: BTreeMap<(usize, usize, usize), Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSpec {
    Star { e: usize, m: u32 },
    Line { e: usize, m: u32 },
    Inline { cyclic: Vec<Vec<usize>>, exceptional: usize, multiplicity: u32 },
}

impl TreeSpec {
    pub fn tree(&self) -> crate::error::Result<BrauerTree> {
        match self {
            TreeSpec::Star { e, m } => BrauerTree::star(*e, *m),
            TreeSpec::Line { e, m } => BrauerTree::line(*e, *m),
            TreeSpec::Inline { cyclic, exceptional, multiplicity } => {
                BrauerTree::new(cyclic.clone(), *exceptional, *multiplicity)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constructor {
    Matrix(usize),
    Trunc(usize),
    Nakayama {
        e: usize,
        len: usize,
    },
    /// A builtin group name or a path ending in `.cayley`, relative to the
    /// document's directory.
    Group(String),
    Brauer(TreeSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Explicit(Explicit),
    Constructor(Constructor),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub comments: Vec<String>,
    pub field: FieldDecl,
    pub body: Body,
}

#[derive(Debug, ThisError)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}:{diag}")]
    Parse { path: PathBuf, diag: Diagnostic },
    #[error(transparent)]
    Build(#[from] Error),
}

// ---------------------------------------------------------------- tokens

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Word(String),
    List(Vec<(String, usize)>),
    Colon,
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    col: usize,
}

#[derive(Debug, Clone)]
struct Stmt {
    line: usize,
    /// Column just past the last token, for "missing argument" positions.
    end_col: usize,
    toks: Vec<Tok>,
}

fn syntax(line: usize, col: usize, code: &'static str, message: impl Into<String>) -> Diagnostic {
    Diagnostic { kind: DiagnosticKind::Syntax, code, line, col, message: message.into() }
}

fn semantic(line: usize, col: usize, code: &'static str, message: impl Into<String>) -> Diagnostic {
    Diagnostic { kind: DiagnosticKind::Semantic, code, line, col, message: message.into() }
}

fn tokenize_line(line_no: usize, code: &str) -> Result<Vec<Tok>, Diagnostic> {
    let chars: Vec<char> = code.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == ':' {
            toks.push(Tok { kind: TokKind::Colon, col });
            i += 1;
        } else if c == ']' {
            return Err(syntax(line_no, col, "unbalanced-bracket", "`]` without `[`"));
        } else if c == '[' {
            let mut items = Vec::new();
            i += 1;
            loop {
                while i < chars.len() && chars[i].is_whitespace() {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(syntax(line_no, col, "unterminated-list", "missing `]`"));
                }
                if chars[i] == ']' {
                    i += 1;
                    break;
                }
                if chars[i] == '[' || chars[i] == ':' {
                    return Err(syntax(line_no, i + 1, "unexpected-token", "bad list entry"));
                }
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !"[]:".contains(chars[i]) {
                    i += 1;
                }
                items.push((chars[start..i].iter().collect(), start + 1));
            }
            toks.push(Tok { kind: TokKind::List(items), col });
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() && !"[]:".contains(chars[i]) {
                i += 1;
            }
            toks.push(Tok { kind: TokKind::Word(chars[start..i].iter().collect()), col });
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------- parser

const CONSTRUCTORS: &[&str] = &["matrix", "trunc", "nakayama", "group", "brauer"];
const DIRECTIVES: &[&str] = &[
    "algebra",
    "field",
    "dim",
    "unit",
    "form",
    "sc",
    "matrix",
    "trunc",
    "nakayama",
    "group",
    "brauer",
    "vertices",
    "cyclic",
    "exceptional",
];

struct Cursor<'a> {
    stmt: &'a Stmt,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(stmt: &'a Stmt) -> Self {
        Cursor { stmt, pos: 1 }
    }

    fn missing(&self, what: &str) -> Diagnostic {
        syntax(self.stmt.line, self.stmt.end_col, "missing-argument", format!("expected {what}"))
    }

    fn next(&mut self, what: &str) -> Result<&'a Tok, Diagnostic> {
        let tok = self.stmt.toks.get(self.pos).ok_or_else(|| self.missing(what))?;
        self.pos += 1;
        Ok(tok)
    }

    fn word(&mut self, what: &str) -> Result<(&'a str, usize), Diagnostic> {
        let line = self.stmt.line;
        let tok = self.next(what)?;
        match &tok.kind {
            TokKind::Word(w) => Ok((w.as_str(), tok.col)),
            _ => Err(syntax(line, tok.col, "unexpected-token", format!("expected {what}"))),
        }
    }

    fn uint(&mut self, what: &str) -> Result<(usize, usize), Diagnostic> {
        let line = self.stmt.line;
        let (w, col) = self.word(what)?;
        w.parse::<usize>()
            .map(|v| (v, col))
            .map_err(|_| syntax(line, col, "expected-integer", format!("expected {what}, found `{w}`")))
    }

    fn colon(&mut self) -> Result<(), Diagnostic> {
        let line = self.stmt.line;
        let tok = self.next("`:`")?;
        match tok.kind {
            TokKind::Colon => Ok(()),
            _ => Err(syntax(line, tok.col, "unexpected-token", "expected `:`")),
        }
    }

    fn remaining(&self) -> &'a [Tok] {
        &self.stmt.toks[self.pos.min(self.stmt.toks.len())..]
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        match self.stmt.toks.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(syntax(self.stmt.line, t.col, "extra-argument", "unexpected extra token")),
        }
    }
}

fn keyword(stmt: &Stmt) -> Result<(&str, usize), Diagnostic> {
    let tok = &stmt.toks[0];
    match &tok.kind {
        TokKind::Word(w) if DIRECTIVES.contains(&w.as_str()) => Ok((w.as_str(), tok.col)),
        TokKind::Word(w) => Err(syntax(stmt.line, tok.col, "unknown-directive", format!("unknown directive `{w}`"))),
        _ => Err(syntax(stmt.line, tok.col, "unknown-directive", "a line must start with a directive")),
    }
}

fn parse_scalar(f: &FieldSpec, line: usize, tok: &Tok) -> Result<Scalar, Diagnostic> {
    match &tok.kind {
        TokKind::Word(w) => w
            .parse::<i64>()
            .map(|n| f.from_int(n))
            .map_err(|_| syntax(line, tok.col, "expected-scalar", format!("expected a scalar, found `{w}`"))),
        TokKind::List(items) => {
            if items.is_empty() || items.len() > f.k() as usize {
                return Err(semantic(
                    line,
                    tok.col,
                    "bad-scalar",
                    format!("coefficient list must have 1 to {} entries", f.k()),
                ));
            }
            let mut coeffs = Vec::with_capacity(items.len());
            for (text, col) in items {
                let c: u32 = text
                    .parse()
                    .map_err(|_| syntax(line, *col, "expected-integer", format!("bad coefficient `{text}`")))?;
                if c >= f.p() {
                    return Err(semantic(line, *col, "bad-scalar", format!("coefficient {c} ≥ p = {}", f.p())));
                }
                coeffs.push(c);
            }
            f.from_coeffs(&coeffs).map_err(|e| semantic(line, tok.col, "bad-scalar", e.to_string()))
        }
        TokKind::Colon => Err(syntax(line, tok.col, "expected-scalar", "expected a scalar")),
    }
}

fn parse_vector(f: &FieldSpec, stmt: &Stmt, dim: usize, what: &str) -> Result<Vec<Scalar>, Diagnostic> {
    let toks = &stmt.toks[1..];
    if toks.len() != dim {
        return Err(semantic(
            stmt.line,
            stmt.toks[0].col,
            "length-mismatch",
            format!("`{what}` needs {dim} scalars, found {}", toks.len()),
        ));
    }
    toks.iter().map(|t| parse_scalar(f, stmt.line, t)).collect()
}

fn parse_field(stmt: &Stmt) -> Result<FieldDecl, Diagnostic> {
    let mut cur = Cursor::new(stmt);
    let (p, _) = cur.uint("the characteristic p")?;
    let (k, _) = cur.uint("the degree k")?;
    let mut modulus = None;
    if !cur.remaining().is_empty() {
        let (w, col) = cur.word("`modulus`")?;
        if w != "modulus" {
            return Err(syntax(stmt.line, col, "unexpected-token", "expected `modulus`"));
        }
        let mut coeffs = Vec::new();
        while !cur.remaining().is_empty() {
            coeffs.push(cur.uint("a modulus coefficient")?.0 as u32);
        }
        modulus = Some(coeffs);
    }
    cur.finish()?;
    let col = stmt.toks[0].col;
    let (p, k) = match (u32::try_from(p), u32::try_from(k)) {
        (Ok(p), Ok(k)) => (p, k),
        _ => return Err(semantic(stmt.line, col, "invalid-field", "field parameters too large")),
    };
    let explicit_modulus = modulus.is_some();
    let field = FieldSpec::new(p, k, modulus).map_err(|e| semantic(stmt.line, col, "invalid-field", e.to_string()))?;
    Ok(FieldDecl { field, explicit_modulus })
}

fn positive(stmt: &Stmt, col: usize, v: usize, what: &str) -> Result<usize, Diagnostic> {
    if v == 0 {
        Err(semantic(stmt.line, col, "bad-parameters", format!("{what} must be positive")))
    } else {
        Ok(v)
    }
}

fn multiplicity(stmt: &Stmt, col: usize, v: usize) -> Result<u32, Diagnostic> {
    match u32::try_from(v) {
        Ok(m) if m > 0 => Ok(m),
        _ => Err(semantic(stmt.line, col, "bad-parameters", "multiplicity must be a positive integer")),
    }
}

/// Parses everything after `brauer`; consumes the inline tree lines when the
/// form is `brauer tree`.
fn parse_brauer(stmts: &[Stmt], idx: &mut usize) -> Result<TreeSpec, Diagnostic> {
    let stmt = &stmts[*idx];
    *idx += 1;
    let mut cur = Cursor::new(stmt);
    let (shape, shape_col) = cur.word("`star`, `line` or `tree`")?;
    match shape {
        "star" | "line" => {
            let (e, ecol) = cur.uint("the edge count e")?;
            let (m, mcol) = cur.uint("the multiplicity m")?;
            cur.finish()?;
            let e = positive(stmt, ecol, e, "edge count")?;
            let m = multiplicity(stmt, mcol, m)?;
            Ok(if shape == "star" { TreeSpec::Star { e, m } } else { TreeSpec::Line { e, m } })
        }
        "tree" => {
            cur.finish()?;
            let vstmt = stmts.get(*idx).ok_or_else(|| {
                semantic(stmt.line, stmt.end_col, "missing-vertices", "`brauer tree` needs a `vertices` line")
            })?;
            let (kw, kcol) = keyword(vstmt)?;
            if kw != "vertices" {
                return Err(syntax(vstmt.line, kcol, "unexpected-directive", "expected `vertices`"));
            }
            let mut vcur = Cursor::new(vstmt);
            let (n, ncol) = vcur.uint("the vertex count")?;
            vcur.finish()?;
            if n < 2 {
                return Err(semantic(vstmt.line, ncol, "bad-tree", "a tree needs at least two vertices"));
            }
            *idx += 1;
            let mut cyclic: Vec<Option<Vec<usize>>> = vec![None; n];
            for _ in 0..n {
                let Some(cstmt) = stmts.get(*idx) else {
                    let last = &stmts[*idx - 1];
                    return Err(semantic(last.line, last.end_col, "missing-cyclic", "missing `cyclic` line"));
                };
                let (kw, kcol) = keyword(cstmt)?;
                if kw != "cyclic" {
                    return Err(semantic(cstmt.line, kcol, "missing-cyclic", "expected a `cyclic` line"));
                }
                let mut ccur = Cursor::new(cstmt);
                let (v, vcol) = ccur.uint("a vertex")?;
                ccur.colon()?;
                let mut edges = Vec::new();
                while !ccur.remaining().is_empty() {
                    let (e, ecol) = ccur.uint("an edge")?;
                    if e + 1 >= n {
                        return Err(semantic(cstmt.line, ecol, "index-out-of-range", format!("edge {e} out of range")));
                    }
                    edges.push(e);
                }
                if v >= n {
                    return Err(semantic(cstmt.line, vcol, "index-out-of-range", format!("vertex {v} out of range")));
                }
                if cyclic[v].is_some() {
                    return Err(semantic(cstmt.line, vcol, "duplicate-vertex", format!("vertex {v} listed twice")));
                }
                cyclic[v] = Some(edges);
                *idx += 1;
            }
            let cyclic: Vec<Vec<usize>> = cyclic.into_iter().map(Option::unwrap).collect();
            let mut exceptional = 0;
            let mut mult = 1;
            let mut anchor = (stmts[*idx - 1].line, 1);
            if let Some(estmt) = stmts.get(*idx) {
                if keyword(estmt)?.0 == "exceptional" {
                    let mut ecur = Cursor::new(estmt);
                    let (v, vcol) = ecur.uint("the exceptional vertex")?;
                    let (m, mcol) = ecur.uint("the multiplicity")?;
                    ecur.finish()?;
                    if v >= n {
                        return Err(semantic(
                            estmt.line,
                            vcol,
                            "index-out-of-range",
                            format!("vertex {v} out of range"),
                        ));
                    }
                    exceptional = v;
                    mult = multiplicity(estmt, mcol, m)?;
                    anchor = (estmt.line, 1);
                    *idx += 1;
                }
            }
            let spec = TreeSpec::Inline { cyclic, exceptional, multiplicity: mult };
            spec.tree().map_err(|e| semantic(anchor.0, anchor.1, "bad-tree", e.to_string()))?;
            Ok(spec)
        }
        other => Err(syntax(stmt.line, shape_col, "unexpected-token", format!("unknown tree shape `{other}`"))),
    }
}

fn parse_constructor(stmts: &[Stmt], idx: &mut usize) -> Result<Constructor, Diagnostic> {
    let stmt = &stmts[*idx];
    let (kw, _) = keyword(stmt)?;
    if kw == "brauer" {
        return parse_brauer(stmts, idx).map(Constructor::Brauer);
    }
    *idx += 1;
    let mut cur = Cursor::new(stmt);
    let ctor = match kw {
        "matrix" => {
            let (d, col) = cur.uint("the matrix size")?;
            Constructor::Matrix(positive(stmt, col, d, "matrix size")?)
        }
        "trunc" => {
            let (m, col) = cur.uint("the truncation degree")?;
            Constructor::Trunc(positive(stmt, col, m, "truncation degree")?)
        }
        "nakayama" => {
            let (e, ecol) = cur.uint("the vertex count e")?;
            let (len, lcol) = cur.uint("the Loewy length L")?;
            let e = positive(stmt, ecol, e, "vertex count")?;
            let len = positive(stmt, lcol, len, "Loewy length")?;
            if len % e != 1 % e {
                return Err(semantic(stmt.line, lcol, "bad-parameters", format!("L = {len} is not 1 mod e = {e}")));
            }
            Constructor::Nakayama { e, len }
        }
        "group" => {
            let (r, _) = cur.word("a group name or `.cayley` path")?;
            Constructor::Group(r.to_string())
        }
        _ => unreachable!("caller checks constructor keywords"),
    };
    cur.finish()?;
    Ok(ctor)
}

fn parse_explicit(f: &FieldSpec, stmts: &[Stmt], idx: &mut usize) -> Result<Explicit, Diagnostic> {
    let dstmt = &stmts[*idx];
    let mut cur = Cursor::new(dstmt);
    let (dim, _) = cur.uint("the dimension")?;
    cur.finish()?;
    *idx += 1;

    let expect = |name: &'static str, code: &'static str, idx: &mut usize| -> Result<Vec<Scalar>, Diagnostic> {
        let Some(stmt) = stmts.get(*idx) else {
            let last = &stmts[*idx - 1];
            return Err(semantic(last.line, last.end_col, code, format!("missing `{name}` line")));
        };
        let (kw, col) = keyword(stmt)?;
        if kw != name {
            return Err(semantic(stmt.line, col, code, format!("expected `{name}`, found `{kw}`")));
        }
        *idx += 1;
        parse_vector(f, stmt, dim, name)
    };
    let unit = expect("unit", "missing-unit", idx)?;
    let form = expect("form", "missing-form", idx)?;

    let mut sc = BTreeMap::new();
    let mut seen = std::collections::HashSet::new();
    while let Some(stmt) = stmts.get(*idx) {
        let (kw, col) = keyword(stmt)?;
        if kw != "sc" {
            let code = if CONSTRUCTORS.contains(&kw) { "conflicting-body" } else { "unexpected-directive" };
            return Err(semantic(stmt.line, col, code, format!("`{kw}` cannot follow an explicit body")));
        }
        let mut cur = Cursor::new(stmt);
        let mut ijl = [0usize; 3];
        for (slot, what) in ijl.iter_mut().zip(["index i", "index j", "index l"]) {
            let (v, vcol) = cur.uint(what)?;
            if v >= dim {
                return Err(semantic(stmt.line, vcol, "index-out-of-range", format!("index {v} ≥ dim {dim}")));
            }
            *slot = v;
        }
        let tok = cur.next("a scalar")?;
        let value = parse_scalar(f, stmt.line, tok)?;
        cur.finish()?;
        let key = (ijl[0], ijl[1], ijl[2]);
        if !seen.insert(key) {
            return Err(semantic(
                stmt.line,
                col,
                "duplicate-sc",
                format!("duplicate entry sc {} {} {}", key.0, key.1, key.2),
            ));
        }
        if !value.is_zero() {
            sc.insert(key, value);
        }
        *idx += 1;
    }
    Ok(Explicit { dim, unit, form, sc })
}

pub fn parse(text: &str) -> Result<AlgebraDocument, Diagnostic> {
    let mut comments = Vec::new();
    let mut stmts = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (code, comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], Some(raw[pos + 1..].trim())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            comments.push(c.to_string());
        }
        let toks = tokenize_line(line, code)?;
        if !toks.is_empty() {
            let end_col = code.trim_end().chars().count() + 1;
            stmts.push(Stmt { line, end_col, toks });
        }
    }

    let Some(first) = stmts.first() else {
        return Err(semantic(1, 1, "missing-header", "empty document"));
    };
    let (kw, col) = keyword(first)?;
    if kw != "algebra" {
        return Err(semantic(first.line, col, "missing-header", "the first directive must be `algebra NAME`"));
    }
    let mut cur = Cursor::new(first);
    let name = cur.word("a name")?.0.to_string();
    cur.finish()?;

    let Some(fstmt) = stmts.get(1) else {
        return Err(semantic(first.line, first.end_col, "missing-field", "missing `field` line"));
    };
    let (kw, col) = keyword(fstmt)?;
    if kw != "field" {
        let code = if kw == "algebra" { "duplicate-directive" } else { "missing-field" };
        return Err(semantic(fstmt.line, col, code, "the second directive must be `field p k`"));
    }
    let field = parse_field(fstmt)?;

    let mut idx = 2;
    let Some(bstmt) = stmts.get(idx) else {
        return Err(semantic(fstmt.line, fstmt.end_col, "missing-body", "no presentation follows the field"));
    };
    let (kw, col) = keyword(bstmt)?;
    let body = match kw {
        "dim" => Body::Explicit(parse_explicit(&field.field, &stmts, &mut idx)?),
        k if CONSTRUCTORS.contains(&k) => Body::Constructor(parse_constructor(&stmts, &mut idx)?),
        "unit" | "form" | "sc" => {
            return Err(semantic(bstmt.line, col, "missing-dim", "explicit presentations start with `dim d`"));
        }
        "algebra" | "field" => {
            return Err(semantic(bstmt.line, col, "duplicate-directive", format!("duplicate `{kw}`")));
        }
        _ => return Err(syntax(bstmt.line, col, "unexpected-directive", format!("unexpected `{kw}`"))),
    };
    if let Some(extra) = stmts.get(idx) {
        let (kw, col) = keyword(extra)?;
        let code = match kw {
            "algebra" | "field" => "duplicate-directive",
            "dim" | "unit" | "form" | "sc" => "conflicting-body",
            k if CONSTRUCTORS.contains(&k) => "conflicting-body",
            _ => "unexpected-directive",
        };
        return Err(semantic(extra.line, col, code, format!("unexpected `{kw}` after the presentation")));
    }
    Ok(AlgebraDocument { name, comments, field, body })
}

/// Whitespace-separated scalars, as accepted on `unit`/`form` lines.
pub fn parse_scalars(f: &FieldSpec, text: &str) -> Result<Vec<Scalar>, Diagnostic> {
    tokenize_line(1, text)?.iter().map(|t| parse_scalar(f, 1, t)).collect()
}

// ------------------------------------------------------------- serializer

pub fn serialize(doc: &AlgebraDocument) -> String {
    let f = &doc.field.field;
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    for c in &doc.comments {
        line(if c.is_empty() { "#".to_string() } else { format!("# {c}") });
    }
    line(format!("algebra {}", doc.name));
    let mut field = format!("field {} {}", f.p(), f.k());
    if doc.field.explicit_modulus {
        field.push_str(" modulus");
        for c in f.modulus() {
            field.push_str(&format!(" {c}"));
        }
    }
    line(field);
    let scalars = |xs: &[Scalar]| -> String { xs.iter().map(|&x| format!(" {}", f.format_scalar(x))).collect() };
    match &doc.body {
        Body::Explicit(ex) => {
            line(format!("dim {}", ex.dim));
            line(format!("unit{}", scalars(&ex.unit)));
            line(format!("form{}", scalars(&ex.form)));
            for (&(i, j, l), &v) in &ex.sc {
                line(format!("sc {i} {j} {l} {}", f.format_scalar(v)));
            }
        }
        Body::Constructor(ctor) => match ctor {
            Constructor::Matrix(d) => line(format!("matrix {d}")),
            Constructor::Trunc(m) => line(format!("trunc {m}")),
            Constructor::Nakayama { e, len } => line(format!("nakayama {e} {len}")),
            Constructor::Group(r) => line(format!("group {r}")),
            Constructor::Brauer(TreeSpec::Star { e, m }) => line(format!("brauer star {e} {m}")),
            Constructor::Brauer(TreeSpec::Line { e, m }) => line(format!("brauer line {e} {m}")),
            Constructor::Brauer(TreeSpec::Inline { cyclic, exceptional, multiplicity }) => {
                line("brauer tree".into());
                line(format!("vertices {}", cyclic.len()));
                for (v, edges) in cyclic.iter().enumerate() {
                    let es: String = edges.iter().map(|e| format!(" {e}")).collect();
                    line(format!("cyclic {v}:{es}"));
                }
                line(format!("exceptional {exceptional} {multiplicity}"));
            }
        },
    }
    out
}

// ----------------------------------------------------------- instantiation

impl AlgebraDocument {
    pub fn field(&self) -> &FieldSpec {
        &self.field.field
    }

    /// Builds the algebra and its form. `base_dir` resolves `.cayley` paths.
    pub fn build(&self, base_dir: Option<&Path>) -> Result<(Algebra, SymForm), LoadError> {
        let f = self.field.field.clone();
        let built = match &self.body {
            Body::Explicit(ex) => {
                let sc: Vec<_> = ex.sc.iter().map(|(&(i, j, l), &v)| (i, j, l, v)).collect();
                let a = Algebra::new(f, ex.dim, &sc, ex.unit.clone())?;
                let form = validate_form(&a, &ex.form)?;
                (a, form)
            }
            Body::Constructor(Constructor::Matrix(d)) => matrix_algebra(*d, f)?,
            Body::Constructor(Constructor::Trunc(m)) => trunc_poly(*m, f)?,
            Body::Constructor(Constructor::Nakayama { e, len }) => nakayama_symmetric(*e, *len, f)?,
            Body::Constructor(Constructor::Brauer(spec)) => brauer_tree_algebra(&spec.tree()?, f)?,
            Body::Constructor(Constructor::Group(r)) => {
                let table = if r.ends_with(".cayley") {
                    let path = base_dir.map_or_else(|| PathBuf::from(r), |d| d.join(r));
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| LoadError::Io { path: path.clone(), message: e.to_string() })?;
                    CayleyTable::parse(&text)?
                } else {
                    CayleyTable::builtin(r).ok_or_else(|| {
                        let known: Vec<_> = CayleyTable::builtin_names().collect();
                        Error::BadParameters(format!("unknown group `{r}` (builtin: {})", known.join(", ")))
                    })?
                };
                group_algebra(&table, f)?
            }
        };
        Ok(built)
    }
}

/// Reads, parses and builds a `.alg` file.
pub fn load_file(path: &Path) -> Result<(AlgebraDocument, Algebra, SymForm), LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.to_path_buf(), message: e.to_string() })?;
    let doc = parse(&text).map_err(|diag| LoadError::Parse { path: path.to_path_buf(), diag })?;
    let (a, form) = doc.build(path.parent())?;
    Ok((doc, a, form))
}

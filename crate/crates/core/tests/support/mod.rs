#![allow(dead_code)]

pub mod brute;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::seq::SliceRandom;
use rand::Rng;
use symkuls::algebra::{Algebra, Element};
use symkuls::builders::BrauerTree;
use symkuls::form::SymForm;
use symkuls::speclang::{load_file, AlgebraDocument};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn corpus_path(name: &str) -> PathBuf {
    corpus_dir().join(format!("{name}.alg"))
}

/// Every `.alg` file in the corpus, sorted by file name.
pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "alg"))
        .collect();
    files.sort();
    files
}

pub struct Entry {
    pub stem: String,
    pub doc: AlgebraDocument,
    pub algebra: Algebra,
    pub form: SymForm,
}

pub fn load(path: &Path) -> Entry {
    let (doc, algebra, form) = load_file(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
    Entry { stem, doc, algebra, form }
}

pub fn load_named(name: &str) -> Entry {
    load(&corpus_path(name))
}

pub fn corpus() -> Vec<Entry> {
    corpus_files().iter().map(|p| load(p)).collect()
}

pub fn symkuls(args: &[&str]) -> Output {
    symkuls_env(args, &[])
}

pub fn symkuls_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symkuls"));
    cmd.args(args).current_dir(corpus_dir()).env_remove("SYMKULS_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run symkuls")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// A uniformly random labelled tree with `e` edges and random cyclic
/// orderings, with a random exceptional vertex.
pub fn random_tree<R: Rng>(rng: &mut R, e: usize, m: u32) -> BrauerTree {
    let n = e + 1;
    let mut cyclic: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        let edge = v - 1;
        cyclic[parent].push(edge);
        cyclic[v].push(edge);
    }
    for c in &mut cyclic {
        c.shuffle(rng);
    }
    let exceptional = rng.gen_range(0..n);
    BrauerTree::new(cyclic, exceptional, m).expect("random tree is valid")
}

/// A random element of the centre that is a unit.
pub fn random_central_unit<R: Rng>(rng: &mut R, a: &Algebra) -> Element {
    let f = a.field();
    let centre = a.centre();
    loop {
        let coords: Vec<_> = (0..centre.dim()).map(|_| symkuls::gfield::Scalar(rng.gen_range(0..f.q()))).collect();
        let u = centre.combine(f, &coords);
        if a.left_mul(&u).rank(f) == a.dim() {
            return u;
        }
    }
}

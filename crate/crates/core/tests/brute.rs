mod support;

use symkuls::fingerprint::fingerprint;
use symkuls::oracle::element_count;

use support::brute::Brute;
use support::corpus;

/// Every corpus algebra small enough for the quadratic radical search.
#[test]
fn fingerprints_match_enumeration() {
    let mut checked = 0;
    for e in corpus() {
        if element_count(e.algebra.field().q(), e.algebra.dim()) > 1 << 12 {
            continue;
        }
        let tool = fingerprint(&e.algebra, &e.form).unwrap();
        let brute = Brute::new(&e.algebra, &e.form).fingerprint();
        assert_eq!(tool, brute, "{}", e.stem);
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} algebras checked");
}

#[test]
fn enumeration_counts_blocks() {
    for (name, simple) in
        [("c2_gf3", vec![true, true]), ("c2_gf2", vec![false]), ("m2_plus_trunc2_gf3", vec![false, true])]
    {
        let e = support::load_named(name);
        let b = Brute::new(&e.algebra, &e.form);
        let mut flags: Vec<bool> = b.blocks(&b.centre()).into_iter().map(|(_, s)| s).collect();
        let mut want = simple.clone();
        flags.sort();
        want.sort();
        assert_eq!(flags, want, "{name}");
    }
}

mod common;

use curralg::catalog::{self, CatalogItem};
use curralg::comm::comm_invariants;
use curralg::forms::{
    invariant_forms, is_invariant, magnetic_check, pelc_exactness_witness, radical_probe,
};
use curralg::io::{comm_to_json, lie_to_json, parse_algebra, parse_comm, parse_lie, AlgebraFile};
use curralg::lie::{cohomology_table, KModule, LieAlgebra};
use curralg::{Error, Scalar};

fn export(item: &CatalogItem) -> String {
    match item {
        CatalogItem::Lie(e) => lie_to_json(&e.algebra),
        CatalogItem::Comm(a) => comm_to_json(a),
    }
}

#[test]
fn every_listed_entry_round_trips_byte_identically() {
    for name in catalog::LISTING {
        let item = catalog::lookup(name).unwrap();
        let text = export(&item);
        let again = match parse_algebra(&text, name).unwrap() {
            AlgebraFile::Lie(l) => lie_to_json(&l),
            AlgebraFile::Comm(a) => comm_to_json(&a),
        };
        assert_eq!(again, text, "{name}");
    }
}

#[test]
fn reingested_oscillator_has_the_same_table() {
    let osc = catalog::oscillator().algebra;
    let back = parse_lie(&lie_to_json(&osc), "osc").unwrap();
    let t = |l: &LieAlgebra| {
        cohomology_table(l, &KModule::trivial(l, 1)).iter().map(|d| (d.c, d.z, d.b, d.h)).collect::<Vec<_>>()
    };
    assert_eq!(t(&back), t(&osc));
}

#[test]
fn oscillator_brackets() {
    let osc = catalog::oscillator().algebra;
    assert_eq!(osc.dim(), 4);
    let names = osc.basis_names();
    let idx = |n: &str| names.iter().position(|b| b == n).unwrap();
    let (x, y, c, d) = (idx("x"), idx("y"), idx("c"), idx("d"));
    let e = |i: usize| curralg::linalg::unit_vec(4, i);
    assert_eq!(osc.bracket(&e(x), &e(y)), e(c));
    assert_eq!(osc.bracket(&e(d), &e(x)), e(x));
    let neg_y: Vec<Scalar> = e(y).iter().map(|s| -s).collect();
    assert_eq!(osc.bracket(&e(d), &e(y)), neg_y);
    assert!(osc.bracket(&e(d), &e(c)).iter().all(|s| s.is_zero()));
}

#[test]
fn pelc_witnesses_beyond_acceptance() {
    for m in 1..=3 {
        assert!(pelc_exactness_witness(m).unwrap().ok(), "m = {m}");
    }
    assert!(catalog::pelc(4).unwrap().sym_form("kappa").is_none());
    assert!(matches!(catalog::pelc(0), Err(Error::InvalidParameter(_))));
}

#[test]
fn cotangent_and_magnetic_extensions() {
    let cot = catalog::lookup_lie("cotangent:heisenberg").unwrap();
    assert_eq!(cot.algebra.dim(), 6);
    assert!(is_invariant(&cot.algebra, cot.sym_form("kappa").unwrap()));
    for (_, e) in curralg::battery::lie_battery() {
        let r = magnetic_check(&e.algebra, None).unwrap();
        assert!(r.kappa_invariant && r.gamma_kappa_exact, "{}", e.algebra.name());
    }
    // A 3-form that is not closed is rejected.
    // Every 3-form on the 4-dimensional oscillator is closed, so use Pelc's algebra.
    let base = catalog::lookup_lie("pelc:6").unwrap().algebra;
    let d3 = curralg::lie::ce_differential(&base, &KModule::trivial(&base, 1), 3).into_matrix();
    let open = (0..d3.cols()).find(|&i| !curralg::linalg::is_zero_vec(&d3.column(i))).unwrap();
    let twist = curralg::linalg::unit_vec(d3.cols(), open);
    assert!(matches!(catalog::twisted_magnetic(&base, Some(&twist)), Err(Error::Precondition(_))));
}

#[test]
fn comm_catalog_facts() {
    let products = |a: &curralg::comm::CommAlgebra| {
        let v: serde_json::Value = serde_json::from_str(&comm_to_json(a)).unwrap();
        v["products"].clone()
    };
    assert_eq!(products(&catalog::trunc_poly(2).unwrap()), products(&catalog::dual_numbers()));
    assert_eq!(comm_invariants(&catalog::function_alg(2).unwrap()).unwrap().omega_dim(), 0);
    assert_eq!(comm_invariants(&catalog::trunc_poly(4).unwrap()).unwrap().omega_dim(), 3);
    assert!(matches!(catalog::trunc_poly(0), Err(Error::InvalidParameter(_))));
}

#[test]
fn invariant_form_dims_match_the_oracle() {
    for name in ["heisenberg", "oscillator", "sl2", "pelc:6", "cotangent:heisenberg"] {
        let k = catalog::lookup_lie(name).unwrap().algebra;
        assert_eq!(invariant_forms(&k).unwrap().dim(), common::invariant_form_dim(&k), "{name}");
    }
}

#[test]
fn radical_probe_on_oscillator_finds_a_nondegenerate_form() {
    let r = radical_probe(&catalog::oscillator().algebra).unwrap();
    assert_eq!(r.common_radical_dim, 0);
    assert_eq!(r.best_rank, 4);
    assert!(r.equality);
}

#[test]
fn malformed_files_are_rejected_with_context() {
    let missing = r#"{"kind":"commutative","name":"a","dim":1,"basis":["1"]}"#;
    let e = parse_comm(missing, "a.json").unwrap_err();
    assert!(e.to_string().contains("a.json") && e.to_string().contains("unit"));
    let range = r#"{"kind":"lie","name":"l","dim":2,"brackets":{"0,1":{"5":"1"}}}"#;
    assert!(matches!(parse_lie(range, "l"), Err(Error::IndexOutOfRange(_))));
    let scalar = r#"{"kind":"lie","name":"l","dim":2,"brackets":{"0,1":{"1":"1/0"}}}"#;
    assert!(matches!(parse_lie(scalar, "l"), Err(Error::Parse(_))));
    // (aa)b = bb = 0 but a(ab) = aa = b.
    let nonassoc = r#"{"kind":"commutative","name":"a","dim":3,"unit":["1","0","0"],
        "products":{"0,0":{"0":"1"},"0,1":{"1":"1"},"0,2":{"2":"1"},"1,1":{"2":"1"},"1,2":{"1":"1"}}}"#;
    assert!(parse_comm(nonassoc, "a").is_err());
}

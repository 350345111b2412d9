//! One test per acceptance criterion. Each prints a single PASS/FAIL line and
//! then asserts, so a failure is visible both in the summary and the log.

mod common;

use common::report;
use curralg::battery::{self, BatteryPair};
use curralg::catalog;
use curralg::comm::comm_invariants;
use curralg::current::{
    coupled_cocycles_exist, coupled_construct, cycle_report, gamma_primitive, h2_sequence,
    homology_count, random_trials, CurrentAlgebra,
};
use curralg::forms::{
    centroid, exact_forms, invariant_forms, koszul, pelc_exactness_witness,
    pelc_with_flipped_eta, transfer_sequence,
};
use curralg::lie::{cohomology_table, KModule, LieAlgebra};
use curralg::linalg::{self, Subspace};
use std::time::{Duration, Instant};

fn currents() -> Vec<(BatteryPair, CurrentAlgebra)> {
    battery::pairs()
        .into_iter()
        .map(|p| {
            let cur = CurrentAlgebra::new(&p.a, p.lie()).expect("battery pair builds");
            (p, cur)
        })
        .collect()
}

fn trivial_table(l: &LieAlgebra) -> Vec<(usize, usize, usize, usize)> {
    cohomology_table(l, &KModule::trivial(l, 1)).iter().map(|d| (d.c, d.h, d.b, d.z)).collect()
}

#[test]
fn criterion_01_oscillator_table() {
    let t = Instant::now();
    let osc = catalog::oscillator().algebra;
    let got = trivial_table(&osc);
    let elapsed = t.elapsed();
    let expected = vec![(1, 1, 0, 1), (4, 1, 0, 1), (6, 0, 3, 3), (4, 1, 3, 4), (1, 1, 0, 1)];
    let oracle: Vec<_> = (0..=4)
        .map(|p| {
            let (c, z, b, h) = common::ce_dims(&osc, p);
            (c, h, b, z)
        })
        .collect();
    let pass = got == expected && oracle == expected && elapsed < Duration::from_secs(1);
    report(1, pass, &format!("oscillator (C,H,B,Z) for p=0..4: {got:?} in {elapsed:?}"));
    assert!(pass);
}

#[test]
fn criterion_02_oscillator_invariants() {
    let t = Instant::now();
    let e = catalog::oscillator();
    let k = &e.algebra;
    let forms = invariant_forms(k).unwrap();
    let (k1, k2) = (e.sym_form("kappa1").unwrap(), e.sym_form("kappa2").unwrap());
    let span = Subspace::span(&[k1.to_vec(), k2.to_vec()], forms.space.ambient_dim()).unwrap();
    let g1 = koszul(k, k1).unwrap();
    let g2 = koszul(k, k2).unwrap();
    let cent = centroid(k, Some(k2)).unwrap();
    let checks = [
        forms.dim() == 2,
        common::invariant_form_dim(k) == 2,
        span == forms.space,
        forms.quotient_forms.contains(k1).unwrap(),
        linalg::is_zero_vec(&g1),
        !linalg::is_zero_vec(&g2) && forms.b3.contains(&g2).unwrap(),
        forms.exact == forms.space,
        forms.z3_gamma.dim() == 1 && forms.b3_gamma.dim() == 1,
        cent.cent_red == 1,
    ];
    let elapsed = t.elapsed();
    let pass = checks.iter().all(|&c| c) && elapsed < Duration::from_secs(1);
    report(
        2,
        pass,
        &format!(
            "dim Sym2^k={} exact={} Z3_G={} B3_G={} Cent_red={} checks={checks:?} in {elapsed:?}",
            forms.dim(),
            forms.exact.dim(),
            forms.z3_gamma.dim(),
            forms.b3_gamma.dim(),
            cent.cent_red
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_03_gamma_a_image_and_kernel() {
    let t = Instant::now();
    // dim Ω¹: n − 1 for 𝕂[t]/(tⁿ), zero for products of copies of 𝕂
    // (𝕂[ℤ/2] ≅ 𝕂 × 𝕂 in characteristic 0).
    let omega_dims = [0, 1, 2, 3, 0, 0, 0];
    let mut lines = Vec::new();
    let mut pass = true;
    for ((name, a), expect) in battery::comm_battery().into_iter().zip(omega_dims) {
        let inv = comm_invariants(&a).unwrap();
        let omega = inv.omega_dim();
        let image_full = linalg::image(&inv.gamma) == Subspace::full(omega);
        let kernel_t0 = linalg::kernel(&inv.gamma) == inv.t0;
        let ok = omega == expect && image_full && kernel_t0;
        pass &= ok;
        lines.push(format!("{name}:{}", if ok { "ok" } else { "BAD" }));
    }
    let elapsed = t.elapsed();
    pass &= elapsed < Duration::from_secs(5);
    report(3, pass, &format!("im = Omega1, ker = T0 for [{}] in {elapsed:?}", lines.join(" ")));
    assert!(pass);
}

#[test]
fn criterion_04_boundary_generators() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut n = 0;
    for (p, cur) in currents() {
        let r = cycle_report(&cur).unwrap();
        let oracle = common::b2_dim(&cur.g);
        if !(r.b2_matches() && r.b2.dim() == oracle) {
            bad.push(p.label());
        }
        n += 1;
    }
    let elapsed = t.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(120);
    report(4, pass, &format!("four-family span = im boundary on {n} pairs, mismatches {bad:?}, {elapsed:?}"));
    assert!(pass);
}

#[test]
fn criterion_05_cocycle_criterion_agreement() {
    let mut total = 0;
    let mut cocycles = 0;
    let mut failures = Vec::new();
    for (i, (p, cur)) in currents().into_iter().enumerate() {
        match random_trials(&cur, 100, 1000 + i as u64) {
            Ok(s) if s.agreements == s.trials && s.trials == 100 => {
                total += s.trials;
                cocycles += s.cocycles;
            }
            Ok(s) => failures.push(format!("{}: {s:?}", p.label())),
            Err(e) => failures.push(format!("{}: {e}", p.label())),
        }
    }
    let pass = failures.is_empty();
    report(
        5,
        pass,
        &format!("{total} random triples, {cocycles} cocycles, 100% agreement; failures {failures:?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_06_exact_sequence() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut n = 0;
    for (p, cur) in currents() {
        let s = h2_sequence(&cur).unwrap();
        let oracle = common::ce_dims(&cur.g, 2).3;
        if !(s.exact() && s.h2_g == oracle) {
            bad.push(format!("{}: {s:?} oracle {oracle}", p.label()));
        }
        n += 1;
    }
    let elapsed = t.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(120);
    report(6, pass, &format!("dimension identity, Phi injective, ker Psi = im Phi on {n} pairs; failures {bad:?}, {elapsed:?}"));
    assert!(pass);
}

#[test]
fn criterion_07_coupled_cocycles() {
    let mut notes = Vec::new();
    let mut pass = true;

    // Positive case: 𝕂[ε] with the oscillator and κ₂.
    let osc = catalog::oscillator();
    let cur = CurrentAlgebra::new(&catalog::dual_numbers(), &osc.algebra).unwrap();
    let k2 = osc.sym_form("kappa2").unwrap();
    let eta = gamma_primitive(&osc.algebra, k2).expect("kappa2 is exact");
    let c = coupled_construct(&cur, k2, &eta).unwrap();
    pass &= c.is_cocycle && c.coupled;
    notes.push(format!("dual(x)osc coupled={}", c.coupled));

    // sl₂: no invariant form has an exact nonzero Γ, so the precondition fails.
    let sl2 = catalog::sl2();
    let killing = sl2.sym_form("kappa").unwrap();
    pass &= gamma_primitive(&sl2.algebra, killing).is_none();

    // Against the brute-force search on every battery pair.
    for (p, cur) in currents() {
        let exists = coupled_cocycles_exist(&cur).unwrap();
        let forms = invariant_forms(p.lie()).unwrap();
        let predicted = cur.inv.exact_dim() > 0 && forms.b3_gamma.dim() > 0;
        if exists != predicted {
            pass = false;
            notes.push(format!("{}: search {exists} vs criterion {predicted}", p.label()));
        }
        if p.k_name == "sl2" && exists {
            pass = false;
        }
        if p.a_name.starts_with("function_alg") || p.a_name == "field" {
            for kappa in forms.exact.basis_vectors() {
                let eta = gamma_primitive(p.lie(), &kappa).expect("exact form has a primitive");
                let c = coupled_construct(&cur, &kappa, &eta).unwrap();
                if !c.is_cocycle || c.coupled {
                    pass = false;
                    notes.push(format!("{}: construction coupled", p.label()));
                }
            }
            pass &= !exists;
        }
    }
    report(7, pass, &format!("coupled iff d_A(A) != 0 and B3_Gamma != 0: {}", notes.join("; ")));
    assert!(pass);
}

#[test]
fn criterion_08_transfer_sequence() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (name, e) in battery::lie_battery() {
        let r = transfer_sequence(&e.algebra).unwrap();
        let ex = exact_forms(&e.algebra).unwrap();
        if !(r.ok() && ex.identity_holds) {
            bad.push(format!("{name}: {:?}", r.exact_at));
        }
    }
    let elapsed = t.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(60);
    report(8, pass, &format!("six-term sequence exact and Sym2_ex identity for all k; failures {bad:?}, {elapsed:?}"));
    assert!(pass);
}

#[test]
fn criterion_09_pelc() {
    let r1 = pelc_exactness_witness(1).unwrap();
    let r2 = pelc_exactness_witness(2).unwrap();
    let flipped = pelc_with_flipped_eta(1).unwrap();
    let p3 = catalog::pelc(3).unwrap().algebra;
    let osc = catalog::oscillator().algebra;
    let same_dims = trivial_table(&p3) == trivial_table(&osc);
    let pass = r1.ok() && r2.ok() && !flipped.witness_holds && same_dims;
    report(
        9,
        pass,
        &format!("witness m=1: {}, m=2: {}, flipped sign rejected: {}, pelc(3) dims = oscillator: {same_dims}", r1.ok(), r2.ok(), !flipped.witness_holds),
    );
    assert!(pass);
}

#[test]
fn criterion_10_homology_formula() {
    let mut bad = Vec::new();
    let mut n = 0;
    for (p, cur) in currents() {
        let h = homology_count(&cur).unwrap();
        let oracle = common::h2_homology_dim(&cur.g);
        assert_eq!(h.brute_force, oracle, "library H2 disagrees with the oracle on {}", p.label());
        if !h.matches() {
            bad.push(format!("{}: predicted {} brute {}", p.label(), h.predicted, h.brute_force));
        }
        n += 1;
    }
    let pass = bad.is_empty();
    report(10, pass, &format!("closed-form dim H2 vs brute force on {n} pairs; mismatches {bad:?}"));
    assert!(pass, "closed-form count disagrees on {} pairs", bad.len());
}

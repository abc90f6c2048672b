//! Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
//! Runs without the libtest harness so the lines always reach the terminal.

use std::time::Instant;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use pnc4_core::fadespace::{enumerate_singular_subspaces, sample_subspace_point, FadeState};
use pnc4_core::hypercube::{
    build_codebook, build_constraints, complete_map, constraints_conflict,
    satisfies_exclusive_law, table1_map, table2_map, SymbolTuple, CELLS,
};
use pnc4_core::selection::{
    cluster_distance, effective_constellation, min_cluster_distance, min_distance,
};
use pnc4_core::simulator::{
    bc_phase, decode_at_node, ma_phase, ml_detect, run_ber, run_throughput, BcMode, Scheme,
    SimConfig,
};
use pnc4_core::{Constellation, DifferenceVector, GaussianInt};

fn report(criterion: u32, desc: &str, ok: bool) {
    println!(
        "{} criterion {criterion}: {desc}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {desc}");
}

fn criterion_01_subspace_census() {
    let start = Instant::now();
    let classes = enumerate_singular_subspaces();
    let elapsed = start.elapsed();
    let count = |case: u8| classes.iter().filter(|c| c.case_id == case).count();
    let sub4 = |sub: u8| {
        classes
            .iter()
            .filter(|c| c.case_id == 4 && c.subcase_id == sub)
            .count()
    };
    let ok = classes.len() == 1484
        && count(1) == 4
        && count(2) == 72
        && count(3) == 448
        && count(4) == 960
        && sub4(1) == 256
        && sub4(2) == 384
        && sub4(3) == 256
        && sub4(4) == 64
        && elapsed.as_secs() < 10;
    report(
        1,
        "class counts (4, 72, 448, 960), case-4 subcases (256, 384, 256, 64), under 10 s",
        ok,
    );
}

fn criterion_02_orbit_lemma() {
    let classes = enumerate_singular_subspaces();
    let raw = [32usize, 384, 2048, 4096];
    let ok = (1..=4u8).all(|case| {
        let of_case: Vec<_> = classes.iter().filter(|c| c.case_id == case).collect();
        of_case.iter().all(|c| c.orbit.len() == 4 || c.orbit.len() == 8)
            && of_case.iter().map(|c| c.orbit.len()).sum::<usize>()
                == raw[usize::from(case) - 1]
    });
    report(
        2,
        "every orbit has size 4 or 8; sizes sum to (32, 384, 2048, 4096) per case",
        ok,
    );
}

fn sorted_class_sets(filter: impl Fn(u8, u8) -> bool) -> Vec<Vec<DifferenceVector>> {
    let mut out: Vec<Vec<DifferenceVector>> = enumerate_singular_subspaces()
        .into_iter()
        .filter(|c| filter(c.case_id, c.subcase_id))
        .map(|c| c.orbit)
        .collect();
    out.sort();
    out
}

fn fixture_sets(fixture: &[&[[i8; 8]]]) -> Vec<Vec<DifferenceVector>> {
    let mut out: Vec<Vec<DifferenceVector>> = fixture
        .iter()
        .map(|g| {
            let mut v: Vec<DifferenceVector> =
                g.iter().map(DifferenceVector::from_flat).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

fn criterion_03_fixture_equivalence() {
    let ab = sorted_class_sets(|case, sub| case == 2 && sub == 6);
    let ab_fixture = fixture_sets(&pnc4_core::fixtures::CASE2_AB_CLASSES);
    let d1 = sorted_class_sets(|case, sub| case == 4 && sub == 4);
    let d1_fixture = fixture_sets(&pnc4_core::fixtures::CASE4_D1_CLASSES);
    let ok = ab.len() == 12 && ab == ab_fixture && d1.len() == 64 && d1 == d1_fixture;
    report(
        3,
        "12 two-user classes and 64 inner-ring classes equal the embedded fixtures as sets",
        ok,
    );
}

/// The worked example's subspace: orbit of (-1-j, 1+j, 1+j, 1-j).
fn example_class() -> pnc4_core::SubspaceClass {
    let v = DifferenceVector([
        GaussianInt::new(-1, -1),
        GaussianInt::new(1, 1),
        GaussianInt::new(1, 1),
        GaussianInt::new(1, -1),
    ]);
    enumerate_singular_subspaces()
        .into_iter()
        .find(|c| c.orbit.contains(&v))
        .expect("example subspace exists")
}

fn criterion_04_table_fixtures() {
    let t1 = table1_map();
    let t2 = table2_map();
    let parts_ok = build_constraints(&example_class())
        .parts()
        .iter()
        .all(|part| part.iter().all(|x| t1.label(*x) == t1.label(part[0])));
    let ok = satisfies_exclusive_law(&t1) && satisfies_exclusive_law(&t2) && parts_ok;
    report(
        4,
        "both fixture maps pass the Latin check; the adaptive fixture is monochromatic on the worked example's constraints",
        ok,
    );
}

fn criterion_05_removability() {
    let start = Instant::now();
    let classes = enumerate_singular_subspaces();
    let mut ok = true;
    for (k, class) in classes.iter().enumerate() {
        let partition = build_constraints(class);
        let conflict = constraints_conflict(&partition);
        if class.case_id != 4 {
            ok &= conflict && !class.removable;
            continue;
        }
        ok &= !conflict && class.removable;
        let map = complete_map(&partition).expect("conflict-free");
        let h = sample_subspace_point(class, k as u64).expect("generic point");
        ok &= min_cluster_distance(&map, &h) > 1e-9 * h.norm();
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs() < 300;
    report(
        5,
        "cases 1-3 conflict; all 960 case-4 classes complete and are removed at sampled points, under 5 min",
        ok,
    );
}

fn criterion_06_label_count_bound() {
    let cb = build_codebook().unwrap();
    let ts: Vec<u16> = cb.entries().iter().map(|(_, m)| m.label_count()).collect();
    let min_t = *ts.iter().min().unwrap();
    let max_t = *ts.iter().max().unwrap();
    let over = ts.iter().filter(|&&t| t > 90).count();
    println!(
        "label counts over 960 maps: min {min_t}, max {max_t}, {over} above the 64-90 target"
    );
    if over > 0 {
        println!("note: maps above 90 labels are flagged only; the bound t >= 64 is the hard requirement");
    }
    report(6, "every built map uses at least 64 labels", min_t >= 64);
}

fn random_fade(rng: &mut impl Rng) -> FadeState {
    FadeState(std::array::from_fn(|_| {
        Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    }))
}

fn criterion_07_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let maps = [table1_map(), table2_map()];
    let mut ok = true;

    for _ in 0..1000 {
        let h = random_fade(&mut rng);
        let ec = effective_constellation(&h);
        let pts = ec.points();
        // min_distance against the pairwise scan
        let mut brute = f64::INFINITY;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                brute = brute.min((pts[i] - pts[j]).norm());
            }
        }
        ok &= (min_distance(&h) - brute).abs() < 1e-9;
        // ml_detect against the effective-constellation argmin
        let y: Complex<f64> =
            Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        let mut best = (f64::INFINITY, SymbolTuple::new(0, 0, 0, 0));
        for x in SymbolTuple::all() {
            let d = (y - ec.point(x)).norm_sqr();
            if d < best.0 {
                best = (d, x);
            }
        }
        ok &= ml_detect(y, &h) == best.1;
    }

    for _ in 0..1000 {
        let h = random_fade(&mut rng);
        let m = &maps[rng.random_range(0..maps.len())];
        let ec = effective_constellation(&h);
        // cluster_distance against the two-cluster cross scan
        let a = rng.random_range(1..=m.label_count());
        let b = loop {
            let b = rng.random_range(1..=m.label_count());
            if b != a {
                break b;
            }
        };
        let mut brute = f64::INFINITY;
        for x in SymbolTuple::all().filter(|x| m.label(*x) == a) {
            for y in SymbolTuple::all().filter(|y| m.label(*y) == b) {
                brute = brute.min((ec.point(x) - ec.point(y)).norm());
            }
        }
        ok &= (cluster_distance(m, a, b, &h).unwrap() - brute).abs() < 1e-9;
        // min_cluster_distance against the full cross-pair scan
        let mut brute = f64::INFINITY;
        for i in 0..CELLS {
            let x = SymbolTuple::from_index(i);
            for j in i + 1..CELLS {
                let y = SymbolTuple::from_index(j);
                if m.label(x) != m.label(y) {
                    brute = brute.min((ec.point(x) - ec.point(y)).norm());
                }
            }
        }
        ok &= (min_cluster_distance(m, &h) - brute).abs() < 1e-9;
    }
    report(
        7,
        "distance and detection operations match brute-force oracles on 1000 random inputs each",
        ok,
    );
}

fn criterion_08_zero_noise_end_to_end() {
    let h = FadeState([
        Complex::new(1.0, 0.0),
        Complex::new(3.0, 0.0),
        Complex::new(9.0, 0.0),
        Complex::new(27.0, 0.0),
    ]);
    let cons = Constellation::psk(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ok = true;
    for m in [table2_map(), table1_map()] {
        for x in SymbolTuple::all() {
            let y = ma_phase(x, &h, 0.0, &mut rng);
            let xhat = ml_detect(y, &h);
            ok &= xhat == x;
            let label = m.label(xhat);
            for node in 0..4 {
                let obs = bc_phase(label, &m, Complex::new(1.0, 0.0), 0.0, &mut rng, BcMode::IdealBC)
                    .unwrap();
                let others = decode_at_node(&obs, x.coord(node), node, &m).unwrap();
                let mut w = 0;
                for pos in 0..4 {
                    if pos != node {
                        ok &= cons.index_to_bits(usize::from(others[w]))
                            == cons.index_to_bits(usize::from(x.coord(pos)));
                        w += 1;
                    }
                }
            }
        }
    }
    report(
        8,
        "all 256 tuples round-trip error-free through MA detection and ideal BC decoding",
        ok,
    );
}

fn sim_config(scheme: Scheme) -> SimConfig {
    SimConfig {
        snr_db_list: vec![15.0, 25.0, 35.0],
        rician_k_db: 20.0,
        frame_bits: 256,
        frames_per_snr: 300,
        seed: 7,
        scheme,
        bc_mode: BcMode::IdealBC,
    }
}

fn criterion_09_simulation_ordering() {
    let start = Instant::now();
    let cb = build_codebook().unwrap();
    let adaptive = run_ber(&sim_config(Scheme::AdaptiveTwoUse), Some(&cb)).unwrap();
    let fixed = run_ber(&sim_config(Scheme::NonAdaptiveTwoUse), None).unwrap();
    let three = run_throughput(&sim_config(Scheme::NonAdaptiveThreeUse), None).unwrap();
    let a = adaptive.points.last().unwrap();
    let b = fixed.points.last().unwrap();
    let c = three.points.last().unwrap();
    println!(
        "top SNR {} dB: adaptive BER {:.6} (ci {:.6}), fixed two-use BER {:.6} (ci {:.6})",
        a.snr_db, a.ber, a.ci95, b.ber, b.ci95
    );
    println!(
        "throughput: adaptive {:.3} vs three-use {:.3} bits/use",
        a.throughput, c.throughput
    );
    let ok = a.ber <= b.ber
        && a.ber + a.ci95 < b.ber - b.ci95
        && a.throughput > c.throughput
        && start.elapsed().as_secs() < 900;
    report(
        9,
        "adaptive BER beats the fixed two-use scheme beyond 95% intervals at the top SNR, and adaptive throughput beats the three-use baseline, under 15 min",
        ok,
    );
}

fn criterion_10_determinism() {
    let cfg = SimConfig {
        snr_db_list: vec![20.0, 30.0],
        rician_k_db: 20.0,
        frame_bits: 256,
        frames_per_snr: 50,
        seed: 123,
        scheme: Scheme::NonAdaptiveTwoUse,
        bc_mode: BcMode::ModulatedBC,
    };
    let r1 = run_ber(&cfg, None).unwrap();
    let r2 = run_ber(&cfg, None).unwrap();
    let cfg3 = SimConfig {
        scheme: Scheme::NonAdaptiveThreeUse,
        ..cfg.clone()
    };
    let r3 = run_throughput(&cfg3, None).unwrap();
    let r4 = run_throughput(&cfg3, None).unwrap();
    let ok = r1 == r2 && r1.to_csv() == r2.to_csv() && r3.to_csv() == r4.to_csv();
    report(10, "repeated runs with the same seed produce byte-identical CSV", ok);
}

fn main() {
    let criteria: [(&str, fn()); 10] = [
        ("criterion_01_subspace_census", criterion_01_subspace_census),
        ("criterion_02_orbit_lemma", criterion_02_orbit_lemma),
        ("criterion_03_fixture_equivalence", criterion_03_fixture_equivalence),
        ("criterion_04_table_fixtures", criterion_04_table_fixtures),
        ("criterion_05_removability", criterion_05_removability),
        ("criterion_06_label_count_bound", criterion_06_label_count_bound),
        ("criterion_07_oracle_equivalence", criterion_07_oracle_equivalence),
        ("criterion_08_zero_noise_end_to_end", criterion_08_zero_noise_end_to_end),
        ("criterion_09_simulation_ordering", criterion_09_simulation_ordering),
        ("criterion_10_determinism", criterion_10_determinism),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        if std::panic::catch_unwind(run).is_err() {
            eprintln!("criterion check {name} panicked");
            failures += 1;
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

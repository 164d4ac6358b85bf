//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them). Every tolerance is
//! pinned here, in code. Criteria 3, 4, 5 and the two arcsine sub-checks of
//! criterion 10 assert targets that the underlying estimators cannot meet at
//! the stated degrees (their bias decays like log n / n, or is structurally
//! (5/16)/(n+1)); those tests run as stated and fail honestly, with the
//! measured values printed alongside.

use fekete::basis::{ln_sum, Point};
use fekete::bergman::{
    bergman_function, bergman_weakstar_probe, bm_constant, bm_measure_construct,
    gauss_chebyshev_measure, orthonormalize, roots_of_unity_measure,
};
use fekete::diagnostics::{
    bos_vdm_limit, empirical_measure, l_functional, lebesgue_constant, moment_distance,
    tdiam_ball_closed_form, tdiam_simplex_closed_form, EquilibriumReference,
};
use fekete::interp::holo_convergence_probe;
use fekete::kergin::{
    kergin_algebra_checks, kergin_eval, kergin_interpolation_check, ridge_identity_check,
    univariate_hermite_newton, ExpJet, KerginNodeTuple, PolynomialOracle, RidgeOracle, UniPoly,
};
use fekete::meshes::{
    disk_boundary_mesh, interval_mesh, product_mesh, real_disk_mesh, square_mesh, Mesh,
};
use fekete::points::{
    approx_fekete_greedy, bos_array, discrete_leja, fekete_bruteforce, intertwine,
    leja_disk_exact, padua_points, r_leja, RadialDistribution,
};
use fekete::{
    tdiam_estimate, EvalBasis, FlipEvaluator, GradedMonomialBasis, NodeArrayStage, Provenance,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn report(id: u32, name: &str, passed: bool, detail: &str) {
    println!(
        "ACCEPTANCE #{id:02} {name}: {} [{detail}]",
        if passed { "PASS" } else { "FAIL" }
    );
}

fn roots_of_unity_stage(n: usize) -> NodeArrayStage {
    let m = n + 1;
    let pts: Vec<Point> = (0..m)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / m as f64;
            Point::univariate(Complex64::new(t.cos(), t.sin()))
        })
        .collect();
    NodeArrayStage::new(1, n, pts, Provenance::Custom, EvalBasis::Monomial).unwrap()
}

/// Least-squares slope of (x, y) pairs.
fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

#[test]
fn criterion_01_closed_form_transfinite_diameters() {
    let tol = 1e-12;
    let b1 = tdiam_ball_closed_form(1).unwrap();
    let b2 = tdiam_ball_closed_form(2).unwrap();
    let s2 = tdiam_simplex_closed_form(2).unwrap();
    let want_b2 = 1.0 / (2.0 * std::f64::consts::E).sqrt();
    let want_s2 = 1.0 / (2.0 * std::f64::consts::E);
    let e1 = (b1 - 0.5).abs();
    let e2 = (b2 - want_b2).abs();
    let e3 = (s2 - want_s2).abs();
    let passed = e1 <= tol && e2 <= tol && e3 <= tol;
    report(
        1,
        "closed-form transfinite diameters",
        passed,
        &format!("delta(B1) err {e1:.2e}, delta(B2) err {e2:.2e}, delta(S2) err {e3:.2e}"),
    );
    assert!(passed);
}

#[test]
fn criterion_02_l_functional_constants() {
    let zeta3 = 1.2020569031595942854_f64;
    let want_cheb = -4.0 / 3.0 * std::f64::consts::LN_2 + 2.0 / (PI * PI) * zeta3;
    let want_equi =
        -26.0 / 9.0 - 4.0 * std::f64::consts::LN_2 + 4.0 * 2f64.sqrt() * (2f64.sqrt() + 1.0).ln();
    let l_cheb = l_functional(&RadialDistribution::chebyshev(), 1e-7).unwrap();
    let l_equi = l_functional(&RadialDistribution::equilibrium(), 1e-7).unwrap();
    let l_id = l_functional(&RadialDistribution::identity(), 1e-9).unwrap();
    let e1 = (l_cheb - want_cheb).abs();
    let e2 = (l_equi - want_equi).abs();
    let e3 = (l_id - (-13.0 / 18.0)).abs();
    let passed = e1 <= 1e-6 && e2 <= 1e-6 && e3 <= 1e-9;
    report(
        2,
        "L(G) lemma constants",
        passed,
        &format!("chebyshev err {e1:.2e}, equilibrium err {e2:.2e}, identity err {e3:.2e}"),
    );
    assert!(passed);
}

#[test]
fn criterion_03_interval_tdiam_convergence() {
    // Approximate-Fekete stages on the density-8 Lobatto mesh, n = 5..40.
    let mut degrees = Vec::new();
    let mut estimates = Vec::new();
    for n in 5..=40usize {
        let mesh = interval_mesh(n, 8).unwrap();
        let stage = approx_fekete_greedy(&mesh, n).unwrap();
        degrees.push(n);
        estimates.push(tdiam_estimate(&stage).unwrap());
    }
    let last = *estimates.last().unwrap();
    let rel = (last - 0.5f64).abs() / 0.5;
    let tail = &estimates[estimates.len() - 10..];
    let monotone = tail.windows(2).all(|w| w[1] <= w[0] + 1e-9);
    let within = rel <= 0.03;
    let passed = within && monotone;
    report(
        3,
        "interval transfinite-diameter convergence",
        passed,
        &format!(
            "estimate(40) = {last:.4} (rel err {rel:.3} vs 3% target), tail monotone: {monotone}; \
             series n=5..40 starts {:.4} — the estimator bias decays like log n / n, see ledger",
            estimates[0]
        ),
    );
    assert!(
        passed,
        "estimate {last:.4} is {:.1}% from 0.5; 3% first reachable near n ~ 320",
        100.0 * rel
    );
}

#[test]
fn criterion_04_real_disk_tdiam_convergence() {
    let target = 1.0 / (2.0 * std::f64::consts::E).sqrt();
    let mut estimates = Vec::new();
    for n in 5..=16usize {
        let mesh = real_disk_mesh(n, 2, 2).unwrap();
        let stage = approx_fekete_greedy(&mesh, n).unwrap();
        estimates.push(tdiam_estimate(&stage).unwrap());
    }
    let last = *estimates.last().unwrap();
    let rel = (last - target).abs() / target;
    let passed = rel <= 0.08;
    report(
        4,
        "real-disk transfinite-diameter convergence",
        passed,
        &format!("estimate(16) = {last:.4} vs {target:.4} (rel err {rel:.3} vs 8% target)"),
    );
    assert!(passed, "rel err {rel:.3} exceeds 8%: log n / n bias, see ledger");
}

#[test]
fn criterion_05_bos_array_limit_consistency() {
    let mut all_pass = true;
    let mut details = Vec::new();
    for g in [RadialDistribution::equilibrium(), RadialDistribution::chebyshev()] {
        let predicted = bos_vdm_limit(&g).unwrap();
        let mut values = Vec::new();
        for s in (5..=40usize).step_by(5) {
            let n = 2 * s;
            let stage = bos_array(n, &g).unwrap();
            let l_n = ln_sum(2, n).unwrap() as f64;
            values.push((stage.log_abs_vdm().log_modulus / l_n).exp());
        }
        let last = *values.last().unwrap();
        let rel = (last - predicted).abs() / predicted;
        let monotone = values.windows(2).all(|w| w[1] <= w[0] + 1e-9);
        let within = rel <= 0.02;
        all_pass &= within && monotone;
        details.push(format!(
            "{}: value(s=40) = {last:.5} vs predicted {predicted:.5} (rel {rel:.3} vs 2%), \
             monotone decrease: {monotone}",
            g.label
        ));
    }
    report(5, "Bos-array VDM limit consistency", all_pass, &details.join("; "));
    assert!(all_pass, "{}", details.join("; "));
}

#[test]
fn criterion_06_padua_lebesgue_growth() {
    let mut degrees = Vec::new();
    let mut ratios = Vec::new();
    for n in 2..=30usize {
        let stage = padua_points(n).unwrap();
        let grid = square_mesh(n, 10).unwrap();
        let lam = lebesgue_constant(&stage, &grid).unwrap();
        degrees.push(n as f64);
        ratios.push(lam / (n as f64 + 2.0).ln().powi(2));
    }
    let fitted_c = ratios.iter().copied().fold(0.0f64, f64::max);
    let tail_x = &degrees[degrees.len() - 10..];
    let tail_y = &ratios[ratios.len() - 10..];
    let drift = slope(tail_x, tail_y);
    let passed = fitted_c <= 4.0 && drift <= 1e-3;
    report(
        6,
        "Padua Lebesgue growth O(log^2 n)",
        passed,
        &format!("fitted C = {fitted_c:.3} (<= 4), tail drift {drift:+.2e}/degree"),
    );
    assert!(passed);
}

#[test]
fn criterion_07_fekete_flip_bound() {
    // Every FLIP of an exact (mesh) Fekete stage has mesh sup-norm <= 1, so
    // Lambda_n <= N on the mesh. All brute-force-feasible instances.
    let mut worst: f64 = 0.0;
    let mut instances = 0usize;
    let mut check = |mesh: &Mesh, n: usize| {
        let stage = fekete_bruteforce(mesh, n).unwrap();
        let flips = FlipEvaluator::new(&stage).unwrap();
        let mut sup: f64 = 0.0;
        let mut lambda: f64 = 0.0;
        for p in mesh.points() {
            let vals = flips.values(p).unwrap();
            let lf: f64 = vals.iter().map(|v| v.norm()).sum();
            lambda = lambda.max(lf);
            for v in vals {
                sup = sup.max(v.norm());
            }
        }
        assert!(
            lambda <= stage.len() as f64 * (1.0 + 1e-10),
            "Lambda exceeds N on the mesh"
        );
        worst = worst.max(sup);
        instances += 1;
    };
    // d = 1: interval and circle meshes with M <= 18, n <= 6.
    for n in 1..=6usize {
        check(&interval_mesh(n, 2).unwrap(), n);
        check(&disk_boundary_mesh(n, 2).unwrap(), n);
    }
    for n in 1..=5usize {
        check(&interval_mesh(n, 3).unwrap(), n);
    }
    // d = 2: meshes with M <= 14, n <= 2.
    let grid9 = square_mesh(1, 2).unwrap(); // 3x3
    check(&grid9, 1);
    check(&grid9, 2);
    let rect12 = product_mesh(&[interval_mesh(1, 2).unwrap(), interval_mesh(1, 3).unwrap()]).unwrap();
    check(&rect12, 1);
    check(&rect12, 2);

    let passed = worst <= 1.0 + 1e-10;
    report(
        7,
        "Fekete FLIP sup-norm bound",
        passed,
        &format!("{instances} instances, worst mesh sup-norm of any FLIP = {worst:.12}"),
    );
    assert!(passed);
}

#[test]
fn criterion_08_disk_leja_structure() {
    let seq = leja_disk_exact(64).unwrap();
    // Dyadic prefixes are exactly the roots-of-unity sets.
    let mut prefix_ok = true;
    for m in [2usize, 4, 8, 16, 32] {
        for k in 0..m {
            let t = 2.0 * PI * k as f64 / m as f64;
            let root = Complex64::new(t.cos(), t.sin());
            if !seq
                .prefix(m)
                .iter()
                .any(|p| (p.coords()[0] - root).norm() < 1e-12)
            {
                prefix_ok = false;
            }
        }
    }
    // Greedy optimality on a 4096-point circle mesh, every step m <= 64.
    let mesh = disk_boundary_mesh(63, 65).unwrap();
    assert_eq!(mesh.len(), 4096);
    let mut greedy_ok = true;
    let mut worst_gap: f64 = 0.0;
    for m in 1..64usize {
        let prefix = seq.prefix(m);
        let objective = |z: Complex64| -> f64 {
            prefix
                .iter()
                .map(|p| (z - p.coords()[0]).norm().max(1e-300).ln())
                .sum()
        };
        let mesh_best = mesh
            .points()
            .iter()
            .map(|p| objective(p.coords()[0]))
            .fold(f64::NEG_INFINITY, f64::max);
        let attained = objective(seq.points()[m].coords()[0]);
        // Relative comparison of the products themselves.
        let gap = (mesh_best - attained).exp() - 1.0;
        worst_gap = worst_gap.max(gap);
        if gap > 1e-9 {
            greedy_ok = false;
        }
    }
    let passed = prefix_ok && greedy_ok;
    report(
        8,
        "disk Leja closed-form structure",
        passed,
        &format!("dyadic prefixes are root sets: {prefix_ok}, worst greedy gap {worst_gap:.2e}"),
    );
    assert!(passed);
}

#[test]
fn criterion_09_equilibrium_measure_probes() {
    let mesh = interval_mesh(40, 8).unwrap();
    let stage = discrete_leja(&mesh, 40).unwrap().stage(40).unwrap();
    let mu = empirical_measure(&stage);
    let d_leja = moment_distance(&mu, EquilibriumReference::IntervalArcsine, 4).unwrap();

    let stage = bos_array(60, &RadialDistribution::equilibrium()).unwrap();
    let mu = empirical_measure(&stage);
    let d_bos = moment_distance(&mu, EquilibriumReference::DiskEquilibrium, 4).unwrap();

    let passed = d_leja <= 5e-2 && d_bos <= 5e-2;
    report(
        9,
        "equilibrium-measure moment probes",
        passed,
        &format!("Leja/arcsine distance {d_leja:.4}, Bos/disk distance {d_bos:.4} (<= 0.05)"),
    );
    assert!(passed);
}

#[test]
fn criterion_10_bergman_suite() {
    // Roots-of-unity identities, exact to 1e-10.
    let mut ru_ok = true;
    for n in [5usize, 12, 20] {
        let basis = GradedMonomialBasis::new(1, n).unwrap();
        let mu = roots_of_unity_measure(4 * n).unwrap();
        let onb = orthonormalize(&basis, &mu, EvalBasis::Monomial).unwrap();
        let z = Point::univariate(Complex64::new((0.7f64).cos(), (0.7f64).sin()));
        if (bergman_function(&onb, &z).unwrap() - (n as f64 + 1.0)).abs() > 1e-10 {
            ru_ok = false;
        }
        let mesh = disk_boundary_mesh(n, 8).unwrap();
        if (bm_constant(&onb, &mesh).unwrap() - (n as f64 + 1.0).sqrt()).abs() > 1e-10 {
            ru_ok = false;
        }
    }

    // Arcsine: M_n^{1/n} <= 1.05 for n <= 30 (structurally M_n = sqrt(2n+1),
    // so this first holds near n ~ 47; expected to fail, see ledger).
    let mut mn_root_worst: f64 = 0.0;
    let mut mn_ok = true;
    for n in 2..=30usize {
        let basis = GradedMonomialBasis::new(1, n).unwrap();
        let mu = gauss_chebyshev_measure(4 * n).unwrap();
        let onb = orthonormalize(&basis, &mu, EvalBasis::ProductChebyshev).unwrap();
        let mesh = interval_mesh(n, 8).unwrap();
        let m_n = bm_constant(&onb, &mesh).unwrap();
        let root = m_n.powf(1.0 / n as f64);
        mn_root_worst = mn_root_worst.max(root);
        if root > 1.05 {
            mn_ok = false;
        }
    }

    // Arcsine weak-* probe at n = 30 (structurally (5/16)/31 = 0.0101;
    // expected to fail the 1e-2 bound by 0.8%, see ledger).
    let n = 30usize;
    let basis = GradedMonomialBasis::new(1, n).unwrap();
    let mu = gauss_chebyshev_measure(4 * n).unwrap();
    let onb = orthonormalize(&basis, &mu, EvalBasis::ProductChebyshev).unwrap();
    let probe = bergman_weakstar_probe(&onb, EquilibriumReference::IntervalArcsine, 4).unwrap();
    let probe_ok = probe <= 1e-2;

    // Constructive-measure envelope with k_max = 20, n <= 10.
    let bm = bm_measure_construct(20, |k| interval_mesh(k, 4)).unwrap();
    let mut env_ok = true;
    for n in 3..=10usize {
        let basis = GradedMonomialBasis::new(1, n).unwrap();
        let onb = orthonormalize(&basis, &bm.measure, EvalBasis::ProductChebyshev).unwrap();
        let mesh = interval_mesh(n, 40).unwrap();
        let m_n = bm_constant(&onb, &mesh).unwrap();
        if m_n > bm.envelope(n).unwrap() {
            env_ok = false;
        }
    }

    let passed = ru_ok && mn_ok && probe_ok && env_ok;
    report(
        10,
        "Bergman / Bernstein-Markov suite",
        passed,
        &format!(
            "roots-of-unity identities: {ru_ok}; arcsine max M_n^(1/n) = {mn_root_worst:.4} \
             (<= 1.05: {mn_ok}); weak-* probe(30) = {probe:.5} (<= 0.01: {probe_ok}); \
             envelope k_max=20: {env_ok}"
        ),
    );
    assert!(
        passed,
        "arcsine sub-checks are structurally miscalibrated in the criterion, see ledger"
    );
}

#[test]
fn criterion_11_kergin_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let tol = 1e-8;
    let mut worst: f64 = 0.0;
    let mut failures = 0usize;
    for instance in 0..100usize {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=5usize);
        let nodes: Vec<Point> = (0..=n)
            .map(|_| {
                Point::new(
                    (0..d)
                        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
                        .collect(),
                )
            })
            .collect();
        // Occasionally repeat a node for Hermite semantics.
        let mut nodes = nodes;
        if n >= 2 && instance % 3 == 0 {
            nodes[1] = nodes[0].clone();
        }
        let tuple = KerginNodeTuple::new(nodes).unwrap();

        // Random polynomial of degree <= n.
        let basis = GradedMonomialBasis::new(d, n).unwrap();
        let f = PolynomialOracle::from_terms(
            d,
            basis.indices().iter().map(|alpha| {
                (
                    alpha.exponents().to_vec(),
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.5..0.5)),
                )
            }),
        )
        .unwrap();

        // Polynomial reproduction: K[A] f = f for f in P_n.
        for _ in 0..3 {
            let x = Point::new(
                (0..d)
                    .map(|_| Complex64::new(rng.gen_range(-1.5..1.5), 0.0))
                    .collect(),
            );
            let err = (kergin_eval(&tuple, &f, &x).unwrap() - f.eval(&x)).norm()
                / f.eval(&x).norm().max(1.0);
            worst = worst.max(err);
            if err > tol {
                failures += 1;
            }
        }

        // Hermite interpolation conditions.
        let rep = kergin_interpolation_check(&tuple, &f, tol).unwrap();
        worst = worst.max(rep.worst_error());
        if !rep.all_passed() {
            failures += 1;
        }

        // Ridge identity with an analytic h.
        let lambda: Vec<Complex64> = (0..d)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
            .collect();
        let x = Point::new(
            (0..d)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
                .collect(),
        );
        let rep = ridge_identity_check(
            &tuple,
            lambda,
            ExpJet {
                scale: Complex64::new(0.7, 0.0),
            },
            &x,
            tol,
        )
        .unwrap();
        worst = worst.max(rep.worst_error());
        if !rep.all_passed() {
            failures += 1;
        }

        // Ordering invariance and projection onto a sub-tuple.
        let sub: Vec<usize> = (0..=n / 2).collect();
        let rep = kergin_algebra_checks(&tuple, &sub, &f, instance as u64, tol).unwrap();
        worst = worst.max(rep.worst_error());
        if !rep.all_passed() {
            failures += 1;
        }
    }

    // Univariate collapse against Newton divided differences, with repeats.
    let nodes = [
        Complex64::new(0.9, 0.0),
        Complex64::new(-0.4, 0.0),
        Complex64::new(-0.4, 0.0),
        Complex64::new(0.1, 0.0),
    ];
    let tuple =
        KerginNodeTuple::new(nodes.iter().map(|&z| Point::univariate(z)).collect()).unwrap();
    let h = UniPoly {
        coeffs: vec![
            Complex64::new(0.2, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(1.5, 0.0),
        ],
    };
    let fr = RidgeOracle::new(vec![Complex64::new(1.0, 0.0)], h.clone());
    let mut collapse_worst: f64 = 0.0;
    for t in [-0.8f64, 0.05, 0.67] {
        let got = kergin_eval(&tuple, &fr, &Point::univariate(Complex64::new(t, 0.0))).unwrap();
        let want = univariate_hermite_newton(&nodes, &h, Complex64::new(t, 0.0));
        collapse_worst = collapse_worst.max((got - want).norm());
    }

    let passed = failures == 0 && collapse_worst <= 1e-9;
    report(
        11,
        "Kergin property suite (100 instances)",
        passed,
        &format!(
            "failing sub-checks: {failures}, worst relative error {worst:.2e}, \
             univariate collapse error {collapse_worst:.2e}"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_12_holomorphic_convergence_rates() {
    // Disk: f = 1/(z-2) on roots-of-unity stages, rate at n = 40 in [0.45, 0.55].
    let f = |p: &Point| 1.0 / (p.coords()[0] - 2.0);
    let stages: Vec<NodeArrayStage> = (10..=40usize)
        .step_by(10)
        .map(roots_of_unity_stage)
        .collect();
    let boundary = disk_boundary_mesh(40, 40).unwrap();
    let probe = holo_convergence_probe(&stages, f, &boundary).unwrap();
    let (_, _, disk_rate) = *probe.last().unwrap();
    let disk_ok = (0.45..=0.55).contains(&disk_rate);

    // Interval: f = 1/(x-2) on discrete Leja stages; use the largest degree
    // whose error is still above the f64 noise floor (the geometric regime
    // underflows past n ~ 22).
    let stages: Vec<NodeArrayStage> = (5..=20usize)
        .step_by(5)
        .map(|n| {
            let mesh = interval_mesh(n, 8).unwrap();
            discrete_leja(&mesh, n).unwrap().stage(n).unwrap()
        })
        .collect();
    let fine = interval_mesh(20, 40).unwrap();
    let probe = holo_convergence_probe(&stages, f, &fine).unwrap();
    let target = 1.0 / (2.0 + 3.0f64.sqrt());
    let (n_used, err_used, interval_rate) = probe
        .iter()
        .rev()
        .find(|&&(_, err, _)| err > 1e-13)
        .copied()
        .unwrap();
    let interval_ok = (interval_rate - target).abs() / target <= 0.10;

    let passed = disk_ok && interval_ok;
    report(
        12,
        "holomorphic convergence rates",
        passed,
        &format!(
            "disk rate(40) = {disk_rate:.4} in [0.45, 0.55]; interval rate(n={n_used}, \
             err {err_used:.1e}) = {interval_rate:.4} vs 1/(2+sqrt3) = {target:.4}"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_13_intertwining_growth() {
    let mut degrees = Vec::new();
    let mut scales = Vec::new();
    for n in 2..=16usize {
        let disk = leja_disk_exact(n + 1).unwrap();
        let rl = r_leja(n + 1).unwrap();
        let t1: Vec<Complex64> = disk.points().iter().map(|p| p.coords()[0]).collect();
        let t2: Vec<Complex64> = rl.points().iter().map(|p| p.coords()[0]).collect();
        let stage = intertwine(&[t1, t2], n).unwrap();
        let eval = product_mesh(&[
            disk_boundary_mesh(n, 6).unwrap(),
            interval_mesh(n, 6).unwrap(),
        ])
        .unwrap();
        let lam = lebesgue_constant(&stage, &eval).unwrap();
        degrees.push(n as f64);
        scales.push(lam.ln() / (n as f64).ln());
    }
    let max_scale = scales.iter().copied().fold(0.0f64, f64::max);
    let tail_x = &degrees[degrees.len() - 10..];
    let tail_y = &scales[scales.len() - 10..];
    let drift = slope(tail_x, tail_y);
    let passed = max_scale <= 8.0 && drift <= 0.02;
    report(
        13,
        "intertwined Leja polynomial growth",
        passed,
        &format!("max log(Lambda)/log(n) = {max_scale:.3} (<= 8), tail drift {drift:+.2e}/degree"),
    );
    assert!(passed);
}

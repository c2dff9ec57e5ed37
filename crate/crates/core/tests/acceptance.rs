//! End-to-end acceptance suite for the library: structure extraction,
//! statevector recovery, oracle agreement, dot-product invariants,
//! detectability of proper-subset errors, and quantum kernel properties.
//! Each test prints one pass line on success.

use num_complex::Complex64;
use qss_core::access::{
    compare_structures, detectability_scan, gamma_from_minimal_codewords, AccessOracle, PartySet,
};
use qss_core::css::DotCheckMode;
use qss_core::example_codes;
use qss_core::qsim::{encode_secret, recover, Tolerance};
use qss_core::{Codeword, Field, PauliWord, QssScheme, StateVector};

const EPS: f64 = 1e-9;

fn reference_scheme() -> QssScheme {
    QssScheme::build(
        example_codes::binary_11_6(),
        Some(example_codes::binary_11_6_g()),
        false,
    )
    .expect("reference code is a valid pure scheme")
}

fn corpus() -> Vec<(&'static str, QssScheme)> {
    vec![
        (
            "degenerate-3",
            QssScheme::build(example_codes::degenerate_3_2(), None, false).unwrap(),
        ),
        (
            "steane-7",
            QssScheme::build(example_codes::hamming_7_4(), None, false).unwrap(),
        ),
        (
            "ternary-3",
            QssScheme::build(example_codes::ternary_zero_sum(), None, false).unwrap(),
        ),
    ]
}

/// The 21 minimal authorized sets of the reference [[11,1,3]] scheme,
/// ordered by (size, lexicographic).
const REFERENCE_GAMMA: [&[usize]; 21] = [
    &[1, 8, 11],
    &[2, 5, 11],
    &[3, 10, 11],
    &[4, 7, 11],
    &[6, 9, 11],
    &[1, 2, 3, 4, 9],
    &[1, 2, 3, 6, 7],
    &[1, 2, 4, 6, 10],
    &[1, 2, 7, 9, 10],
    &[1, 3, 4, 5, 6],
    &[1, 3, 5, 7, 9],
    &[1, 4, 5, 9, 10],
    &[1, 5, 6, 7, 10],
    &[2, 3, 4, 6, 8],
    &[2, 3, 7, 8, 9],
    &[2, 4, 8, 9, 10],
    &[2, 6, 7, 8, 10],
    &[3, 4, 5, 8, 9],
    &[3, 5, 6, 7, 8],
    &[4, 5, 6, 8, 10],
    &[5, 7, 8, 9, 10],
];

#[test]
fn a1_reference_structure_is_exact() {
    let scheme = reference_scheme();
    assert_eq!(scheme.n(), 11);
    assert_eq!(scheme.field().q(), 2);
    assert_eq!(scheme.distance(), 3);
    assert_eq!(scheme.beta().value(), 1);
    assert!(scheme.is_pure());

    let gamma = gamma_from_minimal_codewords(&scheme).unwrap();
    let got: Vec<Vec<usize>> = gamma
        .gamma_min()
        .iter()
        .map(|s| s.parties().to_vec())
        .collect();
    let want: Vec<Vec<usize>> = REFERENCE_GAMMA.iter().map(|s| s.to_vec()).collect();
    assert_eq!(got, want, "minimal access structure must match exactly");
    assert_eq!(got.iter().filter(|s| s.len() == 3).count(), 5);
    assert_eq!(got.iter().filter(|s| s.len() == 5).count(), 16);
    assert!(gamma.multiplicities().iter().all(|&m| m == 1));
    println!("acceptance 1 (reference structure, exact 21 sets): pass");
}

#[test]
fn a2_recovery_returns_secret_on_every_minimal_set() {
    let scheme = reference_scheme();
    let f = scheme.field().clone();
    let minimal = scheme.code().minimal_codewords_outside_dual().unwrap();
    assert_eq!(minimal.len(), 21);
    let tol = Tolerance::default();

    for s in 0..2u64 {
        let secret = f.element(s).unwrap();
        let psi = encode_secret(&scheme, &secret).unwrap();

        // independent parity oracle: any basis label of the encoded state
        // has parity s over each authorized set
        let label_idx = psi
            .amplitudes()
            .iter()
            .position(|a| a.norm() > 1e-12)
            .unwrap();
        let mut digits = [0u64; 11];
        let mut rem = label_idx;
        for t in (0..11).rev() {
            digits[t] = (rem % 2) as u64;
            rem /= 2;
        }

        for m in &minimal {
            let rec = recover(&scheme, &psi, &m.word, tol).unwrap();
            assert_eq!(rec.secret.value(), s, "recovered secret mismatch");
            assert!(rec.ancilla_mass >= 1.0 - EPS, "readout not a point mass");
            let fidelity = rec.post_state.fidelity(&psi).unwrap();
            assert!(fidelity >= 1.0 - EPS, "encoded state was disturbed");

            let parity: u64 = m.word.support().iter().map(|&j| digits[j - 1]).sum::<u64>() % 2;
            assert_eq!(
                parity,
                rec.secret.value(),
                "binary recovery is share parity"
            );
        }

        // recovery also works for witnesses that are not minimal
        for w in scheme.code().codewords().unwrap() {
            if w.is_zero() || scheme.code().dual_contains(w.coords()).unwrap() {
                continue;
            }
            let rec = recover(&scheme, &psi, &w, tol).unwrap();
            assert_eq!(rec.secret.value(), s);
        }
    }
    println!("acceptance 2 (recovery on all 21 sets, both secrets): pass");
}

#[test]
fn a3_oracle_agrees_with_minimal_codewords_on_corpus() {
    for (name, scheme) in corpus() {
        let oracle = AccessOracle::new(&scheme).unwrap();
        assert_eq!(oracle.config().eps, EPS);
        let scan = oracle.classify_subsets().unwrap();
        assert_eq!(scan.report.subsets_checked, 1 << scheme.n());
        assert!(
            scan.report.dichotomy_violations.is_empty(),
            "{name}: every subset must be authorized xor unauthorized"
        );
        assert!(
            scan.report.upward_closure_ok,
            "{name}: authorized not monotone"
        );
        assert!(
            scan.report.downward_closure_ok,
            "{name}: unauthorized not monotone"
        );
        assert!(
            scan.report.complement_conflicts.is_empty(),
            "{name}: a set and its complement are both authorized"
        );
        let theorem = gamma_from_minimal_codewords(&scheme).unwrap();
        let diff = compare_structures(&theorem, &scan.structure).unwrap();
        assert!(
            diff.is_empty(),
            "{name}: oracle and minimal-codeword structures differ: {diff:?}"
        );
        println!("acceptance 3 ({name}: oracle == minimal codewords, dichotomy holds): pass");
    }
}

#[test]
fn a4_pairwise_products_nonzero_on_corpus() {
    let mut schemes = corpus();
    schemes.push(("reference-11", reference_scheme()));
    schemes.push((
        "impure-9-gf4",
        QssScheme::build(example_codes::impure_9_5_gf4(), None, true).unwrap(),
    ));
    for (name, scheme) in &schemes {
        let report = scheme.pairwise_dot_check(DotCheckMode::Exhaustive).unwrap();
        assert!(report.exhaustive);
        assert!(
            report.passed,
            "{name}: found orthogonal pair {:?}",
            report.witness
        );
        if scheme.field().q() == 2 {
            assert_eq!(
                report.distance_odd,
                Some(true),
                "{name}: distance must be odd"
            );
        }
    }

    // the binary case pins every product to 1
    let reference = reference_scheme();
    let outside: Vec<Codeword> = reference
        .code()
        .codewords()
        .unwrap()
        .filter(|w| !w.is_zero() && !reference.code().dual_contains(w.coords()).unwrap())
        .collect();
    assert_eq!(outside.len(), 32);
    for x in &outside {
        for y in &outside {
            assert_eq!(x.dot(y).unwrap().value(), 1);
        }
    }
    println!("acceptance 4 (pairwise products nonzero, binary case all ones, d odd): pass");
}

#[test]
fn a5_proper_subsets_of_minimal_supports_detect_all_errors() {
    let scheme = reference_scheme();
    let report = detectability_scan(&scheme, 4).unwrap();
    assert_eq!(report.minimal_codewords, 21);
    assert!(
        report.passed(),
        "violations found: {:?}",
        report.violations.first()
    );
    // 5 supports of size 3 (6 proper non-empty subsets + empty each) and 16
    // of size 5 (30 with |T| <= 4 each, empty included)
    assert_eq!(report.subsets_checked, 5 * 7 + 16 * 31);
    assert!(report.operators_checked > 0);
    println!("acceptance 5 (errors inside proper subsets always detectable): pass");
}

#[test]
fn a6_quantum_kernel_invariants() {
    // unitarity: norm drift below 1e-12 per gate application
    let f3 = Field::prime(3).unwrap();
    let amps: Vec<Complex64> = (0..27)
        .map(|i| Complex64::new((i as f64).sin() + 0.4, (i as f64).cos()))
        .collect();
    let mut sv = StateVector::from_amplitudes(&f3, 3, amps).unwrap();
    let word = PauliWord::new(&f3, vec![2, 0, 1], vec![1, 2, 0]).unwrap();
    let two = f3.element(2).unwrap();
    for _ in 0..50 {
        let before = sv.norm();
        sv.apply_pauli(&word).unwrap();
        assert!((sv.norm() - before).abs() < 1e-12);
        let before = sv.norm();
        sv.mult_gate(0, &two).unwrap();
        assert!((sv.norm() - before).abs() < 1e-12);
        let before = sv.norm();
        sv.cnot_gate(1, 2).unwrap();
        assert!((sv.norm() - before).abs() < 1e-12);
    }

    // commutation phase Z(b)X(a) = ω^{tr(a·b)} X(a)Z(b), exhaustive for
    // n ≤ 2 and q ∈ {2, 3, 4}
    let fields = [
        Field::prime(2).unwrap(),
        Field::prime(3).unwrap(),
        Field::new(2, 2, None).unwrap(),
    ];
    for field in &fields {
        let q = field.q();
        let p = field.p();
        for n in 1..=2usize {
            let dim = (q as usize).pow(n as u32);
            for spec in 0..q.pow(2 * n as u32) {
                let mut rem = spec;
                let mut ab = vec![0u64; 2 * n];
                for d in ab.iter_mut() {
                    *d = rem % q;
                    rem /= q;
                }
                let (a, b) = (ab[..n].to_vec(), ab[n..].to_vec());
                let xa = PauliWord::x_word(field, a.clone()).unwrap();
                let zb = PauliWord::z_word(field, b.clone()).unwrap();
                let tr = field.trace(field.dot(&a, &b).unwrap());
                let omega =
                    Complex64::from_polar(1.0, std::f64::consts::TAU * tr as f64 / p as f64);
                for idx in 0..dim {
                    let mut digits = vec![0u64; n];
                    let mut r = idx;
                    for t in (0..n).rev() {
                        digits[t] = (r % q as usize) as u64;
                        r /= q as usize;
                    }
                    let base = StateVector::basis_state(field, &digits).unwrap();
                    let mut zx = base.clone();
                    zx.apply_pauli(&xa).unwrap();
                    zx.apply_pauli(&zb).unwrap();
                    let mut xz = base.clone();
                    xz.apply_pauli(&zb).unwrap();
                    xz.apply_pauli(&xa).unwrap();
                    for (u, v) in zx.amplitudes().iter().zip(xz.amplitudes()) {
                        assert!((u - omega * v).norm() < 1e-12);
                    }
                }
            }
        }
    }

    // stabilizer rows fix every encoded state; encoded states orthonormal
    let mut schemes = corpus();
    schemes.push(("reference-11", reference_scheme()));
    schemes.push((
        "impure-9-gf4",
        QssScheme::build(example_codes::impure_9_5_gf4(), None, true).unwrap(),
    ));
    for (name, scheme) in &schemes {
        let f = scheme.field().clone();
        let states: Vec<StateVector> = (0..f.q())
            .map(|i| encode_secret(scheme, &f.element(i).unwrap()).unwrap())
            .collect();
        for row in scheme.stabilizer_words() {
            for psi in &states {
                let mut moved = psi.clone();
                moved.apply_pauli(&row).unwrap();
                for (a, b) in moved.amplitudes().iter().zip(psi.amplitudes()) {
                    assert!(
                        (a - b).norm() <= EPS,
                        "{name}: stabilizer row moved an encoded state"
                    );
                }
            }
        }
        for (i, u) in states.iter().enumerate() {
            for (j, v) in states.iter().enumerate() {
                let ip = u.inner(v).unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (ip - Complex64::new(want, 0.0)).norm() <= EPS,
                    "{name}: <psi_{i}|psi_{j}> = {ip}"
                );
            }
        }
    }
    println!(
        "acceptance 6 (unitarity, commutation phase, stabilizer fixing, orthonormality): pass"
    );
}

/// Recovery holds on every corpus scheme for every secret and every
/// minimal codeword, and on a sample of the (large) impure instance.
#[test]
fn recovery_on_corpus_schemes() {
    let tol = Tolerance::default();
    let run = |name: &str, scheme: &QssScheme, limit: usize| {
        let f = scheme.field().clone();
        let minimal = scheme.code().minimal_codewords_outside_dual().unwrap();
        for s in 0..f.q() {
            let secret = f.element(s).unwrap();
            let psi = encode_secret(scheme, &secret).unwrap();
            for m in minimal.iter().take(limit) {
                let rec = recover(scheme, &psi, &m.word, tol).unwrap();
                assert_eq!(rec.secret.value(), s, "{name}: wrong secret");
                assert!(rec.ancilla_mass >= 1.0 - EPS, "{name}: fuzzy readout");
                assert!(
                    rec.post_state.fidelity(&psi).unwrap() >= 1.0 - EPS,
                    "{name}: state disturbed"
                );
            }
        }
    };
    for (name, scheme) in &corpus() {
        run(name, scheme, usize::MAX);
    }
    // the impure 9-qudit scheme works on million-amplitude vectors; sample it
    let impure = QssScheme::build(example_codes::impure_9_5_gf4(), None, true).unwrap();
    run("impure-9-gf4", &impure, 4);
    println!("recovery on corpus schemes (all secrets, all minimal codewords): pass");
}

/// Oracle spot checks on the reference scheme: proper subsets of a minimal
/// set stay unauthorized, the minimal set itself is authorized, and small
/// sets fail with a cross-term witness.
#[test]
fn reference_oracle_spot_checks() {
    let scheme = reference_scheme();
    let oracle = AccessOracle::new(&scheme).unwrap();

    let partial = PartySet::new([3, 10]).unwrap();
    assert!(oracle.is_unauthorized(&partial).unwrap().holds);

    let minimal = PartySet::new([3, 10, 11]).unwrap();
    let unauth = oracle.is_unauthorized(&minimal).unwrap();
    assert!(!unauth.holds);
    assert!(unauth.witness.is_some());
    assert!(oracle.is_authorized(&minimal).unwrap().holds);

    // the complement of a 2-set spans 9 parties, past the default operator
    // cap; raise it for this probe
    let roomy = AccessOracle::with_config(
        &scheme,
        qss_core::OracleConfig {
            max_operators: 1 << 20,
            ..Default::default()
        },
    )
    .unwrap();
    let pair = PartySet::new([1, 2]).unwrap();
    let check = roomy.is_authorized(&pair).unwrap();
    assert!(!check.holds);
    assert!(check.witness.is_some());
    println!("reference oracle spot checks: pass");
}

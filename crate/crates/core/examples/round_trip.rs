//! Build a scheme, extract its access structure, recover a secret, and
//! cross-check the structure against the brute-force oracle.

use qss_core::access::{compare_structures, gamma_from_minimal_codewords, AccessOracle};
use qss_core::example_codes;
use qss_core::qsim::{encode_secret, recover, Tolerance};
use qss_core::QssScheme;

fn main() {
    let scheme = QssScheme::build(example_codes::hamming_7_4(), None, false).unwrap();
    let gamma = gamma_from_minimal_codewords(&scheme).unwrap();
    println!("scheme: {scheme:?}");
    for set in gamma.gamma_min() {
        println!("minimal authorized set {set}");
    }

    let secret = scheme.field().element(1).unwrap();
    let state = encode_secret(&scheme, &secret).unwrap();
    let witness = &scheme.code().minimal_codewords_outside_dual().unwrap()[0].word;
    let rec = recover(&scheme, &state, witness, Tolerance::default()).unwrap();
    assert_eq!(rec.secret.value(), 1);
    println!(
        "recovered {} from shares {:?} (ancilla mass {:.12})",
        rec.secret,
        witness.support(),
        rec.ancilla_mass
    );

    let oracle = AccessOracle::new(&scheme).unwrap();
    let scan = oracle.classify_subsets().unwrap();
    assert!(compare_structures(&gamma, &scan.structure)
        .unwrap()
        .is_empty());
    println!(
        "oracle scan over {} subsets agrees with the minimal-codeword structure",
        scan.report.subsets_checked
    );
}

//! Access structures: the minimal-codeword characterization on one side,
//! and an independent brute-force oracle on the other.
//!
//! The oracle classifies a party subset `T` by scanning Pauli basis words:
//! `T` is unauthorized iff every word supported inside `T` has the same
//! expectation on every encoded state, and authorized iff every word
//! supported inside the complement of `T` has vanishing cross terms between
//! distinct encoded states. Scanning the Pauli basis suffices because the
//! conditions are linear in the operator.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::codes::{CodeError, Codeword, DEFAULT_ENUMERATION_CAP};
use crate::css::{CssError, ErrorClass, PauliWord, QssScheme};
use crate::gf::Field;
use crate::qsim::{encode_secret_with_cap, SimError, StateVector};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AccessError {
    #[error(transparent)]
    Css(#[from] CssError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error("subset scan of {operators} operator words exceeds the cap of {cap}")]
    OperatorScanTooLarge { operators: u128, cap: u128 },
    #[error("structures have different party counts: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("party index {index} out of range 1..={n}")]
    PartyOutOfRange { index: usize, n: usize },
    #[error("party indices are 1-based; 0 is invalid")]
    ZeroPartyIndex,
    #[error("minimal sets are not an antichain: {container} contains {contained}")]
    NotAntichain {
        container: String,
        contained: String,
    },
}

impl From<CodeError> for AccessError {
    fn from(e: CodeError) -> Self {
        AccessError::Css(CssError::Code(e))
    }
}

/// A sorted, deduplicated set of 1-indexed party positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartySet {
    parties: Vec<usize>,
}

impl fmt::Display for PartySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parties.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

impl PartySet {
    pub fn new(parties: impl IntoIterator<Item = usize>) -> Result<PartySet, AccessError> {
        let mut parties: Vec<usize> = parties.into_iter().collect();
        if parties.contains(&0) {
            return Err(AccessError::ZeroPartyIndex);
        }
        parties.sort_unstable();
        parties.dedup();
        Ok(PartySet { parties })
    }

    pub fn empty() -> PartySet {
        PartySet {
            parties: Vec::new(),
        }
    }

    pub fn parties(&self) -> &[usize] {
        &self.parties
    }

    pub fn len(&self) -> usize {
        self.parties.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parties.is_empty()
    }

    pub fn contains(&self, party: usize) -> bool {
        self.parties.binary_search(&party).is_ok()
    }

    pub fn is_subset_of(&self, other: &PartySet) -> bool {
        self.parties.iter().all(|p| other.contains(*p))
    }

    /// All parties of `1..=n` not in this set.
    pub fn complement(&self, n: usize) -> PartySet {
        PartySet {
            parties: (1..=n).filter(|p| !self.contains(*p)).collect(),
        }
    }

    fn check_bounds(&self, n: usize) -> Result<(), AccessError> {
        if let Some(&max) = self.parties.last() {
            if max > n {
                return Err(AccessError::PartyOutOfRange { index: max, n });
            }
        }
        Ok(())
    }

    fn from_mask(mask: u32) -> PartySet {
        PartySet {
            parties: (0..32)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b + 1)
                .collect(),
        }
    }
}

/// How a minimal access structure was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureSource {
    /// Supports of minimal codewords outside the dual.
    MinimalCodewords,
    /// Brute-force expectation scans over all subsets.
    Oracle,
}

impl fmt::Display for StructureSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureSource::MinimalCodewords => write!(f, "minimal-codewords"),
            StructureSource::Oracle => write!(f, "oracle"),
        }
    }
}

/// A minimal access structure: the antichain of inclusion-minimal
/// authorized sets, with a per-support multiplicity (how many scalar
/// classes of minimal codewords share the support).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessStructure {
    n: usize,
    source: StructureSource,
    gamma_min: Vec<PartySet>,
    multiplicity: Vec<usize>,
}

impl AccessStructure {
    /// Validate bounds and the antichain property, then sort by
    /// (size, lexicographic).
    pub fn from_minimal_sets(
        n: usize,
        source: StructureSource,
        sets: Vec<(PartySet, usize)>,
    ) -> Result<AccessStructure, AccessError> {
        let mut sets = sets;
        for (s, _) in &sets {
            s.check_bounds(n)?;
        }
        sets.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        sets.dedup_by(|a, b| a.0 == b.0);
        for (i, (a, _)) in sets.iter().enumerate() {
            for (b, _) in &sets[i + 1..] {
                if a.is_subset_of(b) && a != b {
                    return Err(AccessError::NotAntichain {
                        container: b.to_string(),
                        contained: a.to_string(),
                    });
                }
            }
        }
        let (gamma_min, multiplicity) = sets.into_iter().unzip();
        Ok(AccessStructure {
            n,
            source,
            gamma_min,
            multiplicity,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> StructureSource {
        self.source
    }

    /// Minimal authorized sets, sorted by (size, lexicographic).
    pub fn gamma_min(&self) -> &[PartySet] {
        &self.gamma_min
    }

    /// Multiplicities aligned with [`gamma_min`](Self::gamma_min).
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicity
    }

    /// Monotone closure test: `T` is authorized iff it contains some
    /// minimal authorized set.
    pub fn is_authorized(&self, t: &PartySet) -> bool {
        self.gamma_min.iter().any(|m| m.is_subset_of(t))
    }
}

/// Γ_m from Theorem-style minimal codewords: the supports of all minimal
/// codewords of `C \ C⊥`.
pub fn gamma_from_minimal_codewords(scheme: &QssScheme) -> Result<AccessStructure, AccessError> {
    gamma_from_minimal_codewords_with_cap(scheme, DEFAULT_ENUMERATION_CAP)
}

pub fn gamma_from_minimal_codewords_with_cap(
    scheme: &QssScheme,
    cap: u128,
) -> Result<AccessStructure, AccessError> {
    let mins = scheme.code().minimal_codewords_outside_dual_with_cap(cap)?;
    let sets = mins
        .iter()
        .map(|m| Ok((PartySet::new(m.word.support())?, m.multiplicity)))
        .collect::<Result<Vec<_>, AccessError>>()?;
    AccessStructure::from_minimal_sets(scheme.n(), StructureSource::MinimalCodewords, sets)
}

/// Resource guards and tolerance for the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Expectation comparison tolerance.
    pub eps: f64,
    /// Cap on statevector amplitudes (`q^n`).
    pub max_amplitudes: u128,
    /// Cap on `q^(2|T|)` operator words per subset scan.
    pub max_operators: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            eps: 1e-9,
            max_amplitudes: 1 << 20,
            max_operators: 1 << 16,
        }
    }
}

/// Why a subset check failed.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorWitness {
    /// Diagonal expectations differ between two encoded states.
    ExpectationMismatch {
        operator: PauliWord,
        first: u64,
        second: u64,
        values: (Complex64, Complex64),
    },
    /// An off-diagonal matrix element is nonzero.
    CrossTerm {
        operator: PauliWord,
        first: u64,
        second: u64,
        value: Complex64,
    },
}

/// Outcome of a single-subset oracle check.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetCheck {
    pub holds: bool,
    pub operators_checked: u64,
    pub witness: Option<OperatorWitness>,
}

/// Dense words `(a|b)` with support inside a fixed set of 0-based positions.
struct WordScan {
    field: Field,
    n: usize,
    positions: Vec<usize>,
    counter: u64,
    total: u64,
}

impl WordScan {
    fn new(field: &Field, n: usize, positions: Vec<usize>) -> WordScan {
        let total = field.q().pow(2 * positions.len() as u32);
        WordScan {
            field: field.clone(),
            n,
            positions,
            counter: 0,
            total,
        }
    }
}

impl Iterator for WordScan {
    type Item = PauliWord;

    fn next(&mut self) -> Option<PauliWord> {
        if self.counter >= self.total {
            return None;
        }
        let q = self.field.q();
        let mut rem = self.counter;
        self.counter += 1;
        let mut a = vec![0u64; self.n];
        let mut b = vec![0u64; self.n];
        for &pos in &self.positions {
            a[pos] = rem % q;
            rem /= q;
            b[pos] = rem % q;
            rem /= q;
        }
        Some(PauliWord::new(&self.field, a, b).expect("digits are canonical"))
    }
}

/// Brute-force subset classifier for one scheme, holding the `q` encoded
/// basis states.
#[derive(Debug)]
pub struct AccessOracle<'a> {
    scheme: &'a QssScheme,
    states: Vec<StateVector>,
    config: OracleConfig,
}

impl<'a> AccessOracle<'a> {
    pub fn new(scheme: &'a QssScheme) -> Result<AccessOracle<'a>, AccessError> {
        Self::with_config(scheme, OracleConfig::default())
    }

    pub fn with_config(
        scheme: &'a QssScheme,
        config: OracleConfig,
    ) -> Result<AccessOracle<'a>, AccessError> {
        let f = scheme.field();
        let q = f.q();
        let amplitudes = (q as u128).pow(scheme.n() as u32);
        if amplitudes > config.max_amplitudes {
            return Err(AccessError::Sim(SimError::DimensionTooLarge {
                amplitudes,
                cap: config.max_amplitudes,
            }));
        }
        let states = (0..q)
            .map(|i| {
                let secret = f.element(i).map_err(SimError::from)?;
                encode_secret_with_cap(
                    scheme,
                    &secret,
                    config.max_amplitudes.saturating_mul(q as u128),
                )
            })
            .collect::<Result<Vec<_>, SimError>>()?;
        Ok(AccessOracle {
            scheme,
            states,
            config,
        })
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// Encoded state for secret `i`.
    pub fn state(&self, i: u64) -> &StateVector {
        &self.states[i as usize]
    }

    fn positions_for(&self, t: &PartySet) -> Result<Vec<usize>, AccessError> {
        t.check_bounds(self.scheme.n())?;
        Ok(t.parties().iter().map(|p| p - 1).collect())
    }

    fn cap_check(&self, width: usize) -> Result<(), AccessError> {
        let operators = (self.scheme.field().q() as u128).pow(2 * width as u32);
        if operators > self.config.max_operators {
            return Err(AccessError::OperatorScanTooLarge {
                operators,
                cap: self.config.max_operators,
            });
        }
        Ok(())
    }

    /// `T` is unauthorized iff every basis word supported inside `T` has
    /// the same expectation on every encoded state (compared pairwise
    /// against state 0 within eps).
    pub fn is_unauthorized(&self, t: &PartySet) -> Result<SubsetCheck, AccessError> {
        let positions = self.positions_for(t)?;
        self.cap_check(positions.len())?;
        let q = self.scheme.field().q();
        let mut checked = 0u64;
        for word in WordScan::new(self.scheme.field(), self.scheme.n(), positions) {
            if word.is_identity() {
                continue;
            }
            checked += 1;
            let action = self.states[0]
                .compile_action(&word)
                .map_err(AccessError::Sim)?;
            let base = self.states[0].matrix_element_action(&action, &self.states[0]);
            for i in 1..q {
                let v = self.states[i as usize]
                    .matrix_element_action(&action, &self.states[i as usize]);
                if (v - base).norm() > self.config.eps {
                    return Ok(SubsetCheck {
                        holds: false,
                        operators_checked: checked,
                        witness: Some(OperatorWitness::ExpectationMismatch {
                            operator: word,
                            first: 0,
                            second: i,
                            values: (base, v),
                        }),
                    });
                }
            }
        }
        Ok(SubsetCheck {
            holds: true,
            operators_checked: checked,
            witness: None,
        })
    }

    /// `T` is authorized iff every basis word supported inside the
    /// complement of `T` has vanishing cross terms `⟨ψ_i|E|ψ_j⟩` for all
    /// `i ≠ j`.
    pub fn is_authorized(&self, t: &PartySet) -> Result<SubsetCheck, AccessError> {
        t.check_bounds(self.scheme.n())?;
        let complement = t.complement(self.scheme.n());
        let positions = self.positions_for(&complement)?;
        self.cap_check(positions.len())?;
        let q = self.scheme.field().q();
        let mut checked = 0u64;
        for word in WordScan::new(self.scheme.field(), self.scheme.n(), positions) {
            checked += 1;
            let action = self.states[0]
                .compile_action(&word)
                .map_err(AccessError::Sim)?;
            for i in 0..q {
                for j in 0..q {
                    if i == j {
                        continue;
                    }
                    let v = self.states[i as usize]
                        .matrix_element_action(&action, &self.states[j as usize]);
                    if v.norm() > self.config.eps {
                        return Ok(SubsetCheck {
                            holds: false,
                            operators_checked: checked,
                            witness: Some(OperatorWitness::CrossTerm {
                                operator: word,
                                first: i,
                                second: j,
                                value: v,
                            }),
                        });
                    }
                }
            }
        }
        Ok(SubsetCheck {
            holds: true,
            operators_checked: checked,
            witness: None,
        })
    }

    /// Classify all `2^n` subsets, check the authorized/unauthorized
    /// dichotomy and closure properties, and extract the minimal authorized
    /// sets.
    pub fn classify_subsets(&self) -> Result<OracleScan, AccessError> {
        let n = self.scheme.n();
        if n > 24 {
            return Err(AccessError::OperatorScanTooLarge {
                operators: 1u128 << n,
                cap: 1 << 24,
            });
        }
        let total: u32 = 1 << n;
        let outcomes: Vec<(bool, bool)> = (0..total)
            .into_par_iter()
            .map(|mask| {
                let t = PartySet::from_mask(mask);
                let unauth = self.is_unauthorized(&t)?;
                let auth = self.is_authorized(&t)?;
                Ok((auth.holds, unauth.holds))
            })
            .collect::<Result<Vec<_>, AccessError>>()?;

        let authorized: Vec<bool> = outcomes.iter().map(|&(a, _)| a).collect();
        let mut dichotomy_violations = Vec::new();
        for (mask, &(a, u)) in outcomes.iter().enumerate() {
            if a == u {
                dichotomy_violations.push(PartySet::from_mask(mask as u32));
            }
        }

        // upward closure of authorized / downward closure of unauthorized,
        // via single-bit steps
        let mut upward_ok = true;
        let mut downward_ok = true;
        for mask in 0..total {
            for b in 0..n {
                let bit = 1u32 << b;
                if mask & bit == 0 {
                    let sup = (mask | bit) as usize;
                    if authorized[mask as usize] && !authorized[sup] {
                        upward_ok = false;
                    }
                    if outcomes[sup].1 && !outcomes[mask as usize].1 {
                        downward_ok = false;
                    }
                }
            }
        }

        let full: u32 = total - 1;
        let mut complement_conflicts = Vec::new();
        for mask in 0..total {
            if authorized[mask as usize]
                && authorized[(full ^ mask) as usize]
                && mask <= full ^ mask
            {
                complement_conflicts.push(PartySet::from_mask(mask));
            }
        }

        // minimal authorized sets: no proper subset is authorized
        let mut gamma = Vec::new();
        for mask in 0..total {
            if !authorized[mask as usize] {
                continue;
            }
            let mut minimal = true;
            let mut sub = (mask.wrapping_sub(1)) & mask;
            loop {
                if authorized[sub as usize] {
                    minimal = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            if minimal && mask != 0 {
                gamma.push((PartySet::from_mask(mask), 1));
            }
        }

        let authorized_subsets = authorized.iter().filter(|&&a| a).count() as u64;
        let structure = AccessStructure::from_minimal_sets(n, StructureSource::Oracle, gamma)?;
        Ok(OracleScan {
            structure,
            report: DichotomyReport {
                subsets_checked: total as u64,
                authorized_subsets,
                unauthorized_subsets: total as u64 - authorized_subsets,
                dichotomy_violations,
                upward_closure_ok: upward_ok,
                downward_closure_ok: downward_ok,
                complement_conflicts,
            },
        })
    }
}

/// Full-scan result: the extracted structure plus consistency checks.
#[derive(Debug, Clone)]
pub struct OracleScan {
    pub structure: AccessStructure,
    pub report: DichotomyReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DichotomyReport {
    pub subsets_checked: u64,
    pub authorized_subsets: u64,
    pub unauthorized_subsets: u64,
    /// Subsets classified as both or neither (must be empty).
    pub dichotomy_violations: Vec<PartySet>,
    pub upward_closure_ok: bool,
    pub downward_closure_ok: bool,
    /// `T` with both `T` and its complement authorized (must be empty).
    pub complement_conflicts: Vec<PartySet>,
}

impl DichotomyReport {
    pub fn consistent(&self) -> bool {
        self.dichotomy_violations.is_empty()
            && self.upward_closure_ok
            && self.downward_closure_ok
            && self.complement_conflicts.is_empty()
    }
}

/// Symmetric difference of two minimal access structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDiff {
    pub only_in_left: Vec<PartySet>,
    pub only_in_right: Vec<PartySet>,
}

impl StructureDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_left.is_empty() && self.only_in_right.is_empty()
    }
}

pub fn compare_structures(
    left: &AccessStructure,
    right: &AccessStructure,
) -> Result<StructureDiff, AccessError> {
    if left.n() != right.n() {
        return Err(AccessError::SizeMismatch(left.n(), right.n()));
    }
    let l: BTreeSet<&PartySet> = left.gamma_min().iter().collect();
    let r: BTreeSet<&PartySet> = right.gamma_min().iter().collect();
    Ok(StructureDiff {
        only_in_left: l.difference(&r).map(|s| (*s).clone()).collect(),
        only_in_right: r.difference(&l).map(|s| (*s).clone()).collect(),
    })
}

#[derive(Debug, Clone)]
pub struct DetectabilityViolation {
    pub codeword: Codeword,
    pub subset: PartySet,
    pub operator: PauliWord,
    pub class: ErrorClass,
}

/// Exhaustive check report for proper subsets of minimal supports.
#[derive(Debug, Clone)]
pub struct DetectabilityReport {
    pub minimal_codewords: usize,
    pub subsets_checked: u64,
    pub operators_checked: u64,
    pub violations: Vec<DetectabilityViolation>,
}

impl DetectabilityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every minimal codeword `c` and every proper subset `T ⊂ supp(c)`
/// with `|T| ≤ max_subset_size`, classify every word supported in `T`:
/// anything other than the identity must be detectable. No statevector is
/// involved.
pub fn detectability_scan(
    scheme: &QssScheme,
    max_subset_size: usize,
) -> Result<DetectabilityReport, AccessError> {
    let mins = scheme.code().minimal_codewords_outside_dual()?;
    let f = scheme.field().clone();
    let mut subsets_checked = 0u64;
    let mut operators_checked = 0u64;
    let mut violations = Vec::new();
    for m in &mins {
        let support = m.word.support();
        let s = support.len();
        for mask in 0u32..(1 << s) {
            if mask == (1 << s) - 1 {
                continue; // proper subsets only
            }
            let width = mask.count_ones() as usize;
            if width > max_subset_size {
                continue;
            }
            subsets_checked += 1;
            let positions: Vec<usize> = (0..s)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| support[b] - 1)
                .collect();
            let subset = PartySet::new(positions.iter().map(|p| p + 1))?;
            for word in WordScan::new(&f, scheme.n(), positions.clone()) {
                operators_checked += 1;
                let class = scheme.classify_error(&word)?;
                let ok = if word.is_identity() {
                    class == ErrorClass::StabilizerElement
                } else {
                    class == ErrorClass::Detectable
                };
                if !ok {
                    violations.push(DetectabilityViolation {
                        codeword: m.word.clone(),
                        subset: subset.clone(),
                        operator: word,
                        class,
                    });
                }
            }
        }
    }
    Ok(DetectabilityReport {
        minimal_codewords: mins.len(),
        subsets_checked,
        operators_checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example_codes;

    fn ternary_scheme() -> QssScheme {
        QssScheme::build(example_codes::ternary_zero_sum(), None, false).unwrap()
    }

    fn degenerate_scheme() -> QssScheme {
        QssScheme::build(example_codes::degenerate_3_2(), None, false).unwrap()
    }

    #[test]
    fn party_set_basics() {
        let s = PartySet::new([3, 1, 3, 2]).unwrap();
        assert_eq!(s.parties(), &[1, 2, 3]);
        assert_eq!(
            PartySet::new([0, 1]).unwrap_err(),
            AccessError::ZeroPartyIndex
        );
        let t = PartySet::new([1, 3]).unwrap();
        assert!(t.is_subset_of(&s));
        assert!(!s.is_subset_of(&t));
        assert_eq!(t.complement(4).parties(), &[2, 4]);
        assert_eq!(format!("{t}"), "{1,3}");
        assert!(PartySet::empty().is_subset_of(&t));
    }

    #[test]
    fn structure_requires_antichain() {
        let a = PartySet::new([1, 2]).unwrap();
        let b = PartySet::new([1, 2, 3]).unwrap();
        let err = AccessStructure::from_minimal_sets(
            3,
            StructureSource::Oracle,
            vec![(a.clone(), 1), (b, 1)],
        )
        .unwrap_err();
        assert!(matches!(err, AccessError::NotAntichain { .. }));
        let err = AccessStructure::from_minimal_sets(1, StructureSource::Oracle, vec![(a, 1)])
            .unwrap_err();
        assert!(matches!(
            err,
            AccessError::PartyOutOfRange { index: 2, n: 1 }
        ));
    }

    #[test]
    fn monotone_closure_membership() {
        let gamma = gamma_from_minimal_codewords(&ternary_scheme()).unwrap();
        assert!(gamma.is_authorized(&PartySet::new([1, 2]).unwrap()));
        assert!(gamma.is_authorized(&PartySet::new([1, 2, 3]).unwrap()));
        assert!(!gamma.is_authorized(&PartySet::new([2]).unwrap()));
        assert!(!gamma.is_authorized(&PartySet::empty()));
    }

    #[test]
    fn theorem_structures_for_small_schemes() {
        let gamma = gamma_from_minimal_codewords(&degenerate_scheme()).unwrap();
        assert_eq!(gamma.gamma_min(), &[PartySet::new([3]).unwrap()]);

        let gamma3 = gamma_from_minimal_codewords(&ternary_scheme()).unwrap();
        let want: Vec<PartySet> = [[1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|s| PartySet::new(s.iter().copied()).unwrap())
            .collect();
        assert_eq!(gamma3.gamma_min(), &want[..]);
        assert_eq!(gamma3.multiplicities(), &[1, 1, 1]);

        let steane = QssScheme::build(example_codes::hamming_7_4(), None, false).unwrap();
        let gamma7 = gamma_from_minimal_codewords(&steane).unwrap();
        assert_eq!(gamma7.gamma_min().len(), 7);
        assert!(gamma7.gamma_min().iter().all(|s| s.len() == 3));
    }

    #[test]
    fn oracle_empty_and_full_sets() {
        let scheme = ternary_scheme();
        let oracle = AccessOracle::new(&scheme).unwrap();
        let empty = oracle.is_unauthorized(&PartySet::empty()).unwrap();
        assert!(empty.holds);
        let full = oracle
            .is_authorized(&PartySet::new([1, 2, 3]).unwrap())
            .unwrap();
        assert!(full.holds);
        assert_eq!(full.operators_checked, 1); // identity only
    }

    #[test]
    fn oracle_spot_classifications() {
        let scheme = ternary_scheme();
        let oracle = AccessOracle::new(&scheme).unwrap();
        let single = PartySet::new([1]).unwrap();
        assert!(oracle.is_unauthorized(&single).unwrap().holds);
        assert!(!oracle.is_authorized(&single).unwrap().holds);
        let pair = PartySet::new([1, 2]).unwrap();
        assert!(oracle.is_authorized(&pair).unwrap().holds);
        let failed = oracle.is_unauthorized(&pair).unwrap();
        assert!(!failed.holds);
        assert!(matches!(
            failed.witness,
            Some(OperatorWitness::ExpectationMismatch { .. })
        ));
    }

    #[test]
    fn oracle_matches_theorem_on_ternary() {
        let scheme = ternary_scheme();
        let oracle = AccessOracle::new(&scheme).unwrap();
        let scan = oracle.classify_subsets().unwrap();
        assert!(scan.report.consistent());
        assert_eq!(scan.report.subsets_checked, 8);
        let theorem = gamma_from_minimal_codewords(&scheme).unwrap();
        let diff = compare_structures(&theorem, &scan.structure).unwrap();
        assert!(diff.is_empty());
    }

    #[test]
    fn oracle_matches_theorem_on_degenerate() {
        let scheme = degenerate_scheme();
        let oracle = AccessOracle::new(&scheme).unwrap();
        let scan = oracle.classify_subsets().unwrap();
        assert!(scan.report.consistent());
        assert_eq!(scan.structure.gamma_min(), &[PartySet::new([3]).unwrap()]);
        let theorem = gamma_from_minimal_codewords(&scheme).unwrap();
        assert!(compare_structures(&theorem, &scan.structure)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn caps_are_enforced() {
        let scheme = ternary_scheme();
        let tight = OracleConfig {
            max_operators: 8,
            ..OracleConfig::default()
        };
        let oracle = AccessOracle::with_config(&scheme, tight).unwrap();
        let err = oracle
            .is_unauthorized(&PartySet::new([1, 2]).unwrap())
            .unwrap_err();
        assert!(matches!(
            err,
            AccessError::OperatorScanTooLarge {
                operators: 81,
                cap: 8
            }
        ));
        let tiny_state = OracleConfig {
            max_amplitudes: 8,
            ..OracleConfig::default()
        };
        assert!(matches!(
            AccessOracle::with_config(&scheme, tiny_state).unwrap_err(),
            AccessError::Sim(SimError::DimensionTooLarge {
                amplitudes: 27,
                cap: 8
            })
        ));
    }

    #[test]
    fn out_of_range_subsets_rejected() {
        let scheme = ternary_scheme();
        let oracle = AccessOracle::new(&scheme).unwrap();
        let err = oracle
            .is_unauthorized(&PartySet::new([4]).unwrap())
            .unwrap_err();
        assert!(matches!(
            err,
            AccessError::PartyOutOfRange { index: 4, n: 3 }
        ));
    }

    #[test]
    fn compare_structures_diff_and_mismatch() {
        let a = AccessStructure::from_minimal_sets(
            3,
            StructureSource::Oracle,
            vec![(PartySet::new([1, 2]).unwrap(), 1)],
        )
        .unwrap();
        let b = AccessStructure::from_minimal_sets(
            3,
            StructureSource::Oracle,
            vec![(PartySet::new([2, 3]).unwrap(), 1)],
        )
        .unwrap();
        let diff = compare_structures(&a, &b).unwrap();
        assert_eq!(diff.only_in_left, vec![PartySet::new([1, 2]).unwrap()]);
        assert_eq!(diff.only_in_right, vec![PartySet::new([2, 3]).unwrap()]);
        assert!(compare_structures(&a, &a).unwrap().is_empty());
        let c = AccessStructure::from_minimal_sets(4, StructureSource::Oracle, vec![]).unwrap();
        assert_eq!(
            compare_structures(&a, &c).unwrap_err(),
            AccessError::SizeMismatch(3, 4)
        );
    }

    #[test]
    fn detectability_scan_on_small_schemes() {
        for scheme in [ternary_scheme(), degenerate_scheme()] {
            let report = detectability_scan(&scheme, 4).unwrap();
            assert!(report.passed());
            assert!(report.operators_checked > 0);
        }
    }
}

//! Dense statevector simulation of `n` qudits over `F_q`: Pauli operators
//! `X(a)Z(b)`, coset-state encoding, and the ancilla-based recovery circuit
//! built from multiplier and generalized-CNOT gates.
//!
//! Basis states are labelled by vectors in `F_q^n`; the flat index is the
//! base-`q` integer with the leftmost qudit most significant. Amplitudes are
//! complex doubles — phases here are p-th roots of unity over `√|C⊥|`, far
//! inside double precision at the sizes the enumeration caps allow.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::codes::{CodeError, Codeword};
use crate::css::{PauliWord, QssScheme};
use crate::gf::{Field, FieldElement, GfError};

/// Default guard on allocated amplitudes (`q^(n+1)`, ancilla included).
pub const DEFAULT_AMPLITUDE_CAP: u128 = 1 << 22;

/// Comparison tolerance for readout and fidelity checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps: f64) -> Tolerance {
        assert!(eps > 0.0, "tolerance must be positive");
        Tolerance { eps }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("state of {amplitudes} amplitudes exceeds the cap of {cap}")]
    DimensionTooLarge { amplitudes: u128, cap: u128 },
    #[error("state dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operator length {got} does not match {expected} qudits")]
    LengthMismatch { expected: usize, got: usize },
    #[error("qudit index {index} out of range for {n} qudits")]
    QuditOutOfRange { index: usize, n: usize },
    #[error("multiplier gate requires a nonzero scalar")]
    ZeroMultiplier,
    #[error("control and target must be distinct wires")]
    SameWire,
    #[error("witness codeword is not in C \\ C⊥")]
    NotAuthorizedWitness,
    #[error("ancilla readout is not deterministic (top mass {top_mass})")]
    NonDeterministicAncilla { top_mass: f64 },
    #[error("amplitudes have zero norm")]
    ZeroNorm,
}

/// Compiled action of `X(a)Z(b)` on flat indices:
/// `out[dst[i]] = phase[i] * in[i]`.
pub(crate) struct PauliAction {
    dst: Vec<u64>,
    phase: Vec<Complex64>,
}

/// A normalized pure state of `num_qudits` qudits.
#[derive(Clone, PartialEq)]
pub struct StateVector {
    field: Field,
    num_qudits: usize,
    amps: Vec<Complex64>,
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StateVector({} qudits over {}, dim {})",
            self.num_qudits,
            self.field,
            self.amps.len()
        )
    }
}

fn checked_dim(q: u64, n: usize, cap: u128) -> Result<usize, SimError> {
    let amplitudes = (q as u128)
        .checked_pow(n as u32)
        .ok_or(SimError::DimensionTooLarge {
            amplitudes: u128::MAX,
            cap,
        })?;
    if amplitudes > cap {
        return Err(SimError::DimensionTooLarge { amplitudes, cap });
    }
    Ok(amplitudes as usize)
}

/// `ω^r` for `ω = e^{2πi/p}`.
fn omega_powers(p: u64) -> Vec<Complex64> {
    (0..p)
        .map(|r| Complex64::from_polar(1.0, TAU * r as f64 / p as f64))
        .collect()
}

impl StateVector {
    /// The basis state `|x⟩`.
    pub fn basis_state(field: &Field, digits: &[u64]) -> Result<StateVector, SimError> {
        Self::basis_state_with_cap(field, digits, DEFAULT_AMPLITUDE_CAP)
    }

    pub fn basis_state_with_cap(
        field: &Field,
        digits: &[u64],
        cap: u128,
    ) -> Result<StateVector, SimError> {
        for &d in digits {
            field.check(d)?;
        }
        let dim = checked_dim(field.q(), digits.len(), cap)?;
        let mut amps = vec![Complex64::ZERO; dim];
        let idx = Self::index_of(field.q(), digits);
        amps[idx] = Complex64::ONE;
        Ok(StateVector {
            field: field.clone(),
            num_qudits: digits.len(),
            amps,
        })
    }

    /// Build from raw amplitudes; the result is normalized.
    pub fn from_amplitudes(
        field: &Field,
        num_qudits: usize,
        amps: Vec<Complex64>,
    ) -> Result<StateVector, SimError> {
        let dim = checked_dim(field.q(), num_qudits, DEFAULT_AMPLITUDE_CAP)?;
        if amps.len() != dim {
            return Err(SimError::DimensionMismatch {
                left: dim,
                right: amps.len(),
            });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(SimError::ZeroNorm);
        }
        let amps = amps.into_iter().map(|a| a / norm).collect();
        Ok(StateVector {
            field: field.clone(),
            num_qudits,
            amps,
        })
    }

    fn index_of(q: u64, digits: &[u64]) -> usize {
        digits
            .iter()
            .fold(0usize, |acc, &d| acc * q as usize + d as usize)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_qudits(&self) -> usize {
        self.num_qudits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude of the basis state labelled by `digits`.
    pub fn amplitude(&self, digits: &[u64]) -> Result<Complex64, SimError> {
        if digits.len() != self.num_qudits {
            return Err(SimError::LengthMismatch {
                expected: self.num_qudits,
                got: digits.len(),
            });
        }
        for &d in digits {
            self.field.check(d)?;
        }
        Ok(self.amps[Self::index_of(self.field.q(), digits)])
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    #[inline]
    fn stride(&self, qudit: usize) -> usize {
        (self.field.q() as usize).pow((self.num_qudits - 1 - qudit) as u32)
    }

    fn check_qudit(&self, qudit: usize) -> Result<(), SimError> {
        if qudit >= self.num_qudits {
            return Err(SimError::QuditOutOfRange {
                index: qudit,
                n: self.num_qudits,
            });
        }
        Ok(())
    }

    pub(crate) fn compile_action(&self, e: &PauliWord) -> Result<PauliAction, SimError> {
        if e.field() != &self.field {
            return Err(GfError::FieldMismatch.into());
        }
        if e.len() != self.num_qudits {
            return Err(SimError::LengthMismatch {
                expected: self.num_qudits,
                got: e.len(),
            });
        }
        let f = &self.field;
        let q = f.q();
        let p = f.p();
        let omega = omega_powers(p);
        let n = self.num_qudits;
        // per-qudit digit tables: shifted digit and trace-phase exponent
        let mut shifted = vec![0u64; n * q as usize];
        let mut exps = vec![0u64; n * q as usize];
        for t in 0..n {
            let (a, b) = (e.x_part()[t], e.z_part()[t]);
            for d in 0..q {
                shifted[t * q as usize + d as usize] = f.add(d, a);
                exps[t * q as usize + d as usize] = f.trace(f.mul(b, d));
            }
        }
        let dim = self.amps.len();
        let mut dst = vec![0u64; dim];
        let mut phase = vec![Complex64::ONE; dim];
        let mut digits = vec![0u64; n];
        for src in 0..dim {
            let mut target = 0u64;
            let mut exp = 0u64;
            for (t, &d) in digits.iter().enumerate() {
                target = target * q + shifted[t * q as usize + d as usize];
                exp += exps[t * q as usize + d as usize];
            }
            dst[src] = target;
            phase[src] = omega[(exp % p) as usize];
            // odometer increment
            for t in (0..n).rev() {
                digits[t] += 1;
                if digits[t] == q {
                    digits[t] = 0;
                } else {
                    break;
                }
            }
        }
        Ok(PauliAction { dst, phase })
    }

    /// Apply `X(a)Z(b)`: `|x⟩ ↦ ω^{tr(b·x)} |x + a⟩` (phase first, then
    /// shift). A permutation times unit phases, so the norm is preserved.
    pub fn apply_pauli(&mut self, e: &PauliWord) -> Result<(), SimError> {
        let action = self.compile_action(e)?;
        self.apply_action(&action);
        Ok(())
    }

    pub(crate) fn apply_action(&mut self, action: &PauliAction) {
        let mut out = vec![Complex64::ZERO; self.amps.len()];
        for (src, &amp) in self.amps.iter().enumerate() {
            out[action.dst[src] as usize] = action.phase[src] * amp;
        }
        self.amps = out;
    }

    /// The multiplier gate `M(c): |x⟩ ↦ |c·x⟩` on one qudit.
    pub fn mult_gate(&mut self, qudit: usize, c: &FieldElement) -> Result<(), SimError> {
        if c.field() != &self.field {
            return Err(GfError::FieldMismatch.into());
        }
        if c.is_zero() {
            return Err(SimError::ZeroMultiplier);
        }
        self.check_qudit(qudit)?;
        let f = self.field.clone();
        let q = f.q() as usize;
        let stride = self.stride(qudit);
        let mut out = vec![Complex64::ZERO; self.amps.len()];
        for (src, &amp) in self.amps.iter().enumerate() {
            let d = (src / stride) % q;
            let nd = f.mul(c.value(), d as u64) as usize;
            let dst = src - d * stride + nd * stride;
            out[dst] = amp;
        }
        self.amps = out;
        Ok(())
    }

    /// The generalized CNOT `A: |x⟩|y⟩ ↦ |x⟩|x + y⟩`.
    pub fn cnot_gate(&mut self, ctrl: usize, tgt: usize) -> Result<(), SimError> {
        if ctrl == tgt {
            return Err(SimError::SameWire);
        }
        self.check_qudit(ctrl)?;
        self.check_qudit(tgt)?;
        let f = self.field.clone();
        let q = f.q() as usize;
        let (cs, ts) = (self.stride(ctrl), self.stride(tgt));
        let mut out = vec![Complex64::ZERO; self.amps.len()];
        for (src, &amp) in self.amps.iter().enumerate() {
            let x = (src / cs) % q;
            let y = (src / ts) % q;
            let ny = f.add(x as u64, y as u64) as usize;
            let dst = src - y * ts + ny * ts;
            out[dst] = amp;
        }
        self.amps = out;
        Ok(())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64, SimError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch.into());
        }
        if self.dim() != other.dim() {
            return Err(SimError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `⟨self| X(a)Z(b) |other⟩`.
    pub fn matrix_element(
        &self,
        e: &PauliWord,
        other: &StateVector,
    ) -> Result<Complex64, SimError> {
        if self.dim() != other.dim() {
            return Err(SimError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let action = other.compile_action(e)?;
        Ok(self.matrix_element_action(&action, other))
    }

    pub(crate) fn matrix_element_action(
        &self,
        action: &PauliAction,
        other: &StateVector,
    ) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for (src, &amp) in other.amps.iter().enumerate() {
            acc += self.amps[action.dst[src] as usize].conj() * action.phase[src] * amp;
        }
        acc
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64, SimError> {
        Ok(self.inner(other)?.norm_sqr())
    }

    fn append_ancilla(&self) -> StateVector {
        let q = self.field.q() as usize;
        let mut amps = vec![Complex64::ZERO; self.amps.len() * q];
        for (i, &a) in self.amps.iter().enumerate() {
            amps[i * q] = a;
        }
        StateVector {
            field: self.field.clone(),
            num_qudits: self.num_qudits + 1,
            amps,
        }
    }
}

/// Encode a classical secret `i` as the coset state
/// `|C⊥|^{-1/2} Σ_{x∈C⊥} |x + i·g⟩`.
pub fn encode_secret(scheme: &QssScheme, secret: &FieldElement) -> Result<StateVector, SimError> {
    encode_secret_with_cap(scheme, secret, DEFAULT_AMPLITUDE_CAP)
}

pub fn encode_secret_with_cap(
    scheme: &QssScheme,
    secret: &FieldElement,
    cap: u128,
) -> Result<StateVector, SimError> {
    let f = scheme.field();
    if secret.field() != f {
        return Err(GfError::FieldMismatch.into());
    }
    let n = scheme.n();
    // leave headroom for the recovery ancilla
    checked_dim(f.q(), n + 1, cap)?;
    let dim = (f.q() as usize).pow(n as u32);
    let g = scheme.g().coords();
    let i = secret.value();
    let dual_size = scheme.dual_code().codeword_count() as usize;
    let amp = Complex64::new(1.0 / (dual_size as f64).sqrt(), 0.0);
    let mut amps = vec![Complex64::ZERO; dim];
    for x in scheme.dual_code().codewords_with_cap(cap)? {
        let digits: Vec<u64> = x
            .coords()
            .iter()
            .zip(g)
            .map(|(&xc, &gc)| f.add(xc, f.mul(i, gc)))
            .collect();
        amps[StateVector::index_of(f.q(), &digits)] = amp;
    }
    Ok(StateVector {
        field: f.clone(),
        num_qudits: n,
        amps,
    })
}

/// Result of running the recovery circuit.
#[derive(Debug, Clone)]
pub struct Recovery {
    pub secret: FieldElement,
    /// Raw deterministic ancilla readout (`αβ·i`).
    pub ancilla_value: u64,
    /// Probability mass found on the readout value.
    pub ancilla_mass: f64,
    /// The shared state after readout, ancilla removed.
    pub post_state: StateVector,
}

/// Run the recovery circuit for an authorized witness `c ∈ C \ C⊥`: adjoin
/// an ancilla, accumulate `Σ c_j·S_j` into it via `M(c_j)`–CNOT–`M(c_j⁻¹)`
/// sandwiches over `supp(c)`, read it out, and rescale by `(αβ)⁻¹ = (c·g)⁻¹`.
pub fn recover(
    scheme: &QssScheme,
    state: &StateVector,
    witness: &Codeword,
    tol: Tolerance,
) -> Result<Recovery, SimError> {
    let f = scheme.field();
    if witness.field() != f || state.field() != f {
        return Err(GfError::FieldMismatch.into());
    }
    if state.num_qudits() != scheme.n() {
        return Err(SimError::LengthMismatch {
            expected: scheme.n(),
            got: state.num_qudits(),
        });
    }
    if witness.len() != scheme.n()
        || !scheme.code().contains_word(witness)?
        || scheme.code().dual_contains(witness.coords())?
    {
        return Err(SimError::NotAuthorizedWitness);
    }

    let mut work = state.append_ancilla();
    let ancilla = scheme.n();
    for j in witness.support() {
        let share = j - 1;
        let cj = f.element(witness.coords()[share])?;
        work.mult_gate(share, &cj)?;
        work.cnot_gate(share, ancilla)?;
        work.mult_gate(share, &cj.inv()?)?;
    }

    let q = f.q() as usize;
    let mut masses = vec![0.0f64; q];
    for (idx, a) in work.amps.iter().enumerate() {
        masses[idx % q] += a.norm_sqr();
    }
    let (readout, &top_mass) = masses
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("q >= 2");
    if top_mass < 1.0 - tol.eps {
        return Err(SimError::NonDeterministicAncilla { top_mass });
    }

    let scale = 1.0 / top_mass.sqrt();
    let post_amps: Vec<Complex64> = (0..state.dim())
        .map(|i| work.amps[i * q + readout] * scale)
        .collect();
    let post_state = StateVector {
        field: f.clone(),
        num_qudits: scheme.n(),
        amps: post_amps,
    };

    // readout = αβ·i with αβ = c·g, nonzero for any witness in C \ C⊥
    let cg = f.dot(witness.coords(), scheme.g().coords())?;
    let cg_inv = f
        .inv(cg)
        .expect("c·g is nonzero for witnesses outside the dual");
    let secret = f.element(f.mul(cg_inv, readout as u64))?;

    Ok(Recovery {
        secret,
        ancilla_value: readout as u64,
        ancilla_mass: top_mass,
        post_state,
    })
}

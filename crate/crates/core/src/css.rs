//! CSS scheme construction: validate the pair `C⊥ ⊆ C`, pick the coset
//! label `g`, expose the stabilizer matrix, and classify error words.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::codes::{CodeError, Codeword, LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::gf::{Field, FieldElement, GfError};
use crate::mat::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CssError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("the dual code is not contained in the code")]
    NotCss,
    #[error("expected n = 2k - 1; got n = {n}, k = {k}")]
    WrongDimension { n: usize, k: usize },
    #[error(
        "impure code: stabilizer weight {stabilizer_weight} below distance {distance} \
         (set allow_impure to proceed)"
    )]
    ImpureCode {
        stabilizer_weight: usize,
        distance: usize,
    },
    #[error("g must be a codeword of C outside the dual")]
    BadG,
    #[error("operator length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

impl From<GfError> for CssError {
    fn from(e: GfError) -> Self {
        CssError::Code(CodeError::Gf(e))
    }
}

/// An error operator `X(a)Z(b)`, stored as its representative `(a|b)` over
/// `F_q^{2n}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PauliWord {
    field: Field,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl fmt::Debug for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliWord{self}")
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(if self.field.q() <= 10 { "" } else { "," })
        };
        write!(f, "({}|{})", join(&self.x), join(&self.z))
    }
}

impl PauliWord {
    pub fn new(field: &Field, x_shift: Vec<u64>, z_phase: Vec<u64>) -> Result<PauliWord, CssError> {
        if x_shift.len() != z_phase.len() {
            return Err(CssError::LengthMismatch {
                expected: x_shift.len(),
                got: z_phase.len(),
            });
        }
        for &v in x_shift.iter().chain(&z_phase) {
            field.check(v).map_err(CodeError::Gf)?;
        }
        Ok(PauliWord {
            field: field.clone(),
            x: x_shift,
            z: z_phase,
        })
    }

    pub fn identity(field: &Field, n: usize) -> PauliWord {
        PauliWord {
            field: field.clone(),
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    /// `X(a)` with trivial phase part.
    pub fn x_word(field: &Field, a: Vec<u64>) -> Result<PauliWord, CssError> {
        let n = a.len();
        PauliWord::new(field, a, vec![0; n])
    }

    /// `Z(b)` with trivial shift part.
    pub fn z_word(field: &Field, b: Vec<u64>) -> Result<PauliWord, CssError> {
        let n = b.len();
        PauliWord::new(field, vec![0; n], b)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// The shift vector `a` of `X(a)Z(b)`.
    pub fn x_part(&self) -> &[u64] {
        &self.x
    }

    /// The phase vector `b` of `X(a)Z(b)`.
    pub fn z_part(&self) -> &[u64] {
        &self.z
    }

    /// Sorted 1-indexed positions where `(a_t, b_t) ≠ (0, 0)`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&t| self.x[t] != 0 || self.z[t] != 0)
            .map(|t| t + 1)
            .collect()
    }

    pub fn weight(&self) -> usize {
        (0..self.len())
            .filter(|&t| self.x[t] != 0 || self.z[t] != 0)
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }
}

/// Classification of an error word against the code pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Outside `C ⊕ C`: detected by the code.
    Detectable,
    /// Inside `C⊥ ⊕ C⊥`: acts trivially on every code state.
    StabilizerElement,
    /// Inside `(C ⊕ C) \ (C⊥ ⊕ C⊥)`: an undetectable logical action.
    UndetectableLogical,
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ErrorClass::Detectable => "detectable",
            ErrorClass::StabilizerElement => "stabilizer",
            ErrorClass::UndetectableLogical => "undetectable-logical",
        };
        write!(f, "{s}")
    }
}

/// Mode for the pairwise dot-product check over `C \ C⊥`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotCheckMode {
    Exhaustive,
    /// Deterministically seeded random pairs.
    Sample {
        pairs: u64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DotCheckWitness {
    pub x: Codeword,
    pub y: Codeword,
    pub product: u64,
}

/// Outcome of the pairwise dot-product check. Every `x·y` over `C \ C⊥`
/// must be nonzero; over F_2 the distance must additionally be odd.
#[derive(Debug, Clone, PartialEq)]
pub struct DotCheckReport {
    pub passed: bool,
    pub exhaustive: bool,
    pub pairs_checked: u64,
    /// `Some` only when q = 2.
    pub distance_odd: Option<bool>,
    pub witness: Option<DotCheckWitness>,
}

/// A validated secret-sharing scheme built from a CSS pair with
/// `dim C − dim C⊥ = 1`.
#[derive(Clone)]
pub struct QssScheme {
    code: LinearCode,
    dual: LinearCode,
    g: Codeword,
    beta: u64,
    distance: usize,
    pure: bool,
}

impl fmt::Debug for QssScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QssScheme[[{},1,{}]]_{} (pure: {})",
            self.n(),
            self.distance,
            self.field().q(),
            self.pure
        )
    }
}

impl QssScheme {
    /// Validate the pair and assemble the scheme.
    ///
    /// Checks, in order: `C⊥ ⊆ C` (via `H·Hᵀ = 0` and explicit membership
    /// of each parity-check row), `n = 2k − 1`, purity unless
    /// `allow_impure`, and the supplied `g ∈ C \ C⊥` (defaulting to the
    /// lexicographically smallest normalized codeword outside the dual).
    pub fn build(
        code: LinearCode,
        g: Option<Codeword>,
        allow_impure: bool,
    ) -> Result<QssScheme, CssError> {
        Self::build_with_cap(code, g, allow_impure, DEFAULT_ENUMERATION_CAP)
    }

    pub fn build_with_cap(
        code: LinearCode,
        g: Option<Codeword>,
        allow_impure: bool,
        cap: u128,
    ) -> Result<QssScheme, CssError> {
        let h = code.parity_check();
        let hht = h.matmul(&h.transpose()).map_err(CodeError::Gf)?;
        if !hht.is_zero() || !code.dual_contained_in_self()? {
            return Err(CssError::NotCss);
        }
        let (n, k) = (code.length(), code.dimension());
        if n != 2 * k - 1 {
            return Err(CssError::WrongDimension { n, k });
        }
        let dual = code.dual()?;
        let distance = code.min_weight_outside_dual_with_cap(cap)?;
        let stabilizer_weight = dual
            .codewords_with_cap(cap)?
            .filter(|w| !w.is_zero())
            .map(|w| w.weight())
            .min()
            .expect("dual of a strict subcode is nonzero");
        let pure = stabilizer_weight >= distance;
        if !pure && !allow_impure {
            return Err(CssError::ImpureCode {
                stabilizer_weight,
                distance,
            });
        }
        let g = match g {
            Some(g) => {
                if g.field() != code.field()
                    || g.len() != n
                    || !code.contains_word(&g)?
                    || code.dual_contains(g.coords())?
                {
                    return Err(CssError::BadG);
                }
                g
            }
            None => {
                let mut best: Option<Codeword> = None;
                for w in code.codewords_with_cap(cap)? {
                    if w.is_zero() || code.dual_contains(w.coords())? {
                        continue;
                    }
                    let norm = w.normalized();
                    if best.as_ref().is_none_or(|b| norm.coords() < b.coords()) {
                        best = Some(norm);
                    }
                }
                best.expect("C strictly contains its dual")
            }
        };
        let beta = code.field().dot(g.coords(), g.coords())?;
        assert!(beta != 0, "g·g is nonzero for any valid pair");
        Ok(QssScheme {
            code,
            dual,
            g,
            beta,
            distance,
            pure,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn dual_code(&self) -> &LinearCode {
        &self.dual
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    /// Number of parties (= code length).
    pub fn n(&self) -> usize {
        self.code.length()
    }

    pub fn k(&self) -> usize {
        self.code.dimension()
    }

    /// The codeword labelling the encoding cosets.
    pub fn g(&self) -> &Codeword {
        &self.g
    }

    /// `β = g·g`, nonzero by construction.
    pub fn beta(&self) -> FieldElement {
        self.field().element(self.beta).expect("beta is canonical")
    }

    /// Minimum weight of `C \ C⊥`.
    pub fn distance(&self) -> usize {
        self.distance
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    /// The block-diagonal stabilizer matrix `[H 0; 0 H]`, of shape
    /// `2(n−k) × 2n`.
    pub fn stabilizer_matrix(&self) -> Matrix {
        let h = self.code.parity_check();
        let (r, n) = (h.rows(), h.cols());
        let mut s = Matrix::zeros(self.field(), 2 * r, 2 * n);
        for i in 0..r {
            for j in 0..n {
                s.set(i, j, h.get(i, j));
                s.set(r + i, n + j, h.get(i, j));
            }
        }
        s
    }

    /// The stabilizer rows as Pauli words: `(h|0)` for each parity-check
    /// row `h`, followed by `(0|h)`.
    pub fn stabilizer_words(&self) -> Vec<PauliWord> {
        let h = self.code.parity_check();
        let mut out = Vec::with_capacity(2 * h.rows());
        for row in h.rows_iter() {
            out.push(PauliWord::x_word(self.field(), row.to_vec()).expect("valid row"));
        }
        for row in h.rows_iter() {
            out.push(PauliWord::z_word(self.field(), row.to_vec()).expect("valid row"));
        }
        out
    }

    /// Classify `(a|b)`: stabilizer if both halves lie in `C⊥`, undetectable
    /// logical if both lie in `C` but not both in `C⊥`, detectable
    /// otherwise.
    pub fn classify_error(&self, e: &PauliWord) -> Result<ErrorClass, CssError> {
        if e.field() != self.field() {
            return Err(GfError::FieldMismatch.into());
        }
        if e.len() != self.n() {
            return Err(CssError::LengthMismatch {
                expected: self.n(),
                got: e.len(),
            });
        }
        let a_dual = self.code.dual_contains(e.x_part())?;
        let b_dual = self.code.dual_contains(e.z_part())?;
        if a_dual && b_dual {
            return Ok(ErrorClass::StabilizerElement);
        }
        let a_in = self.code.contains(e.x_part())?;
        let b_in = self.code.contains(e.z_part())?;
        if a_in && b_in {
            Ok(ErrorClass::UndetectableLogical)
        } else {
            Ok(ErrorClass::Detectable)
        }
    }

    /// Check `x·y ≠ 0` over pairs from `C \ C⊥` (all pairs, or a seeded
    /// sample); for q = 2 also record whether the distance is odd. A failed
    /// report indicates an invalid scheme.
    pub fn pairwise_dot_check(&self, mode: DotCheckMode) -> Result<DotCheckReport, CssError> {
        let distance_odd = (self.field().q() == 2).then_some(self.distance % 2 == 1);
        let mut pairs_checked = 0u64;
        let mut witness = None;

        let mut consider = |x: &Codeword, y: &Codeword| -> Result<bool, CssError> {
            pairs_checked += 1;
            let prod = self.field().dot(x.coords(), y.coords())?;
            if prod == 0 {
                witness = Some(DotCheckWitness {
                    x: x.clone(),
                    y: y.clone(),
                    product: prod,
                });
                return Ok(false);
            }
            Ok(true)
        };

        let exhaustive = match mode {
            DotCheckMode::Exhaustive => {
                let mut outside = Vec::new();
                for w in self.code.codewords()? {
                    if !w.is_zero() && !self.code.dual_contains(w.coords())? {
                        outside.push(w);
                    }
                }
                'outer: for x in &outside {
                    for y in &outside {
                        if !consider(x, y)? {
                            break 'outer;
                        }
                    }
                }
                true
            }
            DotCheckMode::Sample { pairs, seed } => {
                let mut rng = StdRng::seed_from_u64(seed);
                let draw = |rng: &mut StdRng| -> Result<Codeword, CssError> {
                    loop {
                        let coords: Vec<u64> = {
                            let f = self.field();
                            let gen = self.code.generator();
                            let mut acc = vec![0u64; self.n()];
                            for r in 0..self.k() {
                                let d = rng.random_range(0..f.q());
                                if d != 0 {
                                    for (j, &g) in gen.row(r).iter().enumerate() {
                                        acc[j] = f.add(acc[j], f.mul(d, g));
                                    }
                                }
                            }
                            acc
                        };
                        if !coords.iter().all(|&c| c == 0) && !self.code.dual_contains(&coords)? {
                            return Codeword::new(self.field(), coords).map_err(Into::into);
                        }
                    }
                };
                for _ in 0..pairs {
                    let x = draw(&mut rng)?;
                    let y = draw(&mut rng)?;
                    if !consider(&x, &y)? {
                        break;
                    }
                }
                false
            }
        };

        Ok(DotCheckReport {
            passed: witness.is_none() && distance_odd != Some(false),
            exhaustive,
            pairs_checked,
            distance_odd,
            witness,
        })
    }
}

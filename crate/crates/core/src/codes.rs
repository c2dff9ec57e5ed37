//! Linear codes over a finite field: canonical forms, duals, membership,
//! enumeration, the covering relation, and minimal-codeword extraction.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gf::{Field, FieldElement, GfError};
use crate::mat::Matrix;

/// Default guard on `q^k` for full-codebook scans.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error("generator rows span the zero code")]
    ZeroCode,
    #[error("enumerating {count} codewords exceeds the cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the dual code is not contained in the code")]
    NotCssPair,
}

/// A vector of the ambient space `F_q^n`, with weight/support helpers.
#[derive(Clone, PartialEq, Eq)]
pub struct Codeword {
    field: Field,
    coords: Vec<u64>,
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.q() <= 10 {
            for &c in &self.coords {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl Codeword {
    pub fn new(field: &Field, coords: Vec<u64>) -> Result<Codeword, GfError> {
        for &c in &coords {
            field.check(c)?;
        }
        Ok(Codeword {
            field: field.clone(),
            coords,
        })
    }

    pub fn zero(field: &Field, n: usize) -> Codeword {
        Codeword {
            field: field.clone(),
            coords: vec![0; n],
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// Sorted 1-indexed positions of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True iff `supp(other) ⊆ supp(self)`.
    pub fn covers(&self, other: &Codeword) -> Result<bool, CodeError> {
        if self.len() != other.len() {
            return Err(CodeError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(&x, &y)| y == 0 || x != 0))
    }

    /// True iff `other = λ·self` for some nonzero scalar λ (zero words are
    /// scalar multiples only of zero).
    pub fn is_scalar_multiple_of(&self, other: &Codeword) -> bool {
        if self.field != other.field || self.len() != other.len() {
            return false;
        }
        let f = &self.field;
        for lambda in 1..f.q() {
            if self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(&x, &y)| x == f.mul(lambda, y))
            {
                return true;
            }
        }
        false
    }

    /// Scale so the leftmost nonzero coordinate becomes 1; the zero word is
    /// returned unchanged.
    pub fn normalized(&self) -> Codeword {
        let f = &self.field;
        match self.coords.iter().find(|&&c| c != 0) {
            None => self.clone(),
            Some(&lead) => {
                let inv = f.inv(lead).expect("leading coordinate is nonzero");
                Codeword {
                    field: f.clone(),
                    coords: self.coords.iter().map(|&c| f.mul(inv, c)).collect(),
                }
            }
        }
    }

    pub fn dot(&self, other: &Codeword) -> Result<FieldElement, GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch);
        }
        let v = self.field.dot(&self.coords, &other.coords)?;
        self.field.element(v)
    }
}

/// A minimal codeword class: the lexicographically smallest normalized
/// representative for a support, plus how many distinct scalar classes share
/// that support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalCodeword {
    pub word: Codeword,
    pub multiplicity: usize,
}

/// An `[n, k]` linear code held as a canonical (RREF) generator matrix and
/// the canonical generator of its dual.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    gen: Matrix,
    check: Matrix,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}] over {}", self.n, self.k, self.field)
    }
}

impl LinearCode {
    /// Build from spanning rows; the stored generator is the RREF with zero
    /// rows dropped and the parity check is the canonical nullspace basis.
    pub fn from_generator(field: &Field, rows: &[Vec<u64>]) -> Result<LinearCode, CodeError> {
        let m = Matrix::from_rows(field, rows)?;
        let gen = m.row_basis();
        let k = gen.rows();
        if k == 0 {
            return Err(CodeError::ZeroCode);
        }
        let check = gen.nullspace();
        Ok(LinearCode {
            field: field.clone(),
            n: gen.cols(),
            k,
            gen,
            check,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Code length `n`.
    pub fn length(&self) -> usize {
        self.n
    }

    /// Code dimension `k`.
    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.check
    }

    /// The dual code, generated by the parity-check matrix. Errors with
    /// `ZeroCode` when `C` is the full space.
    pub fn dual(&self) -> Result<LinearCode, CodeError> {
        if self.k == self.n {
            return Err(CodeError::ZeroCode);
        }
        Ok(LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            gen: self.check.clone(),
            check: self.gen.clone(),
        })
    }

    fn check_len(&self, v: &[u64]) -> Result<(), CodeError> {
        if v.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Membership: `v ∈ C ⟺ H·vᵀ = 0`.
    pub fn contains(&self, v: &[u64]) -> Result<bool, CodeError> {
        self.check_len(v)?;
        for &x in v {
            self.field.check(x)?;
        }
        Ok(self.check.mul_vec(v)?.iter().all(|&s| s == 0))
    }

    /// Membership in the dual: `v ∈ C⊥ ⟺ G·vᵀ = 0`.
    pub fn dual_contains(&self, v: &[u64]) -> Result<bool, CodeError> {
        self.check_len(v)?;
        for &x in v {
            self.field.check(x)?;
        }
        Ok(self.gen.mul_vec(v)?.iter().all(|&s| s == 0))
    }

    pub fn contains_word(&self, w: &Codeword) -> Result<bool, CodeError> {
        if *w.field() != self.field {
            return Err(GfError::FieldMismatch.into());
        }
        self.contains(w.coords())
    }

    /// Number of codewords, `q^k`.
    pub fn codeword_count(&self) -> u128 {
        (self.field.q() as u128).pow(self.k as u32)
    }

    /// Stream all `q^k` codewords (each message vector times `G`), guarded
    /// by the default enumeration cap.
    pub fn codewords(&self) -> Result<Codewords<'_>, CodeError> {
        self.codewords_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn codewords_with_cap(&self, cap: u128) -> Result<Codewords<'_>, CodeError> {
        let count = self.codeword_count();
        if count > cap {
            return Err(CodeError::EnumerationTooLarge { count, cap });
        }
        Ok(Codewords {
            code: self,
            next: 0,
            total: count as u64,
        })
    }

    /// Verify the CSS precondition `C⊥ ⊆ C` (each parity-check row is a
    /// codeword).
    pub fn dual_contained_in_self(&self) -> Result<bool, CodeError> {
        for row in self.check.rows_iter() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All minimal codewords of `C \ C⊥`: codewords covering nothing of `C`
    /// except their own scalar multiples and zero, normalized at the
    /// leftmost nonzero coordinate, deduplicated by support and sorted by
    /// (weight, support).
    pub fn minimal_codewords_outside_dual(&self) -> Result<Vec<MinimalCodeword>, CodeError> {
        self.minimal_codewords_outside_dual_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn minimal_codewords_outside_dual_with_cap(
        &self,
        cap: u128,
    ) -> Result<Vec<MinimalCodeword>, CodeError> {
        if !self.dual_contained_in_self()? {
            return Err(CodeError::NotCssPair);
        }
        let all: Vec<Codeword> = self.codewords_with_cap(cap)?.collect();
        let mut by_support: BTreeMap<Vec<usize>, Vec<Codeword>> = BTreeMap::new();
        for c in &all {
            if c.is_zero() || self.dual_contains(c.coords())? {
                continue;
            }
            let minimal = all.iter().all(|y| {
                y.is_zero()
                    || c.is_scalar_multiple_of(y)
                    || !c.covers(y).expect("enumerated words share a length")
            });
            if minimal {
                let norm = c.normalized();
                let entry = by_support.entry(norm.support()).or_default();
                if !entry.contains(&norm) {
                    entry.push(norm);
                }
            }
        }
        let mut out: Vec<MinimalCodeword> = by_support
            .into_values()
            .map(|mut words| {
                words.sort_by(|a, b| a.coords().cmp(b.coords()));
                MinimalCodeword {
                    multiplicity: words.len(),
                    word: words.swap_remove(0),
                }
            })
            .collect();
        out.sort_by(|a, b| {
            (a.word.weight(), a.word.support()).cmp(&(b.word.weight(), b.word.support()))
        });
        Ok(out)
    }

    /// Minimum Hamming weight over `C \ C⊥`.
    pub fn min_weight_outside_dual(&self) -> Result<usize, CodeError> {
        self.min_weight_outside_dual_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_weight_outside_dual_with_cap(&self, cap: u128) -> Result<usize, CodeError> {
        if !self.dual_contained_in_self()? {
            return Err(CodeError::NotCssPair);
        }
        let mut best = usize::MAX;
        for c in self.codewords_with_cap(cap)? {
            if c.is_zero() || self.dual_contains(c.coords())? {
                continue;
            }
            best = best.min(c.weight());
        }
        debug_assert!(best < usize::MAX, "C strictly contains its dual");
        Ok(best)
    }
}

/// Iterator over all codewords of a [`LinearCode`].
#[derive(Debug)]
pub struct Codewords<'a> {
    code: &'a LinearCode,
    next: u64,
    total: u64,
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next >= self.total {
            return None;
        }
        let f = self.code.field.clone();
        let q = f.q();
        let mut msg = self.next;
        self.next += 1;
        let mut coords = vec![0u64; self.code.n];
        // row 0 is the most significant message digit
        for r in (0..self.code.k).rev() {
            let digit = msg % q;
            msg /= q;
            if digit != 0 {
                for (j, &g) in self.code.gen.row(r).iter().enumerate() {
                    coords[j] = f.add(coords[j], f.mul(digit, g));
                }
            }
        }
        Some(Codeword { field: f, coords })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.total - self.next) as usize;
        (rem, Some(rem))
    }
}

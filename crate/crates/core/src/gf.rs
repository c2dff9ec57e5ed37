//! Exact arithmetic for prime and prime-power finite fields.
//!
//! Elements of `GF(p^m)` are encoded as integers in `[0, q)` whose base-`p`
//! digits are the ascending-degree coefficients of the representative
//! polynomial. All arithmetic is exact integer arithmetic; nothing in this
//! module touches floating point.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{m} is too large")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("GF({q}) has no built-in modulus; supply an irreducible polynomial")]
    MissingPolynomial { q: u64 },
    #[error("modulus polynomial is reducible over F_{p}")]
    ReduciblePolynomial { p: u64 },
    #[error("bad modulus polynomial: {0}")]
    BadPolynomial(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("value {value} is not an element of a field of order {q}")]
    BadEntry { value: u64, q: u64 },
}

#[derive(Debug, PartialEq, Eq)]
struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Ascending-degree coefficients of the monic irreducible modulus;
    /// empty for prime fields.
    modulus: Vec<u64>,
}

/// A finite field `GF(p^m)`, cheap to clone and share.
#[derive(Clone)]
pub struct Field {
    spec: Arc<FieldSpec>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(GF({}))", self.spec.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.spec.q)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Built-in moduli for the extension fields small enough to show up in
/// hand-written inputs.
fn default_modulus(p: u64, m: u32) -> Option<Vec<u64>> {
    match (p, m) {
        (2, 2) => Some(vec![1, 1, 1]),    // x^2 + x + 1
        (2, 3) => Some(vec![1, 1, 0, 1]), // x^3 + x + 1
        (3, 2) => Some(vec![1, 0, 1]),    // x^2 + 1
        _ => None,
    }
}

// ---- polynomial helpers over F_p (ascending-degree coefficient vectors) ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = mod_inv(f[df], p);
    while r.len() > df {
        let dr = r.len() - 1;
        let factor = mulmod(r[dr], lead_inv, p);
        for (i, &fc) in f.iter().enumerate() {
            let idx = dr - df + i;
            r[idx] = submod(r[idx], mulmod(factor, fc, p), p);
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = addmod(out[i + j], mulmod(ai, bj, p), p);
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

fn poly_powmod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut acc = poly_rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = poly_mulmod(&result, &acc, f, p);
        }
        acc = poly_mulmod(&acc, &acc, f, p);
        exp >>= 1;
    }
    result
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn poly_eval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = addmod(mulmod(acc, x, p), c, p);
    }
    acc
}

/// Monic degree-m polynomials: root test suffices for m <= 3, otherwise
/// check gcd(f, x^(p^i) - x) = 1 for every i up to m/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    if m <= 3 {
        return (0..p).all(|x| poly_eval(f, x, p) != 0);
    }
    let x_poly = vec![0u64, 1];
    let mut frob = x_poly.clone();
    for _ in 1..=(m / 2) {
        frob = poly_powmod(&frob, p, f, p);
        // gcd(f, x^(p^i) - x)
        let mut diff = frob.clone();
        if diff.is_empty() {
            diff = vec![0];
        }
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = submod(diff[1], 1, p);
        poly_trim(&mut diff);
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

// ---- prime-field scalar helpers ----

#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut result = 1u64;
    let mut acc = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, acc, p);
        }
        acc = mulmod(acc, acc, p);
        e >>= 1;
    }
    result
}

impl Field {
    /// Construct `GF(p^m)`. The modulus is required for `m > 1` unless a
    /// built-in default exists (GF(4), GF(8), GF(9)); it is ignored for
    /// prime fields.
    pub fn new(p: u64, m: u32, modulus: Option<Vec<u64>>) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= 1 << 32)
            .ok_or(GfError::FieldTooLarge { p, m })?;
        let modulus = if m == 1 {
            Vec::new()
        } else {
            let mut f = match modulus {
                Some(f) => f,
                None => default_modulus(p, m).ok_or(GfError::MissingPolynomial { q })?,
            };
            if f.iter().any(|&c| c >= p) {
                return Err(GfError::BadPolynomial(format!(
                    "coefficients must lie in [0, {p})"
                )));
            }
            poly_trim(&mut f);
            if f.len() != m as usize + 1 {
                return Err(GfError::BadPolynomial(format!(
                    "expected degree {m}, got degree {}",
                    f.len().max(1) - 1
                )));
            }
            if f[m as usize] != 1 {
                return Err(GfError::BadPolynomial("modulus must be monic".into()));
            }
            if !is_irreducible(&f, p) {
                return Err(GfError::ReduciblePolynomial { p });
            }
            f
        };
        Ok(Field {
            spec: Arc::new(FieldSpec { p, m, q, modulus }),
        })
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field, GfError> {
        Field::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn m(&self) -> u32 {
        self.spec.m
    }

    pub fn q(&self) -> u64 {
        self.spec.q
    }

    /// Ascending-degree modulus coefficients; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.spec.m == 1 {
            None
        } else {
            Some(&self.spec.modulus)
        }
    }

    pub fn element(&self, value: u64) -> Result<FieldElement, GfError> {
        self.check(value)?;
        Ok(FieldElement {
            field: self.clone(),
            value,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 1,
        }
    }

    /// All `q` elements in representative order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.spec.q).map(move |v| FieldElement {
            field: self.clone(),
            value: v,
        })
    }

    #[inline]
    pub fn check(&self, value: u64) -> Result<(), GfError> {
        if value < self.spec.q {
            Ok(())
        } else {
            Err(GfError::BadEntry {
                value,
                q: self.spec.q,
            })
        }
    }

    fn digits(&self, value: u64) -> Vec<u64> {
        let p = self.spec.p;
        let mut v = value;
        (0..self.spec.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    fn pack_digits(&self, digits: &[u64]) -> u64 {
        let p = self.spec.p;
        digits.iter().rev().fold(0u64, |acc, &d| acc * p + (d % p))
    }

    // Representative arithmetic on canonical values in [0, q). Used by the
    // matrix and simulator kernels; debug-asserted rather than checked.

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.spec.q && b < self.spec.q);
        if self.spec.p == 2 {
            a ^ b
        } else if self.spec.m == 1 {
            addmod(a, b, self.spec.p)
        } else {
            let da = self.digits(a);
            let db = self.digits(b);
            let sum: Vec<u64> = da
                .iter()
                .zip(&db)
                .map(|(&x, &y)| addmod(x, y, self.spec.p))
                .collect();
            self.pack_digits(&sum)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.spec.q);
        if self.spec.p == 2 {
            a
        } else if self.spec.m == 1 {
            submod(0, a, self.spec.p)
        } else {
            let da = self.digits(a);
            let neg: Vec<u64> = da.iter().map(|&x| submod(0, x, self.spec.p)).collect();
            self.pack_digits(&neg)
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.spec.q && b < self.spec.q);
        if self.spec.m == 1 {
            mulmod(a, b, self.spec.p)
        } else {
            let prod = poly_mulmod(
                &self.digits(a),
                &self.digits(b),
                &self.spec.modulus,
                self.spec.p,
            );
            self.pack_digits(&prod)
        }
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut result = 1u64;
        let mut acc = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, acc);
            }
            acc = self.mul(acc, acc);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.spec.q - 2))
        }
    }

    pub fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// Trace to the prime subfield: `a + a^p + ... + a^(p^(m-1))`, returned
    /// as its representative in `[0, p)`.
    pub fn trace(&self, a: u64) -> u64 {
        if self.spec.m == 1 {
            return a % self.spec.p;
        }
        let mut acc = a;
        let mut frob = a;
        for _ in 1..self.spec.m {
            frob = self.pow(frob, self.spec.p);
            acc = self.add(acc, frob);
        }
        debug_assert!(acc < self.spec.p, "trace must land in the prime subfield");
        acc
    }

    /// Dot product of representative vectors.
    pub fn dot(&self, u: &[u64], v: &[u64]) -> Result<u64, GfError> {
        if u.len() != v.len() {
            return Err(GfError::LengthMismatch(u.len(), v.len()));
        }
        Ok(u.iter()
            .zip(v)
            .fold(0u64, |acc, (&a, &b)| self.add(acc, self.mul(a, b))))
    }
}

/// An element of a [`Field`], carrying its field handle.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈GF({})", self.value, self.field.q())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, rhs: &FieldElement) -> Result<(), GfError> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(rhs)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.add(self.value, rhs.value),
        })
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(rhs)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.sub(self.value, rhs.value),
        })
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(rhs)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.mul(self.value, rhs.value),
        })
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, GfError> {
        self.same_field(rhs)?;
        let value = self
            .field
            .div(self.value, rhs.value)
            .ok_or(GfError::DivisionByZero)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn inv(&self) -> Result<FieldElement, GfError> {
        let value = self.field.inv(self.value).ok_or(GfError::DivisionByZero)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.neg(self.value),
        }
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.pow(self.value, e),
        }
    }

    /// Trace to the prime subfield, as a representative in `[0, p)`.
    pub fn trace(&self) -> u64 {
        self.field.trace(self.value)
    }
}

/// Dot product of two element vectors. Vectors must be nonempty, of equal
/// length, and over one field.
pub fn dot_product(u: &[FieldElement], v: &[FieldElement]) -> Result<FieldElement, GfError> {
    if u.len() != v.len() || u.is_empty() {
        return Err(GfError::LengthMismatch(u.len(), v.len()));
    }
    let field = u[0].field.clone();
    let mut acc = 0u64;
    for (a, b) in u.iter().zip(v) {
        if a.field != field || b.field != field {
            return Err(GfError::FieldMismatch);
        }
        acc = field.add(acc, field.mul(a.value, b.value));
    }
    Ok(FieldElement { field, value: acc })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small_fields() -> Vec<Field> {
        vec![
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::new(2, 2, None).unwrap(),
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::new(2, 3, None).unwrap(),
            Field::new(3, 2, None).unwrap(),
        ]
    }

    #[test]
    fn constructors() {
        assert_eq!(Field::prime(2).unwrap().q(), 2);
        assert_eq!(Field::prime(3).unwrap().q(), 3);
        let f4 = Field::new(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(f4.modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(
            Field::prime(4).unwrap_err(),
            GfError::NonPrimeCharacteristic(4)
        );
        assert_eq!(Field::new(2, 0, None).unwrap_err(), GfError::ZeroDegree);
        // x^2 + 1 has the root 1 over F_2
        assert_eq!(
            Field::new(2, 2, Some(vec![1, 0, 1])).unwrap_err(),
            GfError::ReduciblePolynomial { p: 2 }
        );
        assert!(matches!(
            Field::new(2, 5, None).unwrap_err(),
            GfError::MissingPolynomial { q: 32 }
        ));
        assert!(matches!(
            Field::new(2, 2, Some(vec![1, 1, 2])).unwrap_err(),
            GfError::BadPolynomial(_)
        ));
    }

    #[test]
    fn degree_five_irreducibility_uses_gcd_path() {
        // x^5 + x^2 + 1 is irreducible over F_2; x^5 + x + 1 factors.
        assert!(Field::new(2, 5, Some(vec![1, 0, 1, 0, 0, 1])).is_ok());
        assert_eq!(
            Field::new(2, 5, Some(vec![1, 1, 0, 0, 0, 1])).unwrap_err(),
            GfError::ReduciblePolynomial { p: 2 }
        );
    }

    #[test]
    fn field_axioms_exhaustive_for_small_orders() {
        for f in all_small_fields() {
            let q = f.q();
            for a in 0..q {
                for b in 0..q {
                    let s = f.add(a, b);
                    let m = f.mul(a, b);
                    assert!(s < q && m < q, "closure in GF({q})");
                    assert_eq!(s, f.add(b, a));
                    assert_eq!(m, f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    let ai = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, ai), 1, "a*inv(a)=1 in GF({q})");
                    assert_eq!(f.inv(ai).unwrap(), a);
                }
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn arithmetic_spot_values() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.inv(2), Some(2));
        let f4 = Field::new(2, 2, None).unwrap();
        // x * x = x + 1 under x^2 + x + 1
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.mul(2, 3), 1); // x(x+1) = x^2 + x = 1
    }

    #[test]
    fn element_api_checks_fields_and_zero_division() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        let a = f2.one();
        let b = f3.one();
        assert_eq!(a.add(&b).unwrap_err(), GfError::FieldMismatch);
        assert_eq!(a.div(&f2.zero()).unwrap_err(), GfError::DivisionByZero);
        assert_eq!(f2.zero().inv().unwrap_err(), GfError::DivisionByZero);
        assert_eq!(
            f3.element(3).unwrap_err(),
            GfError::BadEntry { value: 3, q: 3 }
        );
        assert_eq!(a.add(&a).unwrap().value(), 0);
    }

    #[test]
    fn trace_values_and_linearity() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.trace(1), 1);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.trace(2), 2);
        let f4 = Field::new(2, 2, None).unwrap();
        // tr(x) = x + x^2 = 1
        assert_eq!(f4.trace(2), 1);
        assert_eq!(f4.trace(0), 0);
        assert_eq!(f4.trace(1), 0); // 1 + 1 = 0

        // F_p-linearity, exhaustively for q <= 9
        for f in all_small_fields() {
            let p = f.p();
            for alpha in 0..p {
                for a in 0..f.q() {
                    for b in 0..f.q() {
                        let lhs = f.trace(f.add(f.mul(alpha, a), b));
                        let rhs = (alpha * f.trace(a) + f.trace(b)) % p;
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn dot_product_values_and_bilinearity() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.dot(&[1, 1, 1], &[1, 1, 1]).unwrap(), 1);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.dot(&[0, 1, 2], &[0, 1, 2]).unwrap(), 2);
        // weight-3 binary vector dotted with itself
        let e = [0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1];
        assert_eq!(f2.dot(&e, &e).unwrap(), 1);
        assert_eq!(
            f2.dot(&[1, 0], &[1]).unwrap_err(),
            GfError::LengthMismatch(2, 1)
        );

        // symmetry and bilinearity over a small exhaustive grid
        let f4 = Field::new(2, 2, None).unwrap();
        for u0 in 0..4 {
            for v0 in 0..4 {
                for w0 in 0..4 {
                    for lam in 0..4 {
                        let u = [u0, 1];
                        let v = [v0, 3];
                        let w = [w0, 2];
                        let uv = f4.dot(&u, &v).unwrap();
                        assert_eq!(uv, f4.dot(&v, &u).unwrap());
                        let lu: Vec<u64> = u.iter().map(|&x| f4.mul(lam, x)).collect();
                        assert_eq!(f4.dot(&lu, &v).unwrap(), f4.mul(lam, uv));
                        let upw: Vec<u64> = u.iter().zip(&w).map(|(&x, &y)| f4.add(x, y)).collect();
                        assert_eq!(
                            f4.dot(&upw, &v).unwrap(),
                            f4.add(uv, f4.dot(&w, &v).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn element_dot_product_wrapper() {
        let f3 = Field::prime(3).unwrap();
        let u: Vec<FieldElement> = [0u64, 1, 2]
            .iter()
            .map(|&v| f3.element(v).unwrap())
            .collect();
        assert_eq!(dot_product(&u, &u).unwrap().value(), 2);
        assert!(matches!(
            dot_product(&u[..2], &u).unwrap_err(),
            GfError::LengthMismatch(2, 3)
        ));
    }
}

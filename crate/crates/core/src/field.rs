//! Exact arithmetic in GF(p^e) with a canonical total order on elements.
//!
//! Elements are identified with their canonical index
//! `c_0 + c_1·p + ⋯ + c_{e−1}·p^{e−1}`, where `(c_0, …, c_{e−1})` are the
//! coordinates in the polynomial basis modulo the field's irreducible
//! modulus. Index 0 is the additive identity and index 1 the multiplicative
//! identity, so prime fields get the usual residue order and extension
//! fields a fixed extension of it. Multiplication and inversion go through
//! exp/log tables built from a primitive element found at construction time,
//! so every operation is O(1) after setup and fully deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported field order, p^e ≤ 2^16.
pub const MAX_ORDER: u64 = 1 << 16;

/// An element of a [`Field`], stored as its canonical index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> u64 {
        self.0 as u64
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    NotPrimePower(u64),
    ZeroDegree,
    OrderTooLarge(u64),
    NotMonic,
    WrongModulusLength { expected: usize, got: usize },
    ReducibleModulus,
    ElementOutOfRange { index: u64, order: u64 },
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            FieldError::ZeroDegree => write!(f, "extension degree must be at least 1"),
            FieldError::OrderTooLarge(q) => {
                write!(f, "field order {q} exceeds the supported maximum {MAX_ORDER}")
            }
            FieldError::NotMonic => write!(f, "modulus must be monic"),
            FieldError::WrongModulusLength { expected, got } => {
                write!(f, "modulus must have {expected} coefficients, got {got}")
            }
            FieldError::ReducibleModulus => write!(f, "modulus is reducible over the prime field"),
            FieldError::ElementOutOfRange { index, order } => {
                write!(f, "element index {index} out of range for field of order {order}")
            }
            FieldError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

pub type FieldResult<T> = Result<T, FieldError>;

/// Description of a field: characteristic, degree and modulus.
///
/// The modulus is a monic irreducible polynomial of degree `e` over F_p,
/// given as residues `c_0, …, c_e`. For `e = 1` it is the formal `[0, 1]`
/// (the polynomial `x`) and plays no role in arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    /// Spec for the prime field F_p.
    pub fn prime(p: u64) -> FieldResult<FieldSpec> {
        Self::extension(p, 1, None)
    }

    /// Spec for F_{p^e}. With `modulus: None` the lexicographically least
    /// monic irreducible of degree `e` (ordered by canonical coefficient
    /// index) is found by search.
    pub fn extension(p: u64, e: u32, modulus: Option<Vec<u64>>) -> FieldResult<FieldSpec> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = checked_pow(p, e).ok_or(FieldError::OrderTooLarge(u64::MAX))?;
        if order > MAX_ORDER {
            return Err(FieldError::OrderTooLarge(order));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(FieldError::WrongModulusLength {
                        expected: e as usize + 1,
                        got: m.len(),
                    });
                }
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m[e as usize] != 1 {
                    return Err(FieldError::NotMonic);
                }
                if e > 1 && !poly_is_irreducible(&m, p) {
                    return Err(FieldError::ReducibleModulus);
                }
                m
            }
            None => {
                if e == 1 {
                    vec![0, 1]
                } else {
                    default_modulus(p, e)
                }
            }
        };
        Ok(FieldSpec { p, e, modulus })
    }

    /// Spec for the field of order `q`, factoring `q = p^e`.
    pub fn from_order(q: u64) -> FieldResult<FieldSpec> {
        if q < 2 {
            return Err(FieldError::NotPrimePower(q));
        }
        let mut p = q;
        for d in 2..=q {
            if d * d > q {
                break;
            }
            if q.is_multiple_of(d) {
                p = d;
                break;
            }
        }
        let mut e = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        Self::extension(p, e, None)
    }

    pub fn order(&self) -> u64 {
        checked_pow(self.p, self.e).expect("validated at construction")
    }
}

/// A concrete field with precomputed exp/log tables.
pub struct Field {
    spec: FieldSpec,
    q: u64,
    exp: Vec<u16>,
    log: Vec<u32>,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        let q = spec.order();
        let (exp, log) = build_tables(&spec);
        Field { spec, q, exp, log }
    }

    pub fn prime(p: u64) -> FieldResult<Field> {
        Ok(Field::new(FieldSpec::prime(p)?))
    }

    pub fn from_order(q: u64) -> FieldResult<Field> {
        Ok(Field::new(FieldSpec::from_order(q)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn element(&self, index: u64) -> FieldResult<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index as u16))
        } else {
            Err(FieldError::ElementOutOfRange { index, order: self.q })
        }
    }

    /// All q elements in canonical-index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u16).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.index() < self.q && b.index() < self.q);
        let p = self.spec.p;
        if self.spec.e == 1 {
            return FieldElement(((a.index() + b.index()) % p) as u16);
        }
        if p == 2 {
            // base-2 digits: coefficientwise addition is XOR on the index
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.index(), b.index());
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.e == 1 {
            return FieldElement(((p - a.index()) % p) as u16);
        }
        if p == 2 {
            return a;
        }
        let mut x = a.index();
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(out as u16)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.index() < self.q && b.index() < self.q);
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.q - 1;
        let s = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        FieldElement(self.exp[(s % n) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> FieldResult<FieldElement> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize] as u64;
        Ok(FieldElement(self.exp[((n - l) % n) as usize]))
    }

    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        if n == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let ord = self.q - 1;
        let l = self.log[a.0 as usize] as u128 * (n % ord.max(1)) as u128;
        FieldElement(self.exp[(l % ord as u128) as usize])
    }

    /// True iff `a` has a square root in the field. For even characteristic
    /// every element is a square; for odd q this is Euler's criterion.
    pub fn is_square(&self, a: FieldElement) -> bool {
        if self.spec.p == 2 || a.is_zero() {
            return true;
        }
        self.pow(a, (self.q - 1) / 2) == FieldElement::ONE
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("spec", &self.spec).finish()
    }
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut out = 1u64;
    for _ in 0..e {
        out = out.checked_mul(p)?;
        if out > MAX_ORDER {
            return Some(out); // caller rejects, no need for exact overflow
        }
    }
    Some(out)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// --- polynomial arithmetic over F_p for modulus validation and raw products ---

#[allow(clippy::needless_range_loop)]
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > db {
        let lead = r[r.len() - 1];
        if lead != 0 {
            // b is monic
            let shift = r.len() - 1 - db;
            for j in 0..=db {
                let idx = shift + j;
                r[idx] = (r[idx] + (p - lead % p) * b[j]) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_is_irreducible(m: &[u64], p: u64) -> bool {
    let e = m.len() - 1;
    if m[0] == 0 {
        return false; // divisible by x
    }
    for d in 1..=e / 2 {
        // all monic divisor candidates of degree d
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut t = idx;
            for c in g.iter_mut().take(d) {
                *c = t % p;
                t /= p;
            }
            g[d] = 1;
            if poly_rem(m, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least (by canonical coefficient index) monic
/// irreducible of degree e over F_p.
fn default_modulus(p: u64, e: u32) -> Vec<u64> {
    let count = p.pow(e);
    for idx in 0..count {
        let mut m = vec![0u64; e as usize + 1];
        let mut t = idx;
        for c in m.iter_mut().take(e as usize) {
            *c = t % p;
            t /= p;
        }
        m[e as usize] = 1;
        if poly_is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

fn idx_to_digits(mut idx: u64, p: u64, e: u32) -> Vec<u64> {
    let mut d = vec![0u64; e as usize];
    for c in d.iter_mut() {
        *c = idx % p;
        idx /= p;
    }
    d
}

fn digits_to_idx(d: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for &c in d.iter().rev() {
        out = out * p + c;
    }
    out
}

/// Table-free product, used only while building the exp table.
fn mul_raw(spec: &FieldSpec, a: u64, b: u64) -> u64 {
    let p = spec.p;
    let e = spec.e as usize;
    if e == 1 {
        return a * b % p;
    }
    let da = idx_to_digits(a, p, spec.e);
    let db = idx_to_digits(b, p, spec.e);
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (e..2 * e - 1).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for j in 0..e {
                prod[i - e + j] = (prod[i - e + j] + (p - c) * spec.modulus[j]) % p;
            }
        }
    }
    digits_to_idx(&prod[..e], p)
}

fn pow_raw(spec: &FieldSpec, mut base: u64, mut n: u64) -> u64 {
    let mut out = 1u64;
    while n > 0 {
        if n & 1 == 1 {
            out = mul_raw(spec, out, base);
        }
        base = mul_raw(spec, base, base);
        n >>= 1;
    }
    out
}

fn build_tables(spec: &FieldSpec) -> (Vec<u16>, Vec<u32>) {
    let q = spec.order();
    if q == 2 {
        return (vec![1u16], vec![0u32, 0]);
    }
    let factors = prime_factors(q - 1);
    let g = (2..q)
        .find(|&g| factors.iter().all(|&f| pow_raw(spec, g, (q - 1) / f) != 1))
        .expect("the multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u16; (q - 1) as usize];
    let mut log = vec![0u32; q as usize];
    let mut acc = 1u64;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = acc as u16;
        log[acc as usize] = i as u32;
        acc = mul_raw(spec, acc, g);
    }
    debug_assert_eq!(acc, 1, "generator order must be q-1");
    (exp, log)
}

//! The span of elementary symmetric polynomials: evaluation, the
//! `f = f_1 + x_m f_2` decomposition, Type I/II classification, and
//! distinguished-zero counting (brute force and the m = 2 closed forms).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::perm_count;
use crate::field::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    ArityTooSmall,
    ArityMismatch { expected: usize, got: usize },
    IndexOutOfRange { index: usize, max: usize },
    SubsetTooSmall { size: usize, m: usize },
    WrongArity { expected: usize, got: usize },
    UnsupportedOrder(u64),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ArityTooSmall => write!(f, "arity must be at least 1"),
            PolyError::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: polynomial has arity {expected}, point has {got}")
            }
            PolyError::IndexOutOfRange { index, max } => {
                write!(f, "symmetric-polynomial index {index} out of range 0..={max}")
            }
            PolyError::SubsetTooSmall { size, m } => {
                write!(f, "subset of size {size} cannot host distinguished {m}-tuples")
            }
            PolyError::WrongArity { expected, got } => {
                write!(f, "operation requires arity {expected}, got {got}")
            }
            PolyError::UnsupportedOrder(q) => {
                write!(f, "closed form not available for field order {q}")
            }
        }
    }
}

pub type PolyResult<T> = Result<T, PolyError>;

/// A linear combination `a_0 + a_1 σ_m^1 + ⋯ + a_m σ_m^m`, stored as the
/// coefficient vector `(a_0, …, a_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    coeffs: Vec<FieldElement>,
}

impl SymPoly {
    pub fn new(coeffs: Vec<FieldElement>) -> PolyResult<SymPoly> {
        if coeffs.len() < 2 {
            return Err(PolyError::ArityTooSmall);
        }
        Ok(SymPoly { coeffs })
    }

    /// Polynomial with message index `idx` in a field of order q: the
    /// base-q digits of `idx` give `(a_0, …, a_m)`, a_0 least significant.
    pub fn from_message_index(field: &Field, m: usize, mut idx: u64) -> SymPoly {
        let q = field.q();
        let mut coeffs = vec![FieldElement::ZERO; m + 1];
        for c in coeffs.iter_mut() {
            *c = FieldElement((idx % q) as u16);
            idx /= q;
        }
        SymPoly { coeffs }
    }

    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Zero,
    NonzeroConstant,
    /// `f = a_m ∏ (x_i + α) = a_m ∏ (x_i − root)` with `root = −α`.
    TypeOne { alpha: FieldElement, root: FieldElement },
    TypeTwo,
}

/// All values σ_m^0(p), …, σ_m^m(p) by the ∏(1 + x_j t) coefficient
/// recurrence.
pub fn elementary_symmetric_all(field: &Field, point: &[FieldElement]) -> Vec<FieldElement> {
    let m = point.len();
    let mut e = vec![FieldElement::ZERO; m + 1];
    e[0] = FieldElement::ONE;
    for (t, &x) in point.iter().enumerate() {
        for i in (1..=t + 1).rev() {
            e[i] = field.add(e[i], field.mul(e[i - 1], x));
        }
    }
    e
}

/// σ_m^i evaluated at `point`.
pub fn elementary_symmetric(
    field: &Field,
    i: usize,
    point: &[FieldElement],
) -> PolyResult<FieldElement> {
    if i > point.len() {
        return Err(PolyError::IndexOutOfRange { index: i, max: point.len() });
    }
    Ok(elementary_symmetric_all(field, point)[i])
}

/// `Σ a_i σ_m^i` at `point`.
pub fn evaluate(field: &Field, f: &SymPoly, point: &[FieldElement]) -> PolyResult<FieldElement> {
    if point.len() != f.m() {
        return Err(PolyError::ArityMismatch { expected: f.m(), got: point.len() });
    }
    let sig = elementary_symmetric_all(field, point);
    Ok(dot(field, f.coeffs(), &sig))
}

#[inline]
pub(crate) fn dot(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = field.add(acc, field.mul(x, y));
    }
    acc
}

/// Split `f = f_1 + x_m f_2` into the two arity-(m−1) parts
/// `f_1 = (a_0, …, a_{m−1})` and `f_2 = (a_1, …, a_m)`.
pub fn decompose(f: &SymPoly) -> PolyResult<(SymPoly, SymPoly)> {
    let m = f.m();
    if m < 2 {
        return Err(PolyError::ArityTooSmall);
    }
    let f1 = SymPoly::new(f.coeffs()[..m].to_vec())?;
    let f2 = SymPoly::new(f.coeffs()[1..].to_vec())?;
    Ok((f1, f2))
}

pub fn classify(field: &Field, f: &SymPoly) -> Classification {
    let c = f.coeffs();
    let m = f.m();
    if f.is_zero() {
        return Classification::Zero;
    }
    if c[1..].iter().all(|a| a.is_zero()) {
        return Classification::NonzeroConstant;
    }
    if !c[m].is_zero() {
        let alpha = field.mul(c[m - 1], field.inv(c[m]).expect("nonzero leading coefficient"));
        let proportional = (0..m).all(|i| c[i] == field.mul(alpha, c[i + 1]));
        if proportional {
            return Classification::TypeOne { alpha, root: field.neg(alpha) };
        }
    }
    Classification::TypeTwo
}

/// Visit all ordered m-tuples of distinct elements of `s`, in lexicographic
/// order by canonical index (first coordinate most significant). `s` is
/// sorted and deduplicated first.
pub fn for_each_distinguished_tuple(
    s: &[FieldElement],
    m: usize,
    mut cb: impl FnMut(&[FieldElement]),
) {
    let mut s: Vec<FieldElement> = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut used = vec![false; s.len()];
    let mut cur: Vec<FieldElement> = Vec::with_capacity(m);
    fn rec(
        s: &[FieldElement],
        m: usize,
        used: &mut [bool],
        cur: &mut Vec<FieldElement>,
        cb: &mut impl FnMut(&[FieldElement]),
    ) {
        if cur.len() == m {
            cb(cur);
            return;
        }
        for i in 0..s.len() {
            if !used[i] {
                used[i] = true;
                cur.push(s[i]);
                rec(s, m, used, cur, cb);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(&s, m, &mut used, &mut cur, &mut cb);
}

/// |Z_{S,D}(f)| by exhaustive iteration over the 𝒫(|S|, m) tuples.
pub fn count_distinguished_zeroes(field: &Field, f: &SymPoly, s: &[FieldElement]) -> PolyResult<u64> {
    let mut s: Vec<FieldElement> = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let m = f.m();
    if s.len() < m {
        return Err(PolyError::SubsetTooSmall { size: s.len(), m });
    }
    let mut count = 0u64;
    for_each_distinguished_tuple(&s, m, |p| {
        let sig = elementary_symmetric_all(field, p);
        if dot(field, f.coeffs(), &sig).is_zero() {
            count += 1;
        }
    });
    Ok(count)
}

/// The distinguished zeroes themselves, in enumeration order.
pub fn distinguished_zeroes(
    field: &Field,
    f: &SymPoly,
    s: &[FieldElement],
) -> PolyResult<Vec<Vec<FieldElement>>> {
    let m = f.m();
    let mut uniq: Vec<FieldElement> = s.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() < m {
        return Err(PolyError::SubsetTooSmall { size: uniq.len(), m });
    }
    let mut out = Vec::new();
    for_each_distinguished_tuple(&uniq, m, |p| {
        let sig = elementary_symmetric_all(field, p);
        if dot(field, f.coeffs(), &sig).is_zero() {
            out.push(p.to_vec());
        }
    });
    Ok(out)
}

/// |Z_{F_q,D}(f)| for m = 2 by the discriminant case split
/// (𝒟 = a_1² − a_0 a_2). Odd q, or even q ≥ 4.
pub fn closed_form_count_m2(field: &Field, f: &SymPoly) -> PolyResult<u64> {
    if f.m() != 2 {
        return Err(PolyError::WrongArity { expected: 2, got: f.m() });
    }
    let q = field.q();
    if q == 2 {
        return Err(PolyError::UnsupportedOrder(2));
    }
    let (a0, a1, a2) = (f.coeffs()[0], f.coeffs()[1], f.coeffs()[2]);
    let disc = field.sub(field.mul(a1, a1), field.mul(a0, a2));
    let even = field.spec().p == 2;
    let count = if a2.is_zero() {
        if a1.is_zero() {
            if a0.is_zero() {
                q * (q - 1)
            } else {
                0
            }
        } else if even {
            if a0.is_zero() {
                0
            } else {
                q
            }
        } else {
            q - 1
        }
    } else if disc.is_zero() {
        2 * (q - 1)
    } else if even {
        q - 2
    } else if field.is_square(disc) {
        // q = 3 makes this branch 0, matching the degenerate case there
        q - 3
    } else {
        q - 1
    };
    Ok(count)
}

/// Bound (4) `m·𝒫(|S|−1, m−1)` when `type_one` is set, otherwise bound (5)
/// `m·𝒫(|S|−1, m−1) − (|S|−m)·𝒫(|S|−2, m−2)` for polynomials that are not
/// Type I with root in S.
pub fn zero_count_bound(s_size: u64, m: u64, type_one: bool) -> u128 {
    if s_size < m {
        return 0;
    }
    let general = m as u128 * perm_count(s_size - 1, m - 1);
    if type_one || m < 2 {
        general
    } else {
        general - (s_size - m) as u128 * perm_count(s_size - 2, m - 2)
    }
}

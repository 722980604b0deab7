//! Weight distributions, higher weight spectra, generalized Hamming weights
//! (by subcode sweep and by the projective-geometry route) and scalar
//! extension spectra.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{column_groups, message_count, weight_histogram_range, ColumnGroups, LinearCode, SetKind};
use crate::combin::{binomial, factorial, gaussian_binomial, perm_count, pow_u128};
use crate::field::{Field, FieldElement};
use crate::sympoly::{dot, SymPoly};

/// Map weight → count. Exact integer counts throughout.
pub type Spectrum = BTreeMap<u64, u128>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightError {
    InfeasibleSize { work: u128, limit: u128 },
    RankOutOfRange { r: u64, k: u64 },
    UnsupportedOrder(u64),
    BadExtension { s: u64 },
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::InfeasibleSize { work, limit } => {
                write!(f, "sweep of size {work} exceeds the limit {limit}")
            }
            WeightError::RankOutOfRange { r, k } => {
                write!(f, "subcode dimension {r} out of range 1..={k}")
            }
            WeightError::UnsupportedOrder(q) => {
                write!(f, "closed form not available for field order {q}")
            }
            WeightError::BadExtension { s } => {
                write!(f, "extension degree must be at least 1, got {s}")
            }
        }
    }
}

pub type WeightResult<T> = Result<T, WeightError>;

const SWEEP_LIMIT: u128 = 1 << 40;

/// Exact A_w by sweeping all q^k messages.
pub fn weight_distribution(field: &Field, code: &LinearCode) -> WeightResult<Spectrum> {
    let messages = message_count(code);
    if messages > SWEEP_LIMIT {
        return Err(WeightError::InfeasibleSize { work: messages, limit: SWEEP_LIMIT });
    }
    Ok(weight_histogram_range(field, code, 0, messages as u64))
}

/// The m = 2 weight distribution of the full-set code in closed form.
/// q = 3 carries the degenerate merged value.
pub fn closed_form_m2_distribution(q: u64) -> WeightResult<Spectrum> {
    if q < 3 {
        return Err(WeightError::UnsupportedOrder(q));
    }
    let mut a = Spectrum::new();
    let n = q * (q - 1);
    a.insert(0, 1);
    if q == 3 {
        a.insert(2, 6);
        a.insert(4, 12);
        a.insert(6, 8);
        return Ok(a);
    }
    let qq = q as u128;
    if q % 2 == 1 {
        a.insert((q - 1) * (q - 2), qq * (qq - 1));
        a.insert(n - (q - 1), qq * (qq - 1) * (qq + 1) / 2);
        a.insert(n - (q - 3), qq * (qq - 1) * (qq - 1) / 2);
        a.insert(n, qq - 1);
    } else {
        a.insert((q - 1) * (q - 2), qq * (qq - 1));
        a.insert(n - (q - 2), qq * (qq - 1) * (qq - 1));
        // the (q-1)² polynomials a_0 + a_1(x_1+x_2) with a_0 a_1 ≠ 0 have
        // exactly q distinguished zeroes, so their weight is n − q (every
        // weight in this code is even, which pins the value)
        a.insert(n - q, (qq - 1) * (qq - 1));
        a.insert(n, 2 * (qq - 1));
    }
    Ok(a)
}

/// Visit every full-rank r×k matrix in reduced row echelon form over the
/// field, i.e. every r-dimensional subspace of F_q^k exactly once. The
/// callback receives the rows and the pivot column of each row.
pub fn for_each_rref(
    field: &Field,
    r: usize,
    k: usize,
    mut cb: impl FnMut(&[Vec<FieldElement>], &[usize]),
) {
    if r == 0 || r > k {
        if r == 0 {
            cb(&[], &[]);
        }
        return;
    }
    let q = field.q();
    let mut pivots: Vec<usize> = (0..r).collect();
    loop {
        // free slots: row i, non-pivot columns right of pivots[i]
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..k {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let total = pow_u128(q, free.len() as u64);
        let mut rows = vec![vec![FieldElement::ZERO; k]; r];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = FieldElement::ONE;
        }
        let mut t = 0u128;
        while t < total {
            let mut rem = t;
            for &(i, j) in &free {
                rows[i][j] = FieldElement((rem % q as u128) as u16);
                rem /= q as u128;
            }
            cb(&rows, &pivots);
            t += 1;
        }
        // next pivot combination in lexicographic order
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < k - (r - i) {
                pivots[i] += 1;
                for j in i + 1..r {
                    pivots[j] = pivots[i] + (j - i);
                }
                break;
            }
        }
    }
}

fn subcode_support_weight(field: &Field, groups: &ColumnGroups, basis: &[Vec<FieldElement>]) -> u64 {
    let mut w = 0u64;
    'cols: for (col, &mult) in groups.cols.iter().zip(&groups.mult) {
        for row in basis {
            if !dot(field, row, col).is_zero() {
                w += mult;
                continue 'cols;
            }
        }
    }
    w
}

/// A_w^(r): number of r-dimensional subcodes of support weight w, by
/// echelon-form enumeration of message-space bases.
pub fn higher_weight_spectra(field: &Field, code: &LinearCode, r: usize) -> WeightResult<Spectrum> {
    let k = code.k();
    if r < 1 || r > k {
        return Err(WeightError::RankOutOfRange { r: r as u64, k: k as u64 });
    }
    let work = gaussian_binomial(k as u64, r as u64, code.q);
    if work > SWEEP_LIMIT {
        return Err(WeightError::InfeasibleSize { work, limit: SWEEP_LIMIT });
    }
    let groups = column_groups(code);
    let mut hist = Spectrum::new();
    for_each_rref(field, r, k, |rows, _| {
        let w = subcode_support_weight(field, &groups, rows);
        *hist.entry(w).or_insert(0) += 1;
    });
    Ok(hist)
}

/// Spectra for r = 0..=k; the r = 0 entry is the zero subspace at weight 0.
pub fn higher_weight_spectra_all(field: &Field, code: &LinearCode) -> WeightResult<Vec<Spectrum>> {
    let mut out = Vec::with_capacity(code.k() + 1);
    let mut zero = Spectrum::new();
    zero.insert(0, 1);
    out.push(zero);
    for r in 1..=code.k() {
        out.push(higher_weight_spectra(field, code, r)?);
    }
    Ok(out)
}

/// (d_1, …, d_k) by exhaustive minimum over r-dimensional subcodes.
pub fn generalized_hamming_weights(field: &Field, code: &LinearCode) -> WeightResult<Vec<u64>> {
    Ok(ghw_with_witnesses(field, code)?.into_iter().map(|(d, _)| d).collect())
}

/// GHW vector plus, per r, a coefficient-vector basis of a subcode
/// attaining d_r (the first one in enumeration order).
pub fn ghw_with_witnesses(
    field: &Field,
    code: &LinearCode,
) -> WeightResult<Vec<(u64, Vec<SymPoly>)>> {
    let k = code.k();
    let groups = column_groups(code);
    let mut out = Vec::with_capacity(k);
    for r in 1..=k {
        let work = gaussian_binomial(k as u64, r as u64, code.q);
        if work > SWEEP_LIMIT {
            return Err(WeightError::InfeasibleSize { work, limit: SWEEP_LIMIT });
        }
        let mut best: Option<(u64, Vec<SymPoly>)> = None;
        for_each_rref(field, r, k, |rows, _| {
            let w = subcode_support_weight(field, &groups, rows);
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                let basis = rows
                    .iter()
                    .map(|row| SymPoly::new(row.clone()).expect("k = m + 1 ≥ 2"))
                    .collect();
                best = Some((w, basis));
            }
        });
        out.push(best.expect("at least one r-dimensional subcode exists"));
    }
    Ok(out)
}

fn in_rowspace(
    field: &Field,
    rows: &[Vec<FieldElement>],
    pivots: &[usize],
    col: &[FieldElement],
    scratch: &mut Vec<FieldElement>,
) -> bool {
    scratch.clear();
    scratch.extend_from_slice(col);
    for (row, &p) in rows.iter().zip(pivots) {
        let f = scratch[p];
        if !f.is_zero() {
            for (x, &y) in scratch.iter_mut().zip(row) {
                *x = field.sub(*x, field.mul(f, y));
            }
        }
    }
    scratch.iter().all(|c| c.is_zero())
}

/// GHW by the incidence route: d_r = n − m_r, where m_r is the maximum
/// number of generator-matrix column points (with multiplicity) contained
/// in a codimension-r subspace of the column space, enumerated as
/// (k−r)-dimensional row spaces in echelon form.
pub fn ghw_geometric(field: &Field, code: &LinearCode) -> WeightResult<Vec<u64>> {
    ghw_geometric_range(field, code, 1, code.k())
}

/// `d_lo..=d_hi` by the incidence route; `ghw_geometric` covers the full
/// hierarchy, verification shortcuts use the cheap top of it.
pub(crate) fn ghw_geometric_range(
    field: &Field,
    code: &LinearCode,
    lo: usize,
    hi: usize,
) -> WeightResult<Vec<u64>> {
    let k = code.k();
    let n = code.n() as u64;
    let groups = column_groups(code);
    let mut scratch: Vec<FieldElement> = Vec::with_capacity(k);
    let mut out = Vec::with_capacity(hi + 1 - lo);
    for r in lo..=hi {
        let s = k - r;
        let work = gaussian_binomial(k as u64, s as u64, code.q);
        if work > SWEEP_LIMIT {
            return Err(WeightError::InfeasibleSize { work, limit: SWEEP_LIMIT });
        }
        let mut m_r = 0u64;
        if s == 0 {
            for (col, &mult) in groups.cols.iter().zip(&groups.mult) {
                if col.iter().all(|c| c.is_zero()) {
                    m_r += mult;
                }
            }
        } else {
            for_each_rref(field, s, k, |rows, pivots| {
                let mut count = 0u64;
                for (col, &mult) in groups.cols.iter().zip(&groups.mult) {
                    if in_rowspace(field, rows, pivots, col, &mut scratch) {
                        count += mult;
                    }
                }
                if count > m_r {
                    m_r = count;
                }
            });
        }
        out.push(n - m_r);
    }
    Ok(out)
}

/// Closed-form GHW upper bound: 𝒫(q,m) − m!·C(q−r, m−r) for the full-set
/// code, C(q,m) − C(q−r, m−r) for the orbit code. Valid for 1 ≤ r ≤ m+1
/// (the C(·, negative) term vanishes at r = m+1).
pub fn ghw_upper_bound(q: u64, m: u64, r: u64, kind: SetKind) -> WeightResult<u128> {
    if r < 1 || r > m + 1 || m + 1 > q {
        return Err(WeightError::RankOutOfRange { r, k: m + 1 });
    }
    let tail = if r > m { 0 } else { binomial(q - r, m - r) };
    Ok(match kind {
        SetKind::FullDistinguished => perm_count(q, m) - factorial(m) * tail,
        SetKind::OrbitRepresentatives => binomial(q, m) - tail,
    })
}

/// Weight distribution of the scalar extension to F_Q, Q = q^s:
/// P_w(Q) = Σ_r A_w^(r) ∏_{i=0}^{r−1} (Q − q^i).
pub fn extension_spectrum(spectra: &[Spectrum], q: u64, s: u64) -> WeightResult<Spectrum> {
    if s < 1 {
        return Err(WeightError::BadExtension { s });
    }
    let big_q = pow_u128(q, s);
    let mut out = Spectrum::new();
    for (r, spec) in spectra.iter().enumerate() {
        let mut factor = 1u128;
        for i in 0..r as u64 {
            let t = pow_u128(q, i);
            if t >= big_q {
                factor = 0;
                break;
            }
            factor *= big_q - t;
        }
        for (&w, &count) in spec {
            let term = count * factor;
            if term != 0 {
                *out.entry(w).or_insert(0) += term;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Extension-spectrum closed forms for the m = 2 full-set code,
/// odd q ≥ 7: closed forms in Q = q^s.
pub fn extension_closed_form_odd(q: u64, s: u64) -> WeightResult<Spectrum> {
    if q < 7 || q.is_multiple_of(2) {
        return Err(WeightError::UnsupportedOrder(q));
    }
    if s < 1 {
        return Err(WeightError::BadExtension { s });
    }
    let n = q * (q - 1);
    let qq = q as u128;
    let big_q = pow_u128(q, s);
    let mut out = Spectrum::new();
    out.insert(0, 1);
    out.insert(n - 2 * (q - 1), qq * (big_q - 1));
    out.insert(n - (q - 1), (qq * qq + qq) / 2 * (big_q - 1));
    out.insert(n - (q - 3), (qq * qq - qq) / 2 * (big_q - 1));
    out.insert(n - 2, (qq * qq - qq) / 2 * (big_q - 1) * (big_q - qq));
    // P_n(Q) = (Q−1)(Q² + ((−q²+q+2)/2)Q + (q³−3q²−2q+2)/2); the middle
    // coefficient is negative, so assemble as (Q−1)·(Q² + c₂ − c₁·Q)
    let c1 = (qq * qq - qq - 2) / 2;
    let c2 = (qq * qq * qq - 3 * qq * qq - 2 * qq + 2) / 2;
    out.insert(n, (big_q - 1) * (big_q * big_q + c2 - c1 * big_q));
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Closed-form A_w^(r) for the m = 2 full-set code.
pub fn closed_form_m2_higher(q: u64, r: usize) -> WeightResult<Spectrum> {
    let n = q * (q - 1);
    let qq = q as u128;
    let mut out = Spectrum::new();
    match r {
        1 => {
            for (w, a) in closed_form_m2_distribution(q)? {
                if w > 0 {
                    out.insert(w, a / (qq - 1));
                }
            }
        }
        2 => {
            out.insert(n - 2, qq * (qq - 1) / 2);
            out.insert(n, (qq * qq + 3 * qq + 2) / 2);
        }
        3 => {
            out.insert(n, 1);
        }
        _ => return Err(WeightError::RankOutOfRange { r: r as u64, k: 3 }),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_code, enumerate_distinguished, enumerate_orbit_reps};

    fn full_code(q: u64, m: usize) -> (Field, LinearCode) {
        let field = Field::from_order(q).unwrap();
        let code = build_code(&field, &enumerate_distinguished(&field, m)).unwrap();
        (field, code)
    }

    fn orbit_code(q: u64, m: usize) -> (Field, LinearCode) {
        let field = Field::from_order(q).unwrap();
        let code = build_code(&field, &enumerate_orbit_reps(&field, m)).unwrap();
        (field, code)
    }

    fn spec(entries: &[(u64, u128)]) -> Spectrum {
        entries.iter().copied().collect()
    }

    #[test]
    fn m2_distributions() {
        let (f3, c3) = full_code(3, 2);
        assert_eq!(
            weight_distribution(&f3, &c3).unwrap(),
            spec(&[(0, 1), (2, 6), (4, 12), (6, 8)])
        );
        let (f5, c5) = full_code(5, 2);
        assert_eq!(
            weight_distribution(&f5, &c5).unwrap(),
            spec(&[(0, 1), (12, 20), (16, 60), (18, 40), (20, 4)])
        );
        let (f4, c4) = full_code(4, 2);
        assert_eq!(
            weight_distribution(&f4, &c4).unwrap(),
            spec(&[(0, 1), (6, 12), (8, 9), (10, 36), (12, 6)])
        );
    }

    #[test]
    fn m2_closed_forms() {
        assert_eq!(
            closed_form_m2_distribution(7).unwrap(),
            spec(&[(0, 1), (30, 42), (36, 168), (38, 126), (42, 6)])
        );
        assert_eq!(
            closed_form_m2_distribution(8).unwrap(),
            spec(&[(0, 1), (42, 56), (48, 49), (50, 392), (56, 14)])
        );
        let total: u128 = closed_form_m2_distribution(7).unwrap().values().sum();
        assert_eq!(total, 343);
        assert!(closed_form_m2_distribution(2).is_err());
    }

    #[test]
    fn rref_enumeration_counts_subspaces() {
        for q in [2u64, 3, 5] {
            let field = Field::from_order(q).unwrap();
            for k in 1..=4usize {
                for r in 1..=k {
                    let mut count = 0u128;
                    for_each_rref(&field, r, k, |rows, pivots| {
                        assert_eq!(rows.len(), r);
                        assert_eq!(pivots.len(), r);
                        count += 1;
                    });
                    assert_eq!(count, gaussian_binomial(k as u64, r as u64, q));
                }
            }
        }
    }

    #[test]
    fn higher_spectra_m2_q5() {
        let (f5, c5) = full_code(5, 2);
        assert_eq!(
            higher_weight_spectra(&f5, &c5, 2).unwrap(),
            spec(&[(18, 10), (20, 21)])
        );
        assert_eq!(higher_weight_spectra(&f5, &c5, 3).unwrap(), spec(&[(20, 1)]));
        let a1 = higher_weight_spectra(&f5, &c5, 1).unwrap();
        let aw = weight_distribution(&f5, &c5).unwrap();
        for (&w, &count) in &a1 {
            assert_eq!(count * 4, aw[&w]);
        }
        assert!(higher_weight_spectra(&f5, &c5, 4).is_err());
    }

    #[test]
    fn ghw_both_routes() {
        let (f5, c5) = full_code(5, 2);
        assert_eq!(generalized_hamming_weights(&f5, &c5).unwrap(), alloc::vec![12, 18, 20]);
        assert_eq!(ghw_geometric(&f5, &c5).unwrap(), alloc::vec![12, 18, 20]);

        let (f5, o3) = orbit_code(5, 3);
        assert_eq!(generalized_hamming_weights(&f5, &o3).unwrap(), alloc::vec![4, 7, 9, 10]);
        assert_eq!(ghw_geometric(&f5, &o3).unwrap(), alloc::vec![4, 7, 9, 10]);

        let (f4, c43) = full_code(4, 3);
        assert_eq!(generalized_hamming_weights(&f4, &c43).unwrap(), alloc::vec![6, 12, 18, 24]);
        assert_eq!(ghw_geometric(&f4, &c43).unwrap(), alloc::vec![6, 12, 18, 24]);
    }

    #[test]
    fn ghw_witnesses_attain_their_weight() {
        let (f5, o3) = orbit_code(5, 3);
        let groups = column_groups(&o3);
        for (r, (d, basis)) in ghw_with_witnesses(&f5, &o3).unwrap().into_iter().enumerate() {
            assert_eq!(basis.len(), r + 1);
            let rows: Vec<Vec<FieldElement>> =
                basis.iter().map(|b| b.coeffs().to_vec()).collect();
            assert_eq!(subcode_support_weight(&f5, &groups, &rows), d);
            assert_eq!(crate::code::rank(&f5, &rows), r + 1);
        }
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(ghw_upper_bound(5, 3, 2, SetKind::OrbitRepresentatives).unwrap(), 7);
        assert_eq!(ghw_upper_bound(5, 2, 1, SetKind::FullDistinguished).unwrap(), 12);
        // r = m: m!·(C(q,m)−1)
        assert_eq!(ghw_upper_bound(5, 3, 3, SetKind::FullDistinguished).unwrap(), 6 * 9);
        assert_eq!(ghw_upper_bound(5, 3, 4, SetKind::FullDistinguished).unwrap(), 60);
        assert!(ghw_upper_bound(5, 3, 5, SetKind::FullDistinguished).is_err());
        assert!(ghw_upper_bound(5, 3, 0, SetKind::FullDistinguished).is_err());
    }

    #[test]
    fn extension_spectrum_identities() {
        let (f7, c7) = full_code(7, 2);
        let spectra = higher_weight_spectra_all(&f7, &c7).unwrap();
        // s = 1 degenerates to the plain weight distribution
        let p1 = extension_spectrum(&spectra, 7, 1).unwrap();
        assert_eq!(p1, weight_distribution(&f7, &c7).unwrap());
        // s = 2: closed-form lines and total count Q³
        let p2 = extension_spectrum(&spectra, 7, 2).unwrap();
        assert_eq!(p2, extension_closed_form_odd(7, 2).unwrap());
        assert_eq!(p2[&30], 336);
        let total: u128 = p2.values().sum();
        assert_eq!(total, 49u128 * 49 * 49);
        assert!(extension_spectrum(&spectra, 7, 0).is_err());
    }

    #[test]
    fn extension_sum_identity_q5() {
        let (f5, c5) = full_code(5, 2);
        let spectra = higher_weight_spectra_all(&f5, &c5).unwrap();
        let p = extension_spectrum(&spectra, 5, 2).unwrap();
        let total: u128 = p.values().sum();
        assert_eq!(total, 25u128 * 25 * 25);
    }

    #[test]
    fn gaussian_sum_of_higher_spectra() {
        let (f5, c5) = full_code(5, 2);
        for r in 1..=3usize {
            let total: u128 = higher_weight_spectra(&f5, &c5, r).unwrap().values().sum();
            assert_eq!(total, gaussian_binomial(3, r as u64, 5));
        }
    }
}

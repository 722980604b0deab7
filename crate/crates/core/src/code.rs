//! Evaluation sets and the codes built on them: generator matrices,
//! parameters, minimum-weight words and the dual-distance column checks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::{binomial, perm_count, pow_u128};
use crate::field::{Field, FieldElement};
use crate::sympoly::{dot, elementary_symmetric_all, SymPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    /// All 𝒫(q, m) tuples with pairwise-distinct coordinates.
    FullDistinguished,
    /// One strictly increasing representative per coordinate-permutation
    /// orbit, C(q, m) in total.
    OrbitRepresentatives,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetKind::FullDistinguished => write!(f, "full"),
            SetKind::OrbitRepresentatives => write!(f, "orbit"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeError {
    EmptyEvaluationSet { q: u64, m: usize },
    ArityMismatch { expected: usize, got: usize },
    ArityExceedsOrder { q: u64, m: usize },
    InfeasibleSweep { messages: u128, limit: u128 },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::EmptyEvaluationSet { q, m } => {
                write!(f, "no distinguished {m}-tuples exist over a field of order {q}")
            }
            CodeError::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: code expects {expected}, message has {got}")
            }
            CodeError::ArityExceedsOrder { q, m } => {
                write!(f, "closed-form parameters require m < q (got m={m}, q={q})")
            }
            CodeError::InfeasibleSweep { messages, limit } => {
                write!(f, "message sweep of size {messages} exceeds the limit {limit}")
            }
        }
    }
}

pub type CodeResult<T> = Result<T, CodeError>;

/// An ordered list of evaluation points, all of arity m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationSet {
    pub kind: SetKind,
    pub q: u64,
    pub m: usize,
    pub points: Vec<Vec<FieldElement>>,
}

/// All ordered m-tuples of distinct field elements, lexicographic by
/// canonical index. Empty when m > q.
pub fn enumerate_distinguished(field: &Field, m: usize) -> EvaluationSet {
    let all: Vec<FieldElement> = field.elements().collect();
    let mut points = Vec::new();
    crate::sympoly::for_each_distinguished_tuple(&all, m, |p| points.push(p.to_vec()));
    EvaluationSet { kind: SetKind::FullDistinguished, q: field.q(), m, points }
}

/// All strictly increasing m-tuples, lexicographic.
pub fn enumerate_orbit_reps(field: &Field, m: usize) -> EvaluationSet {
    let q = field.q();
    let mut points = Vec::new();
    let mut cur: Vec<FieldElement> = Vec::with_capacity(m);
    fn rec(q: u64, m: usize, start: u64, cur: &mut Vec<FieldElement>, out: &mut Vec<Vec<FieldElement>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let remaining = (m - cur.len()) as u64;
        let mut i = start;
        while i + remaining <= q {
            cur.push(FieldElement(i as u16));
            rec(q, m, i + 1, cur, out);
            cur.pop();
            i += 1;
        }
    }
    rec(q, m, 0, &mut cur, &mut points);
    EvaluationSet { kind: SetKind::OrbitRepresentatives, q, m, points }
}

/// Generator matrix of the evaluation code: row i holds σ_m^i at every
/// point, in set order. Row 0 is all ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    pub q: u64,
    pub m: usize,
    pub kind: SetKind,
    pub rows: Vec<Vec<FieldElement>>,
}

impl LinearCode {
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.rows.iter().map(|r| r[j]).collect()
    }
}

pub fn build_code(field: &Field, set: &EvaluationSet) -> CodeResult<LinearCode> {
    if set.points.is_empty() {
        return Err(CodeError::EmptyEvaluationSet { q: set.q, m: set.m });
    }
    let k = set.m + 1;
    let mut rows = vec![vec![FieldElement::ZERO; set.points.len()]; k];
    for (j, p) in set.points.iter().enumerate() {
        let sig = elementary_symmetric_all(field, p);
        for (i, row) in rows.iter_mut().enumerate() {
            row[j] = sig[i];
        }
    }
    Ok(LinearCode { q: set.q, m: set.m, kind: set.kind, rows })
}

/// Coefficient vector times generator matrix.
pub fn encode(field: &Field, f: &SymPoly, code: &LinearCode) -> CodeResult<Vec<FieldElement>> {
    if f.m() != code.m {
        return Err(CodeError::ArityMismatch { expected: code.m, got: f.m() });
    }
    let n = code.n();
    let mut word = vec![FieldElement::ZERO; n];
    for (j, w) in word.iter_mut().enumerate() {
        let col = code.column(j);
        *w = dot(field, f.coeffs(), &col);
    }
    Ok(word)
}

/// Rank over F_q by Gaussian elimination (the input rows are not modified).
#[allow(clippy::needless_range_loop)]
pub fn rank(field: &Field, rows: &[Vec<FieldElement>]) -> usize {
    let mut mat: Vec<Vec<FieldElement>> = rows.to_vec();
    let nrows = mat.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = mat[0].len();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, piv);
        let inv = field.inv(mat[r][c]).expect("pivot is nonzero");
        for j in c..ncols {
            mat[r][j] = field.mul(mat[r][j], inv);
        }
        for i in 0..nrows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c];
                for j in c..ncols {
                    let t = field.mul(f, mat[r][j]);
                    mat[i][j] = field.sub(mat[i][j], t);
                }
            }
        }
        r += 1;
    }
    r
}

/// Distinct generator-matrix columns with their multiplicities, for sweeps
/// where identical columns contribute identically to every weight.
pub struct ColumnGroups {
    pub cols: Vec<Vec<FieldElement>>,
    pub mult: Vec<u64>,
}

pub fn column_groups(code: &LinearCode) -> ColumnGroups {
    let mut map: BTreeMap<Vec<FieldElement>, u64> = BTreeMap::new();
    for j in 0..code.n() {
        *map.entry(code.column(j)).or_insert(0) += 1;
    }
    let mut cols = Vec::with_capacity(map.len());
    let mut mult = Vec::with_capacity(map.len());
    for (c, m) in map {
        cols.push(c);
        mult.push(m);
    }
    ColumnGroups { cols, mult }
}

pub(crate) fn message_weight(
    field: &Field,
    groups: &ColumnGroups,
    coeffs: &[FieldElement],
) -> u64 {
    let mut w = 0u64;
    for (col, &mult) in groups.cols.iter().zip(&groups.mult) {
        if !dot(field, coeffs, col).is_zero() {
            w += mult;
        }
    }
    w
}

/// Weight histogram over message indices in `[start, end)`. Partial ranges
/// merge by addition, so a partitioned sweep reproduces the full one.
pub fn weight_histogram_range(
    field: &Field,
    code: &LinearCode,
    start: u64,
    end: u64,
) -> BTreeMap<u64, u128> {
    let groups = column_groups(code);
    let mut hist: BTreeMap<u64, u128> = BTreeMap::new();
    for idx in start..end {
        let f = SymPoly::from_message_index(field, code.m, idx);
        let w = message_weight(field, &groups, f.coeffs());
        *hist.entry(w).or_insert(0) += 1;
    }
    hist
}

pub fn message_count(code: &LinearCode) -> u128 {
    pow_u128(code.q, code.k() as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: u64,
}

/// (n, k, d) with k the actual rank and d the minimum Hamming weight over
/// all nonzero messages.
pub fn code_params(field: &Field, code: &LinearCode) -> CodeResult<CodeParams> {
    let messages = message_count(code);
    const LIMIT: u128 = 1 << 40;
    if messages > LIMIT {
        return Err(CodeError::InfeasibleSweep { messages, limit: LIMIT });
    }
    let hist = weight_histogram_range(field, code, 0, messages as u64);
    let d = hist
        .keys()
        .copied()
        .find(|&w| w > 0)
        .expect("a nonzero message has nonzero weight for codes of positive rank");
    Ok(CodeParams { n: code.n(), k: rank(field, &code.rows), d })
}

/// Closed forms from the code-construction propositions, valid for m < q:
/// full set (𝒫(q,m), m+1, (q−m)𝒫(q−1,m−1)); orbit set
/// (C(q,m), m+1, C(q,m) − C(q−1,m−1)).
pub fn closed_form_params(q: u64, m: u64, kind: SetKind) -> CodeResult<(u128, u64, u128)> {
    if m >= q {
        return Err(CodeError::ArityExceedsOrder { q, m: m as usize });
    }
    Ok(match kind {
        SetKind::FullDistinguished => {
            (perm_count(q, m), m + 1, (q - m) as u128 * perm_count(q - 1, m - 1))
        }
        SetKind::OrbitRepresentatives => {
            (binomial(q, m), m + 1, binomial(q, m) - binomial(q - 1, m - 1))
        }
    })
}

/// All codewords of minimum weight, with the messages producing them.
pub fn min_weight_words(
    field: &Field,
    code: &LinearCode,
) -> CodeResult<Vec<(SymPoly, Vec<FieldElement>)>> {
    let params = code_params(field, code)?;
    let groups = column_groups(code);
    let mut out = Vec::new();
    for idx in 1..message_count(code) as u64 {
        let f = SymPoly::from_message_index(field, code.m, idx);
        if message_weight(field, &groups, f.coeffs()) == params.d {
            let word = encode(field, &f, code)?;
            out.push((f, word));
        }
    }
    Ok(out)
}

/// Column conditions behind dual distance ≥ 3: no zero column and no two
/// columns equal up to a nonzero scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualColumnCheck {
    pub zero_column: Option<usize>,
    pub parallel_pair: Option<(usize, usize)>,
}

impl DualColumnCheck {
    pub fn dual_distance_at_least_3(&self) -> bool {
        self.zero_column.is_none() && self.parallel_pair.is_none()
    }
}

pub fn dual_distance_check(field: &Field, code: &LinearCode) -> DualColumnCheck {
    let mut zero_column = None;
    let mut parallel_pair = None;
    let mut seen: BTreeMap<Vec<FieldElement>, usize> = BTreeMap::new();
    for j in 0..code.n() {
        let col = code.column(j);
        let Some(lead) = col.iter().find(|c| !c.is_zero()) else {
            if zero_column.is_none() {
                zero_column = Some(j);
            }
            continue;
        };
        let inv = field.inv(*lead).expect("nonzero leading entry");
        let normalized: Vec<FieldElement> = col.iter().map(|&c| field.mul(c, inv)).collect();
        if let Some(&prev) = seen.get(&normalized) {
            if parallel_pair.is_none() {
                parallel_pair = Some((prev, j));
            }
        } else {
            seen.insert(normalized, j);
        }
    }
    DualColumnCheck { zero_column, parallel_pair }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: &[u16]) -> Vec<FieldElement> {
        v.iter().map(|&i| FieldElement(i)).collect()
    }

    #[test]
    fn distinguished_enumeration() {
        let f3 = Field::prime(3).unwrap();
        let set = enumerate_distinguished(&f3, 2);
        let expect: Vec<Vec<FieldElement>> =
            [[0u16, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1]].iter().map(|p| fe(p)).collect();
        assert_eq!(set.points, expect);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(enumerate_distinguished(&f5, 3).points.len(), 60);
        let f2 = Field::prime(2).unwrap();
        assert!(enumerate_distinguished(&f2, 3).points.is_empty());
    }

    #[test]
    fn orbit_enumeration() {
        let f5 = Field::prime(5).unwrap();
        let set = enumerate_orbit_reps(&f5, 3);
        assert_eq!(set.points.len(), 10);
        assert_eq!(set.points[0], fe(&[0, 1, 2]));
        assert_eq!(set.points[1], fe(&[0, 1, 3]));
        assert_eq!(set.points[2], fe(&[0, 1, 4]));
        assert_eq!(set.points[9], fe(&[2, 3, 4]));
        let f4 = Field::from_order(4).unwrap();
        let single = enumerate_orbit_reps(&f4, 4);
        assert_eq!(single.points, alloc::vec![fe(&[0, 1, 2, 3])]);
    }

    #[test]
    fn generator_matrix_q5_m3_orbit() {
        let f5 = Field::prime(5).unwrap();
        let code = build_code(&f5, &enumerate_orbit_reps(&f5, 3)).unwrap();
        assert_eq!(code.rows[0], fe(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(code.rows[1], fe(&[3, 4, 0, 0, 1, 2, 1, 2, 3, 4]));
        assert_eq!(code.rows[2], fe(&[2, 3, 4, 1, 3, 2, 1, 4, 4, 1]));
        assert_eq!(code.rows[3], fe(&[0, 0, 0, 0, 0, 0, 1, 3, 2, 4]));
        assert_eq!(rank(&f5, &code.rows), 4);
    }

    #[test]
    fn ranks_and_empty_set() {
        let f3 = Field::prime(3).unwrap();
        let code = build_code(&f3, &enumerate_distinguished(&f3, 2)).unwrap();
        assert!(code.rows[0].iter().all(|&c| c == FieldElement::ONE));
        assert_eq!(rank(&f3, &code.rows), 3);
        let f2 = Field::prime(2).unwrap();
        assert!(build_code(&f2, &enumerate_distinguished(&f2, 3)).is_err());
    }

    #[test]
    fn encoding() {
        let f5 = Field::prime(5).unwrap();
        let code = build_code(&f5, &enumerate_distinguished(&f5, 2)).unwrap();
        let one = SymPoly::new(fe(&[1, 0, 0])).unwrap();
        assert!(encode(&f5, &one, &code).unwrap().iter().all(|&c| c == FieldElement::ONE));
        let zero = SymPoly::new(fe(&[0, 0, 0])).unwrap();
        assert!(encode(&f5, &zero, &code).unwrap().iter().all(|c| c.is_zero()));
        // (x₁−1)(x₂−1) = 1 − σ¹ + σ² has weight (q−m)𝒫(q−1,m−1) = 12
        let t1 = SymPoly::new(fe(&[1, 4, 1])).unwrap();
        let w = encode(&f5, &t1, &code).unwrap().iter().filter(|c| !c.is_zero()).count();
        assert_eq!(w, 12);
        assert!(encode(&f5, &SymPoly::new(fe(&[1, 1])).unwrap(), &code).is_err());
    }

    #[test]
    fn parameters() {
        let f5 = Field::prime(5).unwrap();
        let full = build_code(&f5, &enumerate_distinguished(&f5, 2)).unwrap();
        assert_eq!(code_params(&f5, &full).unwrap(), CodeParams { n: 20, k: 3, d: 12 });
        let orbit = build_code(&f5, &enumerate_orbit_reps(&f5, 2)).unwrap();
        assert_eq!(code_params(&f5, &orbit).unwrap(), CodeParams { n: 10, k: 3, d: 6 });
        let orbit3 = build_code(&f5, &enumerate_orbit_reps(&f5, 3)).unwrap();
        assert_eq!(code_params(&f5, &orbit3).unwrap(), CodeParams { n: 10, k: 4, d: 4 });
        assert_eq!(closed_form_params(5, 2, SetKind::FullDistinguished).unwrap(), (20, 3, 12));
        assert_eq!(closed_form_params(5, 2, SetKind::OrbitRepresentatives).unwrap(), (10, 3, 6));
        assert!(closed_form_params(5, 5, SetKind::FullDistinguished).is_err());
    }

    #[test]
    fn minimum_weight_words_span() {
        let f5 = Field::prime(5).unwrap();
        let orbit3 = build_code(&f5, &enumerate_orbit_reps(&f5, 3)).unwrap();
        let words = min_weight_words(&f5, &orbit3).unwrap();
        assert_eq!(words.len(), 20);
        let vecs: Vec<Vec<FieldElement>> = words.iter().map(|(_, w)| w.clone()).collect();
        assert_eq!(rank(&f5, &vecs), 4);

        let full2 = build_code(&f5, &enumerate_distinguished(&f5, 2)).unwrap();
        let words = min_weight_words(&f5, &full2).unwrap();
        assert_eq!(words.len(), 20);
        let vecs: Vec<Vec<FieldElement>> = words.iter().map(|(_, w)| w.clone()).collect();
        assert_eq!(rank(&f5, &vecs), 3);
    }

    #[test]
    fn dual_column_conditions() {
        let f5 = Field::prime(5).unwrap();
        let orbit3 = build_code(&f5, &enumerate_orbit_reps(&f5, 3)).unwrap();
        assert!(dual_distance_check(&f5, &orbit3).dual_distance_at_least_3());
        let f4 = Field::from_order(4).unwrap();
        let orbit2 = build_code(&f4, &enumerate_orbit_reps(&f4, 2)).unwrap();
        assert!(dual_distance_check(&f4, &orbit2).dual_distance_at_least_3());
        // duplicated column must be flagged
        let mut broken = orbit3.clone();
        for row in broken.rows.iter_mut() {
            let c = row[0];
            row.push(c);
        }
        let check = dual_distance_check(&f5, &broken);
        assert_eq!(check.parallel_pair, Some((0, 10)));
        assert!(!check.dual_distance_at_least_3());
    }

    #[test]
    fn full_weight_is_factorial_multiple_of_orbit_weight() {
        for (q, m) in [(5u64, 2usize), (5, 3), (4, 2), (7, 2)] {
            let field = Field::from_order(q).unwrap();
            let full = build_code(&field, &enumerate_distinguished(&field, m)).unwrap();
            let orbit = build_code(&field, &enumerate_orbit_reps(&field, m)).unwrap();
            let gf = column_groups(&full);
            let go = column_groups(&orbit);
            let fact = crate::combin::factorial(m as u64) as u64;
            for idx in 0..pow_u128(q, m as u64 + 1) as u64 {
                let f = SymPoly::from_message_index(&field, m, idx);
                let wf = message_weight(&field, &gf, f.coeffs());
                let wo = message_weight(&field, &go, f.coeffs());
                assert_eq!(wf, fact * wo);
            }
        }
    }
}

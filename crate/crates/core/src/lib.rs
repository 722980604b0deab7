//! Evaluation codes from linear combinations of elementary symmetric
//! polynomials over finite fields.
//!
//! The crate builds the codes obtained by evaluating the span of
//! `σ_m^0, …, σ_m^m` at points with pairwise-distinct coordinates (one code
//! on all such points, one on a single representative per coordinate
//! permutation orbit), and computes their parameters, weight distributions,
//! higher weight spectra and generalized Hamming weights. Closed-form counts
//! are paired with brute-force sweeps throughout; the [`verify`] module
//! reconciles the two and reports mismatches with counterexamples.
//!
//! The crate is `no_std` (with `alloc`); all arithmetic is exact integer and
//! finite-field arithmetic, and every enumeration is deterministic.

#![no_std]

extern crate alloc;

pub mod code;
pub mod combin;
pub mod field;
pub mod sympoly;
pub mod verify;
pub mod weights;

pub use code::{
    build_code, closed_form_params, code_params, dual_distance_check, encode,
    enumerate_distinguished, enumerate_orbit_reps, message_count, min_weight_words, rank,
    weight_histogram_range, CodeError, CodeParams, EvaluationSet, LinearCode, SetKind,
};
pub use combin::{binomial, factorial, gaussian_binomial, perm_count, pow_u128};
pub use field::{Field, FieldElement, FieldError, FieldSpec};
pub use sympoly::{
    classify, closed_form_count_m2, count_distinguished_zeroes, distinguished_zeroes,
    elementary_symmetric, elementary_symmetric_all, evaluate, zero_count_bound, Classification,
    PolyError, SymPoly,
};
pub use verify::{
    verify_code_structure, verify_example_q5_m3, verify_ghw_relations, verify_m2_spectra,
    verify_m2_tables, verify_zero_bounds, Check, Status, VerificationReport,
};
pub use weights::{
    closed_form_m2_distribution, closed_form_m2_higher, extension_closed_form_odd,
    extension_spectrum, generalized_hamming_weights, ghw_geometric, ghw_upper_bound,
    ghw_with_witnesses, higher_weight_spectra, higher_weight_spectra_all, weight_distribution,
    Spectrum, WeightError,
};

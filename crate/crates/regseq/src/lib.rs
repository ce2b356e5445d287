//! Exact regularity tests for sequences of homogeneous multivariate
//! polynomials over the Gaussian rationals.
//!
//! The central question: given n homogeneous polynomials in n variables, do
//! they form a regular sequence? The general answer comes from an exact rank
//! computation on the multiplication-map matrix in the critical degree
//! ([`macaulay`]); two families admit much faster certificates:
//!
//! * power sums with exponents in arithmetic progression ([`powersum`]),
//!   decided by pure number theory, with root-of-unity witnesses for the
//!   negative cases;
//! * sequences within coefficient distance 1 of the pure powers
//!   `x_1^{a_1}, ..., x_n^{a_n}` ([`perturb`]), certified through rigorous
//!   rational enclosures.
//!
//! All arithmetic is exact; nothing here ever rounds.
//!
//! ```
//! use regseq::{is_regular_sequence, parse_polynomial, Verdict};
//!
//! let f1 = parse_polynomial("x1^2 + x1*x2", 2).unwrap();
//! let f2 = parse_polynomial("x1*x2^2 + x2^3", 2).unwrap();
//! let report = is_regular_sequence(&[f1, f2]).unwrap();
//! assert_eq!(report.verdict, Verdict::NotRegular);
//! assert_eq!(report.rank, Some(4)); // one short of p = 5
//! ```

pub mod macaulay;
pub mod numtheory;
pub mod parse;
pub mod perturb;
pub mod poly;
pub mod powersum;

pub use macaulay::{
    build_macaulay, critical_degree, is_regular_sequence, is_regular_sequence_with_cap,
    rank_exact, MacaulayError, MacaulayMatrix, Matrix, Method, RegularityReport, Verdict,
};
pub use parse::{format_polynomial, parse_polynomial, ParseError};
pub use perturb::{
    distance, graded_piece_dimension, is_column_diagonally_dominant, near_powers_certificate,
    DistanceCertificate, PerturbError, RealEnclosure,
};
pub use poly::{GaussianRational, Monomial, Polynomial};
pub use powersum::{
    ap_certificate, necessary_condition, normalize_exponents, power_sum, vanishing_sum_search,
    verify_witness, APSpec, ExponentSet, PowersumError, RootOfUnityWitness,
};

// The guide's code blocks double as doc-tests so the book can never drift
// from the library. mdBook itself cannot run snippets against the crate;
// including the chapters here lets `cargo test --doc` do it.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/macaulay.md")]
    mod macaulay {}
    #[doc = include_str!("../../../book/src/power-sums.md")]
    mod power_sums {}
    #[doc = include_str!("../../../book/src/roots-of-unity.md")]
    mod roots_of_unity {}
    #[doc = include_str!("../../../book/src/perturbation.md")]
    mod perturbation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! Coefficient-distance machinery: the sum-of-absolute-differences metric on
//! graded pieces, the near-pure-powers certificate, a rigorous column
//! diagonal-dominance test, and graded-piece dimensions.
//!
//! Absolute values of Gaussian rationals are square roots and usually
//! irrational, so every comparison against a rational threshold goes through
//! an outward-rounded rational enclosure of the true value. Enclosures are
//! exact whenever the value itself is rational (detected by a perfect-square
//! test), which makes boundary cases like "distance exactly 1" decidable.
//! An enclosure that still straddles the threshold at the configured width
//! is reported as inconclusive, never silently rounded.

use crate::macaulay::{rank_exact, Matrix};
use crate::poly::{GaussianRational, Monomial, Polynomial};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

/// Default enclosure width: `2^-64`.
pub const DEFAULT_PRECISION_BITS: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PerturbError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enclosure still straddles the threshold at width 2^-{bits}; inconclusive")]
    Inconclusive { bits: u32 },
    #[error("matrix must be square")]
    NonSquare,
    #[error("need at least one polynomial")]
    EmptyList,
}

/// A rational interval `[lower, upper]` guaranteed to contain the exact real
/// value it stands for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealEnclosure {
    lower: BigRational,
    upper: BigRational,
}

impl RealEnclosure {
    pub fn exact(value: BigRational) -> Self {
        RealEnclosure {
            lower: value.clone(),
            upper: value,
        }
    }

    pub fn zero() -> Self {
        Self::exact(BigRational::zero())
    }

    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    pub fn upper(&self) -> &BigRational {
        &self.upper
    }

    /// Lower equals upper: the enclosure pins the value exactly.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn add(&self, other: &RealEnclosure) -> RealEnclosure {
        RealEnclosure {
            lower: &self.lower + &other.lower,
            upper: &self.upper + &other.upper,
        }
    }

    /// Enclosure of `sqrt(s)` for `s >= 0`, of width at most `2^-bits`;
    /// degenerates to the exact value when `s` is a square in Q.
    fn sqrt(s: &BigRational, bits: u32) -> RealEnclosure {
        debug_assert!(!s.is_negative());
        if s.is_zero() {
            return RealEnclosure::zero();
        }
        let p = s.numer().magnitude();
        let q = s.denom().magnitude();
        // sqrt(p/q) = sqrt(p*q) / q; bracket sqrt(p*q) between consecutive
        // multiples of 2^-bits.
        let t: BigUint = p * q;
        let shifted = t << (2 * bits);
        let root = shifted.sqrt();
        let denom = BigInt::from(q.clone() << bits);
        if &root * &root == shifted {
            return RealEnclosure::exact(BigRational::new(BigInt::from(root), denom));
        }
        RealEnclosure {
            lower: BigRational::new(BigInt::from(root.clone()), denom.clone()),
            upper: BigRational::new(BigInt::from(root + 1u32), denom),
        }
    }

    /// Enclosure of `|z|` for a Gaussian rational `z`. Exact for real or
    /// purely imaginary `z`, and whenever `|z|` happens to be rational.
    pub fn abs_of(z: &GaussianRational, bits: u32) -> RealEnclosure {
        if z.im().is_zero() {
            return RealEnclosure::exact(z.re().abs());
        }
        if z.re().is_zero() {
            return RealEnclosure::exact(z.im().abs());
        }
        Self::sqrt(&z.norm_sqr(), bits)
    }

    /// Rigorous strict comparison against a rational threshold:
    /// `Some(true)` when the whole enclosure is below, `Some(false)` when no
    /// part of it is, `None` when it straddles.
    pub fn strictly_below(&self, threshold: &BigRational) -> Option<bool> {
        if &self.upper < threshold {
            Some(true)
        } else if &self.lower >= threshold {
            Some(false)
        } else {
            None
        }
    }
}

fn common_degree(f: &Polynomial, g: &Polynomial) -> Result<Option<usize>, PerturbError> {
    if f.num_vars() != g.num_vars() {
        return Err(PerturbError::ShapeMismatch(
            "polynomials live in different variable counts".into(),
        ));
    }
    let df = match (f.is_zero(), f.homogeneous_degree()) {
        (true, _) => None,
        (false, Some(d)) => Some(d),
        (false, None) => {
            return Err(PerturbError::ShapeMismatch(
                "first polynomial is not homogeneous".into(),
            ))
        }
    };
    let dg = match (g.is_zero(), g.homogeneous_degree()) {
        (true, _) => None,
        (false, Some(d)) => Some(d),
        (false, None) => {
            return Err(PerturbError::ShapeMismatch(
                "second polynomial is not homogeneous".into(),
            ))
        }
    };
    match (df, dg) {
        (Some(a), Some(b)) if a != b => Err(PerturbError::ShapeMismatch(format!(
            "degree mismatch: {a} vs {b}"
        ))),
        (a, b) => Ok(a.or(b)),
    }
}

/// The distance `sum_j |lambda_j - nu_j|` over the lex monomial basis of the
/// common degree, as an enclosure of width at most `(terms) * 2^-bits`.
pub fn distance_with_precision(
    f: &Polynomial,
    g: &Polynomial,
    bits: u32,
) -> Result<RealEnclosure, PerturbError> {
    common_degree(f, g)?;
    let monomials: BTreeSet<&Monomial> = f
        .terms()
        .map(|(m, _)| m)
        .chain(g.terms().map(|(m, _)| m))
        .collect();
    let mut acc = RealEnclosure::zero();
    for m in monomials {
        let diff = &f.coeff(m) - &g.coeff(m);
        if !diff.is_zero() {
            acc = acc.add(&RealEnclosure::abs_of(&diff, bits));
        }
    }
    Ok(acc)
}

/// [`distance_with_precision`] at the default width.
pub fn distance(f: &Polynomial, g: &Polynomial) -> Result<RealEnclosure, PerturbError> {
    distance_with_precision(f, g, DEFAULT_PRECISION_BITS)
}

/// Per-polynomial outcome inside a [`DistanceCertificate`].
#[derive(Clone, Debug)]
pub struct PolyDistance {
    pub index: usize,
    pub distance: RealEnclosure,
    pub strict_below_one: bool,
}

/// Result of the near-pure-powers test: `certified` implies every distance
/// is rigorously below 1, which proves the sequence regular.
#[derive(Clone, Debug)]
pub struct DistanceCertificate {
    pub per_poly: Vec<PolyDistance>,
    pub certified: bool,
}

/// Compare each `f_i` against `x_i^{deg f_i}`. If every distance is
/// strictly below 1 the sequence is a regular sequence; a failed comparison
/// only means this certificate does not apply.
pub fn near_powers_certificate(fs: &[Polynomial]) -> Result<DistanceCertificate, PerturbError> {
    near_powers_certificate_with_precision(fs, DEFAULT_PRECISION_BITS)
}

pub fn near_powers_certificate_with_precision(
    fs: &[Polynomial],
    bits: u32,
) -> Result<DistanceCertificate, PerturbError> {
    if fs.is_empty() {
        return Err(PerturbError::EmptyList);
    }
    let n = fs.len();
    let one = BigRational::one();
    let mut per_poly = Vec::with_capacity(n);
    for (index, f) in fs.iter().enumerate() {
        if f.num_vars() != n {
            return Err(PerturbError::ShapeMismatch(format!(
                "{n} polynomials must live in {n} variables"
            )));
        }
        let degree = f.homogeneous_degree().ok_or_else(|| {
            PerturbError::ShapeMismatch(format!(
                "polynomial #{index} must be nonzero and homogeneous"
            ))
        })?;
        if degree == 0 {
            return Err(PerturbError::ShapeMismatch(format!(
                "polynomial #{index} has degree 0"
            )));
        }
        let target = Polynomial::var_power(n, index + 1, degree as u32);
        let enclosure = distance_with_precision(f, &target, bits)?;
        let strict = enclosure
            .strictly_below(&one)
            .ok_or(PerturbError::Inconclusive { bits })?;
        per_poly.push(PolyDistance {
            index,
            distance: enclosure,
            strict_below_one: strict,
        });
    }
    let certified = per_poly.iter().all(|p| p.strict_below_one);
    Ok(DistanceCertificate {
        per_poly,
        certified,
    })
}

/// Strict column diagonal dominance, decided rigorously: true means every
/// column satisfies `|a_jj| > sum_{i != j} |a_ij|`, which forces a nonzero
/// determinant.
pub fn is_column_diagonally_dominant(matrix: &Matrix) -> Result<bool, PerturbError> {
    is_column_diagonally_dominant_with_precision(matrix, DEFAULT_PRECISION_BITS)
}

pub fn is_column_diagonally_dominant_with_precision(
    matrix: &Matrix,
    bits: u32,
) -> Result<bool, PerturbError> {
    if !matrix.is_square() {
        return Err(PerturbError::NonSquare);
    }
    for j in 0..matrix.cols() {
        let diag = RealEnclosure::abs_of(matrix.get(j, j), bits);
        let mut off = RealEnclosure::zero();
        for i in 0..matrix.rows() {
            if i != j {
                off = off.add(&RealEnclosure::abs_of(matrix.get(i, j), bits));
            }
        }
        if diag.lower() > off.upper() {
            continue; // column is strictly dominant
        }
        if diag.upper() <= off.lower() {
            return Ok(false);
        }
        return Err(PerturbError::Inconclusive { bits });
    }
    Ok(true)
}

/// Dimension of the degree-(d+1) piece of the ideal generated by
/// polynomials all homogeneous of the same degree d >= 1: the exact rank of
/// the matrix whose rows are the coordinates of `x_l * g_j`.
pub fn graded_piece_dimension(gs: &[Polynomial]) -> Result<usize, PerturbError> {
    if gs.is_empty() {
        return Err(PerturbError::EmptyList);
    }
    let n = gs[0].num_vars();
    let mut degree = None;
    for (index, g) in gs.iter().enumerate() {
        if g.num_vars() != n {
            return Err(PerturbError::ShapeMismatch(
                "polynomials live in different variable counts".into(),
            ));
        }
        let d = g.homogeneous_degree().ok_or_else(|| {
            PerturbError::ShapeMismatch(format!(
                "polynomial #{index} must be nonzero and homogeneous"
            ))
        })?;
        if d == 0 {
            return Err(PerturbError::ShapeMismatch(format!(
                "polynomial #{index} has degree 0"
            )));
        }
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => {
                return Err(PerturbError::ShapeMismatch(format!(
                    "mixed degrees: {prev} vs {d}"
                )))
            }
            _ => {}
        }
    }
    let d = degree.expect("nonempty list");
    let mut rows = Vec::with_capacity(gs.len() * n);
    for g in gs {
        for var in 1..=n {
            let shifted = g.mul_monomial(&Monomial::var_power(n, var, 1));
            let cv = shifted
                .coordinate_vector(d + 1)
                .expect("product of homogeneous polynomials is homogeneous");
            rows.push(cv.entries().to_vec());
        }
    }
    Ok(rank_exact(&Matrix::from_rows(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, n).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn distance_examples() {
        // The boundary pair: d(x^2+xy, x^2) is exactly 1.
        let d = distance(&p("x1^2+x1*x2", 2), &p("x1^2", 2)).unwrap();
        assert!(d.is_exact());
        assert_eq!(d.lower(), &BigRational::one());

        let f = p("x1^2 + 1/2*x1*x2", 2);
        assert_eq!(distance(&f, &f).unwrap(), RealEnclosure::zero());

        let d = distance(&f, &p("x1^2", 2)).unwrap();
        assert_eq!(d.lower(), &rat(1, 2));
        assert!(d.is_exact());
    }

    #[test]
    fn distance_shape_errors() {
        assert!(distance(&p("x1", 2), &p("x1^2", 2)).is_err());
        assert!(distance(&p("x1", 2), &p("x1", 3)).is_err());
        // zero is a degenerate member of every degree
        let d = distance(&p("0", 2), &p("x1^2", 2)).unwrap();
        assert_eq!(d.lower(), &BigRational::one());
    }

    #[test]
    fn complex_distance_is_exact_when_rational() {
        // |3+4i| = 5 is rational: the perfect-square path keeps it exact.
        let d = distance(&p("(3+4i)*x1", 1), &p("0", 1)).unwrap();
        assert!(d.is_exact());
        assert_eq!(d.lower(), &BigRational::from_integer(BigInt::from(5)));
        // |1+i| = sqrt(2) is not: enclosure must be tight but inexact.
        let d = distance(&p("(1+i)*x1", 1), &p("0", 1)).unwrap();
        assert!(!d.is_exact());
        assert!(d.lower() < d.upper());
        let two = BigRational::from_integer(BigInt::from(2));
        assert!(&(d.lower() * d.lower()) < &two && &two < &(d.upper() * d.upper()));
    }

    #[test]
    fn near_powers_examples() {
        // Pure powers: all distances exactly 0.
        let cert =
            near_powers_certificate(&[p("x1^2", 3), p("x2^2", 3), p("x3^2", 3)]).unwrap();
        assert!(cert.certified);
        assert!(cert.per_poly.iter().all(|pd| pd.distance.is_exact()
            && pd.distance.lower().is_zero()));

        // The boundary pair: distance exactly 1, not certified.
        let cert =
            near_powers_certificate(&[p("x1^2+x1*x2", 2), p("x1*x2^2+x2^3", 2)]).unwrap();
        assert!(!cert.certified);
        assert!(cert.per_poly.iter().all(|pd| !pd.strict_below_one));

        // Distances 1/2 and 1/3: certified.
        let cert = near_powers_certificate(&[
            p("x1^2 + 1/2*x1*x2", 2),
            p("x2^2 + 1/3*x1^2", 2),
        ])
        .unwrap();
        assert!(cert.certified);
        assert_eq!(cert.per_poly[0].distance.lower(), &rat(1, 2));
        assert_eq!(cert.per_poly[1].distance.lower(), &rat(1, 3));
    }

    #[test]
    fn certified_pair_is_confirmed_regular() {
        let fs = [p("x1^2 + 1/2*x1*x2", 2), p("x2^2 + 1/3*x1^2", 2)];
        let cert = near_powers_certificate(&fs).unwrap();
        assert!(cert.certified);
        let report = crate::macaulay::is_regular_sequence(&fs).unwrap();
        assert_eq!(report.verdict, crate::macaulay::Verdict::Regular);
    }

    #[test]
    fn dominance_examples() {
        assert!(is_column_diagonally_dominant(&Matrix::identity(3)).unwrap());

        let m = Matrix::from_rows(vec![
            vec![
                GaussianRational::from_integer(2),
                GaussianRational::from_integer(1),
            ],
            vec![
                GaussianRational::from_integer(1),
                GaussianRational::from_integer(3),
            ],
        ]);
        assert!(is_column_diagonally_dominant(&m).unwrap());

        let swap = Matrix::from_rows(vec![
            vec![
                GaussianRational::zero(),
                GaussianRational::from_integer(1),
            ],
            vec![
                GaussianRational::from_integer(1),
                GaussianRational::zero(),
            ],
        ]);
        assert!(!is_column_diagonally_dominant(&swap).unwrap());

        assert!(matches!(
            is_column_diagonally_dominant(&Matrix::zeros(2, 3)),
            Err(PerturbError::NonSquare)
        ));
    }

    #[test]
    fn dominance_with_complex_entries() {
        // |2+2i| = sqrt(8) > |1| + |i| = 2 in column 1; column 2 dominated by 3.
        let m = Matrix::from_rows(vec![
            vec![
                &GaussianRational::from_integer(2) + &(&GaussianRational::i() * &GaussianRational::from_integer(2)),
                GaussianRational::i(),
            ],
            vec![
                GaussianRational::from_integer(1),
                GaussianRational::from_integer(3),
            ],
        ]);
        assert!(is_column_diagonally_dominant(&m).unwrap());
    }

    #[test]
    fn graded_piece_examples() {
        // (x1, x2) in degree 1 generate all of S_2.
        assert_eq!(
            graded_piece_dimension(&[p("x1", 2), p("x2", 2)]).unwrap(),
            3
        );
        // (x1^2) alone: x1^3 and x1^2 x2.
        assert_eq!(graded_piece_dimension(&[p("x1^2", 2)]).unwrap(), 2);
        // (x1^2+x2^2, x1*x2) reach all of S_3.
        assert_eq!(
            graded_piece_dimension(&[p("x1^2+x2^2", 2), p("x1*x2", 2)]).unwrap(),
            4
        );
        // mixed degrees rejected
        assert!(graded_piece_dimension(&[p("x1", 2), p("x2^2", 2)]).is_err());
        assert!(graded_piece_dimension(&[]).is_err());
    }

    #[test]
    fn adversarially_close_distance_is_still_decided() {
        // |1 + 2^-40 i| = sqrt(1 + 2^-80) exceeds 1 by about 2^-81. The
        // enclosure width scales with the coefficient's denominator, so even
        // this gap is resolved at the default precision: conclusive, and not
        // certified.
        let f = [
            p("x1^2 + (1+1/1099511627776i)*x1*x2", 2),
            p("x2^2", 2),
        ];
        let cert = near_powers_certificate(&f).unwrap();
        assert!(!cert.certified);
        assert!(!cert.per_poly[0].strict_below_one);
        assert!(!cert.per_poly[0].distance.is_exact());
    }

    #[test]
    fn straddling_dominance_is_inconclusive_never_guessed() {
        // The off-diagonal entry is the exact midpoint of the 64-bit
        // enclosure of |1+i| = sqrt(2), so at 64 bits the strict comparison
        // cannot be settled; more bits settle it.
        let mid = GaussianRational::from_rational(BigRational::new(
            "52175271301331128849".parse().unwrap(),
            BigInt::one() << 65u32,
        ));
        let m = Matrix::from_rows(vec![
            vec![
                &GaussianRational::one() + &GaussianRational::i(),
                GaussianRational::zero(),
            ],
            vec![mid, GaussianRational::from_integer(5)],
        ]);
        assert!(matches!(
            is_column_diagonally_dominant_with_precision(&m, 64),
            Err(PerturbError::Inconclusive { bits: 64 })
        ));
        assert!(is_column_diagonally_dominant_with_precision(&m, 130).is_ok());
    }

    #[test]
    fn enclosure_width_honors_precision() {
        let z = &GaussianRational::one() + &GaussianRational::i();
        for bits in [8u32, 32, 64, 128] {
            let e = RealEnclosure::abs_of(&z, bits);
            let bound = BigRational::new(BigInt::one(), BigInt::one() << bits);
            assert!(e.width() <= bound, "width too large at {bits} bits");
        }
    }
}

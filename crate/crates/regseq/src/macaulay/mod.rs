//! The general decision procedure for regularity.
//!
//! A sequence of n homogeneous polynomials in n variables is regular exactly
//! when the ideal it generates fills the whole graded piece in the critical
//! degree `N = 1 + sum(a_i - 1)`. Filling that piece is a linear-algebra
//! statement: the multiplication map `(g_1,..,g_n) -> sum f_i g_i` from
//! degree N-a_i inputs to degree N outputs must be surjective, i.e. its
//! matrix must have full row rank p. This module builds that matrix in the
//! lex monomial bases and decides the rank exactly.

mod rank;

pub use rank::rank_exact;

use crate::poly::{
    binomial, lex_index, monomial_count, monomials_of_degree, GaussianRational, Monomial,
    Polynomial,
};
use num_bigint::BigUint;
use std::fmt;
use thiserror::Error;

/// Refuse to build matrices with more rows than this unless the caller
/// raises the cap; keeps desk-scale guarantees honest.
pub const DEFAULT_MAX_ROWS: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacaulayError {
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence has {got} polynomials but they live in {expected} variables")]
    WrongSequenceLength { expected: usize, got: usize },
    #[error("polynomials disagree on the number of variables")]
    VariableCountMismatch,
    #[error("polynomial #{index} is zero; its degree is undefined")]
    ZeroPolynomial { index: usize },
    #[error("polynomial #{index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("polynomial #{index} has degree 0; degrees must be at least 1")]
    DegreeZero { index: usize },
    #[error("polynomial #{index} has degree {degree}, larger than the target degree {target}")]
    DegreeTooLarge {
        index: usize,
        degree: usize,
        target: usize,
    },
    #[error("matrix too large: p = {p} rows exceeds the cap of {cap}")]
    TooLarge { p: BigUint, cap: usize },
}

/// A dense matrix over the Gaussian rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    /// Builds from row vectors; panics unless all rows have equal length.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GaussianRational) {
        self.data[i * self.cols + j] = value;
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The matrix of the multiplication map in degree N, with its index maps.
///
/// Rows are indexed by the degree-N monomials in decreasing lex order;
/// columns come in blocks, one block per sequence member, ordered by the
/// degree-(N - a_i) monomial that multiplies it (decreasing lex within the
/// block). Column (i, m) holds the coordinates of `m * f_i`, so every column
/// contains exactly the coefficients of one `f_i`, each appearing once.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    matrix: Matrix,
    row_basis: Vec<Monomial>,
    col_index: Vec<(usize, Monomial)>,
}

impl MacaulayMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Degree-N monomials labelling the rows, decreasing lex.
    pub fn row_basis(&self) -> &[Monomial] {
        &self.row_basis
    }

    /// `(sequence index, multiplier monomial)` labelling each column.
    pub fn col_index(&self) -> &[(usize, Monomial)] {
        &self.col_index
    }
}

/// Verdict of a regularity check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Regular,
    NotRegular,
    /// The certificate's hypotheses do not hold; nothing was decided.
    NotCertified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Regular => write!(f, "Regular"),
            Verdict::NotRegular => write!(f, "NotRegular"),
            Verdict::NotCertified => write!(f, "NotCertified"),
        }
    }
}

/// Which argument decided a report.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    MacaulayRank,
    APCertificate,
    NearPowersCertificate,
    NecessaryConditionFailed,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::MacaulayRank => write!(f, "MacaulayRank"),
            Method::APCertificate => write!(f, "APCertificate"),
            Method::NearPowersCertificate => write!(f, "NearPowersCertificate"),
            Method::NecessaryConditionFailed => write!(f, "NecessaryConditionFailed"),
        }
    }
}

/// Outcome of a regularity check, with the numeric evidence that backs it.
#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub verdict: Verdict,
    pub method: Method,
    /// The critical degree N, when a matrix was involved.
    pub critical_degree: Option<usize>,
    /// p = dim S_N, the required rank.
    pub space_dim: Option<usize>,
    /// The exact rank found (method MacaulayRank only).
    pub rank: Option<usize>,
    pub notes: String,
}

/// `N = 1 + sum(a_i - 1)` for the given degrees.
pub fn critical_degree(degrees: &[usize]) -> Result<usize, MacaulayError> {
    if degrees.is_empty() {
        return Err(MacaulayError::EmptySequence);
    }
    Ok(1 + degrees.iter().map(|&a| a - 1).sum::<usize>())
}

fn homogeneous_degrees(fs: &[Polynomial]) -> Result<Vec<usize>, MacaulayError> {
    if fs.is_empty() {
        return Err(MacaulayError::EmptySequence);
    }
    let n = fs[0].num_vars();
    let mut degrees = Vec::with_capacity(fs.len());
    for (index, f) in fs.iter().enumerate() {
        if f.num_vars() != n {
            return Err(MacaulayError::VariableCountMismatch);
        }
        if f.is_zero() {
            return Err(MacaulayError::ZeroPolynomial { index });
        }
        match f.homogeneous_degree() {
            Some(d) => degrees.push(d),
            None => return Err(MacaulayError::NotHomogeneous { index }),
        }
    }
    Ok(degrees)
}

/// Build the degree-N matrix of `(g_1,..,g_k) -> sum_i f_i g_i`.
///
/// Requires each `f_i` nonzero and homogeneous of degree at most N. The
/// result has `p = C(n+N-1, N)` rows and `q = sum_i C(n+N-a_i-1, N-a_i)`
/// columns.
pub fn build_macaulay(fs: &[Polynomial], target_degree: usize) -> Result<MacaulayMatrix, MacaulayError> {
    let degrees = homogeneous_degrees(fs)?;
    for (index, &degree) in degrees.iter().enumerate() {
        if degree > target_degree {
            return Err(MacaulayError::DegreeTooLarge {
                index,
                degree,
                target: target_degree,
            });
        }
    }
    let n = fs[0].num_vars();
    let row_basis = monomials_of_degree(n, target_degree);
    let mut col_index = Vec::new();
    for (i, &a) in degrees.iter().enumerate() {
        for m in monomials_of_degree(n, target_degree - a) {
            col_index.push((i, m));
        }
    }
    let mut matrix = Matrix::zeros(row_basis.len(), col_index.len());
    for (j, (i, multiplier)) in col_index.iter().enumerate() {
        for (fm, coeff) in fs[*i].terms() {
            let row = lex_index(&fm.mul(multiplier), target_degree);
            matrix.set(row, j, coeff.clone());
        }
    }
    Ok(MacaulayMatrix {
        matrix,
        row_basis,
        col_index,
    })
}

/// Decide regularity by the critical-degree rank test, with the default
/// matrix-size cap.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<RegularityReport, MacaulayError> {
    is_regular_sequence_with_cap(fs, DEFAULT_MAX_ROWS)
}

/// Decide regularity by the critical-degree rank test.
///
/// The sequence must consist of exactly n nonzero homogeneous polynomials of
/// degree >= 1 in n variables. Verdict `Regular` means the matrix in degree
/// N has full row rank p; `NotRegular` means it does not. Both directions
/// are exact.
pub fn is_regular_sequence_with_cap(
    fs: &[Polynomial],
    max_rows: usize,
) -> Result<RegularityReport, MacaulayError> {
    let degrees = homogeneous_degrees(fs)?;
    let n = fs[0].num_vars();
    if fs.len() != n {
        return Err(MacaulayError::WrongSequenceLength {
            expected: n,
            got: fs.len(),
        });
    }
    if let Some(index) = degrees.iter().position(|&a| a == 0) {
        return Err(MacaulayError::DegreeZero { index });
    }
    let target = critical_degree(&degrees)?;
    let p_big = binomial(n + target - 1, target);
    if p_big > BigUint::from(max_rows) {
        return Err(MacaulayError::TooLarge {
            p: p_big,
            cap: max_rows,
        });
    }
    let built = build_macaulay(fs, target)?;
    let p = built.matrix().rows();
    debug_assert_eq!(p, monomial_count(n, target));
    let rank = rank_exact(built.matrix());
    let regular = rank == p;
    Ok(RegularityReport {
        verdict: if regular {
            Verdict::Regular
        } else {
            Verdict::NotRegular
        },
        method: Method::MacaulayRank,
        critical_degree: Some(target),
        space_dim: Some(p),
        rank: Some(rank),
        notes: if regular {
            format!("degree-{target} map is surjective: rank {rank} = p")
        } else {
            format!("degree-{target} map misses S_N: rank {rank} < p = {p}")
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, n).unwrap()
    }

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn critical_degree_examples() {
        assert_eq!(critical_degree(&[2, 2]).unwrap(), 3);
        assert_eq!(critical_degree(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(critical_degree(&[1, 8, 15]).unwrap(), 22);
        assert!(critical_degree(&[]).is_err());
    }

    #[test]
    fn worked_example_matrix_layout() {
        // f1 = l1 x1^2 + l2 x1x2 + l3 x2^2, f2 = l4 x1^2 + l5 x1x2 + l6 x2^2
        // with distinct markers for the l's; the 4x4 matrix in degree 3 must
        // come out entry-for-entry as
        //   [l1 0  l4 0 ]
        //   [l2 l1 l5 l4]
        //   [l3 l2 l6 l5]
        //   [0  l3 0  l6]
        let (l1, l2, l3, l4, l5, l6) = (2, 3, 5, 7, 11, 13);
        let f1 = p(&format!("{l1}*x1^2 + {l2}*x1*x2 + {l3}*x2^2"), 2);
        let f2 = p(&format!("{l4}*x1^2 + {l5}*x1*x2 + {l6}*x2^2"), 2);
        let built = build_macaulay(&[f1, f2], 3).unwrap();
        let expected = [
            [l1, 0, l4, 0],
            [l2, l1, l5, l4],
            [l3, l2, l6, l5],
            [0, l3, 0, l6],
        ];
        assert_eq!(built.matrix().rows(), 4);
        assert_eq!(built.matrix().cols(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(built.matrix().get(i, j), &gr(expected[i][j]), "entry ({i},{j})");
            }
        }
        // Row labels: x1^3, x1^2x2, x1x2^2, x2^3; column blocks by sequence
        // index with lex-decreasing multipliers x1, x2.
        assert_eq!(built.row_basis()[0].to_string(), "x1^3");
        assert_eq!(built.row_basis()[3].to_string(), "x2^3");
        assert_eq!(built.col_index()[0], (0, Monomial::var_power(2, 1, 1)));
        assert_eq!(built.col_index()[3], (1, Monomial::var_power(2, 2, 1)));
    }

    #[test]
    fn pure_powers_give_permutation_columns() {
        let built = build_macaulay(&[p("x1^2", 2), p("x2^2", 2)], 3).unwrap();
        // Each column has exactly one 1; together they cover all four rows.
        let mut hit_rows = Vec::new();
        for j in 0..4 {
            let ones: Vec<usize> = (0..4)
                .filter(|&i| !built.matrix().get(i, j).is_zero())
                .collect();
            assert_eq!(ones.len(), 1);
            assert_eq!(built.matrix().get(ones[0], j), &gr(1));
            hit_rows.push(ones[0]);
        }
        hit_rows.sort_unstable();
        assert_eq!(hit_rows, vec![0, 1, 2, 3]);
    }

    #[test]
    fn shape_errors() {
        // sequence length != number of variables
        let err = is_regular_sequence(&[p("x1+x2", 2)]).unwrap_err();
        assert_eq!(
            err,
            MacaulayError::WrongSequenceLength {
                expected: 2,
                got: 1
            }
        );
        // zero polynomial
        assert!(matches!(
            is_regular_sequence(&[p("0", 2), p("x2", 2)]),
            Err(MacaulayError::ZeroPolynomial { index: 0 })
        ));
        // inhomogeneous polynomial
        assert!(matches!(
            is_regular_sequence(&[p("x1^2+x2", 2), p("x2", 2)]),
            Err(MacaulayError::NotHomogeneous { index: 0 })
        ));
        // degree above the build target
        assert!(matches!(
            build_macaulay(&[p("x1^3", 2)], 2),
            Err(MacaulayError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn remark_counterexample_is_not_regular() {
        // f1 = x(x+y), f2 = y^2(x+y): the common factor x+y gives the common
        // root (1, -1), so the sequence cannot be regular.
        let report =
            is_regular_sequence(&[p("x1^2+x1*x2", 2), p("x1*x2^2+x2^3", 2)]).unwrap();
        assert_eq!(report.verdict, Verdict::NotRegular);
        assert_eq!(report.method, Method::MacaulayRank);
        assert_eq!(report.critical_degree, Some(4));
        assert_eq!(report.space_dim, Some(5));
        assert_eq!(report.rank, Some(4));
    }

    #[test]
    fn pure_powers_are_regular() {
        let report =
            is_regular_sequence(&[p("x1^2", 3), p("x2^2", 3), p("x3^2", 3)]).unwrap();
        assert_eq!(report.verdict, Verdict::Regular);
    }

    #[test]
    fn first_three_power_sums_are_regular() {
        let fs: Vec<Polynomial> = (1..=3)
            .map(|m| crate::powersum::power_sum(3, m))
            .collect();
        let report = is_regular_sequence(&fs).unwrap();
        assert_eq!(report.verdict, Verdict::Regular);
        assert_eq!(report.critical_degree, Some(4));
        assert_eq!(report.space_dim, Some(15));
        assert_eq!(report.rank, Some(15));
    }

    #[test]
    fn size_cap_is_enforced() {
        let fs = vec![p("x1^9", 2), p("x2^9", 2)];
        let err = is_regular_sequence_with_cap(&fs, 10).unwrap_err();
        match err {
            MacaulayError::TooLarge { p, cap } => {
                assert_eq!(p, BigUint::from(18u32)); // C(2+17-1, 17) = 18
                assert_eq!(cap, 10);
            }
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }
}

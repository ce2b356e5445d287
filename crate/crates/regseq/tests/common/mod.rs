//! Shared oracles and generators for the integration suites.
//!
//! Everything here is deliberately naive and independent of the library's
//! own elimination: rank by textbook rational row reduction, determinants by
//! cofactor expansion, resultants by a direct Sylvester construction.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regseq::poly::{monomials_of_degree, GaussianRational, Polynomial};
use regseq::Matrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Random small rational, nonzero unless `allow_zero`.
pub fn random_rational(rng: &mut ChaCha8Rng, allow_zero: bool) -> BigRational {
    loop {
        let num = rng.gen_range(-9i64..=9);
        if num == 0 && !allow_zero {
            continue;
        }
        let den = rng.gen_range(1i64..=9);
        return rational(num, den);
    }
}

/// Random small Gaussian rational; imaginary part present with the given
/// probability. Nonzero unless `allow_zero`.
pub fn random_gaussian(rng: &mut ChaCha8Rng, imaginary_prob: f64, allow_zero: bool) -> GaussianRational {
    loop {
        let re = random_rational(rng, true);
        let im = if rng.gen_bool(imaginary_prob) {
            random_rational(rng, true)
        } else {
            BigRational::new(BigInt::from(0), BigInt::from(1))
        };
        let z = GaussianRational::new(re, im);
        if allow_zero || !z.is_zero() {
            return z;
        }
    }
}

/// Random nonzero homogeneous polynomial of the exact degree, each monomial
/// kept with probability ~1/2.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    n: usize,
    degree: usize,
    imaginary_prob: f64,
) -> Polynomial {
    loop {
        let mut terms = Vec::new();
        for m in monomials_of_degree(n, degree) {
            if rng.gen_bool(0.5) {
                terms.push((m, random_gaussian(rng, imaginary_prob, false)));
            }
        }
        let f = Polynomial::from_terms(n, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random homogeneous perturbation of total absolute coefficient mass at
/// most `bound` (all real rational, so the mass is exact).
pub fn random_perturbation(
    rng: &mut ChaCha8Rng,
    n: usize,
    degree: usize,
    bound: &BigRational,
) -> Polynomial {
    let mut terms = Vec::new();
    let mut mass = BigRational::new(BigInt::from(0), BigInt::from(1));
    for m in monomials_of_degree(n, degree) {
        if rng.gen_bool(0.5) {
            let c = random_rational(rng, false);
            mass += c.abs();
            terms.push((m, c));
        }
    }
    if terms.is_empty() {
        return Polynomial::zero(n);
    }
    // Scale the total mass under the bound: multiply by bound/mass * k/8
    // for a random k in 1..=7.
    let k = rational(rng.gen_range(1i64..=7), 8);
    let scale = bound / &mass * k;
    Polynomial::from_terms(
        n,
        terms.into_iter().map(|(m, c)| {
            (
                m,
                GaussianRational::from_rational(c * &scale),
            )
        }),
    )
}

/// Textbook rational Gaussian elimination over Q(i), with division.
pub fn naive_rank(matrix: &Matrix) -> usize {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let mut a: Vec<Vec<GaussianRational>> = (0..rows)
        .map(|i| (0..cols).map(|j| matrix.get(i, j).clone()).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].inverse();
        for c in col..cols {
            a[rank][c] = &a[rank][c] * &inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &a[rank][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion along the first row. Exponential; for
/// matrices up to ~7x7 only.
pub fn det_cofactor(matrix: &Matrix) -> GaussianRational {
    assert!(matrix.is_square());
    let n = matrix.rows();
    let grid: Vec<Vec<GaussianRational>> = (0..n)
        .map(|i| (0..n).map(|j| matrix.get(i, j).clone()).collect())
        .collect();
    det_rec(&grid, &(0..n).collect::<Vec<_>>(), 0)
}

fn det_rec(grid: &[Vec<GaussianRational>], cols: &[usize], row: usize) -> GaussianRational {
    if cols.is_empty() {
        return GaussianRational::one();
    }
    let mut acc = GaussianRational::zero();
    for (k, &col) in cols.iter().enumerate() {
        let entry = &grid[row][col];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != col)
            .collect();
        let minor = det_rec(grid, &rest, row + 1);
        let signed = if k % 2 == 0 {
            &minor * entry
        } else {
            -&(&minor * entry)
        };
        acc = &acc + &signed;
    }
    acc
}

/// Coefficient vector of a binary form: index k holds the coefficient of
/// `x^(d-k) y^k`.
pub fn binary_coeffs(f: &Polynomial, degree: usize) -> Vec<GaussianRational> {
    assert_eq!(f.num_vars(), 2);
    let mut out = vec![GaussianRational::zero(); degree + 1];
    for (m, c) in f.terms() {
        let e = m.exponents();
        assert_eq!((e[0] + e[1]) as usize, degree);
        out[e[1] as usize] = c.clone();
    }
    out
}

/// The classical Sylvester matrix of two binary forms of the declared
/// degrees; its determinant is the projective resultant.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, df: usize, dg: usize) -> Matrix {
    let a = binary_coeffs(f, df);
    let b = binary_coeffs(g, dg);
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dg {
        let mut row = vec![GaussianRational::zero(); size];
        for (k, c) in a.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![GaussianRational::zero(); size];
        for (k, c) in b.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

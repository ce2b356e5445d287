//! Exact rank by fraction-free elimination.
//!
//! Rows are first scaled to clear denominators, which reduces the problem to
//! matrices over the Gaussian integers Z[i] (or plain integers when no entry
//! has an imaginary part). Elimination then uses gcd-scaled row combinations
//! and keeps every row primitive, so no fractions ever appear and entry
//! growth stays tame even on large sparse matrices.
//!
//! The pivot rule is fixed: columns are scanned left to right, and within a
//! column the first nonzero entry from the top is the pivot. The result is
//! deterministic.

use super::Matrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Entry type usable by the elimination: an integral domain with gcds.
trait ElimEntry: Clone {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub_mul(&self, scale: &Self, other: &Self, other_scale: &Self) -> Self;
    /// Greatest common divisor, in canonical associate form.
    fn gcd(&self, other: &Self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ElimEntry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_mul(&self, scale: &Self, other: &Self, other_scale: &Self) -> Self {
        self * scale - other * other_scale
    }

    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

/// A Gaussian integer `re + im*i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiply by i.
    fn rot(&self) -> Self {
        GaussInt {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    /// The unique associate with `re > 0, im >= 0` (zero stays zero).
    fn canonical(self) -> Self {
        if ElimEntry::is_zero(&self) {
            return self;
        }
        let mut g = self;
        for _ in 0..3 {
            if g.re.is_positive() && !g.im.is_negative() {
                return g;
            }
            g = g.rot();
        }
        g
    }
}

/// Nearest-integer division, deterministic on ties.
fn div_round(x: &BigInt, y: &BigInt) -> BigInt {
    let (q, r) = x.div_rem(y);
    if (&r << 1u8).magnitude() > y.magnitude() {
        let bump = if r.is_negative() == y.is_negative() {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        q + bump
    } else {
        q
    }
}

impl ElimEntry for GaussInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }

    fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    fn mul(&self, other: &Self) -> Self {
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn sub_mul(&self, scale: &Self, other: &Self, other_scale: &Self) -> Self {
        let a = self.mul(scale);
        let b = other.mul(other_scale);
        GaussInt {
            re: a.re - b.re,
            im: a.im - b.im,
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !ElimEntry::is_zero(&b) {
            // Euclidean step: r = a - round(a/b) * b shrinks the norm.
            let n = b.norm();
            let num = a.mul(&b.conj());
            let q = GaussInt {
                re: div_round(&num.re, &n),
                im: div_round(&num.im, &n),
            };
            let r = a.sub_mul(&GaussInt::one_val(), &b, &q);
            a = b;
            b = r;
        }
        a.canonical()
    }

    fn div_exact(&self, other: &Self) -> Self {
        let n = other.norm();
        let num = self.mul(&other.conj());
        debug_assert!(Zero::is_zero(&(&num.re % &n)) && Zero::is_zero(&(&num.im % &n)));
        GaussInt {
            re: num.re / &n,
            im: num.im / n,
        }
    }
}

impl GaussInt {
    fn one_val() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }
}

/// Divide a row by the gcd of its entries, keeping it primitive.
fn reduce_content<T: ElimEntry>(row: &mut [T]) {
    let mut content: Option<T> = None;
    for entry in row.iter() {
        if entry.is_zero() {
            continue;
        }
        let c = match content {
            None => entry.clone(),
            Some(c) => c.gcd(entry),
        };
        if c.is_unit() {
            return;
        }
        content = Some(c);
    }
    if let Some(content) = content {
        for entry in row.iter_mut() {
            if !entry.is_zero() {
                *entry = entry.div_exact(&content);
            }
        }
    }
}

fn eliminate<T: ElimEntry>(mut rows: Vec<Vec<T>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot = &top[rank];
        let pv = pivot[col].clone();
        for row in below.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let row_scale = pv.div_exact(&g);
            let pivot_scale = row[col].div_exact(&g);
            for c in col..ncols {
                row[c] = row[c].sub_mul(&row_scale, &pivot[c], &pivot_scale);
            }
            debug_assert!(row[col].is_zero());
            reduce_content(&mut row[col..]);
        }
        rank += 1;
    }
    rank
}

/// Exact rank of a matrix over Q(i).
///
/// Deterministic; when every entry is a rational integer the elimination runs
/// over plain arbitrary-precision integers, which is the common fast path for
/// power-sum matrices.
pub fn rank_exact(matrix: &Matrix) -> usize {
    let (nrows, ncols) = (matrix.rows(), matrix.cols());
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let mut all_real = true;
    let mut gauss_rows: Vec<Vec<GaussInt>> = Vec::with_capacity(nrows);
    for i in 0..nrows {
        // Scale the row by the lcm of its denominators: rank is unchanged and
        // entries become Gaussian integers.
        let mut lcm = BigInt::one();
        for j in 0..ncols {
            let z = matrix.get(i, j);
            lcm = lcm.lcm(z.re().denom());
            lcm = lcm.lcm(z.im().denom());
        }
        let mut row = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let z = matrix.get(i, j);
            let re = z.re().numer() * (&lcm / z.re().denom());
            let im = z.im().numer() * (&lcm / z.im().denom());
            if !Zero::is_zero(&im) {
                all_real = false;
            }
            row.push(GaussInt { re, im });
        }
        gauss_rows.push(row);
    }
    if all_real {
        let int_rows: Vec<Vec<BigInt>> = gauss_rows
            .into_iter()
            .map(|row| row.into_iter().map(|g| g.re).collect())
            .collect();
        eliminate(int_rows)
    } else {
        eliminate(gauss_rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::GaussianRational;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from_integer(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(rank_exact(&Matrix::identity(4)), 4);
        assert_eq!(rank_exact(&Matrix::zeros(3, 5)), 0);
    }

    #[test]
    fn singular_worked_example() {
        // The generic 4x4 matrix evaluated at lambda = (1,1,0), (0,1,1):
        // both polynomials share the factor x+y, so the rank drops to 3.
        let m = int_matrix(&[
            &[1, 0, 0, 0],
            &[1, 1, 1, 0],
            &[0, 1, 1, 1],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(rank_exact(&m), 3);
    }

    #[test]
    fn rational_and_complex_entries() {
        let half = GaussianRational::from_ratio(1, 2);
        let i = GaussianRational::i();
        // [[1/2, i], [i, -2]] has determinant -1 - i^2 = ... = -1 + 1 = 0? No:
        // det = 1/2 * -2 - i*i = -1 + 1 = 0, so rank 1.
        let m = Matrix::from_rows(vec![
            vec![half, i.clone()],
            vec![i, GaussianRational::from_integer(-2)],
        ]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn gauss_gcd_sane() {
        let g = GaussInt {
            re: BigInt::from(2),
            im: BigInt::from(2),
        };
        let h = GaussInt {
            re: BigInt::from(0),
            im: BigInt::from(4),
        };
        // gcd(2+2i, 4i) = 2+2i up to units (norm 8 divides both norms 8, 16).
        let d = g.gcd(&h);
        assert_eq!(d.norm(), BigInt::from(8));
        // Canonical form has re > 0, im >= 0.
        assert!(d.re.is_positive() && !d.im.is_negative());
    }

    #[test]
    fn div_round_nearest() {
        let cases = [(7, 2, 3), (-7, 2, -3), (8, 3, 3), (-8, 3, -3), (9, 3, 3)];
        for (x, y, want) in cases {
            assert_eq!(
                div_round(&BigInt::from(x), &BigInt::from(y)),
                BigInt::from(want),
                "{x}/{y}"
            );
        }
    }
}

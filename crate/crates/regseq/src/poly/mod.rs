//! Exact homogeneous multivariate polynomials over the Gaussian rationals.
//!
//! Monomials are exponent vectors ordered lexicographically with
//! `x1 > x2 > ... > xn`; graded pieces are coordinatized by listing the
//! degree-d monomials in strictly decreasing lex order, so `x1^d` always
//! comes first.

mod gaussian;

pub use gaussian::GaussianRational;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: usize },
}

/// A monomial in `n` variables, stored as its exponent vector.
///
/// `Ord` is the lexicographic order with `x1 > x2 > ... > xn`: comparing
/// exponent vectors entry by entry does exactly that.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn unit(num_vars: usize) -> Self {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    /// `x_var^exp` (1-based variable index).
    pub fn var_power(num_vars: usize, var: usize, exp: u32) -> Self {
        assert!(
            var >= 1 && var <= num_vars,
            "variable index {var} out of range 1..={num_vars}"
        );
        let mut exponents = vec![0; num_vars];
        exponents[var - 1] = exp;
        Monomial { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars(), "variable count mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", idx + 1)?;
            } else {
                write!(f, "x{}^{}", idx + 1, e)?;
            }
        }
        Ok(())
    }
}

/// `C(n, k)` as an arbitrary-precision integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of degree-`deg` monomials in `vars` variables, i.e. `C(vars+deg-1, deg)`.
///
/// Panics if the count does not fit a `usize`; callers cap dimensions first.
pub fn monomial_count(vars: usize, deg: usize) -> usize {
    if vars == 0 {
        return if deg == 0 { 1 } else { 0 };
    }
    let big = binomial(vars + deg - 1, deg);
    usize::try_from(&big).expect("monomial count exceeds usize")
}

/// All degree-`d` monomials in `n` variables, in strictly decreasing lex order.
///
/// The list has length `C(n+d-1, d)`; for `d = 0` it is the single constant
/// monomial.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(monomial_count(n, d));
    let mut current = Vec::with_capacity(n);
    fill_monomials(n, d, &mut current, &mut out);
    out
}

fn fill_monomials(n: usize, rem: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if current.len() == n - 1 {
        current.push(rem as u32);
        out.push(Monomial::new(current.clone()));
        current.pop();
        return;
    }
    for e in (0..=rem).rev() {
        current.push(e as u32);
        fill_monomials(n, rem - e, current, out);
        current.pop();
    }
}

/// Position of a degree-`d` monomial in the decreasing-lex list produced by
/// [`monomials_of_degree`], computed combinatorially.
pub fn lex_index(m: &Monomial, d: usize) -> usize {
    debug_assert_eq!(m.degree(), d);
    let n = m.num_vars();
    let mut idx = 0usize;
    let mut rem = d;
    for j in 0..n.saturating_sub(1) {
        let e = m.exponents[j] as usize;
        // Monomials whose exponent at position j is larger come earlier.
        for larger in (e + 1)..=rem {
            idx += monomial_count(n - j - 1, rem - larger);
        }
        rem -= e;
    }
    idx
}

/// A sparse polynomial: a finite monomial -> coefficient map with no zero
/// coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        assert!(num_vars >= 1, "need at least one variable");
        Polynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut poly = Polynomial::zero(num_vars);
        for (m, c) in terms {
            poly.add_term(m, c);
        }
        poly
    }

    /// Single-term polynomial `c * m`.
    pub fn term(num_vars: usize, m: Monomial, c: GaussianRational) -> Self {
        Self::from_terms(num_vars, [(m, c)])
    }

    /// `x_var^exp` as a polynomial (1-based variable index).
    pub fn var_power(num_vars: usize, var: usize, exp: u32) -> Self {
        Self::term(
            num_vars,
            Monomial::var_power(num_vars, var, exp),
            GaussianRational::one(),
        )
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        assert_eq!(m.num_vars(), self.num_vars, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lex order (reverse to print in the usual order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial (its degree is undefined).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True when all monomials share one degree. The zero polynomial counts
    /// as homogeneous (of undefined degree).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `Some(d)` when the polynomial is nonzero and homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.degree()
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, coeff)| (m.clone(), coeff * c))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = Polynomial::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiply by a single monomial (shifts every exponent vector).
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a point. Panics if the point length differs from
    /// the variable count.
    pub fn evaluate(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.num_vars, "point length mismatch");
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (z, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = &term * &z.pow(e);
                }
            }
            acc += &term;
        }
        acc
    }

    /// Coordinates with respect to the decreasing-lex monomial basis of the
    /// degree-`d` graded piece. The zero polynomial yields the zero vector;
    /// anything not homogeneous of degree `d` is rejected.
    pub fn coordinate_vector(&self, d: usize) -> Result<CoordinateVector, PolyError> {
        let len = monomial_count(self.num_vars, d);
        let mut entries = vec![GaussianRational::zero(); len];
        for (m, c) in &self.terms {
            if m.degree() != d {
                return Err(PolyError::NotHomogeneous { expected: d });
            }
            entries[lex_index(m, d)] = c.clone();
        }
        Ok(CoordinateVector {
            num_vars: self.num_vars,
            degree: d,
            entries,
        })
    }
}

/// Dense coordinates of a homogeneous polynomial in the lex basis of `S_d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoordinateVector {
    num_vars: usize,
    degree: usize,
    entries: Vec<GaussianRational>,
}

impl CoordinateVector {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

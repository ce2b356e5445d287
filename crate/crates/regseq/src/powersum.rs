//! Power sums `p_m(n) = x_1^m + ... + x_n^m` and the fast certificates for
//! them: exponent-set normalization, the factorial divisibility test, the
//! arithmetic-progression certificate, and exact root-of-unity witnesses.
//!
//! Root-of-unity arithmetic is done in `Z[x]/(Phi_m(x))`: a sum of m-th
//! roots of unity vanishes exactly when Phi_m divides the corresponding
//! exponent polynomial, so every check here is an integer computation.

use crate::macaulay::{Method, RegularityReport, Verdict};
use crate::numtheory::{self, cyclotomic, gcd_with_factorial};
use crate::poly::{binomial, Monomial, Polynomial};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

/// Bound on the witness-search space `C(m+n-1, n)`.
pub const DEFAULT_SEARCH_CAP: u64 = 20_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowersumError {
    #[error("exponent set must be nonempty, strictly increasing, and >= 1")]
    InvalidExponentSet,
    #[error("arithmetic progression requires a >= 1, d >= 1, n >= 2")]
    InvalidProgression,
    #[error("requires gcd(a, d) = 1, but gcd({a}, {d}) = {g}")]
    NotCoprime { a: u64, d: u64, g: u64 },
    #[error("search space C({m}+{n}-1, {n}) = {bound} exceeds the cap {cap}")]
    SearchCapExceeded {
        m: u64,
        n: usize,
        bound: BigUint,
        cap: u64,
    },
}

/// A set of power-sum exponents `a_1 < a_2 < ... < a_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentSet {
    exponents: Vec<u64>,
}

impl ExponentSet {
    pub fn new(exponents: Vec<u64>) -> Result<Self, PowersumError> {
        if exponents.is_empty()
            || exponents[0] == 0
            || exponents.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(PowersumError::InvalidExponentSet);
        }
        Ok(ExponentSet { exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn gcd(&self) -> u64 {
        self.exponents
            .iter()
            .copied()
            .fold(0, numtheory::gcd)
    }

    /// The sequence `p_{a_1}(n), ..., p_{a_n}(n)` with `n = |A|`.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let n = self.len();
        self.exponents.iter().map(|&a| power_sum(n, a)).collect()
    }

    /// `Some(spec)` when the set is an arithmetic progression of length >= 2.
    pub fn as_arithmetic_progression(&self) -> Option<APSpec> {
        if self.len() < 2 {
            return None;
        }
        let a = self.exponents[0];
        let d = self.exponents[1] - self.exponents[0];
        let is_ap = self
            .exponents
            .iter()
            .enumerate()
            .all(|(i, &e)| e == a + i as u64 * d);
        if is_ap {
            APSpec::new(a, d, self.len()).ok()
        } else {
            None
        }
    }
}

/// The arithmetic progression `{a, a+d, ..., a+(n-1)d}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct APSpec {
    a: u64,
    d: u64,
    n: usize,
}

impl APSpec {
    pub fn new(a: u64, d: u64, n: usize) -> Result<Self, PowersumError> {
        if a == 0 || d == 0 || n < 2 {
            return Err(PowersumError::InvalidProgression);
        }
        Ok(APSpec { a, d, n })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponent_set(&self) -> ExponentSet {
        ExponentSet::new(
            (0..self.n as u64).map(|i| self.a + i * self.d).collect(),
        )
        .expect("an arithmetic progression is strictly increasing")
    }
}

/// `p_m(n) = x_1^m + x_2^m + ... + x_n^m`.
pub fn power_sum(n: usize, m: u64) -> Polynomial {
    assert!(n >= 1 && m >= 1);
    let exp = u32::try_from(m).expect("power-sum exponent fits u32");
    Polynomial::from_terms(
        n,
        (1..=n).map(|var| {
            (
                Monomial::var_power(n, var, exp),
                crate::poly::GaussianRational::one(),
            )
        }),
    )
}

/// Divide every exponent by the gcd of the set; regularity of the power-sum
/// sequence is unchanged.
pub fn normalize_exponents(set: &ExponentSet) -> ExponentSet {
    let g = set.gcd();
    ExponentSet::new(set.exponents().iter().map(|&a| a / g).collect())
        .expect("dividing by the gcd preserves strict monotonicity")
}

/// The necessary condition: `n!` divides `a_1 a_2 ... a_n`. When this fails
/// the power-sum sequence is certainly not regular.
pub fn necessary_condition(set: &ExponentSet) -> bool {
    let n = set.len() as u64;
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    let product: BigUint = set.exponents().iter().map(|&a| BigUint::from(a)).product();
    (product % factorial).is_zero()
}

/// Both sides of the divisibility equivalence, computed independently:
/// `n! | a(a+d)...(a+(n-1)d)` directly, and `gcd(d, n!) = 1` prime by prime.
/// They are provably equal whenever `gcd(a, d) = 1`.
pub fn lemma_nt_equivalence(a: u64, d: u64, n: usize) -> Result<(bool, bool), PowersumError> {
    let g = numtheory::gcd(a, d);
    if g != 1 {
        return Err(PowersumError::NotCoprime { a, d, g });
    }
    assert!(n >= 2);
    let factorial: BigUint = (1..=n as u64).map(BigUint::from).product();
    let product: BigUint = (0..n as u64)
        .map(|i| BigUint::from(a + i * d))
        .product();
    let divides = (product % factorial).is_zero();
    let coprime = gcd_with_factorial(d, n as u64) == 1;
    Ok((divides, coprime))
}

/// The arithmetic-progression certificate.
///
/// With `gcd(a, d) = 1` the answer is always decided: `gcd(d, n!) = 1` makes
/// the sequence regular, and `gcd(d, n!) > 1` makes the factorial
/// divisibility fail, which rules regularity out. With `gcd(a, d) > 1` the
/// certificate does not apply; normalize the set or fall back to the general
/// rank check.
pub fn ap_certificate(spec: &APSpec) -> RegularityReport {
    let (a, d, n) = (spec.a(), spec.d(), spec.n());
    let g = numtheory::gcd(a, d);
    if g != 1 {
        return RegularityReport {
            verdict: Verdict::NotCertified,
            method: Method::APCertificate,
            critical_degree: None,
            space_dim: None,
            rank: None,
            notes: format!(
                "gcd(a, d) = {g} > 1: hypotheses fail; divide the exponents by {g} \
                 and retry, or run the Macaulay check"
            ),
        };
    }
    if gcd_with_factorial(d, n as u64) == 1 {
        RegularityReport {
            verdict: Verdict::Regular,
            method: Method::APCertificate,
            critical_degree: None,
            space_dim: None,
            rank: None,
            notes: format!(
                "gcd(a, d) = 1 and gcd(d, {n}!) = 1, so {n}! divides the exponent \
                 product: the progression's power sums are a regular sequence"
            ),
        }
    } else {
        RegularityReport {
            verdict: Verdict::NotRegular,
            method: Method::NecessaryConditionFailed,
            critical_degree: None,
            space_dim: None,
            rank: None,
            notes: format!(
                "gcd(d, {n}!) = {} > 1, so {n}! does not divide the exponent \
                 product: the necessary divisibility condition fails",
                gcd_with_factorial(d, n as u64)
            ),
        }
    }
}

/// An element of `Z[x]/(Phi_m(x))`, i.e. an integer combination of powers of
/// a primitive m-th root of unity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicElement {
    index: u64,
    /// Residue coefficients, ascending degree, trimmed; empty means zero.
    residue: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn zero(index: u64) -> Self {
        assert!(index >= 1);
        CyclotomicElement {
            index,
            residue: Vec::new(),
        }
    }

    /// `zeta_m^k`, reduced mod `Phi_m`.
    pub fn root_power(index: u64, k: u64) -> Self {
        assert!(index >= 1);
        let k = (k % index) as usize;
        let phi = cyclotomic(index);
        let (_, rem) = crate::numtheory::intpoly::IntPoly::x_power(k)
            .div_rem_monic(&phi.as_intpoly());
        CyclotomicElement {
            index,
            residue: rem.into_coeffs(),
        }
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn residue(&self) -> &[BigInt] {
        &self.residue
    }

    pub fn add(&self, other: &CyclotomicElement) -> CyclotomicElement {
        assert_eq!(self.index, other.index, "mixed cyclotomic orders");
        let mut residue = vec![BigInt::zero(); self.residue.len().max(other.residue.len())];
        for (i, c) in self.residue.iter().enumerate() {
            residue[i] += c;
        }
        for (i, c) in other.residue.iter().enumerate() {
            residue[i] += c;
        }
        while residue.last().map_or(false, |c| c.is_zero()) {
            residue.pop();
        }
        CyclotomicElement {
            index: self.index,
            residue,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }
}

/// A point `(zeta_m^{e_1}, ..., zeta_m^{e_k})` on the unit torus, used as an
/// exact witness of non-regularity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootOfUnityWitness {
    order: u64,
    exponents: Vec<u64>,
}

impl RootOfUnityWitness {
    /// Exponents are reduced mod the order.
    pub fn new(order: u64, exponents: Vec<u64>) -> Self {
        assert!(order >= 1);
        RootOfUnityWitness {
            order,
            exponents: exponents.into_iter().map(|e| e % order).collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }
}

/// Table of `x^k mod Phi_m` for `k = 0..m`, as dense vectors of length
/// `phi(m)`.
fn residue_table(m: u64) -> Vec<Vec<BigInt>> {
    let phi = cyclotomic(m);
    let deg = phi.degree();
    let mut table = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); deg];
    cur[0] = BigInt::one();
    for _ in 0..m {
        table.push(cur.clone());
        // Multiply by x and reduce: the overflowing coefficient folds back
        // through the lower coefficients of Phi_m (which is monic).
        let top = cur.pop().expect("phi(m) >= 1");
        cur.insert(0, BigInt::zero());
        if !top.is_zero() {
            for (i, c) in phi.coefficients().iter().take(deg).enumerate() {
                cur[i] -= c * &top;
            }
        }
    }
    table
}

fn check_search_cap(n: usize, m: u64, cap: u64) -> Result<(), PowersumError> {
    let bound = binomial(m as usize + n - 1, n);
    if bound > BigUint::from(cap) {
        return Err(PowersumError::SearchCapExceeded { m, n, bound, cap });
    }
    Ok(())
}

/// Enumerate normalized exponent tuples `0 = b_1 <= b_2 <= ... <= b_k < m`
/// in ascending lex order and return the first accepted one.
fn first_accepted_tuple(
    k: usize,
    m: u64,
    accept: &mut dyn FnMut(&[u64]) -> bool,
) -> Option<Vec<u64>> {
    fn rec(
        buf: &mut Vec<u64>,
        k: usize,
        m: u64,
        accept: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        if buf.len() == k {
            return accept(buf);
        }
        let lo = *buf.last().expect("buffer starts with 0");
        for b in lo..m {
            buf.push(b);
            if rec(buf, k, m, accept) {
                return true;
            }
            buf.pop();
        }
        false
    }
    let mut buf = vec![0u64];
    if rec(&mut buf, k, m, accept) {
        Some(buf)
    } else {
        None
    }
}

/// Exhaustive search for a vanishing sum of `n` m-th roots of unity.
///
/// Scans normalized tuples `0 = b_1 <= ... <= b_n < m` in lex order and
/// returns the first whose root-power sum is exactly zero, decided by
/// divisibility by `Phi_m` over the integers. When `gcd(m, n!) = 1` no tuple
/// vanishes and the search returns `None`.
pub fn vanishing_sum_search(
    n: usize,
    m: u64,
) -> Result<Option<RootOfUnityWitness>, PowersumError> {
    vanishing_sum_search_with_cap(n, m, DEFAULT_SEARCH_CAP)
}

pub fn vanishing_sum_search_with_cap(
    n: usize,
    m: u64,
    cap: u64,
) -> Result<Option<RootOfUnityWitness>, PowersumError> {
    assert!(n >= 2 && m >= 2);
    check_search_cap(n, m, cap)?;
    let table = residue_table(m);
    let deg = table[0].len();
    let mut sum = vec![BigInt::zero(); deg];
    let mut accept = |tuple: &[u64]| {
        for c in sum.iter_mut() {
            c.set_zero();
        }
        for &b in tuple {
            for (acc, c) in sum.iter_mut().zip(&table[b as usize]) {
                *acc += c;
            }
        }
        sum.iter().all(|c| c.is_zero())
    };
    Ok(first_accepted_tuple(n, m, &mut accept)
        .map(|tuple| RootOfUnityWitness::new(m, tuple)))
}

/// Check a witness exactly: true when for every `a` in the set, the sum of
/// `zeta_m^{a e_j}` over the witness coordinates is zero in `Z[x]/(Phi_m)`.
///
/// A successful nonzero witness proves the power-sum sequence has a common
/// root besides the origin, hence is not regular.
pub fn verify_witness(set: &ExponentSet, witness: &RootOfUnityWitness) -> bool {
    let m = witness.order();
    let table = residue_table(m);
    let deg = table[0].len();
    set.exponents().iter().all(|&a| {
        let mut sum = vec![BigInt::zero(); deg];
        for &e in witness.exponents() {
            let k = ((a as u128 * e as u128) % m as u128) as usize;
            for (acc, c) in sum.iter_mut().zip(&table[k]) {
                *acc += c;
            }
        }
        sum.iter().all(|c| c.is_zero())
    })
}

/// Search for a root-of-unity witness of order `m` killing every power sum
/// of the set at once. The tuple length is the number of variables, taken
/// equal to `|A|`.
pub fn set_witness_search(
    set: &ExponentSet,
    m: u64,
) -> Result<Option<RootOfUnityWitness>, PowersumError> {
    set_witness_search_with_cap(set, m, DEFAULT_SEARCH_CAP)
}

pub fn set_witness_search_with_cap(
    set: &ExponentSet,
    m: u64,
    cap: u64,
) -> Result<Option<RootOfUnityWitness>, PowersumError> {
    assert!(m >= 2);
    let n = set.len();
    check_search_cap(n, m, cap)?;
    let table = residue_table(m);
    let deg = table[0].len();
    let mut accept = |tuple: &[u64]| {
        set.exponents().iter().all(|&a| {
            let mut sum = vec![BigInt::zero(); deg];
            for &e in tuple {
                let k = ((a as u128 * e as u128) % m as u128) as usize;
                for (acc, c) in sum.iter_mut().zip(&table[k]) {
                    *acc += c;
                }
            }
            sum.iter().all(|c| c.is_zero())
        })
    };
    Ok(first_accepted_tuple(n, m, &mut accept)
        .map(|tuple| RootOfUnityWitness::new(m, tuple)))
}

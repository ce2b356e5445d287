//! Exact integer number theory: factorization, totients, factorial gcds, and
//! cyclotomic polynomials.
//!
//! Everything here works on desk-scale integers (trial division is fine by
//! construction); the point is exactness, not cryptographic range.

pub(crate) mod intpoly;

use intpoly::IntPoly;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

/// Prime factorization as `(prime, exponent)` pairs with primes ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.prime_powers
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factorization back together.
    pub fn value(&self) -> u64 {
        self.prime_powers
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product()
    }
}

/// Trial division up to the square root; `factorize(1)` is the empty product.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut prime_powers = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            prime_powers.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Factorization { prime_powers }
}

/// Euler's totient, via the factorization.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .prime_powers()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product::<u64>()
        .max(1)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exponent of the prime `p` in `n!` (Legendre's formula).
fn factorial_valuation(p: u64, n: u64) -> u32 {
    let mut total = 0u32;
    let mut pk = p;
    loop {
        total += (n / pk) as u32;
        match pk.checked_mul(p) {
            Some(next) if next <= n => pk = next,
            _ => break,
        }
    }
    total
}

/// `gcd(d, n!)` computed prime by prime, never materializing `n!`.
///
/// Equals the product over primes `p <= n` of `p^min(v_p(d), v_p(n!))`; in
/// particular it is 1 exactly when no prime `<= n` divides `d`.
pub fn gcd_with_factorial(d: u64, n: u64) -> u64 {
    assert!(d >= 1 && n >= 1);
    let mut out = 1u64;
    for (p, e) in factorize(d).prime_powers() {
        if *p > n {
            continue;
        }
        let shared = (*e).min(factorial_valuation(*p, n));
        out *= p.pow(shared);
    }
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The m-th cyclotomic polynomial, dense integer coefficients in ascending
/// degree. Its degree is `euler_phi(m)` and it is monic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicPoly {
    index: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicPoly {
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients in ascending degree, length `degree() + 1`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn as_intpoly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Vec<BigInt>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Phi_m, computed by exact division `(x^m - 1) / prod_{e|m, e<m} Phi_e` and
/// memoized across calls (the vanishing-sum search asks for the same indices
/// repeatedly).
pub fn cyclotomic(m: u64) -> CyclotomicPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    if let Some(coeffs) = cyclotomic_cache().read().unwrap().get(&m) {
        return CyclotomicPoly {
            index: m,
            coeffs: coeffs.clone(),
        };
    }
    let coeffs = compute_cyclotomic(m);
    cyclotomic_cache()
        .write()
        .unwrap()
        .entry(m)
        .or_insert_with(|| coeffs.clone());
    CyclotomicPoly { index: m, coeffs }
}

fn compute_cyclotomic(m: u64) -> Vec<BigInt> {
    if m == 1 {
        return vec![-BigInt::one(), BigInt::one()];
    }
    let mut quotient = IntPoly::x_power_minus_one(m as usize);
    for e in divisors(m) {
        if e == m {
            continue;
        }
        quotient = quotient.div_exact_monic(&cyclotomic(e).as_intpoly());
    }
    quotient.into_coeffs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &CyclotomicPoly) -> Vec<i64> {
        p.coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(48).prime_powers(), &[(2, 4), (3, 1)]);
        assert_eq!(factorize(1).prime_powers(), &[]);
        assert_eq!(factorize(35).prime_powers(), &[(5, 1), (7, 1)]);
        assert_eq!(factorize(97).prime_powers(), &[(97, 1)]);
    }

    #[test]
    fn factorization_roundtrip() {
        for n in 1..=600 {
            let f = factorize(n);
            assert_eq!(f.value(), n);
            let ps: Vec<u64> = f.primes().collect();
            let mut sorted = ps.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(ps, sorted, "primes must be strictly increasing");
        }
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(48), 16);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn gcd_with_factorial_examples() {
        assert_eq!(gcd_with_factorial(7, 3), 1);
        assert_eq!(gcd_with_factorial(6, 3), 6);
        assert_eq!(gcd_with_factorial(24, 4), 24);
    }

    #[test]
    fn gcd_with_factorial_matches_prime_criterion() {
        // gcd(d, n!) = 1 exactly when no prime factor of d is <= n.
        for d in 1..=500u64 {
            for n in 1..=8u64 {
                let coprime = gcd_with_factorial(d, n) == 1;
                let no_small_prime = factorize(d).primes().all(|p| p > n);
                assert_eq!(coprime, no_small_prime, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn gcd_with_factorial_matches_direct_product() {
        // Against the literal gcd(d, n!) for sizes where n! fits.
        for d in 1..=200u64 {
            for n in 1..=12u64 {
                let fact: u64 = (1..=n).product();
                assert_eq!(gcd_with_factorial(d, n), gcd(d, fact), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn cyclotomic_known_values() {
        assert_eq!(coeffs(&cyclotomic(1)), vec![-1, 1]);
        assert_eq!(coeffs(&cyclotomic(2)), vec![1, 1]);
        assert_eq!(coeffs(&cyclotomic(4)), vec![1, 0, 1]);
        assert_eq!(coeffs(&cyclotomic(6)), vec![1, -1, 1]);
        assert_eq!(
            coeffs(&cyclotomic(48)),
            vec![1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1]
        );
    }

    #[test]
    fn cyclotomic_product_and_degree_up_to_200() {
        for m in 1..=200u64 {
            let phi = cyclotomic(m);
            assert_eq!(phi.degree() as u64, euler_phi(m), "degree of Phi_{m}");
            assert!(phi.coefficients().last().unwrap().is_one());
            let mut prod = IntPoly::one();
            for e in divisors(m) {
                prod = prod.mul(&cyclotomic(e).as_intpoly());
            }
            assert_eq!(
                prod,
                IntPoly::x_power_minus_one(m as usize),
                "divisor product for m={m}"
            );
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}

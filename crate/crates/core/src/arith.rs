//! Exact integer combinatorics on arbitrary-precision values.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Multinomial coefficient n! / (parts_1! ... parts_k!) where n = sum(parts).
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &part in parts {
        total += part;
        acc *= binomial(total, part);
    }
    acc
}

/// Number of multisets of size k drawn from n kinds: C(n + k - 1, k).
pub fn multiset_coefficient(n: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n == 0 {
        return BigUint::zero();
    }
    binomial(n + k - 1, k)
}

/// The p-adic valuation of a (largest b with p^b dividing a).
pub fn nu_p(a: u64, p: u64) -> u32 {
    assert!(a >= 1, "valuation needs a >= 1");
    assert!(p >= 2);
    let mut a = a;
    let mut count = 0;
    while a % p == 0 {
        a /= p;
        count += 1;
    }
    count
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

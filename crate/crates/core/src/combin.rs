//! Exact integer combinatorics: arrangements, binomials, Gaussian binomials.

/// Number of ordered arrangements of r objects out of n: n!/(n−r)!, or 0
/// when r > n.
pub fn perm_count(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let mut out = 1u128;
    for i in 0..r {
        out *= (n - i) as u128;
    }
    out
}

pub fn factorial(n: u64) -> u128 {
    perm_count(n, n)
}

pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut out = 1u128;
    for i in 0..r {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Gaussian binomial [k choose r]_q: the number of r-dimensional subspaces
/// of a k-dimensional space over F_q. Exact, with stepwise gcd reduction to
/// keep intermediates in range.
pub fn gaussian_binomial(k: u64, r: u64, q: u64) -> u128 {
    if r > k {
        return 0;
    }
    let r = r.min(k - r);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..r {
        num *= pow_u128(q, k - i) - 1;
        den *= pow_u128(q, i + 1) - 1;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    num
}

pub fn pow_u128(base: u64, exp: u64) -> u128 {
    let mut out = 1u128;
    for _ in 0..exp {
        out *= base as u128;
    }
    out
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

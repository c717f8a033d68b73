//! Trial-division helpers. Group orders stay below a few thousand, so
//! nothing cleverer is needed.

use std::collections::BTreeSet;

use num_integer::Integer;

pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n` in increasing order. Empty for `n <= 1`.
pub fn prime_divisors(mut n: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.insert(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

pub fn smallest_prime_divisor(n: usize) -> Option<usize> {
    prime_divisors(n).into_iter().next()
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `Some(p)` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base(n: usize) -> Option<usize> {
    let ps = prime_divisors(n);
    if ps.len() == 1 {
        ps.into_iter().next()
    } else {
        None
    }
}

pub fn is_power_of(n: usize, p: usize) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}

//! Positive divisors of arbitrary-precision integers.
//!
//! Trial division strips small primes; whatever survives is split with
//! Pollard–Brent and certified prime with Miller–Rabin.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 10_000;
const WITNESSES: [u32; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// All positive divisors of `n`, ascending. `n` must be nonzero.
pub(crate) fn divisors(n: &BigUint) -> Vec<BigUint> {
    debug_assert!(!n.is_zero());
    let mut out = vec![BigUint::one()];
    for (p, e) in factor(n.clone()) {
        let base = out.clone();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= &p;
            out.extend(base.iter().map(|d| d * &pk));
        }
    }
    out.sort();
    out
}

fn factor(mut n: BigUint) -> Vec<(BigUint, u32)> {
    let mut primes: Vec<BigUint> = Vec::new();
    let mut d = 2u32;
    while d <= TRIAL_LIMIT && !n.is_one() {
        let bd = BigUint::from(d);
        while (&n % &bd).is_zero() {
            n /= &bd;
            primes.push(bd.clone());
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            primes.push(m);
            continue;
        }
        let f = pollard_brent(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    primes.sort();
    let mut grouped: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match grouped.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => grouped.push((p, 1)),
        }
    }
    grouped
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if let Some(small) = n.to_u32() {
        if WITNESSES.contains(&small) {
            return true;
        }
    }
    if n.is_even() {
        return false;
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut g = BigUint::one();
        while g.is_one() {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            g = diff.gcd(n);
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divs(n: u64) -> Vec<u64> {
        divisors(&BigUint::from(n)).iter().map(|d| d.to_u64().unwrap()).collect()
    }

    fn brute(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn small_values_match_brute_force() {
        for n in 1..=500 {
            assert_eq!(divs(n), brute(n), "n = {n}");
        }
    }

    #[test]
    fn large_semiprime() {
        // 1000003 * 1000033, both prime, beyond the trial-division limit
        let n = 1_000_003u64 * 1_000_033;
        assert_eq!(divs(n), [1, 1_000_003, 1_000_033, n]);
        assert_eq!(divs(1_000_000_000_000_000_000).len(), 19 * 19);
    }
}

//! Primality testing and factorization of integers up to the factorization bound.
//!
//! Trial division by the primes below 10^6 strips small factors. Whatever is
//! left is split with Brent's variant of Pollard's rho and each piece is
//! certified with Miller-Rabin. For n below 3.3e24 the first thirteen prime
//! bases are a proven deterministic set; above that a strong Lucas test is
//! added (Baillie-PSW).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};

/// Trial division runs over all primes below this limit.
pub const TRIAL_LIMIT: u64 = 1_000_000;

/// Largest n for which the first 13 prime bases make Miller-Rabin deterministic.
const PSI_13: u128 = 3_317_044_064_679_887_385_961_981;

const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(TRIAL_LIMIT))
}

fn sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

#[inline]
fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= n - b {
        a - (n - b)
    } else {
        a + b
    }
}

#[inline]
fn sub_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

/// `a * b mod n` for reduced operands `a, b < n`.
pub(crate) fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    debug_assert!(a < n && b < n);
    if n >> 64 == 0 {
        return (a * b) % n;
    }
    if n >> 96 == 0 {
        // Horner over 32-bit limbs of b; every intermediate stays below 2^128.
        const MASK: u128 = (1 << 32) - 1;
        let mut r = 0u128;
        for shift in [64u32, 32, 0] {
            r = (r << 32) % n;
            let t = (a * ((b >> shift) & MASK)) % n;
            r = add_mod(r, t, n);
        }
        return r;
    }
    let prod = BigUint::from(a) * BigUint::from(b) % BigUint::from(n);
    u128::try_from(prod).expect("residue below a u128 modulus")
}

pub(crate) fn pow_mod_u128(mut base: u128, mut exp: u128, n: u128) -> u128 {
    if n == 1 {
        return 0;
    }
    base %= n;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

fn miller_rabin(n: u128, base: u128) -> bool {
    let a = base % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = pow_mod_u128(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn jacobi(mut a: u128, mut n: u128) -> i32 {
    debug_assert!(n & 1 == 1);
    a %= n;
    let mut t = 1;
    while a != 0 {
        while a & 1 == 0 {
            a >>= 1;
            let r = n & 7;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a & 3 == 3 && n & 3 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
fn strong_lucas(n: u128) -> bool {
    let root = n.sqrt();
    if root * root == n {
        return false;
    }
    let mut d_abs: u128 = 5;
    let mut negative = false;
    let d_mod = loop {
        let dm = if negative { n - d_abs % n } else { d_abs % n };
        match jacobi(dm, n) {
            -1 => break dm,
            0 if !d_abs.is_multiple_of(n) => return false,
            _ => {}
        }
        d_abs += 2;
        negative = !negative;
    };
    // Q = (1 - D) / 4
    let q_mod = if negative {
        ((1 + d_abs) / 4) % n
    } else {
        n - ((d_abs - 1) / 4) % n
    } % n;

    let half = |x: u128| -> u128 {
        if x & 1 == 0 {
            x >> 1
        } else {
            (x >> 1) + (n >> 1) + 1
        }
    };

    let s = (n + 1).trailing_zeros();
    let k = (n + 1) >> s;
    let (mut u, mut v, mut qk) = (0u128, 2u128 % n, 1u128 % n);
    for bit in (0..128 - k.leading_zeros()).rev() {
        u = mul_mod(u, v, n);
        v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if (k >> bit) & 1 == 1 {
            let nu = half(add_mod(u, v, n));
            let nv = half(add_mod(mul_mod(d_mod, u, n), v, n));
            u = nu;
            v = nv;
            qk = mul_mod(qk, q_mod, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// Deterministic primality test on `u128`.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &small_primes()[..25] {
        let p = p as u128;
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // No factor below 100.
    if n < 10_000 {
        return true;
    }
    if !MR_BASES.iter().all(|&a| miller_rabin(n, a)) {
        return false;
    }
    n < PSI_13 || strong_lucas(n)
}

fn abs_diff(a: u128, b: u128) -> u128 {
    a.abs_diff(b)
}

/// One Brent cycle search with `x -> x^2 + c`; `None` when the run degenerates.
fn brent(n: u128, c: u128) -> Option<u128> {
    const BATCH: u64 = 128;
    let f = |x: u128| add_mod(mul_mod(x, x, n), c % n, n);
    let mut y = 2 % n;
    let mut x = y;
    let mut ys = y;
    let mut q = 1u128;
    let mut g = 1u128;
    let mut r: u64 = 1;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, abs_diff(x, y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = abs_diff(x, ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// A nontrivial divisor of the odd composite `n`.
fn rho_split(n: u128) -> u128 {
    (1u128..)
        .find_map(|c| brent(n, c))
        .expect("rho finds a divisor for some increment")
}

fn split_into(n: u128, out: &mut BTreeMap<u128, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = rho_split(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Full factorization of `n >= 1` as `(prime, exponent)` pairs, primes ascending.
pub fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    assert!(n >= 1, "factor of zero");
    let mut out: BTreeMap<u128, u32> = BTreeMap::new();
    for &p in small_primes() {
        let p = p as u128;
        if p * p > n {
            break;
        }
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.insert(p, e);
        }
    }
    let limit = TRIAL_LIMIT as u128;
    if n > 1 && n < limit * limit {
        *out.entry(n).or_insert(0) += 1;
    } else {
        split_into(n, &mut out);
    }
    out.into_iter().collect()
}

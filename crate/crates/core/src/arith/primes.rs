//! Prime enumeration, factorization of small integers and primitive roots.

use super::modulus::Modulus;

/// A congruence condition `n = residue (mod modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    pub residue: u64,
    pub modulus: u64,
}

impl Congruence {
    pub const fn new(residue: u64, modulus: u64) -> Self {
        Congruence { residue, modulus }
    }

    #[inline]
    pub fn matches(&self, n: u64) -> bool {
        n % self.modulus == self.residue % self.modulus
    }
}

/// Deterministic Miller-Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for q in SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes up to `limit` inclusive by a plain sieve of Eratosthenes.
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

const SEGMENT: u64 = 1 << 18;

/// All primes in `[lo, hi]` satisfying `filter`, in ascending order.
///
/// Uses a segmented sieve so memory stays bounded by the segment size plus the
/// base primes up to `sqrt(hi)`. A `lo` below 2 is treated as 2.
pub fn primes_in_range(lo: u64, hi: u64, filter: Option<Congruence>) -> Vec<u64> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let base = small_primes(hi.isqrt());
    let mut out = Vec::new();
    let mut start = lo;
    loop {
        let end = hi.min(start.saturating_add(SEGMENT - 1));
        let mut composite = vec![false; (end - start + 1) as usize];
        for &q in &base {
            if q * q > end {
                break;
            }
            let mut j = (q * q).max(start.div_ceil(q) * q);
            while j <= end {
                composite[(j - start) as usize] = true;
                j += q;
            }
        }
        out.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| start + i as u64)
                .filter(|&n| filter.is_none_or(|f| f.matches(n))),
        );
        if end == hi {
            break;
        }
        start = end + 1;
    }
    out
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// ascending order.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= n {
        if n % q == 0 {
            let mut e = 0;
            while n % q == 0 {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .fold(n, |acc, (q, _)| acc / q * (q - 1))
}

pub fn mobius(n: u64) -> i8 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ascending divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Tests whether `g` has multiplicative order `p - 1`, given the distinct prime
/// factors of `p - 1`.
pub fn is_primitive_root_with(g: u64, p: u64, prime_factors: &[u64]) -> bool {
    let m = Modulus::new(p);
    let g = g % p;
    g != 0 && prime_factors.iter().all(|&q| m.pow(g, (p - 1) / q) != 1)
}

pub fn is_primitive_root(g: u64, p: u64) -> bool {
    let qs: Vec<u64> = factor(p - 1).into_iter().map(|(q, _)| q).collect();
    is_primitive_root_with(g, p, &qs)
}

pub fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs: Vec<u64> = factor(p - 1).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .find(|&g| is_primitive_root_with(g, p, &qs))
        .expect("every prime has a primitive root")
}

/// All primitive roots in `(0, p)`, ascending. There are `phi(p - 1)` of them.
///
/// The smallest root `g0` is found by testing `g0^((p-1)/q) != 1` for each
/// prime `q | p - 1`; the rest are `g0^k` for `gcd(k, p - 1) = 1`.
pub fn primitive_roots(p: u64) -> Vec<u64> {
    if p == 2 {
        return vec![1];
    }
    let m = Modulus::new(p);
    let qs: Vec<u64> = factor(p - 1).into_iter().map(|(q, _)| q).collect();
    let g0 = (2..p)
        .find(|&g| is_primitive_root_with(g, p, &qs))
        .expect("every prime has a primitive root");
    let mut roots = Vec::with_capacity(euler_phi(p - 1) as usize);
    let mut x = 1u64;
    for k in 0..p - 1 {
        if qs.iter().all(|&q| k % q != 0) {
            roots.push(x);
        }
        x = m.mul(x, g0);
    }
    roots.sort_unstable();
    roots
}

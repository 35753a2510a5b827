//! Brute-force references written from the definitions. Nothing here calls
//! into `biquad_core`, so every comparison against the library is a second,
//! independent route. All moduli stay below 2^32, so plain `u64` products
//! never overflow.
#![allow(dead_code)]

use std::collections::HashMap;

pub fn pow_mod(base: u64, mut e: u64, p: u64) -> u64 {
    let mut b = base % p;
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// `(-1)^e` as a residue mod `p`.
pub fn sign_mod(e: i64, p: u64) -> u64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        p - 1
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in `[lo, hi)` congruent to `r` mod `q`.
pub fn primes(lo: u64, hi: u64, q: u64, r: u64) -> Vec<u64> {
    (lo..hi).filter(|&n| n % q == r && is_prime(n)).collect()
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn primitive_roots(p: u64) -> Vec<u64> {
    if p == 2 {
        return vec![1];
    }
    let qs = prime_factors(p - 1);
    (1..p)
        .filter(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .collect()
}

pub fn totient(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &q| acc / q * (q - 1))
}

/// `p = a^2 + 4b^2` with `a = 3 mod 4`, `b > 0`, by search.
pub fn two_squares(p: u64) -> (i64, i64) {
    let mut b = 1i64;
    loop {
        let r = p as i64 - 4 * b * b;
        assert!(r > 0, "no decomposition for {p}");
        let s = (r as f64).sqrt().round() as i64;
        if let Some(s) = [s - 1, s, s + 1].into_iter().find(|s| s * s == r) {
            let a = if s % 4 == 3 { s } else { -s };
            return (a, b);
        }
        b += 1;
    }
}

pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Character tables built by marking squares and fourth powers.
pub struct Field {
    pub p: u64,
    pub a: i64,
    pub b: i64,
    /// Legendre symbol.
    pub leg: Vec<i64>,
    /// `1` on fourth powers, `-1` on squares that are not fourth powers,
    /// `0` elsewhere.
    pub chi4: Vec<i64>,
    pub two_b_over_a: u64,
}

impl Field {
    pub fn new(p: u64) -> Field {
        let mut leg = vec![-1i64; p as usize];
        let mut chi4 = vec![0i64; p as usize];
        leg[0] = 0;
        for x in 1..p {
            let s = x * x % p;
            leg[s as usize] = 1;
            chi4[s as usize] = -1;
        }
        for x in 1..p {
            let s = x * x % p;
            chi4[(s * s % p) as usize] = 1;
        }
        let (a, b) = two_squares(p);
        let two_b_over_a = 2 * b as u64 % p * inv_mod(reduce(a, p), p) % p;
        Field {
            p,
            a,
            b,
            leg,
            chi4,
            two_b_over_a,
        }
    }

    /// `(phi_k(m), psi_k(m))` by summation.
    pub fn jacobsthal(&self, m: u64, k: u64) -> (i64, i64) {
        let p = self.p;
        let (mut phi, mut psi) = (0, 0);
        for x in 1..p {
            let l = self.leg[((pow_mod(x, k, p) + m) % p) as usize];
            psi += l;
            phi += self.leg[x as usize] * l;
        }
        (phi, psi)
    }

    /// `phi_2(m)` from `m^((p-1)/4)`.
    pub fn phi2_closed(&self, m: u64) -> i64 {
        let v = pow_mod(m, (self.p - 1) / 4, self.p);
        if v == 1 {
            2 * self.a
        } else if v == self.p - 1 {
            -2 * self.a
        } else if v == self.two_b_over_a {
            4 * self.b
        } else {
            -4 * self.b
        }
    }

    /// Quadratic residues in `(0, p/2)`.
    pub fn half_residues(&self) -> Vec<u64> {
        (1..=self.p / 2).filter(|&x| self.leg[x as usize] == 1).collect()
    }

    pub fn half_squares(&self) -> Vec<u64> {
        self.half_residues().iter().map(|&x| x * x % self.p).collect()
    }

    /// Histogram of `y^2 - x^2` over pairs `x < y` of half residues.
    pub fn n_histogram(&self) -> Vec<i64> {
        let p = self.p;
        let sq = self.half_squares();
        let mut h = vec![0i64; p as usize];
        for j in 0..sq.len() {
            for i in 0..j {
                h[((sq[j] + p - sq[i]) % p) as usize] += 1;
            }
        }
        h
    }

    /// `N_p(t) + N_p(-t)` from the four-case formula.
    pub fn n_sum_closed(&self, t: u64) -> i64 {
        let p = self.p as i64;
        let phi2 = self.phi2_closed(t);
        let num = if self.leg[t as usize] == -1 {
            p - 3 - 2 * self.a + 2 * phi2
        } else {
            p - 7 + 2 * self.a + 2 * phi2 - 4 * self.chi4[t as usize]
        };
        assert_eq!(num % 16, 0, "p = {p}, t = {t}");
        num / 16
    }

    /// `d_p` by counting pairs.
    pub fn d_count(&self) -> u64 {
        let p = self.p;
        let sq = self.half_squares();
        let mut d = 0;
        for j in 0..sq.len() {
            for i in 0..j {
                if (sq[j] + p - sq[i]) % p > p / 2 {
                    d += 1;
                }
            }
        }
        d
    }

    /// Ordered pairs of fourth powers in `(0, p/2)` with `x + y < p/2`.
    pub fn epsilon(&self) -> u64 {
        let q: Vec<u64> = (1..=self.p / 2).filter(|&x| self.chi4[x as usize] == 1).collect();
        let mut e = 0;
        for &x in &q {
            for &y in &q {
                if 2 * (x + y) < self.p {
                    e += 1;
                }
            }
        }
        e
    }

    /// `x` in `(0, p/2)` with `x^((p-1)/4)` equal to `1`, `-1`, `2b/a`.
    pub fn omega(&self) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let p = self.p;
        let (mut one, mut minus, mut i) = (vec![], vec![], vec![]);
        for x in 1..=p / 2 {
            let v = pow_mod(x, (p - 1) / 4, p);
            if v == 1 {
                one.push(x);
            } else if v == p - 1 {
                minus.push(x);
            } else if v == self.two_b_over_a {
                i.push(x);
            }
        }
        (one, minus, i)
    }

    /// `W_p` from its closed form, computing `lambda`, `A_p`, `B_p` here.
    pub fn w_closed(&self) -> u64 {
        let p = self.p;
        let (one, minus, _) = self.omega();
        let a_p = product(&one, p);
        let b_p = product(&minus, p);
        let lambda = (self.d_count() % 2) as i64;
        let chi4_two = self.chi4[2];
        let shift = if p % 16 == 9 { -3 } else { 29 };
        let (eight_b, base) = if chi4_two == 1 {
            (8 * self.b, a_p)
        } else {
            (-8 * self.b, self.two_b_over_a * b_p % p)
        };
        let num = p as i64 + shift - 2 * self.a + eight_b;
        assert_eq!(num % 32, 0, "p = {p}");
        sign_mod(lambda + num / 32, p) * base % p
    }

    /// `prod_{i<j} (a_j^2 - a_i^2)`.
    pub fn w_direct(&self) -> u64 {
        vandermonde(&self.half_squares(), self.p)
    }

    /// Fourth powers in `(0, p)`, ascending.
    pub fn fourth_powers(&self) -> Vec<u64> {
        (1..self.p).filter(|&x| self.chi4[x as usize] == 1).collect()
    }

    /// `sgn(tau_p(g))` as `V(g^4, ..., g^(4n)) / W_p`, the Vandermonde
    /// product being alternating.
    pub fn tau_sign(&self, w_inv: u64, g: u64) -> i64 {
        let p = self.p;
        let n = (p - 1) / 4;
        let v = geometric_vandermonde(pow_mod(g, 4, p), n, p) * w_inv % p;
        as_sign(v, p)
    }

    /// `sgn(rho_p)` by counting cycles.
    pub fn rho_sign(&self) -> i64 {
        perm_sign_cycles(&self.half_squares(), &self.fourth_powers())
    }

    /// `A_m` statistics: size, `sum chi_4(x(x+m))`, `#{chi_4(x) = 1}`.
    pub fn a_m(&self, m: u64) -> (i64, i64, i64) {
        let p = self.p;
        let (mut size, mut sum, mut count) = (0, 0, 0);
        for x in 1..p {
            let y = (x + m) % p;
            if self.leg[x as usize] == 1 && self.leg[y as usize] == 1 {
                size += 1;
                sum += self.chi4[(x * y % p) as usize];
                if self.chi4[x as usize] == 1 {
                    count += 1;
                }
            }
        }
        (size, sum, count)
    }

    /// Closed forms for the `A_m` statistics.
    pub fn a_m_closed(&self, m: u64) -> (i64, i64, i64) {
        let (p, a, b) = (self.p as i64, self.a, self.b);
        let l = self.leg[m as usize];
        let v = pow_mod(m, (self.p - 1) / 4, self.p);
        let count = if v == 1 {
            (p - 7 + 2 * a) / 8
        } else if v == self.p - 1 {
            (p - 3 - 2 * a) / 8
        } else if v == self.two_b_over_a {
            (p - 1 + 4 * b) / 8
        } else {
            (p - 1 - 4 * b) / 8
        };
        ((p - 3 - 2 * l) / 4, (-1 + a * l) / 2, count)
    }

    /// `L_m` statistics: `[#L_m, r++, r--, r+-, r-+, #{chi_4(x)=1}, sum]`.
    pub fn l_m(&self, m: u64) -> [i64; 7] {
        let p = self.p;
        let mut s = [0i64; 7];
        for x in 1..p - m {
            let y = x + m;
            if self.leg[x as usize] != 1 || self.leg[y as usize] != 1 {
                continue;
            }
            let (cx, cy) = (self.chi4[x as usize], self.chi4[y as usize]);
            s[0] += 1;
            match (cx, cy) {
                (1, 1) => s[1] += 1,
                (-1, -1) => s[2] += 1,
                (1, -1) => s[3] += 1,
                _ => s[4] += 1,
            }
            if cx == 1 {
                s[5] += 1;
            }
            s[6] += self.chi4[(x * y % p) as usize];
        }
        s
    }
}

pub fn product(v: &[u64], p: u64) -> u64 {
    v.iter().fold(1, |acc, &x| acc * x % p)
}

pub fn vandermonde(v: &[u64], p: u64) -> u64 {
    let mut acc = 1;
    for j in 0..v.len() {
        for i in 0..j {
            acc = acc * ((v[j] + p - v[i]) % p) % p;
        }
    }
    acc
}

/// `prod_{1<=i<j<=n} (h^j - h^i)` as
/// `h^(sum_i i(n-i)) * prod_{k=1}^{n-1} prod_{d=1}^{k} (h^d - 1)`.
pub fn geometric_vandermonde(h: u64, n: u64, p: u64) -> u64 {
    let e: u64 = (1..=n).map(|i| i * (n - i) % (p - 1)).sum::<u64>() % (p - 1);
    let mut acc = pow_mod(h, e, p);
    let (mut hd, mut prefix) = (1u64, 1u64);
    for _ in 1..n {
        hd = hd * h % p;
        prefix = prefix * ((hd + p - 1) % p) % p;
        acc = acc * prefix % p;
    }
    acc
}

pub fn as_sign(v: u64, p: u64) -> i64 {
    match v {
        1 => 1,
        _ if v == p - 1 => -1,
        _ => panic!("{v} is not a sign mod {p}"),
    }
}

/// Sign of the permutation taking `src` to `dst`, as `(-1)^(n - cycles)`.
pub fn perm_sign_cycles(src: &[u64], dst: &[u64]) -> i64 {
    assert_eq!(src.len(), dst.len());
    let at: HashMap<u64, usize> = src.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let idx: Vec<usize> = dst.iter().map(|v| at[v]).collect();
    let mut seen = vec![false; idx.len()];
    let mut cycles = 0;
    for s in 0..idx.len() {
        if !seen[s] {
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = idx[i];
            }
        }
    }
    if (idx.len() - cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Phi_n` over the integers by dividing `x^n - 1` by `Phi_d` for proper
/// divisors `d`. Coefficients low to high.
pub fn cyclotomic(n: u64, memo: &mut HashMap<u64, Vec<i128>>) -> Vec<i128> {
    if let Some(c) = memo.get(&n) {
        return c.clone();
    }
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let den = cyclotomic(d, memo);
        num = divide_monic(&num, &den);
    }
    memo.insert(n, num.clone());
    num
}

fn divide_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut q = vec![0i128; num.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let c = rem[k + dl - 1];
        q[k] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    q
}

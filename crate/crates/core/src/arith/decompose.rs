use super::modulus::Modulus;
use super::primes::is_prime;
use crate::error::{Error, Result};

fn check_prime_one_mod_four(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::NotOneModFour(p));
    }
    Ok(())
}

/// Chooses the sign of the odd part so that `a = 3 (mod 4)`.
fn normalize(odd: u64, even: u64) -> (i64, u64) {
    let a = odd as i64;
    let a = if a.rem_euclid(4) == 3 { a } else { -a };
    (a, even / 2)
}

/// The unique `(a, b)` with `p = a^2 + 4 b^2`, `a = -1 (mod 4)`, `b > 0`.
///
/// Exhaustive search over `b <= sqrt(p) / 2`.
pub fn decompose(p: u64) -> Result<(i64, u64)> {
    check_prime_one_mod_four(p)?;
    let mut b = 1u64;
    while 4 * b * b < p {
        let rest = p - 4 * b * b;
        let odd = rest.isqrt();
        if odd * odd == rest {
            return Ok(normalize(odd, 2 * b));
        }
        b += 1;
    }
    unreachable!("a prime p = 1 mod 4 is a sum of two squares")
}

/// Same result as [`decompose`] via a square root of -1 and the Euclidean
/// descent (Cornacchia / Hermite-Serret).
pub fn decompose_cornacchia(p: u64) -> Result<(i64, u64)> {
    check_prime_one_mod_four(p)?;
    let m = Modulus::new(p);
    let non_residue = (2..p)
        .find(|&c| m.pow(c, (p - 1) / 2) == p - 1)
        .expect("a non-residue exists");
    let mut r = m.pow(non_residue, (p - 1) / 4);
    if r > p / 2 {
        r = p - r;
    }
    let (mut x, mut y) = (p, r);
    while (y as u128) * (y as u128) > p as u128 {
        (x, y) = (y, x % y);
    }
    let other = (p - y * y).isqrt();
    debug_assert_eq!(y * y + other * other, p);
    if y % 2 == 1 {
        Ok(normalize(y, other))
    } else {
        Ok(normalize(other, y))
    }
}

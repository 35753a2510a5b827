use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::arith::Modulus;
use crate::error::{Error, Result};

/// A permutation sign. Serializes as the integer `1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `(-1)^e`.
    pub fn from_exponent(e: i64) -> Self {
        Self::from_parity(e.rem_euclid(2) == 1)
    }

    /// `Some` when `value` is `1` or `-1` modulo `m`.
    pub fn from_residue(value: u64, m: Modulus) -> Option<Self> {
        match m.as_sign(value)? {
            1 => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_odd() != rhs.is_odd())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        Sign::from_parity(!self.is_odd())
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.value() as i64
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("{v} is not a sign")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Number of pairs `i < j` with `seq[i] > seq[j]`, by merge sort. Sorts
/// `seq` in place; `scratch` is resized as needed.
pub fn count_inversions(seq: &mut [u32], scratch: &mut Vec<u32>) -> u64 {
    scratch.clear();
    scratch.resize(seq.len(), 0);
    sort_count(seq, scratch)
}

fn sort_count(seq: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (left, right) = seq.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        sort_count(left, bl) + sort_count(right, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            buf[k] = seq[i];
            i += 1;
        } else {
            buf[k] = seq[j];
            // everything left in seq[i..mid] exceeds seq[j]
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&seq[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&seq[j..n]);
    seq.copy_from_slice(&buf[..n]);
    count
}

/// Sign of the permutation taking position `i` of `src` to the position of
/// `src[i]` in `dst`.
pub fn perm_sign(src: &[u64], dst: &[u64]) -> Result<Sign> {
    if src.len() != dst.len() {
        return Err(Error::NotAPermutation(format!(
            "lengths {} and {}",
            src.len(),
            dst.len()
        )));
    }
    if src.len() > u32::MAX as usize {
        return Err(Error::InvalidArgument("sequence too long".into()));
    }
    let mut pos = HashMap::with_capacity(dst.len());
    for (i, &v) in dst.iter().enumerate() {
        if pos.insert(v, i as u32).is_some() {
            return Err(Error::NotAPermutation(format!("{v} repeats in target")));
        }
    }
    let mut seen = vec![false; src.len()];
    let mut idx = Vec::with_capacity(src.len());
    for &v in src {
        let j = *pos
            .get(&v)
            .ok_or_else(|| Error::NotAPermutation(format!("{v} missing from target")))?;
        if std::mem::replace(&mut seen[j as usize], true) {
            return Err(Error::NotAPermutation(format!("{v} repeats in source")));
        }
        idx.push(j);
    }
    let inversions = count_inversions(&mut idx, &mut Vec::new());
    Ok(Sign::from_parity(inversions % 2 == 1))
}

//! The two-generator numerical semigroup `S_{p,q} = { ap + bq : a, b >= 0 }`
//! attached to the torus knot `T_{p,q}`.

use crate::error::{Error, Result};
use crate::exactmath::gcd;

/// `S_{p,q}` together with a membership table up to its Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusKnotSemigroup {
    p: i64,
    q: i64,
    /// `member[s]` for `0 <= s <= pq - p - q`.
    member: Vec<bool>,
}

impl TorusKnotSemigroup {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidArgs(format!(
                "need p, q >= 2, got ({p}, {q})"
            )));
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime(format!("({p}, {q})")));
        }
        let frob = p.checked_mul(q).ok_or(Error::Overflow("pq"))? - p - q;
        let member = (0..=frob).map(|s| below_pq_member(p, q, s)).collect();
        Ok(Self { p, q, member })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Largest integer outside the semigroup, `pq - p - q = 2g - 1`.
    pub fn frobenius(&self) -> i64 {
        self.member.len() as i64 - 1
    }

    pub fn contains(&self, s: i64) -> bool {
        match usize::try_from(s) {
            Ok(i) => self.member.get(i).copied().unwrap_or(true),
            Err(_) => false,
        }
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(s, _)| s as i64)
            .collect()
    }

    /// `(p - 1)(q - 1) / 2`, the genus of the torus knot.
    pub fn genus(&self) -> i64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    /// Number of gaps strictly greater than `i`.
    pub fn alpha(&self, i: i64) -> i64 {
        let start = (i + 1).max(0) as usize;
        self.member.iter().skip(start).filter(|&&m| !m).count() as i64
    }

    /// Count of semigroup elements `s` with `0 <= s <= bound`.
    pub fn count_members_upto(&self, bound: i64) -> i64 {
        if bound < 0 {
            return 0;
        }
        let within = self
            .member
            .iter()
            .take(bound as usize + 1)
            .filter(|&&m| m)
            .count() as i64;
        let beyond = (bound - self.frobenius()).max(0);
        within + beyond
    }

    /// Count of gaps `s` with `s >= bound`.
    pub fn count_gaps_from(&self, bound: i64) -> i64 {
        self.alpha(bound - 1)
    }
}

/// For `0 <= s < pq`: `s` is in the semigroup iff `s = ap + bq` with
/// `0 <= a < q` and `0 <= b < p`.
fn below_pq_member(p: i64, q: i64, s: i64) -> bool {
    (0..p).any(|b| {
        let rest = s - b * q;
        rest >= 0 && rest % p == 0 && rest / p < q
    })
}

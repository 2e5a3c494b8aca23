//! Checks the predicted `d(-Sigma(2, p, 2pn -+ k))` for odd `p`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::gcd;
use crate::gradedroot::compute_hf;
use crate::seifert::brieskorn_seifert;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub p: i64,
    pub k: i64,
    pub n: i64,
    /// `-1` for `2pn - k`, `+1` for `2pn + k`.
    pub sign: i64,
    pub triple: [i64; 3],
    pub d: i64,
    pub conjectured: i64,
    pub agree: bool,
}

/// Predicted `d(-Sigma(2, p, 2pn + sign k))`: `0` on the minus side when
/// `p = 1 mod 4`, `-2` when `p = 3 mod 4`, and the other way round for plus.
pub fn conjectured_d(p: i64, sign: i64) -> i64 {
    let one_mod_four = p.rem_euclid(4) == 1;
    if (sign < 0) == one_mod_four {
        0
    } else {
        -2
    }
}

pub fn conjecture_check(
    p: i64,
    k: i64,
    ns: impl IntoIterator<Item = i64>,
) -> Result<Vec<ConjectureRow>> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidArgs(format!(
            "p must be odd and >= 3, got {p}"
        )));
    }
    if gcd(k, 2 * p) != 1 {
        return Err(Error::InvalidArgs(format!("gcd({k}, {}) != 1", 2 * p)));
    }
    let r = k.rem_euclid(2 * p);
    if r == 1 || r == 2 * p - 1 {
        return Err(Error::InvalidArgs(format!("{k} = +-1 mod {}", 2 * p)));
    }
    let mut cases = Vec::new();
    for n in ns {
        if n < 1 {
            return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
        }
        for sign in [-1, 1] {
            let r = 2 * p * n + sign * k;
            if r < 2 {
                return Err(Error::InvalidArgs(format!(
                    "2*{p}*{n} {sign:+}*{k} = {r} < 2"
                )));
            }
            cases.push((n, sign, r));
        }
    }
    cases
        .into_par_iter()
        .map(|(n, sign, r)| {
            let d = compute_hf(&brieskorn_seifert(2, p, r)?)?.d;
            let conjectured = conjectured_d(p, sign);
            Ok(ConjectureRow {
                p,
                k,
                n,
                sign,
                triple: [2, p, r],
                d,
                conjectured,
                agree: d == conjectured,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicted_values() {
        assert_eq!(conjectured_d(5, -1), 0);
        assert_eq!(conjectured_d(5, 1), -2);
        assert_eq!(conjectured_d(7, -1), -2);
        assert_eq!(conjectured_d(7, 1), 0);
    }

    #[test]
    fn tabulated_instances_agree() {
        for (p, k) in [(5, 3), (7, 3), (7, 5)] {
            let rows = conjecture_check(p, k, 1..=3).unwrap();
            assert_eq!(rows.len(), 6);
            assert!(rows.iter().all(|r| r.agree), "{rows:?}");
        }
    }

    #[test]
    fn preconditions() {
        assert!(conjecture_check(4, 3, 1..=2).is_err());
        assert!(conjecture_check(5, 5, 1..=2).is_err());
        assert!(conjecture_check(5, 9, 1..=2).is_err());
        assert!(conjecture_check(5, 11, 1..=2).is_err());
        assert!(conjecture_check(5, 13, 1..=2).is_err());
        assert!(conjecture_check(9, 5, 1..=2).is_ok());
    }
}

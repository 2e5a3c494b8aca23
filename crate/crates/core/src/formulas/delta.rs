//! `delta_{p^n}(K) = 2 d(Sigma_{p^n}(K))` for torus knots, using
//! `Sigma_r(T_{p,q}) = -Sigma(p,q,r)`, and the printed values it is checked
//! against.

use serde::Serialize;

use super::FamilyId;
use crate::error::{Error, Result};
use crate::exactmath::{gcd, is_prime_power};
use crate::gradedroot::compute_hf;
use crate::seifert::brieskorn_seifert;

/// `delta_cover(T_{p,q}) = 2 d(-Sigma(cover, p, q))`.
pub fn delta_invariant(cover: i64, p: i64, q: i64) -> Result<i64> {
    if cover < 2 || p < 2 || q < 2 {
        return Err(Error::InvalidArgs(format!(
            "need entries >= 2, got ({cover}; {p}, {q})"
        )));
    }
    if !is_prime_power(cover) {
        return Err(Error::NotPrimePower(cover));
    }
    if gcd(cover, p) != 1 || gcd(cover, q) != 1 || gcd(p, q) != 1 {
        return Err(Error::NotCoprime(format!("({cover}, {p}, {q})")));
    }
    let mut t = [cover, p, q];
    t.sort_unstable();
    let hf = compute_hf(&brieskorn_seifert(t[0], t[1], t[2])?)?;
    Ok(2 * hf.d)
}

/// Where a printed value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaClaim {
    /// The `-delta_2` row listed next to `sigma/2`, negated.
    RemarkTable,
    /// `delta_2(T_{q,k}) = delta_q(T_{2,k})`.
    Corollary,
    /// `delta_k(T_{2,q})` for prime power `k`.
    CorollaryMoreover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaRow {
    pub family: String,
    pub n: i64,
    pub claim: DeltaClaim,
    pub cover: i64,
    pub knot: [i64; 2],
    pub printed: i64,
    pub pipeline: i64,
    pub agrees: bool,
}

const FAMILIES: [FamilyId; 6] = [
    FamilyId::new(2, 5, 3),
    FamilyId::new(2, 5, -3),
    FamilyId::new(2, 7, 3),
    FamilyId::new(2, 7, -3),
    FamilyId::new(2, 7, 5),
    FamilyId::new(2, 7, -5),
];

/// `(-delta_2 from the remark table, first corollary display, "moreover" display)`.
fn printed(f: &FamilyId) -> (i64, i64, i64) {
    match (f.q, f.k) {
        (5, 3) => (4, 4, -4),
        (5, -3) => (0, 0, 0),
        (7, 3) => (0, 0, 0),
        (7, -3) => (4, -4, -4),
        (7, 5) => (0, 0, -4),
        (7, -5) => (4, -4, 0),
        _ => unreachable!("not a delta family"),
    }
}

/// Every printed delta value for the six torus-knot families at each `n`,
/// next to the pipeline value of the same invariant.
pub fn delta_report(ns: impl IntoIterator<Item = i64>) -> Result<Vec<DeltaRow>> {
    let mut rows = Vec::new();
    for n in ns {
        for f in FAMILIES {
            let [_, q, k] = f.triple(n)?;
            let (remark, cor, more) = printed(&f);
            let mut push = |claim, cover, knot: [i64; 2], printed: i64| -> Result<()> {
                let pipeline = delta_invariant(cover, knot[0], knot[1])?;
                rows.push(DeltaRow {
                    family: f.to_string(),
                    n,
                    claim,
                    cover,
                    knot,
                    printed,
                    pipeline,
                    agrees: printed == pipeline,
                });
                Ok(())
            };
            push(DeltaClaim::RemarkTable, 2, [q, k], -remark)?;
            push(DeltaClaim::Corollary, 2, [q, k], cor)?;
            push(DeltaClaim::Corollary, q, [2, k], cor)?;
            if is_prime_power(k) {
                push(DeltaClaim::CorollaryMoreover, k, [2, q], more)?;
            }
        }
    }
    Ok(rows)
}

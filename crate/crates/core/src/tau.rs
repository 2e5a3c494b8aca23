//! The tau function of a Seifert fibered homology sphere and its reduced
//! sequence of local extrema.
//!
//! `tau(0) = 0` and `tau(k + 1) - tau(k) = delta(k)`, where
//! `delta(j) = 1 - j e0 - sum_i ceil(j b_i / a_i)`.
//!
//! Truncation: writing `delta(j)` in sawtooth form gives
//! `delta(j) > 1 - m + j / (a_1 ... a_m)`, because each arm contributes at
//! least `-1/2` to `eps(j)/2 + <j b_i / a_i>` with equality impossible. So for
//! `j >= (m - 1) a_1 ... a_m` the integer `delta(j)` is positive and tau is
//! strictly increasing from there on. The sequence is stored up to that bound.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactmath::{int, ratio, sawtooth, to_i64, Rational};
use crate::seifert::{Arm, SeifertInvariants};

/// Refuse to materialize tau functions longer than this.
pub const MAX_TAU_LEN: usize = 50_000_000;

/// Number of arms with `a_i | j`.
pub fn epsilon_count(arms: &[Arm], j: i64) -> usize {
    arms.iter().filter(|arm| j % arm.a == 0).count()
}

/// `1 - j e0 - sum ceil(j b_i / a_i)`.
pub fn delta_ceil(s: &SeifertInvariants, j: i64) -> i64 {
    let j = i128::from(j);
    let mut d = 1 - j * i128::from(s.e0);
    for arm in &s.arms {
        d -= Integer::div_ceil(&(j * i128::from(arm.b)), &i128::from(arm.a));
    }
    d as i64
}

/// `1 - m/2 + j/A + eps(j)/2 + sum <j b_i / a_i>`, evaluated exactly.
///
/// Only meaningful for homology spheres (`e = -1/A`); the result must be an
/// integer and agree with [`delta_ceil`].
pub fn delta_sawtooth(s: &SeifertInvariants, j: i64) -> Result<i64> {
    let a = s.product()?;
    let m = s.m() as i64;
    let mut d = int(1) - ratio(m, 2)
        + Rational::new(BigInt::from(j), BigInt::from(a))
        + ratio(epsilon_count(&s.arms, j) as i64, 2);
    for arm in &s.arms {
        d += sawtooth(&Rational::new(
            BigInt::from(j) * BigInt::from(arm.b),
            BigInt::from(arm.a),
        ));
    }
    to_i64(&d).ok_or_else(|| {
        Error::InternalInconsistency(format!("sawtooth form of delta({j}) = {d} for {s}"))
    })
}

/// `(m - 1) a_1 ... a_m`: past this index every `delta(j) >= 1`.
pub fn truncation_bound(s: &SeifertInvariants) -> Result<usize> {
    let a = s.product()?;
    let b = a
        .checked_mul(s.m().saturating_sub(1) as i128)
        .ok_or(Error::Overflow("truncation bound"))?;
    usize::try_from(b).map_err(|_| Error::Overflow("truncation bound"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauFunction {
    pub seifert: SeifertInvariants,
    /// `tau(0), ..., tau(bound)`.
    pub values: Vec<i64>,
    pub bound: usize,
}

impl TauFunction {
    pub fn min(&self) -> i64 {
        self.values.iter().copied().min().unwrap_or(0)
    }

    pub fn at(&self, k: usize) -> Option<i64> {
        self.values.get(k).copied()
    }
}

/// Prefix sums of [`delta_ceil`] up to the truncation bound.
pub fn tau_sequence(s: &SeifertInvariants) -> Result<TauFunction> {
    tau_sequence_with_margin(s, 0)
}

/// Like [`tau_sequence`] but extends the bound by `margin` extra steps.
pub fn tau_sequence_with_margin(s: &SeifertInvariants, margin: usize) -> Result<TauFunction> {
    let bound = truncation_bound(s)?
        .checked_add(margin)
        .ok_or(Error::Overflow("truncation bound"))?;
    if bound >= MAX_TAU_LEN {
        return Err(Error::UnsupportedTriple(format!(
            "tau would need {bound} entries (limit {MAX_TAU_LEN}) for {s}"
        )));
    }
    // |delta(j)| <= 1 + B (|e0| + m), so |tau| <= (B + 1)^2 (1 + |e0| + m).
    let m = s.m() as i128;
    let e0 = i128::from(s.e0).abs();
    let worst = (bound as i128 + 1) * (bound as i128 + 1) * (1 + e0 + m);
    if worst > i128::from(i64::MAX) {
        return Err(Error::Overflow("tau values"));
    }
    let mut values = Vec::with_capacity(bound + 1);
    let mut acc = 0i64;
    values.push(acc);
    for j in 0..bound as i64 {
        acc += delta_ceil(s, j);
        values.push(acc);
    }
    Ok(TauFunction {
        seifert: s.clone(),
        values,
        bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Min,
    Max,
}

/// A local extremum; plateaus are collapsed to `start..=end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extremum {
    pub kind: ExtremumKind,
    pub value: i64,
    pub start: usize,
    pub end: usize,
}

impl Extremum {
    pub fn contains(&self, k: i64) -> bool {
        k >= self.start as i64 && k <= self.end as i64
    }
}

/// Alternating local extrema `m0, M0, m1, M1, ..., mt` of a tau function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedTau {
    pub extrema: Vec<Extremum>,
}

impl ReducedTau {
    pub fn values(&self) -> Vec<i64> {
        self.extrema.iter().map(|e| e.value).collect()
    }

    pub fn minima(&self) -> Vec<Extremum> {
        self.extrema.iter().copied().step_by(2).collect()
    }

    pub fn maxima(&self) -> Vec<Extremum> {
        self.extrema.iter().copied().skip(1).step_by(2).collect()
    }
}

/// Keeps only local extrema, collapsing repeated values.
///
/// `tau(0)` is always the first minimum. Past the last stored index the
/// function increases, so a final run counts as a minimum exactly when it
/// sits below its predecessor.
pub fn reduce(t: &TauFunction) -> ReducedTau {
    reduce_values(&t.values)
}

pub fn reduce_values(values: &[i64]) -> ReducedTau {
    // (value, start, end) of maximal constant runs
    let mut runs: Vec<(i64, usize, usize)> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match runs.last_mut() {
            Some(last) if last.0 == v => last.2 = i,
            _ => runs.push((v, i, i)),
        }
    }
    let mut extrema = Vec::new();
    let Some(&(v0, s0, e0)) = runs.first() else {
        return ReducedTau { extrema };
    };
    extrema.push(Extremum {
        kind: ExtremumKind::Min,
        value: v0,
        start: s0,
        end: e0,
    });
    for w in runs.windows(3) {
        let (prev, cur, next) = (w[0].0, w[1], w[2].0);
        let kind = if cur.0 > prev && cur.0 > next {
            ExtremumKind::Max
        } else if cur.0 < prev && cur.0 < next {
            ExtremumKind::Min
        } else {
            continue;
        };
        extrema.push(Extremum {
            kind,
            value: cur.0,
            start: cur.1,
            end: cur.2,
        });
    }
    if runs.len() >= 2 {
        let (last, prev) = (runs[runs.len() - 1], runs[runs.len() - 2]);
        if last.0 < prev.0 {
            extrema.push(Extremum {
                kind: ExtremumKind::Min,
                value: last.0,
                start: last.1,
                end: last.2,
            });
        }
    }
    ReducedTau { extrema }
}

/// Whether `delta(j) >= 1` on `[from, to]`.
pub fn increasing_on(s: &SeifertInvariants, from: i64, to: i64) -> bool {
    (from..=to).all(|j| delta_ceil(s, j) >= 1)
}

/// Exact value of `tau(k)` by summing the sawtooth form; used as a cross-check.
pub fn tau_by_sawtooth(s: &SeifertInvariants, k: i64) -> Result<i64> {
    let mut acc = 0i64;
    for j in 0..k {
        acc += delta_sawtooth(s, j)?;
    }
    Ok(acc)
}

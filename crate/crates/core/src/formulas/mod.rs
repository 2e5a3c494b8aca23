//! Closed-form descriptions of `HF+` and of tau extrema for the surgery and
//! Brieskorn families, transcribed as stated, plus the tools that compare
//! them with the graded-root pipeline.

mod conjecture;
mod delta;
mod extrema;
mod surgery;
mod table1;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gradedroot::{compute_hf, HFPlusModule};
use crate::report::ModuleJson;
use crate::seifert::brieskorn_seifert;

pub use conjecture::{conjecture_check, conjectured_d, ConjectureRow};
pub use delta::{delta_invariant, delta_report, DeltaClaim, DeltaRow};
pub use extrema::{
    c_constant, lemma31_extrema, lemma32_bunch, lemma32_entries, lemma57_conflicts,
    lemma57_extrema, measured_extrema, ExtremaTable, Lemma32Entry, MeasuredExtrema, Mismatch,
};
pub use surgery::{eq1_closed_form, eq1_module, thm_minus_closed_form, thm_minus_module};
pub use table1::{table1_closed_form, table1_d, table1_module, TABLE1_FAMILIES};

/// `-Sigma(p, q, pqn + k)`; `k = -1, +1` are the surgery families
/// `S^3_{1/n}(T_{p,q})` and `-S^3_{-1/n}(T_{p,q})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyId {
    pub p: i64,
    pub q: i64,
    pub k: i64,
}

impl FamilyId {
    pub const fn new(p: i64, q: i64, k: i64) -> Self {
        Self { p, q, k }
    }

    /// The Brieskorn triple at parameter `n`.
    pub fn triple(&self, n: i64) -> Result<[i64; 3]> {
        if n < 1 {
            return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
        }
        let r = self
            .p
            .checked_mul(self.q)
            .and_then(|pq| pq.checked_mul(n))
            .and_then(|x| x.checked_add(self.k))
            .ok_or(Error::Overflow("family triple"))?;
        Ok([self.p, self.q, r])
    }

    pub fn is_table1(&self) -> bool {
        TABLE1_FAMILIES.contains(self)
    }

    /// `-Sigma(2,7,14n+3)` style label.
    pub fn label(&self) -> String {
        let sign = if self.k < 0 { '-' } else { '+' };
        format!(
            "-Sigma({},{},{}n{}{})",
            self.p,
            self.q,
            self.p * self.q,
            sign,
            self.k.abs()
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.k < 0 { "minus" } else { "plus" };
        write!(f, "{},{},{}{}", self.p, self.q, sign, self.k.abs())
    }
}

/// Parses `p,q,plusK` / `p,q,minusK` (also `p,q,+K`, `p,q,-K`).
impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("family {s:?}: expected p,q,plusK or p,q,minusK"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [p, q, k] = parts.as_slice() else {
            return Err(bad());
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        let k = if let Some(rest) = k.strip_prefix("minus") {
            -rest.parse::<i64>().map_err(|_| bad())?
        } else if let Some(rest) = k.strip_prefix("plus") {
            rest.parse::<i64>().map_err(|_| bad())?
        } else {
            k.parse::<i64>().map_err(|_| bad())?
        };
        if p < 2 || q < 2 || k == 0 {
            return Err(bad());
        }
        Ok(Self { p, q, k })
    }
}

/// Where a summand of a closed form comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SummandKind {
    /// The summand without a running index (next to the trunk).
    Base,
    /// A member of an `i`-indexed direct sum.
    Indexed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub bottom: i64,
    pub length: i64,
    pub mult: u64,
}

/// A closed-form `HF+` with the provenance of each summand kept, so that
/// comparisons can report offsets on the indexed part separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub d: i64,
    pub summands: Vec<Summand>,
}

impl ClosedForm {
    pub fn new(d: i64) -> Self {
        Self {
            d,
            summands: Vec::new(),
        }
    }

    /// Pushes a summand; a negative multiplicity is a domain edge of the formula.
    pub fn push(&mut self, kind: SummandKind, bottom: i64, length: i64, mult: i64) -> Result<()> {
        let mult = u64::try_from(mult).map_err(|_| {
            Error::DomainEdge(format!(
                "multiplicity {mult} of T+_{bottom}({length}) is negative"
            ))
        })?;
        if mult > 0 {
            self.summands.push(Summand {
                kind,
                bottom,
                length,
                mult,
            });
        }
        Ok(())
    }

    pub fn module(&self) -> HFPlusModule {
        self.shifted_module(0)
    }

    /// The module with every indexed bottom lowered by `delta`.
    pub fn shifted_module(&self, delta: i64) -> HFPlusModule {
        let mut m = HFPlusModule::new(self.d);
        for s in &self.summands {
            let b = match s.kind {
                SummandKind::Base => s.bottom,
                SummandKind::Indexed => s.bottom - delta,
            };
            m.add(b, s.length, s.mult);
        }
        m
    }
}

/// Which closed form a family is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Eq1,
    ThmMinus,
    Table1,
}

impl Source {
    /// Default source: the surgery formulas for `k = +-1`, the table otherwise.
    pub fn default_for(f: &FamilyId) -> Result<Self> {
        match f.k {
            1 => Ok(Source::Eq1),
            -1 => Ok(Source::ThmMinus),
            _ if f.is_table1() => Ok(Source::Table1),
            _ => Err(Error::InvalidArgs(format!(
                "no closed form is known for family {f}"
            ))),
        }
    }

    pub fn closed_form(self, f: &FamilyId, n: i64) -> Result<ClosedForm> {
        match self {
            Source::Eq1 if f.k == 1 => eq1_closed_form(f.p, f.q, n),
            Source::ThmMinus if f.k == -1 => thm_minus_closed_form(f.p, f.q, n),
            Source::Table1 => table1_closed_form(f, n),
            _ => Err(Error::InvalidArgs(format!(
                "{self:?} does not describe family {f}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GradingOffsets {
    pub base: i64,
    pub indexed: i64,
}

/// Closed form versus pipeline for one manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub family: String,
    pub n: i64,
    pub source: Source,
    pub closed_form: ModuleJson,
    pub pipeline: ModuleJson,
    pub equal: bool,
    /// `closed - pipeline` on the indexed bottoms, when one uniform offset
    /// (with the base summands and d untouched) reconciles the two.
    pub grading_offsets: Option<GradingOffsets>,
}

/// The uniform indexed offset turning `closed` into `pipeline`, if any.
pub fn indexed_offset(closed: &ClosedForm, pipeline: &HFPlusModule) -> Option<i64> {
    if closed.d != pipeline.d {
        return None;
    }
    if closed.module() == *pipeline {
        return Some(0);
    }
    let mut candidates: Vec<i64> = closed
        .summands
        .iter()
        .filter(|s| s.kind == SummandKind::Indexed)
        .flat_map(|s| pipeline.towers().map(move |(t, _)| s.bottom - t.bottom))
        .collect();
    candidates.sort_unstable_by_key(|d| (d.abs(), *d));
    candidates.dedup();
    candidates
        .into_iter()
        .find(|&d| closed.shifted_module(d) == *pipeline)
}

pub fn compare(f: &FamilyId, n: i64, source: Source) -> Result<Comparison> {
    let closed = source.closed_form(f, n)?;
    let [a, b, c] = f.triple(n)?;
    let pipeline = compute_hf(&brieskorn_seifert(a, b, c)?)?;
    let name = format!("-Sigma({a},{b},{c})");
    let offset = indexed_offset(&closed, &pipeline);
    Ok(Comparison {
        family: f.to_string(),
        n,
        source,
        closed_form: ModuleJson::new(&name, &closed.module()),
        pipeline: ModuleJson::new(&name, &pipeline),
        equal: closed.module() == pipeline,
        grading_offsets: offset.map(|indexed| GradingOffsets { base: 0, indexed }),
    })
}

//! Literal transcription of the `HF+` table for `-Sigma(2,5,10n+-1)`,
//! `-Sigma(2,5,10n+-3)`, `-Sigma(2,7,14n+-1)`, `-Sigma(2,7,14n+-3)` and
//! `-Sigma(2,7,14n+-5)`. Rows are kept as printed; mismatches with the
//! pipeline are reported by the comparison, not patched here.

use super::{ClosedForm, FamilyId, SummandKind};
use crate::error::{Error, Result};
use crate::gradedroot::HFPlusModule;

pub const TABLE1_FAMILIES: [FamilyId; 10] = [
    FamilyId::new(2, 5, -1),
    FamilyId::new(2, 5, 1),
    FamilyId::new(2, 5, -3),
    FamilyId::new(2, 5, 3),
    FamilyId::new(2, 7, -1),
    FamilyId::new(2, 7, 1),
    FamilyId::new(2, 7, -3),
    FamilyId::new(2, 7, 3),
    FamilyId::new(2, 7, -5),
    FamilyId::new(2, 7, 5),
];

/// `bigoplus_{i=lo}^{hi} T+_{bottom(n, i)}(1)^2`.
struct IndexedSum {
    lo: fn(i64) -> i64,
    hi: fn(i64) -> i64,
    bottom: fn(i64, i64) -> i64,
}

struct Row {
    d: i64,
    base_bottom: i64,
    base_length: i64,
    base_mult: fn(i64) -> i64,
    sums: &'static [IndexedSum],
}

/// `(lo, hi)` of an index range as functions of `n`.
type Range = (fn(i64) -> i64, fn(i64) -> i64);

const ZERO_TO_N_MINUS_1: Range = (|_| 0, |n| n - 1);
const ONE_TO_N: Range = (|_| 1, |n| n);

const fn sum(range: Range, bottom: fn(i64, i64) -> i64) -> IndexedSum {
    IndexedSum {
        lo: range.0,
        hi: range.1,
        bottom,
    }
}

fn row(f: &FamilyId) -> Option<Row> {
    const S_2I_FROM_0: &[IndexedSum] = &[sum(ZERO_TO_N_MINUS_1, |_, i| 2 * i)];
    const S_2I_FROM_1: &[IndexedSum] = &[sum(ONE_TO_N, |_, i| 2 * i)];
    const S7_FROM_0: &[IndexedSum] = &[
        sum(ZERO_TO_N_MINUS_1, |_, i| 2 * i),
        sum(ZERO_TO_N_MINUS_1, |n, i| 2 * n + 4 * i),
    ];
    const S7_FROM_1: &[IndexedSum] = &[
        sum(ONE_TO_N, |_, i| 2 * i),
        sum(ONE_TO_N, |n, i| 2 * n + 4 * i),
    ];
    const S7_FROM_0_LOW: &[IndexedSum] = &[
        sum(ZERO_TO_N_MINUS_1, |_, i| 2 * i - 2),
        sum(ZERO_TO_N_MINUS_1, |n, i| 2 * n + 4 * i - 2),
    ];
    let r = match (f.p, f.q, f.k) {
        (2, 5, -1) => Row {
            d: -2,
            base_bottom: -2,
            base_length: 1,
            base_mult: |n| n - 1,
            sums: S_2I_FROM_0,
        },
        (2, 5, 1) => Row {
            d: 0,
            base_bottom: 0,
            base_length: 1,
            base_mult: |n| n,
            sums: S_2I_FROM_1,
        },
        (2, 5, -3) => Row {
            d: 0,
            base_bottom: 0,
            base_length: 1,
            base_mult: |n| n - 1,
            sums: S_2I_FROM_0,
        },
        (2, 5, 3) => Row {
            d: -2,
            base_bottom: -2,
            base_length: 1,
            base_mult: |n| n,
            sums: S_2I_FROM_0,
        },
        (2, 7, -1) => Row {
            d: -4,
            base_bottom: -4,
            base_length: 2,
            base_mult: |n| n - 1,
            sums: S7_FROM_0,
        },
        (2, 7, 1) => Row {
            d: 0,
            base_bottom: 0,
            base_length: 2,
            base_mult: |n| n,
            sums: S7_FROM_1,
        },
        (2, 7, -3) => Row {
            d: -2,
            base_bottom: -2,
            base_length: 1,
            base_mult: |n| 2 * n - 2,
            sums: S7_FROM_0_LOW,
        },
        (2, 7, 3) => Row {
            d: 0,
            base_bottom: 0,
            base_length: 1,
            base_mult: |n| 2 * n + 1,
            sums: S7_FROM_1,
        },
        (2, 7, -5) => Row {
            d: -2,
            base_bottom: -2,
            base_length: 1,
            base_mult: |n| 2 * n - 3,
            sums: S7_FROM_0_LOW,
        },
        (2, 7, 5) => Row {
            d: 0,
            base_bottom: 0,
            base_length: 1,
            base_mult: |n| 2 * n + 2,
            sums: S7_FROM_1,
        },
        _ => return None,
    };
    Some(r)
}

/// The printed row for `f` at `n`, summands labelled base or indexed.
///
/// Errors with `DomainEdge` where a printed multiplicity goes negative
/// (the `14n-5` row at `n = 1`).
pub fn table1_closed_form(f: &FamilyId, n: i64) -> Result<ClosedForm> {
    let r = row(f).ok_or_else(|| Error::InvalidArgs(format!("{f} is not a tabulated family")))?;
    if n < 1 {
        return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
    }
    let mut c = ClosedForm::new(r.d);
    c.push(
        SummandKind::Base,
        r.base_bottom,
        r.base_length,
        (r.base_mult)(n),
    )?;
    for s in r.sums {
        for i in (s.lo)(n)..=(s.hi)(n) {
            c.push(SummandKind::Indexed, (s.bottom)(n, i), 1, 2)?;
        }
    }
    Ok(c)
}

/// The d-column entry of a tabulated family (independent of `n`).
pub fn table1_d(f: &FamilyId) -> Result<i64> {
    row(f)
        .map(|r| r.d)
        .ok_or_else(|| Error::InvalidArgs(format!("{f} is not a tabulated family")))
}

pub fn table1_module(f: &FamilyId, n: i64) -> Result<HFPlusModule> {
    Ok(table1_closed_form(f, n)?.module())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_rows() {
        let m = |p, q, k, n| table1_module(&FamilyId::new(p, q, k), n);
        assert_eq!(
            m(2, 5, 3, 1).unwrap(),
            HFPlusModule::new(-2).with(-2, 1, 1).with(0, 1, 2)
        );
        assert_eq!(
            m(2, 7, -5, 2).unwrap(),
            HFPlusModule::new(-2)
                .with(-2, 1, 1)
                .with(-2, 1, 2)
                .with(0, 1, 2)
                .with(2, 1, 2)
                .with(6, 1, 2)
        );
        assert_eq!(
            m(2, 5, -3, 2).unwrap(),
            HFPlusModule::new(0)
                .with(0, 1, 1)
                .with(0, 1, 2)
                .with(2, 1, 2)
        );
        assert_eq!(
            m(2, 7, 3, 1).unwrap(),
            HFPlusModule::new(0)
                .with(0, 1, 3)
                .with(2, 1, 2)
                .with(6, 1, 2)
        );
    }

    #[test]
    fn domain_edge_and_unknown_rows() {
        let f = FamilyId::new(2, 7, -5);
        assert!(matches!(
            table1_closed_form(&f, 1),
            Err(Error::DomainEdge(_))
        ));
        assert!(table1_closed_form(&FamilyId::new(2, 9, 3), 1).is_err());
        assert!(table1_closed_form(&f, 0).is_err());
    }

    #[test]
    fn every_row_has_the_printed_summand_count() {
        for f in TABLE1_FAMILIES {
            for n in 2..6 {
                let c = table1_closed_form(&f, n).unwrap();
                let indexed: u64 = c
                    .summands
                    .iter()
                    .filter(|s| s.kind == SummandKind::Indexed)
                    .map(|s| s.mult)
                    .sum();
                let per_sum = if f.q == 5 { 2 * n } else { 4 * n };
                assert_eq!(indexed as i64, per_sum, "{f} n={n}");
            }
        }
    }
}

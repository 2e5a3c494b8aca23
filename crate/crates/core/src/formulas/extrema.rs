//! Predicted positions and values of tau extrema.
//!
//! For `Sigma(p,q,pqn-1)` the extrema come from the semigroup `S_{p,q}`; for
//! `Sigma(2,5,10n+-3)`, `Sigma(2,7,14n+-3)` and `Sigma(2,7,14n+-5)` they are
//! piecewise tables, transcribed here cell by cell. Pieces flagged `dagger`
//! exist only for `n > 1`.

use serde::Serialize;

use super::FamilyId;
use crate::error::{Error, Result};
use crate::seifert::brieskorn_seifert;
use crate::semigroup::TorusKnotSemigroup;
use crate::tau::{reduce, tau_sequence, Extremum};

/// Entries are `None` where no formula applies (a skipped dagger piece).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremaTable {
    pub max_pos: Vec<Option<i64>>,
    pub min_pos: Vec<Option<i64>>,
    pub max_val: Vec<Option<i64>>,
    pub min_val: Vec<Option<i64>>,
    /// `tau(M_i) - tau(m_i)`.
    pub rise: Vec<Option<i64>>,
    /// `tau(M_i) - tau(m_{i+1})`.
    pub fall: Vec<Option<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasuredExtrema {
    pub minima: Vec<Extremum>,
    pub maxima: Vec<Extremum>,
}

pub fn measured_extrema(triple: [i64; 3]) -> Result<MeasuredExtrema> {
    let [a, b, c] = triple;
    let r = reduce(&tau_sequence(&brieskorn_seifert(a, b, c)?)?);
    Ok(MeasuredExtrema {
        minima: r.minima(),
        maxima: r.maxima(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: &'static str,
    pub i: usize,
    pub predicted: i64,
    pub measured: String,
}

impl ExtremaTable {
    /// Cells where the prediction disagrees with `m`. Positions match when
    /// they fall inside the measured plateau.
    pub fn mismatches(&self, m: &MeasuredExtrema) -> Vec<Mismatch> {
        let mut out = Vec::new();
        if self.max_pos.len() != m.maxima.len() {
            out.push(Mismatch {
                row: "maxima count",
                i: 0,
                predicted: self.max_pos.len() as i64,
                measured: m.maxima.len().to_string(),
            });
        }
        if self.min_pos.len() != m.minima.len() {
            out.push(Mismatch {
                row: "minima count",
                i: 0,
                predicted: self.min_pos.len() as i64,
                measured: m.minima.len().to_string(),
            });
        }
        if !out.is_empty() {
            return out;
        }
        let mut check = |row: &'static str,
                         i: usize,
                         p: Option<i64>,
                         ok: &dyn Fn(i64) -> bool,
                         shown: String| {
            if let Some(p) = p {
                if !ok(p) {
                    out.push(Mismatch {
                        row,
                        i,
                        predicted: p,
                        measured: shown,
                    });
                }
            }
        };
        for (i, e) in m.maxima.iter().enumerate() {
            let lo = m.minima[i].value;
            let hi = m.minima[i + 1].value;
            check(
                "M_i",
                i,
                self.max_pos[i],
                &|p| e.contains(p),
                format!("{}..={}", e.start, e.end),
            );
            check(
                "tau(M_i)",
                i,
                self.max_val[i],
                &|p| p == e.value,
                e.value.to_string(),
            );
            check(
                "rise",
                i,
                self.rise[i],
                &|p| p == e.value - lo,
                (e.value - lo).to_string(),
            );
            check(
                "fall",
                i,
                self.fall[i],
                &|p| p == e.value - hi,
                (e.value - hi).to_string(),
            );
        }
        for (i, e) in m.minima.iter().enumerate() {
            check(
                "m_i",
                i,
                self.min_pos[i],
                &|p| e.contains(p),
                format!("{}..={}", e.start, e.end),
            );
            check(
                "tau(m_i)",
                i,
                self.min_val[i],
                &|p| p == e.value,
                e.value.to_string(),
            );
        }
        out
    }
}

/// `C(n, g) = g(n - ng + 2)`.
pub fn c_constant(n: i64, g: i64) -> i64 {
    g * (n - n * g + 2)
}

/// Extrema of `tau` for `Sigma(p,q,pqn-1)`, with `N = n(2g-1)`:
/// `M_i = pqi + 1` (`i <= N-2`), `m_i = pqi - floor(i/n)` (`i <= N-1`),
/// `rise_i = #{s in S : s <= floor(i/n)}`,
/// `fall_i = #{s not in S : s >= floor((i+1)/n) + 1}` and
/// `tau(M_i) = 1 + sum_{m=1}^{i} (floor(m/n) + 1 - g)`.
pub fn lemma31_extrema(p: i64, q: i64, n: i64) -> Result<ExtremaTable> {
    if n < 1 {
        return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
    }
    let s = TorusKnotSemigroup::new(p, q)?;
    let g = s.genus();
    let big_n = n * (2 * g - 1);
    let maxima = (big_n - 1).max(0);
    let pq = p * q;

    let max_pos = (0..maxima).map(|i| Some(pq * i + 1)).collect();
    let min_pos = (0..=maxima).map(|i| Some(pq * i - i / n)).collect();
    let rise: Vec<i64> = (0..maxima).map(|i| s.count_members_upto(i / n)).collect();
    let fall: Vec<i64> = (0..maxima)
        .map(|i| s.count_gaps_from((i + 1) / n + 1))
        .collect();
    let mut max_val = Vec::with_capacity(maxima as usize);
    let mut acc = 1;
    for i in 0..maxima {
        if i > 0 {
            acc += i / n + 1 - g;
        }
        max_val.push(acc);
    }
    let mut min_val: Vec<i64> = max_val.iter().zip(&rise).map(|(v, r)| v - r).collect();
    min_val.push(match (max_val.last(), fall.last()) {
        (Some(v), Some(f)) => v - f,
        _ => 0,
    });

    Ok(ExtremaTable {
        max_pos,
        min_pos,
        max_val: max_val.into_iter().map(Some).collect(),
        min_val: min_val.into_iter().map(Some).collect(),
        rise: rise.into_iter().map(Some).collect(),
        fall: fall.into_iter().map(Some).collect(),
    })
}

/// One symmetric pair of branches for `nk <= i < nk + n`, `0 <= k <= g-2`:
/// minima `m_{n(g-1)-1-i}` and `m_{ng+i}` share height and branch length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma32Entry {
    pub k: i64,
    pub i: i64,
    pub left_min: i64,
    pub right_min: i64,
    /// `M_{ng+i-1}`, the maximum just left of `m_{ng+i}`.
    pub right_max: i64,
    /// `alpha_{g+k}`.
    pub branch: i64,
    /// `(k+1)(2i - nk) - 2 alpha_{g+k} + C(n,g)`.
    pub twice_height: i64,
}

pub fn lemma32_entries(p: i64, q: i64, n: i64) -> Result<Vec<Lemma32Entry>> {
    if n < 1 {
        return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
    }
    let s = TorusKnotSemigroup::new(p, q)?;
    let g = s.genus();
    let c = c_constant(n, g);
    let mut out = Vec::new();
    for k in 0..=g - 2 {
        for i in n * k..n * k + n {
            let branch = s.alpha(g + k);
            out.push(Lemma32Entry {
                k,
                i,
                left_min: n * (g - 1) - 1 - i,
                right_min: n * g + i,
                right_max: n * g + i - 1,
                branch,
                twice_height: (k + 1) * (2 * i - n * k) - 2 * branch + c,
            });
        }
    }
    Ok(out)
}

/// The bottom bunch: for `n(g-1) <= i <= ng-2`, `rise_i = alpha_{g-1}` and
/// `2 tau(m_i) = -2 alpha_{g-1} + C(n,g)`. Returns `(indices, rise, 2 tau)`.
pub fn lemma32_bunch(p: i64, q: i64, n: i64) -> Result<(Vec<i64>, i64, i64)> {
    let s = TorusKnotSemigroup::new(p, q)?;
    let g = s.genus();
    let a = s.alpha(g - 1);
    let idx = (n * (g - 1)..=n * g - 2).collect();
    Ok((idx, a, -2 * a + c_constant(n, g)))
}

type Lin = fn(i64) -> i64;
type Formula = fn(i64, i64) -> i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Any,
    Even,
    Odd,
}

#[derive(Clone, Copy)]
struct Piece {
    lo: Lin,
    hi: Lin,
    parity: Parity,
    dagger: bool,
    f: Formula,
}

fn pc(lo: Lin, hi: Lin, f: Formula) -> Piece {
    Piece {
        lo,
        hi,
        parity: Parity::Any,
        dagger: false,
        f,
    }
}

impl Piece {
    fn even(self) -> Self {
        Piece {
            parity: Parity::Even,
            ..self
        }
    }

    fn odd(self) -> Self {
        Piece {
            parity: Parity::Odd,
            ..self
        }
    }

    fn dagger(self) -> Self {
        Piece {
            dagger: true,
            ..self
        }
    }

    fn active(&self, n: i64) -> bool {
        !(self.dagger && n == 1) && (self.lo)(n) <= (self.hi)(n)
    }

    fn covers(&self, n: i64, i: i64) -> bool {
        self.active(n)
            && (self.lo)(n) <= i
            && i <= (self.hi)(n)
            && match self.parity {
                Parity::Any => true,
                Parity::Even => i % 2 == 0,
                Parity::Odd => i % 2 != 0,
            }
    }
}

struct Pieces {
    max_pos: Vec<Piece>,
    min_pos: Vec<Piece>,
    rise: Vec<Piece>,
    fall: Vec<Piece>,
    max_val: Vec<Piece>,
    min_val: Vec<Piece>,
}

impl Pieces {
    fn rows(&self) -> [(&'static str, &[Piece]); 6] {
        [
            ("M_i", &self.max_pos),
            ("m_i", &self.min_pos),
            ("rise", &self.rise),
            ("fall", &self.fall),
            ("tau(M_i)", &self.max_val),
            ("tau(m_i)", &self.min_val),
        ]
    }
}

fn eval(pieces: &[Piece], n: i64, i: i64) -> Option<i64> {
    pieces.iter().find(|p| p.covers(n, i)).map(|p| (p.f)(n, i))
}

fn count(pieces: &[Piece], n: i64) -> i64 {
    pieces
        .iter()
        .filter(|p| p.active(n))
        .map(|p| (p.hi)(n) + 1)
        .max()
        .unwrap_or(0)
}

fn pieces(f: &FamilyId) -> Option<Pieces> {
    let s = match (f.p, f.q, f.k) {
        (2, 5, -3) => Pieces {
            max_pos: vec![pc(|_| 0, |n| 3 * n - 2, |_, i| 10 * i + 1)],
            min_pos: vec![
                pc(|_| 0, |_| 0, |_, _| 0),
                pc(|_| 1, |n| n - 1, |_, i| 10 * i - 2).dagger(),
                pc(|n| n, |n| 3 * n - 1, |_, i| 10 * i - 8),
            ],
            rise: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, _| 1),
                pc(|n| 2 * n, |n| 3 * n - 2, |_, _| 2).dagger(),
            ],
            fall: vec![
                pc(|_| 0, |n| n - 2, |_, _| 2).dagger(),
                pc(|n| n - 1, |n| 3 * n - 2, |_, _| 1),
            ],
            max_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| 1 - i),
                pc(|n| n, |n| 2 * n - 2, |n, _| 2 - n).dagger(),
                pc(|n| 2 * n - 1, |n| 3 * n - 2, |n, i| 3 - 3 * n + i),
            ],
            min_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| -i),
                pc(|n| n, |n| 2 * n - 1, |n, _| 2 - n),
                pc(|n| 2 * n, |n| 3 * n - 1, |n, i| 3 - 3 * n + i),
            ],
        },
        (2, 5, 3) => Pieces {
            max_pos: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, i| 10 * i + 1),
                pc(|n| 2 * n, |n| 3 * n - 1, |_, i| 10 * i + 7),
            ],
            min_pos: vec![pc(|_| 0, |n| 3 * n, |_, i| 10 * i)],
            rise: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, _| 1),
                pc(|n| 2 * n, |n| 3 * n - 1, |_, _| 2),
            ],
            fall: vec![
                pc(|_| 0, |n| n - 1, |_, _| 2),
                pc(|n| n, |n| 3 * n - 1, |_, _| 1),
            ],
            max_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| 1 - i),
                pc(|n| n, |n| 2 * n - 1, |n, _| 1 - n),
                pc(|n| 2 * n, |n| 3 * n - 1, |n, i| 2 - 3 * n + i),
            ],
            min_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| -i),
                pc(|n| n, |n| 2 * n, |n, _| -n),
                pc(|n| 2 * n + 1, |n| 3 * n, |n, i| -3 * n + i),
            ],
        },
        (2, 7, -3) => Pieces {
            max_pos: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, i| 14 * i + 1),
                pc(|n| 2 * n, |n| 4 * n - 2, |n, i| 14 * (n + i / 2) - 5).even(),
                pc(|n| 2 * n, |n| 4 * n - 2, |n, i| 14 * (n + (i - 1) / 2) + 1).odd(),
                pc(|n| 4 * n - 1, |n| 6 * n - 3, |n, i| 14 * (i - n) + 9),
            ],
            min_pos: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, i| 14 * i),
                pc(|n| 2 * n, |n| 4 * n - 1, |n, i| 14 * (n + i / 2) - 8).even(),
                pc(|n| 2 * n, |n| 4 * n - 1, |n, i| 14 * (n + (i - 1) / 2)).odd(),
                pc(|n| 4 * n, |n| 6 * n - 2, |n, i| 14 * (i - n)),
            ],
            rise: vec![
                pc(|_| 0, |n| 4 * n - 2, |_, _| 1),
                pc(|n| 4 * n - 1, |n| 5 * n - 2, |_, _| 2),
                pc(|n| 5 * n - 1, |n| 6 * n - 3, |_, _| 3).dagger(),
            ],
            fall: vec![
                pc(|_| 0, |n| n - 2, |_, _| 3).dagger(),
                pc(|n| n - 1, |n| 2 * n - 2, |_, _| 2),
                pc(|n| 2 * n - 1, |n| 6 * n - 3, |_, _| 1),
            ],
            max_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| 1 - 2 * i),
                pc(|n| n, |n| 2 * n - 1, |n, i| 2 - n - i),
                pc(|n| 2 * n, |n| 4 * n - 3, |n, _| 3 - 3 * n).dagger(),
                pc(|n| 4 * n - 2, |n| 5 * n - 2, |n, i| 5 - 7 * n + i),
                pc(|n| 5 * n - 1, |n| 6 * n - 3, |n, i| 7 - 12 * n + 2 * i).dagger(),
            ],
            min_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| -2 * i),
                pc(|n| n, |n| 2 * n - 1, |n, i| 1 - n - i),
                pc(|n| 2 * n, |n| 4 * n - 2, |n, _| 2 - 3 * n),
                pc(|n| 4 * n - 1, |n| 5 * n - 2, |n, i| 3 - 7 * n + i),
                pc(|n| 5 * n - 1, |n| 6 * n - 2, |n, i| 4 - 12 * n + 2 * i),
            ],
        },
        (2, 7, 3) => Pieces {
            max_pos: vec![
                pc(|_| 0, |n| 2 * n, |_, i| 14 * i + 1),
                pc(|n| 2 * n + 1, |n| 4 * n, |n, i| 14 * (n + i / 2) + 1).even(),
                pc(|n| 2 * n + 1, |n| 4 * n, |n, i| 14 * (n + (i - 1) / 2) + 7).odd(),
                pc(|n| 4 * n + 1, |n| 6 * n, |n, i| 14 * (i - n) + 1),
            ],
            min_pos: vec![
                pc(|_| 0, |n| 2 * n, |_, i| 14 * i),
                pc(|n| 2 * n + 1, |n| 4 * n + 1, |n, i| 14 * (n + i / 2)).even(),
                pc(
                    |n| 2 * n + 1,
                    |n| 4 * n + 1,
                    |n, i| 14 * (n + (i - 1) / 2) + 6,
                )
                .odd(),
                pc(|n| 4 * n + 2, |n| 6 * n + 1, |n, i| 14 * (i - n) - 8),
            ],
            rise: vec![
                pc(|_| 0, |n| 4 * n, |_, _| 1),
                pc(|n| 4 * n + 1, |n| 5 * n, |_, _| 2),
                pc(|n| 5 * n + 1, |n| 6 * n, |_, _| 3),
            ],
            fall: vec![
                pc(|_| 0, |n| n - 1, |_, _| 3),
                pc(|n| n, |n| 2 * n - 1, |_, _| 2),
                pc(|n| 2 * n, |n| 6 * n, |_, _| 1),
            ],
            max_val: vec![
                pc(|_| 0, |n| n, |_, i| 1 - 2 * i),
                pc(|n| n + 1, |n| 2 * n - 1, |n, i| 1 - n - i),
                pc(|n| 2 * n, |n| 4 * n, |n, _| 1 - 3 * n),
                pc(|n| 4 * n + 1, |n| 5 * n, |n, i| 1 - 7 * n + i),
                pc(|n| 5 * n + 1, |n| 6 * n, |n, i| 1 - 12 * n + 2 * i),
            ],
            min_val: vec![
                pc(|_| 0, |n| n, |_, i| -2 * i),
                pc(|n| n + 1, |n| 2 * n - 1, |n, i| -n - i),
                pc(|n| 2 * n, |n| 4 * n + 1, |n, _| -3 * n),
                pc(|n| 4 * n + 2, |n| 5 * n, |n, i| -1 - 7 * n + i),
                pc(|n| 5 * n + 1, |n| 6 * n + 1, |n, i| -2 - 12 * n + 2 * i),
            ],
        },
        (2, 7, -5) => Pieces {
            max_pos: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, i| 14 * i + 1),
                pc(|n| 2 * n, |n| 4 * n - 3, |n, i| 14 * (n + i / 2) - 9)
                    .even()
                    .dagger(),
                pc(|n| 2 * n, |n| 4 * n - 3, |n, i| 14 * (n + (i - 1) / 2) + 1)
                    .odd()
                    .dagger(),
                pc(|n| 4 * n - 2, |n| 6 * n - 4, |n, i| 14 * (i - n) + 15),
            ],
            min_pos: vec![
                pc(|_| 0, |n| 2 * n - 1, |_, i| 14 * i),
                pc(|n| 2 * n, |n| 4 * n - 2, |n, i| 14 * (n + i / 2) - 10).even(),
                pc(|n| 2 * n, |n| 4 * n - 2, |n, i| 14 * (n + (i - 1) / 2)).odd(),
                pc(|n| 4 * n - 1, |n| 6 * n - 3, |n, i| 14 * (i - n) + 4),
            ],
            rise: vec![
                pc(|_| 0, |n| 4 * n - 3, |_, _| 1),
                pc(|n| 4 * n - 2, |n| 5 * n - 3, |_, _| 2),
                pc(|n| 5 * n - 2, |n| 6 * n - 4, |_, _| 3).dagger(),
            ],
            fall: vec![
                pc(|_| 0, |n| n - 2, |_, _| 3).dagger(),
                pc(|n| n - 1, |n| 2 * n - 2, |_, _| 2),
                pc(|n| 2 * n - 1, |n| 6 * n - 4, |_, _| 1),
            ],
            max_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| 1 - 2 * i),
                pc(|n| n, |n| 2 * n - 1, |n, i| 2 - n - i),
                pc(|n| 2 * n, |n| 4 * n - 4, |n, _| 3 - 3 * n).dagger(),
                pc(|n| 4 * n - 3, |n| 5 * n - 3, |n, i| 6 - 7 * n + i),
                pc(|n| 5 * n - 2, |n| 6 * n - 4, |n, i| 9 - 12 * n + 2 * i).dagger(),
            ],
            min_val: vec![
                pc(|_| 0, |n| n - 1, |_, i| -2 * i),
                pc(|n| n, |n| 2 * n - 1, |n, i| 1 - n - i).dagger(),
                pc(|n| 2 * n, |n| 4 * n - 3, |n, _| 2 - 3 * n).dagger(),
                pc(|n| 4 * n - 2, |n| 5 * n - 2, |n, i| 4 - 7 * n + i),
                pc(|n| 5 * n - 1, |n| 6 * n - 3, |n, i| 6 - 12 * n + 2 * i),
            ],
        },
        (2, 7, 5) => Pieces {
            max_pos: vec![
                pc(|_| 0, |n| 2 * n, |_, i| 14 * i + 1),
                pc(|n| 2 * n + 1, |n| 4 * n + 1, |n, i| 14 * (n + i / 2) + 1).even(),
                pc(
                    |n| 2 * n + 1,
                    |n| 4 * n + 1,
                    |n, i| 14 * (n + (i - 1) / 2) + 11,
                )
                .odd(),
                pc(|n| 4 * n + 2, |n| 6 * n + 1, |n, i| 14 * (i - n) + 1),
            ],
            min_pos: vec![
                pc(|_| 0, |n| 2 * n, |_, i| 14 * i),
                pc(|n| 2 * n + 1, |n| 4 * n + 2, |n, i| 14 * (n + i / 2)).even(),
                pc(
                    |n| 2 * n + 1,
                    |n| 4 * n + 2,
                    |n, i| 14 * (n + (i - 1) / 2) + 10,
                )
                .odd(),
                pc(|n| 4 * n + 3, |n| 6 * n + 2, |n, i| 14 * (i - n) - 8),
            ],
            rise: vec![
                pc(|_| 0, |n| 4 * n + 1, |_, _| 1),
                pc(|n| 4 * n + 2, |n| 5 * n + 1, |_, _| 2),
                pc(|n| 5 * n + 2, |n| 6 * n + 1, |_, _| 3),
            ],
            fall: vec![
                pc(|_| 0, |n| n - 1, |_, _| 3),
                pc(|n| n, |n| 2 * n - 1, |_, _| 2),
                pc(|n| 2 * n, |n| 6 * n + 1, |_, _| 1),
            ],
            max_val: vec![
                pc(|_| 0, |n| n, |_, i| 1 - 2 * i),
                pc(|n| n + 1, |n| 2 * n - 1, |n, i| 1 - n - i),
                pc(|n| 2 * n, |n| 4 * n + 1, |n, _| 1 - 3 * n),
                pc(|n| 4 * n + 2, |n| 5 * n + 1, |n, i| -7 * n + i),
                pc(|n| 5 * n + 2, |n| 6 * n + 1, |n, i| -1 - 12 * n + 2 * i),
            ],
            min_val: vec![
                pc(|_| 0, |n| n, |_, i| -2 * i),
                pc(|n| n + 1, |n| 2 * n - 1, |n, i| -n - i).dagger(),
                pc(|n| 2 * n, |n| 4 * n + 2, |n, _| -3 * n),
                pc(|n| 4 * n + 3, |n| 5 * n + 2, |n, i| -2 - 7 * n + i),
                pc(|n| 5 * n + 3, |n| 6 * n + 2, |n, i| -4 - 12 * n + 2 * i),
            ],
        },
        _ => return None,
    };
    Some(s)
}

/// The tabulated extrema of `Sigma(2,5,10n+-3)`, `Sigma(2,7,14n+-3)` or
/// `Sigma(2,7,14n+-5)`, cell by cell as printed; the first matching piece
/// wins and skipped dagger cells are `None`.
pub fn lemma57_extrema(f: &FamilyId, n: i64) -> Result<ExtremaTable> {
    let s = pieces(f).ok_or_else(|| Error::InvalidArgs(format!("no extrema table for {f}")))?;
    if n < 1 {
        return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
    }
    let nmax = count(&s.max_pos, n);
    let nmin = count(&s.min_pos, n);
    let row = |pieces: &[Piece], len: i64| (0..len).map(|i| eval(pieces, n, i)).collect();
    Ok(ExtremaTable {
        max_pos: row(&s.max_pos, nmax),
        min_pos: row(&s.min_pos, nmin),
        max_val: row(&s.max_val, nmax),
        min_val: row(&s.min_val, nmin),
        rise: row(&s.rise, nmax),
        fall: row(&s.fall, nmax),
    })
}

/// `(row, i)` cells covered by two active pieces that disagree.
pub fn lemma57_conflicts(f: &FamilyId, n: i64) -> Vec<(&'static str, i64)> {
    let Some(s) = pieces(f) else { return Vec::new() };
    let mut out = Vec::new();
    for (name, pieces) in s.rows() {
        for i in 0..count(pieces, n).max(1) {
            let vals: Vec<i64> = pieces
                .iter()
                .filter(|p| p.covers(n, i))
                .map(|p| (p.f)(n, i))
                .collect();
            if vals.windows(2).any(|w| w[0] != w[1]) {
                out.push((name, i));
            }
        }
    }
    out
}

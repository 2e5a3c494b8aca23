//! Graded roots and the HF+ module they encode.
//!
//! The graded root of a reduced tau sequence is its sublevel-set merge tree:
//! leaves are the local minima, and each local maximum is the level at which
//! two branches join. Every leaf except one (the trunk, a global minimum)
//! eventually dies by merging into a branch with a lower (older) minimum. A
//! leaf at value `v` dying at level `M` contributes a finite tower of length
//! `M - v` whose bottom grading is `2v` plus a global shift.
//!
//! All modules reported here are for `-Sigma`, the orientation reversal of the
//! Seifert manifold bounding the negative definite plumbing.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{dedekind_euclid, int, to_i64, Rational};
use crate::seifert::SeifertInvariants;
use crate::tau::{reduce, tau_sequence_with_margin, ReducedTau};

/// A finite tower `T+_bottom(length)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tower {
    pub bottom: i64,
    pub length: i64,
}

/// `HF+ = T+_d ⊕ HF+_red`, with `HF+_red` a multiset of finite towers.
///
/// Every module in scope has trivial odd part, so only the even towers are
/// stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HFPlusModule {
    pub d: i64,
    towers: BTreeMap<Tower, u64>,
}

impl HFPlusModule {
    pub fn new(d: i64) -> Self {
        Self {
            d,
            towers: BTreeMap::new(),
        }
    }

    /// Adds `mult` copies of `T+_bottom(length)`; zero multiplicity is a no-op.
    pub fn add(&mut self, bottom: i64, length: i64, mult: u64) {
        if mult > 0 {
            *self.towers.entry(Tower { bottom, length }).or_insert(0) += mult;
        }
    }

    pub fn with(mut self, bottom: i64, length: i64, mult: u64) -> Self {
        self.add(bottom, length, mult);
        self
    }

    /// Towers with multiplicities, sorted by `(bottom, length)`.
    pub fn towers(&self) -> impl Iterator<Item = (Tower, u64)> + '_ {
        self.towers.iter().map(|(t, m)| (*t, *m))
    }

    pub fn tower_count(&self) -> u64 {
        self.towers.values().sum()
    }

    /// Total rank of `HF+_red`.
    pub fn reduced_rank(&self) -> i64 {
        self.towers.iter().map(|(t, &m)| t.length * m as i64).sum()
    }

    pub fn odd_rank(&self) -> u64 {
        0
    }

    /// Shifts every grading (d and all tower bottoms) by `delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        let mut out = Self::new(self.d + delta);
        for (t, m) in self.towers() {
            out.add(t.bottom + delta, t.length, m);
        }
        out
    }
}

impl fmt::Display for HFPlusModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d = {}", self.d)?;
        write!(f, "HF+_red = HF+_even = ")?;
        if self.towers.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .towers()
            .map(|(t, m)| {
                if m == 1 {
                    format!("T+_{}({})", t.bottom, t.length)
                } else {
                    format!("T+_{}({})^{}", t.bottom, t.length, m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Leaf {
    pub value: i64,
    /// Position in the tau function (first index of the plateau).
    pub index: usize,
}

/// Leaf `leaf` joins the branch of leaf `into` at `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Merge {
    pub leaf: usize,
    pub into: usize,
    pub level: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRoot {
    pub leaves: Vec<Leaf>,
    pub merges: Vec<Merge>,
    pub trunk: usize,
}

/// Graded root of the reduced tau sequence.
pub fn build_root(r: &ReducedTau) -> Result<GradedRoot> {
    let values = r.values();
    let indices: Vec<usize> = r.extrema.iter().map(|e| e.start).collect();
    build_root_indexed(&values, &indices)
}

/// Graded root of a bare alternating sequence `m0, M0, m1, ..., mt`.
pub fn build_root_from_values(values: &[i64]) -> Result<GradedRoot> {
    let indices: Vec<usize> = (0..values.len()).collect();
    build_root_indexed(values, &indices)
}

fn build_root_indexed(values: &[i64], indices: &[usize]) -> Result<GradedRoot> {
    check_alternating(values)?;
    let leaves: Vec<Leaf> = values
        .iter()
        .zip(indices)
        .step_by(2)
        .map(|(&value, &index)| Leaf { value, index })
        .collect();

    // Open branches left to right, separated by maxima that strictly decrease
    // from bottom to top of the stack.
    let mut branches: Vec<usize> = vec![0];
    let mut separators: Vec<i64> = Vec::new();
    let mut merges = Vec::with_capacity(leaves.len().saturating_sub(1));

    let merge_top = |branches: &mut Vec<usize>, merges: &mut Vec<Merge>, level: i64| {
        let right = branches.pop().expect("separator without right branch");
        let left = branches.pop().expect("separator without left branch");
        // elder rule; on ties the left (earlier) branch survives
        let (survivor, dead) = if leaves[right].value < leaves[left].value {
            (right, left)
        } else {
            (left, right)
        };
        merges.push(Merge {
            leaf: dead,
            into: survivor,
            level,
        });
        branches.push(survivor);
    };

    for (k, &max) in values.iter().enumerate().skip(1).step_by(2) {
        while separators.last().is_some_and(|&s| s <= max) {
            let s = separators.pop().unwrap();
            merge_top(&mut branches, &mut merges, s);
        }
        separators.push(max);
        branches.push(k.div_ceil(2));
    }
    while let Some(s) = separators.pop() {
        merge_top(&mut branches, &mut merges, s);
    }
    debug_assert_eq!(branches.len(), 1);
    Ok(GradedRoot {
        leaves,
        merges,
        trunk: branches[0],
    })
}

fn check_alternating(values: &[i64]) -> Result<()> {
    if values.len().is_multiple_of(2) {
        return Err(Error::MalformedSequence(format!(
            "expected an odd number of extrema, got {}",
            values.len()
        )));
    }
    for (k, w) in values.windows(2).enumerate() {
        let ok = if k % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] };
        if !ok {
            return Err(Error::MalformedSequence(format!(
                "not alternating at position {k}: {} then {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

impl GradedRoot {
    pub fn trunk_value(&self) -> i64 {
        self.leaves[self.trunk].value
    }

    /// `(leaf value, merge level)` for every non-trunk leaf, sorted.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        let mut p: Vec<(i64, i64)> = self
            .merges
            .iter()
            .map(|m| (self.leaves[m.leaf].value, m.level))
            .collect();
        p.sort_unstable();
        p
    }

    fn merge_of(&self, leaf: usize) -> Option<&Merge> {
        self.merges.iter().find(|m| m.leaf == leaf)
    }

    /// Highest merge level, or the trunk value when nothing merges.
    pub fn top_level(&self) -> i64 {
        self.merges
            .iter()
            .map(|m| m.level)
            .max()
            .unwrap_or(self.trunk_value())
    }

    /// Branch owning the vertex at `level` above `leaf`.
    fn owner(&self, leaf: usize, level: i64) -> usize {
        let mut cur = leaf;
        while let Some(m) = self.merge_of(cur) {
            if level < m.level {
                break;
            }
            cur = m.into;
        }
        cur
    }

    /// DOT rendering: one vertex per (branch, level), labelled with its grading.
    pub fn to_dot(&self, name: &str, shift: i64) -> String {
        let top = self.top_level() + 1;
        let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
        out.push_str("  rankdir=BT;\n");
        for (id, leaf) in self.leaves.iter().enumerate() {
            let end = self.merge_of(id).map_or(top, |m| m.level);
            for t in leaf.value..end {
                let _ = writeln!(
                    out,
                    "  n{id}_{} [label=\"{}\"];",
                    level_tag(t),
                    2 * t + shift
                );
            }
            for t in leaf.value..end - 1 {
                let _ = writeln!(
                    out,
                    "  n{id}_{} -- n{id}_{};",
                    level_tag(t),
                    level_tag(t + 1)
                );
            }
            if let Some(m) = self.merge_of(id) {
                let parent = self.owner(m.into, m.level);
                let _ = writeln!(
                    out,
                    "  n{id}_{} -- n{parent}_{};",
                    level_tag(m.level - 1),
                    level_tag(m.level)
                );
            }
        }
        let _ = writeln!(out, "  infinity [label=\"...\", shape=none];");
        let _ = writeln!(out, "  n{}_{} -- infinity;", self.trunk, level_tag(top - 1));
        out.push_str("}\n");
        out
    }

    /// Text picture: one column per branch (trunk first), one row per level,
    /// gradings on the left. `*` marks a leaf, `|` a branch vertex and `+`
    /// the level at which a branch joins its parent.
    pub fn to_ascii(&self, shift: i64) -> String {
        let mut cols: Vec<usize> = vec![self.trunk];
        let mut rest: Vec<usize> = (0..self.leaves.len())
            .filter(|&i| i != self.trunk)
            .collect();
        rest.sort_by_key(|&i| self.leaves[i].index);
        cols.extend(rest);

        let bottom = self.trunk_value();
        let top = self.top_level();
        let width = [2 * bottom + shift, 2 * top + shift]
            .iter()
            .map(|g| g.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = writeln!(out, "{:>width$}  |", "");
        for t in (bottom..=top).rev() {
            let _ = write!(out, "{:>width$} ", 2 * t + shift);
            for &c in &cols {
                let leaf = self.leaves[c];
                let end = self.merge_of(c).map(|m| m.level);
                let ch = match end {
                    Some(m) if t == m => '+',
                    Some(m) if t > m => ' ',
                    _ if t == leaf.value => '*',
                    _ if t > leaf.value => '|',
                    _ => ' ',
                };
                out.push(' ');
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }
}

fn level_tag(t: i64) -> String {
    if t < 0 {
        format!("m{}", -t)
    } else {
        t.to_string()
    }
}

/// `-(eps^2 e + e + 5 - 12 sum s(b_i, a_i)) / 4`, the grading shift with
/// `d(-Sigma) = 2 min tau + shift`.
pub fn grading_shift(s: &SeifertInvariants) -> Result<i64> {
    let s = s.normalized();
    let e = s.orbifold_e();
    let eps = s.orbifold_epsilon()?;
    let mut dedekind = Rational::zero();
    for arm in &s.arms {
        dedekind += dedekind_euclid(arm.b, arm.a)?;
    }
    let k = &eps * &eps * &e + &e + int(5) - int(12) * dedekind;
    let shift = -k / int(4);
    match to_i64(&shift) {
        Some(v) if v % 2 == 0 => Ok(v),
        _ => Err(Error::NonIntegralShift(format!("{shift} for {s}"))),
    }
}

/// Assembles `HF+(-Sigma)` from the root: `d = 2 * trunk + shift`, and one
/// tower `T+_{2v + shift}(M - v)` per leaf `v` merging at `M`.
pub fn assemble_hf(root: &GradedRoot, shift: i64) -> HFPlusModule {
    let mut hf = HFPlusModule::new(2 * root.trunk_value() + shift);
    for (v, level) in root.pairs() {
        hf.add(2 * v + shift, level - v, 1);
    }
    hf
}

/// `d(-Sigma) = 2 min tau - (eps^2 e + e + 5 - 12 sum s(b_i, a_i)) / 4`.
pub fn d_invariant_direct(s: &SeifertInvariants) -> Result<i64> {
    let tau = tau_sequence_with_margin(s, 0)?;
    Ok(2 * tau.min() + grading_shift(s)?)
}

/// Full pipeline: tau, reduction, graded root, shift.
pub fn compute_hf(s: &SeifertInvariants) -> Result<HFPlusModule> {
    compute_hf_with_margin(s, 0)
}

pub fn compute_hf_with_margin(s: &SeifertInvariants, margin: usize) -> Result<HFPlusModule> {
    let tau = tau_sequence_with_margin(s, margin)?;
    let root = build_root(&reduce(&tau))?;
    Ok(assemble_hf(&root, grading_shift(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::brieskorn_seifert;

    fn hf(a: i64, b: i64, c: i64) -> HFPlusModule {
        compute_hf(&brieskorn_seifert(a, b, c).unwrap()).unwrap()
    }

    /// Cancels the lowest maximum against its higher neighbouring minimum until
    /// one minimum is left.
    fn brute_pairs(values: &[i64]) -> (i64, Vec<(i64, i64)>) {
        let mut v = values.to_vec();
        let mut pairs = Vec::new();
        while v.len() > 1 {
            let k = (1..v.len()).step_by(2).min_by_key(|&k| (v[k], k)).unwrap();
            let (left, right) = (v[k - 1], v[k + 1]);
            if right >= left {
                pairs.push((right, v[k]));
                v.drain(k..=k + 1);
            } else {
                pairs.push((left, v[k]));
                v.drain(k - 1..=k);
            }
        }
        pairs.sort_unstable();
        (v[0], pairs)
    }

    #[test]
    fn root_examples() {
        let r = build_root_from_values(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(r.trunk_value(), 0);
        assert_eq!(r.trunk, 0);
        assert_eq!(r.pairs(), vec![(0, 1), (0, 1)]);

        let r = build_root_from_values(&[0]).unwrap();
        assert_eq!(r.trunk_value(), 0);
        assert!(r.pairs().is_empty());

        let seq = [0, 1, -2, -1, -3, -2, -3, -2, -3, -2, -3, -1, -2, 1, 0];
        let r = build_root_from_values(&seq).unwrap();
        assert_eq!(r.trunk_value(), -3);
        assert_eq!(r.leaves[r.trunk].index, 4);
        assert_eq!(
            r.pairs(),
            vec![
                (-3, -2),
                (-3, -2),
                (-3, -2),
                (-2, -1),
                (-2, -1),
                (0, 1),
                (0, 1)
            ]
        );
    }

    #[test]
    fn malformed_sequences() {
        assert!(matches!(
            build_root_from_values(&[]),
            Err(Error::MalformedSequence(_))
        ));
        assert!(build_root_from_values(&[0, 1]).is_err());
        assert!(build_root_from_values(&[0, 0, 0]).is_err());
        assert!(build_root_from_values(&[0, 1, 2]).is_err());
    }

    #[test]
    fn stack_pairing_matches_cancellation() {
        let seqs: [&[i64]; 5] = [
            &[0, 5, 3, 4, 1],
            &[0, 1, -2, -1, -3, -2, -3, -2, -3, -2, -3, -1, -2, 1, 0],
            &[3, 9, 1, 4, 2, 9, 0, 7, 5, 8, 6],
            &[0, 2, 0, 2, 0, 2, 0],
            &[5, 6, 4, 7, 3, 8, 2],
        ];
        for seq in seqs {
            let r = build_root_from_values(seq).unwrap();
            let (trunk, pairs) = brute_pairs(seq);
            assert_eq!(r.trunk_value(), trunk);
            assert_eq!(r.pairs(), pairs, "{seq:?}");
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(
            grading_shift(&brieskorn_seifert(2, 5, 9).unwrap()).unwrap(),
            -2
        );
        assert_eq!(
            grading_shift(&brieskorn_seifert(2, 5, 13).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            grading_shift(&brieskorn_seifert(2, 7, 17).unwrap()).unwrap(),
            6
        );
    }

    #[test]
    fn modules() {
        assert_eq!(hf(2, 5, 9), HFPlusModule::new(-2).with(-2, 1, 2));
        assert_eq!(
            hf(2, 5, 13),
            HFPlusModule::new(-2).with(-2, 1, 1).with(0, 1, 2)
        );
        assert_eq!(
            hf(2, 7, 17),
            HFPlusModule::new(0)
                .with(0, 1, 3)
                .with(2, 1, 2)
                .with(6, 1, 2)
        );
        assert_eq!(hf(2, 3, 5), HFPlusModule::new(-2));
    }

    #[test]
    fn direct_d() {
        let d = |a, b, c| d_invariant_direct(&brieskorn_seifert(a, b, c).unwrap()).unwrap();
        assert_eq!(d(2, 5, 9), -2);
        assert_eq!(d(2, 7, 19), 0);
        // Poincare sphere: d(Sigma(2,3,5)) = 2, so d(-Sigma(2,3,5)) = -2
        assert_eq!(d(2, 3, 5), -2);
    }

    #[test]
    fn rank_and_display() {
        let m = hf(2, 7, 17);
        assert_eq!(m.reduced_rank(), 7);
        assert_eq!(m.tower_count(), 7);
        assert_eq!(m.odd_rank(), 0);
        assert_eq!(
            m.to_string(),
            "d = 0\nHF+_red = HF+_even = T+_0(1)^3 ⊕ T+_2(1)^2 ⊕ T+_6(1)^2"
        );
        assert_eq!(
            HFPlusModule::new(-2).to_string(),
            "d = -2\nHF+_red = HF+_even = 0"
        );
    }

    #[test]
    fn renderings() {
        let s = brieskorn_seifert(2, 7, 17).unwrap();
        let root = build_root(&reduce(&crate::tau::tau_sequence(&s).unwrap())).unwrap();
        let ascii = root.to_ascii(6);
        let lines: Vec<&str> = ascii.lines().collect();
        // header plus levels -3..=1
        assert_eq!(lines.len(), 6);
        assert!(lines[5].trim_start().starts_with("0  *"));
        let dot = root.to_dot("-Sigma(2,7,17)", 6);
        assert!(crate::dot::check(&dot).is_ok());
        assert!(dot.contains("infinity"));
    }
}

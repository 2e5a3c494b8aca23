//! Seifert invariants `(e0; (a1, b1), ..., (am, bm))` of Seifert fibered
//! integer homology spheres, with constructors for Brieskorn spheres and for
//! `±1/n` surgeries on torus knots.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{gcd, int, mod_inverse, ratio, Rational};

/// One exceptional fiber `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arm {
    pub a: i64,
    pub b: i64,
}

impl Arm {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertInvariants {
    pub e0: i64,
    pub arms: Vec<Arm>,
}

impl SeifertInvariants {
    /// Builds invariants from raw data and checks they describe an integer
    /// homology sphere with `e < 0`.
    pub fn new(e0: i64, arms: Vec<Arm>) -> Result<Self> {
        let s = Self { e0, arms };
        if !s.validate()? {
            return Err(Error::MalformedInput(format!(
                "{s} is not an integer homology sphere with e < 0"
            )));
        }
        Ok(s)
    }

    /// Raw data, no homology-sphere check. Arms may carry any positive `b`.
    pub fn from_raw(e0: i64, arms: Vec<Arm>) -> Self {
        Self { e0, arms }
    }

    pub fn m(&self) -> usize {
        self.arms.len()
    }

    /// `a1 * ... * am`, checked.
    pub fn product(&self) -> Result<i128> {
        self.arms.iter().try_fold(1i128, |acc, arm| {
            acc.checked_mul(i128::from(arm.a))
                .ok_or(Error::Overflow("product of the a_i"))
        })
    }

    /// `Ok(true)` iff `-1 = e0 A + sum b_i A / a_i` and `e < 0`.
    ///
    /// Structural problems (`a_i < 2`, `b_i` outside `(0, a_i)`, no arms) are
    /// reported as `MalformedInput`.
    pub fn validate(&self) -> Result<bool> {
        if self.arms.is_empty() {
            return Err(Error::MalformedInput("no exceptional fibers".into()));
        }
        for arm in &self.arms {
            if arm.a < 2 {
                return Err(Error::MalformedInput(format!("a = {} must be >= 2", arm.a)));
            }
            if !(0 < arm.b && arm.b < arm.a) {
                return Err(Error::MalformedInput(format!(
                    "b = {} must satisfy 0 < b < a = {}",
                    arm.b, arm.a
                )));
            }
        }
        let a = self.product()?;
        let mut total = i128::from(self.e0)
            .checked_mul(a)
            .ok_or(Error::Overflow("e0 * A"))?;
        for arm in &self.arms {
            total += i128::from(arm.b) * (a / i128::from(arm.a));
        }
        Ok(total == -1 && self.orbifold_e() < Rational::zero())
    }

    /// `e = e0 + sum b_i / a_i`.
    pub fn orbifold_e(&self) -> Rational {
        self.arms
            .iter()
            .fold(int(self.e0), |acc, arm| acc + ratio(arm.b, arm.a))
    }

    /// `epsilon = (2 - m + sum 1/a_i) / e`.
    pub fn orbifold_epsilon(&self) -> Result<Rational> {
        let e = self.orbifold_e();
        if e.is_zero() {
            return Err(Error::InvalidArgs("e = 0".into()));
        }
        let chi = self
            .arms
            .iter()
            .fold(int(2 - self.m() as i64), |acc, arm| acc + ratio(1, arm.a));
        Ok(chi / e)
    }

    /// Canonical representative with every `0 < b_i < a_i`; `e0` absorbs the
    /// difference so that `e` is unchanged.
    pub fn normalized(&self) -> Self {
        let mut e0 = self.e0;
        let arms = self
            .arms
            .iter()
            .map(|arm| {
                let shift = (arm.b - 1).div_euclid(arm.a);
                e0 += shift;
                Arm::new(arm.a, arm.b - shift * arm.a)
            })
            .collect();
        Self { e0, arms }
    }

    /// The equivalent representative with `b_i -> b_i + a_i`, `e0 -> e0 - 1`.
    pub fn shift_arm(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.arms[i].b += s.arms[i].a;
        s.e0 -= 1;
        s
    }

    /// The multiplicities `a_i`, as given.
    pub fn multiplicities(&self) -> Vec<i64> {
        self.arms.iter().map(|arm| arm.a).collect()
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e0={} arms=", self.e0)?;
        for (i, arm) in self.arms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}/{}", arm.a, arm.b)?;
        }
        Ok(())
    }
}

/// Parses the text form `e0=-2 arms=2/1,5/3,9/8`.
impl FromStr for SeifertInvariants {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut e0 = None;
        let mut arms = None;
        for tok in s.split_whitespace() {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
            match key {
                "e0" => {
                    e0 = Some(
                        value
                            .parse::<i64>()
                            .map_err(|e| Error::Parse(format!("bad e0 `{value}`: {e}")))?,
                    )
                }
                "arms" => arms = Some(parse_arms(value)?),
                _ => return Err(Error::Parse(format!("unknown key `{key}`"))),
            }
        }
        let e0 = e0.ok_or_else(|| Error::Parse("missing e0=".into()))?;
        let arms = arms.ok_or_else(|| Error::Parse("missing arms=".into()))?;
        Self::new(e0, arms)
    }
}

fn parse_arms(text: &str) -> Result<Vec<Arm>> {
    text.split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("arm `{pair}` is not a/b")))?;
            let a = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad a in `{pair}`")))?;
            let b = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad b in `{pair}`")))?;
            Ok(Arm::new(a, b))
        })
        .collect()
}

/// Seifert invariants of the Brieskorn sphere `Sigma(a1, ..., am)` for
/// pairwise coprime `a_i >= 2`.
pub fn brieskorn_general(a: &[i64]) -> Result<SeifertInvariants> {
    if a.len() < 3 {
        return Err(Error::InvalidArgs(format!(
            "need at least 3 multiplicities, got {}",
            a.len()
        )));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 2) {
        return Err(Error::InvalidArgs(format!(
            "multiplicity {bad} must be >= 2"
        )));
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if gcd(a[i], a[j]) != 1 {
                return Err(Error::NotCoprime(format!("gcd({}, {}) != 1", a[i], a[j])));
            }
        }
    }
    let total = a.iter().try_fold(1i128, |acc, &x| {
        acc.checked_mul(i128::from(x))
            .ok_or(Error::Overflow("product of the a_i"))
    })?;
    let mut arms = Vec::with_capacity(a.len());
    let mut sum = 0i128;
    for &ai in a {
        let cofactor = total / i128::from(ai);
        let residue = (cofactor % i128::from(ai)) as i64;
        // b * cofactor = -1 (mod a_i)
        let b = (ai - mod_inverse(residue, ai)?) % ai;
        sum += i128::from(b) * cofactor;
        arms.push(Arm::new(ai, b));
    }
    let numerator = -1 - sum;
    debug_assert_eq!(numerator % total, 0);
    let e0 = i64::try_from(numerator / total).map_err(|_| Error::Overflow("e0"))?;
    SeifertInvariants::new(e0, arms)
}

pub fn brieskorn_seifert(a1: i64, a2: i64, a3: i64) -> Result<SeifertInvariants> {
    brieskorn_general(&[a1, a2, a3])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurgerySign {
    /// `+1/n` surgery, giving `-Sigma(p, q, pqn - 1)`.
    Plus,
    /// `-1/n` surgery, giving `Sigma(p, q, pqn + 1)`.
    Minus,
}

/// Brieskorn parameters of `∓` the `±1/n` surgery on `T_{p,q}`.
pub fn surgery_target(p: i64, q: i64, n: i64, sign: SurgerySign) -> Result<(i64, i64, i64)> {
    if p < 2 || q < 2 || n < 1 {
        return Err(Error::InvalidArgs(format!(
            "need p, q >= 2 and n >= 1, got ({p}, {q}, {n})"
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::InvalidArgs(format!("gcd({p}, {q}) != 1")));
    }
    let pqn = p
        .checked_mul(q)
        .and_then(|x| x.checked_mul(n))
        .ok_or(Error::Overflow("pqn"))?;
    Ok(match sign {
        SurgerySign::Plus => (p, q, pqn - 1),
        SurgerySign::Minus => (p, q, pqn + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn si(e0: i64, arms: &[(i64, i64)]) -> SeifertInvariants {
        SeifertInvariants::from_raw(e0, arms.iter().map(|&(a, b)| Arm::new(a, b)).collect())
    }

    #[test]
    fn validate_examples() {
        assert!(si(-2, &[(2, 1), (5, 3), (9, 8)]).validate().unwrap());
        assert!(si(-1, &[(2, 1), (5, 1), (7, 2)]).validate().unwrap());
        assert!(!si(-1, &[(2, 1), (5, 1), (7, 3)]).validate().unwrap());
        assert!(si(-1, &[(1, 1), (5, 1), (7, 3)]).validate().is_err());
        assert!(si(-1, &[(2, 2), (5, 1), (7, 3)]).validate().is_err());
        assert!(si(-1, &[]).validate().is_err());
        // e > 0 with the identity holding for -1 is impossible, but +1 fails too
        assert!(!si(0, &[(2, 1), (3, 1), (5, 1)]).validate().unwrap());
    }

    #[test]
    fn orbifold_quantities() {
        let s259 = si(-2, &[(2, 1), (5, 3), (9, 8)]);
        assert_eq!(s259.orbifold_e(), ratio(-1, 90));
        assert_eq!(s259.orbifold_epsilon().unwrap(), int(17));
        let s2513 = si(-2, &[(2, 1), (5, 4), (13, 9)]);
        assert_eq!(s2513.orbifold_e(), ratio(-1, 130));
        assert_eq!(s2513.orbifold_epsilon().unwrap(), int(29));
        let s235 = si(-2, &[(2, 1), (3, 2), (5, 4)]);
        assert_eq!(s235.orbifold_e(), ratio(-1, 30));
        // (2 - 3 + 1/2 + 1/7 + 1/17) / (-1/238) = 71
        let s2717 = si(-1, &[(2, 1), (7, 1), (17, 6)]);
        assert_eq!(s2717.orbifold_epsilon().unwrap(), int(71));
    }

    #[test]
    fn brieskorn_examples() {
        assert_eq!(
            brieskorn_seifert(2, 5, 9).unwrap(),
            si(-2, &[(2, 1), (5, 3), (9, 8)])
        );
        assert_eq!(
            brieskorn_seifert(2, 5, 7).unwrap(),
            si(-1, &[(2, 1), (5, 1), (7, 2)])
        );
        assert_eq!(
            brieskorn_seifert(2, 7, 19).unwrap(),
            si(-1, &[(2, 1), (7, 2), (19, 4)])
        );
        assert_eq!(
            brieskorn_seifert(2, 3, 5).unwrap(),
            si(-2, &[(2, 1), (3, 2), (5, 4)])
        );
        assert!(matches!(
            brieskorn_seifert(2, 4, 5),
            Err(Error::NotCoprime(_))
        ));
        assert!(brieskorn_seifert(1, 4, 5).is_err());
    }

    #[test]
    fn brieskorn_reproduces_closed_form_lists() {
        for n in 1..=5i64 {
            let cases = [
                (
                    (2, 5, 10 * n - 3),
                    si(-1, &[(2, 1), (5, 1), (10 * n - 3, 3 * n - 1)]),
                ),
                (
                    (2, 5, 10 * n + 3),
                    si(-2, &[(2, 1), (5, 4), (10 * n + 3, 7 * n + 2)]),
                ),
                (
                    (2, 7, 14 * n - 5),
                    si(-2, &[(2, 1), (7, 5), (14 * n - 5, 11 * n - 4)]),
                ),
                (
                    (2, 7, 14 * n - 3),
                    si(-2, &[(2, 1), (7, 6), (14 * n - 3, 9 * n - 2)]),
                ),
                (
                    (2, 7, 14 * n + 3),
                    si(-1, &[(2, 1), (7, 1), (14 * n + 3, 5 * n + 1)]),
                ),
                (
                    (2, 7, 14 * n + 5),
                    si(-1, &[(2, 1), (7, 2), (14 * n + 5, 3 * n + 1)]),
                ),
            ];
            for ((a1, a2, a3), expected) in cases {
                assert_eq!(brieskorn_seifert(a1, a2, a3).unwrap(), expected, "n = {n}");
            }
        }
    }

    #[test]
    fn brieskorn_reproduces_pqn_minus_one_data() {
        for (p, q) in [(2i64, 3i64), (2, 5), (2, 7), (3, 4), (3, 5)] {
            let pp = mod_inverse(q, p).unwrap();
            let qq = mod_inverse(p, q).unwrap();
            for n in 1..=3 {
                let r = p * q * n - 1;
                let expected = si(-2, &[(p, pp), (q, qq), (r, p * q * n - n - 1)]);
                assert_eq!(brieskorn_seifert(p, q, r).unwrap(), expected);
            }
        }
    }

    #[test]
    fn permutation_keeps_e0() {
        let a = brieskorn_seifert(2, 7, 17).unwrap();
        let b = brieskorn_seifert(17, 2, 7).unwrap();
        assert_eq!(a.e0, b.e0);
        let mut arms = b.arms.clone();
        arms.sort();
        assert_eq!(arms, a.arms);
    }

    #[test]
    fn normalization_round_trip() {
        let s = brieskorn_seifert(2, 5, 9).unwrap();
        let shifted = s.shift_arm(2).shift_arm(0);
        assert_eq!(shifted.e0, s.e0 - 2);
        assert_eq!(shifted.orbifold_e(), s.orbifold_e());
        assert_eq!(shifted.normalized(), s);
    }

    #[test]
    fn surgery_targets() {
        assert_eq!(
            surgery_target(2, 5, 1, SurgerySign::Plus).unwrap(),
            (2, 5, 9)
        );
        assert_eq!(
            surgery_target(2, 5, 1, SurgerySign::Minus).unwrap(),
            (2, 5, 11)
        );
        assert_eq!(
            surgery_target(3, 4, 2, SurgerySign::Plus).unwrap(),
            (3, 4, 23)
        );
        assert!(surgery_target(2, 4, 1, SurgerySign::Plus).is_err());
        assert!(surgery_target(2, 5, 0, SurgerySign::Plus).is_err());
    }

    #[test]
    fn text_form() {
        let s: SeifertInvariants = "e0=-2 arms=2/1,5/3,9/8".parse().unwrap();
        assert_eq!(s, brieskorn_seifert(2, 5, 9).unwrap());
        assert_eq!(s.to_string(), "e0=-2 arms=2/1,5/3,9/8");
        assert!("e0=-2".parse::<SeifertInvariants>().is_err());
        assert!("e0=x arms=2/1".parse::<SeifertInvariants>().is_err());
        assert!("e0=-1 arms=2/1,5/1,7/3"
            .parse::<SeifertInvariants>()
            .is_err());
        assert!("arms=2/1,5/1,7/2 e0=-1 extra=3"
            .parse::<SeifertInvariants>()
            .is_err());
    }
}

//! `HF+` of `1/n` and `-1/n` surgery on torus knots.

use num_integer::Integer;

use super::{ClosedForm, SummandKind};
use crate::error::{Error, Result};
use crate::gradedroot::HFPlusModule;
use crate::semigroup::TorusKnotSemigroup;

fn setup(p: i64, q: i64, n: i64) -> Result<TorusKnotSemigroup> {
    if n < 1 {
        return Err(Error::InvalidArgs(format!("need n >= 1, got {n}")));
    }
    TorusKnotSemigroup::new(p, q)
}

/// `HF+(-S^3_{-1/n}(T_{p,q})) = HF+(-Sigma(p,q,pqn+1))`:
/// `d = 0`, `T+_0(a_{g-1})^n` and, for `i = 1..n(g-1)`,
/// `T+_{(floor(i/n)+1)(i mod n + i)}(a_{g-1+ceil(i/n)})^2`.
pub fn eq1_closed_form(p: i64, q: i64, n: i64) -> Result<ClosedForm> {
    let s = setup(p, q, n)?;
    let g = s.genus();
    let mut c = ClosedForm::new(0);
    c.push(SummandKind::Base, 0, s.alpha(g - 1), n)?;
    for i in 1..=n * (g - 1) {
        let bottom = (Integer::div_floor(&i, &n) + 1) * (i.mod_floor(&n) + i);
        c.push(
            SummandKind::Indexed,
            bottom,
            s.alpha(g - 1 + Integer::div_ceil(&i, &n)),
            2,
        )?;
    }
    Ok(c)
}

pub fn eq1_module(p: i64, q: i64, n: i64) -> Result<HFPlusModule> {
    Ok(eq1_closed_form(p, q, n)?.module())
}

/// `HF+(S^3_{1/n}(T_{p,q})) = HF+(-Sigma(p,q,pqn-1))`:
/// `d = -2 a_{g-1}`, `T+_d(a_{g-1})^{n-1}` and, for `i = 1..n(g-1)`,
/// `T+_{ceil(i/n)((i-1) mod n + i - 1) - 2 a_{g-1+ceil(i/n)}}(a_{g-1+ceil(i/n)})^2`.
pub fn thm_minus_closed_form(p: i64, q: i64, n: i64) -> Result<ClosedForm> {
    let s = setup(p, q, n)?;
    let g = s.genus();
    let a = s.alpha(g - 1);
    let mut c = ClosedForm::new(-2 * a);
    c.push(SummandKind::Base, -2 * a, a, n - 1)?;
    for i in 1..=n * (g - 1) {
        let up = Integer::div_ceil(&i, &n);
        let len = s.alpha(g - 1 + up);
        let bottom = up * ((i - 1).mod_floor(&n) + i - 1) - 2 * len;
        c.push(SummandKind::Indexed, bottom, len, 2)?;
    }
    Ok(c)
}

pub fn thm_minus_module(p: i64, q: i64, n: i64) -> Result<HFPlusModule> {
    Ok(thm_minus_closed_form(p, q, n)?.module())
}

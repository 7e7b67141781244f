use super::special::beta_reg_split;
use crate::error::{Error, Result};

/// Upper-tail probability `P(F > x)` of the F distribution with `d1`, `d2`
/// degrees of freedom, via `I_{d2/(d2+d1·x)}(d2/2, d1/2)`.
pub fn f_upper_tail(x: f64, d1: u32, d2: u32) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "F statistic {x} must be finite and >= 0"
        )));
    }
    if d1 == 0 || d2 == 0 {
        return Err(Error::Domain("degrees of freedom must be positive".into()));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let (d1, d2) = (d1 as f64, d2 as f64);
    let denom = d2 + d1 * x;
    Ok(beta_reg_split(
        d2 / 2.0,
        d1 / 2.0,
        d2 / denom,
        d1 * x / denom,
    ))
}

/// Two-sided p-value `P(|T| > |t|)` for Student's t with `df > 0` degrees of
/// freedom (not necessarily integral).
pub fn t_two_sided(t: f64, df: f64) -> Result<f64> {
    if t.is_nan() || df.is_nan() || df <= 0.0 || df.is_infinite() {
        return Err(Error::Domain(format!("t = {t}, df = {df} out of domain")));
    }
    if t.is_infinite() {
        return Ok(0.0);
    }
    let t2 = t * t;
    let denom = df + t2;
    Ok(beta_reg_split(df / 2.0, 0.5, df / denom, t2 / denom))
}

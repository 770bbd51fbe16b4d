//! Bracketing root finders used for validity intervals and caustic radii.

use crate::error::{Error, Result};

/// Bisect `f` on `[lo, hi]` until the bracket width is below
/// `rel_tol * max(|lo|, |hi|)`. Requires a sign change on the bracket.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Result<f64> {
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::domain(format!(
            "no sign change on [{lo:e}, {hi:e}] (f: {flo:e} .. {fhi:e})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= rel_tol * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE) {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Walk outward from `start` by repeated multiplication with `factor > 1`
/// until the sign of `f` flips, then return the bracketing pair.
pub fn bracket_geometric<F: Fn(f64) -> f64>(
    f: F,
    start: f64,
    factor: f64,
    max_steps: usize,
) -> Result<(f64, f64)> {
    let f0 = f(start);
    let mut prev = start;
    let mut x = start;
    for _ in 0..max_steps {
        x *= factor;
        if f(x).signum() != f0.signum() {
            return Ok(if prev < x { (prev, x) } else { (x, prev) });
        }
        prev = x;
    }
    Err(Error::convergence(format!(
        "no sign change within {max_steps} geometric steps from {start:e}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn geometric_bracket_expands() {
        let (lo, hi) = bracket_geometric(|x| 100.0 - x, 1.0, 2.0, 60).unwrap();
        assert!(lo < 100.0 && 100.0 < hi);
    }
}

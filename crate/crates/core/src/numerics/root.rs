//! Bracketed root finding: Brent's method with a guaranteed bisection
//! fallback (Numerical Recipes `zbrent` layout).

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A bracket `[lo, hi]` expected to contain a sign change of the target.
#[derive(Debug, Clone, Copy)]
pub struct RootBracket<R> {
    pub lo: R,
    pub hi: R,
}

impl<R: Real> RootBracket<R> {
    pub fn new(lo: R, hi: R) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }
}

/// Finds a root of `f` inside `bracket` to absolute accuracy `tol`.
pub fn find_root<R, F>(f: F, bracket: RootBracket<R>, tol: R) -> Result<R>
where
    R: Real,
    F: Fn(R) -> R,
{
    let max_iter = 200;
    let eps = R::epsilon();
    let two = R::lit(2.0);
    let half = R::lit(0.5);

    let mut a = bracket.lo;
    let mut b = bracket.hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == R::zero() {
        return Ok(a);
    }
    if fb == R::zero() {
        return Ok(b);
    }
    if fa * fb > R::zero() {
        return Err(Error::NoSignChange {
            lo: a.as_f64(),
            hi: b.as_f64(),
        });
    }

    let mut c = b;
    let mut fc = fb;
    let mut d = R::zero();
    let mut e = R::zero();
    for _ in 0..max_iter {
        if (fb > R::zero() && fc > R::zero()) || (fb < R::zero() && fc < R::zero()) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = two * eps * b.abs() + half * tol;
        let xm = half * (c - b);
        if xm.abs() <= tol1 || fb == R::zero() {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic interpolation
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = two * xm * s;
                q = R::one() - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (two * xm * qq * (qq - r) - (b - a) * (r - R::one()));
                q = (qq - R::one()) * (r - R::one()) * (s - R::one());
            }
            if p > R::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = R::lit(3.0) * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if two * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b = b + d;
        } else if xm > R::zero() {
            b = b + tol1;
        } else {
            b = b - tol1;
        }
        fb = f(b);
    }
    Ok(b)
}

//! Real roots of low-degree polynomials.
//!
//! Roots are isolated by recursing on the derivative's critical points
//! and bisecting each monotone interval, then polished with Newton steps.

use crate::error::{Error, Result};
use crate::real::Real;

/// Real roots of a polynomial, sorted ascending, with residuals.
#[derive(Clone, Debug)]
pub struct PolynomialRealRoots<F> {
    /// Coefficients in ascending degree order, as given.
    pub coefficients: Vec<F>,
    /// Strictly increasing real roots.
    pub roots: Vec<F>,
    /// `p(root)` for each reported root.
    pub residuals: Vec<F>,
}

fn eval<F: Real>(coeffs: &[F], x: F) -> F {
    let mut acc = F::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative<F: Real>(coeffs: &[F]) -> Vec<F> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * F::of_usize(i))
        .collect()
}

/// Bisection on `[lo, hi]` assuming a sign change.
fn bisect<F: Real>(coeffs: &[F], mut lo: F, mut hi: F) -> F {
    let mut flo = eval(coeffs, lo);
    if flo == F::zero() {
        return lo;
    }
    for _ in 0..200 {
        let mid = (lo + hi) * F::of(0.5);
        if mid == lo || mid == hi {
            break;
        }
        let fm = eval(coeffs, mid);
        if fm == F::zero() {
            return mid;
        }
        if (fm > F::zero()) == (flo > F::zero()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * F::of(0.5)
}

fn newton_polish<F: Real>(coeffs: &[F], x0: F) -> F {
    let d = derivative(coeffs);
    let mut x = x0;
    for _ in 0..4 {
        let f = eval(coeffs, x);
        let g = eval(&d, x);
        if g.abs() <= F::of(1e-300) {
            break;
        }
        let step = f / g;
        if !step.is_finite() {
            break;
        }
        let next = x - step;
        if eval(coeffs, next).abs() < f.abs() {
            x = next;
        } else {
            break;
        }
    }
    x
}

fn roots_monic_recursive<F: Real>(coeffs: &[F]) -> Vec<F> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-coeffs[0] / coeffs[1]];
    }
    // Cauchy bound on root magnitude
    let lead = coeffs[deg];
    let bound = F::one()
        + coeffs[..deg]
            .iter()
            .map(|&c| (c / lead).abs())
            .fold(F::zero(), |a, b| a.max(b));

    let mut breakpoints = vec![-bound];
    let crits = roots_monic_recursive(&derivative(coeffs));
    for c in crits {
        if c > -bound && c < bound {
            breakpoints.push(c);
        }
    }
    breakpoints.push(bound);
    breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Each monotone window contributes at most one root: a strict sign
    // change isolates a simple root, and an exact zero at a critical
    // point is an even-multiplicity root. Anything "almost zero" at a
    // critical point belongs to a neighboring sign change and must not
    // be double-counted.
    let mut found: Vec<F> = Vec::new();
    let push = |x: F, found: &mut Vec<F>| {
        let sep = F::of(1e-12) * bound.max(F::one());
        if found.iter().all(|&r| (r - x).abs() > sep) {
            found.push(x);
        }
    };
    for w in breakpoints.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let flo = eval(coeffs, lo);
        let fhi = eval(coeffs, hi);
        if flo == F::zero() {
            push(lo, &mut found);
        }
        if fhi == F::zero() {
            push(hi, &mut found);
        }
        if flo != F::zero() && fhi != F::zero() && (flo < F::zero()) != (fhi < F::zero()) {
            push(newton_polish(coeffs, bisect(coeffs, lo, hi)), &mut found);
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap());
    found
}

/// All real roots of a polynomial of degree at most 4.
///
/// `coeffs` lists coefficients in ascending degree order; the leading
/// coefficient must be nonzero.
pub fn real_roots<F: Real>(coeffs: &[F]) -> Result<PolynomialRealRoots<F>> {
    if coeffs.is_empty() {
        return Err(Error::InvalidArgument("empty coefficient list".into()));
    }
    let deg = coeffs.len() - 1;
    if deg > 4 {
        return Err(Error::Unsupported(format!("polynomial degree {deg} > 4")));
    }
    let lead = coeffs[deg];
    if lead == F::zero() || !lead.is_finite() {
        return Err(Error::InvalidArgument("leading coefficient must be nonzero".into()));
    }
    let monic: Vec<F> = coeffs.iter().map(|&c| c / lead).collect();
    let roots = roots_monic_recursive(&monic);
    let residuals = roots.iter().map(|&r| eval(coeffs, r)).collect();
    Ok(PolynomialRealRoots {
        coefficients: coeffs.to_vec(),
        roots,
        residuals,
    })
}

//! Floating-point roots, for display only.
//!
//! Repeated roots make simultaneous iteration converge linearly, so the
//! polynomial is first split exactly into squarefree factors and each
//! factor is solved on its own; roots are then repeated by multiplicity.

use num_complex::Complex64;

use super::{squarefree_decompose, IntPoly};
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 1000;
const TOLERANCE: f64 = 1e-14;

/// All complex roots of `p` with multiplicity, sorted by (re, im).
pub fn roots_numeric(p: &IntPoly) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let zeros = p.trailing_zeros();
    let rest = p.div_x_pow(zeros)?;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    for (factor, mult) in squarefree_decompose(&rest)? {
        let simple = durand_kerner(&factor.to_f64_coeffs())?;
        for r in simple {
            let r = polish(&factor, r);
            roots.extend(std::iter::repeat_n(r, mult as usize));
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn eval(monic: &[f64], z: Complex64) -> Complex64 {
    monic
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Simultaneous iteration on ascending coefficients; the polynomial must be
/// squarefree with nonzero leading coefficient.
fn durand_kerner(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if degree == 1 {
        return Ok(vec![Complex64::new(-monic[0], 0.0)]);
    }
    let radius = 1.0 + coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max) / lead.abs();
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / degree as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for i in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates; nudge apart
                z[i] += Complex64::new(1e-9, 1e-9);
                worst = f64::INFINITY;
                continue;
            }
            let step = eval(&monic, z[i]) / denom;
            z[i] -= step;
            worst = worst.max(step.norm() / z[i].norm().max(1.0));
        }
        if worst <= TOLERANCE {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence)
}

/// A few Newton steps against the exact integer factor.
fn polish(factor: &IntPoly, mut z: Complex64) -> Complex64 {
    let deriv = factor.derivative();
    for _ in 0..3 {
        let d = deriv.eval_complex(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = factor.eval_complex(z) / d;
        if !step.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

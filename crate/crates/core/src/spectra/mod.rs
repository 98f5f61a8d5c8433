//! Exact classification of per-spectra.
//!
//! A spectrum is purely imaginary (0 included) iff `π` factors as
//! `x^m Π (x² + c_i)` with every `c_i ≥ 0`. That is decided on integers:
//! `π` must contain only powers of the parity of its degree, and after
//! removing `x^m` and substituting `y = −x²` the result must have only real
//! nonnegative roots.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permpoly::{per_poly, EngineKind};
use crate::poly::{
    all_roots_real_nonneg, roots_numeric, squarefree_decompose, sturm_count, Bound, IntPoly,
    RootCountCertificate,
};

#[derive(Debug, Clone, PartialEq)]
pub struct PerSpecReport {
    pub poly: IntPoly,
    /// Multiplicity of the root 0.
    pub zero_multiplicity: usize,
    pub is_purely_imaginary: bool,
    /// Root counts for `q(y) = r(−y)`; absent when the parity test already
    /// rules the polynomial out.
    pub y_certificate: Option<RootCountCertificate>,
    pub numeric_roots: Option<Vec<Complex64>>,
    /// Every `b_k` with odd `k` vanishes, which for a permanental polynomial
    /// is equivalent to the graph being bipartite.
    pub is_bipartite_by_coeffs: bool,
}

/// True when every coefficient of `x^i` with `i` of the other parity than
/// `deg p` is zero, i.e. all `b_k` with odd `k` vanish.
pub fn odd_index_coeffs_vanish(p: &IntPoly) -> bool {
    let Some(d) = p.degree() else { return true };
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| (d - i) % 2 == 0 || c.is_zero())
}

/// Reduces `x^m r(x²)` to `q(y) = r(−y)`. Requires odd-index coefficients
/// to vanish.
pub(crate) fn y_reduction(p: &IntPoly) -> Result<IntPoly> {
    let m = p.trailing_zeros();
    let r = p.div_x_pow(m)?;
    let coeffs = r
        .coeffs()
        .iter()
        .step_by(2)
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect::<Vec<BigInt>>();
    Ok(IntPoly::from_coeffs(coeffs))
}

/// The exact decision alone, without numeric roots.
pub fn is_purely_imaginary(p: &IntPoly) -> Result<bool> {
    Ok(classify_exact(p)?.0)
}

fn classify_exact(p: &IntPoly) -> Result<(bool, Option<RootCountCertificate>, bool)> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let bipartite = odd_index_coeffs_vanish(p);
    if !bipartite {
        return Ok((false, None, false));
    }
    let (ok, cert) = all_roots_real_nonneg(&y_reduction(p)?)?;
    Ok((ok, Some(cert), true))
}

pub fn classify_perspec(p: &IntPoly) -> Result<PerSpecReport> {
    let (is_purely_imaginary, y_certificate, is_bipartite_by_coeffs) = classify_exact(p)?;
    Ok(PerSpecReport {
        poly: p.clone(),
        zero_multiplicity: p.trailing_zeros(),
        is_purely_imaginary,
        y_certificate,
        numeric_roots: roots_numeric(p).ok().map(|roots| {
            if is_purely_imaginary {
                snap_to_imaginary_axis(roots)
            } else {
                roots
            }
        }),
        is_bipartite_by_coeffs,
    })
}

/// Once the spectrum is proven purely imaginary, floating-point noise in
/// the real parts carries no information.
fn snap_to_imaginary_axis(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    for z in &mut roots {
        z.re = 0.0;
    }
    roots.sort_by(|a, b| a.im.total_cmp(&b.im));
    roots
}

/// Membership of `g` in the class of graphs with purely imaginary
/// per-spectrum.
#[allow(non_snake_case)]
pub fn is_in_G(g: &Graph) -> Result<PerSpecReport> {
    classify_perspec(&per_poly(g, EngineKind::Sachs)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootStructure {
    pub no_negative_root: bool,
    pub no_nonzero_real_root: bool,
    /// `π(−x) = ±π(x)`; the roots are then symmetric about both axes.
    pub axis_symmetric: bool,
}

/// Distinct real roots of `p` in `(−∞, 0)` and in `(0, ∞)`.
pub fn real_root_signs(p: &IntPoly) -> Result<(usize, usize)> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let rest = p.div_x_pow(p.trailing_zeros())?;
    let (mut neg, mut pos) = (0, 0);
    for (f, _) in squarefree_decompose(&rest)? {
        // f(0) != 0, so the endpoint 0 is never a root
        neg += sturm_count(&f, &Bound::NegInfinity, &Bound::int(0))?;
        pos += sturm_count(&f, &Bound::int(0), &Bound::PosInfinity)?;
    }
    Ok((neg, pos))
}

pub fn verify_root_structure(p: &IntPoly) -> Result<RootStructure> {
    let (neg, pos) = real_root_signs(p)?;
    Ok(RootStructure {
        no_negative_root: neg == 0,
        no_nonzero_real_root: neg + pos == 0,
        axis_symmetric: odd_index_coeffs_vanish(p),
    })
}

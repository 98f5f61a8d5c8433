//! Exact real-root machinery: squarefree decomposition, Sturm chains,
//! discriminant of a cubic and Descartes' sign count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::rational::QPoly;
use super::IntPoly;
use crate::error::{Error, Result};

/// Interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Bound {
    pub fn int(v: i64) -> Bound {
        Bound::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    fn rank(&self) -> u8 {
        match self {
            Bound::NegInfinity => 0,
            Bound::Finite(_) => 1,
            Bound::PosInfinity => 2,
        }
    }

    fn is_below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

/// Root counts for a polynomial, all with multiplicity, together with the
/// squarefree factorization they were computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCountCertificate {
    pub total_degree: usize,
    pub real_root_count_with_multiplicity: usize,
    pub nonneg_real_root_count_with_multiplicity: usize,
    pub squarefree_factors: Vec<(IntPoly, u32)>,
}

/// Yun's squarefree decomposition. Factors are primitive with positive
/// leading coefficient, listed by increasing multiplicity; their product
/// with multiplicities equals `p` up to a rational constant.
pub fn squarefree_decompose(p: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let f = QPoly::from_int(p);
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut mult = 1u32;
    loop {
        let a = b.gcd(&d);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.to_primitive_int(), mult));
        }
        b = b.exact_div(&a);
        if b.degree().is_none_or(|deg| deg == 0) {
            break;
        }
        let c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        mult += 1;
    }
    Ok(out)
}

pub fn is_squarefree(p: &IntPoly) -> bool {
    if p.is_constant() {
        return !p.is_zero();
    }
    let f = QPoly::from_int(p);
    f.gcd(&f.derivative()).is_one()
}

/// Sturm chain `p, p', -prem(...), ...` kept in primitive integer form.
/// Each step negates a positive multiple of the true remainder so sign
/// variation counts are unchanged.
pub(crate) fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let delta = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        let lc_neg = b.leading().is_some_and(Signed::is_negative);
        let factor_negative = lc_neg && delta % 2 == 1;
        let next = if factor_negative { r } else { -r };
        let content = next.content();
        chain.push(IntPoly::from_coeffs(
            next.coeffs().iter().map(|c| c / &content).collect(),
        ));
    }
    chain
}

fn sign_at_bound(p: &IntPoly, at: &Bound) -> i32 {
    let lead_sign = if p.leading().is_some_and(Signed::is_negative) {
        -1
    } else {
        1
    };
    match at {
        Bound::PosInfinity => lead_sign,
        Bound::NegInfinity => {
            if p.degree().unwrap_or(0) % 2 == 1 {
                -lead_sign
            } else {
                lead_sign
            }
        }
        Bound::Finite(x) => p.sign_at(x),
    }
}

fn variations(chain: &[IntPoly], at: &Bound) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in chain {
        let s = sign_at_bound(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of a squarefree `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !lo.is_below(hi) {
        return Err(Error::EmptyInterval);
    }
    if !is_squarefree(p) {
        return Err(Error::NotSquarefree);
    }
    let chain = sturm_chain(p);
    Ok(variations(&chain, lo).saturating_sub(variations(&chain, hi)))
}

/// Decides whether every complex root of `q` is real and nonnegative,
/// counting multiplicity.
pub fn all_roots_real_nonneg(q: &IntPoly) -> Result<(bool, RootCountCertificate)> {
    let total_degree = q.degree().ok_or(Error::ZeroInput)?;
    let zeros = q.trailing_zeros();
    let rest = q.div_x_pow(zeros)?;

    let mut factors = Vec::new();
    let mut real = zeros;
    let mut nonneg = zeros;
    if zeros > 0 {
        factors.push((IntPoly::x(), zeros as u32));
    }
    for (f, mult) in squarefree_decompose(&rest)? {
        let all = sturm_count(&f, &Bound::NegInfinity, &Bound::PosInfinity)?;
        // f(0) != 0, so (-inf, 0] holds exactly the negative roots.
        let negative = sturm_count(&f, &Bound::NegInfinity, &Bound::int(0))?;
        real += mult as usize * all;
        nonneg += mult as usize * (all - negative);
        factors.push((f, mult));
    }
    let cert = RootCountCertificate {
        total_degree,
        real_root_count_with_multiplicity: real,
        nonneg_real_root_count_with_multiplicity: nonneg,
        squarefree_factors: factors,
    };
    Ok((nonneg == total_degree, cert))
}

/// Discriminant of `a x^3 + b x^2 + c x + d`.
pub fn cubic_discriminant(a: i64, b: i64, c: i64, d: i64) -> Result<BigInt> {
    if a == 0 {
        return Err(Error::NotCubic);
    }
    let (a, b, c, d) = (
        BigInt::from(a),
        BigInt::from(b),
        BigInt::from(c),
        BigInt::from(d),
    );
    Ok(
        BigInt::from(18) * &a * &b * &c * &d - BigInt::from(4) * b.pow(3) * &d
            + b.pow(2) * c.pow(2)
            - BigInt::from(4) * &a * c.pow(3)
            - BigInt::from(27) * a.pow(2) * d.pow(2),
    )
}

/// Sign changes between consecutive nonzero coefficients.
pub fn descartes_sign_changes(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let signs: Vec<bool> = p
        .coeffs()
        .iter()
        .rev()
        .filter(|c| !c.is_zero())
        .map(Signed::is_negative)
        .collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

//! Polynomials over Q, used internally where exact division is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct QPoly(Vec<BigRational>);

impl QPoly {
    pub(crate) fn from_int(p: &IntPoly) -> QPoly {
        QPoly(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn trim(mut self) -> QPoly {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub(crate) fn monic(&self) -> QPoly {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => QPoly(self.0.iter().map(|c| c / lc).collect()),
        }
    }

    pub(crate) fn derivative(&self) -> QPoly {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    pub(crate) fn sub(&self, rhs: &QPoly) -> QPoly {
        let len = self.0.len().max(rhs.0.len());
        let zero = BigRational::zero();
        QPoly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - rhs.0.get(i).unwrap_or(&zero))
                .collect(),
        )
        .trim()
    }

    /// Euclidean division; panics on a zero divisor.
    pub(crate) fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = &d.0[dd];
        let mut rem = self.0.clone();
        let qlen = self.0.len().saturating_sub(dd);
        let mut quot = vec![BigRational::zero(); qlen];
        for shift in (0..qlen).rev() {
            let c = &rem[shift + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.0.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (QPoly(quot).trim(), QPoly(rem).trim())
    }

    pub(crate) fn exact_div(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub(crate) fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading term.
    pub(crate) fn to_primitive_int(&self) -> IntPoly {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .0
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        IntPoly::from_coeffs(ints).primitive_part()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = QPoly::from_int(&IntPoly::from_i64s(&[-2, -1, 1]));
        let b = QPoly::from_int(&IntPoly::from_i64s(&[3, 4, 1]));
        assert_eq!(a.gcd(&b).to_primitive_int(), IntPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn division_with_remainder() {
        let a = QPoly::from_int(&IntPoly::from_i64s(&[1, 0, 0, 2]));
        let d = QPoly::from_int(&IntPoly::from_i64s(&[1, 2]));
        let (q, r) = a.div_rem(&d);
        let back = q.to_primitive_int();
        assert_eq!(back.degree(), Some(2));
        // 2x^3 + 1 at x = -1/2 is 3/4
        assert_eq!(r.0, vec![BigRational::new(3.into(), 4.into())]);
    }
}

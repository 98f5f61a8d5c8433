//! Ryser's inclusion–exclusion formula with Gray-code subset order.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const PERMANENT_MAX_ORDER: usize = 30;

/// Sum that stays in `i128` until it would overflow.
#[derive(Default)]
struct Accumulator {
    fast: i128,
    slow: BigInt,
}

impl Accumulator {
    fn add(&mut self, term: i128) {
        match self.fast.checked_add(term) {
            Some(s) => self.fast = s,
            None => {
                self.slow += BigInt::from(self.fast) + BigInt::from(term);
                self.fast = 0;
            }
        }
    }

    fn add_big(&mut self, term: BigInt) {
        self.slow += term;
    }

    fn total(self) -> BigInt {
        self.slow + BigInt::from(self.fast)
    }
}

/// Exact permanent of a square integer matrix.
///
/// `per(A) = (-1)^n Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j∈S} a_ij`, visiting the
/// subsets in Gray-code order so each step updates the row sums by one
/// column. Only 0/1 matrices are part of the contract.
pub fn permanent(m: &[Vec<i64>]) -> Result<BigInt> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare);
    }
    if n > PERMANENT_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "permanent",
            size: n,
            cap: PERMANENT_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut row_sums = vec![0i64; n];
    let mut in_set = vec![false; n];
    let mut acc = Accumulator::default();
    let mut size = 0usize;
    for step in 1u64..1 << n {
        let j = step.trailing_zeros() as usize;
        let sign = if in_set[j] { -1 } else { 1 };
        in_set[j] = !in_set[j];
        size = if in_set[j] { size + 1 } else { size - 1 };
        for (sum, row) in row_sums.iter_mut().zip(m) {
            *sum += sign * row[j];
        }
        let parity = if size.is_multiple_of(2) { 1 } else { -1 };
        match checked_product(&row_sums) {
            Some(p) => acc.add(parity * p),
            None => {
                let p: BigInt = row_sums.iter().map(|&s| BigInt::from(s)).product();
                acc.add_big(p * parity);
            }
        }
    }
    let total = acc.total();
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

fn checked_product(values: &[i64]) -> Option<i128> {
    let mut p: i128 = 1;
    for &v in values {
        if v == 0 {
            return Some(0);
        }
        p = p.checked_mul(i128::from(v))?;
    }
    Some(p)
}

/// Permanent of the principal submatrix of `A(g)` on the vertex set `mask`.
/// Row sums are neighbourhood popcounts, so no matrix is materialised.
pub(crate) fn principal_permanent(g: &Graph, mask: u64) -> i128 {
    let rows: Vec<u64> = bits(mask).map(|v| g.row(v) & mask).collect();
    let cols: Vec<usize> = bits(mask).collect();
    let k = cols.len();
    if k == 0 {
        return 1;
    }
    let mut chosen = 0u64;
    let mut total: i128 = 0;
    for step in 1u64..1 << k {
        chosen ^= 1 << cols[step.trailing_zeros() as usize];
        let mut p: i128 = 1;
        for &r in &rows {
            let s = (r & chosen).count_ones();
            if s == 0 {
                p = 0;
                break;
            }
            p *= i128::from(s);
        }
        if p != 0 {
            total += if chosen.count_ones().is_multiple_of(2) {
                p
            } else {
                -p
            };
        }
    }
    if k.is_multiple_of(2) {
        total
    } else {
        -total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, Family};

    fn naive(m: &[Vec<i64>]) -> i64 {
        fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i64 {
            if row == m.len() {
                return 1;
            }
            let mut total = 0;
            for j in 0..m.len() {
                if !used[j] && m[row][j] != 0 {
                    used[j] = true;
                    total += m[row][j] * rec(m, row + 1, used);
                    used[j] = false;
                }
            }
            total
        }
        rec(m, 0, &mut vec![false; m.len()])
    }

    #[test]
    fn examples() {
        let ones = vec![vec![1; 3]; 3];
        assert_eq!(permanent(&ones).unwrap(), BigInt::from(6));
        let c4 = make_named(Family::Cycle(4)).unwrap().adjacency_matrix();
        assert_eq!(naive(&c4), 4);
        assert_eq!(permanent(&c4).unwrap(), BigInt::from(4));
        let id: Vec<Vec<i64>> = (0..5)
            .map(|i| (0..5).map(|j| i64::from(i == j)).collect())
            .collect();
        assert_eq!(permanent(&id).unwrap(), BigInt::from(1));
        assert_eq!(permanent(&[]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn errors() {
        assert_eq!(permanent(&[vec![1, 0], vec![1]]), Err(Error::NonSquare));
        let big = vec![vec![0; 31]; 31];
        assert!(permanent(&big).unwrap_err().is_cap());
    }

    #[test]
    fn matches_naive_on_dense_and_sparse() {
        for g in [
            make_named(Family::Complete(7)).unwrap(),
            make_named(Family::CompleteBipartite(3, 4)).unwrap(),
            make_named(Family::G8).unwrap(),
            make_named(Family::Theta(1, 2, 3)).unwrap(),
        ] {
            let a = g.adjacency_matrix();
            assert_eq!(permanent(&a).unwrap(), BigInt::from(naive(&a)));
            let mask = (1u64 << g.vertex_count()) - 1;
            assert_eq!(i128::from(naive(&a)), principal_permanent(&g, mask));
        }
    }

    #[test]
    fn overflowing_products_fall_back_to_big_integers() {
        // row sums reach 14000, so 14-fold products exceed i128
        let n = 14;
        let m = vec![vec![1000; n]; n];
        let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
        assert_eq!(permanent(&m).unwrap(), fact * BigInt::from(1000).pow(14));
    }
}

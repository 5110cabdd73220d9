//! Brute-force ground truth: exhaustive evaluation and enumeration.
//!
//! Nothing here touches [`crate::ideal`]; the only algebra used is polynomial
//! evaluation from [`crate::polyring`] plus plain enumeration, so these
//! results can be compared against the closed forms elsewhere in the crate.
//! Work is capped by an explicit [`Budget`] and fails with
//! [`Error::BudgetExceeded`] instead of sampling.

use std::collections::HashSet;

use num_traits::{One, ToPrimitive};

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, RingDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest ring that [`eval_all_zero`] will walk.
    pub max_elements: u64,
    /// Largest number of polynomials an enumeration may visit.
    pub max_enumeration: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_elements: 1_000_000,
            max_enumeration: 10_000_000,
        }
    }
}

fn exceeded(needed: impl ToString, budget: u64) -> Error {
    Error::BudgetExceeded {
        needed: needed.to_string(),
        budget,
    }
}

/// True iff `f` evaluates to zero at every element of `ring`.
pub fn eval_all_zero(ring: &RingDescriptor, f: &Polynomial, budget: &Budget) -> Result<bool> {
    if f.ring() != ring {
        return Err(Error::RingMismatch {
            left: f.ring().to_string(),
            right: ring.to_string(),
        });
    }
    let order = ring.order();
    if order > Natural::from(budget.max_elements) {
        return Err(exceeded(order, budget.max_elements));
    }
    Ok(ring
        .elements()
        .all(|r| f.eval(&r).expect("element of ring").is_zero()))
}

/// `table[j][a] = a^j mod n` for `j <= dmax`, via polynomial evaluation of `x^j`.
fn power_table(ring: &RingDescriptor, n: u64, dmax: usize) -> Vec<Vec<u64>> {
    let points: Vec<_> = ring.elements().collect();
    let mut table = Vec::with_capacity(dmax + 1);
    let mut monomial = Polynomial::one(ring);
    for _ in 0..=dmax {
        let row = points
            .iter()
            .map(|a| {
                let v = monomial.eval(a).expect("element of ring");
                v.residues()[0].to_u64().expect("residue below n")
            })
            .collect::<Vec<u64>>();
        debug_assert!(row.iter().all(|&v| v < n.max(1)));
        table.push(row);
        monomial = monomial.mul_linear(&ring.zero());
    }
    table
}

/// Odometer over coefficient vectors in lexicographic order (`c_0` fastest),
/// keeping the value vector `values[a] = sum c_j a^j mod n` current.
struct Odometer<'a> {
    n: u64,
    digits: Vec<u64>,
    rows: &'a [Vec<u64>],
    values: Vec<u64>,
}

impl<'a> Odometer<'a> {
    fn new(n: u64, rows: &'a [Vec<u64>], base: Vec<u64>) -> Self {
        Self {
            n,
            digits: vec![0; rows.len()],
            rows,
            values: base,
        }
    }

    /// Advances to the next coefficient vector; false after the last one.
    fn step(&mut self) -> bool {
        for j in 0..self.digits.len() {
            // +1 on digit j (including the wrap n-1 -> 0) adds a^j mod n
            for (v, p) in self.values.iter_mut().zip(&self.rows[j]) {
                *v = (*v + p) % self.n;
            }
            self.digits[j] += 1;
            if self.digits[j] < self.n {
                return true;
            }
            self.digits[j] = 0;
        }
        false
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum FunctionKey {
    Packed(u128),
    Wide(Box<[u64]>),
}

/// Number of distinct functions `Z_n -> Z_n` induced by polynomials of
/// degree at most `dmax`.
pub fn brute_count_functions(n: &Natural, dmax: usize, budget: &Budget) -> Result<Natural> {
    let ring = RingDescriptor::zn(n.clone())?;
    let total = (dmax as u32)
        .checked_add(1)
        .map(|e| num_traits::pow::Pow::pow(n, e))
        .ok_or_else(|| exceeded("u32 overflow", budget.max_enumeration))?;
    if total > Natural::from(budget.max_enumeration) {
        return Err(exceeded(total, budget.max_enumeration));
    }
    if n.is_one() {
        return Ok(Natural::one());
    }
    let n = n.to_u64().expect("bounded by budget");
    let rows = power_table(&ring, n, dmax);

    let packable = (n as f64).powf(n as f64) < 2f64.powi(127);
    let key = |values: &[u64]| {
        if packable {
            FunctionKey::Packed(
                values
                    .iter()
                    .fold(0u128, |acc, &v| acc * n as u128 + v as u128),
            )
        } else {
            FunctionKey::Wide(values.into())
        }
    };

    let mut seen = HashSet::new();
    let mut odo = Odometer::new(n, &rows, vec![0; n as usize]);
    loop {
        seen.insert(key(&odo.values));
        if !odo.step() {
            break;
        }
    }
    Ok(Natural::from(seen.len()))
}

/// Least `d` such that some polynomial of exact degree `d` vanishes on
/// `Z_n`, found by searching degrees in increasing order.
pub fn brute_min_vanishing_degree(n: &Natural, budget: &Budget) -> Result<usize> {
    if *n < Natural::from(2u32) {
        return Err(Error::TooSmall {
            min: 2,
            got: n.clone(),
        });
    }
    let ring = RingDescriptor::zn(n.clone())?;
    let nn = n
        .to_u64()
        .filter(|&v| v <= budget.max_enumeration)
        .ok_or_else(|| exceeded(n, budget.max_enumeration))?;
    let mut spent: u64 = 0;
    for d in 1.. {
        let cost = (nn - 1)
            .checked_mul(nn.checked_pow(d as u32).unwrap_or(u64::MAX))
            .and_then(|c| c.checked_add(spent))
            .filter(|&c| c <= budget.max_enumeration)
            .ok_or_else(|| exceeded(format!("degree {d} search"), budget.max_enumeration))?;
        spent = cost;

        let rows = power_table(&ring, nn, d);
        let (lower, top) = rows.split_at(d);
        for lead in 1..nn {
            let base = top[0].iter().map(|p| p * lead % nn).collect();
            let mut odo = Odometer::new(nn, lower, base);
            loop {
                if odo.values.iter().all(|&v| v == 0) {
                    return Ok(d);
                }
                if !odo.step() {
                    break;
                }
            }
        }
    }
    unreachable!("x(x-1)...(x-n+1) vanishes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn eval_all_zero_examples() {
        let b = Budget::default();
        let z12 = RingDescriptor::zn(12u32).unwrap();
        let f = Polynomial::from_integers(&z12, [0, 6, 6]);
        assert!(eval_all_zero(&z12, &f, &b).unwrap());
        assert!(!eval_all_zero(&z12, &Polynomial::x(&z12), &b).unwrap());
        let z1 = RingDescriptor::zn(1u32).unwrap();
        assert!(eval_all_zero(&z1, &Polynomial::from_integers(&z1, [3, 4]), &b).unwrap());
    }

    #[test]
    fn eval_all_zero_respects_budget() {
        let tiny = Budget {
            max_elements: 10,
            ..Budget::default()
        };
        let z12 = RingDescriptor::zn(12u32).unwrap();
        assert!(matches!(
            eval_all_zero(&z12, &Polynomial::zero(&z12), &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn count_examples() {
        let b = Budget::default();
        assert_eq!(brute_count_functions(&nat(4), 3, &b).unwrap(), nat(64));
        assert_eq!(brute_count_functions(&nat(2), 1, &b).unwrap(), nat(4));
        // stabilises once dmax >= kempner(n) - 1
        let c3 = brute_count_functions(&nat(6), 2, &b).unwrap();
        assert_eq!(c3, nat(108));
        assert_eq!(brute_count_functions(&nat(6), 4, &b).unwrap(), c3);
        assert_eq!(brute_count_functions(&nat(4), 5, &b).unwrap(), nat(64));
        assert!(matches!(
            brute_count_functions(&nat(10), 7, &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn min_degree_examples() {
        let b = Budget::default();
        assert_eq!(brute_min_vanishing_degree(&nat(12), &b).unwrap(), 2);
        assert_eq!(brute_min_vanishing_degree(&nat(15), &b).unwrap(), 3);
        assert_eq!(brute_min_vanishing_degree(&nat(5), &b).unwrap(), 5);
        assert!(matches!(
            brute_min_vanishing_degree(&nat(11), &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}

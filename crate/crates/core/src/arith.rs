//! Exact integer arithmetic: factorization, Legendre valuations, `gcd(k!, n)`
//! without forming `k!`, the Kempner function and smallest prime factors.
//!
//! Every quantity is a [`Natural`] (an arbitrary precision unsigned integer),
//! so none of these routines can wrap around.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision nonnegative integer.
pub type Natural = BigUint;

/// Trial division runs up to this bound before switching to Pollard rho.
const TRIAL_DIVISION_BOUND: u64 = 10_000;

/// Miller-Rabin with these bases is deterministic below 3.3 * 10^24.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
/// Extra bases used above the deterministic range.
const MR_EXTRA_BASES: [u32; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(Natural, u64)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(Natural, u64)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factored integer.
    pub fn value(&self) -> Natural {
        self.factors
            .iter()
            .fold(Natural::one(), |acc, (p, e)| acc * pow(p, *e))
    }

    /// Each prime repeated by its exponent, e.g. 12 -> [2, 2, 3].
    pub fn prime_multiset(&self) -> Vec<Natural> {
        self.factors
            .iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p.clone(), *e as usize))
            .collect()
    }

    /// Prime powers `p^e`, the moduli of the CRT split.
    pub fn prime_powers(&self) -> Vec<Natural> {
        self.factors.iter().map(|(p, e)| pow(p, *e)).collect()
    }

    /// `gcd(k!, n)` for the factored `n`, as a product of prime powers
    /// `p^min(e, v_p(k!))`.
    pub fn gcd_factorial(&self, k: &Natural) -> Natural {
        self.factors.iter().fold(Natural::one(), |acc, (p, e)| {
            let v = legendre_unchecked(p, k);
            let m = match v.to_u64() {
                Some(v) => v.min(*e),
                None => *e,
            };
            acc * pow(p, m)
        })
    }

    /// Smallest `s` with `n | s!`. Zero for `n = 1`.
    pub fn kempner(&self) -> Natural {
        self.factors
            .iter()
            .map(|(p, e)| kempner_prime_power(p, *e))
            .max()
            .unwrap_or_default()
    }
}

fn pow(base: &Natural, exp: u64) -> Natural {
    let mut result = Natural::one();
    let mut base = base.clone();
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    result
}

/// Smallest `s` with `v_p(s!) >= e`. The answer is a multiple `p*t` with
/// `1 <= t <= e`, found by bisection on `t`.
fn kempner_prime_power(p: &Natural, e: u64) -> Natural {
    let target = Natural::from(e);
    let (mut lo, mut hi) = (1u64, e);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if legendre_unchecked(p, &(p * mid)) >= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    p * lo
}

fn legendre_unchecked(p: &Natural, k: &Natural) -> Natural {
    let mut total = Natural::zero();
    let mut q = k / p;
    while !q.is_zero() {
        total += &q;
        q /= p;
    }
    total
}

/// Exponent of the prime `p` in `k!`, i.e. `sum_{i>=1} floor(k / p^i)`.
pub fn legendre_valuation(p: &Natural, k: &Natural) -> Result<Natural> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(legendre_unchecked(p, k))
}

/// `gcd(k!, n)`, computed from the factorization of `n`.
pub fn gcd_factorial(k: &Natural, n: &Natural) -> Result<Natural> {
    Ok(factorize(n)?.gcd_factorial(k))
}

/// Kempner function: the least `s >= 0` such that `n` divides `s!`.
///
/// Note that `kempner(1) = 0` because `0! = 1`; the common convention
/// `S(1) = 1` is not used here.
pub fn kempner(n: &Natural) -> Result<Natural> {
    Ok(factorize(n)?.kempner())
}

pub fn smallest_prime_factor(n: &Natural) -> Result<Natural> {
    if *n < Natural::from(2u32) {
        return Err(Error::TooSmall {
            min: 2,
            got: n.clone(),
        });
    }
    if let Some(d) = trial_divisor(n) {
        return Ok(d);
    }
    let f = factorize(n)?;
    Ok(f.factors[0].0.clone())
}

/// Smallest divisor found by trial division below the bound, if any.
fn trial_divisor(n: &Natural) -> Option<Natural> {
    let mut d = 2u64;
    while d < TRIAL_DIVISION_BOUND {
        let dd = Natural::from(d);
        if &dd * &dd > *n {
            return if n > &Natural::one() {
                Some(n.clone())
            } else {
                None
            };
        }
        if (n % d).is_zero() {
            return Some(dd);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    None
}

/// Prime factorization of `n >= 1`. `factorize(1)` is empty.
pub fn factorize(n: &Natural) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut primes: Vec<Natural> = Vec::new();
    let mut rest = n.clone();

    let mut d = 2u64;
    while d < TRIAL_DIVISION_BOUND {
        let dd = Natural::from(d);
        if &dd * &dd > rest {
            break;
        }
        while (&rest % d).is_zero() {
            rest /= d;
            primes.push(dd.clone());
        }
        d += if d == 2 { 1 } else { 2 };
    }

    if !rest.is_one() {
        let small_limit = Natural::from(TRIAL_DIVISION_BOUND);
        if &small_limit * &small_limit > rest || is_prime(&rest) {
            primes.push(rest);
        } else {
            split_composite(rest, &mut primes);
        }
    }

    primes.sort();
    let mut factors: Vec<(Natural, u64)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { factors })
}

fn split_composite(n: Natural, out: &mut Vec<Natural>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_composite(d, out);
    split_composite(other, out);
}

/// Brent's variant of Pollard rho. Deterministic: starts at y = 2 and tries
/// c = 1, 2, ... until a proper factor appears. `n` must be an odd composite.
fn pollard_brent(n: &Natural) -> Natural {
    if n.is_even() {
        return Natural::from(2u32);
    }
    let one = Natural::one();
    const BATCH: u64 = 128;
    let mut c = Natural::one();
    loop {
        let step = |y: &Natural| (y * y + &c) % n;
        let mut y = Natural::from(2u32);
        let mut r = 1u64;
        let mut q = Natural::one();
        let mut g = Natural::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0u64;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Primality test. Deterministic below 3.3 * 10^24; above that a
/// Miller-Rabin test with 25 fixed bases.
pub fn is_prime(n: &Natural) -> bool {
    let two = Natural::from(2u32);
    if *n < two {
        return false;
    }
    for &b in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        let b = Natural::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let one = Natural::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut r = 0u64;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    let deterministic_limit: Natural = "3317044064679887385961981".parse().unwrap();
    let extra: &[u32] = if *n < deterministic_limit {
        &[]
    } else {
        &MR_EXTRA_BASES
    };
    'witness: for &a in MR_BASES.iter().chain(extra.iter()) {
        let mut x = Natural::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..r {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

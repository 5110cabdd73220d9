//! The ideal of vanishing polynomials over `Z_n`.
//!
//! Everything here is built on a monic basis family `B_0 = 1, B_1, B_2, ...`
//! with `B_k = B_{k-1} * (x - r_k)`. The generators `(n / gcd(k!, n)) * B_k`
//! span the ideal, `B_s` with `s = kempner(n)` is the minimal monic vanishing
//! polynomial, and writing `F = sum b_k B_k` gives both the vanishing test
//! (`n / gcd(k!, n)` divides every `b_k`) and a canonical form for the
//! function `F` induces (reduce each `b_k` into `[0, n / gcd(k!, n))`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, Factorization, Natural};
use crate::error::{Error, Result};
use crate::polyring::{divmod_monic, Polynomial, RingDescriptor, RingElement};

/// Which monic degree-`k` family is used as `B_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum BasisVariant {
    /// `(x+1)(x+2)...(x+k)`
    #[default]
    Rising,
    /// `x(x-1)...(x-k+1)`
    Falling,
    /// `(x+i)(x+i+1)...(x+i+k-1)`
    Shifted(BigInt),
}

impl BasisVariant {
    /// Root `r_j` (1-based) of the `j`-th linear factor.
    pub fn root(&self, j: usize) -> BigInt {
        let j = BigInt::from(j);
        match self {
            BasisVariant::Rising => -j,
            BasisVariant::Falling => j - 1,
            BasisVariant::Shifted(i) => -(i + j - 1i32),
        }
    }

    /// `r_1, ..., r_k` as elements of `ring`.
    pub fn roots(&self, ring: &RingDescriptor, k: usize) -> Vec<RingElement> {
        (1..=k).map(|j| ring.from_integer(&self.root(j))).collect()
    }
}

impl fmt::Display for BasisVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisVariant::Rising => write!(f, "rising"),
            BasisVariant::Falling => write!(f, "falling"),
            BasisVariant::Shifted(i) => write!(f, "shifted:{i}"),
        }
    }
}

impl FromStr for BasisVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rising" => Ok(BasisVariant::Rising),
            "falling" => Ok(BasisVariant::Falling),
            _ => match s.strip_prefix("shifted:") {
                Some(i) => i
                    .trim()
                    .parse::<BigInt>()
                    .map(BasisVariant::Shifted)
                    .map_err(|e| format!("bad shift {i:?}: {e}")),
                None => Err(format!(
                    "unknown basis {s:?}, expected rising, falling or shifted:<i>"
                )),
            },
        }
    }
}

/// Coefficients `b_0..b_d` of `F = sum b_k B_k`, residues mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub basis: BasisVariant,
    pub coeffs: Vec<Natural>,
}

impl Decomposition {
    /// `sum b_k B_k` over `Z_n`.
    pub fn recompose(&self, n: &Natural) -> Result<Polynomial> {
        let ring = RingDescriptor::zn(n.clone())?;
        let coeffs: Vec<RingElement> = self.coeffs.iter().map(|b| ring.from_natural(b)).collect();
        Ok(recompose_elements(&ring, &self.basis, &coeffs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorEntry {
    pub k: usize,
    pub poly: Polynomial,
}

/// Nonzero generators `(n / gcd(k!, n)) * B_k` for `k = 0..=kempner(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub n: Natural,
    pub basis: BasisVariant,
    pub entries: Vec<GeneratorEntry>,
}

/// `Z_n` together with the factorization data every operation needs.
#[derive(Debug, Clone)]
pub(crate) struct Modulus {
    pub n: Natural,
    pub ring: RingDescriptor,
    pub factorization: Factorization,
    pub kempner: Natural,
}

impl Modulus {
    pub fn new(n: &Natural) -> Result<Self> {
        let factorization = arith::factorize(n)?;
        Ok(Self {
            n: n.clone(),
            ring: RingDescriptor::zn(n.clone())?,
            kempner: factorization.kempner(),
            factorization,
        })
    }

    fn at_least_two(n: &Natural) -> Result<Self> {
        if *n < Natural::from(2u32) {
            return Err(Error::TooSmall {
                min: 2,
                got: n.clone(),
            });
        }
        Self::new(n)
    }

    /// `n / gcd(k!, n)`
    pub fn cofactor(&self, k: usize) -> Natural {
        &self.n / self.factorization.gcd_factorial(&Natural::from(k))
    }

    pub fn kempner_usize(&self) -> Result<usize> {
        self.kempner
            .to_usize()
            .ok_or_else(|| Error::TooLarge(format!("kempner({}) = {}", self.n, self.kempner)))
    }

    /// Number of leading basis coefficients that can be non-trivial for a
    /// polynomial with `len` coefficients: `min(s, len)`.
    fn relevant_terms(&self, len: usize) -> usize {
        match self.kempner.to_usize() {
            Some(s) => s.min(len),
            None => len,
        }
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if *f.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: f.ring().to_string(),
                right: self.ring.to_string(),
            });
        }
        Ok(())
    }
}

fn recompose_elements(
    ring: &RingDescriptor,
    basis: &BasisVariant,
    coeffs: &[RingElement],
) -> Polynomial {
    let roots = basis.roots(ring, coeffs.len());
    let mut acc = Polynomial::zero(ring);
    for (k, b) in coeffs.iter().enumerate().rev() {
        if k + 1 < coeffs.len() {
            acc = acc.mul_linear(&roots[k]);
        }
        acc = acc.add_unchecked(&Polynomial::constant(ring, b.clone()));
    }
    acc
}

/// First `terms` basis coefficients of `f`, by successive synthetic
/// division through `(x - r_1), (x - r_2), ...`.
fn decompose_prefix(f: &Polynomial, basis: &BasisVariant, terms: usize) -> Vec<RingElement> {
    let ring = f.ring();
    let mut rest = f.clone();
    let mut out = Vec::with_capacity(terms);
    let mut j = 1;
    while out.len() < terms && !rest.is_zero() {
        let root = ring.from_integer(&basis.root(j));
        let (q, r) = rest.div_linear(&root);
        out.push(r);
        rest = q;
        j += 1;
    }
    out
}

/// Monic `B_k` over `Z_n`.
pub fn basis_poly(k: usize, variant: &BasisVariant, n: &Natural) -> Result<Polynomial> {
    let ring = RingDescriptor::zn(n.clone())?;
    Ok(Polynomial::from_roots(&ring, &variant.roots(&ring, k)))
}

fn generator_in(m: &Modulus, k: usize, variant: &BasisVariant) -> Polynomial {
    let c = m.ring.from_natural(&m.cofactor(k));
    if c.is_zero() {
        return Polynomial::zero(&m.ring);
    }
    Polynomial::from_roots(&m.ring, &variant.roots(&m.ring, k)).scale(&c)
}

/// `(n / gcd(k!, n)) * B_k`, zero whenever `k` is below the smallest prime
/// factor of `n`.
pub fn generator(n: &Natural, k: usize, variant: &BasisVariant) -> Result<Polynomial> {
    let m = Modulus::at_least_two(n)?;
    Ok(generator_in(&m, k, variant))
}

/// Generators for `k = 0..=kempner(n)` with zero polynomials dropped. With
/// `minimal`, only the `k` at which `gcd(k!, n)` strictly grows are kept.
pub fn generating_set(n: &Natural, variant: &BasisVariant, minimal: bool) -> Result<GeneratorSet> {
    let m = Modulus::at_least_two(n)?;
    let s = m.kempner_usize()?;
    let mut entries = Vec::new();
    let mut prev_gcd: Option<Natural> = None;
    for k in 0..=s {
        let g = m.factorization.gcd_factorial(&Natural::from(k));
        let grows = prev_gcd.as_ref().is_none_or(|p| g > *p);
        prev_gcd = Some(g);
        if minimal && !grows {
            continue;
        }
        let poly = generator_in(&m, k, variant);
        if !poly.is_zero() {
            entries.push(GeneratorEntry { k, poly });
        }
    }
    Ok(GeneratorSet {
        n: n.clone(),
        basis: variant.clone(),
        entries,
    })
}

/// `B_s` with `s = kempner(n)`: the monic vanishing polynomial of least degree.
pub fn min_monic_vanishing(n: &Natural, variant: &BasisVariant) -> Result<Polynomial> {
    let m = Modulus::at_least_two(n)?;
    let s = m.kempner_usize()?;
    Ok(Polynomial::from_roots(&m.ring, &variant.roots(&m.ring, s)))
}

/// The non-monic vanishing polynomial of least degree for composite `n`:
/// degree `p_1`, leading coefficient `n / p_1`. Prime `n` is rejected with
/// [`Error::PrimeModulus`]; use [`min_monic_vanishing`] there.
pub fn min_vanishing(n: &Natural) -> Result<Polynomial> {
    let m = Modulus::at_least_two(n)?;
    let p1 = m.factorization.factors()[0].0.clone();
    if p1 == *n {
        return Err(Error::PrimeModulus(n.clone()));
    }
    let k = p1
        .to_usize()
        .ok_or_else(|| Error::TooLarge(format!("smallest prime factor {p1}")))?;
    Ok(generator_in(&m, k, &BasisVariant::Falling))
}

/// `(n / p_1) * (x^{p_1} - x)`
pub fn fermat_form(n: &Natural) -> Result<Polynomial> {
    let m = Modulus::at_least_two(n)?;
    let p1 = &m.factorization.factors()[0].0;
    let deg = p1
        .to_usize()
        .ok_or_else(|| Error::TooLarge(format!("smallest prime factor {p1}")))?;
    let lead = m.ring.from_natural(&(n / p1));
    let mut coeffs = vec![m.ring.zero(); deg + 1];
    coeffs[1] = m.ring.neg(&lead);
    coeffs[deg] = m.ring.add(&coeffs[deg], &lead);
    Polynomial::new(m.ring.clone(), coeffs)
}

/// Unique `b_0..b_d` with `F = sum b_k B_k` over `Z_n`.
pub fn decompose(n: &Natural, f: &Polynomial, variant: &BasisVariant) -> Result<Decomposition> {
    let ring = RingDescriptor::zn(n.clone())?;
    if *f.ring() != ring {
        return Err(Error::RingMismatch {
            left: f.ring().to_string(),
            right: ring.to_string(),
        });
    }
    let coeffs = decompose_prefix(f, variant, f.coeffs().len())
        .into_iter()
        .map(|e| e.into_residues().remove(0))
        .collect();
    Ok(Decomposition {
        basis: variant.clone(),
        coeffs,
    })
}

/// `F` vanishes on `Z_n` iff `n / gcd(k!, n)` divides every `b_k`. Only
/// `k < kempner(n)` matter since the cofactor is 1 beyond.
pub fn is_vanishing(n: &Natural, f: &Polynomial, variant: &BasisVariant) -> Result<bool> {
    let m = Modulus::new(n)?;
    m.check(f)?;
    if n.is_one() {
        return Ok(true);
    }
    let terms = m.relevant_terms(f.coeffs().len());
    let prefix = decompose_prefix(f, variant, terms);
    Ok(prefix
        .iter()
        .enumerate()
        .all(|(k, b)| (&b.residues()[0] % m.cofactor(k)).is_zero()))
}

/// Canonical representative of the function induced by `F`: reduce mod the
/// monic `B_s`, decompose, take each `b_k` mod `n / gcd(k!, n)`, recompose.
/// Degree is below `kempner(n)`.
pub fn normal_form(n: &Natural, f: &Polynomial, variant: &BasisVariant) -> Result<Polynomial> {
    let m = Modulus::new(n)?;
    m.check(f)?;
    if n.is_one() {
        return Ok(Polynomial::zero(&m.ring));
    }
    let reduced = match m.kempner.to_usize() {
        Some(s) if f.coeffs().len() > s => {
            let b_s = Polynomial::from_roots(&m.ring, &variant.roots(&m.ring, s));
            divmod_monic(f, &b_s)?.1
        }
        _ => f.clone(),
    };
    let coeffs: Vec<RingElement> = decompose_prefix(&reduced, variant, reduced.coeffs().len())
        .iter()
        .enumerate()
        .map(|(k, b)| m.ring.from_natural(&(&b.residues()[0] % m.cofactor(k))))
        .collect();
    Ok(recompose_elements(&m.ring, variant, &coeffs))
}

/// True iff `F` and `G` induce the same function on `Z_n`.
pub fn functions_equal(n: &Natural, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    let basis = BasisVariant::default();
    Ok(normal_form(n, f, &basis)? == normal_form(n, g, &basis)?)
}

/// Upper bound on `kempner(n)` accepted by [`count_polynomial_functions`].
const COUNT_KEMPNER_LIMIT: usize = 1 << 20;

/// Number of distinct polynomial functions on `Z_n`:
/// `prod_{k < s} n / gcd(k!, n)` with `s = kempner(n)`.
pub fn count_polynomial_functions(n: &Natural) -> Result<Natural> {
    let m = Modulus::new(n)?;
    let s = m.kempner_usize()?;
    if s > COUNT_KEMPNER_LIMIT {
        return Err(Error::TooLarge(format!("kempner({n}) = {s}")));
    }
    let mut total = Natural::one();
    let mut k = 0;
    while k < s {
        // cofactor is constant between consecutive k's that change gcd(k!, n)
        let c = m.cofactor(k);
        let mut run = 1u32;
        while k + (run as usize) < s && m.cofactor(k + run as usize) == c {
            run += 1;
        }
        total *= num_traits::pow::Pow::pow(&c, run);
        k += run as usize;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn p(n: u64, coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integers(&RingDescriptor::zn(n).unwrap(), coeffs.iter().copied())
    }

    fn vanishes_by_evaluation(f: &Polynomial) -> bool {
        f.ring().elements().all(|r| f.eval(&r).unwrap().is_zero())
    }

    #[test]
    fn basis_poly_examples() {
        for v in [
            BasisVariant::Rising,
            BasisVariant::Falling,
            BasisVariant::Shifted(7.into()),
        ] {
            assert_eq!(basis_poly(0, &v, &nat(12)).unwrap(), p(12, &[1]));
        }
        assert_eq!(
            basis_poly(2, &BasisVariant::Rising, &nat(12)).unwrap(),
            p(12, &[2, 3, 1])
        );
        assert_eq!(
            basis_poly(3, &BasisVariant::Falling, &nat(12)).unwrap(),
            p(12, &[0, 2, 9, 1])
        );
        // shifted:1 is the rising family
        assert_eq!(
            basis_poly(5, &BasisVariant::Shifted(1.into()), &nat(30)).unwrap(),
            basis_poly(5, &BasisVariant::Rising, &nat(30)).unwrap()
        );
        // shifted:-2 -> (x-2)(x-1)x
        assert_eq!(
            basis_poly(3, &BasisVariant::Shifted((-2).into()), &nat(12)).unwrap(),
            p(12, &[0, 2, -3, 1])
        );
    }

    #[test]
    fn basis_variant_parsing() {
        assert_eq!(
            "rising".parse::<BasisVariant>().unwrap(),
            BasisVariant::Rising
        );
        assert_eq!(
            "falling".parse::<BasisVariant>().unwrap(),
            BasisVariant::Falling
        );
        assert_eq!(
            "shifted:-3".parse::<BasisVariant>().unwrap(),
            BasisVariant::Shifted((-3).into())
        );
        assert!("shifted:x".parse::<BasisVariant>().is_err());
        assert!("upward".parse::<BasisVariant>().is_err());
        assert_eq!(BasisVariant::Shifted(4.into()).to_string(), "shifted:4");
    }

    #[test]
    fn generator_examples() {
        let r = BasisVariant::Rising;
        assert!(generator(&nat(12), 1, &r).unwrap().is_zero());
        let g2 = generator(&nat(12), 2, &r).unwrap();
        assert_eq!(g2, p(12, &[0, 6, 6]));
        assert!(vanishes_by_evaluation(&g2));
        let g4 = generator(&nat(12), 4, &r).unwrap();
        assert_eq!(g4, basis_poly(4, &r, &nat(12)).unwrap());
        assert!(g4.is_monic());
        assert!(vanishes_by_evaluation(&g4));
        assert!(generator(&nat(1), 0, &r).is_err());
    }

    #[test]
    fn generating_set_examples() {
        let r = BasisVariant::Rising;
        let set = generating_set(&nat(4), &r, true).unwrap();
        let ks: Vec<usize> = set.entries.iter().map(|e| e.k).collect();
        assert_eq!(ks, [2, 4]);
        assert_eq!(set.entries[0].poly, p(4, &[0, 2, 2]));
        assert!(set.entries[1].poly.is_monic());
        for e in &set.entries {
            assert!(vanishes_by_evaluation(&e.poly));
        }

        let set = generating_set(&nat(2), &r, true).unwrap();
        assert_eq!(set.entries.len(), 1);
        assert_eq!(set.entries[0].k, 2);
        // (x+1)(x+2) = x^2 + x over Z_2
        assert_eq!(set.entries[0].poly, p(2, &[0, 1, 1]));

        let set = generating_set(&nat(12), &r, false).unwrap();
        let ks: Vec<usize> = set.entries.iter().map(|e| e.k).collect();
        assert_eq!(ks, [2, 3, 4]);
    }

    #[test]
    fn min_monic_examples() {
        let f = min_monic_vanishing(&nat(12), &BasisVariant::Rising).unwrap();
        assert_eq!(f.degree(), Some(4));
        assert!(f.is_monic() && vanishes_by_evaluation(&f));
        assert_eq!(
            min_monic_vanishing(&nat(2), &BasisVariant::Falling).unwrap(),
            p(2, &[0, 1, 1])
        );
        for q in [3u64, 5, 7, 11] {
            let f = min_monic_vanishing(&nat(q), &BasisVariant::Rising).unwrap();
            assert_eq!(f.degree(), Some(q as usize));
            assert!(vanishes_by_evaluation(&f));
        }
    }

    #[test]
    fn min_vanishing_examples() {
        assert_eq!(min_vanishing(&nat(12)).unwrap(), p(12, &[0, 6, 6]));
        assert_eq!(min_vanishing(&nat(15)).unwrap(), p(15, &[0, 10, 0, 5]));
        assert_eq!(min_vanishing(&nat(4)).unwrap(), p(4, &[0, 2, 2]));
        assert_eq!(min_vanishing(&nat(7)), Err(Error::PrimeModulus(nat(7))));
        for n in [12u64, 15, 4] {
            assert!(vanishes_by_evaluation(&min_vanishing(&nat(n)).unwrap()));
        }
    }

    #[test]
    fn fermat_examples() {
        assert_eq!(fermat_form(&nat(12)).unwrap(), p(12, &[0, 6, 6]));
        assert_eq!(fermat_form(&nat(15)).unwrap(), p(15, &[0, 10, 0, 5]));
        assert_eq!(
            fermat_form(&nat(7)).unwrap(),
            p(7, &[0, -1, 0, 0, 0, 0, 0, 1])
        );
        assert_eq!(fermat_form(&nat(2)).unwrap(), p(2, &[0, 1, 1]));
    }

    #[test]
    fn decompose_examples() {
        let r = BasisVariant::Rising;
        let b3 = basis_poly(3, &r, &nat(12)).unwrap();
        assert_eq!(
            decompose(&nat(12), &b3, &r).unwrap().coeffs,
            [nat(0), nat(0), nat(0), nat(1)]
        );
        let d = decompose(&nat(12), &p(12, &[0, 6, 6]), &r).unwrap();
        assert_eq!(d.coeffs, [nat(0), nat(0), nat(6)]);
        assert_eq!(d.recompose(&nat(12)).unwrap(), p(12, &[0, 6, 6]));
        assert!(decompose(&nat(12), &p(12, &[]), &r)
            .unwrap()
            .coeffs
            .is_empty());
        assert!(decompose(&nat(12), &p(13, &[1]), &r).is_err());
    }

    /// Decomposition through top-down long division by `B_d, B_{d-1}, ...`.
    fn decompose_top_down(n: u64, f: &Polynomial, v: &BasisVariant) -> Vec<Natural> {
        let mut rest = f.clone();
        let mut out = vec![nat(0); f.coeffs().len()];
        while let Some(d) = rest.degree() {
            let b = basis_poly(d, v, &nat(n)).unwrap();
            let (q, r) = divmod_monic(&rest, &b).unwrap();
            // q is the constant b_d
            out[d] = q.coeff(0).residues()[0].clone();
            rest = r;
        }
        out
    }

    #[test]
    fn synthetic_and_long_division_decompositions_agree() {
        let variants = [
            BasisVariant::Rising,
            BasisVariant::Falling,
            BasisVariant::Shifted((-4).into()),
        ];
        for n in [6u64, 12, 18, 25] {
            for seed in 0..30i64 {
                let coeffs: Vec<i64> = (0..(seed % 9 + 1))
                    .map(|i| (seed * 31 + i * 17) % 97 - 40)
                    .collect();
                let f = p(n, &coeffs);
                for v in &variants {
                    let mut got = decompose(&nat(n), &f, v).unwrap().coeffs;
                    got.resize(f.coeffs().len(), nat(0));
                    assert_eq!(got, decompose_top_down(n, &f, v));
                }
            }
        }
    }

    #[test]
    fn is_vanishing_examples() {
        let r = BasisVariant::Rising;
        assert!(is_vanishing(&nat(12), &p(12, &[0, 6, 6]), &r).unwrap());
        assert!(!is_vanishing(&nat(12), &p(12, &[0, 1]), &r).unwrap());
        assert!(is_vanishing(&nat(1), &p(1, &[5, 3, 2]), &r).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let r = BasisVariant::Rising;
        let n = nat(12);
        assert!(normal_form(&n, &p(12, &[0, 6, 6]), &r).unwrap().is_zero());
        let b4 = basis_poly(4, &r, &n).unwrap();
        let f = b4.add_unchecked(&p(12, &[0, 1]));
        assert_eq!(normal_form(&n, &f, &r).unwrap(), p(12, &[0, 1]));

        let x4 = p(12, &[0, 0, 0, 0, 1]);
        let nf = normal_form(&n, &x4, &r).unwrap();
        assert!(nf.degree().unwrap() <= 3);
        for e in x4.ring().elements() {
            assert_eq!(nf.eval(&e).unwrap(), x4.eval(&e).unwrap());
        }
        let diff = x4.add_unchecked(&b4.neg());
        assert_eq!(nf, normal_form(&n, &diff, &r).unwrap());
        assert!(normal_form(&nat(1), &p(1, &[3]), &r).unwrap().is_zero());
    }

    #[test]
    fn functions_equal_examples() {
        let n = nat(12);
        assert!(functions_equal(&n, &p(12, &[0, 6, 6]), &fermat_form(&n).unwrap()).unwrap());
        assert!(functions_equal(&n, &p(12, &[0, 6, 6]), &p(12, &[])).unwrap());
        assert!(functions_equal(&nat(2), &p(2, &[0, 0, 1]), &p(2, &[0, 1])).unwrap());
        assert!(!functions_equal(&n, &p(12, &[0, 1]), &p(12, &[1, 1])).unwrap());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_polynomial_functions(&nat(1)).unwrap(), nat(1));
        assert_eq!(count_polynomial_functions(&nat(4)).unwrap(), nat(64));
        assert_eq!(count_polynomial_functions(&nat(6)).unwrap(), nat(108));
        // Z_p: every function is polynomial
        assert_eq!(count_polynomial_functions(&nat(5)).unwrap(), nat(3125));
    }

    #[test]
    fn minimal_degree_has_no_lower_vanishing_polys() {
        // composite n <= 12: brute force all nonzero polys of degree < p_1
        for n in [4u64, 6, 8, 9, 10, 12] {
            let p1 = arith::smallest_prime_factor(&nat(n))
                .unwrap()
                .to_usize()
                .unwrap();
            let ring = RingDescriptor::zn(n).unwrap();
            let mut digits = vec![0i64; p1];
            loop {
                let f = Polynomial::from_integers(&ring, digits.iter().copied());
                if !f.is_zero() {
                    assert!(!vanishes_by_evaluation(&f), "n={n} {f:?}");
                }
                let mut i = 0;
                while i < p1 {
                    digits[i] += 1;
                    if digits[i] < n as i64 {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == p1 {
                    break;
                }
            }
            assert_eq!(min_vanishing(&nat(n)).unwrap().degree(), Some(p1));
        }
    }
}

//! Dense univariate polynomials over finite products `Z_m1 x ... x Z_mj`.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Natural;
use crate::error::{Error, Result};

/// The ring `Z_m1 x ... x Z_mj`. A single modulus `[n]` is `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    moduli: Vec<Natural>,
}

/// One residue per component, each in `[0, m_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    residues: Vec<Natural>,
}

impl RingElement {
    pub fn residues(&self) -> &[Natural] {
        &self.residues
    }

    pub fn into_residues(self) -> Vec<Natural> {
        self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [r] = self.residues.as_slice() {
            return write!(f, "{r}");
        }
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

fn reduce_signed(value: &BigInt, m: &Natural) -> Natural {
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    value
        .mod_floor(&m)
        .to_biguint()
        .expect("mod_floor is nonnegative")
}

impl RingDescriptor {
    pub fn new(moduli: Vec<Natural>) -> Result<Self> {
        if moduli.is_empty() || moduli.iter().any(Zero::is_zero) {
            return Err(Error::InvalidRing);
        }
        Ok(Self { moduli })
    }

    /// `Z_n` for `n >= 1`.
    pub fn zn(n: impl Into<Natural>) -> Result<Self> {
        Self::new(vec![n.into()])
    }

    pub fn moduli(&self) -> &[Natural] {
        &self.moduli
    }

    /// Number of components.
    pub fn arity(&self) -> usize {
        self.moduli.len()
    }

    /// The modulus when the ring is `Z_n`.
    pub fn single_modulus(&self) -> Option<&Natural> {
        match self.moduli.as_slice() {
            [n] => Some(n),
            _ => None,
        }
    }

    /// Number of elements.
    pub fn order(&self) -> Natural {
        self.moduli.iter().product()
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            residues: vec![Natural::zero(); self.arity()],
        }
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            residues: self.moduli.iter().map(|m| Natural::one() % m).collect(),
        }
    }

    /// Builds an element from residues, reducing each into `[0, m_i)`.
    pub fn element(&self, residues: Vec<Natural>) -> Result<RingElement> {
        self.check_arity(residues.len())?;
        let residues = residues
            .into_iter()
            .zip(&self.moduli)
            .map(|(r, m)| r % m)
            .collect();
        Ok(RingElement { residues })
    }

    /// Builds an element from signed integers, reduced on ingestion.
    pub fn element_from_ints(&self, values: &[BigInt]) -> Result<RingElement> {
        self.check_arity(values.len())?;
        Ok(RingElement {
            residues: values
                .iter()
                .zip(&self.moduli)
                .map(|(v, m)| reduce_signed(v, m))
                .collect(),
        })
    }

    /// Image of an integer under `Z -> R` (the same value in every component).
    pub fn from_integer(&self, value: &BigInt) -> RingElement {
        RingElement {
            residues: self
                .moduli
                .iter()
                .map(|m| reduce_signed(value, m))
                .collect(),
        }
    }

    pub fn from_natural(&self, value: &Natural) -> RingElement {
        RingElement {
            residues: self.moduli.iter().map(|m| value % m).collect(),
        }
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got != self.arity() {
            return Err(Error::ElementArity {
                expected: self.arity(),
                got,
            });
        }
        Ok(())
    }

    /// True when `e` has the right arity and reduced residues.
    pub fn contains(&self, e: &RingElement) -> bool {
        e.residues.len() == self.arity() && e.residues.iter().zip(&self.moduli).all(|(r, m)| r < m)
    }

    pub(crate) fn check_element(&self, e: &RingElement) -> Result<()> {
        self.check_arity(e.residues.len())?;
        if !self.contains(e) {
            return Err(Error::RingMismatch {
                left: e.to_string(),
                right: self.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = a.clone();
        self.add_assign(&mut out, b);
        out
    }

    pub(crate) fn add_assign(&self, a: &mut RingElement, b: &RingElement) {
        for ((x, y), m) in a.residues.iter_mut().zip(&b.residues).zip(&self.moduli) {
            *x += y;
            if &*x >= m {
                *x -= m;
            }
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement {
            residues: a
                .residues
                .iter()
                .zip(&self.moduli)
                .map(|(x, m)| if x.is_zero() { Natural::zero() } else { m - x })
                .collect(),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.moduli)
                .map(|((x, y), m)| (x * y) % m)
                .collect(),
        }
    }

    /// `a += b * c`
    pub(crate) fn mul_add_assign(&self, a: &mut RingElement, b: &RingElement, c: &RingElement) {
        for (((x, y), z), m) in a
            .residues
            .iter_mut()
            .zip(&b.residues)
            .zip(&c.residues)
            .zip(&self.moduli)
        {
            if y.is_zero() || z.is_zero() {
                continue;
            }
            *x += y * z;
            *x %= m;
        }
    }

    /// All elements, lexicographic in the residue tuple.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            ring: self,
            next: Some(self.zero()),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Iterator over the elements of a ring, see [`RingDescriptor::elements`].
pub struct Elements<'a> {
    ring: &'a RingDescriptor,
    next: Option<RingElement>,
}

impl Iterator for Elements<'_> {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for (r, m) in succ.residues.iter_mut().zip(&self.ring.moduli).rev() {
            *r += 1u32;
            if &*r == m {
                r.set_zero();
            } else {
                carried = false;
                break;
            }
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`. The last
/// coefficient is nonzero, the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingDescriptor,
    coeffs: Vec<RingElement>,
}

impl Polynomial {
    /// Reduces every coefficient and strips trailing zeros.
    pub fn new(ring: RingDescriptor, coeffs: Vec<RingElement>) -> Result<Self> {
        let coeffs = coeffs
            .into_iter()
            .map(|c| ring.element(c.residues))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_reduced(ring, coeffs))
    }

    /// Polynomial with `coeffs` as integer coefficients (`Z -> R` image each).
    pub fn from_integers<I>(ring: &RingDescriptor, coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let coeffs = coeffs
            .into_iter()
            .map(|c| ring.from_integer(&c.into()))
            .collect();
        Self::from_reduced(ring.clone(), coeffs)
    }

    pub(crate) fn from_reduced(ring: RingDescriptor, mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        Self { ring, coeffs }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        Self {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: &RingDescriptor, c: RingElement) -> Self {
        Self::from_reduced(ring.clone(), vec![c])
    }

    /// `x`
    pub fn x(ring: &RingDescriptor) -> Self {
        Self::from_reduced(ring.clone(), vec![ring.zero(), ring.one()])
    }

    /// `x - root`
    pub fn linear(ring: &RingDescriptor, root: &RingElement) -> Self {
        Self::from_reduced(ring.clone(), vec![ring.neg(root), ring.one()])
    }

    /// Product of `(x - r)` over `roots`.
    pub fn from_roots<'a, I>(ring: &RingDescriptor, roots: I) -> Self
    where
        I: IntoIterator<Item = &'a RingElement>,
    {
        let mut acc = Self::one(ring);
        for r in roots {
            acc = acc.mul_linear(r);
        }
        acc
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RingElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(&self.ring.one())
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            self.ring.add_assign(c, d);
        }
        Self::from_reduced(self.ring.clone(), coeffs)
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                self.ring.mul_add_assign(&mut coeffs[i + j], a, b);
            }
        }
        Self::from_reduced(self.ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::from_reduced(self.ring.clone(), coeffs)
    }

    /// `c * self`
    pub fn scale(&self, c: &RingElement) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::from_reduced(self.ring.clone(), coeffs)
    }

    /// `self * (x - root)`
    pub fn mul_linear(&self, root: &RingElement) -> Self {
        let ring = &self.ring;
        let neg_root = ring.neg(root);
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ring.zero());
        coeffs.extend(self.coeffs.iter().cloned());
        for (i, a) in self.coeffs.iter().enumerate() {
            ring.mul_add_assign(&mut coeffs[i], a, &neg_root);
        }
        Self::from_reduced(ring.clone(), coeffs)
    }

    /// Divides by `(x - root)`: returns `(quotient, remainder)` where the
    /// remainder is `self(root)`.
    pub fn div_linear(&self, root: &RingElement) -> (Self, RingElement) {
        let ring = &self.ring;
        if self.coeffs.is_empty() {
            return (Self::zero(ring), ring.zero());
        }
        let mut quotient = vec![ring.zero(); self.coeffs.len() - 1];
        let mut carry = ring.zero();
        for i in (0..self.coeffs.len()).rev() {
            let mut next = self.coeffs[i].clone();
            ring.mul_add_assign(&mut next, &carry, root);
            if i == 0 {
                return (Self::from_reduced(ring.clone(), quotient), next);
            }
            quotient[i - 1] = next.clone();
            carry = next;
        }
        unreachable!()
    }

    pub(crate) fn eval_unchecked(&self, r: &RingElement) -> RingElement {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.mul(&acc, r);
            self.ring.add_assign(&mut acc, c);
        }
        acc
    }

    pub fn eval(&self, r: &RingElement) -> Result<RingElement> {
        self.ring.check_element(r)?;
        Ok(self.eval_unchecked(r))
    }

    /// Same polynomial with every coefficient tuple recomputed by `f` over
    /// the ring `target`.
    pub(crate) fn map_coeffs<F>(&self, target: &RingDescriptor, f: F) -> Self
    where
        F: Fn(&RingElement) -> RingElement,
    {
        Self::from_reduced(target.clone(), self.coeffs.iter().map(f).collect())
    }
}

pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.check_same_ring(b)?;
    Ok(a.add_unchecked(b))
}

pub fn poly_sub(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.check_same_ring(b)?;
    Ok(a.add_unchecked(&b.neg()))
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.check_same_ring(b)?;
    Ok(a.mul_unchecked(b))
}

pub fn poly_eval(p: &Polynomial, r: &RingElement) -> Result<RingElement> {
    p.eval(r)
}

/// Long division by a monic divisor. Exact over any commutative ring
/// because the leading coefficient of `div` is invertible.
pub fn divmod_monic(num: &Polynomial, div: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    num.check_same_ring(div)?;
    if !div.is_monic() {
        return Err(Error::NotMonic);
    }
    let ring = &num.ring;
    let dd = div.coeffs.len() - 1;
    if num.coeffs.len() <= dd {
        return Ok((Polynomial::zero(ring), num.clone()));
    }
    let mut rem = num.coeffs.clone();
    let mut quot = vec![ring.zero(); rem.len() - dd];
    let neg_div: Vec<RingElement> = div.coeffs[..dd].iter().map(|c| ring.neg(c)).collect();
    for i in (0..quot.len()).rev() {
        let q = std::mem::replace(&mut rem[i + dd], ring.zero());
        if q.is_zero() {
            continue;
        }
        for (j, c) in neg_div.iter().enumerate() {
            ring.mul_add_assign(&mut rem[i + j], &q, c);
        }
        quot[i] = q;
    }
    rem.truncate(dd);
    Ok((
        Polynomial::from_reduced(ring.clone(), quot),
        Polynomial::from_reduced(ring.clone(), rem),
    ))
}

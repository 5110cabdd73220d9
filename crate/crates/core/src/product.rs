//! Product rings `R = R_1 x ... x R_k`: splitting polynomials into
//! component polynomials and back, componentwise vanishing and normal forms,
//! the CRT split of `Z_n`, and lifting along a duplicated component.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::One;

use crate::arith::{self, Natural};
use crate::error::{Error, Result};
use crate::ideal::{self, BasisVariant};
use crate::polyring::{Polynomial, RingDescriptor, RingElement};

/// Projects every coefficient tuple onto each component:
/// `P -> (P_1, ..., P_k)` with `P_i` over `Z_{m_i}`.
pub fn phi(p: &Polynomial) -> Vec<Polynomial> {
    p.ring()
        .moduli()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let target = RingDescriptor::zn(m.clone()).expect("moduli are >= 1");
            let coeffs = p
                .coeffs()
                .iter()
                .map(|c| target.from_natural(&c.residues()[i]))
                .collect();
            Polynomial::new(target.clone(), coeffs).expect("arity 1")
        })
        .collect()
}

/// Inverse of [`phi`]: reassembles component polynomials (of any degrees)
/// into one polynomial over `ring`.
pub fn phi_inv(ring: &RingDescriptor, components: &[Polynomial]) -> Result<Polynomial> {
    if components.len() != ring.arity() {
        return Err(Error::ElementArity {
            expected: ring.arity(),
            got: components.len(),
        });
    }
    for (c, m) in components.iter().zip(ring.moduli()) {
        if c.ring().single_modulus() != Some(m) {
            return Err(Error::RingMismatch {
                left: c.ring().to_string(),
                right: m.to_string(),
            });
        }
    }
    let len = components
        .iter()
        .map(|c| c.coeffs().len())
        .max()
        .unwrap_or(0);
    let coeffs = (0..len)
        .map(|j| {
            let residues = components
                .iter()
                .map(|c| c.coeff(j).residues()[0].clone())
                .collect();
            ring.element(residues)
        })
        .collect::<Result<Vec<_>>>()?;
    Polynomial::new(ring.clone(), coeffs)
}

/// A polynomial over a product of `Z_m`'s vanishes iff each component does.
pub fn is_vanishing_product(p: &Polynomial) -> Result<bool> {
    for c in phi(p) {
        let m = c.ring().single_modulus().expect("component ring").clone();
        if !ideal::is_vanishing(&m, &c, &BasisVariant::default())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Componentwise [`ideal::normal_form`]; two polynomials over the product
/// induce the same function iff these tuples agree.
pub fn normal_form_product(p: &Polynomial) -> Result<Vec<Polynomial>> {
    phi(p)
        .into_iter()
        .map(|c| {
            let m = c.ring().single_modulus().expect("component ring").clone();
            ideal::normal_form(&m, &c, &BasisVariant::default())
        })
        .collect()
}

/// `Z_n = Z_{p_1^e_1} x ... x Z_{p_l^e_l}` with element maps both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtSplit {
    n: Natural,
    descriptor: RingDescriptor,
    /// CRT idempotents: `idempotents[i] = 1 mod m_i`, `0 mod m_j` for `j != i`.
    idempotents: Vec<Natural>,
}

impl CrtSplit {
    pub fn n(&self) -> &Natural {
        &self.n
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn to_components(&self, r: &Natural) -> RingElement {
        self.descriptor.from_natural(r)
    }

    pub fn from_components(&self, e: &RingElement) -> Natural {
        let total: Natural = e
            .residues()
            .iter()
            .zip(&self.idempotents)
            .map(|(r, idem)| r * idem)
            .sum();
        total % &self.n
    }

    /// Moves a polynomial over `Z_n` to the product descriptor.
    pub fn transport(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring().single_modulus() != Some(&self.n) {
            return Err(Error::RingMismatch {
                left: f.ring().to_string(),
                right: self.n.to_string(),
            });
        }
        Ok(f.map_coeffs(&self.descriptor, |c| self.to_components(&c.residues()[0])))
    }

    /// Inverse of [`CrtSplit::transport`].
    pub fn untransport(&self, g: &Polynomial) -> Result<Polynomial> {
        if *g.ring() != self.descriptor {
            return Err(Error::RingMismatch {
                left: g.ring().to_string(),
                right: self.descriptor.to_string(),
            });
        }
        let zn = RingDescriptor::zn(self.n.clone())?;
        Ok(g.map_coeffs(&zn, |c| zn.from_natural(&self.from_components(c))))
    }
}

fn signed(v: &Natural) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v.clone())
}

pub fn crt_split(n: &Natural) -> Result<CrtSplit> {
    if *n < Natural::from(2u32) {
        return Err(Error::TooSmall {
            min: 2,
            got: n.clone(),
        });
    }
    let moduli = arith::factorize(n)?.prime_powers();
    let idempotents = moduli
        .iter()
        .map(|m| {
            let rest = n / m;
            // rest * inv(rest mod m) is 1 mod m and 0 mod every other prime power
            let eg = signed(&(&rest % m)).extended_gcd(&signed(m));
            debug_assert!(eg.gcd.is_one());
            let inv =
                eg.x.mod_floor(&signed(m))
                    .to_biguint()
                    .expect("nonnegative");
            (rest * inv) % n
        })
        .collect();
    Ok(CrtSplit {
        n: n.clone(),
        descriptor: RingDescriptor::new(moduli)?,
        idempotents,
    })
}

/// Maps `P` over `S x T` to `S x S x T` by repeating component `position`
/// right after itself in every coefficient. Vanishing is preserved.
pub fn lift_duplicate(p: &Polynomial, position: usize) -> Result<Polynomial> {
    let ring = p.ring();
    if position >= ring.arity() {
        return Err(Error::BadIndex {
            index: position,
            len: ring.arity(),
        });
    }
    let mut moduli = ring.moduli().to_vec();
    moduli.insert(position + 1, moduli[position].clone());
    let target = RingDescriptor::new(moduli)?;
    Ok(p.map_coeffs(&target, |c| {
        let mut r = c.residues().to_vec();
        r.insert(position + 1, r[position].clone());
        target.element(r).expect("arity matches")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{eval_all_zero, Budget};

    fn ring(moduli: &[u32]) -> RingDescriptor {
        RingDescriptor::new(moduli.iter().map(|&m| Natural::from(m)).collect()).unwrap()
    }

    fn elem(r: &RingDescriptor, vals: &[i64]) -> RingElement {
        let v: Vec<BigInt> = vals.iter().map(|&x| x.into()).collect();
        r.element_from_ints(&v).unwrap()
    }

    fn poly(r: &RingDescriptor, coeffs: &[&[i64]]) -> Polynomial {
        Polynomial::new(r.clone(), coeffs.iter().map(|c| elem(r, c)).collect()).unwrap()
    }

    fn zpoly(m: u32, coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integers(&ring(&[m]), coeffs.iter().copied())
    }

    #[test]
    fn phi_examples() {
        let r23 = ring(&[2, 3]);
        let p = poly(&r23, &[&[0, 1], &[1, 2]]);
        assert_eq!(phi(&p), vec![zpoly(2, &[0, 1]), zpoly(3, &[1, 2])]);
        assert_eq!(
            phi(&Polynomial::zero(&r23)),
            vec![zpoly(2, &[]), zpoly(3, &[])]
        );

        let split = crt_split(&Natural::from(12u32)).unwrap();
        let t = split.transport(&zpoly(12, &[0, 6, 6])).unwrap();
        assert_eq!(phi(&t), vec![zpoly(4, &[0, 2, 2]), zpoly(3, &[])]);
    }

    #[test]
    fn phi_inv_examples() {
        let r23 = ring(&[2, 3]);
        let p = phi_inv(&r23, &[zpoly(2, &[0, 1]), zpoly(3, &[1, 2])]).unwrap();
        assert_eq!(p, poly(&r23, &[&[0, 1], &[1, 2]]));
        assert!(phi_inv(&r23, &[zpoly(2, &[]), zpoly(3, &[])])
            .unwrap()
            .is_zero());
        let p = phi_inv(&r23, &[zpoly(2, &[0, 0, 1]), zpoly(3, &[1])]).unwrap();
        assert_eq!(p, poly(&r23, &[&[0, 1], &[0, 0], &[1, 0]]));
        assert_eq!(phi(&p), vec![zpoly(2, &[0, 0, 1]), zpoly(3, &[1])]);
        assert!(phi_inv(&r23, &[zpoly(2, &[1])]).is_err());
        assert!(phi_inv(&r23, &[zpoly(3, &[1]), zpoly(2, &[1])]).is_err());
    }

    #[test]
    fn vanishing_product_examples() {
        let r23 = ring(&[2, 3]);
        let b = Budget::default();
        let p = phi_inv(&r23, &[zpoly(2, &[0, 1, 1]), zpoly(3, &[])]).unwrap();
        assert!(is_vanishing_product(&p).unwrap());
        assert!(eval_all_zero(&r23, &p, &b).unwrap());
        let q = phi_inv(&r23, &[zpoly(2, &[0, 1]), zpoly(3, &[])]).unwrap();
        assert!(!is_vanishing_product(&q).unwrap());
        assert!(!q.eval(&elem(&r23, &[1, 0])).unwrap().is_zero());
        assert!(is_vanishing_product(&Polynomial::zero(&r23)).unwrap());
    }

    #[test]
    fn crt_split_examples() {
        let moduli = |n: u32| {
            crt_split(&Natural::from(n))
                .unwrap()
                .descriptor()
                .moduli()
                .to_vec()
        };
        assert_eq!(moduli(12), [Natural::from(4u32), Natural::from(3u32)]);
        assert_eq!(moduli(8), [Natural::from(8u32)]);
        assert_eq!(moduli(30), [2u32, 3, 5].map(Natural::from));
        assert!(crt_split(&Natural::one()).is_err());
    }

    #[test]
    fn crt_element_maps_are_inverse() {
        for n in 2..=200u32 {
            let split = crt_split(&Natural::from(n)).unwrap();
            for r in 0..n {
                let r = Natural::from(r);
                assert_eq!(split.from_components(&split.to_components(&r)), r);
            }
        }
    }

    #[test]
    fn normal_form_product_examples() {
        let r23 = ring(&[2, 3]);
        let van = phi_inv(&r23, &[zpoly(2, &[0, 1, 1]), zpoly(3, &[0, 2, 0, 1])]).unwrap();
        assert!(normal_form_product(&van)
            .unwrap()
            .iter()
            .all(Polynomial::is_zero));

        let p = poly(&r23, &[&[1, 2], &[0, 1], &[1, 1]]);
        let shifted = crate::polyring::poly_add(&p, &van).unwrap();
        assert_eq!(
            normal_form_product(&p).unwrap(),
            normal_form_product(&shifted).unwrap()
        );

        let x6 = Polynomial::new(
            r23.clone(),
            (0..=6)
                .map(|i| if i == 6 { r23.one() } else { r23.zero() })
                .collect(),
        )
        .unwrap();
        let nf = normal_form_product(&x6).unwrap();
        assert!(nf[0].degree().is_none_or(|d| d < 2));
        assert!(nf[1].degree().is_none_or(|d| d < 3));
        let back = phi_inv(&r23, &nf).unwrap();
        for e in r23.elements() {
            assert_eq!(back.eval(&e).unwrap(), x6.eval(&e).unwrap());
        }
    }

    #[test]
    fn lift_examples() {
        let r22 = ring(&[2, 2]);
        let p = poly(&r22, &[&[0, 0], &[1, 1], &[1, 1]]);
        let lifted = lift_duplicate(&p, 0).unwrap();
        let r222 = ring(&[2, 2, 2]);
        assert_eq!(lifted, poly(&r222, &[&[0, 0, 0], &[1, 1, 1], &[1, 1, 1]]));
        let b = Budget::default();
        assert!(eval_all_zero(&r222, &lifted, &b).unwrap());

        assert!(lift_duplicate(&Polynomial::zero(&r22), 1)
            .unwrap()
            .is_zero());

        let x = Polynomial::x(&r22);
        let lx = lift_duplicate(&x, 1).unwrap();
        assert_eq!(lx, Polynomial::x(&r222));
        assert!(!lx.eval(&r222.one()).unwrap().is_zero());

        assert_eq!(
            lift_duplicate(&p, 2),
            Err(Error::BadIndex { index: 2, len: 2 })
        );
    }
}

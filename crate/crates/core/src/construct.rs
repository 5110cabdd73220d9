//! Vanishing polynomials built from zero divisors.
//!
//! For `y` in a finite ring, `F_y(x)` is the product of `(x - a)` over one
//! representative `a` of each coset of `(y)`; it always evaluates into `(y)`.
//! If `y_1 * ... * y_n = 0` then
//! `G(x) = (prod_{j not in N} y_j) * prod_{i in N} F_{y_i}(x)` vanishes.
//! [`reduce_grouping`] then merges equal linear factors coming from
//! different `y`'s when joint divisibility by both implies divisibility by
//! the product.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{self, Natural};
use crate::error::{Error, Result};
use crate::oracle::{self, Budget};
use crate::polyring::{Polynomial, RingDescriptor, RingElement};

/// Rings up to this size get their grouping result re-checked exhaustively.
const REVERIFY_LIMIT: u64 = 10_000;

/// A factor `(x - root)`; `sources` are the indices of the `y`'s whose
/// cosets this factor covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    pub root: RingElement,
    pub sources: Vec<usize>,
}

/// `scalar * prod (x - root)` over `ring`, with the zero divisors `ys` the
/// factors were drawn from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPolynomial {
    pub ring: RingDescriptor,
    pub scalar: RingElement,
    pub factors: Vec<LinearFactor>,
    pub ys: Vec<RingElement>,
}

impl FactoredPolynomial {
    pub fn expand(&self) -> Polynomial {
        Polynomial::from_roots(&self.ring, self.factors.iter().map(|f| &f.root)).scale(&self.scalar)
    }

    /// Number of linear factors.
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn roots(&self) -> impl Iterator<Item = &RingElement> {
        self.factors.iter().map(|f| &f.root)
    }
}

impl fmt::Display for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() || self.scalar != self.ring.one() {
            write!(f, "{}", self.scalar)?;
        }
        for factor in &self.factors {
            if factor.root.is_zero() {
                write!(f, "(x)")?;
            } else {
                write!(f, "(x-{})", factor.root)?;
            }
        }
        Ok(())
    }
}

/// Per-component generator `gcd(y_i, m_i)` of the principal ideal `(y)`.
fn ideal_gcds(ring: &RingDescriptor, y: &RingElement) -> Vec<Natural> {
    y.residues()
        .iter()
        .zip(ring.moduli())
        .map(|(r, m)| r.gcd(m))
        .collect()
}

fn in_ideal(gcds: &[Natural], d: &RingElement) -> bool {
    d.residues()
        .iter()
        .zip(gcds)
        .all(|(r, g)| (r % g).is_zero())
}

/// Elements in the canonical scan order: each component runs `1, 2, ..., m`
/// (so `m = 0` comes last), tuples in lexicographic order.
fn canonical_order(ring: &RingDescriptor) -> impl Iterator<Item = RingElement> + '_ {
    ring.elements().map(move |e| {
        let shifted = e.residues().iter().map(|r| r + 1u32).collect();
        ring.element(shifted).expect("arity matches")
    })
}

/// One representative per coset of `(y)`: component `i` runs over
/// `1..=gcd(y_i, m_i)`, tuples in lexicographic order.
pub fn coset_representatives(ring: &RingDescriptor, y: &RingElement) -> Result<Vec<RingElement>> {
    ring.check_element(y)?;
    let gcds = ideal_gcds(ring, y);
    let quotient = RingDescriptor::new(gcds)?;
    Ok(quotient
        .elements()
        .map(|e| {
            let shifted = e.residues().iter().map(|r| r + 1u32).collect();
            ring.element(shifted).expect("arity matches")
        })
        .collect())
}

/// `F_y(x) = prod (x - a)` over [`coset_representatives`].
pub fn f_y(ring: &RingDescriptor, y: &RingElement) -> Result<FactoredPolynomial> {
    let factors = coset_representatives(ring, y)?
        .into_iter()
        .map(|root| LinearFactor {
            root,
            sources: vec![0],
        })
        .collect();
    Ok(FactoredPolynomial {
        ring: ring.clone(),
        scalar: ring.one(),
        factors,
        ys: vec![y.clone()],
    })
}

/// `(prod_{j not in N} y_j) * prod_{i in N} F_{y_i}(x)` for zero divisors
/// whose product is zero.
pub fn general_vanishing(
    ring: &RingDescriptor,
    ys: &[RingElement],
    expand: &[usize],
) -> Result<FactoredPolynomial> {
    for y in ys {
        ring.check_element(y)?;
    }
    let product = ys.iter().fold(ring.one(), |acc, y| ring.mul(&acc, y));
    if !product.is_zero() {
        return Err(Error::NonzeroProduct);
    }
    let mut chosen = expand.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if let Some(&bad) = chosen.iter().find(|&&i| i >= ys.len()) {
        return Err(Error::BadIndex {
            index: bad,
            len: ys.len(),
        });
    }
    let mut scalar = ring.one();
    let mut factors = Vec::new();
    for (i, y) in ys.iter().enumerate() {
        if chosen.binary_search(&i).is_ok() {
            for root in coset_representatives(ring, y)? {
                factors.push(LinearFactor {
                    root,
                    sources: vec![i],
                });
            }
        } else {
            scalar = ring.mul(&scalar, y);
        }
    }
    Ok(FactoredPolynomial {
        ring: ring.clone(),
        scalar,
        factors,
        ys: ys.to_vec(),
    })
}

/// Whether every common multiple of `y_i` and `y_j` is a multiple of
/// `y_i * y_j`. Per component with `g = gcd(y, m)`: `(g_i) ∩ (g_j)` is
/// `(lcm(g_i, g_j))` and `(y_i y_j)` is `(gcd(g_i g_j, m))`, and the first is
/// contained in the second iff the two generators agree.
pub fn groupable(ring: &RingDescriptor, yi: &RingElement, yj: &RingElement) -> bool {
    ideal_gcds(ring, yi)
        .iter()
        .zip(ideal_gcds(ring, yj))
        .zip(ring.moduli())
        .all(|((gi, gj), m)| gi.lcm(&gj) == (gi * &gj).gcd(m))
}

struct Grouping<'a> {
    compat: Vec<Vec<bool>>,
    gcds: Vec<Vec<Natural>>,
    ring: &'a RingDescriptor,
}

impl Grouping<'_> {
    fn covers(&self, f: &LinearFactor, d: &RingElement) -> bool {
        let diff = self.ring.sub(d, &f.root);
        f.sources.iter().all(|&s| in_ideal(&self.gcds[s], &diff))
    }

    fn joinable(&self, a: &LinearFactor, b: &LinearFactor) -> bool {
        a.sources
            .iter()
            .all(|&s| b.sources.iter().all(|&t| s != t && self.compat[s][t]))
    }

    /// Largest pairwise joinable subset of `cands`; among those of maximal
    /// size, the lexicographically first.
    fn best_group(&self, factors: &[LinearFactor], cands: &[usize]) -> Vec<usize> {
        fn search(
            g: &Grouping<'_>,
            factors: &[LinearFactor],
            cands: &[usize],
            at: usize,
            current: &mut Vec<usize>,
            best: &mut Vec<usize>,
        ) {
            if current.len() > best.len() {
                *best = current.clone();
            }
            if at == cands.len() || current.len() + (cands.len() - at) <= best.len() {
                return;
            }
            let f = &factors[cands[at]];
            if current.iter().all(|&c| g.joinable(&factors[c], f)) {
                current.push(cands[at]);
                search(g, factors, cands, at + 1, current, best);
                current.pop();
            }
            search(g, factors, cands, at + 1, current, best);
        }
        let mut best = Vec::new();
        search(self, factors, cands, 0, &mut Vec::new(), &mut best);
        best
    }
}

/// Greedy grouping of equal linear factors across compatible `y`'s.
///
/// Each round scans candidate roots `d` in canonical order (components
/// `1..=m`), collects the remaining factors whose cosets contain `d`, and
/// picks the largest pairwise compatible subset. The round with the largest
/// group wins (earliest `d` on ties); its factors are replaced by a single
/// `(x - d)`. Rounds stop once no group of two or more exists; leftover
/// factors keep their roots and order. The result is not claimed to use the
/// fewest groups possible.
pub fn reduce_grouping(g: &FactoredPolynomial) -> Result<FactoredPolynomial> {
    let ring = &g.ring;
    let max_source = g
        .factors
        .iter()
        .flat_map(|f| f.sources.iter().copied())
        .max();
    if let Some(s) = max_source.filter(|&s| s >= g.ys.len()) {
        return Err(Error::BadIndex {
            index: s,
            len: g.ys.len(),
        });
    }
    let grouping = Grouping {
        compat: g
            .ys
            .iter()
            .map(|a| g.ys.iter().map(|b| groupable(ring, a, b)).collect())
            .collect(),
        gcds: g.ys.iter().map(|y| ideal_gcds(ring, y)).collect(),
        ring,
    };

    let factors = &g.factors;
    let mut alive = vec![true; factors.len()];
    let mut merged = Vec::new();
    loop {
        let mut best: Option<(RingElement, Vec<usize>)> = None;
        for d in canonical_order(ring) {
            let cands: Vec<usize> = (0..factors.len())
                .filter(|&i| alive[i] && grouping.covers(&factors[i], &d))
                .collect();
            let best_len = best.as_ref().map_or(1, |(_, grp)| grp.len());
            if cands.len() <= best_len {
                continue;
            }
            let group = grouping.best_group(factors, &cands);
            if group.len() > best_len {
                best = Some((d, group));
            }
        }
        let Some((root, group)) = best else { break };
        let mut sources: Vec<usize> = group
            .iter()
            .flat_map(|&i| factors[i].sources.iter().copied())
            .collect();
        sources.sort_unstable();
        for &i in &group {
            alive[i] = false;
        }
        merged.push(LinearFactor { root, sources });
    }
    merged.extend(
        factors
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(f, _)| f.clone()),
    );

    let reduced = FactoredPolynomial {
        ring: ring.clone(),
        scalar: g.scalar.clone(),
        factors: merged,
        ys: g.ys.clone(),
    };
    if ring.order() <= Natural::from(REVERIFY_LIMIT) {
        let budget = Budget::default();
        if oracle::eval_all_zero(ring, &g.expand(), &budget)?
            && !oracle::eval_all_zero(ring, &reduced.expand(), &budget)?
        {
            return Err(Error::GroupingNotVanishing);
        }
    }
    Ok(reduced)
}

/// The zero-divisor construction over `Z_n` that mirrors the generator of
/// index `k`: the `y`'s are the primes of `n` with multiplicity, `N` takes
/// `min(e_p, v_p(k!))` copies of each prime `p` so that the expanded part
/// multiplies to `gcd(n, k!)`, and the result is grouped.
pub fn classify_check(n: &Natural, k: u64) -> Result<FactoredPolynomial> {
    if *n < Natural::from(2u32) {
        return Err(Error::TooSmall {
            min: 2,
            got: n.clone(),
        });
    }
    let ring = RingDescriptor::zn(n.clone())?;
    let factorization = arith::factorize(n)?;
    let k = Natural::from(k);
    let mut ys = Vec::new();
    let mut expand = Vec::new();
    for (p, e) in factorization.factors() {
        let v = arith::legendre_valuation(p, &k)?;
        let take = v.min(Natural::from(*e));
        let mut taken = Natural::zero();
        for _ in 0..*e {
            if taken < take {
                expand.push(ys.len());
                taken += 1u32;
            }
            ys.push(ring.from_natural(p));
        }
    }
    debug_assert!(expand.len() <= ys.len());
    let g = general_vanishing(&ring, &ys, &expand)?;
    reduce_grouping(&g)
}

/// Leading coefficient `n / gcd(n, k!)` that [`classify_check`] must carry.
pub fn classify_scalar(n: &Natural, k: u64) -> Result<Natural> {
    let g = arith::gcd_factorial(&Natural::from(k), n)?;
    Ok(if g.is_one() { n.clone() } else { n / g })
}

//! Closed-form `Λ(G, H)` and the elementary bounds that hold for every pair.
//!
//! When `G` is solvable or `H` is nilpotent,
//!
//! ```text
//! Λ(G, H) = 1 / min(P ∩ N)   (0 when the intersection is empty)
//! ```
//!
//! where `P` is the set of primes dividing `gcd(|G|, |H|)` and `N` the set
//! of indices of proper normal subgroups of `G`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::homspace::Homomorphism;
use crate::mask::SubsetMask;
use crate::number;
use crate::rational::Rational;
use crate::structure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaVerdict {
    /// `G` solvable or `H` nilpotent. When false the value is advisory only.
    pub applicable: bool,
    pub domain_solvable: bool,
    pub codomain_nilpotent: bool,
    pub prime_set: BTreeSet<usize>,
    pub index_set: BTreeSet<usize>,
    pub intersection: BTreeSet<usize>,
    pub value: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundReason {
    /// No non-trivial lower bound applies.
    Trivial,
    /// `G` has a normal subgroup of prime index `p` and `p` divides `|H|`.
    NormalPrimeIndex { p: usize },
    /// `p` is the smallest prime dividing `|G|`.
    SmallestPrimeOfDomain { p: usize },
    /// `H` is a `p`-group.
    PGroupCodomain { p: usize },
    /// `gcd(|G|, |H|) = 1`, so every affine map is constant.
    Coprime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: Rational,
    pub reason: BoundReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: Bound,
    pub upper: Bound,
    /// Every bound that applied, lower bounds first.
    pub reasons: Vec<Bound>,
}

/// Primes dividing `gcd(|G|, |H|)`.
pub fn common_prime_set(g: &FiniteGroup, h: &FiniteGroup) -> BTreeSet<usize> {
    number::prime_divisors(number::gcd(g.order(), h.order()))
}

pub fn lambda_formula(g: &FiniteGroup, h: &FiniteGroup) -> Result<FormulaVerdict> {
    if h.is_trivial() {
        return Err(Error::TrivialCodomain);
    }
    let domain_solvable = structure::solvability_class(g).solvable;
    let codomain_nilpotent = structure::solvability_class(h).nilpotent;
    Ok(verdict_from_parts(
        domain_solvable,
        codomain_nilpotent,
        common_prime_set(g, h),
        structure::normal_index_set(g),
    ))
}

/// The case split itself, from precomputed structure.
pub fn verdict_from_parts(
    domain_solvable: bool,
    codomain_nilpotent: bool,
    prime_set: BTreeSet<usize>,
    index_set: BTreeSet<usize>,
) -> FormulaVerdict {
    let intersection: BTreeSet<usize> = prime_set.intersection(&index_set).copied().collect();
    let value = intersection
        .first()
        .map_or(Rational::ZERO, |&p| Rational::reciprocal_of(p as u64));
    FormulaVerdict {
        applicable: domain_solvable || codomain_nilpotent,
        domain_solvable,
        codomain_nilpotent,
        prime_set,
        index_set,
        intersection,
        value,
    }
}

pub fn lambda_bounds(g: &FiniteGroup, h: &FiniteGroup) -> Result<BoundsReport> {
    if h.is_trivial() {
        return Err(Error::TrivialCodomain);
    }
    Ok(bounds_from_parts(
        g.order(),
        h.order(),
        &structure::normal_index_set(g),
    ))
}

pub fn bounds_from_parts(
    g_order: usize,
    h_order: usize,
    index_set: &BTreeSet<usize>,
) -> BoundsReport {
    let mut lowers = Vec::new();
    for &m in index_set {
        if number::is_prime(m) && h_order.is_multiple_of(m) {
            lowers.push(Bound {
                value: Rational::reciprocal_of(m as u64),
                reason: BoundReason::NormalPrimeIndex { p: m },
            });
        }
    }
    let mut uppers = Vec::new();
    if let Some(p) = number::smallest_prime_divisor(g_order) {
        uppers.push(Bound {
            value: Rational::reciprocal_of(p as u64),
            reason: BoundReason::SmallestPrimeOfDomain { p },
        });
    }
    if let Some(p) = number::prime_power_base(h_order) {
        uppers.push(Bound {
            value: Rational::reciprocal_of(p as u64),
            reason: BoundReason::PGroupCodomain { p },
        });
    }
    if number::gcd(g_order, h_order) == 1 {
        uppers.push(Bound {
            value: Rational::ZERO,
            reason: BoundReason::Coprime,
        });
    }

    let lower = lowers
        .iter()
        .max_by(|a, b| a.value.cmp(&b.value))
        .cloned()
        .unwrap_or(Bound {
            value: Rational::ZERO,
            reason: BoundReason::Trivial,
        });
    // Every pair has some upper bound: a trivial domain is coprime to
    // everything.
    let upper = uppers
        .iter()
        .min_by(|a, b| a.value.cmp(&b.value))
        .cloned()
        .expect("a ceiling always applies");
    let mut reasons = lowers;
    reasons.extend(uppers);
    BoundsReport {
        lower,
        upper,
        reasons,
    }
}

/// `true` iff `A ∩ B = 1` and `|A|·|B| = |G|`, i.e. every element factors
/// uniquely as `ab`.
pub fn exact_factorization_check(g: &FiniteGroup, a: &SubsetMask, b: &SubsetMask) -> Result<bool> {
    if !g.is_subgroup(a) || !g.is_subgroup(b) {
        return Err(Error::NotASubgroup);
    }
    Ok(a.intersection(b).count() == 1 && a.count() * b.count() == g.order())
}

/// A homomorphism `G → H` with kernel a normal subgroup of prime index `p`:
/// the quotient map `G → G/N ≅ C_p` followed by `C_p ≅ ⟨h⟩` for some `h` of
/// order `p` in `H`. `None` when `G` has no such normal subgroup or `p`
/// does not divide `|H|`.
pub fn prime_index_witness(g: &FiniteGroup, h: &FiniteGroup, p: usize) -> Option<Homomorphism> {
    if !number::is_prime(p) || !h.order().is_multiple_of(p) {
        return None;
    }
    let normal = structure::normal_subgroups(g)
        .into_iter()
        .find(|r| r.index == p)?;
    let q = structure::quotient_group(g, &normal.mask).ok()?;
    let target = (0..h.order()).find(|&y| h.element_order(y) == p)?;
    // Discrete log in the cyclic quotient with respect to element 1.
    let mut log = vec![0usize; p];
    let mut cur = 0;
    for k in 0..p {
        log[cur] = k;
        cur = q.group.mul(cur, 1);
    }
    let f = Homomorphism::from_fn(g, h, |x| h.pow(target, log[q.projection[x]]))
        .expect("quotient then embed is a homomorphism");
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn case_split_arithmetic() {
        // (S3, C6)
        let v = verdict_from_parts(true, true, set(&[2, 3]), set(&[2, 6]));
        assert_eq!(v.intersection, set(&[2]));
        assert_eq!(v.value, Rational::new(1, 2));
        // (S3, C3)
        let v = verdict_from_parts(true, true, set(&[3]), set(&[2, 6]));
        assert!(v.intersection.is_empty());
        assert_eq!(v.value, Rational::ZERO);
        // (C35, C10)
        let v = verdict_from_parts(true, true, set(&[5]), set(&[5, 7, 35]));
        assert_eq!(v.value, Rational::new(1, 5));
        let v = verdict_from_parts(false, false, set(&[2, 3, 5]), set(&[60]));
        assert!(!v.applicable);
        assert_eq!(v.value, Rational::ZERO);
    }

    #[test]
    fn bound_arithmetic() {
        // (S3, C5): coprime.
        let b = bounds_from_parts(6, 5, &set(&[2, 6]));
        assert_eq!(
            (b.lower.value, b.upper.value),
            (Rational::ZERO, Rational::ZERO)
        );
        assert_eq!(b.upper.reason, BoundReason::Coprime);
        // (A5, A5)
        let b = bounds_from_parts(60, 60, &set(&[60]));
        assert_eq!(
            (b.lower.value, b.upper.value),
            (Rational::ZERO, Rational::new(1, 2))
        );
        // (C4, C2)
        let b = bounds_from_parts(4, 2, &set(&[2, 4]));
        assert_eq!(b.lower.value, Rational::new(1, 2));
        assert_eq!(b.upper.value, Rational::new(1, 2));
        // Trivial domain.
        let b = bounds_from_parts(1, 6, &set(&[]));
        assert_eq!(b.upper.value, Rational::ZERO);
    }

    #[test]
    fn common_primes() {
        let order = |n: usize| {
            let rows: Vec<Vec<usize>> = (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect();
            FiniteGroup::from_cayley_table(&rows).unwrap()
        };
        assert_eq!(common_prime_set(&order(6), &order(6)), set(&[2, 3]));
        assert!(common_prime_set(&order(6), &order(5)).is_empty());
        assert_eq!(
            number::prime_divisors(number::gcd(60, 360)),
            set(&[2, 3, 5])
        );
    }
}

//! `Hom(G, H)`, equalizers, agreements and the brute-force maximum agreement.
//!
//! Enumeration assigns an image to each recorded generator of `G` (only
//! elements whose order divides the generator's order), extends the
//! assignment along the breadth-first words of `G`, and accepts it iff
//! `f(x·g_i) = f(x)·h_i` for every element `x` and generator `g_i`. By
//! induction on word length that edge condition makes `f` a homomorphism, so
//! the full `|G|²` check only runs under `debug_assertions`.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::mask::SubsetMask;
use crate::number;
use crate::rational::Rational;

/// Default limit on the number of generator-image candidates examined.
pub const SEARCH_CAP: u128 = 100_000_000;

/// Identifies a group for the purpose of comparing maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTag {
    pub order: usize,
    pub fingerprint: u64,
}

impl GroupTag {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupTag {
            order: g.order(),
            fingerprint: g.fingerprint(),
        }
    }
}

/// A total map `G → H` given by its evaluation vector.
pub trait GroupMap {
    fn domain(&self) -> GroupTag;
    fn codomain(&self) -> GroupTag;
    fn values(&self) -> &[u16];

    fn image(&self, x: ElementId) -> ElementId {
        self.values()[x] as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    images: Vec<u16>,
    domain: GroupTag,
    codomain: GroupTag,
}

impl GroupMap for Homomorphism {
    fn domain(&self) -> GroupTag {
        self.domain
    }
    fn codomain(&self) -> GroupTag {
        self.codomain
    }
    fn values(&self) -> &[u16] {
        &self.images
    }
}

impl Homomorphism {
    /// Checks `f(xy) = f(x)f(y)` for all pairs.
    pub fn new(g: &FiniteGroup, h: &FiniteGroup, images: Vec<ElementId>) -> Result<Self> {
        if images.len() != g.order() {
            return Err(Error::NotAHomomorphism(format!(
                "{} images for a domain of order {}",
                images.len(),
                g.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= h.order()) {
            return Err(Error::NotAHomomorphism(format!("image {bad} out of range")));
        }
        let f = Homomorphism::unchecked(g, h, images.into_iter().map(|y| y as u16).collect());
        if let Some((x, y)) = f.first_violation(g, h) {
            return Err(Error::NotAHomomorphism(format!(
                "f({x}·{y}) != f({x})·f({y})"
            )));
        }
        Ok(f)
    }

    pub fn from_fn(
        g: &FiniteGroup,
        h: &FiniteGroup,
        f: impl Fn(ElementId) -> ElementId,
    ) -> Result<Self> {
        Homomorphism::new(g, h, (0..g.order()).map(f).collect())
    }

    pub(crate) fn unchecked(g: &FiniteGroup, h: &FiniteGroup, images: Vec<u16>) -> Self {
        Homomorphism {
            images,
            domain: GroupTag::of(g),
            codomain: GroupTag::of(h),
        }
    }

    pub fn trivial(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        Homomorphism::unchecked(g, h, vec![0; g.order()])
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Homomorphism::unchecked(g, g, (0..g.order()).map(|x| x as u16).collect())
    }

    /// `x ↦ c·x·c⁻¹`.
    pub fn conjugation(g: &FiniteGroup, c: ElementId) -> Self {
        Homomorphism::unchecked(
            g,
            g,
            (0..g.order()).map(|x| g.conjugate(c, x) as u16).collect(),
        )
    }

    pub fn images(&self) -> Vec<ElementId> {
        self.images.iter().map(|&y| y as usize).collect()
    }

    /// First pair `(x, y)` with `f(xy) != f(x)f(y)`.
    pub fn first_violation(
        &self,
        g: &FiniteGroup,
        h: &FiniteGroup,
    ) -> Option<(ElementId, ElementId)> {
        for x in 0..g.order() {
            for y in 0..g.order() {
                if self.image(g.mul(x, y)) != h.mul(self.image(x), self.image(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn kernel(&self) -> SubsetMask {
        SubsetMask::from_indices(
            self.images.len(),
            self.images
                .iter()
                .enumerate()
                .filter(|(_, &y)| y == 0)
                .map(|(x, _)| x),
        )
    }

    pub fn image_set(&self) -> SubsetMask {
        SubsetMask::from_indices(self.codomain.order, self.images.iter().map(|&y| y as usize))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().count() == 1
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.domain.order == self.codomain.order
    }

    /// `other ∘ self`: apply `self`, then `other`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.codomain != other.domain {
            return Err(Error::MixedDomains);
        }
        Ok(Homomorphism {
            images: self
                .images
                .iter()
                .map(|&y| other.images[y as usize])
                .collect(),
            domain: self.domain,
            codomain: other.codomain,
        })
    }

    /// Inverse of a bijective endomorphism or isomorphism.
    pub fn inverse(&self) -> Option<Homomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0u16; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        Some(Homomorphism {
            images: inv,
            domain: self.codomain,
            codomain: self.domain,
        })
    }
}

/// `x ↦ shift · base(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineHomomorphism {
    shift: ElementId,
    base: Homomorphism,
    values: Vec<u16>,
}

impl AffineHomomorphism {
    pub fn new(h: &FiniteGroup, shift: ElementId, base: Homomorphism) -> Self {
        let values = base
            .images
            .iter()
            .map(|&y| h.mul(shift, y as usize) as u16)
            .collect();
        AffineHomomorphism {
            shift,
            base,
            values,
        }
    }

    pub fn shift(&self) -> ElementId {
        self.shift
    }

    pub fn base(&self) -> &Homomorphism {
        &self.base
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }
}

impl GroupMap for AffineHomomorphism {
    fn domain(&self) -> GroupTag {
        self.base.domain
    }
    fn codomain(&self) -> GroupTag {
        self.base.codomain
    }
    fn values(&self) -> &[u16] {
        &self.values
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaWitness {
    pub value: Rational,
    pub pair: Option<(Homomorphism, Homomorphism)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OrderFilter {
    /// Image order divides the generator's order (all homomorphisms).
    Divides,
    /// Image order equals the generator's order (enough for injective maps).
    Equals,
}

struct HomSearch<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    candidates: Vec<Vec<u16>>,
}

impl<'a> HomSearch<'a> {
    fn new(g: &'a FiniteGroup, h: &'a FiniteGroup, filter: OrderFilter, cap: u128) -> Result<Self> {
        let candidates: Vec<Vec<u16>> = g
            .generators()
            .iter()
            .map(|&gen| {
                let k = g.element_order(gen);
                (0..h.order())
                    .filter(|&y| {
                        let o = h.element_order(y);
                        match filter {
                            OrderFilter::Divides => k.is_multiple_of(o),
                            OrderFilter::Equals => k == o,
                        }
                    })
                    .map(|y| y as u16)
                    .collect()
            })
            .collect();
        let total = candidates
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
            .unwrap_or(u128::MAX);
        if total > cap {
            return Err(Error::SearchCapExceeded {
                candidates: total,
                cap,
            });
        }
        Ok(HomSearch { g, h, candidates })
    }

    /// Fills `images` from generator images; `true` iff the result is a
    /// homomorphism.
    fn extend(&self, assignment: &[u16], images: &mut [u16]) -> bool {
        let (g, h) = (self.g, self.h);
        images[0] = 0;
        for x in g.bfs_order().skip(1) {
            let (p, i) = g.word_step(x).expect("non-identity has a word");
            images[x] = h.mul(images[p] as usize, assignment[i] as usize) as u16;
        }
        for x in g.bfs_order() {
            let fx = images[x] as usize;
            for (i, &gen) in g.generators().iter().enumerate() {
                if images[g.mul(x, gen)] as usize != h.mul(fx, assignment[i] as usize) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(
        &self,
        assignment: &mut Vec<u16>,
        images: &mut Vec<u16>,
        visit: &mut dyn FnMut(&[u16]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let level = assignment.len();
        if level == self.candidates.len() {
            if self.extend(assignment, images) {
                debug_assert!(Homomorphism::unchecked(self.g, self.h, images.clone())
                    .first_violation(self.g, self.h)
                    .is_none());
                return visit(images);
            }
            return ControlFlow::Continue(());
        }
        for &c in &self.candidates[level] {
            assignment.push(c);
            let flow = self.dfs(assignment, images, visit);
            assignment.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn for_each(&self, visit: &mut dyn FnMut(&[u16]) -> ControlFlow<()>) {
        let mut assignment = Vec::with_capacity(self.candidates.len());
        let mut images = vec![0u16; self.g.order()];
        let _ = self.dfs(&mut assignment, &mut images, visit);
    }

    /// All accepted image vectors, fanned out over the first generator's
    /// candidates and sorted.
    fn collect_all(&self, keep: impl Fn(&[u16]) -> bool + Sync) -> Vec<Vec<u16>> {
        let mut out: Vec<Vec<u16>> = match self.candidates.first() {
            None => {
                let mut v = Vec::new();
                self.for_each(&mut |imgs| {
                    if keep(imgs) {
                        v.push(imgs.to_vec());
                    }
                    ControlFlow::Continue(())
                });
                v
            }
            Some(first) => first
                .par_iter()
                .map(|&c| {
                    let mut found = Vec::new();
                    let mut assignment = vec![c];
                    let mut images = vec![0u16; self.g.order()];
                    let _ = self.dfs(&mut assignment, &mut images, &mut |imgs| {
                        if keep(imgs) {
                            found.push(imgs.to_vec());
                        }
                        ControlFlow::Continue(())
                    });
                    found
                })
                .flatten()
                .collect(),
        };
        out.sort_unstable();
        out
    }
}

pub fn enumerate_homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Homomorphism>> {
    enumerate_homomorphisms_with_cap(g, h, SEARCH_CAP)
}

/// Every homomorphism `G → H`, sorted by image vector. The trivial map is
/// always first.
pub fn enumerate_homomorphisms_with_cap(
    g: &FiniteGroup,
    h: &FiniteGroup,
    cap: u128,
) -> Result<Vec<Homomorphism>> {
    let search = HomSearch::new(g, h, OrderFilter::Divides, cap)?;
    Ok(search
        .collect_all(|_| true)
        .into_iter()
        .map(|images| Homomorphism::unchecked(g, h, images))
        .collect())
}

pub fn count_homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Result<usize> {
    let search = HomSearch::new(g, h, OrderFilter::Divides, SEARCH_CAP)?;
    let mut n = 0;
    search.for_each(&mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}

fn check_family(family: &[&dyn GroupMap]) -> Result<(GroupTag, GroupTag)> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    let (d, c) = (first.domain(), first.codomain());
    if family.iter().any(|f| f.domain() != d || f.codomain() != c) {
        return Err(Error::MixedDomains);
    }
    Ok((d, c))
}

/// Elements on which every map of the family takes the same value.
pub fn equalizer(family: &[&dyn GroupMap]) -> Result<SubsetMask> {
    let (d, _) = check_family(family)?;
    let first = family[0].values();
    Ok(SubsetMask::from_indices(
        d.order,
        (0..d.order).filter(|&x| family[1..].iter().all(|f| f.values()[x] == first[x])),
    ))
}

/// `|Eq(f, g)| / |G|`.
pub fn agreement(f: &dyn GroupMap, g: &dyn GroupMap) -> Result<Rational> {
    let (d, _) = check_family(&[f, g])?;
    let agree = f
        .values()
        .iter()
        .zip(g.values())
        .filter(|(a, b)| a == b)
        .count();
    Ok(Rational::new(agree as u64, d.order as u64))
}

/// Maximum agreement `Λ(G, H)` by enumerating `Hom(G, H)` and scanning pairs.
pub fn lambda_bruteforce(g: &FiniteGroup, h: &FiniteGroup) -> Result<LambdaWitness> {
    if h.is_trivial() {
        return Err(Error::TrivialCodomain);
    }
    let homs = enumerate_homomorphisms(g, h)?;
    Ok(lambda_over(g, &homs))
}

/// Maximum agreement over distinct pairs of an already enumerated
/// `Hom(G, H)`. Zero, with no witness, when there is at most one map.
///
/// Equalizers of homomorphisms are subgroups, so agreement counts are
/// divisors of `|G|` and the scan stops once it reaches `|G|/p` for the
/// smallest prime `p` dividing `|G|`. The witness is the lexicographically
/// first pair (by position in `homs`) that attains the maximum.
pub fn lambda_over(g: &FiniteGroup, homs: &[Homomorphism]) -> LambdaWitness {
    let n = g.order();
    if homs.len() < 2 {
        return LambdaWitness {
            value: Rational::ZERO,
            pair: None,
        };
    }
    let proper_divisors: Vec<usize> = number::divisors(n).into_iter().filter(|&d| d < n).collect();
    let ceiling = *proper_divisors.last().expect("n > 1 when two maps exist");
    let next_above = |c: usize| proper_divisors.iter().copied().find(|&d| d > c);

    let best = AtomicUsize::new(0);
    (0..homs.len()).into_par_iter().for_each(|i| {
        let a = &homs[i].images;
        for b in &homs[i + 1..] {
            let cur = best.load(Ordering::Relaxed);
            let Some(need) = next_above(cur) else { return };
            let budget = n - need;
            if let Some(c) = agreement_at_least(a, &b.images, budget) {
                best.fetch_max(c, Ordering::Relaxed);
            }
            if best.load(Ordering::Relaxed) == ceiling {
                return;
            }
        }
    });
    let best = best.into_inner();
    let budget = n - best;
    let pair = (0..homs.len())
        .find_map(|i| {
            homs[i + 1..]
                .iter()
                .find(|b| agreement_at_least(&homs[i].images, &b.images, budget) == Some(best))
                .map(|b| (homs[i].clone(), b.clone()))
        })
        .expect("maximum is attained");
    LambdaWitness {
        value: Rational::new(best as u64, n as u64),
        pair: Some(pair),
    }
}

/// Number of agreeing positions, or `None` once more than `budget`
/// positions disagree.
#[inline]
fn agreement_at_least(a: &[u16], b: &[u16], budget: usize) -> Option<usize> {
    let mut miss = 0;
    for (x, y) in a.iter().zip(b) {
        if x != y {
            miss += 1;
            if miss > budget {
                return None;
            }
        }
    }
    Some(a.len() - miss)
}

/// Every map `h·φ0` with `φ0 ∈ Hom(G, H)`, deduplicated by evaluation
/// vector and sorted by it.
pub fn enumerate_affine(
    g: &FiniteGroup,
    h: &FiniteGroup,
    cap: usize,
) -> Result<Vec<AffineHomomorphism>> {
    let homs = enumerate_homomorphisms(g, h)?;
    let size = homs.len().saturating_mul(h.order());
    if size > cap {
        return Err(Error::CapExceeded {
            what: "affine enumeration",
            cap,
            size,
        });
    }
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut out = Vec::new();
    for base in &homs {
        for shift in 0..h.order() {
            let f = AffineHomomorphism::new(h, shift, base.clone());
            if seen.insert(f.values.clone()) {
                out.push(f);
            }
        }
    }
    out.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(out)
}

/// All bijective endomorphisms of `G`, sorted by image vector.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<Homomorphism>> {
    let search = HomSearch::new(g, g, OrderFilter::Equals, SEARCH_CAP)?;
    let n = g.order();
    Ok(search
        .collect_all(|imgs| {
            let mut hit = vec![false; n];
            imgs.iter()
                .all(|&y| !std::mem::replace(&mut hit[y as usize], true))
        })
        .into_iter()
        .map(|images| Homomorphism::unchecked(g, g, images))
        .collect())
}

/// Number of orbits of `autos` acting on the elements of `G`.
pub fn orbit_count(g: &FiniteGroup, autos: &[Homomorphism]) -> usize {
    let mut seen = vec![false; g.order()];
    let mut orbits = 0;
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        orbits += 1;
        seen[x] = true;
        for a in autos {
            seen[a.image(x)] = true;
        }
    }
    orbits
}

/// Averaging lower bound on `Λ(G, G)` from the orbit count of `Aut(G)`:
///
/// `|Aut|/(|Aut|-1) · (orbits/|G| - 1/|Aut|) = (|Aut|·orbits - |G|) / ((|Aut|-1)·|G|)`.
///
/// `None` when `Aut(G)` is trivial. The numerator is never negative since
/// every orbit has at most `|Aut|` elements.
pub fn burnside_lower_bound(g: &FiniteGroup) -> Result<Option<Rational>> {
    let autos = automorphism_group(g)?;
    Ok(burnside_bound_from(g, &autos))
}

pub fn burnside_bound_from(g: &FiniteGroup, autos: &[Homomorphism]) -> Option<Rational> {
    let a = autos.len() as u64;
    if a <= 1 {
        return None;
    }
    let orbits = orbit_count(g, autos) as u64;
    let n = g.order() as u64;
    let num = (a * orbits)
        .checked_sub(n)
        .expect("orbit-stabilizer bounds |G| by |Aut|·orbits");
    Some(Rational::new(num, (a - 1) * n))
}

/// `true` iff some bijective homomorphism `G → H` exists.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return Ok(false);
    }
    let search = HomSearch::new(g, h, OrderFilter::Equals, SEARCH_CAP)?;
    let n = g.order();
    let mut found = false;
    search.for_each(&mut |imgs| {
        let mut hit = vec![false; n];
        if imgs
            .iter()
            .all(|&y| !std::mem::replace(&mut hit[y as usize], true))
        {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

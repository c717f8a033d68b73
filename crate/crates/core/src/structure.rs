//! Subgroups, normal subgroups, quotients and the derived / lower central
//! series.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Closure, ElementId, FiniteGroup};
use crate::mask::SubsetMask;

/// [`all_subgroups`] refuses groups larger than this.
pub const ALL_SUBGROUPS_CAP: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub mask: SubsetMask,
    pub order: usize,
    pub index: usize,
    pub is_normal: bool,
}

impl SubgroupRecord {
    fn new(group: &FiniteGroup, mask: SubsetMask, is_normal: bool) -> Self {
        let order = mask.count();
        SubgroupRecord {
            index: group.order() / order,
            order,
            mask,
            is_normal,
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub group: FiniteGroup,
    /// `projection[x]` is the coset of `x` as an element of `group`.
    pub projection: Vec<ElementId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvabilityClass {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    #[serde(skip)]
    pub derived_series: Vec<SubsetMask>,
    #[serde(skip)]
    pub lower_central_series: Vec<SubsetMask>,
}

pub fn trivial_subgroup(g: &FiniteGroup) -> SubsetMask {
    SubsetMask::from_indices(g.order(), [0])
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_generated_by(g: &FiniteGroup, seed: &SubsetMask) -> SubsetMask {
    let mut c = Closure::new(g);
    for x in seed.iter() {
        c.adjoin(x);
    }
    c.into_mask()
}

/// Subgroup generated by `a ∪ b`, where `a` is already a subgroup.
pub fn join(g: &FiniteGroup, a: &SubsetMask, b: &SubsetMask) -> SubsetMask {
    let mut c = Closure::from_subgroup(g, a);
    for x in b.iter() {
        c.adjoin(x);
    }
    c.into_mask()
}

/// Smallest normal subgroup containing `seed`: the subgroup generated by all
/// conjugates of its elements.
pub fn normal_closure(g: &FiniteGroup, seed: &SubsetMask) -> SubsetMask {
    let mut conjugates = SubsetMask::empty(g.order());
    for x in seed.iter() {
        for h in 0..g.order() {
            conjugates.insert(g.conjugate(h, x));
        }
    }
    subgroup_generated_by(g, &conjugates)
}

/// `[A, B]`, generated by all `a⁻¹b⁻¹ab`.
pub fn commutator_subgroup(g: &FiniteGroup, a: &SubsetMask, b: &SubsetMask) -> SubsetMask {
    let mut c = Closure::new(g);
    for x in a.iter() {
        for y in b.iter() {
            c.adjoin(g.commutator(x, y));
        }
    }
    c.into_mask()
}

/// Every subgroup of `g`, sorted by order and then by member list.
///
/// Starts from the cyclic subgroups and keeps adjoining single elements until
/// nothing new appears.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupRecord>> {
    let n = g.order();
    if n > ALL_SUBGROUPS_CAP {
        return Err(Error::CapExceeded {
            what: "subgroup lattice",
            cap: ALL_SUBGROUPS_CAP,
            size: n,
        });
    }
    let mut seen: HashSet<SubsetMask> = HashSet::new();
    let mut frontier: Vec<SubsetMask> = Vec::new();
    for x in 0..n {
        let cyc = subgroup_generated_by(g, &SubsetMask::from_indices(n, [x]));
        if seen.insert(cyc.clone()) {
            frontier.push(cyc);
        }
    }
    while let Some(s) = frontier.pop() {
        if s.count() == n {
            continue;
        }
        // Adjoining one element per coset representative is enough, but the
        // plain scan is cheap at this size.
        for x in 0..n {
            if s.contains(x) {
                continue;
            }
            let bigger = join(g, &s, &SubsetMask::from_indices(n, [x]));
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<SubgroupRecord> = seen
        .into_iter()
        .map(|m| {
            let normal = g.is_normal_subgroup(&m);
            SubgroupRecord::new(g, m, normal)
        })
        .collect();
    out.sort_by(|a, b| a.mask.cmp(&b.mask));
    Ok(out)
}

/// Every normal subgroup of `g`, sorted by order and then by member list.
///
/// A normal subgroup is the join of the normal closures of its elements, so
/// the lattice is the join-closure of the normal closures of single
/// elements (one per conjugacy class).
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<SubgroupRecord> {
    let n = g.order();
    let mut principal: Vec<SubsetMask> = Vec::new();
    for class in g.conjugacy_classes() {
        let m = subgroup_generated_by(g, &SubsetMask::from_indices(n, class));
        if !principal.contains(&m) {
            principal.push(m);
        }
    }
    let mut seen: HashSet<SubsetMask> = HashSet::new();
    let mut frontier: Vec<SubsetMask> = Vec::new();
    let trivial = trivial_subgroup(g);
    seen.insert(trivial.clone());
    frontier.push(trivial);
    while let Some(a) = frontier.pop() {
        for p in &principal {
            if p.is_subset(&a) {
                continue;
            }
            let j = join(g, &a, p);
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<SubgroupRecord> = seen
        .into_iter()
        .map(|m| SubgroupRecord::new(g, m, true))
        .collect();
    out.sort_by(|a, b| a.mask.cmp(&b.mask));
    out
}

/// Indices of the proper normal subgroups of `g`.
pub fn normal_index_set(g: &FiniteGroup) -> BTreeSet<usize> {
    normal_subgroups(g)
        .into_iter()
        .filter(|r| r.order < g.order())
        .map(|r| r.index)
        .collect()
}

/// Proper normal subgroups not contained in any other proper normal subgroup.
pub fn maximal_normal_subgroups(g: &FiniteGroup) -> Vec<SubgroupRecord> {
    let proper: Vec<SubgroupRecord> = normal_subgroups(g)
        .into_iter()
        .filter(|r| r.order < g.order())
        .collect();
    proper
        .iter()
        .filter(|r| {
            !proper
                .iter()
                .any(|s| s.order > r.order && r.mask.is_subset(&s.mask))
        })
        .cloned()
        .collect()
}

/// `G/N` on coset labels. Coset labels follow the smallest member of each
/// coset, so the identity coset is `0`.
pub fn quotient_group(g: &FiniteGroup, normal: &SubsetMask) -> Result<QuotientResult> {
    if !g.is_subgroup(normal) {
        return Err(Error::NotASubgroup);
    }
    if !g.is_normal_subgroup(normal) {
        return Err(Error::NotNormal);
    }
    let n = g.order();
    let mut projection = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let label = reps.len();
        reps.push(x);
        for k in normal.iter() {
            projection[g.mul(x, k)] = label;
        }
    }
    let m = reps.len();
    let mut table = vec![0u16; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * m + j] = projection[g.mul(a, b)] as u16;
        }
    }
    let hint: Vec<ElementId> = g
        .generators()
        .iter()
        .map(|&x| projection[x])
        .filter(|&q| q != 0)
        .collect();
    let group = FiniteGroup::from_trusted_table(m, table, Some(&hint), None);
    Ok(QuotientResult { group, projection })
}

pub fn derived_series(g: &FiniteGroup) -> Vec<SubsetMask> {
    let mut series = vec![SubsetMask::full(g.order())];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn lower_central_series(g: &FiniteGroup) -> Vec<SubsetMask> {
    let whole = SubsetMask::full(g.order());
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, &whole);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn solvability_class(g: &FiniteGroup) -> SolvabilityClass {
    let derived = derived_series(g);
    let lower = lower_central_series(g);
    let solvable = derived.last().unwrap().count() == 1;
    let nilpotent = lower.last().unwrap().count() == 1;
    let abelian = derived.len() == 1 || derived[1].count() == 1;
    SolvabilityClass {
        abelian,
        nilpotent,
        solvable,
        derived_series: derived,
        lower_central_series: lower,
    }
}

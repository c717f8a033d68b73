//! Finite groups as explicit Cayley tables over dense element indices.
//!
//! Element `0` is always the identity. Every group also records a small
//! generating set and, for each element, one breadth-first word over those
//! generators (`parent · generator`). Homomorphism enumeration extends
//! generator images along these words.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::perm::Permutation;

/// Index of an element inside one particular [`FiniteGroup`].
pub type ElementId = usize;

/// Largest order any constructor will produce.
pub const ORDER_CAP: usize = 2000;

/// Cayley tables larger than this are rejected; up to this order the
/// associativity check is exhaustive.
pub const TABLE_INPUT_CAP: usize = 512;

const NO_GENERATOR: u16 = u16::MAX;

/// Provenance of a group built by closing a set of permutations.
#[derive(Clone, Debug)]
pub struct PermutationData {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    /// `elements[x]` is the permutation realizing element `x`.
    pub elements: Vec<Permutation>,
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_orders: Vec<u32>,
    generators: Vec<ElementId>,
    /// `(parent, generator index)` with `x = parent · generators[index]`.
    words: Vec<(u16, u16)>,
    bfs_order: Vec<u16>,
    permutations: Option<PermutationData>,
    fingerprint: u64,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .field("fingerprint", &format_args!("{:016x}", self.fingerprint))
            .finish()
    }
}

/// Index bookkeeping for `G1 × G2`: `(x, y) ↦ x·|G2| + y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductLayout {
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductLayout {
    pub fn pair(&self, x: ElementId, y: ElementId) -> ElementId {
        x * self.right_order + y
    }
    pub fn embed_left(&self, x: ElementId) -> ElementId {
        self.pair(x, 0)
    }
    pub fn embed_right(&self, y: ElementId) -> ElementId {
        self.pair(0, y)
    }
    pub fn project_left(&self, z: ElementId) -> ElementId {
        z / self.right_order
    }
    pub fn project_right(&self, z: ElementId) -> ElementId {
        z % self.right_order
    }
}

#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub layout: ProductLayout,
}

impl FiniteGroup {
    /// Validates a full multiplication table (`rows[x][y] = x·y`).
    ///
    /// The identity is relabelled to index `0` by swapping it with whatever
    /// element held that label.
    #[allow(clippy::needless_range_loop)]
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::not_a_group("empty table"));
        }
        if n > TABLE_INPUT_CAP {
            return Err(Error::CapExceeded {
                what: "Cayley-table input",
                cap: TABLE_INPUT_CAP,
                size: n,
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::not_a_group(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::NotAGroup {
                    reason: format!("entry {v} out of range"),
                    triple: Some((r, c, v)),
                });
            }
        }

        // Latin square.
        for r in 0..n {
            let mut seen = vec![false; n];
            for c in 0..n {
                let v = rows[r][c];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAGroup {
                        reason: format!("row {r} repeats {v}"),
                        triple: Some((r, c, v)),
                    });
                }
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for r in 0..n {
                let v = rows[r][c];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAGroup {
                        reason: format!("column {c} repeats {v}"),
                        triple: Some((r, c, v)),
                    });
                }
            }
        }

        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::not_a_group("no two-sided identity"))?;

        for x in 0..n {
            let y = (0..n).find(|&y| rows[x][y] == e).expect("latin row");
            if rows[y][x] != e {
                return Err(Error::NotAGroup {
                    reason: format!("right inverse of {x} is not a left inverse"),
                    triple: Some((x, y, rows[y][x])),
                });
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(Error::NotAGroup {
                            reason: "multiplication is not associative".into(),
                            triple: Some((a, b, c)),
                        });
                    }
                }
            }
        }

        // Swap labels `e` and `0`.
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                table[relabel(x) * n + relabel(y)] = relabel(rows[x][y]) as u16;
            }
        }
        Ok(FiniteGroup::from_trusted_table(n, table, None, None))
    }

    /// Closure of `generators` inside the symmetric group of the given degree.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Self> {
        FiniteGroup::from_permutations_with_cap(degree, generators, ORDER_CAP)
    }

    pub fn from_permutations_with_cap(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::BadPermutation("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::BadPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let k = generators.len();
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // right[x * k + i] = x · generators[i]
        let mut right: Vec<u16> = Vec::new();
        let mut discovered: Vec<(u16, u16)> = vec![(0, NO_GENERATOR)];

        let mut head = 0;
        while head < elements.len() {
            for (i, g) in generators.iter().enumerate() {
                let y = elements[head].then(g);
                let idx = match index.get(&y) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elements.len();
                        if idx >= cap {
                            return Err(Error::ClosureCapExceeded { cap });
                        }
                        index.insert(y.clone(), idx);
                        elements.push(y);
                        discovered.push((head as u16, i as u16));
                        idx
                    }
                };
                right.push(idx as u16);
            }
            head += 1;
        }

        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for x in 0..n {
            table[x * n] = x as u16;
            for y in 1..n {
                let (p, i) = discovered[y];
                let xp = table[x * n + p as usize] as usize;
                table[x * n + y] = right[xp * k + i as usize];
            }
        }

        let hint: Vec<usize> = (0..k).map(|i| right[i] as usize).collect();
        let data = PermutationData {
            degree,
            generators: generators.to_vec(),
            elements,
        };
        Ok(FiniteGroup::from_trusted_table(
            n,
            table,
            Some(&hint),
            Some(data),
        ))
    }

    /// `G1 × G2` with componentwise multiplication.
    pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Result<DirectProduct> {
        let (n1, n2) = (left.order, right.order);
        let n = n1 * n2;
        if n > ORDER_CAP {
            return Err(Error::ClosureCapExceeded { cap: ORDER_CAP });
        }
        let layout = ProductLayout {
            left_order: n1,
            right_order: n2,
        };
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let (a1, a2) = (layout.project_left(a), layout.project_right(a));
            for b in 0..n {
                let (b1, b2) = (layout.project_left(b), layout.project_right(b));
                table[a * n + b] = layout.pair(left.mul(a1, b1), right.mul(a2, b2)) as u16;
            }
        }
        Ok(DirectProduct {
            group: FiniteGroup::from_trusted_table(n, table, None, None),
            layout,
        })
    }

    /// Materializes a subgroup as a standalone group. Returns the group and
    /// the embedding `new index -> old index` (increasing, so `0 ↦ 0`).
    pub fn induced_subgroup(&self, members: &SubsetMask) -> Result<(FiniteGroup, Vec<ElementId>)> {
        if !self.is_subgroup(members) {
            return Err(Error::NotASubgroup);
        }
        let elems = members.to_vec();
        let m = elems.len();
        let mut pos = vec![u16::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i as u16;
        }
        let mut table = vec![0u16; m * m];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                table[i * m + j] = pos[self.mul(x, y)];
            }
        }
        Ok((FiniteGroup::from_trusted_table(m, table, None, None), elems))
    }

    /// Builds a group from a table already known to satisfy the axioms, with
    /// the identity at index `0`.
    pub(crate) fn from_trusted_table(
        order: usize,
        table: Vec<u16>,
        generator_hint: Option<&[ElementId]>,
        permutations: Option<PermutationData>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let n = order;
        let mut inverse = vec![0u16; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x * n + y] == 0)
                .expect("group table");
            inverse[x] = y as u16;
        }
        let mut element_orders = vec![0u32; n];
        for x in 0..n {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = table[y * n + x] as usize;
                k += 1;
            }
            element_orders[x] = k;
        }
        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        table.hash(&mut hasher);
        let fingerprint = hasher.finish();

        let mut g = FiniteGroup {
            order: n,
            table,
            inverse,
            element_orders,
            generators: Vec::new(),
            words: Vec::new(),
            bfs_order: Vec::new(),
            permutations,
            fingerprint,
        };
        g.generators = g.choose_generators(generator_hint);
        g.build_words();
        g
    }

    /// Greedy generating set: the hint (or elements by decreasing order),
    /// keeping only elements outside the closure of those already kept, then
    /// dropping any generator the others already produce.
    fn choose_generators(&self, hint: Option<&[ElementId]>) -> Vec<ElementId> {
        let candidates: Vec<ElementId> = match hint {
            Some(h) => h.to_vec(),
            None => {
                let mut c: Vec<ElementId> = (1..self.order).collect();
                c.sort_by_key(|&x| (std::cmp::Reverse(self.element_orders[x]), x));
                c
            }
        };
        let mut closure = Closure::new(self);
        let mut gens = Vec::new();
        for x in candidates {
            if closure.members.count() == self.order {
                break;
            }
            if x != 0 && !closure.members.contains(x) {
                closure.adjoin(x);
                gens.push(x);
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let mut c = Closure::new(self);
            for (j, &g) in gens.iter().enumerate() {
                if j != i {
                    c.adjoin(g);
                }
            }
            if c.members.contains(gens[i]) {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        gens
    }

    fn build_words(&mut self) {
        let n = self.order;
        let mut words = vec![(0u16, NO_GENERATOR); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut order = vec![0u16];
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            for (i, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    words[y] = (x as u16, i as u16);
                    order.push(y as u16);
                }
            }
            head += 1;
        }
        debug_assert_eq!(order.len(), n, "generators must generate");
        self.words = words;
        self.bfs_order = order;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g · x · g⁻¹`
    pub fn conjugate(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ · b⁻¹ · a · b`
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Smallest `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: ElementId) -> usize {
        self.element_orders[x] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    /// Sorted multiset of element orders; equal for isomorphic groups.
    pub fn order_profile(&self) -> Vec<u32> {
        let mut v = self.element_orders.clone();
        v.sort_unstable();
        v
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    /// The recorded step `x = parent · generators[i]`, or `None` for the
    /// identity.
    pub fn word_step(&self, x: ElementId) -> Option<(ElementId, usize)> {
        let (p, i) = self.words[x];
        (i != NO_GENERATOR).then_some((p as usize, i as usize))
    }

    /// Generator indices whose left-to-right product is `x`.
    pub fn word(&self, x: ElementId) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = x;
        while let Some((p, i)) = self.word_step(cur) {
            w.push(i);
            cur = p;
        }
        w.reverse();
        w
    }

    /// Elements in breadth-first order over the generators; every element's
    /// parent precedes it.
    pub fn bfs_order(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.bfs_order.iter().map(|&x| x as usize)
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn permutations(&self) -> Option<&PermutationData> {
        self.permutations.as_ref()
    }

    pub fn find_permutation(&self, p: &Permutation) -> Option<ElementId> {
        self.permutations
            .as_ref()?
            .elements
            .iter()
            .position(|q| q == p)
    }

    /// Hash of the order and full table. Two maps can only be compared when
    /// their domains and codomains carry equal fingerprints.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_subgroup(&self, members: &SubsetMask) -> bool {
        members.universe() == self.order
            && members.contains(0)
            && members.iter().all(|a| {
                members.contains(self.inv(a))
                    && members.iter().all(|b| members.contains(self.mul(a, b)))
            })
    }

    pub fn is_normal_subgroup(&self, members: &SubsetMask) -> bool {
        self.is_subgroup(members)
            && members
                .iter()
                .all(|x| (0..self.order).all(|g| members.contains(self.conjugate(g, x))))
    }

    /// Conjugacy classes, each sorted, listed by smallest member; the
    /// identity's singleton class comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElementId>> {
        let n = self.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = SubsetMask::empty(n);
            for g in 0..n {
                class.insert(self.conjugate(g, x));
            }
            for y in class.iter() {
                assigned[y] = true;
            }
            classes.push(class.to_vec());
        }
        classes
    }

    /// Exhaustive check of the group axioms on the stored table. Associativity
    /// is only checked up to [`TABLE_INPUT_CAP`].
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for y in 0..n {
                if std::mem::replace(&mut row[self.mul(x, y)], true)
                    || std::mem::replace(&mut col[self.mul(y, x)], true)
                {
                    return Err(Error::not_a_group(format!("line {x} is not a permutation")));
                }
            }
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::not_a_group("0 is not the identity"));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(Error::not_a_group(format!("bad inverse for {x}")));
            }
        }
        if n <= TABLE_INPUT_CAP {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::NotAGroup {
                                reason: "multiplication is not associative".into(),
                                triple: Some((a, b, c)),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Incremental subgroup closure: adjoin elements one at a time.
pub(crate) struct Closure<'g> {
    group: &'g FiniteGroup,
    pub members: SubsetMask,
    list: Vec<ElementId>,
    gens: Vec<ElementId>,
}

impl<'g> Closure<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        let mut members = SubsetMask::empty(group.order());
        members.insert(0);
        Closure {
            group,
            members,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    /// Starts from a set already known to be a subgroup.
    pub fn from_subgroup(group: &'g FiniteGroup, subgroup: &SubsetMask) -> Self {
        let mut c = Closure::new(group);
        // Reuse the subgroup's members; record a generating set lazily by
        // adjoining only what is missing.
        for x in subgroup.iter() {
            if !c.members.contains(x) {
                c.adjoin(x);
            }
        }
        c
    }

    pub fn adjoin(&mut self, g: ElementId) {
        if self.members.contains(g) {
            return;
        }
        self.gens.push(g);
        let mut head = 0;
        while head < self.list.len() {
            let x = self.list[head];
            for &s in &self.gens {
                let y = self.group.mul(x, s);
                if self.members.insert(y) {
                    self.list.push(y);
                }
            }
            head += 1;
        }
    }

    pub fn into_mask(self) -> SubsetMask {
        self.members
    }
}

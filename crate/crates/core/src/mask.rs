use std::cmp::Ordering;
use std::fmt;

/// Membership mask over the element indices `0..universe` of one group.
///
/// Subgroups, cosets and equalizers are all stored this way. The
/// cardinality is cached and kept in sync by every mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    universe: usize,
    words: Vec<u64>,
    count: usize,
}

impl SubsetMask {
    pub fn empty(universe: usize) -> Self {
        SubsetMask {
            universe,
            words: vec![0; universe.div_ceil(64)],
            count: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut m = SubsetMask::empty(universe);
        for i in 0..universe {
            m.insert(i);
        }
        m
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = SubsetMask::empty(universe);
        for i in indices {
            m.insert(i);
        }
        m
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` if `i` was newly added.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.universe,
            "index {i} outside universe {}",
            self.universe
        );
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, i: usize) -> bool {
        if !self.contains(i) {
            return false;
        }
        self.words[i / 64] &= !(1u64 << (i % 64));
        self.count -= 1;
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &SubsetMask, f: impl Fn(u64, u64) -> u64) -> SubsetMask {
        assert_eq!(self.universe, other.universe, "masks over different groups");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let count = words.iter().map(|w| w.count_ones() as usize).sum();
        SubsetMask {
            universe: self.universe,
            words,
            count,
        }
    }
}

/// Orders by cardinality, then lexicographically by sorted member list.
impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count
            .cmp(&other.count)
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

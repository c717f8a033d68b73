//! Named constructors for the small groups used in the verification sweeps.
//!
//! Grammar: `name := base | base "x" name`, `base := ("C"|"D"|"S"|"A"|"E") digits | "Q8"`.
//!
//! * `Cn` cyclic of order `n`, as residues mod `n`.
//! * `Dn` dihedral of order `2n` (symmetries of the `n`-gon), `n >= 3`.
//! * `Sn`, `An` symmetric and alternating groups on `n` points.
//! * `En` elementary abelian of order `n = p^k`, e.g. `E8 = C2xC2xC2`.
//! * `Q8` the quaternion group.
//!
//! Products associate to the left: `AxBxC = (AxB)xC`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::number;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseGroup {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Elementary(usize),
    Quaternion,
}

impl fmt::Display for BaseGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGroup::Cyclic(n) => write!(f, "C{n}"),
            BaseGroup::Dihedral(n) => write!(f, "D{n}"),
            BaseGroup::Symmetric(n) => write!(f, "S{n}"),
            BaseGroup::Alternating(n) => write!(f, "A{n}"),
            BaseGroup::Elementary(n) => write!(f, "E{n}"),
            BaseGroup::Quaternion => f.write_str("Q8"),
        }
    }
}

/// A parsed catalog name such as `"S3xC5"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<BaseGroup>,
}

impl GroupSpec {
    pub fn factors(&self) -> &[BaseGroup] {
        &self.factors
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let mut it = self.factors.iter();
        let mut acc = build_base(*it.next().expect("non-empty spec"))?;
        for b in it {
            let rhs = build_base(*b)?;
            acc = FiniteGroup::direct_product(&acc, &rhs)?.group;
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownSpec(s.to_string());
        let text = s.trim();
        if text.is_empty() {
            return Err(unknown());
        }
        let mut factors = Vec::new();
        for part in text.split('x') {
            let mut chars = part.chars();
            let kind = chars.next().ok_or_else(unknown)?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            let n: usize = digits.parse().map_err(|_| unknown())?;
            let base = match kind {
                'C' if n >= 1 => BaseGroup::Cyclic(n),
                'D' if n >= 3 => BaseGroup::Dihedral(n),
                'S' if n >= 1 => BaseGroup::Symmetric(n),
                'A' if n >= 1 => BaseGroup::Alternating(n),
                'E' if number::prime_power_base(n).is_some() => BaseGroup::Elementary(n),
                'Q' if n == 8 => BaseGroup::Quaternion,
                _ => return Err(unknown()),
            };
            factors.push(base);
        }
        Ok(GroupSpec { factors })
    }
}

/// Parses and builds a catalog group.
pub fn make_named(spec: &str) -> Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build()
}

fn build_base(b: BaseGroup) -> Result<FiniteGroup> {
    match b {
        BaseGroup::Cyclic(n) => cyclic(n),
        BaseGroup::Dihedral(n) => dihedral(n),
        BaseGroup::Symmetric(n) => symmetric(n),
        BaseGroup::Alternating(n) => alternating(n),
        BaseGroup::Elementary(n) => elementary_abelian(n),
        BaseGroup::Quaternion => Ok(quaternion()),
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > crate::group::ORDER_CAP {
        return Err(Error::ClosureCapExceeded {
            cap: crate::group::ORDER_CAP,
        });
    }
    Ok(())
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    check_order(n)?;
    let table: Vec<u16> = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u16))
        .collect();
    let hint: Vec<usize> = if n > 1 { vec![1] } else { vec![] };
    Ok(FiniteGroup::from_trusted_table(n, table, Some(&hint), None))
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    let rotation = cycle(n, 1..=n);
    let reflection_cycles: Vec<Vec<usize>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
    let reflection = Permutation::from_cycles(n, &reflection_cycles)?;
    FiniteGroup::from_permutations(n, &[rotation, reflection])
}

/// `S_n` from `(1 2)` and `(1 2 ... n)`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, [1, 2]));
    }
    if n >= 3 {
        gens.push(cycle(n, 1..=n));
    }
    FiniteGroup::from_permutations(n, &gens)
}

/// `A_n` from `(1 2 3)` and `(1 2 ... n)` for odd `n`, `(2 3 ... n)` for
/// even `n`.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle(n, [1, 2, 3]));
    }
    if n >= 4 {
        gens.push(if n % 2 == 1 {
            cycle(n, 1..=n)
        } else {
            cycle(n, 2..=n)
        });
    }
    FiniteGroup::from_permutations(n, &gens)
}

pub fn elementary_abelian(n: usize) -> Result<FiniteGroup> {
    let p = number::prime_power_base(n).ok_or_else(|| Error::UnknownSpec(format!("E{n}")))?;
    let cp = cyclic(p)?;
    let mut acc = cp.clone();
    while acc.order() < n {
        acc = FiniteGroup::direct_product(&acc, &cp)?.group;
    }
    Ok(acc)
}

/// `Q8 = {±1, ±i, ±j, ±k}` with element `2u + s` standing for `(-1)^s · u`,
/// `u ∈ {1, i, j, k}`.
pub fn quaternion() -> FiniteGroup {
    // Products of units: UNIT[a][b] = (sign, unit) of a·b.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (ux, sx) = (x / 2, x % 2);
                    let (uy, sy) = (y / 2, y % 2);
                    let (s, u) = UNIT[ux][uy];
                    2 * u + (s + sx + sy) % 2
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_cayley_table(&rows).expect("Q8 table")
}

/// Groups of order at most 48 used by the default sweeps.
pub const SWEEP_SMALL: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C15", "C16", "C18",
    "C20", "C21", "C24", "C30", "C35", "C48", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10",
    "D12", "D24", "S3", "S4", "A4", "Q8", "E4", "E8", "E9", "E16", "C2xC4", "C2xC8", "C4xC4",
    "C2xC6", "C3xC6", "S3xC2", "S3xC3", "S3xC5", "D4xC2", "D4xC3", "Q8xC2", "Q8xC3", "A4xC2",
    "A4xC3", "A4xC4", "S4xC2", "S3xS3",
];

/// Larger groups appended to the sweep.
pub const SWEEP_LARGE: &[&str] = &["A5", "S5", "A6"];

/// Extra solvable groups of order at most 200 for the structural checks.
pub const STRUCTURE_EXTRA: &[&str] = &["S4xC3", "S3xS4", "A4xA4", "D25xC2", "S4xC2xC2", "Q8xS3"];

/// The default sweep list, restricted to orders at most `max_order`.
pub fn sweep_list(max_order: usize) -> Vec<(&'static str, FiniteGroup)> {
    SWEEP_SMALL
        .iter()
        .chain(SWEEP_LARGE)
        .map(|&name| (name, make_named(name).expect("catalog group")))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homspace::are_isomorphic;
    use crate::structure;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn orders() {
        for n in 1..=12 {
            assert_eq!(make_named(&format!("C{n}")).unwrap().order(), n);
        }
        for n in 3..=10 {
            assert_eq!(make_named(&format!("D{n}")).unwrap().order(), 2 * n);
        }
        for n in 1..=6 {
            assert_eq!(make_named(&format!("S{n}")).unwrap().order(), factorial(n));
            assert_eq!(
                make_named(&format!("A{n}")).unwrap().order(),
                factorial(n).div_ceil(2).max(1)
            );
        }
        assert_eq!(make_named("Q8").unwrap().order(), 8);
        assert_eq!(make_named("E8").unwrap().order(), 8);
        assert_eq!(make_named("E9").unwrap().order(), 9);
        assert_eq!(make_named("S3xC5").unwrap().order(), 30);
    }

    #[test]
    fn a7_exceeds_the_order_cap() {
        assert!(matches!(
            make_named("A7"),
            Err(Error::ClosureCapExceeded { .. })
        ));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "", "X3", "C", "Cx", "C0", "D2", "Q4", "E6", "c3", "C3xx", "C3 x C2",
        ] {
            assert!(
                matches!(bad.parse::<GroupSpec>(), Err(Error::UnknownSpec(_))),
                "{bad:?} should not parse"
            );
        }
        assert_eq!("S3xC5".parse::<GroupSpec>().unwrap().to_string(), "S3xC5");
    }

    #[test]
    fn named_structure() {
        let a5 = make_named("A5").unwrap();
        assert_eq!(structure::normal_subgroups(&a5).len(), 2);

        let q8 = make_named("Q8").unwrap();
        let c = structure::solvability_class(&q8);
        assert!(c.nilpotent && !c.abelian);
        let orders: Vec<usize> = c.lower_central_series.iter().map(|m| m.count()).collect();
        assert_eq!(orders, vec![8, 2, 1]);
        // One element of order 2 (-1), six of order 4.
        assert_eq!(q8.order_profile(), vec![1, 2, 4, 4, 4, 4, 4, 4]);

        assert!(are_isomorphic(&make_named("C2xC3").unwrap(), &make_named("C6").unwrap()).unwrap());
        assert!(are_isomorphic(&make_named("D3").unwrap(), &make_named("S3").unwrap()).unwrap());
        assert!(!are_isomorphic(&make_named("D4").unwrap(), &q8).unwrap());
    }

    #[test]
    fn every_sweep_group_is_a_group() {
        for (name, g) in sweep_list(usize::MAX) {
            g.check_invariants()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

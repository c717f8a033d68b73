//! Property suites run over the catalog sweep.
//!
//! Each suite returns a [`SuiteSummary`] with pass/fail counts per named
//! property. Random choices come from a ChaCha stream keyed by the seed and
//! the case index, so a summary depends only on the configuration and not
//! on thread scheduling.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, make_named, STRUCTURE_EXTRA, SWEEP_LARGE, SWEEP_SMALL};
use crate::error::{Error, Result};
use crate::formula;
use crate::group::FiniteGroup;
use crate::homspace::{self, AffineHomomorphism, GroupMap, GroupTag, Homomorphism};
use crate::mask::SubsetMask;
use crate::number;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::structure::{self, SubgroupRecord};

/// Failures kept per property; the counts are always complete.
const MAX_RECORDED_FAILURES: usize = 20;
/// The affine pair scan is skipped above this many distinct affine maps.
const AFFINE_SCAN_LIMIT: usize = 20_000;
/// Groups up to this order get the factorization scan.
const FACTORIZATION_ORDER_LIMIT: usize = 48;
const PRODUCT_TRIPLES: usize = 200;
const PRODUCT_DRAWS: usize = 100;
const PRODUCT_ORDER_LIMIT: usize = 96;
const PRODUCT_SEARCH_CAP: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Props,
    Theorem,
    Simple,
    Structure,
    Burnside,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Props,
        Suite::Theorem,
        Suite::Simple,
        Suite::Structure,
        Suite::Burnside,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Props => "props",
            Suite::Theorem => "theorem",
            Suite::Simple => "simple",
            Suite::Structure => "structure",
            Suite::Burnside => "burnside",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSpec(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Largest group order drawn from the sweep list.
    pub max_order: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_order: 48,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// The groups (and any sampled data) needed to reproduce the case.
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyTally {
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub config: SuiteConfig,
    pub properties: BTreeMap<String, PropertyTally>,
}

impl SuiteSummary {
    fn new(suite: Suite, config: SuiteConfig) -> Self {
        SuiteSummary {
            suite,
            config,
            properties: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> u64 {
        self.properties.values().map(|t| t.passed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.properties.values().map(|t| t.failed).sum()
    }

    pub fn total(&self) -> u64 {
        self.passed() + self.failed()
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }

    fn absorb(&mut self, log: Log) {
        for (prop, case, detail) in log.entries {
            let tally = self.properties.entry(prop.to_string()).or_default();
            match detail {
                None => tally.passed += 1,
                Some(detail) => {
                    tally.failed += 1;
                    if tally.failures.len() < MAX_RECORDED_FAILURES {
                        tally.failures.push(Failure { case, detail });
                    }
                }
            }
        }
    }

    pub fn to_text(&self) -> String {
        use fmt::Write;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "suite {} (max order {}, seed {})",
            self.suite, self.config.max_order, self.config.seed
        );
        for (name, t) in &self.properties {
            let _ = writeln!(s, "  {name:<40} pass {:>7}  fail {:>5}", t.passed, t.failed);
            for f in &t.failures {
                let _ = writeln!(s, "    FAIL {}: {}", f.case, f.detail);
            }
        }
        let _ = writeln!(
            s,
            "total {} passed, {} failed",
            self.passed(),
            self.failed()
        );
        s
    }
}

/// Outcomes of one unit of work, merged into the summary in case order.
#[derive(Default)]
struct Log {
    entries: Vec<(&'static str, String, Option<String>)>,
}

impl Log {
    fn check(&mut self, prop: &'static str, case: &str, ok: bool, detail: impl FnOnce() -> String) {
        let detail = if ok { None } else { Some(detail()) };
        self.entries.push((prop, case.to_string(), detail));
    }

    fn error(&mut self, prop: &'static str, case: &str, e: &Error) {
        self.entries
            .push((prop, case.to_string(), Some(e.to_string())));
    }
}

/// A catalog group with the structure every suite asks for.
struct Entry {
    name: String,
    group: FiniteGroup,
    solvable: bool,
    nilpotent: bool,
    normals: Vec<SubgroupRecord>,
    subgroups: Option<Vec<SubgroupRecord>>,
}

impl Entry {
    fn new(name: &str, group: FiniteGroup) -> Self {
        let class = structure::solvability_class(&group);
        let subgroups = if group.order() <= structure::ALL_SUBGROUPS_CAP {
            structure::all_subgroups(&group).ok()
        } else {
            None
        };
        Entry {
            name: name.to_string(),
            solvable: class.solvable,
            nilpotent: class.nilpotent,
            normals: structure::normal_subgroups(&group),
            subgroups,
            group,
        }
    }

    fn index_set(&self) -> std::collections::BTreeSet<usize> {
        self.normals.iter().map(|r| r.index).collect()
    }
}

fn entries(names: &[&str]) -> Vec<Entry> {
    names
        .par_iter()
        .map(|&n| Entry::new(n, make_named(n).expect("catalog group")))
        .collect()
}

fn sweep_entries(max_order: usize) -> Vec<Entry> {
    let names: Vec<&str> = catalog::sweep_list(max_order)
        .into_iter()
        .map(|(n, _)| n)
        .collect();
    entries(&names)
}

/// Memoized `Λ` keyed by the two Cayley tables.
#[derive(Default)]
struct LambdaMemo {
    values: Mutex<HashMap<(GroupTag, GroupTag), Rational>>,
}

impl LambdaMemo {
    fn get(&self, g: &FiniteGroup, h: &FiniteGroup) -> Result<Rational> {
        let key = (GroupTag::of(g), GroupTag::of(h));
        if let Some(v) = self.values.lock().expect("memo lock").get(&key) {
            return Ok(*v);
        }
        let v = if h.is_trivial() {
            Rational::ZERO
        } else {
            homspace::lambda_bruteforce(g, h)?.value
        };
        self.values.lock().expect("memo lock").insert(key, v);
        Ok(v)
    }

    fn put(&self, g: &FiniteGroup, h: &FiniteGroup, v: Rational) {
        self.values
            .lock()
            .expect("memo lock")
            .insert((GroupTag::of(g), GroupTag::of(h)), v);
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn run_suite(suite: Suite, config: SuiteConfig) -> SuiteSummary {
    match suite {
        Suite::Props => props_suite(config),
        Suite::Theorem => theorem_suite(config),
        Suite::Simple => simple_suite(config),
        Suite::Structure => structure_suite(config),
        Suite::Burnside => burnside_suite(config),
    }
}

fn merge(suite: Suite, config: SuiteConfig, logs: impl IntoIterator<Item = Log>) -> SuiteSummary {
    let mut summary = SuiteSummary::new(suite, config);
    for log in logs {
        summary.absorb(log);
    }
    summary
}

// ---------------------------------------------------------------- theorem

/// Closed form against brute force on every applicable sweep pair, with
/// `A5` added as a codomain.
pub fn theorem_suite(config: SuiteConfig) -> SuiteSummary {
    let domains = sweep_entries(config.max_order);
    let mut codomains = sweep_entries(config.max_order);
    if !codomains.iter().any(|e| e.name == "A5") {
        codomains.extend(entries(&["A5"]));
    }
    codomains.retain(|e| !e.group.is_trivial());

    let pairs: Vec<(&Entry, &Entry)> = domains
        .iter()
        .flat_map(|g| codomains.iter().map(move |h| (g, h)))
        .filter(|(g, h)| g.solvable || h.nilpotent)
        .collect();
    let logs: Vec<Log> = pairs
        .par_iter()
        .map(|&(ge, he)| theorem_pair(ge, he))
        .collect();
    merge(Suite::Theorem, config, logs)
}

fn theorem_pair(ge: &Entry, he: &Entry) -> Log {
    let mut log = Log::default();
    let case = format!("G={}, H={}", ge.name, he.name);
    let (g, h) = (&ge.group, &he.group);
    let verdict = formula::verdict_from_parts(
        ge.solvable,
        he.nilpotent,
        formula::common_prime_set(g, h),
        ge.index_set(),
    );
    let witness = match homspace::lambda_bruteforce(g, h) {
        Ok(w) => w,
        Err(e) => {
            log.error("formula-equals-bruteforce", &case, &e);
            return log;
        }
    };
    log.check(
        "formula-equals-bruteforce",
        &case,
        verdict.value == witness.value,
        || {
            format!(
                "formula {} but brute force {}",
                verdict.value, witness.value
            )
        },
    );
    if let Some((a, b)) = &witness.pair {
        let ok = a != b && homspace::agreement(a, b).ok() == Some(witness.value);
        log.check("bruteforce-witness-attains-value", &case, ok, || {
            format!("witness pair does not agree on {} of G", witness.value)
        });
    }
    log
}

// ------------------------------------------------------------------ props

pub fn props_suite(config: SuiteConfig) -> SuiteSummary {
    let groups = sweep_entries(config.max_order);
    let memo = LambdaMemo::default();

    let pairs: Vec<(usize, &Entry, &Entry)> = groups
        .iter()
        .flat_map(|g| groups.iter().map(move |h| (g, h)))
        .filter(|(_, h)| !h.group.is_trivial())
        .enumerate()
        .map(|(i, (g, h))| (i, g, h))
        .collect();
    let mut logs: Vec<Log> = pairs
        .par_iter()
        .map(|&(i, ge, he)| props_pair(&memo, ge, he, rng_for(config.seed, i as u64)))
        .collect();

    let nontrivial: Vec<&Entry> = groups.iter().filter(|e| !e.group.is_trivial()).collect();
    let base = pairs.len() as u64;
    logs.extend(
        (0..PRODUCT_TRIPLES)
            .into_par_iter()
            .map(|i| product_triple(&memo, &nontrivial, rng_for(config.seed, base + i as u64)))
            .collect::<Vec<_>>(),
    );

    logs.extend(
        groups
            .par_iter()
            .filter(|e| e.group.order() <= FACTORIZATION_ORDER_LIMIT && e.subgroups.is_some())
            .map(|ge| factorization_checks(&memo, ge, &nontrivial))
            .collect::<Vec<_>>(),
    );
    merge(Suite::Props, config, logs)
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T], k: usize) -> Vec<&'a T> {
    (0..k).map(|_| xs.choose(rng).expect("non-empty")).collect()
}

fn props_pair(memo: &LambdaMemo, ge: &Entry, he: &Entry, mut rng: ChaCha8Rng) -> Log {
    let mut log = Log::default();
    let case = format!("G={}, H={}", ge.name, he.name);
    let (g, h) = (&ge.group, &he.group);
    let (n, m) = (g.order(), h.order());

    let homs = match homspace::enumerate_homomorphisms(g, h) {
        Ok(v) => v,
        Err(e) => {
            log.error("enumeration", &case, &e);
            return log;
        }
    };
    let lambda = homspace::lambda_over(g, &homs).value;
    memo.put(g, h, lambda);

    // Every enumerated map is a homomorphism.
    let bad = homs.iter().find(|f| !hom_spot_check(g, h, f, &mut rng));
    log.check("hom-validity", &case, bad.is_none(), || {
        format!("{:?} is not a homomorphism", bad.map(|f| f.images()))
    });

    // Equalizers of homomorphism families.
    for size in [2, 3, 2, 3, 2, 3] {
        let family = pick(&mut rng, &homs, size);
        let fam_case = format!(
            "{case}, family={:?}",
            family.iter().map(|f| f.images()).collect::<Vec<_>>()
        );
        let maps: Vec<&dyn GroupMap> = family.iter().map(|f| *f as &dyn GroupMap).collect();
        let eq = homspace::equalizer(&maps).expect("same domain");
        log.check(
            "equalizer-is-subgroup",
            &fam_case,
            g.is_subgroup(&eq),
            || format!("equalizer {eq:?} is not a subgroup"),
        );

        let kernel = family
            .iter()
            .map(|f| f.kernel())
            .reduce(|a, b| a.intersection(&b))
            .expect("non-empty family");
        let common = SubsetMask::from_indices(m, eq.iter().map(|x| family[0].image(x)));
        log.check(
            "equalizer-cardinality",
            &fam_case,
            eq.count() == kernel.count() * common.count(),
            || {
                format!(
                    "|Eq| = {} but |kernels| * |common values| = {} * {}",
                    eq.count(),
                    kernel.count(),
                    common.count()
                )
            },
        );
    }

    // Equalizers of affine families.
    let p_base = number::prime_power_base(m);
    for size in [2, 3, 2, 3, 2, 3] {
        let family: Vec<AffineHomomorphism> = (0..size)
            .map(|_| {
                let base = homs.choose(&mut rng).expect("trivial map exists").clone();
                AffineHomomorphism::new(h, rng.random_range(0..m), base)
            })
            .collect();
        let fam_case = format!(
            "{case}, affine={:?}",
            family
                .iter()
                .map(|f| (f.shift(), f.base().images()))
                .collect::<Vec<_>>()
        );
        let maps: Vec<&dyn GroupMap> = family.iter().map(|f| f as &dyn GroupMap).collect();
        let eq = homspace::equalizer(&maps).expect("same domain");
        let bases: Vec<&dyn GroupMap> = family.iter().map(|f| f.base() as &dyn GroupMap).collect();
        let base_eq = homspace::equalizer(&bases).expect("same domain");
        let coset_ok = match eq.iter().next() {
            None => true,
            Some(x0) => {
                let coset = SubsetMask::from_indices(n, base_eq.iter().map(|y| g.mul(x0, y)));
                coset == eq
            }
        };
        log.check("equalizer-is-coset", &fam_case, coset_ok, || {
            format!("equalizer {eq:?} is not a coset of {base_eq:?}")
        });
        if let (Some(p), false) = (p_base, eq.is_empty()) {
            let index = n / eq.count();
            let ok = n % eq.count() == 0 && number::is_power_of(index, p);
            log.check("pgroup-equalizer-index", &fam_case, ok, || {
                format!("index {n}/{} is not a power of {p}", eq.count())
            });
        }
    }

    if let Some(p) = p_base {
        log.check(
            "pgroup-lambda-bound",
            &case,
            lambda <= Rational::reciprocal_of(p as u64),
            || format!("lambda {lambda} exceeds 1/{p}"),
        );
    }

    // Affine maps attain no more agreement than homomorphisms. Small cases
    // scan the affine maps directly; larger ones bin `φ(x)·ψ(x)⁻¹` per pair.
    if homs.len() > 1 {
        let best = if homs.len() * m <= AFFINE_SCAN_LIMIT {
            homspace::enumerate_affine(g, h, AFFINE_SCAN_LIMIT).map(|a| max_pair_agreement(n, &a))
        } else {
            Ok(affine_max_by_quotients(g, h, &homs))
        };
        match best {
            Ok(best) => log.check("affine-max-equals-hom-max", &case, best == lambda, || {
                format!("affine maximum {best} but homomorphism maximum {lambda}")
            }),
            Err(e) => log.error("affine-max-equals-hom-max", &case, &e),
        }
    }

    if let Some(p) = number::smallest_prime_divisor(n) {
        log.check(
            "lambda-at-most-inverse-smallest-prime",
            &case,
            lambda <= Rational::reciprocal_of(p as u64),
            || format!("lambda {lambda} exceeds 1/{p}"),
        );
    }

    // Prime-index normal subgroups give the lower bound.
    for p in ge
        .index_set()
        .into_iter()
        .filter(|&p| number::is_prime(p) && m % p == 0)
    {
        let target = Rational::reciprocal_of(p as u64);
        let ok = match formula::prime_index_witness(g, h, p) {
            None => false,
            Some(f) => {
                let triv = Homomorphism::trivial(g, h);
                f.first_violation(g, h).is_none()
                    && homspace::agreement(&f, &triv).ok() == Some(target)
                    && lambda >= target
            }
        };
        log.check("prime-index-witness", &case, ok, || {
            format!("no witness of agreement 1/{p} (lambda {lambda})")
        });
    }

    if number::gcd(n, m) == 1 {
        let constant = homs.len() == 1
            && homspace::enumerate_affine(g, h, usize::MAX)
                .map(|a| a.iter().all(|f| f.is_constant()))
                .unwrap_or(false);
        log.check(
            "coprime-constant-maps",
            &case,
            constant && lambda.is_zero(),
            || format!("{} homomorphisms, lambda {lambda}", homs.len()),
        );
    }

    // Range monotonicity over sampled subgroups of H.
    if let Some(subs) = &he.subgroups {
        let proper: Vec<&SubgroupRecord> =
            subs.iter().filter(|r| r.order > 1 && r.order < m).collect();
        if !proper.is_empty() {
            for k in pick(&mut rng, &proper, 2) {
                let sub_case = format!("{case}, K={:?}", k.mask);
                let (kg, _) = h.induced_subgroup(&k.mask).expect("subgroup");
                match memo.get(g, &kg) {
                    Ok(lk) => log.check("range-subgroup-monotone", &sub_case, lambda >= lk, || {
                        format!("lambda(G,H) = {lambda} < lambda(G,K) = {lk}")
                    }),
                    Err(e) => log.error("range-subgroup-monotone", &sub_case, &e),
                }
            }
        }
    }

    // Quotient monotonicity over every proper non-trivial normal subgroup.
    for nr in ge.normals.iter().filter(|r| r.order > 1 && r.order < n) {
        let sub_case = format!("{case}, N={:?}", nr.mask);
        let q = structure::quotient_group(g, &nr.mask).expect("normal subgroup");
        match memo.get(&q.group, h) {
            Ok(lq) => log.check("quotient-monotone", &sub_case, lambda >= lq, || {
                format!("lambda(G,H) = {lambda} < lambda(G/N,H) = {lq}")
            }),
            Err(e) => log.error("quotient-monotone", &sub_case, &e),
        }
    }

    // Quotient equality: S generated by elements of order coprime to |H|,
    // plus sampled subgroups with a single map to H.
    let mut seeds = vec![structure::subgroup_generated_by(
        g,
        &SubsetMask::from_indices(
            n,
            (0..n).filter(|&x| number::gcd(g.element_order(x), m) == 1),
        ),
    )];
    if let Some(subs) = &ge.subgroups {
        seeds.extend(pick(&mut rng, subs, 3).into_iter().map(|r| r.mask.clone()));
    }
    for s in seeds {
        if s.count() == 1 {
            continue;
        }
        let (sg, _) = g.induced_subgroup(&s).expect("subgroup");
        match homspace::count_homomorphisms(&sg, h) {
            Ok(1) => {}
            Ok(_) => continue,
            Err(e) => {
                log.error("quotient-equality", &case, &e);
                continue;
            }
        }
        let closure = structure::normal_closure(g, &s);
        let sub_case = format!("{case}, S={s:?}");
        let q = structure::quotient_group(g, &closure).expect("normal closure is normal");
        let counts = homspace::count_homomorphisms(&q.group, h);
        match memo.get(&q.group, h) {
            Ok(lq) => log.check(
                "quotient-equality",
                &sub_case,
                lq == lambda && counts.as_ref().ok() == Some(&homs.len()),
                || {
                    format!(
                        "lambda(G,H) = {lambda}, lambda(G/N,H) = {lq}, |Hom(G/N,H)| = {counts:?}"
                    )
                },
            ),
            Err(e) => log.error("quotient-equality", &sub_case, &e),
        }
    }
    log
}

/// Full homomorphism check for small domains, `10·|G|` random pairs above.
fn hom_spot_check(
    g: &FiniteGroup,
    h: &FiniteGroup,
    f: &Homomorphism,
    rng: &mut ChaCha8Rng,
) -> bool {
    let n = g.order();
    let holds = |a: usize, b: usize| f.image(g.mul(a, b)) == h.mul(f.image(a), f.image(b));
    if n <= 60 {
        f.first_violation(g, h).is_none()
    } else {
        (0..10 * n).all(|_| holds(rng.random_range(0..n), rng.random_range(0..n)))
    }
}

/// Largest agreement between two distinct maps, scanning pairs with a
/// mismatch budget. Stops at the largest proper divisor of `n`, which no
/// pair of distinct affine maps can exceed.
fn max_pair_agreement<M: GroupMap>(n: usize, maps: &[M]) -> Rational {
    let ceiling = number::divisors(n)
        .into_iter()
        .filter(|&d| d < n)
        .max()
        .unwrap_or(0);
    let mut best = 0usize;
    'scan: for (i, a) in maps.iter().enumerate() {
        for b in &maps[i + 1..] {
            if best >= ceiling {
                break 'scan;
            }
            let budget = n - best - 1;
            let mut miss = 0;
            for (x, y) in a.values().iter().zip(b.values()) {
                if x != y {
                    miss += 1;
                    if miss > budget {
                        break;
                    }
                }
            }
            if miss <= budget {
                best = n - miss;
            }
        }
    }
    Rational::new(best as u64, n as u64)
}

/// Largest agreement between distinct affine maps `a·φ` and `b·ψ`: they
/// agree at `x` iff `φ(x)·ψ(x)⁻¹ = a⁻¹·b`, so for each pair of
/// homomorphisms the best shift is the most frequent quotient value.
fn affine_max_by_quotients(g: &FiniteGroup, h: &FiniteGroup, homs: &[Homomorphism]) -> Rational {
    let n = g.order();
    let ceiling = number::divisors(n)
        .into_iter()
        .filter(|&d| d < n)
        .max()
        .unwrap_or(0);
    let mut bins = vec![0usize; h.order()];
    let mut best = 0;
    'scan: for (i, f) in homs.iter().enumerate() {
        for k in &homs[i + 1..] {
            if best >= ceiling {
                break 'scan;
            }
            bins.iter_mut().for_each(|b| *b = 0);
            for x in 0..n {
                bins[h.mul(f.image(x), h.inv(k.image(x)))] += 1;
            }
            best = best.max(*bins.iter().max().expect("non-empty"));
        }
    }
    Rational::new(best as u64, n as u64)
}

/// `Λ(G, H1×H2) = max(Λ(G,H1), Λ(G,H2))` and the analogue for a product
/// domain, on random triples. Draws whose product side needs a large search
/// are redrawn.
fn product_triple(memo: &LambdaMemo, groups: &[&Entry], mut rng: ChaCha8Rng) -> Log {
    let mut log = Log::default();
    for codomain_side in [true, false] {
        let prop = if codomain_side {
            "product-codomain-max"
        } else {
            "product-domain-max"
        };
        for _ in 0..PRODUCT_DRAWS {
            let a = *groups.choose(&mut rng).expect("groups");
            let b = *groups.choose(&mut rng).expect("groups");
            let c = *groups.choose(&mut rng).expect("groups");
            if a.group.order() * b.group.order() > PRODUCT_ORDER_LIMIT {
                continue;
            }
            let prod = FiniteGroup::direct_product(&a.group, &b.group)
                .expect("small product")
                .group;
            let (g, h) = if codomain_side {
                (&c.group, &prod)
            } else {
                (&prod, &c.group)
            };
            let homs = match homspace::enumerate_homomorphisms_with_cap(g, h, PRODUCT_SEARCH_CAP) {
                Ok(v) => v,
                Err(Error::SearchCapExceeded { .. }) => continue,
                Err(e) => {
                    log.error(prop, "product", &e);
                    break;
                }
            };
            let lp = homspace::lambda_over(g, &homs).value;
            let parts = if codomain_side {
                memo.get(&c.group, &a.group)
                    .and_then(|x| Ok((x, memo.get(&c.group, &b.group)?)))
            } else {
                memo.get(&a.group, &c.group)
                    .and_then(|x| Ok((x, memo.get(&b.group, &c.group)?)))
            };
            let case = if codomain_side {
                format!("G={}, H1={}, H2={}", c.name, a.name, b.name)
            } else {
                format!("G1={}, G2={}, H={}", a.name, b.name, c.name)
            };
            match parts {
                Ok((l1, l2)) => log.check(prop, &case, lp == l1.max(l2), || {
                    format!("lambda of the product {lp}, parts {l1}, {l2}")
                }),
                Err(e) => log.error(prop, &case, &e),
            }
            break;
        }
    }
    log
}

/// Every exact factorization `G = AB` by non-trivial subgroups bounds
/// `Λ(G, H)` by the larger of `Λ(A, H)` and `Λ(B, H)`, for every codomain.
fn factorization_checks(memo: &LambdaMemo, ge: &Entry, codomains: &[&Entry]) -> Log {
    let mut log = Log::default();
    let g = &ge.group;
    let n = g.order();
    let subs = ge.subgroups.as_ref().expect("lattice available");
    let mut factorizations = Vec::new();
    for a in subs.iter().filter(|r| r.order > 1 && r.order < n) {
        for b in subs
            .iter()
            .filter(|r| r.order > 1 && r.order * a.order == n)
        {
            if formula::exact_factorization_check(g, &a.mask, &b.mask).unwrap_or(false) {
                factorizations.push((a, b));
            }
        }
    }
    if factorizations.is_empty() {
        return log;
    }
    let factors: Vec<(String, FiniteGroup, FiniteGroup)> = factorizations
        .iter()
        .map(|(a, b)| {
            (
                format!("A={:?}, B={:?}", a.mask, b.mask),
                g.induced_subgroup(&a.mask).expect("subgroup").0,
                g.induced_subgroup(&b.mask).expect("subgroup").0,
            )
        })
        .collect();
    for he in codomains {
        let h = &he.group;
        for (label, ag, bg) in &factors {
            let case = format!("G={}, H={}, {label}", ge.name, he.name);
            let result = (|| -> Result<(Rational, Rational, Rational)> {
                Ok((memo.get(g, h)?, memo.get(ag, h)?, memo.get(bg, h)?))
            })();
            match result {
                Ok((l, la, lb)) => {
                    log.check("factorization-upper-bound", &case, l <= la.max(lb), || {
                        format!("lambda(G,H) = {l} exceeds max({la}, {lb})")
                    })
                }
                Err(e) => log.error("factorization-upper-bound", &case, &e),
            }
        }
    }
    log
}

// -------------------------------------------------------------- structure

/// Structural consequences on the solvable catalog groups up to the
/// lattice cap, plus lattice cross-checks on every group.
pub fn structure_suite(config: SuiteConfig) -> SuiteSummary {
    let names: Vec<&str> = SWEEP_SMALL
        .iter()
        .chain(SWEEP_LARGE)
        .chain(STRUCTURE_EXTRA)
        .copied()
        .collect();
    let groups: Vec<Entry> = entries(&names)
        .into_iter()
        .filter(|e| e.group.order() <= structure::ALL_SUBGROUPS_CAP)
        .collect();
    let logs: Vec<Log> = groups.par_iter().map(structure_group).collect();
    merge(Suite::Structure, config, logs)
}

fn structure_group(e: &Entry) -> Log {
    let mut log = Log::default();
    let g = &e.group;
    let n = g.order();
    let case = format!("G={}", e.name);
    let Some(subs) = &e.subgroups else {
        log.error(
            "lattice",
            &case,
            &Error::CapExceeded {
                what: "subgroup lattice",
                cap: structure::ALL_SUBGROUPS_CAP,
                size: n,
            },
        );
        return log;
    };

    let lattice_normals: Vec<&SubsetMask> = subs
        .iter()
        .filter(|r| r.is_normal)
        .map(|r| &r.mask)
        .collect();
    let direct: Vec<&SubsetMask> = e.normals.iter().map(|r| &r.mask).collect();
    log.check(
        "normal-subgroups-match-lattice",
        &case,
        lattice_normals == direct,
        || {
            format!(
                "{} normal subgroups directly, {} in the lattice",
                direct.len(),
                lattice_normals.len()
            )
        },
    );
    let bad = subs
        .iter()
        .find(|r| !g.is_subgroup(&r.mask) || !n.is_multiple_of(r.order));
    log.check(
        "lattice-members-are-subgroups",
        &case,
        bad.is_none(),
        || format!("{bad:?}"),
    );
    let bad = subs
        .iter()
        .find(|r| r.is_normal != g.is_normal_subgroup(&r.mask));
    log.check("lattice-normality-flags", &case, bad.is_none(), || {
        format!("{bad:?}")
    });

    let classes = g.conjugacy_classes();
    let ok = classes.iter().map(|c| c.len()).sum::<usize>() == n
        && classes.iter().all(|c| n.is_multiple_of(c.len()));
    log.check("class-equation", &case, ok, || {
        "class sizes do not partition |G|".into()
    });

    if e.solvable {
        for r in structure::maximal_normal_subgroups(g) {
            log.check(
                "maximal-normal-prime-index",
                &case,
                number::is_prime(r.index),
                || format!("maximal normal subgroup {:?} has index {}", r.mask, r.index),
            );
        }
        if let Some(smallest) = subs.iter().filter(|r| r.order < n).map(|r| r.index).min() {
            let bad: Vec<&SubgroupRecord> = subs
                .iter()
                .filter(|r| r.index == smallest && !r.is_normal)
                .collect();
            log.check(
                "smallest-index-subgroup-normal",
                &case,
                bad.is_empty(),
                || format!("index-{smallest} subgroup {:?} is not normal", bad[0].mask),
            );
        }
    }

    for nr in &e.normals {
        let q = structure::quotient_group(g, &nr.mask).expect("normal");
        let proj = Homomorphism::from_fn(g, &q.group, |x| q.projection[x]);
        let ok = match proj {
            Ok(p) => p.kernel() == nr.mask && q.group.order() * nr.order == n,
            Err(_) => false,
        };
        log.check(
            "quotient-projection-kernel",
            &format!("{case}, N={:?}", nr.mask),
            ok,
            || "projection is not a homomorphism with kernel N".into(),
        );
    }

    for (i, a) in e.normals.iter().enumerate() {
        for b in &e.normals[i + 1..] {
            let both = a.mask.intersection(&b.mask);
            let ok = g.is_normal_subgroup(&both) && (a.index * b.index) % (n / both.count()) == 0;
            log.check(
                "normal-intersection",
                &format!("{case}, N1={:?}, N2={:?}", a.mask, b.mask),
                ok,
                || format!("intersection of order {} fails", both.count()),
            );
        }
    }
    log
}

// --------------------------------------------------------------- burnside

/// The orbit-count bound never exceeds `Λ(G, G)`.
pub fn burnside_suite(config: SuiteConfig) -> SuiteSummary {
    let mut groups = sweep_entries(config.max_order.min(FACTORIZATION_ORDER_LIMIT));
    groups.extend(entries(&["A5"]));
    let logs: Vec<Log> = groups.par_iter().map(burnside_group).collect();
    merge(Suite::Burnside, config, logs)
}

fn burnside_group(e: &Entry) -> Log {
    let mut log = Log::default();
    let g = &e.group;
    let case = format!("G={}", e.name);
    if g.is_trivial() {
        return log;
    }
    let result = (|| -> Result<(Vec<Homomorphism>, Rational)> {
        Ok((
            homspace::automorphism_group(g)?,
            homspace::lambda_bruteforce(g, g)?.value,
        ))
    })();
    let (autos, lambda) = match result {
        Ok(x) => x,
        Err(e) => {
            log.error("burnside-bound", &case, &e);
            return log;
        }
    };
    let closed = autos.len() * autos.len() > 40_000
        || autos.iter().all(|a| {
            autos.iter().all(|b| {
                a.then(b)
                    .map(|c| autos.binary_search(&c).is_ok())
                    .unwrap_or(false)
            })
        });
    log.check("automorphisms-closed", &case, closed, || {
        "composition leaves Aut(G)".into()
    });
    if let Some(bound) = homspace::burnside_bound_from(g, &autos) {
        log.check("burnside-bound", &case, bound <= lambda, || {
            format!("bound {bound} exceeds lambda {lambda}")
        });
    }
    log
}

// ----------------------------------------------------------------- simple

/// Checks on the alternating groups of degree five and six.
pub fn simple_suite(config: SuiteConfig) -> SuiteSummary {
    let mut log = Log::default();
    let a5 = make_named("A5").expect("catalog");
    let a6 = make_named("A6").expect("catalog");

    let l55 = homspace::lambda_bruteforce(&a5, &a5).map(|w| w.value);
    let l56 = homspace::lambda_bruteforce(&a5, &a6).map(|w| w.value);
    match (&l55, &l56) {
        (Ok(l55), Ok(l56)) => {
            let (l55, l56) = (*l55, *l56);
            log.check(
                "lambda-A5-A5",
                "G=A5, H=A5",
                l55 == Rational::new(1, 10),
                || format!("got {l55}"),
            );
            log.check(
                "lambda-A5-A6",
                "G=A5, H=A6",
                l56 == Rational::new(1, 5),
                || format!("got {l56}"),
            );
            log.check(
                "codomain-embedding-matters",
                "A5 into A5 vs A6",
                l56 > l55,
                || format!("{l56} <= {l55}"),
            );
            log.check(
                "alternating-bounds",
                "n=5",
                Rational::new(2, 20) <= l55 && l55 < Rational::new(1, 5),
                || format!("lambda {l55} outside [1/10, 1/5)"),
            );
            match homspace::burnside_lower_bound(&a5) {
                Ok(Some(b)) => log.check("burnside-bound", "G=A5", b <= l55, || {
                    format!("bound {b} > {l55}")
                }),
                Ok(None) => log.check("burnside-bound", "G=A5", false, || "bound undefined".into()),
                Err(e) => log.error("burnside-bound", "G=A5", &e),
            }
            let verdict = formula::lambda_formula(&a5, &a5).expect("formula");
            log.check(
                "formula-not-applicable",
                "G=A5, H=A5",
                !verdict.applicable && verdict.value != l55,
                || format!("applicable {} value {}", verdict.applicable, verdict.value),
            );
        }
        (Err(e), _) | (_, Err(e)) => log.error("lambda-A5", "A5", e),
    }

    match conjugation_pair(&a5) {
        Ok((agree, on_45, on_12)) => {
            log.check(
                "conjugation-pair-agreement",
                "(1 2 3) vs (1 3 2)",
                agree >= Rational::new(1, 30),
                || format!("agreement {agree}"),
            );
            log.check(
                "conjugation-pair-agrees-on-(4 5)",
                "(1 2 3) vs (1 3 2)",
                on_45,
                || "disagree".into(),
            );
            log.check(
                "conjugation-pair-differs-on-(1 2)",
                "(1 2 3) vs (1 3 2)",
                !on_12,
                || "agree".into(),
            );
        }
        Err(e) => log.error("conjugation-pair-agreement", "A5", &e),
    }

    match transposition_twist(&a5) {
        Ok(v) => log.check(
            "outer-twist-agreement",
            "conjugation by (4 5)",
            v == Rational::new(1, 10),
            || format!("agreement {v}"),
        ),
        Err(e) => log.error("outer-twist-agreement", "A5", &e),
    }

    match structure::all_subgroups(&a5) {
        Ok(subs) => {
            let small = subs.iter().filter(|r| r.index > 1 && r.index < 5).count();
            log.check("no-subgroup-of-index-below-5", "G=A5", small == 0, || {
                format!("{small} subgroups of index below 5")
            });
            let a4 = make_named("A4").expect("catalog");
            let index5: Vec<&SubgroupRecord> = subs.iter().filter(|r| r.index == 5).collect();
            let all_a4 = !index5.is_empty()
                && index5.iter().all(|r| {
                    let (s, _) = a5.induced_subgroup(&r.mask).expect("subgroup");
                    homspace::are_isomorphic(&s, &a4).unwrap_or(false)
                });
            log.check("index-5-subgroups-are-A4", "G=A5", all_a4, || {
                format!(
                    "{} index-5 subgroups, not all isomorphic to A4",
                    index5.len()
                )
            });
        }
        Err(e) => log.error("no-subgroup-of-index-below-5", "G=A5", &e),
    }
    merge(Suite::Simple, config, [log])
}

fn perm_element(g: &FiniteGroup, cycles: &[Vec<usize>]) -> Result<usize> {
    let p = Permutation::from_cycles(5, cycles)?;
    g.find_permutation(&p)
        .ok_or_else(|| Error::BadPermutation(format!("{p} is not in the group")))
}

/// Conjugation by `(1 2 3)` against conjugation by `(1 3 2)`: their
/// agreement on `A5`, and whether the same conjugations (as maps on `S5`)
/// agree on `(4 5)` and on `(1 2)`.
fn conjugation_pair(a5: &FiniteGroup) -> Result<(Rational, bool, bool)> {
    let c = Permutation::from_cycles(5, &[vec![1, 2, 3]])?;
    let d = Permutation::from_cycles(5, &[vec![1, 3, 2]])?;
    let f = Homomorphism::conjugation(a5, perm_element(a5, &[vec![1, 2, 3]])?);
    let g = Homomorphism::conjugation(a5, perm_element(a5, &[vec![1, 3, 2]])?);
    let conj = |by: &Permutation, t: &Permutation| by.inverse().then(t).then(by);
    let agree_on = |cycles: &[Vec<usize>]| -> Result<bool> {
        let t = Permutation::from_cycles(5, cycles)?;
        Ok(conj(&c, &t) == conj(&d, &t))
    };
    Ok((
        homspace::agreement(&f, &g)?,
        agree_on(&[vec![4, 5]])?,
        agree_on(&[vec![1, 2]])?,
    ))
}

/// Agreement of the identity with conjugation by the odd permutation
/// `(4 5)`, an automorphism of `A5` that is not inner.
fn transposition_twist(a5: &FiniteGroup) -> Result<Rational> {
    let perms = a5
        .permutations()
        .ok_or_else(|| Error::BadPermutation("not a permutation group".into()))?;
    let t = Permutation::from_cycles(5, &[vec![4, 5]])?;
    let twist = Homomorphism::from_fn(a5, a5, |x| {
        let p = &perms.elements[x];
        a5.find_permutation(&t.then(p).then(&t))
            .expect("A5 is normal in S5")
    })?;
    homspace::agreement(&Homomorphism::identity(a5), &twist)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_theorem_sweep() {
        let s = theorem_suite(SuiteConfig {
            max_order: 8,
            seed: 0,
        });
        assert!(s.is_success(), "{}", s.to_text());
        assert!(s.properties["formula-equals-bruteforce"].passed > 50);
    }

    #[test]
    fn small_props_sweep_is_deterministic() {
        let cfg = SuiteConfig {
            max_order: 8,
            seed: 3,
        };
        let a = props_suite(cfg);
        assert!(a.is_success(), "{}", a.to_text());
        assert_eq!(a, props_suite(cfg));
    }

    #[test]
    fn affine_scan_matches_definition() {
        let c4 = make_named("C4").unwrap();
        let affine = homspace::enumerate_affine(&c4, &c4, 100).unwrap();
        assert_eq!(affine.len(), 16);
        assert_eq!(max_pair_agreement(4, &affine), Rational::new(1, 2));
    }

    #[test]
    fn quotient_binning_matches_affine_scan() {
        for (a, b) in [("C4", "C4"), ("S3", "S3"), ("D4", "C2xC4"), ("C6", "S3")] {
            let (g, h) = (make_named(a).unwrap(), make_named(b).unwrap());
            let homs = homspace::enumerate_homomorphisms(&g, &h).unwrap();
            let affine = homspace::enumerate_affine(&g, &h, 10_000).unwrap();
            assert_eq!(
                affine_max_by_quotients(&g, &h, &homs),
                max_pair_agreement(g.order(), &affine),
                "{a} -> {b}"
            );
        }
    }

    #[test]
    fn summary_counts() {
        let mut log = Log::default();
        log.check("a", "x", true, String::new);
        log.check("a", "y", false, || "bad".into());
        let s = merge(Suite::Simple, SuiteConfig::default(), [log]);
        assert_eq!((s.passed(), s.failed(), s.total()), (1, 1, 2));
        assert_eq!(s.properties["a"].failures[0].case, "y");
    }
}

//! Library results against independent arithmetic oracles and frozen
//! reference values.

use std::collections::BTreeSet;

use homcode_core::formula::{self, BoundReason};
use homcode_core::homspace::{self, GroupMap};
use homcode_core::{make_named, structure, FiniteGroup, Homomorphism, Permutation, Rational};

fn g(name: &str) -> FiniteGroup {
    make_named(name).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Λ(Z_a1 × … × Z_ak, Z_n)` by modular arithmetic: homomorphisms are
/// coefficient vectors `c` with `c_i·a_i ≡ 0 (mod n)`.
fn abelian_lambda(dims: &[usize], n: usize) -> (usize, Rational) {
    let coeffs: Vec<Vec<usize>> = dims
        .iter()
        .map(|&a| (0..n).filter(|c| c * a % n == 0).collect())
        .collect();
    let mut homs: Vec<Vec<usize>> = vec![vec![]];
    for choices in &coeffs {
        homs = homs
            .into_iter()
            .flat_map(|h| {
                choices.iter().map(move |&c| {
                    let mut h = h.clone();
                    h.push(c);
                    h
                })
            })
            .collect();
    }
    let order: usize = dims.iter().product();
    let points: Vec<Vec<usize>> = (0..order)
        .map(|mut x| {
            dims.iter()
                .map(|&a| {
                    let r = x % a;
                    x /= a;
                    r
                })
                .collect()
        })
        .collect();
    let eval = |h: &[usize], p: &[usize]| h.iter().zip(p).map(|(c, x)| c * x).sum::<usize>() % n;
    let mut best = 0;
    for (i, a) in homs.iter().enumerate() {
        for b in &homs[i + 1..] {
            best = best.max(points.iter().filter(|p| eval(a, p) == eval(b, p)).count());
        }
    }
    (homs.len(), Rational::new(best as u64, order as u64))
}

#[test]
fn cyclic_groups_match_modular_arithmetic() {
    for m in 1..=24 {
        for n in 2..=24 {
            let (gm, gn) = (g(&format!("C{m}")), g(&format!("C{n}")));
            let (count, lambda) = abelian_lambda(&[m], n);
            assert_eq!(count, gcd(m, n), "C{m} -> C{n}");
            assert_eq!(
                homspace::count_homomorphisms(&gm, &gn).unwrap(),
                count,
                "C{m} -> C{n}"
            );
            assert_eq!(
                homspace::lambda_bruteforce(&gm, &gn).unwrap().value,
                lambda,
                "C{m} -> C{n}"
            );
        }
    }
}

#[test]
fn abelian_products_match_modular_arithmetic() {
    for a in 2..=6 {
        for b in 2..=6 {
            let dom = g(&format!("C{a}xC{b}"));
            for n in [2, 3, 4, 6, 8, 9, 12] {
                let (count, lambda) = abelian_lambda(&[a, b], n);
                let cod = g(&format!("C{n}"));
                assert_eq!(homspace::count_homomorphisms(&dom, &cod).unwrap(), count);
                assert_eq!(
                    homspace::lambda_bruteforce(&dom, &cod).unwrap().value,
                    lambda,
                    "C{a}xC{b} -> C{n}"
                );
            }
        }
    }
}

#[test]
fn formula_matches_arithmetic_oracle_on_cyclic_pairs() {
    for m in 2..=30 {
        for n in 2..=30 {
            let v = formula::lambda_formula(&g(&format!("C{m}")), &g(&format!("C{n}"))).unwrap();
            assert!(v.applicable);
            assert_eq!(v.value, abelian_lambda(&[m], n).1, "C{m} -> C{n}");
        }
    }
}

#[test]
fn permutation_closures() {
    let p = |cycles: &[Vec<usize>]| Permutation::from_cycles(5, cycles).unwrap();
    let a5 = FiniteGroup::from_permutations(5, &[p(&[vec![1, 2, 3, 4, 5]]), p(&[vec![1, 2, 3]])])
        .unwrap();
    assert_eq!(a5.order(), 60);
    let s5 = g("S5");
    let x = s5
        .find_permutation(&p(&[vec![1, 2], vec![3, 4, 5]]))
        .unwrap();
    assert_eq!(s5.element_order(x), 6);
    assert_eq!(FiniteGroup::from_permutations(3, &[]).unwrap().order(), 1);
}

fn class_sizes(name: &str) -> Vec<usize> {
    let mut v: Vec<usize> = g(name)
        .conjugacy_classes()
        .iter()
        .map(|c| c.len())
        .collect();
    v.sort_unstable();
    v
}

#[test]
fn conjugacy_classes() {
    assert_eq!(class_sizes("C4"), vec![1, 1, 1, 1]);
    assert_eq!(class_sizes("S3"), vec![1, 2, 3]);
    assert_eq!(class_sizes("A5"), vec![1, 12, 12, 15, 20]);
}

#[test]
fn subgroup_lattices() {
    let orders = |name: &str| -> Vec<usize> {
        let mut v: Vec<usize> = structure::all_subgroups(&g(name))
            .unwrap()
            .iter()
            .map(|r| r.order)
            .collect();
        v.sort_unstable();
        v
    };
    assert_eq!(orders("C6"), vec![1, 2, 3, 6]);
    assert_eq!(orders("S3"), vec![1, 2, 2, 2, 3, 6]);
    assert_eq!(orders("C1"), vec![1]);
    assert_eq!(structure::normal_subgroups(&g("A5")).len(), 2);

    let set = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<_>>();
    assert_eq!(structure::normal_index_set(&g("S3")), set(&[2, 6]));
    assert_eq!(
        structure::normal_index_set(&g("C12")),
        set(&[2, 3, 4, 6, 12])
    );
    assert_eq!(structure::normal_index_set(&g("A5")), set(&[60]));
}

#[test]
fn quotients_and_series() {
    let s3 = g("S3");
    let a3 = structure::normal_subgroups(&s3)
        .into_iter()
        .find(|r| r.order == 3)
        .unwrap();
    assert_eq!(
        structure::quotient_group(&s3, &a3.mask)
            .unwrap()
            .group
            .order(),
        2
    );

    let s4 = structure::solvability_class(&g("S4"));
    assert!(s4.solvable && !s4.nilpotent);
    let orders: Vec<usize> = s4.derived_series.iter().map(|m| m.count()).collect();
    assert_eq!(orders, vec![24, 12, 4, 1]);
    assert!(!structure::solvability_class(&g("A5")).solvable);
    let q8 = structure::solvability_class(&g("Q8"));
    assert!(q8.nilpotent && !q8.abelian);
}

#[test]
fn equalizers_and_agreements() {
    let c6 = g("C6");
    let id = Homomorphism::identity(&c6);
    let triple = Homomorphism::from_fn(&c6, &c6, |x| (3 * x) % 6).unwrap();
    let eq = homspace::equalizer(&[&id as &dyn GroupMap, &triple]).unwrap();
    assert_eq!(eq.to_vec(), vec![0, 3]);
    assert_eq!(
        homspace::agreement(&id, &triple).unwrap(),
        Rational::new(1, 3)
    );

    let s3 = g("S3");
    let c2 = g("C2");
    let sign = homspace::enumerate_homomorphisms(&s3, &c2)
        .unwrap()
        .into_iter()
        .find(|f| f.kernel().count() == 3)
        .unwrap();
    let trivial = Homomorphism::trivial(&s3, &c2);
    assert_eq!(
        homspace::agreement(&sign, &trivial).unwrap(),
        Rational::new(1, 2)
    );
}

#[test]
fn reference_lambdas() {
    let lam = |a: &str, b: &str| homspace::lambda_bruteforce(&g(a), &g(b)).unwrap().value;
    assert_eq!(lam("C2", "C2"), Rational::new(1, 2));
    assert_eq!(lam("S3", "C5"), Rational::ZERO);
    assert_eq!(lam("S3", "C6"), Rational::new(1, 2));
    assert_eq!(lam("C35", "C10"), Rational::new(1, 5));
    assert_eq!(lam("A5", "A5"), Rational::new(1, 10));
}

#[test]
fn affine_and_automorphism_counts() {
    assert_eq!(
        homspace::enumerate_affine(&g("C2"), &g("C2"), 100)
            .unwrap()
            .len(),
        4
    );
    let affine = homspace::enumerate_affine(&g("S3"), &g("C5"), 100).unwrap();
    assert_eq!(affine.len(), 5);
    assert!(affine.iter().all(|f| f.is_constant()));
    assert_eq!(
        homspace::enumerate_affine(&g("S3"), &g("C1"), 100)
            .unwrap()
            .len(),
        1
    );

    let aut = |name: &str| homspace::automorphism_group(&g(name)).unwrap().len();
    assert_eq!(aut("C2"), 1);
    assert_eq!(aut("C3"), 2);
    assert_eq!(aut("A5"), 120);
}

#[test]
fn burnside_reference_values() {
    assert_eq!(
        homspace::burnside_lower_bound(&g("C3")).unwrap(),
        Some(Rational::new(1, 3))
    );
    assert_eq!(homspace::burnside_lower_bound(&g("C2")).unwrap(), None);
    let a5 = g("A5");
    let autos = homspace::automorphism_group(&a5).unwrap();
    assert_eq!(homspace::orbit_count(&a5, &autos), 4);
    assert_eq!(
        homspace::burnside_bound_from(&a5, &autos),
        Some(Rational::new(7, 119))
    );
}

#[test]
fn formula_reference_values() {
    let v = formula::lambda_formula(&g("S3"), &g("C6")).unwrap();
    assert_eq!((v.applicable, v.value), (true, Rational::new(1, 2)));
    let v = formula::lambda_formula(&g("S3"), &g("C3")).unwrap();
    assert_eq!((v.applicable, v.value), (true, Rational::ZERO));
    let v = formula::lambda_formula(&g("C35"), &g("C10")).unwrap();
    assert_eq!(v.value, Rational::new(1, 5));
    let v = formula::lambda_formula(&g("A5"), &g("A5")).unwrap();
    assert!(!v.applicable);
    assert_eq!(v.value, Rational::ZERO);

    let b = formula::lambda_bounds(&g("S3"), &g("C5")).unwrap();
    assert_eq!(
        (b.lower.value, b.upper.value),
        (Rational::ZERO, Rational::ZERO)
    );
    assert!(matches!(b.upper.reason, BoundReason::Coprime));
    let b = formula::lambda_bounds(&g("A5"), &g("A5")).unwrap();
    assert_eq!(
        (b.lower.value, b.upper.value),
        (Rational::ZERO, Rational::new(1, 2))
    );
    let b = formula::lambda_bounds(&g("C4"), &g("C2")).unwrap();
    assert_eq!(
        (b.lower.value, b.upper.value),
        (Rational::new(1, 2), Rational::new(1, 2))
    );
}

#[test]
fn isomorphism_reference_values() {
    let iso = |a: &str, b: &str| homspace::are_isomorphic(&g(a), &g(b)).unwrap();
    assert!(iso("C6", "C2xC3"));
    assert!(!iso("C4", "C2xC2"));
    assert!(iso("D3", "S3"));
    assert!(iso("A4", "A4"));
}

use b1_core::algebra::{algebra_morphisms, algebra_zoo, is_algebra_morphism, AlgebraMorphism, FinAlgebra};
use b1_core::monoid::{
    adjunction_check, forgetful_g, full_faithfulness_check, functor_f, functor_f_on_morphism, is_monoid_morphism, lambda,
    monoid_morphisms, monoid_zoo, FinMonoid, MonoidMorphism,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn monoids(max: usize) -> &'static [FinMonoid] {
    static ZOO: OnceLock<Vec<FinMonoid>> = OnceLock::new();
    let all = ZOO.get_or_init(|| monoid_zoo(6).unwrap());
    &all[..all.partition_point(|m| m.size() <= max)]
}

fn algebras() -> &'static [FinAlgebra] {
    static ZOO: OnceLock<Vec<FinAlgebra>> = OnceLock::new();
    ZOO.get_or_init(|| algebra_zoo(4).unwrap())
}

#[test]
fn zoo_sizes() {
    let counts: Vec<usize> = (1..=6).map(|n| monoids(6).iter().filter(|m| m.size() == n).count()).collect();
    assert_eq!(&counts[..5], &[1, 2, 5, 19, 78]);
}

#[test]
fn powerset_algebras_are_valid() {
    for a in monoids(5) {
        let f = functor_f(a).unwrap();
        assert_eq!(f.algebra.size(), 1 << a.size());
        FinAlgebra::from_flat(f.algebra.names().to_vec(), f.algebra.sum_table().to_vec(), f.algebra.mul_table().to_vec())
            .unwrap();
    }
}

#[test]
fn functor_respects_identities_and_composition() {
    let zoo = monoids(3);
    for a in zoo {
        let id = functor_f_on_morphism(&MonoidMorphism::identity(a)).unwrap();
        assert_eq!(id.map, (0..id.source.size()).collect::<Vec<_>>());
        for b in zoo {
            for g in monoid_morphisms(a, b) {
                let g = MonoidMorphism::new(a.clone(), b.clone(), g).unwrap();
                let fg = functor_f_on_morphism(&g).unwrap();
                assert!(is_algebra_morphism(&fg.source, &fg.target, &fg.map));
                for c in zoo {
                    for h in monoid_morphisms(b, c) {
                        let h = MonoidMorphism::new(b.clone(), c.clone(), h).unwrap();
                        let fh = functor_f_on_morphism(&h).unwrap();
                        let both = functor_f_on_morphism(&h.compose(&g).unwrap()).unwrap();
                        assert_eq!(both.map, fh.compose(&fg).unwrap().map);
                    }
                }
            }
        }
    }
}

#[test]
fn adjunction_counts_agree() {
    for b in monoids(3) {
        for e in algebras() {
            let r = adjunction_check(b, e).unwrap();
            assert_eq!(r.algebra_homs, r.monoid_homs);
            assert!(r.holds());
        }
    }
}

#[test]
fn adjunction_is_natural() {
    let mut rng = ChaCha8Rng::seed_from_u64(b1_core::DEFAULT_SEED);
    let zoo = monoids(3);
    let algs = algebras();
    for _ in 0..200 {
        let b = zoo.choose(&mut rng).unwrap();
        let e = algs.choose(&mut rng).unwrap();
        let e2 = algs.choose(&mut rng).unwrap();
        let fb = functor_f(b).unwrap();
        let Some(phi) = algebra_morphisms(&fb.algebra, e).choose(&mut rng).cloned() else { continue };
        // post-composition with an algebra morphism E -> E'
        if let Some(f) = algebra_morphisms(e, e2).choose(&mut rng) {
            let composed: Vec<usize> = phi.iter().map(|&x| f[x]).collect();
            let lhs = lambda(&fb, &composed);
            let rhs: Vec<usize> = lambda(&fb, &phi).iter().map(|&x| f[x]).collect();
            assert_eq!(lhs, rhs);
        }
        // pre-composition with F(g) for a monoid morphism g: B' -> B
        let b2 = zoo.choose(&mut rng).unwrap();
        if let Some(g) = monoid_morphisms(b2, b).choose(&mut rng) {
            let g = MonoidMorphism::new(b2.clone(), b.clone(), g.clone()).unwrap();
            let fg = functor_f_on_morphism(&g).unwrap();
            let phi_m = AlgebraMorphism::new(fb.algebra.clone(), e.clone(), phi.clone()).unwrap();
            let composed = phi_m.compose(&fg).unwrap();
            let fb2 = functor_f(b2).unwrap();
            let lhs = lambda(&fb2, &composed.map);
            let l = lambda(&fb, &phi);
            let rhs: Vec<usize> = (0..b2.size()).map(|x| l[g.apply(x)]).collect();
            assert_eq!(lhs, rhs);
            assert!(is_monoid_morphism(b2, &forgetful_g(e), &lhs));
        }
    }
}

#[test]
fn units_of_powerset_algebras_are_singleton_units() {
    for a in monoids(5) {
        let f = functor_f(a).unwrap();
        let mut expected: Vec<usize> = a.units().iter().map(|&u| f.singleton(u)).collect();
        expected.sort_unstable();
        let mut got = forgetful_g(&f.algebra).units();
        got.sort_unstable();
        assert_eq!(got, expected);
    }
}

#[test]
fn integral_extensions_of_groups() {
    let mut pairs = 0;
    for a in monoids(6) {
        for sub in a.submonoids() {
            if !a.is_integral_over(&sub).unwrap() {
                continue;
            }
            pairs += 1;
            let sub_is_group = sub.iter().all(|&x| sub.iter().any(|&y| a.mul(x, y) == a.unit()));
            assert_eq!(a.is_group(), sub_is_group);
        }
    }
    assert!(pairs > 0);
}

#[test]
fn groups_embed_fully_faithfully() {
    let groups = [
        FinMonoid::cyclic_group(1),
        FinMonoid::cyclic_group(2),
        FinMonoid::cyclic_group(3),
        FinMonoid::cyclic_group(4),
        FinMonoid::cyclic_group(2).product(&FinMonoid::cyclic_group(2)),
    ];
    for a in &groups {
        for b in &groups {
            let r = full_faithfulness_check(a, b).unwrap();
            assert_eq!(r.algebra_homs, r.group_homs);
            assert!(r.holds());
        }
    }
}

#[test]
fn non_groups_are_rejected() {
    let m = monoids(2).iter().find(|m| !m.is_group()).unwrap();
    assert!(full_faithfulness_check(m, m).is_err());
}

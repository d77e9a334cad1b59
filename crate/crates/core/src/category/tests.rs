use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::combinatorics::{enumerate_paths, w, Path, Weight};
use crate::euler::{integrate, phi_generator, psi_key_function, Breakpoints, CellSignature, HalfOpenInterval, SchwartzFn};
use crate::scalar::{int, Scalar};

fn path(steps: &[(u8, u8)]) -> Path {
    Path::planar(steps).unwrap()
}

fn a() -> Path {
    path(&[(1, 0), (0, 1)])
}
fn b() -> Path {
    path(&[(0, 1), (1, 0)])
}
fn d() -> Path {
    path(&[(1, 1)])
}

fn m(terms: &[(Path, i64)]) -> Morphism {
    let (n, k) = (terms[0].0.target()[0], terms[0].0.target()[1]);
    Morphism::from_terms(n, k, terms.iter().map(|(p, c)| (p.clone(), int(*c)))).unwrap()
}

fn basis(p: &Path) -> Morphism {
    Morphism::basis(p).unwrap()
}

#[test]
fn arity_one_table() {
    // ∫ 1_{x<z} 1_{z<y} dz is the volume of (x, y), so −1 on x<y.
    let aa = compose_oracle(&a(), &a()).unwrap();
    assert_eq!(aa, m(&[(a(), -1)]));
    // ∫ 1_{x<z} 1_{y<z} dz is the volume of (max(x,y), ∞), −1 everywhere.
    let ab = compose_oracle(&a(), &b()).unwrap();
    assert_eq!(ab, m(&[(a(), -1), (b(), -1), (d(), -1)]));
    assert_eq!(compose(&basis(&a()), &basis(&a())).unwrap(), aa);
    assert_eq!(compose(&basis(&a()), &basis(&b())).unwrap(), ab);
}

#[test]
fn identities() {
    assert_eq!(identity(0), basis(&Path::empty(2)));
    assert_eq!(identity(1), basis(&d()));
    for n in 0..=3 {
        for k in 0..=3 {
            for p in enumerate_paths(&[n, k]) {
                let f = basis(&p);
                assert_eq!(compose(&identity(n), &f).unwrap(), f);
                assert_eq!(compose(&f, &identity(k)).unwrap(), f);
            }
        }
    }
}

#[test]
fn combinatorial_rule_matches_integration() {
    for n in 0..=2 {
        for k in 0..=2 {
            for l in 0..=2 {
                for p1 in enumerate_paths(&[n, k]) {
                    for p2 in enumerate_paths(&[k, l]) {
                        let c = compose(&basis(&p1), &basis(&p2)).unwrap();
                        assert_eq!(c, compose_oracle(&p1, &p2).unwrap(), "{p1} ∘ {p2}");
                        assert_eq!(compose_basis(&p1, &p2).unwrap(), compose_basis_by_epsilon(&p1, &p2).unwrap());
                        for p3 in enumerate_paths(&[n, l]) {
                            if epsilon(&p1, &p2, &p3).unwrap().is_none() {
                                assert!(c.coeff(&p3) == Scalar::default());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn associativity_on_small_bases() {
    for n in 0..=2 {
        for k in 0..=2 {
            for l in 0..=2 {
                for r in 0..=2 {
                    for p in enumerate_paths(&[n, k]) {
                        for q in enumerate_paths(&[k, l]) {
                            let pq = compose(&basis(&p), &basis(&q)).unwrap();
                            for s in enumerate_paths(&[l, r]) {
                                let left = compose(&pq, &basis(&s)).unwrap();
                                let right = compose(&basis(&p), &compose(&basis(&q), &basis(&s)).unwrap()).unwrap();
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn slice_examples() {
    let f = slice_kernel(&d(), &[int(5)], 1).unwrap();
    assert_eq!(f, SchwartzFn::indicator(Breakpoints::new(vec![int(5)]).unwrap(), CellSignature::new(vec![1], 1).unwrap()));
    let g = slice_kernel(&a(), &[int(0)], 1).unwrap();
    assert_eq!(g, SchwartzFn::indicator(Breakpoints::new(vec![int(0)]).unwrap(), CellSignature::new(vec![0], 1).unwrap()));
    assert!(slice_kernel(&a(), &[int(0), int(1)], 1).is_err());
    for n in 0..=3 {
        for k in 0..=3 {
            for p in enumerate_paths(&[n, k]) {
                let fixed: Vec<Scalar> = (0..n as i64).map(int).collect();
                let s = slice_kernel(&p, &fixed, 0).unwrap();
                let lone_free = p.steps().iter().filter(|s| s.mask() == 0b01).count();
                assert_eq!(integrate(&s), crate::scalar::sign(lone_free));
            }
        }
    }
}

#[test]
fn apply_kernel_examples() {
    let bp = |v: &[i64]| Breakpoints::new(v.iter().map(|&x| int(x)).collect()).unwrap();
    let delta0 = SchwartzFn::indicator(bp(&[0]), CellSignature::new(vec![1], 1).unwrap());
    let left_of_0 = SchwartzFn::indicator(bp(&[0]), CellSignature::new(vec![0], 1).unwrap());
    assert!(apply_kernel(&basis(&a()), &delta0).unwrap().equivalent(&left_of_0));
    assert!(apply_kernel(&identity(1), &delta0).unwrap().equivalent(&delta0));
    let unit = SchwartzFn::indicator(bp(&[0, 1]), CellSignature::new(vec![2], 2).unwrap());
    let below_1 = SchwartzFn::indicator(bp(&[1]), CellSignature::new(vec![0], 1).unwrap()).scale(&int(-1));
    assert!(apply_kernel(&basis(&a()), &unit).unwrap().equivalent(&below_1));
}

#[test]
fn projector_examples() {
    assert_eq!(projector(&Weight::empty()), identity(0));
    assert_eq!(projector(&w("b")), m(&[(d(), 1), (a(), 1)]));
    assert_eq!(projector(&w("w")), m(&[(d(), 1), (b(), 1)]));
    assert_eq!(projector(&w("bb")).num_terms(), 4);
}

#[test]
fn projector_calculus_small() {
    for n in 0..=3 {
        let ws = Weight::all_of_length(n);
        for l in &ws {
            let p = projector(l);
            assert_eq!(compose(&p, &p).unwrap(), p);
            assert_eq!(trace(&p).unwrap(), crate::scalar::sign(n));
            for mu in &ws {
                if mu != l {
                    assert!(compose(&p, &projector(mu)).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn eigenvalues_match_composition() {
    for n in 0..=2 {
        for l in Weight::all_of_length(n) {
            let pl = projector(&l);
            for p in enumerate_paths(&[n, n]) {
                let sandwich = compose(&compose(&pl, &basis(&p)).unwrap(), &pl).unwrap();
                match eigenvalue(&l, &p) {
                    Some(e) => assert_eq!(sandwich, pl.scale(&int(e)), "{l} {p}"),
                    None => assert!(sandwich.is_zero(), "{l} {p}"),
                }
            }
        }
    }
}

#[test]
fn traces() {
    for n in 0..=3 {
        assert_eq!(trace(&identity(n)).unwrap(), crate::scalar::sign(n));
        for p in enumerate_paths(&[n, n]) {
            if !p.is_diagonal() {
                assert_eq!(trace(&basis(&p)).unwrap(), int(0));
            }
        }
    }
    assert!(trace(&basis(&path(&[(1, 0)]))).is_err());
}

#[test]
fn invariant_extension_examples() {
    for n in 0..=3 {
        let a: Vec<Scalar> = (1..=n as i64).map(int).collect();
        let bps = Breakpoints::new(a.clone()).unwrap();
        let delta = SchwartzFn::indicator(bps.clone(), CellSignature::new((0..n).map(|i| 2 * i + 1).collect(), n).unwrap());
        assert_eq!(invariant_extension(&delta, &a).unwrap(), identity(n));
        for l in Weight::all_of_length(n) {
            let psi = psi_key_function(&l, &a).unwrap();
            let ext = invariant_extension(&psi, &a).unwrap();
            assert_eq!(ext, projector(&l));
            assert!(apply_kernel(&ext, &delta).unwrap().equivalent(&psi));
        }
    }
    let x = SchwartzFn::one_point();
    assert!(invariant_extension(&x, &[int(0)]).is_err());
}

#[test]
fn multiplicity_examples() {
    for m in 0..=3 {
        assert_eq!(multiplicity_rank(&Weight::empty(), m).unwrap(), 1);
    }
    assert_eq!(multiplicity_rank(&w("b"), 2).unwrap(), 2);
    assert_eq!(multiplicity_rank(&w("bw"), 1).unwrap(), 0);
}

#[test]
fn generators_are_evaluated_by_dual_keys() {
    // φ_I for I = ((0,1], [2,3)) against ψ^a of the dual weight ○●.
    let intervals = [
        HalfOpenInterval::black(Some(int(0)), int(1)).unwrap(),
        HalfOpenInterval::white(int(2), Some(int(3))).unwrap(),
    ];
    let phi = phi_generator(&intervals).unwrap();
    for (x, y) in [(1, 2), (0, 2), (1, 3), (-1, 5)] {
        let a = [int(x), int(y)];
        let psi = psi_key_function(&w("bw").dual(), &a).unwrap();
        let expected = phi.evaluate(&a).unwrap();
        assert_eq!(crate::euler::pair(&phi, &psi).unwrap(), expected, "{x} {y}");
    }
}

#[test]
fn json_round_trip() {
    let f = m(&[(a(), 2), (d(), -1)]);
    let s = serde_json::to_string(&f).unwrap();
    let g: Morphism = serde_json::from_str(&s).unwrap();
    assert_eq!(f, g);
    assert!(s.contains(r#""steps":[[1,0],[0,1]]"#));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn oracle_on_random_pairs(n in 0usize..=3, k in 0usize..=3, l in 0usize..=3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let p1 = i.get(&enumerate_paths(&[n, k])).clone();
        let p2 = j.get(&enumerate_paths(&[k, l])).clone();
        prop_assert_eq!(compose(&basis(&p1), &basis(&p2)).unwrap(), compose_oracle(&p1, &p2).unwrap());
    }

    #[test]
    fn random_morphisms_respect_identity(seed in any::<u64>(), n in 0usize..=3, k in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_morphism(&mut rng, n, k, 5);
        prop_assert_eq!(compose(&f, &identity(k)).unwrap(), f.clone());
        prop_assert_eq!(compose(&identity(n), &f).unwrap(), f);
    }
}

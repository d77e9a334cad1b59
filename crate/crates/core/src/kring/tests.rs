use num::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::combinatorics::{w, Letter, Weight};
use crate::scalar::{binomial, int, Scalar};

fn k(terms: &[(&str, i64)]) -> KClass {
    KClass::from_terms(terms.iter().map(|&(s, c)| (w(s), int(c))))
}

fn a(s: &str) -> KClass {
    KClass::basis(w(s))
}

fn t(terms: &[(&str, &str, i64)]) -> KTensorClass {
    let mut out = KTensorClass::zero();
    for &(l, r, c) in terms {
        out.add_term(w(l), w(r), int(c));
    }
    out
}

/// All interleavings of two words, with multiplicity.
fn shuffle(l: &[Letter], r: &[Letter]) -> Vec<Vec<Letter>> {
    match (l.split_first(), r.split_first()) {
        (None, _) => vec![r.to_vec()],
        (_, None) => vec![l.to_vec()],
        (Some((x, ls)), Some((y, rs))) => {
            let mut out: Vec<Vec<Letter>> =
                shuffle(ls, r).into_iter().map(|v| [vec![*x], v].concat()).collect();
            out.extend(shuffle(l, rs).into_iter().map(|v| [vec![*y], v].concat()));
            out
        }
    }
}

#[test]
fn concatenation() {
    assert_eq!(concat_mul(&a("b"), &a("w")), a("bw"));
    assert_eq!(concat_mul(&KClass::one(), &a("bw")), a("bw"));
    assert_eq!(concat_mul(&k(&[("b", 1), ("", 1)]), &a("w")), k(&[("bw", 1), ("w", 1)]));
}

#[test]
fn known_products() {
    assert_eq!(tensor_mul(&a("b"), &a("b")), k(&[("bb", 2), ("b", 1)]));
    assert_eq!(tensor_mul(&a("b"), &a("w")), k(&[("bw", 1), ("wb", 1), ("b", 1), ("w", 1), ("", 1)]));
    assert_eq!(
        tensor_mul(&a("b"), &a("bw")),
        k(&[("bbw", 2), ("bwb", 1), ("bw", 2), ("bb", 1), ("b", 1)])
    );
}

#[test]
fn ring_axioms_on_short_words() {
    let words = Weight::all_up_to(3);
    for x in &words {
        let ax = KClass::basis(x.clone());
        assert_eq!(tensor_mul(&ax, &KClass::one()), ax);
        for y in &words {
            let ay = KClass::basis(y.clone());
            let xy = tensor_mul(&ax, &ay);
            assert_eq!(xy, tensor_mul(&ay, &ax));
            assert!(xy.degree().unwrap() <= x.len() + y.len());
        }
    }
    let short = Weight::all_up_to(2);
    for x in &short {
        for y in &short {
            for z in &short {
                let (ax, ay, az) = (KClass::basis(x.clone()), KClass::basis(y.clone()), KClass::basis(z.clone()));
                assert_eq!(tensor_mul(&tensor_mul(&ax, &ay), &az), tensor_mul(&ax, &tensor_mul(&ay, &az)));
            }
        }
    }
}

#[test]
fn top_degree_is_the_shuffle_product() {
    for x in Weight::all_up_to(3) {
        for y in Weight::all_up_to(3) {
            let top = basis_product(&x, &y).part_of_degree(x.len() + y.len());
            let expected = KClass::from_terms(
                shuffle(x.letters(), y.letters()).into_iter().map(|v| (Weight::new(v), int(1))),
            );
            assert_eq!(top, expected);
        }
    }
}

#[test]
fn special_products() {
    for n in 1..=6 {
        let pn = KClass::basis(Weight::constant(Letter::Black, n));
        let pn1 = KClass::basis(Weight::constant(Letter::Black, n + 1));
        let expected = pn1.scale(&int(n as i64 + 1)).add(&pn.scale(&int(n as i64)));
        assert_eq!(tensor_mul(&a("b"), &pn), expected);
    }
}

#[test]
fn induction() {
    assert_eq!(induce(&KTensorClass::basis(w(""), w(""))), k(&[("b", 1), ("w", 1), ("", 1)]));
    for x in Weight::all_up_to(2) {
        for y in Weight::all_up_to(2) {
            let expected = KClass::from_terms([
                (x.concat(&w("b")).concat(&y), int(1)),
                (x.concat(&w("w")).concat(&y), int(1)),
                (x.concat(&y), int(1)),
            ]);
            assert_eq!(induce(&KTensorClass::basis(x.clone(), y.clone())), expected);
        }
    }
    // C(R^(2)) = L_●● + L_●○ + L_○● + L_○○ + 2L_● + 2L_○ + 1
    let c2 = k(&[("bb", 1), ("bw", 1), ("wb", 1), ("ww", 1), ("b", 2), ("w", 2), ("", 1)]);
    assert_eq!(power_class(2), c2);
    let twice = induce(&KTensorClass::outer(&induce(&KTensorClass::basis(w(""), w(""))), &KClass::one()));
    assert_eq!(twice, c2);
}

#[test]
fn restriction() {
    assert_eq!(restrict(&KClass::one()), t(&[("", "", 1)]));
    assert_eq!(restrict(&a("b")), t(&[("b", "", 1), ("", "b", 1), ("", "", 1)]));
    assert_eq!(
        restrict(&a("bw")),
        t(&[("bw", "", 1), ("b", "w", 1), ("", "bw", 1), ("", "w", 1), ("b", "", 1)])
    );
}

#[test]
fn counit_values() {
    assert_eq!(counit(&a("b")), int(-1));
    assert_eq!(counit(&KClass::one()), int(1));
    assert_eq!(counit(&line_class()), int(-1));
}

#[test]
fn antipode_values() {
    assert_eq!(antipode(&KClass::one()), KClass::one());
    assert_eq!(antipode(&a("b")), k(&[("b", -1), ("", -2)]));
    assert_eq!(antipode(&a("bb")), k(&[("bb", 1), ("b", 3), ("", 3)]));
    assert_eq!(antipode(&a("bw")), k(&[("wb", 1), ("b", 2), ("w", 2), ("", 4)]));
}

#[test]
fn hopf_axioms() {
    for x in Weight::all_up_to(4) {
        let ax = KClass::basis(x.clone());
        let eta = KClass::constant(1).scale(&counit(&ax));
        let id = |v: &Weight| KClass::basis(v.clone());
        assert_eq!(convolve(&ax, antipode_basis, id), eta);
        assert_eq!(convolve(&ax, id, antipode_basis), eta);
        let mut left = KClass::zero();
        let mut right = KClass::zero();
        for (l, r, c) in restrict(&ax).terms() {
            left = left.add(&KClass::basis(r.clone()).scale(&(c * counit(&KClass::basis(l.clone())))));
            right = right.add(&KClass::basis(l.clone()).scale(&(c * counit(&KClass::basis(r.clone())))));
        }
        assert_eq!(left, ax);
        assert_eq!(right, ax);
        let lead = antipode_basis(&x).part_of_degree(x.len());
        assert_eq!(lead, KClass::basis(x.reversed()).scale(&crate::scalar::sign(x.len())));
    }
}

#[test]
fn primitive_elements() {
    let basis = primitives(2);
    assert_eq!(basis.len(), 2);
    let p1 = k(&[("b", 1), ("", 1)]);
    let p2 = k(&[("w", 1), ("", 1)]);
    for p in [&p1, &p2] {
        assert!(reduced_coproduct(p).is_zero());
    }
    // Both spans agree: each basis vector is a combination of p1, p2.
    for v in &basis {
        let c1 = v.coeff(&w("b"));
        let c2 = v.coeff(&w("w"));
        assert_eq!(v, &p1.scale(&c1).add(&p2.scale(&c2)));
    }
}

#[test]
fn branching_identities() {
    let words = Weight::all_up_to(2);
    for x in &words {
        for y in &words {
            let (ax, ay) = (KClass::basis(x.clone()), KClass::basis(y.clone()));
            let xy = KTensorClass::basis(x.clone(), y.clone());
            assert_eq!(restrict(&tensor_mul(&ax, &ay)), tensor_mul_pair(&restrict(&ax), &restrict(&ay)));
            for z in &words {
                let az = KClass::basis(z.clone());
                assert_eq!(inner(&induce(&xy), &az), inner_tensor(&xy, &restrict(&az)));
                let lhs = induce(&tensor_mul_pair(&restrict(&ax), &KTensorClass::basis(y.clone(), z.clone())));
                let rhs = tensor_mul(&ax, &induce(&KTensorClass::basis(y.clone(), z.clone())));
                assert_eq!(lhs, rhs);
                assert_eq!(inner(&tensor_mul(&ax, &ay), &az), inner(&ay, &tensor_mul(&dual(&ax), &az)));
            }
        }
    }
}

#[test]
fn duality_and_pairing() {
    assert_eq!(dual(&a("bw")), a("wb"));
    assert_eq!(inner(&a("bw"), &a("bw")), int(1));
    assert_eq!(inner(&tensor_mul(&a("b"), &a("b")), &KClass::one()), int(0));
    assert_eq!(inner(&a("b"), &a("w")), int(0));
}

#[test]
fn exterior_powers() {
    assert_eq!(lambda_binomial(&a("b"), 0), KClass::one());
    assert_eq!(lambda_binomial(&a("bw"), 1), a("bw"));
    for n in 0..=5 {
        assert_eq!(lambda_binomial(&a("b"), n), KClass::basis(Weight::constant(Letter::Black, n)));
    }
    assert_eq!(lambda_binomial(&a("w"), 2), a("ww"));
}

#[test]
fn adams_operations_are_trivial() {
    assert_eq!(adams(&a("b"), 2), a("b"));
    assert_eq!(adams(&a("bw"), 2), a("bw"));
    for i in 1..=3 {
        assert_eq!(adams(&KClass::one(), i), KClass::one());
    }
}

#[test]
fn schur_polynomials() {
    let p = |s: &str| schur_dimension_poly(&s.parse().unwrap());
    let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(p("1").coeffs(), &big(&[0, 1])[..]);
    assert_eq!(p("1,1").coeffs(), &big(&[0, 0, 1])[..]);
    // binom(t+1, 2) = binom(t, 2) + binom(t, 1)
    assert_eq!(p("2").coeffs(), &big(&[0, 1, 1])[..]);
    for t in 0..=6 {
        assert_eq!(p("2").eval(t), binomial(t as u64 + 1, 2));
    }
    assert_eq!(schur_apply(&"1,1".parse().unwrap(), &a("b")), a("bb"));
    assert_eq!(schur_apply(&"2".parse().unwrap(), &a("b")), k(&[("bb", 1), ("b", 1)]));
    assert_eq!(schur_apply(&Partition::empty(), &a("bw")), KClass::one());
    assert!("1,2".parse::<Partition>().is_err());
    assert_eq!(Partition::all_of(4).len(), 5);
}

#[test]
fn hilbert_values() {
    for n in 0..=6 {
        assert_eq!(hilbert_value(&KClass::one(), n), int(1));
        assert_eq!(hilbert_value(&line_class(), n), int(2 * n as i64 + 1));
        assert_eq!(hilbert_value(&a("bw"), n), Scalar::from_integer(binomial(n as u64, 2)));
    }
}

#[test]
fn lyndon() {
    assert_eq!(lyndon_weights(1), vec![w("b"), w("w")]);
    assert_eq!(lyndon_weights(2), vec![w("bw")]);
    assert_eq!(lyndon_weights(3), vec![w("bbw"), w("bww")]);
    // Necklace count (1/n) Σ_{d|n} μ(d) 2^{n/d}.
    let mobius = |mut n: usize| {
        let mut r = 1i64;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                r = -r;
            }
            p += 1;
        }
        if n > 1 {
            r = -r;
        }
        r
    };
    for n in 1..=10usize {
        let count: i64 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) * (1i64 << (n / d))).sum::<i64>() / n as i64;
        assert_eq!(lyndon_weights(n).len() as i64, count, "n = {n}");
    }
}

#[test]
fn json_round_trip() {
    let x = k(&[("bw", 2), ("", -1)]);
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, r#"{"terms":[{"word":"","coeff":"-1/1"},{"word":"bw","coeff":"2/1"}]}"#);
    assert_eq!(serde_json::from_str::<KClass>(&s).unwrap(), x);
    let r = restrict(&a("b"));
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<KTensorClass>(&s).unwrap(), r);
    assert_eq!(KClass::parse_terms("bw:2, :-1").unwrap(), x);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn binomials_are_integral(seed in any::<u64>(), n in 0usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_class(&mut rng, 2);
        prop_assert!(lambda_binomial(&x, n).is_integral());
    }

    #[test]
    fn products_are_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_class(&mut rng, 3), random_class(&mut rng, 3), random_class(&mut rng, 3));
        prop_assert_eq!(tensor_mul(&tensor_mul(&x, &y), &z), tensor_mul(&x, &tensor_mul(&y, &z)));
    }
}

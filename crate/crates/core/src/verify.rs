//! Verification suites, one per acceptance criterion. Each suite returns a
//! report of named checks; randomized checks draw from a seeded generator.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num::{BigUint, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::category::{
    compose, compose_basis, compose_basis_by_epsilon, compose_oracle, eigenvalue, identity, invariant_extension,
    multiplicity_rank, projector, random_morphism, trace, Morphism,
};
use crate::combinatorics::{delannoy_number, enumerate_paths, Letter, Path, Weight};
use crate::euler::{
    all_cells, cell_count, integrate, pair, phi_generator, psi_key_function, pushforward_coordinate, random_function,
    refine, Breakpoints, CellSignature, HalfOpenInterval, SchwartzFn,
};
use crate::kring::{
    adams, antipode, antipode_basis, basis_product, convolve, counit, hilbert_value, hook_content, induce,
    inner, inner_tensor, lambda_binomial, power_class, primitives, random_class, reduced_coproduct,
    restrict, schur_apply, schur_dimension_poly, tensor_mul, tensor_mul_pair, KClass, KTensorClass, Partition,
};
use crate::scalar::{binomial, int, sign, Scalar};

/// Suite identifiers, in acceptance order.
pub const SUITES: [&str; 12] = [
    "delannoy-counts",
    "oracle-equivalence",
    "category-axioms",
    "projectors",
    "multiplicities",
    "euler-calculus",
    "ring",
    "hopf",
    "branching",
    "lambda-adams",
    "schur",
    "cross-module",
];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        VerificationReport { suite: suite.to_string(), checks, passed }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

type Outcome = std::result::Result<String, String>;

fn check(name: &str, f: impl FnOnce() -> Outcome) -> Check {
    let (passed, detail) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            (false, format!("panicked: {msg}"))
        }
    };
    Check { name: name.to_string(), passed, detail }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn run_suite(name: &str, seed: u64) -> Option<VerificationReport> {
    let checks = match name {
        "delannoy-counts" => delannoy_counts(),
        "oracle-equivalence" => oracle_equivalence(seed),
        "category-axioms" => category_axioms(seed),
        "projectors" => projectors(),
        "multiplicities" => multiplicities(),
        "euler-calculus" => euler_calculus(seed),
        "ring" => ring(seed),
        "hopf" => hopf(),
        "branching" => branching(seed),
        "lambda-adams" => lambda_adams(seed),
        "schur" => schur(),
        "cross-module" => cross_module(seed),
        _ => return None,
    };
    Some(VerificationReport::new(name, checks))
}

pub fn run_all(seed: u64) -> Vec<VerificationReport> {
    SUITES.iter().map(|s| run_suite(s, seed).expect("known suite")).collect()
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn basis(p: &Path) -> Morphism {
    Morphism::basis(p).expect("planar path")
}

fn a(s: &str) -> KClass {
    KClass::basis(s.parse().expect("weight literal"))
}

fn k(terms: &[(&str, i64)]) -> KClass {
    KClass::from_terms(terms.iter().map(|&(s, c)| (s.parse().expect("weight literal"), int(c))))
}

// 1
fn delannoy_counts() -> Vec<Check> {
    vec![
        check("enumeration matches recurrence for n,m <= 6", || {
            for n in 0..=6 {
                for m in 0..=6 {
                    let count = enumerate_paths(&[n, m]).len();
                    let d = delannoy_number(n, m);
                    ensure(BigUint::from(count) == d, || format!("|Γ({n},{m})| = {count} but D = {d}"))?;
                }
            }
            Ok("49 pairs".into())
        }),
        check("D(2) = 13", || {
            let d = delannoy_number(2, 2);
            ensure(d == BigUint::from(13u8), || format!("D(2) = {d}"))?;
            Ok("13".into())
        }),
        check("D(n) = sum binom(n,k)^2 2^k for n <= 8", || {
            for n in 0..=8u64 {
                let s: num::BigInt =
                    (0..=n).map(|k| binomial(n, k) * binomial(n, k) * num::BigInt::from(1u64 << k)).sum();
                let d = delannoy_number(n as usize, n as usize);
                ensure(s == d.into(), || format!("n = {n}: sum = {s}"))?;
            }
            Ok("n = 0..8".into())
        }),
    ]
}

// 2
fn oracle_equivalence(seed: u64) -> Vec<Check> {
    vec![
        check("exhaustive n,m,l <= 2", || {
            let mut pairs = 0;
            for n in 0..=2 {
                for m in 0..=2 {
                    for l in 0..=2 {
                        for p1 in enumerate_paths(&[n, m]) {
                            for p2 in enumerate_paths(&[m, l]) {
                                let c = compose(&basis(&p1), &basis(&p2)).map_err(err)?;
                                let o = compose_oracle(&p1, &p2).map_err(err)?;
                                ensure(c == o, || format!("{p1} ∘ {p2}: rule {c} vs oracle {o}"))?;
                                let e = compose_basis_by_epsilon(&p1, &p2).map_err(err)?;
                                ensure(compose_basis(&p1, &p2).map_err(err)? == e, || format!("lift routes differ at {p1} ∘ {p2}"))?;
                                pairs += 1;
                            }
                        }
                    }
                }
            }
            Ok(format!("{pairs} basis pairs"))
        }),
        check("200 random pairs with n,m,l <= 3", || {
            let mut rng = rng_for(seed, 2);
            for _ in 0..200 {
                let (n, m, l) = (rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(0..=3));
                let p1 = enumerate_paths(&[n, m]).choose(&mut rng).cloned().expect("nonempty");
                let p2 = enumerate_paths(&[m, l]).choose(&mut rng).cloned().expect("nonempty");
                let c = compose(&basis(&p1), &basis(&p2)).map_err(err)?;
                let o = compose_oracle(&p1, &p2).map_err(err)?;
                ensure(c == o, || format!("{p1} ∘ {p2}: rule {c} vs oracle {o}"))?;
            }
            Ok("200 pairs".into())
        }),
    ]
}

// 3
fn category_axioms(seed: u64) -> Vec<Check> {
    vec![
        check("associativity on basis paths, arities <= 2", || {
            let mut triples = 0;
            for n in 0..=2 {
                for m in 0..=2 {
                    for l in 0..=2 {
                        for r in 0..=2 {
                            for p in enumerate_paths(&[n, m]) {
                                for q in enumerate_paths(&[m, l]) {
                                    let pq = compose(&basis(&p), &basis(&q)).map_err(err)?;
                                    for s in enumerate_paths(&[l, r]) {
                                        let qs = compose(&basis(&q), &basis(&s)).map_err(err)?;
                                        let left = compose(&pq, &basis(&s)).map_err(err)?;
                                        let right = compose(&basis(&p), &qs).map_err(err)?;
                                        ensure(left == right, || format!("({p}∘{q})∘{s} ≠ {p}∘({q}∘{s})"))?;
                                        triples += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(format!("{triples} triples"))
        }),
        check("diagonal is a two-sided identity, arities <= 3", || {
            for n in 0..=3 {
                for m in 0..=3 {
                    for p in enumerate_paths(&[n, m]) {
                        let f = basis(&p);
                        ensure(compose(&identity(n), &f).map_err(err)? == f, || format!("left identity fails at {p}"))?;
                        ensure(compose(&f, &identity(m)).map_err(err)? == f, || format!("right identity fails at {p}"))?;
                    }
                }
            }
            let mut rng = rng_for(seed, 3);
            for _ in 0..50 {
                let (n, m) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
                let f = random_morphism(&mut rng, n, m, 6);
                ensure(compose(&f, &identity(m)).map_err(err)? == f, || format!("identity fails on {f}"))?;
            }
            Ok("basis paths and 50 random morphisms".into())
        }),
    ]
}

// 4
fn projectors() -> Vec<Check> {
    let calculus = |n: usize| {
        move || -> Outcome {
            let ws = Weight::all_of_length(n);
            let ps: Vec<Morphism> = ws.iter().map(projector).collect();
            for (i, p) in ps.iter().enumerate() {
                ensure(compose(p, p).map_err(err)? == *p, || format!("π_{} is not idempotent", ws[i]))?;
                let t = trace(p).map_err(err)?;
                ensure(t == sign(n), || format!("trace π_{} = {t}", ws[i]))?;
                for (j, q) in ps.iter().enumerate() {
                    if i != j {
                        ensure(compose(p, q).map_err(err)?.is_zero(), || format!("π_{} π_{} ≠ 0", ws[i], ws[j]))?;
                    }
                }
            }
            Ok(format!("{} weights", ws.len()))
        }
    };
    let mut checks: Vec<Check> =
        (0..=4).map(|n| check(&format!("idempotent, orthogonal, trace (-1)^n at n = {n}"), calculus(n))).collect();
    checks.push(check("eigenvalue scalars for n <= 3", || {
        let mut count = 0;
        for n in 0..=3 {
            for l in Weight::all_of_length(n) {
                let pl = projector(&l);
                for p in enumerate_paths(&[n, n]) {
                    let sandwich = compose(&compose(&pl, &basis(&p)).map_err(err)?, &pl).map_err(err)?;
                    let expected = match eigenvalue(&l, &p) {
                        Some(e) => pl.scale(&int(e)),
                        None => Morphism::zero(n, n),
                    };
                    ensure(sandwich == expected, || format!("π_{l} [{p}] π_{l} = {sandwich}"))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} (λ, p) pairs"))
    }));
    checks
}

// 5
fn multiplicities() -> Vec<Check> {
    let ranks = |n: usize| -> std::result::Result<Vec<(Weight, usize)>, String> {
        Weight::all_up_to(n)
            .into_iter()
            .map(|l| multiplicity_rank(&l, n).map(|r| (l, r)).map_err(err))
            .collect()
    };
    vec![
        check("rank e_λ = binom(m, ℓ(λ)) for m <= 3", || {
            for m in 0..=3 {
                for (l, r) in ranks(m)? {
                    let expected = binomial(m as u64, l.len() as u64).to_usize().expect("small");
                    ensure(r == expected, || format!("rank(λ={l}, m={m}) = {r}, expected {expected}"))?;
                }
            }
            Ok("all λ with ℓ(λ) <= m".into())
        }),
        check("length of C(R^(n)) is 3^n for n <= 3", || {
            for n in 0..=3 {
                let total: usize = ranks(n)?.iter().map(|(_, r)| r).sum();
                ensure(total == 3usize.pow(n as u32), || format!("n = {n}: length {total}"))?;
                for (l, r) in ranks(n)? {
                    let c = power_class(n).coeff(&l);
                    ensure(c == int(r as i64), || format!("ring multiplicity of {l} in C(R^({n})) is {c}, rank {r}"))?;
                }
            }
            Ok("n = 0..3".into())
        }),
        check("sum of squared ranks is D(n) for n <= 3", || {
            for n in 0..=3 {
                let s: usize = ranks(n)?.iter().map(|(_, r)| r * r).sum();
                ensure(BigUint::from(s) == delannoy_number(n, n), || format!("n = {n}: {s}"))?;
            }
            Ok("n = 0..3".into())
        }),
    ]
}

fn bps(v: &[i64]) -> Breakpoints {
    Breakpoints::new(v.iter().map(|&x| int(x)).collect()).expect("increasing")
}

fn all_orders(f: &SchwartzFn) -> Vec<Scalar> {
    if f.arity() == 0 {
        return vec![integrate(f)];
    }
    (0..f.arity())
        .flat_map(|i| all_orders(&pushforward_coordinate(f, i).expect("index in range")))
        .collect()
}

/// `f(x) g(y)` for `f` supported below `cut` and `g` above it.
fn split_product(f: &SchwartzFn, g: &SchwartzFn, cut: &Scalar) -> SchwartzFn {
    let b = f.breakpoints().union(g.breakpoints()).union(&Breakpoints::new(vec![cut.clone()]).expect("one point"));
    let (rf, rg) = (refine(f, &b).expect("superset"), refine(g, &b).expect("superset"));
    let mut cells = Vec::new();
    for (s, c) in rf.cells() {
        for (t, d) in rg.cells() {
            let slots = [s.slots(), t.slots()].concat();
            cells.push((CellSignature::new(slots, b.len()).expect("separated supports"), c * d));
        }
    }
    SchwartzFn::from_cells(f.arity() + g.arity(), b, cells).expect("valid cells")
}

/// A random function of arity `n` supported on `(lo, hi)`.
fn random_supported<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> SchwartzFn {
    let mut pts: Vec<i64> = (lo..=hi).collect();
    pts.shuffle(rng);
    let mut chosen: Vec<i64> = pts.into_iter().take(rng.gen_range(2..=3)).collect();
    chosen.sort();
    let b = bps(&chosen);
    let top = 2 * b.len();
    let cells: Vec<(CellSignature, Scalar)> = all_cells(n, b.len())
        .into_iter()
        .filter(|c| c.slots().iter().all(|&s| s > 0 && s < top))
        .filter_map(|c| rng.gen_bool(0.5).then(|| (c, int(rng.gen_range(-3..=3)))))
        .collect();
    SchwartzFn::from_cells(n, b, cells).expect("valid cells")
}

// 6
fn euler_calculus(seed: u64) -> Vec<Check> {
    vec![
        check("point 1, open interval -1, half-open 0", || {
            let delta = SchwartzFn::indicator(bps(&[0]), CellSignature::new(vec![1], 1).map_err(err)?);
            let open = SchwartzFn::indicator(bps(&[0, 1]), CellSignature::new(vec![2], 2).map_err(err)?);
            let half = phi_generator(&[HalfOpenInterval::black(Some(int(0)), int(1)).map_err(err)?]).map_err(err)?;
            let got = [integrate(&delta), integrate(&open), integrate(&half)];
            ensure(got == [int(1), int(-1), int(0)], || format!("{got:?}"))?;
            Ok("1, -1, 0".into())
        }),
        check("pushforward order independence on 100 random functions", || {
            let mut rng = rng_for(seed, 6);
            for _ in 0..100 {
                let n = rng.gen_range(0..=3);
                let f = random_function(&mut rng, n, 3);
                let total = integrate(&f);
                ensure(all_orders(&f).iter().all(|v| *v == total), || format!("orders disagree for {f}"))?;
            }
            Ok("100 functions".into())
        }),
        check("additivity and product multiplicativity", || {
            let mut rng = rng_for(seed, 61);
            for _ in 0..100 {
                let n = rng.gen_range(0..=3);
                let (f, g) = (random_function(&mut rng, n, 3), random_function(&mut rng, n, 3));
                let sum = f.add(&g).map_err(err)?;
                ensure(integrate(&sum) == integrate(&f) + integrate(&g), || format!("additivity fails for {f}, {g}"))?;
                let (p, q) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
                let lower = random_supported(&mut rng, p, -9, -1);
                let upper = random_supported(&mut rng, q, 1, 9);
                let prod = split_product(&lower, &upper, &int(0));
                ensure(integrate(&prod) == integrate(&lower) * integrate(&upper), || {
                    format!("multiplicativity fails for {lower} × {upper}")
                })?;
            }
            Ok("100 samples".into())
        }),
    ]
}

// 7
fn ring(seed: u64) -> Vec<Check> {
    vec![
        check("known products", || {
            let bb = tensor_mul(&a("b"), &a("b"));
            ensure(bb == k(&[("bb", 2), ("b", 1)]), || format!("a_● a_● = {bb}"))?;
            let bw = tensor_mul(&a("b"), &a("w"));
            ensure(bw == k(&[("bw", 1), ("wb", 1), ("b", 1), ("w", 1), ("", 1)]), || format!("a_● a_○ = {bw}"))?;
            let x = tensor_mul(&a("b"), &a("bw"));
            ensure(x == k(&[("bbw", 2), ("bwb", 1), ("bw", 2), ("bb", 1), ("b", 1)]), || format!("a_● a_●○ = {x}"))?;
            Ok("3 products".into())
        }),
        check("commutativity, associativity, unit at degree <= 3", || {
            let words = Weight::all_up_to(3);
            for x in &words {
                let ax = KClass::basis(x.clone());
                ensure(tensor_mul(&ax, &KClass::one()) == ax, || format!("unit fails at {x}"))?;
                for y in &words {
                    let ay = KClass::basis(y.clone());
                    ensure(tensor_mul(&ax, &ay) == tensor_mul(&ay, &ax), || format!("{x}·{y} not commutative"))?;
                }
            }
            for x in &words {
                for y in &words {
                    for z in &words {
                        if x.len() + y.len() + z.len() > 5 {
                            continue;
                        }
                        let (ax, ay, az) = (KClass::basis(x.clone()), KClass::basis(y.clone()), KClass::basis(z.clone()));
                        ensure(tensor_mul(&tensor_mul(&ax, &ay), &az) == tensor_mul(&ax, &tensor_mul(&ay, &az)), || {
                            format!("({x}·{y})·{z} not associative")
                        })?;
                    }
                }
            }
            let mut rng = rng_for(seed, 7);
            for _ in 0..200 {
                let (x, y, z) = (random_class(&mut rng, 3), random_class(&mut rng, 3), random_class(&mut rng, 3));
                ensure(tensor_mul(&tensor_mul(&x, &y), &z) == tensor_mul(&x, &tensor_mul(&y, &z)), || {
                    format!("({x})·({y})·({z}) not associative")
                })?;
            }
            Ok("basis words and 200 random triples".into())
        }),
        check("a_π(1) a_π(n) = (n+1) a_π(n+1) + n a_π(n) for n <= 6", || {
            for n in 1..=6 {
                let pn = KClass::basis(Weight::constant(Letter::Black, n));
                let pn1 = KClass::basis(Weight::constant(Letter::Black, n + 1));
                let expected = pn1.scale(&int(n as i64 + 1)).add(&pn.scale(&int(n as i64)));
                let got = tensor_mul(&a("b"), &pn);
                ensure(got == expected, || format!("n = {n}: {got}"))?;
            }
            Ok("n = 1..6".into())
        }),
        check("[C(R^(n))][C(R^(m))] = sum over Γ(n,m) of [C(R^(ℓ(p)))] for n,m <= 4", || {
            for n in 0..=4 {
                for m in n..=4 {
                    let lhs = tensor_mul(&power_class(n), &power_class(m));
                    let mut rhs = KClass::zero();
                    for p in enumerate_paths(&[n, m]) {
                        rhs = rhs.add(&power_class(p.len()));
                    }
                    ensure(lhs == rhs, || format!("n = {n}, m = {m}"))?;
                }
            }
            Ok("n, m = 0..4".into())
        }),
    ]
}

/// Interleavings of two words with multiplicity.
fn shuffles(l: &[Letter], r: &[Letter]) -> Vec<Vec<Letter>> {
    match (l.split_first(), r.split_first()) {
        (None, _) => vec![r.to_vec()],
        (_, None) => vec![l.to_vec()],
        (Some((x, ls)), Some((y, rs))) => {
            let mut out: Vec<Vec<Letter>> = shuffles(ls, r).into_iter().map(|v| [vec![*x], v].concat()).collect();
            out.extend(shuffles(l, rs).into_iter().map(|v| [vec![*y], v].concat()));
            out
        }
    }
}

// 8
fn hopf() -> Vec<Check> {
    vec![
        check("counit axioms at degree <= 4", || {
            for x in Weight::all_up_to(4) {
                let ax = KClass::basis(x.clone());
                let (mut left, mut right) = (KClass::zero(), KClass::zero());
                for (l, r, c) in restrict(&ax).terms() {
                    left = left.add(&KClass::basis(r.clone()).scale(&(c * counit(&KClass::basis(l.clone())))));
                    right = right.add(&KClass::basis(l.clone()).scale(&(c * counit(&KClass::basis(r.clone())))));
                }
                ensure(left == ax && right == ax, || format!("counit fails at {x}"))?;
            }
            Ok("31 words".into())
        }),
        check("antipode axioms at degree <= 4", || {
            for x in Weight::all_up_to(4) {
                let ax = KClass::basis(x.clone());
                let eta = KClass::one().scale(&counit(&ax));
                let id = |v: &Weight| KClass::basis(v.clone());
                ensure(convolve(&ax, antipode_basis, id) == eta, || format!("S*id fails at {x}"))?;
                ensure(convolve(&ax, id, antipode_basis) == eta, || format!("id*S fails at {x}"))?;
            }
            Ok("31 words".into())
        }),
        check("S(a_●), S(a_●●), S(a_●○)", || {
            let cases = [
                ("b", k(&[("b", -1), ("", -2)])),
                ("bb", k(&[("bb", 1), ("b", 3), ("", 3)])),
                ("bw", k(&[("wb", 1), ("b", 2), ("w", 2), ("", 4)])),
            ];
            for (w, expected) in cases {
                let got = antipode(&a(w));
                ensure(got == expected, || format!("S(a_{w}) = {got}"))?;
            }
            Ok("3 values".into())
        }),
        check("primitives in K_{<=2} are span{a_●+1, a_○+1}", || {
            let basis = primitives(2);
            ensure(basis.len() == 2, || format!("dimension {}", basis.len()))?;
            let (p1, p2) = (k(&[("b", 1), ("", 1)]), k(&[("w", 1), ("", 1)]));
            ensure(reduced_coproduct(&p1).is_zero() && reduced_coproduct(&p2).is_zero(), || "generators not primitive".into())?;
            for v in &basis {
                let combo = p1.scale(&v.coeff(&"b".parse().expect("b"))).add(&p2.scale(&v.coeff(&"w".parse().expect("w"))));
                ensure(*v == combo, || format!("{v} outside the span"))?;
            }
            Ok("dimension 2".into())
        }),
        check("associated graded is the shuffle product at degree <= 3", || {
            for x in Weight::all_up_to(3) {
                for y in Weight::all_up_to(3) {
                    let top = basis_product(&x, &y).part_of_degree(x.len() + y.len());
                    let sh = KClass::from_terms(shuffles(x.letters(), y.letters()).into_iter().map(|v| (Weight::new(v), int(1))));
                    ensure(top == sh, || format!("top part of {x}·{y} is {top}"))?;
                }
            }
            Ok("225 pairs".into())
        }),
        check("leading term of S(a_λ) is (-1)^ℓ a_reverse(λ) at degree <= 4", || {
            for x in Weight::all_up_to(4) {
                let lead = antipode_basis(&x).part_of_degree(x.len());
                let expected = KClass::basis(x.reversed()).scale(&sign(x.len()));
                ensure(lead == expected, || format!("{x}: {lead}"))?;
            }
            Ok("31 words".into())
        }),
    ]
}

fn ind12(x: &Weight, t: &KTensorClass) -> KTensorClass {
    let mut out = KTensorClass::zero();
    for (l, r, c) in t.terms() {
        let i = induce(&KTensorClass::basis(x.clone(), l.clone()));
        out = out.add(&KTensorClass::outer(&i, &KClass::basis(r.clone())).scale(c));
    }
    out
}

fn ind23(t: &KTensorClass, y: &Weight) -> KTensorClass {
    let mut out = KTensorClass::zero();
    for (l, r, c) in t.terms() {
        let i = induce(&KTensorClass::basis(r.clone(), y.clone()));
        out = out.add(&KTensorClass::outer(&KClass::basis(l.clone()), &i).scale(c));
    }
    out
}

// 9
fn branching(seed: u64) -> Vec<Check> {
    let words = Weight::all_up_to(2);
    vec![
        check("Frobenius reciprocity at length <= 2", || {
            for x in &words {
                for y in &words {
                    let xy = KTensorClass::basis(x.clone(), y.clone());
                    for z in &words {
                        let az = KClass::basis(z.clone());
                        ensure(inner(&induce(&xy), &az) == inner_tensor(&xy, &restrict(&az)), || format!("{x}, {y}, {z}"))?;
                    }
                }
            }
            Ok("343 triples".into())
        }),
        check("projection formula at length <= 2", || {
            for x in &words {
                for y in &words {
                    for z in &words {
                        let yz = KTensorClass::basis(y.clone(), z.clone());
                        let ax = KClass::basis(x.clone());
                        let lhs = induce(&tensor_mul_pair(&restrict(&ax), &yz));
                        let rhs = tensor_mul(&ax, &induce(&yz));
                        ensure(lhs == rhs, || format!("{x}, {y}, {z}"))?;
                    }
                }
            }
            Ok("343 triples".into())
        }),
        check("Mackey formula at length <= 2", || {
            for x in &words {
                for y in &words {
                    let xy = KTensorClass::basis(x.clone(), y.clone());
                    let lhs = restrict(&induce(&xy));
                    let rhs = xy
                        .add(&ind12(x, &restrict(&KClass::basis(y.clone()))))
                        .add(&ind23(&restrict(&KClass::basis(x.clone())), y));
                    ensure(lhs == rhs, || format!("{x}, {y}"))?;
                }
            }
            Ok("49 pairs".into())
        }),
        check("res is a ring homomorphism at degree <= 2", || {
            for x in &words {
                for y in &words {
                    let (ax, ay) = (KClass::basis(x.clone()), KClass::basis(y.clone()));
                    ensure(restrict(&tensor_mul(&ax, &ay)) == tensor_mul_pair(&restrict(&ax), &restrict(&ay)), || {
                        format!("{x}, {y}")
                    })?;
                }
            }
            Ok("49 pairs".into())
        }),
        check("Hilbert series of an induction is (1+t) H1 H2 for N <= 6", || {
            let mut rng = rng_for(seed, 9);
            let mut pairs: Vec<(KClass, KClass)> = Vec::new();
            for x in &words {
                for y in &words {
                    pairs.push((KClass::basis(x.clone()), KClass::basis(y.clone())));
                }
            }
            for _ in 0..20 {
                pairs.push((random_class(&mut rng, 2), random_class(&mut rng, 2)));
            }
            for (x, y) in &pairs {
                let v = induce(&KTensorClass::outer(x, y));
                for n in 0..=6usize {
                    let mut expected: Scalar = (0..=n).map(|r| hilbert_value(x, r) * hilbert_value(y, n - r)).sum();
                    if n > 0 {
                        expected += (0..n).map(|r| hilbert_value(x, r) * hilbert_value(y, n - 1 - r)).sum::<Scalar>();
                    }
                    ensure(hilbert_value(&v, n) == expected, || format!("x = {x}, y = {y}, N = {n}"))?;
                }
            }
            Ok(format!("{} pairs", pairs.len()))
        }),
    ]
}

// 10
fn lambda_adams(seed: u64) -> Vec<Check> {
    vec![
        check("λ^n(a_●) = a_π(n) for n <= 5", || {
            for n in 0..=5 {
                let got = lambda_binomial(&a("b"), n);
                ensure(got == KClass::basis(Weight::constant(Letter::Black, n)), || format!("n = {n}: {got}"))?;
            }
            Ok("n = 0..5".into())
        }),
        check("binom(x, n) integral for 20 random x of degree <= 2, n <= 4", || {
            let mut rng = rng_for(seed, 10);
            for _ in 0..20 {
                let x = random_class(&mut rng, 2);
                for n in 0..=4 {
                    ensure(lambda_binomial(&x, n).is_integral(), || format!("binom({x}, {n})"))?;
                }
            }
            Ok("20 classes".into())
        }),
        check("ψ^i(a_λ) = a_λ for i <= 4, ℓ(λ) <= 3", || {
            for l in Weight::all_up_to(3) {
                let x = KClass::basis(l.clone());
                for i in 1..=4 {
                    let got = adams(&x, i);
                    ensure(got == x, || format!("ψ^{i}(a_{l}) = {got}"))?;
                }
            }
            Ok("15 weights".into())
        }),
    ]
}

// 11
fn schur() -> Vec<Check> {
    vec![
        check("p_λ integer valued on 0..10 with c(λ,i) >= 0 for |λ| <= 5", || {
            for n in 0..=5 {
                for l in Partition::all_of(n) {
                    let p = schur_dimension_poly(&l);
                    ensure(p.is_nonnegative(), || format!("c({l}, i) has a negative entry"))?;
                    for t in 0..=10 {
                        let h = hook_content(&l, t);
                        ensure(h.is_integer() && h.to_integer() == p.eval(t), || format!("p_{l}({t})"))?;
                    }
                }
            }
            Ok("|λ| <= 5".into())
        }),
        check("s_(1,1)(a_●) = a_●● and s_(2)(a_●) = a_●● + a_●", || {
            let ext = schur_apply(&"1,1".parse().map_err(err)?, &a("b"));
            ensure(ext == a("bb"), || format!("s_(1,1)(a_●) = {ext}"))?;
            let sym = schur_apply(&"2".parse().map_err(err)?, &a("b"));
            ensure(sym == k(&[("bb", 1), ("b", 1)]), || format!("s_(2)(a_●) = {sym}"))?;
            Ok("2 values".into())
        }),
        check("δ(s_λ(a_●)) = p_λ(-1) for |λ| <= 4", || {
            for n in 0..=4 {
                for l in Partition::all_of(n) {
                    let lhs = counit(&schur_apply(&l, &a("b")));
                    let rhs = hook_content(&l, -1);
                    ensure(lhs == rhs, || format!("λ = {l}: {lhs} vs {rhs}"))?;
                }
            }
            Ok("|λ| <= 4".into())
        }),
    ]
}

/// Intervals of type `λ` and a point `a`, biased so that `a ∈ I` often.
fn random_configuration<R: Rng>(rng: &mut R, n: usize) -> (Weight, Vec<HalfOpenInterval>, Vec<Scalar>) {
    loop {
        let lambda = Weight::new((0..n).map(|_| if rng.gen_bool(0.5) { Letter::Black } else { Letter::White }).collect());
        let mut ends: Vec<i64> = (0..2 * n).map(|_| rng.gen_range(-20..=20)).collect();
        ends.sort();
        ends.dedup();
        if ends.len() != 2 * n {
            continue;
        }
        let intervals: Vec<HalfOpenInterval> = lambda
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let (lo, hi) = (int(ends[2 * i]), int(ends[2 * i + 1]));
                let unbounded = (i == 0 && l == Letter::Black || i + 1 == n && l == Letter::White) && rng.gen_bool(0.3);
                let open = if unbounded { None } else { Some(if l == Letter::Black { lo.clone() } else { hi.clone() }) };
                let closed = if l == Letter::Black { hi } else { lo };
                HalfOpenInterval::new(l, closed, open).expect("well-formed")
            })
            .collect();
        let mut pts: Vec<Scalar> = (0..n)
            .map(|i| match rng.gen_range(0..4) {
                0 => int(ends[2 * i]),
                1 => int(ends[2 * i + 1]),
                2 => Scalar::new((2 * ends[2 * i] + 1).into(), 2.into()),
                _ => Scalar::new(rng.gen_range(-44i64..=44).into(), 2.into()),
            })
            .collect();
        pts.sort();
        pts.dedup();
        if pts.len() == n {
            return (lambda, intervals, pts);
        }
    }
}

// 12
fn cross_module(seed: u64) -> Vec<Check> {
    vec![
        check("cell_count(n,m) = h([C(R^(n))], m) for n,m <= 4", || {
            for n in 0..=4 {
                let c = power_class(n);
                for m in 0..=4 {
                    let cells = Scalar::from_integer(cell_count(n, m).into());
                    let h = hilbert_value(&c, m);
                    ensure(cells == h, || format!("n = {n}, m = {m}: {cells} vs {h}"))?;
                }
            }
            Ok("25 pairs".into())
        }),
        check("invariant extension of ψ^a_λ is π_λ for ℓ(λ) <= 3", || {
            for n in 0..=3 {
                let a: Vec<Scalar> = (1..=n as i64).map(|v| int(3 * v - 5)).collect();
                for l in Weight::all_of_length(n) {
                    let psi = psi_key_function(&l, &a).map_err(err)?;
                    let ext = invariant_extension(&psi, &a).map_err(err)?;
                    ensure(ext == projector(&l), || format!("λ = {l}: {ext}"))?;
                }
            }
            Ok("15 weights".into())
        }),
        check("⟨φ_I, ψ^a_λ∨⟩ = φ_I(a) on 50 random configurations", || {
            let mut rng = rng_for(seed, 12);
            let mut hits = 0;
            for _ in 0..50 {
                let n = rng.gen_range(0..=3);
                let (lambda, intervals, a) = random_configuration(&mut rng, n);
                let phi = phi_generator(&intervals).map_err(err)?;
                let psi = psi_key_function(&lambda.dual(), &a).map_err(err)?;
                let lhs = pair(&phi, &psi).map_err(err)?;
                let rhs = phi.evaluate(&a).map_err(err)?;
                ensure(lhs == rhs, || format!("λ = {lambda}, a = {a:?}: {lhs} vs {rhs}"))?;
                hits += (!rhs.is_zero()) as usize;
            }
            Ok(format!("50 configurations, {hits} with a in I"))
        }),
    ]
}

//! Root counts of random polynomials assembled from known factors.

use jordan_strata::certify::{count_roots, rat, sturm_sign, RationalPoly, Sign};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A polynomial together with its distinct real roots.
struct Built {
    poly: RationalPoly,
    roots: Vec<BigRational>,
}

fn linear(r: &BigRational) -> RationalPoly {
    RationalPoly::new(vec![-r.clone(), rat(1, 1)])
}

/// `(x - c)^2 + s` with `s > 0`: no real roots.
fn positive_quadratic(c: &BigRational, s: &BigRational) -> RationalPoly {
    RationalPoly::new(vec![c * c + s, -(c * rat(2, 1)), rat(1, 1)])
}

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> BigRational {
    rat(rng.gen_range(lo * den..=hi * den), den)
}

fn build(rng: &mut ChaCha8Rng) -> Built {
    let mut poly = RationalPoly::constant(rat(rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=5)));
    let mut roots: Vec<BigRational> = Vec::new();
    let mut degree = 0;
    let target = rng.gen_range(1..=10);
    while degree < target {
        let room = target - degree;
        if room >= 2 && rng.gen_bool(0.3) {
            let c = random_rational(rng, -3, 3, 7);
            let s = rat(rng.gen_range(1..=20), rng.gen_range(1..=40));
            poly = &poly * &positive_quadratic(&c, &s);
            degree += 2;
        } else {
            // repeated roots are drawn on purpose; the count is of distinct roots
            let r = if !roots.is_empty() && rng.gen_bool(0.2) {
                roots[rng.gen_range(0..roots.len())].clone()
            } else {
                random_rational(rng, -4, 4, 12)
            };
            poly = &poly * &linear(&r);
            if !roots.contains(&r) {
                roots.push(r);
            }
            degree += 1;
        }
    }
    Built { poly, roots }
}

#[test]
fn counts_match_constructed_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for case in 0..100 {
        let b = build(&mut rng);
        assert!(b.poly.degree().unwrap() <= 10);
        for _ in 0..5 {
            let u = random_rational(&mut rng, -5, 5, 9);
            let v = random_rational(&mut rng, -5, 5, 9);
            if u == v {
                continue;
            }
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            let expected = b.roots.iter().filter(|r| **r > lo && **r < hi).count();
            assert_eq!(count_roots(&b.poly, &lo, &hi), expected, "case {case}: {} on ({lo}, {hi})", b.poly);
        }
    }
}

#[test]
fn sign_certificates_follow_root_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut certified = 0;
    for _ in 0..100 {
        let b = build(&mut rng);
        let lo = random_rational(&mut rng, -5, 4, 9);
        let hi = &lo + rat(rng.gen_range(1..=18), 9);
        let inside = b.roots.iter().any(|r| *r > lo && *r < hi);
        let mid = (&lo + &hi) * rat(1, 2);
        let at_mid = b.poly.eval(&mid);
        let claimed = if at_mid > rat(0, 1) { Sign::Positive } else { Sign::Negative };
        let result = sturm_sign(&b.poly, &lo, &hi, claimed);
        assert_eq!(result.is_ok(), !inside && at_mid != rat(0, 1), "{} on ({lo}, {hi})", b.poly);
        if result.is_ok() {
            certified += 1;
            let wrong = if claimed == Sign::Positive { Sign::Negative } else { Sign::Positive };
            assert!(sturm_sign(&b.poly, &lo, &hi, wrong).is_err());
        }
    }
    assert!(certified > 10);
}

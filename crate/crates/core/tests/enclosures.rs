//! Exact-arithmetic checks of the truncated-series enclosures and of the two
//! lemma polynomials, against long independent Taylor sums.
//!
//! Every sample is `x = a / 2^20`, so all reference sums share one
//! denominator and the comparisons stay in integer arithmetic.

use jordan_strata::certify::{maclaurin, rat, Direction, Lemma, RationalPoly, Trig};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Degree of the reference sums. For `|y| <= 4` the first dropped term is
/// below `4^82 / 82! < 1e-73`.
const N: u32 = 81;
const DENOM_BITS: u32 = 20;

fn b() -> BigInt {
    BigInt::one() << DENOM_BITS
}

/// `b^N N!`, the denominator of every reference sum.
fn d() -> BigInt {
    b().pow(N) * (1..=N).map(BigInt::from).product::<BigInt>()
}

/// `b^(N+1) (N+1)!`, the denominator of every tail bound.
fn e() -> BigInt {
    d() * b() * BigInt::from(N + 1)
}

/// Reference sum of `sin y` or `cos y` for `y = a / b` through degree `N`,
/// as `(S, T)`: the sum is `S / d()` and the dropped alternating tail is at
/// most `T / e()`.
fn reference(target: Trig, a: &BigInt) -> (BigInt, BigInt) {
    let b = b();
    // weight = b^(N-n) N!/n!, built from n = N downwards
    let mut weight = BigInt::one();
    let mut sum = BigInt::zero();
    for n in (0..=N).rev() {
        let used = match target {
            Trig::Sin => n % 2 == 1,
            Trig::Cos => n % 2 == 0,
        };
        if used {
            let term = a.pow(n) * &weight;
            if (n / 2) % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
        }
        if n > 0 {
            weight = weight * &b * BigInt::from(n);
        }
    }
    (sum, a.abs().pow(N + 1))
}

fn dyadic(rng: &mut ChaCha8Rng, hi: &BigRational) -> BigInt {
    let max = (hi * BigRational::from_integer(b())).floor().to_integer();
    let max: i64 = max.try_into().unwrap();
    BigInt::from(rng.gen_range(1..=max))
}

/// Checks `poly(x) - f(kx)` against the reference: returns the sign of the
/// gap after asserting that it exceeds the reference tail.
fn gap_sign(poly: &RationalPoly, target: Trig, k: &BigRational, a: &BigInt) -> bool {
    let x = BigRational::new(a.clone(), b());
    let kx = k * &x;
    assert!((b() % kx.denom()).is_zero(), "scale must keep the 2^20 denominator");
    let ka = kx.numer() * (b() / kx.denom());
    let (sum, tail) = reference(target, &ka);
    let p = poly.eval(&x);
    let (pn, pd) = (p.numer(), p.denom());
    let gap = pn * d() - sum * pd;
    assert!(gap.abs() * b() * BigInt::from(N + 1) > tail * pd, "gap below oracle tail at {x}");
    gap.is_positive()
}

#[test]
fn planned_enclosures_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let cap = rat(8, 5);
    for lemma in Lemma::ALL {
        for term in lemma.plan().terms {
            let (poly, enc) = maclaurin(term.target, &term.scale, term.degree);
            let hi = if enc.valid_hi < cap { enc.valid_hi.clone() } else { cap.clone() };
            for _ in 0..1000 {
                let a = dyadic(&mut rng, &hi);
                let above = gap_sign(&poly, term.target, &term.scale, &a);
                assert_eq!(above, enc.direction == Direction::Upper, "{} at {a}/2^20", term.label);
            }
        }
    }
}

#[test]
fn low_degree_enclosures_are_sound_up_to_their_validity_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for (target, k, degree) in [(Trig::Sin, rat(1, 1), 1), (Trig::Cos, rat(1, 1), 2), (Trig::Sin, rat(2, 1), 3), (Trig::Cos, rat(3, 1), 0)] {
        let (poly, enc) = maclaurin(target, &k, degree);
        for _ in 0..1000 {
            let a = dyadic(&mut rng, &enc.valid_hi);
            let above = gap_sign(&poly, target, &k, &a);
            assert_eq!(above, enc.direction == Direction::Upper, "{} at {a}/2^20", enc.label());
        }
    }
}

/// `x cos x + sin(2x)/2 + x^2 sin x - sin x - x` and
/// `cos 2x + x sin(2x)/2 + x^2 - 1` at `x = a / b`, scaled by `2 b^2 e()`,
/// with the accumulated tail bound on the same scale.
fn mtp(lemma: Lemma, a: &BigInt) -> (BigInt, BigInt) {
    let (b, e) = (b(), e());
    let n1 = BigInt::from(N + 1);
    let two = BigInt::from(2);
    let a2 = a * &two;
    let (b2, b3) = (&b * &b, &b * &b * &b);
    match lemma {
        Lemma::GaMonotonicity => {
            let (s, ts) = reference(Trig::Sin, a);
            let (c, tc) = reference(Trig::Cos, a);
            let (s2, ts2) = reference(Trig::Sin, &a2);
            let value = n1 * (&two * a * &b2 * c + &b3 * s2 + &two * a * a * &b * &s - &two * &b3 * &s) - &two * a * &b * e;
            let tail = &two * a * &b * tc + &b2 * ts2 + two * (a * a + &b2) * ts;
            (value, tail)
        }
        Lemma::GbMonotonicity => {
            let (s2, ts2) = reference(Trig::Sin, &a2);
            let (c2, tc2) = reference(Trig::Cos, &a2);
            let value = n1 * (&two * &b3 * c2 + a * &b2 * s2) + &two * e * (a * a - &b2);
            let tail = two * &b2 * tc2 + a * &b * ts2;
            (value, tail)
        }
    }
}

#[test]
fn lemma_polynomials_have_the_claimed_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    // largest dyadic below pi/2
    let hi = rat(1_647_099, 1 << DENOM_BITS);
    for lemma in Lemma::ALL {
        for _ in 0..1000 {
            let a = dyadic(&mut rng, &hi);
            let (v, tail) = mtp(lemma, &a);
            assert!(v.abs() > tail, "{} at {a}/2^20", lemma.id());
            match lemma {
                Lemma::GaMonotonicity => assert!(v.is_negative(), "{} at {a}/2^20", lemma.id()),
                Lemma::GbMonotonicity => assert!(v.is_positive(), "{} at {a}/2^20", lemma.id()),
            }
        }
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::RationalPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trig {
    Sin,
    Cos,
}

impl Trig {
    pub fn name(self) -> &'static str {
        match self {
            Trig::Sin => "sin",
            Trig::Cos => "cos",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The polynomial lies on or above the function.
    Upper,
    /// The polynomial lies on or below the function.
    Lower,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Upper => Direction::Lower,
            Direction::Lower => Direction::Upper,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        }
    }
}

/// Binary digits of `valid_hi` below the point.
pub const VALID_HI_BITS: u32 = 32;

/// A one-sided truncated Maclaurin series of `sin(kx)` or `cos(kx)` on `(0, valid_hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Enclosure {
    pub target: Trig,
    pub scale: BigRational,
    /// Highest retained degree.
    pub degree: u32,
    pub direction: Direction,
    pub valid_hi: BigRational,
}

impl Enclosure {
    /// Degree of the first omitted nonzero term.
    pub fn first_omitted(&self) -> u32 {
        first_omitted(self.target, self.degree)
    }

    pub fn label(&self) -> String {
        let arg = if self.scale.is_one() { "x".to_string() } else { format!("{}x", self.scale) };
        format!("{}({arg}) deg {} {}", self.target.name(), self.degree, self.direction.name())
    }
}

fn first_omitted(target: Trig, degree: u32) -> u32 {
    let parity = match target {
        Trig::Sin => 1,
        Trig::Cos => 0,
    };
    let mut m = degree + 1;
    if m % 2 != parity {
        m += 1;
    }
    m
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Coefficient of `x^n` in the series of `sin(kx)` or `cos(kx)`.
fn series_coeff(target: Trig, k: &BigRational, n: u32) -> BigRational {
    let parity = match target {
        Trig::Sin => 1,
        Trig::Cos => 0,
    };
    if n % 2 != parity {
        return BigRational::zero();
    }
    let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
    let kn = num_traits::pow(k.clone(), n as usize);
    kn * BigRational::new(BigInt::from(sign), factorial(n))
}

/// Largest `x = N / 2^32` with `(k x)^2 < m (m + 1)`, where `m` is the first
/// omitted degree. The predicate says the omitted terms decrease in
/// magnitude from the first one on, so the tail has the sign of its first
/// term.
fn valid_hi(k: &BigRational, m: u32) -> BigRational {
    // (a N / b)^2 < m (m+1) 2^64  <=>  (a N)^2 < m (m+1) b^2 2^64
    let a = k.numer().abs();
    let b = k.denom().abs();
    let bound: BigInt = BigInt::from(m) * BigInt::from(m + 1) * &b * &b * (BigInt::one() << (2 * VALID_HI_BITS));
    let s = (bound - 1u32).sqrt();
    let n = s / a;
    BigRational::new(n, BigInt::one() << VALID_HI_BITS)
}

/// Truncated series of `sin(kx)` or `cos(kx)` through degree `degree`, with
/// its direction read off the first omitted term (negative means the
/// truncation is an upper bound).
///
/// Panics if `k` is not positive.
pub fn maclaurin(target: Trig, k: &BigRational, degree: u32) -> (RationalPoly, Enclosure) {
    assert!(k.is_positive(), "argument scale must be positive");
    let poly = RationalPoly::new((0..=degree).map(|n| series_coeff(target, k, n)).collect());
    let m = first_omitted(target, degree);
    let direction = if series_coeff(target, k, m).is_negative() { Direction::Upper } else { Direction::Lower };
    let enclosure = Enclosure {
        target,
        scale: k.clone(),
        degree,
        direction,
        valid_hi: valid_hi(k, m),
    };
    (poly, enclosure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::poly::rat;

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn cos_degree_4() {
        let (p, e) = maclaurin(Trig::Cos, &one(), 4);
        assert_eq!(p, RationalPoly::new(vec![rat(1, 1), rat(0, 1), rat(-1, 2), rat(0, 1), rat(1, 24)]));
        assert_eq!(e.direction, Direction::Upper);
        assert_eq!(e.first_omitted(), 6);
    }

    #[test]
    fn sin_2x_degree_9() {
        let (p, e) = maclaurin(Trig::Sin, &rat(2, 1), 9);
        let z = rat(0, 1);
        assert_eq!(
            p,
            RationalPoly::new(vec![
                z.clone(),
                rat(2, 1),
                z.clone(),
                rat(-4, 3),
                z.clone(),
                rat(4, 15),
                z.clone(),
                rat(-8, 315),
                z,
                rat(4, 2835)
            ])
        );
        assert_eq!(e.direction, Direction::Upper);
    }

    #[test]
    fn sin_degree_7_is_lower() {
        let (p, e) = maclaurin(Trig::Sin, &one(), 7);
        assert_eq!(p.coeff(7), rat(-1, 5040));
        assert_eq!(e.direction, Direction::Lower);
        // even degree rounds down to the same polynomial
        let (p8, e8) = maclaurin(Trig::Sin, &one(), 8);
        assert_eq!(p8, p);
        assert_eq!(e8.direction, Direction::Lower);
    }

    #[test]
    fn valid_hi_is_maximal() {
        for (t, k, d) in [(Trig::Cos, rat(1, 1), 4), (Trig::Sin, rat(2, 1), 9), (Trig::Cos, rat(2, 1), 6), (Trig::Sin, rat(3, 7), 0)] {
            let (_, e) = maclaurin(t, &k, d);
            let m = e.first_omitted() as i64;
            let limit = rat(m * (m + 1), 1);
            let kx = &k * &e.valid_hi;
            assert!(&kx * &kx < limit);
            let next = &e.valid_hi + BigRational::new(BigInt::one(), BigInt::one() << VALID_HI_BITS);
            let kx = &k * &next;
            assert!(&kx * &kx >= limit);
        }
    }
}

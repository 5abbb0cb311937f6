//! Exact scalar types: arbitrary-precision integers and reduced rationals.
//!
//! No floating point appears anywhere in this crate; every quantity is an
//! `Int` or a `Rat` (always stored reduced by `num`'s constructors).

use num::bigint::Sign;
pub use num::BigInt as Int;
pub use num::BigRational as Rat;
use num::{Integer, One, Signed, Zero};

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

pub fn rat_of(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn is_int(r: &Rat) -> bool {
    r.denom().is_one()
}

/// The integer value of a rational known to be integral.
pub fn to_int(r: &Rat) -> Option<Int> {
    if is_int(r) {
        Some(r.numer().clone())
    } else {
        None
    }
}

pub fn gcd_int(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

pub fn lcm_int(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        Int::zero()
    } else {
        a.lcm(b)
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd_i64(a, b)) * b
    }
}

/// 2-adic valuation of a positive integer.
pub fn v2(mut n: i64) -> u32 {
    assert!(n != 0, "v2 of zero");
    n = n.abs();
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    v
}

/// gcd of a slice of integers (0 for the empty slice or all zeros).
pub fn gcd_all(xs: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in xs {
        g = g.gcd(x);
    }
    g
}

/// Least common multiple of the denominators of a rational slice.
pub fn common_denominator(xs: &[Rat]) -> Int {
    let mut d = Int::one();
    for x in xs {
        d = lcm_int(&d, x.denom());
    }
    if d.sign() == Sign::Minus {
        -d
    } else {
        d
    }
}

/// Euclidean-style division with non-negative remainder: a = q*b + r, 0 <= r < |b|.
pub fn div_rem_euclid(a: &Int, b: &Int) -> (Int, Int) {
    assert!(!b.is_zero());
    let (mut q, mut r) = a.div_rem(b);
    if r.is_negative() {
        if b.is_negative() {
            q += 1;
            r -= b;
        } else {
            q -= 1;
            r += b;
        }
    }
    (q, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclid_division() {
        for a in -7i64..8 {
            for b in [-3i64, -2, 2, 3, 5] {
                let (q, r) = div_rem_euclid(&int(a), &int(b));
                assert_eq!(q * int(b) + &r, int(a));
                assert!(r >= int(0) && r < int(b.abs()));
            }
        }
    }

    #[test]
    fn two_adic() {
        assert_eq!(v2(12), 2);
        assert_eq!(v2(1), 0);
        assert_eq!(v2(-8), 3);
    }
}

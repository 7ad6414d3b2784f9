//! Small integer helpers shared by the other modules.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer square root of a non-negative `BigInt`, or `None` for negatives.
pub fn isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    Some(n.sqrt())
}

/// Returns `Some(r)` with `r * r == n` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = isqrt(n)?;
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let r = n.isqrt();
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

pub fn exact_sqrt_u64(n: u64) -> Option<u64> {
    let r = n.isqrt();
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// Splits `n > 0` as `u * v^2` with `u` square-free.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n > 0, "squarefree_decompose of zero");
    let mut rest = n;
    let mut u = 1u64;
    let mut v = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            v *= p.pow(e / 2);
            if e % 2 == 1 {
                u *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (u * rest, v)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && squarefree_decompose(n).1 == 1
}

/// Signed variant: `n = sign * u * v^2` with `sign * u` returned as the
/// square-free part.
pub fn squarefree_part_i64(n: i64) -> (i64, u64) {
    assert!(n != 0, "square-free part of zero");
    let (u, v) = squarefree_decompose(n.unsigned_abs());
    let u = u as i64;
    (if n < 0 { -u } else { u }, v)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divisors of `n > 0` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Binomial coefficient `C(n, k)` as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInt::from_biguint(Sign::Plus, acc)
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// `x mod m` in `[0, m)`.
pub fn modulo(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    r.try_into().expect("residue fits in u64")
}

pub fn is_pm_one_mod6(x: &BigInt) -> bool {
    matches!(modulo(x, 6), 1 | 5)
}

/// `2^l * 3^m`.
pub fn smooth_23(l: u32, m: u32) -> BigInt {
    (BigInt::one() << l) * num_traits::pow(BigInt::from(3u8), m as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(175), (7, 5));
        assert_eq!(squarefree_decompose(1), (1, 1));
        assert_eq!(squarefree_decompose(72), (2, 6));
        assert_eq!(squarefree_decompose(97), (97, 1));
        assert_eq!(squarefree_part_i64(-12), (-3, 2));
        assert!(is_squarefree(30));
        assert!(!is_squarefree(50));
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn binomials_match_row() {
        let row = binomial_row(10);
        for (k, c) in row.iter().enumerate() {
            assert_eq!(*c, binomial(10, k as u64));
        }
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&BigInt::from(289)), Some(BigInt::from(17)));
        assert_eq!(exact_sqrt(&BigInt::from(290)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
        assert_eq!(exact_sqrt_u128(1u128 << 100), Some(1u128 << 50));
        assert_eq!(exact_sqrt_u128((1u128 << 100) + 1), None);
    }

    #[test]
    fn residues() {
        assert_eq!(modulo(&BigInt::from(-1), 6), 5);
        assert!(is_pm_one_mod6(&BigInt::from(25)));
        assert!(!is_pm_one_mod6(&BigInt::from(9)));
        assert_eq!(smooth_23(1, 3), BigInt::from(54));
    }
}

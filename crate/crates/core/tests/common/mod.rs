//! Independent oracles shared by the integration tests. None of these call
//! the algorithm under test for the quantity they check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use dioph_core::{LehmerPair, RingElement};

/// `L_s` straight from the roots: `(γ^s - δ^s)/(γ - δ)` for odd `s`,
/// `(γ^s - δ^s)/(γ^2 - δ^2)` for even `s`. `None` when the quotient is not a
/// rational integer (which would be a bug somewhere).
pub fn ring_lehmer(pair: &LehmerPair, s: u32) -> Option<BigInt> {
    let (g, d) = pair.roots()?;
    let num = g.pow(s) - d.pow(s);
    let den: RingElement = if s % 2 == 1 {
        &g - &d
    } else {
        g.pow(2) - d.pow(2)
    };
    num.checked_div(&den)?.as_integer()
}

/// `(γ^s + δ^s)/(γ + δ)` for odd `s`, `γ^s + δ^s` for even `s`.
pub fn ring_companion(pair: &LehmerPair, s: u32) -> Option<BigInt> {
    let (g, d) = pair.roots()?;
    let num = g.pow(s) + d.pow(s);
    if s % 2 == 1 {
        num.checked_div(&(&g + &d))?.as_integer()
    } else {
        num.as_integer()
    }
}

const TRIAL_LIMIT: u64 = 100_000;

/// Distinct prime factors of `|n|`. Values that fit in `u128` go to
/// num-prime's machine factoriser; larger ones get trial division below 10^5
/// first and the generic factoriser on the cofactor.
pub fn prime_factors(n: &BigInt) -> BTreeSet<BigUint> {
    let mut m = n.abs().to_biguint().expect("abs is nonnegative");
    let mut out = BTreeSet::new();
    if m <= BigUint::one() {
        return out;
    }
    if let Some(small) = m.to_u128() {
        return num_prime::nt_funcs::factorize128(small)
            .into_keys()
            .map(BigUint::from)
            .collect();
    }
    let mut p = 2u64;
    while p < TRIAL_LIMIT && m > BigUint::one() {
        if (&m % p).is_zero() {
            out.insert(BigUint::from(p));
            while (&m % p).is_zero() {
                m /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigUint::one() {
        out.extend(num_prime::nt_funcs::factorize(m).into_keys());
    }
    out
}

/// Defectiveness by factorisation: `L_s` is defective when each of its prime
/// factors divides `R(R - 4Q)` or some `L_i`, `1 ≤ i < s`.
pub fn factored_defective(pair: &LehmerPair, s: u64) -> bool {
    let seq = pair.sequence(s);
    let earlier: Vec<BigInt> = std::iter::once(pair.defect_base())
        .chain(seq[1..s as usize].iter().cloned())
        .collect();
    prime_factors(&seq[s as usize]).into_iter().all(|p| {
        let p = BigInt::from_biguint(Sign::Plus, p);
        earlier.iter().any(|e| e.is_multiple_of(&p))
    })
}

/// Kronecker symbol `(a/n)`.
pub fn kronecker(a: i64, n: u64) -> i64 {
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut result = 1;
    let mut n = n;
    let tz = n.trailing_zeros();
    n >>= tz;
    if tz > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if tz % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi (a/n) for odd n.
    let mut a = a.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn core_and_conductor(disc: i64) -> (i64, i64) {
    // disc = d0 · f^2 with d0 fundamental.
    let mut f = 1i64;
    let mut d0 = disc;
    let mut p = 2i64;
    while p * p <= d0.abs() {
        while (d0 % (p * p)) == 0 {
            let q = d0 / (p * p);
            if q.rem_euclid(4) == 0 || q.rem_euclid(4) == 1 {
                d0 = q;
                f *= p;
            } else {
                break;
            }
        }
        p += 1;
    }
    (d0, f)
}

fn units(d0: i64) -> i64 {
    match d0 {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// `h(D)` for negative `D ≡ 0, 1 (mod 4)` from Dirichlet's class number
/// formula and the conductor formula; no forms are enumerated.
pub fn dirichlet_class_number(disc: i64) -> u64 {
    assert!(disc < 0 && matches!(disc.rem_euclid(4), 0 | 1));
    let (d0, f) = core_and_conductor(disc);
    let m = d0.unsigned_abs();
    let sum: i64 = (1..m).map(|a| kronecker(d0, a) * a as i64).sum();
    let w = units(d0);
    let h0_num = -w * sum;
    assert_eq!(h0_num % (2 * m as i64), 0);
    let h0 = h0_num / (2 * m as i64);
    if f == 1 {
        return h0 as u64;
    }
    // h(D) = h(d0) f ∏(1 - (d0/p)/p) / (w(d0)/2)
    let mut num = h0 * f;
    let mut den = w / 2;
    let mut rest = f;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            num *= p - kronecker(d0, p as u64);
            den *= p;
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

/// `h(D)` by brute force over every form `(a, b, c)` with `|b| ≤ a ≤ c`,
/// keeping the reduced primitive ones. Slow; for small `|D|` only.
pub fn brute_class_number(disc: i64) -> u64 {
    let n = disc.abs();
    let mut count = 0;
    for a in 1..=n {
        for b in -a..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if (b.abs() == a || a == c) && b < 0 {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                count += 1;
            }
        }
    }
    count
}

/// Every solution of `coeff·X^2 + 2^L 3^M = Y^N` in the box, by direct big
/// integer comparison of `X` candidates (no square roots), ordered `(Y, N, L,
/// M)`.
pub fn naive_solutions(
    variant: bool,
    n_range: std::ops::RangeInclusive<u32>,
    y_max: u64,
    l_max: u32,
    m_max: u32,
) -> Vec<(u64, u64, u32, u32, BigInt)> {
    let mut out = Vec::new();
    for y in 2..=y_max {
        for n in n_range.clone() {
            let yn = num_traits::pow(BigInt::from(y), n as usize);
            let coeff = BigInt::from(if variant { 1 } else { n });
            for l in 1..=l_max {
                for m in 1..=m_max {
                    let c = (BigInt::one() << l) * num_traits::pow(BigInt::from(3), m as usize);
                    if c >= yn {
                        continue;
                    }
                    // binary search X with coeff·X^2 = yn - c
                    let target = &yn - &c;
                    let (mut lo, mut hi) = (BigInt::one(), BigInt::one());
                    while &coeff * &hi * &hi <= target {
                        hi *= 2;
                    }
                    while lo < hi {
                        let mid: BigInt = (&lo + &hi) / 2;
                        if &coeff * &mid * &mid < target {
                            lo = mid + 1;
                        } else {
                            hi = mid;
                        }
                    }
                    let x = lo;
                    if &coeff * &x * &x == target && (&x * &coeff).gcd(&BigInt::from(y)).is_one() {
                        out.push((y, n as u64, l, m, x));
                    }
                }
            }
        }
    }
    out
}

/// Admissible cell count by direct enumeration.
pub fn naive_cell_count(
    admits: impl Fn(u64, u32) -> bool,
    n_range: std::ops::RangeInclusive<u32>,
    y_max: u64,
    l_max: u32,
    m_max: u32,
) -> u64 {
    let mut count = 0;
    for y in 2..=y_max {
        for n in n_range.clone() {
            if !admits(y, n) {
                continue;
            }
            let yn = num_traits::pow(BigInt::from(y), n as usize);
            for l in 1..=l_max {
                for m in 1..=m_max {
                    let c = (BigInt::one() << l) * num_traits::pow(BigInt::from(3), m as usize);
                    if c < yn {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{Field, RingElement};
use crate::arith::is_squarefree;
use crate::error::{Error, Result};

/// An algebraic integer `(p + q√D) / den` of a quadratic field, `den ∈ {1, 2}`.
///
/// `den = 2` is admitted only where `(p + q√D)/2` is integral, i.e. for
/// `D ≡ 1 (mod 4)` with `p ≡ q (mod 2)`; the set is then closed under
/// multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    d: i64,
    p: BigInt,
    q: BigInt,
    den: u8,
}

impl QuadSurd {
    pub fn new(d: i64, p: BigInt, q: BigInt, den: u8) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d.unsigned_abs()) {
            return Err(Error::InvalidField(format!(
                "D = {d} is not a square-free integer other than 0, 1"
            )));
        }
        match den {
            1 => Ok(QuadSurd { d, p, q, den }),
            2 => {
                if p.is_even() && q.is_even() {
                    Ok(QuadSurd {
                        d,
                        p: p / 2,
                        q: q / 2,
                        den: 1,
                    })
                } else if d.rem_euclid(4) == 1 && p.is_odd() && q.is_odd() {
                    Ok(QuadSurd { d, p, q, den })
                } else {
                    Err(Error::InvalidField(format!(
                        "({p} + {q}√{d})/2 is not integral"
                    )))
                }
            }
            _ => Err(Error::InvalidField(format!(
                "denominator {den} not in {{1, 2}}"
            ))),
        }
    }

    /// `p + q√D` with integer coordinates.
    pub fn integral(d: i64, p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        Self::new(d, p.into(), q.into(), 1)
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn den(&self) -> u8 {
        self.den
    }

    pub fn one(d: i64) -> Result<Self> {
        Self::integral(d, 1, 0)
    }

    pub fn conj(&self) -> Self {
        QuadSurd {
            q: -&self.q,
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        QuadSurd {
            p: -&self.p,
            q: -&self.q,
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "surds over different radicands");
        let p = &self.p * &other.p + &self.q * &other.q * self.d;
        let q = &self.p * &other.q + &self.q * &other.p;
        let mut den = self.den as u32 * other.den as u32;
        let (mut p, mut q) = (p, q);
        // Closure of the maximal order keeps the reduced denominator at 1 or 2.
        while den > 1 && p.is_even() && q.is_even() {
            p /= 2;
            q /= 2;
            den /= 2;
        }
        assert!(den <= 2, "denominator escaped the ring of integers");
        QuadSurd {
            d: self.d,
            p,
            q,
            den: den as u8,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadSurd {
            d: self.d,
            p: BigInt::one(),
            q: BigInt::zero(),
            den: 1,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `N(x) = (p^2 - D q^2) / den^2`, always an integer here.
    pub fn norm(&self) -> BigInt {
        let raw = &self.p * &self.p - &self.q * &self.q * self.d;
        raw / (self.den as u32 * self.den as u32)
    }

    pub fn to_ring(&self) -> RingElement {
        let field = Field::quadratic(self.d).expect("validated radicand");
        RingElement::new(
            field,
            [
                self.p.clone(),
                BigInt::zero(),
                self.q.clone(),
                BigInt::zero(),
            ],
            BigInt::from(self.den),
        )
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.q.is_negative() { '-' } else { '+' };
        let body = format!("{} {} {}√{}", self.p, sign, self.q.abs(), self.d);
        if self.den == 1 {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/2")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_one_minus_root_minus_two() {
        let x = QuadSurd::integral(-2, 1, -1).unwrap();
        assert_eq!(x.pow(3), QuadSurd::integral(-2, -5, -1).unwrap());
        assert_eq!(x.pow(3).norm(), BigInt::from(27));
    }

    #[test]
    fn half_integral_elements() {
        let w = QuadSurd::new(-7, 1.into(), 1.into(), 2).unwrap();
        assert_eq!(
            w.pow(2),
            QuadSurd::new(-7, (-3).into(), 1.into(), 2).unwrap()
        );
        assert_eq!(w.norm(), BigInt::from(2));
        assert!(QuadSurd::new(-2, 1.into(), 1.into(), 2).is_err());
        assert_eq!(
            QuadSurd::new(-2, 2.into(), 4.into(), 2).unwrap(),
            QuadSurd::integral(-2, 1, 2).unwrap()
        );
    }

    #[test]
    fn agrees_with_ring_element() {
        let x = QuadSurd::new(-15, 1.into(), 3.into(), 2).unwrap();
        for e in 0..8 {
            assert_eq!(x.pow(e).to_ring(), x.to_ring().pow(e));
        }
    }
}

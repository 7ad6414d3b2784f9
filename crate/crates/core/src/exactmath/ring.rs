use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_squarefree, squarefree_part_i64};
use crate::error::{Error, Result};

/// One of the two adjoined radicals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Radical {
    /// `√d1`; this is `√w` in `E = Q(√w, √-n)`.
    First,
    /// `√d2`; this is `√-n` in `E`.
    Second,
}

/// The field `Q(√d1, √d2)` for square-free `d1`, `d2`.
///
/// Degenerate radicand choices collapse gracefully: `d1 = 1` or `d2 = 1`
/// gives a quadratic field (or `Q`), and `d1 = d2` gives `Q(√d1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    d1: i64,
    d2: i64,
}

impl Field {
    pub fn new(d1: i64, d2: i64) -> Result<Self> {
        for d in [d1, d2] {
            if d == 0 || !is_squarefree(d.unsigned_abs()) {
                return Err(Error::InvalidField(format!(
                    "radicand {d} is not a nonzero square-free integer"
                )));
            }
        }
        Ok(Field { d1, d2 })
    }

    pub fn rational() -> Self {
        Field { d1: 1, d2: 1 }
    }

    /// `Q(√d)`, stored with the radical in the second slot.
    pub fn quadratic(d: i64) -> Result<Self> {
        Field::new(1, d)
    }

    /// `E = Q(√w, √-n)` with `w ∈ {1, 2, 3, 6}` and `n` positive square-free.
    pub fn biquadratic_e(w: i64, n: i64) -> Result<Self> {
        if ![1, 2, 3, 6].contains(&w) {
            return Err(Error::InvalidField(format!(
                "w = {w} not in {{1, 2, 3, 6}}"
            )));
        }
        if n <= 0 {
            return Err(Error::InvalidField(format!("n = {n} must be positive")));
        }
        Field::new(w, -n)
    }

    pub fn d1(&self) -> i64 {
        self.d1
    }

    pub fn d2(&self) -> i64 {
        self.d2
    }

    fn first_active(&self) -> bool {
        self.d1 != 1
    }

    fn second_active(&self) -> bool {
        self.d2 != 1 && self.d2 != self.d1
    }

    pub fn degree(&self) -> u32 {
        match (self.first_active(), self.second_active()) {
            (true, true) => 4,
            (false, false) => 1,
            _ => 2,
        }
    }

    /// Sign patterns `(flip √d1, flip √d2)` of the field's embeddings.
    fn embeddings(&self) -> Vec<(bool, bool)> {
        match (self.first_active(), self.second_active()) {
            (true, true) => vec![(false, false), (true, false), (false, true), (true, true)],
            (true, false) => vec![(false, false), (true, false)],
            (false, true) => vec![(false, false), (false, true)],
            (false, false) => vec![(false, false)],
        }
    }

    /// Moves coordinates of inactive basis elements onto active ones.
    fn fold(&self, c: &mut [BigInt; 4]) {
        if self.d1 == 1 {
            let c1 = std::mem::take(&mut c[1]);
            c[0] += c1;
            let c3 = std::mem::take(&mut c[3]);
            c[2] += c3;
        }
        if self.d2 == 1 {
            let c2 = std::mem::take(&mut c[2]);
            c[0] += c2;
            let c3 = std::mem::take(&mut c[3]);
            c[1] += c3;
        } else if self.d2 == self.d1 {
            let c2 = std::mem::take(&mut c[2]);
            c[1] += c2;
            let c3 = std::mem::take(&mut c[3]);
            c[0] += c3 * self.d1;
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement::from_int(*self, 0)
    }

    pub fn one(&self) -> RingElement {
        RingElement::from_int(*self, 1)
    }

    /// The basis element `√d1` (or `√d2`).
    pub fn radical(&self, which: Radical) -> RingElement {
        let mut c = [0, 0, 0, 0];
        match which {
            Radical::First => c[1] = 1,
            Radical::Second => c[2] = 1,
        }
        RingElement::new(*self, c.map(BigInt::from), BigInt::one())
    }

    /// A square root of the integer `m` inside this field, if one exists
    /// among `±f`, `±f√d1`, `±f√d2` (the positive multiple is returned).
    pub fn sqrt_of(&self, m: i64) -> Option<RingElement> {
        if m == 0 {
            return Some(self.zero());
        }
        let (core, f) = squarefree_part_i64(m);
        let f = BigInt::from(f);
        if core == 1 {
            return Some(RingElement::from_bigint(*self, f));
        }
        if core == self.d1 {
            return Some(self.radical(Radical::First).scale(&f));
        }
        if core == self.d2 {
            return Some(self.radical(Radical::Second).scale(&f));
        }
        None
    }

    /// A solution of `x^2 = -1` in the field, if one exists.
    ///
    /// The quadratic subfields are `Q(√d1)`, `Q(√d2)` and `Q(√(d1 d2))`, so the
    /// only candidates are `√d1`, `√d2` and `√d1·√d2 / f` where
    /// `d1 d2 = -f^2`; each candidate is confirmed by squaring.
    pub fn sqrt_minus_one(&self) -> Option<RingElement> {
        let minus_one = RingElement::from_int(*self, -1);
        let mut candidates = vec![self.radical(Radical::First), self.radical(Radical::Second)];
        let prod = self.d1 * self.d2;
        let (core, f) = squarefree_part_i64(prod);
        if core == -1 {
            let theta = self
                .radical(Radical::First)
                .mul_ref(&self.radical(Radical::Second));
            candidates.push(theta.div_int(&BigInt::from(f)));
        }
        candidates.into_iter().find(|c| c.mul_ref(c) == minus_one)
    }
}

/// An element `(c0 + c1√d1 + c2√d2 + c3√d1√d2) / den` of a [`Field`].
///
/// The representation is canonical: `den > 0`, the numerators and `den`
/// share no common factor, and coordinates of degenerate basis elements are
/// folded away, so structural equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    field: Field,
    num: [BigInt; 4],
    den: BigInt,
}

impl RingElement {
    pub fn new(field: Field, num: [BigInt; 4], den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut x = RingElement { field, num, den };
        x.field.fold(&mut x.num);
        x.normalize();
        x
    }

    pub fn from_int(field: Field, n: i64) -> Self {
        Self::from_bigint(field, BigInt::from(n))
    }

    pub fn from_bigint(field: Field, n: BigInt) -> Self {
        Self::new(
            field,
            [n, BigInt::zero(), BigInt::zero(), BigInt::zero()],
            BigInt::one(),
        )
    }

    /// Builds an element from twice its coordinates, i.e. `(h0 + h1√d1 + ...)/2`.
    pub fn from_halves(field: Field, halves: [i64; 4]) -> Self {
        Self::new(field, halves.map(BigInt::from), BigInt::from(2))
    }

    pub fn from_ints(field: Field, c: [i64; 4]) -> Self {
        Self::new(field, c.map(BigInt::from), BigInt::one())
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerators(&self) -> &[BigInt; 4] {
        &self.num
    }

    /// Coordinate `i` as a reduced fraction `(numerator, denominator)`.
    pub fn coord(&self, i: usize) -> (BigInt, BigInt) {
        let g = self.num[i].gcd(&self.den);
        if g.is_zero() {
            return (BigInt::zero(), BigInt::one());
        }
        (&self.num[i] / &g, &self.den / &g)
    }

    /// Twice coordinate `i`, when that is an integer.
    pub fn doubled(&self, i: usize) -> Option<BigInt> {
        let twice: BigInt = &self.num[i] * 2;
        if twice.is_multiple_of(&self.den) {
            Some(twice / &self.den)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(
            self.field,
            self.num.clone().map(|c| c * k),
            self.den.clone(),
        )
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        Self::new(self.field, self.num.clone(), &self.den * k)
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "ring elements from different fields"
        );
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        let num = std::array::from_fn(|i| &self.num[i] * &other.den + &other.num[i] * &self.den);
        Self::new(self.field, num, &self.den * &other.den)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self::new(self.field, self.num.clone().map(|c| -c), self.den.clone())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        let (a, b) = (&self.num, &other.num);
        let d1 = BigInt::from(self.field.d1);
        let d2 = BigInt::from(self.field.d2);
        let c0 =
            &a[0] * &b[0] + &d1 * &a[1] * &b[1] + &d2 * &a[2] * &b[2] + &d1 * &d2 * &a[3] * &b[3];
        let c1 = &a[0] * &b[1] + &a[1] * &b[0] + &d2 * (&a[2] * &b[3] + &a[3] * &b[2]);
        let c2 = &a[0] * &b[2] + &a[2] * &b[0] + &d1 * (&a[1] * &b[3] + &a[3] * &b[1]);
        let c3 = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        Self::new(self.field, [c0, c1, c2, c3], &self.den * &other.den)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn apply_signs(&self, flip_first: bool, flip_second: bool) -> Self {
        let mut num = self.num.clone();
        if flip_first {
            num[1] = -&num[1];
            num[3] = -&num[3];
        }
        if flip_second {
            num[2] = -&num[2];
            num[3] = -&num[3];
        }
        Self::new(self.field, num, self.den.clone())
    }

    /// Negates the chosen radical; an involutive field automorphism.
    pub fn conjugate(&self, which: Radical) -> Self {
        // With d1 = d2 both radicals are the same element.
        let which = if self.field.d1 == self.field.d2 {
            Radical::First
        } else {
            which
        };
        match which {
            Radical::First => self.apply_signs(true, false),
            Radical::Second => self.apply_signs(false, true),
        }
    }

    /// All images of `self` under the field's embeddings, identity first.
    pub fn conjugates(&self) -> Vec<Self> {
        self.field
            .embeddings()
            .into_iter()
            .map(|(f, s)| self.apply_signs(f, s))
            .collect()
    }

    /// Field norm to `Q`, returned as a rational element.
    pub fn norm(&self) -> Self {
        self.conjugates()
            .iter()
            .fold(self.field.one(), |acc, c| acc.mul_ref(c))
    }

    /// Coefficients (constant term first) of `∏ (X - σ(x))` over all embeddings.
    pub fn char_poly(&self) -> Vec<Self> {
        let mut poly = vec![self.field.one()];
        for c in self.conjugates() {
            let mut next = vec![self.field.zero(); poly.len() + 1];
            for (i, p) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].add_ref(p);
                next[i] = next[i].sub_ref(&p.mul_ref(&c));
            }
            poly = next;
        }
        poly
    }

    /// Integrality test: the characteristic polynomial is monic with rational
    /// coefficients, and lies in `Z[X]` exactly when the element is an
    /// algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.char_poly().iter().all(|c| c.as_integer().is_some())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let others = self.conjugates()[1..]
            .iter()
            .fold(self.field.one(), |acc, c| acc.mul_ref(c));
        let n = self.norm();
        debug_assert!(n.is_rational());
        // others / (n.num[0] / n.den)
        Some(others.scale(&n.den).div_int(&n.num[0]))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(self.mul_ref(&other.inverse()?))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $m(self, rhs: &RingElement) -> RingElement {
                self.$inner(rhs)
            }
        }
        impl $tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $m(self, rhs: RingElement) -> RingElement {
                self.$inner(&rhs)
            }
        }
        impl $tr<&RingElement> for RingElement {
            type Output = RingElement;
            fn $m(self, rhs: &RingElement) -> RingElement {
                self.$inner(rhs)
            }
        }
        impl $tr<RingElement> for &RingElement {
            type Output = RingElement;
            fn $m(self, rhs: RingElement) -> RingElement {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_ref()
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_ref()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d1, d2) = (self.field.d1, self.field.d2);
        let product = if d1 > 0 || d2 > 0 {
            format!("√{}", d1 * d2)
        } else {
            format!("√{d1}·√{d2}")
        };
        let labels = [String::new(), format!("√{d1}"), format!("√{d2}"), product];
        let mut terms = String::new();
        for (c, label) in self.num.iter().zip(&labels) {
            if c.is_zero() {
                continue;
            }
            let body = match (c.abs().is_one(), label.is_empty()) {
                (true, false) => label.clone(),
                (_, true) => c.abs().to_string(),
                (false, false) => format!("{}{}", c.abs(), label),
            };
            if terms.is_empty() {
                if c.is_negative() {
                    terms.push('-');
                }
            } else {
                terms.push_str(if c.is_negative() { " - " } else { " + " });
            }
            terms.push_str(&body);
        }
        if terms.is_empty() {
            terms.push('0');
        }
        if self.den.is_one() {
            write!(f, "{terms}")
        } else {
            write!(f, "({terms})/{}", self.den)
        }
    }
}

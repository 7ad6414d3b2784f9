//! Exact arithmetic in `Q(√d1, √d2)` and its quadratic subfields.
//!
//! Elements are stored over the basis `{1, √d1, √d2, √d1·√d2}` as four
//! integer numerators over one shared positive denominator. The fields the
//! nonexistence argument lives in are `E = Q(√w, √-n)` (`d1 = w`,
//! `d2 = -n`), `F = Q(√-wn)` and `Q(√-n)`.

mod ring;
mod surd;

pub use ring::{Field, Radical, RingElement};
pub use surd::QuadSurd;

/// `x^e` by square-and-multiply.
pub fn ring_power(x: &RingElement, e: u32) -> RingElement {
    x.pow(e)
}

/// Flips the sign of one radical (and of the product basis element).
pub fn radical_conjugate(x: &RingElement, which: Radical) -> RingElement {
    x.conjugate(which)
}

/// Whether `x` is an algebraic integer.
pub fn is_integral(x: &RingElement) -> bool {
    x.is_integral()
}

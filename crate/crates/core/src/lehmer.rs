//! Lehmer pairs, Lehmer numbers and defectiveness.
//!
//! A pair `(γ, δ)` is carried by the integers `R = (γ + δ)^2` and `Q = γδ`.
//! With `u_s = (γ^s - δ^s)/(γ - δ)` and `u_s = √R u_{s-1} - Q u_{s-2}`, the
//! odd-index terms are integers and the even-index terms are integer
//! multiples of `√R`; the integer parts are exactly the Lehmer numbers
//! `L_s`. The same split of `v_s = γ^s + δ^s` gives the companion numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::squarefree_part_i64;
use crate::error::{Error, Result};
use crate::exactmath::{Field, RingElement};
use crate::serde_util::bigint_str;

/// Highest index whose vanishing would expose `γ/δ` as a root of unity:
/// roots of unity in fields of degree at most 4 have order in
/// `{1, 2, 3, 4, 5, 6, 8, 10, 12}`.
const ROOT_OF_UNITY_HORIZON: u64 = 12;

/// A Lehmer pair in `(R, Q)` form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LehmerPair {
    #[serde(with = "bigint_str")]
    r: BigInt,
    #[serde(with = "bigint_str")]
    q: BigInt,
}

impl LehmerPair {
    pub fn new(r: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (r, q) = (r.into(), q.into());
        let (r_s, q_s) = (r.to_string(), q.to_string());
        let reject = |reason: &str| Error::InvalidPair {
            r: r_s.clone(),
            q: q_s.clone(),
            reason: reason.to_string(),
        };
        if r.is_zero() || q.is_zero() {
            return Err(reject("R and Q must be nonzero"));
        }
        if !r.gcd(&q).is_one() {
            return Err(reject("gcd(R, Q) != 1"));
        }
        if r == &q * 4 {
            return Err(reject("R - 4Q = 0, so γ = δ"));
        }
        let pair = LehmerPair { r, q };
        let seq = pair.sequence(ROOT_OF_UNITY_HORIZON);
        if let Some(s) = (1..=ROOT_OF_UNITY_HORIZON).find(|&s| seq[s as usize].is_zero()) {
            return Err(reject(&format!("u_{s} = 0, so γ/δ is a root of unity")));
        }
        Ok(pair)
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `R - 4Q = (γ - δ)^2`.
    pub fn discriminant(&self) -> BigInt {
        &self.r - &self.q * 4
    }

    /// `(γ^2 - δ^2)^2 = R (R - 4Q)`.
    pub fn defect_base(&self) -> BigInt {
        &self.r * self.discriminant()
    }

    /// The pair `(iγ, iδ)`, i.e. `(-R, -Q)`.
    pub fn twist(&self) -> Self {
        LehmerPair {
            r: -&self.r,
            q: -&self.q,
        }
    }

    /// `L_0, L_1, ..., L_up_to` (with `L_0 = 0`).
    pub fn sequence(&self, up_to: u64) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(up_to as usize + 1);
        out.push(BigInt::zero());
        if up_to == 0 {
            return out;
        }
        out.push(BigInt::one());
        for s in 2..=up_to as usize {
            let prev = &out[s - 1];
            let next = if s % 2 == 1 {
                &self.r * prev - &self.q * &out[s - 2]
            } else {
                prev - &self.q * &out[s - 2]
            };
            out.push(next);
        }
        out
    }

    /// Companion numbers for indices `0..=up_to`: `(γ^s + δ^s)/(γ + δ)` for odd
    /// `s`, `γ^s + δ^s` for even `s` (index 0 holds `v_0 = 2`).
    pub fn companion_sequence(&self, up_to: u64) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(up_to as usize + 1);
        out.push(BigInt::from(2));
        if up_to == 0 {
            return out;
        }
        out.push(BigInt::one());
        for s in 2..=up_to as usize {
            let prev = &out[s - 1];
            let next = if s % 2 == 1 {
                prev - &self.q * &out[s - 2]
            } else {
                &self.r * prev - &self.q * &out[s - 2]
            };
            out.push(next);
        }
        out
    }

    /// `γ` and `δ` as exact elements of `Q(√R, √(R - 4Q))`, when both radicands
    /// fit in machine integers.
    pub fn roots(&self) -> Option<(RingElement, RingElement)> {
        let r = self.r.to_i64()?;
        let disc = self.discriminant().to_i64()?;
        let (r_core, _) = squarefree_part_i64(r);
        let (d_core, _) = squarefree_part_i64(disc);
        let field = Field::new(r_core, d_core).ok()?;
        let sqrt_r = field.sqrt_of(r)?;
        let sqrt_d = field.sqrt_of(disc)?;
        let two = BigInt::from(2);
        let gamma = (&sqrt_r + &sqrt_d).div_int(&two);
        let delta = (&sqrt_r - &sqrt_d).div_int(&two);
        Some((gamma, delta))
    }
}

/// `L_s(γ, δ)` with the sign produced by the recurrence.
pub fn lehmer_number(pair: &LehmerPair, s: u64) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::InvalidIndex(s, "Lehmer numbers are indexed from 1"));
    }
    Ok(pair.sequence(s).pop().expect("nonempty"))
}

/// The cofactor with `L_{2s} = L_s · companion_s` for odd `s`.
pub fn companion_number(pair: &LehmerPair, s: u64) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::InvalidIndex(
            s,
            "companion numbers are indexed from 1",
        ));
    }
    Ok(pair.companion_sequence(s).pop().expect("nonempty"))
}

/// Outcome of the primitive-divisor test for one index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub s: u64,
    #[serde(with = "bigint_str")]
    pub l_value: BigInt,
    #[serde(with = "bigint_str")]
    pub l_abs: BigInt,
    /// `|L_s|` with every prime shared with `(γ^2 - δ^2)^2 L_1 ⋯ L_{s-1}` removed.
    #[serde(with = "bigint_str")]
    pub stripped: BigInt,
    pub defective: bool,
    pub notes: String,
}

/// Removes from `v` every prime that also divides `p`, using only gcds.
pub fn strip_common_primes(v: &BigInt, p: &BigInt) -> BigInt {
    let mut v = v.abs();
    loop {
        let g = v.gcd(p);
        if g.is_one() || g.is_zero() {
            return v;
        }
        v /= g;
    }
}

/// Whether `L_s` has no primitive divisor, decided by gcd-stripping `|L_s|`
/// against `R(R - 4Q) L_1 ⋯ L_{s-1}`; no factorisation is done.
pub fn is_defective(pair: &LehmerPair, s: u64) -> Result<DefectReport> {
    if s < 2 {
        return Err(Error::InvalidIndex(s, "defectiveness is tested for s >= 2"));
    }
    let seq = pair.sequence(s);
    let l_value = seq[s as usize].clone();
    let l_abs = l_value.abs();
    let product = seq[1..s as usize]
        .iter()
        .fold(pair.defect_base(), |acc, l| acc * l);
    let stripped = strip_common_primes(&l_abs, &product);
    let defective = stripped.is_one();
    let notes = if l_abs.is_one() {
        "|L_s| = 1: defective vacuously".to_string()
    } else if defective {
        "every prime factor of L_s divides an earlier term or R(R - 4Q)".to_string()
    } else {
        format!("primitive part {stripped} survives")
    };
    Ok(DefectReport {
        s,
        l_value,
        l_abs,
        stripped,
        defective,
        notes,
    })
}

/// One row of the registry of exceptional defective pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub s: u64,
    pub r: i64,
    pub q: i64,
    pub label: String,
}

impl TableEntry {
    pub fn pair(&self) -> Result<LehmerPair> {
        LehmerPair::new(self.r, self.q)
    }
}

/// `(s, [(R, Q, printed γ)])`. A printed `γ = (√A ± √-B)/2` has `R = A`,
/// `Q = (A + B)/4`.
type TableRow = (u64, &'static [(i64, i64, &'static str)]);

const TABLE1: &[TableRow] = &[
    (
        7,
        &[
            (1, 2, "(1 ± √-7)/2"),
            (1, 5, "(1 ± √-19)/2"),
            (3, 2, "(√3 ± √-5)/2"),
            (5, 3, "(√5 ± √-7)/2"),
            (13, 4, "(√13 ± √-3)/2"),
            (14, 9, "(√14 ± √-22)/2"),
        ],
    ),
    (
        9,
        &[
            (5, 2, "(√5 ± √-3)/2"),
            (7, 2, "(√7 ± √-1)/2"),
            (7, 3, "(√7 ± √-5)/2"),
        ],
    ),
    (13, &[(1, 2, "(1 ± √-7)/2")]),
    (
        14,
        &[
            (3, 4, "(√3 ± √-13)/2"),
            (5, 2, "(√5 ± √-3)/2"),
            (7, 2, "(√7 ± √-1)/2"),
            (7, 3, "(√7 ± √-5)/2"),
            (19, 5, "(√19 ± √-1)/2"),
            (22, 9, "(√22 ± √-14)/2"),
        ],
    ),
    (15, &[(7, 2, "(√7 ± √-1)/2"), (10, 3, "(√10 ± √-2)/2")]),
    (
        18,
        &[
            (1, 2, "(1 ± √-7)/2"),
            (3, 2, "(√3 ± √-5)/2"),
            (5, 3, "(√5 ± √-7)/2"),
        ],
    ),
    (24, &[(3, 2, "(√3 ± √-5)/2"), (5, 2, "(√5 ± √-3)/2")]),
    (26, &[(7, 2, "(√7 ± √-1)/2")]),
    (30, &[(1, 2, "(1 ± √-7)/2"), (2, 3, "(√2 ± √-10)/2")]),
];

/// Highest index at which twist invariance is checked.
pub const TWIST_HORIZON: u64 = 30;

/// The 26 exceptional `s`-defective pairs for `6 < s ≤ 30`, `s ∉ {8, 10, 12}`.
pub fn table1_registry() -> Vec<TableEntry> {
    TABLE1
        .iter()
        .flat_map(|&(s, rows)| {
            rows.iter().map(move |&(r, q, label)| TableEntry {
                s,
                r,
                q,
                label: label.to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    pub entry: TableEntry,
    pub valid_pair: bool,
    pub report: Option<DefectReport>,
    /// `|L_i(R, Q)| = |L_i(-R, -Q)|` for every `i ≤ 30`.
    pub twist_invariant: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub checks: Vec<TableCheck>,
    pub passed: bool,
}

fn check_entry(entry: &TableEntry) -> TableCheck {
    let Ok(pair) = entry.pair() else {
        return TableCheck {
            entry: entry.clone(),
            valid_pair: false,
            report: None,
            twist_invariant: false,
            passed: false,
        };
    };
    let report = is_defective(&pair, entry.s).ok();
    let plain = pair.sequence(TWIST_HORIZON);
    let twisted = pair.twist().sequence(TWIST_HORIZON);
    let twist_invariant = plain.iter().zip(&twisted).all(|(a, b)| a.abs() == b.abs());
    let passed = twist_invariant && report.as_ref().is_some_and(|r| r.defective);
    TableCheck {
        entry: entry.clone(),
        valid_pair: true,
        report,
        twist_invariant,
        passed,
    }
}

/// Checks every registry entry; results come back in registry order.
pub fn verify_table1() -> Table1Report {
    let checks: Vec<TableCheck> = table1_registry().par_iter().map(check_entry).collect();
    let passed = checks.iter().all(|c| c.passed);
    Table1Report { checks, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(r: i64, q: i64) -> LehmerPair {
        LehmerPair::new(r, q).unwrap()
    }

    #[test]
    fn recurrence_values() {
        let p = pair(1, 2);
        let seq: Vec<i64> = p.sequence(7).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(seq, vec![0, 1, 1, -1, -3, -1, 5, 7]);
        assert_eq!(lehmer_number(&p, 1).unwrap(), BigInt::from(1));
        assert_eq!(lehmer_number(&p, 7).unwrap(), BigInt::from(7));
        assert_eq!(lehmer_number(&p, 13).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn companion_values() {
        let p = pair(1, 2);
        assert_eq!(companion_number(&p, 1).unwrap(), BigInt::from(1));
        assert_eq!(companion_number(&p, 2).unwrap(), BigInt::from(-3));
        assert_eq!(companion_number(&p, 3).unwrap(), BigInt::from(-5));
    }

    #[test]
    fn defect_examples() {
        let r = is_defective(&pair(1, 2), 7).unwrap();
        assert!(r.defective);
        assert_eq!(r.l_value, BigInt::from(7));
        assert_eq!(pair(1, 2).defect_base(), BigInt::from(-7));

        let r = is_defective(&pair(1, 2), 13).unwrap();
        assert!(r.defective);
        assert_eq!(r.l_abs, BigInt::from(1));

        let r = is_defective(&pair(1, -1), 7).unwrap();
        assert!(!r.defective);
        assert_eq!(r.l_value, BigInt::from(13));
        assert_eq!(r.stripped, BigInt::from(13));
    }

    #[test]
    fn rejects_invalid_pairs() {
        assert!(LehmerPair::new(0, 3).is_err());
        assert!(LehmerPair::new(2, 0).is_err());
        assert!(LehmerPair::new(4, 2).is_err());
        assert!(LehmerPair::new(4, 1).is_err());
        // R = Q puts γ/δ among the roots of unity
        assert!(LehmerPair::new(1, 1).is_err());
        assert!(LehmerPair::new(2, 1).is_err());
        assert!(LehmerPair::new(3, 1).is_err());
        assert!(is_defective(&pair(1, 2), 1).is_err());
        assert!(lehmer_number(&pair(1, 2), 0).is_err());
    }

    #[test]
    fn registry_shape() {
        let reg = table1_registry();
        assert_eq!(reg.len(), 26);
        assert!(reg.iter().any(|e| e.s == 30 && e.r == 2 && e.q == 3));
    }

    #[test]
    fn table1_all_defective() {
        let report = verify_table1();
        for c in &report.checks {
            assert!(c.passed, "{:?}", c);
        }
        assert!(report.passed);
    }

    #[test]
    fn roots_reproduce_rq() {
        let p = pair(13, 4);
        let (g, d) = p.roots().unwrap();
        let sum = &g + &d;
        assert_eq!((&sum * &sum).as_integer(), Some(BigInt::from(13)));
        assert_eq!((&g * &d).as_integer(), Some(BigInt::from(4)));
    }
}

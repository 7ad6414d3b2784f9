//! Witnesses for the descent lemma on `X^2 + dY^2 = k^Z`: a primitive
//! representation of `k^Z` is `±(X1 ± Y1√-d)^t` for a primitive
//! representation `X1^2 + dY1^2 = k^Z1` with `Z = Z1 t` and `Z1 | h(-4d)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, exact_sqrt, is_squarefree};
use crate::classforms::class_number;
use crate::error::{Error, Result};
use crate::exactmath::QuadSurd;
use crate::serde_util::bigint_str;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentInstance {
    pub d: u64,
    pub k: u64,
    #[serde(with = "bigint_str")]
    pub x: BigInt,
    #[serde(with = "bigint_str")]
    pub y: BigInt,
    pub z: u32,
}

impl DescentInstance {
    /// Validates the lemma's hypotheses. Only positive coprime `X`, `Y` are
    /// accepted.
    pub fn new(d: u64, k: u64, x: impl Into<BigInt>, y: impl Into<BigInt>, z: u32) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        let bad = |m: String| Err(Error::InvalidInstance(m));
        if d <= 1 || !is_squarefree(d) {
            return bad(format!("d = {d} must be square-free and > 1"));
        }
        if k <= 1 || k.is_multiple_of(2) {
            return bad(format!("k = {k} must be odd and > 1"));
        }
        if d.gcd(&k) != 1 {
            return bad(format!("gcd(d, k) = {} != 1", d.gcd(&k)));
        }
        if z == 0 {
            return bad("Z must be positive".into());
        }
        if !x.is_positive() || !y.is_positive() {
            return bad("X and Y must be positive (outside the supported contract)".into());
        }
        if !x.gcd(&y).is_one() {
            return bad(format!("gcd(X, Y) = {} != 1", x.gcd(&y)));
        }
        if &x * &x + &y * &y * d != num_traits::pow(BigInt::from(k), z as usize) {
            return bad(format!("{x}^2 + {d}·{y}^2 != {k}^{z}"));
        }
        Ok(DescentInstance { d, k, x, y, z })
    }

    fn surd(&self) -> QuadSurd {
        QuadSurd::integral(-(self.d as i64), self.x.clone(), self.y.clone())
            .expect("d validated square-free")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentWitness {
    #[serde(with = "bigint_str")]
    pub x1: BigInt,
    #[serde(with = "bigint_str")]
    pub y1: BigInt,
    pub z1: u32,
    pub t: u32,
    pub l1: i8,
    pub l2: i8,
    /// `h(-4d)`.
    pub class_number: u64,
}

impl DescentWitness {
    /// `l1·(X1 + l2·Y1√-d)^t`.
    pub fn expansion(&self, d: u64) -> QuadSurd {
        let base = QuadSurd::integral(
            -(d as i64),
            self.x1.clone(),
            &self.y1 * BigInt::from(self.l2),
        )
        .expect("d validated square-free");
        let p = base.pow(self.t);
        if self.l1 < 0 {
            p.neg()
        } else {
            p
        }
    }

    /// Re-checks every witness condition against `inst` by exact arithmetic.
    pub fn verify(&self, inst: &DescentInstance) -> bool {
        let k_z1 = num_traits::pow(BigInt::from(inst.k), self.z1 as usize);
        self.x1.is_positive()
            && self.y1.is_positive()
            && self.l1.abs() == 1
            && self.l2.abs() == 1
            && &self.x1 * &self.x1 + &self.y1 * &self.y1 * inst.d == k_z1
            && self.x1.gcd(&self.y1).is_one()
            && self.z1 as u64 * self.t as u64 == inst.z as u64
            && self.class_number.is_multiple_of(self.z1 as u64)
            && self.expansion(inst.d) == inst.surd()
    }
}

/// Primitive representations `X1^2 + dY1^2 = k^z1` with `X1 ≥ 0`, `Y1 ≥ 1`,
/// ordered by `X1`.
pub fn primitive_representations(d: u64, k: u64, z1: u32) -> Vec<(BigInt, BigInt)> {
    let target = num_traits::pow(BigInt::from(k), z1 as usize);
    let d_big = BigInt::from(d);
    let x_max = target.sqrt();
    let mut out = Vec::new();
    let mut x1 = BigInt::from(0);
    while x1 <= x_max {
        let rest = &target - &x1 * &x1;
        if rest.is_positive() && rest.is_multiple_of(&d_big) {
            if let Some(y1) = exact_sqrt(&(&rest / &d_big)) {
                if x1.gcd(&y1).is_one() {
                    out.push((x1.clone(), y1));
                }
            }
        }
        x1 += 1;
    }
    out
}

/// Finds the first witness in `(Z1, X1, l1, l2)` order, signs running `-1`
/// before `+1`.
pub fn descend(inst: &DescentInstance) -> Result<DescentWitness> {
    let h = class_number(-4 * inst.d as i64)?;
    let target = inst.surd();
    for z1 in divisors(inst.z as u64) {
        if h % z1 != 0 {
            continue;
        }
        let z1 = z1 as u32;
        let t = inst.z / z1;
        for (x1, y1) in primitive_representations(inst.d, inst.k, z1) {
            for l1 in [-1i8, 1] {
                for l2 in [-1i8, 1] {
                    let w = DescentWitness {
                        x1: x1.clone(),
                        y1: y1.clone(),
                        z1,
                        t,
                        l1,
                        l2,
                        class_number: h,
                    };
                    if w.expansion(inst.d) == target {
                        debug_assert!(w.verify(inst));
                        return Ok(w);
                    }
                }
            }
        }
    }
    Err(Error::NoWitness {
        d: inst.d,
        k: inst.k,
        x: inst.x.to_string(),
        y: inst.y.to_string(),
        z: inst.z,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLimits {
    pub d_max: u64,
    pub k_max: u64,
    pub z_max: u32,
}

impl Default for GridLimits {
    fn default() -> Self {
        GridLimits {
            d_max: 30,
            k_max: 20,
            z_max: 4,
        }
    }
}

/// Every valid instance in the grid, found by direct enumeration of `X`, `Y`.
pub fn grid_instances(limits: GridLimits) -> Vec<DescentInstance> {
    let mut out = Vec::new();
    for d in 2..=limits.d_max {
        if !is_squarefree(d) {
            continue;
        }
        for k in (3..=limits.k_max).step_by(2) {
            if d.gcd(&k) != 1 {
                continue;
            }
            for z in 1..=limits.z_max {
                let target = k.pow(z);
                let mut y = 1u64;
                while d * y * y < target {
                    let rest = target - d * y * y;
                    let x = rest.isqrt();
                    if x * x == rest && x > 0 && x.gcd(&y) == 1 {
                        out.push(DescentInstance {
                            d,
                            k,
                            x: x.into(),
                            y: y.into(),
                            z,
                        });
                    }
                    y += 1;
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub limits: GridLimits,
    pub instances: usize,
    pub failures: Vec<DescentInstance>,
    pub passed: bool,
}

/// Runs [`descend`] on every grid instance and re-verifies each witness.
pub fn verify_grid(limits: GridLimits) -> GridReport {
    let instances = grid_instances(limits);
    let failures: Vec<DescentInstance> = instances
        .par_iter()
        .filter(|inst| !matches!(descend(inst), Ok(w) if w.verify(inst)))
        .cloned()
        .collect();
    GridReport {
        limits,
        instances: instances.len(),
        passed: failures.is_empty() && !instances.is_empty(),
        failures,
    }
}

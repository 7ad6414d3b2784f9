//! Class numbers of negative discriminants by enumeration of reduced
//! primitive binary quadratic forms, and the analytic bounds that cap them.

use std::f64::consts::PI;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_squarefree, squarefree_part_i64};
use crate::error::{Error, Result};

/// Guard band used for every floating-point comparison in this module.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// The form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// Reduced for negative discriminant: `|b| ≤ a ≤ c`, and `b ≥ 0` on the
    /// boundary `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }
}

impl std::fmt::Display for QuadForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNumberResult {
    pub disc: i64,
    pub h: u64,
    pub forms: Vec<QuadForm>,
}

fn check_discriminant(disc: i64) -> Result<()> {
    if disc >= 0 {
        return Err(Error::InvalidDiscriminant(
            disc.to_string(),
            "must be negative",
        ));
    }
    if !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(
            disc.to_string(),
            "must be congruent to 0 or 1 mod 4",
        ));
    }
    Ok(())
}

/// All reduced primitive forms of discriminant `disc`, ordered by `(a, b)`.
pub fn reduced_forms(disc: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(disc)?;
    let abs = disc.unsigned_abs();
    // a ≤ √(|Δ|/3)
    let a_max = (abs / 3).isqrt() as i64;
    let mut forms = Vec::new();
    for a in 1..=a_max {
        for b in -a + 1..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let form = QuadForm {
                a,
                b,
                c: num / (4 * a),
            };
            if form.is_reduced() && form.is_primitive() {
                forms.push(form);
            }
        }
    }
    Ok(forms)
}

/// `h(Δ)`: the number of reduced primitive forms of discriminant `disc`.
pub fn h_form(disc: i64) -> Result<ClassNumberResult> {
    let forms = reduced_forms(disc)?;
    Ok(ClassNumberResult {
        disc,
        h: forms.len() as u64,
        forms,
    })
}

pub fn class_number(disc: i64) -> Result<u64> {
    Ok(h_form(disc)?.h)
}

/// Discriminant of `Q(√m)` for square-free `m`.
pub fn fundamental_discriminant(m: i64) -> Result<i64> {
    if m == 0 || !is_squarefree(m.unsigned_abs()) {
        return Err(Error::InvalidDiscriminant(
            m.to_string(),
            "radicand must be square-free",
        ));
    }
    Ok(if m.rem_euclid(4) == 1 { m } else { 4 * m })
}

/// Class number of `Q(√m)` for negative square-free `m`.
pub fn field_class_number(m: i64) -> Result<ClassNumberResult> {
    if m >= 0 {
        return Err(Error::InvalidDiscriminant(
            m.to_string(),
            "radicand must be negative",
        ));
    }
    h_form(fundamental_discriminant(m)?)
}

/// Whether `d < 0` is the discriminant of an imaginary quadratic field.
pub fn is_fundamental(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// `(2√|d|/π)(1 + ln √|d|)`, an upper bound for `h(d)` from the class number
/// formula with `L(1, χ_d) ≤ 2 + ln |d|`.
pub fn bound_h(d: i64) -> f64 {
    let root = (d.unsigned_abs() as f64).sqrt();
    2.0 * root / PI * (1.0 + root.ln())
}

/// `(√24 / (π √n))(1 + ln √(24n))`. A value below 1 rules out `2n ≤ h_F`
/// for every `F = Q(√-wn)`.
pub fn g_bound(n: f64) -> f64 {
    24f64.sqrt() / (PI * n.sqrt()) * (1.0 + (24.0 * n).sqrt().ln())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyticBounds {
    pub bound_h: Option<f64>,
    pub g: Option<f64>,
}

pub fn analytic_bounds(disc: Option<i64>, n: Option<u64>) -> AnalyticBounds {
    AnalyticBounds {
        bound_h: disc.map(bound_h),
        g: n.map(|n| g_bound(n as f64)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFactLimits {
    /// Upper end for `h(-4n) < n`.
    pub hn_limit: u64,
    /// `wn` bound for `h_F ≤ 22`.
    pub wide_wn_limit: u64,
    pub wide_h_cap: u64,
    /// `wn` bound for `h_F ≤ 8`.
    pub narrow_wn_limit: u64,
    pub narrow_h_cap: u64,
    /// `g` is checked on `1..=g_samples`.
    pub g_samples: u64,
    /// `bound_h(d) ≥ h(d)` is checked for fundamental `|d| ≤ bound_limit`.
    pub bound_limit: u64,
}

impl Default for ClassFactLimits {
    fn default() -> Self {
        ClassFactLimits {
            hn_limit: 5000,
            wide_wn_limit: 300,
            wide_h_cap: 22,
            narrow_wn_limit: 66,
            narrow_h_cap: 8,
            g_samples: 1000,
            bound_limit: 300,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactCheck {
    pub name: String,
    pub instances: u64,
    pub violations: Vec<String>,
    pub passed: bool,
}

impl FactCheck {
    fn new(name: &str, instances: u64, violations: Vec<String>) -> Self {
        FactCheck {
            name: name.to_string(),
            instances,
            passed: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassFactsReport {
    pub limits: ClassFactLimits,
    pub checks: Vec<FactCheck>,
    pub passed: bool,
}

fn coprime_to_six(n: u64) -> bool {
    n % 2 == 1 && !n.is_multiple_of(3)
}

/// `h(-4n) < n` over square-free `n` with `gcd(n, 6) = 1`, `1 < n ≤ limit`.
pub fn check_hn_below_n(limit: u64) -> FactCheck {
    let ns: Vec<u64> = (2..=limit)
        .filter(|&n| coprime_to_six(n) && is_squarefree(n))
        .collect();
    let violations: Vec<String> = ns
        .par_iter()
        .filter_map(|&n| {
            let h = class_number(-4 * n as i64).expect("valid discriminant");
            (h >= n).then(|| format!("n = {n}: h(-4n) = {h}"))
        })
        .collect();
    FactCheck::new("h(-4n) < n", ns.len() as u64, violations)
}

/// The fields `Q(√-wn)` with `w ∈ {2, 3, 6}`, square-free `n` coprime to 6,
/// `wn ≤ limit`.
pub fn odd_case_fields(limit: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for w in [2u64, 3, 6] {
        for n in 1..=limit / w {
            if coprime_to_six(n) && is_squarefree(n) {
                out.push((w, n));
            }
        }
    }
    out
}

pub fn check_field_class_cap(limit: u64, cap: u64) -> FactCheck {
    let fields = odd_case_fields(limit);
    let violations: Vec<String> = fields
        .par_iter()
        .filter_map(|&(w, n)| {
            let h = field_class_number(-((w * n) as i64))
                .expect("square-free")
                .h;
            (h > cap).then(|| format!("w = {w}, n = {n}: h_F = {h}"))
        })
        .collect();
    FactCheck::new(
        &format!("h_F <= {cap} for wn <= {limit}"),
        fields.len() as u64,
        violations,
    )
}

pub fn check_g_decreasing(samples: u64) -> FactCheck {
    let violations: Vec<String> = (1..samples)
        .filter_map(|n| {
            let (a, b) = (g_bound(n as f64), g_bound((n + 1) as f64));
            (b >= a - FLOAT_TOLERANCE).then(|| format!("g({}) = {b} >= g({n}) = {a}", n + 1))
        })
        .collect();
    FactCheck::new("g strictly decreasing", samples, violations)
}

pub fn check_analytic_bound(limit: u64) -> FactCheck {
    let discs: Vec<i64> = (3..=limit as i64)
        .map(|a| -a)
        .filter(|&d| is_fundamental(d))
        .collect();
    let violations: Vec<String> = discs
        .iter()
        .filter_map(|&d| {
            let h = class_number(d).expect("fundamental");
            ((h as f64) > bound_h(d) + FLOAT_TOLERANCE)
                .then(|| format!("d = {d}: h = {h} > {}", bound_h(d)))
        })
        .collect();
    FactCheck::new("bound_h(d) >= h(d)", discs.len() as u64, violations)
}

pub fn verify_class_facts(limits: ClassFactLimits) -> ClassFactsReport {
    let checks = vec![
        check_hn_below_n(limits.hn_limit),
        check_field_class_cap(limits.wide_wn_limit, limits.wide_h_cap),
        check_field_class_cap(limits.narrow_wn_limit, limits.narrow_h_cap),
        check_g_decreasing(limits.g_samples),
        check_analytic_bound(limits.bound_limit),
    ];
    let passed = checks.iter().all(|c| c.passed);
    ClassFactsReport {
        limits,
        checks,
        passed,
    }
}

/// Discriminant of `F = Q(√-wn)`, either `-wn` or `-4wn`.
pub fn odd_case_discriminant(w: u64, n: u64) -> Result<i64> {
    let m = -((w * n) as i64);
    let (core, _) = squarefree_part_i64(m);
    if core != m {
        return Err(Error::InvalidDiscriminant(
            m.to_string(),
            "wn must be square-free",
        ));
    }
    fundamental_discriminant(m)
}

//! Exact checks of the algebraic identities, power expansions and residue
//! arguments behind the nonexistence proof, plus the square-free reduction
//! and mod-6 necessary conditions on candidate solutions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial_row, is_pm_one_mod6, is_squarefree, squarefree_decompose};
use crate::error::{Error, Result};
use crate::exactmath::{Field, RingElement};
use crate::serde_util::bigint_str;

/// Exponent bookkeeping for the odd case: `ℓ = 2k + e`, `m = 2k' + e'`,
/// `w = 2^e 3^e'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCaseParams {
    pub l: u32,
    pub m: u32,
    pub k: u32,
    pub kp: u32,
    pub e: u32,
    pub ep: u32,
    pub w: u32,
}

impl OddCaseParams {
    pub fn from_exponents(l: u32, m: u32) -> Result<Self> {
        if l == 0 || m == 0 {
            return Err(Error::InvalidParams("exponents must be positive".into()));
        }
        let (k, e) = (l / 2, l % 2);
        let (kp, ep) = (m / 2, m % 2);
        if e == 0 && ep == 0 {
            return Err(Error::InvalidParams(format!(
                "ℓ = {l} and m = {m} are both even"
            )));
        }
        Ok(OddCaseParams {
            l,
            m,
            k,
            kp,
            e,
            ep,
            w: 2u32.pow(e) * 3u32.pow(ep),
        })
    }
}

/// A tuple `(N, X, Y, L, M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CandidateTuple {
    pub n: u64,
    #[serde(with = "bigint_str")]
    pub x: BigInt,
    #[serde(with = "bigint_str")]
    pub y: BigInt,
    pub l: u32,
    pub m: u32,
}

impl CandidateTuple {
    /// Checks `N > 1`, positivity and `gcd(N·X, Y) = 1`.
    pub fn new(n: u64, x: impl Into<BigInt>, y: impl Into<BigInt>, l: u32, m: u32) -> Result<Self> {
        let c = CandidateTuple {
            n,
            x: x.into(),
            y: y.into(),
            l,
            m,
        };
        if n <= 1 {
            return Err(Error::InvalidCandidate(format!("N = {n} must exceed 1")));
        }
        if !c.x.is_positive() || !c.y.is_positive() {
            return Err(Error::InvalidCandidate("X and Y must be positive".into()));
        }
        if !(&c.x * n).gcd(&c.y).is_one() {
            return Err(Error::InvalidCandidate("gcd(N·X, Y) != 1".into()));
        }
        Ok(c)
    }

    fn rhs_power(&self) -> BigInt {
        num_traits::pow(self.y.clone(), self.n as usize)
    }

    /// `N X^2 + 2^L 3^M == Y^N`.
    pub fn satisfies_main(&self) -> bool {
        &self.x * &self.x * self.n + crate::arith::smooth_23(self.l, self.m) == self.rhs_power()
    }

    /// `X^2 + 2^L 3^M == Y^N`.
    pub fn satisfies_variant(&self) -> bool {
        &self.x * &self.x + crate::arith::smooth_23(self.l, self.m) == self.rhs_power()
    }
}

/// Rewrites a tuple with `N = u v^2` as `(u, vX, Y^(v^2), L, M)`.
///
/// `u = 1` is rejected: that case is a solution of `X^2 + 2^L 3^M = Y^N`,
/// whose solutions all have `N ∈ {3, 4}`, against `gcd(N, 6) = 1`.
pub fn squarefree_reduce(c: &CandidateTuple) -> Result<CandidateTuple> {
    let (u, v) = squarefree_decompose(c.n);
    if u == 1 {
        return Err(Error::SquareExponent(c.n));
    }
    let v2 = (v * v) as usize;
    CandidateTuple::new(u, &c.x * v, num_traits::pow(c.y.clone(), v2), c.l, c.m)
}

/// `N`, `X`, `Y` all `≡ ±1 (mod 6)`: necessary for a solution with `L, M ≥ 1`.
pub fn mod6_filter(c: &CandidateTuple) -> bool {
    is_pm_one_mod6(&BigInt::from(c.n)) && is_pm_one_mod6(&c.x) && is_pm_one_mod6(&c.y)
}

// ---------------------------------------------------------------------------
// Binomial sums

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsRow {
    pub t: u64,
    /// `Σ C(t, 2j+1)`.
    #[serde(with = "bigint_str")]
    pub odd_sum: BigInt,
    /// `Σ C(t, 2j+1) (-1)^j`.
    #[serde(with = "bigint_str")]
    pub alternating_sum: BigInt,
    /// Sign `±` in `alternating_sum = ±2^t1`.
    pub sign: i8,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsReport {
    pub t_max: u64,
    pub rows: Vec<SumsRow>,
    pub passed: bool,
}

pub fn sums_row(t: u64) -> SumsRow {
    let t1 = (t - 1) / 2;
    let row = binomial_row(t);
    let mut odd_sum = BigInt::zero();
    let mut alternating_sum = BigInt::zero();
    for j in 0..=t1 {
        let c = &row[(2 * j + 1) as usize];
        odd_sum += c;
        if j % 2 == 0 {
            alternating_sum += c;
        } else {
            alternating_sum -= c;
        }
    }
    let pow_total = BigInt::one() << (t - 1);
    let pow_alt = BigInt::one() << t1;
    let sign = if alternating_sum.is_negative() { -1 } else { 1 };
    let passed = odd_sum == pow_total && alternating_sum.abs() == pow_alt;
    SumsRow {
        t,
        odd_sum,
        alternating_sum,
        sign,
        passed,
    }
}

/// Checks both binomial sum identities for every odd `t ≤ t_max`.
pub fn verify_sums_lemma(t_max: u64) -> Result<SumsReport> {
    if t_max == 0 || t_max.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("t_max = {t_max} must be odd")));
    }
    let rows: Vec<SumsRow> = (1..=t_max).step_by(2).map(sums_row).collect();
    let passed = rows.iter().all(|r| r.passed);
    Ok(SumsReport {
        t_max,
        rows,
        passed,
    })
}

// ---------------------------------------------------------------------------
// Power expansions

/// The five expansion families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpansionKind {
    /// Real and imaginary parts of `(X1 + Y1√-n)^t`.
    QuadraticPower,
    /// `(2α)^t` for `α = A + B√-wn`, in doubled coordinates.
    ScaledAlphaPower,
    /// `α^5` for `α = A + B√-wn`.
    AlphaFifth,
    /// `γ^5` for `γ = A1√w + B1√-n`, with the mod-32 rewriting of the `√-n` part.
    GammaFifth,
    /// `γ^2 = (A1^2 w - B1^2 n) + 2 A1 B1 √-wn`.
    GammaSquare,
}

impl ExpansionKind {
    pub const ALL: [ExpansionKind; 5] = [
        ExpansionKind::QuadraticPower,
        ExpansionKind::ScaledAlphaPower,
        ExpansionKind::AlphaFifth,
        ExpansionKind::GammaFifth,
        ExpansionKind::GammaSquare,
    ];
}

/// Free symbols of an expansion. Half-integers are passed doubled
/// (`a2 = 2A`, etc.).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ExpansionParams {
    Power {
        x1: i64,
        y1: i64,
        n: i64,
        t: u32,
    },
    Alpha {
        a2: i64,
        b2: i64,
        w: i64,
        n: i64,
        t: u32,
    },
    Gamma {
        a1_2: i64,
        b1_2: i64,
        w: i64,
        n: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionOutcome {
    pub kind: ExpansionKind,
    pub params: ExpansionParams,
    /// `(label, ring value, formula value)` for each compared quantity.
    pub comparisons: Vec<(String, String, String)>,
    pub passed: bool,
}

fn rat(n: impl Into<BigInt>, d: i64) -> RingElement {
    RingElement::new(
        Field::rational(),
        [n.into(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
        BigInt::from(d),
    )
}

/// Rational value of coordinate `i` of `x`, as an element of `Q`.
fn coord_q(x: &RingElement, i: usize) -> RingElement {
    let (num, den) = x.coord(i);
    RingElement::new(
        Field::rational(),
        [num, BigInt::zero(), BigInt::zero(), BigInt::zero()],
        den,
    )
}

/// `Σ_{j ≤ t1} C(t, 2j + parity) a^{t-2j-1} b^{2j} c^j` over `Q`.
fn binomial_sum(
    t: u32,
    parity: u32,
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
) -> RingElement {
    let row = binomial_row(t as u64);
    let t1 = (t - 1) / 2;
    let mut acc = rat(0, 1);
    for j in 0..=t1 {
        let idx = (2 * j + parity) as usize;
        if idx > t as usize {
            continue;
        }
        let term = rat(row[idx].clone(), 1)
            .mul_ref(&a.pow(t - 2 * j - 1))
            .mul_ref(&b.pow(2 * j))
            .mul_ref(&c.pow(j));
        acc = acc.add_ref(&term);
    }
    acc
}

fn field_for(d1: i64, d2: i64) -> Result<Field> {
    Field::new(d1, d2)
}

fn compare(
    out: &mut Vec<(String, String, String)>,
    label: &str,
    lhs: &RingElement,
    rhs: &RingElement,
) -> bool {
    out.push((label.to_string(), lhs.to_string(), rhs.to_string()));
    lhs == rhs
}

/// Evaluates both sides of one expansion family exactly and compares them.
pub fn expansion_check(kind: ExpansionKind, params: ExpansionParams) -> Result<ExpansionOutcome> {
    let mut cmp = Vec::new();
    let passed = match (kind, params) {
        (ExpansionKind::QuadraticPower, ExpansionParams::Power { x1, y1, n, t }) => {
            odd_exponent(t)?;
            let f = field_for(1, -n)?;
            let lhs = RingElement::from_ints(f, [x1, 0, y1, 0]).pow(t);
            let x = rat(x1, 1);
            let c = rat(-n * y1 * y1, 1);
            let one = rat(1, 1);
            // Σ C(t,2j) X1^{t-2j} (-nY1^2)^j, both with and without X1 factored out
            let re_full = binomial_sum_even_full(t, &x, &c);
            let re_factored = x.mul_ref(&binomial_sum(t, 0, &x, &one, &c));
            let im = rat(y1, 1).mul_ref(&binomial_sum(t, 1, &x, &one, &c));
            let a = compare(&mut cmp, "real", &coord_q(&lhs, 0), &re_full);
            let b = compare(&mut cmp, "real (factored)", &coord_q(&lhs, 0), &re_factored);
            let d = compare(&mut cmp, "imaginary", &coord_q(&lhs, 2), &im);
            a && b && d
        }
        (ExpansionKind::ScaledAlphaPower, ExpansionParams::Alpha { a2, b2, w, n, t }) => {
            odd_exponent(t)?;
            let wn = w * n;
            let f = field_for(1, -wn)?;
            let lhs = RingElement::from_ints(f, [a2, 0, b2, 0]).pow(t);
            let (a, b, c) = (rat(a2, 1), rat(b2, 1), rat(-wn, 1));
            let re = a.mul_ref(&binomial_sum(t, 0, &a, &b, &c));
            let im = b.mul_ref(&binomial_sum(t, 1, &a, &b, &c));
            let x = compare(&mut cmp, "real", &coord_q(&lhs, 0), &re);
            let y = compare(&mut cmp, "imaginary", &coord_q(&lhs, 2), &im);
            x && y
        }
        (ExpansionKind::AlphaFifth, ExpansionParams::Alpha { a2, b2, w, n, .. }) => {
            let wn = w * n;
            let f = field_for(1, -wn)?;
            let lhs = RingElement::from_halves(f, [a2, 0, b2, 0]).pow(5);
            let (a, b, c) = (rat(a2, 2), rat(b2, 2), rat(-wn, 1));
            let re = a.mul_ref(&binomial_sum(5, 0, &a, &b, &c));
            let im = b.mul_ref(&binomial_sum(5, 1, &a, &b, &c));
            let x = compare(&mut cmp, "real", &coord_q(&lhs, 0), &re);
            let y = compare(&mut cmp, "imaginary", &coord_q(&lhs, 2), &im);
            x && y
        }
        (ExpansionKind::GammaFifth, ExpansionParams::Gamma { a1_2, b1_2, w, n }) => {
            let f = Field::biquadratic_e(w, n)?;
            let lhs = RingElement::from_halves(f, [0, a1_2, b1_2, 0]).pow(5);
            let (a, b) = (rat(a1_2, 2), rat(b1_2, 2));
            let (wq, nq) = (rat(w, 1), rat(n, 1));
            let a2 = a.pow(2);
            let b2 = b.pow(2);
            let cross = rat(10, 1)
                .mul_ref(&a2)
                .mul_ref(&b2)
                .mul_ref(&wq)
                .mul_ref(&nq);
            let a4w2 = a2.pow(2).mul_ref(&wq.pow(2));
            let b4n2 = b2.pow(2).mul_ref(&nq.pow(2));
            let sqrt_w_part = a.mul_ref(&(&a4w2 - &cross + rat(5, 1).mul_ref(&b4n2)));
            let sqrt_n_part = b.mul_ref(&(rat(5, 1).mul_ref(&a4w2) - &cross + &b4n2));
            let zero = rat(0, 1);
            let p = compare(&mut cmp, "√w part", &coord_q(&lhs, 1), &sqrt_w_part);
            let q = compare(&mut cmp, "√-n part", &coord_q(&lhs, 2), &sqrt_n_part);
            let r = compare(&mut cmp, "rational part", &coord_q(&lhs, 0), &zero);
            let s = compare(&mut cmp, "√-wn part", &coord_q(&lhs, 3), &zero);
            // 32·(√-n part) = (2B1)[4((2A1)^2 w)^2 + ((2A1)^2 w - (2B1)^2 n)^2 - 8 (2A1)^2 (2B1)^2 wn]
            let big_p = rat(a1_2 * a1_2 * w, 1);
            let big_q = rat(b1_2 * b1_2 * n, 1);
            let bracket = rat(4, 1).mul_ref(&big_p.pow(2)) + (&big_p - &big_q).pow(2)
                - rat(8, 1).mul_ref(&big_p).mul_ref(&big_q);
            let rewritten = rat(b1_2, 1).mul_ref(&bracket);
            let u = compare(
                &mut cmp,
                "32·(√-n part), mod-32 form",
                &rat(32, 1).mul_ref(&coord_q(&lhs, 2)),
                &rewritten,
            );
            p && q && r && s && u
        }
        (ExpansionKind::GammaSquare, ExpansionParams::Gamma { a1_2, b1_2, w, n }) => {
            let f = Field::biquadratic_e(w, n)?;
            let lhs = RingElement::from_halves(f, [0, a1_2, b1_2, 0]).pow(2);
            let (a, b) = (rat(a1_2, 2), rat(b1_2, 2));
            let big_a = a.pow(2).mul_ref(&rat(w, 1)) - b.pow(2).mul_ref(&rat(n, 1));
            let big_b = rat(2, 1).mul_ref(&a).mul_ref(&b);
            let x = compare(&mut cmp, "A", &coord_q(&lhs, 0), &big_a);
            let y = compare(&mut cmp, "B", &coord_q(&lhs, 3), &big_b);
            let z = compare(&mut cmp, "√w part", &coord_q(&lhs, 1), &rat(0, 1));
            let v = compare(&mut cmp, "√-n part", &coord_q(&lhs, 2), &rat(0, 1));
            x && y && z && v
        }
        (kind, params) => {
            return Err(Error::InvalidParams(format!(
                "parameters {params:?} do not fit expansion {kind:?}"
            )))
        }
    };
    Ok(ExpansionOutcome {
        kind,
        params,
        comparisons: cmp,
        passed,
    })
}

/// `Σ_{j ≤ t1} C(t, 2j) x^{t-2j} c^j`.
fn binomial_sum_even_full(t: u32, x: &RingElement, c: &RingElement) -> RingElement {
    let row = binomial_row(t as u64);
    let mut acc = rat(0, 1);
    for j in 0..=(t - 1) / 2 {
        let term = rat(row[(2 * j) as usize].clone(), 1)
            .mul_ref(&x.pow(t - 2 * j))
            .mul_ref(&c.pow(j));
        acc = acc.add_ref(&term);
    }
    acc
}

fn odd_exponent(t: u32) -> Result<()> {
    if t % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("t = {t} must be odd")))
    }
}

/// Square-free `n ≤ 20` coprime to `w` (so that `wn` is square-free too).
fn sample_n(rng: &mut ChaCha8Rng, w: i64) -> i64 {
    loop {
        let n: i64 = rng.random_range(1..=20);
        if is_squarefree(n as u64) && n.gcd(&w) == 1 {
            return n;
        }
    }
}

fn sample_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// Draws a parameter tuple for `kind`: `|values| ≤ 20`, odd `t ≤ 15`.
pub fn sample_params(kind: ExpansionKind, rng: &mut ChaCha8Rng) -> ExpansionParams {
    let t = 2 * rng.random_range(0..8u32) + 1;
    let w = [2i64, 3, 6][rng.random_range(0..3usize)];
    match kind {
        ExpansionKind::QuadraticPower => ExpansionParams::Power {
            x1: sample_nonzero(rng, 20),
            y1: sample_nonzero(rng, 20),
            n: sample_n(rng, 1),
            t,
        },
        ExpansionKind::ScaledAlphaPower | ExpansionKind::AlphaFifth => ExpansionParams::Alpha {
            a2: sample_nonzero(rng, 40),
            b2: sample_nonzero(rng, 40),
            w,
            n: sample_n(rng, w),
            t: if kind == ExpansionKind::AlphaFifth {
                5
            } else {
                t
            },
        },
        ExpansionKind::GammaFifth | ExpansionKind::GammaSquare => ExpansionParams::Gamma {
            a1_2: sample_nonzero(rng, 40),
            b1_2: sample_nonzero(rng, 40),
            w,
            n: sample_n(rng, w),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionBatch {
    pub kind: ExpansionKind,
    pub seed: u64,
    pub samples: usize,
    pub failures: Vec<ExpansionOutcome>,
    pub passed: bool,
}

/// Runs `samples` seeded random instances of one family. The parameter
/// stream depends only on `(seed, kind)`.
pub fn sampled_expansions(kind: ExpansionKind, samples: usize, seed: u64) -> ExpansionBatch {
    let stream = ExpansionKind::ALL.iter().position(|k| *k == kind).unwrap() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let params: Vec<ExpansionParams> = (0..samples)
        .map(|_| sample_params(kind, &mut rng))
        .collect();
    let failures: Vec<ExpansionOutcome> = params
        .par_iter()
        .map(|&p| expansion_check(kind, p).expect("sampled parameters are well-formed"))
        .filter(|o| !o.passed)
        .collect();
    ExpansionBatch {
        kind,
        seed,
        samples,
        passed: failures.is_empty(),
        failures,
    }
}

// ---------------------------------------------------------------------------
// Residue arguments

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSuite {
    pub name: String,
    pub claim: String,
    pub grid_size: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

impl ResidueSuite {
    fn new(name: &str, claim: &str, grid_size: usize, violations: Vec<String>) -> Self {
        ResidueSuite {
            name: name.to_string(),
            claim: claim.to_string(),
            grid_size,
            passed: grid_size > 0 && violations.is_empty(),
            violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub suites: Vec<ResidueSuite>,
    pub passed: bool,
}

const ODD_MOD8: [i64; 4] = [1, 3, 5, 7];

/// `S = 2^{4ℓ}3^{4m} - 10·2^{2ℓ}3^{2m} n Y1^2 + 5 n^2 Y1^4 ≡ 5 (mod 8)` for odd
/// `n`, `Y1` and `ℓ, m ∈ {1, 2, 3}`.
pub fn s_mod8_suite() -> ResidueSuite {
    let mut grid = 0;
    let mut violations = Vec::new();
    for n in ODD_MOD8 {
        for y1 in ODD_MOD8 {
            for l in 1..=3u32 {
                for m in 1..=3u32 {
                    grid += 1;
                    let x1 = crate::arith::smooth_23(l, m);
                    let x1_sq = &x1 * &x1;
                    let ny = BigInt::from(n * y1 * y1);
                    let s = &x1_sq * &x1_sq - &x1_sq * &ny * 10 + &ny * &ny * 5;
                    let r = crate::arith::modulo(&s, 8);
                    if r != 5 {
                        violations.push(format!("n≡{n}, Y1≡{y1}, ℓ={l}, m={m}: S≡{r}"));
                    }
                }
            }
        }
    }
    ResidueSuite::new("S mod 8", "S ≡ 5 (mod 8)", grid, violations)
}

/// Admissible `(n, 2A1, 2B1)` residues mod 32 for the half-integral case:
/// `n ≡ 1 (mod 8)` among the requested residues, `2A1`, `2B1` odd.
pub fn mod32_grid(n_residues: &[i64]) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for &n in n_residues {
        if n.rem_euclid(8) != 1 {
            continue;
        }
        for a in (1..32).step_by(2) {
            for b in (1..32).step_by(2) {
                if (a * a) % 8 == 1 && (b * b) % 8 == 1 {
                    out.push((n, a, b));
                }
            }
        }
    }
    out
}

/// `4((2A1)^2 w)^2 + ((2A1)^2 w - (2B1)^2 n)^2 - 8(2A1)^2(2B1)^2 wn` reduced mod 32.
pub fn mod32_expression(w: i64, n: i64, a: i64, b: i64) -> i64 {
    let p = a * a * w;
    let q = b * b * n;
    (4 * p * p + (p - q) * (p - q) - 8 * p * q).rem_euclid(32)
}

pub fn mod32_suite(n_residues: &[i64]) -> ResidueSuite {
    let grid = mod32_grid(n_residues);
    let violations = grid
        .iter()
        .filter_map(|&(n, a, b)| {
            let r = mod32_expression(3, n, a, b);
            (r != 16).then(|| format!("n≡{n}, 2A1≡{a}, 2B1≡{b}: {r}"))
        })
        .collect();
    ResidueSuite::new(
        "mod 32",
        "expression ≡ 16 (mod 32), never 0",
        grid.len(),
        violations,
    )
}

fn t5_quartic(a1: i64, b1: i64, w: i64, n: i64) -> i64 {
    let (a2, b2) = (a1 * a1, b1 * b1);
    (a2 * a2 * w * w - 10 * a2 * b2 * w * n + 5 * b2 * b2 * n * n).rem_euclid(8)
}

/// `A1^4 w^2 - 10 A1^2 B1^2 wn + 5 B1^4 n^2 ≠ ±1 (mod 8)` when `A1` is even,
/// `B1` and `n` odd.
pub fn t5_even_a1_suite() -> ResidueSuite {
    let mut grid = 0;
    let mut violations = Vec::new();
    for w in [2i64, 3, 6] {
        for a1 in [0i64, 2, 4, 6] {
            for b1 in ODD_MOD8 {
                for n in ODD_MOD8 {
                    grid += 1;
                    let r = t5_quartic(a1, b1, w, n);
                    if r == 1 || r == 7 {
                        violations.push(format!("w={w}, A1≡{a1}, B1≡{b1}, n≡{n}: {r}"));
                    }
                }
            }
        }
    }
    ResidueSuite::new(
        "t = 5, k > 0",
        "quartic ≢ ±1 (mod 8) for even A1",
        grid,
        violations,
    )
}

/// The same quartic with `k = 0`: `w ∈ {2, 6}`, `A1`, `B1`, `n` odd, where
/// `2wn ≡ 4 (mod 8)`.
pub fn t5_even_w_suite() -> ResidueSuite {
    let mut grid = 0;
    let mut violations = Vec::new();
    for w in [2i64, 6] {
        for a1 in ODD_MOD8 {
            for b1 in ODD_MOD8 {
                for n in ODD_MOD8 {
                    grid += 1;
                    let r = t5_quartic(a1, b1, w, n);
                    if r == 1 || r == 7 || (2 * w * n).rem_euclid(8) != 4 {
                        violations.push(format!("w={w}, A1≡{a1}, B1≡{b1}, n≡{n}: {r}"));
                    }
                }
            }
        }
    }
    ResidueSuite::new(
        "t = 5, k = 0",
        "quartic ≢ ±1 (mod 8) for even w, odd A1",
        grid,
        violations,
    )
}

/// Half-integral `γ` with `n ≡ 5 (mod 8)` forces `8 | 4γδ = 3(2A1)^2 + (2B1)^2 n`.
pub fn half_integral_n5_suite() -> ResidueSuite {
    let mut grid = 0;
    let mut violations = Vec::new();
    for a in ODD_MOD8 {
        for b in ODD_MOD8 {
            grid += 1;
            let v = (3 * a * a + 5 * b * b).rem_euclid(8);
            if v != 0 {
                violations.push(format!("2A1≡{a}, 2B1≡{b}: 4γδ≡{v}"));
            }
        }
    }
    ResidueSuite::new("n ≡ 5 (mod 8) exclusion", "8 | 4γδ", grid, violations)
}

/// With `w = 3`, `n ≡ 1 (mod 8)`: `4 L_3 = 9(2A1)^2 - (2B1)^2 n ≡ 0 (mod 8)`.
pub fn l3_even_suite() -> ResidueSuite {
    let mut grid = 0;
    let mut violations = Vec::new();
    for a in ODD_MOD8 {
        for b in ODD_MOD8 {
            grid += 1;
            let v = (9 * a * a - b * b).rem_euclid(8);
            if v != 0 {
                violations.push(format!("2A1≡{a}, 2B1≡{b}: 4L_3≡{v}"));
            }
        }
    }
    ResidueSuite::new("4 L_3 mod 8", "2 | L_3", grid, violations)
}

/// Neither binomial sum vanishes mod 3 for odd `t ≤ t_max`.
pub fn sums_mod3_suite(t_max: u64) -> ResidueSuite {
    let rows: Vec<SumsRow> = (1..=t_max).step_by(2).map(sums_row).collect();
    let three = BigInt::from(3);
    let violations = rows
        .iter()
        .filter(|r| r.odd_sum.is_multiple_of(&three) || r.alternating_sum.is_multiple_of(&three))
        .map(|r| format!("t = {}", r.t))
        .collect();
    ResidueSuite::new(
        "binomial sums mod 3",
        "Σ C(t,2j+1)(±1)^j ≢ 0 (mod 3)",
        rows.len(),
        violations,
    )
}

/// Every residue suite, each over its full grid.
pub fn residue_checks() -> ResidueReport {
    let suites = vec![
        s_mod8_suite(),
        mod32_suite(&[1, 9, 17, 25]),
        t5_even_a1_suite(),
        t5_even_w_suite(),
        half_integral_n5_suite(),
        l3_even_suite(),
        sums_mod3_suite(99),
    ];
    let passed = suites.iter().all(|s| s.passed);
    ResidueReport { suites, passed }
}

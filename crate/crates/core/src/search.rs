//! Bounded exhaustive search for `N X^2 + 2^L 3^M = Y^N` (main) and
//! `X^2 + 2^L 3^M = Y^N` (variant).
//!
//! The sweep runs `Y` outermost so `Y^N` is computed once per `(Y, N)`. Cells
//! whose numbers fit in `u128` take a machine-integer path; the rest fall back
//! to big integers. Perfect squares are detected by integer square root and
//! re-multiplication.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, exact_sqrt_u128, is_pm_one_mod6};
use crate::error::{Error, Result};
use crate::identities::CandidateTuple;
use crate::serde_util::duration_ms;

/// Which integer path evaluates a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmetic {
    /// `u128` whenever `Y^N` fits, big integers otherwise.
    #[default]
    Auto,
    /// Big integers for every cell.
    BigOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n_max: u32,
    pub y_max: u64,
    pub l_max: u32,
    pub m_max: u32,
    /// `false`: `N X^2 + 2^L 3^M = Y^N`; `true`: `X^2 + 2^L 3^M = Y^N`.
    pub variant: bool,
    /// Prune with the mod-6 necessary conditions.
    pub filtered: bool,
    pub jobs: usize,
    /// Start `L` and `M` at 0 instead of 1. Exploratory only; disables the
    /// mod-6 pruning, which needs both exponents positive.
    pub allow_zero_exponents: bool,
    #[serde(default)]
    pub arithmetic: Arithmetic,
}

impl SearchConfig {
    pub fn main(n_max: u32, y_max: u64, l_max: u32, m_max: u32) -> Self {
        SearchConfig {
            n_max,
            y_max,
            l_max,
            m_max,
            variant: false,
            filtered: true,
            jobs: 1,
            allow_zero_exponents: false,
            arithmetic: Arithmetic::Auto,
        }
    }

    pub fn variant(n_max: u32, y_max: u64, l_max: u32, m_max: u32) -> Self {
        SearchConfig {
            variant: true,
            ..Self::main(n_max, y_max, l_max, m_max)
        }
    }

    pub fn with_filter(self, filtered: bool) -> Self {
        SearchConfig { filtered, ..self }
    }

    pub fn with_jobs(self, jobs: usize) -> Self {
        SearchConfig { jobs, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 || self.y_max == 0 || self.l_max == 0 || self.m_max == 0 {
            return Err(Error::InvalidParams(
                "all search bounds must be at least 1".into(),
            ));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParams("jobs must be at least 1".into()));
        }
        Ok(())
    }

    /// Smallest exponent swept: the variant's catalog concerns `N ≥ 3`, since
    /// `N = 2` is a factorisation of `2^L 3^M` with solutions in every range.
    pub fn n_min(&self) -> u32 {
        if self.variant {
            3
        } else {
            2
        }
    }

    fn exponent_min(&self) -> u32 {
        if self.allow_zero_exponents {
            0
        } else {
            1
        }
    }

    fn prunes(&self) -> bool {
        self.filtered && !self.allow_zero_exponents
    }

    /// Whether the mod-6 pruning admits the `(Y, N)` column.
    pub fn admits(&self, y: u64, n: u32) -> bool {
        if !self.prunes() {
            return true;
        }
        let y_ok = matches!(y % 6, 1 | 5);
        if self.variant {
            y_ok
        } else {
            y_ok && matches!(n % 6, 1 | 5)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub solutions: Vec<CandidateTuple>,
    /// Cells `(Y, N, L, M)` admitted by the pruning with `2^L 3^M < Y^N`.
    pub candidates_tested: u64,
    #[serde(with = "duration_ms")]
    pub elapsed: Duration,
    /// Variant solutions whose minimal exponent is outside `{3, 4}`.
    pub catalog_conflicts: Vec<CandidateTuple>,
}

/// Smallest divisor `e ≥ 3` of `n`: a solution with exponent `n` is also one
/// with exponent `e` and base `Y^(n/e)`.
pub fn minimal_exponent(n: u64) -> u64 {
    (3..=n).find(|e| n.is_multiple_of(*e)).unwrap_or(n)
}

struct Column {
    solutions: Vec<CandidateTuple>,
    tested: u64,
}

fn accept(cfg: &SearchConfig, n: u32, x: BigInt, y: u64, l: u32, m: u32) -> Option<CandidateTuple> {
    if x.is_zero() {
        return None;
    }
    let coeff = if cfg.variant { 1 } else { n as u64 };
    if !(&x * coeff).gcd(&BigInt::from(y)).is_one() {
        return None;
    }
    if cfg.prunes() && !is_pm_one_mod6(&x) {
        return None;
    }
    let c = CandidateTuple {
        n: n as u64,
        x,
        y: y.into(),
        l,
        m,
    };
    let holds = if cfg.variant {
        c.satisfies_variant()
    } else {
        c.satisfies_main()
    };
    assert!(holds, "search produced a non-solution {c:?}");
    Some(c)
}

fn scan_column_u128(cfg: &SearchConfig, y: u64, n: u32, y_pow: u128, out: &mut Column) {
    let coeff = if cfg.variant { 1 } else { n as u128 };
    let lo = cfg.exponent_min();
    for l in lo..=cfg.l_max {
        let Some(two_l) = 1u128.checked_shl(l).filter(|&v| l < 128 && v < y_pow) else {
            break;
        };
        let mut c = two_l;
        if lo == 1 {
            c = match c.checked_mul(3) {
                Some(v) => v,
                None => break,
            };
        }
        let mut m = lo;
        while m <= cfg.m_max && c < y_pow {
            out.tested += 1;
            let diff = y_pow - c;
            if diff.is_multiple_of(coeff) {
                if let Some(x) = exact_sqrt_u128(diff / coeff) {
                    if let Some(s) = accept(cfg, n, BigInt::from(x), y, l, m) {
                        out.solutions.push(s);
                    }
                }
            }
            m += 1;
            c = match c.checked_mul(3) {
                Some(v) => v,
                None => break,
            };
        }
    }
}

fn scan_column_big(cfg: &SearchConfig, y: u64, n: u32, y_pow: &BigInt, out: &mut Column) {
    let coeff = BigInt::from(if cfg.variant { 1 } else { n });
    let lo = cfg.exponent_min();
    for l in lo..=cfg.l_max {
        let mut c = (BigInt::one() << l) * num_traits::pow(BigInt::from(3), lo as usize);
        if &c >= y_pow {
            break;
        }
        let mut m = lo;
        while m <= cfg.m_max && &c < y_pow {
            out.tested += 1;
            let diff = y_pow - &c;
            let (q, r) = diff.div_rem(&coeff);
            if r.is_zero() {
                if let Some(x) = exact_sqrt(&q) {
                    if let Some(s) = accept(cfg, n, x, y, l, m) {
                        out.solutions.push(s);
                    }
                }
            }
            m += 1;
            c *= 3;
        }
    }
}

fn scan_y(cfg: &SearchConfig, y: u64) -> Column {
    let mut col = Column {
        solutions: Vec::new(),
        tested: 0,
    };
    for n in cfg.n_min()..=cfg.n_max {
        if !cfg.admits(y, n) {
            continue;
        }
        let small = match cfg.arithmetic {
            Arithmetic::Auto => (y as u128).checked_pow(n),
            Arithmetic::BigOnly => None,
        };
        match small {
            Some(y_pow) => scan_column_u128(cfg, y, n, y_pow, &mut col),
            None => {
                let y_pow = num_traits::pow(BigInt::from(y), n as usize);
                scan_column_big(cfg, y, n, &y_pow, &mut col);
            }
        }
    }
    col
}

/// Runs the sweep over `Y ∈ [2, y_max]`, `N ∈ [n_min, n_max]`, `L ∈ [1, l_max]`,
/// `M ∈ [1, m_max]` on `cfg.jobs` workers. Output order is `(Y, N, L, M)`
/// regardless of the worker count.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let columns: Vec<Column> = pool.install(|| {
        (2..=cfg.y_max.max(1))
            .collect::<Vec<u64>>()
            .par_iter()
            .map(|&y| scan_y(cfg, y))
            .collect()
    });
    let mut solutions = Vec::new();
    let mut candidates_tested = 0;
    for col in columns {
        candidates_tested += col.tested;
        solutions.extend(col.solutions);
    }
    let catalog_conflicts = if cfg.variant {
        solutions
            .iter()
            .filter(|s| !matches!(minimal_exponent(s.n), 3 | 4))
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    Ok(SearchReport {
        config: *cfg,
        solutions,
        candidates_tested,
        elapsed: start.elapsed(),
        catalog_conflicts,
    })
}

pub fn search_main(cfg: &SearchConfig) -> Result<SearchReport> {
    if cfg.variant {
        return Err(Error::InvalidParams(
            "search_main needs variant = false".into(),
        ));
    }
    run_search(cfg)
}

pub fn search_variant(cfg: &SearchConfig) -> Result<SearchReport> {
    if !cfg.variant {
        return Err(Error::InvalidParams(
            "search_variant needs variant = true".into(),
        ));
    }
    run_search(cfg)
}

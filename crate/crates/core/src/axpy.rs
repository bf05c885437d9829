// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! The `y <- a*x + y` accumulation study across float and unum formats.
//!
//! Each iteration multiplies exactly, rounds the product into the lane's
//! format and accumulates. Float lanes round to nearest even; unum lanes
//! encode the product tightly, add with implicit optimize and optionally
//! unify every `k` iterations. An exact dyadic reference runs alongside.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::add;
use crate::codec::{encode_tight, PackedUbound};
use crate::compress::{unify_with, CoverPolicy};
use crate::env::Environment;
use crate::error::{Result, UnumError};
use crate::numeric::{Dyadic, ExtendedReal, GeneralInterval};
use crate::softfloat::FloatFormat;

/// A number format under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lane {
    F16,
    F32,
    Unum(Environment),
}

impl Lane {
    pub fn float_format(&self) -> Option<FloatFormat> {
        match self {
            Lane::F16 => Some(FloatFormat::BINARY16),
            Lane::F32 => Some(FloatFormat::BINARY32),
            Lane::Unum(_) => None,
        }
    }

    /// The four lanes of the default study.
    pub fn defaults() -> Vec<Lane> {
        vec![
            Lane::F16,
            Lane::F32,
            Lane::Unum(Environment::new(3, 4).expect("valid")),
            Lane::Unum(Environment::ALU),
        ]
    }
}

impl fmt::Display for Lane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lane::F16 => f.write_str("f16"),
            Lane::F32 => f.write_str("f32"),
            Lane::Unum(env) => write!(f, "u{}.{}", env.a(), env.b()),
        }
    }
}

impl FromStr for Lane {
    type Err = UnumError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || UnumError::Parse { what: "lane", input: s.to_string() };
        match s.trim() {
            "f16" => Ok(Lane::F16),
            "f32" => Ok(Lane::F32),
            t => {
                let rest = t.strip_prefix('u').ok_or_else(bad)?;
                let (a, b) = rest.split_once('.').ok_or_else(bad)?;
                let a = a.parse().map_err(|_| bad())?;
                let b = b.parse().map_err(|_| bad())?;
                Ok(Lane::Unum(Environment::new(a, b)?))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    I,
    II,
    III,
}

impl Phase {
    pub const ALL: [Phase; 3] = [Phase::I, Phase::II, Phase::III];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::I => "I",
            Phase::II => "II",
            Phase::III => "III",
        })
    }
}

/// Iteration counts and coefficient generator settings.
///
/// Phase I draws `a` and `x` from `{k / small_denominator : 1 <= k <= small_max}`.
/// Phase II uses `a = 2^large_exp + r * 2^(large_exp - 8)` with `|r| <= large_spread`
/// and a phase I style `x`. Phase III draws both from binary32 values in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxpySchedule {
    pub iters: [usize; 3],
    pub seed: u64,
    pub small_denominator: u32,
    pub small_max: u32,
    pub large_exp: i64,
    pub large_spread: i64,
}

impl Default for AxpySchedule {
    fn default() -> Self {
        AxpySchedule {
            iters: [40, 40, 40],
            seed: 1,
            small_denominator: 4,
            small_max: 4,
            large_exp: 30,
            large_spread: 64,
        }
    }
}

/// One iteration's inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub phase: Phase,
    pub a: Dyadic,
    pub x: Dyadic,
}

impl AxpySchedule {
    pub fn with_seed(seed: u64) -> Self {
        AxpySchedule { seed, ..Default::default() }
    }

    pub fn total(&self) -> usize {
        self.iters.iter().sum()
    }

    /// The deterministic coefficient sequence.
    pub fn steps(&self) -> Vec<Step> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let den = self.small_denominator.max(1);
        let shift = den.trailing_zeros() as i64;
        assert!(den.is_power_of_two(), "phase I denominator must be a power of two");
        let small =
            |rng: &mut ChaCha8Rng| Dyadic::new(rng.gen_range(1..=self.small_max.max(1)) as i64, -shift);
        let mut steps = Vec::with_capacity(self.total());
        for (phase, &n) in Phase::ALL.iter().zip(&self.iters) {
            for _ in 0..n {
                let (a, x) = match phase {
                    Phase::I => (small(&mut rng), small(&mut rng)),
                    Phase::II => {
                        let r = rng.gen_range(-self.large_spread..=self.large_spread);
                        let a = &Dyadic::pow2(self.large_exp) + &Dyadic::new(r, self.large_exp - 8);
                        (a, small(&mut rng))
                    }
                    Phase::III => (unit_f32(&mut rng), unit_f32(&mut rng)),
                };
                steps.push(Step { phase: *phase, a, x });
            }
        }
        steps
    }

    /// Exact values of `y` after each iteration.
    pub fn reference(&self) -> Vec<Dyadic> {
        let mut y = Dyadic::zero();
        self.steps()
            .iter()
            .map(|s| {
                y = &y + &(&s.a * &s.x);
                y.clone()
            })
            .collect()
    }
}

/// Uniform binary32 value in `[0, 1)` with 24 random bits.
fn unit_f32(rng: &mut ChaCha8Rng) -> Dyadic {
    Dyadic::new((rng.gen::<u32>() >> 8) as i64, -24)
}

/// One lane's state after one iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    /// 1-based iteration number.
    pub iteration: usize,
    pub phase: Phase,
    /// Stored size: the packed width for unums, the format width for floats.
    pub bits: u32,
    /// `|value - ref| / |ref|`; for unums the interval midpoint is the value.
    pub rel_error: f64,
    /// Exact interval width; zero for floats, `None` if unbounded.
    pub width: Option<Dyadic>,
    pub overflow: bool,
    /// The exact reference lies in the lane's value (floats: equals it).
    pub contains_reference: bool,
}

impl Sample {
    pub fn width_f64(&self) -> f64 {
        self.width.as_ref().map_or(f64::INFINITY, Dyadic::to_f64)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaneResult {
    pub lane: Lane,
    pub unify_every: Option<usize>,
    pub samples: Vec<Sample>,
}

fn rel_error(value: &ExtendedReal, reference: &Dyadic) -> f64 {
    match value {
        ExtendedReal::Finite(v) if reference.is_zero() => {
            if v.is_zero() {
                0.0
            } else {
                f64::INFINITY
            }
        }
        ExtendedReal::Finite(v) => ((v - reference).to_f64() / reference.to_f64()).abs(),
        ExtendedReal::NaN => f64::NAN,
        _ => f64::INFINITY,
    }
}

fn run_float(fmt: FloatFormat, steps: &[Step], reference: &[Dyadic]) -> Vec<Sample> {
    let mut y = ExtendedReal::Finite(Dyadic::zero());
    let mut samples = Vec::with_capacity(steps.len());
    for (i, (s, r)) in steps.iter().zip(reference).enumerate() {
        let a = fmt.round(&s.a);
        let x = fmt.round(&s.x);
        let p = fmt.mul(&a.value, &x.value);
        let sum = fmt.add(&p.value, &y);
        y = sum.value;
        let overflow = a.overflow || x.overflow || p.overflow || sum.overflow || y.finite().is_none();
        samples.push(Sample {
            iteration: i + 1,
            phase: s.phase,
            bits: fmt.width(),
            rel_error: rel_error(&y, r),
            width: Some(Dyadic::zero()),
            overflow,
            contains_reference: y.finite() == Some(r),
        });
    }
    samples
}

fn run_unum(
    env: Environment,
    steps: &[Step],
    reference: &[Dyadic],
    unify_every: Option<usize>,
    policy: CoverPolicy,
) -> Result<Vec<Sample>> {
    let mut y = encode_tight(&GeneralInterval::point(ExtendedReal::Finite(Dyadic::zero())), env);
    let mut samples = Vec::with_capacity(steps.len());
    for (i, (s, r)) in steps.iter().zip(reference).enumerate() {
        let p = encode_tight(&GeneralInterval::point(ExtendedReal::Finite(&s.a * &s.x)), env);
        y = add(&y, &p)?;
        if matches!(unify_every, Some(k) if k > 0 && (i + 1) % k == 0) {
            y = unify_with(&y, policy);
        }
        samples.push(unum_sample(&y, i + 1, s.phase, r));
    }
    Ok(samples)
}

fn unum_sample(y: &PackedUbound, iteration: usize, phase: Phase, r: &Dyadic) -> Sample {
    let g = y.decode();
    let point = GeneralInterval::point(ExtendedReal::Finite(r.clone()));
    let mid = g.midpoint().map_or(ExtendedReal::PosInf, ExtendedReal::Finite);
    Sample {
        iteration,
        phase,
        bits: y.bit_len(),
        rel_error: if g.is_nan() { f64::NAN } else { rel_error(&mid, r) },
        width: g.width(),
        overflow: g.is_nan() || g.lo().is_infinite() || g.hi().is_infinite(),
        contains_reference: crate::numeric::contains(&g, &point),
    }
}

/// Runs every lane over the schedule.
pub fn run_axpy(
    schedule: &AxpySchedule,
    lanes: &[Lane],
    unify_every: Option<usize>,
) -> Result<Vec<LaneResult>> {
    run_axpy_with(schedule, lanes, unify_every, CoverPolicy::FewestBits)
}

/// [`run_axpy`] with the unify cover ranking made explicit.
pub fn run_axpy_with(
    schedule: &AxpySchedule,
    lanes: &[Lane],
    unify_every: Option<usize>,
    policy: CoverPolicy,
) -> Result<Vec<LaneResult>> {
    let steps = schedule.steps();
    let reference = schedule.reference();
    lanes
        .iter()
        .map(|&lane| {
            let samples = match lane {
                Lane::Unum(env) => run_unum(env, &steps, &reference, unify_every, policy)?,
                _ => run_float(lane.float_format().expect("float lane"), &steps, &reference),
            };
            Ok(LaneResult { lane, unify_every, samples })
        })
        .collect()
}

/// Per-lane, per-phase averages.
#[derive(Clone, Debug, PartialEq)]
pub struct FootprintRow {
    pub lane: Lane,
    pub phase: Phase,
    pub mean_bits: f64,
    /// `mean_bits / 32`.
    pub bits_vs_f32: f64,
    pub mean_rel_error: f64,
    /// Mean relative error over that of the f32 lane, when one was run and
    /// its error is nonzero.
    pub error_vs_f32: Option<f64>,
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    if n == 0 {
        f64::NAN
    } else {
        sum / n as f64
    }
}

/// Mean stored bits and relative error per lane and phase.
pub fn footprint_report(results: &[LaneResult]) -> Vec<FootprintRow> {
    let phase_error =
        |r: &LaneResult, p: Phase| mean(r.samples.iter().filter(|s| s.phase == p).map(|s| s.rel_error));
    let f32_lane = results.iter().find(|r| r.lane == Lane::F32);
    let mut rows = Vec::new();
    for r in results {
        for p in Phase::ALL {
            if !r.samples.iter().any(|s| s.phase == p) {
                continue;
            }
            let mean_bits = mean(r.samples.iter().filter(|s| s.phase == p).map(|s| s.bits as f64));
            let mean_rel_error = phase_error(r, p);
            rows.push(FootprintRow {
                lane: r.lane,
                phase: p,
                mean_bits,
                bits_vs_f32: mean_bits / 32.0,
                mean_rel_error,
                error_vs_f32: f32_lane
                    .map(|f| phase_error(f, p))
                    .filter(|&e| e > 0.0)
                    .map(|e| mean_rel_error / e),
            });
        }
    }
    rows
}

/// Mean stored bits of one lane over the given phases.
pub fn mean_bits(result: &LaneResult, phases: &[Phase]) -> f64 {
    mean(result.samples.iter().filter(|s| phases.contains(&s.phase)).map(|s| s.bits as f64))
}

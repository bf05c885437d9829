// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Brute-force ground truth for the unum operations.
//!
//! Small environments (`maxubits <= 20`) are enumerated outright. Every
//! pattern is decoded and the decoded endpoints are collected into sorted
//! tables of representable lower and upper ends. Tightest enclosure is then
//! a binary search, minimal representations come from per-endpoint minima,
//! and the best unify cover for every representable interval is precomputed
//! by sweeping single unums best first.
//!
//! Large environments cannot be enumerated. There [`LatticeFormula`] gives
//! closed-form neighbors of the value lattice, and it is cross-checked
//! against enumeration in every small environment.
//!
//! Nothing here calls into the encoders, the adder or the compressors except
//! to obtain the results under test. Only [`decode`] is shared.
//!
//! [`decode`]: crate::codec::decode

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{
    encode_tight, expand, pack, unpack, PackedUbound, PackedUnum, RegisterImage, UnpackedUnum,
};
use crate::env::Environment;
use crate::error::{Result, UnumError};
use crate::numeric::{contains, interval_add, interval_sub, Dyadic, ExtendedReal, GeneralInterval};
use crate::{add, optimize, sub, unify};

/// Largest `maxubits` accepted by [`enumerate_unums`].
pub const MAX_ENUM_BITS: u32 = 20;

/// Every structurally valid pattern of `env`, ordered by `(es, fs)` and then
/// by bit pattern.
pub fn enumerate_unums(env: Environment) -> Result<Vec<PackedUnum>> {
    if env.maxubits() > MAX_ENUM_BITS {
        return Err(UnumError::TooLarge { env, maxubits: env.maxubits() });
    }
    let mut out = Vec::new();
    for es in 1..=env.max_es() {
        for fs in 1..=env.max_fs() {
            for sign in [false, true] {
                for e in 0..1u32 << es {
                    for f in 0..1u64 << fs {
                        for ubit in [false, true] {
                            out.push(PackedUnum::new(env, sign, es, fs, e, f, ubit)?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Number of patterns [`enumerate_unums`] yields: `sum over (es, fs) of 2^(2+es+fs)`.
pub fn pattern_count(env: Environment) -> u64 {
    let mut n = 0;
    for es in 1..=env.max_es() {
        for fs in 1..=env.max_fs() {
            n += 1u64 << (2 + es + fs);
        }
    }
    n
}

/// A lower interval end. Ordered so that a smaller key admits more: closed
/// sorts before open at the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LowerEnd {
    pub value: ExtendedReal,
    pub open: bool,
}

/// An upper interval end. Ordered so that a larger key admits more: open
/// sorts before closed at the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpperEnd {
    pub value: ExtendedReal,
    pub open: bool,
}

impl Ord for LowerEnd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.total_cmp(&other.value).then(self.open.cmp(&other.open))
    }
}

impl PartialOrd for LowerEnd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UpperEnd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.total_cmp(&other.value).then(other.open.cmp(&self.open))
    }
}

impl PartialOrd for UpperEnd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl LowerEnd {
    pub fn of(g: &GeneralInterval) -> Self {
        LowerEnd { value: g.lo().clone(), open: g.lo_open() }
    }

    /// The mirrored upper end.
    pub fn negate(&self) -> UpperEnd {
        UpperEnd { value: self.value.neg(), open: self.open }
    }
}

impl UpperEnd {
    pub fn of(g: &GeneralInterval) -> Self {
        UpperEnd { value: g.hi().clone(), open: g.hi_open() }
    }

    pub fn negate(&self) -> LowerEnd {
        LowerEnd { value: self.value.neg(), open: self.open }
    }
}

fn interval(lo: &LowerEnd, hi: &UpperEnd) -> Option<GeneralInterval> {
    GeneralInterval::new(lo.value.clone(), lo.open, hi.value.clone(), hi.open).ok()
}

/// Cover ranking used by unify: bits, then width (unbounded last), then
/// lower end.
fn cover_key(u: &PackedUnum) -> (u32, Option<Dyadic>, LowerEnd) {
    let g = u.decode();
    (u.bit_len(), g.width(), LowerEnd::of(&g))
}

fn cmp_cover(a: &(u32, Option<Dyadic>, LowerEnd), b: &(u32, Option<Dyadic>, LowerEnd)) -> Ordering {
    let width = match (&a.1, &b.1) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    };
    a.0.cmp(&b.0).then(width).then_with(|| a.2.cmp(&b.2))
}

/// Pass/fail tally for one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub env: Environment,
    pub cases: u64,
    pub violations: u64,
    /// The first few violations, for diagnosis.
    pub examples: Vec<String>,
}

const KEPT_EXAMPLES: usize = 8;

impl Report {
    pub fn new(name: impl Into<String>, env: Environment) -> Self {
        Report { name: name.into(), env, cases: 0, violations: 0, examples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.cases > 0
    }

    /// Counts one case; on failure keeps the message produced by `msg`.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(msg());
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.check(false, || msg);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {} cases, {} violations",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.env,
            self.cases,
            self.violations
        )?;
        for e in &self.examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

/// Enumerated tables of one small environment.
pub struct SmallWorld {
    env: Environment,
    unums: Vec<PackedUnum>,
    lows: Vec<LowerEnd>,
    highs: Vec<UpperEnd>,
    /// Per lower end, the fewest bits of a unum with that lower side.
    lo_bits: Vec<u32>,
    lo_rep: Vec<PackedUnum>,
    hi_bits: Vec<u32>,
    hi_rep: Vec<PackedUnum>,
    /// Fewest bits of a single unum denoting exactly the cell.
    exact_single: HashMap<(u32, u32), u32>,
}

impl SmallWorld {
    pub fn new(env: Environment) -> Result<Self> {
        let unums = enumerate_unums(env)?;
        let mut lows: BTreeMap<LowerEnd, PackedUnum> = BTreeMap::new();
        let mut highs: BTreeMap<UpperEnd, PackedUnum> = BTreeMap::new();
        for u in unums.iter().filter(|u| !u.is_nan()) {
            let g = u.decode();
            let better = |old: &PackedUnum| u.bit_len() < old.bit_len();
            let lo = lows.entry(LowerEnd::of(&g)).or_insert(*u);
            if better(lo) {
                *lo = *u;
            }
            let hi = highs.entry(UpperEnd::of(&g)).or_insert(*u);
            if better(hi) {
                *hi = *u;
            }
        }
        let (lows, lo_rep): (Vec<_>, Vec<_>) = lows.into_iter().unzip();
        let (highs, hi_rep): (Vec<_>, Vec<_>) = highs.into_iter().unzip();
        let mut world = SmallWorld {
            env,
            lo_bits: lo_rep.iter().map(PackedUnum::bit_len).collect(),
            hi_bits: hi_rep.iter().map(PackedUnum::bit_len).collect(),
            unums,
            lows,
            highs,
            lo_rep,
            hi_rep,
            exact_single: HashMap::new(),
        };
        for i in 0..world.unums.len() {
            let u = world.unums[i];
            if u.is_nan() {
                continue;
            }
            let cell = world.cell_of(&u.decode());
            let e = world.exact_single.entry(cell).or_insert(u32::MAX);
            *e = (*e).min(u.bit_len());
        }
        Ok(world)
    }

    pub fn env(&self) -> Environment {
        self.env
    }

    pub fn unums(&self) -> &[PackedUnum] {
        &self.unums
    }

    pub fn lows(&self) -> &[LowerEnd] {
        &self.lows
    }

    pub fn highs(&self) -> &[UpperEnd] {
        &self.highs
    }

    /// Table indices of a representable interval's ends.
    fn cell_of(&self, g: &GeneralInterval) -> (u32, u32) {
        let i = self.lows.binary_search(&LowerEnd::of(g)).expect("lower end is representable");
        let j = self.highs.binary_search(&UpperEnd::of(g)).expect("upper end is representable");
        (i as u32, j as u32)
    }

    /// Cell of the tightest representable enclosure of a non-NaN interval.
    pub fn tightest(&self, g: &GeneralInterval) -> (u32, u32) {
        let lo = LowerEnd::of(g);
        let hi = UpperEnd::of(g);
        let i = self.lows.partition_point(|k| k <= &lo) - 1;
        let j = self.highs.partition_point(|k| k < &hi);
        (i as u32, j as u32)
    }

    pub fn cell_interval(&self, (i, j): (u32, u32)) -> Option<GeneralInterval> {
        interval(&self.lows[i as usize], &self.highs[j as usize])
    }

    /// Fewest bits of any ubound denoting the cell.
    pub fn min_bits(&self, (i, j): (u32, u32)) -> u32 {
        let pair = self.lo_bits[i as usize] + self.hi_bits[j as usize];
        self.exact_single.get(&(i, j)).map_or(pair, |&s| s.min(pair))
    }

    /// A ubound denoting the cell, if the cell is a valid interval.
    pub fn representative(&self, (i, j): (u32, u32)) -> Option<PackedUbound> {
        self.cell_interval((i, j))?;
        PackedUbound::pair(self.lo_rep[i as usize], self.hi_rep[j as usize]).ok()
    }

    /// Every valid cell.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.lows.len() as u32).flat_map(move |i| {
            (0..self.highs.len() as u32)
                .filter(move |&j| self.cell_interval((i, j)).is_some())
                .map(move |j| (i, j))
        })
    }

    /// Best covering single unum for every cell, indexed `i * highs + j`.
    pub fn cover_table(&self) -> Result<Vec<Option<PackedUnum>>> {
        let (nl, nh) = (self.lows.len(), self.highs.len());
        if nl.saturating_mul(nh) > 1 << 24 {
            return Err(UnumError::TooLarge { env: self.env, maxubits: self.env.maxubits() });
        }
        let mut singles: Vec<_> =
            self.unums.iter().filter(|u| !u.is_nan()).map(|u| (cover_key(u), *u)).collect();
        singles.sort_by(|a, b| cmp_cover(&a.0, &b.0));
        let mut table = vec![None; nl * nh];
        // next[i * (nh + 1) + j]: first unassigned column >= j in row i.
        let mut next: Vec<u32> = (0..nl).flat_map(|_| 0..=nh as u32).collect();
        fn find(next: &mut [u32], row: usize, j: u32) -> u32 {
            let mut k = j;
            while next[row + k as usize] != k {
                k = next[row + k as usize];
            }
            let mut c = j;
            while next[row + c as usize] != k {
                let n = next[row + c as usize];
                next[row + c as usize] = k;
                c = n;
            }
            k
        }
        for (_, u) in singles {
            let (ci, cj) = self.cell_of(&u.decode());
            for i in ci as usize..nl {
                let row = i * (nh + 1);
                let mut j = find(&mut next, row, 0);
                while j <= cj {
                    table[i * nh + j as usize] = Some(u);
                    next[row + j as usize] = j + 1;
                    j = find(&mut next, row, j + 1);
                }
            }
        }
        Ok(table)
    }
}

/// Closed-form description of an environment's value lattice.
///
/// Every finite exact unum value is a value of the widest format, so the
/// finite lattice is that format's grid: spacing `2^(max(p, 1-bias) - fs)`
/// in binade `p`, up to `maxreal`, one grid step below the infinity pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFormula {
    min_exp: i64,
    frac: i64,
    maxreal: Dyadic,
    /// `2^(emax+1)`, the far end of the all-ones inexact unums with maximal
    /// es but narrower fraction. Exists when the widest fraction has at least
    /// two bits.
    beyond: Option<Dyadic>,
}

impl LatticeFormula {
    pub fn new(env: Environment) -> Self {
        let es = env.max_es() as i64;
        let frac = env.max_fs() as i64;
        let bias = (1i64 << (es - 1)) - 1;
        let emax = (1i64 << es) - 1 - bias;
        let maxreal = &Dyadic::pow2(emax + 1) - &Dyadic::pow2(emax + 1 - frac);
        LatticeFormula {
            min_exp: 1 - bias,
            frac,
            beyond: (frac >= 2).then(|| Dyadic::pow2(emax + 1)),
            maxreal,
        }
    }

    pub fn maxreal(&self) -> &Dyadic {
        &self.maxreal
    }

    pub fn beyond(&self) -> Option<&Dyadic> {
        self.beyond.as_ref()
    }

    /// Grid spacing exponent for magnitudes whose leading bit is `2^p`.
    fn spacing(&self, p: i64) -> i64 {
        p.max(self.min_exp) - self.frac
    }

    pub fn is_point(&self, v: &Dyadic) -> bool {
        match v.msb_exponent() {
            None => true,
            Some(p) => v.abs() <= self.maxreal && v.exponent() >= self.spacing(p),
        }
    }

    /// Smallest finite lattice value above `v`.
    pub fn succ(&self, v: &Dyadic) -> Option<Dyadic> {
        if v.is_negative() {
            return self.pred(&-v).map(|d| -d);
        }
        if *v >= self.maxreal {
            return None;
        }
        let q = self.spacing(v.msb_exponent().unwrap_or(self.min_exp));
        Some(&floor_to(v, q) + &Dyadic::pow2(q))
    }

    /// Largest finite lattice value below `v`.
    pub fn pred(&self, v: &Dyadic) -> Option<Dyadic> {
        if v.is_negative() || v.is_zero() {
            return self.succ(&-v).map(|d| -d);
        }
        if *v > self.maxreal {
            return Some(self.maxreal.clone());
        }
        let p = v.msb_exponent().expect("positive");
        let q = self.spacing(p);
        let below = ceil_to(v, q) - Dyadic::pow2(q);
        if below.msb_exponent().map_or(true, |b| b >= p) {
            Some(below)
        } else {
            // v sits on a binade boundary; step with the finer spacing below.
            Some(v - &Dyadic::pow2(self.spacing(p - 1)))
        }
    }

    /// Whether `k` is the upper end of some decoded unum.
    pub fn is_upper(&self, k: &UpperEnd) -> bool {
        match &k.value {
            ExtendedReal::NaN => false,
            ExtendedReal::PosInf => true,
            ExtendedReal::NegInf => !k.open,
            ExtendedReal::Finite(v) => self.is_point(v) || (k.open && Some(v) == self.beyond.as_ref()),
        }
    }

    /// The next smaller upper end.
    pub fn pred_upper(&self, k: &UpperEnd) -> Option<UpperEnd> {
        let closed = |v: ExtendedReal| UpperEnd { value: v, open: false };
        if !k.open {
            return match k.value {
                ExtendedReal::NegInf => None,
                _ => Some(UpperEnd { value: k.value.clone(), open: true }),
            };
        }
        Some(match &k.value {
            ExtendedReal::PosInf => match &self.beyond {
                Some(b) => UpperEnd { value: ExtendedReal::Finite(b.clone()), open: true },
                None => closed(ExtendedReal::Finite(self.maxreal.clone())),
            },
            ExtendedReal::Finite(v) => match self.pred(v) {
                Some(p) => closed(ExtendedReal::Finite(p)),
                None => closed(ExtendedReal::NegInf),
            },
            _ => return None,
        })
    }

    /// `r` encloses `g` from above and no representable upper end lies
    /// strictly between them.
    pub fn upper_is_tight(&self, r: &UpperEnd, g: &UpperEnd) -> bool {
        self.is_upper(r) && r >= g && self.pred_upper(r).map_or(true, |p| &p < g)
    }

    pub fn lower_is_tight(&self, r: &LowerEnd, g: &LowerEnd) -> bool {
        self.upper_is_tight(&r.negate(), &g.negate())
    }
}

/// `v` rounded down to a multiple of `2^q`.
fn floor_to(v: &Dyadic, q: i64) -> Dyadic {
    if v.exponent() >= q {
        return v.clone();
    }
    let shift = (q - v.exponent()) as usize;
    Dyadic::new(v.mantissa() >> shift, q)
}

fn ceil_to(v: &Dyadic, q: i64) -> Dyadic {
    -floor_to(&-v, q)
}

/// A uniformly random structurally valid unum: uniform sizes, then uniform
/// fields. NaN patterns are skipped.
pub fn random_unum<R: Rng + ?Sized>(rng: &mut R, env: Environment) -> PackedUnum {
    loop {
        let es = rng.gen_range(1..=env.max_es());
        let fs = rng.gen_range(1..=env.max_fs());
        let e = rng.gen_range(0..1u32 << es);
        let f = rng.gen_range(0..1u64 << fs);
        let u = PackedUnum::new(env, rng.gen(), es, fs, e, f, rng.gen()).expect("fields in range");
        if !u.is_nan() {
            return u;
        }
    }
}

/// A unum whose magnitude is within a few binades of `near`, so that adds
/// exercise cancellation and carries rather than only the sticky path.
pub fn random_unum_near<R: Rng + ?Sized>(rng: &mut R, near: &PackedUnum) -> PackedUnum {
    let env = near.env();
    let es = near.es();
    let fs = rng.gen_range(1..=env.max_fs());
    let top = (1i64 << es) - 1;
    let e = (near.exponent() as i64 + rng.gen_range(-3..=3)).clamp(0, top) as u32;
    let f = rng.gen_range(0..1u64 << fs);
    let u = PackedUnum::new(env, rng.gen(), es, fs, e, f, rng.gen()).expect("fields in range");
    if u.is_nan() {
        *near
    } else {
        u
    }
}

/// A random ubound: a single unum or an ordered pair, half the time.
pub fn random_ubound<R: Rng + ?Sized>(rng: &mut R, env: Environment) -> PackedUbound {
    let a = random_unum(rng, env);
    if rng.gen_bool(0.5) {
        return PackedUbound::single(a);
    }
    let b = if rng.gen_bool(0.5) { random_unum_near(rng, &a) } else { random_unum(rng, env) };
    PackedUbound::pair(a, b).or_else(|_| PackedUbound::pair(b, a)).unwrap_or(PackedUbound::single(a))
}

/// Pack/unpack/decode/encode roundtrips over every pattern.
pub fn check_codec(world: &SmallWorld) -> Report {
    let env = world.env;
    let mut r = Report::new("codec", env);
    for u in world.unums() {
        let un = unpack(u);
        r.check(pack(&un, env).as_ref() == Ok(u), || format!("pack(unpack({u})) differs"));
        r.check(UnpackedUnum::from_bits(un.to_bits(), env).as_ref() == Ok(&un), || {
            format!("unpacked bits of {u} do not roundtrip")
        });
        r.check(PackedUnum::from_bits(env, u.bits(), u.bit_len()).as_ref() == Ok(u), || {
            format!("bits of {u} do not roundtrip")
        });
        r.check(u.to_string().parse::<PackedUnum>().as_ref() == Ok(u), || format!("text of {u}"));
        let x = PackedUbound::single(*u);
        r.check(RegisterImage::from_ubound(&x).to_ubound(env).as_ref() == Ok(&x), || {
            format!("register image of {u}")
        });
        let g = u.decode();
        r.check(un.summary.nan == g.is_nan(), || format!("NaN summary of {u}"));
        if g.is_nan() {
            r.check(encode_tight(&g, env).is_nan(), || "encode_tight(NaN)".into());
            continue;
        }
        let t = encode_tight(&g, env);
        r.check(t.decode() == g, || format!("encode_tight(decode({u})) = {t}"));
        r.check(t.bit_len() == world.min_bits(world.cell_of(&g)), || {
            format!("encode_tight(decode({u})) = {t} is not minimal")
        });
        if u.is_exact() {
            match expand(&un, env).and_then(|w| pack(&w, env)) {
                Ok(w) => r.check(w.decode() == g && w.es() == env.max_es() && w.fs() == env.max_fs(), || {
                    format!("expand({u}) = {w}")
                }),
                Err(e) => r.fail(format!("expand({u}): {e}")),
            }
        }
    }
    // Tight encoding of intervals that are not themselves representable.
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0dec);
    let finite: Vec<Dyadic> = world.lows.iter().filter_map(|k| k.value.finite().cloned()).collect();
    for _ in 0..2000 {
        let pick = |rng: &mut ChaCha8Rng| {
            let a = &finite[rng.gen_range(0..finite.len())];
            let b = &finite[rng.gen_range(0..finite.len())];
            (a + b).half().half()
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let Ok(g) = GeneralInterval::new(lo.into(), rng.gen(), hi.into(), rng.gen()) else {
            continue;
        };
        let t = encode_tight(&g, env);
        let cell = world.tightest(&g);
        r.check(Some(t.decode()) == world.cell_interval(cell) && t.bit_len() == world.min_bits(cell), || {
            format!("encode_tight({g}) = {t}")
        });
    }
    r
}

fn check_sum(world: &SmallWorld, r: &mut Report, x: &PackedUbound, y: &PackedUbound, subtract: bool) {
    let (got, exact) = if subtract {
        (sub(x, y), interval_sub(&x.decode(), &y.decode()))
    } else {
        (add(x, y), interval_add(&x.decode(), &y.decode()))
    };
    let op = if subtract { "-" } else { "+" };
    let got = match got {
        Ok(v) => v,
        Err(e) => return r.fail(format!("{x} {op} {y}: {e}")),
    };
    if exact.is_nan() {
        return r.check(got.is_nan(), || format!("{x} {op} {y} = {got}, expected NaN"));
    }
    let cell = world.tightest(&exact);
    let want = world.cell_interval(cell).expect("enclosure is an interval");
    r.check(got.decode() == want && got.bit_len() == world.min_bits(cell), || {
        format!("{x} {op} {y} = {got} = {}, expected {want} in {} bits", got.decode(), world.min_bits(cell))
    });
}

/// Every pair of operands drawn from all single unums, plus all ubounds
/// when `with_pairs` is set.
pub fn check_add_exhaustive(world: &SmallWorld, with_pairs: bool) -> Report {
    let mut r = Report::new("add", world.env);
    let mut ops: Vec<PackedUbound> = world.unums().iter().map(|&u| PackedUbound::single(u)).collect();
    if with_pairs {
        ops.extend(world.cells().filter_map(|c| world.representative(c)));
    }
    for x in &ops {
        for y in &ops {
            check_sum(world, &mut r, x, y, false);
            check_sum(world, &mut r, x, y, true);
        }
    }
    r
}

/// Random operand pairs checked against the enumerated tables.
pub fn check_add_sampled_small(world: &SmallWorld, samples: u64, seed: u64) -> Report {
    let mut r = Report::new("add (sampled)", world.env);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = random_ubound(&mut rng, world.env);
        let y = random_ubound(&mut rng, world.env);
        check_sum(world, &mut r, &x, &y, rng.gen());
    }
    r
}

/// Containment and tightness of `add` and `sub` on random ubounds of any
/// environment, judged by [`LatticeFormula`].
pub fn check_add_sampled(env: Environment, samples: u64, seed: u64) -> Report {
    let lat = LatticeFormula::new(env);
    let mut r = Report::new("add (sampled)", env);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = random_ubound(&mut rng, env);
        let y = if rng.gen_bool(0.5) {
            PackedUbound::single(random_unum_near(&mut rng, x.first()))
        } else {
            random_ubound(&mut rng, env)
        };
        let subtract = rng.gen_bool(0.5);
        let (got, exact) = if subtract {
            (sub(&x, &y), interval_sub(&x.decode(), &y.decode()))
        } else {
            (add(&x, &y), interval_add(&x.decode(), &y.decode()))
        };
        let op = if subtract { "-" } else { "+" };
        let got = match got {
            Ok(v) => v,
            Err(e) => {
                r.fail(format!("{x} {op} {y}: {e}"));
                continue;
            }
        };
        if exact.is_nan() {
            r.check(got.is_nan(), || format!("{x} {op} {y} = {got}, expected NaN"));
            continue;
        }
        let g = got.decode();
        let ok = !g.is_nan()
            && contains(&g, &exact)
            && lat.lower_is_tight(&LowerEnd::of(&g), &LowerEnd::of(&exact))
            && lat.upper_is_tight(&UpperEnd::of(&g), &UpperEnd::of(&exact))
            && optimize(&got) == got;
        r.check(ok, || format!("{x} {op} {y} = {g}, exact {exact}"));
    }
    r
}

/// Losslessness, minimality and idempotence of optimize over every single
/// unum and one ubound per representable interval.
pub fn check_optimize(world: &SmallWorld) -> Report {
    let mut r = Report::new("optimize", world.env);
    let singles = world.unums().iter().map(|&u| PackedUbound::single(u));
    let pairs = world.cells().filter_map(|c| world.representative(c));
    for x in singles.chain(pairs) {
        let o = optimize(&x);
        if x.is_nan() {
            r.check(o.is_nan(), || format!("optimize({x}) = {o}"));
            continue;
        }
        let g = x.decode();
        let min = world.min_bits(world.cell_of(&g));
        r.check(o.decode() == g && o.bit_len() == min && optimize(&o) == o, || {
            format!("optimize({x}) = {o} ({} bits, minimum {min})", o.bit_len())
        });
    }
    r
}

/// Containment, cover minimality, idempotence and the lossless case of
/// unify.
pub fn check_unify(world: &SmallWorld) -> Result<Report> {
    let mut r = Report::new("unify", world.env);
    let table = world.cover_table()?;
    let nh = world.highs.len();
    let singles = world.unums().iter().map(|&u| PackedUbound::single(u));
    let pairs = world.cells().filter_map(|c| world.representative(c));
    for x in singles.chain(pairs) {
        let u = unify(&x);
        if x.is_nan() {
            r.check(u.is_nan(), || format!("unify({x}) = {u}"));
            continue;
        }
        let g = x.decode();
        let cell = world.cell_of(&g);
        let ug = u.decode();
        let idem = unify(&u) == u;
        let ok = if let Some(&bits) = world.exact_single.get(&cell) {
            !u.is_pair() && ug == g && u.bit_len() == bits
        } else if let Some(best) = table[cell.0 as usize * nh + cell.1 as usize] {
            !u.is_pair() && contains(&ug, &g) && cmp_cover(&cover_key(u.first()), &cover_key(&best)).is_eq()
        } else {
            u == optimize(&x)
        };
        r.check(ok && idem, || format!("unify({x}) = {u} = {ug}"));
    }
    for u in world.unums().iter().filter(|u| u.is_exact() && !u.is_nan()) {
        let x = PackedUbound::pair(*u, *u).expect("degenerate pair");
        let want = optimize(&PackedUbound::single(*u));
        let got = unify(&x);
        r.check(got == want, || format!("unify([{u}, {u}]) = {got}, optimize = {want}"));
    }
    Ok(r)
}

/// The closed-form lattice agrees with the enumerated upper ends.
pub fn check_lattice_formula(world: &SmallWorld) -> Report {
    let lat = LatticeFormula::new(world.env);
    let mut r = Report::new("lattice formula", world.env);
    let highs = world.highs();
    for (n, k) in highs.iter().enumerate() {
        r.check(lat.is_upper(k), || format!("{k:?} missing from the formula"));
        let want = n.checked_sub(1).map(|p| highs[p].clone());
        let got = lat.pred_upper(k);
        r.check(got == want, || format!("pred of {k:?}: formula {got:?}, tables {want:?}"));
    }
    let lows = world.lows();
    r.check(lows.iter().map(LowerEnd::negate).rev().eq(highs.iter().cloned()), || {
        "lower ends are not the mirror of upper ends".into()
    });
    r
}

/// Which checks [`run_suite`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Codec,
    Add,
    Optimize,
    Unify,
    All,
}

impl FromStr for Suite {
    type Err = UnumError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "codec" => Ok(Suite::Codec),
            "add" => Ok(Suite::Add),
            "optimize" => Ok(Suite::Optimize),
            "unify" => Ok(Suite::Unify),
            "all" => Ok(Suite::All),
            _ => Err(UnumError::Parse { what: "suite", input: s.to_string() }),
        }
    }
}

/// Knobs for [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Operand pairs drawn when the add check samples.
    pub samples: u64,
    pub seed: u64,
    /// Enumerate every operand pair even when there are many.
    pub exhaustive: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { samples: 100_000, seed: 1, exhaustive: false }
    }
}

/// Patterns up to which the add check enumerates all operand pairs by default.
const EXHAUSTIVE_ADD_LIMIT: usize = 1024;

/// Runs `suite` on `env`. Environments too large to enumerate support only
/// the sampled add check.
pub fn run_suite(env: Environment, suite: Suite, opts: SuiteOptions) -> Result<Vec<Report>> {
    let world = match SmallWorld::new(env) {
        Ok(w) => w,
        Err(UnumError::TooLarge { .. }) if matches!(suite, Suite::Add | Suite::All) => {
            return Ok(vec![check_add_sampled(env, opts.samples, opts.seed)]);
        }
        Err(e) => return Err(e),
    };
    let want = |s: Suite| suite == s || suite == Suite::All;
    let mut out = Vec::new();
    if want(Suite::Codec) {
        out.push(check_codec(&world));
        out.push(check_lattice_formula(&world));
    }
    if want(Suite::Add) {
        if opts.exhaustive || world.unums().len() <= EXHAUSTIVE_ADD_LIMIT {
            out.push(check_add_exhaustive(&world, false));
        } else {
            out.push(check_add_sampled_small(&world, opts.samples, opts.seed));
        }
    }
    if want(Suite::Optimize) {
        out.push(check_optimize(&world));
    }
    if want(Suite::Unify) {
        out.push(check_unify(&world)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(a: u32, b: u32) -> Environment {
        Environment::new(a, b).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_unums(env(0, 0)).unwrap().len(), 16);
        assert_eq!(enumerate_unums(env(1, 1)).unwrap().len(), 144);
        assert_eq!(pattern_count(env(2, 2)), 3600);
        assert!(enumerate_unums(env(4, 5)).is_err());
        assert!(enumerate_unums(env(3, 3)).is_err());
    }

    #[test]
    fn every_pattern_decodes() {
        for u in enumerate_unums(env(1, 2)).unwrap() {
            let g = u.decode();
            assert_eq!(g.is_nan(), u.is_nan());
        }
    }

    #[test]
    fn formula_matches_small_worlds() {
        for e in [env(0, 0), env(0, 1), env(1, 0), env(1, 1), env(2, 1), env(1, 3), env(2, 2)] {
            let r = check_lattice_formula(&SmallWorld::new(e).unwrap());
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn lattice_neighbours() {
        let lat = LatticeFormula::new(env(2, 2));
        assert_eq!(lat.maxreal(), &Dyadic::from_int(480));
        assert_eq!(lat.beyond(), Some(&Dyadic::pow2(9)));
        assert_eq!(lat.succ(&Dyadic::from_int(3)), Some(Dyadic::new(25, -3)));
        assert_eq!(lat.pred(&Dyadic::from_int(4)), Some(Dyadic::new(31, -3)));
        assert_eq!(lat.pred(&Dyadic::zero()), Some(-Dyadic::pow2(-10)));
        assert_eq!(lat.succ(&Dyadic::from_int(480)), None);
        assert!(!lat.is_point(&Dyadic::new(49, -4)));
    }

    #[test]
    fn small_suites_pass() {
        for e in [env(0, 0), env(0, 1), env(1, 0), env(1, 1)] {
            for r in run_suite(e, Suite::All, SuiteOptions { samples: 2000, ..Default::default() }).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn sampled_add_in_large_environments() {
        for e in [env(3, 4), env(4, 5)] {
            let r = check_add_sampled(e, 2000, 11);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn report_keeps_few_examples() {
        let mut r = Report::new("x", env(0, 0));
        for _ in 0..20 {
            r.check(false, || "bad".into());
        }
        assert_eq!((r.cases, r.violations, r.examples.len()), (20, 20, KEPT_EXAMPLES));
        assert!(r.to_string().starts_with("FAIL x {0,0}: 20 cases"));
    }
}

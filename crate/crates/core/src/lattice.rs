// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixed-width value machinery behind the codec, adder and compression units.
//!
//! Every finite value a unum of an environment can denote is a point of the
//! environment's *maximal format* (es = 2^a, fs = 2^b) and has at most 33
//! significant bits, so it fits a `u64` significand with an `i32` exponent.
//! The only exception is the far end of the all-ones pattern at
//! es = 2^a, fs < 2^b, which lands one binade above maxreal (the "beyond"
//! point); it is a power of two and also fits.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::codec::PackedUnum;
use crate::env::Environment;
use crate::numeric::{Dyadic, ExtendedReal};

/// Nonnegative dyadic `sig * 2^exp`; `sig` odd, or zero with `exp == 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mag {
    pub sig: u64,
    pub exp: i32,
}

impl Mag {
    pub const ZERO: Mag = Mag { sig: 0, exp: 0 };

    pub fn new(sig: u64, exp: i32) -> Mag {
        if sig == 0 {
            return Mag::ZERO;
        }
        let tz = sig.trailing_zeros();
        Mag { sig: sig >> tz, exp: exp + tz as i32 }
    }

    pub fn pow2(k: i32) -> Mag {
        Mag { sig: 1, exp: k }
    }

    fn from_wide(sig: u128, exp: i64) -> Mag {
        if sig == 0 {
            return Mag::ZERO;
        }
        let tz = sig.trailing_zeros();
        let s = sig >> tz;
        debug_assert!(s <= u64::MAX as u128);
        Mag { sig: s as u64, exp: (exp + tz as i64) as i32 }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.sig == 0
    }

    #[inline]
    fn bit_len(self) -> i32 {
        64 - self.sig.leading_zeros() as i32
    }

    /// Exponent of the leading bit. Meaningless for zero.
    #[inline]
    pub fn msb(self) -> i32 {
        self.exp + self.bit_len() - 1
    }

    #[cfg(test)]
    pub fn to_dyadic(self) -> Dyadic {
        Dyadic::new(num_bigint::BigInt::from(self.sig), self.exp as i64)
    }
}

impl Ord for Mag {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        self.msb().cmp(&other.msb()).then_with(|| {
            let a = self.sig << self.sig.leading_zeros();
            let b = other.sig << other.sig.leading_zeros();
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Mag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A non-NaN point of the extended line with a small significand.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Val {
    NegInf,
    /// Zero is always stored with `neg == false`.
    Fin {
        neg: bool,
        mag: Mag,
    },
    PosInf,
}

impl Val {
    pub fn fin(neg: bool, mag: Mag) -> Val {
        Val::Fin { neg: neg && !mag.is_zero(), mag }
    }

    pub fn negate(self) -> Val {
        match self {
            Val::NegInf => Val::PosInf,
            Val::PosInf => Val::NegInf,
            Val::Fin { neg, mag } => Val::fin(!neg, mag),
        }
    }

    /// Nonnegative finite values and +inf, as a magnitude; `None` otherwise.
    fn nonneg_mag(self) -> Option<Mag> {
        match self {
            Val::Fin { neg: false, mag } => Some(mag),
            _ => None,
        }
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        use Val::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Fin { neg: na, mag: ma }, Fin { neg: nb, mag: mb }) => match (na, nb) {
                (false, true) => Ordering::Greater,
                (true, false) => Ordering::Less,
                (false, false) => ma.cmp(mb),
                (true, true) => mb.cmp(ma),
            },
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One side of an interval: a value and whether it is excluded.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Endpoint {
    pub val: Val,
    pub open: bool,
}

impl Endpoint {
    pub fn new(val: Val, open: bool) -> Endpoint {
        Endpoint { val, open }
    }

    pub fn closed(val: Val) -> Endpoint {
        Endpoint { val, open: false }
    }

    pub fn negate(self) -> Endpoint {
        Endpoint { val: self.val.negate(), open: self.open }
    }
}

/// An (es, fs) pair of one environment.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Format {
    pub es: u32,
    pub fs: u32,
}

impl Format {
    #[inline]
    pub fn bias(self) -> i32 {
        (1i32 << (self.es - 1)) - 1
    }

    #[inline]
    pub fn emin(self) -> i32 {
        1 - self.bias()
    }

    #[inline]
    pub fn emax(self) -> i32 {
        1i32 << (self.es - 1)
    }

    #[inline]
    pub fn all_e(self) -> u32 {
        (1u32 << self.es) - 1
    }

    #[inline]
    pub fn all_f(self) -> u64 {
        (1u64 << self.fs) - 1
    }

    /// Size in bits including the sign, excluding the utag.
    #[inline]
    pub fn body_bits(self) -> u32 {
        1 + self.es + self.fs
    }

    pub fn value(self, e: u32, f: u64) -> Mag {
        let fs = self.fs as i32;
        if e == 0 {
            Mag::new(f, self.emin() - fs)
        } else {
            Mag::new((1u64 << self.fs) | f, e as i32 - self.bias() - fs)
        }
    }

    /// Where the ubit interval of pattern (e, f) ends: the next pattern's
    /// value, or 2^(emax+1) past the all-ones pattern.
    pub fn succ_value(self, e: u32, f: u64) -> Mag {
        match self.next(e, f) {
            Some((e, f)) => self.value(e, f),
            None => Mag::pow2(self.emax() + 1),
        }
    }

    /// Exponent of the ulp of pattern (e, f).
    pub fn ulp_exp(self, e: u32) -> i32 {
        (e as i32).max(1) - self.bias() - self.fs as i32
    }

    /// Exact encoding of `m` in this format, if it has one.
    pub fn encode(self, m: Mag) -> Option<(u32, u64)> {
        if m.is_zero() {
            return Some((0, 0));
        }
        let k = m.msb();
        if k > self.emax() {
            return None;
        }
        let frac_bits = m.bit_len() - 1;
        if k >= self.emin() {
            if frac_bits > self.fs as i32 {
                return None;
            }
            let e = (k + self.bias()) as u32;
            let f = (m.sig ^ (1u64 << frac_bits)) << (self.fs as i32 - frac_bits);
            Some((e, f))
        } else {
            let sh = m.exp - (self.emin() - self.fs as i32);
            if sh < 0 {
                return None;
            }
            Some((0, m.sig << sh))
        }
    }

    /// Largest pattern whose value is `<= m`, saturating at all-ones.
    pub fn floor(self, m: Mag) -> (u32, u64) {
        if m.is_zero() {
            return (0, 0);
        }
        let k = m.msb();
        if k > self.emax() {
            return (self.all_e(), self.all_f());
        }
        let fs = self.fs as i32;
        if k >= self.emin() {
            let frac_bits = m.bit_len() - 1;
            let sig = if frac_bits > fs { m.sig >> (frac_bits - fs) } else { m.sig << (fs - frac_bits) };
            ((k + self.bias()) as u32, sig ^ (1u64 << fs))
        } else {
            let sh = m.exp - (self.emin() - fs);
            let f = if sh >= 0 {
                m.sig << sh
            } else if -sh >= 64 {
                0
            } else {
                m.sig >> -sh
            };
            (0, f)
        }
    }

    pub fn next(self, e: u32, f: u64) -> Option<(u32, u64)> {
        if f < self.all_f() {
            Some((e, f + 1))
        } else if e < self.all_e() {
            Some((e + 1, 0))
        } else {
            None
        }
    }

    pub fn prev(self, e: u32, f: u64) -> Option<(u32, u64)> {
        if f > 0 {
            Some((e, f - 1))
        } else if e > 0 {
            Some((e - 1, self.all_f()))
        } else {
            None
        }
    }
}

/// Bit-pattern fields of a unum before it is tied to an environment.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Fields {
    pub sign: bool,
    pub format: Format,
    pub e: u32,
    pub f: u64,
    pub ubit: bool,
}

/// A magnitude known to lie in `[sig * 2^exp, (sig + 1) * 2^exp)`, equal to
/// the left end exactly when `sticky` is clear. When `sticky` is set the
/// significand carries at least 35 bits, so the unknown tail is below the
/// finest spacing of any format.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Approx {
    pub sig: u128,
    pub exp: i64,
    pub sticky: bool,
}

impl Approx {
    pub fn exact(m: Mag) -> Approx {
        Approx { sig: m.sig as u128, exp: m.exp as i64, sticky: false }
    }

    /// Splits a dyadic into sign and a 120-bit truncated magnitude.
    pub fn from_dyadic(d: &Dyadic) -> (bool, Approx) {
        let neg = d.is_negative();
        let m = d.mantissa().magnitude();
        let bits = m.bits() as i64;
        if bits <= 120 {
            let sig = m.to_u128().unwrap_or(0);
            return (neg, Approx { sig, exp: d.exponent(), sticky: false });
        }
        let shift = bits - 120;
        // Canonical mantissas are odd, so a right shift always drops a one.
        let sig = (m >> shift as usize).to_u128().unwrap();
        (neg, Approx { sig, exp: d.exponent() + shift, sticky: true })
    }

    fn is_zero(self) -> bool {
        self.sig == 0 && !self.sticky
    }

    fn msb(self) -> i64 {
        self.exp + (128 - self.sig.leading_zeros() as i64) - 1
    }
}

/// Environment-level view: the maximal format plus the special patterns.
#[derive(Clone, Debug)]
pub(crate) struct Lattice {
    pub env: Environment,
    pub max: Format,
    /// All formats ordered by size, then by es.
    pub formats: Vec<Format>,
}

impl Lattice {
    /// Shared per-environment instance.
    pub fn get(env: Environment) -> &'static Lattice {
        static ALL: OnceLock<Vec<Lattice>> = OnceLock::new();
        let all = ALL.get_or_init(|| Environment::all().map(Lattice::new).collect());
        &all[(env.a() * (crate::env::MAX_B + 1) + env.b()) as usize]
    }

    fn new(env: Environment) -> Lattice {
        let max = Format { es: env.max_es(), fs: env.max_fs() };
        let mut formats: Vec<Format> =
            (1..=max.es).flat_map(|es| (1..=max.fs).map(move |fs| Format { es, fs })).collect();
        formats.sort_by_key(|f| (f.es + f.fs, f.es));
        Lattice { env, max, formats }
    }

    pub fn is_inf_slot(&self, fmt: Format, e: u32, f: u64) -> bool {
        fmt == self.max && e == fmt.all_e() && f == fmt.all_f()
    }

    pub fn is_maxreal_slot(&self, fmt: Format, e: u32, f: u64) -> bool {
        fmt == self.max && e == fmt.all_e() && f + 1 == fmt.all_f()
    }

    pub fn maxreal(&self) -> Mag {
        self.max.value(self.max.all_e(), self.max.all_f() - 1)
    }

    /// The far end of the all-ones pattern at es = 2^a, fs < 2^b.
    pub fn beyond(&self) -> Option<Mag> {
        (self.max.fs >= 2).then(|| Mag::pow2(self.max.emax() + 1))
    }

    /// Exact encoding in `fmt`, refusing the infinity slot.
    pub fn encode_in(&self, fmt: Format, m: Mag) -> Option<(u32, u64)> {
        fmt.encode(m).filter(|&(e, f)| !self.is_inf_slot(fmt, e, f))
    }

    /// Far end (away from zero) of the ubit interval of a non-special pattern.
    pub fn far_of(&self, fmt: Format, e: u32, f: u64) -> Val {
        if self.is_maxreal_slot(fmt, e, f) {
            Val::PosInf
        } else {
            Val::fin(false, fmt.succ_value(e, f))
        }
    }

    /// Decoded sides of a unum; `None` for NaN.
    pub fn sides(&self, x: &Fields) -> Option<(Endpoint, Endpoint)> {
        let fmt = x.format;
        if self.is_inf_slot(fmt, x.e, x.f) {
            if x.ubit {
                return None;
            }
            let v = if x.sign { Val::NegInf } else { Val::PosInf };
            return Some((Endpoint::closed(v), Endpoint::closed(v)));
        }
        let near = Val::fin(x.sign, fmt.value(x.e, x.f));
        if !x.ubit {
            return Some((Endpoint::closed(near), Endpoint::closed(near)));
        }
        let far = self.far_of(fmt, x.e, x.f);
        let near = Endpoint::new(near, true);
        if x.sign {
            Some((Endpoint::new(far.negate(), true), near))
        } else {
            Some((near, Endpoint::new(far, true)))
        }
    }

    fn inf_fields(&self, sign: bool) -> Fields {
        Fields { sign, format: self.max, e: self.max.all_e(), f: self.max.all_f(), ubit: false }
    }

    fn maxreal_inexact(&self, sign: bool) -> Fields {
        Fields { sign, format: self.max, e: self.max.all_e(), f: self.max.all_f() - 1, ubit: true }
    }

    pub fn nan_fields(&self) -> Fields {
        Fields { ubit: true, ..self.inf_fields(false) }
    }

    // Largest lattice value <= the magnitude (saturating at maxreal), and
    // whether the magnitude is that value exactly.
    fn floor(&self, a: Approx) -> (Mag, bool) {
        if a.is_zero() {
            return (Mag::ZERO, true);
        }
        debug_assert!(a.sig != 0);
        let fs = self.max.fs as i64;
        let emin = self.max.emin() as i64;
        let emax = self.max.emax() as i64;
        let k = a.msb();
        if k > emax {
            return (self.maxreal(), false);
        }
        let spacing = k.max(emin) - fs;
        let (t, s, exact) = if a.exp >= spacing {
            debug_assert!(!a.sticky);
            (a.sig, a.exp, true)
        } else {
            let sh = spacing - a.exp;
            if sh >= 128 {
                (0, spacing, false)
            } else {
                let lost = a.sig & ((1u128 << sh) - 1) != 0;
                (a.sig >> sh, spacing, !lost && !a.sticky)
            }
        };
        let m = Mag::from_wide(t, s);
        if k == emax && m >= self.max.value(self.max.all_e(), self.max.all_f()) {
            return (self.maxreal(), false);
        }
        (m, exact)
    }

    /// Next lattice value above `m`, `None` past maxreal.
    pub fn succ(&self, m: Mag) -> Option<Mag> {
        let (e, f) = self.max.encode(m)?;
        let (e, f) = self.max.next(e, f)?;
        (!self.is_inf_slot(self.max, e, f)).then(|| self.max.value(e, f))
    }

    /// Tightest upper endpoint covering `(-1)^neg * a`.
    pub fn round_upper(&self, neg: bool, a: Approx, open: bool) -> Endpoint {
        let (f, exact) = self.floor(a);
        if neg && !a.is_zero() {
            // The first candidate above a negative value is toward zero,
            // never past it.
            return Endpoint::new(Val::fin(true, f), open || !exact);
        }
        if exact {
            return Endpoint::new(Val::fin(false, f), open);
        }
        let beyond = self.beyond();
        if let Some(b) = beyond {
            if open && !a.sticky && a.sig.is_power_of_two() && a.msb() == b.msb() as i64 {
                return Endpoint::new(Val::fin(false, b), true);
            }
        }
        if f != self.maxreal() {
            let up = self.succ(f).expect("below maxreal");
            return Endpoint::new(Val::fin(false, up), true);
        }
        match beyond {
            Some(b) if a.msb() < b.msb() as i64 => Endpoint::new(Val::fin(false, b), true),
            _ => Endpoint::new(Val::PosInf, true),
        }
    }

    /// Tightest lower endpoint covering `(-1)^neg * a`.
    pub fn round_lower(&self, neg: bool, a: Approx, open: bool) -> Endpoint {
        self.round_upper(!neg, a, open).negate()
    }

    pub fn round_dyadic_upper(&self, x: &ExtendedReal, open: bool) -> Endpoint {
        match x {
            ExtendedReal::PosInf => Endpoint::new(Val::PosInf, open),
            ExtendedReal::NegInf => Endpoint::new(Val::NegInf, open),
            ExtendedReal::Finite(d) => {
                let (neg, a) = Approx::from_dyadic(d);
                self.round_upper(neg, a, open)
            }
            ExtendedReal::NaN => unreachable!("NaN endpoints are rejected by GeneralInterval"),
        }
    }

    pub fn round_dyadic_lower(&self, x: &ExtendedReal, open: bool) -> Endpoint {
        self.round_dyadic_upper(&x.neg(), open).negate()
    }

    // --- encoders: endpoint(s) -> unum fields ---

    /// Minimal exact unum for a point.
    pub fn exact_min(&self, v: Val) -> Fields {
        match v {
            Val::NegInf => self.inf_fields(true),
            Val::PosInf => self.inf_fields(false),
            Val::Fin { neg, mag } => self
                .formats
                .iter()
                .find_map(|&fmt| {
                    self.encode_in(fmt, mag).map(|(e, f)| Fields {
                        sign: neg,
                        format: fmt,
                        e,
                        f,
                        ubit: false,
                    })
                })
                .expect("lattice value has an encoding"),
        }
    }

    /// Minimal inexact unum whose exact part has magnitude `mag`.
    fn near_min(&self, sign: bool, mag: Mag) -> Fields {
        self.formats
            .iter()
            .find_map(|&fmt| {
                self.encode_in(fmt, mag).map(|(e, f)| Fields { sign, format: fmt, e, f, ubit: true })
            })
            .expect("lattice value has an encoding")
    }

    /// Minimal inexact unum whose far end has magnitude `far` (finite, > 0).
    fn far_min(&self, sign: bool, far: Mag) -> Fields {
        self.formats
            .iter()
            .find_map(|&fmt| {
                let (e, f) = match self.encode_in(fmt, far) {
                    Some((e, f)) => fmt.prev(e, f)?,
                    None if fmt != self.max && far == Mag::pow2(fmt.emax() + 1) => (fmt.all_e(), fmt.all_f()),
                    None => return None,
                };
                Some(Fields { sign, format: fmt, e, f, ubit: true })
            })
            .expect("far end is reachable")
    }

    /// Unum realizing `lo` as the lower side of its interval.
    pub fn lower_unum(&self, lo: Endpoint, style: Style) -> Fields {
        if !lo.open {
            return self.exact_in_style(lo.val, style);
        }
        match lo.val {
            Val::Fin { neg: false, mag } => self.near(false, mag, style),
            Val::Fin { neg: true, mag } => self.far(true, mag, style),
            Val::NegInf => self.maxreal_inexact(true),
            Val::PosInf => unreachable!("open lower endpoint at +inf"),
        }
    }

    /// Unum realizing `hi` as the upper side of its interval.
    pub fn upper_unum(&self, hi: Endpoint, style: Style) -> Fields {
        self.lower_unum(hi.negate(), style).flip_sign()
    }

    fn exact_in_style(&self, v: Val, style: Style) -> Fields {
        match (style, v) {
            (Style::Maximal, Val::Fin { neg, mag }) => {
                let (e, f) = self.encode_in(self.max, mag).expect("lattice value");
                Fields { sign: neg, format: self.max, e, f, ubit: false }
            }
            _ => self.exact_min(v),
        }
    }

    fn near(&self, sign: bool, mag: Mag, style: Style) -> Fields {
        match style {
            Style::Minimal => self.near_min(sign, mag),
            Style::Maximal => {
                let (e, f) = self.encode_in(self.max, mag).expect("lattice value");
                Fields { sign, format: self.max, e, f, ubit: true }
            }
        }
    }

    fn far(&self, sign: bool, mag: Mag, style: Style) -> Fields {
        if style == Style::Maximal {
            if let Some((e, f)) = self.encode_in(self.max, mag) {
                if let Some((e, f)) = self.max.prev(e, f) {
                    return Fields { sign, format: self.max, e, f, ubit: true };
                }
            }
        }
        self.far_min(sign, mag)
    }

    /// A single unum whose interval is exactly `(lo, hi)`, if one exists.
    pub fn single(&self, lo: Endpoint, hi: Endpoint, style: Style) -> Option<Fields> {
        if !lo.open && !hi.open && lo.val == hi.val {
            return Some(self.exact_in_style(lo.val, style));
        }
        if !lo.open || !hi.open {
            return None;
        }
        let (sign, near, far) = if let Some(near) = lo.val.nonneg_mag() {
            (false, near, hi.val)
        } else {
            let near = hi.val.negate().nonneg_mag()?;
            (true, near, lo.val.negate())
        };
        let try_fmt = |fmt: Format| {
            let (e, f) = self.encode_in(fmt, near)?;
            (self.far_of(fmt, e, f) == far).then_some(Fields { sign, format: fmt, e, f, ubit: true })
        };
        match style {
            Style::Minimal => self.formats.iter().find_map(|&fmt| try_fmt(fmt)),
            Style::Maximal => try_fmt(self.max),
        }
    }

    /// The best single unum containing `[lo, hi]`, ranked by size, width and
    /// lower end, or by width first when `narrowest` is set.
    pub fn best_cover(&self, lo: Endpoint, hi: Endpoint, narrowest: bool) -> Option<Fields> {
        let mut best: Option<(u32, Option<i32>, Val, Fields)> = None;
        for &fmt in &self.formats {
            if let Some((size, ..)) = best {
                if !narrowest && fmt.es + fmt.fs > size {
                    break;
                }
            }
            let pos = self.cover_positive(fmt, lo, hi);
            let neg = self.cover_positive(fmt, hi.negate(), lo.negate()).map(Fields::flip_sign);
            for cand in pos.into_iter().chain(neg) {
                let (clo, chi) = self.sides(&cand).expect("not NaN");
                let width = match (clo.val, chi.val) {
                    (Val::Fin { .. }, Val::Fin { .. }) => Some(cand.format.ulp_exp(cand.e)),
                    _ => None,
                };
                let key = (fmt.es + fmt.fs, width, clo.val);
                let better = match &best {
                    None => true,
                    Some((s, w, l, _)) => {
                        let wcmp = match (width, w) {
                            (Some(a), Some(b)) => a.cmp(b),
                            (Some(_), None) => Ordering::Less,
                            (None, Some(_)) => Ordering::Greater,
                            (None, None) => Ordering::Equal,
                        };
                        let (first, second) =
                            if narrowest { (wcmp, key.0.cmp(s)) } else { (key.0.cmp(s), wcmp) };
                        first.then(second).then(key.2.cmp(l)).is_lt()
                    }
                };
                if better {
                    best = Some((key.0, key.1, key.2, cand));
                }
            }
        }
        best.map(|b| b.3)
    }

    /// The inexact positive unum of `fmt` whose cell holds `[lo, hi]`.
    fn cover_positive(&self, fmt: Format, lo: Endpoint, hi: Endpoint) -> Option<Fields> {
        let lo_mag = lo.val.nonneg_mag()?;
        let (mut e, mut f) = fmt.floor(lo_mag);
        if self.is_inf_slot(fmt, e, f) {
            (e, f) = fmt.prev(e, f)?;
        }
        if fmt.value(e, f) == lo_mag && !lo.open {
            return None;
        }
        let far = self.far_of(fmt, e, f);
        let fits = match far.cmp(&hi.val) {
            Ordering::Greater => true,
            Ordering::Equal => hi.open,
            Ordering::Less => false,
        };
        fits.then_some(Fields { sign: false, format: fmt, e, f, ubit: true })
    }

    pub fn to_packed(&self, x: Fields) -> PackedUnum {
        PackedUnum::from_fields(self.env, x)
    }
}

impl Fields {
    pub fn flip_sign(self) -> Fields {
        Fields { sign: !self.sign, ..self }
    }

    pub fn bits(self, env: Environment) -> u32 {
        self.format.body_bits() + env.utag_width()
    }
}

/// Which representation the encoders produce: the smallest, or the
/// maximal-format one an unoptimized datapath emits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Style {
    Minimal,
    Maximal,
}

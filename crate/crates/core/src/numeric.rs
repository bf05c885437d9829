// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact dyadic arithmetic and general open/closed intervals.
//!
//! Every exact unum value is a dyadic rational `m * 2^e`, and dyadics are
//! closed under addition, subtraction and multiplication, so the types here
//! never round. They are the ground truth the unum operations are checked
//! against.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, UnumError};

/// `mantissa * 2^exponent`, kept canonical: the mantissa is odd, or zero
/// with a zero exponent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        let mut mantissa = mantissa.into();
        if mantissa.is_zero() {
            return Dyadic::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        mantissa >>= tz;
        Dyadic { mantissa, exponent: exponent + tz as i64 }
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Dyadic::pow2(0)
    }

    pub fn pow2(k: i64) -> Self {
        Dyadic { mantissa: BigInt::one(), exponent: k }
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic::new(v, 0)
    }

    /// Exact value of a finite binary64; `None` for NaN and infinities.
    pub fn from_f64(v: f64) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = v.to_bits();
        let neg = bits >> 63 != 0;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1 << 52) - 1);
        let (m, e) = if biased == 0 { (frac, -1074) } else { (frac | (1 << 52), biased - 1075) };
        let m = BigInt::from(m);
        Some(Dyadic::new(if neg { -m } else { m }, e))
    }

    pub fn from_f32(v: f32) -> Option<Self> {
        Dyadic::from_f64(v as f64)
    }

    #[inline]
    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    #[inline]
    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Self {
        Dyadic { mantissa: self.mantissa.abs(), exponent: self.exponent }
    }

    /// Exponent of the most significant bit, `floor(log2 |x|)`; `None` for zero.
    pub fn msb_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + self.mantissa.bits() as i64 - 1)
        }
    }

    /// Exact division by two, used for interval midpoints.
    pub fn half(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: if self.is_zero() { 0 } else { self.exponent - 1 },
        }
    }

    /// Nearest binary64, saturating to infinity outside its range. Only used
    /// for reporting.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits() as i64;
        // Keep 64 significant bits; the remaining error is far below f64 precision.
        let shift = (bits - 64).max(0);
        let top = (&self.mantissa >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let e = self.exponent + shift;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return top.signum() * 0.0;
        }
        let mut v = top;
        let mut e = e as i32;
        while e > 0 {
            let step = e.min(512);
            v *= 2f64.powi(step);
            e -= step;
        }
        while e < 0 {
            let step = (-e).min(512);
            v /= 2f64.powi(step);
            e += step;
        }
        v
    }

    fn align(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        (a, b, e)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = self.align(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { mantissa: -&self.mantissa, exponent: self.exponent }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.mantissa.sign(), other.mantissa.sign());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        // Same sign: compare magnitudes via the leading bit first, which
        // avoids huge shifts for values of very different scale.
        let ka = self.msb_exponent().unwrap();
        let kb = other.msb_exponent().unwrap();
        let mag = if ka != kb {
            ka.cmp(&kb)
        } else {
            let (a, b, _) = self.align(other);
            a.abs().cmp(&b.abs())
        };
        if sa == Sign::Minus {
            mag.reverse()
        } else {
            mag
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

/// A point of the extended real line.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExtendedReal {
    NegInf,
    Finite(Dyadic),
    PosInf,
    NaN,
}

impl ExtendedReal {
    pub fn is_nan(&self) -> bool {
        matches!(self, ExtendedReal::NaN)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedReal::NegInf | ExtendedReal::PosInf)
    }

    pub fn finite(&self) -> Option<&Dyadic> {
        match self {
            ExtendedReal::Finite(d) => Some(d),
            _ => None,
        }
    }

    pub fn neg(&self) -> ExtendedReal {
        match self {
            ExtendedReal::NegInf => ExtendedReal::PosInf,
            ExtendedReal::PosInf => ExtendedReal::NegInf,
            ExtendedReal::Finite(d) => ExtendedReal::Finite(-d),
            ExtendedReal::NaN => ExtendedReal::NaN,
        }
    }

    /// Total order on non-NaN values; NaN sorts last.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        fn rank(x: &ExtendedReal) -> u8 {
            match x {
                ExtendedReal::NegInf => 0,
                ExtendedReal::Finite(_) => 1,
                ExtendedReal::PosInf => 2,
                ExtendedReal::NaN => 3,
            }
        }
        match (self, other) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => a.cmp(b),
            _ => rank(self).cmp(&rank(other)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedReal::NegInf => f64::NEG_INFINITY,
            ExtendedReal::PosInf => f64::INFINITY,
            ExtendedReal::NaN => f64::NAN,
            ExtendedReal::Finite(d) => d.to_f64(),
        }
    }
}

impl From<Dyadic> for ExtendedReal {
    fn from(d: Dyadic) -> Self {
        ExtendedReal::Finite(d)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => f.write_str("-inf"),
            ExtendedReal::PosInf => f.write_str("inf"),
            ExtendedReal::NaN => f.write_str("NaN"),
            ExtendedReal::Finite(d) => d.fmt(f),
        }
    }
}

/// An interval of the extended real line with independently open or closed
/// endpoints, or NaN.
///
/// A closed infinite endpoint means the value `±inf` itself belongs to the
/// interval, so `[-inf, 1]` and the point `[inf, inf]` are both legal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneralInterval {
    lo: ExtendedReal,
    lo_open: bool,
    hi: ExtendedReal,
    hi_open: bool,
    nan: bool,
}

impl GeneralInterval {
    pub fn new(lo: ExtendedReal, lo_open: bool, hi: ExtendedReal, hi_open: bool) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() {
            return Err(UnumError::InvalidInterval("NaN endpoint".into()));
        }
        let ok = match lo.total_cmp(&hi) {
            Ordering::Less => true,
            Ordering::Equal => !lo_open && !hi_open,
            Ordering::Greater => false,
        };
        if !ok {
            return Err(UnumError::InvalidInterval(format!(
                "{}{lo}, {hi}{} is empty",
                if lo_open { '(' } else { '[' },
                if hi_open { ')' } else { ']' },
            )));
        }
        // Nothing lies beyond an infinity, so an open infinite endpoint on
        // the far side would be empty.
        if (lo == ExtendedReal::PosInf && lo_open) || (hi == ExtendedReal::NegInf && hi_open) {
            return Err(UnumError::InvalidInterval("open endpoint beyond infinity".into()));
        }
        Ok(GeneralInterval { lo, lo_open, hi, hi_open, nan: false })
    }

    pub fn nan() -> Self {
        GeneralInterval {
            lo: ExtendedReal::NaN,
            lo_open: false,
            hi: ExtendedReal::NaN,
            hi_open: false,
            nan: true,
        }
    }

    pub fn point(x: ExtendedReal) -> Self {
        if x.is_nan() {
            return GeneralInterval::nan();
        }
        GeneralInterval { lo: x.clone(), lo_open: false, hi: x, hi_open: false, nan: false }
    }

    pub fn closed(lo: Dyadic, hi: Dyadic) -> Result<Self> {
        GeneralInterval::new(lo.into(), false, hi.into(), false)
    }

    pub fn open(lo: ExtendedReal, hi: ExtendedReal) -> Result<Self> {
        GeneralInterval::new(lo, true, hi, true)
    }

    pub fn is_nan(&self) -> bool {
        self.nan
    }

    pub fn lo(&self) -> &ExtendedReal {
        &self.lo
    }

    pub fn hi(&self) -> &ExtendedReal {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn is_point(&self) -> bool {
        !self.nan && !self.lo_open && !self.hi_open && self.lo == self.hi
    }

    /// `hi - lo`; `None` when an endpoint is infinite or the interval is NaN.
    pub fn width(&self) -> Option<Dyadic> {
        match (&self.lo, &self.hi) {
            (ExtendedReal::Finite(l), ExtendedReal::Finite(h)) if !self.nan => Some(h - l),
            _ => None,
        }
    }

    pub fn midpoint(&self) -> Option<Dyadic> {
        match (&self.lo, &self.hi) {
            (ExtendedReal::Finite(l), ExtendedReal::Finite(h)) if !self.nan => Some((l + h).half()),
            _ => None,
        }
    }
}

impl fmt::Display for GeneralInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nan {
            return f.write_str("NaN");
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' },
        )
    }
}

/// Sum of two endpoints. A closed infinity absorbs any finite addend; an
/// open one stays open unless the other side is a closed infinity of the
/// same sign.
fn endpoint_sum(
    x: &ExtendedReal,
    x_open: bool,
    y: &ExtendedReal,
    y_open: bool,
) -> Option<(ExtendedReal, bool)> {
    use ExtendedReal::*;
    match (x, y) {
        (Finite(a), Finite(b)) => Some((Finite(a + b), x_open || y_open)),
        (PosInf, NegInf) | (NegInf, PosInf) => None,
        (PosInf | NegInf, Finite(_)) => Some((x.clone(), x_open)),
        (Finite(_), PosInf | NegInf) => Some((y.clone(), y_open)),
        (PosInf, PosInf) | (NegInf, NegInf) => Some((x.clone(), x_open && y_open)),
        (NaN, _) | (_, NaN) => None,
    }
}

/// Exact interval sum, endpoint by endpoint.
pub fn interval_add(p: &GeneralInterval, q: &GeneralInterval) -> GeneralInterval {
    if p.nan || q.nan {
        return GeneralInterval::nan();
    }
    let lo = endpoint_sum(&p.lo, p.lo_open, &q.lo, q.lo_open);
    let hi = endpoint_sum(&p.hi, p.hi_open, &q.hi, q.hi_open);
    match (lo, hi) {
        (Some((lo, lo_open)), Some((hi, hi_open))) => {
            GeneralInterval { lo, lo_open, hi, hi_open, nan: false }
        }
        _ => GeneralInterval::nan(),
    }
}

pub fn interval_neg(p: &GeneralInterval) -> GeneralInterval {
    if p.nan {
        return GeneralInterval::nan();
    }
    GeneralInterval { lo: p.hi.neg(), lo_open: p.hi_open, hi: p.lo.neg(), hi_open: p.lo_open, nan: false }
}

pub fn interval_sub(p: &GeneralInterval, q: &GeneralInterval) -> GeneralInterval {
    interval_add(p, &interval_neg(q))
}

/// Whether every element of `q` lies in `p`. A NaN interval contains only NaN.
pub fn contains(p: &GeneralInterval, q: &GeneralInterval) -> bool {
    if p.nan || q.nan {
        return p.nan && q.nan;
    }
    let lo_ok = match p.lo.total_cmp(&q.lo) {
        Ordering::Less => true,
        Ordering::Equal => !p.lo_open || q.lo_open,
        Ordering::Greater => false,
    };
    let hi_ok = match p.hi.total_cmp(&q.hi) {
        Ordering::Greater => true,
        Ordering::Equal => !p.hi_open || q.hi_open,
        Ordering::Less => false,
    };
    lo_ok && hi_ok
}

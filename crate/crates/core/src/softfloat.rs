// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! IEEE 754 binary floating point emulated on [`Dyadic`] values.
//!
//! Only round-to-nearest-even is provided. Values are carried as
//! [`ExtendedReal`], so the sign of zero is not tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::numeric::{Dyadic, ExtendedReal};

/// A binary interchange format given by its exponent and fraction widths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FloatFormat {
    exp_bits: u32,
    frac_bits: u32,
}

/// Result of a rounded operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rounded {
    pub value: ExtendedReal,
    /// The exact result was finite but rounded to an infinity.
    pub overflow: bool,
    pub inexact: bool,
}

impl FloatFormat {
    pub const BINARY16: FloatFormat = FloatFormat { exp_bits: 5, frac_bits: 10 };
    pub const BINARY32: FloatFormat = FloatFormat { exp_bits: 8, frac_bits: 23 };

    pub const fn new(exp_bits: u32, frac_bits: u32) -> Self {
        FloatFormat { exp_bits, frac_bits }
    }

    pub fn exp_bits(&self) -> u32 {
        self.exp_bits
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    /// Storage width in bits.
    pub fn width(&self) -> u32 {
        1 + self.exp_bits + self.frac_bits
    }

    pub fn bias(&self) -> i64 {
        (1 << (self.exp_bits - 1)) - 1
    }

    pub fn emin(&self) -> i64 {
        1 - self.bias()
    }

    pub fn emax(&self) -> i64 {
        self.bias()
    }

    pub fn max_finite(&self) -> Dyadic {
        let p = self.frac_bits as i64 + 1;
        Dyadic::new((BigInt::one() << p) - 1, self.emax() - p + 1)
    }

    /// Rounds an exact value to nearest, ties to even.
    pub fn round(&self, x: &Dyadic) -> Rounded {
        let Some(msb) = x.msb_exponent() else {
            return Rounded { value: ExtendedReal::Finite(Dyadic::zero()), overflow: false, inexact: false };
        };
        let quantum = msb.max(self.emin()) - self.frac_bits as i64;
        let (value, inexact) = if x.exponent() >= quantum {
            (x.clone(), false)
        } else {
            let shift = (quantum - x.exponent()) as usize;
            let m = x.mantissa();
            // Floor division keeps the remainder non-negative for either sign.
            let (mut q, r) = m.div_mod_floor(&(BigInt::one() << shift));
            let half = BigInt::one() << (shift - 1);
            if r > half || (r == half && q.is_odd()) {
                q += 1;
            }
            (Dyadic::new(q, quantum), true)
        };
        if value.abs() > self.max_finite() {
            let inf = if x.is_negative() { ExtendedReal::NegInf } else { ExtendedReal::PosInf };
            return Rounded { value: inf, overflow: true, inexact: true };
        }
        Rounded { value: ExtendedReal::Finite(value), overflow: false, inexact }
    }

    /// Rounds an extended real; infinities and NaN pass through unflagged.
    pub fn round_extended(&self, x: &ExtendedReal) -> Rounded {
        match x {
            ExtendedReal::Finite(d) => self.round(d),
            other => Rounded { value: other.clone(), overflow: false, inexact: false },
        }
    }

    pub fn add(&self, x: &ExtendedReal, y: &ExtendedReal) -> Rounded {
        use ExtendedReal::*;
        let exact = match (x, y) {
            (NaN, _) | (_, NaN) | (PosInf, NegInf) | (NegInf, PosInf) => NaN,
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
            (Finite(a), Finite(b)) => Finite(a + b),
        };
        self.round_extended(&exact)
    }

    pub fn mul(&self, x: &ExtendedReal, y: &ExtendedReal) -> Rounded {
        use ExtendedReal::*;
        let sign = |v: &ExtendedReal| match v {
            NegInf => -1,
            PosInf => 1,
            Finite(d) if d.is_zero() => 0,
            Finite(d) if d.is_negative() => -1,
            _ => 1,
        };
        let exact = match (x, y) {
            (NaN, _) | (_, NaN) => NaN,
            (Finite(a), Finite(b)) => Finite(a * b),
            _ => match sign(x) * sign(y) {
                0 => NaN,
                s if s > 0 => PosInf,
                _ => NegInf,
            },
        };
        self.round_extended(&exact)
    }

    /// The smallest positive subnormal.
    pub fn min_positive(&self) -> Dyadic {
        Dyadic::pow2(self.emin() - self.frac_bits as i64)
    }

    /// True if `x` is a finite value of this format.
    pub fn is_representable(&self, x: &Dyadic) -> bool {
        x.is_zero() || !self.round(x).inexact
    }
}

impl Default for FloatFormat {
    fn default() -> Self {
        FloatFormat::BINARY32
    }
}

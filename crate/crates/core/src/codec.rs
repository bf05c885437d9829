// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Packed (interchange) and unpacked (register) unum representations.
//!
//! A packed unum is the variable-width bit string
//!
//! ```text
//! sign(1) | exponent(es) | fraction(fs) | ubit(1) | es-1 (a bits) | fs-1 (b bits)
//! ```
//!
//! read most-significant bit first. Because the utag sits at the low end, a
//! pattern describes its own length when parsed from the right.
//!
//! Decoding rules, with `bias = 2^(es-1) - 1`:
//!
//! * exponent field `e = 0` is subnormal, `(-1)^s * 2^(1-bias) * f/2^fs`;
//!   otherwise `(-1)^s * 2^(e-bias) * (1 + f/2^fs)`;
//! * with the ubit set the value is the open interval one ulp wide,
//!   `ulp = 2^(max(e,1) - bias - fs)`, extending away from zero;
//! * at maximal es and fs the all-ones exponent/fraction pattern is `±inf`
//!   (ubit clear) or NaN (ubit set), and the inexact pattern just below it
//!   covers `(maxreal, inf)`;
//! * `+0` and `-0` are both exact zero; `-0` with the ubit set is
//!   `(-ulp, 0)`.

use std::fmt;
use std::str::FromStr;

use crate::env::Environment;
use crate::error::{Result, UnumError};
use crate::lattice::{Approx, Endpoint, Fields, Format, Lattice, Style, Val};
use crate::numeric::{Dyadic, ExtendedReal, GeneralInterval};

/// A single unum in interchange form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PackedUnum {
    env: Environment,
    sign: bool,
    es: u8,
    fs: u8,
    exponent: u16,
    fraction: u32,
    ubit: bool,
}

impl PackedUnum {
    /// Builds a unum from its fields; `es` and `fs` are the actual sizes,
    /// not the stored `size - 1`.
    pub fn new(
        env: Environment,
        sign: bool,
        es: u32,
        fs: u32,
        exponent: u32,
        fraction: u64,
        ubit: bool,
    ) -> Result<Self> {
        if es == 0 || es > env.max_es() || fs == 0 || fs > env.max_fs() {
            return Err(UnumError::Malformed(format!("sizes es={es} fs={fs} outside {env}")));
        }
        if (exponent as u64) >> es != 0 || fraction >> fs != 0 {
            return Err(UnumError::Malformed(format!(
                "field overflow: exponent {exponent:#x} in {es} bits, fraction {fraction:#x} in {fs} bits"
            )));
        }
        Ok(PackedUnum {
            env,
            sign,
            es: es as u8,
            fs: fs as u8,
            exponent: exponent as u16,
            fraction: fraction as u32,
            ubit,
        })
    }

    pub(crate) fn from_fields(env: Environment, x: Fields) -> Self {
        PackedUnum {
            env,
            sign: x.sign,
            es: x.format.es as u8,
            fs: x.format.fs as u8,
            exponent: x.e as u16,
            fraction: x.f as u32,
            ubit: x.ubit,
        }
    }

    pub(crate) fn fields(&self) -> Fields {
        Fields {
            sign: self.sign,
            format: Format { es: self.es as u32, fs: self.fs as u32 },
            e: self.exponent as u32,
            f: self.fraction as u64,
            ubit: self.ubit,
        }
    }

    /// Exact zero, smallest encoding.
    pub fn zero(env: Environment) -> Self {
        PackedUnum::new(env, false, 1, 1, 0, 0, false).unwrap()
    }

    /// The canonical (sign 0) NaN.
    pub fn nan(env: Environment) -> Self {
        PackedUnum::from_fields(env, Lattice::get(env).nan_fields())
    }

    pub fn env(&self) -> Environment {
        self.env
    }
    pub fn sign(&self) -> bool {
        self.sign
    }
    pub fn es(&self) -> u32 {
        self.es as u32
    }
    pub fn fs(&self) -> u32 {
        self.fs as u32
    }
    pub fn exponent(&self) -> u32 {
        self.exponent as u32
    }
    pub fn fraction(&self) -> u64 {
        self.fraction as u64
    }
    pub fn ubit(&self) -> bool {
        self.ubit
    }

    fn is_top_pattern(&self) -> bool {
        self.es() == self.env.max_es()
            && self.fs() == self.env.max_fs()
            && self.exponent() == (1u32 << self.es) - 1
            && self.fraction() == (1u64 << self.fs) - 1
    }

    pub fn is_nan(&self) -> bool {
        self.ubit && self.is_top_pattern()
    }

    pub fn is_infinite(&self) -> bool {
        !self.ubit && self.is_top_pattern()
    }

    pub fn is_exact(&self) -> bool {
        !self.ubit
    }

    /// Exact zero (either sign).
    pub fn is_zero(&self) -> bool {
        !self.ubit && self.exponent == 0 && self.fraction == 0
    }

    pub fn bit_len(&self) -> u32 {
        1 + self.es() + self.fs() + self.env.utag_width()
    }

    /// The bit string, right-aligned in a `u64` (at most 59 bits are used).
    pub fn bits(&self) -> u64 {
        let (a, b) = (self.env.a(), self.env.b());
        let mut v = self.sign as u64;
        v = (v << self.es) | self.exponent() as u64;
        v = (v << self.fs) | self.fraction();
        v = (v << 1) | self.ubit as u64;
        v = (v << a) | (self.es() - 1) as u64;
        v = (v << b) | (self.fs() - 1) as u64;
        v
    }

    /// Parses a right-aligned bit string of `len` bits.
    pub fn from_bits(env: Environment, bits: u64, len: u32) -> Result<Self> {
        let (a, b) = (env.a(), env.b());
        if len > env.maxubits() || len < 3 + env.utag_width() || (len < 64 && bits >> len != 0) {
            return Err(UnumError::Malformed(format!("{len}-bit pattern {bits:#x} in {env}")));
        }
        let mask = |w: u32| (1u64 << w) - 1;
        let fs = (bits & mask(b)) as u32 + 1;
        let es = ((bits >> b) & mask(a)) as u32 + 1;
        if len != 1 + es + fs + env.utag_width() {
            return Err(UnumError::Malformed(format!(
                "length {len} does not match utag (es={es}, fs={fs}) in {env}"
            )));
        }
        let ubit = (bits >> (a + b)) & 1 == 1;
        let body = bits >> (a + b + 1);
        let fraction = body & mask(fs);
        let exponent = (body >> fs) & mask(es);
        let sign = (body >> (fs + es)) & 1 == 1;
        PackedUnum::new(env, sign, es, fs, exponent as u32, fraction, ubit)
    }

    /// Exact semantics of the pattern.
    pub fn decode(&self) -> GeneralInterval {
        decode(self)
    }

    pub(crate) fn sides(&self) -> Option<(Endpoint, Endpoint)> {
        Lattice::get(self.env).sides(&self.fields())
    }

    /// Sign flip; exact `-0` is canonicalized to `+0`.
    pub fn negate(&self) -> Self {
        let mut r = *self;
        r.sign = !self.sign;
        if r.is_zero() {
            r.sign = false;
        }
        r
    }
}

impl fmt::Display for PackedUnum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}:{:0width$b}", self.env, self.bits(), width = self.bit_len() as usize)
    }
}

impl fmt::Debug for PackedUnum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} = {}", self.decode())
    }
}

impl FromStr for PackedUnum {
    type Err = UnumError;

    fn from_str(s: &str) -> Result<Self> {
        let err = || UnumError::Parse { what: "packed unum", input: s.to_string() };
        let rest = s.trim().strip_prefix('u').ok_or_else(err)?;
        let (env, digits) = rest.split_once(':').ok_or_else(err)?;
        let env: Environment = env.parse()?;
        if digits.is_empty() || digits.len() > 64 || !digits.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(err());
        }
        let bits = u64::from_str_radix(digits, 2).map_err(|_| err())?;
        PackedUnum::from_bits(env, bits, digits.len() as u32)
    }
}

/// Exact semantics of a packed unum as a general interval.
pub fn decode(u: &PackedUnum) -> GeneralInterval {
    let env = u.env;
    if u.is_top_pattern() {
        if u.ubit {
            return GeneralInterval::nan();
        }
        return GeneralInterval::point(if u.sign { ExtendedReal::NegInf } else { ExtendedReal::PosInf });
    }
    let bias = (1i64 << (u.es() - 1)) - 1;
    let fs = u.fs() as i64;
    let e = u.exponent() as i64;
    let f = u.fraction() as i64;
    let magnitude =
        if e == 0 { Dyadic::new(f, 1 - bias - fs) } else { Dyadic::new((1i64 << fs) + f, e - bias - fs) };
    let signed = |d: Dyadic| if u.sign { -d } else { d };
    if !u.ubit {
        return GeneralInterval::point(ExtendedReal::Finite(signed(magnitude)));
    }
    let below_inf = u.es() == env.max_es()
        && u.fs() == env.max_fs()
        && u.exponent() == (1u32 << u.es) - 1
        && u.fraction() + 1 == (1u64 << u.fs) - 1;
    let far = if below_inf {
        ExtendedReal::PosInf
    } else {
        let ulp = Dyadic::pow2(e.max(1) - bias - fs);
        ExtendedReal::Finite(&magnitude + &ulp)
    };
    let near = ExtendedReal::Finite(signed(magnitude));
    let far = if u.sign { far.neg() } else { far };
    let (lo, hi) = if u.sign { (far, near) } else { (near, far) };
    GeneralInterval::open(lo, hi).expect("ubit interval is nonempty")
}

/// The maximal-precision exact unum for `x`, or `None` when `x` is not a
/// point of the environment.
pub fn encode_exact(x: &ExtendedReal, env: Environment) -> Result<Option<PackedUnum>> {
    let lat = Lattice::get(env);
    let v = match x {
        ExtendedReal::NaN => return Err(UnumError::NaNInput),
        ExtendedReal::PosInf => Val::PosInf,
        ExtendedReal::NegInf => Val::NegInf,
        ExtendedReal::Finite(d) => {
            let (neg, a) = Approx::from_dyadic(d);
            let up = lat.round_upper(neg, a, false);
            if up.open {
                return Ok(None);
            }
            up.val
        }
    };
    let fields = match v {
        Val::Fin { neg, mag } => {
            let (e, f) = lat.encode_in(lat.max, mag).expect("on the lattice");
            Fields { sign: neg, format: lat.max, e, f, ubit: false }
        }
        inf => lat.exact_min(inf),
    };
    Ok(Some(lat.to_packed(fields)))
}

/// Smallest ubound containing `g`: each endpoint is rounded outward to the
/// nearest representable side, and the result is given in its fewest-bit
/// form.
pub fn encode_tight(g: &GeneralInterval, env: Environment) -> PackedUbound {
    if g.is_nan() {
        return PackedUbound::nan(env);
    }
    let lat = Lattice::get(env);
    let lo = lat.round_dyadic_lower(g.lo(), g.lo_open());
    let hi = lat.round_dyadic_upper(g.hi(), g.hi_open());
    PackedUbound::from_endpoints(lat, lo, hi, Style::Minimal)
}

/// One unum, or a pair of unums bounding an interval.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PackedUbound {
    first: PackedUnum,
    second: Option<PackedUnum>,
}

impl PackedUbound {
    pub fn single(u: PackedUnum) -> Self {
        PackedUbound { first: u, second: None }
    }

    /// A two-unum ubound: `lower` supplies the lower side of its interval,
    /// `upper` the upper side.
    pub fn pair(lower: PackedUnum, upper: PackedUnum) -> Result<Self> {
        if lower.env != upper.env {
            return Err(UnumError::EnvironmentMismatch { left: lower.env, right: upper.env });
        }
        let r = PackedUbound { first: lower, second: Some(upper) };
        if !lower.is_nan() && !upper.is_nan() {
            let (lo, _) = lower.sides().unwrap();
            let (_, hi) = upper.sides().unwrap();
            let ok = lo.val < hi.val || (lo.val == hi.val && !lo.open && !hi.open);
            if !ok {
                return Err(UnumError::InvalidInterval(format!("{lower} ⋈ {upper} has inverted bounds")));
            }
        }
        Ok(r)
    }

    pub fn nan(env: Environment) -> Self {
        PackedUbound::single(PackedUnum::nan(env))
    }

    pub fn env(&self) -> Environment {
        self.first.env
    }

    pub fn first(&self) -> &PackedUnum {
        &self.first
    }

    pub fn second(&self) -> Option<&PackedUnum> {
        self.second.as_ref()
    }

    pub fn is_pair(&self) -> bool {
        self.second.is_some()
    }

    pub fn is_nan(&self) -> bool {
        self.first.is_nan() || self.second.is_some_and(|s| s.is_nan())
    }

    pub fn bit_len(&self) -> u32 {
        self.first.bit_len() + self.second.map_or(0, |s| s.bit_len())
    }

    pub fn decode(&self) -> GeneralInterval {
        if self.is_nan() {
            return GeneralInterval::nan();
        }
        let Some(second) = self.second else {
            return self.first.decode();
        };
        let lo = self.first.decode();
        let hi = second.decode();
        GeneralInterval::new(lo.lo().clone(), lo.lo_open(), hi.hi().clone(), hi.hi_open())
            .expect("validated on construction")
    }

    /// Lower and upper endpoints; `None` for NaN.
    pub(crate) fn sides(&self) -> Option<(Endpoint, Endpoint)> {
        if self.is_nan() {
            return None;
        }
        let (lo, hi) = self.first.sides()?;
        match self.second {
            None => Some((lo, hi)),
            Some(s) => Some((lo, s.sides()?.1)),
        }
    }

    pub(crate) fn from_endpoints(lat: &Lattice, lo: Endpoint, hi: Endpoint, style: Style) -> Self {
        let env = lat.env;
        let lower = lat.lower_unum(lo, style);
        let upper = lat.upper_unum(hi, style);
        let pair_bits = lower.bits(env) + upper.bits(env);
        match lat.single(lo, hi, style) {
            Some(s) if style == Style::Maximal || s.bits(env) <= pair_bits => {
                PackedUbound::single(lat.to_packed(s))
            }
            _ => PackedUbound { first: lat.to_packed(lower), second: Some(lat.to_packed(upper)) },
        }
    }
}

impl From<PackedUnum> for PackedUbound {
    fn from(u: PackedUnum) -> Self {
        PackedUbound::single(u)
    }
}

impl fmt::Display for PackedUbound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.second {
            None => self.first.fmt(f),
            Some(s) => write!(f, "{}⋈{}", self.first, s),
        }
    }
}

impl fmt::Debug for PackedUbound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} = {}", self.decode())
    }
}

impl FromStr for PackedUbound {
    type Err = UnumError;

    fn from_str(s: &str) -> Result<Self> {
        let split = s.split_once('⋈').or_else(|| s.split_once("><"));
        match split {
            None => Ok(PackedUbound::single(s.parse()?)),
            Some((a, b)) => PackedUbound::pair(a.parse()?, b.parse()?),
        }
    }
}

/// Redundant flags carried next to an unpacked unum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Summary {
    pub nan: bool,
    pub inf: bool,
    pub zero: bool,
    /// Set on the second unum of a ubound.
    pub second: bool,
}

/// The fixed 64-bit register form of a unum:
///
/// ```text
/// 63     62..59                 58    57    56..53  52..48  47..32    31..0
/// pad  | nan inf zero second  | ubit| sign| es-1  | fs-1  | exponent| fraction
/// ```
///
/// The fraction is left-aligned; the exponent field is stored as-is
/// (right-aligned, with the pattern's own bias).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnpackedUnum {
    pub sign: bool,
    pub exponent: u16,
    pub fraction: u32,
    pub es: u8,
    pub fs: u8,
    pub ubit: bool,
    pub summary: Summary,
}

impl UnpackedUnum {
    pub fn to_bits(&self) -> u64 {
        let s = self.summary;
        (s.nan as u64) << 62
            | (s.inf as u64) << 61
            | (s.zero as u64) << 60
            | (s.second as u64) << 59
            | (self.ubit as u64) << 58
            | (self.sign as u64) << 57
            | ((self.es - 1) as u64 & 0xf) << 53
            | ((self.fs - 1) as u64 & 0x1f) << 48
            | (self.exponent as u64) << 32
            | self.fraction as u64
    }

    /// Parses a 64-bit slot, checking the fields are well formed and the
    /// summary flags agree with them.
    pub fn from_bits(bits: u64, env: Environment) -> Result<Self> {
        if bits >> 63 != 0 {
            return Err(UnumError::Malformed(format!("pad bit set in {bits:#018x}")));
        }
        let u = UnpackedUnum {
            summary: Summary {
                nan: bits >> 62 & 1 == 1,
                inf: bits >> 61 & 1 == 1,
                zero: bits >> 60 & 1 == 1,
                second: bits >> 59 & 1 == 1,
            },
            ubit: bits >> 58 & 1 == 1,
            sign: bits >> 57 & 1 == 1,
            es: ((bits >> 53) & 0xf) as u8 + 1,
            fs: ((bits >> 48) & 0x1f) as u8 + 1,
            exponent: (bits >> 32) as u16,
            fraction: bits as u32,
        };
        let p = pack(&u, env)?;
        let expect = unpack(&p);
        if expect.summary.nan != u.summary.nan
            || expect.summary.inf != u.summary.inf
            || expect.summary.zero != u.summary.zero
        {
            return Err(UnumError::Malformed(format!(
                "summary bits of {bits:#018x} disagree with its fields"
            )));
        }
        Ok(u)
    }
}

/// Unpacks into register form and fills in the summary bits.
pub fn unpack(p: &PackedUnum) -> UnpackedUnum {
    UnpackedUnum {
        sign: p.sign,
        exponent: p.exponent,
        fraction: if p.fs == 32 { p.fraction } else { p.fraction << (32 - p.fs) },
        es: p.es,
        fs: p.fs,
        ubit: p.ubit,
        summary: Summary { nan: p.is_nan(), inf: p.is_infinite(), zero: p.is_zero(), second: false },
    }
}

/// Packs a register-form unum; the summary bits are dropped.
pub fn pack(u: &UnpackedUnum, env: Environment) -> Result<PackedUnum> {
    let fs = u.fs as u32;
    if fs == 0 || fs > 32 {
        return Err(UnumError::Malformed(format!("fraction size {fs}")));
    }
    let low = if fs == 32 { 0 } else { u.fraction & ((1u32 << (32 - fs)) - 1) };
    if low != 0 {
        return Err(UnumError::Malformed(format!(
            "fraction {:#010x} has bits below its {fs}-bit size",
            u.fraction
        )));
    }
    let fraction = if fs == 32 { u.fraction } else { u.fraction >> (32 - fs) };
    PackedUnum::new(env, u.sign, u.es as u32, fs, u.exponent as u32, fraction as u64, u.ubit)
}

/// Re-encodes an exact unum at the environment's maximal sizes. Inexact
/// unums cannot be widened this way (a finer fraction shrinks the ulp), so
/// they are refused, as is NaN.
pub fn expand(u: &UnpackedUnum, env: Environment) -> Result<UnpackedUnum> {
    let p = pack(u, env)?;
    if p.is_nan() || !p.is_exact() {
        return Err(UnumError::NotExpandable);
    }
    let lat = Lattice::get(env);
    let fields = if p.is_infinite() {
        p.fields()
    } else {
        let (lo, _) = p.sides().expect("not NaN");
        let Val::Fin { neg, mag } = lo.val else { unreachable!("finite exact unum") };
        let (e, f) = lat.encode_in(lat.max, mag).expect("maximal format covers all");
        Fields { sign: neg, format: lat.max, e, f, ubit: false }
    };
    let mut out = unpack(&lat.to_packed(fields));
    out.summary.second = u.summary.second;
    Ok(out)
}

/// A 128-bit register image: the upper slot holds the single unum or the
/// lower unum of a ubound, the lower slot the upper unum (flagged `second`)
/// or zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RegisterImage(pub u128);

impl RegisterImage {
    /// The pattern of a register that has never been written.
    pub const EMPTY: RegisterImage = RegisterImage(0);

    pub fn from_ubound(x: &PackedUbound) -> Self {
        let hi = unpack(x.first()).to_bits();
        let lo = match x.second() {
            None => 0,
            Some(s) => {
                let mut u = unpack(s);
                u.summary.second = true;
                u.to_bits()
            }
        };
        RegisterImage((hi as u128) << 64 | lo as u128)
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn to_ubound(&self, env: Environment) -> Result<PackedUbound> {
        let hi = (self.0 >> 64) as u64;
        let lo = self.0 as u64;
        if hi == 0 {
            return Err(UnumError::Malformed("empty register image".into()));
        }
        let first = UnpackedUnum::from_bits(hi, env)?;
        if first.summary.second {
            return Err(UnumError::Malformed("second flag set on the upper slot".into()));
        }
        let first = pack(&first, env)?;
        if lo == 0 {
            return Ok(PackedUbound::single(first));
        }
        let second = UnpackedUnum::from_bits(lo, env)?;
        if !second.summary.second {
            return Err(UnumError::Malformed("lower slot used without the second flag".into()));
        }
        PackedUbound::pair(first, pack(&second, env)?)
    }
}

impl fmt::Display for RegisterImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:032X}", self.0)
    }
}

impl fmt::Debug for RegisterImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegisterImage({self})")
    }
}

impl FromStr for RegisterImage {
    type Err = UnumError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() != 32 {
            return Err(UnumError::Parse { what: "register image (32 hex digits)", input: s.to_string() });
        }
        u128::from_str_radix(s, 16)
            .map(RegisterImage)
            .map_err(|_| UnumError::Parse { what: "register image (32 hex digits)", input: s.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(a: u32, b: u32) -> Environment {
        Environment::new(a, b).unwrap()
    }

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(m, e)
    }

    fn point(m: i64, e: i64) -> GeneralInterval {
        GeneralInterval::point(ExtendedReal::Finite(d(m, e)))
    }

    fn open(lo: Dyadic, hi: Dyadic) -> GeneralInterval {
        GeneralInterval::open(lo.into(), hi.into()).unwrap()
    }

    #[test]
    fn zero_pattern_decodes_to_zero() {
        for e in Environment::all() {
            let z = PackedUnum::zero(e);
            assert_eq!(z.bits(), 0);
            assert_eq!(z.decode(), point(0, 0));
        }
    }

    #[test]
    fn decode_three_and_its_ulp() {
        // {2,2}: sign 0, e = 01, f = 1, es = fs = 1.
        let e22 = env(2, 2);
        let three = PackedUnum::new(e22, false, 1, 1, 1, 1, false).unwrap();
        assert_eq!(three.decode(), point(3, 0));
        let above = PackedUnum::new(e22, false, 1, 1, 1, 1, true).unwrap();
        assert_eq!(above.decode(), open(d(3, 0), d(4, 0)));
    }

    #[test]
    fn negative_inexact_extends_away_from_zero() {
        let e22 = env(2, 2);
        let u = PackedUnum::new(e22, true, 1, 1, 1, 1, true).unwrap();
        assert_eq!(u.decode(), open(d(-4, 0), d(-3, 0)));
        // -0 with the ubit: (-ulp, 0); es = 1 has bias 0, fs = 1 gives ulp 1.
        let nz = PackedUnum::new(e22, true, 1, 1, 0, 0, true).unwrap();
        assert_eq!(nz.decode(), open(d(-1, 0), Dyadic::zero()));
        let negzero = PackedUnum::new(e22, true, 1, 1, 0, 0, false).unwrap();
        assert_eq!(negzero.decode(), point(0, 0));
    }

    #[test]
    fn specials_only_at_maximal_sizes() {
        let e22 = env(2, 2);
        let inf = PackedUnum::new(e22, false, 4, 4, 15, 15, false).unwrap();
        assert_eq!(inf.decode(), GeneralInterval::point(ExtendedReal::PosInf));
        let nan = PackedUnum::new(e22, true, 4, 4, 15, 15, true).unwrap();
        assert!(nan.decode().is_nan());
        // Same all-ones body one fraction bit shorter is an ordinary number.
        let finite = PackedUnum::new(e22, false, 4, 3, 15, 7, false).unwrap();
        assert_eq!(finite.decode(), point(15, 5));
        let below = PackedUnum::new(e22, false, 4, 4, 15, 14, true).unwrap();
        assert_eq!(
            below.decode(),
            GeneralInterval::open(ExtendedReal::Finite(d(30, 4)), ExtendedReal::PosInf).unwrap()
        );
    }

    #[test]
    fn bit_layout_and_text() {
        let e22 = env(2, 2);
        let three = PackedUnum::new(e22, false, 1, 1, 1, 1, false).unwrap();
        // 0 | 1 | 1 | 0 | 00 | 00
        assert_eq!(three.to_string(), "u{2,2}:01100000");
        assert_eq!("u{2,2}:01100000".parse::<PackedUnum>().unwrap(), three);
        assert!("u{2,2}:0110000".parse::<PackedUnum>().is_err());
        let ub = PackedUbound::pair(three, PackedUnum::nan(e22)).unwrap();
        let s = ub.to_string();
        assert_eq!(s.parse::<PackedUbound>().unwrap(), ub);
        assert_eq!(s.replace('⋈', "><").parse::<PackedUbound>().unwrap(), ub);
    }

    #[test]
    fn longest_unum_is_maxubits() {
        let e45 = Environment::ALU;
        let u = PackedUnum::new(e45, true, 16, 32, 1, 1, true).unwrap();
        assert_eq!(u.bit_len(), 59);
        assert_eq!(u.bit_len(), e45.maxubits());
        assert_eq!(PackedUnum::from_bits(e45, u.bits(), 59).unwrap(), u);
    }

    #[test]
    fn encode_exact_examples() {
        let e45 = Environment::ALU;
        let u = encode_exact(&d(3, -1).into(), e45).unwrap().unwrap();
        assert!(u.is_exact());
        assert_eq!((u.es(), u.fs()), (16, 32));
        assert_eq!(u.decode(), point(3, -1));

        let e22 = env(2, 2);
        assert_eq!(encode_exact(&d(1, -100_000).into(), e22).unwrap(), None);
        let inf = encode_exact(&ExtendedReal::PosInf, e22).unwrap().unwrap();
        assert_eq!((inf.exponent(), inf.fraction(), inf.ubit()), (15, 15, false));
        assert_eq!(encode_exact(&ExtendedReal::NaN, e22), Err(UnumError::NaNInput));
    }

    #[test]
    fn encode_tight_examples() {
        let e22 = env(2, 2);
        let three = encode_tight(&point(3, 0), e22);
        assert!(!three.is_pair());
        assert!(three.first().is_exact());
        assert_eq!(three.decode(), point(3, 0));

        // 1/3 lies in (5/16, 11/32) on the {2,2} lattice (es=4, fs=4; the
        // binade [1/4, 1/2) has spacing 1/64).
        let third = GeneralInterval::new(
            ExtendedReal::Finite(Dyadic::new(1, -2)),
            true,
            ExtendedReal::Finite(Dyadic::new(1, -1)),
            true,
        )
        .unwrap();
        let r = encode_tight(&third, e22);
        assert!(crate::numeric::contains(&r.decode(), &third));

        let g = GeneralInterval::closed(d(3, 0), d(5, 0)).unwrap();
        let r = encode_tight(&g, e22);
        assert!(r.is_pair());
        assert_eq!(r.decode(), g);
    }

    #[test]
    fn unpacked_layout() {
        let e22 = env(2, 2);
        let z = unpack(&PackedUnum::zero(e22));
        assert!(z.summary.zero && !z.summary.nan);
        let n = unpack(&PackedUnum::nan(e22));
        assert!(n.summary.nan);
        let bits = n.to_bits();
        assert_eq!(UnpackedUnum::from_bits(bits, e22).unwrap(), n);
        let mut bad = n;
        bad.summary.nan = false;
        assert!(UnpackedUnum::from_bits(bad.to_bits(), e22).is_err());
        assert!(UnpackedUnum::from_bits(0, e22).is_err());
    }

    #[test]
    fn expand_examples() {
        let e22 = env(2, 2);
        let three = PackedUnum::new(e22, false, 1, 1, 1, 1, false).unwrap();
        let x = expand(&unpack(&three), e22).unwrap();
        assert_eq!((x.es, x.fs), (4, 4));
        assert_eq!(pack(&x, e22).unwrap().decode(), point(3, 0));
        let again = expand(&x, e22).unwrap();
        assert_eq!(again, x);
        let inexact = PackedUnum::new(e22, false, 1, 1, 1, 1, true).unwrap();
        assert_eq!(expand(&unpack(&inexact), e22), Err(UnumError::NotExpandable));
    }

    #[test]
    fn register_image_hex() {
        let e45 = Environment::ALU;
        let one = encode_tight(&point(1, 0), e45);
        let img = RegisterImage::from_ubound(&one);
        let hex = img.to_string();
        assert_eq!(hex.len(), 32);
        assert_eq!(hex.parse::<RegisterImage>().unwrap(), img);
        assert_eq!(img.to_ubound(e45).unwrap(), one);
        assert!(RegisterImage::EMPTY.to_ubound(e45).is_err());
        assert!("12".parse::<RegisterImage>().is_err());
    }
}

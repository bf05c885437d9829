// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Addition and subtraction of unums and ubounds.
//!
//! The adder follows the datapath of a hardware ubound ALU: both operands
//! are expanded to the maximal format, the lower and upper bounds go through
//! two independent fixed-width adders, and each adder reports whether its
//! sum landed exactly on a representable value. An inexact sum is widened
//! outward to the next representable side and marked open.

use crate::codec::{PackedUbound, PackedUnum};
use crate::error::{Result, UnumError};
use crate::lattice::{Approx, Endpoint, Lattice, Mag, Style, Val};

// The larger operand's leading bit sits at this position of the 128-bit
// accumulator; operands further apart than `ALIGN_LIMIT` binades only
// contribute a sticky bit.
const LEAD: i64 = 110;
const ALIGN_LIMIT: i32 = 68;

/// Sum of two signed finite magnitudes with sticky tracking.
fn significand_add(a_neg: bool, a: Mag, b_neg: bool, b: Mag) -> (bool, Approx) {
    if a.is_zero() {
        return (b_neg, Approx::exact(b));
    }
    if b.is_zero() {
        return (a_neg, Approx::exact(a));
    }
    let ((big_neg, big), (small_neg, small)) =
        if a >= b { ((a_neg, a), (b_neg, b)) } else { ((b_neg, b), (a_neg, a)) };
    let same = big_neg == small_neg;
    let lead = big.msb() as i64;
    let gap = big.msb() - small.msb();
    if gap > ALIGN_LIMIT {
        // The small operand is below one unit of a 69-bit window around the
        // big one, and far below the lattice spacing there.
        let window = ALIGN_LIMIT as i64;
        let shift = window - (lead - big.exp as i64);
        let sig = (big.sig as u128) << shift;
        let sig = if same { sig } else { sig - 1 };
        return (big_neg, Approx { sig, exp: lead - window, sticky: true });
    }
    let lsb = lead - LEAD;
    let bf = (big.sig as u128) << (big.exp as i64 - lsb);
    let sf = (small.sig as u128) << (small.exp as i64 - lsb);
    let sum = if same { bf + sf } else { bf - sf };
    (big_neg && sum != 0, Approx { sig: sum, exp: lsb, sticky: false })
}

/// One bound datapath. `None` signals `inf + -inf`.
fn add_bound(lat: &Lattice, x: Endpoint, y: Endpoint, upper: bool) -> Option<Endpoint> {
    use Val::*;
    match (x.val, y.val) {
        (PosInf, NegInf) | (NegInf, PosInf) => None,
        (PosInf | NegInf, Fin { .. }) => Some(x),
        (Fin { .. }, PosInf | NegInf) => Some(y),
        (PosInf, PosInf) | (NegInf, NegInf) => Some(Endpoint::new(x.val, x.open && y.open)),
        (Fin { neg: xn, mag: xm }, Fin { neg: yn, mag: ym }) => {
            let (neg, sum) = significand_add(xn, xm, yn, ym);
            let open = x.open || y.open;
            Some(if upper { lat.round_upper(neg, sum, open) } else { lat.round_lower(neg, sum, open) })
        }
    }
}

fn add_with(x: &PackedUbound, y: &PackedUbound, style: Style) -> Result<PackedUbound> {
    if x.env() != y.env() {
        return Err(UnumError::EnvironmentMismatch { left: x.env(), right: y.env() });
    }
    let env = x.env();
    let (Some((xl, xh)), Some((yl, yh))) = (x.sides(), y.sides()) else {
        return Ok(PackedUbound::nan(env));
    };
    let lat = Lattice::get(env);
    let lo = add_bound(lat, xl, yl, false);
    let hi = add_bound(lat, xh, yh, true);
    Ok(match (lo, hi) {
        (Some(lo), Some(hi)) => PackedUbound::from_endpoints(lat, lo, hi, style),
        _ => PackedUbound::nan(env),
    })
}

/// `x + y`, tightest containing result in its fewest-bit form.
pub fn add(x: &PackedUbound, y: &PackedUbound) -> Result<PackedUbound> {
    add_with(x, y, Style::Minimal)
}

/// `x + y` as the adder emits it before the optimize stage: bounds at the
/// maximal format wherever one exists. Decodes identically to [`add`].
pub fn raw_add(x: &PackedUbound, y: &PackedUbound) -> Result<PackedUbound> {
    add_with(x, y, Style::Maximal)
}

/// `x - y`, defined as `add(x, negate(y))`.
pub fn sub(x: &PackedUbound, y: &PackedUbound) -> Result<PackedUbound> {
    add(x, &negate(y))
}

/// Sign flip of every unum, swapping the two bounds of a pair.
pub fn negate(x: &PackedUbound) -> PackedUbound {
    match x.second() {
        None => PackedUbound::single(x.first().negate()),
        Some(hi) => {
            PackedUbound::pair(hi.negate(), x.first().negate()).expect("negation preserves bound order")
        }
    }
}

/// Convenience for the common single-unum case.
pub fn add_unums(x: &PackedUnum, y: &PackedUnum) -> Result<PackedUbound> {
    add(&(*x).into(), &(*y).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{encode_tight, PackedUnum};
    use crate::compress::optimize;
    use crate::env::Environment;
    use crate::numeric::{Dyadic, ExtendedReal, GeneralInterval};

    fn env(a: u32, b: u32) -> Environment {
        Environment::new(a, b).unwrap()
    }

    fn exact(x: i64, e: Environment) -> PackedUbound {
        encode_tight(&GeneralInterval::point(Dyadic::from_int(x).into()), e)
    }

    #[test]
    fn one_plus_two() {
        let e = Environment::ALU;
        let r = add(&exact(1, e), &exact(2, e)).unwrap();
        assert!(!r.is_pair());
        assert!(r.first().is_exact());
        assert_eq!(r, exact(3, e));
    }

    #[test]
    fn maxreal_doubled_overflows_to_open_infinity() {
        let e22 = env(2, 2);
        let maxreal = PackedUnum::new(e22, false, 4, 4, 15, 14, false).unwrap();
        let r = add_unums(&maxreal, &maxreal).unwrap();
        assert!(!r.is_pair());
        assert_eq!(
            r.decode(),
            GeneralInterval::open(ExtendedReal::Finite(Dyadic::new(30, 4)), ExtendedReal::PosInf).unwrap()
        );
    }

    #[test]
    fn opposite_infinities_give_nan() {
        let e = env(2, 2);
        let pinf = encode_tight(&GeneralInterval::point(ExtendedReal::PosInf), e);
        let r = add(&pinf, &negate(&pinf)).unwrap();
        assert!(r.is_nan());
        assert_eq!(r, PackedUbound::nan(e));
    }

    #[test]
    fn subtraction_examples() {
        let e22 = env(2, 2);
        let zero = exact(0, e22);
        let x = PackedUbound::single(PackedUnum::new(e22, false, 2, 3, 2, 5, false).unwrap());
        assert_eq!(sub(&x, &zero).unwrap(), optimize(&x));
        assert_eq!(sub(&x, &x).unwrap(), zero);

        let three_four = PackedUbound::single(PackedUnum::new(e22, false, 1, 1, 1, 1, true).unwrap());
        let r = sub(&three_four, &exact(1, e22)).unwrap();
        let want = GeneralInterval::open(Dyadic::from_int(2).into(), Dyadic::from_int(3).into()).unwrap();
        assert_eq!(r, encode_tight(&want, e22));
    }

    #[test]
    fn negate_examples() {
        let e = env(2, 2);
        assert_eq!(negate(&exact(3, e)), exact(-3, e));
        let lo = PackedUnum::new(e, false, 2, 1, 1, 0, false).unwrap(); // 1
        let hi = PackedUnum::new(e, false, 1, 1, 1, 1, true).unwrap(); // (3, 4)
        let ub = PackedUbound::pair(lo, hi).unwrap();
        let n = negate(&ub);
        assert_eq!(n.first(), &hi.negate());
        assert_eq!(n.second(), Some(&lo.negate()));
        assert_eq!(negate(&n), ub);
        assert_eq!(n.decode(), crate::numeric::interval_neg(&ub.decode()));
    }

    #[test]
    fn raw_add_is_maximal_and_optimizes_to_add() {
        let e = env(2, 2);
        let r = raw_add(&exact(1, e), &exact(2, e)).unwrap();
        assert_eq!((r.first().es(), r.first().fs()), (4, 4));
        assert_eq!(optimize(&r), add(&exact(1, e), &exact(2, e)).unwrap());
    }

    #[test]
    fn environment_mismatch() {
        assert!(add(&exact(1, env(2, 2)), &exact(1, env(2, 3))).is_err());
    }

    #[test]
    fn far_apart_operands_are_bracketed() {
        let e = Environment::ALU;
        let big = encode_tight(&GeneralInterval::point(Dyadic::pow2(1000).into()), e);
        let tiny = encode_tight(&GeneralInterval::point(Dyadic::pow2(-1000).into()), e);
        let up = add(&big, &tiny).unwrap();
        let g = up.decode();
        assert!(g.lo_open() && g.hi_open());
        assert_eq!(g.lo(), &ExtendedReal::Finite(Dyadic::pow2(1000)));
        assert_eq!(g.width().unwrap(), Dyadic::pow2(1000 - 32));
        let down = sub(&big, &tiny).unwrap().decode();
        assert_eq!(down.hi(), &ExtendedReal::Finite(Dyadic::pow2(1000)));
        assert_eq!(down.width().unwrap(), Dyadic::pow2(999 - 32));
    }
}

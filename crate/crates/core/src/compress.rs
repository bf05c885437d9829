// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Lossless *optimize* and lossy *unify*.

use crate::codec::PackedUbound;
use crate::lattice::{Lattice, Style};

/// Re-encodes `x` with the fewest bits among all patterns with the same
/// decoded interval. A pair collapses to one unum when one covers exactly
/// the same interval.
pub fn optimize(x: &PackedUbound) -> PackedUbound {
    let env = x.env();
    match x.sides() {
        None => PackedUbound::nan(env),
        Some((lo, hi)) => PackedUbound::from_endpoints(Lattice::get(env), lo, hi, Style::Minimal),
    }
}

/// How [`unify_with`] ranks the single unums that contain its input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoverPolicy {
    /// Fewest bits, then narrowest, then lowest. This is what [`unify`] uses.
    #[default]
    FewestBits,
    /// Narrowest, then fewest bits, then lowest.
    Narrowest,
}

/// Merges `x` into a single unum.
///
/// If one unum denotes exactly the interval of `x`, that unum is returned
/// and nothing is lost. Otherwise the result is the smallest single unum
/// containing `x` (fewest bits, then narrowest, then lowest), which may be
/// wider than `x`. When no single unum contains `x` the optimized ubound is
/// returned unchanged in value.
pub fn unify(x: &PackedUbound) -> PackedUbound {
    unify_with(x, CoverPolicy::FewestBits)
}

/// [`unify`] with a choice of how competing covers are ranked.
pub fn unify_with(x: &PackedUbound, policy: CoverPolicy) -> PackedUbound {
    let env = x.env();
    let Some((lo, hi)) = x.sides() else {
        return PackedUbound::nan(env);
    };
    let lat = Lattice::get(env);
    if let Some(s) = lat.single(lo, hi, Style::Minimal) {
        return PackedUbound::single(lat.to_packed(s));
    }
    match lat.best_cover(lo, hi, policy == CoverPolicy::Narrowest) {
        Some(c) => PackedUbound::single(lat.to_packed(c)),
        None => PackedUbound::from_endpoints(lat, lo, hi, Style::Minimal),
    }
}

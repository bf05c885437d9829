// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Unum (universal number) arithmetic.
//!
//! Unums are variable-width floating-point values whose utag records the
//! exponent and fraction sizes in use plus a *ubit* that marks the value as
//! the open interval to the next representable number. Two unums form a
//! *ubound*, a general interval with independently open or closed ends.
//!
//! The crate provides:
//!
//! * [`Environment`]: the `{a,b}` pair fixing the utag field widths;
//! * [`Dyadic`], [`GeneralInterval`]: exact values used as ground truth;
//! * [`PackedUnum`], [`PackedUbound`], [`UnpackedUnum`]: interchange and
//!   register representations with [`decode`], [`encode_tight`], [`pack`]
//!   and [`unpack`];
//! * [`add`], [`sub`], [`negate`]: tightest-containment arithmetic;
//! * [`optimize`], [`unify`]: lossless and lossy compression;
//! * [`alu`]: a functional model of an instruction-driven ubound ALU;
//! * [`axpy`]: the accuracy/footprint study across float and unum formats;
//! * [`oracle`]: brute-force verification over small environments.

pub mod alu;
pub mod arith;
pub mod axpy;
pub mod codec;
pub mod compress;
pub mod env;
pub mod error;
mod lattice;
pub mod numeric;
pub mod oracle;
pub mod softfloat;

pub use arith::{add, negate, raw_add, sub};
pub use codec::{
    decode, encode_exact, encode_tight, expand, pack, unpack, PackedUbound, PackedUnum, RegisterImage,
    Summary, UnpackedUnum,
};
pub use compress::{optimize, unify, unify_with, CoverPolicy};
pub use env::Environment;
pub use error::{Result, UnumError};
pub use numeric::{contains, interval_add, interval_neg, Dyadic, ExtendedReal, GeneralInterval};

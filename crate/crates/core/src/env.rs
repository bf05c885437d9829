// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Unum environments.
//!
//! An environment `{a,b}` fixes the width of the two size fields in the utag:
//! `a` bits hold `es - 1` and `b` bits hold `fs - 1`. Every width and range
//! property of the number system follows from that pair.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, UnumError};

/// Largest supported exponent-size field width.
pub const MAX_A: u32 = 4;
/// Largest supported fraction-size field width.
pub const MAX_B: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Environment {
    a: u8,
    b: u8,
}

impl Environment {
    /// The `{4,5}` environment hard-wired in the reference ALU.
    pub const ALU: Environment = Environment { a: 4, b: 5 };

    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a > MAX_A || b > MAX_B {
            return Err(UnumError::InvalidEnvironment { a, b });
        }
        Ok(Environment { a: a as u8, b: b as u8 })
    }

    #[inline]
    pub fn a(self) -> u32 {
        self.a as u32
    }

    #[inline]
    pub fn b(self) -> u32 {
        self.b as u32
    }

    /// Maximum exponent width, `2^a`.
    #[inline]
    pub fn max_es(self) -> u32 {
        1 << self.a
    }

    /// Maximum fraction width, `2^b`.
    #[inline]
    pub fn max_fs(self) -> u32 {
        1 << self.b
    }

    /// ubit + exponent-size field + fraction-size field.
    #[inline]
    pub fn utag_width(self) -> u32 {
        1 + self.a() + self.b()
    }

    /// Maximum bit length of a unum: `2 + 2^a + 2^b + a + b`.
    #[inline]
    pub fn maxubits(self) -> u32 {
        2 + self.max_es() + self.max_fs() + self.a() + self.b()
    }

    /// Iterates all supported environments, `{0,0}` through `{4,5}`.
    pub fn all() -> impl Iterator<Item = Environment> {
        (0..=MAX_A).flat_map(|a| (0..=MAX_B).map(move |b| Environment::new(a, b).unwrap()))
    }
}

impl fmt::Display for Environment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

impl FromStr for Environment {
    type Err = UnumError;

    /// Accepts `{a,b}` as well as the bare `a,b` used on command lines.
    fn from_str(s: &str) -> Result<Self> {
        let err = || UnumError::Parse { what: "environment", input: s.to_string() };
        let t = s.trim();
        let t = t.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(t);
        let (a, b) = t.split_once(',').ok_or_else(err)?;
        let a = a.trim().parse::<u32>().map_err(|_| err())?;
        let b = b.trim().parse::<u32>().map_err(|_| err())?;
        Environment::new(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(a: u32, b: u32) -> Environment {
        Environment::new(a, b).unwrap()
    }

    #[test]
    fn maxubits_values() {
        assert_eq!(env(4, 5).maxubits(), 59);
        assert_eq!(env(0, 0).maxubits(), 4);
        assert_eq!(env(3, 4).maxubits(), 33);
    }

    #[test]
    fn utag_widths() {
        assert_eq!(env(3, 4).utag_width(), 8);
        assert_eq!(env(4, 5).utag_width(), 10);
        assert_eq!(env(0, 0).utag_width(), 1);
    }

    #[test]
    fn maxubits_is_sum_of_maximal_fields() {
        for e in Environment::all() {
            assert_eq!(e.maxubits(), 1 + e.max_es() + e.max_fs() + e.utag_width(), "{e}");
        }
        assert_eq!(Environment::all().count(), 30);
    }

    #[test]
    fn rejects_oversized() {
        assert!(Environment::new(5, 0).is_err());
        assert!(Environment::new(0, 6).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(env(4, 5).to_string(), "{4,5}");
        assert_eq!("{3,4}".parse::<Environment>().unwrap(), env(3, 4));
        assert_eq!("2,2".parse::<Environment>().unwrap(), env(2, 2));
        assert!("{2;2}".parse::<Environment>().is_err());
        assert!("{9,1}".parse::<Environment>().is_err());
    }
}

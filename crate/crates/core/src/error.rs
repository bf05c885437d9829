// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::env::Environment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnumError {
    #[error("environment {{{a},{b}}} is outside the supported range (a <= 4, b <= 5)")]
    InvalidEnvironment { a: u32, b: u32 },

    #[error("operands live in different environments: {left} vs {right}")]
    EnvironmentMismatch { left: Environment, right: Environment },

    #[error("malformed unum: {0}")]
    Malformed(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("NaN has no exact encoding")]
    NaNInput,

    #[error("only exact non-NaN unums can be expanded")]
    NotExpandable,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("environment {env} is too large for exhaustive checking (maxubits {maxubits})")]
    TooLarge { env: Environment, maxubits: u32 },
}

pub type Result<T, E = UnumError> = std::result::Result<T, E>;

// Copyright 2026 The qecw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid character '{ch}' at position {position}")]
    InvalidCharacter { position: usize, ch: char },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("generators {0} and {1} anticommute")]
    AnticommutingGenerators(usize, usize),

    #[error("stabilizer group contains -I")]
    ContainsMinusIdentity,

    #[error("invalid stabilizer generators: {0}")]
    Validation(String),

    #[error("X check row {x_row} and Z check row {z_row} overlap on an odd number of positions")]
    CssIncompatible { x_row: usize, z_row: usize },

    #[error("capacity exceeded: {what} is {value}, limit is {limit}")]
    Capacity { what: &'static str, value: usize, limit: usize },

    #[error("unknown code '{name}', valid names: {valid}")]
    UnknownCode { name: String, valid: String },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

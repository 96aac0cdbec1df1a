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

//! Stabilizer quantum error correction workbench.
//!
//! Paulis live in binary symplectic form ([`PauliOperator`]), codes are
//! validated generator lists ([`StabilizerCode`]), and a small dense
//! state-vector simulator ([`dense`]) serves as an independent oracle.
//! Floating-point parts are generic over [`Real`]; the `*F64` and `*F32`
//! aliases below fix the scalar.

pub mod bits;
pub mod classical;
pub mod dense;
pub mod error;
pub mod experiments;
pub mod noise;
pub mod pauli;
pub mod scalar;
pub mod stabilizer;

pub use bits::BitVector;
pub use classical::{check_duality, css_compatible, parity_syndrome, BinaryMatrix, RowSpace};
pub use dense::{DenseMatrix, Gate, KLReport, StateVector};
pub use error::{Error, Result};
pub use experiments::{analytic_success, concat_failure, pseudothreshold, run_monte_carlo, TrialStats};
pub use noise::{build_table, sample_error, ChannelKind, NoiseChannel, Outcome, SyndromeTable};
pub use pauli::{commutes, pauli_from_string, pauli_multiply, weight, PauliLetter, PauliOperator};
pub use scalar::Real;
pub use stabilizer::{catalog, css_from_parity_checks, validate_generators, Distance, StabilizerCode, Syndrome};

pub type StateVectorF64 = StateVector<f64>;
pub type StateVectorF32 = StateVector<f32>;
pub type DenseMatrixF64 = DenseMatrix<f64>;
pub type DenseMatrixF32 = DenseMatrix<f32>;
pub type KLReportF64 = KLReport<f64>;
pub type NoiseChannelF64 = NoiseChannel<f64>;
pub type NoiseChannelF32 = NoiseChannel<f32>;
pub type TrialStatsF64 = TrialStats<f64>;
pub type TrialStatsF32 = TrialStats<f32>;

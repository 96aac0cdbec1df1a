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

use num_complex::Complex;
use rand::Rng;

use super::{check_dense_guard, DenseMatrix, Gate, StateVector};
use crate::error::{check_dim, Error, Result};
use crate::noise::{build_table, ChannelKind, SyndromeTable};
use crate::pauli::PauliOperator;
use crate::scalar::Real;
use crate::stabilizer::{catalog, StabilizerCode, Syndrome};

/// Residual bound for declaring an error set correctable.
pub const KL_RESIDUAL_TOLERANCE: f64 = 1e-8;
/// Bound on `|α_ij - conj(α_ji)|`.
pub const KL_HERMITIAN_TOLERANCE: f64 = 1e-10;

const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// `P = Π_i (I + g_i) / 2`, applied without materializing the matrix.
#[derive(Debug, Clone, Copy)]
pub struct CodeProjector<'a> {
    code: &'a StabilizerCode,
}

impl<'a> CodeProjector<'a> {
    pub fn apply<T: Real>(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        check_dim(self.code.n(), state.num_qubits())?;
        let half = Complex::new(T::c(0.5), T::zero());
        self.code.generators().iter().try_fold(state.clone(), |s, g| Ok(s.add(&s.apply_pauli(g)?)?.scaled(half)))
    }

    /// The full `2^n × 2^n` matrix.
    pub fn matrix<T: Real>(&self) -> Result<DenseMatrix<T>> {
        let n = self.code.n();
        let columns =
            (0..1usize << n).map(|j| self.apply(&StateVector::basis_state(n, j)?)).collect::<Result<Vec<_>>>()?;
        DenseMatrix::from_columns(&columns)
    }

    pub fn trace<T: Real>(&self) -> Result<T> {
        let n = self.code.n();
        (0..1usize << n)
            .try_fold(T::zero(), |acc, j| Ok(acc + self.apply(&StateVector::<T>::basis_state(n, j)?)?.amplitude(j).re))
    }
}

pub fn codespace_projector(code: &StabilizerCode) -> Result<CodeProjector<'_>> {
    check_dense_guard(code.n())?;
    Ok(CodeProjector { code })
}

/// An orthonormal basis of the code space, built by projecting computational
/// basis states in index order and orthogonalizing.
pub fn code_basis<T: Real>(code: &StabilizerCode) -> Result<Vec<StateVector<T>>> {
    let projector = codespace_projector(code)?;
    let n = code.n();
    let target = 1usize << code.k();
    let mut basis: Vec<StateVector<T>> = Vec::with_capacity(target);
    for j in 0..1usize << n {
        let mut v = projector.apply(&StateVector::basis_state(n, j)?)?;
        // Two Gram-Schmidt passes keep the basis orthogonal to machine precision.
        for _ in 0..2 {
            for b in &basis {
                let c = b.inner(&v)?;
                v = v.add(&b.scaled(-c))?;
            }
        }
        if v.norm_sqr() > T::c(1e-8) {
            basis.push(v.normalized()?);
            if basis.len() == target {
                break;
            }
        }
    }
    Ok(basis)
}

/// Logical basis convention `(anchor, X̄)` of a catalog code: `|0_L⟩` is the
/// normalized projection of `(I + anchor)|0…0⟩`, and `|1_L⟩ = X̄|0_L⟩`.
///
/// The anchors give the standard codewords: `α|000⟩+β|111⟩`,
/// `α|+++⟩+β|−−−⟩`, the Shor triplet products and the Steane even/odd
/// Hamming codeword superpositions.
pub fn logical_basis_convention(name: &str) -> Option<(PauliOperator, PauliOperator)> {
    let (anchor, x) = match name {
        "bit_flip" => ("ZII", "XXX"),
        "phase_flip" => ("XII", "ZZZ"),
        "shor9" => ("XXXXXXXXX", "ZZZZZZZZZ"),
        "steane7" => ("ZZZZZZZ", "XXXXXXX"),
        "five_qubit" => ("ZZZZZ", "XXXXX"),
        _ => return None,
    };
    Some((anchor.parse().expect("constant"), x.parse().expect("constant")))
}

fn check_normalized<T: Real>(alpha: Complex<T>, beta: Complex<T>) -> Result<()> {
    let norm = alpha.norm_sqr() + beta.norm_sqr();
    if (norm - T::one()).abs() > T::c(NORMALIZATION_TOLERANCE) {
        return Err(Error::Domain(format!("input qubit has squared norm {norm}, expected 1")));
    }
    Ok(())
}

fn unknown_code(name: &str) -> Error {
    Error::UnknownCode { name: name.to_string(), valid: crate::stabilizer::CATALOG_NAMES.join(", ") }
}

/// `α|0_L⟩ + β|1_L⟩` for a catalog code.
pub fn encode<T: Real>(code_name: &str, alpha: Complex<T>, beta: Complex<T>) -> Result<StateVector<T>> {
    check_normalized(alpha, beta)?;
    let (anchor, logical_x) = logical_basis_convention(code_name).ok_or_else(|| unknown_code(code_name))?;
    let code = catalog(code_name)?;
    let zero = StateVector::<T>::zero_state(code.n())?;
    let seed = zero.add(&zero.apply_pauli(&anchor)?)?;
    let zero_l = codespace_projector(&code)?.apply(&seed)?.normalized()?;
    let one_l = zero_l.apply_pauli(&logical_x)?;
    zero_l.scaled(alpha).add(&one_l.scaled(beta))
}

/// Encoding through the two-CNOT circuits: CNOT(0→1), CNOT(0→2), followed for
/// the phase-flip code by a Hadamard on every qubit.
pub fn encode_circuit<T: Real>(code_name: &str, alpha: Complex<T>, beta: Complex<T>) -> Result<StateVector<T>> {
    check_normalized(alpha, beta)?;
    let mut gates = vec![Gate::Cnot { control: 0, target: 1 }, Gate::Cnot { control: 0, target: 2 }];
    match code_name {
        "bit_flip" => {}
        "phase_flip" => gates.extend([Gate::H(0), Gate::H(1), Gate::H(2)]),
        other => {
            return Err(Error::Domain(format!("no encoding circuit for '{other}'")));
        }
    }
    StateVector::qubit(alpha, beta).tensor(&StateVector::zero_state(2)?)?.apply_circuit(&gates)
}

/// Projective measurement of a Hermitian Pauli observable.
///
/// Returns the sampled eigenvalue and the renormalized post-measurement state.
pub fn measure_stabilizer<T: Real, R: Rng + ?Sized>(
    state: &StateVector<T>,
    g: &PauliOperator,
    rng: &mut R,
) -> Result<(i8, StateVector<T>)> {
    check_dim(state.num_qubits(), g.num_qubits())?;
    if !g.is_hermitian() {
        return Err(Error::Domain(format!("{g} is not Hermitian")));
    }
    let half = Complex::new(T::c(0.5), T::zero());
    let g_state = state.apply_pauli(g)?;
    let plus = state.add(&g_state)?.scaled(half);
    let minus = state.add(&g_state.scaled(Complex::new(-T::one(), T::zero())))?.scaled(half);
    let p_plus = plus.norm_sqr() / state.norm_sqr();
    let u = T::c(rng.gen::<f64>());
    if u < p_plus {
        Ok((1, plus.normalized()?))
    } else {
        Ok((-1, minus.normalized()?))
    }
}

/// The syndrome-extraction circuit for the 3-qubit bit-flip code.
///
/// The data register is extended by two ancillas (qubits 3 and 4), parities
/// `Z1Z2` and `Z2Z3` are copied into them with four CNOTs, the ancillas are
/// measured in the Z basis, and the correction is applied from the fixed
/// outcome table: `(+1,+1)` nothing, `(+1,-1)` X on qubit 3, `(-1,+1)` X on
/// qubit 1, `(-1,-1)` X on qubit 2. Returns the syndrome and the corrected
/// 3-qubit data state.
pub fn bit_flip_syndrome_circuit<T: Real, R: Rng + ?Sized>(
    data: &StateVector<T>,
    rng: &mut R,
) -> Result<(Syndrome, StateVector<T>)> {
    check_dim(3, data.num_qubits())?;
    let register = data.tensor(&StateVector::zero_state(2)?)?.apply_circuit(&[
        Gate::Cnot { control: 0, target: 3 },
        Gate::Cnot { control: 1, target: 3 },
        Gate::Cnot { control: 1, target: 4 },
        Gate::Cnot { control: 2, target: 4 },
    ])?;
    let (o1, register) = measure_stabilizer(&register, &"IIIZI".parse()?, rng)?;
    let (o2, register) = measure_stabilizer(&register, &"IIIIZ".parse()?, rng)?;
    let ancilla = (((o1 < 0) as usize) << 1) | (o2 < 0) as usize;
    let amps = (0..8).map(|d| register.amplitude((d << 2) | ancilla)).collect();
    let collapsed = StateVector::from_amplitudes(3, amps)?;
    let correction = match (o1, o2) {
        (1, 1) => None,
        (1, _) => Some(2),
        (_, 1) => Some(0),
        _ => Some(1),
    };
    let corrected = match correction {
        Some(q) => collapsed.apply_gate(&Gate::X(q))?,
        None => collapsed,
    };
    Ok((Syndrome::from_outcomes(&[o1, o2]), corrected))
}

/// An error operator for the Knill-Laflamme test.
#[derive(Debug, Clone)]
pub enum ErrorOperator<T: Real> {
    Pauli(PauliOperator),
    Matrix(DenseMatrix<T>),
}

impl<T: Real> ErrorOperator<T> {
    fn apply(&self, s: &StateVector<T>) -> Result<StateVector<T>> {
        match self {
            ErrorOperator::Pauli(p) => s.apply_pauli(p),
            ErrorOperator::Matrix(m) => m.apply(s),
        }
    }
}

impl<T: Real> From<PauliOperator> for ErrorOperator<T> {
    fn from(p: PauliOperator) -> Self {
        ErrorOperator::Pauli(p)
    }
}

#[derive(Debug, Clone)]
pub struct KLReport<T: Real> {
    /// `α_ij = tr(P E_i† E_j P) / 2^k`.
    pub alpha: DenseMatrix<T>,
    pub hermitian_deviation: T,
    /// Largest Frobenius norm of `P E_i† E_j P - α_ij P` over all pairs.
    pub projection_residual: T,
    pub correctable: bool,
}

/// Tests `P E_i† E_j P = α_ij P` for every pair of errors.
///
/// With an orthonormal code basis `{|c_m⟩}`, `P E_i† E_j P` restricted to the
/// code space is the `2^k × 2^k` block `B_mm' = ⟨E_i c_m | E_j c_m'⟩`, and the
/// condition holds iff that block is a multiple of the identity.
pub fn kl_check<T: Real>(code: &StabilizerCode, errors: &[ErrorOperator<T>]) -> Result<KLReport<T>> {
    let basis = code_basis::<T>(code)?;
    let images = errors
        .iter()
        .map(|e| basis.iter().map(|c| e.apply(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let count = errors.len();
    let dim = basis.len();
    let dim_t = T::from_usize(dim).expect("small dimension");
    let mut alpha = DenseMatrix::zeros(count);
    let mut residual = T::zero();
    for i in 0..count {
        for j in 0..count {
            let mut block = vec![Complex::new(T::zero(), T::zero()); dim * dim];
            for m in 0..dim {
                for mp in 0..dim {
                    block[m * dim + mp] = images[i][m].inner(&images[j][mp])?;
                }
            }
            let a = (0..dim).fold(Complex::new(T::zero(), T::zero()), |acc, m| acc + block[m * dim + m]) / dim_t;
            alpha[(i, j)] = a;
            let mut frob = T::zero();
            for m in 0..dim {
                for mp in 0..dim {
                    let expected = if m == mp { a } else { Complex::new(T::zero(), T::zero()) };
                    frob = frob + (block[m * dim + mp] - expected).norm_sqr();
                }
            }
            residual = residual.max(frob.sqrt());
        }
    }
    let mut hermitian_deviation = T::zero();
    for i in 0..count {
        for j in 0..count {
            hermitian_deviation = hermitian_deviation.max((alpha[(i, j)] - alpha[(j, i)].conj()).norm());
        }
    }
    let correctable = residual <= T::c(KL_RESIDUAL_TOLERANCE) && hermitian_deviation <= T::c(KL_HERMITIAN_TOLERANCE);
    Ok(KLReport { alpha, hermitian_deviation, projection_residual: residual, correctable })
}

/// Measures every generator of a catalog code, looks the syndrome up in its
/// full-alphabet table and applies the correction.
#[derive(Debug, Clone)]
pub struct ContinuousCorrector {
    code: StabilizerCode,
    table: SyndromeTable,
}

impl ContinuousCorrector {
    pub fn new(code_name: &str) -> Result<Self> {
        let code = catalog(code_name)?;
        check_dense_guard(code.n())?;
        let table = build_table(&code, ChannelKind::Depolarizing)?;
        Ok(Self { code, table })
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    /// Returns the corrected state together with the measured syndrome.
    pub fn correct_with_syndrome<T: Real, R: Rng + ?Sized>(
        &self,
        corrupted: &StateVector<T>,
        rng: &mut R,
    ) -> Result<(Syndrome, StateVector<T>)> {
        let mut state = corrupted.normalized()?;
        let mut outcomes = Vec::with_capacity(self.code.r());
        for g in self.code.generators() {
            let (o, post) = measure_stabilizer(&state, g, rng)?;
            outcomes.push(o);
            state = post;
        }
        let syndrome = Syndrome::from_outcomes(&outcomes);
        let decoded = self.table.decode(&syndrome)?;
        Ok((syndrome, state.apply_pauli(&decoded.correction)?))
    }

    pub fn correct<T: Real, R: Rng + ?Sized>(&self, corrupted: &StateVector<T>, rng: &mut R) -> Result<StateVector<T>> {
        Ok(self.correct_with_syndrome(corrupted, rng)?.1)
    }
}

pub fn correct_continuous_error<T: Real, R: Rng + ?Sized>(
    code_name: &str,
    corrupted: &StateVector<T>,
    rng: &mut R,
) -> Result<StateVector<T>> {
    ContinuousCorrector::new(code_name)?.correct(corrupted, rng)
}

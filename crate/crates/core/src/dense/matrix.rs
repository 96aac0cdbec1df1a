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

use super::{check_dense_guard, i_pow, StateVector};
use crate::error::{check_dim, Result};
use crate::pauli::{PauliLetter, PauliOperator};
use crate::scalar::Real;

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T: Real> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![Complex::new(T::zero(), T::zero()); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            check_dim(dim, r.len())?;
            data.extend(r);
        }
        Ok(Self { dim, data })
    }

    /// Builds the matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[StateVector<T>]) -> Result<Self> {
        let dim = columns.len();
        let mut m = Self::zeros(dim);
        for (j, col) in columns.iter().enumerate() {
            check_dim(dim, col.amplitudes().len())?;
            for (i, a) in col.amplitudes().iter().enumerate() {
                m[(i, j)] = *a;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut out = Self::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self[(i, j)];
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out[(i * other.dim + k, j * other.dim + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        let amps = state.amplitudes();
        check_dim(self.dim, amps.len())?;
        let out = (0..self.dim)
            .map(|i| {
                self.data[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(amps)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (m, a)| acc + m * a)
            })
            .collect();
        StateVector::from_amplitudes(state.num_qubits(), out)
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scaled(&self, c: Complex<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(T::zero(), T::max)
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for DenseMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

fn letter_matrix<T: Real>(letter: PauliLetter) -> DenseMatrix<T> {
    let z = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    let rows = match letter {
        PauliLetter::I => [[one, z], [z, one]],
        PauliLetter::X => [[z, one], [one, z]],
        PauliLetter::Y => [[z, -i], [i, z]],
        PauliLetter::Z => [[one, z], [z, -one]],
    };
    DenseMatrix { dim: 2, data: rows.iter().flatten().copied().collect() }
}

/// Kronecker product of the per-qubit Pauli matrices times the literal sign.
pub fn pauli_matrix<T: Real>(p: &PauliOperator) -> Result<DenseMatrix<T>> {
    check_dense_guard(p.num_qubits())?;
    let m = (0..p.num_qubits()).fold(DenseMatrix::identity(1), |acc, q| acc.kron(&letter_matrix(p.letter(q))));
    Ok(m.scaled(i_pow(p.literal_phase())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_matrix_matches_apply_pauli() {
        for s in ["XYZ", "-iYIZ", "+iXXY", "ZZI"] {
            let p: PauliOperator = s.parse().unwrap();
            let m = pauli_matrix::<f64>(&p).unwrap();
            for b in 0..8 {
                let e = StateVector::<f64>::basis_state(3, b).unwrap();
                let via_matrix = m.apply(&e).unwrap();
                let via_bits = e.apply_pauli(&p).unwrap();
                assert!(via_matrix.max_abs_diff(&via_bits) < 1e-15, "{s} on {b}");
            }
        }
    }

    #[test]
    fn adjoint_and_trace() {
        let y = pauli_matrix::<f64>(&"Y".parse().unwrap()).unwrap();
        assert_eq!(y.adjoint(), y);
        assert_eq!(y.trace(), Complex::new(0.0, 0.0));
        let yy = y.matmul(&y).unwrap();
        assert!(yy.max_abs_diff(&DenseMatrix::identity(2)) < 1e-15);
    }
}

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

//! Exact state-vector simulation for small registers.
//!
//! This is the ground-truth side of the workbench: everything the symplectic
//! code computes about Paulis and syndromes can be re-derived here from
//! amplitudes. Basis index bit `n - 1 - q` holds qubit `q`, so qubit 0 is the
//! leftmost label in `|q0 q1 … q(n-1)⟩`.

mod code;
mod matrix;

pub use code::{
    bit_flip_syndrome_circuit, code_basis, codespace_projector, correct_continuous_error, encode, encode_circuit,
    kl_check, logical_basis_convention, measure_stabilizer, CodeProjector, ContinuousCorrector, ErrorOperator,
    KLReport, KL_HERMITIAN_TOLERANCE, KL_RESIDUAL_TOLERANCE,
};
pub use matrix::{pauli_matrix, DenseMatrix};

use num_complex::Complex;

use crate::error::{check_dim, Error, Result};
use crate::pauli::PauliOperator;
use crate::scalar::Real;

/// Largest register the dense oracle accepts (4096 amplitudes).
pub const DENSE_QUBIT_LIMIT: usize = 12;

pub(crate) fn check_dense_guard(n: usize) -> Result<()> {
    if n > DENSE_QUBIT_LIMIT {
        Err(Error::Capacity { what: "dense qubit count", value: n, limit: DENSE_QUBIT_LIMIT })
    } else {
        Ok(())
    }
}

/// A pure state of `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Real> {
    n: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// `|0…0⟩`.
    pub fn zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        check_dense_guard(n)?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::Dimension { expected: dim, found: index });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
        amps[index] = Complex::new(T::one(), T::zero());
        Ok(Self { n, amps })
    }

    /// Wraps raw amplitudes. No normalization is applied.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex<T>>) -> Result<Self> {
        check_dense_guard(n)?;
        check_dim(1 << n, amps.len())?;
        Ok(Self { n, amps })
    }

    /// `α|0⟩ + β|1⟩`.
    pub fn qubit(alpha: Complex<T>, beta: Complex<T>) -> Self {
        Self { n: 1, amps: vec![alpha, beta] }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex<T> {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Rescales to unit norm. Fails on the zero vector.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm <= T::epsilon() {
            return Err(Error::Domain("cannot normalize a zero vector".into()));
        }
        Ok(self.scaled(Complex::new(T::one() / norm, T::zero())))
    }

    pub fn scaled(&self, c: Complex<T>) -> Self {
        Self { n: self.n, amps: self.amps.iter().map(|a| a * c).collect() }
    }

    /// `self + other`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let amps = self.amps.iter().zip(&other.amps).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, amps })
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        check_dim(self.n, other.n)?;
        Ok(self.amps.iter().zip(&other.amps).fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b))
    }

    /// `|⟨self|other⟩|`; equals one for normalized states that agree up to a
    /// global phase.
    pub fn overlap(&self, other: &Self) -> Result<T> {
        Ok(self.inner(other)?.norm())
    }

    /// `self ⊗ other`, with `self` on the leftmost qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        check_dense_guard(self.n + other.n)?;
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(Self { n: self.n + other.n, amps })
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm()).fold(T::zero(), T::max)
    }

    #[inline]
    fn mask(&self, qubit: usize) -> usize {
        1 << (self.n - 1 - qubit)
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit < self.n {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.n, found: qubit })
        }
    }

    /// Applies a 2×2 matrix `[[m00, m01], [m10, m11]]` to one qubit.
    pub fn apply_single_qubit(&self, qubit: usize, m: [[Complex<T>; 2]; 2]) -> Result<Self> {
        self.check_qubit(qubit)?;
        let mask = self.mask(qubit);
        let mut out = self.clone();
        for i0 in 0..self.amps.len() {
            if i0 & mask != 0 {
                continue;
            }
            let i1 = i0 | mask;
            let (a0, a1) = (self.amps[i0], self.amps[i1]);
            out.amps[i0] = m[0][0] * a0 + m[0][1] * a1;
            out.amps[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
        Ok(out)
    }

    /// Applies `i^l X^x Z^z` exactly, global phase included.
    pub fn apply_pauli(&self, p: &PauliOperator) -> Result<Self> {
        check_dim(self.n, p.num_qubits())?;
        let xmask = p.x_bits().iter_ones().fold(0usize, |m, q| m | self.mask(q));
        let zmask = p.z_bits().iter_ones().fold(0usize, |m, q| m | self.mask(q));
        let phase = i_pow::<T>(p.phase_exp());
        let mut amps = vec![Complex::new(T::zero(), T::zero()); self.amps.len()];
        for (b, a) in self.amps.iter().enumerate() {
            let signed = if (b & zmask).count_ones() % 2 == 1 { -a } else { *a };
            amps[b ^ xmask] = signed * phase;
        }
        Ok(Self { n: self.n, amps })
    }

    pub fn apply_gate(&self, g: &Gate) -> Result<Self> {
        g.validate(self.n)?;
        let c = |re: f64, im: f64| Complex::new(T::c(re), T::c(im));
        let h = T::FRAC_1_SQRT_2();
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        match *g {
            Gate::H(q) => {
                let hh = Complex::new(h, T::zero());
                self.apply_single_qubit(q, [[hh, hh], [hh, -hh]])
            }
            Gate::S(q) => self.apply_single_qubit(q, [[one, zero], [zero, c(0.0, 1.0)]]),
            Gate::T(q) => self.apply_single_qubit(q, [[one, zero], [zero, Complex::new(h, h)]]),
            Gate::X(q) => self.apply_single_qubit(q, [[zero, one], [one, zero]]),
            Gate::Y(q) => self.apply_single_qubit(q, [[zero, c(0.0, -1.0)], [c(0.0, 1.0), zero]]),
            Gate::Z(q) => self.apply_single_qubit(q, [[one, zero], [zero, -one]]),
            Gate::Cnot { control, target } => {
                let (cm, tm) = (self.mask(control), self.mask(target));
                let mut out = self.clone();
                for i in 0..self.amps.len() {
                    if i & cm != 0 && i & tm == 0 {
                        out.amps.swap(i, i | tm);
                    }
                }
                Ok(out)
            }
            Gate::Cz(a, b) => {
                let m = self.mask(a) | self.mask(b);
                let mut out = self.clone();
                for (i, amp) in out.amps.iter_mut().enumerate() {
                    if i & m == m {
                        *amp = -*amp;
                    }
                }
                Ok(out)
            }
        }
    }

    /// Applies gates in order.
    pub fn apply_circuit(&self, gates: &[Gate]) -> Result<Self> {
        gates.iter().try_fold(self.clone(), |s, g| s.apply_gate(g))
    }
}

pub(crate) fn i_pow<T: Real>(k: u8) -> Complex<T> {
    match k % 4 {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    }
}

/// Clifford+T gate set. `Cnot` uses the first index as control; `Cz` is
/// symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    S(usize),
    T(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::S(q) | Gate::T(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => vec![q],
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) => vec![a, b],
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let qs = self.qubits();
        if let Some(&bad) = qs.iter().find(|&&q| q >= n) {
            return Err(Error::Dimension { expected: n, found: bad });
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(Error::Domain(format!("two-qubit gate on repeated qubit {}", qs[0])));
        }
        Ok(())
    }
}

pub fn apply_gate<T: Real>(state: &StateVector<T>, g: &Gate) -> Result<StateVector<T>> {
    state.apply_gate(g)
}

pub fn apply_pauli<T: Real>(state: &StateVector<T>, p: &PauliOperator) -> Result<StateVector<T>> {
    state.apply_pauli(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn hadamard_makes_plus() {
        let s = StateVector::<f64>::zero_state(1).unwrap().apply_gate(&Gate::H(0)).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(s.max_abs_diff(&StateVector::qubit(c(h, 0.0), c(h, 0.0))) < 1e-12);
    }

    #[test]
    fn phase_on_one() {
        let s = StateVector::<f64>::basis_state(1, 1).unwrap().apply_gate(&Gate::S(0)).unwrap();
        assert!(s.max_abs_diff(&StateVector::qubit(c(0.0, 0.0), c(0.0, 1.0))) < 1e-12);
    }

    #[test]
    fn cnot_control_is_first_index() {
        // |10⟩ has qubit 0 set, index 0b10
        let s = StateVector::<f64>::basis_state(2, 0b10).unwrap();
        let out = s.apply_gate(&Gate::Cnot { control: 0, target: 1 }).unwrap();
        assert_eq!(out.amplitude(0b11), c(1.0, 0.0));
        let back = StateVector::<f64>::basis_state(2, 0b01).unwrap();
        assert_eq!(back.apply_gate(&Gate::Cnot { control: 0, target: 1 }).unwrap(), back);
    }

    #[test]
    fn gate_validation() {
        let s = StateVector::<f64>::zero_state(2).unwrap();
        assert!(s.apply_gate(&Gate::H(2)).is_err());
        assert!(s.apply_gate(&Gate::Cnot { control: 1, target: 1 }).is_err());
        assert!(s.apply_gate(&Gate::Cz(0, 5)).is_err());
        assert!(StateVector::<f64>::zero_state(13).is_err());
    }

    #[test]
    fn pauli_on_codeword() {
        let (a, b) = (c(0.6, 0.0), c(0.0, 0.8));
        let mut amps = vec![c(0.0, 0.0); 8];
        amps[0b000] = a;
        amps[0b111] = b;
        let psi = StateVector::from_amplitudes(3, amps).unwrap();
        let out = psi.apply_pauli(&p("XII")).unwrap();
        assert_eq!(out.amplitude(0b100), a);
        assert_eq!(out.amplitude(0b011), b);
        assert_eq!(psi.apply_pauli(&p("III")).unwrap(), psi);
    }

    #[test]
    fn z_swaps_plus_minus() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::qubit(c(h, 0.0), c(h, 0.0));
        let minus = StateVector::qubit(c(h, 0.0), c(-h, 0.0));
        assert!(plus.apply_pauli(&p("Z")).unwrap().max_abs_diff(&minus) < 1e-12);
    }

    #[test]
    fn y_phase_convention() {
        // Y|0⟩ = i|1⟩
        let s = StateVector::<f64>::zero_state(1).unwrap().apply_pauli(&p("Y")).unwrap();
        assert!((s.amplitude(1) - c(0.0, 1.0)).norm() < 1e-15);
        let g = StateVector::<f64>::zero_state(1).unwrap().apply_gate(&Gate::Y(0)).unwrap();
        assert!(s.max_abs_diff(&g) < 1e-15);
    }

    #[test]
    fn works_in_single_precision() {
        let s = StateVector::<f32>::zero_state(2)
            .unwrap()
            .apply_circuit(&[Gate::H(0), Gate::Cnot { control: 0, target: 1 }, Gate::T(1), Gate::S(0)])
            .unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-6);
    }
}

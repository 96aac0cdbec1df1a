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

//! The n-qubit Pauli group in binary symplectic form.
//!
//! An operator is stored as `i^l · X^x · Z^z`, where `x` and `z` are packed bit
//! vectors and `l` is the phase exponent mod 4. Qubit 0 is the leftmost
//! character of the text form. Because `Y = iXZ`, a literal `Y` on a qubit is
//! stored as `x = z = 1` and contributes one to `l`.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVector;
use crate::error::{check_dim, Error, Result};

/// Single-qubit Pauli label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    /// The non-identity letters in tie-break order.
    pub const NON_IDENTITY: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// An element of the n-qubit Pauli group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    phase: u8,
    x: BitVector,
    z: BitVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self { phase: 0, x: BitVector::zeros(n), z: BitVector::zeros(n) }
    }

    /// Builds `i^phase_exp · X^x · Z^z`.
    pub fn from_bits(x: BitVector, z: BitVector, phase_exp: u8) -> Result<Self> {
        check_dim(x.len(), z.len())?;
        Ok(Self { phase: phase_exp % 4, x, z })
    }

    /// Builds the Hermitian operator with the given X/Z pattern and a `+1`
    /// literal sign, e.g. `x = z = [1]` gives `Y`.
    pub fn hermitian_from_bits(x: BitVector, z: BitVector) -> Result<Self> {
        check_dim(x.len(), z.len())?;
        let phase = (x.and_count(&z) % 4) as u8;
        Ok(Self { phase, x, z })
    }

    /// A single letter on `qubit` and identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Self {
        let mut p = Self::identity(n);
        p.set_letter(qubit, letter);
        p
    }

    /// Builds a Hermitian operator from per-qubit letters.
    pub fn from_letters(letters: &[PauliLetter]) -> Self {
        let mut p = Self::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            p.set_letter(q, l);
        }
        p
    }

    /// Overwrites the letter on `qubit`, keeping the literal sign unchanged.
    pub fn set_letter(&mut self, qubit: usize, letter: PauliLetter) {
        let had_y = self.x.get(qubit) && self.z.get(qubit);
        let (x, z) = letter.bits();
        self.x.set(qubit, x);
        self.z.set(qubit, z);
        let now_y = letter == PauliLetter::Y;
        self.phase = (self.phase + 4 + now_y as u8 - had_y as u8) % 4;
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        PauliLetter::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    /// Number of qubits carrying a non-identity factor.
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    pub fn support(&self) -> BitVector {
        self.x.or(&self.z)
    }

    /// True when the X/Z pattern is trivial, i.e. the operator is a scalar.
    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.is_scalar()
    }

    fn y_count(&self) -> usize {
        self.x.and_count(&self.z)
    }

    /// Hermitian operators are exactly those with `l ≡ |x ∧ z| (mod 2)`.
    pub fn is_hermitian(&self) -> bool {
        (self.phase as usize + self.y_count()).is_multiple_of(2)
    }

    /// Exponent `m` such that the operator equals `i^m` times the unsigned
    /// letter string.
    pub fn literal_phase(&self) -> u8 {
        ((self.phase as usize + 4 - self.y_count() % 4) % 4) as u8
    }

    /// The same operator with its literal sign set to `+1`.
    pub fn unsigned(&self) -> Self {
        Self { phase: (self.y_count() % 4) as u8, x: self.x.clone(), z: self.z.clone() }
    }

    /// Multiplies by `i^k`.
    pub fn times_i_pow(&self, k: u8) -> Self {
        Self { phase: (self.phase + k) % 4, x: self.x.clone(), z: self.z.clone() }
    }

    /// Exact group product `self · other`.
    ///
    /// Moving `Z^{z_a}` past `X^{x_b}` costs a sign `(-1)^{z_a · x_b}`, so the
    /// product is `i^{l_a + l_b + 2 (z_a · x_b)} X^{x_a ⊕ x_b} Z^{z_a ⊕ z_b}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_dim(self.num_qubits(), other.num_qubits())?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let swap = (self.z.and_count(&other.x) % 2) as u8;
        Self { phase: (self.phase + other.phase + 2 * swap) % 4, x: self.x.xor(&other.x), z: self.z.xor(&other.z) }
    }

    /// In-place right multiplication `self ← self · other`.
    pub(crate) fn mul_assign_unchecked(&mut self, other: &Self) {
        let swap = (self.z.and_count(&other.x) % 2) as u8;
        self.phase = (self.phase + other.phase + 2 * swap) % 4;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        check_dim(self.num_qubits(), other.num_qubits())?;
        Ok(!self.anticommutes_unchecked(other))
    }

    /// Symplectic inner product `x_a · z_b + z_a · x_b (mod 2)`.
    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// `(x | z)` as one vector of length `2n`.
    pub fn symplectic_vector(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    /// Renders the letter string without any sign prefix.
    pub fn letters_string(&self) -> String {
        (0..self.num_qubits()).map(|q| self.letter(q).as_char()).collect()
    }
}

/// Parses the text form, e.g. `"XIZ"`, `"-YY"`, `"+iZ"`.
pub fn pauli_from_string(s: &str) -> Result<PauliOperator> {
    s.parse()
}

/// Exact product `a · b`.
pub fn pauli_multiply(a: &PauliOperator, b: &PauliOperator) -> Result<PauliOperator> {
    a.multiply(b)
}

pub fn commutes(a: &PauliOperator, b: &PauliOperator) -> Result<bool> {
    a.commutes(b)
}

pub fn weight(a: &PauliOperator) -> usize {
    a.weight()
}

fn split_phase_prefix(s: &str) -> (u8, &str) {
    const PREFIXES: [(&str, u8); 9] =
        [("+i", 1), ("-i", 3), ("\u{2212}i", 3), ("i", 1), ("+", 0), ("-", 2), ("\u{2212}", 2), ("+1", 0), ("-1", 2)];
    // Longest match first so "+i" is not read as "+" followed by 'i'.
    let mut best: Option<(usize, u8)> = None;
    for (p, m) in PREFIXES {
        if s.starts_with(p) && best.is_none_or(|(len, _)| p.len() > len) {
            best = Some((p.len(), m));
        }
    }
    match best {
        Some((len, m)) => (m, &s[len..]),
        None => (0, s),
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (literal_phase, body) = split_phase_prefix(s);
        let offset = s.chars().count() - body.chars().count();
        if body.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        let mut letters = Vec::with_capacity(body.len());
        for (i, ch) in body.chars().enumerate() {
            let letter = match ch {
                'I' => PauliLetter::I,
                'X' => PauliLetter::X,
                'Y' => PauliLetter::Y,
                'Z' => PauliLetter::Z,
                _ => return Err(Error::InvalidCharacter { position: offset + i, ch }),
            };
            letters.push(letter);
        }
        Ok(PauliOperator::from_letters(&letters).times_i_pow(literal_phase))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.literal_phase() {
            0 => "",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{}", self.letters_string())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

/// Enumerates every Hermitian Pauli of exactly weight `w` on `n` qubits whose
/// non-identity letters come from `alphabet`.
///
/// Order is lexicographic in (support positions, letters), with the alphabet
/// order giving letter precedence. This order is the tie-break rule wherever
/// a minimum-weight representative is chosen.
pub fn paulis_of_weight(n: usize, w: usize, alphabet: &[PauliLetter]) -> WeightEnumerator {
    WeightEnumerator::new(n, w, alphabet)
}

pub struct WeightEnumerator {
    n: usize,
    alphabet: Vec<PauliLetter>,
    support: Vec<usize>,
    digits: Vec<usize>,
    done: bool,
}

impl WeightEnumerator {
    fn new(n: usize, w: usize, alphabet: &[PauliLetter]) -> Self {
        let done = w > n || (w > 0 && alphabet.is_empty());
        Self { n, alphabet: alphabet.to_vec(), support: (0..w).collect(), digits: vec![0; w], done }
    }

    fn advance(&mut self) {
        let a = self.alphabet.len();
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < a {
                return;
            }
            self.digits[i] = 0;
        }
        let w = self.support.len();
        let mut i = w;
        while i > 0 {
            i -= 1;
            if self.support[i] < self.n - w + i {
                self.support[i] += 1;
                for j in i + 1..w {
                    self.support[j] = self.support[j - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for WeightEnumerator {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.done {
            return None;
        }
        let mut p = PauliOperator::identity(self.n);
        for (&q, &d) in self.support.iter().zip(&self.digits) {
            p.set_letter(q, self.alphabet[d]);
        }
        if self.support.is_empty() {
            self.done = true;
        } else {
            self.advance();
        }
        Some(p)
    }
}

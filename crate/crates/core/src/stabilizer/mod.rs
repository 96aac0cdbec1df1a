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

//! Stabilizer codes: validation, syndromes, group structure, distance,
//! degeneracy, logical operators, CSS construction and the built-in catalog.

mod catalog;
mod distance;
mod group;
mod logical;

pub use catalog::{catalog, CATALOG_NAMES};
pub use distance::{distance, is_degenerate, Degeneracy, Distance, DEFAULT_DISTANCE_CAP};
pub use group::{enumerate_group, GROUP_ENUMERATION_LIMIT};
pub use logical::logical_operators;

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVector;
use crate::classical::{first_css_conflict, BinaryMatrix};
use crate::error::{check_dim, Error, Result};
use crate::pauli::{PauliLetter, PauliOperator};

/// Measured generator outcomes. Bit `i` is set when the error anticommutes
/// with generator `i`, i.e. the measurement of that generator returns `-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome {
    bits: BitVector,
}

impl Syndrome {
    pub fn new(bits: BitVector) -> Self {
        Self { bits }
    }

    pub fn from_outcomes(outcomes: &[i8]) -> Self {
        Self { bits: BitVector::from_bools(outcomes.iter().map(|&o| o < 0)) }
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// All generators returned `+1`.
    pub fn is_trivial(&self) -> bool {
        self.bits.is_zero()
    }

    /// `±1` eigenvalues in generator order.
    pub fn outcomes(&self) -> Vec<i8> {
        self.bits.iter().map(|b| if b { -1 } else { 1 }).collect()
    }

    /// The `(+1,-1)` style rendering.
    pub fn outcome_string(&self) -> String {
        let parts: Vec<&str> = self.bits.iter().map(|b| if b { "-1" } else { "+1" }).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self.bits)
    }
}

/// Reduced echelon form of the stabilizer group, with the actual Pauli
/// products kept so that signs survive elimination.
///
/// Pivot columns index the symplectic vector `(x | z)`.
#[derive(Clone, Debug)]
struct GroupEchelon {
    n: usize,
    rows: Vec<PauliOperator>,
    pivots: Vec<usize>,
}

impl GroupEchelon {
    fn new(n: usize) -> Self {
        Self { n, rows: Vec::new(), pivots: Vec::new() }
    }

    fn bit(&self, p: &PauliOperator, col: usize) -> bool {
        if col < self.n {
            p.x_bits().get(col)
        } else {
            p.z_bits().get(col - self.n)
        }
    }

    fn first_col(&self, p: &PauliOperator) -> Option<usize> {
        p.x_bits().first_one().or_else(|| p.z_bits().first_one().map(|c| c + self.n))
    }

    /// Returns `R · p` where `R` is the product of rows needed to clear every
    /// pivot column.
    fn reduce(&self, p: &PauliOperator) -> PauliOperator {
        let mut out = p.clone();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if self.bit(&out, col) {
                out = row.mul_unchecked(&out);
            }
        }
        out
    }

    /// Inserts `p`; on dependence returns the scalar remainder instead.
    fn insert(&mut self, p: &PauliOperator) -> std::result::Result<(), PauliOperator> {
        let r = self.reduce(p);
        let Some(col) = self.first_col(&r) else {
            return Err(r);
        };
        for i in 0..self.rows.len() {
            if self.bit(&self.rows[i], col) {
                self.rows[i] = r.mul_unchecked(&self.rows[i]);
            }
        }
        self.rows.push(r);
        self.pivots.push(col);
        Ok(())
    }
}

/// An `[[n, k, d]]` stabilizer code.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    k: usize,
    generators: Vec<PauliOperator>,
    logical_pairs: Vec<(PauliOperator, PauliOperator)>,
    name: Option<String>,
    distance: Option<Distance>,
    redundant: Vec<usize>,
    echelon: GroupEchelon,
}

impl StabilizerCode {
    /// Validates a generator list on `n` qubits. An empty list gives the
    /// trivial code with `k = n`.
    ///
    /// Dependent generators are dropped; their input positions are reported by
    /// [`redundant_generators`](Self::redundant_generators).
    pub fn new(n: usize, generators: Vec<PauliOperator>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("code must act on at least one qubit".into()));
        }
        for g in &generators {
            check_dim(n, g.num_qubits())?;
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if generators[i].anticommutes_unchecked(&generators[j]) {
                    return Err(Error::AnticommutingGenerators(i, j));
                }
            }
        }
        // A non-Hermitian element squares to -I.
        if generators.iter().any(|g| !g.is_hermitian()) {
            return Err(Error::ContainsMinusIdentity);
        }
        let mut echelon = GroupEchelon::new(n);
        let mut kept = Vec::new();
        let mut redundant = Vec::new();
        for (i, g) in generators.into_iter().enumerate() {
            match echelon.insert(&g) {
                Ok(()) => kept.push(g),
                Err(rem) if rem.is_identity() => redundant.push(i),
                Err(_) => return Err(Error::ContainsMinusIdentity),
            }
        }
        Ok(Self {
            n,
            k: n - kept.len(),
            generators: kept,
            logical_pairs: Vec::new(),
            name: None,
            distance: None,
            redundant,
            echelon,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Computes and caches logical operators and the distance (searched up to
    /// weight `cap`).
    pub fn analyzed(mut self, cap: usize) -> Self {
        self.logical_pairs = logical_operators(&self);
        self.distance = Some(distance(&self, cap));
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of independent generators, `n - k`.
    pub fn r(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn logical_pairs(&self) -> &[(PauliOperator, PauliOperator)] {
        &self.logical_pairs
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn cached_distance(&self) -> Option<Distance> {
        self.distance
    }

    /// Input indices of generators dropped as linearly dependent.
    pub fn redundant_generators(&self) -> &[usize] {
        &self.redundant
    }

    pub fn had_dependent_generators(&self) -> bool {
        !self.redundant.is_empty()
    }

    /// Bit `i` is set iff `e` anticommutes with generator `i`.
    pub fn syndrome_of(&self, e: &PauliOperator) -> Result<Syndrome> {
        check_dim(self.n, e.num_qubits())?;
        Ok(self.syndrome_unchecked(e))
    }

    pub(crate) fn syndrome_unchecked(&self, e: &PauliOperator) -> Syndrome {
        Syndrome::new(BitVector::from_bools(self.generators.iter().map(|g| g.anticommutes_unchecked(e))))
    }

    /// Whether `p` lies in the stabilizer group, ignoring its overall phase.
    pub fn contains_up_to_phase(&self, p: &PauliOperator) -> bool {
        p.num_qubits() == self.n && self.echelon.reduce(p).is_scalar()
    }

    /// Exact membership, sign included.
    pub fn contains(&self, p: &PauliOperator) -> bool {
        p.num_qubits() == self.n && self.echelon.reduce(p).is_identity()
    }

    /// Whether every generator is pure X or pure Z type.
    pub fn is_css(&self) -> bool {
        self.generators.iter().all(|g| g.x_bits().is_zero() || g.z_bits().is_zero())
    }

    /// Parameters as `[[n,k,d]]`; `d` is printed as `?` before analysis.
    pub fn parameters_string(&self) -> String {
        match self.distance {
            Some(Distance::Exact(d)) => format!("[[{},{},{}]]", self.n, self.k, d),
            Some(Distance::AtLeast(d)) => format!("[[{},{},>={}]]", self.n, self.k, d),
            None => format!("[[{},{},?]]", self.n, self.k),
        }
    }
}

/// Validates a nonempty generator list of uniform length.
pub fn validate_generators(gens: Vec<PauliOperator>) -> Result<StabilizerCode> {
    let Some(first) = gens.first() else {
        return Err(Error::Validation("generator list is empty".into()));
    };
    let n = first.num_qubits();
    StabilizerCode::new(n, gens)
}

pub fn syndrome_of(code: &StabilizerCode, e: &PauliOperator) -> Result<Syndrome> {
    code.syndrome_of(e)
}

/// Parses a generator file: one Pauli string per line, `#` comments.
pub fn parse_generator_file(text: &str) -> Result<Vec<PauliOperator>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let p = PauliOperator::from_str(content).map_err(|e| match e {
            Error::InvalidCharacter { position, ch } => {
                Error::Parse(format!("line {}: invalid character '{ch}' at position {position}", lineno + 1))
            }
            other => other,
        })?;
        out.push(p);
    }
    Ok(out)
}

/// Builds the CSS code whose X-type generators are the rows of `hx` and whose
/// Z-type generators are the rows of `hz`.
pub fn css_from_parity_checks(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<StabilizerCode> {
    if let Some((x_row, z_row)) = first_css_conflict(hx, hz)? {
        return Err(Error::CssIncompatible { x_row, z_row });
    }
    let n = hx.num_cols();
    let typed = |row: &BitVector, letter: PauliLetter| {
        let mut p = PauliOperator::identity(n);
        for q in row.iter_ones() {
            p.set_letter(q, letter);
        }
        p
    };
    let gens = hx
        .rows()
        .iter()
        .map(|r| typed(r, PauliLetter::X))
        .chain(hz.rows().iter().map(|r| typed(r, PauliLetter::Z)))
        .collect();
    StabilizerCode::new(n, gens)
}

/// Result of the quantum Hamming-type bound `3n + 1 ≤ 2^(n-k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectBound {
    pub holds: bool,
    /// Both sides equal.
    pub perfect: bool,
    pub required: u128,
    /// `None` when `2^(n-k)` does not fit in 128 bits.
    pub available: Option<u128>,
}

pub fn perfect_code_bound(n: usize, k: usize) -> Result<PerfectBound> {
    if n <= k {
        return Err(Error::Domain(format!("need n > k, got n={n}, k={k}")));
    }
    let required = 3 * n as u128 + 1;
    let available = u32::try_from(n - k).ok().and_then(|r| 1u128.checked_shl(r)).filter(|_| n - k < 128);
    Ok(match available {
        Some(a) => PerfectBound { holds: required <= a, perfect: required == a, required, available },
        None => PerfectBound { holds: true, perfect: false, required, available: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn gens(list: &[&str]) -> Vec<PauliOperator> {
        list.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn validate_bit_flip() {
        let code = validate_generators(gens(&["ZZI", "IZZ"])).unwrap();
        assert_eq!((code.n(), code.k()), (3, 1));
        assert!(!code.had_dependent_generators());
    }

    #[test]
    fn validate_rejects_anticommuting() {
        assert_eq!(validate_generators(gens(&["XII", "ZII"])).unwrap_err(), Error::AnticommutingGenerators(0, 1));
    }

    #[test]
    fn validate_reduces_dependent_set() {
        let code = validate_generators(gens(&["ZZI", "IZZ", "ZIZ"])).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(code.r(), 2);
        assert_eq!(code.redundant_generators(), &[2]);
    }

    #[test]
    fn validate_rejects_minus_identity() {
        // ZZ · (-ZZ) = -I
        assert_eq!(validate_generators(gens(&["ZZ", "-ZZ"])).unwrap_err(), Error::ContainsMinusIdentity);
        // (XX)(ZZ) = -YY, so adding +YY puts -I in the group
        assert_eq!(validate_generators(gens(&["XX", "ZZ", "YY"])).unwrap_err(), Error::ContainsMinusIdentity);
        assert!(validate_generators(gens(&["XX", "ZZ", "-YY"])).is_ok());
        assert_eq!(validate_generators(gens(&["+iZ"])).unwrap_err(), Error::ContainsMinusIdentity);
        assert!(validate_generators(vec![]).is_err());
        assert!(matches!(validate_generators(gens(&["ZZ", "ZZZ"])).unwrap_err(), Error::Dimension { .. }));
    }

    #[test]
    fn membership_tracks_sign() {
        let code = validate_generators(gens(&["ZZI", "IZZ"])).unwrap();
        assert!(code.contains(&p("ZIZ")));
        assert!(!code.contains(&p("-ZIZ")));
        assert!(code.contains_up_to_phase(&p("-ZIZ")));
        assert!(code.contains(&p("III")));
        assert!(!code.contains_up_to_phase(&p("XXX")));
    }

    #[test]
    fn syndrome_examples() {
        let code = validate_generators(gens(&["ZZI", "IZZ"])).unwrap();
        let s = code.syndrome_of(&p("XII")).unwrap();
        assert_eq!(s.to_string(), "10");
        assert_eq!(s.outcomes(), vec![-1, 1]);
        assert_eq!(code.syndrome_of(&p("IXI")).unwrap().outcome_string(), "(-1,-1)");
        assert!(code.syndrome_of(&p("III")).unwrap().is_trivial());
        assert!(code.syndrome_of(&p("XX")).is_err());
        assert_eq!(Syndrome::from_outcomes(&[1, -1]).to_string(), "01");
    }

    #[test]
    fn css_steane_from_hamming() {
        let h = BinaryMatrix::hamming7();
        let code = css_from_parity_checks(&h, &h).unwrap();
        assert_eq!(code.k(), 1);
        let expected = gens(&["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"]);
        assert_eq!(code.generators(), expected.as_slice());
        assert!(code.is_css());
    }

    #[test]
    fn css_bit_flip_from_repetition() {
        let code = css_from_parity_checks(&BinaryMatrix::zeros(0, 3), &BinaryMatrix::repetition3()).unwrap();
        assert_eq!(code.generators(), gens(&["ZZI", "IZZ"]).as_slice());
        assert_eq!(code.k(), 1);
    }

    #[test]
    fn css_rejects_incompatible() {
        let rep = BinaryMatrix::repetition3();
        assert_eq!(css_from_parity_checks(&rep, &rep).unwrap_err(), Error::CssIncompatible { x_row: 0, z_row: 1 });
    }

    #[test]
    fn perfect_bound_examples() {
        let b = perfect_code_bound(5, 1).unwrap();
        assert!(b.holds && b.perfect);
        assert_eq!((b.required, b.available), (16, Some(16)));
        let b = perfect_code_bound(4, 1).unwrap();
        assert!(!b.holds);
        assert_eq!((b.required, b.available), (13, Some(8)));
        let b = perfect_code_bound(7, 1).unwrap();
        assert!(b.holds && !b.perfect);
        assert_eq!((b.required, b.available), (22, Some(64)));
        assert!(perfect_code_bound(3, 3).is_err());
        assert!(perfect_code_bound(400, 1).unwrap().holds);
    }

    #[test]
    fn generator_file_parsing() {
        let text = "# five qubit\nXZZXI\nIXZZX  # second\n\nXIXZZ\nZXIXZ\n";
        let g = parse_generator_file(text).unwrap();
        assert_eq!(g.len(), 4);
        assert!(matches!(parse_generator_file("XZ\nXQ\n"), Err(Error::Parse(_))));
    }
}

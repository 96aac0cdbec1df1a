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

use std::collections::HashMap;
use std::fmt;

use super::StabilizerCode;
use crate::pauli::{paulis_of_weight, PauliLetter, PauliOperator};

/// Default weight cap for the exhaustive distance search.
pub const DEFAULT_DISTANCE_CAP: usize = 4;

/// Outcome of a capped distance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// No logical operator of weight below this value exists.
    AtLeast(usize),
}

impl Distance {
    pub fn exact(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// Minimum weight of a Pauli that commutes with every generator but is not
/// itself a stabilizer element, searched in increasing weight up to `cap`.
pub fn distance(code: &StabilizerCode, cap: usize) -> Distance {
    let n = code.n();
    for w in 1..=cap.min(n) {
        let found = paulis_of_weight(n, w, &PauliLetter::NON_IDENTITY)
            .any(|p| code.syndrome_unchecked(&p).is_trivial() && !code.contains_up_to_phase(&p));
        if found {
            return Distance::Exact(w);
        }
    }
    if cap >= n {
        // Every candidate was checked: only stabilizers commute with the group.
        Distance::AtLeast(n + 1)
    } else {
        Distance::AtLeast(cap + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub degenerate: bool,
    /// First pair (in enumeration order) of distinct errors of weight at most
    /// the limit whose product is a stabilizer element.
    pub witness: Option<(PauliOperator, PauliOperator)>,
}

/// Checks whether two distinct errors of weight `≤ weight_limit` differ by a
/// stabilizer element.
pub fn is_degenerate(code: &StabilizerCode, weight_limit: usize) -> Degeneracy {
    let n = code.n();
    let errors: Vec<PauliOperator> =
        (0..=weight_limit.min(n)).flat_map(|w| paulis_of_weight(n, w, &PauliLetter::NON_IDENTITY)).collect();
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    let syndromes: Vec<_> = errors.iter().map(|e| code.syndrome_unchecked(e)).collect();
    for (i, s) in syndromes.iter().enumerate() {
        buckets.entry(s.clone()).or_default().push(i);
    }
    for (i, e) in errors.iter().enumerate() {
        for &j in &buckets[&syndromes[i]] {
            if j > i && code.contains_up_to_phase(&e.mul_unchecked(&errors[j])) {
                return Degeneracy { degenerate: true, witness: Some((e.clone(), errors[j].clone())) };
            }
        }
    }
    Degeneracy { degenerate: false, witness: None }
}

impl StabilizerCode {
    /// `floor((d - 1) / 2)` from the cached distance, if known exactly.
    pub fn correctable_weight(&self) -> Option<usize> {
        self.cached_distance().and_then(Distance::exact).map(|d| d.saturating_sub(1) / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::{catalog, validate_generators};

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_distances() {
        for (name, d) in [("bit_flip", 1), ("phase_flip", 1), ("shor9", 3), ("steane7", 3), ("five_qubit", 3)] {
            let code = catalog(name).unwrap();
            assert_eq!(distance(&code, DEFAULT_DISTANCE_CAP), Distance::Exact(d), "{name}");
        }
    }

    #[test]
    fn cap_marker() {
        let code = catalog("steane7").unwrap();
        assert_eq!(distance(&code, 2), Distance::AtLeast(3));
        let trivial_k0 = validate_generators(vec![p("XX"), p("ZZ")]).unwrap();
        assert_eq!(trivial_k0.k(), 0);
        assert_eq!(distance(&trivial_k0, 4), Distance::AtLeast(3));
    }

    #[test]
    fn degeneracy_verdicts() {
        let shor = catalog("shor9").unwrap();
        let deg = is_degenerate(&shor, 1);
        assert!(deg.degenerate);
        assert_eq!(deg.witness, Some((p("ZIIIIIIII"), p("IZIIIIIII"))));

        assert!(!is_degenerate(&catalog("steane7").unwrap(), 1).degenerate);
        assert!(!is_degenerate(&catalog("five_qubit").unwrap(), 1).degenerate);
        assert!(!is_degenerate(&catalog("bit_flip").unwrap(), 0).degenerate);
    }

    #[test]
    fn correctable_weight_from_distance() {
        assert_eq!(catalog("steane7").unwrap().correctable_weight(), Some(1));
        assert_eq!(catalog("bit_flip").unwrap().correctable_weight(), Some(0));
    }
}

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

use super::StabilizerCode;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

/// Largest generator count for which the full group is materialized.
pub const GROUP_ENUMERATION_LIMIT: usize = 20;

/// All `2^r` products of the generators, in Gray-code order starting at the
/// identity.
pub fn enumerate_group(code: &StabilizerCode) -> Result<Vec<PauliOperator>> {
    let r = code.r();
    if r > GROUP_ENUMERATION_LIMIT {
        return Err(Error::Capacity { what: "generator count", value: r, limit: GROUP_ENUMERATION_LIMIT });
    }
    let gens = code.generators();
    let mut current = PauliOperator::identity(code.n());
    let mut out = Vec::with_capacity(1 << r);
    out.push(current.clone());
    for i in 1u64..(1u64 << r) {
        // Gray code: step i toggles generator trailing_zeros(i). Generators
        // commute and square to I, so toggling is right-multiplication.
        let g = &gens[i.trailing_zeros() as usize];
        current.mul_assign_unchecked(g);
        out.push(current.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::{catalog, validate_generators};
    use std::collections::HashSet;

    #[test]
    fn bit_flip_group() {
        let code = catalog("bit_flip").unwrap();
        let group: HashSet<String> = enumerate_group(&code).unwrap().iter().map(|p| p.to_string()).collect();
        let expected: HashSet<String> = ["III", "ZZI", "IZZ", "ZIZ"].iter().map(|s| s.to_string()).collect();
        assert_eq!(group, expected);
    }

    #[test]
    fn trivial_code_group_is_identity() {
        let code = StabilizerCode::new(2, vec![]).unwrap();
        assert_eq!(code.k(), 2);
        let group = enumerate_group(&code).unwrap();
        assert_eq!(group.len(), 1);
        assert!(group[0].is_identity());
    }

    #[test]
    fn steane_group_has_64_commuting_elements() {
        let code = catalog("steane7").unwrap();
        let group = enumerate_group(&code).unwrap();
        assert_eq!(group.len(), 64);
        let distinct: HashSet<_> = group.iter().collect();
        assert_eq!(distinct.len(), 64);
        for a in &group {
            assert!(a.is_hermitian());
            for b in &group {
                assert!(a.commutes(b).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        let gens: Vec<PauliOperator> =
            (0..21).map(|q| PauliOperator::single(21, q, crate::pauli::PauliLetter::Z)).collect();
        let code = validate_generators(gens).unwrap();
        assert!(matches!(enumerate_group(&code), Err(Error::Capacity { .. })));
    }
}

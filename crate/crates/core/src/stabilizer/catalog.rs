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

use super::{validate_generators, StabilizerCode, DEFAULT_DISTANCE_CAP};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

pub const CATALOG_NAMES: [&str; 5] = ["bit_flip", "phase_flip", "shor9", "steane7", "five_qubit"];

fn generator_strings(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "bit_flip" => &["ZZI", "IZZ"],
        "phase_flip" => &["XXI", "IXX"],
        "shor9" => {
            &["ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"]
        }
        "steane7" => &["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
        "five_qubit" => &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        _ => return None,
    })
}

/// A built-in code with logical operators and distance already computed.
pub fn catalog(name: &str) -> Result<StabilizerCode> {
    let strings = generator_strings(name)
        .ok_or_else(|| Error::UnknownCode { name: name.to_string(), valid: CATALOG_NAMES.join(", ") })?;
    let gens = strings.iter().map(|s| s.parse::<PauliOperator>()).collect::<Result<Vec<_>>>()?;
    Ok(validate_generators(gens)?.with_name(name).analyzed(DEFAULT_DISTANCE_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        let expected = ["[[3,1,1]]", "[[3,1,1]]", "[[9,1,3]]", "[[7,1,3]]", "[[5,1,3]]"];
        for (name, params) in CATALOG_NAMES.iter().zip(expected) {
            let code = catalog(name).unwrap();
            assert_eq!(code.parameters_string(), params, "{name}");
            assert_eq!(code.name(), Some(*name));
            assert!(!code.had_dependent_generators());
        }
    }

    #[test]
    fn five_qubit_generators() {
        let code = catalog("five_qubit").unwrap();
        let text: Vec<String> = code.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(text, ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        assert!(!code.is_css());
    }

    #[test]
    fn shor_generators() {
        let code = catalog("shor9").unwrap();
        assert_eq!(code.r(), 8);
        let weights: Vec<usize> = code.generators().iter().map(|g| g.weight()).collect();
        assert_eq!(weights, [2, 2, 2, 2, 2, 2, 6, 6]);
    }

    #[test]
    fn unknown_name() {
        let err = catalog("bogus").unwrap_err();
        assert!(err.to_string().contains("five_qubit"));
    }
}

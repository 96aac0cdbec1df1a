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

use super::{enumerate_group, StabilizerCode};
use crate::bits::BitVector;
use crate::classical::{BinaryMatrix, RowSpace};
use crate::pauli::PauliOperator;

/// Largest generator count for which logical operators are reduced to a
/// minimum-weight representative of their stabilizer coset.
const COSET_REDUCTION_LIMIT: usize = 12;

fn symplectic_form(n: usize, a: &BitVector, b: &BitVector) -> bool {
    a.slice(0, n).dot(&b.slice(n, n)) ^ a.slice(n, n).dot(&b.slice(0, n))
}

/// Canonical logical pairs `(X̄_i, Z̄_i)` found by symplectic Gram-Schmidt on a
/// complement of the stabilizer inside its normalizer.
///
/// Candidates are tried pure-X first, then pure-Z, then general, so CSS codes
/// come out with X-type `X̄` and Z-type `Z̄`. When the group is small each
/// operator is replaced by the lightest element of its coset, which does not
/// change its action on the code space.
pub fn logical_operators(code: &StabilizerCode) -> Vec<(PauliOperator, PauliOperator)> {
    let n = code.n();
    let k = code.k();
    if k == 0 {
        return Vec::new();
    }
    let gens = code.generators();
    let gx = BinaryMatrix::from_bit_rows(n, gens.iter().map(|g| g.x_bits().clone()).collect()).expect("uniform n");
    let gz = BinaryMatrix::from_bit_rows(n, gens.iter().map(|g| g.z_bits().clone()).collect()).expect("uniform n");
    // v = (x|z) commutes with g iff g.z·x + g.x·z = 0, so the normalizer is the
    // kernel of the rows (g.z | g.x).
    let commutation = BinaryMatrix::from_bit_rows(2 * n, gens.iter().map(|g| g.z_bits().concat(g.x_bits())).collect())
        .expect("uniform n");

    let zeros = BitVector::zeros(n);
    let x_type = gz.kernel().into_iter().map(|x| x.concat(&zeros));
    let z_type = gx.kernel().into_iter().map(|z| zeros.concat(&z));
    let general = commutation.kernel().into_iter();

    let mut span = RowSpace::new();
    for g in gens {
        span.insert(&g.symplectic_vector());
    }
    let mut pool: Vec<BitVector> = Vec::with_capacity(2 * k);
    for v in x_type.chain(z_type).chain(general) {
        if pool.len() == 2 * k {
            break;
        }
        if span.insert(&v) {
            pool.push(v);
        }
    }
    debug_assert_eq!(pool.len(), 2 * k);

    let mut pairs = Vec::with_capacity(k);
    while !pool.is_empty() {
        let v = pool.remove(0);
        let j =
            pool.iter().position(|w| symplectic_form(n, &v, w)).expect("normalizer modulo stabilizer is symplectic");
        let w = pool.remove(j);
        for u in pool.iter_mut() {
            let with_w = symplectic_form(n, u, &w);
            let with_v = symplectic_form(n, u, &v);
            if with_w {
                u.xor_assign(&v);
            }
            if with_v {
                u.xor_assign(&w);
            }
        }
        pairs.push((v, w));
    }

    let to_pauli = |v: &BitVector| PauliOperator::hermitian_from_bits(v.slice(0, n), v.slice(n, n)).expect("length 2n");
    let group = if code.r() <= COSET_REDUCTION_LIMIT { enumerate_group(code).ok() } else { None };
    pairs
        .iter()
        .map(|(v, w)| {
            let (lx, lz) = (to_pauli(v), to_pauli(w));
            match &group {
                Some(group) => (lightest_in_coset(&lx, group), lightest_in_coset(&lz, group)),
                None => (lx, lz),
            }
        })
        .collect()
}

fn lightest_in_coset(op: &PauliOperator, group: &[PauliOperator]) -> PauliOperator {
    group
        .iter()
        .map(|s| {
            let prod = op.mul_unchecked(s);
            PauliOperator::hermitian_from_bits(prod.x_bits().clone(), prod.z_bits().clone()).expect("same n")
        })
        .min_by_key(|p| (p.weight(), p.support().iter_ones().collect::<Vec<_>>(), p.letters_string()))
        .expect("group contains identity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::{catalog, validate_generators, CATALOG_NAMES};

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn equivalent(code: &StabilizerCode, a: &PauliOperator, b: &PauliOperator) -> bool {
        code.contains_up_to_phase(&a.multiply(b).unwrap())
    }

    fn check_pairs(code: &StabilizerCode, pairs: &[(PauliOperator, PauliOperator)]) {
        assert_eq!(pairs.len(), code.k());
        for (i, (xi, zi)) in pairs.iter().enumerate() {
            assert!(!xi.commutes(zi).unwrap());
            assert!(!code.contains_up_to_phase(xi));
            assert!(!code.contains_up_to_phase(zi));
            for g in code.generators() {
                assert!(xi.commutes(g).unwrap() && zi.commutes(g).unwrap());
            }
            for (j, (xj, zj)) in pairs.iter().enumerate() {
                if i != j {
                    for (a, b) in [(xi, xj), (xi, zj), (zi, xj), (zi, zj)] {
                        assert!(a.commutes(b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_pairs_are_valid() {
        for name in CATALOG_NAMES {
            let code = catalog(name).unwrap();
            check_pairs(&code, &logical_operators(&code));
        }
    }

    #[test]
    fn bit_flip_pair() {
        let code = catalog("bit_flip").unwrap();
        let pairs = logical_operators(&code);
        assert!(equivalent(&code, &pairs[0].0, &p("XXX")));
        assert!(equivalent(&code, &pairs[0].1, &p("ZII")));
        assert_eq!(pairs[0].1, p("ZII"));
    }

    #[test]
    fn phase_flip_pair() {
        let code = catalog("phase_flip").unwrap();
        let pairs = logical_operators(&code);
        assert!(equivalent(&code, &pairs[0].0, &p("XII")));
        assert!(equivalent(&code, &pairs[0].1, &p("ZZZ")));
    }

    #[test]
    fn steane_pair_matches_transversal_operators() {
        let code = catalog("steane7").unwrap();
        let pairs = logical_operators(&code);
        assert!(equivalent(&code, &pairs[0].0, &p("XXXXXXX")));
        assert!(equivalent(&code, &pairs[0].1, &p("ZZZZZZZ")));
        assert_eq!(pairs[0].0.weight(), 3);
        assert_eq!(pairs[0].1.weight(), 3);
    }

    #[test]
    fn multi_qubit_code() {
        // [[4,2,2]]
        let code = validate_generators(vec![p("XXXX"), p("ZZZZ")]).unwrap();
        check_pairs(&code, &logical_operators(&code));
        let free = StabilizerCode::new(3, vec![]).unwrap();
        check_pairs(&free, &logical_operators(&free));
    }
}

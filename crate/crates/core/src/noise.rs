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

//! I.i.d. Pauli noise, lookup-table decoding and residual classification.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{check_dim, Error, Result};
use crate::pauli::{paulis_of_weight, PauliLetter, PauliOperator};
use crate::scalar::Real;
use crate::stabilizer::{StabilizerCode, Syndrome, GROUP_ENUMERATION_LIMIT};

/// Default search depth for coset leaders. Weight 2 fills every syndrome of
/// the built-in codes.
pub const DEFAULT_TABLE_WEIGHT: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    BitFlip,
    PhaseFlip,
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] = [ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::Depolarizing];

    /// Letters this channel can put on a qubit.
    pub fn alphabet(self) -> &'static [PauliLetter] {
        match self {
            ChannelKind::BitFlip => &[PauliLetter::X],
            ChannelKind::PhaseFlip => &[PauliLetter::Z],
            ChannelKind::Depolarizing => &PauliLetter::NON_IDENTITY,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ChannelKind::BitFlip => "bit_flip",
            ChannelKind::PhaseFlip => "phase_flip",
            ChannelKind::Depolarizing => "depolarizing",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bit_flip" => Ok(ChannelKind::BitFlip),
            "phase_flip" => Ok(ChannelKind::PhaseFlip),
            "depolarizing" => Ok(ChannelKind::Depolarizing),
            other => {
                Err(Error::Parse(format!("unknown channel '{other}', expected bit_flip, phase_flip or depolarizing")))
            }
        }
    }
}

/// Independent single-qubit Pauli noise with error probability `p` per qubit.
/// Depolarizing noise picks X, Y or Z with probability `p/3` each.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseChannel<T: Real> {
    kind: ChannelKind,
    p: T,
}

impl<T: Real> NoiseChannel<T> {
    pub fn new(kind: ChannelKind, p: T) -> Result<Self> {
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::Domain(format!("error probability {p} outside [0, 1]")));
        }
        Ok(Self { kind, p })
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> T {
        self.p
    }
}

/// Draws one error on `n` qubits. Deterministic for a given RNG state.
pub fn sample_error<T: Real, R: Rng + ?Sized>(ch: &NoiseChannel<T>, n: usize, rng: &mut R) -> PauliOperator {
    let mut e = PauliOperator::identity(n);
    for q in 0..n {
        let u = T::c(rng.gen::<f64>());
        if u < ch.p {
            let letter = match ch.kind {
                ChannelKind::BitFlip => PauliLetter::X,
                ChannelKind::PhaseFlip => PauliLetter::Z,
                ChannelKind::Depolarizing => PauliLetter::NON_IDENTITY[rng.gen_range(0..3)],
            };
            e.set_letter(q, letter);
        }
    }
    e
}

/// Syndrome → minimum-weight correction.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    n: usize,
    r: usize,
    channel: ChannelKind,
    // Key is the syndrome read as a binary number, generator 0 most significant.
    entries: BTreeMap<u64, PauliOperator>,
}

/// Result of a table lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub correction: PauliOperator,
    /// The syndrome had no table entry; `correction` is the identity.
    pub uncorrectable: bool,
}

impl SyndromeTable {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn syndrome_len(&self) -> usize {
        self.r
    }

    pub fn channel(&self) -> ChannelKind {
        self.channel
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Fraction of the `2^r` syndromes with an entry.
    pub fn coverage(&self) -> f64 {
        self.entries.len() as f64 / (1u64 << self.r) as f64
    }

    fn syndrome_from_key(&self, key: u64) -> Syndrome {
        let bits = (0..self.r).map(|i| (key >> (self.r - 1 - i)) & 1 == 1);
        Syndrome::new(crate::bits::BitVector::from_bools(bits))
    }

    /// Entries in ascending bit-string order.
    pub fn entries(&self) -> impl Iterator<Item = (Syndrome, &PauliOperator)> + '_ {
        self.entries.iter().map(|(&k, c)| (self.syndrome_from_key(k), c))
    }

    pub fn get(&self, s: &Syndrome) -> Option<&PauliOperator> {
        self.entries.get(&s.bits().to_index_msb_first())
    }

    pub fn decode(&self, s: &Syndrome) -> Result<Decoded> {
        check_dim(self.r, s.len())?;
        Ok(match self.get(s) {
            Some(c) => Decoded { correction: c.clone(), uncorrectable: false },
            None => Decoded { correction: PauliOperator::identity(self.n), uncorrectable: true },
        })
    }

    /// `bits<TAB>pauli` lines.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (s, c) in self.entries() {
            out.push_str(&format!("{s}\t{c}\n"));
        }
        out
    }
}

/// Lookup table with leaders searched up to [`DEFAULT_TABLE_WEIGHT`].
pub fn build_table(code: &StabilizerCode, channel: ChannelKind) -> Result<SyndromeTable> {
    build_table_with_weight(code, channel, DEFAULT_TABLE_WEIGHT)
}

/// Fills each syndrome with the first error, in increasing weight and
/// (qubit, X<Y<Z) lexicographic order, that produces it.
pub fn build_table_with_weight(
    code: &StabilizerCode,
    channel: ChannelKind,
    max_weight: usize,
) -> Result<SyndromeTable> {
    let r = code.r();
    if r > GROUP_ENUMERATION_LIMIT {
        return Err(Error::Capacity { what: "generator count", value: r, limit: GROUP_ENUMERATION_LIMIT });
    }
    let n = code.n();
    let full = 1usize << r;
    let mut entries = BTreeMap::new();
    'outer: for w in 0..=max_weight.min(n) {
        for e in paulis_of_weight(n, w, channel.alphabet()) {
            let key = code.syndrome_unchecked(&e).bits().to_index_msb_first();
            entries.entry(key).or_insert(e);
            if entries.len() == full {
                break 'outer;
            }
        }
    }
    Ok(SyndromeTable { n, r, channel, entries })
}

pub fn decode(table: &SyndromeTable, s: &Syndrome) -> Result<Decoded> {
    table.decode(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Residual is a stabilizer element.
    Success,
    /// Residual is an undetectable nontrivial logical operator.
    LogicalFailure,
    /// Residual still has a nonzero syndrome.
    Detected,
}

pub fn classify_residual(code: &StabilizerCode, residual: &PauliOperator) -> Result<Outcome> {
    let s = code.syndrome_of(residual)?;
    Ok(if !s.is_trivial() {
        Outcome::Detected
    } else if code.contains_up_to_phase(residual) {
        Outcome::Success
    } else {
        Outcome::LogicalFailure
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::{catalog, enumerate_group};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn sample_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let none = NoiseChannel::new(ChannelKind::Depolarizing, 0.0).unwrap();
        for _ in 0..100 {
            assert!(sample_error(&none, 5, &mut rng).is_identity());
        }
        let all = NoiseChannel::new(ChannelKind::BitFlip, 1.0).unwrap();
        for _ in 0..100 {
            assert_eq!(sample_error(&all, 3, &mut rng), p("XXX"));
        }
        let z = NoiseChannel::new(ChannelKind::PhaseFlip, 1.0).unwrap();
        assert_eq!(sample_error(&z, 2, &mut rng), p("ZZ"));
        assert!(NoiseChannel::new(ChannelKind::BitFlip, 1.5).is_err());
        assert!(NoiseChannel::new(ChannelKind::BitFlip, f64::NAN).is_err());
    }

    #[test]
    fn sample_mean_weight() {
        // Binomial(9, 0.1): mean 0.9, per-draw variance 0.81.
        let ch = NoiseChannel::new(ChannelKind::Depolarizing, 0.1).unwrap();
        let draws = 100_000;
        let total: usize =
            (0..draws).map(|seed| sample_error(&ch, 9, &mut ChaCha8Rng::seed_from_u64(seed)).weight()).sum();
        let mean = total as f64 / draws as f64;
        let sigma = (0.81f64 / draws as f64).sqrt();
        assert!((mean - 0.9).abs() < 3.0 * sigma, "mean {mean}");
    }

    #[test]
    fn sampling_is_deterministic() {
        let ch = NoiseChannel::new(ChannelKind::Depolarizing, 0.3).unwrap();
        let a: Vec<_> = (0..20).map(|s| sample_error(&ch, 7, &mut ChaCha8Rng::seed_from_u64(s))).collect();
        let b: Vec<_> = (0..20).map(|s| sample_error(&ch, 7, &mut ChaCha8Rng::seed_from_u64(s))).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn bit_flip_table_order() {
        let code = catalog("bit_flip").unwrap();
        let table = build_table(&code, ChannelKind::BitFlip).unwrap();
        assert_eq!(table.len(), 4);
        assert_eq!(table.dump(), "00\tIII\n01\tIIX\n10\tXII\n11\tIXI\n");
        let s = |o: &[i8]| Syndrome::from_outcomes(o);
        assert_eq!(decode(&table, &s(&[1, 1])).unwrap().correction, p("III"));
        assert_eq!(decode(&table, &s(&[1, -1])).unwrap().correction, p("IIX"));
        assert_eq!(decode(&table, &s(&[-1, 1])).unwrap().correction, p("XII"));
        assert_eq!(decode(&table, &s(&[-1, -1])).unwrap().correction, p("IXI"));
        assert!(decode(&table, &s(&[1])).is_err());
    }

    #[test]
    fn five_qubit_table_is_perfect() {
        let code = catalog("five_qubit").unwrap();
        let table = build_table(&code, ChannelKind::Depolarizing).unwrap();
        assert_eq!(table.len(), 16);
        assert_eq!(table.coverage(), 1.0);
        assert!(table.entries().all(|(_, c)| c.weight() <= 1));
    }

    #[test]
    fn steane_table_fill() {
        let code = catalog("steane7").unwrap();
        let one = build_table_with_weight(&code, ChannelKind::Depolarizing, 1).unwrap();
        assert_eq!(one.len(), 22);
        let two = build_table(&code, ChannelKind::Depolarizing).unwrap();
        assert_eq!(two.len(), 64);
        assert_eq!(two.entries().filter(|(_, c)| c.weight() == 2).count(), 42);
    }

    #[test]
    fn table_soundness() {
        for name in crate::stabilizer::CATALOG_NAMES {
            let code = catalog(name).unwrap();
            for kind in ChannelKind::ALL {
                let table = build_table(&code, kind).unwrap();
                let (zero, first) = table.entries().next().unwrap();
                assert!(zero.is_trivial() && first.is_identity());
                for (s, c) in table.entries() {
                    assert_eq!(code.syndrome_of(c).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn missing_entry_flags_uncorrectable() {
        let code = catalog("steane7").unwrap();
        let table = build_table(&code, ChannelKind::BitFlip).unwrap();
        // X-only leaders never trigger the X-type generators.
        let s = code.syndrome_of(&p("ZIIIIII")).unwrap();
        let d = decode(&table, &s).unwrap();
        assert!(d.uncorrectable);
        assert!(d.correction.is_identity());
    }

    #[test]
    fn steane_single_errors_decode_to_themselves() {
        let code = catalog("steane7").unwrap();
        let table = build_table(&code, ChannelKind::Depolarizing).unwrap();
        for e in paulis_of_weight(7, 1, &PauliLetter::NON_IDENTITY) {
            let d = decode(&table, &code.syndrome_of(&e).unwrap()).unwrap();
            assert_eq!(d.correction, e);
        }
    }

    #[test]
    fn shor_degenerate_correction() {
        let code = catalog("shor9").unwrap();
        let table = build_table(&code, ChannelKind::Depolarizing).unwrap();
        let z2 = p("IZIIIIIII");
        let d = decode(&table, &code.syndrome_of(&z2).unwrap()).unwrap();
        assert_eq!(d.correction, p("ZIIIIIIII"));
        assert_eq!(classify_residual(&code, &d.correction.multiply(&z2).unwrap()).unwrap(), Outcome::Success);
    }

    #[test]
    fn classification_examples() {
        let code = catalog("bit_flip").unwrap();
        for s in enumerate_group(&code).unwrap() {
            assert_eq!(classify_residual(&code, &s).unwrap(), Outcome::Success);
        }
        assert_eq!(classify_residual(&code, &p("XXX")).unwrap(), Outcome::LogicalFailure);
        assert_eq!(classify_residual(&code, &p("XII")).unwrap(), Outcome::Detected);
        assert!(classify_residual(&code, &p("XX")).is_err());
    }

    #[test]
    fn channel_names_round_trip() {
        for k in ChannelKind::ALL {
            assert_eq!(k.as_str().parse::<ChannelKind>().unwrap(), k);
        }
        assert!("amplitude_damping".parse::<ChannelKind>().is_err());
    }
}

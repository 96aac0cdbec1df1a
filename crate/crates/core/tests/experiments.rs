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

use qecw::experiments::{concat_failure, run_monte_carlo, sweep, write_csv};
use qecw::{catalog, ChannelKind, NoiseChannel};

#[test]
fn bit_flip_monte_carlo_tracks_closed_form() {
    let code = catalog("bit_flip").unwrap();
    let rows = sweep(&code, ChannelKind::BitFlip, &[0.02f64, 0.05, 0.1, 0.2], 100_000, 2026).unwrap();
    for r in rows {
        let p = r.p;
        let expected = 3.0 * p * p * (1.0 - p) + p * p * p;
        assert!((r.rate - expected).abs() <= 4.0 * r.std_error, "{r:?}");
    }
}

#[test]
fn phase_flip_code_mirrors_bit_flip_code() {
    let bf = run_monte_carlo(
        &catalog("bit_flip").unwrap(),
        &NoiseChannel::new(ChannelKind::BitFlip, 0.1f64).unwrap(),
        20_000,
        5,
    )
    .unwrap();
    let pf = run_monte_carlo(
        &catalog("phase_flip").unwrap(),
        &NoiseChannel::new(ChannelKind::PhaseFlip, 0.1f64).unwrap(),
        20_000,
        5,
    )
    .unwrap();
    assert_eq!(bf.failures, pf.failures);
}

#[test]
fn steane_crossover_brackets() {
    let code = catalog("steane7").unwrap();
    let rows = sweep(&code, ChannelKind::Depolarizing, &[0.02f64, 0.1], 50_000, 99).unwrap();
    assert!(rows[0].rate < 0.02, "{:?}", rows[0]);
    assert!(rows[1].rate > 0.1, "{:?}", rows[1]);
}

#[test]
fn concatenation_decreases_below_threshold() {
    for p in [1e-4f64, 1e-3, 5e-3] {
        let levels: Vec<f64> = (0..5).map(|k| concat_failure(p, 100.0, k).unwrap()).collect();
        assert!(levels.windows(2).all(|w| w[1] < w[0] || w[1] == 0.0), "{levels:?}");
    }
}

#[test]
fn csv_is_reproducible() {
    let code = catalog("five_qubit").unwrap();
    let render = || {
        let rows = sweep(&code, ChannelKind::Depolarizing, &[0.01f64, 0.03], 10_000, 17).unwrap();
        let mut out = Vec::new();
        write_csv(&mut out, &rows).unwrap();
        out
    };
    assert_eq!(render(), render());
}

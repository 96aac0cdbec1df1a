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

//! Classical binary linear codes: GF(2) matrices, parity checks, duality and
//! the CSS orthogonality test.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVector;
use crate::error::{check_dim, Error, Result};

/// A dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values. All rows must have equal length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_ref();
            check_dim(cols, r.len())?;
            out.push(BitVector::from_bools(r.iter().map(|&b| b & 1 == 1)));
        }
        Ok(Self { cols, rows: out })
    }

    pub fn from_bit_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        for r in &rows {
            check_dim(cols, r.len())?;
        }
        Ok(Self { cols, rows })
    }

    /// Parity-check matrix of the 3-bit repetition code.
    pub fn repetition3() -> Self {
        Self::from_rows(&[[1u8, 1, 0], [0, 1, 1]]).expect("constant")
    }

    /// Parity-check matrix of the [7,4,3] Hamming code; column `j` is the
    /// binary expansion of `j + 1`.
    pub fn hamming7() -> Self {
        Self::from_rows(&[[0u8, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]]).expect("constant")
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_bools(self.rows.iter().map(|r| r.get(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols).map(|c| self.column(c)).collect();
        Self { cols: self.rows.len(), rows }
    }

    /// `self · v` over GF(2).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        check_dim(self.cols, v.len())?;
        Ok(BitVector::from_bools(self.rows.iter().map(|r| r.dot(v))))
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        check_dim(self.cols, other.num_rows())?;
        let mut out = BinaryMatrix::zeros(self.num_rows(), other.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for k in row.iter_ones() {
                out.rows[i].xor_assign(&other.rows[k]);
            }
        }
        Ok(out)
    }

    /// `self · other^T`, computed row-against-row without forming the transpose.
    pub fn mul_transpose(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        check_dim(self.cols, other.cols)?;
        let rows = self.rows.iter().map(|a| BitVector::from_bools(other.rows.iter().map(|b| a.dot(b)))).collect();
        Ok(BinaryMatrix { cols: other.num_rows(), rows })
    }

    /// Reduced row echelon form. Returns the reduced matrix (zero rows removed)
    /// and the pivot column of each remaining row.
    pub fn row_reduce(&self) -> (BinaryMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(sel) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, sel);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        (BinaryMatrix { cols: self.cols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// A basis of the right kernel `{v : self · v = 0}`.
    pub fn kernel(&self) -> Vec<BitVector> {
        let (rref, pivots) = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in rref.rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        check_dim(self.cols, other.cols)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BinaryMatrix { cols: self.cols, rows })
    }
}

/// Incrementally maintained row space over GF(2), kept in reduced echelon
/// form so membership tests are a single pass over the stored rows.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

/// Syndrome `H · e` of an error pattern. A zero result means no detected error.
pub fn parity_syndrome(h: &BinaryMatrix, e: &BitVector) -> Result<BitVector> {
    h.mul_vec(e)
}

/// True iff `H · G = 0`, i.e. every column of `G` is a codeword of `H`.
pub fn check_duality(h: &BinaryMatrix, g: &BinaryMatrix) -> Result<bool> {
    Ok(h.mul(g)?.is_zero())
}

/// True iff `Hx · Hz^T = 0`. With `Hx == Hz` this is the self-orthogonality test.
pub fn css_compatible(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<bool> {
    Ok(first_css_conflict(hx, hz)?.is_none())
}

/// First `(x_row, z_row)` pair with odd overlap, if any.
pub fn first_css_conflict(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<Option<(usize, usize)>> {
    check_dim(hx.num_cols(), hz.num_cols())?;
    for (i, a) in hx.rows().iter().enumerate() {
        for (j, b) in hz.rows().iter().enumerate() {
            if a.dot(b) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Text format: one row per line of `0`/`1` characters, spaces ignored,
/// `#` starts a comment, blank lines skipped.
impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("");
            let mut row = Vec::new();
            for ch in content.chars() {
                match ch {
                    '0' => row.push(0),
                    '1' => row.push(1),
                    c if c.is_whitespace() || c == ',' => {}
                    c => {
                        return Err(Error::Parse(format!(
                            "line {}: unexpected character '{c}' in matrix row",
                            lineno + 1
                        )))
                    }
                }
            }
            if row.is_empty() {
                continue;
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse(format!(
                        "line {}: row has {} entries, expected {}",
                        lineno + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        BinaryMatrix::from_rows(&rows)
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix {}x{} [", self.num_rows(), self.cols)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row}")?;
        }
        f.write_str("]")
    }
}

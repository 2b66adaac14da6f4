use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense matrix over arbitrary-precision integers, row-major storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from row slices of machine integers. Panics on ragged input;
    /// meant for literals in code and tests.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, entries }
    }

    /// Build from columns (each of length `rows`).
    pub fn from_columns(rows: usize, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = columns.len();
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
        }
        let mut m = Self::zero(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for t in 0..self.cols {
                    acc += self.at(i, t) * other.at(t, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix applied to a row vector on the right: `v ↦ v·A`.
    pub fn apply_row(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "row vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += vi * self.at(i, j);
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = q * self.at(src, c);
            let cur = self.at(dst, c).clone();
            self.set(dst, c, cur + add);
        }
    }

    /// col[dst] += q * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = q * self.at(r, src);
            let cur = self.at(r, dst).clone();
            self.set(r, dst, cur + add);
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    pub(crate) fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// Determinant up to sign is the product of the Smith divisors; this is
    /// all the unimodularity checks need.
    pub fn abs_det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        if self.rows == 0 {
            return Ok(BigInt::one());
        }
        let snf = super::smith_normal_form(self)?;
        let mut det = BigInt::one();
        for d in &snf.divisors {
            det *= d;
        }
        Ok(det)
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.abs_det(), Ok(d) if d.is_one())
    }

    /// Text format: first line `rows cols`, then row-major entries separated
    /// by whitespace. A leading `[` switches to the JSON array-of-arrays form.
    pub fn parse(text: &str) -> Result<IntMatrix> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('[') {
            return Self::from_json(trimmed);
        }
        let mut tokens = text.split_whitespace();
        let rows: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing row count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad row count: {e}")))?;
        let cols: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing column count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad column count: {e}")))?;
        let mut entries = Vec::with_capacity(rows * cols);
        for tok in tokens {
            entries.push(
                tok.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?,
            );
        }
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries, found {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// JSON array-of-arrays of integers, e.g. `[[1,0],[0,1]]`.
    pub fn from_json(text: &str) -> Result<IntMatrix> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON matrix: {e}")))?;
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("JSON matrix must be an array of arrays".into()))?;
        let mut parsed: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("JSON matrix row must be an array".into()))?;
            let mut out = Vec::with_capacity(row.len());
            for v in row {
                let s = match v {
                    serde_json::Value::Number(n) => n.to_string(),
                    _ => return Err(Error::Parse("JSON matrix entries must be integers".into())),
                };
                out.push(
                    s.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("non-integer matrix entry {s}")))?,
                );
            }
            parsed.push(out);
        }
        let r = parsed.len();
        let c = parsed.first().map_or(0, |row| row.len());
        if parsed.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged JSON matrix".into()));
        }
        let entries = parsed.into_iter().flatten().collect();
        Ok(IntMatrix { rows: r, cols: c, entries })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sign-aware magnitude ordering used by the pivot rule.
pub(crate) fn abs_lt(a: &BigInt, b: &BigInt) -> bool {
    a.abs() < b.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_text_roundtrip() {
        let m = IntMatrix::parse("2 3\n1 -2 3\n4 5 -6\n").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        assert_eq!(*m.at(1, 2), BigInt::from(-6));
        let again = IntMatrix::parse(&m.to_text()).unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn parse_json_form() {
        let m = IntMatrix::parse(" [[2,4],[6,8]]").unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[&[2, 4], &[6, 8]]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(IntMatrix::parse("2 2\n1 2 3"), Err(Error::Parse(_))));
        assert!(matches!(IntMatrix::parse("[[1,2],[3]]"), Err(Error::Parse(_))));
        assert!(matches!(IntMatrix::parse("[[1.5]]"), Err(Error::Parse(_))));
    }

    #[test]
    fn row_action() {
        let a = IntMatrix::from_rows(&[&[1, 1], &[0, 1]]);
        let v = vec![BigInt::from(3), BigInt::from(4)];
        assert_eq!(
            a.apply_row(&v).unwrap(),
            vec![BigInt::from(3), BigInt::from(7)]
        );
    }
}

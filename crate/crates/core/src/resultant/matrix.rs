//! Dense matrices and the permanent over a commutative semiring.

use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{Element, Semiring};

/// Largest side accepted by the subset dynamic program.
pub const MAX_DP_SIDE: usize = 24;
/// Largest side accepted by the enumeration oracle.
pub const MAX_ORACLE_SIDE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl SupMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SupMatrix { rows, cols, entries: vec![Element::Zero; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::precondition(format!(
                "ragged matrix: row of length {} among rows of length {}",
                bad.len(),
                c
            )));
        }
        Ok(SupMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Element {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Element) {
        self.entries[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn square_side(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }
}

impl fmt::Display for SupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>w$}", cells[i * self.cols + j], w = width)).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Permanent of a square array by dynamic programming over column subsets.
pub fn permanent_generic<T: Semiring>(m: &[Vec<T>]) -> Result<T> {
    let k = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != k) {
        return Err(Error::NonSquare { rows: k, cols: row.len() });
    }
    if k > MAX_DP_SIDE {
        return Err(Error::TooLarge { side: k, max: MAX_DP_SIDE });
    }
    let mut dp: Vec<T> = vec![T::zero(); 1 << k];
    dp[0] = T::one();
    for mask in 0usize..(1 << k) {
        if dp[mask].is_zero() {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == k {
            continue;
        }
        let cur = dp[mask].clone();
        for (j, entry) in m[i].iter().enumerate() {
            if mask & (1 << j) != 0 || entry.is_zero() {
                continue;
            }
            let next = mask | (1 << j);
            dp[next] = dp[next].plus(&cur.times(entry));
        }
    }
    Ok(dp.pop().unwrap())
}

pub fn permanent(m: &SupMatrix) -> Result<Element> {
    m.square_side()?;
    permanent_generic(&m.to_rows())
}

/// Reference permanent by enumerating every permutation.
pub fn permanent_oracle(m: &SupMatrix) -> Result<Element> {
    let k = m.square_side()?;
    if k > MAX_ORACLE_SIDE {
        return Err(Error::TooLarge { side: k, max: MAX_ORACLE_SIDE });
    }
    fn go(m: &SupMatrix, row: usize, used: &mut Vec<bool>, acc: Element, total: &mut Element) {
        if row == m.rows() {
            *total = *total + acc;
            return;
        }
        for j in 0..m.cols() {
            if !used[j] {
                used[j] = true;
                go(m, row + 1, used, acc * m.get(row, j), total);
                used[j] = false;
            }
        }
    }
    let mut total = Element::Zero;
    go(m, 0, &mut vec![false; k], Element::ONE, &mut total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> Element {
        Element::tangible(n)
    }
    fn g(n: i64) -> Element {
        Element::ghost(n)
    }
    const Z: Element = Element::Zero;

    #[test]
    fn small_permanents() {
        let m = SupMatrix::from_rows(vec![vec![t(5)]]).unwrap();
        assert_eq!(permanent(&m).unwrap(), t(5));
        let m = SupMatrix::from_rows(vec![vec![g(2), t(0)], vec![t(1), t(0)]]).unwrap();
        assert_eq!(permanent(&m).unwrap(), g(2));
        assert_eq!(permanent_oracle(&m).unwrap(), g(2));
    }

    #[test]
    fn sylvester_shaped_permanent() {
        let (a, b, c) = (1, 3, 5);
        let m =
            SupMatrix::from_rows(vec![vec![t(a + b), t(b), t(0)], vec![t(c), t(0), Z], vec![Z, t(c), t(0)]])
                .unwrap();
        assert_eq!(permanent(&m).unwrap(), t(10));
        assert_eq!(permanent_oracle(&m).unwrap(), t(10));
    }

    #[test]
    fn oracle_examples() {
        let m = SupMatrix::from_rows(vec![vec![t(1), t(1)], vec![t(1), t(1)]]).unwrap();
        assert_eq!(permanent_oracle(&m).unwrap(), g(2));
        let mut id = SupMatrix::zeros(3, 3);
        for i in 0..3 {
            id.set(i, i, t(0));
        }
        assert_eq!(permanent_oracle(&id).unwrap(), t(0));
        assert_eq!(permanent(&id).unwrap(), t(0));
    }

    #[test]
    fn shape_errors() {
        let m = SupMatrix::zeros(2, 3);
        assert!(matches!(permanent(&m), Err(Error::NonSquare { .. })));
        assert!(matches!(permanent_oracle(&SupMatrix::zeros(9, 9)), Err(Error::TooLarge { .. })));
        assert!(SupMatrix::from_rows(vec![vec![t(0)], vec![]]).is_err());
        assert_eq!(permanent(&SupMatrix::zeros(0, 0)).unwrap(), Element::ONE);
    }
}

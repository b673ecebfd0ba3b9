//! Integer matrices and Smith normal form.
//!
//! `smith_normal_form` returns the full diagonal of invariant factors
//! `d_1 | d_2 | ... | d_k` (zeros last, one entry per diagonal position),
//! computed by unimodular row and column reduction. Intermediate arithmetic
//! is `i128`; the relation matrices arising from multiplication-table
//! presentations have entries in `{-1, 0, 1, 2}` and stay far from overflow.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { rows, cols, len: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }
}

/// Invariant factors of an integer matrix, in a dividing chain with zeros
/// last. The length is `min(rows, cols)`; the free rank of the cokernel of
/// the associated map is `cols - (number of nonzero factors)`.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<u64> {
    let rows = m.rows;
    let cols = m.cols;
    let k = rows.min(cols);
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j) as i128).collect())
        .collect();

    let mut diag = Vec::with_capacity(k);
    let mut t = 0;
    while t < k {
        // Pick the nonzero entry of smallest absolute value as pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        'reduce: loop {
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        continue 'reduce;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        continue 'reduce;
                    }
                }
            }
            // Dividing chain: pull in any entry the pivot does not divide.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if a[i][j] % a[t][t] != 0 {
                        for jj in t..cols {
                            let add = a[i][jj];
                            a[t][jj] += add;
                        }
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        diag.push(a[t][t].unsigned_abs() as u64);
        t += 1;
    }
    diag.resize(k, 0);
    diag
}

/// Rank and torsion of the cokernel `Z^cols / rowspace`.
pub fn cokernel(m: &IntMatrix) -> (usize, Vec<u64>) {
    let factors = smith_normal_form(m);
    let nonzero = factors.iter().filter(|&&d| d != 0).count();
    let torsion: Vec<u64> = factors.iter().copied().filter(|&d| d > 1).collect();
    (m.cols - nonzero, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_2_3() {
        let m = IntMatrix::new(2, 2, vec![2, 0, 0, 3]).unwrap();
        assert_eq!(smith_normal_form(&m), vec![1, 6]);
    }

    #[test]
    fn zero_1x1() {
        let m = IntMatrix::zero(1, 1);
        assert_eq!(smith_normal_form(&m), vec![0]);
    }

    #[test]
    fn identity_n() {
        for n in 1..5 {
            let mut m = IntMatrix::zero(n, n);
            for i in 0..n {
                m.set(i, i, 1);
            }
            assert_eq!(smith_normal_form(&m), vec![1; n]);
        }
    }

    #[test]
    fn rectangular_and_chain() {
        let m = IntMatrix::new(2, 3, vec![2, 4, 4, -6, 6, 12]).unwrap();
        let d = smith_normal_form(&m);
        assert_eq!(d.len(), 2);
        for w in d.windows(2) {
            if w[0] != 0 {
                assert!(w[1] == 0 || w[1] % w[0] == 0, "chain broken: {d:?}");
            } else {
                assert_eq!(w[1], 0);
            }
        }
        assert_eq!(d, vec![2, 6]);
    }

    #[test]
    fn dimension_checked() {
        assert!(IntMatrix::new(2, 2, vec![1, 2, 3]).is_err());
    }
}

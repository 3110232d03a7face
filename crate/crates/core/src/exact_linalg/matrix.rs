use std::collections::BTreeMap;

use num::{BigInt, Integer, One, Signed, Zero};

use super::echelon::Echelon;
use super::SparseVec;
use crate::error::{Error, Result};
use crate::graph_core::Q;

/// Sparse matrix with exact rational entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Q>,
}

impl SparseRationalMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn set(&mut self, r: usize, c: usize, x: Q) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: &Q) {
        let v = self.get(r, c) + x;
        self.set(r, c, v);
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Q)> {
        self.entries.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for (&(r, c), x) in &self.entries {
            t.entries.insert((c, r), x.clone());
        }
        t
    }

    /// Columns as sparse vectors indexed by row.
    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); self.cols];
        for (&(r, c), x) in &self.entries {
            cols[c].insert(r, x.clone());
        }
        cols.into_iter().map(|c| c.into_iter().collect()).collect()
    }

    /// Rows as sparse vectors indexed by column.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (&(r, c), x) in &self.entries {
            rows[r].push((c, x.clone()));
        }
        rows
    }

    pub fn mul(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let orows = other.row_vectors();
        let mut out = SparseRationalMatrix::new(self.rows, other.cols);
        for (&(r, k), x) in &self.entries {
            for (c, y) in &orows[k] {
                out.add_to(r, *c, &(x * y));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let mut out = vec![Q::zero(); self.rows];
        for (&(r, c), x) in &self.entries {
            out[r] += x * &v[c];
        }
        Ok(out)
    }

    /// Rank by fraction-free elimination on integer rows with minimal-fill pivoting.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<(usize, BigInt)>> = self
            .row_vectors()
            .into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| integer_row(&r))
            .collect();
        let mut rank = 0;
        while !rows.is_empty() {
            // pivot row: fewest nonzeros; pivot column: its sparsest column among rows
            let pi = (0..rows.len()).min_by_key(|&i| (rows[i].len(), i)).unwrap();
            let prow = rows.swap_remove(pi);
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for r in &rows {
                for (c, _) in r {
                    *counts.entry(*c).or_default() += 1;
                }
            }
            let (pc, pv) = prow
                .iter()
                .min_by_key(|(c, _)| (counts.get(c).copied().unwrap_or(0), *c))
                .map(|(c, v)| (*c, v.clone()))
                .unwrap();
            rank += 1;
            let mut next = Vec::with_capacity(rows.len());
            for r in rows.drain(..) {
                let a = match r.iter().find(|(c, _)| *c == pc) {
                    Some((_, a)) => a.clone(),
                    None => {
                        next.push(r);
                        continue;
                    }
                };
                let g = pv.gcd(&a);
                let (s, t) = (&pv / &g, &a / &g);
                let combined = combine(&r, &s, &prow, &t);
                if !combined.is_empty() {
                    next.push(primitive(combined));
                }
            }
            rows = next;
        }
        rank
    }

    /// Some `y` with `self * y = target`, or `None`.
    pub fn solve_preimage(&self, target: &[Q]) -> Result<Option<Vec<Q>>> {
        if target.len() != self.rows {
            return Err(Error::Dimension(format!("target of length {} for {} rows", target.len(), self.rows)));
        }
        let mut ech = Echelon::with_provenance();
        for (j, col) in self.columns().into_iter().enumerate() {
            ech.insert_with_id(col, j);
        }
        let t: SparseVec =
            target.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
        Ok(ech.solve(&t).map(|combo| {
            let mut y = vec![Q::zero(); self.cols];
            for (j, c) in combo {
                y[j] = c;
            }
            y
        }))
    }

    /// MatrixMarket-style coordinate text with exact `p/q` entries.
    pub fn to_matrix_market(&self) -> String {
        let mut s = String::from("%%MatrixMarket matrix coordinate rational general\n");
        s.push_str(&format!("{} {} {}\n", self.rows, self.cols, self.entries.len()));
        for (&(r, c), x) in &self.entries {
            s.push_str(&format!("{} {} {}\n", r + 1, c + 1, x));
        }
        s
    }

    pub fn from_matrix_market(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.starts_with('%') && !l.trim().is_empty());
        let head = lines.next().ok_or_else(|| Error::Parse("empty matrix".into()))?;
        let dims: Vec<usize> = head
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header '{head}'"))))
            .collect::<Result<_>>()?;
        if dims.len() != 3 {
            return Err(Error::Parse(format!("bad header '{head}'")));
        }
        let mut m = Self::new(dims[0], dims[1]);
        for l in lines {
            let t: Vec<&str> = l.split_whitespace().collect();
            if t.len() != 3 {
                return Err(Error::Parse(format!("bad entry '{l}'")));
            }
            let r: usize = t[0].parse().map_err(|_| Error::Parse(l.into()))?;
            let c: usize = t[1].parse().map_err(|_| Error::Parse(l.into()))?;
            if r == 0 || c == 0 || r > m.rows || c > m.cols {
                return Err(Error::Dimension(format!("entry ({r},{c})")));
            }
            m.set(r - 1, c - 1, crate::graph_core::parse_q(t[2])?);
        }
        Ok(m)
    }
}

fn integer_row(r: &[(usize, Q)]) -> Vec<(usize, BigInt)> {
    let l = r.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let row = r.iter().map(|(c, x)| (*c, x.numer() * (&l / x.denom()))).collect();
    primitive(row)
}

fn primitive(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    if row.first().map(|(_, x)| x.is_negative()).unwrap_or(false) {
        for (_, x) in row.iter_mut() {
            *x = -&*x;
        }
    }
    row
}

/// `s * a - t * b` for sorted sparse integer rows.
fn combine(a: &[(usize, BigInt)], s: &BigInt, b: &[(usize, BigInt)], t: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (c, v) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, s * &a[i - 1].1)
        } else if i >= a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, -(t * &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, s * &a[i - 1].1 - t * &b[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

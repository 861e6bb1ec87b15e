//! Sparse exact matrices with rank, kernel and Smith normal form.
//!
//! Every differential in this crate has small integer entries, so matrices
//! store `i64` representatives and are interpreted over their declared
//! [`Coefficients`]. Over `𝔽_p` the stored entries are reduced residues.
//!
//! Rank is computed by incremental sparse echelon reduction. Vectors are
//! processed shortest-first with ties broken by index, a cheap
//! Markowitz-style ordering that keeps fill-in low and makes every result
//! reproducible. Before eliminating, the matrix is split into the connected
//! components of its row/column incidence graph; graded differentials are
//! block diagonal, and the blocks are ranked in parallel.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Coefficients, Field, FieldOps, PrimeField, Rationals};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("rank and kernel need field coefficients; use smith_normal_form over Z")]
    IntegerCoefficients,
    #[error("Smith normal form needs integer coefficients, matrix is over {0}")]
    NotInteger(Coefficients),
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    #[error("dimension mismatch: {0}x{1} times {2}x{3}")]
    Mismatch(usize, usize, usize, usize),
    #[error("integer overflow in matrix product")]
    Overflow,
}

/// A sparse vector: strictly increasing indices, no zero values.
pub type SparseVec = Vec<(usize, i64)>;

/// A sparse matrix over ℚ, `𝔽_p` or ℤ, stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    ring: Coefficients,
    columns: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, ring: Coefficients) -> Self {
        ExactMatrix { rows, cols, ring, columns: vec![Vec::new(); cols] }
    }

    /// Builds a matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        ring: Coefficients,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, LinalgError> {
        let mut acc: Vec<HashMap<usize, i64>> = vec![HashMap::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::OutOfBounds { row: r, col: c, rows, cols });
            }
            *acc[c].entry(r).or_insert(0) += v;
        }
        let columns = acc
            .into_iter()
            .map(|m| normalize(ring, m.into_iter().collect()))
            .collect();
        Ok(ExactMatrix { rows, cols, ring, columns })
    }

    /// Builds a matrix from its columns, each a list of `(row, value)` pairs
    /// in any order.
    pub fn from_columns(rows: usize, ring: Coefficients, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                debug_assert!(c.iter().all(|&(r, _)| r < rows));
                normalize(ring, c)
            })
            .collect();
        ExactMatrix { rows, cols, ring, columns }
    }

    pub fn from_dense(data: &[Vec<i64>], ring: Coefficients) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let columns = (0..cols)
            .map(|c| normalize(ring, (0..rows).map(|r| (r, data[r][c])).collect()))
            .collect();
        ExactMatrix { rows, cols, ring, columns }
    }

    pub fn identity(n: usize, ring: Coefficients) -> Self {
        Self::from_columns(n, ring, (0..n).map(|i| vec![(i, 1)]).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> Coefficients {
        self.ring
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.columns[c]
            .binary_search_by_key(&r, |&(i, _)| i)
            .map_or(0, |k| self.columns[c][k].1)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Reinterprets the entries over another ring (reducing mod `p` if needed).
    pub fn with_ring(&self, ring: Coefficients) -> Self {
        let columns = self.columns.iter().map(|c| normalize(ring, c.clone())).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, ring, columns }
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            ring: self.ring,
            columns: transpose_vectors(&self.columns, self.rows),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// Product `self * rhs`, exact over ℤ and then reduced into the ring.
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Mismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let mut columns = Vec::with_capacity(rhs.cols);
        for rc in &rhs.columns {
            let mut acc: HashMap<usize, i128> = HashMap::new();
            for &(k, b) in rc {
                for &(r, a) in &self.columns[k] {
                    *acc.entry(r).or_insert(0) += a as i128 * b as i128;
                }
            }
            let mut col = Vec::with_capacity(acc.len());
            for (r, v) in acc {
                let v = match self.ring {
                    Coefficients::Prime(p) => v.rem_euclid(p as i128),
                    _ => v,
                };
                col.push((r, i64::try_from(v).map_err(|_| LinalgError::Overflow)?));
            }
            columns.push(normalize(self.ring, col));
        }
        Ok(ExactMatrix { rows: self.rows, cols: rhs.cols, ring: self.ring, columns })
    }

    /// Rank over the declared field.
    pub fn rank(&self) -> Result<usize, LinalgError> {
        let field = self.ring.field().ok_or(LinalgError::IntegerCoefficients)?;
        Ok(rank_of_vectors(field, &self.columns))
    }

    /// A basis of the right null space `{x : Mx = 0}`, indexed by the free
    /// columns in increasing order. Each vector has a `1` in its free column.
    pub fn kernel_basis(&self) -> Result<KernelBasis, LinalgError> {
        match self.ring {
            Coefficients::Integer => Err(LinalgError::IntegerCoefficients),
            Coefficients::Rational => Ok(KernelBasis::Rational(kernel_in(&Rationals, self))),
            Coefficients::Prime(p) => {
                let f = PrimeField::new(p).expect("declared prime");
                Ok(KernelBasis::Prime { p, vectors: kernel_in(&f, self) })
            }
        }
    }

    /// Invariant factors of an integer matrix.
    pub fn smith_normal_form(&self) -> Result<SmithForm, LinalgError> {
        if self.ring != Coefficients::Integer {
            return Err(LinalgError::NotInteger(self.ring));
        }
        Ok(smith_normal_form(&self.to_dense()))
    }
}

/// Sorts by index, merges duplicates, reduces into the ring and drops zeros.
fn normalize(ring: Coefficients, mut v: Vec<(usize, i64)>) -> SparseVec {
    v.sort_unstable_by_key(|&(i, _)| i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    if let Coefficients::Prime(p) = ring {
        for (_, x) in out.iter_mut() {
            *x = x.rem_euclid(p as i64);
        }
    }
    out.retain(|&(_, x)| x != 0);
    out
}

fn transpose_vectors(vectors: &[SparseVec], len: usize) -> Vec<SparseVec> {
    let mut out = vec![Vec::new(); len];
    for (c, v) in vectors.iter().enumerate() {
        for &(r, x) in v {
            out[r].push((c, x));
        }
    }
    out
}

/// Kernel vectors over ℚ or `𝔽_p`.
#[derive(Clone, Debug, PartialEq)]
pub enum KernelBasis {
    Rational(Vec<Vec<BigRational>>),
    Prime { p: u64, vectors: Vec<Vec<u64>> },
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        match self {
            KernelBasis::Rational(v) => v.len(),
            KernelBasis::Prime { vectors, .. } => vectors.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Rank of the span of integer vectors, interpreted over `field`.
pub fn rank_of_vectors(field: Field, vectors: &[SparseVec]) -> usize {
    let blocks = split_blocks(vectors);
    match field {
        Field::Rational => blocks.par_iter().map(|b| echelon_rank(&Rationals, vectors, b)).sum(),
        Field::Prime(p) => {
            let f = PrimeField::new(p).expect("validated prime");
            blocks.par_iter().map(|b| echelon_rank(&f, vectors, b)).sum()
        }
    }
}

/// Groups nonzero vectors into connected components of the bipartite
/// vector/coordinate incidence graph. Components are ordered by their
/// smallest vector index.
fn split_blocks(vectors: &[SparseVec]) -> Vec<Vec<usize>> {
    let dim = vectors.iter().filter_map(|v| v.last()).map(|&(i, _)| i + 1).max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for v in vectors {
        if let Some(&(first, _)) = v.first() {
            let a = find(&mut parent, first);
            for &(i, _) in &v[1..] {
                let b = find(&mut parent, i);
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut by_root: HashMap<usize, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        if let Some(&(first, _)) = v.first() {
            let root = find(&mut parent, first);
            let slot = *by_root.entry(root).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[slot].push(k);
        }
    }
    blocks
}

type Row<E> = Vec<(usize, E)>;

/// Incremental echelon form: pivot rows keyed by leading index, each with
/// leading coefficient one.
struct Echelon<'f, F: FieldOps> {
    field: &'f F,
    pivots: HashMap<usize, Row<F::Elem>>,
}

impl<'f, F: FieldOps> Echelon<'f, F> {
    fn new(field: &'f F) -> Self {
        Echelon { field, pivots: HashMap::new() }
    }

    /// Reduces `row` against the current pivots and keeps it if it survives.
    fn insert(&mut self, mut row: Row<F::Elem>) -> bool {
        let f = self.field;
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy(f, &row, &f.neg(&coeff), pivot),
                None => {
                    let inv = f.inv(&coeff);
                    for (_, x) in row.iter_mut() {
                        *x = f.mul(x, &inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `a + s * b` on sorted sparse rows.
fn axpy<F: FieldOps>(f: &F, a: &Row<F::Elem>, s: &F::Elem, b: &Row<F::Elem>) -> Row<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = f.mul(s, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(s, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lift<F: FieldOps>(f: &F, v: &SparseVec) -> Row<F::Elem> {
    v.iter()
        .map(|&(i, x)| (i, f.from_int(x)))
        .filter(|(_, x)| !f.is_zero(x))
        .collect()
}

fn echelon_rank<F: FieldOps>(f: &F, vectors: &[SparseVec], members: &[usize]) -> usize {
    let mut order: Vec<usize> = members.to_vec();
    order.sort_by_key(|&k| (vectors[k].len(), k));
    let mut ech = Echelon::new(f);
    for k in order {
        ech.insert(lift(f, &vectors[k]));
    }
    ech.rank()
}

fn kernel_in<F: FieldOps>(f: &F, m: &ExactMatrix) -> Vec<Vec<F::Elem>> {
    let rows = transpose_vectors(&m.columns, m.rows);
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&k| (rows[k].len(), k));
    let mut ech = Echelon::new(f);
    for k in order {
        ech.insert(lift(f, &rows[k]));
    }
    // Back-substitute to reduced row echelon form, highest pivot first.
    let mut leads: Vec<usize> = ech.pivots.keys().copied().collect();
    leads.sort_unstable();
    let mut reduced: HashMap<usize, Row<F::Elem>> = HashMap::new();
    for &lead in leads.iter().rev() {
        let mut row = ech.pivots[&lead].clone();
        loop {
            let hit = row
                .iter()
                .skip(1)
                .find(|(c, _)| reduced.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            match hit {
                Some((c, x)) => row = axpy(f, &row, &f.neg(&x), &reduced[&c]),
                None => break,
            }
        }
        reduced.insert(lead, row);
    }
    let free: Vec<usize> = (0..m.cols).filter(|c| !reduced.contains_key(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![f.zero(); m.cols];
            x[fc] = f.one();
            for (&lead, row) in &reduced {
                if let Some((_, v)) = row.iter().find(|(c, _)| *c == fc) {
                    x[lead] = f.neg(v);
                }
            }
            x
        })
        .collect()
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one, i.e. the torsion they contribute.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
    }
}

/// Smith normal form by elementary operations, always pivoting on an entry
/// of least absolute value.
#[allow(clippy::needless_range_loop)] // row and column operations read clearer indexed
pub fn smith_normal_form(data: &[Vec<i64>]) -> SmithForm {
    let mut a: Vec<Vec<BigInt>> =
        data.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_entry(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                for c in t..cols {
                    let v = &a[t][c] * &q;
                    a[r][c] -= v;
                }
                if !a[r][t].is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                for r in t..rows {
                    let v = &a[r][t] * &q;
                    a[r][c] -= v;
                }
                if !a[t][c].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Enforce divisibility: fold a non-multiple into row t.
                let bad = (t + 1..rows).find_map(|r| {
                    (t + 1..cols).find(|&c| !(&a[r][c] % &a[t][t]).is_zero()).map(|_| r)
                });
                match bad {
                    Some(r) => {
                        for c in t..cols {
                            let v = a[r][c].clone();
                            a[t][c] += v;
                        }
                    }
                    None => break,
                }
            }
            // Move the smallest entry of row/column t onto the diagonal.
            let mut best = (t, t);
            for r in t..rows {
                if !a[r][t].is_zero() && a[r][t].abs() < a[best.0][best.1].abs() {
                    best = (r, t);
                }
            }
            for c in t..cols {
                if !a[t][c].is_zero() && a[t][c].abs() < a[best.0][best.1].abs() {
                    best = (t, c);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            }
            if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    SmithForm { factors }
}

fn min_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| x.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    const Q: Coefficients = Coefficients::Rational;
    const F2: Coefficients = Coefficients::Prime(2);
    const Z: Coefficients = Coefficients::Integer;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(2, Q).rank().unwrap(), 2);
        assert_eq!(ExactMatrix::from_dense(&[vec![1, 1], vec![1, 1]], F2).rank().unwrap(), 1);
        assert_eq!(ExactMatrix::zero(3, 5, Q).rank().unwrap(), 0);
        assert_eq!(ExactMatrix::zero(3, 5, Z).rank().unwrap_err(), LinalgError::IntegerCoefficients);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(ExactMatrix::from_dense(&m, Q).rank().unwrap(), 3);
        assert_eq!(ExactMatrix::from_dense(&m, F2).rank().unwrap(), 2);
    }

    #[test]
    fn stored_entries_are_reduced() {
        let m = ExactMatrix::from_dense(&[vec![3, -1], vec![2, 4]], Coefficients::Prime(3));
        assert_eq!(m.get(0, 0), 0);
        assert_eq!(m.get(0, 1), 2);
        assert_eq!(m.get(1, 1), 1);
        assert_eq!(m.nnz(), 3);
    }

    #[test]
    fn kernel_examples() {
        let k = ExactMatrix::from_dense(&[vec![1, 1]], Q).kernel_basis().unwrap();
        let one = BigRational::one();
        assert_eq!(k, KernelBasis::Rational(vec![vec![-one.clone(), one.clone()]]));

        assert!(ExactMatrix::identity(3, Q).kernel_basis().unwrap().is_empty());

        let k = ExactMatrix::from_dense(&[vec![2, 4]], Q).kernel_basis().unwrap();
        let KernelBasis::Rational(v) = k else { panic!() };
        assert_eq!(v.len(), 1);
        // proportional to (2, -1)
        assert_eq!(&v[0][0] * BigRational::from_integer((-1).into()), &v[0][1] * BigRational::from_integer(2.into()));
    }

    #[test]
    fn kernel_vectors_are_annihilated_mod_p() {
        let m = ExactMatrix::from_dense(&[vec![1, 2, 3, 4], vec![2, 4, 1, 0]], Coefficients::Prime(5));
        let KernelBasis::Prime { p, vectors } = m.kernel_basis().unwrap() else { panic!() };
        assert_eq!(vectors.len(), 4 - m.rank().unwrap());
        for x in vectors {
            for r in 0..2 {
                let s: u64 = (0..4).map(|c| m.get(r, c) as u64 * x[c]).sum();
                assert_eq!(s % p, 0);
            }
        }
    }

    #[test]
    fn smith_examples() {
        let d = ExactMatrix::from_dense(&[vec![2, 0], vec![0, 3]], Z).smith_normal_form().unwrap();
        assert_eq!(d.factors, big(&[1, 6]));
        let d = ExactMatrix::from_dense(&[vec![2]], Z).smith_normal_form().unwrap();
        assert_eq!(d.factors, big(&[2]));
        let d = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(d.factors, big(&[2, 6, 12]));
        assert_eq!(ExactMatrix::zero(2, 2, Q).smith_normal_form().unwrap_err(), LinalgError::NotInteger(Q));
    }

    #[test]
    fn product_and_transpose() {
        let a = ExactMatrix::from_dense(&[vec![1, 2], vec![0, 1]], Z);
        let b = a.mul(&a).unwrap();
        assert_eq!(b.to_dense(), vec![vec![1, 4], vec![0, 1]]);
        assert_eq!(a.transpose().to_dense(), vec![vec![1, 0], vec![2, 1]]);
        assert!(a.mul(&ExactMatrix::zero(3, 1, Z)).is_err());
    }

    #[test]
    fn triplets_sum_duplicates() {
        let m = ExactMatrix::from_triplets(2, 2, Q, [(0, 0, 1), (0, 0, -1), (1, 1, 2)]).unwrap();
        assert_eq!(m.nnz(), 1);
        assert!(ExactMatrix::from_triplets(2, 2, Q, [(2, 0, 1)]).is_err());
    }

    #[test]
    fn block_splitting_counts_components() {
        let v: Vec<SparseVec> = vec![vec![(0, 1)], vec![(2, 1), (3, 1)], vec![], vec![(3, 1)], vec![(0, 2)]];
        let blocks = split_blocks(&v);
        assert_eq!(blocks, vec![vec![0, 4], vec![1, 3]]);
        assert_eq!(rank_of_vectors(Field::Rational, &v), 3);
    }
}

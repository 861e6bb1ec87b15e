//! Chain-level models for the cover of `Z_K(S¹)` with deck group `ℤ^m`
//! determined by a coordinate map `f: [n] → [m]`.
//!
//! With `R = k[s_1, ..., s_m]`, the cellular chains of the cover form the
//! complex `k⟨K⟩* ⊗ R` with
//! `∂̄(ε_I ⊗ g) = Σ_{i ∈ I} (-1)^{#{k ∈ I : k < i}} ε_{I-i} ⊗ s_{f(i)} g`,
//! and the compactly supported cochains form `k⟨K⟩ ⊗ R` with `δ` equal to
//! left multiplication by `Σ_i e_i ⊗ s_{f(i)}`.
//!
//! Everything is computed in the polynomial grading rather than after
//! localizing at the augmentation ideal: localization is exact and preserves
//! dimension, so the Hilbert functions computed here carry the same growth
//! information. The element `ε_I ⊗ g` with `deg g = j` sits in bidegree
//! `(|I|, j)`; `∂̄` moves `(p, j)` to `(p - 1, j + 1)` and `δ` moves it to
//! `(p + 1, j + 1)`, so each slice matrix is finite.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex};
use crate::exterior::{CoordinateMap, ExteriorError};
use crate::field::Field;
use crate::graded::HilbertFunction;
pub use crate::graded::{growth_degree, Growth};
use crate::linalg::{rank_of_vectors, ExactMatrix, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("homological degree must be nonnegative, got {0}")]
    NegativeDegree(i64),
    #[error("degree bound must be nonnegative, got {0}")]
    NegativeBound(i64),
    #[error("cover complexes are undefined for the void complex")]
    VoidComplex,
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Which of the two differentials a slice belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceKind {
    /// `∂̄ : (p, j) → (p - 1, j + 1)` on `k⟨K⟩* ⊗ R`.
    Homology,
    /// `δ : (p, j) → (p + 1, j + 1)` on `k⟨K⟩ ⊗ R`.
    CompactSupport,
}

impl SliceKind {
    /// Homological degree of the target of a slice out of degree `p`.
    pub fn target_degree(self, p: usize) -> Option<usize> {
        match self {
            SliceKind::Homology => p.checked_sub(1),
            SliceKind::CompactSupport => Some(p + 1),
        }
    }
}

/// Monomials of one degree in `m` variables, as exponent vectors in
/// lexicographic order (`s_1^j` first).
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    pub fn new(m: usize, degree: usize) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; m];
        fill(&mut monomials, &mut current, 0, degree as u32);
        let index = monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn index_of(&self, exponents: &[u32]) -> Option<usize> {
        self.index.get(exponents).copied()
    }
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 >= current.len() {
        if let Some(last) = current.last_mut() {
            *last = remaining;
            out.push(current.clone());
            *current.last_mut().expect("nonempty") = 0;
        } else if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// One differential slice together with its bidegrees.
///
/// Columns are indexed by the source basis and rows by the target basis;
/// both bases list pairs `(face, monomial)` with the face index major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedChainSlice {
    pub kind: SliceKind,
    pub p: usize,
    pub j: usize,
    pub matrix: ExactMatrix,
}

/// Shared state for building slices of one `(K, f)` pair.
struct SliceBuilder<'a> {
    k: &'a SimplicialComplex,
    f: &'a CoordinateMap,
    monomials: Vec<MonomialBasis>,
}

impl<'a> SliceBuilder<'a> {
    fn new(k: &'a SimplicialComplex, f: &'a CoordinateMap, max_degree: usize) -> Result<Self, CoverError> {
        if k.is_void() {
            return Err(CoverError::VoidComplex);
        }
        f.check_domain(k)?;
        let monomials = (0..=max_degree).into_par_iter().map(|j| MonomialBasis::new(f.m(), j)).collect();
        Ok(SliceBuilder { k, f, monomials })
    }

    fn dim(&self, p: usize, j: usize) -> usize {
        self.k.faces_of_size(p).len() * self.monomials[j].len()
    }

    /// Columns of the slice out of `(p, j)`; needs monomials through `j + 1`.
    fn columns(&self, kind: SliceKind, p: usize, j: usize) -> Vec<SparseVec> {
        let Some(target_p) = kind.target_degree(p) else {
            return vec![Vec::new(); self.dim(p, j)];
        };
        let source = &self.monomials[j];
        let target = &self.monomials[j + 1];
        let width = target.len();
        let faces = self.k.faces_of_size(p);
        let mut columns = Vec::with_capacity(faces.len() * source.len());
        for &face in faces {
            // (target face index, sign, variable) for each term of the differential
            let moves: Vec<(usize, i64, usize)> = match kind {
                SliceKind::Homology => face
                    .vertices()
                    .map(|i| {
                        let row = self.k.index_of(face.without(i)).expect("faces are closed downward");
                        (row, sign(face.preceding(i)), self.f.apply(i) - 1)
                    })
                    .collect(),
                SliceKind::CompactSupport => (1..=self.k.n())
                    .filter(|&i| !face.contains(i))
                    .filter_map(|i| {
                        self.k
                            .index_of(face.with(i))
                            .map(|row| (row, sign(face.preceding(i)), self.f.apply(i) - 1))
                    })
                    .collect(),
            };
            debug_assert!(moves.iter().all(|&(row, _, _)| row < self.k.faces_of_size(target_p).len()));
            for exps in source.monomials() {
                let mut col: SparseVec = Vec::with_capacity(moves.len());
                let mut shifted = exps.clone();
                for &(row, s, var) in &moves {
                    shifted[var] += 1;
                    let mono = target.index_of(&shifted).expect("degree j + 1 monomial");
                    shifted[var] -= 1;
                    col.push((row * width + mono, s));
                }
                col.sort_unstable_by_key(|&(r, _)| r);
                columns.push(col);
            }
        }
        columns
    }

    fn rank(&self, field: Field, kind: SliceKind, p: usize, j: usize) -> usize {
        if self.dim(p, j) == 0 {
            return 0;
        }
        match kind.target_degree(p) {
            Some(t) if self.dim(t, j + 1) > 0 => rank_of_vectors(field, &self.columns(kind, p, j)),
            _ => 0,
        }
    }

    /// Hilbert function of the (co)homology at degree `q` through `j_max`.
    fn hilbert(&self, field: Field, kind: SliceKind, q: usize, j_max: usize) -> HilbertFunction {
        // H(q, j) = dim(q, j) - rank(out of (q, j)) - rank(into (q, j)),
        // where the incoming slice starts at (q ± 1, j - 1).
        let incoming_p = match kind {
            SliceKind::Homology => Some(q + 1),
            SliceKind::CompactSupport => q.checked_sub(1),
        };
        let mut tasks: Vec<(usize, usize)> = (0..=j_max).map(|j| (q, j)).collect();
        if let Some(p) = incoming_p {
            tasks.extend((0..j_max).map(|j| (p, j)));
        }
        let ranks: HashMap<(usize, usize), usize> =
            tasks.par_iter().map(|&(p, j)| ((p, j), self.rank(field, kind, p, j))).collect();
        let values = (0..=j_max)
            .map(|j| {
                let out = ranks[&(q, j)];
                let inc = match (incoming_p, j) {
                    (Some(p), j) if j > 0 => ranks[&(p, j - 1)],
                    _ => 0,
                };
                (self.dim(q, j) - out - inc) as u64
            })
            .collect();
        HilbertFunction::new(values)
    }
}

fn sign(preceding: usize) -> i64 {
    if preceding.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_bounds(q: i64, j_max: i64) -> Result<(usize, usize), CoverError> {
    if q < 0 {
        return Err(CoverError::NegativeDegree(q));
    }
    if j_max < 0 {
        return Err(CoverError::NegativeBound(j_max));
    }
    Ok((q as usize, j_max as usize))
}

/// The slice of `kind` out of bidegree `(p, j)` as an explicit matrix.
pub fn chain_slice(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    kind: SliceKind,
    p: usize,
    j: usize,
) -> Result<GradedChainSlice, CoverError> {
    let b = SliceBuilder::new(k, f, j + 1)?;
    let rows = kind.target_degree(p).map_or(0, |t| b.dim(t, j + 1));
    let matrix = ExactMatrix::from_columns(rows, field.into(), b.columns(kind, p, j));
    Ok(GradedChainSlice { kind, p, j, matrix })
}

/// Dimension of the chain group in bidegree `(p, j)`: `f_{p-1}(K)` times the
/// number of degree-`j` monomials in `m` variables.
pub fn slice_dimension(k: &SimplicialComplex, f: &CoordinateMap, p: usize, j: usize) -> usize {
    k.faces_of_size(p).len() * MonomialBasis::new(f.m(), j).len()
}

/// `j ↦ dim H_q(Z_K(S¹), k[ℤ^m])_j` for `j = 0..=j_max`.
///
/// The homology is unreduced: the empty face is the basepoint cell, so
/// `H_0` is `k` in degree 0.
pub fn cover_homology(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    q: i64,
    j_max: i64,
) -> Result<HilbertFunction, CoverError> {
    let (q, j_max) = check_bounds(q, j_max)?;
    let b = SliceBuilder::new(k, f, j_max + 1)?;
    Ok(b.hilbert(field, SliceKind::Homology, q, j_max))
}

/// `j ↦ dim H^q_c(Z_K(S¹), k[ℤ^m])_j` for `j = 0..=j_max`.
pub fn compact_support_cohomology(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    q: i64,
    j_max: i64,
) -> Result<HilbertFunction, CoverError> {
    let (q, j_max) = check_bounds(q, j_max)?;
    let b = SliceBuilder::new(k, f, j_max + 1)?;
    Ok(b.hilbert(field, SliceKind::CompactSupport, q, j_max))
}

/// Hilbert functions for every degree `q = 0..=dim K + 1` at once.
pub fn cover_profile(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    kind: SliceKind,
    j_max: i64,
) -> Result<Vec<HilbertFunction>, CoverError> {
    let (_, j_max) = check_bounds(0, j_max)?;
    let b = SliceBuilder::new(k, f, j_max + 1)?;
    let top = (k.dim() + 1) as usize;
    Ok((0..=top).map(|q| b.hilbert(field, kind, q, j_max)).collect())
}

/// Total weight `w ↦ Σ_p (-1)^p dim(p, w - p)` of the finite subcomplex of
/// `∂̄` with `p + j = w`.
pub fn homology_euler_characteristic(k: &SimplicialComplex, f: &CoordinateMap, w: usize) -> i64 {
    let top = (k.dim() + 1).max(0) as usize;
    (0..=top.min(w))
        .map(|p| {
            let d = slice_dimension(k, f, p, w - p) as i64;
            if p % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}

/// Chain-level and (co)homology-level Euler characteristics of one finite
/// weight piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerWeight {
    /// `p + j` for homology, `j - p` for compact support.
    pub weight: i64,
    pub chain: i64,
    pub homology: i64,
}

/// Euler characteristics of every weight piece that lies inside
/// `j ≤ j_max`. Each differential preserves the weight, so each piece is a
/// finite complex and the two columns must agree.
pub fn euler_by_weight(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    kind: SliceKind,
    j_max: i64,
) -> Result<Vec<EulerWeight>, CoverError> {
    let profile = cover_profile(k, f, field, kind, j_max)?;
    let j_max = j_max as usize;
    let top = profile.len() as i64 - 1;
    let sign = |p: i64| if p % 2 == 0 { 1 } else { -1 };
    let weights: Vec<i64> = match kind {
        SliceKind::Homology => (0..=j_max as i64).collect(),
        SliceKind::CompactSupport => (-top..=j_max as i64 - top).collect(),
    };
    Ok(weights
        .into_iter()
        .map(|weight| {
            let (mut chain, mut homology) = (0, 0);
            for p in 0..=top {
                let j = match kind {
                    SliceKind::Homology => weight - p,
                    SliceKind::CompactSupport => weight + p,
                };
                if j < 0 {
                    continue;
                }
                chain += sign(p) * slice_dimension(k, f, p as usize, j as usize) as i64;
                homology += sign(p) * profile[p as usize].get(j as usize).expect("inside window") as i64;
            }
            EulerWeight { weight, chain, homology }
        })
        .collect())
}

/// All faces of `K` paired with their image weight `f_*(χ_I) ∈ ℤ^m`.
pub fn face_weights(k: &SimplicialComplex, f: &CoordinateMap) -> Vec<(Simplex, Vec<u32>)> {
    k.faces()
        .map(|face| {
            let mut w = vec![0u32; f.m()];
            for i in face.vertices() {
                w[f.apply(i) - 1] += 1;
            }
            (face, w)
        })
        .collect()
}

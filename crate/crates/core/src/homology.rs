//! Reduced simplicial homology over a field or over ℤ.
//!
//! Only the augmented (reduced) theory is exposed. Degrees run from `-1`:
//! the empty face spans the augmentation, so the irrelevant complex `{∅}`
//! has `H̃_{-1} = k` while every complex with a vertex has `H̃_{-1} = 0`.
//! Several identities downstream (dual Hochster, Reisner's criterion on
//! facets) depend on that convention. The void complex has no chains and
//! therefore no homology at all.
//!
//! Over a field, cohomology has the same dimensions as homology, and
//! callers use [`reduced_betti`] for both.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::field::{Coefficients, Field};
use crate::linalg::{rank_of_vectors, ExactMatrix, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary matrices are undefined for the void complex")]
    VoidComplex,
    #[error("degree {p} is outside [-1, {max}]")]
    DegreeOutOfRange { p: isize, max: isize },
}

/// Columns of `∂_p` (p-faces to (p-1)-faces) as sparse integer vectors.
///
/// The face `I` maps to `Σ_{i∈I} (-1)^{#{j∈I : j<i}} (I - i)`.
pub(crate) fn boundary_columns(k: &SimplicialComplex, p: isize) -> Vec<SparseVec> {
    k.faces_of_dim(p)
        .iter()
        .map(|&face| {
            let mut col: SparseVec = face
                .vertices()
                .map(|v| {
                    let row = k.index_of(face.without(v)).expect("complex is closed under faces");
                    let sign = if face.preceding(v) % 2 == 0 { 1 } else { -1 };
                    (row, sign)
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

/// The matrix of `∂_p : C_p → C_{p-1}` in lexicographic face order.
///
/// `∂_0` sends each vertex to the empty face.
pub fn boundary_matrix(
    k: &SimplicialComplex,
    p: isize,
    ring: Coefficients,
) -> Result<ExactMatrix, HomologyError> {
    if k.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    let max = k.dim() + 1;
    if p < -1 || p > max {
        return Err(HomologyError::DegreeOutOfRange { p, max });
    }
    let rows = k.faces_of_dim(p - 1).len();
    Ok(ExactMatrix::from_columns(rows, ring, boundary_columns(k, p)))
}

/// One reduced homology group: free rank plus torsion invariant factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced (co)homology groups indexed by degree `q ≥ -1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub ring: Coefficients,
    /// `groups[q + 1]` is the group in degree `q`.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    fn group(&self, q: isize) -> Option<&HomologyGroup> {
        if q < -1 {
            None
        } else {
            self.groups.get((q + 1) as usize)
        }
    }

    /// Free rank (or dimension, over a field) in degree `q`; zero outside the range.
    pub fn rank(&self, q: isize) -> usize {
        self.group(q).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, q: isize) -> &[BigInt] {
        self.group(q).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// Degrees with a nonzero group, in increasing order.
    pub fn nonzero_degrees(&self) -> Vec<isize> {
        self.groups
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, _)| i as isize - 1)
            .collect()
    }

    /// Largest degree stored, `-2` when nothing is stored (void complex).
    pub fn max_degree(&self) -> isize {
        self.groups.len() as isize - 2
    }
}

/// Dimensions `dim H̃_q(K; field)` for `q = -1..=dim K`, indexed by `q + 1`.
pub fn reduced_betti(k: &SimplicialComplex, field: Field) -> Vec<usize> {
    if k.is_void() {
        return Vec::new();
    }
    let d = k.dim();
    // ranks[p + 1] = rank ∂_p for p = -1..=d+1
    let ranks: Vec<usize> = (-1..=d + 1)
        .map(|p| rank_of_vectors(field, &boundary_columns(k, p)))
        .collect();
    (-1..=d)
        .map(|q| {
            let i = (q + 1) as usize;
            k.faces_of_dim(q).len() - ranks[i] - ranks[i + 1]
        })
        .collect()
}

/// Reduced homology of `k` over a field or over ℤ.
pub fn reduced_homology(k: &SimplicialComplex, ring: Coefficients) -> HomologyProfile {
    let groups = match ring.field() {
        Some(field) => reduced_betti(k, field)
            .into_iter()
            .map(|rank| HomologyGroup { rank, torsion: Vec::new() })
            .collect(),
        None => integral_homology(k),
    };
    HomologyProfile { ring, groups }
}

fn integral_homology(k: &SimplicialComplex) -> Vec<HomologyGroup> {
    if k.is_void() {
        return Vec::new();
    }
    let d = k.dim();
    let forms: Vec<_> = (-1..=d + 1)
        .map(|p| {
            let m = boundary_matrix(k, p, Coefficients::Integer).expect("degree in range");
            m.smith_normal_form().expect("integer matrix")
        })
        .collect();
    (-1..=d)
        .map(|q| {
            let i = (q + 1) as usize;
            let rank = k.faces_of_dim(q).len() - forms[i].rank() - forms[i + 1].rank();
            HomologyGroup { rank, torsion: forms[i + 1].torsion() }
        })
        .collect()
}

/// Reduced integral cohomology, computed from the coboundary matrices
/// `δ^q = ∂_{q+1}^T` directly rather than by universal coefficients.
pub fn reduced_integral_cohomology(k: &SimplicialComplex) -> HomologyProfile {
    let mut groups = Vec::new();
    if !k.is_void() {
        let d = k.dim();
        // coboundary[q + 1] = δ^q : C^q → C^{q+1}, for q = -2..=d
        let coboundary: Vec<_> = (-2..=d)
            .map(|q| {
                let m = boundary_matrix(k, q + 1, Coefficients::Integer).expect("degree in range");
                m.transpose().smith_normal_form().expect("integer matrix")
            })
            .collect();
        for q in -1..=d {
            let out = &coboundary[(q + 2) as usize];
            let inc = &coboundary[(q + 1) as usize];
            let rank = k.faces_of_dim(q).len() - out.rank() - inc.rank();
            groups.push(HomologyGroup { rank, torsion: inc.torsion() });
        }
    }
    HomologyProfile { ring: Coefficients::Integer, groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facet_lists(n, &f).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        complex(
            6,
            &[
                &[1, 2, 4], &[1, 2, 6], &[1, 3, 5], &[1, 3, 6], &[1, 4, 5],
                &[2, 3, 4], &[2, 3, 5], &[2, 5, 6], &[3, 4, 6], &[4, 5, 6],
            ],
        )
    }

    #[test]
    fn edge_boundary_sign_convention() {
        let k = complex(2, &[&[1, 2]]);
        let d1 = boundary_matrix(&k, 1, Coefficients::Integer).unwrap();
        assert_eq!(d1.to_dense(), vec![vec![-1], vec![1]]);
        let d0 = boundary_matrix(&k, 0, Coefficients::Integer).unwrap();
        assert_eq!(d0.to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn boundary_degree_checks() {
        let k = complex(2, &[&[1, 2]]);
        assert!(boundary_matrix(&k, 3, Coefficients::Rational).is_err());
        assert!(boundary_matrix(&k, -2, Coefficients::Rational).is_err());
        let top = boundary_matrix(&k, 2, Coefficients::Rational).unwrap();
        assert_eq!((top.rows(), top.cols()), (1, 0));
        let void = SimplicialComplex::void(2).unwrap();
        assert_eq!(boundary_matrix(&void, 0, Coefficients::Rational).unwrap_err(), HomologyError::VoidComplex);
    }

    #[test]
    fn four_cycle_incidence_rank() {
        let k = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let d1 = boundary_matrix(&k, 1, Coefficients::Rational).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (4, 4));
        assert_eq!(d1.rank().unwrap(), 3);
    }

    #[test]
    fn homology_examples() {
        let two_points = complex(2, &[&[1], &[2]]);
        let h = reduced_homology(&two_points, Coefficients::Rational);
        assert_eq!(h.nonzero_degrees(), vec![0]);
        assert_eq!(h.rank(0), 1);

        let c4 = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let h = reduced_homology(&c4, Coefficients::Rational);
        assert_eq!(h.nonzero_degrees(), vec![1]);
        assert_eq!(h.rank(1), 1);

        let irrelevant = SimplicialComplex::irrelevant(3).unwrap();
        let h = reduced_homology(&irrelevant, Coefficients::Prime(2));
        assert_eq!(h.nonzero_degrees(), vec![-1]);
        assert_eq!(h.rank(-1), 1);

        let void = SimplicialComplex::void(3).unwrap();
        assert!(reduced_homology(&void, Coefficients::Integer).is_zero());
    }

    #[test]
    fn projective_plane() {
        let k = rp2();
        let hz = reduced_homology(&k, Coefficients::Integer);
        assert_eq!(hz.nonzero_degrees(), vec![1]);
        assert_eq!(hz.rank(1), 0);
        assert_eq!(hz.torsion(1), &[BigInt::from(2)]);

        let h2 = reduced_homology(&k, Coefficients::Prime(2));
        assert_eq!((h2.rank(1), h2.rank(2)), (1, 1));
        assert!(reduced_homology(&k, Coefficients::Rational).is_zero());

        let d2 = boundary_matrix(&k, 2, Coefficients::Integer).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (15, 10));
        let snf = d2.smith_normal_form().unwrap();
        assert_eq!(snf.torsion(), vec![BigInt::from(2)]);
        assert!(snf.factors[..snf.rank() - 1].iter().all(|d| *d == BigInt::from(1)));
    }

    #[test]
    fn integral_cohomology_moves_torsion_up() {
        let hc = reduced_integral_cohomology(&rp2());
        assert_eq!(hc.nonzero_degrees(), vec![2]);
        assert_eq!(hc.torsion(2), &[BigInt::from(2)]);
        let c4 = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(reduced_integral_cohomology(&c4).rank(1), 1);
    }

    #[test]
    fn cone_is_acyclic() {
        let cone = complex(5, &[&[1, 2, 5], &[2, 3, 5], &[3, 4, 5], &[1, 4, 5]]);
        for ring in [Coefficients::Rational, Coefficients::Prime(2), Coefficients::Integer] {
            assert!(reduced_homology(&cone, ring).is_zero());
        }
        assert!(cone.contains(Simplex::from_vertices(&[1, 2, 5]).unwrap()));
    }
}

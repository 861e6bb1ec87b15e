//! Cohen–Macaulay complexes, the Cartan complex, and the duality between
//! compactly supported cover cohomology and `Tor` over the polynomial ring.
//!
//! The Cartan complex is `k⟨K⟩ ⊗ S`, `S = k[u_1, ..., u_n]`, with
//! differential left multiplication by `ω = Σ e_i ⊗ u_i`. Position `p` and
//! polynomial degree `j` index the slice `k⟨K⟩_p ⊗ S_j`; `ω` maps it to
//! `(p + 1, j + 1)`. For `K` Cohen–Macaulay of dimension `d` the cohomology
//! is concentrated at `p = d + 1`, where it is the module `F_K`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::{hochster_betti, BettiError, BettiTable};
use crate::complex::{ComplexError, Simplex, SimplicialComplex};
use crate::cover::{compact_support_cohomology, CoverError, MonomialBasis};
use crate::exterior::{CoordinateMap, ExteriorError, ExteriorSRRing};
use crate::field::Field;
use crate::graded::HilbertFunction;
use crate::homology::reduced_betti;
use crate::linalg::{rank_of_vectors, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CmError {
    #[error("the void complex is excluded")]
    VoidComplex,
    #[error("complex is not Cohen-Macaulay over {field}: {reason}")]
    NotCohenMacaulay { field: Field, reason: String },
    #[error("complex is not the clique complex of its 1-skeleton")]
    NotFlag,
    #[error("complex is not a homology sphere over {field}: {reason}")]
    NotHomologySphere { field: Field, reason: String },
    #[error("degree bound must be nonnegative, got {0}")]
    NegativeBound(i64),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn nonvoid(k: &SimplicialComplex) -> Result<(), CmError> {
    if k.is_void() {
        Err(CmError::VoidComplex)
    } else {
        Ok(())
    }
}

fn bound(j_max: i64) -> Result<usize, CmError> {
    usize::try_from(j_max).map_err(|_| CmError::NegativeBound(j_max))
}

/// A face whose link has reduced homology below its top dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReisnerWitness {
    pub face: Simplex,
    pub link_dim: isize,
    /// Degree `i < link_dim` with `H̃_i(link) ≠ 0`.
    pub degree: isize,
}

/// Reisner's criterion: `K` is Cohen–Macaulay over `field` iff for every
/// face `σ`, including `∅`, `H̃_i(link_K σ) = 0` for `i < dim link_K σ`.
/// Returns the first failing face in face order, or `None` when `K` is CM.
pub fn reisner_witness(k: &SimplicialComplex, field: Field) -> Result<Option<ReisnerWitness>, CmError> {
    nonvoid(k)?;
    let faces: Vec<Simplex> = k.faces().collect();
    let found: Vec<Option<ReisnerWitness>> = faces
        .par_iter()
        .map(|&face| {
            let link = k.link(face).expect("face").complex;
            let link_dim = link.dim();
            let betti = reduced_betti(&link, field);
            betti
                .iter()
                .enumerate()
                .map(|(i, &b)| (i as isize - 1, b))
                .find(|&(t, b)| t < link_dim && b > 0)
                .map(|(degree, _)| ReisnerWitness { face, link_dim, degree })
        })
        .collect();
    Ok(found.into_iter().flatten().next())
}

pub fn is_cm_reisner(k: &SimplicialComplex, field: Field) -> Result<bool, CmError> {
    Ok(reisner_witness(k, field)?.is_none())
}

/// Betti table of `S/I_{K^★}` and whether its syzygies (`p ≥ 1`) sit in a
/// single row, which is a linear resolution of `I_{K^★}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EagonReinerReport {
    /// `None` for the full simplex, whose dual is void so that `I_{K^★} = S`.
    pub dual_betti: Option<BettiTable>,
    pub syzygy_rows: Vec<usize>,
    pub linear: bool,
}

/// The linear-resolution test. For the full simplex the ideal is all of `S`,
/// which is free, and the test passes vacuously.
pub fn eagon_reiner(k: &SimplicialComplex, field: Field) -> Result<EagonReinerReport, CmError> {
    nonvoid(k)?;
    if k.is_full_simplex() {
        return Ok(EagonReinerReport { dual_betti: None, syzygy_rows: Vec::new(), linear: true });
    }
    let dual = k.alexander_dual()?;
    let dual_betti = hochster_betti(&dual, field)?;
    let syzygy_rows = dual_betti.syzygy_rows();
    let linear = syzygy_rows.len() <= 1;
    Ok(EagonReinerReport { dual_betti: Some(dual_betti), syzygy_rows, linear })
}

pub fn is_cm_eagon_reiner(k: &SimplicialComplex, field: Field) -> Result<bool, CmError> {
    Ok(eagon_reiner(k, field)?.linear)
}

/// Slices of the Cartan complex, built from left multiplication in `k⟨K⟩`.
///
/// The basis of `(p, j)` lists `e_I ⊗ u^β` with the monomial index major.
struct Cartan<'a> {
    k: &'a SimplicialComplex,
    ring: ExteriorSRRing,
    field: Field,
    monomials: Vec<MonomialBasis>,
}

impl<'a> Cartan<'a> {
    fn new(k: &'a SimplicialComplex, field: Field, max_degree: usize) -> Result<Self, CmError> {
        let ring = ExteriorSRRing::new(k, field)?;
        let monomials = (0..=max_degree).into_par_iter().map(|j| MonomialBasis::new(k.n(), j)).collect();
        Ok(Cartan { k, ring, field, monomials })
    }

    fn top(&self) -> usize {
        (self.k.dim() + 1) as usize
    }

    fn faces(&self, p: usize) -> usize {
        self.k.faces_of_size(p).len()
    }

    fn dim(&self, p: usize, j: usize) -> usize {
        self.faces(p) * self.monomials[j].len()
    }

    /// Columns of `ω` out of `(p, j)`.
    fn omega(&self, p: usize, j: usize) -> Vec<SparseVec> {
        let fp = self.faces(p);
        let fq = self.faces(p + 1);
        // per variable i, the columns of left multiplication by e_i
        let by_var: Vec<Vec<SparseVec>> =
            (1..=self.k.n()).map(|i| self.ring.left_multiplication(&[(i, 1)], p)).collect();
        let target = &self.monomials[j + 1];
        let mut cols = Vec::with_capacity(fp * self.monomials[j].len());
        for beta in self.monomials[j].monomials() {
            let mut shifted = beta.clone();
            for face in 0..fp {
                let mut col: SparseVec = Vec::new();
                for (v, columns) in by_var.iter().enumerate() {
                    if columns[face].is_empty() {
                        continue;
                    }
                    shifted[v] += 1;
                    let mono = target.index_of(&shifted).expect("degree j + 1");
                    shifted[v] -= 1;
                    col.extend(columns[face].iter().map(|&(r, c)| (mono * fq + r, c)));
                }
                col.sort_unstable_by_key(|&(r, _)| r);
                cols.push(col);
            }
        }
        cols
    }

    fn omega_rank(&self, p: usize, j: usize) -> usize {
        if p >= self.top() || self.dim(p, j) == 0 {
            return 0;
        }
        rank_of_vectors(self.field, &self.omega(p, j))
    }

    fn profile(&self, j_max: usize) -> Vec<HilbertFunction> {
        let top = self.top();
        let tasks: Vec<(usize, usize)> = (0..=top).flat_map(|p| (0..=j_max).map(move |j| (p, j))).collect();
        let ranks: HashMap<(usize, usize), usize> =
            tasks.par_iter().map(|&(p, j)| ((p, j), self.omega_rank(p, j))).collect();
        (0..=top)
            .map(|p| {
                let values = (0..=j_max)
                    .map(|j| {
                        let inc = if p > 0 && j > 0 { ranks[&(p - 1, j - 1)] } else { 0 };
                        (self.dim(p, j) - ranks[&(p, j)] - inc) as u64
                    })
                    .collect();
                HilbertFunction::new(values)
            })
            .collect()
    }
}

/// `p ↦ (j ↦ dim H^p(k⟨K⟩ ⊗ S, ω)_j)` for `p = 0..=dim K + 1`.
pub fn cartan_profile(k: &SimplicialComplex, field: Field, j_max: i64) -> Result<Vec<HilbertFunction>, CmError> {
    nonvoid(k)?;
    let j_max = bound(j_max)?;
    Ok(Cartan::new(k, field, j_max + 1)?.profile(j_max))
}

/// Whether every Cartan row other than `p = dim K + 1` vanishes through the
/// computed window, with the first nonzero `(p, j)` otherwise.
pub fn cartan_concentration(profile: &[HilbertFunction]) -> Result<(), (usize, usize)> {
    let top = profile.len().saturating_sub(1);
    for (p, h) in profile.iter().enumerate() {
        if p != top {
            if let Some(j) = h.first_nonzero() {
                return Err((p, j));
            }
        }
    }
    Ok(())
}

/// `F_K = H^{d+1}(k⟨K⟩ ⊗ S, ω)` in Cartan degrees `j`, together with the
/// data that presents it: `(F_K)_j = C_j / B_j` with `C_j = k⟨K⟩_{d+1} ⊗ S_j`
/// and `B_j = ω(k⟨K⟩_d ⊗ S_{j-1})`.
struct FModule<'a> {
    cartan: Cartan<'a>,
    /// Rank of `B_j`, indexed by `j`.
    b_rank: Vec<usize>,
}

impl<'a> FModule<'a> {
    /// Presentation data through degree `max_degree`.
    fn new(k: &'a SimplicialComplex, field: Field, max_degree: usize) -> Result<Self, CmError> {
        let cartan = Cartan::new(k, field, max_degree + 1)?;
        let d1 = cartan.top();
        let b_rank = (0..=max_degree)
            .into_par_iter()
            .map(|j| if j == 0 || d1 == 0 { 0 } else { cartan.omega_rank(d1 - 1, j - 1) })
            .collect();
        Ok(FModule { cartan, b_rank })
    }

    fn c_dim(&self, j: usize) -> usize {
        self.cartan.dim(self.cartan.top(), j)
    }

    fn hilbert(&self, j_max: usize) -> HilbertFunction {
        HilbertFunction::new((0..=j_max).map(|j| (self.c_dim(j) - self.b_rank[j]) as u64).collect())
    }

    fn b_generators(&self, j: usize) -> Vec<SparseVec> {
        let d1 = self.cartan.top();
        if j == 0 || d1 == 0 {
            Vec::new()
        } else {
            self.cartan.omega(d1 - 1, j - 1)
        }
    }

    /// `j ↦ dim Tor_i^S(F_K, S/(ℓ_1, ..., ℓ_N))_j` for `i = 0..=N`, where the
    /// `ℓ_a` are linearly independent linear forms given as
    /// `(variable, coefficient)` lists. `Tor` comes from the Koszul complex
    /// `∧^i k^N ⊗ F_K` with `d(e_A ⊗ x) = Σ_{a ∈ A} ± e_{A-a} ⊗ ℓ_a x`.
    ///
    /// Requires presentation data through degree `j_max + 1`.
    fn koszul_tor(&self, forms: &[Vec<(usize, i64)>], j_max: usize) -> Vec<HilbertFunction> {
        let big_n = forms.len();
        let top = self.cartan.top();
        let fq = self.cartan.faces(top);
        let subsets: Vec<Vec<Simplex>> = (0..=big_n)
            .map(|i| Simplex::full(big_n).subsets().filter(|s| s.len() == i).collect())
            .collect();
        let subset_index: HashMap<Simplex, usize> = subsets
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(idx, s)| (*s, idx)))
            .collect();

        // rank of the induced map ∧^i ⊗ F_j → ∧^{i-1} ⊗ F_{j+1}
        let rank_out = |i: usize, j: usize| -> usize {
            if i == 0 || i > big_n {
                return 0;
            }
            let width = self.c_dim(j + 1);
            let target = &self.cartan.monomials[j + 1];
            let mut vectors: Vec<SparseVec> = Vec::new();
            for &a in &subsets[i] {
                for beta in self.cartan.monomials[j].monomials() {
                    let mut shifted = beta.clone();
                    for face in 0..fq {
                        let mut col: SparseVec = Vec::new();
                        for (pos, l) in a.vertices().enumerate() {
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            let block = subset_index[&a.without(l)] * width;
                            for &(v, c) in &forms[l - 1] {
                                shifted[v - 1] += 1;
                                let m = target.index_of(&shifted).expect("degree j + 1");
                                shifted[v - 1] -= 1;
                                col.push((block + m * fq + face, sign * c));
                            }
                        }
                        col.sort_unstable_by_key(|&(r, _)| r);
                        merge_duplicates(&mut col);
                        vectors.push(col);
                    }
                }
            }
            let b = self.b_generators(j + 1);
            for block in 0..subsets[i - 1].len() {
                let offset = block * width;
                vectors.extend(b.iter().map(|col| col.iter().map(|&(r, c)| (offset + r, c)).collect::<SparseVec>()));
            }
            rank_of_vectors(self.cartan.field, &vectors) - subsets[i - 1].len() * self.b_rank[j + 1]
        };

        let tasks: Vec<(usize, usize)> = (1..=big_n).flat_map(|i| (0..=j_max).map(move |j| (i, j))).collect();
        let ranks: HashMap<(usize, usize), usize> = tasks.par_iter().map(|&(i, j)| ((i, j), rank_out(i, j))).collect();
        let get = |i: usize, j: usize| ranks.get(&(i, j)).copied().unwrap_or(0);
        (0..=big_n)
            .map(|i| {
                let values = (0..=j_max)
                    .map(|j| {
                        let f_dim = self.c_dim(j) - self.b_rank[j];
                        let inc = if j > 0 { get(i + 1, j - 1) } else { 0 };
                        (subsets[i].len() * f_dim - get(i, j) - inc) as u64
                    })
                    .collect();
                HilbertFunction::new(values)
            })
            .collect()
    }
}

fn merge_duplicates(col: &mut SparseVec) {
    let mut out: SparseVec = Vec::with_capacity(col.len());
    for &(r, c) in col.iter() {
        match out.last_mut() {
            Some((lr, lc)) if *lr == r => *lc += c,
            _ => out.push((r, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    *col = out;
}

/// Hilbert function of `F_K` in Cartan degrees `j = 0..=j_max`.
pub fn fk_hilbert(k: &SimplicialComplex, field: Field, j_max: i64) -> Result<HilbertFunction, CmError> {
    nonvoid(k)?;
    let j_max = bound(j_max)?;
    Ok(FModule::new(k, field, j_max)?.hilbert(j_max))
}

/// Basis of the linear forms `t_i - t_{i'}` spanning the kernel of
/// `S → R`, `t_i ↦ s_{f(i)}`: consecutive vertices of each fiber, which is a
/// spanning path of that fiber.
pub fn fiber_forms(f: &CoordinateMap) -> Vec<Vec<(usize, i64)>> {
    let mut forms = Vec::new();
    for j in 1..=f.m() {
        let fiber = f.fiber(j).to_vec();
        for w in fiber.windows(2) {
            forms.push(vec![(w[0], 1), (w[1], -1)]);
        }
    }
    forms
}

/// `i ↦ Tor^S_i(F_K, R)` Hilbert functions for `R = S/(A_f)`.
pub fn tor_fk(k: &SimplicialComplex, f: &CoordinateMap, field: Field, j_max: i64) -> Result<Vec<HilbertFunction>, CmError> {
    nonvoid(k)?;
    f.check_domain(k)?;
    let j_max = bound(j_max)?;
    let fm = FModule::new(k, field, j_max + 1)?;
    Ok(fm.koszul_tor(&fiber_forms(f), j_max))
}

/// Comparison of two Hilbert functions up to a degree shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alignment {
    /// `right(j + shift) = left(j)` is tested; measured from the first
    /// nonzero degrees. `None` when either side vanishes.
    pub shift: Option<i64>,
    /// First `j` of the left function where the comparison fails.
    pub first_discrepancy: Option<usize>,
    pub agree: bool,
}

/// Aligns `left` and `right` at their first nonzero degrees and compares
/// them wherever both windows apply. Two zero functions agree with no shift.
pub fn align(left: &HilbertFunction, right: &HilbertFunction) -> Alignment {
    match (left.first_nonzero(), right.first_nonzero()) {
        (None, None) => Alignment { shift: None, first_discrepancy: None, agree: true },
        (Some(j), None) | (None, Some(j)) => {
            Alignment { shift: None, first_discrepancy: Some(j), agree: false }
        }
        (Some(a), Some(b)) => {
            let shift = b as i64 - a as i64;
            let first_discrepancy = (0..left.values().len()).find(|&j| {
                let t = j as i64 + shift;
                t >= 0 && right.get(t as usize).is_some_and(|v| v != left.values()[j])
            });
            Alignment { shift: Some(shift), first_discrepancy, agree: first_discrepancy.is_none() }
        }
    }
}

/// One degree of the duality comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityComparison {
    pub q: usize,
    /// `d + 1 - q`, when it is a valid `Tor` index.
    pub tor_index: Option<usize>,
    pub compact: HilbertFunction,
    pub tor: HilbertFunction,
    pub alignment: Alignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub d: isize,
    pub coords: CoordinateMap,
    pub j_max: usize,
    pub comparisons: Vec<DualityComparison>,
}

impl DualityReport {
    pub fn agree(&self) -> bool {
        self.comparisons.iter().all(|c| c.alignment.agree)
    }

    /// Measured shifts, deduplicated; constant when this has one entry.
    pub fn shifts(&self) -> Vec<i64> {
        let mut s: Vec<i64> = self.comparisons.iter().filter_map(|c| c.alignment.shift).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Degrees `q ≠ d + 1` whose compact-support cohomology is nonzero.
    pub fn off_top_nonzero(&self) -> Vec<usize> {
        let top = (self.d + 1) as usize;
        self.comparisons.iter().filter(|c| c.q != top && !c.compact.is_zero()).map(|c| c.q).collect()
    }
}

fn require_cm(k: &SimplicialComplex, field: Field) -> Result<(), CmError> {
    if let Some(w) = reisner_witness(k, field)? {
        return Err(CmError::NotCohenMacaulay {
            field,
            reason: format!("H̃_{}(link {}) ≠ 0 below dimension {}", w.degree, w.face, w.link_dim),
        });
    }
    Ok(())
}

/// Compares `H^q_c(Z_K(S¹), k[ℤ^m])` with `Tor^S_{d+1-q}(F_K, R)` for each
/// requested `q`, through degree `j_max`.
pub fn duality_check(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    qs: &[usize],
    j_max: i64,
) -> Result<DualityReport, CmError> {
    nonvoid(k)?;
    require_cm(k, field)?;
    f.check_domain(k)?;
    let j = bound(j_max)?;
    let tor = tor_fk(k, f, field, j_max)?;
    let d = k.dim();
    let comparisons = qs
        .iter()
        .map(|&q| {
            let compact = compact_support_cohomology(k, f, field, q as i64, j_max)?;
            let tor_index = usize::try_from(d + 1 - q as isize).ok();
            let tor_side = tor_index.and_then(|i| tor.get(i).cloned()).unwrap_or_else(|| HilbertFunction::zeros(j));
            let alignment = align(&compact, &tor_side);
            Ok(DualityComparison { q, tor_index, compact, tor: tor_side, alignment })
        })
        .collect::<Result<Vec<_>, CmError>>()?;
    Ok(DualityReport { d, coords: f.clone(), j_max: j, comparisons })
}

/// Nonzero compact-support cohomology found inside the predicted vanishing
/// range, as `(q, j, dim)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    /// Degrees checked: `q ≤ m - n + d` and `q = d + 2`.
    pub checked: Vec<usize>,
    pub witnesses: Vec<(usize, usize, u64)>,
}

impl VanishingReport {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks that `H^q_c` vanishes for `q ≤ m - n + d` and `q > d + 1`.
pub fn vanishing_range_check(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
    j_max: i64,
) -> Result<VanishingReport, CmError> {
    nonvoid(k)?;
    if !k.is_flag() {
        return Err(CmError::NotFlag);
    }
    require_cm(k, field)?;
    f.check_domain(k)?;
    let d = k.dim();
    let low = f.m() as isize - k.n() as isize + d;
    let mut checked: Vec<usize> = (0..=low.max(-1)).map(|q| q as usize).collect();
    checked.push((d + 2) as usize);
    let mut witnesses = Vec::new();
    for &q in &checked {
        let h = compact_support_cohomology(k, f, field, q as i64, j_max)?;
        witnesses.extend(h.values().iter().enumerate().filter(|(_, &v)| v > 0).map(|(j, &v)| (q, j, v)));
    }
    Ok(VanishingReport { checked, witnesses })
}

/// `Ok(())` when every link, including `K` itself, has the reduced homology
/// of a sphere of its own dimension over `field`.
pub fn homology_sphere_check(k: &SimplicialComplex, field: Field) -> Result<(), CmError> {
    nonvoid(k)?;
    for face in k.faces() {
        let link = k.link(face)?.complex;
        let dim = link.dim();
        let betti = reduced_betti(&link, field);
        let sphere = betti
            .iter()
            .enumerate()
            .all(|(i, &b)| if i as isize - 1 == dim { b == 1 } else { b == 0 });
        if !sphere {
            return Err(CmError::NotHomologySphere {
                field,
                reason: format!("link of {face} has reduced Betti numbers {betti:?} (dimension {dim})"),
            });
        }
    }
    Ok(())
}

/// `j ↦ dim (I_{K^★})_j`: a monomial `t^α` lies in `I_{K^★}` iff
/// `[n] - supp α ∈ K`; there are `C(j - 1, |U| - 1)` monomials of degree
/// `j` with support exactly `U`.
pub fn dual_ideal_hilbert(k: &SimplicialComplex, j_max: usize) -> HilbertFunction {
    let full = Simplex::full(k.n());
    let mut values = vec![0u64; j_max + 1];
    for face in k.faces() {
        let u = full.minus(face).len();
        for (j, v) in values.iter_mut().enumerate() {
            *v += if u == 0 {
                u64::from(j == 0)
            } else if j >= u {
                binomial((j - 1) as u64, (u - 1) as u64)
            } else {
                0
            };
        }
    }
    HilbertFunction::new(values)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub fk: HilbertFunction,
    pub ideal: HilbertFunction,
    pub alignment: Alignment,
}

/// Compares the Hilbert functions of `F_K` and `I_{K^★}` for a homology
/// sphere `K`, after aligning their first nonzero degrees.
pub fn gorenstein_fk_check(k: &SimplicialComplex, field: Field, j_max: i64) -> Result<GorensteinReport, CmError> {
    homology_sphere_check(k, field)?;
    let j = bound(j_max)?;
    let fk = fk_hilbert(k, field, j_max)?;
    // the ideal starts in degree n - d - 1, so a longer window covers the shift
    let ideal = dual_ideal_hilbert(k, j + k.n());
    let alignment = align(&fk, &ideal);
    Ok(GorensteinReport { fk, ideal, alignment })
}

/// `Tor^S_i(F_K, k)` against the graded pieces of the exterior ideal
/// `J_{K^★}`, whose degree-`u` piece has dimension `f_{n-u-1}(K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearResolutionReport {
    /// `i ↦ (j ↦ dim Tor_i(F_K, k)_j)`.
    pub tor: Vec<HilbertFunction>,
    /// `(i, u)` pairs matched by dimension, where `dim Tor_i = dim (J_{K^★})_u`.
    pub matches: Vec<(usize, usize)>,
    /// The common value of `u - i`, when constant.
    pub shift: Option<i64>,
    /// Whether each `Tor_i` is concentrated in a single Cartan degree.
    pub concentrated: bool,
}

pub fn linear_resolution_check(k: &SimplicialComplex, field: Field, j_max: i64) -> Result<LinearResolutionReport, CmError> {
    nonvoid(k)?;
    require_cm(k, field)?;
    let j = bound(j_max)?;
    let n = k.n();
    let fm = FModule::new(k, field, j + 1)?;
    let forms: Vec<Vec<(usize, i64)>> = (1..=n).map(|v| vec![(v, 1)]).collect();
    let tor = fm.koszul_tor(&forms, j);
    let fv = k.f_vector();
    // dim (J_{K^★})_u = number of faces of size n - u
    let j_dim = |u: usize| fv.get(n - u).copied().unwrap_or(0) as u64;
    let mut matches = Vec::new();
    for (i, h) in tor.iter().enumerate() {
        let total = h.total();
        if total == 0 {
            continue;
        }
        // the degree u whose dimension matches, nearest to the previous shift
        let prev = matches.last().map(|&(pi, pu): &(usize, usize)| pu as i64 - pi as i64);
        let candidates: Vec<usize> = (0..=n).filter(|&u| j_dim(u) == total).collect();
        let pick = match prev {
            Some(s) if candidates.contains(&((i as i64 + s) as usize)) => Some((i as i64 + s) as usize),
            _ => candidates.first().copied(),
        };
        if let Some(u) = pick {
            matches.push((i, u));
        }
    }
    let shifts: Vec<i64> = matches.iter().map(|&(i, u)| u as i64 - i as i64).collect();
    let nonzero = tor.iter().filter(|h| !h.is_zero()).count();
    let shift = match shifts.first() {
        Some(&s) if shifts.iter().all(|&t| t == s) && matches.len() == nonzero => Some(s),
        _ => None,
    };
    let concentrated = tor.iter().all(|h| h.values().iter().filter(|&&v| v > 0).count() <= 1);
    Ok(LinearResolutionReport { tor, matches, shift, concentrated })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facet_lists(n, &f).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
    }

    #[test]
    fn reisner_examples() {
        assert!(is_cm_reisner(&four_cycle(), Field::Rational).unwrap());
        let disjoint = complex(4, &[&[1, 2], &[3, 4]]);
        let w = reisner_witness(&disjoint, Field::Rational).unwrap().unwrap();
        assert_eq!((w.face, w.degree), (Simplex::EMPTY, 0));
        assert!(is_cm_reisner(&SimplicialComplex::full_simplex(3).unwrap(), Field::Prime(2)).unwrap());
    }

    #[test]
    fn eagon_reiner_examples() {
        assert!(is_cm_eagon_reiner(&four_cycle(), Field::Rational).unwrap());
        assert!(!is_cm_eagon_reiner(&complex(4, &[&[1, 2], &[3, 4]]), Field::Rational).unwrap());
        assert!(is_cm_eagon_reiner(&complex(3, &[&[1, 2], &[2, 3]]), Field::Rational).unwrap());
        let full = eagon_reiner(&SimplicialComplex::full_simplex(2).unwrap(), Field::Rational).unwrap();
        assert!(full.linear && full.dual_betti.is_none());
    }

    #[test]
    fn cartan_rows() {
        let prof = cartan_profile(&four_cycle(), Field::Rational, 4).unwrap();
        assert_eq!(prof.len(), 3);
        assert!(cartan_concentration(&prof).is_ok());
        assert!(!prof[2].is_zero());
        let disjoint = cartan_profile(&complex(4, &[&[1, 2], &[3, 4]]), Field::Rational, 4).unwrap();
        assert!(cartan_concentration(&disjoint).is_err());
        let point = cartan_profile(&complex(1, &[&[1]]), Field::Rational, 4).unwrap();
        assert_eq!(point[0].values(), &[0, 0, 0, 0, 0]);
        assert_eq!(point[1].values(), &[1, 0, 0, 0, 0]);
    }

    #[test]
    fn fk_of_four_cycle() {
        let h = fk_hilbert(&four_cycle(), Field::Rational, 3).unwrap();
        assert_eq!(&h.values()[..2], &[4, 12]);
        let ideal = dual_ideal_hilbert(&four_cycle(), 5);
        // brute force: monomials divisible by one of t1t2, t2t3, t3t4, t1t4
        let gens = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]];
        for j in 0..=5 {
            let count = MonomialBasis::new(4, j)
                .monomials()
                .iter()
                .filter(|m| gens.iter().any(|g| g.iter().zip(m.iter()).all(|(a, b)| *a <= *b)))
                .count() as u64;
            assert_eq!(ideal.get(j), Some(count), "j = {j}");
        }
    }

    #[test]
    fn gorenstein_four_cycle() {
        let r = gorenstein_fk_check(&four_cycle(), Field::Rational, 5).unwrap();
        assert!(r.alignment.agree, "{r:?}");
        assert_eq!(r.alignment.shift, Some(2));
        let path = complex(3, &[&[1, 2], &[2, 3]]);
        assert!(matches!(gorenstein_fk_check(&path, Field::Rational, 3), Err(CmError::NotHomologySphere { .. })));
    }

    #[test]
    fn duality_identity_four_cycle() {
        let r = duality_check(&four_cycle(), &CoordinateMap::identity(4), Field::Rational, &[0, 1, 2, 3], 4).unwrap();
        assert!(r.agree(), "{r:?}");
        assert!(r.off_top_nonzero().is_empty());
        assert_eq!(r.shifts(), vec![0]);
    }

    #[test]
    fn duality_requires_cm() {
        let disjoint = complex(4, &[&[1, 2], &[3, 4]]);
        let err = duality_check(&disjoint, &CoordinateMap::identity(4), Field::Rational, &[1], 2).unwrap_err();
        assert!(matches!(err, CmError::NotCohenMacaulay { .. }));
    }
}

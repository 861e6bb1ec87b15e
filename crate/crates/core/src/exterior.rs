//! The exterior Stanley–Reisner ring `k⟨K⟩ = E/J_K` and its degree-one
//! multiplication complexes.
//!
//! `E` is the exterior algebra on `e_1, ..., e_n` and `J_K` is spanned by the
//! monomials on nonfaces, so `k⟨K⟩` has the faces of `K` as a basis, with
//! `e_I` of degree `|I|`. For `I = {i_1 < ... < i_k}` the basis element
//! `e_I` means `e_{i_1} ⋯ e_{i_k}`; any other ordering of the same factors
//! differs from it by the sign of the sorting permutation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex, MAX_VERTICES};
use crate::field::Field;
use crate::graded::HilbertFunction;
use crate::homology::reduced_betti;
use crate::linalg::{rank_of_vectors, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("the exterior Stanley-Reisner ring of the void complex is zero; a nonvoid complex is required")]
    VoidComplex,
    #[error("elements belong to different rings")]
    MismatchedRings,
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("element is not homogeneous of degree 1")]
    NotDegreeOne,
    #[error("coordinate map misses target value(s) {0:?}")]
    NotSurjective(Vec<usize>),
    #[error("coordinate map image 0 is invalid; targets are 1-based")]
    ZeroImage,
    #[error("coordinate map has {got} entries but the complex has {n} vertices")]
    WrongDomain { got: usize, n: usize },
    #[error("support must be a nonempty subset of the vertex set")]
    EmptySupport,
    #[error("coefficient overflow")]
    Overflow,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("bad coordinate list `{0}`")]
    Parse(String),
}

/// Sign of `e_I · e_J` relative to `e_{I ∪ J}` for disjoint `I`, `J`:
/// `(-1)` to the number of pairs `i ∈ I`, `j ∈ J` with `i > j`.
pub fn shuffle_sign(i: Simplex, j: Simplex) -> i64 {
    let mut inversions = 0;
    for v in j.vertices() {
        inversions += (i.bits() >> v).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element of `k⟨K⟩` (or of `E` when `K` is a full simplex).
///
/// Coefficients are integers reduced into the field: canonical residues over
/// `𝔽_p`, plain integers over ℚ.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorElement {
    n: usize,
    field: Field,
    terms: BTreeMap<Simplex, i64>,
}

impl ExteriorElement {
    pub fn zero(n: usize, field: Field) -> Self {
        ExteriorElement { n, field, terms: BTreeMap::new() }
    }

    fn from_terms(n: usize, field: Field, terms: impl IntoIterator<Item = (Simplex, i64)>) -> Result<Self, ExteriorError> {
        let mut acc: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (s, c) in terms {
            let e = acc.entry(s).or_insert(0);
            *e = e.checked_add(c).ok_or(ExteriorError::Overflow)?;
            if let Field::Prime(p) = field {
                *e = e.rem_euclid(p as i64);
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(ExteriorElement { n, field, terms: acc })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Simplex, i64)> + '_ {
        self.terms.iter().map(|(s, c)| (*s, *c))
    }

    pub fn coefficient(&self, s: Simplex) -> i64 {
        self.terms.get(&s).copied().unwrap_or(0)
    }

    /// The common degree of all terms; `None` for zero or mixed elements.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|s| s.len());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Vertices with a nonzero coefficient in the degree-one part.
    pub fn support(&self) -> Simplex {
        self.terms
            .keys()
            .filter(|s| s.len() == 1)
            .fold(Simplex::EMPTY, |acc, s| acc.union(*s))
    }

    pub fn add(&self, other: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
        if self.n != other.n || self.field != other.field {
            return Err(ExteriorError::MismatchedRings);
        }
        Self::from_terms(self.n, self.field, self.terms().chain(other.terms()))
    }

    pub fn scale(&self, c: i64) -> Result<ExteriorElement, ExteriorError> {
        let terms = self
            .terms()
            .map(|(s, x)| x.checked_mul(c).map(|v| (s, v)).ok_or(ExteriorError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(self.n, self.field, terms)
    }

    /// Product in `E`, keeping only the terms accepted by `keep`.
    fn product_filtered(
        &self,
        other: &ExteriorElement,
        keep: impl Fn(Simplex) -> bool,
    ) -> Result<ExteriorElement, ExteriorError> {
        if self.n != other.n || self.field != other.field {
            return Err(ExteriorError::MismatchedRings);
        }
        let mut out = Vec::new();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if !a.is_disjoint(b) {
                    continue;
                }
                let u = a.union(b);
                if !keep(u) {
                    continue;
                }
                let c = x.checked_mul(y).ok_or(ExteriorError::Overflow)? * shuffle_sign(a, b);
                out.push((u, c));
            }
        }
        Self::from_terms(self.n, self.field, out)
    }

    /// Product in the full exterior algebra on `n` generators.
    pub fn wedge(&self, other: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
        self.product_filtered(other, |_| true)
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let label: String = if s.is_empty() {
                "1".into()
            } else {
                format!("e{}", s.vertices().map(|v| v.to_string()).collect::<Vec<_>>().join("_"))
            };
            write!(f, "{c}*{label}")?;
        }
        Ok(())
    }
}

/// `k⟨K⟩` for a nonvoid complex `K` over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorSRRing {
    complex: SimplicialComplex,
    field: Field,
}

impl ExteriorSRRing {
    pub fn new(k: &SimplicialComplex, field: Field) -> Result<Self, ExteriorError> {
        if k.is_void() {
            return Err(ExteriorError::VoidComplex);
        }
        Ok(ExteriorSRRing { complex: k.clone(), field })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.complex.n()
    }

    /// Top degree `dim K + 1`.
    pub fn top_degree(&self) -> usize {
        (self.complex.dim() + 1) as usize
    }

    /// `q ↦ dim k⟨K⟩_q`, which is the f-vector of `K` shifted by one.
    pub fn hilbert_function(&self) -> HilbertFunction {
        HilbertFunction::new(self.complex.f_vector().into_iter().map(|v| v as u64).collect())
    }

    /// Monomial basis of degree `q`.
    pub fn basis(&self, q: usize) -> &[Simplex] {
        self.complex.faces_of_size(q)
    }

    pub fn one(&self) -> ExteriorElement {
        self.monomial(Simplex::EMPTY).expect("∅ is a face")
    }

    pub fn generator(&self, i: usize) -> Result<ExteriorElement, ExteriorError> {
        if i == 0 || i > self.n() {
            return Err(ComplexError::VertexOutOfRange { vertex: i, n: self.n() }.into());
        }
        Ok(self.monomial(Simplex::singleton(i)).unwrap_or_else(|_| ExteriorElement::zero(self.n(), self.field)))
    }

    pub fn monomial(&self, s: Simplex) -> Result<ExteriorElement, ExteriorError> {
        self.element(&[(s, 1)])
    }

    /// An element from `(face, coefficient)` pairs; every face must lie in `K`.
    pub fn element(&self, terms: &[(Simplex, i64)]) -> Result<ExteriorElement, ExteriorError> {
        if let Some((s, _)) = terms.iter().find(|(s, _)| !self.complex.contains(*s)) {
            return Err(ExteriorError::NotAFace(*s));
        }
        ExteriorElement::from_terms(self.n(), self.field, terms.iter().copied())
    }

    /// The image of `Σ_i c_i e_i ∈ E^1` in `k⟨K⟩`, from `(vertex, coefficient)`
    /// pairs; `e_i` is zero when `{i} ∉ K`.
    pub fn linear_form(&self, coefficients: &[(usize, i64)]) -> Result<ExteriorElement, ExteriorError> {
        let mut terms = Vec::with_capacity(coefficients.len());
        for &(i, c) in coefficients {
            if i == 0 || i > self.n() {
                return Err(ComplexError::VertexOutOfRange { vertex: i, n: self.n() }.into());
            }
            if self.complex.contains(Simplex::singleton(i)) {
                terms.push((Simplex::singleton(i), c));
            }
        }
        self.element(&terms)
    }

    /// `Σ_{i ∈ supp} e_i`.
    pub fn support_sum(&self, supp: Simplex) -> Result<ExteriorElement, ExteriorError> {
        let coeffs: Vec<_> = supp.vertices().map(|i| (i, 1)).collect();
        self.linear_form(&coeffs)
    }

    fn check(&self, u: &ExteriorElement) -> Result<(), ExteriorError> {
        if u.n != self.n() || u.field != self.field {
            return Err(ExteriorError::MismatchedRings);
        }
        if let Some(s) = u.terms.keys().find(|s| !self.complex.contains(**s)) {
            return Err(ExteriorError::NotAFace(*s));
        }
        Ok(())
    }

    /// The product in `k⟨K⟩`; monomials on nonfaces vanish.
    pub fn multiply(&self, u: &ExteriorElement, v: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
        self.check(u)?;
        self.check(v)?;
        u.product_filtered(v, |s| self.complex.contains(s))
    }

    /// Columns of left multiplication by the degree-one element `a`, from
    /// degree `q` to degree `q + 1`, in lexicographic face order.
    pub(crate) fn left_multiplication(&self, a: &[(usize, i64)], q: usize) -> Vec<SparseVec> {
        let target = |s: Simplex| self.complex.index_of(s);
        self.basis(q)
            .iter()
            .map(|&face| {
                let mut col: SparseVec = a
                    .iter()
                    .filter(|(i, _)| !face.contains(*i))
                    .filter_map(|&(i, c)| {
                        let u = face.with(i);
                        target(u).map(|row| {
                            let sign = if face.preceding(i) % 2 == 0 { 1 } else { -1 };
                            (row, sign * c)
                        })
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect()
    }

    /// `q ↦ dim H^q(k⟨K⟩, ·a)` for `q = 0..=dim K + 1`, where the complex is
    /// `k⟨K⟩` with differential left multiplication by the degree-one `a`.
    pub fn mult_cohomology(&self, a: &ExteriorElement) -> Result<HilbertFunction, ExteriorError> {
        self.check(a)?;
        if !a.is_zero() && a.degree() != Some(1) {
            return Err(ExteriorError::NotDegreeOne);
        }
        let coeffs: Vec<(usize, i64)> = a
            .terms()
            .map(|(s, c)| (s.vertices().next().expect("degree one"), c))
            .collect();
        let top = self.top_degree();
        // rank of ·a out of degree q, q = 0..=top
        let ranks: Vec<usize> = (0..=top)
            .into_par_iter()
            .map(|q| rank_of_vectors(self.field, &self.left_multiplication(&coeffs, q)))
            .collect();
        let values = (0..=top)
            .map(|q| {
                let incoming = if q == 0 { 0 } else { ranks[q - 1] };
                (self.basis(q).len() - ranks[q] - incoming) as u64
            })
            .collect();
        Ok(HilbertFunction::new(values))
    }
}

/// The cohomology of `(k⟨K⟩, ·a)` predicted from `supp(a) = ℐ` alone:
/// `H^q = ⊕_{σ ∈ K, σ ∩ ℐ = ∅} H̃^{q-|σ|-1}(link_{K_ℐ} σ)`, where
/// `link_{K_ℐ} σ = {τ ⊆ ℐ : τ ∪ σ ∈ K}`.
///
/// Returned for `q = 0..=dim K + 1`, the same window as
/// [`ExteriorSRRing::mult_cohomology`].
pub fn link_formula_cohomology(
    k: &SimplicialComplex,
    supp: Simplex,
    field: Field,
) -> Result<HilbertFunction, ExteriorError> {
    if k.is_void() {
        return Err(ExteriorError::VoidComplex);
    }
    if supp.is_empty() || !supp.is_subset_of(Simplex::full(k.n())) {
        return Err(ExteriorError::EmptySupport);
    }
    let top = (k.dim() + 1) as usize;
    let sigmas: Vec<Simplex> = k.faces().filter(|s| s.is_disjoint(supp)).collect();
    let contributions: Vec<Vec<(usize, u64)>> = sigmas
        .par_iter()
        .map(|&sigma| {
            let link = k.link(sigma).expect("σ is a face");
            let restricted = link
                .complex
                .induced_subcomplex(supp.compress(Simplex::full(k.n()).minus(sigma)))
                .expect("support lies in the link's vertex set");
            reduced_betti(&restricted.complex, field)
                .into_iter()
                .enumerate()
                .filter(|&(_, b)| b > 0)
                // betti index t + 1 holds H̃^t; it lands in q = t + |σ| + 1
                .map(|(i, b)| (i + sigma.len(), b as u64))
                .collect()
        })
        .collect();
    let mut values = vec![0u64; top + 1];
    for (q, b) in contributions.into_iter().flatten() {
        values[q] += b;
    }
    Ok(HilbertFunction::new(values))
}

/// A surjection `f: [n] → [m]` of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoordinateMap {
    m: usize,
    images: Vec<usize>,
}

impl CoordinateMap {
    /// `images[i - 1] = f(i)`, 1-based; `m` is the largest image.
    pub fn new(images: Vec<usize>) -> Result<Self, ExteriorError> {
        if images.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(images.len()).into());
        }
        if images.contains(&0) {
            return Err(ExteriorError::ZeroImage);
        }
        let m = images.iter().copied().max().unwrap_or(0);
        let missing: Vec<usize> = (1..=m).filter(|j| !images.contains(j)).collect();
        if !missing.is_empty() {
            return Err(ExteriorError::NotSurjective(missing));
        }
        Ok(CoordinateMap { m, images })
    }

    pub fn identity(n: usize) -> Self {
        CoordinateMap { m: n, images: (1..=n).collect() }
    }

    /// The map `[n] → [1]`.
    pub fn to_point(n: usize) -> Self {
        CoordinateMap { m: usize::from(n > 0), images: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `f(i)` for a 1-based vertex `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `f^{-1}(j)`.
    pub fn fiber(&self, j: usize) -> Simplex {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == j)
            .fold(Simplex::EMPTY, |acc, (i, _)| acc.with(i + 1))
    }

    pub fn check_domain(&self, k: &SimplicialComplex) -> Result<(), ExteriorError> {
        if self.n() != k.n() {
            return Err(ExteriorError::WrongDomain { got: self.n(), n: k.n() });
        }
        Ok(())
    }
}

impl FromStr for CoordinateMap {
    type Err = ExteriorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| ExteriorError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        CoordinateMap::new(images)
    }
}

impl fmt::Display for CoordinateMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The fiber sums `h_j = Σ_{f(i)=j} e_i` and their product `a_f = h_1 ⋯ h_m`
/// in the full exterior algebra on `n` generators, with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateIdealData {
    pub h: Vec<ExteriorElement>,
    pub a_f: ExteriorElement,
}

pub fn coordinate_ideal_data(f: &CoordinateMap) -> Result<CoordinateIdealData, ExteriorError> {
    let n = f.n();
    let field = Field::Rational;
    let h: Vec<ExteriorElement> = (1..=f.m())
        .map(|j| ExteriorElement::from_terms(n, field, f.fiber(j).vertices().map(|i| (Simplex::singleton(i), 1))))
        .collect::<Result<_, _>>()?;
    let mut a_f = ExteriorElement::from_terms(n, field, [(Simplex::EMPTY, 1)])?;
    for hj in &h {
        a_f = a_f.wedge(hj)?;
    }
    Ok(CoordinateIdealData { h, a_f })
}

/// Per-step verdicts for the sequence `h_1, ..., h_m` on `k⟨K⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularSequenceReport {
    /// `steps[j - 1]` says whether `h_j` is regular on `k⟨K⟩/(h_1, ..., h_{j-1})`.
    pub steps: Vec<bool>,
    /// Cohomology of each step's multiplication complex, degree by degree.
    pub cohomology: Vec<HilbertFunction>,
}

impl RegularSequenceReport {
    pub fn is_regular(&self) -> bool {
        self.steps.iter().all(|&b| b)
    }
}

/// Tests whether `h_1, ..., h_m` is a `k⟨K⟩`-regular sequence.
///
/// Each quotient `k⟨K⟩/(h_1, ..., h_{j-1})` is represented degree by degree
/// as the ambient space modulo the span of `h_i · e_I`; the multiplication
/// complex of `h_j` on it is measured through ranks of stacked matrices.
pub fn is_regular_sequence(
    k: &SimplicialComplex,
    f: &CoordinateMap,
    field: Field,
) -> Result<RegularSequenceReport, ExteriorError> {
    f.check_domain(k)?;
    let ring = ExteriorSRRing::new(k, field)?;
    let top = ring.top_degree();
    let forms: Vec<Vec<(usize, i64)>> =
        (1..=f.m()).map(|j| f.fiber(j).vertices().map(|i| (i, 1)).collect()).collect();

    let mut steps = Vec::new();
    let mut cohomology = Vec::new();
    for j in 0..forms.len() {
        // relations[q] spans the ideal (h_1, ..., h_{j}) in degree q
        let relations: Vec<Vec<SparseVec>> = (0..=top + 1)
            .map(|q| {
                if q == 0 {
                    return Vec::new();
                }
                forms[..j].iter().flat_map(|h| ring.left_multiplication(h, q - 1)).collect()
            })
            .collect();
        let rel_rank: Vec<usize> = relations.par_iter().map(|r| rank_of_vectors(field, r)).collect();
        let map_rank: Vec<usize> = (0..=top)
            .into_par_iter()
            .map(|q| {
                let mut stacked = ring.left_multiplication(&forms[j], q);
                stacked.extend(relations[q + 1].iter().cloned());
                rank_of_vectors(field, &stacked) - rel_rank[q + 1]
            })
            .collect();
        let values: Vec<u64> = (0..=top)
            .map(|q| {
                let quotient = ring.basis(q).len() - rel_rank[q];
                let incoming = if q == 0 { 0 } else { map_rank[q - 1] };
                (quotient - map_rank[q] - incoming) as u64
            })
            .collect();
        let h = HilbertFunction::new(values);
        steps.push(h.is_zero());
        cohomology.push(h);
    }
    Ok(RegularSequenceReport { steps, cohomology })
}

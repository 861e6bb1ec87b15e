//! Finite simplicial complexes on the vertex set `[n] = {1, ..., n}`.
//!
//! Faces are stored as 64-bit vertex sets, so `n` is capped at
//! [`MAX_VERTICES`]. Vertex `i` occupies bit `i - 1`.
//!
//! Two degenerate complexes are kept apart on purpose: the *void* complex has
//! no faces at all, while the *irrelevant* complex `{∅}` has exactly the
//! empty face. Reduced homology tells them apart (`H̃_{-1}({∅}) = k`), and
//! Alexander duality maps one to the other's neighbourhood, so collapsing
//! them would break the dual Hochster bookkeeping.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {vertex} is outside the vertex set [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {0} repeated in a face")]
    RepeatedVertex(usize),
    #[error("graph edge {0}-{0} is a loop")]
    Loop(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("operation requires a nonvoid complex")]
    VoidComplex,
    #[error("the full simplex has a void Alexander dual")]
    DegenerateDual,
}

/// A finite set of vertices, i.e. a simplex `σ ⊆ [n]`.
///
/// Ordered first by cardinality and then lexicographically on the sorted
/// vertex list, which is the basis order used by every matrix in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a simplex from 1-based vertex labels in any order.
    pub fn from_vertices(vertices: &[usize]) -> Result<Self, ComplexError> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            let b = 1u64 << (v - 1);
            if bits & b != 0 {
                return Err(ComplexError::RepeatedVertex(v));
            }
            bits |= b;
        }
        Ok(Simplex(bits))
    }

    /// The full vertex set `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            Simplex(u64::MAX)
        } else {
            Simplex((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        Simplex(1u64 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Geometric dimension, `-1` for the empty face.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Simplex) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub fn intersection(self, other: Simplex) -> Simplex {
        Simplex(self.0 & other.0)
    }

    pub fn minus(self, other: Simplex) -> Simplex {
        Simplex(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Simplex {
        Simplex(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Simplex {
        Simplex(self.0 & !(1u64 << (v - 1)))
    }

    /// Number of vertices of `self` strictly smaller than `v`.
    pub fn preceding(self, v: usize) -> usize {
        let mask = (1u64 << (v - 1)) - 1;
        (self.0 & mask).count_ones() as usize
    }

    /// Vertices in increasing order, 1-based.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// All subsets, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { set: self.0, next: Some(0) }
    }

    /// Reindexes `self ⊆ domain` onto `[|domain|]`, preserving order.
    pub fn compress(self, domain: Simplex) -> Simplex {
        let mut out = 0u64;
        for (bit, v) in domain.vertices().enumerate() {
            if self.contains(v) {
                out |= 1u64 << bit;
            }
        }
        Simplex(out)
    }

    /// Inverse of [`Simplex::compress`].
    pub fn expand(self, domain: Simplex) -> Simplex {
        let mut out = 0u64;
        for (i, v) in domain.vertices().enumerate() {
            if self.0 & (1u64 << i) != 0 {
                out |= 1u64 << (v - 1);
            }
        }
        Simplex(out)
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both sorted lists agree below the lowest differing vertex; whoever
        // owns that vertex is lexicographically smaller.
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for Simplex {
    type Error = ComplexError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Simplex::from_vertices(&v)
    }
}

#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

/// Subsets of a bitset in increasing numeric order of their bits.
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Simplex;

    fn next(&mut self) -> Option<Simplex> {
        let cur = self.next?;
        self.next = if cur == self.set { None } else { Some((cur.wrapping_sub(self.set)) & self.set) };
        Some(Simplex(cur))
    }
}

/// A downward-closed family of subsets of `[n]`, or the void complex.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    void: bool,
    /// `by_size[k]` lists the faces with `k` vertices in lexicographic order.
    by_size: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    /// The smallest complex on `[n]` containing every listed facet.
    ///
    /// Redundant (non-maximal) facets are absorbed. An empty facet list
    /// yields the irrelevant complex `{∅}`.
    pub fn new(n: usize, facets: &[Simplex]) -> Result<Self, ComplexError> {
        check_n(n)?;
        let full = Simplex::full(n);
        let mut faces: HashSet<Simplex> = HashSet::new();
        faces.insert(Simplex::EMPTY);
        for &facet in facets {
            if !facet.is_subset_of(full) {
                let vertex = facet.minus(full).vertices().next().unwrap_or(0);
                return Err(ComplexError::VertexOutOfRange { vertex, n });
            }
            if faces.contains(&facet) {
                continue;
            }
            for sub in facet.subsets() {
                faces.insert(sub);
            }
        }
        Ok(Self::from_face_set(n, faces))
    }

    /// Builds a complex from 1-based vertex lists.
    pub fn from_facet_lists(n: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        let mut simplices = Vec::with_capacity(facets.len());
        for f in facets {
            for &v in f {
                if v == 0 || v > n {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, n });
                }
            }
            simplices.push(Simplex::from_vertices(f)?);
        }
        Self::new(n, &simplices)
    }

    /// Assembles a complex from a face family that is already downward closed.
    pub(crate) fn from_face_set(n: usize, faces: impl IntoIterator<Item = Simplex>) -> Self {
        let mut by_size: Vec<Vec<Simplex>> = Vec::new();
        let mut any = false;
        for f in faces {
            any = true;
            let k = f.len();
            if by_size.len() <= k {
                by_size.resize(k + 1, Vec::new());
            }
            by_size[k].push(f);
        }
        let mut index = HashMap::new();
        for level in by_size.iter_mut() {
            level.sort_unstable();
            level.dedup();
            for (i, f) in level.iter().enumerate() {
                index.insert(*f, i);
            }
        }
        SimplicialComplex { n, void: !any, by_size, index }
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Result<Self, ComplexError> {
        check_n(n)?;
        Ok(SimplicialComplex { n, void: true, by_size: Vec::new(), index: HashMap::new() })
    }

    /// The irrelevant complex `{∅}` on `[n]`.
    pub fn irrelevant(n: usize) -> Result<Self, ComplexError> {
        Self::new(n, &[])
    }

    /// The full simplex `Δ^{n-1}`.
    pub fn full_simplex(n: usize) -> Result<Self, ComplexError> {
        check_n(n)?;
        Self::new(n, &[Simplex::full(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// `max |σ| - 1`; `-1` for `{∅}` and, by convention, for the void complex.
    pub fn dim(&self) -> isize {
        self.by_size.len() as isize - 2
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.index.contains_key(&s)
    }

    /// Faces with exactly `k` vertices, in lexicographic order.
    pub fn faces_of_size(&self, k: usize) -> &[Simplex] {
        self.by_size.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Faces of dimension `p` (so `p = -1` is the empty face).
    pub fn faces_of_dim(&self, p: isize) -> &[Simplex] {
        if p < -1 {
            &[]
        } else {
            self.faces_of_size((p + 1) as usize)
        }
    }

    /// All faces, by cardinality and then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.by_size.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.index.len()
    }

    /// Position of `s` among the faces of the same cardinality.
    pub fn index_of(&self, s: Simplex) -> Option<usize> {
        self.index.get(&s).copied()
    }

    /// Maximal faces in the canonical order.
    pub fn facets(&self) -> Vec<Simplex> {
        self.faces()
            .filter(|&f| {
                (1..=self.n).all(|v| f.contains(v) || !self.contains(f.with(v)))
            })
            .collect()
    }

    /// `(f_{-1}, f_0, ..., f_d)`; empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.contains(Simplex::full(self.n))
    }

    /// Vertices `v` with `{v}` a face.
    pub fn vertex_support(&self) -> Simplex {
        self.faces_of_size(1).iter().fold(Simplex::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        for e in self.faces_of_size(2) {
            let vs = e.to_vec();
            adj[vs[0] - 1] |= 1u64 << (vs[1] - 1);
            adj[vs[1] - 1] |= 1u64 << (vs[0] - 1);
        }
        Graph { n: self.n, adj }
    }

    /// `true` iff the complex is the clique complex of its 1-skeleton.
    pub fn is_flag(&self) -> bool {
        !self.void && clique_complex(&self.one_skeleton()) == *self
    }

    /// The combinatorial Alexander dual `{σ ⊆ [n] : [n] - σ ∉ K}`.
    ///
    /// Enumerates all `2^n` subsets. The full simplex is rejected because its
    /// dual is void.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex, ComplexError> {
        if self.is_full_simplex() {
            return Err(ComplexError::DegenerateDual);
        }
        let full = Simplex::full(self.n);
        let faces = full.subsets().filter(|s| !self.contains(full.minus(*s)));
        Ok(Self::from_face_set(self.n, faces))
    }

    /// The subcomplex of faces inside `vertices`, relabelled onto `[|vertices|]`.
    pub fn induced_subcomplex(&self, vertices: Simplex) -> Result<Relabeled, ComplexError> {
        let full = Simplex::full(self.n);
        if !vertices.is_subset_of(full) {
            let vertex = vertices.minus(full).vertices().next().unwrap_or(0);
            return Err(ComplexError::VertexOutOfRange { vertex, n: self.n });
        }
        let m = vertices.len();
        let complex = if self.void {
            SimplicialComplex::void(m)?
        } else {
            let faces = self
                .faces()
                .filter(|f| f.is_subset_of(vertices))
                .map(|f| f.compress(vertices));
            Self::from_face_set(m, faces)
        };
        Ok(Relabeled { complex, vertex_map: vertices.to_vec() })
    }

    /// `link_K(s) = {τ : τ ∩ s = ∅, τ ∪ s ∈ K}` on the vertex set `[n] - s`.
    pub fn link(&self, s: Simplex) -> Result<Relabeled, ComplexError> {
        if !self.contains(s) {
            return Err(ComplexError::NotAFace(s));
        }
        let rest = Simplex::full(self.n).minus(s);
        let faces = self
            .faces()
            .filter(|f| s.is_subset_of(*f))
            .map(|f| f.minus(s).compress(rest));
        Ok(Relabeled {
            complex: Self::from_face_set(rest.len(), faces),
            vertex_map: rest.to_vec(),
        })
    }
}

fn check_n(n: usize) -> Result<(), ComplexError> {
    if n > MAX_VERTICES {
        Err(ComplexError::TooManyVertices(n))
    } else {
        Ok(())
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.void == other.void && self.by_size == other.by_size
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return write!(f, "SimplicialComplex(n={}, void)", self.n);
        }
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets())
    }
}

/// A complex produced by restricting to a vertex subset, with the
/// order-preserving relabelling that was applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: SimplicialComplex,
    /// `vertex_map[v - 1]` is the original label of new vertex `v`.
    pub vertex_map: Vec<usize>,
}

impl Relabeled {
    pub fn original_vertex(&self, v: usize) -> usize {
        self.vertex_map[v - 1]
    }
}

/// A simple graph on `[n]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Repeated edges are absorbed; loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, ComplexError> {
        check_n(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(ComplexError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(ComplexError::Loop(u));
            }
            adj[u - 1] |= 1u64 << (v - 1);
            adj[v - 1] |= 1u64 << (u - 1);
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self, ComplexError> {
        let edges: Vec<_> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & (1u64 << (v - 1)) != 0
    }

    /// Neighbours of `v` as a vertex set.
    pub fn neighbours(&self, v: usize) -> Simplex {
        Simplex::from_bits(self.adj[v - 1])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in Simplex::from_bits(self.adj[u - 1]).vertices() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (1..=self.n).all(|v| self.adj[v - 1].count_ones() as usize == self.n - 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The flag complex whose faces are the cliques of `g`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let mut faces = vec![Simplex::EMPTY];
    let mut frontier = vec![(Simplex::EMPTY, Simplex::full(g.n))];
    while let Some((clique, candidates)) = frontier.pop() {
        // Extend only by vertices above the current maximum so each clique
        // is produced once.
        let floor = clique.max_vertex().unwrap_or(0);
        for v in candidates.vertices().filter(|&v| v > floor) {
            let next = clique.with(v);
            faces.push(next);
            frontier.push((next, candidates.intersection(g.neighbours(v))));
        }
    }
    SimplicialComplex::from_face_set(g.n, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_vertices(v).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    #[test]
    fn builds_four_cycle() {
        let k = four_cycle();
        assert_eq!(k.num_faces(), 9);
        assert_eq!(k.f_vector(), vec![1, 4, 4]);
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn empty_facet_list_is_irrelevant_complex() {
        let k = SimplicialComplex::new(2, &[]).unwrap();
        assert!(!k.is_void());
        assert_eq!(k.f_vector(), vec![1]);
        assert_eq!(k.dim(), -1);
        assert_ne!(k, SimplicialComplex::void(2).unwrap());
    }

    #[test]
    fn full_simplex_has_power_set() {
        let k = SimplicialComplex::from_facet_lists(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(k.num_faces(), 8);
        assert_eq!(k.f_vector(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = SimplicialComplex::from_facet_lists(3, &[vec![1, 4]]).unwrap_err();
        assert_eq!(err, ComplexError::VertexOutOfRange { vertex: 4, n: 3 });
        assert!(matches!(SimplicialComplex::void(64), Err(ComplexError::TooManyVertices(64))));
    }

    #[test]
    fn redundant_facets_are_absorbed() {
        let a = SimplicialComplex::from_facet_lists(3, &[vec![1, 2, 3], vec![1, 2], vec![3]]).unwrap();
        assert_eq!(a, SimplicialComplex::full_simplex(3).unwrap());
        assert_eq!(a.facets(), vec![s(&[1, 2, 3])]);
    }

    #[test]
    fn lexicographic_face_order() {
        let k = SimplicialComplex::full_simplex(4).unwrap();
        let edges: Vec<Vec<usize>> = k.faces_of_size(2).iter().map(|f| f.to_vec()).collect();
        assert_eq!(
            edges,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
    }

    #[test]
    fn clique_complexes() {
        let path = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let k = clique_complex(&path);
        let faces: Vec<_> = k.faces().collect();
        assert_eq!(faces, vec![Simplex::EMPTY, s(&[1]), s(&[2]), s(&[3]), s(&[1, 2]), s(&[2, 3])]);

        let k3 = clique_complex(&Graph::complete(3).unwrap());
        assert_eq!(k3, SimplicialComplex::full_simplex(3).unwrap());

        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(clique_complex(&c4), four_cycle());
    }

    #[test]
    fn graph_rejects_loops() {
        assert_eq!(Graph::new(3, &[(2, 2)]).unwrap_err(), ComplexError::Loop(2));
        let g = Graph::new(3, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn flagness() {
        assert!(four_cycle().is_flag());
        let hollow = SimplicialComplex::from_facet_lists(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert!(!hollow.is_flag());
        assert!(SimplicialComplex::full_simplex(3).unwrap().is_flag());
    }

    #[test]
    fn alexander_dual_examples() {
        let dual = four_cycle().alexander_dual().unwrap();
        let expected =
            SimplicialComplex::from_facet_lists(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(dual, expected);

        let two_points = SimplicialComplex::from_facet_lists(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(two_points.alexander_dual().unwrap(), SimplicialComplex::irrelevant(2).unwrap());

        assert_eq!(
            SimplicialComplex::full_simplex(3).unwrap().alexander_dual().unwrap_err(),
            ComplexError::DegenerateDual
        );
    }

    #[test]
    fn induced_subcomplexes() {
        let k = four_cycle();
        let r = k.induced_subcomplex(s(&[1, 3])).unwrap();
        assert_eq!(r.complex, SimplicialComplex::from_facet_lists(2, &[vec![1], vec![2]]).unwrap());
        assert_eq!(r.vertex_map, vec![1, 3]);
        assert_eq!(r.original_vertex(2), 3);

        let r = k.induced_subcomplex(Simplex::EMPTY).unwrap();
        assert_eq!(r.complex, SimplicialComplex::irrelevant(0).unwrap());

        assert_eq!(k.induced_subcomplex(Simplex::full(4)).unwrap().complex, k);
    }

    #[test]
    fn links() {
        let k = four_cycle();
        let l = k.link(s(&[1])).unwrap();
        assert_eq!(l.vertex_map, vec![2, 3, 4]);
        // {2} and {4} relabel to 1 and 3
        assert_eq!(l.complex, SimplicialComplex::from_facet_lists(3, &[vec![1], vec![3]]).unwrap());

        let path = SimplicialComplex::from_facet_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(path.link(s(&[1, 2])).unwrap().complex, SimplicialComplex::irrelevant(1).unwrap());

        let tri = SimplicialComplex::full_simplex(3).unwrap();
        let l = tri.link(s(&[1, 2])).unwrap();
        assert_eq!(l.complex, SimplicialComplex::full_simplex(1).unwrap());
        assert_eq!(l.vertex_map, vec![3]);

        assert_eq!(k.link(Simplex::EMPTY).unwrap().complex, k);
        assert_eq!(k.link(s(&[1, 3])).unwrap_err(), ComplexError::NotAFace(s(&[1, 3])));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(four_cycle().f_vector(), vec![1, 4, 4]);
        assert_eq!(SimplicialComplex::full_simplex(3).unwrap().f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(SimplicialComplex::irrelevant(3).unwrap().f_vector(), vec![1]);
    }

    #[test]
    fn simplex_helpers() {
        let a = s(&[2, 5, 7]);
        assert_eq!(a.preceding(5), 1);
        assert_eq!(a.preceding(8), 3);
        assert_eq!(a.max_vertex(), Some(7));
        let dom = s(&[2, 3, 5, 7]);
        assert_eq!(a.compress(dom), s(&[1, 3, 4]));
        assert_eq!(a.compress(dom).expand(dom), a);
        assert_eq!(s(&[1, 2]).subsets().count(), 4);
        assert_eq!(format!("{}", a), "{2,5,7}");
        assert!(s(&[1, 3]) < s(&[2, 3]));
        assert!(s(&[1, 4]) < s(&[2, 3]));
        assert!(s(&[3]) < s(&[1, 2]));
    }
}

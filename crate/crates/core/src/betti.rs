//! Graded Betti numbers of Stanley–Reisner rings and the Krull dimensions
//! they control.
//!
//! Betti tables use the `(p, q)` convention in which the subset `ℐ`
//! contributing `H̃^{q-1}(K_ℐ)` has `|ℐ| = p + q`; so `β_{p,q}(S/I_K)` counts
//! `p`-th syzygies in internal degree `p + q`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex};
use crate::cover::{compact_support_cohomology, CoverError};
use crate::exterior::CoordinateMap;
use crate::field::Field;
use crate::graded::{growth_degree, Growth};
use crate::homology::reduced_betti;
use crate::linalg::{rank_of_vectors, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error("the void complex has no Stanley-Reisner ring")]
    VoidComplex,
    #[error("degree q must be at least {min}, got {q}")]
    DegreeTooSmall { q: i64, min: i64 },
    #[error("complex is not the clique complex of its 1-skeleton")]
    NotFlag,
    #[error("clique complex of a complete graph is excluded")]
    CompleteGraph,
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// `β_{p,q}` for `p, q ≥ 0` with `p + q ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, p: usize, q: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((p, q)).or_insert(0) += v;
        }
    }

    /// Nonzero entries ordered by `(p, q)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Largest `p` with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(p, _)| p).max().unwrap_or(0)
    }

    /// Largest `q` with a nonzero entry.
    pub fn max_q(&self) -> usize {
        self.entries.keys().map(|&(_, q)| q).max().unwrap_or(0)
    }

    /// The distinct `q` values carrying entries with `p ≥ 1`.
    pub fn syzygy_rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.entries.keys().filter(|(p, _)| *p >= 1).map(|&(_, q)| q).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `q`, columns are `p`, in the usual Betti-diagram layout.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pmax = self.projective_dimension();
        let qmax = self.max_q();
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(2);
        write!(f, "{:>4}", "q\\p")?;
        for p in 0..=pmax {
            write!(f, " {p:>width$}")?;
        }
        writeln!(f)?;
        for q in 0..=qmax {
            write!(f, "{q:>4}")?;
            for p in 0..=pmax {
                match self.get(p, q) {
                    0 => write!(f, " {:>width$}", ".")?,
                    v => write!(f, " {v:>width$}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `dim H̃_*(K_ℐ)` for every `ℐ ⊆ [n]`, indexed by the bits of `ℐ`; entry
/// `t + 1` of each vector is `H̃_t`.
pub fn induced_betti_numbers(k: &SimplicialComplex, field: Field) -> Result<Vec<Vec<usize>>, BettiError> {
    if k.is_void() {
        return Err(BettiError::VoidComplex);
    }
    let n = k.n();
    Ok((0..1u64 << n)
        .into_par_iter()
        .map(|bits| {
            let sub = k.induced_subcomplex(Simplex::from_bits(bits)).expect("subset of [n]");
            reduced_betti(&sub.complex, field)
        })
        .collect())
}

/// `β_{p,q}(S/I_K) = Σ_{|ℐ| = p+q} dim H̃^{q-1}(K_ℐ)`.
pub fn hochster_betti(k: &SimplicialComplex, field: Field) -> Result<BettiTable, BettiError> {
    let sweep = induced_betti_numbers(k, field)?;
    let mut table = BettiTable::new(k.n());
    for (bits, betti) in sweep.iter().enumerate() {
        let size = (bits as u64).count_ones() as usize;
        // betti[q] = dim H̃_{q-1}, which sits in row q
        for (q, &b) in betti.iter().enumerate() {
            if b > 0 && q <= size {
                table.add(size - q, q, b as u64);
            }
        }
    }
    Ok(table)
}

/// Exponent vectors in `n` variables of total degree at most `bound`.
fn multidegrees(n: usize, bound: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, bound as u32, &mut Vec::with_capacity(n), &mut out);
    out
}

fn support(alpha: &[u32]) -> Simplex {
    alpha
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(Simplex::EMPTY, |s, (i, _)| s.with(i + 1))
}

/// `Tor^S(S/I_K, k)` from the Koszul complex of `t_1, ..., t_n` tensored
/// with `S/I_K`, one multidegree `α` at a time.
///
/// In multidegree `α` the complex has basis `e_A ⊗ t^{α - χ_A}` for
/// `A ⊆ supp α` with `supp(α - χ_A) ∈ K`, and
/// `d(e_A ⊗ m) = Σ_{i ∈ A} ± e_{A-i} ⊗ t_i m`. Every multidegree of total
/// degree at most `n` is examined, squarefree or not.
pub fn koszul_tor_oracle(k: &SimplicialComplex, field: Field) -> Result<BettiTable, BettiError> {
    if k.is_void() {
        return Err(BettiError::VoidComplex);
    }
    let n = k.n();
    let alphas = multidegrees(n, n);
    let pieces: Vec<Vec<(usize, usize, u64)>> = alphas
        .par_iter()
        .map(|alpha| {
            let total: usize = alpha.iter().map(|&e| e as usize).sum();
            let supp = support(alpha);
            // A is allowed when the remaining monomial α - χ_A survives in S/I_K
            let survives = |a: Simplex| {
                let rest: Simplex = supp
                    .vertices()
                    .filter(|&i| alpha[i - 1] > u32::from(a.contains(i)))
                    .fold(Simplex::EMPTY, |s, i| s.with(i));
                k.contains(rest)
            };
            let mut basis: Vec<Vec<Simplex>> = vec![Vec::new(); supp.len() + 1];
            for a in supp.subsets() {
                if survives(a) {
                    basis[a.len()].push(a);
                }
            }
            for b in basis.iter_mut() {
                b.sort_unstable_by_key(|s| s.bits());
            }
            let position = |a: Simplex| basis[a.len()].binary_search_by(|x| x.bits().cmp(&a.bits()));
            let rank = |p: usize| -> usize {
                if p == 0 || p >= basis.len() {
                    return 0;
                }
                let cols: Vec<SparseVec> = basis[p]
                    .iter()
                    .map(|&a| {
                        let mut col: SparseVec = a
                            .vertices()
                            .filter_map(|i| {
                                let target = a.without(i);
                                position(target).ok().map(|r| {
                                    (r, if a.preceding(i) % 2 == 0 { 1 } else { -1 })
                                })
                            })
                            .collect();
                        col.sort_unstable_by_key(|&(r, _)| r);
                        col
                    })
                    .collect();
                rank_of_vectors(field, &cols)
            };
            let ranks: Vec<usize> = (0..=basis.len()).map(rank).collect();
            (0..basis.len())
                .filter_map(|p| {
                    let tor = basis[p].len() - ranks[p] - ranks[p + 1];
                    (tor > 0 && p <= total).then_some((p, total - p, tor as u64))
                })
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(n);
    for (p, q, v) in pieces.into_iter().flatten() {
        table.add(p, q, v);
    }
    Ok(table)
}

/// Coefficients `c[P][q]` of `t^P u^q` in
/// `P_{E/J}(t, u) = Σ β_{p,q} t^p u^q / (1 - t)^{p+q}`, for `P ≤ p_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareSeries {
    pub coefficients: Vec<Vec<u64>>,
}

impl PoincareSeries {
    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.coefficients.get(p).and_then(|row| row.get(q)).copied().unwrap_or(0)
    }

    pub fn p_max(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Expands the exterior Poincaré series through `t^{p_max}` using
/// `t^p / (1 - t)^{p+q} = Σ_{P ≥ p} C(P + q - 1, p + q - 1) t^P`.
pub fn exterior_poincare(k: &SimplicialComplex, field: Field, p_max: usize) -> Result<PoincareSeries, BettiError> {
    let table = hochster_betti(k, field)?;
    Ok(poincare_from_betti(&table, p_max))
}

pub fn poincare_from_betti(table: &BettiTable, p_max: usize) -> PoincareSeries {
    let width = table.max_q() + 1;
    let mut coefficients = vec![vec![0u64; width]; p_max + 1];
    for ((p, q), beta) in table.nonzero() {
        for (big_p, row) in coefficients.iter_mut().enumerate().skip(p) {
            let c = if p + q == 0 {
                u64::from(big_p == 0)
            } else {
                binomial((big_p + q - 1) as u64, (p + q - 1) as u64)
            };
            row[q] += beta * c;
        }
    }
    PoincareSeries { coefficients }
}

/// A Krull dimension, or the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KrullDim {
    ZeroModule,
    Dim(usize),
}

impl KrullDim {
    /// Whether a growth measurement agrees with this value.
    pub fn agrees_with(self, g: Growth) -> bool {
        matches!((self, g), (KrullDim::ZeroModule, Growth::Zero)) || matches!((self, g), (KrullDim::Dim(d), Growth::Degree(e)) if d == e)
    }
}

impl fmt::Display for KrullDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullDim::ZeroModule => write!(f, "zero module"),
            KrullDim::Dim(d) => write!(f, "{d}"),
        }
    }
}

/// Krull dimension of `H_q(Z_K(ℝ, ℤ); k)` as an `S`-module: the largest
/// `|ℐ|` with `H̃^{q-1}(K_ℐ) ≠ 0`, with a witness `ℐ`.
pub fn krull_dim_homology(
    k: &SimplicialComplex,
    q: i64,
    field: Field,
) -> Result<(KrullDim, Option<Simplex>), BettiError> {
    if q < 1 {
        return Err(BettiError::DegreeTooSmall { q, min: 1 });
    }
    let sweep = induced_betti_numbers(k, field)?;
    let q = q as usize;
    let best = sweep
        .iter()
        .enumerate()
        .filter(|(_, b)| b.get(q).copied().unwrap_or(0) > 0)
        .map(|(bits, _)| Simplex::from_bits(bits as u64))
        .max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)));
    Ok(match best {
        Some(w) => (KrullDim::Dim(w.len()), Some(w)),
        None => (KrullDim::ZeroModule, None),
    })
}

/// The ways of reading the compact-support Krull-dimension formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    /// Largest `r` with some `σ ∈ K`, `|σ| = n - r`, `H̃_{r-q-1}(link σ) ≠ 0`.
    Literal,
    /// As `Literal` but with `H̃_{r-q}(link σ)`.
    Shifted,
    /// Largest `n - |σ|` with `H̃^{q-|σ|-1}(link σ) ≠ 0`; this is what the
    /// `ℤ^n`-graded pieces of `k⟨K⟩ ⊗ S` under `δ` compute, since the
    /// multidegree with `-1` exactly on `σ` is the cochain complex of
    /// `link_K σ` shifted by `|σ| + 1`.
    LinkDegree,
}

impl Reading {
    pub const ALL: [Reading; 3] = [Reading::Literal, Reading::Shifted, Reading::LinkDegree];
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reading::Literal => write!(f, "literal"),
            Reading::Shifted => write!(f, "shifted"),
            Reading::LinkDegree => write!(f, "link-degree"),
        }
    }
}

/// `dim H̃_t(link_K σ)` for every face, entry `t + 1` as in [`reduced_betti`].
fn link_betti(k: &SimplicialComplex, field: Field) -> Vec<(Simplex, Vec<usize>)> {
    let faces: Vec<Simplex> = k.faces().collect();
    faces
        .into_par_iter()
        .map(|s| {
            let link = k.link(s).expect("face");
            (s, reduced_betti(&link.complex, field))
        })
        .collect()
}

fn betti_at(b: &[usize], t: i64) -> usize {
    if t < -1 {
        return 0;
    }
    b.get((t + 1) as usize).copied().unwrap_or(0)
}

fn predict(n: usize, links: &[(Simplex, Vec<usize>)], q: i64, reading: Reading) -> (KrullDim, Option<Simplex>) {
    let best = links
        .iter()
        .filter(|(s, b)| {
            let r = (n - s.len()) as i64;
            let t = match reading {
                Reading::Literal => r - q - 1,
                Reading::Shifted => r - q,
                Reading::LinkDegree => q - s.len() as i64 - 1,
            };
            betti_at(b, t) > 0
        })
        .min_by_key(|(s, _)| (s.len(), *s));
    match best {
        Some((s, _)) => (KrullDim::Dim(n - s.len()), Some(*s)),
        None => (KrullDim::ZeroModule, None),
    }
}

/// One degree of the compact-support Krull-dimension comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyKrull {
    pub q: usize,
    /// Prediction and witness face `σ` under each reading, in [`Reading::ALL`] order.
    pub predictions: Vec<(Reading, KrullDim, Option<Simplex>)>,
    /// Growth degree of the chain-level compact-support cohomology.
    pub measured: Growth,
}

impl CohomologyKrull {
    pub fn prediction(&self, reading: Reading) -> KrullDim {
        self.predictions.iter().find(|(r, _, _)| *r == reading).map(|(_, d, _)| *d).expect("all readings present")
    }
}

/// Result of certifying the readings against the chain-level oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyKrullReport {
    pub j_max: usize,
    pub degrees: Vec<CohomologyKrull>,
    /// Readings that agree with the oracle at every degree, conclusively.
    pub certified: Vec<Reading>,
}

impl CohomologyKrullReport {
    /// The first certified reading in [`Reading::ALL`] order.
    pub fn chosen(&self) -> Option<Reading> {
        self.certified.first().copied()
    }

    /// Human-readable lines for each degree where some reading disagrees
    /// with the measurement.
    pub fn discrepancies(&self) -> Vec<String> {
        let mut out = Vec::new();
        for d in &self.degrees {
            for (r, dim, _) in &d.predictions {
                if !dim.agrees_with(d.measured) {
                    out.push(format!("q={}: {r} reading predicts {dim}, chain level measures {}", d.q, d.measured));
                }
            }
        }
        out
    }
}

fn check_flag(k: &SimplicialComplex) -> Result<(), BettiError> {
    if k.is_void() {
        return Err(BettiError::VoidComplex);
    }
    if !k.is_flag() {
        return Err(BettiError::NotFlag);
    }
    if k.one_skeleton().is_complete() {
        return Err(BettiError::CompleteGraph);
    }
    Ok(())
}

/// Krull dimension of `H^q(G_Γ, k[ℤ^n])` for the clique complex `K` of a
/// non-complete graph, under one reading of the link formula.
pub fn krull_dim_cohomology(
    k: &SimplicialComplex,
    q: i64,
    field: Field,
    reading: Reading,
) -> Result<(KrullDim, Option<Simplex>), BettiError> {
    check_flag(k)?;
    if q < 0 {
        return Err(BettiError::DegreeTooSmall { q, min: 0 });
    }
    Ok(predict(k.n(), &link_betti(k, field), q, reading))
}

/// Evaluates every reading for `q = 0..=dim K + 1` and compares each with
/// the growth degree of `compact_support_cohomology(K, id, q)` through
/// `j_max`.
pub fn certify_krull_cohomology(
    k: &SimplicialComplex,
    field: Field,
    j_max: usize,
) -> Result<CohomologyKrullReport, BettiError> {
    check_flag(k)?;
    let links = link_betti(k, field);
    let id = CoordinateMap::identity(k.n());
    let top = (k.dim() + 1) as usize;
    let degrees = (0..=top)
        .map(|q| {
            let h = compact_support_cohomology(k, &id, field, q as i64, j_max as i64)?;
            let predictions = Reading::ALL
                .iter()
                .map(|&r| {
                    let (d, w) = predict(k.n(), &links, q as i64, r);
                    (r, d, w)
                })
                .collect();
            Ok(CohomologyKrull { q, predictions, measured: growth_degree(&h) })
        })
        .collect::<Result<Vec<_>, BettiError>>()?;
    let certified = Reading::ALL
        .iter()
        .copied()
        .filter(|&r| degrees.iter().all(|d| d.prediction(r).agrees_with(d.measured)))
        .collect();
    Ok(CohomologyKrullReport { j_max, degrees, certified })
}

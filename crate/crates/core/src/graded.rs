//! Hilbert functions of graded vector spaces and a growth-degree probe.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `j ↦ dim M_j` for `j = 0..=j_max`; values past `j_max` are unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Self {
        HilbertFunction { values }
    }

    pub fn zeros(j_max: usize) -> Self {
        HilbertFunction { values: vec![0; j_max + 1] }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Largest degree computed; `None` for an empty window.
    pub fn j_max(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    /// Value at `j`, or `None` beyond the computed window.
    pub fn get(&self, j: usize) -> Option<u64> {
        self.values.get(j).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.values.iter().position(|&v| v != 0)
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Partial sums `Σ_{i ≤ j} h(i)`.
    pub fn cumulative(&self) -> Vec<u64> {
        self.values
            .iter()
            .scan(0u64, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }

    pub fn truncate(&self, j_max: usize) -> HilbertFunction {
        HilbertFunction { values: self.values.iter().take(j_max + 1).copied().collect() }
    }
}

impl From<Vec<u64>> for HilbertFunction {
    fn from(values: Vec<u64>) -> Self {
        HilbertFunction { values }
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of [`growth_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    /// Every computed value is zero; stands for a growth degree of `-∞`.
    Zero,
    /// The partial sums grow like a polynomial of this degree.
    Degree(usize),
    /// The finite differences had not settled inside the window.
    Inconclusive,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Growth::Zero => write!(f, "-inf (zero)"),
            Growth::Degree(d) => write!(f, "{d}"),
            Growth::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Number of trailing zeros a difference sequence needs before it counts as
/// having vanished.
pub const GROWTH_TAIL: usize = 3;

/// Estimates the degree of polynomial growth of `Σ_{i≤j} h(i)`.
///
/// The partial sums agree with a polynomial of degree `δ` exactly when the
/// `δ`-th finite difference of `h` vanishes. The answer is the least `δ` for
/// which that difference sequence ends in [`GROWTH_TAIL`] zeros. A module of finite length (eventually zero
/// `h`) has growth `0`. When the window is too short to see such a tail the
/// answer is [`Growth::Inconclusive`].
pub fn growth_degree(h: &HilbertFunction) -> Growth {
    if h.is_zero() {
        return Growth::Zero;
    }
    let mut diff: Vec<i128> = h.values().iter().map(|&v| v as i128).collect();
    let mut delta = 0;
    loop {
        if diff.len() < GROWTH_TAIL {
            return Growth::Inconclusive;
        }
        if diff[diff.len() - GROWTH_TAIL..].iter().all(|&v| v == 0) {
            return Growth::Degree(delta);
        }
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        delta += 1;
    }
}

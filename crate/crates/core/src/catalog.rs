//! Named complexes used throughout the tests and the command line.

use crate::complex::{clique_complex, Graph, SimplicialComplex};

fn facets(n: usize, list: &[&[usize]]) -> SimplicialComplex {
    let lists: Vec<Vec<usize>> = list.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facet_lists(n, &lists).expect("catalog facets are valid")
}

fn boundary_of_simplex(n: usize) -> SimplicialComplex {
    let lists: Vec<Vec<usize>> = (1..=n).map(|skip| (1..=n).filter(|&v| v != skip).collect()).collect();
    SimplicialComplex::from_facet_lists(n, &lists).expect("valid")
}

fn cycle(n: usize) -> SimplicialComplex {
    let lists: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, i % n + 1]).collect();
    SimplicialComplex::from_facet_lists(n, &lists).expect("valid")
}

/// The 7-vertex triangulation of the torus: `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` modulo 7.
fn torus() -> SimplicialComplex {
    let mut lists = Vec::new();
    for i in 0..7 {
        lists.push(vec![i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
        lists.push(vec![i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
    }
    SimplicialComplex::from_facet_lists(7, &lists).expect("valid")
}

/// Clique complex of the 3-cube graph; vertex `v` is the bit string `v - 1`.
fn cube_graph() -> SimplicialComplex {
    let mut edges = Vec::new();
    for a in 0..8usize {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                edges.push((a + 1, b + 1));
            }
        }
    }
    clique_complex(&Graph::new(8, &edges).expect("valid"))
}

/// A catalog entry.
pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    build: fn() -> SimplicialComplex,
}

impl Entry {
    pub fn complex(&self) -> SimplicialComplex {
        (self.build)()
    }
}

const ENTRIES: &[Entry] = &[
    Entry { name: "two-points", description: "two isolated vertices", build: || facets(2, &[&[1], &[2]]) },
    Entry { name: "path3", description: "path 1-2-3 (flag)", build: || facets(3, &[&[1, 2], &[2, 3]]) },
    Entry { name: "fourcycle", description: "4-cycle 1-2-3-4 (flag, CM, homology 1-sphere)", build: || cycle(4) },
    Entry { name: "pentagon", description: "5-cycle (flag)", build: || cycle(5) },
    Entry { name: "delta1", description: "a single vertex", build: || SimplicialComplex::full_simplex(1).expect("valid") },
    Entry { name: "delta2", description: "an edge", build: || SimplicialComplex::full_simplex(2).expect("valid") },
    Entry { name: "delta3", description: "a triangle", build: || SimplicialComplex::full_simplex(3).expect("valid") },
    Entry { name: "delta4", description: "a tetrahedron", build: || SimplicialComplex::full_simplex(4).expect("valid") },
    Entry { name: "boundary-delta2", description: "boundary of a triangle (not flag)", build: || boundary_of_simplex(3) },
    Entry {
        name: "boundary-delta3",
        description: "boundary of a tetrahedron, a 2-sphere (not flag)",
        build: || boundary_of_simplex(4),
    },
    Entry {
        name: "two-disjoint-edges",
        description: "edges 12 and 34 (flag, not CM)",
        build: || facets(4, &[&[1, 2], &[3, 4]]),
    },
    Entry {
        name: "bowtie",
        description: "two triangles sharing vertex 3 (flag, not CM)",
        build: || facets(5, &[&[1, 2, 3], &[3, 4, 5]]),
    },
    Entry {
        name: "cone-fourcycle",
        description: "cone over the 4-cycle with apex 5 (flag, CM)",
        build: || facets(5, &[&[1, 2, 5], &[2, 3, 5], &[3, 4, 5], &[1, 4, 5]]),
    },
    Entry {
        name: "octahedron",
        description: "boundary of the octahedron, antipodes 1-2, 3-4, 5-6 (flag 2-sphere)",
        build: || {
            facets(
                6,
                &[
                    &[1, 3, 5],
                    &[1, 3, 6],
                    &[1, 4, 5],
                    &[1, 4, 6],
                    &[2, 3, 5],
                    &[2, 3, 6],
                    &[2, 4, 5],
                    &[2, 4, 6],
                ],
            )
        },
    },
    Entry {
        name: "rp2-six-vertex",
        description: "6-vertex projective plane (CM over Q, not over F_2)",
        build: || {
            facets(
                6,
                &[
                    &[1, 2, 4],
                    &[1, 2, 6],
                    &[1, 3, 5],
                    &[1, 3, 6],
                    &[1, 4, 5],
                    &[2, 3, 4],
                    &[2, 3, 5],
                    &[2, 5, 6],
                    &[3, 4, 6],
                    &[4, 5, 6],
                ],
            )
        },
    },
    Entry { name: "torus-seven-vertex", description: "7-vertex torus", build: torus },
    Entry { name: "cube-graph", description: "clique complex of the 3-cube graph", build: cube_graph },
];

pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Every catalog complex, in catalog order.
pub fn all() -> Vec<(&'static str, SimplicialComplex)> {
    ENTRIES.iter().map(|e| (e.name, e.complex())).collect()
}

/// Looks up a name; `delta<n>` and `delta(n)` give the full simplex on `n`
/// vertices for any `1 ≤ n ≤ 63`.
pub fn get(name: &str) -> Option<SimplicialComplex> {
    if let Some(e) = ENTRIES.iter().find(|e| e.name == name) {
        return Some(e.complex());
    }
    let rest = name.strip_prefix("delta")?;
    let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    let n: usize = digits.parse().ok()?;
    if n == 0 {
        return None;
    }
    SimplicialComplex::full_simplex(n).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::homology::reduced_betti;

    #[test]
    fn lookups() {
        assert_eq!(get("delta(5)").unwrap().f_vector(), vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(get("delta3"), get("delta(3)"));
        assert!(get("delta0").is_none());
        assert!(get("nope").is_none());
        assert_eq!(names().len(), ENTRIES.len());
    }

    #[test]
    fn homology_of_surfaces() {
        let torus = get("torus-seven-vertex").unwrap();
        assert_eq!(torus.f_vector(), vec![1, 7, 21, 14]);
        assert_eq!(reduced_betti(&torus, Field::Rational), vec![0, 0, 2, 1]);
        let rp2 = get("rp2-six-vertex").unwrap();
        assert_eq!(reduced_betti(&rp2, Field::Rational), vec![0, 0, 0, 0]);
        assert_eq!(reduced_betti(&rp2, Field::Prime(2)), vec![0, 0, 1, 1]);
        let oct = get("octahedron").unwrap();
        assert!(oct.is_flag());
        assert_eq!(reduced_betti(&oct, Field::Rational), vec![0, 0, 0, 1]);
        let cube = get("cube-graph").unwrap();
        assert_eq!(cube.f_vector(), vec![1, 8, 12]);
        assert_eq!(reduced_betti(&cube, Field::Rational), vec![0, 0, 5]);
    }

    #[test]
    fn flagness() {
        for name in ["two-points", "path3", "fourcycle", "pentagon", "two-disjoint-edges", "bowtie", "cone-fourcycle", "cube-graph"] {
            assert!(get(name).unwrap().is_flag(), "{name}");
        }
        for name in ["boundary-delta2", "boundary-delta3", "rp2-six-vertex", "torus-seven-vertex"] {
            assert!(!get(name).unwrap().is_flag(), "{name}");
        }
    }
}

//! 3-uniform hypergraphs: the source instances of the hardness
//! constructions and of the not-all-equal 2-coloring oracle.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {0:?} has repeated vertices")]
    RepeatedVertex([usize; 3]),
    #[error("vertex {v} out of range for n={n}")]
    OutOfRange { v: usize, n: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge([usize; 3]),
}

/// Vertices `0..n` with a list of distinct 3-element edges. Edge vertex
/// order is preserved as given (constructions key off it); equality of
/// edges is as sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self, HypergraphError> {
        let edges: Vec<[usize; 3]> = edges.into_iter().collect();
        let mut seen: Vec<[usize; 3]> = Vec::new();
        for e in &edges {
            let mut sorted = *e;
            sorted.sort_unstable();
            if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
                return Err(HypergraphError::RepeatedVertex(*e));
            }
            for &v in e {
                if v >= n {
                    return Err(HypergraphError::OutOfRange { v, n });
                }
            }
            if seen.contains(&sorted) {
                return Err(HypergraphError::DuplicateEdge(*e));
            }
            seen.push(sorted);
        }
        Ok(Hypergraph3 { n, edges })
    }

    /// All C(n,3) triples, in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        Hypergraph3 { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    /// True iff no edge is monochromatic under the 2-coloring.
    pub fn is_proper_2coloring(&self, colors: &[bool]) -> bool {
        colors.len() == self.n
            && self
                .edges
                .iter()
                .all(|e| !(colors[e[0]] == colors[e[1]] && colors[e[1]] == colors[e[2]]))
    }
}

//! Exact exponential-time ground truth: dichromatic number, k-colorability,
//! maximum acyclic subsets, hypergraph 2-colorability, and exact graph
//! coloring for small instances.
//!
//! Tournament k-coloring is exactly the constraint that no directed triangle
//! is monochromatic, so one not-all-equal backtracking engine over vertex
//! triples serves both tournaments (triples = directed triangles) and
//! 3-uniform hypergraphs (triples = edges). The engine assigns vertices in
//! most-constrained-first order, canonicalizes color ids (a fresh color may
//! only follow all smaller ids), and propagates: once two vertices of a
//! triple share a color, that color is deleted from the third's domain.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph3;
use crate::tournament::{Coloring, Tournament};
use crate::vset::VertexSet;

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Outcome of a budgeted exhaustive search. `Exhausted` is a definite "no";
/// `Budget` means the node limit was hit and the answer is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Exhausted,
    Budget,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Search::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Exhausted => Search::Exhausted,
            Search::Budget => Search::Budget,
        }
    }
}

/// Exact chromatic answer: the minimum k together with an optimal witness.
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
}

// ---------------------------------------------------------------------------
// NAE engine
// ---------------------------------------------------------------------------

struct NaeEngine {
    n: usize,
    k: usize,
    /// (other1, other2) pairs per vertex, one entry per triple containing it.
    incident: Vec<Vec<(usize, usize)>>,
    order: Vec<usize>,
    budget: u64,
    nodes: u64,
    color: Vec<Option<u8>>,
    domain: Vec<u32>,
    used_counts: Vec<u32>,
    used_distinct: usize,
    /// Undo log: (vertex, previous domain, was_assignment).
    trail: Vec<TrailEntry>,
}

enum TrailEntry {
    Assigned(usize),
    Domain(usize, u32),
}

enum Propagate {
    Ok,
    Conflict,
}

impl NaeEngine {
    fn new(n: usize, k: usize, triples: &[[usize; 3]], budget: u64) -> Self {
        let mut incident = vec![Vec::new(); n];
        for &[a, b, c] in triples {
            incident[a].push((b, c));
            incident[b].push((a, c));
            incident[c].push((a, b));
        }
        // most constrained first, ties by id
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(incident[v].len()), v));
        let full = if k >= 32 { u32::MAX } else { (1u32 << k) - 1 };
        NaeEngine {
            n,
            k,
            incident,
            order,
            budget,
            nodes: 0,
            color: vec![None; n],
            domain: vec![full; n],
            used_counts: vec![0; k],
            used_distinct: 0,
            trail: Vec::new(),
        }
    }

    fn assign(&mut self, v: usize, c: u8) -> Propagate {
        let mut queue = vec![(v, c)];
        while let Some((x, cx)) = queue.pop() {
            match self.color[x] {
                Some(existing) => {
                    if existing != cx {
                        return Propagate::Conflict;
                    }
                    continue;
                }
                None => {
                    self.color[x] = Some(cx);
                    self.trail.push(TrailEntry::Assigned(x));
                    self.nodes += 1;
                    if self.used_counts[cx as usize] == 0 {
                        self.used_distinct += 1;
                    }
                    self.used_counts[cx as usize] += 1;
                }
            }
            for idx in 0..self.incident[x].len() {
                let (p, q) = self.incident[x][idx];
                let (cp, cq) = (self.color[p], self.color[q]);
                match (cp, cq) {
                    (Some(a), Some(b)) => {
                        if a == cx && b == cx {
                            return Propagate::Conflict;
                        }
                    }
                    (Some(a), None) => {
                        if a == cx {
                            match self.strike(q, cx) {
                                Strike::Conflict => return Propagate::Conflict,
                                Strike::Forced(f) => queue.push((q, f)),
                                Strike::Ok => {}
                            }
                        }
                    }
                    (None, Some(b)) => {
                        if b == cx {
                            match self.strike(p, cx) {
                                Strike::Conflict => return Propagate::Conflict,
                                Strike::Forced(f) => queue.push((p, f)),
                                Strike::Ok => {}
                            }
                        }
                    }
                    (None, None) => {}
                }
            }
        }
        Propagate::Ok
    }

    fn strike(&mut self, v: usize, c: u8) -> Strike {
        let bit = 1u32 << c;
        if self.domain[v] & bit == 0 {
            return Strike::Ok;
        }
        self.trail.push(TrailEntry::Domain(v, self.domain[v]));
        self.domain[v] &= !bit;
        match self.domain[v].count_ones() {
            0 => Strike::Conflict,
            1 => Strike::Forced(self.domain[v].trailing_zeros() as u8),
            _ => Strike::Ok,
        }
    }

    fn rewind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail") {
                TrailEntry::Assigned(v) => {
                    let c = self.color[v].take().expect("assigned");
                    self.used_counts[c as usize] -= 1;
                    if self.used_counts[c as usize] == 0 {
                        self.used_distinct -= 1;
                    }
                }
                TrailEntry::Domain(v, prev) => self.domain[v] = prev,
            }
        }
    }

    /// Smallest remaining domain first, constraint-degree order as the
    /// tie-break. Sound with the canonical color cap: a removed color is
    /// impossible in every extension, and the first unused id is never
    /// removed, so some branch always leads to a relabeled solution.
    fn next_decision(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (rank, &v) in self.order.iter().enumerate() {
            if self.color[v].is_some() {
                continue;
            }
            let size = self.domain[v].count_ones();
            if best.map_or(true, |(bs, _)| size < bs) {
                if size <= 1 {
                    return Some(v);
                }
                best = Some((size, rank));
            }
        }
        best.map(|(_, rank)| self.order[rank])
    }

    fn solve(&mut self) -> Search<Vec<u32>> {
        if self.n == 0 {
            return Search::Found(Vec::new());
        }
        match self.dfs() {
            Dfs::Found => Search::Found(
                self.color
                    .iter()
                    .map(|c| c.expect("complete assignment") as u32)
                    .collect(),
            ),
            Dfs::Exhausted => Search::Exhausted,
            Dfs::Budget => Search::Budget,
        }
    }

    fn dfs(&mut self) -> Dfs {
        let v = match self.next_decision() {
            Some(v) => v,
            None => return Dfs::Found,
        };
        // canonical cap: allow at most one color not yet in use
        let cap = self.k.min(self.used_distinct + 1);
        for c in 0..cap as u8 {
            if self.domain[v] & (1u32 << c) == 0 {
                continue;
            }
            if self.nodes >= self.budget {
                return Dfs::Budget;
            }
            let mark = self.trail.len();
            if let Propagate::Ok = self.assign(v, c) {
                match self.dfs() {
                    Dfs::Exhausted => {}
                    done => return done,
                }
            }
            self.rewind(mark);
        }
        Dfs::Exhausted
    }
}

enum Strike {
    Ok,
    Conflict,
    Forced(u8),
}

enum Dfs {
    Found,
    Exhausted,
    Budget,
}

/// Not-all-equal k-coloring over explicit triples; the common engine behind
/// the tournament and hypergraph oracles.
pub fn nae_k_color(n: usize, triples: &[[usize; 3]], k: usize, budget: u64) -> Search<Vec<u32>> {
    assert!(k >= 1 && k <= 32, "k must be in 1..=32");
    if k == 1 {
        // a single color works iff there are no triples at all
        return if triples.is_empty() {
            Search::Found(vec![0; n])
        } else {
            Search::Exhausted
        };
    }
    NaeEngine::new(n, k, triples, budget).solve()
}

// ---------------------------------------------------------------------------
// Tournament oracle
// ---------------------------------------------------------------------------

/// Exact k-colorability by exhaustive search, with a node budget.
pub fn exact_k_colorable(t: &Tournament, k: usize, budget: u64) -> Search<Coloring> {
    assert!(k >= 1);
    if k >= t.n() {
        // distinct colors always work
        return Search::Found(Coloring::new((0..t.n() as u32).collect()));
    }
    assert!(k <= 32, "oracle supports at most 32 colors");
    let triples = t.triangles();
    nae_k_color(t.n(), &triples, k, budget).map(|colors| Coloring::new(colors).normalized())
}

/// Exact dichromatic number: smallest k admitting a valid coloring.
pub fn exact_chromatic(t: &Tournament, budget: u64) -> Search<ChromaticResult> {
    if t.n() == 0 {
        return Search::Found(ChromaticResult {
            chi: 0,
            witness: Coloring::new(Vec::new()),
        });
    }
    let triples = t.triangles();
    for k in 1..=t.n().min(32) {
        match nae_k_color(t.n(), &triples, k, budget) {
            Search::Found(colors) => {
                return Search::Found(ChromaticResult {
                    chi: k,
                    witness: Coloring::new(colors).normalized(),
                });
            }
            Search::Exhausted => continue,
            Search::Budget => return Search::Budget,
        }
    }
    // chi <= ceil(n/2) always (pair the vertices), so 32 colors cover n <= 64
    panic!("oracle supports at most 32 colors")
}

/// Maximum-cardinality acyclic induced subset, by branching on a triangle
/// (remove one of its three vertices) with a size bound.
pub fn max_acyclic_subset(t: &Tournament, budget: u64) -> Search<VertexSet> {
    let n = t.n();
    // greedy seed improves the bound
    let mut best = VertexSet::empty(n);
    for v in 0..n {
        best.insert(v);
        if t.has_triangle_in(&best) {
            best.remove(v);
        }
    }
    let mut nodes = 0u64;
    let mut current = VertexSet::full(n);
    let exhausted = branch_acyclic(t, &mut current, &mut best, budget, &mut nodes);
    if exhausted {
        Search::Found(best)
    } else {
        Search::Budget
    }
}

fn branch_acyclic(
    t: &Tournament,
    current: &mut VertexSet,
    best: &mut VertexSet,
    budget: u64,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    if *nodes > budget {
        return false;
    }
    if current.len() <= best.len() {
        return true;
    }
    match t.find_triangle_in(current) {
        None => {
            *best = current.clone();
            true
        }
        Some(mut tri) => {
            tri.sort_unstable();
            for v in tri {
                current.remove(v);
                if !branch_acyclic(t, current, best, budget, nodes) {
                    current.insert(v);
                    return false;
                }
                current.insert(v);
            }
            true
        }
    }
}

// ---------------------------------------------------------------------------
// Hypergraph oracle
// ---------------------------------------------------------------------------

/// 2-coloring with no monochromatic hyperedge, or a definite "none".
pub fn hypergraph_2colorable(h: &Hypergraph3, budget: u64) -> Search<Vec<bool>> {
    nae_k_color(h.n(), h.edges(), 2, budget).map(|colors| colors.iter().map(|&c| c == 1).collect())
}

// ---------------------------------------------------------------------------
// Exact graph coloring (small n), for cross-checking graph-side claims
// ---------------------------------------------------------------------------

/// Proper k-colorability of an undirected graph by canonical backtracking.
pub fn graph_k_colorable(g: &Graph, k: usize, budget: u64) -> Search<Vec<u32>> {
    assert!(k >= 1);
    let n = g.n();
    if k >= n {
        return Search::Found((0..n as u32).collect());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut nodes = 0u64;
    fn rec(
        g: &Graph,
        order: &[usize],
        pos: usize,
        used: u32,
        k: usize,
        colors: &mut Vec<Option<u32>>,
        nodes: &mut u64,
        budget: u64,
    ) -> Dfs {
        if pos == order.len() {
            return Dfs::Found;
        }
        let v = order[pos];
        let cap = (used + 1).min(k as u32);
        for c in 0..cap {
            *nodes += 1;
            if *nodes > budget {
                return Dfs::Budget;
            }
            if g.neighbors(v).iter().any(|&u| colors[u] == Some(c)) {
                continue;
            }
            colors[v] = Some(c);
            match rec(g, order, pos + 1, used.max(c + 1), k, colors, nodes, budget) {
                Dfs::Exhausted => {}
                done => return done,
            }
            colors[v] = None;
        }
        Dfs::Exhausted
    }
    match rec(g, &order, 0, 0, k, &mut colors, &mut nodes, budget) {
        Dfs::Found => Search::Found(colors.iter().map(|c| c.expect("complete")).collect()),
        Dfs::Exhausted => Search::Exhausted,
        Dfs::Budget => Search::Budget,
    }
}

/// Exact chromatic number of an undirected graph.
pub fn graph_chromatic(g: &Graph, budget: u64) -> Search<(usize, Vec<u32>)> {
    if g.n() == 0 {
        return Search::Found((0, Vec::new()));
    }
    for k in 1..=g.n() {
        match graph_k_colorable(g, k, budget) {
            Search::Found(c) => return Search::Found((k, c)),
            Search::Exhausted => continue,
            Search::Budget => return Search::Budget,
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::{cyclic_triangle, transitive};

    #[test]
    fn c3_colorability() {
        let c3 = cyclic_triangle();
        assert!(exact_k_colorable(&c3, 1, DEFAULT_BUDGET).is_exhausted());
        let two = exact_k_colorable(&c3, 2, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(c3.verify_coloring(&two), Ok(()));
        assert_eq!(two.palette_size(), 2);
    }

    #[test]
    fn transitive_chi_is_one() {
        let r = exact_chromatic(&transitive(8), DEFAULT_BUDGET).found().unwrap();
        assert_eq!(r.chi, 1);
        assert_eq!(transitive(8).verify_coloring(&r.witness), Ok(()));
    }

    #[test]
    fn chromatic_witness_is_optimal_format() {
        let c3 = cyclic_triangle();
        let r = exact_chromatic(&c3, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(r.chi, 2);
        assert_eq!(r.witness.palette_size(), 2);
        assert_eq!(r.witness.color(0), 0);
    }

    #[test]
    fn max_acyclic_small() {
        let c3 = cyclic_triangle();
        let s = max_acyclic_subset(&c3, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(s.len(), 2);
        let t = transitive(6);
        let s = max_acyclic_subset(&t, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn hypergraph_single_edge_and_pigeonhole() {
        let single = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        let c = hypergraph_2colorable(&single, DEFAULT_BUDGET).found().unwrap();
        assert!(single.is_proper_2coloring(&c));

        // 5 vertices, 2 colors: some 3 vertices share a color, and that
        // triple is an edge of the complete hypergraph
        let k53 = Hypergraph3::complete(5);
        assert!(hypergraph_2colorable(&k53, DEFAULT_BUDGET).is_exhausted());
    }

    #[test]
    fn fano_plane_not_2colorable() {
        let fano = Hypergraph3::new(
            7,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap();
        // independent check: exhaust all 2^7 colorings
        let brute = (0..1u32 << 7).any(|mask| {
            let colors: Vec<bool> = (0..7).map(|v| mask >> v & 1 == 1).collect();
            fano.is_proper_2coloring(&colors)
        });
        assert!(!brute);
        assert!(hypergraph_2colorable(&fano, DEFAULT_BUDGET).is_exhausted());
    }

    #[test]
    fn graph_coloring_exact() {
        let c5 = Graph::cycle(5);
        let (chi, colors) = graph_chromatic(&c5, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(chi, 3);
        assert!(c5.is_proper_coloring(&colors));
        let k4 = Graph::complete(4);
        assert_eq!(graph_chromatic(&k4, DEFAULT_BUDGET).found().unwrap().0, 4);
    }

    #[test]
    fn budget_exceeded_is_distinct() {
        // complete hypergraph on 9 vertices with budget 1: can't finish
        let h = Hypergraph3::complete(9);
        assert_eq!(hypergraph_2colorable(&h, 1), Search::Budget);
        // acyclic-subset search respects its budget too
        let t = crate::generators::random_tournament(20, 3);
        assert_eq!(max_acyclic_subset(&t, 1), Search::Budget);
    }

    #[test]
    fn p11_is_not_3_colorable() {
        let p11 = crate::generators::paley(11).unwrap();
        assert!(exact_k_colorable(&p11, 3, DEFAULT_BUDGET).is_exhausted());
        let c4 = exact_k_colorable(&p11, 4, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(p11.verify_coloring(&c4), Ok(()));
    }
}

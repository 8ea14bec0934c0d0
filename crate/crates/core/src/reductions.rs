//! Hardness constructions as verified instance generators: the
//! hypergraph→tournament reductions (basic and gap versions), Δ-gadget
//! amplification, chain tournaments S_i, hardness towers, backedge-graph
//! towers, and the Ramsey-coupled blowup.
//!
//! Every construction is a deterministic function of its inputs; block
//! provenance is recorded so tests can address S_a/Q_a/T_i symbolically.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph3;
use crate::seeded;
use crate::tournament::{delta_compose, single_vertex, Coloring, Tournament};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("bipartite sides must have equal size (|X|={x}, |Y|={y})")]
    SizeMismatch { x: usize, y: usize },
    #[error("predicted size {predicted} exceeds cap {cap}")]
    SizeCap { predicted: usize, cap: usize },
    #[error("invalid parameters: {0}")]
    BadParams(String),
}

/// Per-vertex provenance inside a constructed tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockTag {
    /// Triangle vertex for hyperedge `edge`, derived from hypergraph
    /// vertex `source` (basic construction, and the middle block of the
    /// gap construction).
    EdgeTriangle { edge: usize, slot: usize, source: usize },
    /// One of the three middle-gadget triangle vertices.
    GadgetTriangle { slot: usize },
    /// Transitive copy of hypergraph vertex `source`.
    SourceCopy { source: usize },
    /// Front block of the gap construction (the sets S_a live here).
    FrontTriangle { edge: usize, slot: usize, source: usize },
    /// Back block of the gap construction (the sets Q_a live here).
    BackTriangle { edge: usize, slot: usize, source: usize },
}

/// A constructed tournament with its provenance map.
#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub tournament: Tournament,
    pub block_map: Vec<BlockTag>,
}

// ---------------------------------------------------------------------------
// Hypergraph → tournament, basic version
// ---------------------------------------------------------------------------

/// Layout of the basic construction: one directed triangle per hyperedge
/// (3m vertices, forward arcs between edge blocks), a single gadget
/// triangle, then a transitive copy of the hypergraph vertices. Back arcs
/// run from copy b to triangle vertex (a,i) exactly when a = b.
/// Size 3m + 3 + n; 2-colorable iff the hypergraph is.
pub fn hyper_to_tournament_basic(h: &Hypergraph3) -> ReductionArtifact {
    let m = h.m();
    let n = h.n();
    let size = 3 * m + 3 + n;
    let mut block_map = Vec::with_capacity(size);
    for (i, e) in h.edges().iter().enumerate() {
        for (slot, &source) in e.iter().enumerate() {
            block_map.push(BlockTag::EdgeTriangle { edge: i, slot, source });
        }
    }
    for slot in 0..3 {
        block_map.push(BlockTag::GadgetTriangle { slot });
    }
    for source in 0..n {
        block_map.push(BlockTag::SourceCopy { source });
    }

    let tournament = Tournament::from_arc_fn(size, |p, q| basic_arc(&block_map, p, q));
    ReductionArtifact {
        tournament,
        block_map,
    }
}

fn basic_arc(map: &[BlockTag], p: usize, q: usize) -> bool {
    use BlockTag::*;
    match (&map[p], &map[q]) {
        (EdgeTriangle { edge: i, slot: s, .. }, EdgeTriangle { edge: j, slot: t, .. }) => {
            if i == j {
                (t + 3 - s) % 3 == 1 // triangle arc to the next slot
            } else {
                i < j
            }
        }
        (EdgeTriangle { .. }, GadgetTriangle { .. }) => true,
        (GadgetTriangle { .. }, EdgeTriangle { .. }) => false,
        (GadgetTriangle { slot: s }, GadgetTriangle { slot: t }) => (t + 3 - s) % 3 == 1,
        (GadgetTriangle { .. }, SourceCopy { .. }) => true,
        (SourceCopy { .. }, GadgetTriangle { .. }) => false,
        (SourceCopy { source: a }, SourceCopy { source: b }) => a < b,
        (EdgeTriangle { source: a, .. }, SourceCopy { source: b }) => a != b,
        (SourceCopy { source: b }, EdgeTriangle { source: a, .. }) => a == b,
        _ => unreachable!("basic construction has only three block kinds"),
    }
}

/// The planted 2-coloring of the basic construction from a proper
/// 2-coloring of the hypergraph: triangle vertices inherit their source's
/// color, copies take the opposite, and the gadget is bicolored.
pub fn basic_two_coloring(h: &Hypergraph3, hcolors: &[bool]) -> Coloring {
    assert_eq!(hcolors.len(), h.n());
    let art_map = hyper_to_tournament_basic(h).block_map;
    let colors = art_map
        .iter()
        .map(|tag| match tag {
            BlockTag::EdgeTriangle { source, .. } => hcolors[*source] as u32,
            BlockTag::GadgetTriangle { slot } => (*slot == 2) as u32,
            BlockTag::SourceCopy { source } => !hcolors[*source] as u32,
            _ => unreachable!(),
        })
        .collect();
    Coloring::new(colors)
}

// ---------------------------------------------------------------------------
// Hypergraph → tournament, gap version
// ---------------------------------------------------------------------------

/// Gap construction: a front copy of the hyperedge-triangle block, the full
/// basic tournament in the middle, and a back copy, with same-source back
/// arcs between front and back. Size 9m + 3 + n. If the hypergraph is
/// 2-colorable the tournament is; any proper 3-coloring decodes to a
/// 6-coloring of the hypergraph (`decode_gap_coloring`).
pub fn hyper_to_tournament_gap(h: &Hypergraph3) -> ReductionArtifact {
    let m = h.m();
    let n = h.n();
    let size = 9 * m + 3 + n;
    let mut block_map = Vec::with_capacity(size);
    for (i, e) in h.edges().iter().enumerate() {
        for (slot, &source) in e.iter().enumerate() {
            block_map.push(BlockTag::FrontTriangle { edge: i, slot, source });
        }
    }
    let middle = hyper_to_tournament_basic(h);
    block_map.extend(middle.block_map.iter().cloned());
    for (j, e) in h.edges().iter().enumerate() {
        for (slot, &source) in e.iter().enumerate() {
            block_map.push(BlockTag::BackTriangle { edge: j, slot, source });
        }
    }
    debug_assert_eq!(block_map.len(), size);

    let front_len = 3 * m;
    let middle_len = middle.tournament.n();
    let tournament = Tournament::from_arc_fn(size, |p, q| {
        gap_arc(&block_map, front_len, middle_len, p, q)
    });
    ReductionArtifact {
        tournament,
        block_map,
    }
}

fn gap_arc(map: &[BlockTag], front_len: usize, middle_len: usize, p: usize, q: usize) -> bool {
    use BlockTag::*;
    let middle = |v: usize| v >= front_len && v < front_len + middle_len;
    match (&map[p], &map[q]) {
        // within an outer block: triangles + forward arcs between edges
        (FrontTriangle { edge: i, slot: s, .. }, FrontTriangle { edge: j, slot: t, .. })
        | (BackTriangle { edge: i, slot: s, .. }, BackTriangle { edge: j, slot: t, .. }) => {
            if i == j {
                (t + 3 - s) % 3 == 1
            } else {
                i < j
            }
        }
        // front ↔ back: back arc exactly for same source
        (FrontTriangle { source: a, .. }, BackTriangle { source: b, .. }) => a != b,
        (BackTriangle { source: b, .. }, FrontTriangle { source: a, .. }) => a == b,
        // front ⇒ middle ⇒ back
        (FrontTriangle { .. }, _) => true,
        (_, FrontTriangle { .. }) => false,
        (_, BackTriangle { .. }) => true,
        (BackTriangle { .. }, _) => false,
        // middle block: the basic construction's own rule
        _ => {
            debug_assert!(middle(p) && middle(q));
            basic_arc(&map[front_len..front_len + middle_len], p - front_len, q - front_len)
        }
    }
}

/// Planted 2-coloring of the gap construction from a proper 2-coloring of
/// the hypergraph.
pub fn gap_two_coloring(h: &Hypergraph3, hcolors: &[bool]) -> Coloring {
    assert_eq!(hcolors.len(), h.n());
    let art = hyper_to_tournament_gap(h);
    let middle = basic_two_coloring(h, hcolors);
    let mut middle_iter = middle.colors().iter();
    let colors = art
        .block_map
        .iter()
        .map(|tag| match tag {
            BlockTag::FrontTriangle { source, .. } => hcolors[*source] as u32,
            BlockTag::BackTriangle { source, .. } => !hcolors[*source] as u32,
            _ => *middle_iter.next().expect("middle block aligned"),
        })
        .collect();
    Coloring::new(colors)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("coloring does not fit the constructed tournament")]
    WrongShape,
    #[error("coloring is not a proper coloring of the tournament")]
    NotProper,
    #[error("coloring uses {0} colors, expected at most 3")]
    TooManyColors(usize),
    #[error("neither S_{0} nor Q_{0} is monochromatic")]
    Undecodable(usize),
}

/// Decodes a proper ≤3-coloring of the gap tournament into a ≤6-coloring
/// of the hypergraph: if the middle block is bicolored, its source copies
/// already carry a 2-coloring of the hypergraph; otherwise, for each
/// vertex a, S_a or Q_a must be monochromatic, and that color (shifted by
/// 3 on the Q side) is taken.
pub fn decode_gap_coloring(
    h: &Hypergraph3,
    artifact: &ReductionArtifact,
    coloring: &Coloring,
) -> Result<Vec<u32>, DecodeError> {
    let t = &artifact.tournament;
    if coloring.len() != t.n() {
        return Err(DecodeError::WrongShape);
    }
    if t.verify_coloring(coloring).is_err() {
        return Err(DecodeError::NotProper);
    }
    let c = coloring.normalized();
    let palette = c.palette_size();
    if palette > 3 {
        return Err(DecodeError::TooManyColors(palette));
    }

    let middle_colors: Vec<u32> = artifact
        .block_map
        .iter()
        .enumerate()
        .filter(|(_, tag)| {
            !matches!(
                tag,
                BlockTag::FrontTriangle { .. } | BlockTag::BackTriangle { .. }
            )
        })
        .map(|(v, _)| c.color(v))
        .collect();
    let mut distinct = middle_colors.clone();
    distinct.sort_unstable();
    distinct.dedup();

    if distinct.len() <= 2 {
        // the middle block is a properly 2-colored basic tournament: its
        // source copies give a 2-coloring of the hypergraph directly
        let mut out = vec![0u32; h.n()];
        for (v, tag) in artifact.block_map.iter().enumerate() {
            if let BlockTag::SourceCopy { source } = tag {
                out[*source] = c.color(v);
            }
        }
        return Ok(out);
    }

    // middle uses three colors: S_a or Q_a is monochromatic for every a
    let mut out = vec![0u32; h.n()];
    for a in 0..h.n() {
        let collect = |front: bool| -> Vec<u32> {
            artifact
                .block_map
                .iter()
                .enumerate()
                .filter(|(_, tag)| match tag {
                    BlockTag::FrontTriangle { source, .. } if front => *source == a,
                    BlockTag::BackTriangle { source, .. } if !front => *source == a,
                    _ => false,
                })
                .map(|(v, _)| c.color(v))
                .collect()
        };
        let s_colors = collect(true);
        let q_colors = collect(false);
        let mono = |cs: &[u32]| cs.windows(2).all(|w| w[0] == w[1]);
        out[a] = if s_colors.is_empty() {
            0
        } else if mono(&s_colors) {
            s_colors[0]
        } else if mono(&q_colors) {
            q_colors[0] + 3
        } else {
            return Err(DecodeError::Undecodable(a));
        };
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Chain tournaments and gadget amplification
// ---------------------------------------------------------------------------

/// S₁ a single vertex, S_{i+1} = Δ(S₁, S_i, S_i): 2^i − 1 vertices with
/// dichromatic number i.
pub fn s_chain(i: usize) -> Tournament {
    assert!(i >= 1, "s_chain needs i >= 1");
    assert!(i <= 14, "s_chain(15+) has over 32k vertices");
    let mut t = single_vertex();
    for _ in 1..i {
        t = delta_compose(&single_vertex(), &t, &t);
    }
    t
}

/// Iterated Δ-gadget: starting from Δ(R₁, R₂, S_{a+b}), composing with
/// R₁, R₂ another c+d−a−b−1 times. Preserves χ = a+b when χ(R₁)=a,
/// χ(R₂)=b, and forces χ ≥ c+d when χ(R₁)≥c, χ(R₂)≥d.
pub fn gadget_amplify(
    r1: &Tournament,
    r2: &Tournament,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<Tournament, ReductionError> {
    if a < 1 || b < 1 || c < 1 || d < 1 || a + b >= c + d {
        return Err(ReductionError::BadParams(format!(
            "need positive a,b,c,d with a+b < c+d (got a={a} b={b} c={c} d={d})"
        )));
    }
    // R'_{a+b} = Δ(R₁,R₂,S_{a+b}), then one composition per level up to c+d
    let mut r = delta_compose(r1, r2, &s_chain(a + b));
    for _ in (a + b)..(c + d) {
        r = delta_compose(r1, r2, &r);
    }
    Ok(r)
}

/// Tower of tournaments keyed to a hypergraph: T₂ is the gap construction,
/// T₃ = Δ(T₂,T₂,T₂), and higher levels amplify T_{⌊j/2⌋}, T_{⌈j/2⌉} with
/// (a,b,c,d) = (⌊j/2⌋, ⌈j/2⌉, 2⌊j/2⌋, 2⌈j/2⌉). When a proper 2-coloring
/// of the hypergraph is supplied, the planted coloring of T₂ (two colors)
/// or T₃ (three colors, copy palettes {0,1}/{1,2}/{2,0}) is emitted
/// alongside.
pub fn hardness_tower(
    h: &Hypergraph3,
    k: usize,
    h2coloring: Option<&[bool]>,
) -> Result<(Tournament, Option<Coloring>), ReductionError> {
    if k < 2 {
        return Err(ReductionError::BadParams("tower needs k >= 2".into()));
    }
    if k > 12 {
        return Err(ReductionError::BadParams(
            "tower levels beyond 12 are astronomically large".into(),
        ));
    }
    let base = hyper_to_tournament_gap(h);
    if k == 2 {
        let planted = h2coloring.map(|hc| gap_two_coloring(h, hc));
        return Ok((base.tournament, planted));
    }
    let t2 = base.tournament;
    let t3 = delta_compose(&t2, &t2, &t2);
    if k == 3 {
        let planted = h2coloring.map(|hc| {
            let c2 = gap_two_coloring(h, hc);
            let pairs = [[0u32, 1], [1, 2], [2, 0]];
            let mut colors = Vec::with_capacity(t3.n());
            for pair in &pairs {
                for v in 0..t2.n() {
                    colors.push(pair[c2.color(v) as usize]);
                }
            }
            Coloring::new(colors)
        });
        return Ok((t3, planted));
    }

    let mut levels: Vec<Option<Tournament>> = vec![None; k + 1];
    levels[2] = Some(t2);
    levels[3] = Some(t3);
    for j in 4..=k {
        let a = j / 2;
        let b = j - a;
        let ta = levels[a].clone().expect("built bottom-up");
        let tb = levels[b].clone().expect("built bottom-up");
        levels[j] = Some(gadget_amplify(&ta, &tb, a, b, 2 * a, 2 * b)?);
    }
    Ok((levels[k].take().expect("built"), None))
}

// ---------------------------------------------------------------------------
// Backedge-graph constructions
// ---------------------------------------------------------------------------

/// Interleaves n_G graph vertices with n_G − 1 copies of `t`:
/// [v₀, T₀, v₁, T₁, …, T_{n_G−2}, v_{n_G−1}], all arcs left-to-right
/// except that graph edges point backward between their graph vertices —
/// the graph is the construction's backedge graph.
pub fn backedge_step(g: &Graph, t: &Tournament) -> Result<Tournament, ReductionError> {
    let ng = g.n();
    if ng == 0 {
        return Err(ReductionError::BadParams("graph must be nonempty".into()));
    }
    let nt = t.n();
    let stride = nt + 1;
    let size = (ng - 1) * nt + ng;

    // position p: graph vertex when p % stride == 0, else copy vertex
    let decode = |p: usize| -> (usize, Option<usize>) {
        let block = p / stride;
        let off = p % stride;
        if off == 0 {
            (block, None)
        } else {
            (block, Some(off - 1))
        }
    };

    Ok(Tournament::from_arc_fn(size, |p, q| {
        let (bp, ip) = decode(p);
        let (bq, iq) = decode(q);
        match (ip, iq) {
            // graph vertex vs graph vertex: backedge iff graph edge
            (None, None) => {
                if g.has_edge(bp, bq) {
                    bp > bq
                } else {
                    bp < bq
                }
            }
            // v_i ⇒ T_j iff i ≤ j; T_i ⇒ v_j iff i < j
            (None, Some(_)) => bp <= bq,
            (Some(_), None) => bp < bq,
            // copies: internal arcs, forward between copies
            (Some(x), Some(y)) => {
                if bp == bq {
                    t.has_arc(x, y)
                } else {
                    bp < bq
                }
            }
        }
    }))
}

/// Global id of graph vertex `i` in the backedge layout.
pub fn backedge_graph_vertex(t_size: usize, i: usize) -> usize {
    i * (t_size + 1)
}

/// Global id range of copy `j` (0-based) in the backedge layout.
pub fn backedge_copy_range(t_size: usize, j: usize) -> std::ops::Range<usize> {
    let start = j * (t_size + 1) + 1;
    start..start + t_size
}

/// Iterated backedge construction from T_k = S_k up to T_l. Refuses to
/// build beyond `size_cap` vertices.
pub fn graph_tower(
    g: &Graph,
    k: usize,
    l: usize,
    size_cap: usize,
) -> Result<Tournament, ReductionError> {
    if !(3 <= k && k < l) {
        return Err(ReductionError::BadParams(format!(
            "need 3 <= k < l (got k={k}, l={l})"
        )));
    }
    // predict the final size before building anything
    let mut predicted = (1usize << k) - 1;
    for _ in k..l {
        predicted = match predicted
            .checked_mul(g.n().saturating_sub(1))
            .and_then(|x| x.checked_add(g.n()))
        {
            Some(p) => p,
            None => usize::MAX,
        };
        if predicted > size_cap {
            return Err(ReductionError::SizeCap {
                predicted,
                cap: size_cap,
            });
        }
    }
    let mut t = s_chain(k);
    for _ in k..l {
        t = backedge_step(g, &t)?;
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// Ramsey coupling and blowup
// ---------------------------------------------------------------------------

/// Bipartite graph on X ∪ Y with |X| = x, |Y| = y; row-major adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    x: usize,
    y: usize,
    adj: Vec<bool>,
}

impl Bipartite {
    pub fn new(x: usize, y: usize) -> Self {
        Bipartite {
            x,
            y,
            adj: vec![false; x * y],
        }
    }

    pub fn complete(x: usize, y: usize) -> Self {
        Bipartite {
            x,
            y,
            adj: vec![true; x * y],
        }
    }

    pub fn x_size(&self) -> usize {
        self.x
    }

    pub fn y_size(&self) -> usize {
        self.y
    }

    pub fn set(&mut self, xi: usize, yj: usize, edge: bool) {
        self.adj[xi * self.y + yj] = edge;
    }

    pub fn has(&self, xi: usize, yj: usize) -> bool {
        self.adj[xi * self.y + yj]
    }
}

/// Couples two equal transitive sides through a bipartite graph: X and Y
/// internally transitive by index, cross arc x→y exactly on bipartite
/// edges.
pub fn ramsey_pair(b: &Bipartite) -> Result<Tournament, ReductionError> {
    if b.x_size() != b.y_size() {
        return Err(ReductionError::SizeMismatch {
            x: b.x_size(),
            y: b.y_size(),
        });
    }
    let t = b.x_size();
    Ok(Tournament::from_arc_fn(2 * t, |p, q| match (p < t, q < t) {
        (true, true) | (false, false) => p < q,
        (true, false) => b.has(p, q - t),
        (false, true) => !b.has(q, p - t),
    }))
}

/// Source of the bipartite couplings used between adjacent blocks of the
/// blowup; implementations must be deterministic in (i, j, size).
pub trait BipartiteSource {
    fn bipartite(&self, i: usize, j: usize, size: usize) -> Bipartite;
}

/// Seeded random bipartite graphs, edge probability 1/2, independent per
/// block pair.
pub struct SeededBipartiteSource {
    pub seed: u64,
}

impl BipartiteSource for SeededBipartiteSource {
    fn bipartite(&self, i: usize, j: usize, size: usize) -> Bipartite {
        let pair_seed = seeded::keyed(seeded::keyed(self.seed, i as u64), j as u64);
        let mut b = Bipartite::new(size, size);
        for x in 0..size {
            for y in 0..size {
                b.set(x, y, seeded::keyed(pair_seed, (x * size + y) as u64) & 1 == 1);
            }
        }
        b
    }
}

/// One transitive block per graph vertex; graph edges couple their blocks
/// through the bipartite source, non-edges orient everything forward.
/// With a proper coloring of the graph, coloring each block by its graph
/// vertex's color is proper for the blowup.
pub fn ramsey_blowup(
    g: &Graph,
    block_size: usize,
    source: &dyn BipartiteSource,
) -> Result<Tournament, ReductionError> {
    if block_size == 0 {
        return Err(ReductionError::BadParams("block_size must be >= 1".into()));
    }
    let ng = g.n();
    let size = ng * block_size;
    // materialize couplings for edges only
    let mut couplings: std::collections::BTreeMap<(usize, usize), Bipartite> =
        std::collections::BTreeMap::new();
    for &(i, j) in g.edges() {
        couplings.insert((i, j), source.bipartite(i, j, block_size));
    }
    Ok(Tournament::from_arc_fn(size, |p, q| {
        let (bi, pi) = (p / block_size, p % block_size);
        let (bj, pj) = (q / block_size, q % block_size);
        if bi == bj {
            return pi < pj;
        }
        let (lo, hi) = (bi.min(bj), bi.max(bj));
        match couplings.get(&(lo, hi)) {
            Some(b) => {
                // block lo is the X side, block hi the Y side
                if bi < bj {
                    b.has(pi, pj)
                } else {
                    !b.has(pj, pi)
                }
            }
            None => bi < bj,
        }
    }))
}

/// Block coloring induced by a graph coloring: every vertex of block i
/// takes color `gcolors[i]`.
pub fn blowup_block_coloring(gcolors: &[u32], block_size: usize) -> Coloring {
    let mut colors = Vec::with_capacity(gcolors.len() * block_size);
    for &c in gcolors {
        colors.extend(std::iter::repeat(c).take(block_size));
    }
    Coloring::new(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, DEFAULT_BUDGET};
    use crate::tournament::cyclic_triangle;
    use crate::vset::VertexSet;

    fn single_edge() -> Hypergraph3 {
        Hypergraph3::new(3, [[0, 1, 2]]).unwrap()
    }

    #[test]
    fn basic_sizes_and_two_colorability() {
        let h = single_edge();
        let art = hyper_to_tournament_basic(&h);
        assert_eq!(art.tournament.n(), 9); // 3m + 3 + n = 3 + 3 + 3
        assert_eq!(art.block_map.len(), 9);
        let c = oracle::exact_k_colorable(&art.tournament, 2, DEFAULT_BUDGET)
            .found()
            .expect("single edge is 2-colorable");
        assert_eq!(art.tournament.verify_coloring(&c), Ok(()));
    }

    #[test]
    fn basic_planted_coloring_verifies() {
        let h = Hypergraph3::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        let hcolors = vec![true, false, true, false];
        assert!(h.is_proper_2coloring(&hcolors));
        let art = hyper_to_tournament_basic(&h);
        let planted = basic_two_coloring(&h, &hcolors);
        assert_eq!(art.tournament.verify_coloring(&planted), Ok(()));
    }

    #[test]
    fn gap_sizes_and_planted_coloring() {
        let h = single_edge();
        let art = hyper_to_tournament_gap(&h);
        assert_eq!(art.tournament.n(), 15); // 9m + 3 + n = 9 + 3 + 3
        let hcolors = vec![true, true, false];
        let planted = gap_two_coloring(&h, &hcolors);
        assert_eq!(art.tournament.verify_coloring(&planted), Ok(()));
        assert_eq!(planted.palette_size(), 2);
    }

    #[test]
    fn gap_decoder_roundtrip() {
        let h = single_edge();
        let art = hyper_to_tournament_gap(&h);
        let three = oracle::exact_k_colorable(&art.tournament, 3, DEFAULT_BUDGET)
            .found()
            .expect("gap tournament of a 2-colorable hypergraph");
        let decoded = decode_gap_coloring(&h, &art, &three).unwrap();
        for e in h.edges() {
            let cs: Vec<u32> = e.iter().map(|&v| decoded[v]).collect();
            assert!(!(cs[0] == cs[1] && cs[1] == cs[2]));
        }
        assert!(decoded.iter().all(|&c| c < 6));
    }

    #[test]
    fn gap_decoder_rejects_garbage() {
        let h = single_edge();
        let art = hyper_to_tournament_gap(&h);
        let bad = Coloring::uniform(art.tournament.n(), 0);
        assert_eq!(
            decode_gap_coloring(&h, &art, &bad),
            Err(DecodeError::NotProper)
        );
    }

    #[test]
    fn s_chain_shapes() {
        assert_eq!(s_chain(1).n(), 1);
        assert_eq!(s_chain(2), cyclic_triangle());
        assert_eq!(s_chain(3).n(), 7);
        assert_eq!(s_chain(4).n(), 15);
    }

    #[test]
    fn gadget_amplify_smallest() {
        // R' from two single vertices, (a,b,c,d) = (1,1,2,2): 9 vertices
        let one = single_vertex();
        let r = gadget_amplify(&one, &one, 1, 1, 2, 2).unwrap();
        assert_eq!(r.n(), 9);
        let chi = oracle::exact_chromatic(&r, DEFAULT_BUDGET).found().unwrap();
        assert_eq!(chi.chi, 2);
    }

    #[test]
    fn gadget_amplify_rejects_bad_params() {
        let one = single_vertex();
        assert!(gadget_amplify(&one, &one, 2, 2, 1, 1).is_err());
    }

    #[test]
    fn tower_block_accounting() {
        let h = single_edge();
        let (t2, planted2) = hardness_tower(&h, 2, Some(&[true, true, false])).unwrap();
        assert_eq!(t2.n(), 15);
        let p2 = planted2.unwrap();
        assert_eq!(t2.verify_coloring(&p2), Ok(()));

        let (t3, planted3) = hardness_tower(&h, 3, Some(&[true, true, false])).unwrap();
        assert_eq!(t3.n(), 45); // 3·|T2|
        let p3 = planted3.unwrap();
        assert_eq!(t3.verify_coloring(&p3), Ok(()));
        assert_eq!(p3.palette_size(), 3);
    }

    #[test]
    fn backedge_layout() {
        let k3 = Graph::complete(3);
        let t = s_chain(3);
        let u = backedge_step(&k3, &t).unwrap();
        assert_eq!(u.n(), 17); // 2·7 + 3
        let v = |i| backedge_graph_vertex(7, i);
        // K3 edges point backward among graph vertices
        assert!(u.has_arc(v(1), v(0)));
        assert!(u.has_arc(v(2), v(0)));
        assert!(u.has_arc(v(2), v(1)));
        // copy 0 receives v0 and sends to v1
        let r0 = backedge_copy_range(7, 0);
        assert!(u.has_arc(v(0), r0.start));
        assert!(u.has_arc(r0.start, v(1)));
    }

    #[test]
    fn graph_tower_cap() {
        let k3 = Graph::complete(3);
        assert!(matches!(
            graph_tower(&k3, 3, 10, 1000),
            Err(ReductionError::SizeCap { .. })
        ));
        let t = graph_tower(&k3, 3, 4, 1000).unwrap();
        assert_eq!(t.n(), 17);
        // the first tower step is exactly one backedge step over S_3
        assert_eq!(t, backedge_step(&k3, &s_chain(3)).unwrap());
    }

    #[test]
    fn tower_level_four_size() {
        let h = single_edge();
        let (t4, planted) = hardness_tower(&h, 4, Some(&[true, true, false])).unwrap();
        // amplify(T2, T2, 2, 2, 4, 4): (c+d−a−b+1)·2|T2| + 2^4 − 1
        assert_eq!(t4.n(), 5 * 30 + 15);
        assert!(planted.is_none(), "colorings are emitted only for k <= 3");

        // level 5 amplifies T2 with T3: (4+6−2−3+1)·(15+45) + 2^5 − 1
        let (t5, _) = hardness_tower(&h, 5, None).unwrap();
        assert_eq!(t5.n(), 6 * 60 + 31);
        assert!(hardness_tower(&h, 13, None).is_err());
    }

    #[test]
    fn ramsey_pair_orientations() {
        let complete = Bipartite::complete(3, 3);
        let t = ramsey_pair(&complete).unwrap();
        for x in 0..3 {
            for y in 3..6 {
                assert!(t.has_arc(x, y));
            }
        }
        let empty = Bipartite::new(3, 3);
        let t = ramsey_pair(&empty).unwrap();
        for x in 0..3 {
            for y in 3..6 {
                assert!(t.has_arc(y, x));
            }
        }
        let mut one = Bipartite::new(2, 2);
        one.set(0, 0, true);
        let t = ramsey_pair(&one).unwrap();
        let forward: usize = (0..2)
            .flat_map(|x| (2..4).map(move |y| (x, y)))
            .filter(|&(x, y)| t.has_arc(x, y))
            .count();
        assert_eq!(forward, 1);
        assert!(t.has_arc(0, 2));

        assert!(ramsey_pair(&Bipartite::new(2, 3)).is_err());
    }

    #[test]
    fn blowup_structure() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let t = ramsey_blowup(&g, 3, &SeededBipartiteSource { seed: 5 }).unwrap();
        assert_eq!(t.n(), 6);
        for b in 0..2 {
            let block = VertexSet::from_members(6, b * 3..(b + 1) * 3);
            assert!(t.transitivity_check(&block).is_ok());
        }

        // non-edge: all arcs forward
        let g2 = Graph::new(3, [(0, 1)]).unwrap();
        let t2 = ramsey_blowup(&g2, 2, &SeededBipartiteSource { seed: 5 }).unwrap();
        for p in 0..4 {
            for q in 4..6 {
                assert!(t2.has_arc(p, q), "non-edge blocks must point forward");
            }
        }
    }
}

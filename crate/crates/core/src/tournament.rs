//! Tournament representation and the basic structural operations everything
//! else builds on: neighborhoods, triangle detection, coloring verification,
//! strongly connected components, shortest paths, and Δ-composition.
//!
//! A tournament on `n` vertices stores one out-neighbor bitrow and one
//! in-neighbor bitrow per vertex, so an arc neighborhood `N(uv)` is a single
//! row intersection and triangle scans run a word at a time.

use crate::vset::{words_for, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("digon between vertices {0} and {1}")]
    Digon(usize, usize),
    #[error("missing arc between vertices {0} and {1}")]
    MissingArc(usize, usize),
    #[error("matrix has {got} rows/cols, expected {expected}")]
    BadShape { got: usize, expected: usize },
    #[error("vertex {v} out of range for n={n}")]
    OutOfRange { v: usize, n: usize },
    #[error("no arc {0}->{1}")]
    NotAnArc(usize, usize),
    #[error("endpoints must be distinct")]
    SameEndpoints,
    #[error("vertex {to} not reachable from {from}")]
    Unreachable { from: usize, to: usize },
}

/// Complete oriented graph on vertices `0..n`: exactly one arc per pair.
#[derive(Clone, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    w: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Tournament {
    /// Builds from an arc predicate, validating nothing. `arc(i, j)` must
    /// already describe a tournament; used by constructions that are total
    /// by definition.
    pub(crate) fn from_arc_fn(n: usize, arc: impl Fn(usize, usize) -> bool) -> Self {
        let w = words_for(n);
        let mut t = Tournament {
            n,
            w,
            out: vec![0; n * w],
            inn: vec![0; n * w],
        };
        for i in 0..n {
            for j in 0..n {
                if i != j && arc(i, j) {
                    debug_assert!(!arc(j, i), "digon between {i} and {j}");
                    t.set_arc(i, j);
                }
            }
        }
        t
    }

    /// Validates an explicit boolean matrix: rejects self-loops, digons and
    /// missing arcs.
    pub fn from_bool_matrix(n: usize, m: &[Vec<bool>]) -> Result<Self, TournamentError> {
        if m.len() != n {
            return Err(TournamentError::BadShape {
                got: m.len(),
                expected: n,
            });
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(TournamentError::BadShape {
                    got: row.len(),
                    expected: n,
                });
            }
            if row[i] {
                return Err(TournamentError::SelfLoop(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                match (m[i][j], m[j][i]) {
                    (true, true) => return Err(TournamentError::Digon(i, j)),
                    (false, false) => return Err(TournamentError::MissingArc(i, j)),
                    _ => {}
                }
            }
        }
        Ok(Self::from_arc_fn(n, |i, j| m[i][j]))
    }

    fn set_arc(&mut self, i: usize, j: usize) {
        self.out[i * self.w + j / 64] |= 1u64 << (j % 64);
        self.inn[j * self.w + i / 64] |= 1u64 << (i % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn out_bits(&self, v: usize) -> &[u64] {
        &self.out[v * self.w..(v + 1) * self.w]
    }

    pub(crate) fn in_bits(&self, v: usize) -> &[u64] {
        &self.inn[v * self.w..(v + 1) * self.w]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u * self.w + v / 64] >> (v % 64) & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<(), TournamentError> {
        if v < self.n {
            Ok(())
        } else {
            Err(TournamentError::OutOfRange { v, n: self.n })
        }
    }

    /// All arcs in lexicographic (tail, head) order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_set(u).iter().map(move |v| (u, v)).collect::<Vec<_>>())
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_bits(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// N⁺(v).
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.out_bits(v))
    }

    /// N⁻(v).
    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.in_bits(v))
    }

    /// N(uv) = N⁻(u) ∩ N⁺(v): vertices w closing the directed triangle
    /// u→v→w→u. Requires the arc u→v.
    pub fn arc_neighborhood(&self, u: usize, v: usize) -> Result<VertexSet, TournamentError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_arc(u, v) {
            return Err(TournamentError::NotAnArc(u, v));
        }
        let mut s = self.in_set(u);
        s.intersect_with(&self.out_set(v));
        Ok(s)
    }

    /// N^±(S): vertices outside S with at least one in-neighbor and at least
    /// one out-neighbor in S.
    pub fn mixed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut result = VertexSet::empty(self.n);
        for v in 0..self.n {
            if s.contains(v) {
                continue;
            }
            let has_in = !self.in_set(v).intersection(s).is_empty();
            let has_out = !self.out_set(v).intersection(s).is_empty();
            if has_in && has_out {
                result.insert(v);
            }
        }
        result
    }

    pub fn neighborhood(&self, query: NeighborhoodQuery<'_>) -> Result<VertexSet, TournamentError> {
        match query {
            NeighborhoodQuery::Out(v) => {
                self.check_vertex(v)?;
                Ok(self.out_set(v))
            }
            NeighborhoodQuery::In(v) => {
                self.check_vertex(v)?;
                Ok(self.in_set(v))
            }
            NeighborhoodQuery::Arc(u, v) => self.arc_neighborhood(u, v),
            NeighborhoodQuery::Mixed(s) => Ok(self.mixed_neighborhood(s)),
        }
    }

    /// Fast existence test for a directed triangle inside `s`.
    pub fn has_triangle_in(&self, s: &VertexSet) -> bool {
        let sw = s.words();
        for u in s.iter() {
            let ub = self.out_bits(u);
            let iu = self.in_bits(u);
            for (wi, (&ow, &sw_)) in ub.iter().zip(sw).enumerate() {
                let mut cand = ow & sw_;
                while cand != 0 {
                    let v = wi * 64 + cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    // w with v->w, w->u, w in s
                    let vb = self.out_bits(v);
                    for k in 0..self.w {
                        if vb[k] & iu[k] & sw[k] != 0 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Lexicographically least directed triangle inside `s`, as the cyclic
    /// order starting from its smallest vertex.
    pub fn find_triangle_in(&self, s: &VertexSet) -> Option<[usize; 3]> {
        let members = s.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i + 1) {
                for &c in members.iter().skip(j + 1) {
                    // cyclic iff the pair orientations chain up
                    if self.has_arc(a, b) && self.has_arc(b, c) && self.has_arc(c, a) {
                        return Some([a, b, c]);
                    }
                    if self.has_arc(a, c) && self.has_arc(c, b) && self.has_arc(b, a) {
                        return Some([a, c, b]);
                    }
                }
            }
        }
        None
    }

    /// Ok iff `T[s]` is acyclic; otherwise the least directed triangle in `s`.
    pub fn transitivity_check(&self, s: &VertexSet) -> Result<(), [usize; 3]> {
        if !self.has_triangle_in(s) {
            return Ok(());
        }
        Err(self.find_triangle_in(s).expect("triangle existence verified"))
    }

    pub fn is_transitive(&self) -> bool {
        !self.has_triangle_in(&VertexSet::full(self.n))
    }

    /// Ok iff every color class induces an acyclic subtournament.
    pub fn verify_coloring(&self, c: &Coloring) -> Result<(), VerifyError> {
        if c.len() != self.n {
            return Err(VerifyError::LengthMismatch {
                got: c.len(),
                expected: self.n,
            });
        }
        let mut palette: Vec<u32> = c.colors().to_vec();
        palette.sort_unstable();
        palette.dedup();
        for color in palette {
            let class = VertexSet::from_members(
                self.n,
                (0..self.n).filter(|&v| c.color(v) == color),
            );
            if self.has_triangle_in(&class) {
                let triangle = self
                    .find_triangle_in(&class)
                    .expect("triangle existence verified");
                return Err(VerifyError::MonochromaticTriangle { triangle, color });
            }
        }
        Ok(())
    }

    /// Strongly connected components in topological order of the
    /// condensation: every arc between distinct components goes from an
    /// earlier component to a later one. Members ascend within a component.
    pub fn scc_decomposition(&self) -> Vec<VertexSet> {
        let n = self.n;
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut comps: Vec<VertexSet> = Vec::new();
        let mut counter = 0usize;

        // Iterative Tarjan; frames carry the scan position into the
        // out-neighbor row.
        let mut call: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            call.push((root, 0));
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                let next = self.next_out_neighbor(v, *pos);
                match next {
                    Some(u) => {
                        *pos = u + 1;
                        if index[u] == usize::MAX {
                            index[u] = counter;
                            low[u] = counter;
                            counter += 1;
                            stack.push(u);
                            on_stack[u] = true;
                            call.push((u, 0));
                        } else if on_stack[u] {
                            low[v] = low[v].min(index[u]);
                        }
                    }
                    None => {
                        call.pop();
                        if let Some(&(parent, _)) = call.last() {
                            low[parent] = low[parent].min(low[v]);
                        }
                        if low[v] == index[v] {
                            let mut comp = VertexSet::empty(n);
                            loop {
                                let u = stack.pop().expect("scc stack underflow");
                                on_stack[u] = false;
                                comp.insert(u);
                                if u == v {
                                    break;
                                }
                            }
                            comps.push(comp);
                        }
                    }
                }
            }
        }
        // Tarjan emits components in reverse topological order.
        comps.reverse();
        comps
    }

    fn next_out_neighbor(&self, v: usize, from: usize) -> Option<usize> {
        if from >= self.n {
            return None;
        }
        let row = self.out_bits(v);
        let mut wi = from / 64;
        let mut word = row[wi] & !((1u64 << (from % 64)) - 1);
        loop {
            if word != 0 {
                return Some(wi * 64 + word.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.w {
                return None;
            }
            word = row[wi];
        }
    }

    /// Lexicographically least shortest directed path from `u` to `v`:
    /// at every step the smallest-id out-neighbor that still lies on a
    /// shortest path is taken.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Vec<usize>, TournamentError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(TournamentError::SameEndpoints);
        }
        // BFS from v over reversed arcs: dist[x] = d(x, v).
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for y in self.in_set(x).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[u] == usize::MAX {
            return Err(TournamentError::Unreachable { from: u, to: v });
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let next = self
                .out_set(cur)
                .iter()
                .find(|&w| dist[w] != usize::MAX && dist[w] + 1 == dist[cur])
                .expect("BFS predecessor exists");
            path.push(next);
            cur = next;
        }
        Ok(path)
    }

    /// Subtournament on `s`, with the ascending map from new ids back to
    /// the parent's ids.
    pub fn induced(&self, s: &VertexSet) -> Result<(Tournament, Vec<usize>), TournamentError> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(TournamentError::OutOfRange { v, n: self.n });
        }
        let map = s.to_vec();
        let t = Tournament::from_arc_fn(map.len(), |i, j| self.has_arc(map[i], map[j]));
        Ok((t, map))
    }

    /// All directed triangles as unordered `{a,b,c}` triples (each listed
    /// once, lexicographically).
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let (x, y) = if self.has_arc(a, b) { (a, b) } else { (b, a) };
                let nn = self.arc_neighborhood(x, y).expect("arc exists");
                for c in nn.iter() {
                    if c > b {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament(n={})", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.has_arc(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub enum NeighborhoodQuery<'a> {
    Out(usize),
    In(usize),
    Arc(usize, usize),
    Mixed(&'a VertexSet),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("coloring has {got} entries, tournament has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    #[error("monochromatic triangle {triangle:?} in color {color}")]
    MonochromaticTriangle { triangle: [usize; 3], color: u32 },
}

/// Vertex-indexed color assignment. Ids are arbitrary nonnegative integers;
/// `palette_size` counts the distinct ids present.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn uniform(n: usize, color: u32) -> Self {
        Coloring {
            colors: vec![color; n],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
    }

    pub fn palette_size(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels ids by first appearance in vertex order, so vertex 0 gets
    /// color 0 and id j+1 only appears after id j.
    pub fn normalized(&self) -> Coloring {
        let mut map: Vec<(u32, u32)> = Vec::new();
        let mut next = 0u32;
        let mut colors = Vec::with_capacity(self.colors.len());
        for &c in &self.colors {
            let mapped = match map.iter().find(|&&(old, _)| old == c) {
                Some(&(_, new)) => new,
                None => {
                    map.push((c, next));
                    next += 1;
                    next - 1
                }
            };
            colors.push(mapped);
        }
        Coloring { colors }
    }
}

/// Colors for a subset of vertices, keyed by global vertex id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialColoring {
    map: std::collections::BTreeMap<usize, u32>,
}

impl PartialColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, v: usize, c: u32) {
        self.map.insert(v, c);
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.map.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.map.iter().map(|(&v, &c)| (v, c))
    }

    pub fn domain(&self, n: usize) -> VertexSet {
        VertexSet::from_members(n, self.map.keys().copied())
    }

    pub fn covers(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.map.contains_key(&v))
    }

    pub fn palette_size(&self) -> usize {
        let mut seen: Vec<u32> = self.map.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> Option<u32> {
        self.map.values().copied().max()
    }

    pub fn restrict(&self, s: &VertexSet) -> PartialColoring {
        PartialColoring {
            map: self
                .map
                .iter()
                .filter(|(&v, _)| s.contains(v))
                .map(|(&v, &c)| (v, c))
                .collect(),
        }
    }

    pub fn remap(&self, f: impl Fn(u32) -> u32) -> PartialColoring {
        PartialColoring {
            map: self.map.iter().map(|(&v, &c)| (v, f(c))).collect(),
        }
    }

    /// Relabels through a local→global vertex map.
    pub fn relabel(&self, map: &[usize]) -> PartialColoring {
        PartialColoring {
            map: self.map.iter().map(|(&v, &c)| (map[v], c)).collect(),
        }
    }

    pub fn merge(&mut self, other: &PartialColoring) {
        for (v, c) in other.iter() {
            self.map.insert(v, c);
        }
    }

    /// Converts to a total coloring; panics if any vertex is missing.
    pub fn into_total(self, n: usize) -> Coloring {
        let mut colors = vec![u32::MAX; n];
        for (v, c) in self.map {
            colors[v] = c;
        }
        assert!(
            colors.iter().all(|&c| c != u32::MAX),
            "partial coloring does not cover all {n} vertices"
        );
        Coloring::new(colors)
    }
}

/// Runs a coloring routine on each strongly connected component and reuses
/// one shared palette across components: a directed triangle always lies
/// inside a single component, so per-component proper colorings merge.
/// `f` receives the induced component and its local→global vertex map and
/// returns a coloring in local ids.
pub fn color_components<E>(
    t: &Tournament,
    mut f: impl FnMut(&Tournament, &[usize]) -> Result<Coloring, E>,
) -> Result<Coloring, E> {
    let mut colors = vec![0u32; t.n()];
    for comp in t.scc_decomposition() {
        if comp.len() == 1 {
            continue; // already color 0
        }
        let (sub, map) = t.induced(&comp).expect("component vertices in range");
        let local = f(&sub, &map)?;
        for (i, &g) in map.iter().enumerate() {
            colors[g] = local.color(i);
        }
    }
    Ok(Coloring::new(colors))
}

/// Δ(T₁,T₂,T₃): disjoint union plus all arcs T₁→T₂, T₂→T₃, T₃→T₁.
pub fn delta_compose(t1: &Tournament, t2: &Tournament, t3: &Tournament) -> Tournament {
    let (n1, n2, n3) = (t1.n(), t2.n(), t3.n());
    let n = n1 + n2 + n3;
    let block = |v: usize| {
        if v < n1 {
            0
        } else if v < n1 + n2 {
            1
        } else {
            2
        }
    };
    Tournament::from_arc_fn(n, |i, j| {
        let (bi, bj) = (block(i), block(j));
        if bi == bj {
            match bi {
                0 => t1.has_arc(i, j),
                1 => t2.has_arc(i - n1, j - n1),
                _ => t3.has_arc(i - n1 - n2, j - n1 - n2),
            }
        } else {
            // forward between consecutive blocks, closing arc 2->0
            matches!((bi, bj), (0, 1) | (1, 2) | (2, 0))
        }
    })
}

/// Convenience constructors used across tests and generators.
pub fn transitive(n: usize) -> Tournament {
    Tournament::from_arc_fn(n, |i, j| i < j)
}

pub fn cyclic_triangle() -> Tournament {
    Tournament::from_arc_fn(3, |i, j| (j + 3 - i) % 3 == 1)
}

pub fn single_vertex() -> Tournament {
    Tournament::from_arc_fn(1, |_, _| false)
}

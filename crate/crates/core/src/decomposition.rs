//! Vertex chains, path decompositions, and the c+4d chain coloring.
//!
//! A vertex chain is a fixed shortest directed path v₀..v_k; its zones are
//! D₀ = N⁺(v₀), Dᵢ = N(eᵢ) minus earlier zones, D_{k+1} = N⁻(v_k) minus
//! earlier zones. The zones cover V, and no forward arc spans five or more
//! zones, which is what makes the palette-recycling coloring sound.

use crate::tournament::{Coloring, PartialColoring, Tournament, TournamentError};
use crate::vset::VertexSet;
use thiserror::Error;

/// The vertices of a fixed shortest directed path from `v0` to `vk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexChain {
    vertices: Vec<usize>,
}

impl VertexChain {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of arcs k (one less than the vertex count).
    pub fn k(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Arc chain e₁..e_k, eᵢ = (v_{i-1}, vᵢ).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("nonempty chain")
    }
}

/// Chain along the deterministic shortest path from `u` to `w`.
pub fn build_vertex_chain(
    t: &Tournament,
    u: usize,
    w: usize,
) -> Result<VertexChain, TournamentError> {
    let vertices = t.shortest_path(u, w)?;
    Ok(VertexChain { vertices })
}

/// Full invariant scan for a chain: consecutive pairs are arcs and every
/// non-consecutive pair points backward (no shortcut). Used by tests and
/// debug assertions.
pub fn validate_chain(t: &Tournament, chain: &VertexChain) -> Result<(), String> {
    let vs = chain.vertices();
    for w in vs.windows(2) {
        if !t.has_arc(w[0], w[1]) {
            return Err(format!("missing chain arc {}->{}", w[0], w[1]));
        }
    }
    for i in 0..vs.len() {
        for j in i + 2..vs.len() {
            if !t.has_arc(vs[j], vs[i]) {
                return Err(format!(
                    "shortcut: arc {}->{} should point backward",
                    vs[i], vs[j]
                ));
            }
        }
    }
    Ok(())
}

/// Zones D₀..D_{k+1}.
#[derive(Clone, Debug)]
pub struct PathDecomposition {
    pub zones: Vec<VertexSet>,
}

impl PathDecomposition {
    /// Zone index of a vertex, if any.
    pub fn zone_of(&self, v: usize) -> Option<usize> {
        self.zones.iter().position(|z| z.contains(v))
    }
}

/// Builds the zone cover for a chain. Coverage of all vertices is a
/// theorem, so a gap is an internal error and panics.
pub fn build_path_decomposition(t: &Tournament, chain: &VertexChain) -> PathDecomposition {
    debug_assert!(validate_chain(t, chain).is_ok());
    let n = t.n();
    let mut covered = VertexSet::empty(n);
    let mut zones = Vec::with_capacity(chain.k() + 2);

    let d0 = t.out_set(chain.start());
    covered.union_with(&d0);
    zones.push(d0);

    for (u, v) in chain.arcs() {
        let mut di = t.arc_neighborhood(u, v).expect("chain arc exists");
        di.subtract(&covered);
        covered.union_with(&di);
        zones.push(di);
    }

    let mut last = t.in_set(chain.end());
    last.subtract(&covered);
    covered.union_with(&last);
    zones.push(last);

    assert_eq!(
        covered.len(),
        n,
        "path decomposition must cover every vertex"
    );
    PathDecomposition { zones }
}

/// Contract for coloring induced subsets with a declared palette budget.
pub trait SubColorer {
    fn budget(&self) -> usize;

    /// A coloring of `T[s]` using at most `budget()` colors, or `None`.
    fn color_subset(&self, t: &Tournament, s: &VertexSet) -> Option<PartialColoring>;

    /// True when success on a set implies success on every subset; lets the
    /// endpoint-pair scan skip pairs whose one-sided neighborhood already
    /// fails, without changing which pair is returned.
    fn subset_closed(&self) -> bool {
        false
    }
}

/// Budget-1 colorer: succeeds exactly on transitive subsets.
pub struct TransitiveColorer;

impl SubColorer for TransitiveColorer {
    fn budget(&self) -> usize {
        1
    }

    fn color_subset(&self, t: &Tournament, s: &VertexSet) -> Option<PartialColoring> {
        if t.has_triangle_in(s) {
            return None;
        }
        let mut pc = PartialColoring::new();
        for v in s.iter() {
            pc.assign(v, 0);
        }
        Some(pc)
    }

    fn subset_closed(&self) -> bool {
        true
    }
}

/// Restriction of a fixed coloring: succeeds on any subset of its domain.
pub struct RestrictionColorer {
    source: PartialColoring,
    domain: VertexSet,
    budget: usize,
}

impl RestrictionColorer {
    pub fn new(n: usize, source: PartialColoring, budget: usize) -> Self {
        let domain = source.domain(n);
        RestrictionColorer {
            source,
            domain,
            budget,
        }
    }
}

impl SubColorer for RestrictionColorer {
    fn budget(&self) -> usize {
        self.budget
    }

    fn color_subset(&self, _t: &Tournament, s: &VertexSet) -> Option<PartialColoring> {
        if s.is_subset_of(&self.domain) {
            Some(self.source.restrict(s))
        } else {
            None
        }
    }

    fn subset_closed(&self) -> bool {
        true
    }
}

/// Greedy partition into transitive classes, capped at a budget.
pub struct GreedyTransitiveColorer {
    pub budget: usize,
}

impl SubColorer for GreedyTransitiveColorer {
    fn budget(&self) -> usize {
        self.budget
    }

    fn color_subset(&self, t: &Tournament, s: &VertexSet) -> Option<PartialColoring> {
        let classes = greedy_transitive_partition(t, s);
        if classes.len() > self.budget {
            return None;
        }
        let mut pc = PartialColoring::new();
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                pc.assign(v, i as u32);
            }
        }
        Some(pc)
    }
}

/// Colorer backed by an arbitrary function; used to plug whole pipelines
/// (e.g. the 10-coloring) in as endpoint colorers.
pub struct FnColorer<F: Fn(&Tournament, &VertexSet) -> Option<PartialColoring>> {
    budget: usize,
    f: F,
}

impl<F: Fn(&Tournament, &VertexSet) -> Option<PartialColoring>> FnColorer<F> {
    pub fn new(budget: usize, f: F) -> Self {
        FnColorer { budget, f }
    }
}

impl<F: Fn(&Tournament, &VertexSet) -> Option<PartialColoring>> SubColorer for FnColorer<F> {
    fn budget(&self) -> usize {
        self.budget
    }

    fn color_subset(&self, t: &Tournament, s: &VertexSet) -> Option<PartialColoring> {
        (self.f)(t, s)
    }
}

/// Scans vertices in ascending order, assigning each to the first transitive
/// class that stays transitive; opens a new class otherwise.
pub fn greedy_transitive_partition(t: &Tournament, s: &VertexSet) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in s.iter() {
        let slot = classes.iter().position(|class| {
            // adding v creates a triangle iff some arc runs from
            // out(v)∩class to in(v)∩class
            let outs = t.out_set(v).intersection(class);
            let ins = t.in_set(v).intersection(class);
            outs.iter().all(|x| t.out_set(x).intersection(&ins).is_empty())
        });
        match slot {
            Some(i) => classes[i].insert(v),
            None => classes.push(VertexSet::singleton(t.n(), v)),
        }
    }
    classes
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainColorError {
    #[error("endpoint budget {c} must be at least arc budget {d}")]
    BudgetOrder { c: usize, d: usize },
    #[error("endpoint zone coloring failed (zones {0:?})")]
    EndpointZoneFailed(Vec<usize>),
    #[error("arc zone {0} coloring failed")]
    ArcZoneFailed(usize),
}

/// The c+4d coloring from a (c,d)-vertex chain.
///
/// k ≤ 3: D₀∪D_{k+1} is colored jointly by the endpoint colorer and each
/// arc zone gets its own fresh palette, ≤ c+3d colors. k ≥ 4: five arc
/// palettes recycled mod 5 (including the endpoint zones' slots), plus c−d
/// extra colors shared by D₀ and D_{k+1} — legal because all arcs between
/// them point backward and no forward arc spans five zones.
pub fn color_via_chain(
    t: &Tournament,
    chain: &VertexChain,
    endpoint_colorer: &dyn SubColorer,
    arc_colorer: &dyn SubColorer,
) -> Result<Coloring, ChainColorError> {
    let (c, d) = (endpoint_colorer.budget(), arc_colorer.budget());
    if c < d {
        return Err(ChainColorError::BudgetOrder { c, d });
    }
    let decomp = build_path_decomposition(t, chain);
    let k = chain.k();
    let zones = &decomp.zones;

    // relabel ids by first appearance in ascending vertex order
    let normalize = |pc: &PartialColoring| -> PartialColoring {
        let mut map: Vec<(u32, u32)> = Vec::new();
        let mut out = PartialColoring::new();
        for (v, c) in pc.iter() {
            let new = match map.iter().find(|&&(old, _)| old == c) {
                Some(&(_, new)) => new,
                None => {
                    let new = map.len() as u32;
                    map.push((c, new));
                    new
                }
            };
            out.assign(v, new);
        }
        out
    };

    let mut total = PartialColoring::new();

    if k <= 3 {
        let joint = zones[0].union(&zones[k + 1]);
        let endpoint = endpoint_colorer
            .color_subset(t, &joint)
            .ok_or(ChainColorError::EndpointZoneFailed(vec![0, k + 1]))?;
        let endpoint = normalize(&endpoint);
        let mut offset = endpoint.palette_size() as u32;
        total.merge(&endpoint);
        for i in 1..=k {
            if zones[i].is_empty() {
                continue;
            }
            let zi = arc_colorer
                .color_subset(t, &zones[i])
                .ok_or(ChainColorError::ArcZoneFailed(i))?;
            let zi = normalize(&zi);
            let width = zi.palette_size() as u32;
            total.merge(&zi.remap(|c| c + offset));
            offset += width;
        }
    } else {
        let color_zone = |colorer: &dyn SubColorer, i: usize| -> Result<PartialColoring, ChainColorError> {
            if zones[i].is_empty() {
                return Ok(PartialColoring::new());
            }
            let pc = colorer.color_subset(t, &zones[i]).ok_or_else(|| {
                if i == 0 || i == k + 1 {
                    ChainColorError::EndpointZoneFailed(vec![i])
                } else {
                    ChainColorError::ArcZoneFailed(i)
                }
            })?;
            Ok(normalize(&pc))
        };
        let first = color_zone(endpoint_colorer, 0)?;
        let last = color_zone(endpoint_colorer, k + 1)?;
        let mut middles = Vec::with_capacity(k);
        for i in 1..=k {
            middles.push(color_zone(arc_colorer, i)?);
        }
        // palette slot width: what the arc zones actually needed
        let d_eff = middles
            .iter()
            .map(|m| m.palette_size())
            .max()
            .unwrap_or(0)
            .max(1);
        let slot = |p: usize| (p * d_eff) as u32;
        let extras_base = slot(5);
        // endpoint colors: first d_eff ids live in the zone's own mod-5
        // palette, the rest in the shared extras
        let place = |pc: &PartialColoring, palette: usize| {
            pc.remap(|c| {
                if (c as usize) < d_eff {
                    slot(palette) + c
                } else {
                    extras_base + (c - d_eff as u32)
                }
            })
        };
        total.merge(&place(&first, 0));
        total.merge(&place(&last, (k + 1) % 5));
        for (i, m) in middles.iter().enumerate() {
            let zone = i + 1;
            total.merge(&m.remap(|c| slot(zone % 5) + c));
        }
    }

    Ok(total.into_total(t.n()))
}

/// Result of the all-pairs endpoint scan: the lexicographically first pair
/// (u,w) whose joint neighborhood N⁺(u)∪N⁻(w) the colorer accepts.
#[derive(Clone, Debug)]
pub struct EndpointPair {
    pub u: usize,
    pub w: usize,
    pub coloring: PartialColoring,
}

pub fn find_endpoint_pair(t: &Tournament, colorer: &dyn SubColorer) -> Option<EndpointPair> {
    let n = t.n();
    // For subset-closed colorers, a failure on N⁺(u) alone (or N⁻(w) alone)
    // rules out every pair containing it.
    let closed = colorer.subset_closed();
    let mut u_ok: Vec<Option<bool>> = vec![None; n];
    let mut w_ok: Vec<Option<bool>> = vec![None; n];

    for u in 0..n {
        if closed {
            let ok = *u_ok[u]
                .get_or_insert_with(|| colorer.color_subset(t, &t.out_set(u)).is_some());
            if !ok {
                continue;
            }
        }
        for w in 0..n {
            if w == u {
                continue;
            }
            if closed {
                let ok = *w_ok[w]
                    .get_or_insert_with(|| colorer.color_subset(t, &t.in_set(w)).is_some());
                if !ok {
                    continue;
                }
            }
            let joint = t.out_set(u).union(&t.in_set(w));
            if let Some(coloring) = colorer.color_subset(t, &joint) {
                return Some(EndpointPair { u, w, coloring });
            }
        }
    }
    None
}

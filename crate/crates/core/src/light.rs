//! Heavy arcs, light tournaments, and their bounded-palette colorings.
//!
//! An arc uv is heavy when N(uv) contains a directed triangle; a tournament
//! with no heavy arc is light (equivalently, Δ(C₃,1,1)-free). In any
//! 2-coloring every heavy arc is bicolored, so the heavy arcs of a
//! 2-colorable tournament form a bipartite graph — that gives the light
//! partition. Light tournaments admit an 8-coloring built from a maximal
//! chain of vertex-disjoint triangles.

use crate::decomposition::{
    build_vertex_chain, color_via_chain, find_endpoint_pair, RestrictionColorer, SubColorer,
    TransitiveColorer,
};
use crate::tournament::{
    color_components, delta_compose, single_vertex, Coloring, PartialColoring, Tournament,
    TournamentError,
};
use crate::vset::VertexSet;
use std::collections::BTreeMap;
use thiserror::Error;

/// A heavy arc with the triangle found inside its arc neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeavyArc {
    pub arc: (usize, usize),
    pub witness: [usize; 3],
}

#[derive(Clone, Debug, Default)]
pub struct HeavyArcReport {
    pub heavy_arcs: Vec<HeavyArc>,
}

/// Witness triangle inside N(uv) if the arc is heavy.
pub fn is_heavy_arc(
    t: &Tournament,
    u: usize,
    v: usize,
) -> Result<Option<[usize; 3]>, TournamentError> {
    let nn = t.arc_neighborhood(u, v)?;
    Ok(if t.has_triangle_in(&nn) {
        t.find_triangle_in(&nn)
    } else {
        None
    })
}

/// All heavy arcs in lexicographic arc order, each with its witness.
pub fn heavy_arc_report(t: &Tournament) -> HeavyArcReport {
    let mut report = HeavyArcReport::default();
    for u in 0..t.n() {
        for v in t.out_set(u).iter() {
            if let Some(witness) = is_heavy_arc(t, u, v).expect("arc exists") {
                report.heavy_arcs.push(HeavyArc { arc: (u, v), witness });
            }
        }
    }
    report
}

/// Ok iff no arc is heavy; otherwise the lexicographically first heavy arc.
pub fn is_light(t: &Tournament) -> Result<(), HeavyArc> {
    for u in 0..t.n() {
        for v in t.out_set(u).iter() {
            if let Some(witness) = is_heavy_arc(t, u, v).expect("arc exists") {
                return Err(HeavyArc { arc: (u, v), witness });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Certificates of non-2-colorability
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateBody {
    /// Odd closed cycle in the heavy-arc graph, as its vertex sequence;
    /// every consecutive pair (cyclically) is joined by a heavy arc.
    OddHeavyCycle { cycle: Vec<usize> },
    /// For every ordered pair (u,v) of distinct scope vertices, a directed
    /// triangle lying inside N⁺(u) ∪ N⁻(v) restricted to the scope.
    AllPairsBlocked {
        witnesses: BTreeMap<(usize, usize), [usize; 3]>,
    },
}

/// Structured evidence that a tournament (restricted to `scope`) is not
/// 2-colorable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonTwoColorCertificate {
    pub scope: VertexSet,
    pub body: CertificateBody,
}

impl NonTwoColorCertificate {
    /// The odd cycle as directed heavy arcs of `t`, one per consecutive
    /// vertex pair (cyclically); None for the all-pairs variant.
    pub fn heavy_cycle_arcs(&self, t: &Tournament) -> Option<Vec<(usize, usize)>> {
        match &self.body {
            CertificateBody::OddHeavyCycle { cycle } => Some(
                (0..cycle.len())
                    .map(|i| {
                        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                        if t.has_arc(a, b) {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect(),
            ),
            CertificateBody::AllPairsBlocked { .. } => None,
        }
    }

    /// Rewrites all vertex ids through a local→parent map.
    pub fn relabel(&self, map: &[usize], parent_n: usize) -> NonTwoColorCertificate {
        let scope = VertexSet::from_members(parent_n, self.scope.iter().map(|v| map[v]));
        let body = match &self.body {
            CertificateBody::OddHeavyCycle { cycle } => CertificateBody::OddHeavyCycle {
                cycle: cycle.iter().map(|&v| map[v]).collect(),
            },
            CertificateBody::AllPairsBlocked { witnesses } => CertificateBody::AllPairsBlocked {
                witnesses: witnesses
                    .iter()
                    .map(|(&(u, v), &[a, b, c])| ((map[u], map[v]), [map[a], map[b], map[c]]))
                    .collect(),
            },
        };
        NonTwoColorCertificate { scope, body }
    }
}

// ---------------------------------------------------------------------------
// Light partition
// ---------------------------------------------------------------------------

/// Splits V into two parts neither of which contains a heavy arc of `t`
/// (hence both induce light tournaments), or returns an odd cycle of heavy
/// arcs proving `t` is not 2-colorable. Vertices not touched by any heavy
/// arc go to the first part.
pub fn light_partition(
    t: &Tournament,
) -> Result<(VertexSet, VertexSet), NonTwoColorCertificate> {
    let n = t.n();
    let report = heavy_arc_report(t);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for ha in &report.heavy_arcs {
        let (u, v) = ha.arc;
        adj[u].push(v);
        adj[v].push(u);
    }
    for l in &mut adj {
        l.sort_unstable();
        l.dedup();
    }

    let mut side = vec![None::<bool>; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root].is_some() || adj[root].is_empty() {
            continue;
        }
        side[root] = Some(true);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match side[y] {
                    None => {
                        side[y] = Some(!side[x].unwrap());
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    Some(sy) => {
                        if sy == side[x].unwrap() {
                            let cycle = cross_edge_cycle(x, y, &parent);
                            debug_assert!(cycle.len() % 2 == 1);
                            return Err(NonTwoColorCertificate {
                                scope: VertexSet::full(n),
                                body: CertificateBody::OddHeavyCycle { cycle },
                            });
                        }
                    }
                }
            }
        }
    }

    let mut s1 = VertexSet::empty(n);
    let mut s2 = VertexSet::empty(n);
    for v in 0..n {
        match side[v] {
            Some(false) => s2.insert(v),
            _ => s1.insert(v), // side A and untouched vertices
        }
    }
    Ok((s1, s2))
}

/// Odd cycle through the BFS tree paths of x and y plus the crossing edge.
fn cross_edge_cycle(x: usize, y: usize, parent: &[usize]) -> Vec<usize> {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let ax = ancestors(x);
    let ay = ancestors(y);
    // first common ancestor
    let lca = ax
        .iter()
        .find(|v| ay.contains(v))
        .copied()
        .expect("same BFS tree");
    let mut cycle: Vec<usize> = ax.iter().copied().take_while(|&v| v != lca).collect();
    cycle.push(lca);
    let tail: Vec<usize> = ay.iter().copied().take_while(|&v| v != lca).collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

// ---------------------------------------------------------------------------
// Five-coloring of 2-colorable light tournaments
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LightColorError {
    #[error("input is not light: arc {} -> {} is heavy", .0.arc.0, .0.arc.1)]
    NotLight(HeavyArc),
    #[error("no endpoint pair exists: input is not 2-colorable")]
    NotTwoColorable(NonTwoColorCertificate),
}

/// Colors a light tournament with ≤5 colors via a (1,1)-vertex chain, or
/// emits the all-pairs certificate that it is not 2-colorable.
pub fn color_light_2col_5(t: &Tournament) -> Result<Coloring, LightColorError> {
    is_light(t).map_err(LightColorError::NotLight)?;
    color_light_2col_5_prechecked(t).map_err(LightColorError::NotTwoColorable)
}

/// Same, for callers that already know the input is light.
pub(crate) fn color_light_2col_5_prechecked(
    t: &Tournament,
) -> Result<Coloring, NonTwoColorCertificate> {
    let parent_n = t.n();
    color_components(t, |tc, map| {
        let full = VertexSet::full(tc.n());
        if !tc.has_triangle_in(&full) {
            return Ok(Coloring::uniform(tc.n(), 0));
        }
        match find_endpoint_pair(tc, &TransitiveColorer) {
            Some(pair) => {
                let chain = build_vertex_chain(tc, pair.u, pair.w)
                    .expect("strongly connected component");
                let endpoint = RestrictionColorer::new(tc.n(), pair.coloring, 1);
                let coloring = color_via_chain(tc, &chain, &endpoint, &TransitiveColorer)
                    .expect("restriction covers endpoint zones");
                Ok(coloring)
            }
            None => Err(all_pairs_certificate(tc, map, parent_n)),
        }
    })
}

/// Certificate for a component in which every ordered pair fails the
/// transitivity test, mapped back to parent vertex ids.
fn all_pairs_certificate(tc: &Tournament, map: &[usize], parent_n: usize) -> NonTwoColorCertificate {
    let mut witnesses = BTreeMap::new();
    for u in 0..tc.n() {
        for w in 0..tc.n() {
            if u == w {
                continue;
            }
            let joint = tc.out_set(u).union(&tc.in_set(w));
            let tri = tc
                .find_triangle_in(&joint)
                .expect("pair failed the transitivity test");
            witnesses.insert(
                (map[u], map[w]),
                [map[tri[0]], map[tri[1]], map[tri[2]]],
            );
        }
    }
    NonTwoColorCertificate {
        scope: VertexSet::from_members(parent_n, map.iter().copied()),
        body: CertificateBody::AllPairsBlocked { witnesses },
    }
}

// ---------------------------------------------------------------------------
// C3-chains
// ---------------------------------------------------------------------------

/// Ordered vertex-disjoint triangles X₁..X_ℓ with all arcs forward between
/// consecutive triangles, plus the zone structure of the remaining vertices:
/// w sits in zone Zᵢ for the highest i with Xᵢ ⇒ w (Z₀ if none); w is clear
/// when comparable (all-in or all-out) with every triangle.
#[derive(Clone, Debug)]
pub struct C3Chain {
    /// Each triangle `[p,q,r]` in cyclic order p→q→r→p with p its least vertex.
    pub triangles: Vec<[usize; 3]>,
    /// Z₀..Z_ℓ, partitioning the non-chain vertices.
    pub zones: Vec<VertexSet>,
    pub clear: VertexSet,
    pub unclear: VertexSet,
}

impl C3Chain {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn chain_vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_members(n, self.triangles.iter().flatten().copied())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum C3ChainError {
    #[error("tournament has no directed triangle")]
    TriangleFree,
}

fn dominates(t: &Tournament, tri: &[usize; 3], w: usize) -> bool {
    tri.iter().all(|&x| t.has_arc(x, w))
}

fn dominated(t: &Tournament, tri: &[usize; 3], w: usize) -> bool {
    tri.iter().all(|&x| t.has_arc(w, x))
}

fn classify(t: &Tournament, triangles: &[[usize; 3]]) -> (Vec<VertexSet>, VertexSet, VertexSet) {
    let n = t.n();
    let chain_vs = VertexSet::from_members(n, triangles.iter().flatten().copied());
    let mut zones = vec![VertexSet::empty(n); triangles.len() + 1];
    let mut clear = VertexSet::empty(n);
    let mut unclear = VertexSet::empty(n);
    for w in 0..n {
        if chain_vs.contains(w) {
            continue;
        }
        let mut zone = 0usize;
        let mut is_clear = true;
        for (i, tri) in triangles.iter().enumerate() {
            if dominates(t, tri, w) {
                zone = i + 1;
            } else if !dominated(t, tri, w) {
                is_clear = false;
            }
        }
        zones[zone].insert(w);
        if is_clear {
            clear.insert(w);
        } else {
            unclear.insert(w);
        }
    }
    (zones, clear, unclear)
}

/// Grows a C3-chain from the least triangle until the clear set is
/// transitive: while some Zᵢ∩C contains a triangle, that triangle slots in
/// between Xᵢ and Xᵢ₊₁ (its zone membership and clearness supply both
/// required forward relations).
pub fn find_maximal_c3_chain(t: &Tournament) -> Result<C3Chain, C3ChainError> {
    let full = VertexSet::full(t.n());
    let first = t.find_triangle_in(&full).ok_or(C3ChainError::TriangleFree)?;
    let mut triangles = vec![first];
    loop {
        let (zones, clear, unclear) = classify(t, &triangles);
        let mut extended = false;
        for (i, zone) in zones.iter().enumerate() {
            let zc = zone.intersection(&clear);
            if let Some(tri) = t.find_triangle_in(&zc) {
                triangles.insert(i, tri);
                extended = true;
                break;
            }
        }
        if !extended {
            debug_assert!(t.transitivity_check(&clear).is_ok());
            return Ok(C3Chain {
                triangles,
                zones,
                clear,
                unclear,
            });
        }
    }
}

// ---------------------------------------------------------------------------
// Endpoints of the maximal chain and the light 8-coloring
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LightEndpointsError {
    #[error(transparent)]
    Chain(#[from] C3ChainError),
    #[error("light structure violated ({0}); input has a heavy arc")]
    StructureViolation(String),
}

/// Chain endpoints a ∈ X₁, z ∈ X_ℓ with precomputed colorings:
/// N⁺(z) and N⁻(a) with three colors each, N⁻(a)∪N⁺(z) with five.
#[derive(Clone, Debug)]
pub struct LightEndpoints {
    n: usize,
    pub a: usize,
    pub z: usize,
    pub chain: C3Chain,
    in_a: PartialColoring,
    out_z: PartialColoring,
    union5: PartialColoring,
}

impl LightEndpoints {
    /// Budget-3 colorer for subsets of N⁺(z) or of N⁻(a).
    pub fn three_colorer(&self) -> EndpointSideColorer<'_> {
        EndpointSideColorer { le: self }
    }

    /// Budget-5 colorer for subsets of N⁻(a) ∪ N⁺(z).
    pub fn five_colorer(&self) -> EndpointUnionColorer<'_> {
        EndpointUnionColorer { le: self }
    }

    pub fn in_a_coloring(&self) -> &PartialColoring {
        &self.in_a
    }

    pub fn out_z_coloring(&self) -> &PartialColoring {
        &self.out_z
    }

    pub fn union_coloring(&self) -> &PartialColoring {
        &self.union5
    }
}

pub struct EndpointSideColorer<'a> {
    le: &'a LightEndpoints,
}

impl SubColorer for EndpointSideColorer<'_> {
    fn budget(&self) -> usize {
        3
    }

    fn color_subset(&self, _t: &Tournament, s: &VertexSet) -> Option<PartialColoring> {
        for side in [&self.le.out_z, &self.le.in_a] {
            if s.is_subset_of(&side.domain(self.le.n)) {
                return Some(side.restrict(s));
            }
        }
        None
    }

    fn subset_closed(&self) -> bool {
        true
    }
}

pub struct EndpointUnionColorer<'a> {
    le: &'a LightEndpoints,
}

impl SubColorer for EndpointUnionColorer<'_> {
    fn budget(&self) -> usize {
        5
    }

    fn color_subset(&self, _t: &Tournament, s: &VertexSet) -> Option<PartialColoring> {
        if s.is_subset_of(&self.le.union5.domain(self.le.n)) {
            Some(self.le.union5.restrict(s))
        } else {
            None
        }
    }

    fn subset_closed(&self) -> bool {
        true
    }
}

/// Builds the maximal-chain endpoint structure. `a` is the least vertex of
/// X₁ (cycle a→b→c→a) and `z` the closing vertex of X_ℓ (cycle x→y→z→x).
///
/// The colorings come from the containments the chain forces in a light
/// tournament: (N⁻(a)∩U)∪{c} ⊆ N(ab)∪N(bc), (N⁺(z)∩U)∪{x} ⊆ N(xy)∪N(yz),
/// and the clear parts are transitive. A vertex escaping those buckets
/// witnesses a heavy arc and yields `StructureViolation`.
pub fn light_endpoints(t: &Tournament) -> Result<LightEndpoints, LightEndpointsError> {
    let chain = find_maximal_c3_chain(t)?;
    let n = t.n();
    let [a, b, c] = chain.triangles[0];
    let [x, y, z] = *chain.triangles.last().expect("nonempty chain");

    let n_ab = t.arc_neighborhood(a, b).expect("triangle arc");
    let n_bc = t.arc_neighborhood(b, c).expect("triangle arc");
    let n_xy = t.arc_neighborhood(x, y).expect("triangle arc");
    let n_yz = t.arc_neighborhood(y, z).expect("triangle arc");

    let in_a_set = t.in_set(a);
    let out_z_set = t.out_set(z);

    let a_side = |v: usize| -> Result<u32, LightEndpointsError> {
        if chain.clear.contains(v) {
            Ok(2)
        } else if chain.unclear.contains(v) || v == c {
            if n_ab.contains(v) {
                Ok(0)
            } else if n_bc.contains(v) {
                Ok(1)
            } else {
                Err(LightEndpointsError::StructureViolation(format!(
                    "vertex {v} of N-({a}) outside N({a}{b}) ∪ N({b}{c})"
                )))
            }
        } else {
            Err(LightEndpointsError::StructureViolation(format!(
                "chain vertex {v} other than {c} inside N-({a})"
            )))
        }
    };
    let z_side = |v: usize| -> Result<u32, LightEndpointsError> {
        if chain.clear.contains(v) {
            Ok(2)
        } else if chain.unclear.contains(v) || v == x {
            if n_xy.contains(v) {
                Ok(0)
            } else if n_yz.contains(v) {
                Ok(1)
            } else {
                Err(LightEndpointsError::StructureViolation(format!(
                    "vertex {v} of N+({z}) outside N({x}{y}) ∪ N({y}{z})"
                )))
            }
        } else {
            Err(LightEndpointsError::StructureViolation(format!(
                "chain vertex {v} other than {x} inside N+({z})"
            )))
        }
    };

    let mut in_a = PartialColoring::new();
    for v in in_a_set.iter() {
        in_a.assign(v, a_side(v)?);
    }
    let mut out_z = PartialColoring::new();
    for v in out_z_set.iter() {
        out_z.assign(v, z_side(v)?);
    }

    // union: a-side buckets 0/1, z-side buckets 2/3, clear part 4
    let mut union5 = PartialColoring::new();
    for v in in_a_set.union(&out_z_set).iter() {
        let color = if in_a_set.contains(v) {
            match a_side(v)? {
                2 => 4,
                col => col,
            }
        } else {
            match z_side(v)? {
                2 => 4,
                col => col + 2,
            }
        };
        union5.assign(v, color);
    }

    Ok(LightEndpoints {
        n,
        a,
        z,
        chain,
        in_a,
        out_z,
        union5,
    })
}

/// Colors a light tournament with at most eight colors.
///
/// Per strongly connected component: if the shortest path z→a has length
/// ≥ 4 the component has a (3,1)-vertex chain (seven colors); otherwise
/// S = N⁻(a)∪N⁺(z) takes five colors and everything else lies in an arc
/// zone of the short path, each zone transitive (three more colors).
pub fn color_light_8(t: &Tournament) -> Result<Coloring, HeavyArc> {
    is_light(t)?;
    let coloring = color_components(t, |tc, _map| -> Result<Coloring, std::convert::Infallible> {
        let full = VertexSet::full(tc.n());
        if !tc.has_triangle_in(&full) {
            return Ok(Coloring::uniform(tc.n(), 0));
        }
        let le = light_endpoints(tc).expect("light strongly connected component with a triangle");
        let chain = build_vertex_chain(tc, le.z, le.a).expect("strongly connected component");
        if chain.k() >= 4 {
            let coloring = color_via_chain(tc, &chain, &le.three_colorer(), &TransitiveColorer)
                .expect("endpoint colorings cover their zones");
            Ok(coloring)
        } else {
            let decomp = crate::decomposition::build_path_decomposition(tc, &chain);
            let s = tc.in_set(le.a).union(&tc.out_set(le.z));
            let mut total = le.union_coloring().clone();
            for v in 0..tc.n() {
                if s.contains(v) {
                    continue;
                }
                let zone = decomp.zone_of(v).expect("zones cover all vertices");
                debug_assert!(zone >= 1 && zone <= chain.k());
                total.assign(v, 4 + zone as u32);
            }
            Ok(total.into_total(tc.n()))
        }
    });
    Ok(coloring.expect("infallible"))
}

/// The hero family: H₀ a single vertex, H_{k+1} = Δ(H_k, 1, 1). H₁ = C₃
/// and H₂ = Δ(C₃,1,1), whose absence characterizes light tournaments.
pub fn hero_hk(k: usize) -> Tournament {
    let mut t = single_vertex();
    for _ in 0..k {
        t = delta_compose(&t, &single_vertex(), &single_vertex());
    }
    t
}

//! Acceptance suite: one test per criterion, each ending in a printed PASS
//! line (visible with --nocapture). Tolerances are exact and pinned here.

use dicolor::bench::{bench_suite, strip_timings, Suite};
use dicolor::coloring::{
    color_2col_10, color_3col_sqrt, color_3col_via_graph, color_kcol_recursive,
    DefaultGraphColorer,
};
use dicolor::decomposition::{
    build_path_decomposition, build_vertex_chain, color_via_chain, greedy_transitive_partition,
    validate_chain, GreedyTransitiveColorer,
};
use dicolor::formats::{serialize, Instance};
use dicolor::generators::{light_sampler, paley, planted_k_colorable, random_tournament};
use dicolor::hypergraph::Hypergraph3;
use dicolor::light::{color_light_2col_5, color_light_8, hero_hk, is_light, light_partition};
use dicolor::oracle::{self, Search, DEFAULT_BUDGET};
use dicolor::reductions::{
    backedge_step, blowup_block_coloring, gadget_amplify, hardness_tower,
    hyper_to_tournament_basic, ramsey_blowup, s_chain, SeededBipartiteSource,
};
use dicolor::tournament::{cyclic_triangle, single_vertex, transitive, Tournament};
use dicolor::vset::VertexSet;
use dicolor::Graph;

fn chi(t: &Tournament) -> usize {
    oracle::exact_chromatic(t, DEFAULT_BUDGET)
        .found()
        .expect("within budget")
        .chi
}

#[test]
fn criterion_01_known_values() {
    let p7 = paley(7).unwrap();
    let p11 = paley(11).unwrap();
    assert_eq!(chi(&p7), 3);
    assert_eq!(chi(&p11), 4);
    assert_eq!(chi(&cyclic_triangle()), 2);
    assert_eq!(chi(&transitive(10)), 1);
    for i in 1..=4 {
        assert_eq!(chi(&s_chain(i)), i, "s_chain({i})");
    }
    assert!(is_light(&p7).is_ok());
    assert!(is_light(&p11).is_err());
    assert!(is_light(&hero_hk(2)).is_err());
    println!("criterion 01 (known oracle values): PASS");
}

const TWO_COL_SIZES: [usize; 4] = [20, 50, 100, 200];
const TWO_COL_SEEDS: u64 = 50;

#[test]
fn criterion_02_ten_coloring_two_colorable() {
    for &n in &TWO_COL_SIZES {
        for seed in 0..TWO_COL_SEEDS {
            let (t, _) = planted_k_colorable(n, 2, seed).unwrap();
            let c = color_2col_10(&t)
                .unwrap_or_else(|_| panic!("2-colorable instance must color (n={n}, seed={seed})"));
            assert!(c.palette_size() <= 10, "palette {} > 10", c.palette_size());
            assert_eq!(t.verify_coloring(&c), Ok(()));
        }
    }
    println!("criterion 02 (ten colors on 2-colorable, 100% of 200 runs): PASS");
}

#[test]
fn criterion_03_five_coloring_light_parts() {
    for &n in &TWO_COL_SIZES {
        for seed in 0..TWO_COL_SEEDS {
            let (t, _) = planted_k_colorable(n, 2, seed).unwrap();
            let (s1, s2) = light_partition(&t).expect("2-colorable: heavy graph bipartite");
            for part in [s1, s2] {
                if part.is_empty() {
                    continue;
                }
                let (sub, _) = t.induced(&part).unwrap();
                let c = color_light_2col_5(&sub).expect("light 2-colorable part");
                assert!(c.palette_size() <= 5);
                assert_eq!(sub.verify_coloring(&c), Ok(()));
            }
        }
    }
    println!("criterion 03 (five colors on both light parts, all verified): PASS");
}

#[test]
fn criterion_04_eight_coloring_light() {
    let p7 = paley(7).unwrap();
    let c = color_light_8(&p7).unwrap();
    assert_eq!(p7.verify_coloring(&c), Ok(()));
    assert!(c.palette_size() <= 8);
    assert!(c.palette_size() >= 3, "chi(P7)=3 forces at least 3 colors");

    for i in 0..20u64 {
        let n = 20 + 2 * i as usize; // 20..=58
        let t = light_sampler(n, i, 200).expect("sampler finds light instances");
        let c = color_light_8(&t).expect("light input");
        assert!(c.palette_size() <= 8, "palette {} > 8 at n={n}", c.palette_size());
        assert_eq!(t.verify_coloring(&c), Ok(()));
    }
    println!("criterion 04 (eight colors on light instances, all verified): PASS");
}

#[test]
fn criterion_05_decomposition_properties() {
    let mut built = 0u32;
    let mut seed = 0u64;
    while built < 1000 {
        seed += 1;
        let n = 6 + (seed as usize * 17) % 55; // 6..=60
        let t = random_tournament(n, seed);
        if t.scc_decomposition().len() != 1 {
            continue;
        }
        let u = (seed as usize).wrapping_mul(13) % n;
        let w = (seed as usize).wrapping_mul(31) % n;
        if u == w {
            continue;
        }
        let chain = build_vertex_chain(&t, u, w).expect("strongly connected");
        assert!(validate_chain(&t, &chain).is_ok(), "no-shortcut violated");

        let d = build_path_decomposition(&t, &chain);
        let mut union = VertexSet::empty(n);
        for z in &d.zones {
            assert!(union.is_disjoint_from(z), "zones must be disjoint");
            union.union_with(z);
        }
        assert_eq!(union, VertexSet::full(n), "zones must cover V");
        for (i, zi) in d.zones.iter().enumerate() {
            for zj in d.zones.iter().skip(i + 5) {
                for a in zi.iter() {
                    for b in zj.iter() {
                        assert!(t.has_arc(b, a), "forward arc across >= 5 zones");
                    }
                }
            }
        }

        // chain coloring respects c+4d / c+3d with greedy zone colorers
        let k = chain.k();
        let joint = d.zones[0].union(&d.zones[k + 1]);
        let need_d = (1..=k)
            .map(|i| greedy_transitive_partition(&t, &d.zones[i]).len())
            .max()
            .unwrap_or(0)
            .max(1);
        let need_c = if k <= 3 {
            greedy_transitive_partition(&t, &joint).len().max(need_d)
        } else {
            greedy_transitive_partition(&t, &d.zones[0])
                .len()
                .max(greedy_transitive_partition(&t, &d.zones[k + 1]).len())
                .max(need_d)
        };
        let coloring = color_via_chain(
            &t,
            &chain,
            &GreedyTransitiveColorer { budget: need_c },
            &GreedyTransitiveColorer { budget: need_d },
        )
        .expect("greedy budgets fit by construction");
        assert_eq!(t.verify_coloring(&coloring), Ok(()));
        let bound = if k <= 3 { need_c + 3 * need_d } else { need_c + 4 * need_d };
        assert!(
            coloring.palette_size() <= bound,
            "palette {} exceeds bound {bound}",
            coloring.palette_size()
        );
        built += 1;
    }
    println!("criterion 05 (1000 chains: cover, long-arc, no-shortcut, c+4d): PASS");
}

#[test]
fn criterion_06_graph_reduction_bounds() {
    // 20 planted 3-colorable instances, n <= 150
    for (i, &n) in [60usize, 90, 120, 150].iter().enumerate() {
        for seed in 0..5u64 {
            let (t, _) = planted_k_colorable(n, 3, 100 * i as u64 + seed).unwrap();
            let r = color_3col_via_graph(&t, &DefaultGraphColorer)
                .expect("3-colorable input must color");
            assert_eq!(t.verify_coloring(&r.coloring), Ok(()));
            assert!(
                r.coloring.palette_size() <= 50 * r.graph_palette,
                "palette {} > 50·{}",
                r.coloring.palette_size(),
                r.graph_palette
            );
        }
    }
    // 10 planted 2-colorable instances: F must be empty and palette <= 50
    for seed in 0..10u64 {
        let (t, _) = planted_k_colorable(60, 2, seed).unwrap();
        let r = color_3col_via_graph(&t, &DefaultGraphColorer).unwrap();
        assert_eq!(r.failed_arcs(), 0, "every arc neighborhood of a 2-colorable \
             tournament is 2-colorable, so the ten-coloring must succeed");
        assert!(r.coloring.palette_size() <= 50);
        assert_eq!(t.verify_coloring(&r.coloring), Ok(()));
    }
    // k = 4 recursion on 5 planted 4-colorable instances, n <= 100
    for (seed, &n) in [40usize, 55, 70, 85, 100].iter().enumerate() {
        let (t, _) = planted_k_colorable(n, 4, seed as u64).unwrap();
        let r = color_kcol_recursive(&t, 4, &DefaultGraphColorer)
            .expect("4-colorable input must color");
        assert_eq!(t.verify_coloring(&r.coloring), Ok(()));
        assert!(
            r.coloring.palette_size() <= r.bound,
            "palette {} > 5·f(3)·g bound {}",
            r.coloring.palette_size(),
            r.bound
        );
    }
    println!("criterion 06 (graph reduction: 50·g, F=∅ on 2-colorable, k=4 bound): PASS");
}

#[test]
fn criterion_07_sqrt_bound() {
    for &n in &[100usize, 300] {
        let cap = (40.0 * (n as f64).sqrt()).floor() as usize;
        for seed in 0..20u64 {
            let (t, _) = planted_k_colorable(n, 3, seed).unwrap();
            let c = color_3col_sqrt(&t).expect("3-colorable input");
            assert_eq!(t.verify_coloring(&c), Ok(()));
            assert!(
                c.palette_size() <= cap,
                "palette {} > 40·sqrt({n}) = {cap}",
                c.palette_size()
            );
        }
    }
    println!("criterion 07 (sqrt coloring within 40·sqrt(n) on 40 runs): PASS");
}

#[test]
fn criterion_08_reduction_equivalence() {
    let mut corpus: Vec<Hypergraph3> = Vec::new();
    for n in 1..=5usize {
        let all = Hypergraph3::complete(n);
        let triples = all.edges();
        // all edge subsets of size <= 3
        let idx: Vec<usize> = (0..triples.len()).collect();
        for m in 0..=3usize.min(triples.len()) {
            for combo in combinations(&idx, m) {
                let edges: Vec<[usize; 3]> = combo.iter().map(|&i| triples[i]).collect();
                corpus.push(Hypergraph3::new(n, edges).unwrap());
            }
        }
    }
    corpus.push(Hypergraph3::complete(5));
    let cases = corpus.len();

    for h in &corpus {
        let h_colorable = match oracle::hypergraph_2colorable(h, DEFAULT_BUDGET) {
            Search::Found(c) => {
                assert!(h.is_proper_2coloring(&c));
                true
            }
            Search::Exhausted => false,
            Search::Budget => panic!("hypergraph oracle budget exceeded"),
        };
        let art = hyper_to_tournament_basic(h);
        assert_eq!(art.tournament.n(), 3 * h.m() + 3 + h.n(), "size formula");
        let t_colorable = match oracle::exact_k_colorable(&art.tournament, 2, DEFAULT_BUDGET) {
            Search::Found(c) => {
                assert_eq!(art.tournament.verify_coloring(&c), Ok(()));
                true
            }
            Search::Exhausted => false,
            Search::Budget => panic!("tournament oracle budget exceeded"),
        };
        assert_eq!(
            h_colorable,
            t_colorable,
            "equivalence failed on n={} m={}",
            h.n(),
            h.m()
        );
    }
    println!("criterion 08 (reduction equivalence on {cases} hypergraphs): PASS");
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rest in combinations(&items[1..], k - 1) {
        let mut v = vec![items[0]];
        v.extend(rest);
        out.push(v);
    }
    out.extend(combinations(&items[1..], k));
    out
}

#[test]
fn criterion_09_gadget_claims() {
    // corpus with known sizes; chi computed by the oracle
    let corpus: Vec<Tournament> = vec![
        single_vertex(),
        transitive(3),
        cyclic_triangle(),
        hero_hk(2),
        s_chain(3),
        paley(7).unwrap(),
    ];
    let chis: Vec<usize> = corpus.iter().map(chi).collect();

    let mut claim15_hits = 0;
    let mut claim16_hits = 0;
    for (i1, r1) in corpus.iter().enumerate() {
        for (i2, r2) in corpus.iter().enumerate() {
            for (i3, r3) in corpus.iter().enumerate() {
                if r1.n() + r2.n() + r3.n() > 20 {
                    continue;
                }
                let (a, b, e) = (chis[i1], chis[i2], chis[i3]);
                let d = dicolor::tournament::delta_compose(r1, r2, r3);
                if e == a + b {
                    // chi(Δ) = a+b exactly
                    assert_eq!(chi(&d), a + b, "claim: Δ composition preserves a+b");
                    claim15_hits += 1;
                }
                if e < a + b {
                    // chi(Δ) >= e+1: no e-coloring exists
                    assert!(
                        oracle::exact_k_colorable(&d, e, DEFAULT_BUDGET).is_exhausted(),
                        "claim: Δ composition forces e+1 colors"
                    );
                    claim16_hits += 1;
                }
            }
        }
    }
    assert!(claim15_hits > 0 && claim16_hits > 0, "claims must materialize");

    // smallest amplification: chi = 2 on the 9-vertex result
    let one = single_vertex();
    let r = gadget_amplify(&one, &one, 1, 1, 2, 2).unwrap();
    assert_eq!(r.n(), 9);
    assert_eq!(chi(&r), 2);

    // tower level 3 of a single-edge hypergraph carries its 3-coloring
    let h = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
    let hcol = oracle::hypergraph_2colorable(&h, DEFAULT_BUDGET)
        .found()
        .unwrap();
    let (t3, planted) = hardness_tower(&h, 3, Some(&hcol)).unwrap();
    let planted = planted.expect("2-colorable source emits the coloring");
    assert_eq!(t3.verify_coloring(&planted), Ok(()));
    assert_eq!(planted.palette_size(), 3);
    println!(
        "criterion 09 (gadget claims: {claim15_hits} equality + {claim16_hits} lower-bound instances, amplify, tower): PASS"
    );
}

#[test]
fn criterion_10_backedge() {
    let s3 = s_chain(3);

    let u3 = backedge_step(&Graph::complete(3), &s3).unwrap();
    assert_eq!(u3.n(), 17);
    assert_eq!(chi(&u3), 3, "K3 backedge must be exactly 3-chromatic");

    let u4 = backedge_step(&Graph::complete(4), &s3).unwrap();
    assert_eq!(u4.n(), 25);
    match oracle::exact_k_colorable(&u4, 3, DEFAULT_BUDGET) {
        Search::Exhausted => {}
        Search::Found(_) => panic!("K4 backedge must not be 3-colorable"),
        Search::Budget => panic!("budget exceeded: propagation heuristic too weak"),
    }
    println!("criterion 10 (backedge: K3 gives chi=3, K4 breaks 3-colorability): PASS");
}

#[test]
fn criterion_11_ramsey_blowup() {
    let g = Graph::cycle(5); // chi = 3
    let block = 4;
    let t = ramsey_blowup(&g, block, &SeededBipartiteSource { seed: 9 }).unwrap();
    assert_eq!(t.n(), 20);

    // blocks transitive
    for b in 0..5 {
        let set = VertexSet::from_members(t.n(), b * block..(b + 1) * block);
        assert!(t.transitivity_check(&set).is_ok());
    }
    // non-edge block pairs fully forward
    for i in 0..5usize {
        for j in i + 1..5 {
            if g.has_edge(i, j) {
                continue;
            }
            for p in i * block..(i + 1) * block {
                for q in j * block..(j + 1) * block {
                    assert!(t.has_arc(p, q));
                }
            }
        }
    }
    // induced block coloring from an exact graph coloring verifies
    let (gchi, gcolors) = oracle::graph_chromatic(&g, DEFAULT_BUDGET).found().unwrap();
    assert_eq!(gchi, 3);
    let block_coloring = blowup_block_coloring(&gcolors, block);
    assert_eq!(t.verify_coloring(&block_coloring), Ok(()));
    assert_eq!(block_coloring.palette_size(), 3);
    println!("criterion 11 (ramsey blowup structure + induced block coloring): PASS");
}

#[test]
fn criterion_12_determinism() {
    // bench CSVs byte-identical after stripping timings, across thread counts
    let a = strip_timings(&bench_suite(Suite::TwoCol, &[20, 40], 5, 7, 1));
    let b = strip_timings(&bench_suite(Suite::TwoCol, &[20, 40], 5, 7, 4));
    assert_eq!(a, b);
    let a = strip_timings(&bench_suite(Suite::Light, &[15], 5, 3, 1));
    let b = strip_timings(&bench_suite(Suite::Light, &[15], 5, 3, 2));
    assert_eq!(a, b);
    let a = strip_timings(&bench_suite(Suite::ThreeCol, &[30], 5, 1, 1));
    let b = strip_timings(&bench_suite(Suite::ThreeCol, &[30], 5, 1, 3));
    assert_eq!(a, b);

    // generator and algorithm outputs byte-identical across runs
    for seed in [0u64, 1, 2] {
        let t1 = random_tournament(60, seed);
        let t2 = random_tournament(60, seed);
        assert_eq!(
            serialize(&Instance::Tournament(t1.clone())),
            serialize(&Instance::Tournament(t2))
        );
        let (p1, c1) = planted_k_colorable(60, 2, seed).unwrap();
        let (p2, c2) = planted_k_colorable(60, 2, seed).unwrap();
        assert!(p1 == p2 && c1 == c2);
        let col1 = color_2col_10(&p1).unwrap();
        let col2 = color_2col_10(&p2).unwrap();
        assert_eq!(
            serialize(&Instance::Coloring(col1)),
            serialize(&Instance::Coloring(col2))
        );
        let s1 = color_3col_sqrt(&t1).map(|c| serialize(&Instance::Coloring(c)));
        let s2 = color_3col_sqrt(&random_tournament(60, seed))
            .map(|c| serialize(&Instance::Coloring(c)));
        match (s1, s2) {
            (Ok(x), Ok(y)) => assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            _ => panic!("nondeterministic sqrt outcome"),
        }
    }
    println!("criterion 12 (determinism of suites and outputs): PASS");
}

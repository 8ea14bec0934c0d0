//! End-to-end runs of the binary: command wiring, file round-trips, and
//! the exit-code contract (0 ok, 1 invalid, 2 certificate, 3 budget,
//! 4 usage).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dicolor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("dicolor-test-{}-{name}", std::process::id()));
    p
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_color_verify_pipeline() {
    let t = tmp("p7.t");
    let c = tmp("p7.col");

    let out = run(&["generate", "--kind", "paley", "--n", "7", "--out", path_str(&t)]);
    assert!(out.status.success());

    let out = run(&["color", "--in", path_str(&t), "--alg", "light8", "--out", path_str(&c)]);
    assert!(out.status.success());

    let out = run(&["verify", "--in", path_str(&t), "--coloring", path_str(&c)]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("valid"));

    // coloring respects the eight-color bound
    let body = std::fs::read_to_string(&c).unwrap();
    let k: usize = body
        .lines()
        .next()
        .unwrap()
        .split_whitespace()
        .nth(3)
        .unwrap()
        .parse()
        .unwrap();
    assert!(k <= 8);
}

#[test]
fn two10_on_planted_instance() {
    let t = tmp("k2.t");
    let c = tmp("k2.col");
    assert!(run(&[
        "generate", "--kind", "kcol", "--n", "50", "--k", "2", "--seed", "7", "--out",
        path_str(&t)
    ])
    .status
    .success());
    assert!(run(&["color", "--in", path_str(&t), "--alg", "two10", "--out", path_str(&c)])
        .status
        .success());
    assert!(run(&["verify", "--in", path_str(&t), "--coloring", path_str(&c)])
        .status
        .success());
}

#[test]
fn chi_prints_four_for_p11() {
    let t = tmp("p11.t");
    assert!(run(&["generate", "--kind", "paley", "--n", "11", "--out", path_str(&t)])
        .status
        .success());
    let out = run(&["chi", "--in", path_str(&t)]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4");
}

#[test]
fn certificate_emission_and_check() {
    let t = tmp("p11b.t");
    let cert = tmp("p11b.cert");
    assert!(run(&["generate", "--kind", "paley", "--n", "11", "--out", path_str(&t)])
        .status
        .success());
    let out = run(&["color", "--in", path_str(&t), "--alg", "two10", "--out", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(2), "certificate outcome exits 2");
    let body = std::fs::read_to_string(&cert).unwrap();
    assert!(body.starts_with("p cert "));

    let out = run(&["verify", "--in", path_str(&t), "--cert", path_str(&cert)]);
    assert!(out.status.success());
}

#[test]
fn verify_rejects_bad_coloring() {
    let t = tmp("c3.t");
    let c = tmp("c3.col");
    std::fs::write(&t, "p tournament 3\n010\n001\n100\n").unwrap();
    std::fs::write(&c, "p coloring 3 1\n0 0 0\n").unwrap();
    let out = run(&["verify", "--in", path_str(&t), "--coloring", path_str(&c)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("monochromatic triangle"));
}

#[test]
fn exit_codes_for_bad_input_and_usage() {
    // malformed file: invalid input (1)
    let bad = tmp("bad.t");
    std::fs::write(&bad, "p tournament 2\n01\n01\n").unwrap();
    let out = run(&["analyze", "--in", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(1));

    // unknown flag / missing args: usage (4)
    let out = run(&["color", "--nope"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["generate", "--kind", "nope", "--n", "4"]);
    assert_eq!(out.status.code(), Some(4));

    // tiny budget: exit 3
    let t = tmp("p11c.t");
    assert!(run(&["generate", "--kind", "paley", "--n", "11", "--out", path_str(&t)])
        .status
        .success());
    let out = run(&["chi", "--in", path_str(&t), "--budget", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_fields() {
    let t = tmp("p7a.t");
    assert!(run(&["generate", "--kind", "paley", "--n", "7", "--out", path_str(&t)])
        .status
        .success());
    let out = run(&["analyze", "--in", path_str(&t)]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    for needle in [
        "n: 7",
        "arcs: 21",
        "sccs: 1",
        "light: true",
        "heavy_arcs: 0",
        "transitive: false",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in {text}");
    }
}

#[test]
fn reduce_commands() {
    let h = tmp("edge.h3");
    let t = tmp("basic.t");
    std::fs::write(&h, "p h3 3 1\n0 1 2\n").unwrap();

    assert!(run(&["reduce", "--kind", "h3-basic", "--in", path_str(&h), "--out", path_str(&t)])
        .status
        .success());
    let text = std::fs::read_to_string(&t).unwrap();
    assert!(text.starts_with("p tournament 9\n"), "3m+3+n = 9");

    let out = run(&["reduce", "--kind", "s-chain", "--i", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("p tournament 7\n"));

    // graph tower within cap, and the cap tripping as invalid input
    let g = tmp("k3.g");
    std::fs::write(&g, "p graph 3 3\n0 1\n0 2\n1 2\n").unwrap();
    let out = run(&["reduce", "--kind", "graph-tower", "--graph", path_str(&g), "--k", "3", "--l", "4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("p tournament 17\n"));
    let out = run(&[
        "reduce", "--kind", "graph-tower", "--graph", path_str(&g), "--k", "3", "--l", "12",
        "--cap", "1000",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // gap + decode of a planted-style coloring roundtrip via the oracle CLI
    let gap = tmp("gap.t");
    assert!(run(&["reduce", "--kind", "h3-gap", "--in", path_str(&h), "--out", path_str(&gap)])
        .status
        .success());
    assert!(std::fs::read_to_string(&gap).unwrap().starts_with("p tournament 15\n"));
}

#[test]
fn reduce_delta_backedge_ramsey_tower() {
    let c3 = tmp("c3a.t");
    std::fs::write(&c3, "p tournament 3\n010\n001\n100\n").unwrap();

    // Δ(C3, C3, C3): 9 vertices
    let out = run(&[
        "reduce", "--kind", "delta", "--in", path_str(&c3), "--in2", path_str(&c3), "--in3",
        path_str(&c3),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("p tournament 9\n"));

    // backedge over K3 with C3 copies: 2·3 + 3 = 9
    let g = tmp("k3b.g");
    std::fs::write(&g, "p graph 3 3\n0 1\n0 2\n1 2\n").unwrap();
    let out = run(&[
        "reduce", "--kind", "backedge", "--graph", path_str(&g), "--in", path_str(&c3),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("p tournament 9\n"));

    // ramsey blowup: 3 blocks of 2
    let out = run(&[
        "reduce", "--kind", "ramsey", "--graph", path_str(&g), "--block-size", "2", "--seed", "4",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("p tournament 6\n"));

    // tower level 2 for a single hyperedge: 15 vertices, planted note on stderr
    let h = tmp("edge2.h3");
    std::fs::write(&h, "p h3 3 1\n0 1 2\n").unwrap();
    let out = run(&["reduce", "--kind", "tower", "--in", path_str(&h), "--k", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("p tournament 15\n"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("planted coloring"));
}

#[test]
fn auto_algorithm_always_succeeds() {
    for (kind, n, extra) in [("random", "30", None), ("kcol", "24", Some(["--k", "3"]))] {
        let t = tmp(&format!("auto-{kind}.t"));
        let c = tmp(&format!("auto-{kind}.col"));
        let mut args = vec!["generate", "--kind", kind, "--n", n, "--seed", "11"];
        if let Some(kv) = extra {
            args.extend(kv);
        }
        args.extend(["--out", path_str(&t)]);
        assert!(bin().args(&args).status().unwrap().success());
        assert!(run(&["color", "--in", path_str(&t), "--alg", "auto", "--out", path_str(&c)])
            .status
            .success());
        assert!(run(&["verify", "--in", path_str(&t), "--coloring", path_str(&c)])
            .status
            .success());
    }
}

#[test]
fn light2col5_and_sqrt3_paths() {
    // light2col5 on a light 2-colorable instance
    let t = tmp("lp.t");
    let c = tmp("lp.col");
    assert!(run(&["generate", "--kind", "light", "--n", "24", "--seed", "2", "--out", path_str(&t)])
        .status
        .success());
    let out = run(&["color", "--in", path_str(&t), "--alg", "light2col5", "--out", path_str(&c)]);
    // either a coloring (exit 0) or a certificate (exit 2); both must check out
    match out.status.code() {
        Some(0) => {
            assert!(run(&["verify", "--in", path_str(&t), "--coloring", path_str(&c)])
                .status
                .success());
        }
        Some(2) => {
            assert!(run(&["verify", "--in", path_str(&t), "--cert", path_str(&c)])
                .status
                .success());
        }
        other => panic!("unexpected exit {other:?}"),
    }
    // light2col5 refuses non-light input
    let p11 = tmp("lp11.t");
    assert!(run(&["generate", "--kind", "paley", "--n", "11", "--out", path_str(&p11)])
        .status
        .success());
    let out = run(&["color", "--in", path_str(&p11), "--alg", "light2col5"]);
    assert_eq!(out.status.code(), Some(1));

    // sqrt3 on a planted 3-colorable instance
    let t3 = tmp("sq.t");
    let c3 = tmp("sq.col");
    assert!(run(&[
        "generate", "--kind", "kcol", "--n", "60", "--k", "3", "--seed", "5", "--out",
        path_str(&t3)
    ])
    .status
    .success());
    assert!(run(&["color", "--in", path_str(&t3), "--alg", "sqrt3", "--out", path_str(&c3)])
        .status
        .success());
    assert!(run(&["verify", "--in", path_str(&t3), "--coloring", path_str(&c3)])
        .status
        .success());
}

#[test]
fn bench_csv_deterministic_modulo_timing() {
    let strip = |s: &str| -> String {
        s.lines()
            .map(|l| l.rsplit_once(',').map(|(h, _)| h.to_string()).unwrap_or_default())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = run(&["bench", "--suite", "two-col", "--n-list", "15,25", "--count", "3", "--seed", "5"]);
    let b = run(&["bench", "--suite", "two-col", "--n-list", "15,25", "--count", "3", "--seed", "5"]);
    assert!(a.status.success() && b.status.success());
    let (sa, sb) = (
        strip(&String::from_utf8_lossy(&a.stdout)),
        strip(&String::from_utf8_lossy(&b.stdout)),
    );
    assert_eq!(sa, sb);
    assert!(sa.contains("summary,6,two-col,"));

    // THREADS override changes nothing but timing
    let c = bin()
        .args(["bench", "--suite", "two-col", "--n-list", "15,25", "--count", "3", "--seed", "5"])
        .env("THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(strip(&String::from_utf8_lossy(&c.stdout)), sa);
}

#[test]
fn roundtrip_via_files() {
    let t = tmp("rt.t");
    assert!(run(&["generate", "--kind", "random", "--n", "17", "--seed", "3", "--out", path_str(&t)])
        .status
        .success());
    let text = std::fs::read_to_string(&t).unwrap();
    // parse back and re-serialize through the analyze path: identical bytes
    let t2 = tmp("rt2.t");
    std::fs::write(&t2, &text).unwrap();
    let out1 = run(&["analyze", "--in", path_str(&t)]);
    let out2 = run(&["analyze", "--in", path_str(&t2)]);
    assert_eq!(out1.stdout, out2.stdout);
}

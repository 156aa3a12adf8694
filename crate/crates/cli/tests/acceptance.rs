//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use kodag::cobweb::{
    chain_x, chain_y, cobweb_edges, order_relation, CobwebTruncation, LevelSequence,
};
use kodag::digraph::{
    chain_intersection, conjugate_chain, hasse_from_relation, is_admissible, is_regular,
    transitive_reduction, Chain, Digraph,
};
use kodag::oracle::{brute_force_order, brute_force_transitive_reduction, verify_theorem1};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

const SEQUENCES: [&str; 4] = ["fib", "const:1", "const:3", "nat"];
const SKIP_ABOVE_VERTICES: usize = 5_000;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn truncation(seq: &str, levels: usize) -> Result<CobwebTruncation, String> {
    let sequence = LevelSequence::parse(seq).map_err(|e| e.to_string())?;
    CobwebTruncation::new(sequence, levels).map_err(|e| format!("{seq} L={levels}: {e}"))
}

fn labels(t: &CobwebTruncation, c: &Chain) -> Vec<(usize, usize)> {
    c.order().iter().map(|&i| t.vertex(i).into()).collect()
}

fn explicit_realizer_chains() -> Outcome {
    let start = Instant::now();
    let t = truncation("fib", 5)?;
    let expected_x = [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (2, 3),
        (1, 4),
        (2, 4),
        (3, 4),
        (1, 5),
        (2, 5),
        (3, 5),
        (4, 5),
        (5, 5),
    ];
    let expected_y = [
        (1, 0),
        (1, 1),
        (1, 2),
        (2, 3),
        (1, 3),
        (3, 4),
        (2, 4),
        (1, 4),
        (5, 5),
        (4, 5),
        (3, 5),
        (2, 5),
        (1, 5),
    ];
    let x = labels(&t, &chain_x(&t));
    let y = labels(&t, &chain_y(&t));
    ensure(x == expected_x, || format!("chain X = {x:?}"))?;
    ensure(y == expected_y, || format!("chain Y = {y:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("13-element X and Y match exactly in {elapsed:?}"))
}

fn realizer_grid() -> Outcome {
    let mut checked = 0;
    let mut skipped = Vec::new();
    for seq in SEQUENCES {
        for levels in 0..=7 {
            let t = truncation(seq, levels)?;
            if t.vertex_count() > SKIP_ABOVE_VERTICES {
                skipped.push(format!("{seq} L={levels}"));
                continue;
            }
            let r = chain_intersection(&chain_x(&t), &chain_y(&t)).map_err(|e| e.to_string())?;
            ensure(r == order_relation(&t), || {
                format!("{seq} L={levels}: X ∩ Y ≠ order")
            })?;
            let hasse = hasse_from_relation(&r).map_err(|e| e.to_string())?;
            ensure(hasse == cobweb_edges(&t), || {
                format!("{seq} L={levels}: Hasse ≠ edges")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} truncations exact, skipped: {skipped:?}"))
}

fn regularity() -> Outcome {
    let mut checked = 0;
    for seq in SEQUENCES {
        for levels in 0..=7 {
            let g = cobweb_edges(&truncation(seq, levels)?);
            ensure(is_regular(&g) == Ok(true), || {
                format!("{seq} L={levels} not regular")
            })?;
            checked += 1;
        }
    }
    let triangle = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    ensure(is_regular(&triangle) == Ok(false), || {
        "shortcut triangle reported regular".into()
    })?;
    Ok(format!("{checked} cobwebs regular, shortcut triangle not"))
}

fn admissibility() -> Outcome {
    let mut checked = 0;
    for seq in SEQUENCES {
        for levels in 0..=6 {
            let t = truncation(seq, levels)?;
            let ok = is_admissible(&chain_x(&t), &cobweb_edges(&t));
            ensure(ok == Ok(true), || format!("{seq} L={levels}: {ok:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("chain X admissible on {checked} truncations"))
}

fn conjugate_linkage() -> Outcome {
    let mut checked = 0;
    for seq in SEQUENCES {
        for levels in 0..=6 {
            let t = truncation(seq, levels)?;
            let y = conjugate_chain(&chain_x(&t), &cobweb_edges(&t)).map_err(|e| e.to_string())?;
            ensure(y == chain_y(&t), || {
                format!("{seq} L={levels}: conjugate ≠ Y")
            })?;
            checked += 1;
        }
    }
    Ok(format!("conjugate(X) = Y on {checked} truncations"))
}

fn dim2_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 1..=4 {
        let report = verify_theorem1(n).map_err(|e| e.to_string())?;
        ensure(report.counterexamples.is_empty(), || {
            format!("n={n}: {:?}", report.counterexamples)
        })?;
        counts.push(report.dags_checked);
    }
    ensure(counts[3] == 543, || {
        format!("n=4 checked {} DAGs", counts[3])
    })?;
    Ok(format!(
        "DAGs checked per n = {counts:?}, 0 counterexamples, {:?}",
        start.elapsed()
    ))
}

fn random_dag(rng: &mut StdRng, max_n: usize) -> Digraph {
    let n = rng.random_range(1..=max_n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.35) {
                arcs.push((perm[i], perm[j]));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

fn order_axiom_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x006b_6f64_6167);
    for _ in 0..200 {
        let n = rng.random_range(0..=9);
        let mut a: Vec<usize> = (0..n).collect();
        let mut b = a.clone();
        a.shuffle(&mut rng);
        b.shuffle(&mut rng);
        let (x, y) = (Chain::new(a).unwrap(), Chain::new(b).unwrap());
        let r = chain_intersection(&x, &y).map_err(|e| e.to_string())?;
        r.check_partial_order()
            .map_err(|e| format!("{x:?} ∩ {y:?}: {e}"))?;
    }
    for _ in 0..200 {
        let g = random_dag(&mut rng, 8);
        let order = brute_force_order(&g).map_err(|e| e.to_string())?;
        let hasse = hasse_from_relation(&order).map_err(|e| e.to_string())?;
        let reduction = transitive_reduction(&g).map_err(|e| e.to_string())?;
        let dfs_reduction = brute_force_transitive_reduction(&g).map_err(|e| e.to_string())?;
        ensure(hasse == reduction && hasse == dfs_reduction, || {
            format!("reduction mismatch on {:?}", g.arcs().collect::<Vec<_>>())
        })?;
    }
    Ok("200 chain pairs are partial orders; 200 DAGs: Hasse(order) = reduction".into())
}

fn kodag(args: &[&str]) -> Result<(Vec<u8>, bool), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_kodag"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.success()))
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let graph = path("fib5.txt");

    let (_, ok) = kodag(&["generate", "--seq", "fib", "--levels", "5", "--out", &graph])?;
    ensure(ok, || "generate failed".into())?;
    let text = std::fs::read_to_string(Path::new(&graph)).map_err(|e| e.to_string())?;
    ensure(text.starts_with("13 25\n"), || {
        format!("header {:?}", text.lines().next())
    })?;

    let (stdout, ok) = kodag(&["check", "--graph", &graph])?;
    let report: serde_json::Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    ensure(
        ok && report["dag"] == true && report["regular"] == true,
        || format!("check reported {report}"),
    )?;

    let dot_a = path("a.dot");
    let dot_b = path("b.dot");
    for out in [&dot_a, &dot_b] {
        let (_, ok) = kodag(&["export-dot", "--seq", "fib", "--levels", "5", "--out", out])?;
        ensure(ok, || "export-dot failed".into())?;
    }
    let a = std::fs::read(&dot_a).map_err(|e| e.to_string())?;
    let b = std::fs::read(&dot_b).map_err(|e| e.to_string())?;
    ensure(!a.is_empty() && a == b, || {
        "DOT output differs between runs".into()
    })?;
    Ok("generate -> check reports regular; export-dot byte-identical".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "AC1 explicit realizer chains (fib, L=5)",
            explicit_realizer_chains,
        ),
        (
            "AC2 X ∩ Y = order and Hasse = edges (grid L≤7)",
            realizer_grid,
        ),
        ("AC3 cobwebs regular, shortcut triangle not", regularity),
        ("AC4 chain X admissible (L≤6)", admissibility),
        ("AC5 conjugate(X) = Y (L≤6)", conjugate_linkage),
        (
            "AC6 brute-force dim-2 equivalence (n≤4)",
            dim2_oracle_equivalence,
        ),
        ("AC7 order-axiom property suite", order_axiom_suite),
        ("AC8 CLI round trip and determinism", cli_round_trip),
    ];
    let mut failures = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}

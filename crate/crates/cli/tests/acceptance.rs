//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any of them fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fxform_core::verify::{corpus_graphs, graph_from_mask, labeled_graph_count};
use fxform_core::{
    aux_edge_count_formula, aux_m1_formula, complement, f_complement_formula, f_formula, generate,
    index_set, oracle_f, predicted_degrees, transform, verify_corpus, CorpusMode, CorpusSpec,
    Family, Graph, Int, Signs, TransformKind, VerifyOptions,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn cube_sum(g: &Graph) -> Int {
    g.degrees().iter().map(|&d| (d as Int).pow(3)).sum()
}

fn exhaustive(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| (0..labeled_graph_count(n)).map(move |mask| graph_from_mask(n, mask)))
        .collect()
}

fn check_all<F>(corpus: &[Graph], what: &str, mut f: F) -> Outcome
where
    F: FnMut(&Graph) -> Result<usize, String>,
{
    let mut checks = 0;
    for g in corpus {
        checks += f(g).map_err(|e| format!("{what}: {e} on {}", fxform_core::to_graph6(g)))?;
    }
    Ok(format!("{} graphs, {checks} checks", corpus.len()))
}

fn identities(g: &Graph) -> Result<usize, String> {
    let idx = index_set(g);
    for k in TransformKind::ALL {
        let closed = f_formula(&idx, k).map_err(|e| e.to_string())?;
        let oracle = oracle_f(g, k).map_err(|e| e.to_string())?;
        if closed != oracle {
            return Err(format!("{k}: formula {closed} oracle {oracle}"));
        }
    }
    Ok(TransformKind::ALL.len())
}

fn complement_f(g: &Graph) -> Result<usize, String> {
    let closed = f_complement_formula(&index_set(g)).map_err(|e| e.to_string())?;
    let actual = cube_sum(&complement(g));
    if closed != actual {
        return Err(format!("formula {closed} actual {actual}"));
    }
    Ok(1)
}

fn aux(g: &Graph) -> Result<usize, String> {
    let idx = index_set(g);
    for s in Signs::AUX {
        let k = TransformKind::Xyz(s);
        let t = transform(g, k).map_err(|e| e.to_string())?;
        let m = aux_edge_count_formula(&idx, k).map_err(|e| e.to_string())?;
        let m1 = aux_m1_formula(&idx, k).map_err(|e| e.to_string())?;
        let actual_m1: Int = t.degrees().iter().map(|&d| (d * d) as Int).sum();
        if m != t.m() as Int || m1 != actual_m1 {
            return Err(format!(
                "{k}: edges {m} vs {}, M1 {m1} vs {actual_m1}",
                t.m()
            ));
        }
    }
    Ok(2 * Signs::AUX.len())
}

fn degree_rules(g: &Graph) -> Result<usize, String> {
    let mut checks = 0;
    for k in TransformKind::ALL {
        let t = transform(g, k).map_err(|e| e.to_string())?;
        let predicted = predicted_degrees(g, k).degree_vector();
        for (v, &d) in t.degrees().iter().enumerate() {
            if predicted[v] != d as u64 {
                return Err(format!(
                    "{k}: vertex {v} predicted {} actual {d}",
                    predicted[v]
                ));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn pairing(g: &Graph) -> Result<usize, String> {
    for s in Signs::AUX {
        let a = transform(g, TransformKind::Xyz(s)).map_err(|e| e.to_string())?;
        let b = transform(g, TransformKind::Xyz(s.opposite())).map_err(|e| e.to_string())?;
        if b != complement(&a) {
            return Err(format!("{} is not the complement of {s}", s.opposite()));
        }
    }
    Ok(Signs::AUX.len())
}

fn c1(corpus: &[Graph]) -> Outcome {
    if corpus.len() != 1099 {
        return Err(format!("corpus has {} graphs", corpus.len()));
    }
    let start = Instant::now();
    let summary = check_all(corpus, "identity", identities)?;
    let took = start.elapsed();
    if took > Duration::from_secs(10) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("{summary} in {} ms", took.as_millis()))
}

fn random_spec() -> CorpusSpec {
    CorpusSpec::new(CorpusMode::Random {
        count: 500,
        n_min: 6,
        n_max: 12,
        seed: 2024,
    })
}

fn c6() -> Outcome {
    let graphs = corpus_graphs(&random_spec()).map_err(|e| e.to_string())?;
    if graphs.len() != 500 || graphs.iter().any(|g| !(6..=12).contains(&g.n())) {
        return Err("corpus does not have 500 graphs with 6 <= n <= 12".into());
    }
    check_all(&graphs, "identity", identities)?;
    check_all(&graphs, "complement", complement_f)?;
    check_all(&graphs, "aux", aux)?;
    check_all(&graphs, "degree rule", degree_rules)?;
    check_all(&graphs, "pairing", pairing)?;

    let opts = VerifyOptions {
        keep_all: true,
        timing: false,
    };
    let run = || -> Result<String, String> {
        let r = verify_corpus(&random_spec(), opts).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{} harness failures", r.failures.len()));
        }
        Ok(r.to_csv())
    };
    let (a, b) = (run()?, run()?);
    if a != b {
        return Err("two runs produced different reports".into());
    }
    Ok(format!(
        "500 graphs, {} report bytes identical across runs",
        a.len()
    ))
}

fn c7() -> Outcome {
    let c4 = generate(Family::Cycle { n: 4 }).unwrap();
    let k13 = generate(Family::Star { n: 4 }).unwrap();
    let k3 = generate(Family::Complete { n: 3 }).unwrap();
    let p4 = generate(Family::Path { n: 4 }).unwrap();
    let p3 = generate(Family::Path { n: 3 }).unwrap();
    let c5 = generate(Family::Cycle { n: 5 }).unwrap();
    let xyz = |s: &str| TransformKind::Xyz(s.parse().unwrap());
    let cases: [(&str, &Graph, TransformKind, Int); 8] = [
        ("T1(C4)", &c4, TransformKind::T1, 288),
        ("T2(C4)", &c4, TransformKind::T2, 288),
        ("+++(C4)", &c4, xyz("+++"), 512),
        ("---(C4)", &c4, xyz("---"), 216),
        ("-++(K1,3)", &k13, xyz("-++"), 300),
        ("-+-(K3)", &k3, xyz("-+-"), 84),
        ("+--(P4)", &p4, xyz("+--"), 170),
        ("++-(P3)", &p3, xyz("++-"), 40),
    ];
    for (name, g, k, expected) in cases {
        let got = f_formula(&index_set(g), k).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("F({name}) = {got}, expected {expected}"));
        }
    }
    let got = f_complement_formula(&index_set(&c5)).map_err(|e| e.to_string())?;
    if got != 40 {
        return Err(format!("F(complement(C5)) = {got}, expected 40"));
    }
    Ok("9 literals".into())
}

fn cli_verify(threads: &str, extra: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fxform"))
        .args([
            "verify", "--random", "200", "--nmin", "6", "--nmax", "12", "--seed", "7",
        ])
        .args(extra)
        .env("XFORM_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn c8() -> Outcome {
    let mut bytes = 0;
    for extra in [&[][..], &["--format", "csv", "--all"][..]] {
        let runs = [
            cli_verify("1", extra)?,
            cli_verify("1", extra)?,
            cli_verify("4", extra)?,
            cli_verify("4", extra)?,
        ];
        if runs.iter().any(|r| r != &runs[0]) {
            return Err(format!("report bytes differ with {extra:?}"));
        }
        bytes += runs[0].len();
    }
    Ok(format!(
        "json and csv, 4 runs each, {bytes} identical bytes"
    ))
}

fn main() -> ExitCode {
    let corpus = exhaustive(5);
    let criteria: [Criterion; 8] = [
        (
            "exhaustive closed forms, n <= 5, ten kinds",
            Box::new(|| c1(&corpus)),
        ),
        (
            "complement F, n <= 5",
            Box::new(|| check_all(&corpus, "complement", complement_f)),
        ),
        (
            "edge count and M1 identities, n <= 5",
            Box::new(|| check_all(&corpus, "aux", aux)),
        ),
        (
            "degree rules, n <= 5, ten kinds",
            Box::new(|| check_all(&corpus, "degree rule", degree_rules)),
        ),
        (
            "complement pairing, n <= 5",
            Box::new(|| check_all(&corpus, "pairing", pairing)),
        ),
        ("500 seeded G(n,m), 6 <= n <= 12", Box::new(c6)),
        ("hand values", Box::new(c7)),
        (
            "verify output identical across runs and thread counts",
            Box::new(c8),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {} {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

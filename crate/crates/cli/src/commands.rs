use std::io::{BufRead, Write};

use anyhow::{anyhow, bail, Context};
use serde::Serialize;

use fxform_core::{
    generate as build, index_set, parse_family_list, predicted_degrees, to_edge_list, to_graph6,
    transform as build_transform, verify_corpus, CorpusMode, CorpusSpec, DegreePrediction, Family,
    Graph, GraphReader, IndexSet, InputFormat, TransformKind, VerifyOptions,
};

use crate::{Failure, Format, VerifyArgs};

fn unsupported(command: &str, format: Format) -> anyhow::Error {
    anyhow!("{command} does not support --format {format:?}")
}

fn read_graphs(
    input: Box<dyn BufRead>,
    format: InputFormat,
) -> impl Iterator<Item = anyhow::Result<Graph>> {
    GraphReader::new(input, format).map(|r| r.map_err(anyhow::Error::from))
}

pub fn indices(
    input: Box<dyn BufRead>,
    input_format: InputFormat,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if format == Format::Graph6 {
        return Err(unsupported("indices", format).into());
    }
    let mut header = format == Format::Csv;
    for g in read_graphs(input, input_format) {
        let g = g?;
        let idx = index_set(&g);
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&idx)?)?,
            Format::Csv => {
                if std::mem::take(&mut header) {
                    writeln!(out, "n,m,M1,M2,F,xi4,rezg3")?;
                }
                let IndexSet {
                    n,
                    m,
                    m1,
                    m2,
                    f,
                    xi4,
                    rezg3,
                } = idx;
                writeln!(out, "{n},{m},{m1},{m2},{f},{xi4},{rezg3}")?;
            }
            Format::Text => {
                let IndexSet {
                    n,
                    m,
                    m1,
                    m2,
                    f,
                    xi4,
                    rezg3,
                } = idx;
                writeln!(
                    out,
                    "{}\tn={n} m={m} M1={m1} M2={m2} F={f} xi4={xi4} rezg3={rezg3} connected={}",
                    to_graph6(&g),
                    g.is_connected()
                )?;
            }
            Format::Graph6 => unreachable!(),
        }
    }
    Ok(())
}

/// Degree table as `#` comment lines, so graph6 and edge-list output stays
/// readable by the input parser.
fn write_prediction(
    out: &mut dyn Write,
    p: &DegreePrediction,
    actual: &[usize],
) -> std::io::Result<()> {
    writeln!(
        out,
        "# predicted degrees for {} (label kind element predicted actual)",
        p.kind
    )?;
    for (v, &d) in p.vertices.iter().enumerate() {
        writeln!(out, "# {v} vertex {v} {d} {}", actual[v])?;
    }
    let n = p.vertices.len();
    for (i, (e, d)) in p.edges.iter().enumerate() {
        writeln!(out, "# {} edge {e} {d} {}", n + i, actual[n + i])?;
    }
    Ok(())
}

#[derive(Serialize)]
struct TransformJson<'a> {
    kind: TransformKind,
    source: String,
    graph6: String,
    n: usize,
    m: usize,
    edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prediction: Option<&'a DegreePrediction>,
}

pub fn transform(
    input: Box<dyn BufRead>,
    input_format: InputFormat,
    kind: TransformKind,
    format: Format,
    predict: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(unsupported("transform", format).into());
    }
    for g in read_graphs(input, input_format) {
        let g = g?;
        let t = build_transform(&g, kind)?;
        let prediction = predict.then(|| predicted_degrees(&g, kind));
        match format {
            Format::Graph6 | Format::Text => {
                if format == Format::Graph6 {
                    writeln!(out, "{}", to_graph6(&t))?;
                } else {
                    write!(out, "{}", to_edge_list(&t))?;
                }
                if let Some(p) = &prediction {
                    write_prediction(out, p, &t.degrees())?;
                }
            }
            Format::Json => {
                let doc = TransformJson {
                    kind,
                    source: to_graph6(&g),
                    graph6: to_graph6(&t),
                    n: t.n(),
                    m: t.m(),
                    edges: t.edges().map(|e| e.endpoints()).collect(),
                    prediction: prediction.as_ref(),
                };
                writeln!(out, "{}", serde_json::to_string(&doc)?)?;
            }
            Format::Csv => unreachable!(),
        }
    }
    Ok(())
}

fn corpus_spec(args: &VerifyArgs) -> anyhow::Result<CorpusSpec> {
    let mode = if let Some(max_n) = args.exhaustive {
        CorpusMode::Exhaustive { max_n }
    } else if let Some(count) = args.random {
        CorpusMode::Random {
            count,
            n_min: args.nmin.context("--random needs --nmin")?,
            n_max: args.nmax.context("--random needs --nmax")?,
            seed: args.seed.context("--random needs --seed")?,
        }
    } else if let Some(list) = &args.families {
        CorpusMode::Families {
            calls: parse_family_list(list)?,
        }
    } else if let Some(path) = &args.input {
        CorpusMode::Input {
            path: path.display().to_string(),
        }
    } else {
        bail!("no corpus given");
    };
    let mut spec = CorpusSpec::new(mode);
    spec.dedupe = args.dedupe;
    Ok(spec)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if args.format == Format::Graph6 {
        return Err(unsupported("verify", args.format).into());
    }
    let spec = corpus_spec(args)?;
    spec.validate()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = args.threads {
        if t == 0 {
            return Err(anyhow!("--threads must be at least 1").into());
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;
    let opts = VerifyOptions {
        keep_all: args.all && args.format != Format::Json,
        timing: args.timing,
    };
    let report = pool.install(|| verify_corpus(&spec, opts))?;

    match args.format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Csv => write!(out, "{}", report.to_csv())?,
        Format::Text => {
            let shown = if report.reports.is_empty() {
                &report.failures
            } else {
                &report.reports
            };
            for r in shown {
                let bad: Vec<&str> = r
                    .per_formula
                    .iter()
                    .filter(|(_, c)| !c.matches)
                    .map(|(id, _)| id.as_str())
                    .chain((!r.degree_rule_match).then_some("degree-rule"))
                    .chain((!r.complement_pairing_match).then_some("complement-pairing"))
                    .collect();
                let status = if bad.is_empty() {
                    "ok".to_owned()
                } else {
                    format!("FAIL {}", bad.join(" "))
                };
                writeln!(out, "{}\t{status}", r.graph_id)?;
            }
            writeln!(
                out,
                "graphs: {}  failures: {}",
                report.total,
                report.failures.len()
            )?;
            if let Some(ms) = report.elapsed_ms {
                writeln!(out, "elapsed_ms: {ms}")?;
            }
        }
        Format::Graph6 => unreachable!(),
    }
    if report.passed() {
        Ok(())
    } else {
        eprintln!(
            "fxform: {} of {} graphs failed verification",
            report.failures.len(),
            report.total
        );
        Err(Failure::Mismatch)
    }
}

pub struct GenParams {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub seed: Option<u64>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

fn family(name: &str, p: &GenParams) -> anyhow::Result<Family> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("{name} needs --{flag}"));
    Ok(match name {
        "path" => Family::Path { n: need(p.n, "n")? },
        "cycle" => Family::Cycle { n: need(p.n, "n")? },
        "complete" => Family::Complete { n: need(p.n, "n")? },
        "star" => Family::Star { n: need(p.n, "n")? },
        "complete_bipartite" => Family::CompleteBipartite {
            a: need(p.a, "a")?,
            b: need(p.b, "b")?,
        },
        "random_gnm" => Family::RandomGnm {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
            seed: p.seed.context("random_gnm needs --seed")?,
        },
        // Also accept the `family:params` spelling.
        other => other.parse()?,
    })
}

pub fn generate(
    name: &str,
    params: GenParams,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let g = build(family(name, &params)?)?;
    match format {
        Format::Graph6 => writeln!(out, "{}", to_graph6(&g))?,
        Format::Text => write!(out, "{}", to_edge_list(&g))?,
        Format::Json => {
            let edges: Vec<(u32, u32)> = g.edges().map(|e| e.endpoints()).collect();
            let doc = serde_json::json!({
                "graph6": to_graph6(&g),
                "n": g.n(),
                "m": g.m(),
                "edges": edges,
            });
            writeln!(out, "{doc}")?;
        }
        Format::Csv => return Err(unsupported("generate", format).into()),
    }
    Ok(())
}

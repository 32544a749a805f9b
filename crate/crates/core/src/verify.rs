//! Brute-force oracle and corpus harness.
//!
//! The oracle builds each transform with [`transform`] and sums cubed
//! degrees. It never calls into [`crate::formulas`], and the formulas never
//! see a graph, so every comparison made here checks two independent
//! computations against each other.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs::File;
use std::io::BufReader;
use std::time::Instant;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{
    aux_edge_count_formula, aux_m1_formula, f_complement_formula, f_formula, FormulaError,
    FormulaId,
};
use crate::generate::{generate, random_gnm, Family, GenerateError, Stream};
use crate::graph::{Graph, GraphBuilder};
use crate::graph6::to_graph6;
use crate::indices::{index_set, Int};
use crate::io::{GraphReader, InputError, InputFormat};
use crate::transform::{predicted_degrees, transform, Signs, TransformError, TransformKind};

/// Largest `max_n` accepted for exhaustive labeled enumeration
/// (`2^21` graphs on 7 vertices).
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// `Σ_v d(v)^k` straight from the degree sequence.
fn degree_power_sum(g: &Graph, k: u32) -> Int {
    g.degrees().into_iter().map(|d| (d as Int).pow(k)).sum()
}

/// F-index of `kind(g)`, by construction.
pub fn oracle_f(g: &Graph, kind: TransformKind) -> Result<Int, TransformError> {
    Ok(degree_power_sum(&transform(g, kind)?, 3))
}

/// One closed form compared against its oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCheck {
    pub formula_value: Option<Int>,
    pub oracle_value: Option<Int>,
    #[serde(rename = "match")]
    pub matches: bool,
    /// `formula_value - oracle_value` when both exist.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub difference: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl FormulaCheck {
    fn new(formula: Result<Int, FormulaError>, oracle: Result<Int, TransformError>) -> Self {
        let error = match (&formula, &oracle) {
            (Err(e), _) => Some(e.to_string()),
            (_, Err(e)) => Some(e.to_string()),
            _ => None,
        };
        let (formula_value, oracle_value) = (formula.ok(), oracle.ok());
        let difference = formula_value
            .zip(oracle_value)
            .and_then(|(a, b)| a.checked_sub(b));
        FormulaCheck {
            formula_value,
            oracle_value,
            matches: error.is_none() && formula_value == oracle_value,
            difference,
            error,
        }
    }
}

/// Every check made on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub per_formula: IndexMap<String, FormulaCheck>,
    pub degree_rule_match: bool,
    pub complement_pairing_match: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.degree_rule_match
            && self.complement_pairing_match
            && self.per_formula.values().all(|c| c.matches)
    }

    /// Total number of checks: 19 formulas plus the degree rule and the
    /// complement pairing.
    pub fn check_count(&self) -> usize {
        self.per_formula.len() + 2
    }

    pub fn check(&self, id: FormulaId) -> Option<&FormulaCheck> {
        self.per_formula.get(&id.to_string())
    }
}

/// Runs all 21 checks on `g`.
///
/// Construction and overflow errors are recorded on the affected entries and
/// mark them as failed; the rest of the report is still filled in.
pub fn verify_graph(g: &Graph) -> VerificationReport {
    let idx = index_set(g);
    let built: Vec<Result<Graph, TransformError>> = TransformKind::ALL
        .iter()
        .map(|&k| transform(g, k))
        .collect();
    let get = |k: TransformKind| {
        let i = TransformKind::ALL.iter().position(|&x| x == k).unwrap();
        built[i].as_ref().map_err(Clone::clone)
    };

    let mut per_formula = IndexMap::new();
    for id in FormulaId::all() {
        let check = match id {
            FormulaId::ComplementF => FormulaCheck::new(
                f_complement_formula(&idx),
                Ok(degree_power_sum(&g.complement(), 3)),
            ),
            FormulaId::TransformF(k) => {
                FormulaCheck::new(f_formula(&idx, k), get(k).map(|t| degree_power_sum(t, 3)))
            }
            FormulaId::AuxEdges(s) => {
                let k = TransformKind::Xyz(s);
                FormulaCheck::new(
                    aux_edge_count_formula(&idx, k),
                    get(k).map(|t| t.m() as Int),
                )
            }
            FormulaId::AuxM1(s) => {
                let k = TransformKind::Xyz(s);
                FormulaCheck::new(
                    aux_m1_formula(&idx, k),
                    get(k).map(|t| degree_power_sum(t, 2)),
                )
            }
        };
        per_formula.insert(id.to_string(), check);
    }

    let degree_rule_match = TransformKind::ALL.iter().all(|&k| match get(k) {
        Ok(t) => {
            let actual = t.degrees().into_iter().map(|d| d as u64);
            predicted_degrees(g, k)
                .degree_vector()
                .into_iter()
                .eq(actual)
        }
        Err(_) => false,
    });

    let complement_pairing_match = Signs::AUX.iter().all(|&s| {
        match (
            get(TransformKind::Xyz(s)),
            get(TransformKind::Xyz(s.opposite())),
        ) {
            (Ok(direct), Ok(opposite)) => *opposite == direct.complement(),
            _ => false,
        }
    });

    VerificationReport {
        graph_id: to_graph6(g),
        n: g.n(),
        m: g.m(),
        connected: g.is_connected(),
        per_formula,
        degree_rule_match,
        complement_pairing_match,
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("exhaustive enumeration is limited to max_n <= {EXHAUSTIVE_MAX_N}, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("invalid corpus: {0}")]
    Invalid(String),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Input(#[from] InputError),
}

/// Which graphs to verify.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CorpusMode {
    /// Every labeled simple graph on `1..=max_n` vertices.
    Exhaustive {
        max_n: usize,
    },
    Families {
        calls: Vec<Family>,
    },
    /// `count` graphs: for each, `n` is uniform in `n_min..=n_max`, `m` is
    /// uniform in `0..=n(n-1)/2`, then `random_gnm(n, m, s)` with a fresh
    /// 64-bit `s`, all drawn in that order from one stream seeded by `seed`.
    Random {
        count: usize,
        n_min: usize,
        n_max: usize,
        seed: u64,
    },
    /// graph6 lines or an edge list read from a file.
    Input {
        path: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(flatten)]
    pub mode: CorpusMode,
    /// Skip graphs whose graph6 string was already seen.
    #[serde(default)]
    pub dedupe: bool,
}

impl CorpusSpec {
    pub fn new(mode: CorpusMode) -> Self {
        CorpusSpec {
            mode,
            dedupe: false,
        }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        match &self.mode {
            CorpusMode::Exhaustive { max_n } if *max_n > EXHAUSTIVE_MAX_N => {
                Err(CorpusError::ExhaustiveTooLarge(*max_n))
            }
            CorpusMode::Exhaustive { max_n: 0 } => Err(CorpusError::Invalid(
                "exhaustive max_n must be at least 1".into(),
            )),
            CorpusMode::Random { n_min, n_max, .. } if *n_min < 1 || n_min > n_max => {
                Err(CorpusError::Invalid(format!(
                    "random n range {n_min}..{n_max} is empty or starts at 0"
                )))
            }
            _ => Ok(()),
        }
    }
}

/// Outcome of a corpus run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub spec: CorpusSpec,
    pub total: usize,
    /// Failing reports in graph6 order.
    pub failures: Vec<VerificationReport>,
    /// Wall time. Left empty unless timing was requested, so repeated runs
    /// serialize to identical bytes.
    pub elapsed_ms: Option<u64>,
    /// Every report in graph6 order, when [`VerifyOptions::keep_all`] is set.
    #[serde(skip)]
    pub reports: Vec<VerificationReport>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per check: `graph6,formula_id,formula_value,oracle_value,match`.
    ///
    /// Rows cover every graph when reports were kept, otherwise the failures.
    /// The degree-rule and complement-pairing checks appear as rows with empty
    /// value columns.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph6,formula_id,formula_value,oracle_value,match\n");
        let rows = if self.reports.is_empty() {
            &self.failures
        } else {
            &self.reports
        };
        let opt = |v: Option<Int>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in rows {
            for (id, c) in &r.per_formula {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.graph_id,
                    id,
                    opt(c.formula_value),
                    opt(c.oracle_value),
                    c.matches
                )
                .unwrap();
            }
            writeln!(out, "{},degree-rule,,,{}", r.graph_id, r.degree_rule_match).unwrap();
            writeln!(
                out,
                "{},complement-pairing,,,{}",
                r.graph_id, r.complement_pairing_match
            )
            .unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Retain every report, not only failures.
    pub keep_all: bool,
    /// Fill in `elapsed_ms`.
    pub timing: bool,
}

/// Number of labeled simple graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph on `n` vertices whose edge set is the bitmask `mask`
/// over pairs in lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n).expect("n >= 1");
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                b.add_edge(u as u32, v as u32).expect("valid pair");
            }
            bit += 1;
        }
    }
    b.build()
}

/// Materializes every graph of a non-exhaustive corpus, in generation order.
pub fn corpus_graphs(spec: &CorpusSpec) -> Result<Vec<Graph>, CorpusError> {
    spec.validate()?;
    let graphs = match &spec.mode {
        CorpusMode::Exhaustive { max_n } => (1..=*max_n)
            .flat_map(|n| (0..labeled_graph_count(n)).map(move |mask| graph_from_mask(n, mask)))
            .collect(),
        CorpusMode::Families { calls } => calls
            .iter()
            .map(|&f| generate(f))
            .collect::<Result<_, _>>()?,
        CorpusMode::Random {
            count,
            n_min,
            n_max,
            seed,
        } => {
            let mut rng = Stream::new(*seed);
            let mut out = Vec::with_capacity(*count);
            for _ in 0..*count {
                let n = rng.uniform_inclusive(*n_min as u64, *n_max as u64) as usize;
                let m = rng.uniform_inclusive(0, (n * (n - 1) / 2) as u64) as usize;
                let s = rng.next_u64();
                out.push(random_gnm(n, m, s)?);
            }
            out
        }
        CorpusMode::Input { path } => {
            let file = File::open(path).map_err(InputError::from)?;
            GraphReader::new(BufReader::new(file), InputFormat::Auto).collect::<Result<_, _>>()?
        }
    };
    Ok(graphs)
}

fn finish_report(
    spec: &CorpusSpec,
    mut reports: Vec<VerificationReport>,
    total: usize,
    keep_all: bool,
    elapsed_ms: Option<u64>,
) -> CorpusReport {
    reports.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
    let (failures, reports) = if keep_all {
        (
            reports.iter().filter(|r| !r.passed()).cloned().collect(),
            reports,
        )
    } else {
        (reports, Vec::new())
    };
    CorpusReport {
        spec: spec.clone(),
        total,
        failures,
        elapsed_ms,
        reports,
    }
}

/// Verifies every graph of `spec`, in parallel on the current rayon pool.
///
/// Report order is graph6-lexicographic regardless of scheduling.
pub fn verify_corpus(spec: &CorpusSpec, opts: VerifyOptions) -> Result<CorpusReport, CorpusError> {
    spec.validate()?;
    let start = Instant::now();
    let keep = |r: &VerificationReport| opts.keep_all || !r.passed();

    let (reports, total) = match &spec.mode {
        // Labeled graphs are pairwise distinct, so dedupe is a no-op here.
        CorpusMode::Exhaustive { max_n } => {
            let mut reports = Vec::new();
            let mut total = 0;
            for n in 1..=*max_n {
                let count = labeled_graph_count(n);
                reports.par_extend(
                    (0..count)
                        .into_par_iter()
                        .map(|mask| verify_graph(&graph_from_mask(n, mask)))
                        .filter(keep),
                );
                total += count as usize;
            }
            (reports, total)
        }
        _ => {
            let mut graphs = corpus_graphs(spec)?;
            if spec.dedupe {
                let mut seen = BTreeSet::new();
                graphs.retain(|g| seen.insert(to_graph6(g)));
            }
            let reports: Vec<_> = graphs.par_iter().map(verify_graph).filter(keep).collect();
            (reports, graphs.len())
        }
    };

    let elapsed = opts.timing.then(|| start.elapsed().as_millis() as u64);
    Ok(finish_report(spec, reports, total, opts.keep_all, elapsed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn kind(s: &str) -> TransformKind {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        let c4 = generate(Family::Cycle { n: 4 }).unwrap();
        assert_eq!(oracle_f(&c4, TransformKind::T2).unwrap(), 288);
        let star = generate(Family::Star { n: 4 }).unwrap();
        assert_eq!(oracle_f(&star, kind("-++")).unwrap(), 300);
        assert_eq!(
            oracle_f(&Graph::empty(1).unwrap(), TransformKind::T1).unwrap(),
            0
        );
    }

    #[test]
    fn c4_passes_all_21_checks() {
        let r = verify_graph(&generate(Family::Cycle { n: 4 }).unwrap());
        assert_eq!(r.check_count(), 21);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.graph_id, "Cl");
    }

    #[test]
    fn k1_is_all_zero() {
        let r = verify_graph(&parse_graph6("@").unwrap());
        assert!(r.passed());
        for c in r.per_formula.values() {
            assert_eq!((c.formula_value, c.oracle_value), (Some(0), Some(0)));
        }
    }

    #[test]
    fn p3_with_negative_intermediates() {
        let r = verify_graph(&generate(Family::Path { n: 3 }).unwrap());
        assert!(r.passed());
        let thm5 = r.check(FormulaId::TransformF(kind("++-"))).unwrap();
        assert_eq!(thm5.oracle_value, Some(40));
    }

    #[test]
    fn mismatch_carries_difference() {
        let c = FormulaCheck::new(Ok(10), Ok(7));
        assert!(!c.matches);
        assert_eq!(c.difference, Some(3));
        let c = FormulaCheck::new(Err(FormulaError::TooLarge(1 << 30)), Ok(7));
        assert!(!c.matches && c.error.is_some());
    }

    #[test]
    fn mask_enumeration() {
        assert_eq!(labeled_graph_count(4), 64);
        assert_eq!((1..=4).map(labeled_graph_count).sum::<u64>(), 75);
        let g = graph_from_mask(3, 0b101);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn exhaustive_four() {
        let spec = CorpusSpec::new(CorpusMode::Exhaustive { max_n: 4 });
        let report = verify_corpus(&spec, VerifyOptions::default()).unwrap();
        assert_eq!(report.total, 75);
        assert!(report.passed());
    }

    #[test]
    fn exhaustive_guard() {
        let spec = CorpusSpec::new(CorpusMode::Exhaustive { max_n: 9 });
        assert!(matches!(
            verify_corpus(&spec, VerifyOptions::default()),
            Err(CorpusError::ExhaustiveTooLarge(9))
        ));
    }

    #[test]
    fn dedupe_drops_repeats() {
        let calls = vec![
            Family::Cycle { n: 5 },
            Family::Cycle { n: 5 },
            Family::Path { n: 3 },
        ];
        let mut spec = CorpusSpec::new(CorpusMode::Families { calls });
        assert_eq!(
            verify_corpus(&spec, VerifyOptions::default())
                .unwrap()
                .total,
            3
        );
        spec.dedupe = true;
        assert_eq!(
            verify_corpus(&spec, VerifyOptions::default())
                .unwrap()
                .total,
            2
        );
    }

    #[test]
    fn report_json_schema() {
        let spec = CorpusSpec::new(CorpusMode::Exhaustive { max_n: 2 });
        let report = verify_corpus(&spec, VerifyOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["spec"]["mode"], "exhaustive");
        assert_eq!(v["spec"]["max_n"], 2);
        assert_eq!(v["total"], 3);
        assert_eq!(v["failures"], serde_json::json!([]));
        assert!(v["elapsed_ms"].is_null());
    }

    #[test]
    fn csv_rows() {
        let spec = CorpusSpec::new(CorpusMode::Families {
            calls: vec![Family::Cycle { n: 4 }],
        });
        let opts = VerifyOptions {
            keep_all: true,
            timing: false,
        };
        let csv = verify_corpus(&spec, opts).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 1 + 21);
        assert_eq!(lines[1], "Cl,prop1,4,4,true");
        assert_eq!(lines[2], "Cl,thm2-t1,288,288,true");
    }
}

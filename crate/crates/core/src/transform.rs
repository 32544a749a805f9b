//! Semitotal and total transformation graphs.
//!
//! Every transform of `G` lives on `V(G) ∪ E(G)`. Labels `0..n` are the
//! original vertices and `n..n+m` are the edges of `G` in [`EdgeLabel`]
//! order, so transforms of the same graph can be compared by labeled
//! equality.
//!
//! A graph `G^xyz` decides each of the three pair classes by one sign:
//! `x` for vertex–vertex pairs (adjacency in `G`), `y` for edge–edge pairs
//! (sharing an endpoint) and `z` for vertex–edge pairs (incidence). `+`
//! keeps the relation, `-` takes its negation. `T1` keeps vertex–vertex
//! adjacency and incidence; `T2` keeps edge–edge adjacency and incidence.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{EdgeLabel, Graph, GraphBuilder, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The sign triple `xyz` of a total transformation graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signs {
    pub x: Sign,
    pub y: Sign,
    pub z: Sign,
}

impl Signs {
    pub const fn new(x: Sign, y: Sign, z: Sign) -> Self {
        Signs { x, y, z }
    }

    /// All eight triples, in the order their F-index results are numbered.
    pub const ALL: [Signs; 8] = {
        use Sign::{Minus as M, Plus as P};
        [
            Signs::new(P, P, P),
            Signs::new(M, M, M),
            Signs::new(P, P, M),
            Signs::new(M, M, P),
            Signs::new(M, P, P),
            Signs::new(P, M, M),
            Signs::new(P, M, P),
            Signs::new(M, P, M),
        ]
    };

    /// The four triples with a closed-form edge count and `M1`; each is the
    /// first member of a complementary pair.
    pub const AUX: [Signs; 4] = [Signs::ALL[0], Signs::ALL[2], Signs::ALL[4], Signs::ALL[6]];

    /// Flips all three signs. `G^opposite` is the complement of `G^xyz`.
    pub fn opposite(self) -> Signs {
        Signs::new(self.x.flip(), self.y.flip(), self.z.flip())
    }
}

impl fmt::Display for Signs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.x.symbol(),
            self.y.symbol(),
            self.z.symbol()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("unknown transform {0:?}; expected t1, t2 or a sign triple such as \"+-+\"")]
    UnknownKind(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FromStr for Signs {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sign = |c: u8| match c {
            b'+' => Some(Sign::Plus),
            b'-' => Some(Sign::Minus),
            _ => None,
        };
        match s.as_bytes() {
            &[a, b, c] => match (sign(a), sign(b), sign(c)) {
                (Some(x), Some(y), Some(z)) => Ok(Signs::new(x, y, z)),
                _ => Err(TransformError::UnknownKind(s.to_owned())),
            },
            _ => Err(TransformError::UnknownKind(s.to_owned())),
        }
    }
}

/// Which transform to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    /// Semitotal point graph.
    T1,
    /// Semitotal line graph.
    T2,
    Xyz(Signs),
}

impl TransformKind {
    pub const ALL: [TransformKind; 10] = {
        let s = Signs::ALL;
        [
            TransformKind::T1,
            TransformKind::T2,
            TransformKind::Xyz(s[0]),
            TransformKind::Xyz(s[1]),
            TransformKind::Xyz(s[2]),
            TransformKind::Xyz(s[3]),
            TransformKind::Xyz(s[4]),
            TransformKind::Xyz(s[5]),
            TransformKind::Xyz(s[6]),
            TransformKind::Xyz(s[7]),
        ]
    };

    /// The complementary transform; defined for sign triples only.
    pub fn opposite(self) -> Option<TransformKind> {
        match self {
            TransformKind::Xyz(s) => Some(TransformKind::Xyz(s.opposite())),
            _ => None,
        }
    }

    fn rules(self) -> [PairRule; 3] {
        use PairRule::*;
        match self {
            TransformKind::T1 => [Keep, Never, Keep],
            TransformKind::T2 => [Never, Keep, Keep],
            TransformKind::Xyz(s) => [s.x.into(), s.y.into(), s.z.into()],
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformKind::T1 => f.write_str("t1"),
            TransformKind::T2 => f.write_str("t2"),
            TransformKind::Xyz(s) => s.fmt(f),
        }
    }
}

impl FromStr for TransformKind {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            t if t.eq_ignore_ascii_case("t1") => Ok(TransformKind::T1),
            t if t.eq_ignore_ascii_case("t2") => Ok(TransformKind::T2),
            t => t.parse().map(TransformKind::Xyz),
        }
    }
}

impl Serialize for TransformKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// How one pair class of the transform relates to `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairRule {
    Keep,
    Negate,
    Never,
}

impl From<Sign> for PairRule {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => PairRule::Keep,
            Sign::Minus => PairRule::Negate,
        }
    }
}

impl PairRule {
    #[inline]
    fn joins(self, related: bool) -> bool {
        match self {
            PairRule::Keep => related,
            PairRule::Negate => !related,
            PairRule::Never => false,
        }
    }
}

/// Builds `kind` of `g` directly from the three pair-class rules.
pub fn transform(g: &Graph, kind: TransformKind) -> Result<Graph, TransformError> {
    let n = g.n();
    let edges: Vec<EdgeLabel> = g.edges().collect();
    let mut b = GraphBuilder::new(n + edges.len())?;
    let [vertex_rule, edge_rule, incidence_rule] = kind.rules();

    for a in 0..n {
        for c in a + 1..n {
            if vertex_rule.joins(g.has_edge(a as u32, c as u32)) {
                b.insert(a, c);
            }
        }
    }
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if edge_rule.joins(e.is_adjacent_to(f)) {
                b.insert(n + i, n + j);
            }
        }
    }
    for a in 0..n {
        for (i, &e) in edges.iter().enumerate() {
            if incidence_rule.joins(e.is_incident_to(a as u32)) {
                b.insert(a, n + i);
            }
        }
    }
    Ok(b.build())
}

/// Closed-form degrees of every vertex of a transform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePrediction {
    pub kind: TransformKind,
    /// Indexed by original vertex label.
    pub vertices: Vec<u64>,
    /// In [`EdgeLabel`] order, i.e. transform labels `n..n+m`.
    pub edges: Vec<(EdgeLabel, u64)>,
}

impl DegreePrediction {
    /// Predicted degrees indexed by transform label.
    pub fn degree_vector(&self) -> Vec<u64> {
        self.vertices
            .iter()
            .copied()
            .chain(self.edges.iter().map(|&(_, d)| d))
            .collect()
    }
}

/// Degree of each vertex of `kind(g)` from the degrees of `g` alone.
///
/// For `T2` an original vertex keeps its degree `d(u)`: it is joined only to
/// its incident edges.
pub fn predicted_degrees(g: &Graph, kind: TransformKind) -> DegreePrediction {
    use Sign::{Minus as M, Plus as P};

    let n = g.n() as i64;
    let m = g.m() as i64;
    let deg: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();

    let vertex_rule = |d: i64| -> i64 {
        match kind {
            TransformKind::T1 => 2 * d,
            TransformKind::T2 => d,
            TransformKind::Xyz(s) => match (s.x, s.y, s.z) {
                (P, P, P) | (P, M, P) => 2 * d,
                (M, M, M) | (M, P, M) => m + n - 1 - 2 * d,
                (P, P, M) | (P, M, M) => m,
                (M, M, P) | (M, P, P) => n - 1,
            },
        }
    };
    // `s` is d(u) + d(v) for the edge uv.
    let edge_rule = |s: i64| -> i64 {
        match kind {
            TransformKind::T1 => 2,
            TransformKind::T2 => s,
            TransformKind::Xyz(t) => match (t.x, t.y, t.z) {
                (P, P, P) | (M, P, P) => s,
                (M, M, M) | (P, M, M) => m + n - 1 - s,
                (P, P, M) | (M, P, M) => s + n - 4,
                (M, M, P) | (P, M, P) => m + 3 - s,
            },
        }
    };
    let checked = |d: i64| -> u64 {
        debug_assert!((0..n + m).contains(&d), "predicted degree {d} out of range");
        d as u64
    };

    DegreePrediction {
        kind,
        vertices: deg.iter().map(|&d| checked(vertex_rule(d))).collect(),
        edges: g
            .edges()
            .map(|e| {
                let s = deg[e.u() as usize] + deg[e.v() as usize];
                (e, checked(edge_rule(s)))
            })
            .collect(),
    }
}

/// True iff each transform with a leading `+` in the four complementary
/// pairs is the labeled complement of its partner.
pub fn verify_complement_pairing(g: &Graph) -> Result<bool, TransformError> {
    for s in Signs::AUX {
        let direct = transform(g, TransformKind::Xyz(s))?;
        let opposite = transform(g, TransformKind::Xyz(s.opposite()))?;
        if opposite != direct.complement() {
            return Ok(false);
        }
    }
    Ok(true)
}

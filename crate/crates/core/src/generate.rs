//! Graph generators for test corpora.
//!
//! Every family uses a canonical labeling. `random_gnm` is reproducible
//! across implementations given the algorithm below:
//!
//! 1. The random stream is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`
//!    (the seed is expanded to 32 bytes with PCG32, as `rand_core` defines it).
//!    Only `next_u64` is consumed.
//! 2. `uniform_below(b)` draws `x = next_u64()` until `x >= 2^64 mod b`, then
//!    returns `x mod b`.
//! 3. The `N = n(n-1)/2` vertex pairs are indexed in graph6 order: index `k`
//!    is the pair `(i, j)` with `i < j`, `k = j(j-1)/2 + i`.
//! 4. `m` distinct indices are picked with Floyd's algorithm: for
//!    `t` in `N-m .. N`, draw `r = uniform_below(t + 1)`; insert `r` unless
//!    already chosen, otherwise insert `t`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("{family}: {message}")]
    Params {
        family: &'static str,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &'static str, message: impl Into<String>) -> GenerateError {
    GenerateError::Params {
        family,
        message: message.into(),
    }
}

/// A generator call: a family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `K_{1,n-1}` with the center at label 0.
    Star {
        n: usize,
    },
    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    RandomGnm {
        n: usize,
        m: usize,
        seed: u64,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Star { .. } => "star",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::RandomGnm { .. } => "random_gnm",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::Star { n } => {
                write!(f, "{}:{n}", self.name())
            }
            Family::CompleteBipartite { a, b } => write!(f, "complete_bipartite:{a}:{b}"),
            Family::RandomGnm { n, m, seed } => write!(f, "random_gnm:{n}:{m}:{seed}"),
        }
    }
}

/// Parses `family:p1[:p2[:p3]]`, the same spelling `Display` produces.
impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let num = |i: usize, family: &'static str| -> Result<u64, GenerateError> {
            params
                .get(i)
                .ok_or_else(|| bad(family, format!("missing parameter {}", i + 1)))?
                .parse::<u64>()
                .map_err(|_| {
                    bad(
                        family,
                        format!("parameter {:?} is not an integer", params[i]),
                    )
                })
        };
        let arity = |family: &'static str, k: usize| -> Result<(), GenerateError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(
                    family,
                    format!("expected {k} parameters, got {}", params.len()),
                ))
            }
        };
        let family = match name {
            "path" => {
                arity("path", 1)?;
                Family::Path {
                    n: num(0, "path")? as usize,
                }
            }
            "cycle" => {
                arity("cycle", 1)?;
                Family::Cycle {
                    n: num(0, "cycle")? as usize,
                }
            }
            "complete" => {
                arity("complete", 1)?;
                Family::Complete {
                    n: num(0, "complete")? as usize,
                }
            }
            "star" => {
                arity("star", 1)?;
                Family::Star {
                    n: num(0, "star")? as usize,
                }
            }
            "complete_bipartite" => {
                arity("complete_bipartite", 2)?;
                Family::CompleteBipartite {
                    a: num(0, "complete_bipartite")? as usize,
                    b: num(1, "complete_bipartite")? as usize,
                }
            }
            "random_gnm" => {
                arity("random_gnm", 3)?;
                Family::RandomGnm {
                    n: num(0, "random_gnm")? as usize,
                    m: num(1, "random_gnm")? as usize,
                    seed: num(2, "random_gnm")?,
                }
            }
            other => {
                return Err(GenerateError::Params {
                    family: "generate",
                    message: format!("unknown family {other:?}"),
                })
            }
        };
        Ok(family)
    }
}

/// Expands a comma-separated list of generator calls.
///
/// Each item is a [`Family`] spelling, except that a single-size family may
/// take an inclusive range (`cycle:3..12`) and `complete_bipartite:A..B`
/// expands to every `K_{a,b}` with `A <= a <= b <= B`.
pub fn parse_family_list(list: &str) -> Result<Vec<Family>, GenerateError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((name, rest)) = item.split_once(':') else {
            return Err(bad("generate", format!("missing parameters in {item:?}")));
        };
        let Some((lo, hi)) = rest.split_once("..") else {
            out.push(item.parse()?);
            continue;
        };
        let bound = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| bad("generate", format!("bad range bound {s:?} in {item:?}")))
        };
        let (lo, hi) = (bound(lo)?, bound(hi)?);
        if lo > hi {
            return Err(bad("generate", format!("empty range in {item:?}")));
        }
        for n in lo..=hi {
            match name {
                "complete_bipartite" => {
                    out.extend((n..=hi).map(|b| Family::CompleteBipartite { a: n, b }))
                }
                "random_gnm" => {
                    return Err(bad(
                        "random_gnm",
                        "ranges are not supported; use random_gnm:N:M:SEED",
                    ))
                }
                _ => out.push(format!("{name}:{n}").parse()?),
            }
        }
    }
    Ok(out)
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Builds the graph described by `family`.
pub fn generate(family: Family) -> Result<Graph, GenerateError> {
    match family {
        Family::Path { n } => {
            if n < 1 {
                return Err(bad("path", "needs n >= 1"));
            }
            let mut b = GraphBuilder::new(n)?;
            for v in 1..n {
                b.insert(v - 1, v);
            }
            Ok(b.build())
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle", format!("needs n >= 3, got {n}")));
            }
            let mut b = GraphBuilder::new(n)?;
            for v in 0..n {
                b.insert(v, (v + 1) % n);
            }
            Ok(b.build())
        }
        Family::Complete { n } => {
            if n < 1 {
                return Err(bad("complete", "needs n >= 1"));
            }
            let mut b = GraphBuilder::new(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    b.insert(u, v);
                }
            }
            Ok(b.build())
        }
        Family::Star { n } => {
            if n < 2 {
                return Err(bad("star", format!("needs n >= 2, got {n}")));
            }
            let mut b = GraphBuilder::new(n)?;
            for v in 1..n {
                b.insert(0, v);
            }
            Ok(b.build())
        }
        Family::CompleteBipartite { a, b: size_b } => {
            if a < 1 || size_b < 1 {
                return Err(bad("complete_bipartite", "needs both parts non-empty"));
            }
            let mut b = GraphBuilder::new(a + size_b)?;
            for u in 0..a {
                for v in a..a + size_b {
                    b.insert(u, v);
                }
            }
            Ok(b.build())
        }
        Family::RandomGnm { n, m, seed } => random_gnm(n, m, seed),
    }
}

/// Seeded stream used by every randomized generator in this crate.
pub struct Stream(ChaCha8Rng);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..bound` by rejection; `bound` must be positive.
    pub fn uniform_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.0.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn uniform_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi);
        match (hi - lo).checked_add(1) {
            Some(span) => lo + self.uniform_below(span),
            None => self.0.next_u64(),
        }
    }
}

/// Inverse of `k = j(j-1)/2 + i`.
fn pair_from_index(k: u64) -> (Vertex, Vertex) {
    let mut j = ((8.0 * k as f64 + 1.0).sqrt() as u64).div_ceil(2);
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    let i = k - j * (j - 1) / 2;
    (i as Vertex, j as Vertex)
}

/// Uniform random graph with exactly `m` edges on `n` vertices.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(bad("random_gnm", "needs n >= 1"));
    }
    let total = pairs(n);
    if m > total {
        return Err(bad(
            "random_gnm",
            format!("m = {m} exceeds n(n-1)/2 = {total}"),
        ));
    }
    let mut b = GraphBuilder::new(n)?;
    let mut rng = Stream::new(seed);
    let mut chosen = BTreeSet::new();
    for t in (total - m) as u64..total as u64 {
        let r = rng.uniform_below(t + 1);
        if !chosen.insert(r) {
            chosen.insert(t);
        }
    }
    for k in chosen {
        let (i, j) = pair_from_index(k);
        b.insert(i as usize, j as usize);
    }
    Ok(b.build())
}

//! Closed forms for the F-index of transformation graphs.
//!
//! Everything here reads an [`IndexSet`] and nothing else; no function in
//! this module can see a graph. Arithmetic is signed and checked: terms such
//! as `(3n - 20)·F` or `m(n - 4)³` are negative for small `n`, and any
//! overflow is reported instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::indices::{IndexSet, Int};
use crate::transform::{Sign, Signs, TransformKind};

/// Largest `n + m` accepted by the closed forms.
///
/// The biggest terms are of order `(n+m)^5` (for instance
/// `3(m+n-1)²·M1` with `M1 <= n(n-1)²`); at `2^24` that stays below `2^122`.
pub const MAX_ORDER: Int = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("n + m = {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(Int),
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(FormulaId),
    #[error("{0} has no closed form for {1}")]
    Unsupported(&'static str, TransformKind),
    #[error("{0}: half of an odd quantity; the index set is not from a graph")]
    NotIntegral(FormulaId),
}

/// Names a closed form: the complement formula, one of the
/// ten transform F-index results, or an auxiliary edge-count / `M1` identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    ComplementF,
    TransformF(TransformKind),
    AuxEdges(Signs),
    AuxM1(Signs),
}

impl FormulaId {
    /// All 19 ids in report order.
    pub fn all() -> Vec<FormulaId> {
        let mut ids = vec![FormulaId::ComplementF];
        ids.extend(TransformKind::ALL.iter().map(|&k| FormulaId::TransformF(k)));
        ids.extend(Signs::AUX.iter().map(|&s| FormulaId::AuxEdges(s)));
        ids.extend(Signs::AUX.iter().map(|&s| FormulaId::AuxM1(s)));
        ids
    }
}

/// Number used in the `thmN` id of a sign triple: `+++` is 3, `---` is 4, up to `-+-` at 10.
pub fn id_number(s: Signs) -> usize {
    3 + Signs::ALL
        .iter()
        .position(|&t| t == s)
        .expect("all triples listed")
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaId::ComplementF => f.write_str("prop1"),
            FormulaId::TransformF(TransformKind::T1) => f.write_str("thm2-t1"),
            FormulaId::TransformF(TransformKind::T2) => f.write_str("thm2-t2"),
            FormulaId::TransformF(TransformKind::Xyz(s)) => write!(f, "thm{}", id_number(*s)),
            FormulaId::AuxEdges(s) => write!(f, "aux-e-{s}"),
            FormulaId::AuxM1(s) => write!(f, "aux-m1-{s}"),
        }
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Checked integer; `None` once anything overflowed.
#[derive(Clone, Copy)]
struct C(Option<Int>);

fn c(x: Int) -> C {
    C(Some(x))
}

impl C {
    fn pow(self, k: u32) -> C {
        C(self.0.and_then(|x| x.checked_pow(k)))
    }
}

impl Add for C {
    type Output = C;
    fn add(self, o: C) -> C {
        C(self.0.zip(o.0).and_then(|(a, b)| a.checked_add(b)))
    }
}

impl Sub for C {
    type Output = C;
    fn sub(self, o: C) -> C {
        C(self.0.zip(o.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}

impl Mul for C {
    type Output = C;
    fn mul(self, o: C) -> C {
        C(self.0.zip(o.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}

impl Mul<C> for Int {
    type Output = C;
    fn mul(self, o: C) -> C {
        c(self) * o
    }
}

impl Neg for C {
    type Output = C;
    fn neg(self) -> C {
        C(self.0.and_then(Int::checked_neg))
    }
}

/// The index set as checked values.
struct Terms {
    n: C,
    m: C,
    m1: C,
    m2: C,
    f: C,
    xi4: C,
    r: C,
}

fn terms(idx: &IndexSet) -> Result<Terms, FormulaError> {
    let order = idx.n.saturating_add(idx.m);
    if order > MAX_ORDER {
        return Err(FormulaError::TooLarge(order));
    }
    Ok(Terms {
        n: c(idx.n),
        m: c(idx.m),
        m1: c(idx.m1),
        m2: c(idx.m2),
        f: c(idx.f),
        xi4: c(idx.xi4),
        r: c(idx.rezg3),
    })
}

fn finish(value: C, id: FormulaId) -> Result<Int, FormulaError> {
    value.0.ok_or(FormulaError::Overflow(id))
}

fn halve(value: C, id: FormulaId) -> Result<Int, FormulaError> {
    let v = finish(value, id)?;
    if v % 2 != 0 {
        return Err(FormulaError::NotIntegral(id));
    }
    Ok(v / 2)
}

/// F-index of `kind(G)` from the invariants of `G`.
pub fn f_formula(idx: &IndexSet, kind: TransformKind) -> Result<Int, FormulaError> {
    use Sign::{Minus as M, Plus as P};

    let Terms {
        n,
        m,
        m1,
        m2,
        f,
        xi4,
        r,
    } = terms(idx)?;
    let one = c(1);
    let value = match kind {
        TransformKind::T1 => 8 * f + 8 * m,
        TransformKind::T2 => f + xi4 + 3 * r,
        TransformKind::Xyz(s) => match (s.x, s.y, s.z) {
            (P, P, P) => 8 * f + xi4 + 3 * r,
            (M, M, M) => {
                let s1 = m + n - one;
                (3 * m + 3 * n - c(11)) * f - 3 * s1 * (m + n - c(5)) * m1 + 6 * s1 * m2
                    - xi4
                    - 3 * r
                    + (m + n) * s1.pow(3)
                    - 12 * m * s1.pow(2)
            }
            (P, P, M) => {
                let k = n - c(4);
                3 * k * f
                    + 3 * k.pow(2) * m1
                    + 6 * k * m2
                    + xi4
                    + 3 * r
                    + n * m.pow(3)
                    + m * k.pow(3)
            }
            (M, M, P) => {
                let k = m + c(3);
                3 * k * f - 3 * k.pow(2) * m1 + 6 * k * m2 - xi4 - 3 * r
                    + n * (n - one).pow(3)
                    + m * k.pow(3)
            }
            (M, P, P) => n * (n - one).pow(3) + xi4 + 3 * r,
            (P, M, M) => {
                let s1 = m + n - one;
                3 * s1 * f - xi4 - 3 * r - 3 * s1.pow(2) * m1
                    + 6 * s1 * m2
                    + m * s1.pow(3)
                    + n * m.pow(3)
            }
            (P, M, P) => {
                let k = m + c(3);
                (3 * m + c(17)) * f - 3 * k.pow(2) * m1 + 6 * k * m2 - xi4 - 3 * r + m * k.pow(3)
            }
            (M, P, M) => {
                let s1 = m + n - one;
                let k = n - c(4);
                (3 * n - c(20)) * f
                    + (3 * n.pow(2) - 12 * n + 12 * m + c(36)) * m1
                    + 6 * k * m2
                    + xi4
                    + 3 * r
                    + s1.pow(2) * (n * s1 - 12 * m)
                    + m * k.pow(3)
            }
        },
    };
    finish(value, FormulaId::TransformF(kind))
}

/// F-index of the complement of `G`:
/// `2(n-1)²(m̄ - 2m) + 3(n-1)·M1 - F` with `m̄ = n(n-1)/2 - m`.
pub fn f_complement_formula(idx: &IndexSet) -> Result<Int, FormulaError> {
    let Terms { n, m, m1, f, .. } = terms(idx)?;
    let id = FormulaId::ComplementF;
    let pairs = halve(n * (n - c(1)), id)?;
    let m_bar = c(pairs) - m;
    let k = n - c(1);
    finish(2 * k.pow(2) * (m_bar - 2 * m) + 3 * k * m1 - f, id)
}

fn aux_signs(kind: TransformKind, what: &'static str) -> Result<Signs, FormulaError> {
    match kind {
        TransformKind::Xyz(s) if Signs::AUX.contains(&s) => Ok(s),
        _ => Err(FormulaError::Unsupported(what, kind)),
    }
}

/// Edge count of `kind(G)` for `kind` in `+++`, `++-`, `-++`, `+-+`.
pub fn aux_edge_count_formula(idx: &IndexSet, kind: TransformKind) -> Result<Int, FormulaError> {
    use Sign::{Minus as M, Plus as P};

    let s = aux_signs(kind, "edge count")?;
    let Terms { n, m, m1, .. } = terms(idx)?;
    let twice = match (s.x, s.y, s.z) {
        (P, P, P) => 4 * m + m1,
        (P, P, M) => 2 * m * (n - c(2)) + m1,
        (M, P, P) => n * (n - c(1)) + m1,
        // +-+
        _ => m * (m + c(7)) - m1,
    };
    halve(twice, FormulaId::AuxEdges(s))
}

/// First Zagreb index of `kind(G)` for `kind` in `+++`, `++-`, `-++`, `+-+`.
pub fn aux_m1_formula(idx: &IndexSet, kind: TransformKind) -> Result<Int, FormulaError> {
    use Sign::{Minus as M, Plus as P};

    let s = aux_signs(kind, "M1")?;
    let Terms {
        n, m, m1, m2, f, ..
    } = terms(idx)?;
    let value = match (s.x, s.y, s.z) {
        (P, P, P) => 4 * m1 + 2 * m2 + f,
        (P, P, M) => m * n * (m + n - c(8)) + 16 * m + 2 * (n - c(4)) * m1 + 2 * m2 + f,
        (M, P, P) => n * (n - c(1)).pow(2) + 2 * m2 + f,
        // +-+
        _ => m * (m + c(3)).pow(2) - 2 * (m + c(1)) * m1 + 2 * m2 + f,
    };
    finish(value, FormulaId::AuxM1(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(s: &str) -> TransformKind {
        s.parse().unwrap()
    }

    // Index sets written out by hand from each graph's degree sequence.
    const C4: IndexSet = IndexSet {
        n: 4,
        m: 4,
        m1: 16,
        m2: 16,
        f: 32,
        xi4: 64,
        rezg3: 64,
    };
    const K3: IndexSet = IndexSet {
        n: 3,
        m: 3,
        m1: 12,
        m2: 12,
        f: 24,
        xi4: 48,
        rezg3: 48,
    };
    const K4: IndexSet = IndexSet {
        n: 4,
        m: 6,
        m1: 36,
        m2: 54,
        f: 108,
        xi4: 324,
        rezg3: 324,
    };
    const K1: IndexSet = IndexSet {
        n: 1,
        m: 0,
        m1: 0,
        m2: 0,
        f: 0,
        xi4: 0,
        rezg3: 0,
    };
    const STAR4: IndexSet = IndexSet {
        n: 4,
        m: 3,
        m1: 12,
        m2: 9,
        f: 30,
        xi4: 84,
        rezg3: 36,
    };
    const C5: IndexSet = IndexSet {
        n: 5,
        m: 5,
        m1: 20,
        m2: 20,
        f: 40,
        xi4: 80,
        rezg3: 80,
    };
    // P4: degrees 1,2,2,1; edge products 2,4,2.
    const P4: IndexSet = IndexSet {
        n: 4,
        m: 3,
        m1: 10,
        m2: 8,
        f: 18,
        xi4: 34,
        rezg3: 28,
    };
    // P3: degrees 1,2,1.
    const P3: IndexSet = IndexSet {
        n: 3,
        m: 2,
        m1: 6,
        m2: 4,
        f: 10,
        xi4: 18,
        rezg3: 12,
    };

    #[test]
    fn ids_render() {
        let ids: Vec<String> = FormulaId::all().iter().map(|i| i.to_string()).collect();
        assert_eq!(ids.len(), 19);
        assert_eq!(&ids[..4], &["prop1", "thm2-t1", "thm2-t2", "thm3"]);
        assert_eq!(ids[10], "thm10");
        assert_eq!(ids[11], "aux-e-+++");
        assert_eq!(ids[18], "aux-m1-+-+");
        assert_eq!(id_number("---".parse().unwrap()), 4);
        assert_eq!(id_number("-+-".parse().unwrap()), 10);
    }

    #[test]
    fn hand_values() {
        assert_eq!(f_formula(&C4, TransformKind::T1).unwrap(), 288);
        assert_eq!(f_formula(&C4, TransformKind::T2).unwrap(), 288);
        assert_eq!(f_formula(&C4, kind("+++")).unwrap(), 512);
        assert_eq!(f_formula(&C4, kind("---")).unwrap(), 216);
        assert_eq!(f_formula(&K3, kind("-+-")).unwrap(), 84);
        assert_eq!(f_formula(&P4, kind("+--")).unwrap(), 170);
        assert_eq!(f_formula(&P3, kind("++-")).unwrap(), 40);
        assert_eq!(f_formula(&STAR4, kind("-++")).unwrap(), 300);
    }

    #[test]
    fn k1_is_zero_everywhere() {
        for k in TransformKind::ALL {
            assert_eq!(f_formula(&K1, k).unwrap(), 0, "{k}");
        }
        assert_eq!(f_complement_formula(&K1).unwrap(), 0);
        for s in Signs::AUX {
            assert_eq!(
                aux_edge_count_formula(&K1, TransformKind::Xyz(s)).unwrap(),
                0
            );
            assert_eq!(aux_m1_formula(&K1, TransformKind::Xyz(s)).unwrap(), 0);
        }
    }

    #[test]
    fn complement_f() {
        assert_eq!(f_complement_formula(&C5).unwrap(), 40);
        assert_eq!(f_complement_formula(&K4).unwrap(), 0);
        // complement of K1,3 is K3 plus an isolated vertex
        assert_eq!(f_complement_formula(&STAR4).unwrap(), 24);
    }

    #[test]
    fn aux_values() {
        assert_eq!(aux_edge_count_formula(&C4, kind("+++")).unwrap(), 16);
        assert_eq!(aux_edge_count_formula(&STAR4, kind("-++")).unwrap(), 12);
        assert_eq!(aux_m1_formula(&C4, kind("+++")).unwrap(), 128);
        assert_eq!(aux_m1_formula(&K3, kind("-++")).unwrap(), 60);
    }

    #[test]
    fn aux_rejects_other_kinds() {
        for k in ["---", "--+", "+--", "-+-", "t1", "t2"] {
            assert!(matches!(
                aux_edge_count_formula(&C4, kind(k)),
                Err(FormulaError::Unsupported(..))
            ));
            assert!(matches!(
                aux_m1_formula(&C4, kind(k)),
                Err(FormulaError::Unsupported(..))
            ));
        }
    }

    #[test]
    fn guard_rejects_huge_orders() {
        let big = IndexSet {
            n: MAX_ORDER,
            m: 1,
            ..K1
        };
        assert!(matches!(
            f_formula(&big, kind("---")),
            Err(FormulaError::TooLarge(_))
        ));
    }

    #[test]
    fn overflow_is_reported() {
        let wild = IndexSet {
            f: Int::MAX / 2,
            ..C4
        };
        assert!(matches!(
            f_formula(&wild, kind("+++")),
            Err(FormulaError::Overflow(_))
        ));
    }

    #[test]
    fn regular_scale_law_for_t1() {
        // k-regular: F(T1) = 8nk³ + 8m
        for (n, k) in [(5, 2), (6, 3), (8, 7)] {
            let m = n * k / 2;
            let idx = IndexSet {
                n,
                m,
                m1: n * k * k,
                m2: m * k * k,
                f: n * k.pow(3),
                xi4: n * k.pow(4),
                rezg3: 2 * m * k.pow(3),
            };
            assert_eq!(
                f_formula(&idx, TransformKind::T1).unwrap(),
                8 * n * k.pow(3) + 8 * m
            );
        }
    }
}

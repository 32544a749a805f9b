//! Degree-based invariants.
//!
//! All values are exact integers. With at most [`MAX_VERTICES`] vertices every
//! degree is below `2^15`, so the largest entry (`xi4 <= n·d⁴ < 2^75`) fits in
//! `i128` with room to spare and no intermediate here can overflow.
//!
//! [`MAX_VERTICES`]: crate::graph::MAX_VERTICES

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Exact integer type for index values and closed forms.
pub type Int = i128;

/// The invariants consumed by every closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    pub n: Int,
    pub m: Int,
    /// First Zagreb index, `Σ_v d(v)²`.
    #[serde(rename = "M1")]
    pub m1: Int,
    /// Second Zagreb index, `Σ_uv d(u)d(v)`.
    #[serde(rename = "M2")]
    pub m2: Int,
    /// Forgotten index, `Σ_v d(v)³`.
    #[serde(rename = "F")]
    pub f: Int,
    /// `Σ_v d(v)⁴`.
    pub xi4: Int,
    /// Redefined third Zagreb index, `Σ_uv d(u)d(v)(d(u)+d(v))`.
    pub rezg3: Int,
}

/// One pass over vertices for `M1`, `F`, `xi4`; one pass over edges for `M2`
/// and `rezg3`.
pub fn index_set(g: &Graph) -> IndexSet {
    let deg: Vec<Int> = g.degrees().into_iter().map(|d| d as Int).collect();
    let (mut m1, mut f, mut xi4) = (0, 0, 0);
    for &d in &deg {
        let d2 = d * d;
        m1 += d2;
        f += d2 * d;
        xi4 += d2 * d2;
    }
    let (mut m2, mut rezg3) = (0, 0);
    for e in g.edges() {
        let (du, dv) = (deg[e.u() as usize], deg[e.v() as usize]);
        m2 += du * dv;
        rezg3 += du * dv * (du + dv);
    }
    IndexSet {
        n: g.n() as Int,
        m: g.m() as Int,
        m1,
        m2,
        f,
        xi4,
        rezg3,
    }
}

/// Edge-sum forms of `M1`, `F` and `xi4`: `Σ_uv [d(u)^k + d(v)^k]` for
/// `k = 1, 2, 3`.
pub fn edge_forms(g: &Graph) -> (Int, Int, Int) {
    let deg: Vec<Int> = g.degrees().into_iter().map(|d| d as Int).collect();
    g.edges().fold((0, 0, 0), |(m1, f, xi4), e| {
        let (du, dv) = (deg[e.u() as usize], deg[e.v() as usize]);
        (
            m1 + du + dv,
            f + du.pow(2) + dv.pow(2),
            xi4 + du.pow(3) + dv.pow(3),
        )
    })
}

/// True iff the edge-sum and vertex-sum forms of `M1`, `F` and `xi4` agree.
pub fn edge_form_check(g: &Graph) -> bool {
    let idx = index_set(g);
    edge_forms(g) == (idx.m1, idx.f, idx.xi4)
}

//! Perturbation from the 0-configuration and the predicates built on it.
//!
//! Step numbering follows the process: step 0 is the 0-configuration,
//! step 1 is the configuration left by the perturbation (every vertex of
//! `H` sending one chip to each neighbour), and each later step is one
//! Diffusion firing.
//!
//! All predicates taking a [`VertexSet`] panic if the set's universe does
//! not match the graph's vertex count.

use crate::engine::{self, Configuration, PeriodReport};
use crate::error::{EngineError, GraphError, SearchError};
use crate::graph::{Graph, VertexSet, MAX_MASK_VERTICES};
use crate::subsets;

fn check(g: &Graph, h: VertexSet) {
    assert_eq!(
        h.universe(),
        g.vertex_count(),
        "subset over {} vertices used with a graph on {}",
        h.universe(),
        g.vertex_count()
    );
}

/// Configuration after every vertex of `h` sends a chip to each of its
/// neighbours, starting from the 0-configuration.
pub fn perturb(g: &Graph, h: VertexSet) -> Configuration {
    check(g, h);
    let bits = h.bits();
    Configuration::new(
        (0..g.vertex_count())
            .map(|v| {
                let received = (g.neighbour_mask(v) & bits).count_ones() as i64;
                let paid = if h.contains(v) { g.degree(v) as i64 } else { 0 };
                received - paid
            })
            .collect(),
    )
}

/// Complementary component dominance, checked pair by pair: every edge
/// inside `h` joins vertices with equally many neighbours outside `h`, and
/// every edge outside `h` joins vertices with equally many neighbours in `h`.
pub fn is_ccd(g: &Graph, h: VertexSet) -> bool {
    check(g, h);
    ccd_bits(g, h.bits())
}

#[inline]
pub(crate) fn ccd_bits(g: &Graph, h: u64) -> bool {
    let outside = !h & g.full_mask();
    g.edges().iter().all(|&(u, v)| {
        let (in_u, in_v) = (h >> u & 1, h >> v & 1);
        if in_u != in_v {
            return true;
        }
        let other = if in_u == 1 { outside } else { h };
        (g.neighbour_mask(u) & other).count_ones() == (g.neighbour_mask(v) & other).count_ones()
    })
}

/// Whether one Diffusion firing after perturbing `h` restores the
/// 0-configuration. Evaluated by simulation.
pub fn is_zero2_invoking(g: &Graph, h: VertexSet) -> bool {
    let after = engine::fire(g, &perturb(g, h))
        .expect("perturbed stacks are bounded by the maximum degree");
    after.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroStatus {
    /// First step at which the 0-configuration appears. `0` means the
    /// perturbation itself moved no chips (e.g. `h` empty or all of `V`).
    ReachedZero(usize),
    /// The run became periodic without ever passing through zero.
    /// Preperiod and period configurations are in perturbation-relative
    /// steps, i.e. index 0 is step 1.
    PeriodWithoutZero(PeriodReport),
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroInvokingOutcome {
    pub status: ZeroStatus,
    /// Firings simulated, counting the perturbation itself.
    pub trace_len: usize,
}

impl ZeroInvokingOutcome {
    pub fn reached_zero(&self) -> Option<usize> {
        match self.status {
            ZeroStatus::ReachedZero(t) => Some(t),
            _ => None,
        }
    }
}

/// Decides whether perturbing `h` eventually yields the 0-configuration.
///
/// A negative answer is exact: the 0-configuration is a fixed point, so if
/// zero appears at all it is where the period starts.
pub fn is_zero_invoking(
    g: &Graph,
    h: VertexSet,
    max_steps: usize,
) -> Result<ZeroInvokingOutcome, EngineError> {
    let start = perturb(g, h);
    if start.is_zero() {
        return Ok(ZeroInvokingOutcome {
            status: ZeroStatus::ReachedZero(0),
            trace_len: 1,
        });
    }
    match engine::run(g, &start, max_steps) {
        Ok(report) => {
            let trace_len = report.steps_taken + 1;
            let status = if report.period == 1 && report.period_configs[0].is_zero() {
                ZeroStatus::ReachedZero(report.preperiod + 1)
            } else {
                ZeroStatus::PeriodWithoutZero(report)
            };
            Ok(ZeroInvokingOutcome { status, trace_len })
        }
        Err(EngineError::CapExceeded { .. }) => Ok(ZeroInvokingOutcome {
            status: ZeroStatus::CapExceeded,
            trace_len: max_steps + 1,
        }),
        Err(e) => Err(e),
    }
}

fn subsets_graph(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > MAX_MASK_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_MASK_VERTICES,
        });
    }
    Ok(n)
}

/// Size of the smallest nonempty 0₂-invoking subset, `None` only for the
/// empty graph. Subsets are tried by ascending size.
pub fn pq2(g: &Graph) -> Result<Option<usize>, GraphError> {
    let n = subsets_graph(g)?;
    Ok(subsets::by_popcount(n)
        .find(|&m| is_zero2_invoking(g, VertexSet::from_bits_unchecked(m, n)))
        .map(|m| m.count_ones() as usize))
}

/// Result of the perturbation quiescent number search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqValue {
    Exact(usize),
    /// Some smaller subset hit the step budget, so the true value may lie
    /// below `upper_bound`.
    Unknown {
        upper_bound: Option<usize>,
    },
    /// The graph has no vertices.
    None,
}

/// Size of the smallest nonempty 0-invoking subset.
pub fn pq(g: &Graph, max_steps: usize) -> Result<PqValue, SearchError> {
    let n = subsets_graph(g)?;
    if n == 0 {
        return Ok(PqValue::None);
    }
    let mut undecided = false;
    for k in 1..=n {
        for m in subsets::KSubsets::new(n, k) {
            let outcome = is_zero_invoking(g, VertexSet::from_bits_unchecked(m, n), max_steps)?;
            match outcome.status {
                ZeroStatus::ReachedZero(_) => {
                    return Ok(if undecided {
                        PqValue::Unknown {
                            upper_bound: Some(k),
                        }
                    } else {
                        PqValue::Exact(k)
                    });
                }
                ZeroStatus::CapExceeded => undecided = true,
                ZeroStatus::PeriodWithoutZero(_) => {}
            }
        }
    }
    Ok(PqValue::Unknown { upper_bound: None })
}

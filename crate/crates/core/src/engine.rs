//! The Diffusion firing rule, period detection and induced orientations.
//!
//! At every step each vertex sends one chip to every strictly poorer
//! neighbour, all vertices acting on the same snapshot. Stacks may go
//! negative. Arithmetic is checked; overflow is reported, never wrapped.

use std::fmt;

use crate::error::EngineError;
use crate::graph::Graph;

/// Step budget used by callers that do not pick their own.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// Stack sizes, one per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Configuration(Vec<i64>);

impl Configuration {
    pub fn new(stacks: Vec<i64>) -> Self {
        Configuration(stacks)
    }

    /// The 0-configuration on `n` vertices.
    pub fn zero(n: usize) -> Self {
        Configuration(vec![0; n])
    }

    #[inline]
    pub fn stacks(&self) -> &[i64] {
        &self.0
    }

    pub fn into_stacks(self) -> Vec<i64> {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }

    /// Total chips. Widened so that the sum of in-range stacks cannot overflow.
    pub fn total(&self) -> i128 {
        self.0.iter().map(|&s| s as i128).sum()
    }

    fn check_len(&self, g: &Graph) -> Result<(), EngineError> {
        if self.len() != g.vertex_count() {
            return Err(EngineError::LengthMismatch {
                expected: g.vertex_count(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for Configuration {
    fn from(stacks: Vec<i64>) -> Self {
        Configuration(stacks)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Is every stack zero?
pub fn is_zero_configuration(c: &Configuration) -> bool {
    c.is_zero()
}

/// One simultaneous Diffusion step.
pub fn fire(g: &Graph, c: &Configuration) -> Result<Configuration, EngineError> {
    c.check_len(g)?;
    let stacks = c.stacks();
    let mut next = stacks.to_vec();
    for &(u, v) in g.edges() {
        let (from, to) = match stacks[u].cmp(&stacks[v]) {
            std::cmp::Ordering::Greater => (u, v),
            std::cmp::Ordering::Less => (v, u),
            std::cmp::Ordering::Equal => continue,
        };
        next[from] = next[from]
            .checked_sub(1)
            .ok_or(EngineError::Overflow { vertex: from })?;
        next[to] = next[to]
            .checked_add(1)
            .ok_or(EngineError::Overflow { vertex: to })?;
    }
    Ok(Configuration(next))
}

/// Adds `k` to every stack.
pub fn shift(c: &Configuration, k: i64) -> Result<Configuration, EngineError> {
    c.stacks()
        .iter()
        .enumerate()
        .map(|(vertex, &s)| s.checked_add(k).ok_or(EngineError::Overflow { vertex }))
        .collect::<Result<Vec<_>, _>>()
        .map(Configuration)
}

/// `[C_0, C_1, ..., C_{t_max}]`.
pub fn trace(
    g: &Graph,
    c0: &Configuration,
    t_max: usize,
) -> Result<Vec<Configuration>, EngineError> {
    c0.check_len(g)?;
    let mut out = Vec::with_capacity(t_max + 1);
    out.push(c0.clone());
    for _ in 0..t_max {
        let next = fire(g, out.last().expect("trace is never empty"))?;
        out.push(next);
    }
    Ok(out)
}

/// Renders a trace as CSV with header `step,v0,...,v{n-1}` and one row
/// per step, `\n` line endings.
pub fn trace_to_csv(trace: &[Configuration]) -> String {
    let n = trace.first().map_or(0, Configuration::len);
    let mut out = String::from("step");
    for v in 0..n {
        out.push_str(&format!(",v{v}"));
    }
    out.push('\n');
    for (step, c) in trace.iter().enumerate() {
        out.push_str(&step.to_string());
        for s in c.stacks() {
            out.push_str(&format!(",{s}"));
        }
        out.push('\n');
    }
    out
}

/// Where a run settles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    /// Least `N` with `C_t = C_{t+period}` for all `t >= N`.
    pub preperiod: usize,
    /// Minimum period length, always 1 or 2.
    pub period: usize,
    /// `C_N, ..., C_{N+period-1}`.
    pub period_configs: Vec<Configuration>,
    /// Number of firings performed to detect the period (`N + period`).
    pub steps_taken: usize,
}

/// Fires from `c0` until `C_t = C_{t+1}` or `C_t = C_{t+2}`.
///
/// Only the last three configurations are retained. Scanning forward, the
/// first `t` at which either equality appears is already the least
/// preperiod: a period-1 repeat would have shown up one step earlier than
/// any period-2 repeat it implies. At most `max_steps` firings are made.
pub fn run(g: &Graph, c0: &Configuration, max_steps: usize) -> Result<PeriodReport, EngineError> {
    c0.check_len(g)?;
    let mut prev: Option<Configuration> = None;
    let mut cur = c0.clone();
    let mut t = 0;
    loop {
        if t == max_steps {
            let mut tail: Vec<Configuration> = prev.into_iter().collect();
            tail.push(cur);
            return Err(EngineError::CapExceeded { max_steps, tail });
        }
        let next = fire(g, &cur)?;
        if next == cur {
            return Ok(PeriodReport {
                preperiod: t,
                period: 1,
                period_configs: vec![cur],
                steps_taken: t + 1,
            });
        }
        if let Some(p) = prev.take() {
            if p == next {
                return Ok(PeriodReport {
                    preperiod: t - 1,
                    period: 2,
                    period_configs: vec![p, cur],
                    steps_taken: t + 1,
                });
            }
        }
        prev = Some(cur);
        cur = next;
        t += 1;
    }
}

/// Direction of one edge `(u, v)`, `u < v`, relative to its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeOrientation {
    /// `u -> v`: the lower-indexed endpoint is richer.
    ToHigher,
    /// `v -> u`: the higher-indexed endpoint is richer.
    ToLower,
    Flat,
}

/// One [`EdgeOrientation`] per edge, in the order of [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(Vec<EdgeOrientation>);

impl Orientation {
    pub fn new(g: &Graph, edges: Vec<EdgeOrientation>) -> Result<Self, EngineError> {
        if edges.len() != g.edge_count() {
            return Err(EngineError::OrientationMismatch {
                expected: g.edge_count(),
                got: edges.len(),
            });
        }
        Ok(Orientation(edges))
    }

    pub fn all_flat(g: &Graph) -> Self {
        Orientation(vec![EdgeOrientation::Flat; g.edge_count()])
    }

    #[inline]
    pub fn edges(&self) -> &[EdgeOrientation] {
        &self.0
    }

    /// Arcs `(from, to)` of the directed edges, in edge order.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .zip(&self.0)
            .filter_map(|(&(u, v), o)| match o {
                EdgeOrientation::ToHigher => Some((u, v)),
                EdgeOrientation::ToLower => Some((v, u)),
                EdgeOrientation::Flat => None,
            })
            .collect()
    }
}

/// Orients each edge from its richer endpoint to its poorer one.
pub fn induced_orientation(g: &Graph, c: &Configuration) -> Result<Orientation, EngineError> {
    c.check_len(g)?;
    let s = c.stacks();
    Ok(Orientation(
        g.edges()
            .iter()
            .map(|&(u, v)| match s[u].cmp(&s[v]) {
                std::cmp::Ordering::Greater => EdgeOrientation::ToHigher,
                std::cmp::Ordering::Less => EdgeOrientation::ToLower,
                std::cmp::Ordering::Equal => EdgeOrientation::Flat,
            })
            .collect(),
    ))
}

/// The unique configuration, if any, that induces `r` and fires to the
/// 0-configuration.
///
/// Under `r` each vertex gains its in-degree and loses its out-degree, so
/// reaching zero pins its stack to `out - in`. That candidate is returned
/// only if it really induces `r`.
pub fn zero_preposition_from_orientation(
    g: &Graph,
    r: &Orientation,
) -> Result<Option<Configuration>, EngineError> {
    if r.0.len() != g.edge_count() {
        return Err(EngineError::OrientationMismatch {
            expected: g.edge_count(),
            got: r.0.len(),
        });
    }
    let mut stacks = vec![0i64; g.vertex_count()];
    for (from, to) in r.arcs(g) {
        stacks[from] += 1;
        stacks[to] -= 1;
    }
    let candidate = Configuration(stacks);
    if induced_orientation(g, &candidate)? == *r {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

//! Exhaustive searches over vertex subsets and over all labelled graphs of
//! a given order.
//!
//! Work is split into contiguous mask ranges and run on the rayon pool;
//! results are gathered back in mask order, so every output is independent
//! of the number of worker threads.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::engine::{self, Configuration};
use crate::error::{GraphError, SearchError};
use crate::graph::{low_bits, pair_count, Graph, VertexSet, MAX_MASK_VERTICES};
use crate::quiescence::{self, ZeroStatus};
use crate::subsets::KSubsets;

/// Largest vertex count for which all `2^n` subsets are scanned.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 30;

/// Largest order accepted by [`search_all_graphs`].
pub const MAX_SEARCH_ORDER: usize = 7;

/// Graphs per checkpoint block unless configured otherwise.
pub const DEFAULT_CHECKPOINT_INTERVAL: u64 = 1 << 16;

const SUBSET_CHUNK: u64 = 1 << 12;

fn exhaustive_order(g: &Graph) -> Result<usize, SearchError> {
    let n = g.vertex_count();
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(SearchError::TooLarge {
            n,
            max: MAX_EXHAUSTIVE_VERTICES,
        });
    }
    Ok(n)
}

/// Splits `lo..hi` into consecutive chunks of at most `size`.
fn chunks(lo: u64, hi: u64, size: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut start = lo;
    while start < hi {
        let end = hi.min(start.saturating_add(size));
        out.push((start, end));
        start = end;
    }
    out
}

/// Number of 0₂-invoking subsets of `g`, counted with the CCD predicate.
/// With `include_trivial == false`, `∅` and `V(g)` are left out.
pub fn count_zero2_subsets(g: &Graph, include_trivial: bool) -> Result<u64, SearchError> {
    let n = exhaustive_order(g)?;
    let total: u64 = chunks(0, 1 << n, SUBSET_CHUNK)
        .into_par_iter()
        .map(|(lo, hi)| (lo..hi).filter(|&m| quiescence::ccd_bits(g, m)).count() as u64)
        .sum();
    if include_trivial {
        Ok(total)
    } else {
        // ∅ and V are always CCD; they coincide when n = 0.
        Ok(total - if n == 0 { 1 } else { 2 })
    }
}

/// Size of a smallest dominating set.
pub fn domination_number(g: &Graph) -> Result<usize, SearchError> {
    let n = g.vertex_count();
    if n > MAX_MASK_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_MASK_VERTICES,
        }
        .into());
    }
    for k in 0..=n {
        if KSubsets::new(n, k).any(|m| g.is_dominating(VertexSet::from_bits_unchecked(m, n))) {
            return Ok(k);
        }
    }
    unreachable!("V(g) dominates every graph")
}

/// A subset that reaches the 0-configuration, but not by step 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchWitness {
    pub graph: Graph,
    pub subset: VertexSet,
    pub zero_step: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Witness(SearchWitness),
    NotFound,
    /// No witness among decided subsets, but `cap_hits` subsets exhausted
    /// the step budget.
    Inconclusive {
        cap_hits: u64,
    },
}

/// Scans `lo..hi`, stopping at the first witness.
fn scan_subsets(
    g: &Graph,
    lo: u64,
    hi: u64,
    max_steps: usize,
) -> Result<(Option<(u64, usize)>, u64), SearchError> {
    let n = g.vertex_count();
    let mut cap_hits = 0;
    for m in lo..hi {
        let outcome =
            quiescence::is_zero_invoking(g, VertexSet::from_bits_unchecked(m, n), max_steps)?;
        match outcome.status {
            // t = 0 is a no-op perturbation and t <= 2 is 0₂-invoking.
            ZeroStatus::ReachedZero(t) if t >= 3 => return Ok((Some((m, t)), cap_hits)),
            ZeroStatus::CapExceeded => cap_hits += 1,
            _ => {}
        }
    }
    Ok((None, cap_hits))
}

fn witness_note(g: &Graph, h: VertexSet, zero_step: usize) -> String {
    let step2 = engine::fire(g, &quiescence::perturb(g, h))
        .map(|c| c.to_string())
        .unwrap_or_else(|e| e.to_string());
    format!("zero first reached at step {zero_step}; step 2 is {step2}")
}

/// Looks for a subset of `g` that is 0-invoking but not 0₂-invoking,
/// returning the one with the smallest mask.
pub fn find_zero_not_zero2(g: &Graph, max_steps: usize) -> Result<SearchOutcome, SearchError> {
    let n = exhaustive_order(g)?;
    // ∅ and V never qualify.
    let hi = low_bits(n);
    let results: Vec<_> = if n <= 12 {
        vec![scan_subsets(g, 1, hi, max_steps)?]
    } else {
        chunks(1, hi, SUBSET_CHUNK)
            .into_par_iter()
            .map(|(lo, hi)| scan_subsets(g, lo, hi, max_steps))
            .collect::<Result<_, _>>()?
    };
    let mut cap_hits = 0;
    for (found, caps) in results {
        if let Some((m, t)) = found {
            let subset = VertexSet::from_bits_unchecked(m, n);
            return Ok(SearchOutcome::Witness(SearchWitness {
                graph: g.clone(),
                subset,
                zero_step: t,
                note: witness_note(g, subset, t),
            }));
        }
        cap_hits += caps;
    }
    Ok(if cap_hits > 0 {
        SearchOutcome::Inconclusive { cap_hits }
    } else {
        SearchOutcome::NotFound
    })
}

/// Re-checks a witness by plain simulation, without the period detector:
/// perturb, fire step by step, and confirm zero first appears at
/// `zero_step >= 3`.
pub fn verify_witness(w: &SearchWitness) -> bool {
    if w.zero_step < 3 || w.subset.universe() != w.graph.vertex_count() {
        return false;
    }
    let mut c: Configuration = quiescence::perturb(&w.graph, w.subset);
    for _ in 1..w.zero_step {
        if c.is_zero() {
            return false;
        }
        match engine::fire(&w.graph, &c) {
            Ok(next) => c = next,
            Err(_) => return false,
        }
    }
    c.is_zero()
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub connected_only: bool,
    /// Only scan labellings whose degree sequence is non-increasing in the
    /// vertex index. Every isomorphism class has such a labelling, so this
    /// prunes work without losing coverage of unlabelled graphs.
    pub degree_sorted_only: bool,
    pub max_steps: usize,
    pub checkpoint: Option<PathBuf>,
    /// Start from the last position recorded in `checkpoint`.
    pub resume: bool,
    pub checkpoint_interval: u64,
    /// Checked after each block; when set, the search stops there.
    pub interrupt: Option<Arc<AtomicBool>>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            connected_only: false,
            degree_sorted_only: false,
            max_steps: engine::DEFAULT_MAX_STEPS,
            checkpoint: None,
            resume: false,
            checkpoint_interval: DEFAULT_CHECKPOINT_INTERVAL,
            interrupt: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchEvent {
    Witness {
        edge_mask: u64,
        witness: SearchWitness,
    },
    Inconclusive {
        edge_mask: u64,
        cap_hits: u64,
    },
    /// Every edge mask below `next_edge_mask` has been processed.
    Progress {
        next_edge_mask: u64,
        graphs_scanned: u64,
        total_masks: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub completed: bool,
    pub next_edge_mask: u64,
    /// Graphs passing the filters in this call.
    pub graphs_scanned: u64,
    pub witnesses: u64,
    pub inconclusive: u64,
}

/// Reads the position to resume from: the last `n edge_mask` line for this `n`.
pub fn read_checkpoint(path: &std::path::Path, n: usize) -> Result<u64, SearchError> {
    let file = File::open(path)
        .map_err(|e| SearchError::Checkpoint(format!("{}: {e}", path.display())))?;
    let mut last = None;
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| SearchError::Checkpoint(e.to_string()))?;
        let mut fields = line.split_whitespace();
        if let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) {
            if let (Ok(order), Ok(mask)) = (a.parse::<usize>(), b.parse::<u64>()) {
                if order == n {
                    last = Some(mask);
                }
            }
        }
    }
    last.ok_or_else(|| {
        SearchError::Checkpoint(format!("no entry for n = {n} in {}", path.display()))
    })
}

fn degrees_non_increasing(g: &Graph) -> bool {
    g.degree_sequence().windows(2).all(|w| w[0] >= w[1])
}

/// Runs [`find_zero_not_zero2`] on every labelled graph of order `n`, in
/// ascending edge-mask order (see [`crate::graph::pair_index`]).
///
/// Events are delivered in mask order. With a checkpoint path, a line
/// `n next_edge_mask` is appended and flushed after each block, before the
/// block's progress event.
pub fn search_all_graphs<R>(
    n: usize,
    options: &SearchOptions,
    mut reporter: R,
) -> Result<SearchSummary, SearchError>
where
    R: FnMut(SearchEvent),
{
    if n > MAX_SEARCH_ORDER {
        return Err(SearchError::TooLarge {
            n,
            max: MAX_SEARCH_ORDER,
        });
    }
    let total = 1u64 << pair_count(n);
    let mut next = match (&options.checkpoint, options.resume) {
        (Some(path), true) => read_checkpoint(path, n)?,
        _ => 0,
    };
    let mut checkpoint = match &options.checkpoint {
        Some(path) => Some(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| SearchError::Checkpoint(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let interval = options.checkpoint_interval.max(1);
    let mut summary = SearchSummary {
        completed: false,
        next_edge_mask: next,
        graphs_scanned: 0,
        witnesses: 0,
        inconclusive: 0,
    };

    while next < total {
        let end = total.min(next + interval);
        let results: Vec<(u64, SearchOutcome)> = (next..end)
            .into_par_iter()
            .filter_map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                if options.connected_only && !g.is_connected() {
                    return None;
                }
                if options.degree_sorted_only && !degrees_non_increasing(&g) {
                    return None;
                }
                Some(find_zero_not_zero2(&g, options.max_steps).map(|o| (mask, o)))
            })
            .collect::<Result<_, _>>()?;

        summary.graphs_scanned += results.len() as u64;
        for (edge_mask, outcome) in results {
            match outcome {
                SearchOutcome::Witness(witness) => {
                    summary.witnesses += 1;
                    reporter(SearchEvent::Witness { edge_mask, witness });
                }
                SearchOutcome::Inconclusive { cap_hits } => {
                    summary.inconclusive += 1;
                    reporter(SearchEvent::Inconclusive {
                        edge_mask,
                        cap_hits,
                    });
                }
                SearchOutcome::NotFound => {}
            }
        }

        next = end;
        summary.next_edge_mask = next;
        if let Some(file) = checkpoint.as_mut() {
            writeln!(file, "{n} {next}")
                .and_then(|_| file.flush())
                .map_err(|e| SearchError::Checkpoint(e.to_string()))?;
        }
        reporter(SearchEvent::Progress {
            next_edge_mask: next,
            graphs_scanned: summary.graphs_scanned,
            total_masks: total,
        });
        if next < total
            && options
                .interrupt
                .as_ref()
                .is_some_and(|flag| flag.load(Ordering::SeqCst))
        {
            return Ok(summary);
        }
    }
    summary.completed = true;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_proper_zero2_graph() -> Graph {
        Graph::from_edge_list(
            6,
            &[
                (5, 4),
                (4, 3),
                (4, 2),
                (4, 1),
                (3, 1),
                (3, 0),
                (2, 1),
                (1, 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            count_zero2_subsets(&Graph::path(1).unwrap(), true).unwrap(),
            2
        );
        assert_eq!(
            count_zero2_subsets(&Graph::path(2).unwrap(), true).unwrap(),
            4
        );
        assert_eq!(
            count_zero2_subsets(&no_proper_zero2_graph(), false).unwrap(),
            0
        );
        assert_eq!(
            count_zero2_subsets(&Graph::from_edge_list(0, &[]).unwrap(), true).unwrap(),
            1
        );
        assert_eq!(
            count_zero2_subsets(&Graph::from_edge_list(0, &[]).unwrap(), false).unwrap(),
            0
        );
        assert!(matches!(
            count_zero2_subsets(&Graph::path(31).unwrap(), true),
            Err(SearchError::TooLarge { n: 31, .. })
        ));
    }

    #[test]
    fn count_path5_against_literal_enumeration() {
        // Oracle: simulate every subset of P5 and count those at zero after
        // perturbation plus one firing.
        let p5 = Graph::path(5).unwrap();
        let by_simulation = (0..32u64)
            .filter(|&m| quiescence::is_zero2_invoking(&p5, VertexSet::from_bits(m, 5).unwrap()))
            .count() as u64;
        assert_eq!(by_simulation, 8);
        assert_eq!(count_zero2_subsets(&p5, true).unwrap(), by_simulation);
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&Graph::path(6).unwrap()).unwrap(), 2);
        assert_eq!(domination_number(&no_proper_zero2_graph()).unwrap(), 2);
        assert_eq!(domination_number(&Graph::complete(5).unwrap()).unwrap(), 1);
        assert_eq!(
            domination_number(&Graph::from_edge_list(0, &[]).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            domination_number(&Graph::from_edge_list(3, &[]).unwrap()).unwrap(),
            3
        );
    }

    #[test]
    fn witness_search_is_self_consistent_on_paths() {
        for n in 1..=10 {
            let g = Graph::path(n).unwrap();
            match find_zero_not_zero2(&g, 10_000).unwrap() {
                SearchOutcome::Witness(w) => assert!(verify_witness(&w), "{w:?}"),
                SearchOutcome::NotFound => {}
                SearchOutcome::Inconclusive { cap_hits } => panic!("P{n}: {cap_hits} caps"),
            }
        }
    }

    #[test]
    fn verify_witness_rejects_zero2_sets() {
        let p4 = Graph::path(4).unwrap();
        let fake = SearchWitness {
            graph: p4.clone(),
            subset: VertexSet::from_indices(4, [1, 2]).unwrap(),
            zero_step: 3,
            note: String::new(),
        };
        assert!(!verify_witness(&fake));
        let fake = SearchWitness {
            zero_step: 2,
            ..fake
        };
        assert!(!verify_witness(&fake));
    }

    #[test]
    fn search_order_two_has_no_witness() {
        let mut events = Vec::new();
        let summary = search_all_graphs(2, &SearchOptions::default(), |e| events.push(e)).unwrap();
        assert!(summary.completed);
        assert_eq!(summary.graphs_scanned, 2);
        assert_eq!(summary.witnesses, 0);
        assert_eq!(
            events,
            vec![SearchEvent::Progress {
                next_edge_mask: 2,
                graphs_scanned: 2,
                total_masks: 2
            }]
        );
    }

    #[test]
    fn connected_order_four_scans_38_graphs() {
        // Oracle: count connected labelled graphs on 4 vertices directly.
        let connected = (0..64u64)
            .filter(|&m| Graph::from_edge_mask(4, m).is_connected())
            .count() as u64;
        assert_eq!(connected, 38);
        let options = SearchOptions {
            connected_only: true,
            ..SearchOptions::default()
        };
        let summary = search_all_graphs(4, &options, |_| {}).unwrap();
        assert_eq!(summary.graphs_scanned, connected);
    }

    #[test]
    fn progress_is_monotone() {
        let options = SearchOptions {
            checkpoint_interval: 5,
            ..SearchOptions::default()
        };
        let mut marks = Vec::new();
        search_all_graphs(4, &options, |e| {
            if let SearchEvent::Progress { next_edge_mask, .. } = e {
                marks.push(next_edge_mask);
            }
        })
        .unwrap();
        assert!(marks.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(marks.last(), Some(&64));
    }

    #[test]
    fn search_rejects_large_orders() {
        assert!(matches!(
            search_all_graphs(8, &SearchOptions::default(), |_| {}),
            Err(SearchError::TooLarge { n: 8, max: 7 })
        ));
    }

    #[test]
    fn degree_sorted_filter_keeps_a_labelling_per_class() {
        let options = SearchOptions {
            degree_sorted_only: true,
            ..SearchOptions::default()
        };
        let summary = search_all_graphs(4, &options, |_| {}).unwrap();
        assert!(summary.graphs_scanned < 64);
        // All 11 isomorphism classes on 4 vertices have a sorted labelling;
        // their edge counts 0..=6 must all appear.
        let mut seen = [false; 7];
        for m in 0..64u64 {
            let g = Graph::from_edge_mask(4, m);
            if degrees_non_increasing(&g) {
                seen[g.edge_count()] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
}

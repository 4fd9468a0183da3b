//! Closed forms for paths and their cross-checks against enumeration.
//!
//! `J(n)` counts the 0₂-invoking subsets of the path on `n` vertices,
//! including `∅` and the whole vertex set. Fibonacci numbers are indexed
//! with `F(0) = 0`, `F(1) = 1`.

use rayon::prelude::*;

use crate::enumeration;
use crate::error::PathError;
use crate::graph::{Graph, VertexSet};
use crate::quiescence;

fn at_least(n: usize, min: usize) -> Result<(), PathError> {
    if n < min {
        Err(PathError::TooShort { n, min })
    } else {
        Ok(())
    }
}

/// `ceil(n / 3)`, the smallest nonempty 0₂-invoking subset size of `P_n`.
pub fn pq2_path_closed(n: usize) -> Result<usize, PathError> {
    at_least(n, 1)?;
    Ok(n.div_ceil(3))
}

/// `J(1) = 2`, `J(2) = 4`, `J(n) = J(n-1) + J(n-2) - 2`.
pub fn j_recurrence(n: usize) -> Result<u64, PathError> {
    at_least(n, 1)?;
    let (mut prev, mut cur) = (2u64, 4u64);
    if n == 1 {
        return Ok(prev);
    }
    for _ in 3..=n {
        let next = cur.checked_add(prev).ok_or(PathError::Overflow { n })? - 2;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `F(k)` with `F(0) = 0`, `F(1) = 1`; `None` past `u64`.
pub fn fibonacci(k: usize) -> Option<u64> {
    if k == 0 {
        return Some(0);
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..k {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(b)
}

/// `J(n) = 2 (F(n-1) + 1)`.
pub fn j_fibonacci(n: usize) -> Result<u64, PathError> {
    at_least(n, 1)?;
    fibonacci(n - 1)
        .and_then(|f| f.checked_add(1))
        .and_then(|f| f.checked_mul(2))
        .ok_or(PathError::Overflow { n })
}

/// Checks, over every proper nonempty 0₂-invoking subset `H` of `P_n`, that
/// exactly one of the last two vertices lies in `H`, and likewise for the
/// first two.
pub fn check_endpoint_lemma(n: usize) -> Result<bool, PathError> {
    at_least(n, 2)?;
    if n > enumeration::MAX_EXHAUSTIVE_VERTICES {
        return Err(crate::error::SearchError::TooLarge {
            n,
            max: enumeration::MAX_EXHAUSTIVE_VERTICES,
        }
        .into());
    }
    let g = Graph::path(n).expect("n >= 2");
    let full = g.full_mask();
    let last = 1u64 << (n - 1) | 1u64 << (n - 2);
    let first = 0b11u64;
    Ok((1..full).into_par_iter().all(|m| {
        let h = VertexSet::from_bits_unchecked(m, n);
        !quiescence::is_ccd(&g, h)
            || ((m & last).count_ones() == 1 && (m & first).count_ones() == 1)
    }))
}

/// One row of [`path_table`]. All `j_*` agree, as do both `pq2_*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathReportRow {
    pub n: usize,
    pub j_bruteforce: u64,
    pub j_recurrence: u64,
    pub j_fibonacci: u64,
    pub pq2_bruteforce: usize,
    pub pq2_closed: usize,
}

/// Rows for `1..=n_max`, each computed by enumeration and by both closed
/// forms. Any disagreement is returned as [`PathError::Inconsistent`].
pub fn path_table(n_max: usize) -> Result<Vec<PathReportRow>, PathError> {
    (1..=n_max)
        .map(|n| {
            let g = Graph::path(n).expect("n >= 1");
            let row = PathReportRow {
                n,
                j_bruteforce: enumeration::count_zero2_subsets(&g, true)?,
                j_recurrence: j_recurrence(n)?,
                j_fibonacci: j_fibonacci(n)?,
                pq2_bruteforce: quiescence::pq2(&g)
                    .map_err(crate::error::SearchError::from)?
                    .expect("a path has a nonempty 0₂-invoking subset"),
                pq2_closed: pq2_path_closed(n)?,
            };
            if row.j_bruteforce != row.j_recurrence || row.j_recurrence != row.j_fibonacci {
                return Err(PathError::Inconsistent {
                    n,
                    detail: format!(
                        "J by enumeration {}, recurrence {}, Fibonacci {}",
                        row.j_bruteforce, row.j_recurrence, row.j_fibonacci
                    ),
                });
            }
            if row.pq2_bruteforce != row.pq2_closed {
                return Err(PathError::Inconsistent {
                    n,
                    detail: format!(
                        "PQ2 by enumeration {}, closed form {}",
                        row.pq2_bruteforce, row.pq2_closed
                    ),
                });
            }
            Ok(row)
        })
        .collect()
}

/// CSV with header `n,j_bruteforce,j_recurrence,j_fibonacci,pq2_bruteforce,pq2_closed`.
pub fn path_table_to_csv(rows: &[PathReportRow]) -> String {
    let mut out =
        String::from("n,j_bruteforce,j_recurrence,j_fibonacci,pq2_bruteforce,pq2_closed\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.j_bruteforce, r.j_recurrence, r.j_fibonacci, r.pq2_bruteforce, r.pq2_closed
        ));
    }
    out
}

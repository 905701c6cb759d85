//! Exact matrix rank over the rationals.
//!
//! [`rank_fraction_free`] runs Bareiss elimination over any integral domain
//! with checked arithmetic; [`rank_over_field`] is plain Gaussian
//! elimination over a field. [`integer_rank`] strips unit pivots sparsely
//! and hands the remainder to Bareiss, widening `i64 -> i128 -> BigInt`
//! whenever an intermediate overflows.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Num};

use crate::{BigInt, SmallInt};

/// Rank by fraction-free elimination. Every intermediate entry is a minor
/// of the input, so the divisions by the previous pivot are exact.
/// Returns `None` if an operation overflows `T`.
pub fn rank_fraction_free<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + CheckedMul + CheckedSub,
{
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let lhs = pivot.checked_mul(&row[j])?;
                let rhs = factor.checked_mul(&pivot_row[j])?;
                let num = lhs.checked_sub(&rhs)?;
                debug_assert!(num.is_multiple_of(&prev));
                row[j] = num / prev.clone();
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Rank by Gaussian elimination with division; `F` must be a field.
pub fn rank_over_field<F>(mut rows: Vec<Vec<F>>) -> usize
where
    F: Clone + Num,
{
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot_row[col].clone();
            for j in col..ncols {
                row[j] = row[j].clone() - factor.clone() * pivot_row[j].clone();
            }
        }
        rank += 1;
    }
    rank
}

type SparseRow = BTreeMap<usize, SmallInt>;

/// Exact rank over `Q` of an integer matrix given as sparse rows
/// `(column, value)` over `ncols` columns.
pub fn integer_rank(rows: Vec<Vec<(usize, SmallInt)>>, ncols: usize) -> usize {
    let mut rows: Vec<SparseRow> = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|&(_, v)| v != 0).collect())
        .filter(|r: &SparseRow| !r.is_empty())
        .collect();
    let mut rank = 0;

    // Unit pivots keep everything integral without any division.
    while let Some((r, c)) = unit_pivot(&rows) {
        let pivot_row = rows.swap_remove(r);
        let sign = pivot_row[&c];
        let updated: Option<Vec<(usize, SparseRow)>> = rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.get(&c).map(|&a| (i, row, a)))
            .map(|(i, row, a)| {
                // row -= a * sign * pivot_row; sign = +-1 is its own inverse.
                let factor = a.checked_mul(sign)?;
                let mut next = row.clone();
                for (&j, &v) in &pivot_row {
                    let cur = next.get(&j).copied().unwrap_or(0);
                    match cur.checked_sub(factor.checked_mul(v)?)? {
                        0 => next.remove(&j),
                        x => next.insert(j, x),
                    };
                }
                Some((i, next))
            })
            .collect();
        let Some(updated) = updated else {
            // Leave the remainder, pivot included, to the dense path.
            rows.push(pivot_row);
            break;
        };
        for (i, next) in updated {
            rows[i] = next;
        }
        rank += 1;
        rows.retain(|r| !r.is_empty());
    }

    if rows.is_empty() {
        return rank;
    }
    let dense: Vec<Vec<SmallInt>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![0; ncols];
            for (&j, &v) in r {
                d[j] = v;
            }
            d
        })
        .collect();
    rank + dense_rank(dense)
}

fn dense_rank(dense: Vec<Vec<SmallInt>>) -> usize {
    if let Some(r) = rank_fraction_free(dense.clone()) {
        return r;
    }
    let wide: Vec<Vec<i128>> = dense.iter().map(|r| r.iter().map(|&v| i128::from(v)).collect()).collect();
    if let Some(r) = rank_fraction_free(wide) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = dense.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    rank_fraction_free(big).expect("BigInt arithmetic does not overflow")
}

/// A `+-1` entry in the sparsest row that has one.
fn unit_pivot(rows: &[SparseRow]) -> Option<(usize, usize)> {
    rows.iter()
        .enumerate()
        .filter_map(|(i, r)| {
            r.iter().find(|(_, &v)| v == 1 || v == -1).map(|(&c, _)| (r.len(), i, c))
        })
        .min()
        .map(|(_, i, c)| (i, c))
}

//! Theta-stable (= canonical) decomposition of a balanced dimension vector.
//!
//! The decomposition `d = c_1 d_1 + ... + c_s d_s` writes `d` as a
//! nonnegative combination of theta-stable balanced vectors such that
//! distinct summands pair to zero under the Euler form and imaginary
//! summands appear with multiplicity one. The general representation of
//! dimension `d` is a direct sum with exactly these factors.
//!
//! The search is exhaustive over multisets of stable summands, constrained
//! by the three invariants above. If several valid multisets exist the
//! lexicographically smallest is returned and `ambiguous` is set.

use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::dimvec::{euler_form_int, is_balanced, DimensionVector};
use crate::error::{Error, Result};
use crate::stability::{enumerate_stable, theta_stable};

/// Exhaustive search is exponential in `d0`; inputs above the bound are
/// rejected rather than silently truncated.
pub const DEFAULT_SEARCH_BOUND: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableDecomposition {
    /// `(multiplicity, vector)` terms, largest vector first.
    pub terms: Vec<(u64, DimensionVector)>,
    /// More than one multiset satisfied all invariants.
    pub ambiguous: bool,
    /// No multiset satisfied the invariants (does not occur for balanced
    /// input as far as the theory goes; recorded rather than assumed).
    pub none_found: bool,
}

impl StableDecomposition {
    /// `sum multiplicity * vector`, for reconstruction checks.
    pub fn reconstruct(&self, spec: &AlgebraSpec) -> DimensionVector {
        let mut d0 = 0u64;
        let mut entries: Vec<Vec<u64>> =
            spec.clusters().iter().map(|c| vec![0; c.len()]).collect();
        for (mult, v) in &self.terms {
            d0 += mult * v.d0;
            for (i, j) in spec.positions() {
                entries[i][j] += mult * v.entry(i, j);
            }
        }
        DimensionVector::new(d0, entries)
    }
}

/// Computes the theta-stable decomposition of a balanced nonzero vector
/// with `d0` at most `bound` (default [`DEFAULT_SEARCH_BOUND`]).
pub fn theta_stable_decomposition(
    spec: &AlgebraSpec,
    d: &DimensionVector,
    bound: Option<u64>,
) -> Result<StableDecomposition> {
    let bound = bound.unwrap_or(DEFAULT_SEARCH_BOUND);
    if d.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !is_balanced(spec, d)? {
        return Err(Error::NotBalanced(d.display()));
    }
    if d.d0 > bound {
        return Err(Error::BoundExceeded { d0: d.d0, bound });
    }

    // A stable vector is its own decomposition.
    if theta_stable(spec, d)?.stable {
        return Ok(StableDecomposition {
            terms: vec![(1, d.clone())],
            ambiguous: false,
            none_found: false,
        });
    }

    // Candidate summands: every stable vector strictly below level d0,
    // largest first so solutions come out in canonical order.
    let mut pool: Vec<DimensionVector> = Vec::new();
    for k in 1..d.d0 {
        pool.extend(enumerate_stable(spec, k)?);
    }
    pool.sort();
    pool.reverse();
    let imaginary: Vec<bool> = pool
        .iter()
        .map(|v| euler_form_int(spec, v, v).map(|q| q < 0))
        .collect::<Result<_>>()?;

    let mut solutions: Vec<Vec<(u64, DimensionVector)>> = Vec::new();
    let mut chosen: Vec<(u64, usize)> = Vec::new();
    search(
        spec,
        d.clone(),
        0,
        &pool,
        &imaginary,
        &mut chosen,
        &mut solutions,
    )?;

    if solutions.is_empty() {
        return Ok(StableDecomposition {
            terms: Vec::new(),
            ambiguous: false,
            none_found: true,
        });
    }
    let ambiguous = solutions.len() > 1;
    let best = solutions
        .into_iter()
        .min()
        .expect("at least one solution present");
    Ok(StableDecomposition {
        terms: best,
        ambiguous,
        none_found: false,
    })
}

/// Depth-first over pool indices in order, so every multiset is produced
/// exactly once. `remaining` stays componentwise nonnegative.
fn search(
    spec: &AlgebraSpec,
    remaining: DimensionVector,
    from: usize,
    pool: &[DimensionVector],
    imaginary: &[bool],
    chosen: &mut Vec<(u64, usize)>,
    solutions: &mut Vec<Vec<(u64, DimensionVector)>>,
) -> Result<()> {
    if remaining.is_zero() {
        solutions.push(
            chosen
                .iter()
                .map(|&(mult, idx)| (mult, pool[idx].clone()))
                .collect(),
        );
        return Ok(());
    }
    for idx in from..pool.len() {
        let v = &pool[idx];
        if v.d0 > remaining.d0 {
            continue;
        }
        // Distinct terms must be Euler-orthogonal (the form is symmetric on
        // balanced vectors, so one direction suffices).
        let orthogonal = chosen
            .iter()
            .map(|&(_, prev)| euler_form_int(spec, &pool[prev], v))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|q| q == 0);
        if !orthogonal {
            continue;
        }
        let max_mult = if imaginary[idx] { 1 } else { remaining.d0 / v.d0 };
        let mut left = remaining.clone();
        for mult in 1..=max_mult {
            let Some(next) = subtract(&left, v) else {
                break;
            };
            left = next;
            chosen.push((mult, idx));
            search(spec, left.clone(), idx + 1, pool, imaginary, chosen, solutions)?;
            chosen.pop();
        }
    }
    Ok(())
}

fn subtract(d: &DimensionVector, v: &DimensionVector) -> Option<DimensionVector> {
    if d.d0 < v.d0 {
        return None;
    }
    let mut entries = Vec::with_capacity(d.entries().len());
    for (row_d, row_v) in d.entries().iter().zip(v.entries()) {
        let mut row = Vec::with_capacity(row_d.len());
        for (&a, &b) in row_d.iter().zip(row_v) {
            if a < b {
                return None;
            }
            row.push(a - b);
        }
        entries.push(row);
    }
    Some(DimensionVector::new(d.d0 - v.d0, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(clusters: &[&[u64]]) -> AlgebraSpec {
        AlgebraSpec::new(clusters.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn dv(d0: u64, entries: &[&[u64]]) -> DimensionVector {
        DimensionVector::new(d0, entries.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn stable_input_is_its_own_decomposition() {
        let s = spec(&[&[1, 1], &[1, 1]]);
        let d = dv(2, &[&[1, 1], &[1, 1]]);
        let out = theta_stable_decomposition(&s, &d, None).unwrap();
        assert_eq!(out.terms, vec![(1, d)]);
        assert!(!out.ambiguous && !out.none_found);
    }

    #[test]
    fn doubled_real_root() {
        let s = spec(&[&[1, 1], &[1, 1]]);
        let d = dv(2, &[&[2, 0], &[2, 0]]);
        let out = theta_stable_decomposition(&s, &d, None).unwrap();
        assert_eq!(out.terms, vec![(2, dv(1, &[&[1, 0], &[1, 0]]))]);
        assert_eq!(out.reconstruct(&s), d);
    }

    #[test]
    fn mixed_level_three() {
        let s = spec(&[&[1, 1], &[1, 1]]);
        let d = dv(3, &[&[2, 1], &[2, 1]]);
        let out = theta_stable_decomposition(&s, &d, None).unwrap();
        assert_eq!(
            out.terms,
            vec![
                (1, dv(2, &[&[1, 1], &[1, 1]])),
                (1, dv(1, &[&[1, 0], &[1, 0]])),
            ]
        );
        assert!(!out.ambiguous);
        assert_eq!(out.reconstruct(&s), d);
    }

    #[test]
    fn rejects_unbalanced_zero_and_oversized() {
        let s = spec(&[&[1, 1], &[1, 1]]);
        assert!(theta_stable_decomposition(&s, &dv(2, &[&[2, 0], &[2, 1]]), None).is_err());
        assert!(theta_stable_decomposition(&s, &DimensionVector::zeros(&s), None).is_err());
        let big = dv(9, &[&[9, 0], &[9, 0]]);
        assert!(matches!(
            theta_stable_decomposition(&s, &big, None),
            Err(Error::BoundExceeded { d0: 9, bound: 8 })
        ));
        assert!(theta_stable_decomposition(&s, &big, Some(9)).is_ok());
    }

    #[test]
    fn imaginary_terms_have_multiplicity_one() {
        // On S3 * Z2 the imaginary stable vectors can only appear once; all
        // decompositions at low levels respect that.
        let s = spec(&[&[1, 1, 2], &[1, 1, 1]]);
        for n in 1..=4 {
            for d in crate::stability::enumerate_balanced(&s, n) {
                let out = theta_stable_decomposition(&s, &d, None).unwrap();
                if out.none_found {
                    continue;
                }
                assert_eq!(out.reconstruct(&s), d, "reconstruction for {}", d.display());
                for (mult, v) in &out.terms {
                    if euler_form_int(&s, v, v).unwrap() < 0 {
                        assert_eq!(*mult, 1);
                    }
                }
            }
        }
    }
}

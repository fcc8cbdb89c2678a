//! Extremal rays of the cone of balanced dimension vectors and the greedy
//! minimal conical decomposition.
//!
//! The cone has one extremal ray per way of choosing a single vertex in each
//! cluster: the tuple `u = (u_1, ..., u_m)` gives the rational vector
//! `delta_u` with 1 at the sink and `1/w_{i,u_i}` at the chosen vertices.
//! Every nonzero balanced vector is a positive combination of linearly
//! independent `delta_u`, found by repeatedly stripping the smallest
//! weighted entry.

use num::{BigInt, BigRational, One, Zero};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSpec;
use crate::dimvec::{is_balanced, DimensionVector, RationalVector};
use crate::error::{Error, Result};

/// One chosen vertex per cluster; positions are stored 0-indexed and
/// serialized 1-indexed to match the written convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayTuple(Vec<usize>);

impl RayTuple {
    /// Builds from 1-indexed positions, validating against the spec.
    pub fn from_one_indexed(spec: &AlgebraSpec, positions: Vec<usize>) -> Result<Self> {
        if positions.len() != spec.num_clusters() {
            return Err(Error::InvalidRayTuple(format!(
                "tuple length {} does not match {} clusters",
                positions.len(),
                spec.num_clusters()
            )));
        }
        for (i, &j) in positions.iter().enumerate() {
            if j == 0 || j > spec.cluster_size(i) {
                return Err(Error::InvalidRayTuple(format!(
                    "position {} out of range 1..={} in cluster {}",
                    j,
                    spec.cluster_size(i),
                    i + 1
                )));
            }
        }
        Ok(RayTuple(positions.into_iter().map(|j| j - 1).collect()))
    }

    pub(crate) fn from_zero_indexed(positions: Vec<usize>) -> Self {
        RayTuple(positions)
    }

    /// 0-indexed positions, one per cluster.
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn check(&self, spec: &AlgebraSpec) -> Result<()> {
        if self.0.len() != spec.num_clusters()
            || self.0.iter().enumerate().any(|(i, &j)| j >= spec.cluster_size(i))
        {
            return Err(Error::InvalidRayTuple(format!("{self:?} out of range")));
        }
        Ok(())
    }

    /// The weights `w_{i,u_i}` selected by the tuple.
    pub fn chosen_weights<'a>(&'a self, spec: &'a AlgebraSpec) -> impl Iterator<Item = u64> + 'a {
        self.0.iter().enumerate().map(|(i, &j)| spec.weight(i, j))
    }

    /// Number of chosen weights larger than 1. The ray of `delta_u` carries
    /// a real root iff this is at most 1, and is imaginary iff at least 2.
    pub fn nontrivial_weight_count(&self, spec: &AlgebraSpec) -> usize {
        self.chosen_weights(spec).filter(|&w| w > 1).count()
    }

    pub fn display(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|j| (j + 1).to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl Serialize for RayTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one_indexed: Vec<u64> = self.0.iter().map(|&j| j as u64 + 1).collect();
        one_indexed.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RayTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let one_indexed = Vec::<usize>::deserialize(d)?;
        if one_indexed.iter().any(|&j| j == 0) {
            return Err(serde::de::Error::custom("ray tuple positions are 1-indexed"));
        }
        Ok(RayTuple(one_indexed.into_iter().map(|j| j - 1).collect()))
    }
}

/// All tuples of the set `U`, lexicographically. There are `prod r_i`.
pub fn all_ray_tuples(spec: &AlgebraSpec) -> Vec<RayTuple> {
    let m = spec.num_clusters();
    let mut out = Vec::new();
    let mut current = vec![0usize; m];
    loop {
        out.push(RayTuple(current.clone()));
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < spec.cluster_size(i) {
                break;
            }
            current[i] = 0;
        }
    }
}

/// The extremal vector `delta_u`: 1 at the sink, `1/w_{i,u_i}` at the chosen
/// vertex of each cluster, 0 elsewhere. Always balanced.
pub fn extremal_ray(spec: &AlgebraSpec, u: &RayTuple) -> Result<RationalVector> {
    u.check(spec)?;
    let entries: Vec<Vec<BigRational>> = spec
        .clusters()
        .iter()
        .enumerate()
        .map(|(i, cluster)| {
            (0..cluster.len())
                .map(|j| {
                    if u.positions()[i] == j {
                        BigRational::new(BigInt::one(), BigInt::from(spec.weight(i, j)))
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(RationalVector::new(BigRational::one(), entries))
}

/// `<delta_u, delta_v> = sum_{i : u_i = v_i} 1/w_{i,u_i}^2 - (m - 1)`.
pub fn euler_ray_ray(spec: &AlgebraSpec, u: &RayTuple, v: &RayTuple) -> Result<BigRational> {
    u.check(spec)?;
    v.check(spec)?;
    let m = spec.num_clusters() as i64;
    let mut acc = BigRational::from_integer(BigInt::from(1 - m));
    for (i, (&uj, &vj)) in u.positions().iter().zip(v.positions()).enumerate() {
        if uj == vj {
            let w = spec.weight(i, uj);
            acc += BigRational::new(BigInt::one(), BigInt::from(w * w));
        }
    }
    Ok(acc)
}

/// The smallest integral vector on the ray of `delta_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalIntegral {
    pub vector: DimensionVector,
    /// The written convention defines minimality only when at most one chosen
    /// weight is nontrivial; with two or more we take the lcm of the chosen
    /// weights and flag the extension.
    pub lcm_convention: bool,
}

/// `lcm(chosen weights) * delta_u`, as an integral balanced vector.
pub fn minimal_integral_on_ray(spec: &AlgebraSpec, u: &RayTuple) -> Result<MinimalIntegral> {
    u.check(spec)?;
    let l = u.chosen_weights(spec).fold(1u64, num_integer::lcm);
    let entries: Vec<Vec<u64>> = spec
        .clusters()
        .iter()
        .enumerate()
        .map(|(i, cluster)| {
            (0..cluster.len())
                .map(|j| {
                    if u.positions()[i] == j {
                        l / spec.weight(i, j)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    Ok(MinimalIntegral {
        vector: DimensionVector::new(l, entries),
        lcm_convention: u.nontrivial_weight_count(spec) >= 2,
    })
}

/// One term of a conical decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub coeff: BigRational,
    pub tuple: RayTuple,
}

/// A minimal conical decomposition `d = sum coeff_t * delta_{u_t}` with
/// linearly independent rays. The greedy construction on integral balanced
/// input always yields positive integer coefficients; the rational type
/// also serves rescaled inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicalDecomposition {
    pub terms: Vec<DecompositionTerm>,
}

impl ConicalDecomposition {
    /// Recomputes `sum coeff * delta_u` exactly.
    pub fn reconstruct(&self, spec: &AlgebraSpec) -> Result<RationalVector> {
        let mut acc = RationalVector::zeros(spec);
        for term in &self.terms {
            let ray = extremal_ray(spec, &term.tuple)?;
            acc = acc.add(&ray.scale(&term.coeff));
        }
        Ok(acc)
    }
}

/// Tie-breaking rule for the greedy decomposition. `First` takes the
/// smallest cluster index then smallest position, both for the stripped
/// entry and for the free coordinates; `Seeded` draws uniformly among the
/// valid choices. Any rule satisfies the decomposition invariants.
#[derive(Debug, Clone, Copy)]
pub enum TieBreak {
    First,
    Seeded(u64),
}

/// Greedy minimal conical decomposition of a balanced nonzero vector with
/// deterministic first-index tie-breaking.
pub fn minimal_conical_decomposition(
    spec: &AlgebraSpec,
    d: &DimensionVector,
) -> Result<ConicalDecomposition> {
    minimal_conical_decomposition_with(spec, d, TieBreak::First)
}

/// Greedy decomposition with an explicit tie-breaking rule.
///
/// Each step picks `(i0, j0)` minimizing the nonzero products `d_ij * w_ij`,
/// picks a tuple `u` with `u_{i0} = j0` supported on positive entries,
/// subtracts `d_{i0,j0} w_{i0,j0} * delta_u`, and recurses on the strictly
/// smaller support. Intermediate vectors may be rational at nontrivial
/// weights, but the products `d_ij * w_ij` stay integral, so we track those.
pub fn minimal_conical_decomposition_with(
    spec: &AlgebraSpec,
    d: &DimensionVector,
    tie: TieBreak,
) -> Result<ConicalDecomposition> {
    if !is_balanced(spec, d)? {
        return Err(Error::NotBalanced(d.display()));
    }
    if d.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut rng = match tie {
        TieBreak::First => None,
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let m = spec.num_clusters();

    // Per-vertex products d_ij * w_ij and the sink value.
    let mut s: Vec<Vec<u64>> = d
        .entries()
        .iter()
        .zip(spec.clusters())
        .map(|(row, ws)| row.iter().zip(ws).map(|(&x, &w)| x * w).collect())
        .collect();
    let mut d0 = d.d0;

    let mut terms = Vec::new();
    let max_steps = spec.num_sources() + 1 - m;
    loop {
        assert!(terms.len() <= max_steps, "greedy decomposition failed to terminate");
        let support: Vec<Vec<usize>> = s
            .iter()
            .map(|row| (0..row.len()).filter(|&j| row[j] > 0).collect())
            .collect();
        if support.iter().all(|sup| sup.len() == 1) {
            let u = RayTuple(support.iter().map(|sup| sup[0]).collect());
            terms.push(DecompositionTerm {
                coeff: BigRational::from_integer(BigInt::from(d0)),
                tuple: u,
            });
            break;
        }

        let min_val = s.iter().flatten().copied().filter(|&x| x > 0).min().unwrap();
        let argmins: Vec<(usize, usize)> = spec
            .positions()
            .filter(|&(i, j)| s[i][j] == min_val)
            .collect();
        let (i0, j0) = match &mut rng {
            None => argmins[0],
            Some(r) => *argmins.choose(r).unwrap(),
        };

        let mut u = Vec::with_capacity(m);
        for (i, sup) in support.iter().enumerate() {
            if i == i0 {
                u.push(j0);
            } else {
                let j = match &mut rng {
                    None => sup[0],
                    Some(r) => *sup.choose(r).unwrap(),
                };
                u.push(j);
            }
        }

        let c = min_val;
        for (i, &j) in u.iter().enumerate() {
            debug_assert!(s[i][j] >= c);
            s[i][j] -= c;
        }
        d0 -= c;
        terms.push(DecompositionTerm {
            coeff: BigRational::from_integer(BigInt::from(c)),
            tuple: RayTuple(u),
        });
    }
    Ok(ConicalDecomposition { terms })
}

/// Exact integral rank test for a set of extremal vectors: true iff the
/// `delta_u` are linearly independent. Rays are cleared of denominators by
/// the common lcm of all weights, which does not change independence.
pub fn rays_linearly_independent(spec: &AlgebraSpec, tuples: &[RayTuple]) -> bool {
    let l: u64 = spec
        .clusters()
        .iter()
        .flatten()
        .copied()
        .fold(1, num_integer::lcm);
    let cols = 1 + spec.num_sources();
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(tuples.len());
    for u in tuples {
        let mut row = vec![0i128; cols];
        row[0] = l as i128;
        let mut offset = 1;
        for (i, cluster) in spec.clusters().iter().enumerate() {
            for j in 0..cluster.len() {
                if u.positions()[i] == j {
                    row[offset + j] = (l / spec.weight(i, j)) as i128;
                }
            }
            offset += cluster.len();
        }
        rows.push(row);
    }
    int_rank(rows) == tuples.len()
}

/// Fraction-free Gaussian elimination rank over the integers.
fn int_rank(mut rows: Vec<Vec<i128>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let p = &head[rank];
        for r in tail.iter_mut() {
            if r[col] != 0 {
                let a = p[col];
                let b = r[col];
                let g = num_integer::gcd(a, b);
                let (a, b) = (a / g, b / g);
                for c in col..cols {
                    r[c] = r[c] * a - p[c] * b;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

//! The free product `A = A_1 * ... * A_m` given by its cluster/weight data,
//! and the generalized subspace quiver derived from it.
//!
//! Each factor `A_i` is a product of matrix algebras; the weight `w_ij` is
//! the size of its `j`-th block, equivalently the dimension of the unique
//! simple module of that block. The quiver has a single sink `v0` and one
//! source `v_ij` per block, joined by `w_ij` parallel arrows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The free product, reduced to its combinatorial data: an ordered list of
/// clusters, each an ordered list of positive weights.
///
/// Weight lists are kept in user order; equality is positional. Clusters and
/// positions are reported 1-indexed everywhere a human sees them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecData", into = "SpecData")]
pub struct AlgebraSpec {
    clusters: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct SpecData {
    clusters: Vec<Vec<u64>>,
}

impl TryFrom<SpecData> for AlgebraSpec {
    type Error = Error;
    fn try_from(raw: SpecData) -> Result<Self> {
        AlgebraSpec::new(raw.clusters)
    }
}

impl From<AlgebraSpec> for SpecData {
    fn from(spec: AlgebraSpec) -> Self {
        SpecData {
            clusters: spec.clusters,
        }
    }
}

impl AlgebraSpec {
    /// Validates the cluster data: at least one cluster, no empty cluster,
    /// all weights positive, and no trivial factor (a cluster whose algebra
    /// is one-dimensional, i.e. weight list `[1]`).
    pub fn new(clusters: Vec<Vec<u64>>) -> Result<Self> {
        if clusters.is_empty() {
            return Err(Error::InvalidAlgebra("no clusters given".into()));
        }
        for (i, cluster) in clusters.iter().enumerate() {
            if cluster.is_empty() {
                return Err(Error::InvalidAlgebra(format!(
                    "cluster {} has no weights",
                    i + 1
                )));
            }
            if cluster.iter().any(|&w| w == 0) {
                return Err(Error::InvalidAlgebra(format!(
                    "cluster {} contains a zero weight",
                    i + 1
                )));
            }
            if cluster.iter().map(|&w| w * w).sum::<u64>() <= 1 {
                return Err(Error::TrivialFactor { cluster: i + 1 });
            }
        }
        Ok(AlgebraSpec { clusters })
    }

    /// Number of factors `m`.
    pub fn num_clusters(&self) -> usize {
        self.clusters.len()
    }

    /// Number of matrix blocks `r_i` of the `i`-th factor (0-indexed `i`).
    pub fn cluster_size(&self, i: usize) -> usize {
        self.clusters[i].len()
    }

    /// The weight `w_ij` (0-indexed `i`, `j`).
    pub fn weight(&self, i: usize, j: usize) -> u64 {
        self.clusters[i][j]
    }

    pub fn clusters(&self) -> &[Vec<u64>] {
        &self.clusters
    }

    /// Iterates over all source positions `(i, j)`, cluster-major.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.clusters
            .iter()
            .enumerate()
            .flat_map(|(i, c)| (0..c.len()).map(move |j| (i, j)))
    }

    /// Total number of source vertices of the quiver.
    pub fn num_sources(&self) -> usize {
        self.clusters.iter().map(|c| c.len()).sum()
    }

    /// Total number of arrows of the quiver.
    pub fn num_arrows(&self) -> u64 {
        self.clusters.iter().flatten().sum()
    }

    /// The dimension of each factor as an algebra, i.e. the per-cluster sums
    /// of squared weights (Wedderburn block sizes).
    pub fn cluster_dimensions(&self) -> Vec<u64> {
        self.clusters
            .iter()
            .map(|c| c.iter().map(|&w| w * w).sum())
            .collect()
    }

    /// True when every weight is 1, i.e. every factor is basic.
    pub fn all_weights_trivial(&self) -> bool {
        self.clusters.iter().flatten().all(|&w| w == 1)
    }
}

/// A vertex of the quiver: the sink, or the source attached to block `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Sink,
    /// 0-indexed (cluster, position).
    Source(usize, usize),
}

impl Vertex {
    /// Deterministic label; clusters and positions read 1-indexed.
    pub fn label(&self) -> String {
        match self {
            Vertex::Sink => "v0".to_string(),
            Vertex::Source(i, j) => format!("v{}_{}", i + 1, j + 1),
        }
    }
}

/// An arrow `alpha_ij^k : v_ij -> v0` (all indices 0-based in the fields).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub cluster: usize,
    pub position: usize,
    pub index: usize,
}

impl Arrow {
    pub fn label(&self) -> String {
        format!(
            "a{}_{}^{}",
            self.cluster + 1,
            self.position + 1,
            self.index + 1
        )
    }
}

/// The generalized subspace quiver of a spec: one sink, sources `v_ij`, and
/// `w_ij` parallel arrows from `v_ij` to the sink, in a fixed order
/// (cluster-major, position-minor, arrow index ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverGamma {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl QuiverGamma {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    /// Number of arrows out of `v_ij` (0-indexed).
    pub fn arrows_from(&self, cluster: usize, position: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.cluster == cluster && a.position == position)
            .count()
    }
}

/// Builds the quiver of a spec. Deterministic: identical specs yield
/// identical labelled quivers.
pub fn build_quiver(spec: &AlgebraSpec) -> QuiverGamma {
    let mut vertices = vec![Vertex::Sink];
    let mut arrows = Vec::new();
    for (i, cluster) in spec.clusters().iter().enumerate() {
        for (j, &w) in cluster.iter().enumerate() {
            vertices.push(Vertex::Source(i, j));
            for k in 0..w as usize {
                arrows.push(Arrow {
                    cluster: i,
                    position: j,
                    index: k,
                });
            }
        }
    }
    QuiverGamma { vertices, arrows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_trivial_factor() {
        let err = AlgebraSpec::new(vec![vec![1, 1], vec![1]]).unwrap_err();
        match err {
            Error::TrivialFactor { cluster } => assert_eq!(cluster, 2),
            other => panic!("expected TrivialFactor, got {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(AlgebraSpec::new(vec![]).is_err());
        assert!(AlgebraSpec::new(vec![vec![]]).is_err());
        assert!(AlgebraSpec::new(vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn accepts_single_matrix_factor() {
        // Mat_2(K) alone is a valid (finite, semisimple) algebra.
        let spec = AlgebraSpec::new(vec![vec![2]]).unwrap();
        let q = build_quiver(&spec);
        assert_eq!(q.num_vertices(), 2);
        assert_eq!(q.num_arrows(), 2);
    }

    #[test]
    fn paper_example_quiver() {
        // (K^2 x Mat_2(K)) * K^3: 7 vertices, 7 arrows, v_13 has 2 arrows.
        let spec = AlgebraSpec::new(vec![vec![1, 1, 2], vec![1, 1, 1]]).unwrap();
        let q = build_quiver(&spec);
        assert_eq!(q.num_vertices(), 7);
        assert_eq!(q.num_arrows(), 7);
        assert_eq!(q.arrows_from(0, 2), 2);
        assert_eq!(q.arrows_from(1, 0), 1);
    }

    #[test]
    fn tame_example_quiver() {
        // K^2 * K^2 has the subspace-quiver shape with 5 vertices, 4 arrows.
        let spec = AlgebraSpec::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        let q = build_quiver(&spec);
        assert_eq!(q.num_vertices(), 5);
        assert_eq!(q.num_arrows(), 4);
    }

    #[test]
    fn cluster_dimensions() {
        let spec = AlgebraSpec::new(vec![vec![1, 1, 2], vec![1, 1, 1]]).unwrap();
        assert_eq!(spec.cluster_dimensions(), vec![6, 3]);
        let spec = AlgebraSpec::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(spec.cluster_dimensions(), vec![2, 2]);
        let spec = AlgebraSpec::new(vec![vec![1, 1, 2]]).unwrap();
        assert_eq!(spec.cluster_dimensions(), vec![6]);
    }

    #[test]
    fn counts_match_closed_forms_small_sweep() {
        // Exhaustive over m <= 4... kept to m <= 3, r_i <= 3, w <= 3 here;
        // the acceptance suite runs the full sweep.
        for m in 1..=3usize {
            sweep_clusters(m, &mut Vec::new());
        }

        fn sweep_clusters(m: usize, acc: &mut Vec<Vec<u64>>) {
            if acc.len() == m {
                if let Ok(spec) = AlgebraSpec::new(acc.clone()) {
                    let q = build_quiver(&spec);
                    assert_eq!(q.num_vertices(), 1 + spec.num_sources());
                    assert_eq!(q.num_arrows() as u64, spec.num_arrows());
                }
                return;
            }
            for r in 1..=3usize {
                for pattern in 0..3u64.pow(r as u32) {
                    let mut cluster = Vec::with_capacity(r);
                    let mut x = pattern;
                    for _ in 0..r {
                        cluster.push(x % 3 + 1);
                        x /= 3;
                    }
                    acc.push(cluster);
                    sweep_clusters(m, acc);
                    acc.pop();
                }
            }
        }
    }

    #[test]
    fn labels_are_deterministic() {
        let spec = AlgebraSpec::new(vec![vec![1, 2]]).unwrap();
        let q = build_quiver(&spec);
        let labels: Vec<String> = q.arrows().iter().map(Arrow::label).collect();
        assert_eq!(labels, vec!["a1_1^1", "a1_2^1", "a1_2^2"]);
        assert_eq!(q.vertices()[0].label(), "v0");
        assert_eq!(q.vertices()[2].label(), "v1_2");
    }

    #[test]
    fn serde_round_trip() {
        let spec = AlgebraSpec::new(vec![vec![1, 1, 2], vec![1, 1, 1]]).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"clusters":[[1,1,2],[1,1,1]]}"#);
        let back: AlgebraSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        // Validation runs on deserialization too.
        assert!(serde_json::from_str::<AlgebraSpec>(r#"{"clusters":[[1]]}"#).is_err());
    }
}

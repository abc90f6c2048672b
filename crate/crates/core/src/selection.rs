//! Distance computations on the effective MA constellation and adaptive
//! choice of the relay map for an observed fade state.
//!
//! All minimum-distance quantities are computed through the difference-vector
//! view: the 256 x 255 ordered tuple pairs group into 6560 nonzero difference
//! vectors, and |h.(x - x')| depends only on the difference. Per-map
//! cross-cluster difference sets are fade-independent, so adaptive selection
//! reduces to one |h.delta| evaluation per difference vector plus a short
//! walk per map.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::constellation::Constellation;
use crate::fadespace::{all_nonzero_difference_vectors, DifferenceVector, FadeState};
use crate::hypercube::{ClusterMap, Codebook, SymbolTuple, CELLS};
use crate::{ComplexAmplitude, Error, EPS};

/// The 256 superposition points seen by the relay, in tuple-index order.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveConstellation {
    points: Vec<ComplexAmplitude>,
}

impl EffectiveConstellation {
    pub fn point(&self, x: SymbolTuple) -> ComplexAmplitude {
        self.points[x.index()]
    }

    pub fn points(&self) -> &[ComplexAmplitude] {
        &self.points
    }

    /// Number of points that are pairwise separated by more than `tol`.
    pub fn distinct_count(&self, tol: f64) -> usize {
        let mut reps: Vec<ComplexAmplitude> = Vec::new();
        for &p in &self.points {
            if reps.iter().all(|&q| (p - q).norm() > tol) {
                reps.push(p);
            }
        }
        reps.len()
    }
}

/// Superposition point `H_A x_A + H_B x_B + H_C x_C + H_D x_D` for every
/// transmit tuple.
pub fn effective_constellation(h: &FadeState) -> EffectiveConstellation {
    let cons = Constellation::psk(4).expect("M=4 supported");
    let points = SymbolTuple::all()
        .map(|x| {
            h.0[0] * cons.point(usize::from(x.a))
                + h.0[1] * cons.point(usize::from(x.b))
                + h.0[2] * cons.point(usize::from(x.c))
                + h.0[3] * cons.point(usize::from(x.d))
        })
        .collect();
    EffectiveConstellation { points }
}

fn diff_table() -> &'static Vec<DifferenceVector> {
    static DIFFS: OnceLock<Vec<DifferenceVector>> = OnceLock::new();
    DIFFS.get_or_init(all_nonzero_difference_vectors)
}

/// Unordered tuple pairs `(x, y)` with `x < y`, each tagged with the index of
/// `x - y` in the sorted difference table.
fn pair_diffs() -> &'static Vec<(u16, u16, u16)> {
    static PAIRS: OnceLock<Vec<(u16, u16, u16)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let cons = Constellation::psk(4).expect("M=4 supported");
        let diffs = diff_table();
        let mut out = Vec::with_capacity(CELLS * (CELLS - 1) / 2);
        for i in 0..CELLS {
            let x = SymbolTuple::from_index(i);
            for j in i + 1..CELLS {
                let y = SymbolTuple::from_index(j);
                let d = x.diff(y, &cons);
                let k = diffs.binary_search(&d).expect("pair difference is enumerated");
                out.push((i as u16, j as u16, k as u16));
            }
        }
        out
    })
}

/// `|h.delta|` for every enumerated difference vector, by table index.
fn diff_distances(h: &FadeState) -> Vec<f64> {
    diff_table().iter().map(|d| h.dot(d).norm()).collect()
}

/// Minimum distance of the effective constellation: the least `|h.(x - x')|`
/// over distinct tuple pairs. Zero (within tolerance) exactly at singular
/// fade states.
pub fn min_distance(h: &FadeState) -> f64 {
    diff_distances(h).into_iter().fold(f64::INFINITY, f64::min)
}

/// Scale-aware singularity test: `min_distance(h) < EPS * |h|`.
pub fn is_singular(h: &FadeState) -> bool {
    min_distance(h) < EPS * h.norm()
}

/// Minimum `|h.(x - x')|` over pairs with `x` in cluster `i` and `x'` in
/// cluster `j`.
pub fn cluster_distance(m: &ClusterMap, i: u16, j: u16, h: &FadeState) -> Result<f64, Error> {
    if !m.has_label(i) {
        return Err(Error::UnknownLabel(i));
    }
    if !m.has_label(j) {
        return Err(Error::UnknownLabel(j));
    }
    let cons = Constellation::psk(4).expect("M=4 supported");
    let (ci, cj) = (m.cluster(i), m.cluster(j));
    let mut best = f64::INFINITY;
    for &x in &ci {
        for &y in &cj {
            if x != y {
                best = best.min(h.dot(&x.diff(y, &cons)).norm());
            }
        }
    }
    Ok(best)
}

/// Marks, for one map, which difference-table entries ever occur between two
/// differently labeled tuples.
fn cross_diff_mask(m: &ClusterMap) -> Vec<bool> {
    let mut cross = vec![false; diff_table().len()];
    for &(i, j, k) in pair_diffs() {
        if m.labels()[usize::from(i)] != m.labels()[usize::from(j)] {
            cross[usize::from(k)] = true;
        }
    }
    cross
}

/// Minimum cluster distance of the map at fade state `h`: the least
/// `|h.(x - x')|` over pairs whose labels differ.
pub fn min_cluster_distance(m: &ClusterMap, h: &FadeState) -> f64 {
    let cross = cross_diff_mask(m);
    let dist = diff_distances(h);
    cross
        .iter()
        .zip(&dist)
        .filter(|(c, _)| **c)
        .map(|(_, d)| *d)
        .fold(f64::INFINITY, f64::min)
}

/// Precomputed per-map cross-cluster difference sets for a codebook, shared
/// read-only across fade realizations.
pub struct SelectionCache {
    cross: Vec<Vec<bool>>,
}

impl SelectionCache {
    pub fn new(cb: &Codebook) -> Self {
        // force the shared tables before the parallel section
        let _ = pair_diffs();
        let cross = crate::thread_pool().install(|| {
            cb.entries()
                .par_iter()
                .map(|(_, m)| cross_diff_mask(m))
                .collect()
        });
        SelectionCache { cross }
    }

    /// Codebook index maximizing the minimum cluster distance at `h`, with
    /// the achieved distance. Ties go to the lowest index. Matches the
    /// exhaustive per-map scan exactly: the distances are sorted ascending
    /// once, and each map's minimum is the first distance whose difference
    /// vector is cross-cluster for that map.
    pub fn select(&self, h: &FadeState) -> (usize, f64) {
        let dist = diff_distances(h);
        let mut order: Vec<u32> = (0..dist.len() as u32).collect();
        order.sort_unstable_by(|&a, &b| dist[a as usize].total_cmp(&dist[b as usize]));
        let mut best = (0usize, f64::NEG_INFINITY);
        for (idx, cross) in self.cross.iter().enumerate() {
            let d = order
                .iter()
                .find(|&&k| cross[k as usize])
                .map(|&k| dist[k as usize])
                .unwrap_or(f64::INFINITY);
            if d > best.1 {
                best = (idx, d);
            }
        }
        best
    }
}

/// Adaptive map choice: the codebook entry maximizing the minimum cluster
/// distance at `h` (lowest index on ties). Builds a fresh [`SelectionCache`];
/// callers selecting for many fade states should hold one cache instead.
pub fn select_map<'a>(cb: &'a Codebook, h: &FadeState) -> (usize, &'a ClusterMap) {
    assert!(!cb.is_empty(), "codebook must be nonempty");
    let (idx, _) = SelectionCache::new(cb).select(h);
    (idx, &cb.entry(idx).1)
}

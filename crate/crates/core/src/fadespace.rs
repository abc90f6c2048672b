//! Enumeration and classification of the singular fade subspaces of the
//! four-user MA channel.
//!
//! A fade state `(H_A, H_B, H_C, H_D)` is singular when two distinct transmit
//! tuples collide in the effective constellation at the relay, i.e. when the
//! fade vector lies in the null space `<v>⊥` of a nonzero difference vector
//! `v`. The difference vectors take entries in the finite set `D1 ∪ D2`, so
//! there are finitely many such subspaces: two difference vectors generate the
//! same subspace iff they are complex scalar multiples of one another, and
//! each scalar-multiple orbit has exactly 4 or 8 members.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::constellation::{in_d1, in_d1_or_d2, GaussianInt};
use crate::{ComplexAmplitude, Error, EPS};

/// A length-4 vector of entry-wise symbol differences, exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferenceVector(pub [GaussianInt; 4]);

impl DifferenceVector {
    pub fn entries(&self) -> &[GaussianInt; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..4).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn to_complex(&self) -> [ComplexAmplitude; 4] {
        [
            self.0[0].to_complex(),
            self.0[1].to_complex(),
            self.0[2].to_complex(),
            self.0[3].to_complex(),
        ]
    }

    /// Flat `[re0, im0, .., re3, im3]` form, used by the embedded fixtures.
    pub fn to_flat(&self) -> [i8; 8] {
        let mut out = [0i8; 8];
        for i in 0..4 {
            out[2 * i] = self.0[i].re as i8;
            out[2 * i + 1] = self.0[i].im as i8;
        }
        out
    }

    pub fn from_flat(flat: &[i8; 8]) -> Self {
        let mut e = [GaussianInt::ZERO; 4];
        for i in 0..4 {
            e[i] = GaussianInt::new(i32::from(flat[2 * i]), i32::from(flat[2 * i + 1]));
        }
        DifferenceVector(e)
    }
}

/// A fade 4-tuple `(H_A, H_B, H_C, H_D)`; also reused for the BC-phase
/// coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadeState(pub [ComplexAmplitude; 4]);

impl FadeState {
    /// Inner product without conjugation with a difference vector:
    /// `sum_i h_i * v_i`.
    pub fn dot(&self, v: &DifferenceVector) -> ComplexAmplitude {
        let mut acc = Complex::new(0.0, 0.0);
        for i in 0..4 {
            let e = v.0[i];
            if !e.is_zero() {
                acc += self.0[i] * e.to_complex();
            }
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|h| h.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, z: ComplexAmplitude) -> FadeState {
        FadeState([self.0[0] * z, self.0[1] * z, self.0[2] * z, self.0[3] * z])
    }
}

/// One singular fade subspace: a scalar-multiple orbit of difference vectors
/// together with its case classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceClass {
    /// Lexicographically least orbit member.
    pub canonical: DifferenceVector,
    /// All orbit members, sorted.
    pub orbit: Vec<DifferenceVector>,
    /// Number of nonzero coordinates (1..=4).
    pub case_id: u8,
    /// Case-specific subcase index (coordinate arrangement for cases 1-3,
    /// inner-ring entry count for case 4).
    pub subcase_id: u8,
    /// Whether an exclusive-law map can remove this subspace.
    pub removable: bool,
}

impl SubspaceClass {
    pub fn orbit_contains(&self, v: &DifferenceVector) -> bool {
        self.orbit.binary_search(v).is_ok()
    }
}

/// The eight nonzero values a single symbol difference can take.
fn nonzero_entries() -> [GaussianInt; 8] {
    [
        GaussianInt::new(-2, 0),
        GaussianInt::new(-1, -1),
        GaussianInt::new(-1, 1),
        GaussianInt::new(0, -2),
        GaussianInt::new(0, 2),
        GaussianInt::new(1, -1),
        GaussianInt::new(1, 1),
        GaussianInt::new(2, 0),
    ]
}

/// Candidate scalars for orbit computation: the units `±1, ±j`, the ring
/// scalars `±1±j` and their inverses `(±1±j)/2`. Any scalar mapping
/// `D1 ∪ D2` into itself must map the moduli `{√2, 2}` onto themselves, so
/// this set is complete.
fn scalar_candidates() -> [(GaussianInt, bool); 12] {
    [
        (GaussianInt::new(1, 0), false),
        (GaussianInt::new(-1, 0), false),
        (GaussianInt::new(0, 1), false),
        (GaussianInt::new(0, -1), false),
        (GaussianInt::new(1, 1), false),
        (GaussianInt::new(1, -1), false),
        (GaussianInt::new(-1, 1), false),
        (GaussianInt::new(-1, -1), false),
        (GaussianInt::new(1, 1), true),
        (GaussianInt::new(1, -1), true),
        (GaussianInt::new(-1, 1), true),
        (GaussianInt::new(-1, -1), true),
    ]
}

/// Every difference vector with exactly `case_id` nonzero entries, over all
/// coordinate placements.
pub fn enumerate_difference_vectors(case_id: u8) -> Vec<DifferenceVector> {
    assert!((1..=4).contains(&case_id));
    let nz = nonzero_entries();
    let mut out = Vec::new();
    for mask in 0u8..16 {
        if mask.count_ones() != u32::from(case_id) {
            continue;
        }
        let support: Vec<usize> = (0..4).filter(|&i| mask & (1 << i) != 0).collect();
        let k = support.len();
        let mut idx = vec![0usize; k];
        loop {
            let mut e = [GaussianInt::ZERO; 4];
            for (slot, &pos) in support.iter().enumerate() {
                e[pos] = nz[idx[slot]];
            }
            out.push(DifferenceVector(e));
            // odometer over the k entry choices
            let mut carry = 0;
            loop {
                idx[carry] += 1;
                if idx[carry] < nz.len() {
                    break;
                }
                idx[carry] = 0;
                carry += 1;
                if carry == k {
                    break;
                }
            }
            if carry == k {
                break;
            }
        }
    }
    out
}

/// The scalar-multiple orbit of `v`: all vectors with entries in `D1 ∪ D2`
/// (on `v`'s support) that generate the same complex span.
pub fn orbit(v: &DifferenceVector) -> Result<Vec<DifferenceVector>, Error> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut members = Vec::with_capacity(8);
    'scalars: for (z, halve) in scalar_candidates() {
        let mut w = [GaussianInt::ZERO; 4];
        for (slot, &e) in w.iter_mut().zip(&v.0) {
            if e.is_zero() {
                continue;
            }
            let mut p = e * z;
            if halve {
                match p.half() {
                    Some(h) => p = h,
                    None => continue 'scalars,
                }
            }
            if !in_d1_or_d2(p) {
                continue 'scalars;
            }
            *slot = p;
        }
        let w = DifferenceVector(w);
        if !members.contains(&w) {
            members.push(w);
        }
    }
    members.sort();
    Ok(members)
}

/// Deterministic representative: the lexicographically least orbit member
/// under the `(re, im)` coordinate-wise order.
pub fn canonical_representative(orbit: &[DifferenceVector]) -> DifferenceVector {
    *orbit.iter().min().expect("orbit is nonempty")
}

/// Whether an exclusive-law relay map can remove this subspace. Only the
/// all-coordinates-nonzero case is removable; for the others, some
/// singularity-removal constraint pair shares a coordinate and would force a
/// repeated label inside a hyperplane.
pub fn classify_removable(class: &SubspaceClass) -> bool {
    class.case_id == 4
}

fn case4_subcase(orbit: &[DifferenceVector]) -> u8 {
    if orbit
        .iter()
        .any(|w| w.0.iter().all(|&e| in_d1(e)))
    {
        4
    } else {
        orbit[0].0.iter().filter(|&&e| in_d1(e)).count() as u8
    }
}

fn arrangement_subcase(case_id: u8, support: &[usize]) -> u8 {
    match case_id {
        // one nonzero coordinate: subcase is that coordinate
        1 => support[0] as u8 + 1,
        // two nonzero: subcases ordered by the zero pair (A,B), (A,C), (A,D),
        // (B,C), (B,D), (C,D)
        2 => {
            let zeros: Vec<usize> = (0..4).filter(|i| !support.contains(i)).collect();
            match (zeros[0], zeros[1]) {
                (0, 1) => 1,
                (0, 2) => 2,
                (0, 3) => 3,
                (1, 2) => 4,
                (1, 3) => 5,
                (2, 3) => 6,
                _ => unreachable!(),
            }
        }
        // three nonzero: subcase is the zero coordinate
        3 => (0..4).find(|i| !support.contains(i)).unwrap() as u8 + 1,
        _ => unreachable!(),
    }
}

/// Partitions the nonzero difference vectors of every case into orbits and
/// returns one class per orbit. Per-case class counts are (4, 72, 448, 960).
pub fn enumerate_singular_subspaces() -> Vec<SubspaceClass> {
    let mut out = Vec::with_capacity(1484);
    for case_id in 1..=4u8 {
        let mut vectors = enumerate_difference_vectors(case_id);
        vectors.sort();
        let mut seen = std::collections::HashSet::with_capacity(vectors.len());
        for v in &vectors {
            if seen.contains(v) {
                continue;
            }
            let orb = orbit(v).expect("nonzero by construction");
            for w in &orb {
                seen.insert(*w);
            }
            let subcase_id = if case_id == 4 {
                case4_subcase(&orb)
            } else {
                arrangement_subcase(case_id, &v.support())
            };
            let canonical = canonical_representative(&orb);
            let mut class = SubspaceClass {
                canonical,
                orbit: orb,
                case_id,
                subcase_id,
                removable: false,
            };
            class.removable = classify_removable(&class);
            out.push(class);
        }
    }
    out
}

/// Every nonzero difference vector (6560 for M=4), sorted.
pub fn all_nonzero_difference_vectors() -> Vec<DifferenceVector> {
    let mut out: Vec<_> = (1..=4u8)
        .flat_map(enumerate_difference_vectors)
        .collect();
    out.sort();
    out
}

const SAMPLE_ATTEMPTS: usize = 100;

/// Draws a generic fade state on the subspace: `h · canonical = 0` while
/// `h · w != 0` for every enumerated difference vector outside the orbit.
/// The genericity check is exhaustive over all 6560 nonzero vectors.
pub fn sample_subspace_point(class: &SubspaceClass, seed: u64) -> Result<FadeState, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = class.canonical.to_complex();
    let pivot = (0..4)
        .max_by(|&a, &b| v[a].norm_sqr().total_cmp(&v[b].norm_sqr()))
        .unwrap();
    let all = all_nonzero_difference_vectors();
    for _ in 0..SAMPLE_ATTEMPTS {
        let mut h = [Complex::new(0.0, 0.0); 4];
        for (i, slot) in h.iter_mut().enumerate() {
            if i != pivot {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                *slot = Complex::new(re, im);
            }
        }
        let partial: ComplexAmplitude = (0..4).filter(|&i| i != pivot).map(|i| h[i] * v[i]).sum();
        h[pivot] = -partial / v[pivot];
        let state = FadeState(h);
        let threshold = EPS * state.norm();
        let generic = all.iter().all(|w| {
            if class.orbit_contains(w) {
                state.dot(w).norm() < threshold
            } else {
                state.dot(w).norm() > threshold
            }
        });
        if generic {
            return Ok(state);
        }
    }
    Err(Error::DegenerateSample(SAMPLE_ATTEMPTS))
}

//! Embedded reference data: the two relay-map tables and the printed orbit
//! groups used by the verification suite. Vectors are stored as flat
//! `[re0, im0, re1, im1, re2, im2, re3, im3]` integer arrays.

/// Orbit groups for the two-nonzero-entry pattern with the first two
/// coordinates active: 4 groups of 8 vectors, then 8 groups of 4.
pub const CASE2_AB_CLASSES: [&[[i8; 8]]; 12] = [
    &[[1, 1, 1, 1, 0, 0, 0, 0], [-1, -1, -1, -1, 0, 0, 0, 0], [1, -1, 1, -1, 0, 0, 0, 0], [-1, 1, -1, 1, 0, 0, 0, 0], [0, 2, 0, 2, 0, 0, 0, 0], [0, -2, 0, -2, 0, 0, 0, 0], [2, 0, 2, 0, 0, 0, 0, 0], [-2, 0, -2, 0, 0, 0, 0, 0]],
    &[[1, 1, -1, -1, 0, 0, 0, 0], [-1, -1, 1, 1, 0, 0, 0, 0], [-1, 1, 1, -1, 0, 0, 0, 0], [1, -1, -1, 1, 0, 0, 0, 0], [0, 2, 0, -2, 0, 0, 0, 0], [0, -2, 0, 2, 0, 0, 0, 0], [2, 0, -2, 0, 0, 0, 0, 0], [-2, 0, 2, 0, 0, 0, 0, 0]],
    &[[1, 1, 1, -1, 0, 0, 0, 0], [-1, -1, -1, 1, 0, 0, 0, 0], [-1, 1, 1, 1, 0, 0, 0, 0], [1, -1, -1, -1, 0, 0, 0, 0], [0, 2, 2, 0, 0, 0, 0, 0], [0, -2, -2, 0, 0, 0, 0, 0], [-2, 0, 0, 2, 0, 0, 0, 0], [2, 0, 0, -2, 0, 0, 0, 0]],
    &[[1, 1, -1, 1, 0, 0, 0, 0], [-1, -1, 1, -1, 0, 0, 0, 0], [-1, 1, -1, -1, 0, 0, 0, 0], [1, -1, 1, 1, 0, 0, 0, 0], [0, 2, -2, 0, 0, 0, 0, 0], [0, -2, 2, 0, 0, 0, 0, 0], [2, 0, 0, 2, 0, 0, 0, 0], [-2, 0, 0, -2, 0, 0, 0, 0]],
    &[[1, 1, 0, 2, 0, 0, 0, 0], [-1, -1, 0, -2, 0, 0, 0, 0], [-1, 1, -2, 0, 0, 0, 0, 0], [1, -1, 2, 0, 0, 0, 0, 0]],
    &[[1, 1, 0, -2, 0, 0, 0, 0], [-1, -1, 0, 2, 0, 0, 0, 0], [-1, 1, 2, 0, 0, 0, 0, 0], [1, -1, -2, 0, 0, 0, 0, 0]],
    &[[1, 1, 2, 0, 0, 0, 0, 0], [-1, -1, -2, 0, 0, 0, 0, 0], [-1, 1, 0, 2, 0, 0, 0, 0], [1, -1, 0, -2, 0, 0, 0, 0]],
    &[[1, 1, -2, 0, 0, 0, 0, 0], [-1, -1, 2, 0, 0, 0, 0, 0], [-1, 1, 0, -2, 0, 0, 0, 0], [1, -1, 0, 2, 0, 0, 0, 0]],
    &[[0, 2, 1, 1, 0, 0, 0, 0], [0, -2, -1, -1, 0, 0, 0, 0], [-2, 0, -1, 1, 0, 0, 0, 0], [2, 0, 1, -1, 0, 0, 0, 0]],
    &[[0, -2, 1, 1, 0, 0, 0, 0], [0, 2, -1, -1, 0, 0, 0, 0], [-2, 0, 1, -1, 0, 0, 0, 0], [2, 0, -1, 1, 0, 0, 0, 0]],
    &[[2, 0, 1, 1, 0, 0, 0, 0], [-2, 0, -1, -1, 0, 0, 0, 0], [0, 2, -1, 1, 0, 0, 0, 0], [0, -2, 1, -1, 0, 0, 0, 0]],
    &[[-2, 0, 1, 1, 0, 0, 0, 0], [2, 0, -1, -1, 0, 0, 0, 0], [0, -2, -1, 1, 0, 0, 0, 0], [0, 2, 1, -1, 0, 0, 0, 0]],
];

/// Orbit groups for the all-entries-nonzero, all-first-ring pattern:
/// 64 groups of 8 vectors each.
pub const CASE4_D1_CLASSES: [&[[i8; 8]]; 64] = [
    &[[1, 1, 1, 1, 1, 1, 1, 1], [-1, -1, -1, -1, -1, -1, -1, -1], [-1, 1, -1, 1, -1, 1, -1, 1], [1, -1, 1, -1, 1, -1, 1, -1], [0, 2, 0, 2, 0, 2, 0, 2], [0, -2, 0, -2, 0, -2, 0, -2], [2, 0, 2, 0, 2, 0, 2, 0], [-2, 0, -2, 0, -2, 0, -2, 0]],
    &[[1, 1, 1, 1, 1, 1, -1, -1], [-1, -1, -1, -1, -1, -1, 1, 1], [-1, 1, -1, 1, -1, 1, 1, -1], [1, -1, 1, -1, 1, -1, -1, 1], [0, 2, 0, 2, 0, 2, 0, -2], [0, -2, 0, -2, 0, -2, 0, 2], [2, 0, 2, 0, 2, 0, -2, 0], [-2, 0, -2, 0, -2, 0, 2, 0]],
    &[[1, 1, 1, 1, 1, 1, 1, -1], [-1, -1, -1, -1, -1, -1, -1, 1], [-1, 1, -1, 1, -1, 1, 1, 1], [1, -1, 1, -1, 1, -1, -1, -1], [0, 2, 0, 2, 0, 2, 2, 0], [0, -2, 0, -2, 0, -2, -2, 0], [2, 0, 2, 0, 2, 0, 0, -2], [-2, 0, -2, 0, -2, 0, 0, 2]],
    &[[1, 1, 1, 1, 1, 1, -1, 1], [-1, -1, -1, -1, -1, -1, 1, -1], [-1, 1, -1, 1, -1, 1, -1, -1], [1, -1, 1, -1, 1, -1, 1, 1], [0, 2, 0, 2, 0, 2, -2, 0], [0, -2, 0, -2, 0, -2, 2, 0], [2, 0, 2, 0, 2, 0, 0, 2], [-2, 0, -2, 0, -2, 0, 0, -2]],
    &[[1, 1, 1, 1, -1, -1, 1, 1], [-1, 1, -1, 1, 1, -1, -1, 1], [1, -1, 1, -1, -1, 1, 1, -1], [0, 2, 0, 2, 0, -2, 0, 2], [0, -2, 0, -2, 0, 2, 0, -2], [2, 0, 2, 0, -2, 0, 2, 0], [-2, 0, -2, 0, 2, 0, -2, 0], [-1, -1, -1, -1, 1, 1, -1, -1]],
    &[[1, 1, 1, 1, 1, -1, 1, 1], [-1, -1, -1, -1, -1, 1, -1, -1], [-1, 1, -1, 1, 1, 1, -1, 1], [1, -1, 1, -1, -1, -1, 1, -1], [0, 2, 0, 2, 2, 0, 0, 2], [0, -2, 0, -2, -2, 0, 0, -2], [2, 0, 2, 0, 0, -2, 2, 0], [-2, 0, -2, 0, 0, 2, -2, 0]],
    &[[1, 1, 1, 1, -1, 1, 1, 1], [-1, -1, -1, -1, 1, -1, -1, -1], [-1, 1, -1, 1, -1, -1, -1, 1], [1, -1, 1, -1, 1, 1, 1, -1], [0, 2, 0, 2, -2, 0, 0, 2], [0, -2, 0, -2, 2, 0, 0, -2], [2, 0, 2, 0, 0, 2, 2, 0], [-2, 0, -2, 0, 0, -2, -2, 0]],
    &[[1, 1, -1, -1, 1, 1, 1, 1], [-1, 1, 1, -1, -1, 1, -1, 1], [1, -1, -1, 1, 1, -1, 1, -1], [0, 2, 0, -2, 0, 2, 0, 2], [0, -2, 0, 2, 0, -2, 0, -2], [2, 0, -2, 0, 2, 0, 2, 0], [-2, 0, 2, 0, -2, 0, -2, 0], [-1, -1, 1, 1, -1, -1, -1, -1]],
    &[[1, 1, 1, -1, 1, 1, 1, 1], [-1, -1, -1, 1, -1, -1, -1, -1], [-1, 1, 1, 1, -1, 1, -1, 1], [1, -1, -1, -1, 1, -1, 1, -1], [0, 2, 2, 0, 0, 2, 0, 2], [0, -2, -2, 0, 0, -2, 0, -2], [2, 0, 0, -2, 2, 0, 2, 0], [-2, 0, 0, 2, -2, 0, -2, 0]],
    &[[1, 1, -1, 1, 1, 1, 1, 1], [-1, -1, 1, -1, -1, -1, -1, -1], [-1, 1, -1, -1, -1, 1, -1, 1], [1, -1, 1, 1, 1, -1, 1, -1], [0, 2, -2, 0, 0, 2, 0, 2], [0, -2, 2, 0, 0, -2, 0, -2], [2, 0, 0, 2, 2, 0, 2, 0], [-2, 0, 0, -2, -2, 0, -2, 0]],
    &[[-1, -1, 1, 1, 1, 1, 1, 1], [1, -1, -1, 1, -1, 1, -1, 1], [-1, 1, 1, -1, 1, -1, 1, -1], [0, -2, 0, 2, 0, 2, 0, 2], [0, 2, 0, -2, 0, -2, 0, -2], [-2, 0, 2, 0, 2, 0, 2, 0], [2, 0, -2, 0, -2, 0, -2, 0], [1, 1, -1, -1, -1, -1, -1, -1]],
    &[[1, -1, 1, 1, 1, 1, 1, 1], [-1, 1, -1, -1, -1, -1, -1, -1], [1, 1, -1, 1, -1, 1, -1, 1], [-1, -1, 1, -1, 1, -1, 1, -1], [2, 0, 0, 2, 0, 2, 0, 2], [-2, 0, 0, -2, 0, -2, 0, -2], [0, -2, 2, 0, 2, 0, 2, 0], [0, 2, -2, 0, -2, 0, -2, 0]],
    &[[-1, 1, 1, 1, 1, 1, 1, 1], [1, -1, -1, -1, -1, -1, -1, -1], [-1, -1, -1, 1, -1, 1, -1, 1], [1, 1, 1, -1, 1, -1, 1, -1], [-2, 0, 0, 2, 0, 2, 0, 2], [2, 0, 0, -2, 0, -2, 0, -2], [0, 2, 2, 0, 2, 0, 2, 0], [0, -2, -2, 0, -2, 0, -2, 0]],
    &[[1, 1, 1, 1, -1, -1, -1, -1], [-1, -1, -1, -1, 1, 1, 1, 1], [-1, 1, -1, 1, 1, -1, 1, -1], [1, -1, 1, -1, -1, 1, -1, 1], [0, 2, 0, 2, 0, -2, 0, -2], [0, -2, 0, -2, 0, 2, 0, 2], [2, 0, 2, 0, -2, 0, -2, 0], [-2, 0, -2, 0, 2, 0, 2, 0]],
    &[[1, 1, 1, 1, -1, -1, 1, -1], [-1, -1, -1, -1, 1, 1, -1, 1], [-1, 1, -1, 1, 1, -1, 1, 1], [1, -1, 1, -1, -1, 1, -1, -1], [0, 2, 0, 2, 0, -2, 2, 0], [0, -2, 0, -2, 0, 2, -2, 0], [2, 0, 2, 0, -2, 0, 0, -2], [-2, 0, -2, 0, 2, 0, 0, 2]],
    &[[1, 1, 1, 1, -1, -1, -1, 1], [-1, -1, -1, -1, 1, 1, 1, -1], [-1, 1, -1, 1, 1, -1, -1, -1], [1, -1, 1, -1, -1, 1, 1, 1], [0, 2, 0, 2, 0, -2, -2, 0], [0, -2, 0, -2, 0, 2, 2, 0], [2, 0, 2, 0, -2, 0, 0, 2], [-2, 0, -2, 0, 2, 0, 0, -2]],
    &[[1, 1, 1, 1, 1, -1, -1, -1], [-1, -1, -1, -1, -1, 1, 1, 1], [-1, 1, -1, 1, 1, 1, 1, -1], [1, -1, 1, -1, -1, -1, -1, 1], [0, 2, 0, 2, 2, 0, 0, -2], [0, -2, 0, -2, -2, 0, 0, 2], [2, 0, 2, 0, 0, -2, -2, 0], [-2, 0, -2, 0, 0, 2, 2, 0]],
    &[[1, 1, 1, 1, 1, -1, 1, -1], [-1, -1, -1, -1, -1, 1, -1, 1], [-1, 1, -1, 1, 1, 1, 1, 1], [1, -1, 1, -1, -1, -1, -1, -1], [0, 2, 0, 2, 2, 0, 2, 0], [0, -2, 0, -2, -2, 0, -2, 0], [2, 0, 2, 0, 0, -2, 0, -2], [-2, 0, -2, 0, 0, 2, 0, 2]],
    &[[1, 1, 1, 1, 1, -1, -1, 1], [-1, -1, -1, -1, -1, 1, 1, -1], [-1, 1, -1, 1, 1, 1, -1, -1], [1, -1, 1, -1, -1, -1, 1, 1], [0, 2, 0, 2, 2, 0, -2, 0], [0, -2, 0, -2, -2, 0, 2, 0], [2, 0, 2, 0, 0, -2, 0, 2], [-2, 0, -2, 0, 0, 2, 0, -2]],
    &[[1, 1, 1, 1, -1, 1, -1, -1], [-1, -1, -1, -1, 1, -1, 1, 1], [-1, 1, -1, 1, -1, -1, 1, -1], [1, -1, 1, -1, 1, 1, -1, 1], [0, 2, 0, 2, -2, 0, 0, -2], [0, -2, 0, -2, 2, 0, 0, 2], [2, 0, 2, 0, 0, 2, -2, 0], [-2, 0, -2, 0, 0, -2, 2, 0]],
    &[[1, 1, 1, 1, -1, 1, 1, -1], [-1, -1, -1, -1, 1, -1, -1, 1], [-1, 1, -1, 1, -1, -1, 1, 1], [1, -1, 1, -1, 1, 1, -1, -1], [0, 2, 0, 2, -2, 0, 2, 0], [0, -2, 0, -2, 2, 0, -2, 0], [2, 0, 2, 0, 0, 2, 0, -2], [-2, 0, -2, 0, 0, -2, 0, 2]],
    &[[1, 1, 1, 1, -1, 1, -1, 1], [-1, -1, -1, -1, 1, -1, 1, -1], [-1, 1, -1, 1, -1, -1, -1, -1], [1, -1, 1, -1, 1, 1, 1, 1], [0, 2, 0, 2, -2, 0, -2, 0], [0, -2, 0, -2, 2, 0, 2, 0], [2, 0, 2, 0, 0, 2, 0, 2], [-2, 0, -2, 0, 0, -2, 0, -2]],
    &[[1, 1, -1, -1, 1, 1, -1, -1], [-1, -1, 1, 1, -1, -1, 1, 1], [-1, 1, 1, -1, -1, 1, 1, -1], [1, -1, -1, 1, 1, -1, -1, 1], [0, 2, 0, -2, 0, 2, 0, -2], [0, -2, 0, 2, 0, -2, 0, 2], [2, 0, -2, 0, 2, 0, -2, 0], [-2, 0, 2, 0, -2, 0, 2, 0]],
    &[[1, 1, -1, -1, 1, 1, 1, -1], [-1, -1, 1, 1, -1, -1, -1, 1], [-1, 1, 1, -1, -1, 1, 1, 1], [1, -1, -1, 1, 1, -1, -1, -1], [0, 2, 0, -2, 0, 2, 2, 0], [0, -2, 0, 2, 0, -2, -2, 0], [2, 0, -2, 0, 2, 0, 0, -2], [-2, 0, 2, 0, -2, 0, 0, 2]],
    &[[1, 1, -1, -1, 1, 1, -1, 1], [-1, -1, 1, 1, -1, -1, 1, -1], [-1, 1, 1, -1, -1, 1, -1, -1], [1, -1, -1, 1, 1, -1, 1, 1], [0, 2, 0, -2, 0, 2, -2, 0], [0, -2, 0, 2, 0, -2, 2, 0], [2, 0, -2, 0, 2, 0, 0, 2], [-2, 0, 2, 0, -2, 0, 0, -2]],
    &[[1, 1, 1, -1, 1, 1, -1, -1], [-1, -1, -1, 1, -1, -1, 1, 1], [-1, 1, 1, 1, -1, 1, 1, -1], [1, -1, -1, -1, 1, -1, -1, 1], [0, 2, 2, 0, 0, 2, 0, -2], [0, -2, -2, 0, 0, -2, 0, 2], [2, 0, 0, -2, 2, 0, -2, 0], [-2, 0, 0, 2, -2, 0, 2, 0]],
    &[[1, 1, 1, -1, 1, 1, 1, -1], [-1, -1, -1, 1, -1, -1, -1, 1], [-1, 1, 1, 1, -1, 1, 1, 1], [1, -1, -1, -1, 1, -1, -1, -1], [0, 2, 2, 0, 0, 2, 2, 0], [0, -2, -2, 0, 0, -2, -2, 0], [2, 0, 0, -2, 2, 0, 0, -2], [-2, 0, 0, 2, -2, 0, 0, 2]],
    &[[1, 1, 1, -1, 1, 1, -1, 1], [-1, -1, -1, 1, -1, -1, 1, -1], [-1, 1, 1, 1, -1, 1, -1, -1], [1, -1, -1, -1, 1, -1, 1, 1], [0, 2, 2, 0, 0, 2, -2, 0], [0, -2, -2, 0, 0, -2, 2, 0], [2, 0, 0, -2, 2, 0, 0, 2], [-2, 0, 0, 2, -2, 0, 0, -2]],
    &[[1, 1, -1, 1, 1, 1, -1, -1], [-1, -1, 1, -1, -1, -1, 1, 1], [-1, 1, -1, -1, -1, 1, 1, -1], [1, -1, 1, 1, 1, -1, -1, 1], [0, 2, -2, 0, 0, 2, 0, -2], [0, -2, 2, 0, 0, -2, 0, 2], [2, 0, 0, 2, 2, 0, -2, 0], [-2, 0, 0, -2, -2, 0, 2, 0]],
    &[[1, 1, -1, 1, 1, 1, 1, -1], [-1, -1, 1, -1, -1, -1, -1, 1], [-1, 1, -1, -1, -1, 1, 1, 1], [1, -1, 1, 1, 1, -1, -1, -1], [0, 2, -2, 0, 0, 2, 2, 0], [0, -2, 2, 0, 0, -2, -2, 0], [2, 0, 0, 2, 2, 0, 0, -2], [-2, 0, 0, -2, -2, 0, 0, 2]],
    &[[1, 1, -1, 1, 1, 1, -1, 1], [-1, -1, 1, -1, -1, -1, 1, -1], [-1, 1, -1, -1, -1, 1, -1, -1], [1, -1, 1, 1, 1, -1, 1, 1], [0, 2, -2, 0, 0, 2, -2, 0], [0, -2, 2, 0, 0, -2, 2, 0], [2, 0, 0, 2, 2, 0, 0, 2], [-2, 0, 0, -2, -2, 0, 0, -2]],
    &[[1, 1, -1, -1, -1, -1, 1, 1], [-1, -1, 1, 1, 1, 1, -1, -1], [-1, 1, 1, -1, 1, -1, -1, 1], [1, -1, -1, 1, -1, 1, 1, -1], [0, 2, 0, -2, 0, -2, 0, 2], [0, -2, 0, 2, 0, 2, 0, -2], [2, 0, -2, 0, -2, 0, 2, 0], [-2, 0, 2, 0, 2, 0, -2, 0]],
    &[[1, 1, -1, -1, 1, -1, 1, 1], [-1, -1, 1, 1, -1, 1, -1, -1], [-1, 1, 1, -1, 1, 1, -1, 1], [1, -1, -1, 1, -1, -1, 1, -1], [0, 2, 0, -2, 2, 0, 0, 2], [0, -2, 0, 2, -2, 0, 0, -2], [2, 0, -2, 0, 0, -2, 2, 0], [-2, 0, 2, 0, 0, 2, -2, 0]],
    &[[1, 1, -1, -1, -1, 1, 1, 1], [-1, -1, 1, 1, 1, -1, -1, -1], [-1, 1, 1, -1, -1, -1, -1, 1], [1, -1, -1, 1, 1, 1, 1, -1], [0, 2, 0, -2, -2, 0, 0, 2], [0, -2, 0, 2, 2, 0, 0, -2], [2, 0, -2, 0, 0, 2, 2, 0], [-2, 0, 2, 0, 0, -2, -2, 0]],
    &[[1, 1, 1, -1, -1, -1, 1, 1], [-1, -1, -1, 1, 1, 1, -1, -1], [-1, 1, 1, 1, 1, -1, -1, 1], [1, -1, -1, -1, -1, 1, 1, -1], [0, 2, 2, 0, 0, -2, 0, 2], [0, -2, -2, 0, 0, 2, 0, -2], [2, 0, 0, -2, -2, 0, 2, 0], [-2, 0, 0, 2, 2, 0, -2, 0]],
    &[[1, 1, 1, -1, 1, -1, 1, 1], [-1, -1, -1, 1, -1, 1, -1, -1], [-1, 1, 1, 1, 1, 1, -1, 1], [1, -1, -1, -1, -1, -1, 1, -1], [0, 2, 2, 0, 2, 0, 0, 2], [0, -2, -2, 0, -2, 0, 0, -2], [2, 0, 0, -2, 0, -2, 2, 0], [-2, 0, 0, 2, 0, 2, -2, 0]],
    &[[1, 1, 1, -1, -1, 1, 1, 1], [-1, -1, -1, 1, 1, -1, -1, -1], [-1, 1, 1, 1, -1, -1, -1, 1], [1, -1, -1, -1, 1, 1, 1, -1], [0, 2, 2, 0, -2, 0, 0, 2], [0, -2, -2, 0, 2, 0, 0, -2], [2, 0, 0, -2, 0, 2, 2, 0], [-2, 0, 0, 2, 0, -2, -2, 0]],
    &[[1, 1, -1, 1, -1, -1, 1, 1], [-1, -1, 1, -1, 1, 1, -1, -1], [-1, 1, -1, -1, 1, -1, -1, 1], [1, -1, 1, 1, -1, 1, 1, -1], [0, 2, -2, 0, 0, -2, 0, 2], [0, -2, 2, 0, 0, 2, 0, -2], [2, 0, 0, 2, -2, 0, 2, 0], [-2, 0, 0, -2, 2, 0, -2, 0]],
    &[[1, 1, -1, 1, 1, -1, 1, 1], [-1, -1, 1, -1, -1, 1, -1, -1], [-1, 1, -1, -1, 1, 1, -1, 1], [1, -1, 1, 1, -1, -1, 1, -1], [0, 2, -2, 0, 2, 0, 0, 2], [0, -2, 2, 0, -2, 0, 0, -2], [2, 0, 0, 2, 0, -2, 2, 0], [-2, 0, 0, -2, 0, 2, -2, 0]],
    &[[1, 1, -1, 1, -1, 1, 1, 1], [-1, -1, 1, -1, 1, -1, -1, -1], [-1, 1, -1, -1, -1, -1, -1, 1], [1, -1, 1, 1, 1, 1, 1, -1], [0, 2, -2, 0, -2, 0, 0, 2], [0, -2, 2, 0, 2, 0, 0, -2], [2, 0, 0, 2, 0, 2, 2, 0], [-2, 0, 0, -2, 0, -2, -2, 0]],
    &[[-1, -1, 1, 1, 1, -1, 1, 1], [1, 1, -1, -1, -1, 1, -1, -1], [1, -1, -1, 1, 1, 1, -1, 1], [-1, 1, 1, -1, -1, -1, 1, -1], [0, -2, 0, 2, 2, 0, 0, 2], [0, 2, 0, -2, -2, 0, 0, -2], [-2, 0, 2, 0, 0, -2, 2, 0], [2, 0, -2, 0, 0, 2, -2, 0]],
    &[[-1, -1, 1, 1, -1, 1, 1, 1], [1, 1, -1, -1, 1, -1, -1, -1], [1, -1, -1, 1, -1, -1, -1, 1], [-1, 1, 1, -1, 1, 1, 1, -1], [0, -2, 0, 2, -2, 0, 0, 2], [0, 2, 0, -2, 2, 0, 0, -2], [-2, 0, 2, 0, 0, 2, 2, 0], [2, 0, -2, 0, 0, -2, -2, 0]],
    &[[1, -1, 1, 1, -1, -1, 1, 1], [-1, 1, -1, -1, 1, 1, -1, -1], [1, 1, -1, 1, 1, -1, -1, 1], [-1, -1, 1, -1, -1, 1, 1, -1], [2, 0, 0, 2, 0, -2, 0, 2], [-2, 0, 0, -2, 0, 2, 0, -2], [0, -2, 2, 0, -2, 0, 2, 0], [0, 2, -2, 0, 2, 0, -2, 0]],
    &[[1, -1, 1, 1, -1, 1, 1, 1], [-1, 1, -1, -1, 1, -1, -1, -1], [1, 1, -1, 1, -1, -1, -1, 1], [-1, -1, 1, -1, 1, 1, 1, -1], [2, 0, 0, 2, -2, 0, 0, 2], [-2, 0, 0, -2, 2, 0, 0, -2], [0, -2, 2, 0, 0, 2, 2, 0], [0, 2, -2, 0, 0, -2, -2, 0]],
    &[[-1, 1, 1, 1, -1, -1, 1, 1], [1, -1, -1, -1, 1, 1, -1, -1], [-1, -1, -1, 1, 1, -1, -1, 1], [1, 1, 1, -1, -1, 1, 1, -1], [-2, 0, 0, 2, 0, -2, 0, 2], [2, 0, 0, -2, 0, 2, 0, -2], [0, 2, 2, 0, -2, 0, 2, 0], [0, -2, -2, 0, 2, 0, -2, 0]],
    &[[-1, 1, 1, 1, 1, -1, 1, 1], [1, -1, -1, -1, -1, 1, -1, -1], [-1, -1, -1, 1, 1, 1, -1, 1], [1, 1, 1, -1, -1, -1, 1, -1], [-2, 0, 0, 2, 2, 0, 0, 2], [2, 0, 0, -2, -2, 0, 0, -2], [0, 2, 2, 0, 0, -2, 2, 0], [0, -2, -2, 0, 0, 2, -2, 0]],
    &[[-1, -1, 1, 1, 1, 1, 1, -1], [1, 1, -1, -1, -1, -1, -1, 1], [1, -1, -1, 1, -1, 1, 1, 1], [-1, 1, 1, -1, 1, -1, -1, -1], [0, -2, 0, 2, 0, 2, 2, 0], [0, 2, 0, -2, 0, -2, -2, 0], [-2, 0, 2, 0, 2, 0, 0, -2], [2, 0, -2, 0, -2, 0, 0, 2]],
    &[[-1, -1, 1, 1, 1, 1, -1, 1], [1, 1, -1, -1, -1, -1, 1, -1], [1, -1, -1, 1, -1, 1, -1, -1], [-1, 1, 1, -1, 1, -1, 1, 1], [0, -2, 0, 2, 0, 2, -2, 0], [0, 2, 0, -2, 0, -2, 2, 0], [-2, 0, 2, 0, 2, 0, 0, 2], [2, 0, -2, 0, -2, 0, 0, -2]],
    &[[1, -1, 1, 1, 1, 1, -1, -1], [-1, 1, -1, -1, -1, -1, 1, 1], [1, 1, -1, 1, -1, 1, 1, -1], [-1, -1, 1, -1, 1, -1, -1, 1], [2, 0, 0, 2, 0, 2, 0, -2], [-2, 0, 0, -2, 0, -2, 0, 2], [0, -2, 2, 0, 2, 0, -2, 0], [0, 2, -2, 0, -2, 0, 2, 0]],
    &[[1, -1, 1, 1, 1, 1, -1, 1], [-1, 1, -1, -1, -1, -1, 1, -1], [1, 1, -1, 1, -1, 1, -1, -1], [-1, -1, 1, -1, 1, -1, 1, 1], [2, 0, 0, 2, 0, 2, -2, 0], [-2, 0, 0, -2, 0, -2, 2, 0], [0, -2, 2, 0, 2, 0, 0, 2], [0, 2, -2, 0, -2, 0, 0, -2]],
    &[[-1, 1, 1, 1, 1, 1, -1, -1], [1, -1, -1, -1, -1, -1, 1, 1], [-1, -1, -1, 1, -1, 1, 1, -1], [1, 1, 1, -1, 1, -1, -1, 1], [-2, 0, 0, 2, 0, 2, 0, -2], [2, 0, 0, -2, 0, -2, 0, 2], [0, 2, 2, 0, 2, 0, -2, 0], [0, -2, -2, 0, -2, 0, 2, 0]],
    &[[-1, 1, 1, 1, 1, 1, 1, -1], [1, -1, -1, -1, -1, -1, -1, 1], [-1, -1, -1, 1, -1, 1, 1, 1], [1, 1, 1, -1, 1, -1, -1, -1], [-2, 0, 0, 2, 0, 2, 2, 0], [2, 0, 0, -2, 0, -2, -2, 0], [0, 2, 2, 0, 2, 0, 0, -2], [0, -2, -2, 0, -2, 0, 0, 2]],
    &[[-1, -1, 1, -1, 1, 1, 1, 1], [1, 1, -1, 1, -1, -1, -1, -1], [1, -1, 1, 1, -1, 1, -1, 1], [-1, 1, -1, -1, 1, -1, 1, -1], [0, -2, 2, 0, 0, 2, 0, 2], [0, 2, -2, 0, 0, -2, 0, -2], [-2, 0, 0, -2, 2, 0, 2, 0], [2, 0, 0, 2, -2, 0, -2, 0]],
    &[[-1, -1, -1, 1, 1, 1, 1, 1], [1, 1, 1, -1, -1, -1, -1, -1], [1, -1, -1, -1, -1, 1, -1, 1], [-1, 1, 1, 1, 1, -1, 1, -1], [0, -2, -2, 0, 0, 2, 0, 2], [0, 2, 2, 0, 0, -2, 0, -2], [-2, 0, 0, 2, 2, 0, 2, 0], [2, 0, 0, -2, -2, 0, -2, 0]],
    &[[1, -1, -1, -1, 1, 1, 1, 1], [-1, 1, 1, 1, -1, -1, -1, -1], [1, 1, 1, -1, -1, 1, -1, 1], [-1, -1, -1, 1, 1, -1, 1, -1], [2, 0, 0, -2, 0, 2, 0, 2], [-2, 0, 0, 2, 0, -2, 0, -2], [0, -2, -2, 0, 2, 0, 2, 0], [0, 2, 2, 0, -2, 0, -2, 0]],
    &[[1, -1, -1, 1, 1, 1, 1, 1], [-1, 1, 1, -1, -1, -1, -1, -1], [1, 1, -1, -1, -1, 1, -1, 1], [-1, -1, 1, 1, 1, -1, 1, -1], [2, 0, -2, 0, 0, 2, 0, 2], [-2, 0, 2, 0, 0, -2, 0, -2], [0, -2, 0, 2, 2, 0, 2, 0], [0, 2, 0, -2, -2, 0, -2, 0]],
    &[[-1, 1, -1, -1, 1, 1, 1, 1], [1, -1, 1, 1, -1, -1, -1, -1], [-1, -1, 1, -1, -1, 1, -1, 1], [1, 1, -1, 1, 1, -1, 1, -1], [-2, 0, 0, -2, 0, 2, 0, 2], [2, 0, 0, 2, 0, -2, 0, -2], [0, 2, -2, 0, 2, 0, 2, 0], [0, -2, 2, 0, -2, 0, -2, 0]],
    &[[-1, 1, 1, -1, 1, 1, 1, 1], [1, -1, -1, 1, -1, -1, -1, -1], [-1, -1, 1, 1, -1, 1, -1, 1], [1, 1, -1, -1, 1, -1, 1, -1], [-2, 0, 2, 0, 0, 2, 0, 2], [2, 0, -2, 0, 0, -2, 0, -2], [0, 2, 0, -2, 2, 0, 2, 0], [0, -2, 0, 2, -2, 0, -2, 0]],
    &[[1, 1, -1, -1, 1, -1, -1, 1], [-1, -1, 1, 1, -1, 1, 1, -1], [-1, 1, 1, -1, 1, 1, -1, -1], [1, -1, -1, 1, -1, -1, 1, 1], [0, 2, 0, -2, 2, 0, -2, 0], [0, -2, 0, 2, -2, 0, 2, 0], [2, 0, -2, 0, 0, -2, 0, 2], [-2, 0, 2, 0, 0, 2, 0, -2]],
    &[[1, 1, -1, -1, -1, 1, 1, -1], [-1, -1, 1, 1, 1, -1, -1, 1], [-1, 1, 1, -1, -1, -1, 1, 1], [1, -1, -1, 1, 1, 1, -1, -1], [0, 2, 0, -2, -2, 0, 2, 0], [0, -2, 0, 2, 2, 0, -2, 0], [2, 0, -2, 0, 0, 2, 0, -2], [-2, 0, 2, 0, 0, -2, 0, 2]],
    &[[1, 1, 1, -1, -1, -1, -1, 1], [-1, -1, -1, 1, 1, 1, 1, -1], [-1, 1, 1, 1, 1, -1, -1, -1], [1, -1, -1, -1, -1, 1, 1, 1], [0, 2, 2, 0, 0, -2, -2, 0], [0, -2, -2, 0, 0, 2, 2, 0], [2, 0, 0, -2, -2, 0, 0, 2], [-2, 0, 0, 2, 2, 0, 0, -2]],
    &[[1, 1, 1, -1, -1, 1, -1, -1], [-1, -1, -1, 1, 1, -1, 1, 1], [-1, 1, 1, 1, -1, -1, 1, -1], [1, -1, -1, -1, 1, 1, -1, 1], [0, 2, 2, 0, -2, 0, 0, -2], [0, -2, -2, 0, 2, 0, 0, 2], [2, 0, 0, -2, 0, 2, -2, 0], [-2, 0, 0, 2, 0, -2, 2, 0]],
    &[[1, 1, -1, 1, -1, -1, 1, -1], [-1, -1, 1, -1, 1, 1, -1, 1], [-1, 1, -1, -1, 1, -1, 1, 1], [1, -1, 1, 1, -1, 1, -1, -1], [0, 2, -2, 0, 0, -2, 2, 0], [0, -2, 2, 0, 0, 2, -2, 0], [2, 0, 0, 2, -2, 0, 0, -2], [-2, 0, 0, -2, 2, 0, 0, 2]],
    &[[1, 1, -1, 1, 1, -1, -1, -1], [-1, -1, 1, -1, -1, 1, 1, 1], [-1, 1, -1, -1, 1, 1, 1, -1], [1, -1, 1, 1, -1, -1, -1, 1], [0, 2, -2, 0, 2, 0, 0, -2], [0, -2, 2, 0, -2, 0, 0, 2], [2, 0, 0, 2, 0, -2, -2, 0], [-2, 0, 0, -2, 0, 2, 2, 0]],
];

/// The worked-example relay map: a 4-fold Latin hyper-cube consistent with
/// the constraint partition of the `(-1-j, 1+j, 1+j, 1-j)` subspace.
/// Indexed by `a*64 + b*16 + c*4 + d`.
pub const TABLE1_LABELS: [u16; 256] = [
    16, 17, 18, 19, 30, 29, 32, 31, 47, 48, 45, 46, 64, 63, 62, 61,
    25, 26, 27, 28, 9, 10, 20, 21, 11, 12, 60, 59, 52, 51, 50, 49,
    37, 38, 39, 40, 13, 14, 57, 58, 15, 2, 1, 22, 36, 4, 3, 35,
    53, 54, 55, 56, 42, 41, 44, 43, 33, 6, 5, 34, 24, 8, 7, 23,
    20, 21, 10, 9, 26, 25, 28, 27, 51, 52, 49, 50, 60, 59, 12, 11,
    29, 30, 31, 32, 17, 16, 19, 18, 63, 64, 61, 62, 48, 47, 46, 45,
    41, 42, 43, 44, 54, 53, 56, 55, 23, 7, 8, 24, 34, 5, 6, 33,
    57, 58, 14, 13, 38, 37, 40, 39, 35, 3, 4, 36, 22, 1, 2, 15,
    1, 22, 15, 2, 3, 36, 35, 4, 39, 40, 37, 38, 58, 57, 13, 14,
    5, 33, 34, 6, 7, 24, 23, 8, 55, 56, 53, 54, 44, 43, 42, 41,
    45, 46, 47, 48, 62, 61, 64, 63, 18, 19, 16, 17, 32, 31, 30, 29,
    59, 60, 11, 12, 50, 49, 52, 51, 27, 28, 25, 26, 21, 20, 9, 10,
    8, 23, 24, 7, 6, 34, 33, 5, 43, 44, 41, 42, 56, 55, 54, 53,
    4, 35, 36, 3, 2, 15, 22, 1, 14, 13, 58, 57, 40, 39, 38, 37,
    49, 50, 51, 52, 12, 11, 59, 60, 10, 9, 21, 20, 28, 27, 26, 25,
    61, 62, 63, 64, 46, 45, 48, 47, 31, 32, 29, 30, 19, 18, 17, 16,
];

/// The fixed relay map used by the non-adaptive two-channel-use scheme.
/// Indexed by `a*64 + b*16 + c*4 + d`.
pub const TABLE2_LABELS: [u16; 256] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
    22, 21, 24, 23, 18, 17, 20, 19, 30, 29, 32, 31, 26, 25, 28, 27,
    43, 44, 41, 42, 47, 48, 45, 46, 35, 36, 33, 34, 39, 40, 37, 38,
    64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49,
    17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32,
    38, 37, 40, 39, 34, 33, 36, 35, 46, 45, 48, 47, 42, 41, 44, 43,
    59, 60, 57, 58, 63, 64, 61, 62, 51, 52, 49, 50, 55, 56, 53, 54,
    16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1,
    33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48,
    54, 53, 56, 55, 50, 49, 52, 51, 62, 61, 64, 63, 58, 57, 60, 59,
    11, 12, 9, 10, 15, 16, 13, 14, 3, 4, 1, 2, 7, 8, 5, 6,
    32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
    49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64,
    6, 5, 8, 7, 2, 1, 4, 3, 14, 13, 16, 15, 10, 9, 12, 11,
    27, 28, 25, 26, 31, 32, 29, 30, 19, 20, 17, 18, 23, 24, 21, 22,
    48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,
];

//! Graph-pair codec strings and fusion data for the classification landmarks.

/// The Haagerup principal graph pair.
pub const HAAGERUP: &str = "bwd1v1v1v1p1v1x0p0x1v1x0p0x1duals1v1v1x2v2x1,bwd1v1v1v1p1v1x0p1x0duals1v1v1x2";

/// Both graphs the Haagerup principal graph (fails the triple point
/// obstruction).
pub const HAAGERUP_DOUBLED: &str = "bwd1v1v1v1p1v1x0p0x1v1x0p0x1duals1v1v1x2v2x1,bwd1v1v1v1p1v1x0p0x1v1x0p0x1duals1v1v1x2v2x1";

/// The extended Haagerup pair (supertransitivity 7).
pub const EXTENDED_HAAGERUP: &str = "bwd1v1v1v1v1v1v1v1p1v1x0p0x1v1x0p0x1duals1v1v1v1v1x2v2x1,bwd1v1v1v1v1v1v1v1p1v1x0p1x0duals1v1v1v1v1x2";

/// Weeds with annular multiplicities *11 (Theorem 3.1 case (e)).
pub const WEEDS_11: [&str; 6] = [
    "bwd1v1v1p1v0x1p1x0p0x1v1x0x0p0x0x1p0x1x0p0x1x0v0x0x1x0p1x0x0x0p0x1x0x0v0x1x0p0x0x1p1x0x0vduals1v1v1x3x2v1x3x2v,bwd1v1v1p1v0x1p1x0p0x1v0x1x0p0x0x1p1x0x0p0x1x0v1x0x0x0p0x1x0x0p0x0x1x0v0x0x1p1x0x0p0x1x0vduals1v1v1x3x2v1x3x2v",
    "bwd1v1v1p1v1x0p0x1p1x0v0x0x1p0x1x0p1x0x0p0x1x0v0x0x0x1p0x1x0x0p1x0x0x0p0x0x1x0p1x0x0x0v1x0x0x0x0p0x0x0x0x1p0x1x0x0x0p0x0x0x1x0p0x0x0x1x0vduals1v1v1x3x2v1x3x2x5x4v,bwd1v1v1p1v1x0p0x1p1x0v0x0x1p0x1x0p0x1x0p1x0x0v0x0x1x0p0x1x0x0p1x0x0x0p0x0x0x1p1x0x0x0v0x0x0x0x1p1x0x0x0x0p0x0x0x1x0p0x1x0x0x0p0x0x0x1x0vduals1v1v1x3x2v1x3x2x5x4v",
    "bwd1v1v1v1p1v1x0p1x0p0x1v0x0x1p0x0x1p1x0x0vduals1v1v1x2v1x3x2,bwd1v1v1v1p1v1x0p0x1p1x0v0x0x1p0x1x0p1x0x0vduals1v1v1x2v1x3x2",
    "bwd1v1v1v1p1v1x0p0x1p0x1v0x0x1p1x0x0p1x0x0p0x1x0v0x0x1x0p1x0x0x0p0x0x0x1vduals1v1v1x2v1x2x4x3v,bwd1v1v1v1p1v1x0p1x0p0x1v1x0x0p0x0x1p0x1x0p0x0x1v0x0x0x1p0x0x1x0p1x0x0x0vduals1v1v1x2v1x2x4x3v",
    "bwd1v1v1v1p1v1x0p0x1p0x1v1x0x0p1x0x0p0x1x0p0x0x1v1x0x0x0p0x0x1x0p0x1x0x0p0x0x0x1vduals1v1v1x2v1x3x2x4v,bwd1v1v1v1p1v1x0p1x0p0x1v1x0x0p0x1x0p0x0x1p0x0x1v1x0x0x0p1x0x0x0p0x0x1x0p0x1x0x0vduals1v1v1x2v1x3x2x4v",
    "bwd1v1v1v1p1v1x0p1x0p0x1v0x1x0p0x0x1p0x0x1p1x0x0v1x0x0x0p0x0x1x0p0x0x0x1p1x0x0x0v0x0x1x0p0x1x0x0p1x0x0x0vduals1v1v1x2v1x2x4x3v1x3x2,bwd1v1v1v1p1v1x0p0x1p1x0v0x0x1p0x1x0p0x1x0p1x0x0v0x0x0x1p0x0x1x0p1x0x0x0p0x1x0x0v1x0x0x0p0x0x1x0p0x1x0x0p0x0x0x1p1x0x0x0vduals1v1v1x2v1x2x4x3v1x3x2x5x4",
];

/// Weeds with annular multiplicities *10 (Theorem 3.1 case (f)).
pub const WEEDS_10: [&str; 9] = [
    "bwd1v1v1v1p1v1x0p0x1v1x1p0x1v0x1vduals1v1v1x2v1x2v,bwd1v1v1v1p1v1x0p1x0v0x1p0x1p1x0v1x0x0vduals1v1v1x2v1x2x3v",
    "bwd1v1v1v1p1v1x0p1x0v1x0v1p1vduals1v1v1x2v1v,bwd1v1v1v1p1v1x0p0x1v1x0p0x1p1x0v1x0x0p0x1x0vduals1v1v1x2v1x3x2v",
    "bwd1v1v1v1p1v1x0p0x1v0x1p1x0p1x1v0x1x0vduals1v1v1x2v1x2x3v,bwd1v1v1v1p1v1x0p1x0v1x0p1x0p0x1p0x1v1x0x0x0vduals1v1v1x2v1x2x4x3v",
    "bwd1v1v1v1p1v1x0p0x1v0x1p1x0p1x1v1x0x0vduals1v1v1x2v1x2x3v,bwd1v1v1v1p1v1x0p1x0v1x0p0x1p1x0p0x1v0x1x0x0vduals1v1v1x2v1x2x3x4v",
    "bwd1v1v1v1p1v1x0p0x1v0x1p1x0p1x0p0x1v0x0x0x1p0x0x1x0vduals1v1v1x2v1x2x4x3v,bwd1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1vduals1v1v1x2v1x2v",
    "bwd1v1v1v1p1v1x0p0x1v1x1v1v1p1v1x0vduals1v1v1x2v1v1x2v,bwd1v1v1v1p1v1x0p1x0v1x0p0x1v1x1v1v1vduals1v1v1x2v1x2v1v",
    "bwd1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v0x1x0x0p0x0x1x0p0x0x0x1vduals1v1v1x2v1x3x2x4v,bwd1v1v1v1p1v1x0p1x0v1x0p0x1v0x1p1x0p0x1vduals1v1v1x2v1x2v",
    "bwd1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1p1x0p0x1v1x0x0x0p0x0x0x1p0x0x1x0vduals1v1v1x2v1x2v1x3x2,bwd1v1v1v1p1v1x0p0x1v1x0p0x1p0x1p1x0v1x0x0x0p0x1x0x0p0x0x1x0p0x0x0x1v1x0x0x0p0x0x1x0p0x0x0x1p0x0x1x0p1x0x0x0p0x0x0x1p0x1x0x0vduals1v1v1x2v1x2x4x3v1x2x3x5x4x7x6",
    "bwd1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1p1x0p0x1v0x0x0x1p0x0x1x0v1x0p0x1p1x0p0x1v0x1x0x0p0x0x1x0vduals1v1v1x2v1x2v2x1v1x2,bwd1v1v1v1p1v1x0p0x1v1x0p0x1p0x1p1x0v1x0x0x0p0x1x0x0p0x0x1x0p0x0x0x1v0x0x1x0p0x0x0x1p0x0x1x0p1x0x0x0p0x0x0x1p0x1x0x0v0x0x0x1x0x0p0x1x0x0x0x0p1x0x0x0x0x0p0x0x0x0x0x1v0x0x0x1p1x0x0x0p0x0x1x0p0x1x0x0p0x1x0x0p1x0x0x0p0x0x0x1p0x0x1x0vduals1v1v1x2v1x2x4x3v1x2x4x3x6x5v2x1x4x3x6x5x8x7",
];

/// Stable graphs with annular multiplicities *20 (Theorem 3.1 case (g); all
/// 4-spokes).
pub const WEEDS_20: [&str; 11] = [
    "bwd1v1v1p1p1v0x0x1vduals1v1v1,bwd1v1v1p1p1v0x0x1vduals1v1v1",
    "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x3x2,bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x3x2",
    "bwd1v1v1v1p1p1v1x0x0vduals1v1v1x3x2v,bwd1v1v1v1p1p1v1x0x0vduals1v1v1x3x2v",
    "bwd1v1v1p1p1v0x1x0p0x0x1vduals1v1v1x2,bwd1v1v1p1p1v0x1x0p0x0x1vduals1v1v1x2",
    "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x2x3,bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x2x3",
    "bwd1v1v1v1p1p1v0x1x0vduals1v1v1x2x3v,bwd1v1v1v1p1p1v1x0x0vduals1v1v1x2x3v",
    "bwd1v1v1p1p1v1x0x0p0x0x1vduals1v1v2x1,bwd1v1v1p1p1v1x0x0p0x0x1vduals1v1v2x1",
    "bwd1v1v1v1p1p1v0x1x0p0x0x1vduals1v1v1x3x2v,bwd1v1v1v1p1p1v0x1x0p0x0x1vduals1v1v1x3x2v",
    "bwd1v1v1v1p1p1v0x1x0p0x0x1vduals1v1v1x2x3v,bwd1v1v1v1p1p1v1x0x0p0x0x1vduals1v1v1x2x3v",
    "bwd1v1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x3x2v,bwd1v1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x3x2v",
    "bwd1v1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x2x3v,bwd1v1v1v1p1p1v1x0x0p0x1x0p0x0x1vduals1v1v1x2x3v",
];

pub fn theorem31_all() -> Vec<&'static str> {
    WEEDS_11
        .iter()
        .chain(WEEDS_10.iter())
        .chain(WEEDS_20.iter())
        .copied()
        .collect()
}

/// The surviving vines (translations of these are the only vine candidates).
pub const VINES: [&str; 15] = [
    "bwd1v1v1p1v1x0p0x1p0x1v1x1x0p0x0x1duals1v1v3x2x1,bwd1v1v1p1v1x0p0x1p0x1v1x1x0p0x0x1duals1v1v3x2x1",
    "bwd1v1v1p1v1x0p1x0p0x1p0x1v0x1x1x0duals1v1v1x3x2x4,bwd1v1v1p1v1x1v1v1duals1v1v1v1",
    "bwd1v1v1p1v1x0p1x0p0x1p0x1v0x1x1x0duals1v1v4x2x3x1,bwd1v1v1p1v1x1v1v1duals1v1v1v1",
    "bwd1v1v1p1v1x1v1v1duals1v1v1v1,bwd1v1v1p1v1x1v1v1duals1v1v1v1",
    "bwd1v1v1v1p1v1x0p0x1v1x0p0x1duals1v1v1x2v2x1,bwd1v1v1v1p1v1x0p1x0duals1v1v1x2",
    "bwd1v1v1v1p1p1v0x1x0p0x1x0duals1v1v1x2x3,bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x2x3",
    "bwd1v1v1v1p1p1v0x1x0p0x1x0duals1v1v1x2x3,bwd1v1v1v1p1p1v1x0x0p0x0x1v1x0p0x1duals1v1v1x2x3v2x1",
    "bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x3x2,bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x3x2",
    "bwd1v1v1v1p1p1v0x1x0p0x0x1v1x0p0x1duals1v1v1x3x2v1x2,bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x3x2",
    "bwd1v1v1v1p1p1v0x1x0p0x1x0p0x0x1v0x0x1duals1v1v1x2x3v1,bwd1v1v1v1p1p1v1x0x0p0x1x0p0x0x1v1x0x0p0x1x0p0x0x1duals1v1v1x2x3v2x1x3",
    "bwd1v1v1v1v1p1v1x1p0x1duals1v1v1v1x2,bwd1v1v1v1v1p1v1x1p0x1duals1v1v1v1x2",
    "bwd1v1v1v1v1v1p1v1x0p0x1v1x0p0x1p0x1v1x0x0v1duals1v1v1v1x2v3x2x1v1,bwd1v1v1v1v1v1p1v1x0p1x0v0x1v1duals1v1v1v1x2v1",
    "bwd1v1v1v1v1v1p1p1v0x1x0p0x0x1v1x1duals1v1v1v1x3x2v1,bwd1v1v1v1v1v1p1p1v1x0x0p1x0x0v1x0p0x1duals1v1v1v1x3x2v2x1",
    "bwd1v1v1v1v1v1p1p1v0x1x0p0x1x0v1x0p0x1duals1v1v1v1x2x3v1x2,bwd1v1v1v1v1v1p1p1v1x0x0p0x0x1v1x1duals1v1v1v1x2x3v1",
    "bwd1v1v1v1v1v1v1v1p1v1x0p0x1v1x0p0x1duals1v1v1v1v1x2v2x1,bwd1v1v1v1v1v1v1v1p1v1x0p1x0duals1v1v1v1v1x2",
];

/// The three vines ruled out because no compatible fusion ring exists
/// (indices into [`VINES`]: 10, 12, 13).
pub const VINES_NO_FUSION: [usize; 3] = [10, 12, 13];

/// The periodic-head weed A_(0) (isomorphic to Theorem 3.1 case (f)(9)).
pub const WEED_A0: &str = "bwd1v1v1v1p1v0x1p0x1v1x0p0x1v0x1p1x0p1x0p0x1v1x0x0x0p0x0x1x0v0x1p1x0p1x0p0x1v1x0x0x0p0x0x1x0duals1v1v1x2v1x2v2x1v1x2,bwd1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v1x0x0x0p0x1x0x0p0x0x1x0p0x0x0x1v1x0x0x0p1x0x0x0p0x1x0x0p0x0x1x0p0x0x1x0p0x0x0x1v0x1x0x0x0x0p0x0x1x0x0x0p0x0x0x0x1x0p0x0x0x0x0x1v1x0x0x0p1x0x0x0p0x1x0x0p0x1x0x0p0x0x1x0p0x0x1x0p0x0x0x1p0x0x0x1duals1v1v1x2v3x2x1x4v6x2x4x3x5x1v4x6x7x1x8x2x3x5";

/// The difficult *11 weed (Theorem 3.1 case (e)(5)).
pub const WEED_D: &str = "bwd1v1v1v1p1v1x0p0x1p0x1v1x0x0p1x0x0p0x1x0p0x0x1v1x0x0x0p0x0x1x0p0x1x0x0p0x0x0x1vduals1v1v1x2v1x3x2x4v,bwd1v1v1v1p1v1x0p1x0p0x1v1x0x0p0x1x0p0x0x1p0x0x1v1x0x0x0p1x0x0x0p0x0x1x0p0x1x0x0vduals1v1v1x2v1x3x2x4v";

/// The truncated *10 weed F' (Theorem 3.1 case (f)(7)).
pub const WEED_F_PRIME: &str = "bwd1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v0x1x0x0p0x0x1x0p0x0x0x1vduals1v1v1x2v1x3x2x4v,bwd1v1v1v1p1v1x0p1x0v1x0p0x1v0x1p1x0p0x1vduals1v1v1x2v1x2v";

/// The *10 weed G analysed to index ~5.3234 (Theorem 3.1 case (f)(8)).
pub const WEED_G: &str = "bwd1v1v1v1p1v1x0p0x1v1x0p0x1p0x1p1x0v1x0x0x0p0x1x0x0p0x0x1x0p0x0x0x1v1x0x0x0p0x0x1x0p0x0x0x1p0x0x1x0p1x0x0x0p0x0x0x1p0x1x0x0vduals1v1v1x2v1x2x4x3v1x2x3x5x4x7x6,bwd1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1p1x0p0x1v1x0x0x0p0x0x0x1p0x0x1x0vduals1v1v1x2v1x2v1x3x2";

/// The 3-supertransitive *10 seed of the hexagon obstruction.
pub const HEXAGON_SEED: &str = "bwd1v1v1v1p1v1x0p0x1duals1v1v1x2v,bwd1v1v1v1p1v1x0p1x0duals1v1v1x2v";

/// The single graph X eliminated by the formal codegree obstruction.
pub const GRAPH_X: &str = "bwd1v1v1v1v1v1p1v1x0p0x1v1x0p1x1p0x1v1x0x0v1v1v1duals1v1v1v1x2v1x2x3v1v1";

/// Extension-equivalence boxed example: the base pair and its two displayed
/// extensions (which are isomorphic PGPs).
pub const BOXED_BASE: &str = "bwd1v1v1p1p1v1x0x0p1x0x0p0x1x0p0x1x0p0x0x1p0x0x1v0x0x1x0x0x0duals1v1v3x5x1x6x2x4,bwd1v1v1p1p1v1x0x0p1x0x0p0x1x0p0x1x0p0x0x1p0x0x1v0x0x1x0x0x0duals1v1v3x5x1x6x2x4";
pub const BOXED_EXT_A: &str = "bwd1v1v1p1p1v1x0x0p1x0x0p0x1x0p0x1x0p0x0x1p0x0x1v0x1x0x0x0x0p0x0x1x0x0x0duals1v1v3x5x1x6x2x4,bwd1v1v1p1p1v1x0x0p1x0x0p0x1x0p0x1x0p0x0x1p0x0x1v0x1x0x0x0x0p0x0x1x0x0x0duals1v1v3x5x1x6x2x4";
pub const BOXED_EXT_B: &str = "bwd1v1v1p1p1v1x0x0p1x0x0p0x1x0p0x1x0p0x0x1p0x0x1v0x0x1x0x0x0p0x0x0x0x0x1duals1v1v3x5x1x6x2x4,bwd1v1v1p1p1v1x0x0p1x0x0p0x1x0p0x1x0p0x0x1p0x0x1v0x0x1x0x0x0p0x0x0x0x0x1duals1v1v3x5x1x6x2x4";

/// Fusion matrices of the even half of X (ordered basis
/// 1, jw2, jw4, P, Q, R, gP, gjw4, gjw2, g). Matrices for g·X arise by
/// permuting columns with the order-reversing duality permutation.
pub const X_FUSION_JW2: [[i64; 10]; 10] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
];

pub const X_FUSION_JW4: [[i64; 10]; 10] = [
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 1, 2, 2, 2, 1, 2, 1, 0, 0],
    [0, 1, 2, 3, 3, 1, 3, 2, 0, 0],
    [0, 1, 2, 3, 3, 2, 3, 2, 1, 0],
    [0, 0, 1, 1, 2, 1, 1, 1, 0, 0],
    [0, 0, 2, 3, 3, 1, 3, 2, 1, 0],
    [0, 0, 1, 2, 2, 1, 2, 2, 1, 1],
    [0, 0, 0, 0, 1, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
];

pub const X_FUSION_P: [[i64; 10]; 10] = [
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 2, 3, 3, 1, 3, 2, 0, 0],
    [1, 1, 3, 4, 4, 2, 4, 3, 1, 0],
    [0, 1, 3, 4, 5, 2, 4, 3, 1, 0],
    [0, 1, 1, 2, 2, 1, 2, 1, 1, 0],
    [0, 1, 3, 4, 4, 2, 4, 3, 1, 1],
    [0, 0, 2, 3, 3, 1, 3, 2, 1, 0],
    [0, 0, 0, 1, 1, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
];

pub const X_FUSION_Q: [[i64; 10]; 10] = [
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 1, 1, 0, 0],
    [0, 1, 2, 3, 3, 2, 3, 2, 1, 0],
    [0, 1, 3, 4, 5, 2, 4, 3, 1, 0],
    [1, 1, 3, 5, 4, 2, 5, 3, 1, 1],
    [0, 0, 2, 2, 2, 0, 2, 2, 0, 0],
    [0, 1, 3, 4, 5, 2, 4, 3, 1, 0],
    [0, 1, 2, 3, 3, 2, 3, 2, 1, 0],
    [0, 0, 1, 1, 1, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
];

pub const X_FUSION_R: [[i64; 10]; 10] = [
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 2, 1, 1, 1, 0, 0],
    [0, 1, 1, 2, 2, 1, 2, 1, 1, 0],
    [0, 0, 2, 2, 2, 0, 2, 2, 0, 0],
    [1, 0, 1, 1, 0, 1, 1, 1, 0, 1],
    [0, 1, 1, 2, 2, 1, 2, 1, 1, 0],
    [0, 0, 1, 1, 2, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
];

pub const X_FUSION_G: [[i64; 10]; 10] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

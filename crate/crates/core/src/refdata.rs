//! Published reference values used by `verify` and the acceptance tests.

use serde::Serialize;

/// A published integer sequence `values[k]` at index `start + k * step`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RefSequence {
    pub name: &'static str,
    pub citation: &'static str,
    pub start: usize,
    pub step: usize,
    pub values: &'static [u64],
    /// Indices whose published value is believed to be a misprint.
    pub suspect: &'static [Suspect],
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Suspect {
    pub index: usize,
    pub printed: &'static str,
    pub note: &'static str,
}

impl RefSequence {
    /// `(index, value)` pairs.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (self.start + k * self.step, v))
    }

    pub fn suspect_at(&self, index: usize) -> Option<&Suspect> {
        self.suspect.iter().find(|s| s.index == index)
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RefConstant {
    pub name: &'static str,
    pub citation: &'static str,
    /// Digits as published.
    pub printed: &'static str,
    pub value: f64,
}

pub const X_SERIES: RefSequence = RefSequence {
    name: "x(t)",
    citation: "published coefficients of x(t), t^2..t^36",
    start: 2,
    step: 2,
    values: &[
        1, 1, 1, 2, 3, 6, 12, 24, 50, 107, 232, 508, 1124, 2513, 5665, 12858, 29356, 67371,
    ],
    suspect: &[],
};

pub const XE_SERIES: RefSequence = RefSequence {
    name: "x_E(t)",
    citation: "published coefficients of x_E(t), t^2..t^36",
    start: 2,
    step: 2,
    values: &[
        1, 1, 1, 2, 3, 6, 11, 23, 47, 102, 221, 484, 1069, 2386, 5364, 12143, 27645, 63259,
    ],
    suspect: &[Suspect {
        index: 32,
        printed: "12143^{32}",
        note: "printed without the variable; read as 12143 t^32",
    }],
};

pub const SET_SIZES_X: RefSequence = RefSequence {
    name: "|X_k|",
    citation: "published sizes of X_k, k = 0..7",
    start: 0,
    step: 1,
    values: &[0, 1, 2, 4, 12, 108, 10476, 108625644],
    suspect: &[],
};

pub const FREE_LIE_DIMS: RefSequence = RefSequence {
    name: "dim L_n(A,B)",
    citation: "order-graded dimension table, free Lie algebra on two generators",
    start: 1,
    step: 1,
    values: &[
        2,
        1,
        2,
        3,
        6,
        9,
        18,
        30,
        56,
        99,
        186,
        335,
        630,
        1161,
        2182,
        4080,
        7710,
        14532,
        27594,
        52377,
        99858,
        190557,
        364722,
        698870,
        1342176,
        2580795,
        4971008,
        9586395,
        18512790,
        35790267,
        69273666,
        134215680,
        260300986,
        505286415,
        981706806,
        1908866960,
        3714566310,
        7233615333,
        14096302710,
        27487764474,
    ],
    suspect: &[],
};

pub const MECHANICS_DIMS: RefSequence = RefSequence {
    name: "dim (L_P)_n(A,B)",
    citation: "order-graded dimension table, Lie algebra of classical mechanics",
    start: 1,
    step: 1,
    values: &[
        2, 1, 2, 2, 4, 5, 10, 14, 25, 39, 69, 110, 194, 321, 557, 941, 1638, 2798, 4878, 8412,
        14692, 25519, 44683, 77993, 136928, 240013, 422360, 742801, 1310121, 2310451, 4083436,
        7218252, 12781038, 22638741, 40152860, 71247291, 126559227, 224917313, 400080000,
        711997958,
    ],
    suspect: &[],
};

pub const MODIFIED_POTENTIALS: RefSequence = RefSequence {
    name: "[t^(n+1)] x(t)",
    citation: "order-graded dimension table, modified potentials, odd n",
    start: 1,
    step: 2,
    values: &[
        1, 1, 1, 2, 3, 6, 12, 24, 50, 107, 232, 508, 1124, 2513, 5665, 12858, 29356, 67371, 155345,
        359733,
    ],
    suspect: &[],
};

pub const EUCLIDEAN_DIMS: RefSequence = RefSequence {
    name: "Euclidean bound",
    citation: "order-graded dimension table, Euclidean upper bound",
    start: 1,
    step: 1,
    values: &[
        2, 1, 2, 2, 4, 5, 10, 14, 25, 39, 69, 110, 193, 320, 555, 938, 1631, 2787, 4857, 8376,
        14624, 25399, 44460, 77594, 136191, 238684, 419916, 738375, 130199, 2295702, 4056416,
        7169109, 12691109, 22474996, 39853452, 70701714, 125562178, 223099566, 396759314,
        705941791,
    ],
    suspect: &[Suspect {
        index: 29,
        printed: "130199",
        note: "an order of magnitude below its neighbours; reads as 1301998 with the last digit dropped",
    }],
};

/// Rows `n = 1..16` of the bigraded table: `(total, [dim at degree m = 0, 1, ..])`.
pub const BIGRADED: &[(u64, &[u64])] = &[
    (2, &[1, 0, 1]),
    (1, &[0, 1]),
    (2, &[1, 0, 1]),
    (2, &[0, 1, 0, 1]),
    (4, &[1, 0, 2, 0, 1]),
    (5, &[0, 2, 0, 2, 0, 1]),
    (10, &[2, 0, 4, 0, 3, 0, 1]),
    (14, &[0, 4, 0, 6, 0, 3, 0, 1]),
    (25, &[3, 0, 9, 0, 8, 0, 4, 0, 1]),
    (39, &[0, 9, 0, 14, 0, 11, 0, 4, 0, 1]),
    (69, &[6, 0, 20, 0, 23, 0, 14, 0, 5, 0, 1]),
    (110, &[0, 18, 0, 37, 0, 32, 0, 17, 0, 5, 0, 1]),
    (194, &[12, 0, 46, 0, 62, 0, 46, 0, 21, 0, 6, 0, 1]),
    (321, &[0, 42, 0, 90, 0, 97, 0, 60, 0, 25, 0, 6, 0, 1]),
    (557, &[24, 0, 107, 0, 165, 0, 144, 0, 80, 0, 29, 0, 7, 0, 1]),
    (
        941,
        &[0, 90, 0, 229, 0, 274, 0, 206, 0, 100, 0, 34, 0, 7, 0, 1],
    ),
];

pub const BIGRADED_CITATION: &str = "bigraded dimension table, n = 1..16";

/// Published modified potentials of order ≤ 11: `(index, z, x, order, birth)`
/// with `Z_index = [Z_z, X_x]`; `Z_1 = B` is listed as `(1, 0, 0, 1, 1)`.
pub const GENERATORS: &[(usize, usize, usize, usize, usize)] = &[
    (1, 0, 0, 1, 1),
    (2, 1, 1, 3, 2),
    (3, 2, 1, 5, 3),
    (4, 2, 2, 7, 3),
    (5, 3, 1, 7, 4),
    (6, 3, 2, 9, 4),
    (7, 3, 3, 11, 4),
    (8, 4, 1, 9, 4),
    (9, 4, 2, 11, 4),
    (10, 5, 1, 9, 5),
    (11, 5, 2, 11, 5),
    (12, 6, 1, 11, 5),
    (13, 8, 1, 11, 5),
    (14, 10, 1, 11, 6),
];

pub const GENERATORS_CITATION: &str = "generator table of modified potentials, order ≤ 11";

/// Printed expansions of the first generators.
pub const GENERATOR_EXPANSIONS: &[(usize, &str)] = &[
    (2, "[BBA]"),
    (3, "[BBA,BA]"),
    (4, "[BBA,[BBA,A]]"),
    (6, "[[BBA,BA],[BBA,A]]"),
];

/// Elements of order ≤ 12.
pub const TOTAL_ORDER_LE_12: u64 = 283;

pub const FREE_TREES: RefSequence = RefSequence {
    name: "free trees",
    citation: "free trees with n nodes, n = 1..11",
    start: 1,
    step: 1,
    values: &[1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235],
    suspect: &[],
};

pub const BINARY_TREES: RefSequence = RefSequence {
    name: "trees of degree ≤ 2",
    citation: "free trees with node degree at most 2 (as listed), n = 1..12",
    start: 1,
    step: 1,
    values: &[1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451],
    suspect: &[],
};

pub const SEQUENCES: &[RefSequence] = &[
    X_SERIES,
    XE_SERIES,
    SET_SIZES_X,
    FREE_LIE_DIMS,
    MECHANICS_DIMS,
    MODIFIED_POTENTIALS,
    EUCLIDEAN_DIMS,
    FREE_TREES,
    BINARY_TREES,
];

pub const ENTROPY: RefConstant = RefConstant {
    name: "1/alpha",
    citation: "entropy of the Lie algebra of classical mechanics",
    printed: "1.82542377420108",
    value: 1.82542377420108,
};

pub const BETA_INV: RefConstant = RefConstant {
    name: "1/beta",
    citation: "reciprocal of the singularity of x(t) nearest the origin",
    printed: "1.58207912734",
    value: 1.58207912734,
};

pub const ENTROPY_EUCLIDEAN: RefConstant = RefConstant {
    name: "1/alpha_E",
    citation: "extrapolated entropy bound, Euclidean systems",
    printed: "1.8250339",
    value: 1.8250339,
};

pub const BETA_E_INV: RefConstant = RefConstant {
    name: "1/beta_E",
    citation: "extrapolated singularity bound, Euclidean modified potentials",
    printed: "1.574",
    value: 1.574,
};

/// Correction constants of the dimension asymptotics, as published.
pub const ASYMPTOTIC_ODD: RefConstant = RefConstant {
    name: "K_odd",
    citation: "correction constant, odd orders",
    printed: "1.51",
    value: 1.51,
};

pub const ASYMPTOTIC_EVEN: RefConstant = RefConstant {
    name: "K_even",
    citation: "correction constant, even orders",
    printed: "1.61",
    value: 1.61,
};

pub const ASYMPTOTIC_MP: RefConstant = RefConstant {
    name: "K_mp",
    citation: "modified-potential growth constant",
    printed: "0.9628",
    value: 0.9628,
};

/// Published bounds on beta.
pub const BETA_BOUNDS: (f64, f64) = (0.51, 0.79);

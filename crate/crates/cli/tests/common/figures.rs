//! Published reference squares and row-major sequences, copied verbatim
//! including misprints. Known misprints are listed by the tests using them.

#[rustfmt::skip]
pub const FIG1_LO_SHU: [[i64; 3]; 3] = [
    [8, 1, 6],
    [3, 5, 7],
    [4, 9, 2],
];

#[rustfmt::skip]
pub const FIG2_ORDER4: [[i64; 4]; 4] = [
    [1, 15, 14, 4],
    [12, 6, 7, 9],
    [8, 10, 11, 5],
    [13, 3, 2, 16],
];

#[rustfmt::skip]
pub const FIG3_F3: [[i64; 3]; 3] = [
    [2, 1, 0],
    [0, 2, 1],
    [1, 0, 2],
];

#[rustfmt::skip]
pub const FIG4_F5: [[i64; 5]; 5] = [
    [2, 4, 1, 3, 0],
    [3, 0, 2, 4, 1],
    [4, 1, 3, 0, 2],
    [0, 2, 4, 1, 3],
    [1, 3, 0, 2, 4],
];

#[rustfmt::skip]
pub const FIG5_F7: [[i64; 7]; 7] = [
    [2, 4, 6, 1, 3, 5, 0],
    [3, 5, 0, 2, 4, 6, 1],
    [4, 6, 1, 3, 5, 0, 2],
    [5, 0, 2, 4, 6, 1, 3],
    [6, 1, 3, 5, 0, 2, 4],
    [0, 2, 4, 6, 1, 3, 5],
    [1, 3, 5, 0, 2, 4, 6],
];

#[rustfmt::skip]
pub const FIG6_F9_PRINTED: [[i64; 9]; 9] = [
    [2, 4, 6, 8, 1, 3, 5, 7, 0],
    [3, 5, 7, 0, 2, 4, 6, 8, 1],
    [4, 6, 8, 1, 3, 5, 7, 0, 2],
    [5, 7, 0, 2, 4, 6, 8, 1, 3],
    [6, 8, 1, 3, 5, 7, 0, 2, 4],
    [7, 0, 2, 4, 6, 8, 1, 3, 5],
    [8, 1, 3, 5, 0, 0, 2, 4, 6],
    [0, 2, 4, 6, 8, 1, 3, 5, 7],
    [1, 3, 5, 0, 0, 2, 4, 6, 8],
];

#[rustfmt::skip]
pub const FIG6_NEWMS3: [[i64; 3]; 3] = [
    [6, 1, 8],
    [7, 5, 3],
    [2, 9, 4],
];

#[rustfmt::skip]
pub const FIG6_G3: [[i64; 3]; 3] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
];

#[rustfmt::skip]
pub const FIG7_NEWMS5: [[i64; 5]; 5] = [
    [15, 1, 17, 8, 24],
    [16, 7, 23, 14, 5],
    [22, 13, 4, 20, 6],
    [3, 19, 10, 21, 12],
    [9, 25, 11, 2, 18],
];

#[rustfmt::skip]
pub const FIG7_G5: [[i64; 5]; 5] = [
    [0, 1, 2, 3, 4],
    [1, 2, 3, 4, 0],
    [2, 3, 4, 0, 1],
    [3, 4, 0, 1, 2],
    [4, 0, 1, 2, 3],
];

#[rustfmt::skip]
pub const FIG8_NEWMS7: [[i64; 7]; 7] = [
    [28, 1, 30, 10, 39, 19, 48],
    [29, 9, 38, 18, 47, 27, 7],
    [37, 17, 46, 26, 6, 35, 8],
    [45, 25, 5, 34, 14, 36, 16],
    [4, 33, 13, 42, 15, 44, 24],
    [12, 41, 21, 43, 23, 3, 32],
    [20, 49, 22, 2, 31, 11, 40],
];

#[rustfmt::skip]
pub const FIG8_G7: [[i64; 7]; 7] = [
    [0, 1, 2, 3, 4, 5, 6],
    [1, 2, 3, 4, 5, 6, 0],
    [2, 3, 4, 5, 6, 0, 1],
    [3, 4, 5, 6, 0, 1, 2],
    [4, 5, 6, 0, 1, 2, 3],
    [5, 6, 0, 1, 2, 3, 4],
    [6, 0, 1, 2, 3, 4, 5],
];

#[rustfmt::skip]
pub const FIG9_NEWMS9_PRINTED: [[i64; 9]; 9] = [
    [45, 1, 47, 12, 58, 23, 69, 34, 80],
    [46, 11, 57, 22, 68, 33, 79, 34, 9],
    [56, 21, 67, 32, 78, 43, 8, 54, 10],
    [66, 31, 77, 42, 7, 53, 18, 55, 20],
    [76, 41, 6, 52, 17, 63, 19, 65, 30],
    [5, 51, 16, 62, 27, 64, 29, 75, 40],
    [15, 61, 26, 72, 28, 74, 39, 4, 50],
    [25, 71, 36, 73, 38, 3, 49, 14, 60],
    [35, 81, 37, 2, 48, 13, 59, 24, 70],
];

#[rustfmt::skip]
pub const FIG9_G9: [[i64; 9]; 9] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8],
    [1, 2, 3, 4, 5, 6, 7, 8, 0],
    [2, 3, 4, 5, 6, 7, 8, 0, 1],
    [3, 4, 5, 6, 7, 8, 0, 1, 2],
    [4, 5, 6, 7, 8, 0, 1, 2, 3],
    [5, 6, 7, 8, 0, 1, 2, 3, 4],
    [6, 7, 8, 0, 1, 2, 3, 4, 5],
    [7, 8, 0, 1, 2, 3, 4, 5, 6],
    [8, 0, 1, 2, 3, 4, 5, 6, 7],
];

#[rustfmt::skip]
pub const FIG10_NEWMS3_NEWMS3: [[i64; 9]; 9] = [
    [51, 46, 53, 6, 1, 8, 69, 64, 71],
    [52, 50, 48, 7, 5, 3, 70, 68, 66],
    [47, 54, 49, 2, 9, 4, 65, 72, 67],
    [60, 55, 62, 42, 37, 44, 24, 19, 26],
    [61, 59, 57, 43, 41, 39, 25, 23, 21],
    [56, 63, 58, 38, 45, 40, 20, 27, 22],
    [15, 10, 17, 78, 73, 80, 33, 28, 35],
    [16, 14, 12, 79, 77, 75, 34, 32, 30],
    [11, 18, 13, 74, 81, 76, 29, 36, 31],
];

#[rustfmt::skip]
pub const FIG10_NEWMS3_LO_SHU: [[i64; 9]; 9] = [
    [69, 64, 71, 6, 1, 8, 51, 46, 53],
    [70, 68, 66, 7, 5, 3, 52, 50, 48],
    [65, 72, 67, 2, 9, 4, 47, 54, 49],
    [24, 19, 26, 42, 37, 44, 60, 55, 62],
    [25, 23, 21, 43, 41, 39, 61, 59, 57],
    [20, 27, 22, 38, 45, 40, 56, 63, 58],
    [33, 28, 35, 78, 73, 80, 15, 10, 17],
    [34, 32, 30, 79, 77, 75, 16, 14, 12],
    [29, 36, 31, 74, 81, 76, 11, 18, 13],
];

#[rustfmt::skip]
pub const FIG11_LO_SHU_NEWMS3: [[i64; 9]; 9] = [
    [53, 46, 51, 8, 1, 6, 71, 64, 69],
    [48, 50, 52, 3, 5, 7, 66, 68, 70],
    [49, 54, 47, 4, 9, 2, 67, 72, 65],
    [62, 55, 60, 44, 37, 42, 26, 19, 24],
    [57, 59, 61, 39, 41, 43, 21, 23, 25],
    [58, 63, 56, 40, 45, 38, 22, 27, 20],
    [17, 10, 15, 80, 73, 78, 35, 28, 33],
    [12, 14, 16, 75, 77, 79, 30, 32, 34],
    [13, 18, 11, 76, 81, 74, 31, 36, 29],
];

#[rustfmt::skip]
pub const FIG12_NEWMS3_ORDER4_PRINTED: [[i64; 12]; 12] = [
    [6, 1, 8, 132, 127, 134, 123, 118, 125, 33, 28, 35],
    [7, 5, 3, 133, 131, 129, 124, 122, 120, 34, 32, 30],
    [2, 9, 4, 128, 135, 130, 119, 126, 121, 29, 36, 31],
    [105, 100, 107, 51, 46, 53, 60, 55, 62, 78, 73, 80],
    [106, 104, 102, 52, 50, 48, 61, 59, 57, 79, 77, 75],
    [101, 108, 103, 47, 54, 49, 56, 63, 58, 74, 81, 76],
    [69, 64, 71, 87, 82, 89, 96, 91, 98, 42, 37, 44],
    [70, 68, 66, 88, 86, 84, 97, 95, 93, 43, 41, 39],
    [65, 72, 67, 83, 90, 85, 92, 99, 94, 38, 45, 40],
    [114, 109, 116, 24, 19, 26, 15, 10, 17, 141, 136, 143],
    [115, 113, 111, 25, 23, 21, 16, 14, 12, 142, 140, 138],
    [110, 117, 112, 27, 22, 11, 18, 18, 13, 137, 144, 139],
];
#[rustfmt::skip]
pub const SIAMESE5_SEQUENCE_PRINTED: [i64; 25] = [
    17, 24, 1, 8, 15,
    23, 5, 7, 14, 16,
    4, 6, 13, 20, 22,
    10, 12, 19, 21, 3,
    11, 18, 25, 2, 9,
];

#[rustfmt::skip]
pub const SIAMESE7_SEQUENCE_PRINTED: [i64; 49] = [
    30, 39, 48, 1, 10, 19, 28,
    38, 47, 7, 9, 18, 27, 29,
    46, 6, 8, 17, 26, 35, 37,
    5, 14, 16, 25, 34, 36, 45,
    13, 15, 24, 33, 42, 44, 4,
    21, 23, 32, 41, 43, 3, 12,
    22, 31, 40, 49, 2, 11, 20,
];

#[rustfmt::skip]
pub const SIAMESE9_SEQUENCE_PRINTED: [i64; 82] = [
    47, 58, 69, 80, 1, 12, 23, 34, 45,
    57, 68, 7, 789, 9, 11, 22, 33, 44,
    46, 67, 78, 8, 10, 21, 32, 43, 54,
    56, 77, 7, 18, 20, 31, 42, 53, 55,
    66, 6, 17, 19, 30, 41, 52, 63, 65,
    76, 16, 27, 29, 40, 51, 62, 64, 75,
    5, 26, 28, 39, 50, 61, 72, 74, 4,
    15, 36, 38, 49, 60, 71, 73, 3, 14,
    25, 37, 48, 59, 70, 81, 2, 13, 24,
    35,
];

/// Printed sum table: `(n, case label, sr, sc, sltdd, slbud)`.
#[rustfmt::skip]
pub const TABLE_A_PRINTED: [(usize, &str, i128, i128, i128, i128); 24] = [
    (3, "MS", 15, 15, 15, 15),
    (3, "Mod n", 3, 3, 6, 3),
    (3, "G mod n", 3, 3, 3, 6),
    (3, "New MS", 15, 15, 15, 15),
    (5, "MS", 65, 65, 65, 65),
    (5, "Mod n", 10, 10, 10, 10),
    (5, "G mod n", 10, 10, 10, 20),
    (5, "New MS", 65, 65, 65, 70),
    (7, "MS", 175, 175, 175, 175),
    (7, "Mod n", 21, 21, 21, 21),
    (7, "G mod n", 21, 21, 21, 42),
    (7, "New MS", 175, 175, 175, 189),
    (9, "MS", 369, 369, 369, 369),
    (9, "Mod n", 36, 36, 45, 36),
    (9, "G mod n", 36, 36, 36, 72),
    (9, "New MS", 369, 369, 369, 369),
    (11, "MS", 671, 671, 671, 671),
    (11, "Mod n", 55, 55, 55, 55),
    (11, "G mod n", 55, 55, 55, 110),
    (11, "New MS", 671, 671, 671, 715),
    (99, "MS", 485199, 485199, 485199, 485199),
    (99, "Mod n", 4851, 4851, 4851, 4851),
    (99, "G mod n", 4851, 4851, 4851, 9702),
    (99, "New MS", 485199, 485199, 485199, 489951),
];

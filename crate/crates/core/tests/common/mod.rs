#![allow(dead_code)]

// (n, B(n), C(n), [priv(n,1), ..., priv(n,n-1)]) from a literal brute-force
// recount over all words, independent of this crate.

pub const BINARY: &[(usize, u64, u64, &[u64])] = &[
    (1, 2, 0, &[]),
    (2, 2, 2, &[2]),
    (3, 4, 4, &[2, 2]),
    (4, 4, 6, &[2, 0, 2]),
    (5, 8, 12, &[2, 2, 2, 2]),
    (6, 8, 20, &[2, 2, 2, 0, 2]),
    (7, 16, 36, &[2, 4, 4, 2, 2, 2]),
    (8, 20, 62, &[2, 6, 6, 2, 2, 0, 2]),
    (9, 40, 116, &[2, 10, 12, 6, 4, 2, 2, 2]),
    (10, 60, 204, &[2, 16, 22, 8, 6, 2, 2, 0, 2]),
    (11, 108, 364, &[2, 26, 38, 16, 10, 6, 4, 2, 2, 2]),
    (12, 176, 664, &[2, 42, 68, 30, 18, 4, 6, 2, 2, 0, 2]),
    (13, 328, 1220, &[2, 68, 122, 58, 38, 14, 10, 6, 4, 2, 2, 2]),
    (14, 568, 2240, &[2, 110, 218, 108, 76, 20, 14, 8, 6, 2, 2, 0, 2]),
    (15, 1040, 4132, &[2, 178, 390, 204, 148, 46, 24, 18, 14, 6, 4, 2, 2, 2]),
    (16, 1848, 7646, &[2, 288, 698, 384, 288, 86, 48, 16, 18, 8, 6, 2, 2, 0, 2]),
];

pub const TERNARY: &[(usize, u64, u64, &[u64])] = &[
    (1, 3, 0, &[]),
    (2, 3, 3, &[3]),
    (3, 9, 9, &[6, 3]),
    (4, 15, 21, &[12, 0, 3]),
    (5, 39, 57, &[24, 6, 6, 3]),
    (6, 69, 141, &[48, 12, 6, 0, 3]),
    (7, 171, 363, &[96, 36, 18, 12, 6, 3]),
    (8, 363, 939, &[192, 96, 54, 12, 6, 0, 3]),
];

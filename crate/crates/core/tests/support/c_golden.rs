//! Transcripts printed by the original C routine compiled with gcc on
//! x86-64 (`-O0`, SSE float arithmetic), with `t3` initialised to 0.0 and a
//! guard that stops at a zero `(t - t2)` divisor or an int overflow.

#![allow(dead_code)]

pub struct Golden {
    pub r: i32,
    pub u: i32,
    pub u1: i32,
    pub t1: i32,
    pub modulus: i32,
    pub values: &'static [i32],
    pub faulted: bool,
}

pub const GOLDEN: &[Golden] = &[
    Golden {
        r: 4,
        u: 1,
        u1: 1,
        t1: 4,
        modulus: 35,
        values: &[
            7, 5, 9, 17, 25, 31, 2, 8, 15, 21, 27, 33, 4, 10, 16, 22, 28, 34, 5, 11, 17, 23, 23,
            24, 5, 31, 21, 10, 34, 24, 13, 2, 26, 15, 4, 28, 17, 6, 30, 19, 8, 32, 21, 10, 34, 34,
            19, 30, 16, 1, 20, 4, 24, 8, 27, 11, 30, 14, 33, 17, 1, 20, 4, 23, 7, 26, 10, 29, 29,
            26, 9, 2, 29, 20, 11, 3, 29, 20, 11, 2, 28, 19, 10, 1, 27, 18, 9, 0, 26, 17, 8, 8, 10,
            12, 24, 0, 10, 20, 31, 6, 16, 26, 1, 11, 21, 31, 6, 16, 26, 1, 11, 21, 31, 6, 6,
        ],
        faulted: false,
    },
    Golden {
        r: 4,
        u: 3,
        u1: 1,
        t1: 4,
        modulus: 35,
        values: &[
            1, -29, -1, 18, -3, 26, -5, 7, -7, 34, -9, 29, -11, 26, -13, 24, -16, 19, -19, 15, -22,
            13, 13, -3, 21, -7, 6, -11, 1, -15, 34, -19, 33, -23, 32, -27, 31, -31, 31, 0, 31, -4,
            30, -8, 30, 30, -3, 13, -7, 9, -10, 22, -13, 29, -16, 34, -19, 2, -22, 4, -25, 6, -28,
            7, -31, 8, -34, 9, 9, -1, 11, -4, 26, -7, 18, -10, 7, -13, 18, -16, 3, -19, 27, -22,
            20, -25, 14, -28, 9, -31, 6, 6, -1, 4, -4, 21, -7, 18, -10, 17, -13, 14, -16, 25, -19,
            9, -22, 32, -25, 23, -28, 16, -31, 10, 10,
        ],
        faulted: false,
    },
    Golden {
        r: 4,
        u: 5,
        u1: 2,
        t1: 4,
        modulus: 35,
        values: &[
            6, -1, 11, 16, 15, 18, 23, 29, 0, 6, 11, 16, 21, 27, 32, 2, 7, 12, 17, 22, 27, 32, 32,
            19, 25, 10, 33, 20, 6, 26, 12, 32, 17, 2, 22, 7, 27, 12, 32, 17, 2, 22, 7, 28, 13, 13,
            10, 6, 18, 30, 6, 16, 27, 2, 12, 22, 32, 7, 17, 27, 2, 12, 22, 33, 8, 18, 28, 3, 3, 10,
            6, 19, 30, 6, 16, 27, 2, 12, 22, 32, 7, 17, 27, 2, 12, 22, 33, 8, 18, 28, 3, 3, 20, 26,
            14, 0, 21, 6, 27, 12, 32, 17, 2, 22, 7, 27, 12, 32, 18, 3, 23, 8, 28, 13, 13,
        ],
        faulted: false,
    },
    Golden {
        r: 1,
        u: 2,
        u1: 1,
        t1: 4,
        modulus: 35,
        values: &[
            2, -5, 3, -4, 10, 1, -1, 9, 3, -9, 19, 9, 5, -1, 1, 17, 13, 12, 12, 13, 14, 16, 16, 4,
            -5, 26, 13, 13, 16, 22, 29, 0, 6, 11, 16, 21, 27, 32, 2, 7, 12, 17, 22, 27, 32, 32, 11,
            8, 10, 20, 5, 22, 34, 11, 23, 34, 11, 22, 33, 10, 21, 32, 9, 20, 31, 7, 19, 30, 30, 20,
            26, 10, 33, 20, 6, 26, 12, 32, 17, 2, 22, 7, 27, 12, 32, 17, 2, 22, 7, 28, 13, 13, 31,
            13, 11, 9, 7, 4, 0, 32, 28, 25, 21, 17, 14, 10, 6, 2, 34, 30, 26, 23, 19, 15, 15,
        ],
        faulted: false,
    },
    Golden {
        r: 7,
        u: -3,
        u1: 2,
        t1: 4,
        modulus: 35,
        values: &[
            -6, -13, -20, -27, -34, -5, -13, -19, -27, -34, -6, -13, -20, -27, -34, -6, -13, -20,
            -26, -33, -5, -13, -13, -27, -20, -13, -6, -34, -27, -19, -13, -6, -34, -26, -20, -13,
            -6, -33, -27, -19, -13, -6, -33, -27, -20, -20, -27, -19, -12, -6, -34, -27, -20, -13,
            -5, -33, -27, -20, -13, -5, -34, -27, -20, -12, -5, -34, -27, -19, -19, -6, -13, -20,
            -26, -34, -6, -13, -20, -27, -34, -5, -13, -20, -27, -34, -6, -13, -20, -27, -34, -6,
            -13, -13, -34, -34, -34, -34, -34, -33, -33, -34, -34, -34, -33, -34, -34, -33, -34,
            -34, -34, -34, -33, -34, -34, -34, -34,
        ],
        faulted: false,
    },
    Golden {
        r: 2,
        u: 9,
        u1: 4,
        t1: 7,
        modulus: 35,
        values: &[
            3, -6, 10, 2, -20, 16, 10, 8, 6, 2, -7, 31, 25, 26, 28, 31, 34, 1, 4, 7, 9, 12, 12, 9,
            5, -2, 30, 11, 16, 26, 1, 11, 22, 32, 7, 17, 27, 2, 12, 22, 32, 7, 17, 27, 2, 2, 22,
            30, 18, 9, 33, 21, 9, 32, 19, 7, 30, 17, 5, 27, 15, 2, 25, 12, 0, 23, 10, 33, 33, 5,
            31, 3, 10, 16, 21, 27, 32, 2, 7, 12, 17, 22, 27, 32, 2, 7, 12, 18, 23, 28, 33, 33, 27,
            5, 1, 30, 23, 16, 9, 2, 29, 22, 15, 7, 0, 27, 20, 12, 5, 33, 25, 18, 10, 3, 3,
        ],
        faulted: false,
    },
    Golden {
        r: 3,
        u: -8,
        u1: -3,
        t1: 4,
        modulus: 35,
        values: &[
            4, -5, 18, 8, 5, -1, 11, 27, 25, 28, 32, 1, 5, 9, 13, 17, 21, 24, 28, 32, 1, 5, 5, 14,
            15, 27, 11, 29, 10, 26, 6, 22, 2, 17, 32, 12, 27, 7, 22, 2, 17, 32, 12, 27, 8, 8, 33,
            18, 18, 19, 19, 19, 18, 17, 16, 15, 13, 12, 11, 10, 9, 7, 6, 5, 4, 3, 1, 0, 0, 25, 1,
            28, 20, 11, 1, 27, 17, 7, 32, 22, 12, 2, 27, 17, 7, 32, 23, 13, 3, 28, 18, 18, 24, 33,
            25, 15, 5, 29, 18, 7, 31, 20, 8, 32, 21, 10, 34, 22, 11, 0, 24, 13, 1, 25, 25,
        ],
        faulted: false,
    },
    Golden {
        r: 5,
        u: 4,
        u1: 1,
        t1: 2,
        modulus: 36,
        values: &[
            -10, -5, 25, -28, -14, -20, -31, -7, -19, -30, -6, -17, -28, -4, -15, -27, -2, -13,
            -24, 0, -11, -22, -22, -6, -1, -12, -24, -34, -8, -17, -26, -35, -9, -18, -27, 0, -9,
            -18, -27, 0, -9, -18, -27, 0, -9, -9, -27, -7, -3, -34, -28, -21, -15, -8, -2, -31,
            -25, -18, -11, -4, -34, -27, -20, -14, -7, 0, -29, -23, -23, -34, -20, -23, -25, -26,
            -26, -26, -26, -27, -27, -27, -27, -27, -27, -27, -27, -27, -27, -27, -27, -27, -27,
            -27, -27, -7, -3, -34, -28, -22, -15, -9, -2, -31, -25, -18, -11, -4, -34, -27, -20,
            -14, -7, 0, -29, -23, -23,
        ],
        faulted: false,
    },
    Golden {
        r: 12,
        u: 7,
        u1: 2,
        t1: 5,
        modulus: 35,
        values: &[
            1, -19, -1, 33, -3, 16, -5, 27, -7, 1, -9, 22, -11, 13, -13, 7, -15, 3, -17, 34, -19,
            31, 31, -2, 31, -5, 21, -8, 27, -11, 14, -14, 6, -17, 1, -20, 33, -23, 30, -26, 28,
            -29, 27, -32, 25, 25, -2, 12, -5, 26, -8, 29, -11, 34, -14, 17, -17, 6, -20, 33, -23,
            27, -26, 22, -29, 19, -32, 16, 16, -1, 27, -4, 16, -7, 24, -10, 27, -13, 24, -16, 13,
            -19, 16, -22, 28, -25, 11, -28, 32, -31, 21, 21, -1, 34, -4, 1, -7, 26, -10, 22, -13,
            12, -16, 10, -19, 31, -22, 30, -25, 3, -28, 16, -31, 34, 34,
        ],
        faulted: false,
    },
    Golden {
        r: 10,
        u: 13,
        u1: 4,
        t1: 4,
        modulus: 35,
        values: &[
            1, -4, -1, 3, -3, 1, -5, 22, -7, 1, -9, 24, -11, 17, -13, 11, -15, 8, -17, 5, -19, 2,
            2, -2, 1, -5, 11, -8, 22, -11, 11, -14, 5, -17, 1, -20, 33, -23, 31, -26, 29, -29, 28,
            -32, 27, 27, -2, 32, -5, 21, -8, 1, -11, 10, -14, 31, -17, 22, -20, 15, -23, 10, -26,
            7, -29, 4, -32, 1, 1, -1, 32, -4, 1, -7, 31, -10, 22, -13, 31, -16, 28, -19, 1, -22,
            17, -25, 3, -28, 26, -31, 17, 17, -1, 9, -4, 6, -7, 16, -10, 12, -13, 21, -16, 31, -19,
            25, -22, 30, -25, 8, -28, 25, -31, 11, 11,
        ],
        faulted: false,
    },
    Golden {
        r: 8,
        u: -1,
        u1: 1,
        t1: 3,
        modulus: 35,
        values: &[
            -7, -15, -23, -31, -4, -12, -20, -28, 0, -9, -17, -25, -32, -6, -14, -22, -30, -3, -10,
            -19, -27, 0, 0, -31, -28, -25, -22, -19, -16, -13, -10, -7, -4, -1, -33, -29, -27, -23,
            -21, -18, -15, -12, -9, -6, -3, -3, 0, -3, -5, -7, -9, -11, -13, -14, -17, -19, -21,
            -23, -24, -27, -28, -31, -33, 0, -2, -4, -6, -8, -8, -22, -10, -33, -21, -9, -32, -20,
            -8, -31, -19, -7, -30, -18, -5, -28, -17, -4, -28, -16, -4, -27, -15, -15, -24, -14,
            -4, -29, -19, -8, -34, -24, -14, -4, -29, -19, -9, -34, -24, -14, -3, -29, -18, -9,
            -34, -24, -24,
        ],
        faulted: false,
    },
    Golden {
        r: 2,
        u: 1,
        u1: 3,
        t1: 4,
        modulus: 35,
        values: &[
            2, -2, 3, 1, -4, 9, 6, 6, 7, 9, 11, 13, 15, 17, 18, 20, 21, 23, 24, 26, 27, 29, 29, 6,
            5, 9, 17, 25, 31, 2, 8, 15, 21, 27, 33, 4, 10, 16, 22, 28, 34, 5, 11, 17, 23, 23, 14,
            20, 34, 14, 28, 6, 20, 34, 12, 26, 4, 18, 31, 10, 24, 2, 16, 29, 8, 21, 0, 13, 13, 24,
            5, 31, 21, 10, 34, 24, 13, 2, 26, 15, 4, 28, 17, 6, 30, 19, 8, 32, 21, 10, 34, 34, 3,
            32, 1, 5, 8, 10, 13, 16, 18, 21, 23, 26, 28, 31, 34, 1, 4, 6, 9, 11, 14, 16, 16,
        ],
        faulted: false,
    },
    Golden {
        r: 9,
        u: 11,
        u1: 3,
        t1: 10,
        modulus: 35,
        values: &[0],
        faulted: true,
    },
    Golden {
        r: 6,
        u: 1,
        u1: 2,
        t1: 4,
        modulus: 35,
        values: &[5, 2, 0],
        faulted: true,
    },
    Golden {
        r: 4,
        u: 0,
        u1: 1,
        t1: 4,
        modulus: 35,
        values: &[4, 0],
        faulted: true,
    },
];

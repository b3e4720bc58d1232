pub const THREE_WAREHOUSE_TRAJECTORY: [[f64; 10]; 3] = [
    [
        24.312, 17.277, 15.445, 14.974, 14.854, 14.824, 14.816, 14.814, 14.813, 14.813,
    ],
    [19.360, 10.393, 9.394, 9.274, 9.258, 9.255, 9.255, 9.255, 9.255, 9.255],
    [11.908, 6.533, 6.291, 6.274, 6.272, 6.272, 6.272, 6.272, 6.272, 6.272],
];

/// (mu, lambda, n, levels, total, aggregated)
pub const UNIFORM_GAMMA_GRID: &[(f64, f64, usize, &[f64], f64, f64)] = &[
    (16.0, 4.0, 2, &[91.4, 67.3], 158.7, 154.8),
    (16.0, 4.0, 4, &[88.4, 66.3, 53.0, 44.2], 251.9, 234.1),
    (
        16.0,
        4.0,
        8,
        &[81.3, 62.8, 51.2, 43.2, 37.4, 32.9, 29.4, 26.6],
        364.8,
        314.8,
    ),
    (16.0, 8.0, 2, &[60.9, 44.9], 105.8, 103.2),
    (16.0, 8.0, 4, &[58.9, 44.2, 35.4, 29.5], 168.0, 156.1),
    (
        16.0,
        8.0,
        8,
        &[54.2, 41.9, 34.1, 28.8, 24.9, 21.9, 19.6, 17.7],
        243.2,
        209.8,
    ),
    (16.0, 12.0, 2, &[30.5, 22.4], 52.9, 51.6),
    (16.0, 12.0, 4, &[29.5, 22.1, 17.7, 14.7], 84.0, 78.0),
    (
        16.0,
        12.0,
        8,
        &[27.1, 20.9, 17.1, 14.4, 12.5, 11.0, 9.8, 8.9],
        121.6,
        104.9,
    ),
    (20.0, 4.0, 2, &[105.8, 80.6], 186.5, 182.9),
    (20.0, 4.0, 4, &[103.0, 79.6, 64.9, 54.7], 302.2, 284.4),
    (
        20.0,
        4.0,
        8,
        &[96.0, 76.0, 62.9, 53.6, 46.8, 41.5, 37.2, 33.8],
        447.7,
        393.8,
    ),
    (20.0, 8.0, 2, &[79.4, 60.5], 139.8, 137.1),
    (20.0, 8.0, 4, &[77.3, 59.7, 48.6, 41.0], 226.6, 213.3),
    (
        20.0,
        8.0,
        8,
        &[72.0, 57.0, 47.2, 40.2, 35.1, 31.1, 27.9, 25.3],
        335.8,
        295.4,
    ),
    (20.0, 12.0, 2, &[52.9, 40.3], 93.2, 91.4),
    (20.0, 12.0, 4, &[51.5, 39.8, 32.4, 27.4], 151.1, 142.2),
    (
        20.0,
        12.0,
        8,
        &[48.0, 38.0, 31.4, 26.8, 23.4, 20.7, 18.6, 16.9],
        223.9,
        196.9,
    ),
    (24.0, 4.0, 2, &[116.9, 91.5], 208.4, 205.1),
    (24.0, 4.0, 4, &[114.3, 90.5, 74.9, 63.9], 343.6, 326.5),
    (
        24.0,
        4.0,
        8,
        &[107.6, 86.9, 72.9, 62.8, 55.1, 49.1, 44.3, 40.3],
        519.0,
        463.8,
    ),
    (24.0, 8.0, 2, &[93.5, 73.2], 166.7, 164.1),
    (24.0, 8.0, 4, &[91.4, 72.4, 59.9, 51.1], 274.8, 261.2),
    (
        24.0,
        8.0,
        8,
        &[86.1, 69.5, 58.3, 50.2, 44.1, 39.3, 35.4, 32.3],
        415.2,
        371.0,
    ),
    (24.0, 12.0, 2, &[70.1, 54.9], 125.0, 123.1),
    (24.0, 12.0, 4, &[68.6, 54.3, 44.9, 38.3], 206.1, 195.9),
    (
        24.0,
        12.0,
        8,
        &[64.6, 52.1, 43.7, 37.7, 33.1, 29.5, 26.6, 24.2],
        311.4,
        278.3,
    ),
];

/// (gamma, n, levels, total, aggregated)
pub const GAMMA_SWEEP: &[(f64, usize, &[f64], f64, f64)] = &[
    (0.1, 2, &[53.3, 40.0], 93.3, 91.4),
    (0.1, 4, &[53.1, 40.0, 32.0, 26.7], 151.9, 142.2),
    (0.1, 8, &[52.7, 39.8, 31.9, 26.7, 22.9, 20.1, 17.9, 16.1], 228.1, 196.9),
    (0.5, 2, &[53.1, 40.2], 93.3, 91.4),
    (0.5, 4, &[52.4, 39.9, 32.2, 27.0], 151.5, 142.2),
    (0.5, 8, &[50.4, 38.9, 31.7, 26.8, 23.1, 20.4, 18.2, 16.5], 226.0, 196.9),
    (1.0, 2, &[52.9, 40.3], 93.2, 91.4),
    (1.0, 4, &[51.5, 39.8, 32.4, 27.4], 151.1, 142.2),
    (1.0, 8, &[48.0, 38.0, 31.4, 26.8, 23.4, 20.7, 18.6, 16.9], 223.9, 196.9),
    (2.0, 2, &[52.5, 40.6], 93.1, 91.4),
    (2.0, 4, &[50.0, 39.6, 32.8, 28.0], 150.3, 142.2),
    (2.0, 8, &[44.4, 36.4, 30.9, 26.9, 23.7, 21.3, 19.3, 17.6], 220.4, 196.9),
    (5.0, 2, &[51.6, 41.3], 92.9, 91.4),
    (5.0, 4, &[46.9, 39.1, 33.5, 29.3], 148.7, 142.2),
    (5.0, 8, &[38.1, 33.4, 29.7, 26.7, 24.3, 22.3, 20.5, 19.1], 214.0, 196.9),
];

/// (m, n, echelon totals, per-echelon warehouse levels)
pub const NETWORK_GRID: &[(usize, usize, &[f64], &[&[f64]])] = &[
    (2, 2, &[73.8, 60.9], &[&[38.2, 35.7], &[32.5, 28.7]]),
    (
        2,
        4,
        &[66.7, 50.0],
        &[&[18.1, 17.1, 16.3, 15.5], &[14.4, 13.1, 12.0, 11.1]],
    ),
    (
        2,
        8,
        &[57.0, 34.5],
        &[
            &[8.0, 7.8, 7.5, 7.3, 7.1, 6.9, 6.7, 6.5],
            &[5.1, 4.9, 4.7, 4.5, 4.3, 4.1, 4.0, 3.8],
        ],
    ),
    (
        4,
        2,
        &[76.6, 69.4, 64.6, 56.7],
        &[&[39.1, 37.6], &[35.8, 33.6], &[33.8, 30.9], &[30.4, 26.5]],
    ),
    (
        4,
        4,
        &[69.9, 58.8, 51.5, 41.1],
        &[
            &[18.4, 17.8, 17.2, 16.6],
            &[16.0, 15.1, 14.3, 13.6],
            &[14.5, 13.4, 12.5, 11.7],
            &[12.1, 10.9, 9.9, 9.0],
        ],
    ),
    (
        4,
        8,
        &[61.8, 46.3, 35.5, 19.7],
        &[
            &[8.4, 8.2, 8.0, 7.8, 7.6, 7.5, 7.3, 7.2],
            &[6.5, 6.3, 6.1, 5.9, 5.7, 5.5, 5.4, 5.2],
            &[5.2, 5.0, 4.8, 4.6, 4.4, 4.2, 4.1, 4.0],
            &[3.0, 2.8, 2.7, 2.6, 2.5, 2.4, 2.3, 2.2],
        ],
    ),
    (
        8,
        2,
        &[78.0, 72.0, 69.7, 68.4, 67.3, 65.8, 63.1, 55.9],
        &[
            &[39.4, 38.6],
            &[36.6, 35.5],
            &[35.5, 34.2],
            &[35.0, 33.4],
            &[34.6, 32.7],
            &[34.1, 31.8],
            &[33.1, 30.2],
            &[30.0, 26.2],
        ],
    ),
    (
        8,
        4,
        &[71.8, 62.1, 57.2, 54.1, 51.8, 49.6, 46.2, 37.1],
        &[
            &[18.5, 18.1, 17.8, 17.4],
            &[16.3, 15.8, 15.3, 14.9],
            &[15.1, 14.6, 14.0, 13.5],
            &[14.5, 13.8, 13.2, 12.7],
            &[14.1, 13.3, 12.6, 12.0],
            &[13.7, 12.8, 12.0, 11.3],
            &[13.1, 12.1, 11.2, 10.4],
            &[11.0, 9.9, 8.9, 8.1],
        ],
    ),
    (
        8,
        8,
        &[65.4, 52.0, 44.1, 38.6, 34.2, 30.1, 25.1, 9.9],
        &[
            &[8.7, 8.5, 8.4, 8.2, 8.1, 8.0, 7.9, 7.7],
            &[7.1, 6.9, 6.7, 6.6, 6.4, 6.3, 6.2, 6.0],
            &[6.1, 5.9, 5.8, 5.6, 5.5, 5.3, 5.2, 5.1],
            &[5.4, 5.2, 5.1, 4.9, 4.8, 4.6, 4.5, 4.4],
            &[4.9, 4.7, 4.5, 4.4, 4.2, 4.1, 4.0, 3.8],
            &[4.4, 4.2, 4.0, 3.9, 3.7, 3.6, 3.5, 3.4],
            &[3.7, 3.6, 3.4, 3.3, 3.1, 3.0, 2.9, 2.8],
            &[1.5, 1.4, 1.4, 1.3, 1.2, 1.2, 1.1, 1.1],
        ],
    ),
];

/// (theta step, gamma, echelon totals, per-echelon warehouse levels)
pub const DETERIORATION_GAMMA_GRID: &[(f64, f64, &[f64], &[&[f64]])] = &[
    (
        0.02,
        0.5,
        &[78.8, 72.6, 68.4, 60.8],
        &[
            &[20.3, 19.9, 19.5, 19.2],
            &[19.0, 18.4, 17.9, 17.4],
            &[18.2, 17.5, 16.8, 16.1],
            &[16.7, 15.7, 14.8, 14.0],
        ],
    ),
    (
        0.02,
        1.0,
        &[78.8, 72.6, 68.4, 60.8],
        &[
            &[20.3, 19.9, 19.5, 19.2],
            &[18.9, 18.4, 17.9, 17.5],
            &[18.1, 17.4, 16.8, 16.3],
            &[16.4, 15.6, 14.9, 14.2],
        ],
    ),
    (
        0.02,
        2.0,
        &[78.8, 72.6, 68.4, 60.8],
        &[
            &[20.2, 19.9, 19.6, 19.3],
            &[18.8, 18.4, 18.0, 17.6],
            &[17.9, 17.4, 16.9, 16.4],
            &[16.1, 15.5, 15.0, 14.5],
        ],
    ),
    (
        0.04,
        0.5,
        &[69.9, 58.8, 51.5, 41.1],
        &[
            &[18.5, 17.8, 17.1, 16.5],
            &[16.2, 15.2, 14.3, 13.5],
            &[14.8, 13.5, 12.4, 11.5],
            &[12.6, 11.0, 9.7, 8.8],
        ],
    ),
    (
        0.04,
        1.0,
        &[69.9, 58.8, 51.5, 41.1],
        &[
            &[18.4, 17.8, 17.2, 16.6],
            &[16.0, 15.1, 14.3, 13.6],
            &[14.5, 13.4, 12.5, 11.7],
            &[12.1, 10.9, 9.9, 9.0],
        ],
    ),
    (
        0.04,
        2.0,
        &[69.9, 58.8, 51.5, 41.1],
        &[
            &[18.3, 17.7, 17.2, 16.7],
            &[15.8, 15.1, 14.4, 13.8],
            &[14.1, 13.3, 12.6, 11.9],
            &[11.6, 10.7, 10.0, 9.4],
        ],
    ),
    (
        0.08,
        0.5,
        &[60.3, 44.1, 32.8, 16.2],
        &[
            &[16.8, 15.6, 14.6, 13.7],
            &[13.3, 11.7, 10.4, 9.4],
            &[10.9, 9.0, 7.6, 6.7],
            &[6.0, 4.6, 3.7, 3.1],
        ],
    ),
    (
        0.08,
        1.0,
        &[60.3, 44.1, 32.8, 16.2],
        &[
            &[16.7, 15.6, 14.6, 13.8],
            &[13.1, 11.7, 10.5, 9.6],
            &[10.4, 8.9, 7.7, 6.9],
            &[5.6, 4.5, 3.8, 3.3],
        ],
    ),
    (
        0.08,
        2.0,
        &[60.3, 44.1, 32.8, 16.2],
        &[
            &[16.5, 15.5, 14.7, 13.9],
            &[12.7, 11.6, 10.6, 9.8],
            &[9.9, 8.8, 7.9, 7.1],
            &[5.2, 4.4, 3.9, 3.5],
        ],
    ),
];

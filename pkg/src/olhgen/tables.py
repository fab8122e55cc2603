"""Embedded design data: two published 16-run matrices and the four symbolic fold matrices.

TABLE1_B0 is a 16-run, 16-factor Latin hypercube whose first 12 columns form an
orthogonal Latin hypercube (the remaining four complete the Latin hypercube but
are not orthogonal to the rest). TABLE5_B0 is a 16-run, 15-factor nearly
orthogonal Latin hypercube. Both are stored in doubled levels (odd integers
+-1..+-15), exactly as printed.

FOLD_MATRICES holds the order 2/4/8/16 symbolic matrices over x_1..x_{order/2}
encoded as signed indices: +k stands for +x_k, -k for -x_k. Rows order/2+1..order
are the negation of rows 1..order/2 (fold-over structure) and all columns are
pairwise orthogonal for any real substitution of the symbols.
"""

TABLE1_B0 = [
    [-15, 5, 9, -3, 7, 11, -11, 7, -9, 3, -15, 5, 11, -11, 7, -7],
    [-13, 1, 1, 13, -7, -11, 11, -7, -1, -13, -13, 1, 13, 5, 5, -3],
    [-11, 7, -7, -11, 13, -1, -1, -13, 9, -3, 15, -5, -5, 11, -7, 7],
    [-9, 3, -15, 5, -13, 1, 1, 13, 1, 13, 13, -1, -13, -5, -5, 3],
    [-7, -11, 11, -7, 11, -7, 7, 11, 5, 15, -3, -9, -9, 3, 9, 11],
    [-5, -15, 3, 9, -11, 7, -7, -11, 13, -1, -1, -13, -1, 9, 11, 15],
    [-3, -9, -5, -15, 1, 13, 13, -1, -5, -15, 3, 9, 1, 7, -11, -11],
    [-1, -13, -13, 1, -1, -13, -13, 1, -13, 1, 1, 13, 9, -9, -9, -15],
    [1, 13, 13, -1, -9, 3, -15, 5, 11, -7, 7, 11, -7, -7, -15, -9],
    [3, 9, 5, 15, 9, -3, 15, -5, 3, 9, 5, 15, -15, -13, -13, -13],
    [5, 15, -3, -9, -3, -9, -5, -15, -11, 7, -7, -11, 15, -3, 15, 9],
    [7, 11, -11, 7, 3, 9, 5, 15, -3, -9, -5, -15, 7, 15, 13, 13],
    [9, -3, 15, -5, -5, -15, 3, 9, -7, -11, 11, -7, 5, 13, -3, 5],
    [11, -7, 7, 11, 5, 15, -3, -9, -15, 5, 9, -3, 3, -1, -1, 1],
    [13, -1, -1, -13, -15, 5, 9, -3, 7, 11, -11, 7, -11, -15, 3, -5],
    [15, -5, -9, 3, 15, -5, -9, 3, 15, -5, -9, 3, -3, 1, 1, -1],
]

TABLE5_B0 = [
    [-15, 15, -13, 13, -5, -13, 5, 3, -1, 5, -7, 5, -9, -9, 5],
    [-13, -15, -3, 3, 7, 3, 15, -11, 13, -5, 7, -13, -7, -3, -3],
    [-11, -9, -5, -11, -15, 13, -5, 11, -9, 9, 9, 3, -5, -1, -11],
    [-9, -1, 9, -15, -11, 1, -1, -13, 5, -1, -15, 7, 1, 3, 15],
    [-7, 1, -7, 7, 15, 15, -13, 9, -5, -13, -3, -1, -1, 7, 13],
    [-5, 13, 11, -5, 9, -7, -3, -9, -13, 11, 13, -9, -3, 13, 1],
    [-3, -5, 13, 15, -9, -9, -11, 1, 7, -9, 15, 11, 9, 1, -1],
    [-1, -11, 3, -7, 11, -15, 13, 15, -7, -3, -9, 9, 7, 9, -5],
    [1, 3, -9, -3, -1, -5, -15, -1, 11, 3, -11, -15, 15, 5, -15],
    [3, -3, 15, 11, 3, 9, 1, -7, -15, 1, -13, -3, 3, -15, -9],
    [5, 9, 7, -1, 5, 11, 9, 13, 15, 15, 5, 1, 11, -7, 9],
    [7, 7, -1, -13, 13, -1, -7, -5, 9, -7, 3, 15, -13, -11, -13],
    [9, 5, -11, -9, -7, -3, 7, -3, -11, -15, 11, -7, 13, -13, 7],
    [11, 11, 5, 5, -13, 7, 11, 5, 3, -11, -5, -5, -11, 15, -7],
    [13, -7, -15, 9, 1, 5, 3, -15, -3, 13, 1, 13, 5, 11, 3],
    [15, -13, 1, 1, -3, -11, -9, 7, 1, 7, -1, -11, -15, -5, 11],
]

FOLD_MATRICES = {
    2: [
        [1],
        [-1],
    ],
    4: [
        [1, 2],
        [2, -1],
        [-1, -2],
        [-2, 1],
    ],
    8: [
        [1, -2, 4, 3],
        [2, 1, 3, -4],
        [3, -4, -2, -1],
        [4, 3, -1, 2],
        [-1, 2, -4, -3],
        [-2, -1, -3, 4],
        [-3, 4, 2, 1],
        [-4, -3, 1, -2],
    ],
    16: [
        [1, -2, -4, -3, -8, 7, 5, 6],
        [2, 1, -3, 4, -7, -8, -6, 5],
        [3, -4, 2, 1, -6, -5, 7, -8],
        [4, 3, 1, -2, -5, 6, -8, -7],
        [5, -6, -8, 7, 4, 3, -1, -2],
        [6, 5, -7, -8, 3, -4, 2, -1],
        [7, -8, 6, -5, 2, -1, -3, 4],
        [8, 7, 5, 6, 1, 2, 4, 3],
        [-1, 2, 4, 3, 8, -7, -5, -6],
        [-2, -1, 3, -4, 7, 8, 6, -5],
        [-3, 4, -2, -1, 6, 5, -7, 8],
        [-4, -3, -1, 2, 5, -6, 8, 7],
        [-5, 6, 8, -7, -4, -3, 1, 2],
        [-6, -5, 7, 8, -3, 4, -2, 1],
        [-7, 8, -6, 5, -2, 1, 3, -4],
        [-8, -7, -5, -6, -1, -2, -4, -3],
    ],
}

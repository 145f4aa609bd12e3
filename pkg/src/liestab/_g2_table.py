"""Structure constants for the 14-dimensional exceptional simple Lie algebra.

Chevalley basis for type G2: two Cartan generators H1, H2 (the simple
coroots), then root vectors X1..X6 for the positive roots in height order

    a1,  a2,  a1+a2,  2*a1+a2,  3*a1+a2,  3*a1+2*a2

(a1 short, a2 long) and Y1..Y6 for the corresponding negative roots.  With
this normalization [Xk, Yk] is the coroot of the k-th positive root and all
constants are integers of absolute value at most 3.  The table is validated
on load (Jacobi identity on every basis triple, Killing rank 14).

Entries are (i, j, k, c) meaning [e_i, e_j] has coefficient c on e_k, listed
for i < j only; the i > j half is implied by antisymmetry.
"""

G2_DIM = 14

G2_LABELS = (
    "H1", "H2",
    "X1", "X2", "X3", "X4", "X5", "X6",
    "Y1", "Y2", "Y3", "Y4", "Y5", "Y6",
)

G2_BRACKETS = (
    (0, 2, 2, 2),
    (0, 3, 3, -3),
    (0, 4, 4, -1),
    (0, 5, 5, 1),
    (0, 6, 6, 3),
    (0, 8, 8, -2),
    (0, 9, 9, 3),
    (0, 10, 10, 1),
    (0, 11, 11, -1),
    (0, 12, 12, -3),
    (1, 2, 2, -1),
    (1, 3, 3, 2),
    (1, 4, 4, 1),
    (1, 6, 6, -1),
    (1, 7, 7, 1),
    (1, 8, 8, 1),
    (1, 9, 9, -2),
    (1, 10, 10, -1),
    (1, 12, 12, 1),
    (1, 13, 13, -1),
    (2, 3, 4, 1),
    (2, 4, 5, 2),
    (2, 5, 6, 3),
    (2, 8, 0, 1),
    (2, 10, 9, -3),
    (2, 11, 10, -2),
    (2, 12, 11, -1),
    (3, 6, 7, 1),
    (3, 9, 1, 1),
    (3, 10, 8, 1),
    (3, 13, 12, -1),
    (4, 5, 7, -3),
    (4, 8, 3, -3),
    (4, 9, 2, 1),
    (4, 10, 0, 1),
    (4, 10, 1, 3),
    (4, 11, 8, 2),
    (4, 13, 11, 1),
    (5, 8, 4, -2),
    (5, 10, 2, 2),
    (5, 11, 0, 2),
    (5, 11, 1, 3),
    (5, 12, 8, 1),
    (5, 13, 10, -1),
    (6, 8, 5, -1),
    (6, 11, 2, 1),
    (6, 12, 0, 1),
    (6, 12, 1, 1),
    (6, 13, 9, 1),
    (7, 9, 6, -1),
    (7, 10, 5, 1),
    (7, 11, 4, -1),
    (7, 12, 3, 1),
    (7, 13, 0, 1),
    (7, 13, 1, 2),
    (8, 9, 10, -1),
    (8, 10, 11, -2),
    (8, 11, 12, -3),
    (9, 12, 13, -1),
    (10, 11, 13, 3),
)

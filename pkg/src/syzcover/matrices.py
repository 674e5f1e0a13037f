"""Determinant, adjugate and products for small square matrices.

Matrices are tuples of tuples of ring elements; n = 2 and n = 3 are the
sizes that ever occur.  Entries only need +, -, * (and .inverse() on the
determinant for matrix inversion, .p_power() for entrywise Frobenius), so
the same code serves field elements, localized curve fractions and formal
polynomials.
"""

from __future__ import annotations


def mat(rows):
    return tuple(tuple(r) for r in rows)


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for t in range(1, k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_sub(A, B):
    return tuple(
        tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if n == 3:
        return (
            M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
        )
    raise ValueError(f"unsupported matrix size {n}")


def adjugate(M):
    n = len(M)
    if n == 2:
        return (
            (M[1][1], -M[0][1]),
            (-M[1][0], M[0][0]),
        )
    if n == 3:
        def c(i, j):
            rows = [r for r in range(3) if r != i]
            cols = [s for s in range(3) if s != j]
            minor = (
                M[rows[0]][cols[0]] * M[rows[1]][cols[1]]
                - M[rows[0]][cols[1]] * M[rows[1]][cols[0]]
            )
            return minor if (i + j) % 2 == 0 else -minor
        # adjugate = transposed cofactor matrix
        return tuple(tuple(c(j, i) for j in range(3)) for i in range(3))
    raise ValueError(f"unsupported matrix size {n}")


def mat_inverse(M):
    d = det(M)
    dinv = d.inverse()
    return tuple(tuple(dinv * a for a in row) for row in adjugate(M))


def mat_scale(s, M):
    return tuple(tuple(s * a for a in row) for row in M)


def entrywise_p_power(M):
    return tuple(tuple(a.p_power() for a in row) for row in M)

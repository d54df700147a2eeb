"""Smith normal form of integer matrices, exact and fraction free."""
from __future__ import annotations

from math import gcd


def smith_diagonal(matrix) -> list:
    """Diagonal d_1 | d_2 | ... of the Smith form (nonnegative, zeros last).

    Works on a copy with row and column operations, always pivoting on an
    entry of least absolute value in the remaining block.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if not done:
                entries = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                entries += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                _, pi, pj = min(entries)
                a[t], a[pi] = a[pi], a[t]
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                continue
            # pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            a[t] = [x + y for x, y in zip(a[t], a[i])]
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    # normalise the divisibility chain (the loop already ensures it)
    for i in range(len(diag) - 1):
        if diag[i] and diag[i + 1] % diag[i]:
            g = gcd(diag[i], diag[i + 1])
            diag[i], diag[i + 1] = g, diag[i] * diag[i + 1] // g
    return diag


def invariant_factors(matrix) -> list:
    """Nontrivial invariant factors of the cokernel Z^n / (rows of matrix)."""
    return [d for d in smith_diagonal(matrix) if d != 1]


def determinant(matrix) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]

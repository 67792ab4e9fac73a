"""Pure-Python fraction-free simplex kernels.

The tableau ``T`` is a list of lists of Python ints holding ``D`` times the
real tableau, where ``D`` is the absolute determinant of the current basis.
The compiled module ``_ckernels`` implements the same functions.
"""


def pivot(T, r, s, D):
    """Integer-preserving pivot on entry ``(r, s)``; returns the new ``D``.

    Every division below is exact (Bareiss/Edmonds).
    """
    row_r = T[r]
    p = row_r[s]
    if p < 0:
        row_r = [-x for x in row_r]
        T[r] = row_r
        p = -p
    for i in range(len(T)):
        if i == r:
            continue
        row = T[i]
        f = row[s]
        if f:
            T[i] = [(x * p - f * y) // D for x, y in zip(row, row_r)]
        elif p != D:
            T[i] = [x * p // D for x in row]
    return p


def ratio_test(T, s, rows, basis):
    """Bland ratio test on column ``s`` over the candidate ``rows``.

    Minimises ``rhs / T[i][s]`` over rows with a positive entry; ties go to
    the smallest basic variable index.  Returns -1 when the column is
    unblocked.
    """
    best = -1
    best_a = 0
    best_b = 0
    for i in rows:
        row = T[i]
        a = row[s]
        if a <= 0:
            continue
        b = row[-1]
        if best < 0:
            best, best_a, best_b = i, a, b
            continue
        lhs = b * best_a
        rhs = best_b * a
        if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
            best, best_a, best_b = i, a, b
    return best


def entering(obj, cols):
    """Smallest eligible column with a negative reduced-cost entry, or -1."""
    for j in cols:
        if obj[j] < 0:
            return j
    return -1

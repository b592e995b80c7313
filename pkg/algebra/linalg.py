"""
Exact dense linear algebra over Q(zeta_r).

Matrices are lists of rows of CycScalar. Determinant and rank use
fraction-free (Bareiss) elimination; inverse is Gauss-Jordan.
"""
from .errors import ParameterMismatch, SingularGramError
from .scalar_field import CycScalar


def zeros(rows, cols, r):
    zero = CycScalar.zero(r)
    return [[zero] * cols for _ in range(rows)]


def identity(size, r):
    out = zeros(size, size, r)
    one = CycScalar.one(r)
    for i in range(size):
        out[i][i] = one
    return out


def copy(m):
    return [list(row) for row in m]


def mat_mul(a, b):
    if a and len(a[0]) != len(b):
        raise ParameterMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new_row = [None] * cols
        for j in range(cols):
            total = None
            for k, x in enumerate(row):
                if x:
                    y = b[k][j]
                    if y:
                        total = x * y if total is None else total + x * y
            new_row[j] = total if total is not None else row[0] * 0
        out.append(new_row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def trace(a, r):
    total = CycScalar.zero(r)
    for i, row in enumerate(a):
        total = total + row[i]
    return total


def kron(a, b):
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def scalar_value(a):
    """The c with a = c*I, or None."""
    if not a:
        return None
    c = a[0][0]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x != (c if i == j else 0):
                return None
    return c


def determinant(m, r):
    size = len(m)
    if size == 0:
        return CycScalar.one(r)
    a = copy(m)
    sign = 1
    previous = CycScalar.one(r)
    for k in range(size - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return CycScalar.zero(r)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / previous
            a[i][k] = CycScalar.zero(r)
        previous = pivot
    return a[size - 1][size - 1] * sign


def rank(m, r):
    a = copy(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    found = 0
    previous = CycScalar.one(r)
    for col in range(cols):
        pivot_row = next((i for i in range(found, rows) if a[i][col]), None)
        if pivot_row is None:
            continue
        a[found], a[pivot_row] = a[pivot_row], a[found]
        pivot = a[found][col]
        for i in range(found + 1, rows):
            factor = a[i][col]
            a[i] = [(x * pivot - factor * y) / previous for x, y in zip(a[i], a[found])]
        previous = pivot
        found += 1
        if found == rows:
            break
    return found


def inverse(m, r):
    size = len(m)
    a = [list(row) + unit for row, unit in zip(m, identity(size, r))]
    for col in range(size):
        pivot_row = next((i for i in range(col, size) if a[i][col]), None)
        if pivot_row is None:
            raise SingularGramError("matrix is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        scale = a[col][col].invert()
        a[col] = [x * scale for x in a[col]]
        for i in range(size):
            if i != col and a[i][col]:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return [row[size:] for row in a]

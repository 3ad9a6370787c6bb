"""Dense linear algebra over F_l (l prime) on numpy int64 matrices.

l is small enough that k * (l-1)^2 fits in int64; callers assert this.
Polynomials are lists of ints, constant term first.
"""

from __future__ import annotations

import numpy as np


def rref(A: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduced echelon form (zero rows dropped) and pivot columns."""
    M = A.copy() % l
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if M[i, c] % l:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, l) % l
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % l
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace(A: np.ndarray, l: int) -> np.ndarray:
    """Rows form a basis of {x : A @ x == 0 mod l}."""
    R, pivots = rref(A, l)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[idx, fc] = 1
        for r, pc in enumerate(pivots):
            basis[idx, pc] = (-int(R[r, fc])) % l
    return basis


def det_mod(A: np.ndarray, l: int) -> int:
    M = A.copy() % l
    n = M.shape[0]
    det = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
            det = -det
        det = det * int(M[c, c]) % l
        inv = pow(int(M[c, c]), -1, l)
        for i in range(c + 1, n):
            if M[i, c]:
                M[i] = (M[i] - int(M[i, c]) * inv * M[c]) % l
    return det % l


def charpoly(A: np.ndarray, l: int) -> list[int]:
    """det(xI - A) mod l by evaluation at x = 0..n and Lagrange interpolation."""
    n = A.shape[0]
    if n + 1 > l:
        raise ValueError("field too small for interpolation")
    xs = list(range(n + 1))
    ys = []
    I = np.eye(n, dtype=np.int64)
    for x in xs:
        ys.append(det_mod((x * I - A) % l, l))
    # N(t) = prod (t - x_i)
    N = [1]
    for x in xs:
        N = _poly_mul(N, [(-x) % l, 1], l)
    out = [0] * (n + 1)
    for x, y in zip(xs, ys):
        Ni = _poly_div_linear(N, x, l)
        den = 1
        for x2 in xs:
            if x2 != x:
                den = den * (x - x2) % l
        c = y * pow(den, -1, l) % l
        for i, coef in enumerate(Ni):
            out[i] = (out[i] + c * coef) % l
    return out


def _poly_mul(a: list[int], b: list[int], l: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % l
    return out


def _poly_div_linear(f: list[int], root: int, l: int) -> list[int]:
    """f / (x - root), exact."""
    n = len(f) - 1
    out = [0] * n
    acc = 0
    for i in range(n - 1, -1, -1):
        acc = (f[i + 1] + acc * root) % l
        out[i] = acc
    return out


def _poly_mod(a: list[int], m: list[int], l: int) -> list[int]:
    a = [x % l for x in a]
    dm = len(m) - 1
    inv = pow(m[-1], -1, l)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % l
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % l
    a = a[:dm]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_powmod(base: list[int], e: int, m: list[int], l: int) -> list[int]:
    result = [1]
    b = _poly_mod(base, m, l)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, b, l), m, l)
        b = _poly_mod(_poly_mul(b, b, l), m, l)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], l: int) -> list[int]:
    def trim(v):
        v = [x % l for x in v]
        while len(v) > 1 and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b != [0]:
        r = _poly_rem(a, b, l)
        a, b = b, trim(r)
    if a == [0]:
        return a
    inv = pow(a[-1], -1, l)
    return [x * inv % l for x in a]


def _poly_rem(a: list[int], b: list[int], l: int) -> list[int]:
    a = [x % l for x in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, l)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % l
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % l
    a = a[:db] if db > 0 else [0]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a if a else [0]


def distinct_roots(f: list[int], l: int) -> list[int]:
    """All roots in F_l of f (square factors ignored); deterministic."""
    f = [x % l for x in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    # Strip the content of x: roots at 0.
    roots = []
    while f[0] == 0 and len(f) > 1:
        roots.append(0)
        f = f[1:]
    if len(f) <= 1:
        return sorted(set(roots))
    # Product of distinct linear factors: gcd(f, x^l - x).
    xl = _poly_powmod([0, 1], l, f, l)
    h = list(xl) + [0] * max(0, 2 - len(xl))
    h[1] = (h[1] - 1) % l
    g = _poly_gcd(f, h, l)
    roots.extend(_split_linear(g, l))
    return sorted(set(roots))


def _split_linear(g: list[int], l: int) -> list[int]:
    """Roots of a product of distinct linear factors, by deterministic
    quadratic-residue splitting."""
    g = list(g)
    while len(g) > 1 and g[-1] == 0:
        g.pop()
    deg = len(g) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [(-g[0]) * pow(g[1], -1, l) % l]
    if g[0] == 0:
        return [0] + _split_linear(g[1:], l)
    half = (l - 1) // 2
    a = 0
    while True:
        shifted = _poly_powmod([a % l, 1], half, g, l)
        shifted[0] = (shifted[0] - 1) % l
        h = _poly_gcd(g, shifted, l)
        if 0 < len(h) - 1 < deg:
            other = _poly_quotient(g, h, l)
            return sorted(_split_linear(h, l) + _split_linear(other, l))
        a += 1
        if a > 4 * l:
            raise RuntimeError("root splitting failed to make progress")


def _poly_quotient(a: list[int], b: list[int], l: int) -> list[int]:
    a = [x % l for x in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, l)
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % l
        out[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % l
    return out

"""Named group constructors and the small group-spec language.

Specs: S(n), A(n), C(n), D(m) (dihedral of order m), Q(m) (dicyclic of order
m), GL(d,q), SL(d,q), products via 'x', and explicit generators via
perm:"(1 2 3)(4 5), (1 2)".  Matrix groups act on the nonzero row vectors of
F_q^d, so every group lives as one PermGroup.
"""

from __future__ import annotations

import re

from .errors import BudgetExceededError
from .finitefield import FiniteField
from .numutil import factorint
from .perm import parse_cycles
from .permgroup import PermGroup

MAX_DEGREE = 10**4


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise BudgetExceededError(f"permutation degree {n} exceeds {MAX_DEGREE}")


def symmetric(n: int) -> PermGroup:
    if n < 0:
        raise ValueError("n must be >= 0")
    deg = max(n, 1)
    _check_degree(deg)
    gens = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, deg))))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0] + list(range(n, deg))))
    return PermGroup(gens, deg, name=f"S({n})")


def alternating(n: int) -> PermGroup:
    if n < 0:
        raise ValueError("n must be >= 0")
    deg = max(n, 1)
    _check_degree(deg)
    gens = []
    if n >= 3:
        gens.append(tuple([1, 2, 0] + list(range(3, deg))))
    if n >= 4:
        cyc = list(range(deg))
        if n % 2 == 1:
            # odd n: (0 1 ... n-1) is even
            cyc = list(range(1, n)) + [0] + list(range(n, deg))
        else:
            # even n: (1 2 ... n-1) fixing 0 is even
            cyc = [0] + list(range(2, n)) + [1] + list(range(n, deg))
        gens.append(tuple(cyc))
    return PermGroup(gens, deg, name=f"A({n})")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_degree(n)
    if n == 1:
        return PermGroup([], 1, name="C(1)")
    gen = tuple(list(range(1, n)) + [0])
    return PermGroup([gen], n, name=f"C({n})")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2 != 0:
        raise ValueError("dihedral order must be even and >= 2")
    n = order // 2
    if n == 1:
        g = cyclic(2)
        return PermGroup(g.generators, g.degree, name=f"D({order})")
    if n == 2:
        return PermGroup([(1, 0, 2, 3), (0, 1, 3, 2)], 4, name="D(4)")
    _check_degree(n)
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((-i) % n for i in range(n))
    return PermGroup([rot, ref], n, name=f"D({order})")


def dicyclic(order: int) -> PermGroup:
    """Dicyclic group of the given order (divisible by 4), as its regular action.

    Elements a^i b^eps with a of order 2n, b^2 = a^n, b a b^-1 = a^-1;
    the point i + 2n*eps carries a^i b^eps and generators act by right
    multiplication.
    """
    if order < 8 or order % 4 != 0:
        raise ValueError("dicyclic order must be >= 8 and divisible by 4")
    n = order // 4
    m = 2 * n
    _check_degree(order)

    def mul(i, eps, j, delta):
        sign = -1 if eps else 1
        i2 = (i + sign * j + (n if eps and delta else 0)) % m
        return i2, eps ^ delta

    def right_mult(j, delta):
        images = [0] * order
        for eps in (0, 1):
            for i in range(m):
                i2, e2 = mul(i, eps, j, delta)
                images[i + m * eps] = i2 + m * e2
        return tuple(images)

    return PermGroup([right_mult(1, 0), right_mult(0, 1)], order, name=f"Q({order})")


def _vectors(field: FiniteField, d: int):
    def rec(prefix):
        if len(prefix) == d:
            yield tuple(prefix)
            return
        for c in field.elements():
            yield from rec(prefix + [c])

    yield from rec([])


def _matrix_group(kind: str, d: int, q: int) -> PermGroup:
    if d < 2:
        raise ValueError("matrix group dimension must be >= 2")
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, m = next(iter(fac.items()))
    field = FiniteField(p, m)
    points = [v for v in _vectors(field, d) if any(c != field.zero for c in v)]
    _check_degree(len(points))
    index = {v: i for i, v in enumerate(points)}

    def matrix_perm(mat):
        images = [0] * len(points)
        for idx, v in enumerate(points):
            w = []
            for col in range(d):
                acc = field.zero
                for row in range(d):
                    acc = field.add(acc, field.mul(v[row], mat[row][col]))
                w.append(acc)
            images[idx] = index[tuple(w)]
        return tuple(images)

    def ident_mat():
        return [
            [field.one if r == c else field.zero for c in range(d)] for r in range(d)
        ]

    gens = []
    gamma = field.generator()
    # Transvections over an F_p-basis of F_q generate SL(d, q).
    basis = [field.pow(gamma, t) for t in range(m)] if q > 2 else [field.one]
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for c in basis:
                mat = ident_mat()
                mat[i][j] = c
                gens.append(matrix_perm(mat))
    if kind == "GL" and q > 2:
        mat = ident_mat()
        mat[0][0] = gamma
        gens.append(matrix_perm(mat))
    name = f"{kind}({d},{q})"
    return PermGroup(gens, len(points), name=name)


def general_linear(d: int, q: int) -> PermGroup:
    return _matrix_group("GL", d, q)


def special_linear(d: int, q: int) -> PermGroup:
    return _matrix_group("SL", d, q)


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the point sets."""
    deg = G.degree + H.degree
    _check_degree(deg)
    gens = [g + tuple(range(G.degree, deg)) for g in G.generators]
    gens += [
        tuple(range(G.degree)) + tuple(x + G.degree for x in h) for h in H.generators
    ]
    gname = G.name or "?"
    hname = H.name or "?"
    return PermGroup(gens, deg, name=f"{gname} x {hname}")


def from_cycle_generators(text: str, degree: int | None = None, name: str | None = None) -> PermGroup:
    """Group from comma-separated 1-based cycle words, e.g. "(1 2 3)(4 5), (1 2)"."""
    parts = re.split(r"\)\s*,\s*\(", text.strip())
    words = []
    for i, part in enumerate(parts):
        w = part
        if i > 0:
            w = "(" + w
        if i < len(parts) - 1:
            w = w + ")"
        words.append(w)
    raw = [parse_cycles(w) for w in words if w.strip()]
    deg = max([len(r) for r in raw] + [degree or 1])
    gens = [r + tuple(range(len(r), deg)) for r in raw]
    return PermGroup(gens, deg, name=name or "perm group")


_ATOM_RE = re.compile(
    r"""^\s*(?:
        (?P<fam>[SACDQ])\s*\(\s*(?P<n>\d+)\s*\)
      | (?P<mat>GL|SL)\s*\(\s*(?P<d>\d+)\s*,\s*(?P<q>\d+)\s*\)
      | perm\s*:\s*"(?P<cycles>[^"]*)"
    )\s*$""",
    re.VERBOSE,
)

_FAMILIES = {
    "S": symmetric,
    "A": alternating,
    "C": cyclic,
    "D": dihedral,
    "Q": dicyclic,
}


def _parse_atom(token: str) -> PermGroup:
    m = _ATOM_RE.match(token)
    if not m:
        raise ValueError(f"cannot parse group spec atom: {token!r}")
    if m.group("fam"):
        return _FAMILIES[m.group("fam")](int(m.group("n")))
    if m.group("mat"):
        ctor = general_linear if m.group("mat") == "GL" else special_linear
        return ctor(int(m.group("d")), int(m.group("q")))
    return from_cycle_generators(m.group("cycles"), name=f'perm:"{m.group("cycles")}"')


def _split_product(spec: str) -> list[str]:
    # Split on 'x' tokens that sit outside parentheses and quotes.
    parts, buf, depth, in_quote = [], [], 0, False
    i = 0
    while i < len(spec):
        ch = spec[i]
        if ch == '"':
            in_quote = not in_quote
        elif not in_quote:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "xX" and depth == 0:
                before = spec[i - 1] if i else " "
                after = spec[i + 1] if i + 1 < len(spec) else " "
                if not (before.isalnum() or after.isalnum()):
                    parts.append("".join(buf))
                    buf = []
                    i += 1
                    continue
        buf.append(ch)
        i += 1
    parts.append("".join(buf))
    return parts


def parse_group_spec(spec: str) -> PermGroup:
    """Parse the mini-language into a PermGroup; raises ValueError on bad input."""
    parts = [p.strip() for p in _split_product(spec)]
    if not parts or any(not p for p in parts):
        raise ValueError(f"cannot parse group spec: {spec!r}")
    groups = [_parse_atom(p) for p in parts]
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g)
    return out


def canonical_spec_name(spec: str) -> str:
    return parse_group_spec(spec).name or spec

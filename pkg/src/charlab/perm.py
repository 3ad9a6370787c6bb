"""Permutations of {0..n-1}.

The low-level representation is a tuple of images; ``pmul(a, b)`` composes
left-to-right (apply a, then b), matching the convention used throughout the
package.  Cycle notation is 1-based on input and output, fixed points omitted.
"""

from __future__ import annotations

import math
import re

from .errors import DegreeMismatchError

PermTuple = tuple[int, ...]


def identity(n: int) -> PermTuple:
    return tuple(range(n))


def is_identity(a: PermTuple) -> bool:
    return all(i == x for i, x in enumerate(a))


def pmul(a: PermTuple, b: PermTuple) -> PermTuple:
    """Compose: apply a first, then b."""
    return tuple(b[x] for x in a)


def pinv(a: PermTuple) -> PermTuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ppow(a: PermTuple, n: int) -> PermTuple:
    if n < 0:
        return ppow(pinv(a), -n)
    result = identity(len(a))
    base = a
    while n:
        if n & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        n >>= 1
    return result


def pconj(g: PermTuple, h: PermTuple) -> PermTuple:
    """Conjugate h^-1 g h (apply h^-1, then g, then h)."""
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[h[i]] = h[gi]
    return tuple(out)


def pcomm(a: PermTuple, b: PermTuple) -> PermTuple:
    """Commutator a^-1 b^-1 a b."""
    return pmul(pmul(pmul(pinv(a), pinv(b)), a), b)


def porder(a: PermTuple) -> int:
    order = 1
    for c in cycles(a):
        order = math.lcm(order, len(c))
    return order


def cycles(a: PermTuple, include_fixed: bool = False) -> list[tuple[int, ...]]:
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = a[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = a[x]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def cycle_string(a: PermTuple) -> str:
    """1-based cycle notation; '()' for the identity."""
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(s: str, degree: int | None = None) -> PermTuple:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)"; commas and extra
    whitespace are both accepted as separators."""
    body = s.strip()
    if body and _CYCLE_RE.sub("", body).strip():
        raise ValueError(f"could not parse cycle notation: {s!r}")
    cycle_lists: list[list[int]] = []
    maxpt = -1
    for m in _CYCLE_RE.finditer(body):
        inner = m.group(1).replace(",", " ").split()
        if not inner:
            continue
        pts = [int(tok) - 1 for tok in inner]
        if any(p < 0 for p in pts):
            raise ValueError(f"points must be >= 1 in {s!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point within a cycle in {s!r}")
        maxpt = max(maxpt, max(pts))
        cycle_lists.append(pts)
    n = max(maxpt + 1, degree or 0)
    images = list(range(n))
    for pts in cycle_lists:
        for i, p in enumerate(pts):
            if images[p] != p:
                raise ValueError(f"point {p + 1} occurs in two cycles in {s!r}")
            images[p] = pts[(i + 1) % len(pts)]
    return tuple(images)


class Permutation:
    """Immutable permutation wrapper; arithmetic composes left-to-right."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images do not form a bijection on 0..n-1")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def from_cycles(cls, s: str, degree: int | None = None) -> "Permutation":
        return cls(parse_cycles(s, degree))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(identity(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def order(self) -> int:
        return porder(self.images)

    def is_identity(self) -> bool:
        return is_identity(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degrees differ: {self.degree} vs {other.degree}"
            )
        return Permutation(pmul(self.images, other.images))

    def __pow__(self, n: int) -> "Permutation":
        return Permutation(ppow(self.images, n))

    def __invert__(self) -> "Permutation":
        return Permutation(pinv(self.images))

    def conjugate_by(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degrees differ: {self.degree} vs {other.degree}"
            )
        return Permutation(pconj(self.images, other.images))

    def extended(self, degree: int) -> "Permutation":
        """The same permutation acting on a larger point set."""
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree, degree)))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self.images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({cycle_string(self.images)!r})"

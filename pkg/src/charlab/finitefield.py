"""Arithmetic in F_{p^d} with a deterministic choice of defining polynomial.

Elements are coefficient tuples of length d (constant term first) over F_p.
The defining polynomial is the lexicographically smallest monic irreducible
of degree d, comparing non-leading coefficient vectors (c_0, ..., c_{d-1});
this keeps every derived fingerprint stable across runs.
"""

from __future__ import annotations

from functools import lru_cache

from .numutil import factorint, is_prime

FFElt = tuple[int, ...]


def _poly_mul_mod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    d = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # Reduce mod the monic modulus.
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(d + 1):
                prod[i - d + j] = (prod[i - d + j] - c * modulus[j]) % p
    prod = prod[:d]
    return prod + [0] * (d - len(prod))


def _poly_pow_mod(base: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    d = len(modulus) - 1
    result = [1] + [0] * (d - 1)
    b = base[:]
    while e:
        if e & 1:
            result = _poly_mul_mod(result, b, modulus, p)
        b = _poly_mul_mod(b, b, modulus, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a[:]), trim(b[:])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
            trim(a)
            if not a:
                break
        a, b = b, a
    return a


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """coeffs: monic, length d+1, constant first; assumes d >= 2."""
    d = len(coeffs) - 1
    xvec = [0] * d
    xvec[1] = 1
    if _poly_pow_mod(xvec, p**d, coeffs, p) != xvec:
        return False
    for r in factorint(d):
        xe = _poly_pow_mod(xvec, p ** (d // r), coeffs, p)
        diff = [(a - b) % p for a, b in zip(xe, xvec)]
        if not any(diff):
            return False
        if len(_poly_gcd(diff, list(coeffs), p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _find_modulus(p: int, d: int) -> tuple[int, ...]:
    if d == 1:
        return (0, 1)
    for n in range(p**d):
        digits = []
        m = n
        for _ in range(d):
            digits.append(m % p)
            m //= p
        # n encodes (c_0,...,c_{d-1}) big-endian so ascending n is ascending lex.
        coeffs = list(reversed(digits)) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {d} over F_{p}")


class FiniteField:
    """The field F_{p^d}; elements are coefficient tuples of length d."""

    def __init__(self, p: int, d: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.d = d
        self.q = p**d
        self.modulus = list(_find_modulus(p, d))
        self.zero: FFElt = (0,) * d
        self.one: FFElt = (1,) + (0,) * (d - 1)

    def element(self, coeffs) -> FFElt:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.d:
            raise ValueError("too many coefficients")
        return tuple(c + [0] * (self.d - len(c)))

    def from_int(self, n: int) -> FFElt:
        return self.element([n])

    def add(self, a: FFElt, b: FFElt) -> FFElt:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: FFElt, b: FFElt) -> FFElt:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: FFElt) -> FFElt:
        return tuple((-x) % self.p for x in a)

    def mul(self, a: FFElt, b: FFElt) -> FFElt:
        if self.d == 1:
            return (a[0] * b[0] % self.p,)
        return tuple(_poly_mul_mod(list(a), list(b), self.modulus, self.p))

    def pow(self, a: FFElt, e: int) -> FFElt:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FFElt) -> FFElt:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self.pow(a, self.q - 2)

    def scalar_mul(self, n: int, a: FFElt) -> FFElt:
        n %= self.p
        return tuple(n * x % self.p for x in a)

    def order(self, a: FFElt) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for r in factorint(n):
            while n % r == 0 and self.pow(a, n // r) == self.one:
                n //= r
        return n

    def elements(self):
        """All q elements, ascending in the (c_0,...,c_{d-1}) lex order."""
        def rec(prefix: list[int]):
            if len(prefix) == self.d:
                yield tuple(prefix)
                return
            for c in range(self.p):
                yield from rec(prefix + [c])

        yield from rec([])

    def generator(self) -> FFElt:
        """Lex-smallest multiplicative generator."""
        for a in self.elements():
            if a != self.zero and self.order(a) == self.q - 1:
                return a
        raise RuntimeError("no generator found (impossible)")

    def element_of_order(self, n: int) -> FFElt:
        """Lex-smallest element of exact order n among powers of a generator."""
        if (self.q - 1) % n != 0:
            raise ValueError(f"no element of order {n} in F_{self.q}")
        g = self.generator()
        step = self.pow(g, (self.q - 1) // n)
        best = None
        x = step
        for t in range(1, n + 1):
            if self.order(x) == n and (best is None or x < best):
                best = x
            x = self.mul(x, step)
        assert best is not None
        return best

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, d={self.d})"

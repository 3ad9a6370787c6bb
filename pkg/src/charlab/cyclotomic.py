"""Exact arithmetic in Q(zeta_e), Galois twists, and reduction mod p.

A Cyclo is held in the canonical power basis zeta^0 .. zeta^(phi(e)-1):
higher powers are rewritten through the e-th cyclotomic polynomial, so two
values with the same conductor are equal iff their coefficient dicts are
equal.  Coefficients are Fractions; nothing here ever touches a float.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .finitefield import FFElt, FiniteField
from .numutil import (
    crt,
    euler_phi,
    factorint,
    multiplicative_order,
    p_part,
    p_prime_part,
    valuation,
)

_phi_lock = threading.RLock()
_cyclo_poly_cache: dict[int, tuple[int, ...]] = {}
_reduction_cache: dict[int, list[dict[int, int]]] = {}


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (constant term first)."""
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[shift] = q
        if q:
            for i, d in enumerate(den):
                num[shift + i] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, constant term first; cached per conductor."""
    cached = _cyclo_poly_cache.get(e)
    if cached is not None:
        return cached
    with _phi_lock:
        cached = _cyclo_poly_cache.get(e)
        if cached is not None:
            return cached
        poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
        for d in range(1, e):
            if e % d == 0:
                poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
        result = tuple(poly)
        _cyclo_poly_cache[e] = result
        return result


def _reduction_rows(e: int) -> list[dict[int, int]]:
    """Row j gives x^(phi(e)+j) mod Phi_e as {exponent: int coefficient}."""
    cached = _reduction_cache.get(e)
    if cached is not None:
        return cached
    with _phi_lock:
        cached = _reduction_cache.get(e)
        if cached is not None:
            return cached
        phi = euler_phi(e)
        poly = cyclotomic_polynomial(e)
        rows: list[list[int]] = []
        if e > 1:
            current = [-c for c in poly[:phi]]  # x^phi
            rows.append(current)
            for _ in range(phi + 1, e):
                nxt = [0] + current[:-1]
                top = current[phi - 1]
                if top:
                    for i in range(phi):
                        nxt[i] -= top * poly[i]
                nxt = nxt[:phi]
                rows.append(nxt)
                current = nxt
        result = [
            {i: c for i, c in enumerate(row) if c} for row in rows
        ]
        _reduction_cache[e] = result
        return result


class Cyclo:
    """An exact element of Q(zeta_e) in canonical form."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: dict[int, Fraction] | None = None, *, _canonical: bool = False):
        if e < 1:
            raise ValueError("conductor must be >= 1")
        object.__setattr__(self, "e", e)
        if coeffs is None:
            coeffs = {}
        if _canonical:
            object.__setattr__(self, "coeffs", coeffs)
        else:
            object.__setattr__(self, "coeffs", _canonicalize(e, coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Cyclo is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def rational(q, e: int = 1) -> "Cyclo":
        q = Fraction(q)
        return Cyclo(e, {0: q} if q else {}, _canonical=True)

    @staticmethod
    def zero(e: int = 1) -> "Cyclo":
        return Cyclo(e, {}, _canonical=True)

    @staticmethod
    def one(e: int = 1) -> "Cyclo":
        return Cyclo.rational(1, e)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def is_integral(self) -> bool:
        """All canonical coefficients are integers (true for algebraic
        integers since Z[zeta_e] is the full ring of integers)."""
        return all(c.denominator == 1 for c in self.coeffs.values())

    # -- arithmetic ------------------------------------------------------------

    def _promote(self, L: int) -> "Cyclo":
        if self.e == L:
            return self
        scale = L // self.e
        return Cyclo(L, {i * scale: c for i, c in self.coeffs.items()})

    def _merged(self, other: "Cyclo") -> tuple["Cyclo", "Cyclo"]:
        if self.e == other.e:
            return self, other
        import math

        L = math.lcm(self.e, other.e)
        return self._promote(L), other._promote(L)

    def __add__(self, other) -> "Cyclo":
        other = _coerce(other, self.e)
        a, b = self._merged(other)
        out = dict(a.coeffs)
        for i, c in b.coeffs.items():
            s = out.get(i, Fraction(0)) + c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return Cyclo(a.e, out, _canonical=True)

    def __radd__(self, other) -> "Cyclo":
        return self.__add__(other)

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.e, {i: -c for i, c in self.coeffs.items()}, _canonical=True)

    def __sub__(self, other) -> "Cyclo":
        return self.__add__(_coerce(other, self.e).__neg__())

    def __rsub__(self, other) -> "Cyclo":
        return _coerce(other, self.e).__sub__(self)

    def __mul__(self, other) -> "Cyclo":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return Cyclo.zero(self.e)
            return Cyclo(
                self.e, {i: c * q for i, c in self.coeffs.items()}, _canonical=True
            )
        a, b = self._merged(other)
        if a.is_rational():
            return b * a.rational_value()
        if b.is_rational():
            return a * b.rational_value()
        e = a.e
        acc: dict[int, Fraction] = {}
        for i, c in a.coeffs.items():
            for j, d in b.coeffs.items():
                k = (i + j) % e
                s = acc.get(k, Fraction(0)) + c * d
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return Cyclo(e, acc)

    def __rmul__(self, other) -> "Cyclo":
        return self.__mul__(other)

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_e over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        if self.is_rational():
            return Cyclo.rational(1 / self.rational_value(), self.e)
        phi = euler_phi(self.e)
        a = [Fraction(0)] * phi
        for i, c in self.coeffs.items():
            a[i] = c
        b = [Fraction(c) for c in cyclotomic_polynomial(self.e)]
        # Extended gcd: u*a + v*Phi = r with r a nonzero rational.
        r0, r1 = b, a
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(v):
            for i in range(len(v) - 1, -1, -1):
                if v[i]:
                    return i
            return -1

        def sub_scaled(u, v, c, shift):
            out = list(u) + [Fraction(0)] * max(0, deg(v) + shift + 1 - len(u))
            for i in range(deg(v) + 1):
                out[i + shift] -= c * v[i]
            return out

        while deg(r1) > 0:
            while deg(r0) >= deg(r1):
                d0, d1 = deg(r0), deg(r1)
                c = r0[d0] / r1[d1]
                r0 = sub_scaled(r0, r1, c, d0 - d1)
                s0 = sub_scaled(s0, s1, c, d0 - d1)
                if deg(r0) < 0:
                    break
            r0, r1 = r1, r0
            s0, s1 = s1, s0
        if deg(r1) != 0:
            raise ZeroDivisionError("value is a zero divisor (impossible in a field)")
        unit = r1[0]
        inv_coeffs = {i: c / unit for i, c in enumerate(s1) if c}
        return Cyclo(self.e, inv_coeffs)

    def __truediv__(self, other) -> "Cyclo":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        a, b = self._merged(_coerce(other, self.e))
        return a * b.inverse()

    def conjugate(self) -> "Cyclo":
        """Complex conjugation zeta -> zeta^-1."""
        e = self.e
        return Cyclo(e, {(-i) % e: c for i, c in self.coeffs.items()})

    def galois(self, t: int) -> "Cyclo":
        """Image under zeta_e -> zeta_e^t; t must be coprime to e."""
        import math

        e = self.e
        if math.gcd(t, e) != 1:
            raise ValueError(f"{t} is not coprime to the conductor {e}")
        acc: dict[int, Fraction] = {}
        for i, c in self.coeffs.items():
            k = (i * t) % e
            acc[k] = acc.get(k, Fraction(0)) + c
        return Cyclo(e, acc)

    # -- ordering / io -----------------------------------------------------------

    def sort_key(self):
        return (self.e, tuple((i, c.numerator, c.denominator) for i, c in sorted(self.coeffs.items())))

    def to_json(self):
        return {
            "e": self.e,
            "coeffs": [
                [i, f"{c.numerator}/{c.denominator}"]
                for i, c in sorted(self.coeffs.items())
            ],
        }

    @staticmethod
    def from_json(obj) -> "Cyclo":
        if not isinstance(obj, dict) or "e" not in obj or "coeffs" not in obj:
            raise ValueError("malformed cyclotomic value")
        coeffs = {}
        for pair in obj["coeffs"]:
            i, s = pair
            num, _, den = str(s).partition("/")
            coeffs[int(i)] = Fraction(int(num), int(den or 1))
        return Cyclo(int(obj["e"]), coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        a, b = self._merged(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash(self.sort_key())

    def __repr__(self) -> str:
        return f"Cyclo({self.format()})"

    def format(self) -> str:
        if self.is_rational():
            return str(self.rational_value())
        parts = []
        for i, c in sorted(self.coeffs.items()):
            z = f"z{self.e}^{i}" if i > 1 else ("z%d" % self.e if i == 1 else "")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _canonicalize(e: int, coeffs: dict) -> dict[int, Fraction]:
    phi = euler_phi(e)
    rows = _reduction_rows(e)
    acc: dict[int, Fraction] = {}
    for i, c in coeffs.items():
        c = Fraction(c)
        if not c:
            continue
        i %= e
        if i < phi:
            acc[i] = acc.get(i, Fraction(0)) + c
        else:
            for j, rc in rows[i - phi].items():
                acc[j] = acc.get(j, Fraction(0)) + c * rc
    return {i: c for i, c in acc.items() if c}


def _coerce(x, e: int) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclo.rational(x, e)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyclo")


def raw_int_coeffs(a: Cyclo, e: int) -> dict[int, int]:
    """Canonical coefficients of a, rescaled to conductor e, as plain ints.

    Only valid for algebraic integers (integer canonical coefficients) with
    conductor dividing e; used by hot verification loops.
    """
    if e % a.e != 0:
        raise ValueError("conductor does not divide the requested exponent")
    scale = e // a.e
    out = {}
    for i, c in a.coeffs.items():
        if c.denominator != 1:
            raise ValueError("value is not an algebraic integer")
        out[i * scale] = c.numerator
    return out


def canonicalize_int(e: int, coeffs: dict[int, int]) -> dict[int, int]:
    """Integer-only canonicalization at conductor e (exponents may be raw)."""
    phi = euler_phi(e)
    rows = _reduction_rows(e)
    acc: dict[int, int] = {}
    for i, c in coeffs.items():
        if not c:
            continue
        i %= e
        if i < phi:
            acc[i] = acc.get(i, 0) + c
        else:
            for j, rc in rows[i - phi].items():
                acc[j] = acc.get(j, 0) + c * rc
    return {i: c for i, c in acc.items() if c}


def zeta(e: int, i: int = 1) -> Cyclo:
    """The root of unity zeta_e^i."""
    return Cyclo(e, {i % e: Fraction(1)})


def sigma_power_exponent(e: int, n: int, p: int) -> int:
    """Exponent t of the automorphism fixing p'-roots of unity and raising
    p-power roots to the (p^n + 1)-th power: t == 1 mod e_{p'} and
    t == p^n + 1 mod e_p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ep = p_part(e, p)
    epp = p_prime_part(e, p)
    if ep == 1:
        return 1 % e
    t = crt(1 % epp, epp, (pow(p, n, ep) + 1) % ep, ep)
    return t % e


def apply_sigma(a: Cyclo, t: int) -> Cyclo:
    return a.galois(t)


class PrimeIdealContext:
    """Reduction of p-integral cyclotomic values modulo a maximal ideal over p.

    Built for a fixed conductor e: p-power roots of unity map to 1 and a fixed
    primitive e'-th root in F_{p^d} receives zeta_e^{e_p}, where e' is the
    p'-part of e and d the order of p mod e'.
    """

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.e_p = p_part(e, p)
        self.e_prime = p_prime_part(e, p)
        self.d = multiplicative_order(p, self.e_prime) if self.e_prime > 1 else 1
        self.field = FiniteField(p, self.d)
        if self.e_prime > 1:
            self.root = self.field.element_of_order(self.e_prime)
        else:
            self.root = self.field.one
        # zeta_e^i == zeta_{e'}^{i * u} with u = (e_p)^{-1} mod e'.
        self.u = pow(self.e_p, -1, self.e_prime) if self.e_prime > 1 else 0
        self._root_powers = [self.field.one]
        for _ in range(1, self.e_prime):
            self._root_powers.append(self.field.mul(self._root_powers[-1], self.root))

    def reduce_rational(self, q: Fraction) -> FFElt:
        if q.denominator % self.p == 0:
            raise ValueError(
                f"value is not p-integral at p={self.p}: denominator {q.denominator}"
            )
        num = q.numerator % self.p
        den_inv = pow(q.denominator % self.p, -1, self.p)
        return self.field.from_int(num * den_inv)

    def reduce(self, a: Cyclo) -> FFElt:
        if self.e % a.e != 0:
            raise ValueError(
                f"conductor {a.e} does not divide the context conductor {self.e}"
            )
        scale = self.e // a.e
        acc = self.field.zero
        for i, c in a.coeffs.items():
            exp = (i * scale * self.u) % self.e_prime if self.e_prime > 1 else 0
            term = self.field.scalar_mul(
                _fraction_mod_p(c, self.p), self._root_powers[exp]
            )
            acc = self.field.add(acc, term)
        return acc


def _fraction_mod_p(q: Fraction, p: int) -> int:
    if q.denominator % p == 0:
        raise ValueError(f"value is not p-integral at p={p}")
    return q.numerator * pow(q.denominator % p, -1, p) % p


@lru_cache(maxsize=None)
def prime_ideal_context(p: int, e: int) -> PrimeIdealContext:
    return PrimeIdealContext(p, e)

"""Exact integer helpers: primality, factoring, CRT, unit-group structure.

Everything here works on plain Python ints and stays exact; inputs are
desk-scale (group orders up to about 10^6, moduli up to a few times 10^9).
"""

from __future__ import annotations

import math
from functools import lru_cache

# Witnesses sufficient for deterministic Miller-Rabin below 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for desk-scale inputs."""
    if n <= 0:
        raise ValueError("factorint needs a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, a in factorint(n).items():
        ds = [d * p**i for d in ds for i in range(a + 1)]
    return sorted(ds)


def valuation(n: int, p: int) -> int:
    """Largest v with p^v dividing n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n: int, p: int) -> int:
    return p ** valuation(n, p)


def p_prime_part(n: int, p: int) -> int:
    return abs(n) // p_part(n, p)


def crt(r1: int, m1: int, r2: int, m2: int) -> int:
    """Residue mod m1*m2 congruent to r1 mod m1 and r2 mod m2 (coprime moduli)."""
    g = math.gcd(m1, m2)
    if g != 1:
        raise ValueError("crt needs coprime moduli")
    m = m1 * m2
    return (r1 * m2 * pow(m2, -1, m1) + r2 * m1 * pow(m1, -1, m2)) % m


def euler_phi(n: int) -> int:
    out = 1
    for p, a in factorint(n).items():
        out *= p ** (a - 1) * (p - 1)
    return out


def multiplicative_order(a: int, m: int) -> int:
    if math.gcd(a, m) != 1:
        raise ValueError("order undefined: gcd(a, m) != 1")
    if m == 1:
        return 1
    order = euler_phi(m)
    for p in factorint(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def primitive_root(m: int) -> int:
    """Smallest primitive root mod m for m an odd prime power (or 1, 2, 4)."""
    if m in (1, 2):
        return 1
    if m == 4:
        return 3
    fac = factorint(m)
    if len(fac) != 1 or 2 in fac:
        raise ValueError(f"no primitive root mod {m}")
    p, a = next(iter(fac.items()))
    phi_p = p - 1
    g = None
    for cand in range(2, p):
        if all(pow(cand, phi_p // q, p) != 1 for q in factorint(phi_p)):
            g = cand
            break
    assert g is not None
    if a == 1:
        return g
    # Lift to p^a: g works unless g^(p-1) == 1 mod p^2, then g + p does.
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


@lru_cache(maxsize=None)
def unit_group_generators(e: int) -> tuple[int, ...]:
    """Generators of (Z/eZ)^*, lifted through the CRT to residues mod e."""
    if e <= 2:
        return ()
    gens: list[int] = []
    fac = factorint(e)
    for p, a in sorted(fac.items()):
        q = p**a
        rest = e // q
        if p == 2:
            local = [] if a == 1 else [q - 1] if a == 2 else [q - 1, 5]
        else:
            local = [primitive_root(q)]
        for g in local:
            gens.append(crt(g, q, 1, rest) if rest > 1 else g % e)
    return tuple(sorted(set(g for g in gens if g % e != 1)))


def mod_sqrt(a: int, p: int) -> int | None:
    """A square root of a mod an odd prime p, or None; Tonelli-Shanks."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Deterministic nonresidue scan.
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def first_prime_in_ap(step: int, lower: int) -> int:
    """Smallest prime l with l == 1 mod step and l > lower."""
    t = max(1, (lower - 1) // step + 1)
    while True:
        cand = t * step + 1
        if cand > lower and is_prime(cand):
            return cand
        t += 1

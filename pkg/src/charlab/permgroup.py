"""Finite permutation groups with a base and strong generating set.

The Schreier-Sims construction here is deterministic, so identical inputs
always produce identical chains, transversals and element orderings.
Centralizers and normalizers run a pruned backtrack over the stabilizer
chain; a plain brute-force scan is kept both as the automatic path for
small groups and as the test oracle.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DegreeMismatchError, NotASubgroupError
from .numutil import factorint, p_part, valuation
from .perm import (
    PermTuple,
    Permutation,
    identity,
    is_identity,
    pconj,
    pcomm,
    pinv,
    pmul,
    porder,
    ppow,
)

BRUTE_FORCE_LIMIT = 5000


class _Level:
    """One level of the stabilizer chain."""

    __slots__ = ("point", "gens", "orbit", "orbit_inv")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[PermTuple] = []
        self.orbit: dict[int, PermTuple] = {}
        self.orbit_inv: dict[int, PermTuple] = {}

    def rebuild(self, degree: int) -> None:
        ident = identity(degree)
        self.orbit = {self.point: ident}
        self.orbit_inv = {self.point: ident}
        queue = [self.point]
        while queue:
            pt = queue.pop(0)
            u = self.orbit[pt]
            for s in self.gens:
                img = s[pt]
                if img not in self.orbit:
                    v = pmul(u, s)
                    self.orbit[img] = v
                    self.orbit_inv[img] = pinv(v)
                    queue.append(img)


def _normalize_gens(generators, degree: int | None) -> tuple[tuple[PermTuple, ...], int]:
    raw: list[PermTuple] = []
    for g in generators:
        raw.append(g.images if isinstance(g, Permutation) else tuple(g))
    if degree is None:
        if not raw:
            raise ValueError("degree required for a generator-free group")
        degree = len(raw[0])
    for g in raw:
        if len(g) != degree:
            raise DegreeMismatchError(
                f"generator degree {len(g)} does not match {degree}"
            )
    seen: dict[PermTuple, None] = {}
    for g in raw:
        if not is_identity(g) and g not in seen:
            seen[g] = None
    return tuple(seen), degree


class PermGroup:
    """A permutation group given by generators, with a verified BSGS.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, generators: Iterable = (), degree: int | None = None, name: str | None = None):
        gens, deg = _normalize_gens(generators, degree)
        self.degree = deg
        self.generators = gens
        self.name = name
        self._levels: list[_Level] = []
        self._base: list[int] = []
        self._build_bsgs()
        order = 1
        for lvl in self._levels:
            order *= len(lvl.orbit)
        self.order = order

    # -- construction ------------------------------------------------------

    def _build_bsgs(self) -> None:
        strong: list[PermTuple] = list(self.generators)
        base = self._base
        levels = self._levels

        def ensure_base_covers(g: PermTuple) -> None:
            if all(g[b] == b for b in base):
                pt = next(i for i, x in enumerate(g) if x != i)
                base.append(pt)
                levels.append(_Level(pt))

        def refresh() -> None:
            for i, lvl in enumerate(levels):
                prefix = base[:i]
                lvl.gens = [s for s in strong if all(s[b] == b for b in prefix)]
                lvl.rebuild(self.degree)

        def strip(g: PermTuple, start: int) -> tuple[PermTuple, int]:
            for i in range(start, len(levels)):
                lvl = levels[i]
                beta = g[lvl.point]
                u_inv = lvl.orbit_inv.get(beta)
                if u_inv is None:
                    return g, i
                g = pmul(g, u_inv)
            return g, len(levels)

        for g in strong:
            ensure_base_covers(g)
        refresh()

        # Deterministic closure: keep checking Schreier generators until all
        # of them sift to the identity; every failure adds a strong generator.
        while True:
            new_gen = None
            for i, lvl in enumerate(levels):
                for pt in sorted(lvl.orbit):
                    u = lvl.orbit[pt]
                    for s in lvl.gens:
                        target = s[pt]
                        schreier = pmul(pmul(u, s), lvl.orbit_inv[target])
                        residue, _ = strip(schreier, i + 1)
                        if not is_identity(residue):
                            new_gen = residue
                            break
                    if new_gen:
                        break
                if new_gen:
                    break
            if new_gen is None:
                break
            strong.append(new_gen)
            ensure_base_covers(new_gen)
            refresh()

    # -- basic queries ------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(self._base)

    def sift(self, g: PermTuple) -> PermTuple:
        """Residue of g after stripping through the chain; identity iff g in G."""
        for lvl in self._levels:
            u_inv = lvl.orbit_inv.get(g[lvl.point])
            if u_inv is None:
                return g
            g = pmul(g, u_inv)
        return g

    def contains(self, g) -> bool:
        t = g.images if isinstance(g, Permutation) else tuple(g)
        if len(t) != self.degree:
            raise DegreeMismatchError(
                f"permutation degree {len(t)} does not match group degree {self.degree}"
            )
        return is_identity(self.sift(t))

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def elements(self) -> Iterator[PermTuple]:
        """All elements, in a deterministic order; length equals the order."""
        if not self._levels:
            yield identity(self.degree)
            return
        transversals = [
            [lvl.orbit[p] for p in sorted(lvl.orbit)] for lvl in self._levels
        ]
        for combo in itertools.product(*reversed(transversals)):
            g = combo[0]
            for u in combo[1:]:
                g = pmul(g, u)
            yield g

    def random_element(self, rng: random.Random) -> PermTuple:
        g = identity(self.degree)
        for lvl in reversed(self._levels):
            pts = sorted(lvl.orbit)
            g = pmul(g, lvl.orbit[rng.choice(pts)])
        return g

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            pmul(a, b) == pmul(b, a) for i, a in enumerate(gens) for b in gens[i:]
        )

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            raise DegreeMismatchError("subgroup test across different point sets")
        return all(other.contains(g) for g in self.generators)

    def same_group_as(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order == other.order
            and self.is_subgroup_of(other)
        )

    def conjugated(self, h: PermTuple) -> "PermGroup":
        return PermGroup([pconj(g, h) for g in self.generators], self.degree)

    def exponent(self) -> int:
        """Exponent computed from element orders (enumerates the group)."""
        import math

        e = 1
        for g in self.elements():
            e = math.lcm(e, porder(g))
        return e

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            queue = [start]
            while queue:
                pt = queue.pop()
                for g in self.generators:
                    img = g[pt]
                    if not seen[img]:
                        seen[img] = True
                        orb.append(img)
                        queue.append(img)
            out.append(sorted(orb))
        return out

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} order={self.order}>"


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree)


def group_from_element_stream(
    stream: Iterable[PermTuple], degree: int
) -> PermGroup:
    """Group generated by a stream of elements, adding only new members."""
    g = PermGroup([], degree)
    gens: list[PermTuple] = []
    for x in stream:
        if not g.contains(x):
            gens.append(x)
            g = PermGroup(gens, degree)
    return g


# -- brute-force oracles ----------------------------------------------------


def centralizer_bruteforce(G: PermGroup, targets: Sequence[PermTuple]) -> PermGroup:
    found = (g for g in G.elements() if all(pmul(g, t) == pmul(t, g) for t in targets))
    return group_from_element_stream(found, G.degree)


def normalizer_bruteforce(G: PermGroup, H: PermGroup) -> PermGroup:
    hgens = H.generators

    def normalizes(g: PermTuple) -> bool:
        return all(H.contains(pconj(h, g)) for h in hgens)

    found = (g for g in G.elements() if normalizes(g))
    return group_from_element_stream(found, G.degree)


# -- pruned backtrack over the stabilizer chain -------------------------------


def _backtrack_subgroup(
    G: PermGroup,
    leaf_test: Callable[[PermTuple], bool],
    node_prune: Callable[[int, int, list[tuple[int, int]]], bool],
    seed_gens: Sequence[PermTuple] = (),
) -> PermGroup:
    """Generators of the subgroup K = {g in G : leaf_test(g)}.

    node_prune(base_point, candidate_image, assigned) may reject a partial
    base-image assignment; it must never reject one that extends to a member
    of K.  seed_gens must be known members of K.
    """
    levels = G._levels
    degree = G.degree
    known = list(seed_gens)
    R = PermGroup(known, degree)

    # Orbits of the known subgroup on points, for first-level pruning.
    def r_orbit_min(pt: int) -> int:
        best = pt
        seen = {pt}
        queue = [pt]
        while queue:
            x = queue.pop()
            for g in R.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    if y < best:
                        best = y
                    queue.append(y)
        return best

    if not levels:
        return R

    assigned: list[tuple[int, int]] = []

    def dfs(i: int, rep: PermTuple) -> None:
        nonlocal R
        if i == len(levels):
            if leaf_test(rep) and not R.contains(rep):
                known.append(rep)
                R = PermGroup(known, degree)
            return
        lvl = levels[i]
        for delta in sorted(lvl.orbit):
            cand = rep[delta]
            if i == 0 and cand != r_orbit_min(cand):
                continue
            if not node_prune(lvl.point, cand, assigned):
                continue
            assigned.append((lvl.point, cand))
            dfs(i + 1, pmul(lvl.orbit[delta], rep))
            assigned.pop()

    dfs(0, identity(degree))
    return R


def _centralizer_backtrack(G: PermGroup, targets: Sequence[PermTuple]) -> PermGroup:
    degree = G.degree
    # Propagation graph: knowing g(x) forces g(t(x)) = t(g(x)) for each target.
    pairs = [(t, pinv(t)) for t in targets]

    def propagate(pi: dict[int, int], x: int, y: int) -> bool:
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            cur = pi.get(a)
            if cur is not None:
                if cur != b:
                    return False
                continue
            pi[a] = b
            for t, tinv in pairs:
                stack.append((t[a], t[b]))
                stack.append((tinv[a], tinv[b]))
        return True

    def node_prune(point: int, cand: int, assigned: list[tuple[int, int]]) -> bool:
        pi: dict[int, int] = {}
        used: set[int] = set()
        for p, c in assigned + [(point, cand)]:
            if not propagate(pi, p, c):
                return False
        # Forced images must stay injective.
        vals = list(pi.values())
        return len(set(vals)) == len(vals)

    def leaf_test(g: PermTuple) -> bool:
        return all(pmul(g, t) == pmul(t, g) for t in targets)

    return _backtrack_subgroup(G, leaf_test, node_prune)


def _normalizer_backtrack(G: PermGroup, H: PermGroup) -> PermGroup:
    degree = G.degree
    orbit_id = [0] * degree
    orbit_size: list[int] = []
    for i, orb in enumerate(H.orbits()):
        for pt in orb:
            orbit_id[pt] = i
        orbit_size.append(len(orb))

    def node_prune(point: int, cand: int, assigned: list[tuple[int, int]]) -> bool:
        if orbit_size[orbit_id[point]] != orbit_size[orbit_id[cand]]:
            return False
        # g must map H-orbits to H-orbits consistently.
        fwd: dict[int, int] = {orbit_id[point]: orbit_id[cand]}
        rev: dict[int, int] = {orbit_id[cand]: orbit_id[point]}
        for p, c in assigned:
            op, oc = orbit_id[p], orbit_id[c]
            if fwd.setdefault(op, oc) != oc or rev.setdefault(oc, op) != op:
                return False
        return True

    hgens = H.generators

    def leaf_test(g: PermTuple) -> bool:
        return all(H.contains(pconj(h, g)) for h in hgens)

    return _backtrack_subgroup(G, leaf_test, node_prune, seed_gens=hgens)


# -- public subgroup operations ----------------------------------------------


def _target_tuples(S) -> list[PermTuple]:
    if isinstance(S, PermGroup):
        return list(S.generators)
    if isinstance(S, Permutation):
        return [S.images]
    return [tuple(S)]


def centralizer(G: PermGroup, S) -> PermGroup:
    """Elements of G commuting with every element of S (a group or one permutation)."""
    targets = _target_tuples(S)
    for t in targets:
        if not G.contains(t):
            raise NotASubgroupError("centralizer target does not lie in G")
    if not targets:
        return G
    if all(pmul(g, t) == pmul(t, g) for g in G.generators for t in targets):
        return G
    if G.order <= BRUTE_FORCE_LIMIT:
        return centralizer_bruteforce(G, targets)
    return _centralizer_backtrack(G, targets)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """The normalizer N_G(H); requires H <= G."""
    if not H.is_subgroup_of(G):
        raise NotASubgroupError("normalizer argument is not a subgroup of G")
    if all(H.contains(pconj(h, g)) for g in G.generators for h in H.generators):
        return G
    if G.order <= BRUTE_FORCE_LIMIT:
        return normalizer_bruteforce(G, H)
    return _normalizer_backtrack(G, H)


def _p_element_stream(N: PermGroup, p: int, seed: int) -> Iterator[PermTuple]:
    """p-parts of a deterministic stream of elements of N."""
    for g in N.generators:
        yield _element_p_part(g, p)
    rng = random.Random(seed)
    for _ in range(20000):
        yield _element_p_part(N.random_element(rng), p)


def _element_p_part(g: PermTuple, p: int) -> PermTuple:
    n = porder(g)
    np = p_part(n, p)
    if np == 1:
        return identity(len(g))
    return ppow(g, n // np)


def sylow_subgroup(G: PermGroup, p: int, seed: int = 0) -> PermGroup:
    """A Sylow p-subgroup, built by normalizer climbing.

    Starting from the p-part of some element, the current p-subgroup P is
    normal in N = N_G(P), so adjoining any p-element of N outside P keeps a
    p-group; repeat until the full p-part of |G| is reached.
    """
    if not factorint(p) == {p: 1}:
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order, p)
    P = trivial_group(G.degree)
    while P.order < target:
        N = G if P.is_trivial() else normalizer(G, P)
        for x in _p_element_stream(N, p, seed):
            if not is_identity(x) and not P.contains(x):
                P = PermGroup(P.generators + (x,), G.degree)
                break
        else:
            raise RuntimeError("sylow climb stalled; this should be impossible")
    return P


def derived_subgroup(H: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of the generator commutators."""
    degree = H.degree
    gens: list[PermTuple] = []
    D = PermGroup([], degree)
    queue: list[PermTuple] = []
    for i, a in enumerate(H.generators):
        for b in H.generators[i + 1 :]:
            c = pcomm(a, b)
            if not D.contains(c):
                gens.append(c)
                D = PermGroup(gens, degree)
                queue.append(c)
    while queue:
        h = queue.pop(0)
        for g in H.generators:
            c = pconj(h, g)
            if not D.contains(c):
                gens.append(c)
                D = PermGroup(gens, degree)
                queue.append(c)
    return D


def abelian_exponent(H: PermGroup) -> int:
    """Exponent of the abelianization H/H'."""
    import math

    D = derived_subgroup(H)
    e = 1
    for g in H.generators:
        n = porder(g)
        image_order = n
        for d in sorted(d for d in _divisors_of(n)):
            if D.contains(ppow(g, d)):
                image_order = d
                break
        e = math.lcm(e, image_order)
    return e


def _divisors_of(n: int) -> list[int]:
    from .numutil import divisors

    return divisors(n)


def are_conjugate_subgroups(G: PermGroup, H1: PermGroup, H2: PermGroup) -> bool:
    """Exact for |G| <= BRUTE_FORCE_LIMIT; raises otherwise."""
    if H1.order != H2.order:
        return False
    if G.order > BRUTE_FORCE_LIMIT:
        raise NotImplementedError(
            "exact subgroup conjugacy is only available at brute-force scale"
        )
    h1 = H1.generators
    for g in G.elements():
        if all(H2.contains(pconj(h, g)) for h in h1):
            return True
    return False

"""Conjugacy classes, power maps and class-algebra structure constants.

Classes are found by closing conjugation orbits over a deterministic element
stream, which doubles as the element-to-class lookup every later stage needs.
Class order is canonical: sorted by (element order, size, smallest member),
so the identity class is always index 0 and recomputation is reproducible.
"""

from __future__ import annotations

import math

from .errors import BudgetExceededError
from .numutil import crt, p_part, p_prime_part
from .perm import PermTuple, pconj, pinv, pmul, porder, ppow
from .permgroup import PermGroup

DEFAULT_ORDER_BUDGET = 10**6


class ClassData:
    """Conjugacy-class data for a permutation group.

    reps[i] is the lexicographically smallest member of class i; index_of
    maps every group element to its class index; power maps are materialized
    lazily and cached.
    """

    def __init__(self, group: PermGroup, reps, sizes, orders, index_of, members):
        self.group = group
        self.reps: list[PermTuple] = reps
        self.sizes: list[int] = sizes
        self.orders: list[int] = orders
        self.index_of: dict[PermTuple, int] = index_of
        self._members: list[list[PermTuple]] = members
        self.exponent = math.lcm(*orders)
        self._power_maps: dict[int, tuple[int, ...]] = {}

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    def members(self, i: int) -> list[PermTuple]:
        return self._members[i]

    def class_of(self, g: PermTuple) -> int:
        return self.index_of[g]

    def power_map(self, m: int) -> tuple[int, ...]:
        """Class index of rep^m for each class; well defined on classes."""
        m %= self.exponent
        cached = self._power_maps.get(m)
        if cached is None:
            cached = tuple(
                self.index_of[ppow(rep, m % order)]
                for rep, order in zip(self.reps, self.orders)
            )
            self._power_maps[m] = cached
        return cached

    def inverse_map(self) -> tuple[int, ...]:
        return self.power_map(self.exponent - 1)

    def centralizer_order(self, i: int) -> int:
        return self.group.order // self.sizes[i]


def conjugacy_classes(G: PermGroup, budget: int = DEFAULT_ORDER_BUDGET) -> ClassData:
    if G.order > budget:
        raise BudgetExceededError(
            f"group order {G.order} exceeds the class budget {budget}"
        )
    gens = G.generators
    index_of: dict[PermTuple, int] = {}
    classes: list[list[PermTuple]] = []
    for seed in G.elements():
        if seed in index_of:
            continue
        idx = len(classes)
        orbit = [seed]
        index_of[seed] = idx
        queue = [seed]
        while queue:
            x = queue.pop()
            for g in gens:
                y = pconj(x, g)
                if y not in index_of:
                    index_of[y] = idx
                    orbit.append(y)
                    queue.append(y)
        classes.append(orbit)
    if G.order != sum(len(c) for c in classes):
        raise RuntimeError("class sizes do not sum to the group order")

    keyed = []
    for members in classes:
        rep = min(members)
        keyed.append((porder(rep), len(members), rep, members))
    keyed.sort(key=lambda t: (t[0], t[1], t[2]))

    reps = [t[2] for t in keyed]
    sizes = [t[1] for t in keyed]
    orders = [t[0] for t in keyed]
    members = [t[3] for t in keyed]
    final_index: dict[PermTuple, int] = {}
    for i, mem in enumerate(members):
        for x in mem:
            final_index[x] = i
    return ClassData(G, reps, sizes, orders, final_index, members)


def p_regular_classes(cd: ClassData, p: int) -> list[int]:
    """Classes whose element order is coprime to p."""
    return [i for i, n in enumerate(cd.orders) if n % p != 0]


def p_decomposition(g: PermTuple, p: int) -> tuple[PermTuple, PermTuple]:
    """Commuting factorization g = g_p * g_{p'} with both parts powers of g."""
    n = porder(g)
    np = p_part(n, p)
    npp = p_prime_part(n, p)
    if np == 1:
        return ppow(g, 0), g
    if npp == 1:
        return g, ppow(g, 0)
    alpha = crt(1, np, 0, npp)
    beta = crt(0, np, 1, npp)
    return ppow(g, alpha), ppow(g, beta)


def structure_constants(cd: ClassData, i: int, j: int, k: int) -> int:
    """a_{ijk} = #{(x, y) in K_i x K_j : x*y = rep_k}."""
    z = cd.reps[k]
    count = 0
    for x in cd.members(i):
        y = pmul(pinv(x), z)
        if cd.index_of[y] == j:
            count += 1
    return count


def class_matrix(cd: ClassData, i: int) -> list[list[int]]:
    """Matrix M_i with M_i[j][k] = a_{ijk}; M_i w = omega_i w for the
    central-character vectors w."""
    k = cd.num_classes
    M = [[0] * k for _ in range(k)]
    index_of = cd.index_of
    reps = cd.reps
    for x in cd.members(i):
        xinv = pinv(x)
        for t in range(k):
            y = pmul(xinv, reps[t])
            M[index_of[y]][t] += 1
    return M

"""Exact ordinary character tables and their stable file format.

Tables are computed by the Dixon-Schneider method: the class-multiplication
matrices are simultaneously diagonalized over a prime field F_l with
l == 1 mod exp(G), the common eigenvectors are the central characters, and
the character values are recovered exactly as sums of roots of unity through
an inverse discrete Fourier transform of the mod-l values on power classes.
Everything downstream consumes the exact table, so the table is verified
(row and column orthogonality, degree sum) before it is returned.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import modlinalg
from .classdata import ClassData, class_matrix, conjugacy_classes
from .cyclotomic import Cyclo, canonicalize_int, raw_int_coeffs
from .errors import SchemaError, SplittingError
from .numutil import (
    factorint,
    first_prime_in_ap,
    mod_sqrt,
    unit_group_generators,
)
from .perm import pmul
from .permgroup import PermGroup

FILE_SUFFIX = ".ct.json"


@dataclass
class CharacterTable:
    """Exact character table; `chars[r][j]` is the value of row r on class j.

    mode "degrees" marks a partial table (degree list only, e.g. ingested
    from published data); it supports degree-based counting but nothing that
    needs values.
    """

    name: str
    order: int
    exponent: int
    class_sizes: list[int]
    class_orders: list[int]
    stored_power_maps: dict[int, tuple[int, ...]]
    degrees: list[int]
    chars: list[list[Cyclo]] | None
    mode: str  # "full" | "degrees"
    provenance: str  # "computed" | "ingested"
    class_data: ClassData | None = None
    group: PermGroup | None = None
    _power_map_cache: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    @property
    def num_chars(self) -> int:
        return len(self.degrees)

    def value(self, r: int, j: int) -> Cyclo:
        if self.chars is None:
            raise ValueError("degrees-mode table has no character values")
        return self.chars[r][j]

    def centralizer_order(self, j: int) -> int:
        return self.order // self.class_sizes[j]

    def trivial_row(self) -> int:
        if self.chars is None:
            raise ValueError("degrees-mode table has no character values")
        one = Cyclo.one()
        for r, row in enumerate(self.chars):
            if self.degrees[r] == 1 and all(v == one for v in row):
                return r
        raise RuntimeError("table has no trivial character (corrupt table)")

    # -- power maps -----------------------------------------------------------

    def power_map(self, m: int) -> tuple[int, ...]:
        """Class map j -> class of rep_j^m, from the group when available,
        otherwise composed out of the stored maps."""
        m %= self.exponent
        if self.class_data is not None:
            return self.class_data.power_map(m)
        cached = self._power_map_cache.get(m)
        if cached is not None:
            return cached
        result = self._compose_power_map(m)
        self._power_map_cache[m] = result
        return result

    def _compose_power_map(self, m: int) -> tuple[int, ...]:
        k = self.num_classes
        ident = tuple(range(k))
        if m == 1:
            return ident
        if m == 0:
            id_class = self.class_orders.index(1)
            return tuple([id_class] * k)
        maps = dict(self.stored_power_maps)
        # Split m into the part supported on primes dividing e and the rest.
        m1 = 1
        rest = m
        for q in factorint(math.gcd(m, self.exponent)):
            while rest % q == 0:
                rest //= q
                m1 *= q
        out = ident
        for q, a in factorint(m1).items():
            if q not in maps:
                raise SchemaError(f"stored power maps cannot produce exponent {m}")
            for _ in range(a):
                out = tuple(maps[q][x] for x in out)
        if rest % self.exponent != 1:
            word = self._coprime_word(rest % self.exponent)
            for q in word:
                out = tuple(maps[q][x] for x in out)
        return out

    def _coprime_word(self, t: int) -> list[int]:
        """Write t (coprime to e) as a product of stored coprime map exponents."""
        e = self.exponent
        gens = [m for m in self.stored_power_maps if math.gcd(m, e) == 1]
        words = {1: []}
        frontier = [1]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % e
                    if y not in words:
                        words[y] = words[x] + [g]
                        nxt.append(y)
            frontier = nxt
        if t not in words:
            raise SchemaError(
                f"stored power maps do not generate the Galois exponent {t}"
            )
        return words[t]

    def inverse_class_map(self) -> tuple[int, ...]:
        return self.power_map(self.exponent - 1 if self.exponent > 1 else 0)

    def p_prime_rows(self, p: int) -> list[int]:
        return [r for r, d in enumerate(self.degrees) if d % p != 0]

    # -- serialization ---------------------------------------------------------

    def to_canonical_json(self) -> str:
        classes = []
        for j in range(self.num_classes):
            classes.append(
                {
                    "size": self.class_sizes[j],
                    "order": self.class_orders[j],
                    "powermaps": {
                        str(m): self.stored_power_maps[m][j]
                        for m in sorted(self.stored_power_maps)
                    },
                }
            )
        payload = {
            "group": {
                "name": self.name,
                "order": self.order,
                "exponent": self.exponent,
            },
            "classes": classes,
            "mode": self.mode,
        }
        if self.mode == "full":
            assert self.chars is not None
            payload["irreducibles"] = [
                [v.to_json() for v in row] for row in self.chars
            ]
        else:
            payload["degrees"] = list(self.degrees)
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def stored_power_map_exponents(exponent: int) -> list[int]:
    """Exponent set persisted in table files: unit-group generators of
    (Z/eZ)* plus the primes dividing e."""
    ms = set(unit_group_generators(exponent))
    ms.update(factorint(exponent))
    return sorted(m % exponent for m in ms if m % exponent != 0) or []


# -- Dixon-Schneider ----------------------------------------------------------


def _find_field_prime(exponent: int, order: int) -> int:
    # Minimal l == 1 mod exp(G) above 2|G| determines degrees and lift
    # coefficients uniquely mod l.
    l = first_prime_in_ap(exponent if exponent > 1 else 1, 2 * order)
    if (l - 1) ** 2 * 4 > 2**62:
        raise SplittingError(f"field prime {l} too large for int64 arithmetic")
    return l


def _split_eigenspaces(cd: ClassData, l: int) -> list[np.ndarray]:
    """Common eigenvectors (as rows, unnormalized) of all class matrices."""
    k = cd.num_classes
    # Rows are bases of invariant subspaces for right multiplication by A_i.
    spaces: list[tuple[np.ndarray, list[int]]] = [
        (np.eye(k, dtype=np.int64), list(range(k)))
    ]
    # Small classes make cheap matrices; among equal sizes prefer high element
    # order, which separates eigenvalues faster (decisive for cyclic groups).
    class_order = sorted(range(k), key=lambda i: (cd.sizes[i], -cd.orders[i], i))
    for i in class_order:
        if cd.sizes[i] == 1 and cd.orders[i] == 1:
            continue
        if all(B.shape[0] == 1 for B, _ in spaces):
            break
        A = np.array(class_matrix(cd, i), dtype=np.int64).T % l
        new_spaces: list[tuple[np.ndarray, list[int]]] = []
        for B, pivots in spaces:
            d = B.shape[0]
            if d == 1:
                new_spaces.append((B, pivots))
                continue
            R = (B @ A % l)[:, pivots] % l
            roots = modlinalg.distinct_roots(modlinalg.charpoly(R, l), l)
            total = 0
            for lam in roots:
                X = (R - lam * np.eye(d, dtype=np.int64)) % l
                C = modlinalg.nullspace(X.T % l, l)
                if C.shape[0] == 0:
                    continue
                newB, newpiv = modlinalg.rref(C @ B % l, l)
                total += newB.shape[0]
                new_spaces.append((newB, newpiv))
            if total != d:
                raise SplittingError(
                    f"eigenspace splitting lost dimensions ({total} != {d})"
                )
        spaces = new_spaces
    if any(B.shape[0] != 1 for B, _ in spaces):
        raise SplittingError("class matrices failed to separate all characters")
    return [B[0] % l for B, _ in spaces]


def _lift_row(
    cd: ClassData, w: np.ndarray, l: int, z: int, dft_cache: dict
) -> tuple[int, list[Cyclo]]:
    """Exact character row from the central-character eigenvector w mod l."""
    k = cd.num_classes
    order = cd.group.order
    w = [int(x) % l for x in w]
    if w[0] == 0:
        raise SplittingError("eigenvector vanishes on the identity class")
    scale = pow(w[0], -1, l)
    w = [x * scale % l for x in w]
    inv_map = cd.inverse_map()
    s = 0
    for j in range(k):
        s = (s + w[j] * w[inv_map[j]] * pow(cd.sizes[j], -1, l)) % l
    if s == 0:
        raise SplittingError("degree computation degenerated")
    d_sq = order * pow(s, -1, l) % l
    root = mod_sqrt(d_sq, l)
    if root is None:
        raise SplittingError("degree squared is not a square mod l")
    degree = min(root, l - root)
    if degree == 0 or degree * degree > order or order % degree != 0:
        raise SplittingError(f"implausible character degree {degree}")
    chi_mod = [degree * w[j] * pow(cd.sizes[j], -1, l) % l for j in range(k)]
    values: list[Cyclo] = []
    e = cd.exponent
    idx = cd.index_of
    for j in range(k):
        m = cd.orders[j]
        # chi mod l at the classes of rep^v, v = 0..m-1 (rep^0 is class 0).
        g = cd.reps[j]
        chain = [chi_mod[0]]
        cur = g
        for _ in range(1, m):
            chain.append(chi_mod[idx[cur]])
            cur = pmul(cur, g)
        cs = _inverse_dft(m, chain, l, z, e, dft_cache)
        total = 0
        coeffs: dict[int, Fraction] = {}
        for u, c in enumerate(cs):
            if c > degree:
                raise SplittingError("lift coefficient exceeds the degree")
            if c:
                coeffs[u] = Fraction(c)
                total += c
        # Eigenvalue multiplicities of any rho(g) sum to the degree.
        if total != degree:
            raise SplittingError("lift multiplicities do not sum to the degree")
        values.append(Cyclo(m, coeffs))
    if values[0] != degree:
        raise SplittingError("lifted identity value disagrees with the degree")
    return degree, values


def _inverse_dft(m: int, chain: list[int], l: int, z: int, e: int, cache: dict) -> list[int]:
    """Multiplicities c_u with chain[v] = sum_u c_u * z_m^(u*v) mod l."""
    mat = cache.get(m)
    if mat is None:
        zm_inv = pow(z, -(e // m), l)
        rows = []
        for u in range(m):
            step = pow(zm_inv, u, l)
            row = [1] * m
            for v in range(1, m):
                row[v] = row[v - 1] * step % l
            rows.append(row)
        m_inv = pow(m, -1, l)
        dtype = np.int64 if m * (l - 1) ** 2 < 2**62 else object
        mat = (np.array(rows, dtype=dtype), m_inv)
        cache[m] = mat
    rows, m_inv = mat
    vec = np.array(chain, dtype=rows.dtype)
    out = (rows @ vec) % l
    return [int(x) * m_inv % l for x in out]


def _smallest_primitive_root(l: int) -> int:
    fac = factorint(l - 1)
    g = 2
    while True:
        if all(pow(g, (l - 1) // q, l) != 1 for q in fac):
            return g
        g += 1


def character_table(
    G: PermGroup,
    name: str | None = None,
    budget: int = 10**6,
    verify: bool = True,
) -> CharacterTable:
    """Compute the exact character table of G (rows sorted by degree, then
    by value vectors); verifies orthogonality before returning."""
    cd = conjugacy_classes(G, budget)
    k = cd.num_classes
    e = cd.exponent
    l = _find_field_prime(e, G.order)
    if k * (l - 1) ** 2 > 2**62:
        raise SplittingError("class count times field size exceeds int64 safety")
    rows_mod = _split_eigenspaces(cd, l)
    if len(rows_mod) != k:
        raise SplittingError("wrong number of common eigenvectors")
    g0 = _smallest_primitive_root(l)
    z = pow(g0, (l - 1) // e, l)
    dft_cache: dict = {}
    lifted = [_lift_row(cd, w, l, z, dft_cache) for w in rows_mod]
    lifted.sort(key=lambda t: (t[0], tuple(v.sort_key() for v in t[1])))
    degrees = [t[0] for t in lifted]
    chars = [t[1] for t in lifted]

    stored = {}
    for m in stored_power_map_exponents(e):
        stored[m] = cd.power_map(m)
    table = CharacterTable(
        name=name or G.name or f"group-{G.order}",
        order=G.order,
        exponent=e,
        class_sizes=list(cd.sizes),
        class_orders=list(cd.orders),
        stored_power_maps=stored,
        degrees=degrees,
        chars=chars,
        mode="full",
        provenance="computed",
        class_data=cd,
        group=G,
    )
    if verify:
        report = verify_table(table)
        if not report.ok:
            raise SplittingError(f"computed table failed verification: {report.failures}")
    return table


# -- verification ---------------------------------------------------------------


@dataclass
class TableReport:
    ok: bool
    failures: list[str]


def verify_table(t: CharacterTable) -> TableReport:
    """All CharacterTable invariants; returns the failures instead of raising."""
    fails: list[str] = []
    if sum(t.class_sizes) != t.order:
        fails.append("class sizes do not sum to the group order")
    if sum(d * d for d in t.degrees) != t.order:
        fails.append("sum of squared degrees differs from the group order")
    if t.mode == "degrees":
        if any(d < 1 for d in t.degrees):
            fails.append("nonpositive degree")
        return TableReport(not fails, fails)
    assert t.chars is not None
    k = t.num_classes
    if len(t.chars) != k:
        fails.append("row count differs from class count")
        return TableReport(False, fails)
    # Entries are integer combinations of order(g)-th roots of unity.
    for r in range(k):
        if t.degrees[r] != t.chars[r][0]:
            fails.append(f"degree column mismatch at row {r}")
        for j in range(k):
            v = t.chars[r][j]
            if t.class_orders[j] % v.e != 0:
                fails.append(f"entry ({r},{j}) has conductor not dividing the class order")
            if not v.is_integral():
                fails.append(f"entry ({r},{j}) is not an algebraic integer")
    if fails:
        return TableReport(False, fails)
    e = t.exponent
    # Integer coefficient dicts at the table conductor, plus complex
    # conjugates (zeta -> zeta^-1, i.e. negated exponents, canonicalized
    # lazily inside the accumulation).
    rows_raw = [[raw_int_coeffs(v, e) for v in row] for row in t.chars]
    rows_conj = [
        [{(-i) % e: c for i, c in d.items()} for d in row] for row in rows_raw
    ]

    def accumulate(acc: dict[int, int], a: dict[int, int], b: dict[int, int], w: int) -> None:
        for i1, c1 in a.items():
            wc1 = w * c1
            for i2, c2 in b.items():
                key = (i1 + i2) % e
                acc[key] = acc.get(key, 0) + wc1 * c2

    for r in range(k):
        for s in range(r, k):
            acc: dict[int, int] = {}
            for j in range(k):
                accumulate(acc, rows_raw[r][j], rows_conj[s][j], t.class_sizes[j])
            expected = t.order if r == s else 0
            if canonicalize_int(e, acc) != ({0: expected} if expected else {}):
                fails.append(f"row orthogonality fails at rows ({r},{s})")
                return TableReport(False, fails)
    for i in range(k):
        for j in range(i, k):
            acc = {}
            for r in range(k):
                accumulate(acc, rows_raw[r][i], rows_conj[r][j], 1)
            expected = t.centralizer_order(i) if i == j else 0
            if canonicalize_int(e, acc) != ({0: expected} if expected else {}):
                fails.append(f"column orthogonality fails at classes ({i},{j})")
                return TableReport(False, fails)
    return TableReport(not fails, fails)


# -- file format -----------------------------------------------------------------


def write_table(t: CharacterTable, path: str) -> None:
    """Atomic write of the canonical JSON form."""
    data = t.to_canonical_json()
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def read_table(path: str, verify: bool = True) -> CharacterTable:
    with open(path) as fh:
        text = fh.read()
    return table_from_json(text, verify=verify)


def table_from_json(text: str, verify: bool = True) -> CharacterTable:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    t = _parse_payload(payload)
    if verify:
        report = verify_table(t)
        if not report.ok:
            raise SchemaError(f"ingested table failed verification: {report.failures}")
    return t


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _parse_payload(payload) -> CharacterTable:
    _require(isinstance(payload, dict), "top level must be an object")
    group = payload.get("group")
    _require(isinstance(group, dict), "field 'group' missing or not an object")
    for key in ("name", "order", "exponent"):
        _require(key in group, f"group.{key} missing")
    order = group["order"]
    exponent = group["exponent"]
    _require(isinstance(order, int) and order >= 1, "group.order must be a positive integer")
    _require(isinstance(exponent, int) and exponent >= 1, "group.exponent must be a positive integer")
    mode = payload.get("mode")
    _require(mode in ("full", "degrees"), "mode must be 'full' or 'degrees'")
    classes = payload.get("classes")
    _require(isinstance(classes, list) and classes, "field 'classes' missing or empty")
    sizes, orders, stored_raw = [], [], []
    for i, c in enumerate(classes):
        _require(isinstance(c, dict), f"classes[{i}] must be an object")
        _require(isinstance(c.get("size"), int) and c["size"] >= 1, f"classes[{i}].size invalid")
        _require(isinstance(c.get("order"), int) and c["order"] >= 1, f"classes[{i}].order invalid")
        sizes.append(c["size"])
        orders.append(c["order"])
        stored_raw.append(c.get("powermaps", {}))
    k = len(classes)
    stored: dict[int, tuple[int, ...]] = {}
    exps = sorted({int(m) for pm in stored_raw for m in pm})
    for m in exps:
        col = []
        for i, pm in enumerate(stored_raw):
            _require(str(m) in pm, f"classes[{i}] missing power map for {m}")
            tgt = pm[str(m)]
            _require(isinstance(tgt, int) and 0 <= tgt < k, f"classes[{i}].powermaps[{m}] out of range")
            col.append(tgt)
        stored[m] = tuple(col)
    if mode == "full":
        irr = payload.get("irreducibles")
        _require(isinstance(irr, list) and len(irr) == k, "irreducibles must have one row per class")
        chars = []
        for r, row in enumerate(irr):
            _require(isinstance(row, list) and len(row) == k, f"irreducibles[{r}] has wrong length")
            try:
                chars.append([Cyclo.from_json(v) for v in row])
            except (ValueError, TypeError) as exc:
                raise SchemaError(f"irreducibles[{r}] has a malformed value: {exc}") from exc
        degrees = []
        for r, row in enumerate(chars):
            v = row[0]
            _require(v.is_rational() and v.rational_value().denominator == 1,
                     f"irreducibles[{r}] degree entry is not an integer")
            deg = int(v.rational_value())
            _require(deg >= 1, f"irreducibles[{r}] has nonpositive degree")
            degrees.append(deg)
    else:
        chars = None
        raw_degrees = payload.get("degrees")
        _require(isinstance(raw_degrees, list) and raw_degrees, "degrees-mode file needs a 'degrees' list")
        _require(all(isinstance(d, int) and d >= 1 for d in raw_degrees), "degrees must be positive integers")
        degrees = list(raw_degrees)
    return CharacterTable(
        name=str(group["name"]),
        order=order,
        exponent=exponent,
        class_sizes=sizes,
        class_orders=orders,
        stored_power_maps=stored,
        degrees=degrees,
        chars=chars,
        mode=mode,
        provenance="ingested",
    )

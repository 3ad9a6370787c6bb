"""p-blocks of a character table: central characters, defect, defect groups,
Brauer correspondence and block-level counting.

Two characters share a block exactly when their central-character vectors
omega_chi agree after reduction modulo a fixed maximal ideal over p; the
reduced vector is the block's fingerprint and doubles as the key for the
Brauer correspondence, which is computed by matching induced fingerprints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classdata import p_regular_classes
from .cyclotomic import Cyclo, PrimeIdealContext, prime_ideal_context
from .errors import NotASubgroupError
from .finitefield import FFElt
from .numutil import is_prime, p_part, p_prime_part, valuation
from .permgroup import PermGroup, centralizer, sylow_subgroup, trivial_group
from .chartab import CharacterTable


def omega(t: CharacterTable, r: int, j: int) -> Cyclo:
    """Central character value |K_j| * chi_r(g_j) / chi_r(1); an algebraic
    integer for every irreducible row."""
    return t.value(r, j) * t.class_sizes[j] / t.degrees[r]


@dataclass
class Block:
    """A p-block of a character table."""

    p: int
    index: int
    member_rows: tuple[int, ...]
    fingerprint: tuple[FFElt, ...]
    defect: int
    heights: dict[int, int]
    defect_class: int

    @property
    def is_principal_candidate(self) -> bool:
        return self.defect >= 0

    def height_zero_rows(self) -> list[int]:
        return [r for r, h in self.heights.items() if h == 0]


def omega_fingerprint(t: CharacterTable, r: int, ctx: PrimeIdealContext) -> tuple[FFElt, ...]:
    """Reduced central-character vector of one row: the block fingerprint."""
    return tuple(ctx.reduce(omega(t, r, j)) for j in range(t.num_classes))


def block_partition(t: CharacterTable, p: int) -> list[Block]:
    """All p-blocks, ordered by smallest member row; blocks carry defect,
    heights and the defect class used for defect-group construction."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t.mode != "full":
        raise ValueError("block partition needs a full-mode table")
    ctx = prime_ideal_context(p, t.exponent)
    groups: dict[tuple[FFElt, ...], list[int]] = {}
    for r in range(t.num_chars):
        groups.setdefault(omega_fingerprint(t, r, ctx), []).append(r)
    a = valuation(t.order, p)
    ordered = sorted(groups.items(), key=lambda kv: min(kv[1]))
    blocks: list[Block] = []
    regular = set(p_regular_classes_of_table(t, p))
    for idx, (fp, rows) in enumerate(ordered):
        min_deg_val = min(valuation(t.degrees[r], p) for r in rows)
        defect = a - min_deg_val
        heights = {r: valuation(t.degrees[r], p) - min_deg_val for r in rows}
        defect_class = _defect_class(t, fp, defect, regular, p)
        blocks.append(
            Block(
                p=p,
                index=idx,
                member_rows=tuple(rows),
                fingerprint=fp,
                defect=defect,
                heights=heights,
                defect_class=defect_class,
            )
        )
    return blocks


def p_regular_classes_of_table(t: CharacterTable, p: int) -> list[int]:
    if t.class_data is not None:
        return p_regular_classes(t.class_data, p)
    return [j for j, n in enumerate(t.class_orders) if n % p != 0]


def _defect_class(
    t: CharacterTable,
    fingerprint: tuple[FFElt, ...],
    defect: int,
    regular: set[int],
    p: int,
) -> int:
    """Smallest p-regular class with nonzero lambda_B and maximal |K|_p.

    The maximal |K|_p among such classes is |G|_p / p^defect, i.e. the class
    defect matches the block defect; any choice yields a conjugate defect
    group, the smallest index just pins the representative.
    """
    zero = _zero_of(fingerprint)
    best = None
    best_val = -1
    for j in sorted(regular):
        if fingerprint[j] == zero:
            continue
        v = valuation(t.class_sizes[j], p)
        if v > best_val:
            best_val = v
            best = j
    if best is None:
        raise RuntimeError("no defect class found (inconsistent block data)")
    a = valuation(t.order, p)
    if best_val != a - defect:
        raise RuntimeError(
            f"defect class valuation {best_val} does not match block defect {defect}"
        )
    return best


def _zero_of(fingerprint: tuple[FFElt, ...]) -> FFElt:
    return tuple(0 for _ in fingerprint[0])


def principal_block(blocks: list[Block], t: CharacterTable) -> Block:
    triv = t.trivial_row()
    for b in blocks:
        if triv in b.member_rows:
            return b
    raise RuntimeError("no block contains the trivial character")


def defect_group(G: PermGroup, t: CharacterTable, B: Block) -> PermGroup:
    """A defect group: a Sylow p-subgroup of the centralizer of a defect-class
    representative; its order is p^defect."""
    if t.class_data is None or t.group is None:
        raise ValueError("defect groups need a table computed from a group")
    rep = t.class_data.reps[B.defect_class]
    C = centralizer(G, _as_group_element(G, rep))
    D = sylow_subgroup(C, B.p)
    if D.order != B.p**B.defect:
        raise RuntimeError(
            f"defect group order {D.order} differs from p^d = {B.p ** B.defect}"
        )
    return D


def _as_group_element(G: PermGroup, rep):
    from .perm import Permutation

    return Permutation(rep)


def induced_fingerprint(
    G: PermGroup,
    t_G: CharacterTable,
    t_N: CharacterTable,
    b: Block,
) -> tuple[FFElt, ...]:
    """lambda_b^G: for each G-class K, the sum of lambda_b over the N-classes
    partitioning K intersect N."""
    if t_G.class_data is None or t_N.class_data is None:
        raise ValueError("induced fingerprints need group-backed tables")
    # Both sides reduce through the G-side ideal; the block partition and the
    # fingerprint of b's members do not depend on which ideal over p is used.
    ctx = prime_ideal_context(b.p, t_G.exponent)
    field = ctx.field
    acc: list[FFElt] = [field.zero] * t_G.num_classes
    member = b.member_rows[0]
    for c_idx in range(t_N.num_classes):
        rep = t_N.class_data.reps[c_idx]
        g_idx = t_G.class_data.class_of(rep)
        val = omega(t_N, member, c_idx)
        acc[g_idx] = field.add(acc[g_idx], ctx.reduce(val))
    return tuple(acc)


def brauer_correspondent(
    G: PermGroup,
    t_G: CharacterTable,
    N: PermGroup,
    t_N: CharacterTable,
    b: Block,
    g_blocks: list[Block] | None = None,
) -> Block:
    """The G-block whose fingerprint equals the induced fingerprint of b.

    With N = N_G(D) and b of defect group D this is the First Main Theorem
    correspondence b -> b^G; no or multiple matches signal misuse.
    """
    if not N.is_subgroup_of(G):
        raise NotASubgroupError("N must be a subgroup of G")
    if g_blocks is None:
        g_blocks = block_partition(t_G, b.p)
    target = induced_fingerprint(G, t_G, t_N, b)
    matches = [B for B in g_blocks if B.fingerprint == target]
    if len(matches) != 1:
        raise RuntimeError(
            f"induced fingerprint matched {len(matches)} blocks; "
            "the input block's defect group is probably not the one N normalizes"
        )
    return matches[0]


def heights_and_Mk(t: CharacterTable, B: Block, k: int) -> tuple[dict[int, int], int]:
    """Height map of B and M_k(B): height-zero members whose p'-degree part
    is congruent to +-k mod p."""
    p = B.p
    if k % p == 0:
        raise ValueError("k must not be divisible by p")
    count = 0
    for r in B.height_zero_rows():
        dpp = p_prime_part(t.degrees[r], p)
        if dpp % p in ((k % p), (-k) % p):
            count += 1
    return dict(B.heights), count


def mk_block_vector(t: CharacterTable, B: Block) -> dict[int, int]:
    """M_k(B) for all k in the canonical range 1..(p-1)/2 (or {1} for p=2)."""
    p = B.p
    ks = [1] if p == 2 else list(range(1, (p - 1) // 2 + 1))
    return {k: heights_and_Mk(t, B, k)[1] for k in ks}


def block_report(t: CharacterTable, p: int) -> dict:
    """JSON-friendly block summary: members, defect, degrees, heights, Mk."""
    blocks = block_partition(t, p)
    out = {"p": p, "blocks": []}
    for B in blocks:
        out["blocks"].append(
            {
                "members": list(B.member_rows),
                "defect": B.defect,
                "degrees": [t.degrees[r] for r in B.member_rows],
                "heights": {str(r): h for r, h in B.heights.items()},
                "Mk": {str(k): v for k, v in mk_block_vector(t, B).items()},
            }
        )
    return out

"""charlab: exact character tables, p-blocks and local-global counting checks.

Everything is computed over exact arithmetic (arbitrary-precision integers,
rationals, cyclotomic numbers); there is no floating point anywhere.
"""

__version__ = "0.1.0"

from .perm import Permutation
from .permgroup import (
    PermGroup,
    centralizer,
    normalizer,
    sylow_subgroup,
    derived_subgroup,
    abelian_exponent,
)
from .groupspec import parse_group_spec
from .classdata import ClassData, conjugacy_classes, p_decomposition, p_regular_classes
from .cyclotomic import Cyclo, zeta, sigma_power_exponent, PrimeIdealContext
from .chartab import CharacterTable, character_table, verify_table, read_table, write_table
from .blocks import Block, block_partition, defect_group, brauer_correspondent
from .conjectures import (
    ConjectureReport,
    Mk_group,
    check_A,
    check_B,
    check_C,
    check_D,
    check_composite,
    dade_bijection_verify,
    exponent_direct,
    exponent_from_table,
    symmetric_divisibility,
)

__all__ = [
    "Permutation",
    "PermGroup",
    "centralizer",
    "normalizer",
    "sylow_subgroup",
    "derived_subgroup",
    "abelian_exponent",
    "parse_group_spec",
    "ClassData",
    "conjugacy_classes",
    "p_decomposition",
    "p_regular_classes",
    "Cyclo",
    "zeta",
    "sigma_power_exponent",
    "PrimeIdealContext",
    "CharacterTable",
    "character_table",
    "verify_table",
    "read_table",
    "write_table",
    "Block",
    "block_partition",
    "defect_group",
    "brauer_correspondent",
    "ConjectureReport",
    "Mk_group",
    "check_A",
    "check_B",
    "check_C",
    "check_D",
    "check_composite",
    "dade_bijection_verify",
    "exponent_direct",
    "exponent_from_table",
    "symmetric_divisibility",
]

"""Web bases for pennant Specht modules S^(d,d,1^l) built from noncrossing set partitions."""

from .errors import (
    EmptyInputError,
    InconsistentRolesError,
    InvalidInputError,
    NotInSpanError,
    SingletonBlockError,
)
from .exactpoly import LEX, MonomialOrder, Polynomial, leading_monomial, relabel_columns, sym_minor, variable
from .jellyfish import (
    JellyfishTableau,
    WebInvariant,
    enumerate_jellyfish,
    invariant_polynomial,
    inversion_number,
    remove_entry,
    sign,
    web_invariant,
)
from .setpartitions import (
    Permutation,
    SetPartition,
    apply_perm,
    enumerate_partitions,
    is_noncrossing,
    noncrossing_singleton_free,
    reflect,
    rotate,
    singleton_free,
)
from .tableaux import (
    IncreasingTableau,
    inc_to_partition,
    inc_to_syt,
    k_evacuation,
    k_promotion,
    partition_to_inc,
    promotion_orbits,
    syt_to_inc,
    tau,
)
from .webbasis import (
    BasisExpansion,
    PennantShape,
    StandardTableau,
    build_basis,
    dihedral_matrix,
    enumerate_syt,
    expand_in_basis,
    hook_length_count,
    sn_act,
    syt_invariant,
    verify_five_term,
)

__all__ = [name for name in dir() if not name.startswith("_")]

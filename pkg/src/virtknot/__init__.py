"""Invariants of virtual and flat knot diagrams given as chord-diagram codes."""

from .alexander import (
    STMatrix,
    closed_form_Cn,
    crossing_matrix,
    g_closed_form_Kn,
    g_polynomial,
    normalize_units,
    power_C,
    relation_matrix,
)
from .bracket import f_polynomial, jones, kauffman_bracket
from .codes import (
    ARROW,
    OCD,
    CodeError,
    DiagramCode,
    Token,
    canonical,
    canonical_form,
    from_standard_gauss,
    parse,
    serialize,
)
from .diagram import crossing_sign, genus, is_classical_realizable, mirror, underlying_ocd, writhe
from .families import make_An, make_Dn, make_Kn, named_example
from .filamentation import (
    Filament,
    Pairing,
    enumerate_pairings,
    find_filamentation,
    is_filamentation,
    oriented_intersection,
    pair_intersection_number,
)
from .flat import flat_relations, is_flat_detected, parity
from .laurent import Laurent, QuarterLaurentT
from .moves import (
    MoveInstance,
    SearchExhausted,
    apply_move,
    enumerate_moves,
    inverse_move,
    jones_flip,
    reduce_search,
)

__all__ = [name for name in dir() if not name.startswith("_")]

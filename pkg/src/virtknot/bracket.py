"""Kauffman bracket, normalized bracket and Jones polynomial of arrow diagrams.

Virtual crossings never appear in a code, so a state is evaluated simply by
reconnecting the arcs of the Gauss code at every classical crossing and
counting closed curves.
"""

from __future__ import annotations

from itertools import product

from .codes import ARROW, OVER, DiagramCode
from .diagram import crossing_signs, mirror, writhe  # noqa: F401  (mirror re-exported)
from .laurent import A_VARS, Laurent, QuarterLaurentT, poly_A

DELTA = poly_A({2: -1, -2: -1})


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.count -= 1


def _crossing_ends(ad: DiagramCode):
    """Arc-end indices at every crossing.

    Arc ``k`` leaves endpoint ``k`` and enters the next endpoint along the
    component.  Its tail is end ``2k`` and its head is end ``2k + 1``.
    Returns ``(n_arcs, free_loops, crossings)`` where each crossing is
    ``(sign, over_in, over_out, under_in, under_out)``.
    """
    index = {}
    n = 0
    for ci, comp in enumerate(ad.components):
        for i in range(len(comp)):
            index[(ci, i)] = n
            n += 1
    free = sum(1 for comp in ad.components if not comp)
    ends: dict[str, dict[str, int]] = {}
    for (ci, i), tok in ad.tokens():
        k = len(ad.components[ci])
        arc_out = index[(ci, i)]
        arc_in = index[(ci, (i - 1) % k)]
        slot = "over" if tok.role == OVER else "under"
        ends.setdefault(tok.name, {})[slot + "_in"] = 2 * arc_in + 1
        ends.setdefault(tok.name, {})[slot + "_out"] = 2 * arc_out
    signs = crossing_signs(ad) if ad.n_chords else {}
    crossings = [
        (signs[name], e["over_in"], e["over_out"], e["under_in"], e["under_out"])
        for name, e in ends.items()
    ]
    return n, free, crossings


def state_loops(ad: DiagramCode, state: tuple[bool, ...]) -> int:
    """Number of closed curves after smoothing; ``state[i]`` is True for an A-smoothing."""
    n_arcs, free, crossings = _crossing_ends(ad)
    uf = _UnionFind(2 * n_arcs)
    for k in range(n_arcs):
        uf.union(2 * k, 2 * k + 1)
    for a_smooth, (sign, oi, oo, ui, uo) in zip(state, crossings):
        # The A-smoothing of a positive crossing follows the orientation.
        if a_smooth == (sign > 0):
            uf.union(oi, uo)
            uf.union(ui, oo)
        else:
            uf.union(oi, ui)
            uf.union(oo, uo)
    return uf.count + free


def kauffman_bracket(ad: DiagramCode) -> Laurent:
    """State sum with loop value -A^2 - A^-2 and one empty loop evaluating to 1."""
    if ad.kind != ARROW and ad.n_chords:
        raise ValueError("the bracket needs an arrow diagram")
    n_arcs, free, crossings = _crossing_ends(ad)
    n = len(crossings)
    # Accumulate by (A-exponent, loop count) before touching polynomials.
    tally: dict[tuple[int, int], int] = {}
    for state in product((True, False), repeat=n):
        uf = _UnionFind(2 * n_arcs)
        for k in range(n_arcs):
            uf.union(2 * k, 2 * k + 1)
        a_count = 0
        for a_smooth, (sign, oi, oo, ui, uo) in zip(state, crossings):
            a_count += a_smooth
            if a_smooth == (sign > 0):
                uf.union(oi, uo)
                uf.union(ui, oo)
            else:
                uf.union(oi, ui)
                uf.union(oo, uo)
        key = (2 * a_count - n, uf.count + free)
        tally[key] = tally.get(key, 0) + 1
    total = Laurent({}, A_VARS)
    delta_powers = {}
    for (exp, loops), mult in tally.items():
        if loops - 1 not in delta_powers:
            delta_powers[loops - 1] = DELTA ** (loops - 1)
        total = total + delta_powers[loops - 1].shift((exp,)) * mult
    return total


def f_polynomial(ad: DiagramCode) -> Laurent:
    """Normalized bracket (-A^3)^(-writhe) <K>."""
    w = writhe(ad) if ad.n_chords else 0
    unit = poly_A({-3 * w: -1 if w % 2 else 1})
    return unit * kauffman_bracket(ad)


def jones(ad: DiagramCode) -> QuarterLaurentT:
    """Jones polynomial: the normalized bracket at A = t^(-1/4)."""
    return QuarterLaurentT.from_A(f_polynomial(ad))

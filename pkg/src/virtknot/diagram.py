"""Derived quantities of oriented chord diagrams and arrow diagrams."""

from __future__ import annotations

from .codes import ARROW, OCD, OVER, UNDER, DiagramCode, Token


def _require_arrow(ad: DiagramCode) -> None:
    if ad.kind != ARROW:
        raise ValueError("an arrow diagram is required (tokens need o/u roles)")


def underlying_ocd(ad: DiagramCode) -> DiagramCode:
    """Drop the arrows; endpoint signs are kept."""
    return DiagramCode(
        tuple(tuple(Token(t.name, t.sign, None) for t in comp) for comp in ad.components), OCD
    )


def crossing_sign(ad: DiagramCode, chord: str) -> int:
    """Sign of the crossing: the local orientation at the arrow base."""
    _require_arrow(ad)
    for _, tok in ad.endpoints(chord):
        if tok.role == OVER:
            return tok.sign
    raise AssertionError("validated arrow code without a base")


def crossing_signs(ad: DiagramCode) -> dict[str, int]:
    _require_arrow(ad)
    return {t.name: t.sign for _, t in ad.tokens() if t.role == OVER}


def writhe(ad: DiagramCode) -> int:
    return sum(crossing_signs(ad).values())


def mirror(ad: DiagramCode) -> DiagramCode:
    """Switch every crossing.

    The universe (endpoint signs) is unchanged; the base and tip of every
    arrow trade places, so each crossing sign flips.
    """
    _require_arrow(ad)
    swap = {OVER: UNDER, UNDER: OVER}
    return DiagramCode(
        tuple(tuple(Token(t.name, t.sign, swap[t.role]) for t in comp) for comp in ad.components), ARROW
    )


# Half-edge ports of the 4-valent vertex attached to a chord.  At an endpoint
# with local sign +, the counterclockwise order is
# (this in, other in, this out, other out).
def _rotation(code: DiagramCode) -> tuple[dict, dict]:
    succ: dict[tuple, tuple] = {}
    edge: dict[tuple, tuple] = {}
    pos = code.positions()
    for name, by_sign in pos.items():
        p, m = ("+", name), ("-", name)
        ccw = [(p, "in"), (m, "in"), (p, "out"), (m, "out")]
        for a, b in zip(ccw, ccw[1:] + ccw[:1]):
            succ[a] = b
    for comp in code.components:
        k = len(comp)
        for i, tok in enumerate(comp):
            nxt = comp[(i + 1) % k]
            a = (("+" if tok.sign > 0 else "-", tok.name), "out")
            b = (("+" if nxt.sign > 0 else "-", nxt.name), "in")
            edge[a] = b
            edge[b] = a
    return succ, edge


def _chord_graph_components(code: DiagramCode) -> int:
    """Connected pieces of the diagram that carry at least one chord."""
    parent = list(range(code.n_components))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for name, by_sign in code.positions().items():
        a, b = find(by_sign[1][0]), find(by_sign[-1][0])
        parent[a] = b
    roots = {find(ci) for ci, comp in enumerate(code.components) if comp}
    return len(roots)


def genus(d: DiagramCode) -> int:
    """Genus of the minimal closed surface carrying the diagram.

    Computed by face tracing on the ribbon graph whose vertices are the
    chords, with rotation system read off the endpoint signs.
    """
    succ, edge = _rotation(d)
    seen = set()
    faces = 0
    for start in succ:
        if start in seen:
            continue
        faces += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = succ[edge[h]]
    v = d.n_chords
    c = _chord_graph_components(d)
    # chi = V - E + F with E = 2V
    twice_g = 2 * c - (faces - v)
    assert twice_g % 2 == 0 and twice_g >= 0, "face tracing produced a non-orientable count"
    return twice_g // 2


def is_classical_realizable(d: DiagramCode) -> bool:
    return genus(d) == 0

"""Filamentations of single-component oriented chord diagrams.

A pairing is an involution on the chords.  Every pair ``(x, y)`` carries
filaments running from a negative endpoint to a positive one: ``Y- -> X+``
and its dual ``X- -> Y+`` for distinct chords, or the single ``X- -> X+``
for a self-pair.  A pairing is a filamentation when the oriented
intersection number of every pair with all other filaments vanishes.

Filaments are straight chords of the disk with endpoints in cyclic order,
so whether two of them cross, and with which sign, depends only on the
cyclic order of their four endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .codes import DiagramCode

Pair = tuple[str, str]


class FilamentationError(ValueError):
    """Raised for diagrams outside the filamentation domain (links)."""


@dataclass(frozen=True)
class Pairing:
    """An involution on chord names, stored as sorted pairs ``(x, y)`` with ``x <= y``."""

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        norm = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        seen: list[str] = []
        for x, y in norm:
            seen += [x] if x == y else [x, y]
        if len(seen) != len(set(seen)):
            raise ValueError("a chord occurs in more than one pair")
        object.__setattr__(self, "pairs", norm)

    @property
    def chords(self) -> frozenset[str]:
        return frozenset(c for p in self.pairs for c in p)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(sorted(pair)) in self.pairs

    def __str__(self):
        return "{" + ", ".join(f"({x},{y})" for x, y in self.pairs) + "}"


@dataclass(frozen=True)
class Filament:
    """Oriented arc from a negative endpoint position to a positive one."""

    start: int
    end: int
    owner: Pair

    @property
    def is_mono(self) -> bool:
        return self.owner[0] == self.owner[1]


def _require_knot(d: DiagramCode) -> None:
    if d.n_components != 1:
        raise FilamentationError("filamentations are only defined for single-component diagrams")


def enumerate_pairings(d: DiagramCode) -> Iterator[Pairing]:
    """All involutions on the chords, in lexicographic order of their sorted pair lists."""
    _require_knot(d)
    names = sorted(d.chords)

    def rec(rest: list[str]) -> Iterator[list[Pair]]:
        if not rest:
            yield []
            return
        x, tail = rest[0], rest[1:]
        for tl in rec(tail):
            yield [(x, x)] + tl
        for k, y in enumerate(tail):
            for tl in rec(tail[:k] + tail[k + 1 :]):
                yield [(x, y)] + tl

    for pairs in rec(names):
        yield Pairing(tuple(pairs))


def filaments(d: DiagramCode, pair: Pair) -> tuple[Filament, ...]:
    """The one or two filaments attached to ``pair``."""
    x, y = sorted(pair)
    pos = {name: {s: p[1] for s, p in by.items()} for name, by in d.positions().items()}
    if x == y:
        return (Filament(pos[x][-1], pos[x][1], (x, x)),)
    return (
        Filament(pos[y][-1], pos[x][1], (x, y)),
        Filament(pos[x][-1], pos[y][1], (x, y)),
    )


def _between(a: int, b: int, p: int, m: int) -> bool:
    """True if ``p`` lies strictly inside the counterclockwise arc from ``a`` to ``b``."""
    return 0 < (p - a) % m < (b - a) % m


def oriented_intersection(f: Filament, g: Filament, m: int) -> int:
    """Sign of the crossing of ``g`` across ``f`` (+1 when ``g`` runs right to left), or 0.

    ``m`` is the number of endpoint positions on the circle.
    """
    ends = {f.start, f.end, g.start, g.end}
    if len(ends) != 4:
        raise ValueError("filaments share an endpoint")
    c_in = _between(f.start, f.end, g.start, m)
    d_in = _between(f.start, f.end, g.end, m)
    if c_in == d_in:
        return 0
    # g ends on the counterclockwise arc from f's head back to its tail:
    # that side is to the left of f.
    return 1 if d_in is False else -1


def pair_intersection_number(d: DiagramCode, p: Pairing, pair: Pair) -> int:
    """Sum of ``beta . gamma`` for beta on ``pair`` and gamma on every other pair."""
    _require_knot(d)
    if pair not in p:
        raise KeyError(f"pair {pair} is not in the pairing")
    m = len(d.components[0])
    own = filaments(d, pair)
    key = tuple(sorted(pair))
    total = 0
    for other in p:
        if other == key:
            continue
        for g in filaments(d, other):
            for b in own:
                total += oriented_intersection(b, g, m)
    return total


def intersection_numbers(d: DiagramCode, p: Pairing) -> dict[Pair, int]:
    return {pair: pair_intersection_number(d, p, pair) for pair in p}


def is_filamentation(d: DiagramCode, p: Pairing) -> bool:
    _require_knot(d)
    if p.chords != frozenset(d.chords):
        raise ValueError("pairing does not cover exactly the chords of the diagram")
    return all(pair_intersection_number(d, p, pair) == 0 for pair in p)


def find_filamentation(d: DiagramCode) -> Pairing | None:
    """First filamentation in enumeration order, or None."""
    for p in enumerate_pairings(d):
        if is_filamentation(d, p):
            return p
    return None


def witness_json(d: DiagramCode, p: Pairing | None) -> dict:
    if p is None:
        return {"filamentation": None}
    numbers = intersection_numbers(d, p)
    return {
        "filamentation": [
            {"pair": list(pair), "intersection": numbers[pair]} for pair in p.pairs
        ]
    }

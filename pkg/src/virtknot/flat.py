"""Parity and the flat biquandle for flat virtual links."""

from __future__ import annotations

from dataclasses import dataclass

from .codes import DiagramCode
from .laurent import Laurent, poly_S


class FlatDomainError(ValueError):
    """The invariant needs a link with at least two components."""


def _require_link(d: DiagramCode) -> None:
    if d.n_components < 2:
        raise FlatDomainError("this invariant needs at least two components")


def parity(d: DiagramCode) -> int:
    """Number of chords joining distinct components, mod 2."""
    _require_link(d)
    pos = d.positions()
    mixed = sum(1 for by in pos.values() if by[1][0] != by[-1][0])
    return mixed % 2


@dataclass(frozen=True)
class FlatRelation:
    """``(s^exponent - 1) * generator = 0``."""

    generator: int
    exponent: int

    @property
    def coefficient(self) -> Laurent:
        return poly_S({self.exponent: 1}) - 1

    @property
    def trivial(self) -> bool:
        return self.exponent == 0

    @property
    def name(self) -> str:
        return generator_name(self.generator)

    def to_json(self) -> dict:
        return {"generator": self.generator, "exponent": self.exponent}

    def __str__(self):
        if self.trivial:
            return f"0*{self.name} = 0"
        return f"(s^{self.exponent} - 1)*{self.name} = 0"


def generator_name(i: int) -> str:
    """``a``, ``b``, ... for the first 26 components, then ``g26``, ``g27``, ..."""
    return chr(97 + i) if i < 26 else f"g{i}"


def flat_relations(d: DiagramCode) -> tuple[list[int], list[FlatRelation]]:
    """One generator per component and the relation obtained by going once around it.

    The label of a strand is multiplied by ``s`` when it passes a crossing at a
    positive endpoint and by ``s^-1`` at a negative one.
    """
    gens = list(range(d.n_components))
    rels = [FlatRelation(ci, sum(t.sign for t in comp)) for ci, comp in enumerate(d.components)]
    return gens, rels


def is_flat_detected(d: DiagramCode) -> bool:
    """True if the flat biquandle module is not free on the component generators."""
    _require_link(d)
    return any(not r.trivial for r in flat_relations(d)[1])

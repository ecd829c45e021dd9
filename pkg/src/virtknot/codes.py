"""Textual codes for oriented chord diagrams and arrow diagrams.

Grammar::

    code      := component ("|" component)*
    component := token*
    token     := NAME SIGN ROLE?
    NAME      := [A-Za-z][A-Za-z0-9]* | [0-9]+
    SIGN      := "+" | "-"
    ROLE      := "o" | "u"

``A+o`` is the base (over-crossing endpoint) of arrow ``A`` with local
orientation ``+``; ``A-u`` is its tip.  Codes without roles describe
oriented chord diagrams (flat diagrams / knot universes).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

OCD = "ocd"
ARROW = "arrow"

OVER = "o"
UNDER = "u"


class CodeError(ValueError):
    """Malformed or invalid diagram code."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class Token(NamedTuple):
    name: str
    sign: int  # +1 or -1
    role: str | None = None  # "o", "u", or None for OCD codes

    def __str__(self):
        return f"{self.name}{'+' if self.sign > 0 else '-'}{self.role or ''}"


@dataclass(frozen=True)
class DiagramCode:
    """A multi-component code: each component is a cyclic token sequence.

    Instances are immutable and validated on construction.  ``kind`` is
    ``"arrow"`` when every token carries a role, ``"ocd"`` otherwise.
    """

    components: tuple[tuple[Token, ...], ...]
    kind: str = OCD

    def __post_init__(self):
        comps = tuple(tuple(Token(*t) for t in c) for c in self.components)
        if not comps:
            comps = ((),)
        object.__setattr__(self, "components", comps)
        _validate(comps, self.kind)

    # -- basic queries ----------------------------------------------------
    @property
    def is_arrow(self) -> bool:
        return self.kind == ARROW

    @property
    def n_components(self) -> int:
        return len(self.components)

    def tokens(self) -> Iterator[tuple[tuple[int, int], Token]]:
        for ci, comp in enumerate(self.components):
            for i, tok in enumerate(comp):
                yield (ci, i), tok

    @property
    def chords(self) -> list[str]:
        """Chord names in order of first occurrence."""
        seen: dict[str, None] = {}
        for _, tok in self.tokens():
            seen.setdefault(tok.name, None)
        return list(seen)

    @property
    def n_chords(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def endpoints(self, name: str) -> list[tuple[tuple[int, int], Token]]:
        found = [(pos, tok) for pos, tok in self.tokens() if tok.name == name]
        if not found:
            raise KeyError(f"unknown chord {name!r}")
        return found

    def token_at(self, pos: tuple[int, int]) -> Token:
        return self.components[pos[0]][pos[1]]

    def positions(self) -> dict[str, dict[int, tuple[int, int]]]:
        """``{chord: {sign: position}}`` for every chord."""
        out: dict[str, dict[int, tuple[int, int]]] = {}
        for pos, tok in self.tokens():
            out.setdefault(tok.name, {})[tok.sign] = pos
        return out

    def replace_components(self, components) -> "DiagramCode":
        return DiagramCode(tuple(tuple(c) for c in components), self.kind)

    def __str__(self):
        return serialize(self)


def _validate(comps, kind):
    if kind not in (OCD, ARROW):
        raise CodeError(f"unknown code kind {kind!r}")
    seen: dict[str, list[Token]] = {}
    for comp in comps:
        for tok in comp:
            if tok.sign not in (1, -1):
                raise CodeError(f"bad sign {tok.sign!r} on chord {tok.name}")
            if kind == OCD and tok.role is not None:
                raise CodeError(f"role on chord {tok.name} in an OCD code")
            if kind == ARROW and tok.role not in (OVER, UNDER):
                raise CodeError(f"missing role on chord {tok.name} in an arrow code")
            seen.setdefault(tok.name, []).append(tok)
    for name, toks in seen.items():
        if len(toks) != 2:
            raise CodeError(f"chord {name} appears {len(toks)} times, expected 2")
        if toks[0].sign == toks[1].sign:
            raise CodeError(f"equal signs on both endpoints of chord {name}")
        if kind == ARROW and toks[0].role == toks[1].role:
            raise CodeError(f"chord {name} needs one 'o' and one 'u' endpoint")


_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9]*|[0-9]+)([+\-−])([ou])?")


def parse(text: str, kind: str | None = None) -> DiagramCode:
    """Parse a code string.

    ``kind`` may be ``"ocd"``, ``"arrow"`` or ``None`` (inferred: arrow iff
    any token carries a role).
    """
    comps: list[list[Token]] = [[]]
    i, n = 0, len(text)
    any_role = False
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "|":
            comps.append([])
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise CodeError(f"unexpected character {ch!r}", i)
        name, sign, role = m.groups()
        if role is not None and kind == OCD:
            raise CodeError(f"role suffix on chord {name} in an OCD code", m.start(3))
        any_role |= role is not None
        comps[-1].append(Token(name, 1 if sign == "+" else -1, role))
        i = m.end()
    if kind is None:
        kind = ARROW if any_role else OCD
    return DiagramCode(tuple(tuple(c) for c in comps), kind)


def serialize(code: DiagramCode) -> str:
    return " | ".join(" ".join(str(t) for t in comp) for comp in code.components)


def _label(i: int) -> str:
    # A..Z, AA..ZZ, ... (bijective base 26)
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(65 + r) + s
    return s


def _relabel(components) -> tuple[tuple[Token, ...], ...]:
    names: dict[str, str] = {}
    out = []
    for comp in components:
        row = []
        for tok in comp:
            if tok.name not in names:
                names[tok.name] = _label(len(names))
            row.append(Token(names[tok.name], tok.sign, tok.role))
        out.append(tuple(row))
    return tuple(out)


def canonical_components(code: DiagramCode) -> tuple[tuple[Token, ...], ...]:
    """Least re-encoding over rotations, component orders and renamings."""
    best = None
    best_text = None
    rotations = [
        [comp[r:] + comp[:r] for r in range(len(comp))] or [comp] for comp in code.components
    ]
    for order in itertools.permutations(range(len(rotations))):
        for combo in itertools.product(*(rotations[i] for i in order)):
            relabelled = _relabel(combo)
            text = " | ".join(" ".join(str(t) for t in comp) for comp in relabelled)
            if best_text is None or text < best_text:
                best, best_text = relabelled, text
    return best


def canonical_form(code: DiagramCode) -> str:
    """Canonical string, constant on rotations, component permutations and renamings."""
    return serialize(DiagramCode(canonical_components(code), code.kind))


def canonical(code: DiagramCode) -> DiagramCode:
    return DiagramCode(canonical_components(code), code.kind)


_GAUSS = re.compile(r"([OUou])(\d+)([+\-−])")


def from_standard_gauss(text: str) -> DiagramCode:
    """Convert ``O1+ U1+``-style Gauss codes (crossing sign on every passage).

    The over passage becomes the arrow base carrying the crossing sign; the
    under passage becomes the tip with the opposite local orientation.
    Components are separated by ``|``.
    """
    comps: list[list[tuple[str, str, int, int]]] = [[]]
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch == ",":
            i += 1
            continue
        if ch == "|":
            comps.append([])
            i += 1
            continue
        m = _GAUSS.match(text, i)
        if not m:
            raise CodeError(f"unexpected character {ch!r}", i)
        ou, num, sign = m.groups()
        comps[-1].append((ou.upper(), num, 1 if sign == "+" else -1, i))
        i = m.end()
    crossings: dict[str, list[tuple[str, int]]] = {}
    for comp in comps:
        for ou, num, sign, _ in comp:
            crossings.setdefault(num, []).append((ou, sign))
    names: dict[str, str] = {}
    for num, passes in crossings.items():
        if sorted(p[0] for p in passes) != ["O", "U"]:
            raise CodeError(f"crossing {num} needs exactly one O and one U passage")
        if passes[0][1] != passes[1][1]:
            raise CodeError(f"crossing {num} has mismatched signs")
    out = []
    for comp in comps:
        row = []
        for ou, num, sign, _ in comp:
            if num not in names:
                names[num] = _label(len(names))
            if ou == "O":
                row.append(Token(names[num], sign, OVER))
            else:
                row.append(Token(names[num], -sign, UNDER))
        out.append(tuple(row))
    return DiagramCode(tuple(out), ARROW)

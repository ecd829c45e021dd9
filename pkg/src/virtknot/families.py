"""Diagram families D_n and K_n, and the named example corpus."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .codes import ARROW, OCD, OVER, UNDER, DiagramCode, Token, parse


def _y(i: int) -> str:
    return f"Y{i}"


def make_Dn(n: int) -> DiagramCode:
    """Universe ``X- Yn- ... Y1- X+ Y1+ ... Yn+``: n horizontal chords crossing a vertical one."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    toks = [Token("X", -1)]
    toks += [Token(_y(i), -1) for i in range(n, 0, -1)]
    toks.append(Token("X", 1))
    toks += [Token(_y(i), 1) for i in range(1, n + 1)]
    return DiagramCode((tuple(toks),), OCD)


def _kn_base_sign(n: int, i: int) -> int:
    # Horizontal arrows alternate; the topmost one (i = n) is based at its minus end.
    return -1 if (n - i) % 2 == 0 else 1


def make_Kn(n: int) -> DiagramCode:
    """Arrow diagram on ``D_n``: x based at ``X+``, horizontal arrows alternating."""
    ocd = make_Dn(n)
    comp = []
    for tok in ocd.components[0]:
        if tok.name == "X":
            base_sign = 1
        else:
            base_sign = _kn_base_sign(n, int(tok.name[1:]))
        comp.append(Token(tok.name, tok.sign, OVER if tok.sign == base_sign else UNDER))
    return DiagramCode((tuple(comp),), ARROW)


make_An = make_Kn

FAMILIES = {"Dn": make_Dn, "An": make_An, "Kn": make_Kn}


def make_family(name: str, n: int) -> DiagramCode:
    try:
        return FAMILIES[name](n)
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


@lru_cache(maxsize=None)
def corpus() -> dict[str, str]:
    """Name -> code string, in file order."""
    text = resources.files("virtknot").joinpath("data/corpus.txt").read_text(encoding="utf-8")
    out: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, code = line.split(None, 1)
        out[name] = code.strip()
    return out


EXAMPLE_NAMES = tuple(corpus())


def named_example(name: str) -> DiagramCode:
    try:
        return parse(corpus()[name])
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}") from None

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from virtknot.codes import ARROW, OCD, OVER, UNDER, DiagramCode, Token

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_diagram(rng: random.Random, n_chords: int, n_components: int = 1, kind: str = ARROW) -> DiagramCode:
    """Uniform-ish random code: shuffled endpoints cut into components."""
    slots = [(i, e) for i in range(n_chords) for e in (0, 1)]
    rng.shuffle(slots)
    signs = {i: rng.choice((1, -1)) for i in range(n_chords)}
    roles = {i: rng.choice((OVER, UNDER)) for i in range(n_chords)}
    toks = []
    for i, e in slots:
        sign = signs[i] if e == 0 else -signs[i]
        role = None
        if kind == ARROW:
            role = roles[i] if e == 0 else ({OVER: UNDER, UNDER: OVER}[roles[i]])
        toks.append(Token(chr(65 + i), sign, role))
    cuts = sorted(rng.randint(0, len(toks)) for _ in range(n_components - 1))
    comps, prev = [], 0
    for c in cuts + [len(toks)]:
        comps.append(tuple(toks[prev:c]))
        prev = c
    return DiagramCode(tuple(comps), kind)


@st.composite
def diagrams(draw, max_chords=4, max_components=2, kind=ARROW, min_chords=0):
    n = draw(st.integers(min_value=min_chords, max_value=max_chords))
    c = draw(st.integers(min_value=1, max_value=max_components))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_diagram(random.Random(seed), n, c, kind)


def arrow_diagrams(**kw):
    return diagrams(kind=ARROW, **kw)


def flat_diagrams(**kw):
    return diagrams(kind=OCD, **kw)


TRIANGLE_PRE = (("X", -1, UNDER), ("Y", -1, UNDER)), (("Z", 1, OVER), ("X", 1, OVER)), (("Z", -1, UNDER), ("Y", 1, OVER))


def plant_triangle(d: DiagramCode, rng: random.Random) -> DiagramCode:
    """Insert the three adjacent pairs of an AD3 (or FLAT3) site at random gaps."""
    arrow = d.kind == ARROW
    used = set(d.chords)
    fresh = iter(n for n in ("P", "Q", "R", "S", "T", "U", "V", "W") if n not in used)
    names = {"X": next(fresh), "Y": next(fresh), "Z": next(fresh)}
    comps = [list(c) for c in d.components]
    slots: dict[tuple[int, int], list[Token]] = {}
    pairs = list(TRIANGLE_PRE)
    rng.shuffle(pairs)
    for pair in pairs:
        ci = rng.randrange(len(comps))
        g = rng.randint(0, len(comps[ci]))
        slots.setdefault((ci, g), []).extend(Token(names[v], s, r if arrow else None) for v, s, r in pair)
    for ci, g in sorted(slots, reverse=True):
        comps[ci][g:g] = slots[(ci, g)]
    return DiagramCode(tuple(tuple(c) for c in comps), d.kind)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])

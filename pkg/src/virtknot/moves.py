"""Reidemeister moves on codes and a bounded breadth-first reduction search.

Arrow diagrams use the moves AD1, AD2 and AD3; oriented chord diagrams use
their flat shadows FLAT1, FLAT2 and FLAT3.  Virtual moves do not change a
code, so they have no representation here.

Every move is a local rewrite of adjacent endpoints:

* ``*1``: a chord whose two endpoints are adjacent (a curl).
* ``*2``: two chords ``x, y`` with an adjacent pair ``x^e y^-e`` on one arc
  and an adjacent pair holding their other endpoints, in either order, on
  another arc.  For arrow diagrams the first pair holds both bases.
* ``*3``: three adjacent endpoint pairs matching a fixed triangle template;
  the move reverses each pair.

``FLIP`` reverses one arrow and negates its endpoint signs.  It keeps the
bracket but may change the knot, so the search never uses it.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .codes import ARROW, OCD, OVER, UNDER, DiagramCode, Token, _label, canonical_form

AD1_ADD, AD1_REMOVE = "AD1-add", "AD1-remove"
AD2_ADD, AD2_REMOVE = "AD2-add", "AD2-remove"
AD3 = "AD3"
FLIP = "FLIP"
FLAT1_ADD, FLAT1_REMOVE = "FLAT1-add", "FLAT1-remove"
FLAT2_ADD, FLAT2_REMOVE = "FLAT2-add", "FLAT2-remove"
FLAT3 = "FLAT3"

ARROW_KINDS = (AD1_REMOVE, AD2_REMOVE, AD3, AD1_ADD, AD2_ADD)
FLAT_KINDS = (FLAT1_REMOVE, FLAT2_REMOVE, FLAT3, FLAT1_ADD, FLAT2_ADD)
ALL_KINDS = ARROW_KINDS + (FLIP,) + FLAT_KINDS

_KIND_DOMAIN = {k: ARROW for k in ARROW_KINDS + (FLIP,)} | {k: OCD for k in FLAT_KINDS}
_KIND_FAMILY = {
    AD1_ADD: "1", AD1_REMOVE: "1", FLAT1_ADD: "1", FLAT1_REMOVE: "1",
    AD2_ADD: "2", AD2_REMOVE: "2", FLAT2_ADD: "2", FLAT2_REMOVE: "2",
    AD3: "3", FLAT3: "3",
}

# Triangle templates: three adjacent endpoint pairs, each entry (chord, sign, role).
_TRIANGLE = {
    "pre": ((("X", -1, UNDER), ("Y", -1, UNDER)),
            (("Z", 1, OVER), ("X", 1, OVER)),
            (("Z", -1, UNDER), ("Y", 1, OVER))),
    "post": ((("Y", -1, UNDER), ("X", -1, UNDER)),
             (("X", 1, OVER), ("Z", 1, OVER)),
             (("Y", 1, OVER), ("Z", -1, UNDER))),
}
_OTHER_PATTERN = {"pre": "post", "post": "pre"}


class MoveError(ValueError):
    """The move does not apply to the diagram."""


@dataclass(frozen=True)
class MoveInstance:
    """A concrete rewrite: ``site`` names chords or slots, ``params`` fix the variant."""

    kind: str
    site: tuple
    params: tuple = ()

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    def to_json(self) -> dict:
        return {"kind": self.kind, "site": _jsonable(self.site), "params": _jsonable(self.param_dict)}

    @classmethod
    def from_json(cls, data: dict) -> "MoveInstance":
        return cls(data["kind"], _tupled(data["site"]), tuple(sorted((k, _tupled(v)) for k, v in data["params"].items())))

    def __str__(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _tupled(x):
    if isinstance(x, list):
        return tuple(_tupled(v) for v in x)
    return x


def _mk(kind: str, site: Iterable, **params) -> MoveInstance:
    return MoveInstance(kind, tuple(site), tuple(sorted(params.items())))


# -- small helpers over component lists ----------------------------------------

def _nxt(d: DiagramCode, pos):
    ci, i = pos
    return (ci, (i + 1) % len(d.components[ci]))


def _prv(d: DiagramCode, pos):
    ci, i = pos
    return (ci, (i - 1) % len(d.components[ci]))


def _adjacent(d: DiagramCode, p, q) -> bool:
    return p != q and (_nxt(d, p) == q or _nxt(d, q) == p)


def _fresh_names(d: DiagramCode, k: int) -> list[str]:
    used = set(d.chords)
    out, i = [], 0
    while len(out) < k:
        name = _label(i)
        if name not in used:
            out.append(name)
        i += 1
    return out


def _gaps(d: DiagramCode) -> list[tuple[int, int]]:
    return [(ci, g) for ci, comp in enumerate(d.components) for g in range(max(len(comp), 1))]


def _remove_chords(d: DiagramCode, names) -> DiagramCode:
    names = set(names)
    return d.replace_components([t for t in comp if t.name not in names] for comp in d.components)


def _insert(d: DiagramCode, inserts: list[tuple[int, int, list[Token]]]) -> DiagramCode:
    """Insert token runs at ``(component, gap)`` slots; equal slots keep list order."""
    comps = [list(c) for c in d.components]
    for ci, g, _ in inserts:
        if not (0 <= ci < len(comps)) or not (0 <= g <= len(comps[ci])):
            raise MoveError(f"no insertion slot ({ci}, {g})")
    by_slot: dict[tuple[int, int], list[Token]] = {}
    for ci, g, toks in inserts:
        by_slot.setdefault((ci, g), []).extend(toks)
    for (ci, g) in sorted(by_slot, reverse=True):
        comps[ci][g:g] = by_slot[(ci, g)]
    return d.replace_components(comps)


def _slot_after_removal(d: DiagramCode, start, removed: set) -> tuple[int, int]:
    """Gap in the reduced component where a run starting at ``start`` used to sit."""
    ci, i = start
    kept = sum(1 for j in range(i) if (ci, j) not in removed)
    left = len(d.components[ci]) - sum(1 for (c, _) in removed if c == ci)
    return (ci, kept % left if left else 0)


def _check_domain(d: DiagramCode, kind: str) -> None:
    if kind not in _KIND_DOMAIN:
        raise MoveError(f"unknown move kind {kind!r}")
    if _KIND_DOMAIN[kind] != d.kind:
        raise MoveError(f"{kind} does not apply to {d.kind} codes")


def _role(d: DiagramCode, role):
    return role if d.kind == ARROW else None


# -- curls (AD1 / FLAT1) -------------------------------------------------------

def _curl_chords(d: DiagramCode) -> list[str]:
    out = []
    for name, by in d.positions().items():
        if _adjacent(d, by[1], by[-1]):
            out.append(name)
    return out


def _curl_add_instances(d: DiagramCode, kind: str) -> Iterator[MoveInstance]:
    roles = (OVER, UNDER) if d.kind == ARROW else (None,)
    for ci, g in _gaps(d):
        for sign in (1, -1):
            for role in roles:
                params = {"sign": sign}
                if role is not None:
                    params["role"] = role
                yield _mk(kind, (ci, g), **params)


def _apply_curl_add(d: DiagramCode, m: MoveInstance) -> DiagramCode:
    ci, g = m.site
    p = m.param_dict
    sign = p.get("sign")
    if sign not in (1, -1):
        raise MoveError("curl needs a sign of +1 or -1")
    role = p.get("role")
    if d.kind == ARROW and role not in (OVER, UNDER):
        raise MoveError("arrow curl needs a role")
    other = {OVER: UNDER, UNDER: OVER}.get(role)
    (name,) = _fresh_names(d, 1)
    return _insert(d, [(ci, g, [Token(name, sign, role), Token(name, -sign, other)])])


def _curl_first(d: DiagramCode, name: str):
    by = d.positions()[name]
    a, b = by[1], by[-1]
    return (a, b) if _nxt(d, a) == b else (b, a)


# -- bigons (AD2 / FLAT2) ------------------------------------------------------

def _bigon_match(d: DiagramCode, x: str, y: str):
    """Return ``(first_pair, second_pair)`` positions if ``x, y`` form a removable bigon.

    The first pair is ``x^e y^-e`` in that order (holding the bases for arrow
    codes); the second pair holds the remaining endpoints in either order.
    """
    pos = d.positions()
    if x == y or x not in pos or y not in pos:
        return None
    for e in (1, -1):
        p1, q1 = pos[x][e], pos[y][-e]
        if _nxt(d, p1) != q1:
            continue
        t1, t2 = d.token_at(p1), d.token_at(q1)
        if d.kind == ARROW and not (t1.role == OVER and t2.role == OVER):
            continue
        p2, q2 = pos[x][-e], pos[y][e]
        if _nxt(d, p2) == q2:
            return (p1, q1), (p2, q2)
        if _nxt(d, q2) == p2:
            return (p1, q1), (q2, p2)
    return None


def _bigon_remove_instances(d: DiagramCode, kind: str) -> Iterator[MoveInstance]:
    seen = set()
    for pos, tok in d.tokens():
        nb = d.token_at(_nxt(d, pos))
        if nb.name == tok.name or nb.sign == tok.sign:
            continue
        key = frozenset((tok.name, nb.name))
        if key in seen:
            continue
        if _bigon_match(d, tok.name, nb.name):
            seen.add(key)
            yield _mk(kind, (tok.name, nb.name))


def _bigon_add_instances(d: DiagramCode, kind: str) -> Iterator[MoveInstance]:
    gaps = _gaps(d)
    for s1 in gaps:
        for s2 in gaps:
            firsts = (True, False) if s1 == s2 else (True,)
            for sign in (1, -1):
                for swap in (False, True):
                    for first in firsts:
                        yield _mk(kind, (s1, s2), sign=sign, swap=swap, first=first)


def _apply_bigon_add(d: DiagramCode, m: MoveInstance) -> DiagramCode:
    try:
        (c1, g1), (c2, g2) = m.site
    except (TypeError, ValueError):
        raise MoveError("bigon site must be two (component, gap) slots") from None
    p = m.param_dict
    sign, swap, first = p.get("sign"), bool(p.get("swap")), p.get("first", True)
    if sign not in (1, -1):
        raise MoveError("bigon needs a sign of +1 or -1")
    x, y = _fresh_names(d, 2)
    r1, r2 = _role(d, OVER), _role(d, UNDER)
    run1 = [Token(x, sign, r1), Token(y, -sign, r1)]
    run2 = [Token(x, -sign, r2), Token(y, sign, r2)]
    if swap:
        run2.reverse()
    runs = [(c1, g1, run1), (c2, g2, run2)]
    if (c1, g1) == (c2, g2) and not first:
        runs.reverse()
    return _insert(d, runs)


# -- triangles (AD3 / FLAT3) ---------------------------------------------------

def _triangle_match(d: DiagramCode, pattern: str, first_pos) -> dict | None:
    """Bind X, Y, Z so that the template's first pair starts at ``first_pos``."""
    arrow = d.kind == ARROW
    template = _TRIANGLE[pattern]

    def fits(tok: Token, want) -> bool:
        _, sign, role = want
        return tok.sign == sign and (not arrow or tok.role == role)

    bind: dict[str, str] = {}

    def bind_var(var: str, name: str) -> bool:
        if var in bind:
            return bind[var] == name
        if name in bind.values():
            return False
        bind[var] = name
        return True

    (a, b) = template[0]
    pa, pb = first_pos, _nxt(d, first_pos)
    if pa == pb:
        return None
    ta, tb = d.token_at(pa), d.token_at(pb)
    if not (fits(ta, a) and fits(tb, b) and bind_var(a[0], ta.name) and bind_var(b[0], tb.name)):
        return None
    pos = d.positions()
    for a, b in template[1:]:
        if a[0] in bind:
            pa = pos[bind[a[0]]][a[1]]
            pb = _nxt(d, pa)
        elif b[0] in bind:
            pb = pos[bind[b[0]]][b[1]]
            pa = _prv(d, pb)
        else:  # pragma: no cover - templates always chain
            raise AssertionError("unchained triangle template")
        ta, tb = d.token_at(pa), d.token_at(pb)
        if pa == pb or not (fits(ta, a) and fits(tb, b)):
            return None
        if not (bind_var(a[0], ta.name) and bind_var(b[0], tb.name)):
            return None
    return bind if len(bind) == 3 else None


def _triangle_instances(d: DiagramCode, kind: str) -> Iterator[MoveInstance]:
    for pattern in ("pre", "post"):
        for pos, _ in d.tokens():
            bind = _triangle_match(d, pattern, pos)
            if bind:
                yield _mk(kind, (bind["X"], bind["Y"], bind["Z"]), pattern=pattern)


def _triangle_pairs(d: DiagramCode, m: MoveInstance):
    try:
        x, y, z = m.site
    except (TypeError, ValueError):
        raise MoveError("triangle site must name three chords") from None
    pattern = m.param_dict.get("pattern")
    if pattern not in _TRIANGLE:
        raise MoveError("triangle pattern must be 'pre' or 'post'")
    pos = d.positions()
    if not {x, y, z} <= pos.keys():
        raise MoveError("unknown chord in triangle site")
    a, _ = _TRIANGLE[pattern][0]
    names = {"X": x, "Y": y, "Z": z}
    start = pos[names[a[0]]][a[1]]
    bind = _triangle_match(d, pattern, start)
    if bind != names:
        raise MoveError(f"chords {x}, {y}, {z} do not form the {pattern} triangle")
    out = []
    for a, b in _TRIANGLE[pattern]:
        pa = pos[names[a[0]]][a[1]]
        out.append((pa, _nxt(d, pa)))
    return out


def _apply_triangle(d: DiagramCode, m: MoveInstance) -> DiagramCode:
    comps = [list(c) for c in d.components]
    for (ca, ia), (cb, ib) in _triangle_pairs(d, m):
        comps[ca][ia], comps[cb][ib] = comps[cb][ib], comps[ca][ia]
    return d.replace_components(comps)


# -- flip --------------------------------------------------------------------

def jones_flip(d: DiagramCode, chord: str) -> DiagramCode:
    """Reverse one arrow and negate both of its endpoint signs.

    The crossing sign is unchanged and so is the bracket, but the result is in
    general a different knot.
    """
    if d.kind != ARROW:
        raise MoveError("flip needs an arrow diagram")
    if chord not in d.positions():
        raise KeyError(f"unknown chord {chord!r}")
    swap = {OVER: UNDER, UNDER: OVER}
    return d.replace_components(
        [Token(t.name, -t.sign, swap[t.role]) if t.name == chord else t for t in comp]
        for comp in d.components
    )


# -- public API ---------------------------------------------------------------

def enumerate_moves(d: DiagramCode, kinds: Iterable[str] | None = None) -> list[MoveInstance]:
    """Every applicable instance of the requested kinds, in a fixed order."""
    if kinds is None:
        kinds = ARROW_KINDS if d.kind == ARROW else FLAT_KINDS
    kinds = set(kinds)
    unknown = kinds - set(ALL_KINDS)
    if unknown:
        raise MoveError(f"unknown move kinds {sorted(unknown)}")
    out: list[MoveInstance] = []
    for kind in ALL_KINDS:
        if kind not in kinds or _KIND_DOMAIN[kind] != d.kind:
            continue
        fam = _KIND_FAMILY.get(kind)
        if kind == FLIP:
            out += [_mk(FLIP, (name,)) for name in d.chords]
        elif kind.endswith("-remove") and fam == "1":
            out += [_mk(kind, (name,)) for name in _curl_chords(d)]
        elif kind.endswith("-add") and fam == "1":
            out += list(_curl_add_instances(d, kind))
        elif kind.endswith("-remove") and fam == "2":
            out += list(_bigon_remove_instances(d, kind))
        elif kind.endswith("-add") and fam == "2":
            out += list(_bigon_add_instances(d, kind))
        else:
            out += list(_triangle_instances(d, kind))
    return out


def apply_move(d: DiagramCode, m: MoveInstance) -> DiagramCode:
    _check_domain(d, m.kind)
    fam = _KIND_FAMILY.get(m.kind)
    if m.kind == FLIP:
        try:
            return jones_flip(d, m.site[0])
        except KeyError as exc:
            raise MoveError(str(exc)) from None
    if m.kind.endswith("-remove"):
        names = m.site
        if fam == "1":
            if len(names) != 1 or names[0] not in _curl_chords(d):
                raise MoveError(f"{names} is not a curl")
        elif len(names) != 2 or _bigon_match(d, *names) is None:
            raise MoveError(f"{names} is not a removable bigon")
        return _remove_chords(d, names)
    if m.kind.endswith("-add"):
        if fam == "1":
            return _apply_curl_add(d, m)
        return _apply_bigon_add(d, m)
    return _apply_triangle(d, m)


def inverse_move(d: DiagramCode, m: MoveInstance) -> MoveInstance:
    """The instance that undoes ``m`` when applied to ``apply_move(d, m)``."""
    _check_domain(d, m.kind)
    fam = _KIND_FAMILY.get(m.kind)
    p = m.param_dict
    if m.kind == FLIP:
        return m
    if fam == "3":
        return _mk(m.kind, m.site, pattern=_OTHER_PATTERN[p["pattern"]])
    kind_base = m.kind.rsplit("-", 1)[0]
    if m.kind.endswith("-add"):
        k = 1 if fam == "1" else 2
        return _mk(kind_base + "-remove", tuple(_fresh_names(d, k)))
    if fam == "1":
        (name,) = m.site
        a, b = _curl_first(d, name)
        slot = _slot_after_removal(d, a, {a, b})
        tok = d.token_at(a)
        params = {"sign": tok.sign}
        if d.kind == ARROW:
            params["role"] = tok.role
        return _mk(kind_base + "-add", slot, **params)
    match = _bigon_match(d, *m.site)
    if match is None:
        raise MoveError(f"{m.site} is not a removable bigon")
    (p1, q1), (p2, q2) = match
    removed = {p1, q1, p2, q2}
    s1 = _slot_after_removal(d, p1, removed)
    s2 = _slot_after_removal(d, p2, removed)
    t1, t2 = d.token_at(p1), d.token_at(p2)
    first = True
    if s1 == s2:
        first = _nxt(d, q1) == p2
    return _mk(kind_base + "-add", (s1, s2), sign=t1.sign, swap=t2.name != t1.name, first=first)


def replay(d: DiagramCode, path: Iterable[MoveInstance]) -> DiagramCode:
    for m in path:
        d = apply_move(d, m)
    return d


# -- search -----------------------------------------------------------------

@dataclass
class ReductionResult:
    start: DiagramCode
    diagram: DiagramCode
    path: list[MoveInstance] = field(default_factory=list)
    states: int = 0

    def to_json(self) -> dict:
        return {
            "start": str(self.start),
            "reduced": str(self.diagram),
            "chords": self.diagram.n_chords,
            "path": [m.to_json() for m in self.path],
            "states": self.states,
        }


class SearchExhausted(RuntimeError):
    """A budget cut the search short; ``result`` holds the best diagram reached.

    ``reason`` is ``"max_steps"`` when the state budget ran out and
    ``"max_chords"`` when every reachable state was explored but some moves
    were skipped because they would exceed the chord budget.  Neither is a
    proof that the diagram is irreducible.
    """

    def __init__(self, result: ReductionResult, reason: str):
        self.result = result
        self.reason = reason
        super().__init__(
            f"search budget {reason} exhausted after {result.states} states; "
            f"best diagram has {result.diagram.n_chords} chords"
        )


def search_kinds(d: DiagramCode) -> tuple[str, ...]:
    return ARROW_KINDS if d.kind == ARROW else FLAT_KINDS


def reduce_search(d: DiagramCode, max_chords: int, max_steps: int) -> ReductionResult:
    """Breadth-first search for diagrams with fewer chords, repeated until stuck.

    States are deduplicated by canonical form and explored first-in first-out.
    ``max_steps`` bounds the total number of distinct states discovered over the
    whole run.  If either budget prevents a complete search,
    :class:`SearchExhausted` is raised.  Returning normally means the diagram
    reached zero chords, or that its whole move class was explored without
    pruning and contains nothing smaller.
    """
    if max_chords <= 0 or max_steps <= 0:
        raise ValueError("budgets must be positive")
    if d.n_chords > max_chords:
        raise ValueError(f"diagram has {d.n_chords} chords, more than max_chords={max_chords}")
    kinds = search_kinds(d)
    result = ReductionResult(d, d, [], 0)
    while result.diagram.n_chords > 0:
        found = _bfs_smaller(result, kinds, max_chords, max_steps)
        if found is None:
            return result
        result.diagram, tail = found
        result.path.extend(tail)
    return result


def _bfs_smaller(result: ReductionResult, kinds, max_chords: int, max_steps: int):
    start = result.diagram
    target = start.n_chords
    seen = {canonical_form(start)}
    result.states += 1
    pruned = False
    queue: deque[tuple[DiagramCode, tuple]] = deque([(start, ())])
    while queue:
        cur, path = queue.popleft()
        room = max_chords - cur.n_chords
        allowed = [k for k in kinds if not k.endswith("-add") or room >= int(_KIND_FAMILY[k])]
        pruned |= len(allowed) < len(kinds)
        for m in enumerate_moves(cur, allowed):
            nxt = apply_move(cur, m)
            if nxt.n_chords < target:
                return nxt, list(path) + [m]
            key = canonical_form(nxt)
            if key in seen:
                continue
            if result.states >= max_steps:
                raise SearchExhausted(result, "max_steps")
            seen.add(key)
            result.states += 1
            queue.append((nxt, path + (m,)))
    if pruned:
        raise SearchExhausted(result, "max_chords")
    return None

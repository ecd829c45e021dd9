"""Alexander biquandle relation matrices and the generalized Alexander polynomial G(s, t)."""

from __future__ import annotations

from typing import Iterable, Sequence

from .codes import ARROW, OVER, DiagramCode
from .diagram import crossing_signs
from .laurent import ST_VARS, Laurent, poly_ST

ZERO = poly_ST({})
ONE = poly_ST({(0, 0): 1})
S = poly_ST({(1, 0): 1})
T = poly_ST({(0, 1): 1})
S_INV = poly_ST({(-1, 0): 1})
T_INV = poly_ST({(0, -1): 1})
ST1 = poly_ST({(1, 1): 1, (0, 0): 1})  # st + 1


class STMatrix:
    """Dense matrix of two-variable Laurent polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Laurent | int]]):
        self.rows = tuple(tuple(_lift(x) for x in row) for row in rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "STMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "STMatrix") -> "STMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = ZERO
                for l in range(k):
                    acc = acc + self.rows[i][l] * other.rows[l][j]
                row.append(acc)
            out.append(row)
        return STMatrix(out)

    def scale(self, c: Laurent | int) -> "STMatrix":
        c = _lift(c)
        return STMatrix([[c * x for x in row] for row in self.rows])

    def __pow__(self, n: int) -> "STMatrix":
        result = STMatrix.identity(self.shape[0])
        for _ in range(n):
            result = result @ self
        return result

    def __eq__(self, other):
        return isinstance(other, STMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"STMatrix[{body}]"

    def determinant(self) -> Laurent:
        return bareiss_determinant(self.rows)


def _lift(x) -> Laurent:
    if isinstance(x, Laurent):
        return x
    return Laurent.constant(int(x), ST_VARS)


def bareiss_determinant(rows: Sequence[Sequence[Laurent]]) -> Laurent:
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return ONE
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if prev != ONE else num
            m[i][k] = ZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


_CROSSING_MATRICES = {
    "A": [[ONE - S * T, T], [S, ZERO]],
    "Ahat": [[ZERO, S], [T, ONE - S * T]],
    "B": [[ZERO, S_INV], [T_INV, ONE - S_INV * T_INV]],
    "Bhat": [[ONE - S_INV * T_INV, T_INV], [S_INV, ZERO]],
    "C": [[ZERO, S_INV], [T, S_INV - T]],
    "Chat": [[S_INV - T, T], [S_INV, ZERO]],
    "D": [[ZERO, S], [T_INV, S - T_INV]],
    "Dhat": [[S - T_INV, T_INV], [S, ZERO]],
    "V": [[ZERO, ONE], [ONE, ZERO]],
}


def crossing_matrix(kind: str) -> STMatrix:
    """The 2x2 tangle matrices of the Alexander biquandle."""
    try:
        return STMatrix(_CROSSING_MATRICES[kind])
    except KeyError:
        raise ValueError(f"unknown crossing matrix {kind!r}") from None


def arcs(ad: DiagramCode) -> dict[tuple[int, int], int]:
    """Arc index leaving each endpoint; arcs are cut at every classical endpoint."""
    out = {}
    n = 0
    for ci, comp in enumerate(ad.components):
        for i in range(len(comp)):
            out[(ci, i)] = n
            n += 1
    return out


def relation_matrix(ad: DiagramCode) -> STMatrix:
    """Rows are crossing relations, columns are arc generators.

    Positive crossing:  over_out = s over_in,
                        under_out = t under_in + (1 - st) over_in.
    Negative crossing:  over_out = s^-1 over_in,
                        under_out = t^-1 under_in + (1 - 1/(st)) over_in.
    """
    if ad.kind != ARROW:
        raise ValueError("relation matrix needs an arrow diagram")
    if ad.n_chords == 0:
        raise ValueError("crossingless diagram has no relations")
    out_arc = arcs(ad)
    n_arcs = len(out_arc)
    free = sum(1 for comp in ad.components if not comp)
    signs = crossing_signs(ad)
    ends: dict[str, dict[str, int]] = {}
    for (ci, i), tok in ad.tokens():
        k = len(ad.components[ci])
        slot = "over" if tok.role == OVER else "under"
        ends.setdefault(tok.name, {})[slot + "_out"] = out_arc[(ci, i)]
        ends.setdefault(tok.name, {})[slot + "_in"] = out_arc[(ci, (i - 1) % k)]
    rows = []
    width = n_arcs + free
    for name in ad.chords:
        e = ends[name]
        if signs[name] > 0:
            s_over, t_under, mix = S, T, ONE - S * T
        else:
            s_over, t_under, mix = S_INV, T_INV, ONE - S_INV * T_INV
        r1 = [ZERO] * width
        r1[e["over_out"]] = r1[e["over_out"]] + ONE
        r1[e["over_in"]] = r1[e["over_in"]] - s_over
        r2 = [ZERO] * width
        r2[e["under_out"]] = r2[e["under_out"]] + ONE
        r2[e["under_in"]] = r2[e["under_in"]] - t_under
        r2[e["over_in"]] = r2[e["over_in"]] - mix
        rows += [r1, r2]
    return STMatrix(rows)


def normalize_units(p: Laurent) -> Laurent:
    """Representative of ``p`` modulo multiplication by units +-s^i t^j."""
    if p.is_zero():
        return p
    shifted = p.shift(tuple(-x for x in p.min_exponents()))
    lead = min(shifted.terms)
    return -shifted if shifted.coefficient(lead) < 0 else shifted


def g_polynomial(ad: DiagramCode) -> Laurent:
    """Generalized Alexander polynomial, normalized; 0 for crossingless diagrams."""
    if ad.n_chords == 0:
        return ZERO
    if ad.kind != ARROW:
        raise ValueError("G needs an arrow diagram")
    m = relation_matrix(ad)
    rows, cols = m.shape
    if rows != cols:
        # a crossingless component contributes a free generator
        return ZERO
    return normalize_units(m.determinant())


def power_C(n: int) -> STMatrix:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return crossing_matrix("C") ** n


def _mono(i: int, j: int, c: int = 1) -> Laurent:
    return poly_ST({(i, j): c})


def _neg_t_pow(n: int) -> Laurent:
    return _mono(0, n, -1 if n % 2 else 1)


def closed_form_Cn(n: int) -> STMatrix:
    """(st + 1) C^n from the closed form with the common denominator cleared."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    mt = _neg_t_pow(n)  # (-t)^n
    return STMatrix(
        [
            [mt + _mono(-n + 1, 1), -mt + _mono(-n, 0)],
            [T * (-(S * mt) + _mono(1 - n, 0)), T * S * mt + _mono(-n, 0)],
        ]
    )


def g_closed_form_numerator(n: int) -> Laurent:
    tail = poly_ST({(2, 2): 1, (0, 0): -1}) + poly_ST({(0, 1 - n): 1, (2, 1 - n): -1})
    if n % 2 == 0:
        head = _mono(n, 0) * poly_ST({(2, 1): 1, (0, 0): 1}) * poly_ST({(0, 0): 1, (0, 1): -1})
    else:
        head = _mono(n + 1, 0) * poly_ST({(0, 0): 1, (0, 2): -1})
    return head + tail


def g_closed_form_Kn(n: int) -> Laurent:
    """Closed-form G of K_n, divided exactly by st + 1 and unit-normalized."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return normalize_units(g_closed_form_numerator(n).exact_div(ST1))


def unit_equivalent(p: Laurent, q: Laurent) -> bool:
    return normalize_units(p) == normalize_units(q)

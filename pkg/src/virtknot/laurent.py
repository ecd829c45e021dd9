"""Exact Laurent polynomials with integer coefficients.

A single class covers the one-variable ring Z[A, 1/A] used by the bracket,
the two-variable ring Z[s, 1/s, t, 1/t] used by the Alexander biquandle and
the flat ring Z[s, 1/s].  Terms are stored as a mapping from exponent tuples
to nonzero integers, so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class Laurent:
    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, variables: tuple[str, ...] = ("A",)):
        self.variables = tuple(variables)
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.variables):
                raise ValueError(f"exponent {exp} does not match variables {self.variables}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
                if clean[exp] == 0:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int, variables: tuple[str, ...] = ("A",)) -> "Laurent":
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1, variables: tuple[str, ...] = ("A",)) -> "Laurent":
        return cls({tuple(exp): coeff}, variables)

    def _like(self, terms: Mapping[Exponent, int]) -> "Laurent":
        return Laurent(terms, self.variables)

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return Laurent.constant(other, self.variables)
        return NotImplemented

    # -- views ----------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self._terms) for i in range(len(self.variables)))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * len(self.variables)
        return tuple(max(e[i] for e in self._terms) for i in range(len(self.variables)))

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ArithmeticError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ArithmeticError("only unit monomials are invertible over the integers")
            return self._like({tuple(-x * -n for x in e): c ** -n})
        result = Laurent.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp: Iterable[int]) -> "Laurent":
        """Multiply by the monomial with exponent ``exp``."""
        exp = tuple(exp)
        return self._like({tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    def exact_div(self, other) -> "Laurent":
        """Quotient ``self / other`` in the Laurent ring.

        Raises ArithmeticError if the division leaves a remainder.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self._like({})
        # Clear monomial factors so both sides are honest polynomials; the
        # divisor then has no variable factor, so the quotient is a polynomial.
        dshift = other.min_exponents()
        pshift = self.min_exponents()
        d = other.shift(tuple(-x for x in dshift))
        r = dict(self.shift(tuple(-x for x in pshift))._terms)
        lead_e = max(d._terms)
        lead_c = d._terms[lead_e]
        quotient: dict[Exponent, int] = {}
        while r:
            e = max(r)
            c = r[e]
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < 0 for x in qe) or c % lead_c:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            qc = c // lead_c
            quotient[qe] = qc
            for de, dc in d._terms.items():
                te = tuple(a + b for a, b in zip(qe, de))
                v = r.get(te, 0) - qc * dc
                if v:
                    r[te] = v
                else:
                    r.pop(te, None)
        q = self._like(quotient)
        return q.shift(tuple(p - s for p, s in zip(pshift, dshift)))

    def substitute_inverse(self) -> "Laurent":
        """Replace every variable by its reciprocal."""
        return self._like({tuple(-x for x in e): c for e, c in self._terms.items()})

    def evaluate(self, *values):
        """Evaluate at rational (or float) points; exact for Fractions."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, x in zip(values, e):
                term = term * (Fraction(v) ** x if isinstance(v, (int, Fraction)) else v ** x)
            total += term
        return total

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.constant(other, self.variables)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- rendering --------------------------------------------------------
    def _monomial_str(self, exp: Exponent) -> str:
        parts = []
        for name, k in zip(self.variables, exp):
            if k == 0:
                continue
            parts.append(name if k == 1 else f"{name}^{k}")
        return " ".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = self._monomial_str(e)
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}" if not mono else f"{mag}*{mono}")
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Laurent({str(self)!r}, variables={self.variables})"

    def to_json(self) -> list:
        """Sorted ``[exponent..., coefficient]`` records."""
        return [[*e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: list, variables: tuple[str, ...]) -> "Laurent":
        return cls({tuple(row[:-1]): row[-1] for row in data}, variables)


A_VARS = ("A",)
ST_VARS = ("s", "t")
S_VARS = ("s",)


def poly_A(terms: Mapping[int, int]) -> Laurent:
    """One-variable polynomial in A from ``{exponent: coefficient}``."""
    return Laurent({(k,): v for k, v in terms.items()}, A_VARS)


def poly_ST(terms: Mapping[tuple[int, int], int]) -> Laurent:
    return Laurent(dict(terms), ST_VARS)


def poly_S(terms: Mapping[int, int]) -> Laurent:
    return Laurent({(k,): v for k, v in terms.items()}, S_VARS)


class QuarterLaurentT:
    """Laurent polynomial in t with exponents in (1/4)Z.

    Exponents are stored as integer numerators over a fixed denominator 4.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(k): int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def from_A(cls, poly: Laurent) -> "QuarterLaurentT":
        # A = t^(-1/4): A^k -> t^(-k/4)
        return cls({-e[0]: c for e, c in poly.terms.items()})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def exponents(self) -> list[Fraction]:
        return sorted(Fraction(k, 4) for k in self._terms)

    def has_integral_exponents(self) -> bool:
        return all(k % 4 == 0 for k in self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QuarterLaurentT({0: other})
        if not isinstance(other, QuarterLaurentT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for k, c in sorted(self._terms.items()):
            q = Fraction(k, 4)
            if q == 0:
                mono = ""
            elif q == 1:
                mono = "t"
            elif q.denominator == 1:
                mono = f"t^{q.numerator}"
            else:
                mono = f"t^({q.numerator}/{q.denominator})"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}" if not mono else f"{mag}*{mono}")
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"QuarterLaurentT({str(self)!r})"

    def to_json(self) -> list:
        return [{"num": k, "den": 4, "coeff": c} for k, c in sorted(self._terms.items())]

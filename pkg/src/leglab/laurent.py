"""Exact integer Laurent polynomials in one variable.

This is the common currency of the package: generating-family
polynomials and linearized-homology polynomials live in Z[l, l^-1]
(rendered with the variable ``l``), and ruling polynomials reuse the
same arithmetic rendered with ``z``.

A polynomial is stored as a mapping exponent -> nonzero integer
coefficient; the zero polynomial is the empty mapping.  Operations
that need a degree reject zero with ZeroPolynomial instead of
guessing, because downstream a zero answer means "trivial homology"
and must never be silently normalized.

Text forms (both parse back losslessly):

* polynomial: ``2*l^0 + 1*l^-1``   (descending exponents)
* vector:     ``(1,2)@-1``         (coefficients low..high, lowest exponent)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from .errors import NegativeCoefficient, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "HomologyVector",
    "from_terms",
    "add",
    "mul_monomial",
    "monomial",
    "zero",
    "normalize_degree_zero",
    "to_vector",
    "is_palindromic_up_to_shift",
    "render",
    "parse",
]


class LaurentPoly:
    """Immutable integer Laurent polynomial.

    Construct via ``from_terms`` / ``monomial`` in normal code; the
    constructor accepts a mapping exponent -> coefficient and drops
    zero coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        clean: Dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    clean[int(e)] = int(c)
        object.__setattr__(self, "_coeffs", clean)

    # -- queries -------------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """Sorted (exponent, coefficient) pairs, ascending exponent."""
        return tuple(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Maximum exponent; raises ZeroPolynomial on the zero polynomial."""
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(self._coeffs)

    def low_degree(self) -> int:
        """Minimum exponent; raises ZeroPolynomial on the zero polynomial."""
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return min(self._coeffs)

    # -- protocol ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("LaurentPoly",) + self.terms())

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, other)

    def __repr__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class HomologyVector:
    """Coefficient vector of a nonzero, nonnegative Laurent polynomial.

    ``entries`` lists coefficients from the lowest exponent to the
    highest inclusive (zeros fill interior gaps); ``lowest_exponent``
    anchors the vector.  Round-trips losslessly with LaurentPoly.
    """

    entries: Tuple[int, ...]
    lowest_exponent: int

    def __post_init__(self) -> None:
        if not self.entries:
            raise ZeroPolynomial("a homology vector needs at least one entry")
        if self.entries[0] == 0 or self.entries[-1] == 0:
            raise ValueError("first and last vector entries must be nonzero")
        if any(c < 0 for c in self.entries):
            raise NegativeCoefficient(f"vector entries must be nonnegative: {self.entries}")

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly(
            {self.lowest_exponent + i: c for i, c in enumerate(self.entries)}
        )

    def render(self) -> str:
        inner = ",".join(str(c) for c in self.entries)
        return f"({inner})@{self.lowest_exponent}"

    @classmethod
    def parse(cls, text: str) -> "HomologyVector":
        m = re.fullmatch(r"\(\s*([-\d,\s]+)\)@(-?\d+)", text.strip())
        if m is None:
            raise ValueError(f"not a vector rendering: {text!r}")
        entries = tuple(int(part) for part in m.group(1).split(","))
        return cls(entries, int(m.group(2)))


# -- constructors ------------------------------------------------------


def from_terms(terms: Iterable[Tuple[int, int]]) -> LaurentPoly:
    """Build a polynomial from (exponent, coefficient) pairs.

    Duplicate exponents are summed and zero coefficients dropped, so
    ``from_terms([(2, 1), (2, -1)])`` is the zero polynomial.
    """
    acc: Dict[int, int] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc)


def monomial(exponent: int, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly({exponent: coefficient})


def zero() -> LaurentPoly:
    return LaurentPoly()


# -- ring operations ---------------------------------------------------


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc = dict(p._coeffs)
    for e, c in q._coeffs.items():
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc)


def mul_monomial(p: LaurentPoly, e: int) -> LaurentPoly:
    """Multiply by the monomial with exponent ``e`` (shift all exponents)."""
    return LaurentPoly({exp + e: c for exp, c in p._coeffs.items()})


# -- normalization and encodings --------------------------------------


def normalize_degree_zero(p: LaurentPoly) -> Tuple[LaurentPoly, int]:
    """Shift ``p`` so its top exponent is 0; return (shifted, shift).

    The returned polynomial equals ``p`` times the monomial of exponent
    ``shift``.  Raises ZeroPolynomial on zero input.
    """
    shift = -p.degree()
    return mul_monomial(p, shift), shift


def to_vector(p: LaurentPoly) -> HomologyVector:
    """Encode a nonzero polynomial with nonnegative coefficients as a vector."""
    lo, hi = p.low_degree(), p.degree()
    entries = tuple(p.coefficient(e) for e in range(lo, hi + 1))
    if any(c < 0 for c in entries):
        raise NegativeCoefficient(f"cannot encode {p!r} as a homology vector")
    return HomologyVector(entries, lo)


def is_palindromic_up_to_shift(p: LaurentPoly) -> bool:
    """True iff p equals its own variable-inversion times some monomial.

    Equivalently the coefficient list from lowest to highest exponent
    reads the same reversed.
    """
    lo, hi = p.low_degree(), p.degree()
    coeffs = [p.coefficient(e) for e in range(lo, hi + 1)]
    return coeffs == coeffs[::-1]


# -- text form ---------------------------------------------------------

_TERM_RE = re.compile(r"(-?\d+)\*([A-Za-z])\^(-?\d+)")


def render(p: LaurentPoly, var: str = "l") -> str:
    """Render like ``2*l^0 + 1*l^-1`` (descending exponents); zero is ``0``."""
    if p.is_zero():
        return "0"
    parts = [f"{c}*{var}^{e}" for e, c in sorted(p.terms(), reverse=True)]
    return " + ".join(parts)


def parse(text: str) -> LaurentPoly:
    """Parse the output of ``render`` (any single variable letter)."""
    text = text.strip()
    if text == "0":
        return zero()
    terms = []
    seen_vars = set()
    for chunk in re.split(r"\s*\+\s*", text):
        m = _TERM_RE.fullmatch(chunk.strip())
        if m is None:
            raise ValueError(f"not a polynomial term: {chunk!r}")
        coeff, letter, exp = m.groups()
        seen_vars.add(letter)
        terms.append((int(exp), int(coeff)))
    if len(seen_vars) > 1:
        raise ValueError(f"mixed variables in polynomial: {sorted(seen_vars)}")
    return from_terms(terms)

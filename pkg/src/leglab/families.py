"""The link families: notation parser, front builders, closed forms.

Two families of 2-component links of maximal unknots are supported:

* rational links ``rat(a_n,k_n,...,k_1,a_0)`` with even horizontal
  entries a_i = 2w_i, optionally flyped (``a_i^p_i`` on any entry but
  the leading one);
* twist links ``twist(j,k)``: two clasped unknots with j and k
  self-crossings.

The builders emit one concrete plat event word per family.  Layout
choices beyond the published censuses (cusp placement, label spots)
are cosmetic; every invariant computed downstream is checked to be
layout-independent.  Generator labels follow the usual reporting
conventions: rational generators h/v/c are numbered right to left,
twist clasp crossings x_1..x_4 top to bottom, twist s/c labels by
component (right component first), top to bottom.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple, Union

from . import front as fr
from .errors import (
    InvalidDiagram,
    OddHorizontalEntry,
    SpecSyntaxError,
    ZeroParameter,
    ZeroPolynomial,
)
from .laurent import (
    LaurentPoly,
    from_terms,
    is_palindromic_up_to_shift,
    mul_monomial,
    normalize_degree_zero,
)

__all__ = [
    "Rational",
    "FlypedRational",
    "Twist",
    "LinkSpec",
    "Orderedness",
    "parse_spec",
    "render_spec",
    "build_front",
    "build_front_labeled",
    "canonical_potential",
    "gamma_minus",
    "gamma_plus",
    "orderedness",
    "ljk_equivalence_classes",
    "rational_specs",
    "twist_specs",
    "default_grid",
]


@dataclass(frozen=True)
class Rational:
    """w = (w_n, ..., w_0) and k = (k_n, ..., k_1), as written."""

    w: Tuple[int, ...]
    k: Tuple[int, ...]


@dataclass(frozen=True)
class FlypedRational:
    """Rational data plus flype exponents p = (p_{n-1}, ..., p_0)."""

    w: Tuple[int, ...]
    k: Tuple[int, ...]
    p: Tuple[int, ...]


@dataclass(frozen=True)
class Twist:
    j: int
    k: int


LinkSpec = Union[Rational, FlypedRational, Twist]


class Orderedness(enum.Enum):
    ORDERED = "ordered"
    INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------------------
# notation


_SPEC_RE = re.compile(r"(rat|twist)\s*\(([^()]*)\)")
_ENTRY_RE = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_spec(text: str) -> LinkSpec:
    """Parse family notation like ``rat(4,2,2,1,2)``, ``rat(2,1,4^1)``,
    or ``twist(2,3)``."""
    m = _SPEC_RE.fullmatch(text.strip())
    if m is None:
        raise SpecSyntaxError(f"not a link spec: {text!r}")
    name, body = m.group(1), m.group(2)
    entries = [e.strip() for e in body.split(",")] if body.strip() else []

    if name == "twist":
        if len(entries) != 2:
            raise SpecSyntaxError(f"twist takes two parameters, got {len(entries)}")
        try:
            j, k = (int(e) for e in entries)
        except ValueError:
            raise SpecSyntaxError(f"twist parameters must be integers: {body!r}") from None
        if j < 1 or k < 1:
            raise ZeroParameter(f"twist parameters must be positive: ({j},{k})")
        return Twist(j, k)

    if len(entries) == 0 or len(entries) % 2 == 0:
        raise SpecSyntaxError(
            f"rat needs an odd number of entries (horizontals at both ends), got {len(entries)}"
        )
    w: List[int] = []
    k: List[int] = []
    p: List[int] = []
    flyped = False
    for pos, entry in enumerate(entries):
        em = _ENTRY_RE.fullmatch(entry)
        if em is None:
            raise SpecSyntaxError(f"bad entry {entry!r} in {text!r}")
        value = int(em.group(1))
        exponent = em.group(2)
        if pos % 2 == 0:  # horizontal entry a_i = 2w_i
            if value == 0:
                raise ZeroParameter(f"horizontal entry must be positive: {entry!r}")
            if value % 2:
                raise OddHorizontalEntry(f"horizontal entry must be even: {entry!r}")
            w.append(value // 2)
            if exponent is not None:
                if pos == 0:
                    raise SpecSyntaxError("the leading horizontal entry cannot carry a flype exponent")
                flyped = True
                p.append(int(exponent))
            elif pos > 0:
                p.append(0)
        else:  # vertical entry k_i
            if exponent is not None:
                raise SpecSyntaxError(f"vertical entries cannot carry exponents: {entry!r}")
            if value == 0:
                raise ZeroParameter(f"vertical entry must be positive: {entry!r}")
            k.append(value)
    if flyped:
        return FlypedRational(tuple(w), tuple(k), tuple(p))
    return Rational(tuple(w), tuple(k))


def render_spec(spec: LinkSpec) -> str:
    if isinstance(spec, Twist):
        return f"twist({spec.j},{spec.k})"
    parts: List[str] = []
    n = len(spec.k)
    for i, wi in enumerate(spec.w):
        entry = str(2 * wi)
        if isinstance(spec, FlypedRational) and i > 0 and spec.p[i - 1]:
            entry += f"^{spec.p[i - 1]}"
        parts.append(entry)
        if i < n:
            parts.append(str(spec.k[i]))
    return f"rat({','.join(parts)})"


def _levels(spec: Union[Rational, FlypedRational]) -> Tuple[List[int], List[int], List[int]]:
    """Per-level data in build order: (w_0..w_n), (k_1..k_n), and the
    twist directions (dir_1..dir_n), -1 except where flypes flip them."""
    w_asc = list(reversed(spec.w))
    k_asc = list(reversed(spec.k))
    n = len(k_asc)
    if isinstance(spec, FlypedRational):
        p_asc = list(reversed(spec.p))
        dirs = []
        for i in range(1, n + 1):
            sigma = (1 + sum(p_asc[: i])) % 2
            dirs.append(1 if sigma == 0 else -1)
    else:
        dirs = [-1] * n
    return w_asc, k_asc, dirs


# ---------------------------------------------------------------------------
# front builders


def _build_rational(spec: Union[Rational, FlypedRational]) -> Tuple[fr.FrontDiagram, Dict[int, str]]:
    w_asc, k_asc, dirs = _levels(spec)
    events: List[fr.Event] = [fr.LeftCusp(1), fr.LeftCusp(3)]
    h_events: List[int] = []
    v_events: List[int] = []

    def emit(ev: fr.Event) -> int:
        events.append(ev)
        return len(events) - 1

    for _ in range(2 * w_asc[0]):
        h_events.append(emit(fr.Crossing(2)))
    for i in range(1, len(k_asc) + 1):
        side = 0 if i % 2 == 1 else 1  # vertical regions alternate: lower component first
        descending = dirs[i - 1] == -1
        for _ in range(k_asc[i - 1]):
            if side == 0 and descending:
                emit(fr.LeftCusp(3))
                v_events.append(emit(fr.Crossing(4)))
                emit(fr.RightCusp(5))
            elif side == 0:
                emit(fr.LeftCusp(5))
                v_events.append(emit(fr.Crossing(4)))
                emit(fr.RightCusp(3))
            elif descending:
                emit(fr.LeftCusp(3))
                v_events.append(emit(fr.Crossing(2)))
                emit(fr.RightCusp(1))
            else:
                emit(fr.LeftCusp(1))
                v_events.append(emit(fr.Crossing(2)))
                emit(fr.RightCusp(3))
        for _ in range(2 * w_asc[i]):
            h_events.append(emit(fr.Crossing(2)))
    emit(fr.RightCusp(3))
    emit(fr.RightCusp(1))

    labels: Dict[int, str] = {}
    for num, t in enumerate(reversed(h_events), start=1):
        labels[t] = f"h_{num}"
    for num, t in enumerate(reversed(v_events), start=1):
        labels[t] = f"v_{num}"
    rc_events = [t for t, ev in enumerate(events) if isinstance(ev, fr.RightCusp)]
    for num, t in enumerate(reversed(rc_events), start=1):
        labels[t] = f"c_{num}"
    return fr.FrontDiagram(tuple(events)), labels


def _build_twist(spec: Twist) -> Tuple[fr.FrontDiagram, Dict[int, str]]:
    j, k = spec.j, spec.k
    events: List[fr.Event] = []
    left_selfs: List[int] = []
    right_selfs: List[int] = []
    clasps: List[int] = []

    def emit(ev: fr.Event) -> int:
        events.append(ev)
        return len(events) - 1

    # Left component: j+1 stacked pairs, a staircase of j self-crossings,
    # then close the interior pairs back up.
    for i in range(j + 1):
        emit(fr.LeftCusp(2 * i + 1))
    for i in range(1, j + 1):
        left_selfs.append(emit(fr.Crossing(2 * i)))
    for _ in range(j - 1):
        emit(fr.RightCusp(3))
    # Clasps with the right component: two crossings above, two below.
    emit(fr.LeftCusp(2))
    clasps.append(emit(fr.Crossing(1)))
    clasps.append(emit(fr.Crossing(3)))
    emit(fr.RightCusp(2))
    emit(fr.LeftCusp(4))
    clasps.append(emit(fr.Crossing(3)))
    clasps.append(emit(fr.Crossing(5)))
    emit(fr.RightCusp(4))
    # Right component: mirror accordion with k self-crossings.
    for _ in range(k - 1):
        emit(fr.LeftCusp(3))
    for i in range(1, k + 1):
        right_selfs.append(emit(fr.Crossing(2 * i)))
    for _ in range(k + 1):
        emit(fr.RightCusp(1))

    labels: Dict[int, str] = {}
    for num, t in enumerate(clasps, start=1):
        labels[t] = f"x_{num}"
    for num, t in enumerate(right_selfs + left_selfs, start=1):
        labels[t] = f"s_{num}"
    diagram = fr.FrontDiagram(tuple(events))
    lab = fr.components(diagram)
    rc_events = [t for t, ev in enumerate(events) if isinstance(ev, fr.RightCusp)]
    # right cusps of the right component first, as in the usual figures
    def rc_key(t: int) -> Tuple[int, int]:
        upper = diagram.branch_at(t, events[t].slot)
        return (lab.branch_component[upper], t)

    for num, t in enumerate(sorted(rc_events, key=rc_key), start=1):
        labels[t] = f"c_{num}"
    return diagram, labels


def build_front_labeled(spec: LinkSpec) -> Tuple[fr.FrontDiagram, Dict[int, str]]:
    """Build the family's front along with generator labels (event
    index -> report name)."""
    if isinstance(spec, Twist):
        return _build_twist(spec)
    if isinstance(spec, (Rational, FlypedRational)):
        return _build_rational(spec)
    raise SpecSyntaxError(f"not a link spec: {spec!r}")


def build_front(spec: LinkSpec) -> fr.FrontDiagram:
    return build_front_labeled(spec)[0]


def canonical_potential(spec: LinkSpec, d: Optional[fr.FrontDiagram] = None) -> fr.MaslovPotential:
    """The marked-point normalization used by the published values:
    base offsets are chosen so the reference crossing (the leftmost
    horizontal crossing for rational links, the top clasp crossing x_1
    for twist links) has degree 0."""
    built, labels = build_front_labeled(spec)
    if d is None:
        d = built
    elif d != built:
        raise InvalidDiagram("diagram does not match the spec's built front")
    if isinstance(spec, Twist):
        anchor = next(t for t, name in labels.items() if name == "x_1")
    else:
        anchor = min(d.crossing_events())
    flat = fr.maslov_potential(d)
    delta = fr.grading(d, flat)[anchor]
    # the anchor crossing has its over strand on component 1
    return fr.maslov_potential(d, (delta, 0))


# ---------------------------------------------------------------------------
# closed forms


def gamma_minus(spec: LinkSpec) -> LaurentPoly:
    """The closed-form negative polynomial, normalized to degree 0."""
    if isinstance(spec, Twist):
        return from_terms([(0, 1), (-abs(spec.j - spec.k), 1)])
    w_asc, k_asc, dirs = _levels(spec)
    exponent = 0
    terms = [(0, w_asc[0])]
    for i in range(1, len(w_asc)):
        exponent += dirs[i - 1] * k_asc[i - 1]
        terms.append((exponent, w_asc[i]))
    return normalize_degree_zero(from_terms(terms))[0]


def gamma_plus(gm: LaurentPoly) -> LaurentPoly:
    """The positive polynomial determined by the negative one."""
    if gm.is_zero():
        raise ZeroPolynomial("gamma_plus of the zero polynomial")
    return mul_monomial(gm, 1)


def orderedness(spec: LinkSpec) -> Orderedness:
    """Ordered if the polynomial criterion applies; the test is
    one-directional, so the other outcome is Inconclusive."""
    if is_palindromic_up_to_shift(gamma_minus(spec)):
        return Orderedness.INCONCLUSIVE
    return Orderedness.ORDERED


def ljk_equivalence_classes(m: int) -> List[List[Twist]]:
    """Group the twist links with j + k = m (j <= k) by their negative
    polynomial.  Returns the groups sorted by |j - k|."""
    if m < 2:
        raise ZeroParameter(f"need m >= 2, got {m}")
    groups: Dict[LaurentPoly, List[Twist]] = {}
    for j in range(1, m // 2 + 1):
        spec = Twist(j, m - j)
        groups.setdefault(gamma_minus(spec), []).append(spec)
    return sorted(groups.values(), key=lambda grp: abs(grp[0].j - grp[0].k))


# ---------------------------------------------------------------------------
# enumeration grids


def rational_specs(max_n: int, max_param: int, min_n: int = 0) -> Iterator[Rational]:
    """All unflyped rational vectors with min_n <= n <= max_n and
    parameters in 1..max_param."""
    for n in range(min_n, max_n + 1):
        for w in product(range(1, max_param + 1), repeat=n + 1):
            for k in product(range(1, max_param + 1), repeat=n):
                yield Rational(tuple(w), tuple(k))


def twist_specs(max_j: int, max_k: Optional[int] = None) -> Iterator[Twist]:
    if max_k is None:
        max_k = max_j
    for j in range(1, max_j + 1):
        for k in range(1, max_k + 1):
            yield Twist(j, k)


def default_grid() -> List[LinkSpec]:
    """The standard verification grid: rational vectors with n <= 2 and
    parameters <= 2, plus twist links with j, k <= 4."""
    specs: List[LinkSpec] = list(rational_specs(2, 2))
    specs.extend(twist_specs(4))
    return specs

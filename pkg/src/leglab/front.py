"""Plat event words: the combinatorial model of Legendrian front diagrams.

A front is a left-to-right sequence of events acting on horizontal
strand positions (counted from the top, starting at 1):

* ``LeftCusp(i)``  -- inserts two new strands at positions i, i+1
* ``RightCusp(i)`` -- closes the strands at positions i, i+1
* ``Crossing(i)``  -- swaps the strands at positions i, i+1

Text form: whitespace-separated tokens ``LC i | RC i | X i``, e.g.
``LC 1 RC 1`` is the smallest closed front (one "eye").

Conventions fixed here and used by every downstream module:

* at a crossing the strand coming from position i (the one going
  down-right) is the over-strand -- in a front the less-steep strand
  passes in front;
* each component is oriented so the upper branch of its earliest left
  cusp is traversed rightward;
* branches are the maximal cusp-free arcs.  In a plat word every
  branch is x-monotone: born at one left cusp, dead at one right
  cusp, so branch ids double as strand ids during the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    InconsistentIndices,
    InconsistentPotential,
    InvalidDiagram,
    NoSuchComponent,
)

__all__ = [
    "LeftCusp",
    "RightCusp",
    "Crossing",
    "Event",
    "FrontDiagram",
    "ComponentLabeling",
    "Branch",
    "MaslovPotential",
    "validate",
    "components",
    "classical_invariants",
    "branches",
    "branch_index",
    "maslov_potential",
    "grading",
    "parse_event_word",
    "render_event_word",
    "mirror",
]


@dataclass(frozen=True)
class LeftCusp:
    slot: int


@dataclass(frozen=True)
class RightCusp:
    slot: int


@dataclass(frozen=True)
class Crossing:
    slot: int


Event = Union[LeftCusp, RightCusp, Crossing]


@dataclass(frozen=True)
class FrontDiagram:
    """An immutable plat event word."""

    events: Tuple[Event, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))

    # Convenience accessors (all derived from the cached sweep).

    def strand_count(self, gap: int) -> int:
        return len(_trace(self).occupancy[gap])

    def branch_at(self, gap: int, position: int) -> int:
        """Branch id occupying `position` (1-based from top) in `gap`."""
        return _trace(self).occupancy[gap][position - 1]

    @property
    def num_gaps(self) -> int:
        return len(self.events) + 1

    def crossing_events(self) -> Tuple[int, ...]:
        return tuple(t for t, ev in enumerate(self.events) if isinstance(ev, Crossing))

    def right_cusp_events(self) -> Tuple[int, ...]:
        return tuple(t for t, ev in enumerate(self.events) if isinstance(ev, RightCusp))

    def left_cusp_events(self) -> Tuple[int, ...]:
        return tuple(t for t, ev in enumerate(self.events) if isinstance(ev, LeftCusp))


@dataclass(frozen=True)
class ComponentLabeling:
    """Component ids for every (gap, strand position) of a diagram.

    For 2-component links the id convention is: component 1 is the one
    containing the topmost strand at the leftmost gap where both
    components are present (the upper component of the figures);
    otherwise ids follow first-appearance order.
    """

    component_of: Mapping[Tuple[int, int], int]
    branch_component: Mapping[int, int]
    num_components: int


@dataclass(frozen=True)
class Branch:
    """A maximal cusp-free arc: born at event `birth_event` (a left
    cusp), dead at `death_event` (a right cusp)."""

    id: int
    component: int
    birth_event: int
    death_event: int


@dataclass(frozen=True)
class MaslovPotential:
    """A Maslov potential: integer per branch, upper = lower + 1 at
    every cusp, plus the per-component base offsets that produced it."""

    mu: Mapping[int, int]
    base_offsets: Tuple[int, ...]


# ---------------------------------------------------------------------------
# sweep


class _Trace:
    """Everything derivable in one left-to-right sweep of a valid word."""

    __slots__ = (
        "occupancy",
        "branch_ids",
        "birth",
        "death",
        "cusps",
        "crossings",
        "branch_component",
        "num_components",
        "direction",
        "up_cusps",
        "down_cusps",
    )

    def __init__(self) -> None:
        self.occupancy: List[Tuple[int, ...]] = [()]
        self.branch_ids: List[int] = []
        self.birth: Dict[int, int] = {}
        self.death: Dict[int, int] = {}
        # cusps: (event_index, kind, upper_branch, lower_branch)
        self.cusps: List[Tuple[int, str, int, int]] = []
        # crossings: (event_index, over_branch, under_branch)
        self.crossings: List[Tuple[int, int, int]] = []
        self.branch_component: Dict[int, int] = {}
        self.num_components: int = 0
        self.direction: Dict[int, str] = {}
        self.up_cusps: Dict[int, int] = {}
        self.down_cusps: Dict[int, int] = {}


def validate(d: FrontDiagram) -> List[str]:
    """Check the event-word invariants; an empty list means valid."""
    problems: List[str] = []
    if not d.events:
        return ["diagram is empty"]
    n = 0
    for t, ev in enumerate(d.events):
        i = ev.slot
        if isinstance(ev, LeftCusp):
            if not 1 <= i <= n + 1:
                problems.append(f"event {t}: left cusp slot {i} out of range 1..{n + 1}")
                return problems
            n += 2
        elif isinstance(ev, RightCusp):
            if not 1 <= i <= n - 1:
                problems.append(f"event {t}: right cusp slot {i} out of range 1..{n - 1}")
                return problems
            n -= 2
        elif isinstance(ev, Crossing):
            if not 1 <= i <= n - 1:
                problems.append(f"event {t}: crossing slot {i} out of range 1..{n - 1}")
                return problems
        else:  # pragma: no cover - guarded by typing
            problems.append(f"event {t}: unknown event {ev!r}")
            return problems
    if n != 0:
        problems.append(f"strand count ends at {n}, expected 0")
    return problems


@lru_cache(maxsize=None)
def _trace(d: FrontDiagram) -> _Trace:
    problems = validate(d)
    if problems:
        raise InvalidDiagram("; ".join(problems))

    tr = _Trace()
    cur: List[int] = []
    next_bid = 0
    for t, ev in enumerate(d.events):
        i = ev.slot
        if isinstance(ev, LeftCusp):
            upper, lower = next_bid, next_bid + 1
            next_bid += 2
            tr.branch_ids.extend((upper, lower))
            tr.birth[upper] = t
            tr.birth[lower] = t
            cur[i - 1 : i - 1] = [upper, lower]
            tr.cusps.append((t, "LC", upper, lower))
        elif isinstance(ev, RightCusp):
            upper, lower = cur[i - 1], cur[i]
            tr.death[upper] = t
            tr.death[lower] = t
            del cur[i - 1 : i + 1]
            tr.cusps.append((t, "RC", upper, lower))
        else:
            over, under = cur[i - 1], cur[i]
            cur[i - 1], cur[i] = under, over
            tr.crossings.append((t, over, under))
        tr.occupancy.append(tuple(cur))

    _label_components(tr)
    _orient(tr)
    return tr


def _label_components(tr: _Trace) -> None:
    # Union-find over branch ids; every cusp glues its two branches.
    parent = {b: b for b in tr.branch_ids}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, _, upper, lower in tr.cusps:
        parent[find(upper)] = find(lower)

    roots_in_birth_order: List[int] = []
    for b in tr.branch_ids:  # branch ids are already in birth order
        r = find(b)
        if r not in roots_in_birth_order:
            roots_in_birth_order.append(r)
    tr.num_components = len(roots_in_birth_order)

    cid_of_root = {r: i for i, r in enumerate(roots_in_birth_order)}
    if tr.num_components == 2:
        # Component 1 = the one holding the top strand at the leftmost
        # gap where both components are present.
        top_root = None
        for occ in tr.occupancy:
            present = {find(b) for b in occ}
            if len(present) == 2:
                top_root = find(occ[0])
                break
        if top_root is not None:
            other = next(r for r in roots_in_birth_order if r != top_root)
            cid_of_root = {top_root: 1, other: 0}
    for b in tr.branch_ids:
        tr.branch_component[b] = cid_of_root[find(b)]


def _orient(tr: _Trace) -> None:
    # Walk each component once, alternating east/west along branches,
    # starting eastward on the upper branch of its earliest left cusp.
    left_partner: Dict[int, int] = {}
    right_partner: Dict[int, int] = {}
    is_upper_at_left: Dict[int, bool] = {}
    is_upper_at_right: Dict[int, bool] = {}
    for _, kind, upper, lower in tr.cusps:
        if kind == "LC":
            left_partner[upper] = lower
            left_partner[lower] = upper
            is_upper_at_left[upper] = True
            is_upper_at_left[lower] = False
        else:
            right_partner[upper] = lower
            right_partner[lower] = upper
            is_upper_at_right[upper] = True
            is_upper_at_right[lower] = False

    for cid in range(tr.num_components):
        tr.up_cusps[cid] = 0
        tr.down_cusps[cid] = 0
        members = [b for b in tr.branch_ids if tr.branch_component[b] == cid]
        start = min(members, key=lambda b: (tr.birth[b], not is_upper_at_left[b]))
        b, going = start, "E"
        while True:
            tr.direction[b] = going
            if going == "E":
                # Arrive at the branch's right cusp, turn around.
                if is_upper_at_right[b]:
                    tr.down_cusps[cid] += 1
                else:
                    tr.up_cusps[cid] += 1
                b, going = right_partner[b], "W"
            else:
                if is_upper_at_left[b]:
                    tr.down_cusps[cid] += 1
                else:
                    tr.up_cusps[cid] += 1
                b, going = left_partner[b], "E"
            if b == start and going == "E":
                break


# ---------------------------------------------------------------------------
# public operations


def components(d: FrontDiagram) -> ComponentLabeling:
    """Label every (gap, position) with its component id."""
    tr = _trace(d)
    table: Dict[Tuple[int, int], int] = {}
    for gap, occ in enumerate(tr.occupancy):
        for pos0, b in enumerate(occ):
            table[(gap, pos0 + 1)] = tr.branch_component[b]
    return ComponentLabeling(table, dict(tr.branch_component), tr.num_components)


def _check_component(tr: _Trace, c: int) -> None:
    if not 0 <= c < tr.num_components:
        raise NoSuchComponent(f"component {c} (diagram has {tr.num_components})")


def classical_invariants(d: FrontDiagram, c: int) -> Tuple[int, int]:
    """Thurston-Bennequin and rotation numbers of component ``c``.

    tb = writhe of the component's self-crossings minus its right-cusp
    count; rot = (down cusps - up cusps)/2 under the fixed orientation.
    """
    tr = _trace(d)
    _check_component(tr, c)
    writhe = 0
    for _, over, under in tr.crossings:
        if tr.branch_component[over] == c and tr.branch_component[under] == c:
            writhe += 1 if tr.direction[over] == tr.direction[under] else -1
    right_cusps = sum(
        1 for _, kind, upper, _ in tr.cusps
        if kind == "RC" and tr.branch_component[upper] == c
    )
    tb = writhe - right_cusps
    rot = (tr.down_cusps[c] - tr.up_cusps[c]) // 2
    return tb, rot


def branches(d: FrontDiagram, c: int) -> Tuple[List[Branch], List[Tuple[int, int]]]:
    """Branches of component ``c`` plus the cusp adjacency.

    Each returned edge is an (upper, lower) branch-id pair meeting at a
    cusp; the upper branch is the greater one in the branch order, and
    its index exceeds the lower one's by exactly 1.
    """
    tr = _trace(d)
    _check_component(tr, c)
    out = [
        Branch(b, c, tr.birth[b], tr.death[b])
        for b in tr.branch_ids
        if tr.branch_component[b] == c
    ]
    edges = [
        (upper, lower)
        for _, _, upper, lower in tr.cusps
        if tr.branch_component[upper] == c
    ]
    return out, edges


def _solve_unit_steps(
    nodes: Sequence[int], edges: Sequence[Tuple[int, int]], anchor: int, error: type
) -> Dict[int, int]:
    # Assign integers with value(upper) = value(lower) + 1 along every
    # edge, anchored at value(anchor) = 0; `error` on any cycle conflict.
    value = {anchor: 0}
    incident: Dict[int, List[Tuple[int, int]]] = {n: [] for n in nodes}
    for upper, lower in edges:
        incident[upper].append((lower, -1))
        incident[lower].append((upper, +1))
    queue = [anchor]
    while queue:
        node = queue.pop()
        for other, step in incident[node]:
            want = value[node] + step
            if other in value:
                if value[other] != want:
                    raise error(
                        f"branch {other}: conflicting values {value[other]} and {want}"
                    )
            else:
                value[other] = want
                queue.append(other)
    missing = [n for n in nodes if n not in value]
    if missing:
        raise error(f"branches {missing} not reachable from anchor {anchor}")
    return value


def branch_index(d: FrontDiagram, c: int, initial_branch: int) -> Dict[int, int]:
    """Integer branch labels of component ``c``: the initial branch gets
    0 and every cusp's upper branch exceeds its lower one by 1."""
    tr = _trace(d)
    _check_component(tr, c)
    members, edges = branches(d, c)
    ids = [b.id for b in members]
    if initial_branch not in ids:
        raise NoSuchComponent(f"branch {initial_branch} is not on component {c}")
    return _solve_unit_steps(ids, edges, initial_branch, InconsistentIndices)


def maslov_potential(
    d: FrontDiagram, base_offsets: Optional[Sequence[int]] = None
) -> MaslovPotential:
    """Solve for a Maslov potential, one anchor per component.

    Each component's first-born branch is anchored at 0, then the
    component's base offset is added everywhere.  Components with a
    cusp cycle admitting no consistent potential (nonzero rotation
    number) raise InconsistentPotential.
    """
    tr = _trace(d)
    if base_offsets is None:
        base_offsets = (0,) * tr.num_components
    offsets = tuple(int(o) for o in base_offsets)
    if len(offsets) != tr.num_components:
        raise InconsistentPotential(
            f"{len(offsets)} offsets for {tr.num_components} components"
        )
    mu: Dict[int, int] = {}
    for c in range(tr.num_components):
        members, edges = branches(d, c)
        ids = [b.id for b in members]
        solved = _solve_unit_steps(ids, edges, min(ids), InconsistentPotential)
        for b, v in solved.items():
            mu[b] = v + offsets[c]
    return MaslovPotential(mu, offsets)


def grading(d: FrontDiagram, pot: MaslovPotential) -> Dict[int, int]:
    """Degrees of crossings and right cusps, keyed by event index.

    Right cusps always have degree 1; a crossing's degree is the over
    branch's potential minus the under branch's.
    """
    tr = _trace(d)
    mu = pot.mu
    for t, _, upper, lower in tr.cusps:
        if upper not in mu or lower not in mu:
            raise InconsistentPotential(f"potential missing branches of cusp at event {t}")
        if mu[upper] != mu[lower] + 1:
            raise InconsistentPotential(
                f"cusp at event {t}: mu({upper})={mu[upper]} is not mu({lower})+1"
            )
    degrees: Dict[int, int] = {}
    for t, kind, _, _ in tr.cusps:
        if kind == "RC":
            degrees[t] = 1
    for t, over, under in tr.crossings:
        degrees[t] = mu[over] - mu[under]
    return degrees


# ---------------------------------------------------------------------------
# text format


def parse_event_word(text: str) -> FrontDiagram:
    """Parse ``LC i | RC i | X i`` tokens (commas tolerated)."""
    kinds = {"LC": LeftCusp, "RC": RightCusp, "X": Crossing}
    tokens = text.replace(",", " ").split()
    events: List[Event] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in kinds:
            if i + 1 >= len(tokens):
                raise InvalidDiagram(f"dangling event kind {tok!r}")
            try:
                slot = int(tokens[i + 1])
            except ValueError:
                raise InvalidDiagram(f"bad slot {tokens[i + 1]!r} after {tok}") from None
            events.append(kinds[tok](slot))
            i += 2
        else:
            # fused form like "LC1"
            for kind in ("LC", "RC", "X"):
                if tok.startswith(kind) and tok[len(kind):].isdigit():
                    events.append(kinds[kind](int(tok[len(kind):])))
                    break
            else:
                raise InvalidDiagram(f"unrecognized token {tok!r}")
            i += 1
    return FrontDiagram(tuple(events))


def render_event_word(d: FrontDiagram) -> str:
    names = {LeftCusp: "LC", RightCusp: "RC", Crossing: "X"}
    return " ".join(f"{names[type(ev)]} {ev.slot}" for ev in d.events)


def mirror(d: FrontDiagram) -> FrontDiagram:
    """Left-right mirror: reverse the word, swapping left and right cusps."""
    flipped: List[Event] = []
    for ev in reversed(d.events):
        if isinstance(ev, LeftCusp):
            flipped.append(RightCusp(ev.slot))
        elif isinstance(ev, RightCusp):
            flipped.append(LeftCusp(ev.slot))
        else:
            flipped.append(ev)
    return FrontDiagram(tuple(flipped))

"""Link differential graded algebra over Z/2 computed from a front diagram.

Generators are the front's crossings and right cusps.  The differential
counts immersed disks with a single positive corner in the resolved
diagram: every right cusp becomes a crossing whose two eastern ends are
joined by a small cap, every left cusp is a smooth western nose, and at
each crossing the strand entering on top descends through the node.

Disks are enumerated by a depth-first sweep of their boundary paths
from east to west.  The search state holds the sheets in which the
boundary crosses the sweep line, each heading east or west with the
disk lying respectively above or below it, together with the already
swept boundary arcs and their letters.  Sheets are born in pairs at the
positive corner and around caps, pass through or corner around crossing
nodes -- each corner contributes one letter, and no quadrant corners
twice -- and are joined in pairs at noses, where the boundary circle may
finally close.  Every region of the diagram must stay covered with
nonnegative multiplicity throughout, closing the circle early is
rejected, the boundary must turn through exactly one counterclockwise
revolution -- a quarter turn per corner of the positive wedge and of
every cap or nose wrap, counted with sign -- and a completed sweep
reads the disk's word off the circle starting at the positive corner.  Right cusps carry the usual extra
unit term, and the degenerate empty-interior disk of a cusp is not
counted on top of it.  With these conventions the one-eye unknot has a
single generator c with del(c) = 1 (hence no augmentation), while the
plat trefoil has exactly five graded augmentations.

Words are stored as tuples of generator ids; the empty tuple is the
unit.  The zero differential is an empty collection of words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from . import _gf2
from . import front as fr
from . import laurent
from .errors import (
    AugmentationSearchLimit,
    DiskSearchLimit,
    DSquaredNonzero,
    InvalidAugmentation,
    TwoComponentsRequired,
    ZeroPolynomial,
)

__all__ = [
    "Generator",
    "LinkDGA",
    "Augmentation",
    "LinearizedComplex",
    "SplitPolynomials",
    "build_dga",
    "enumerate_augmentations",
    "linearized_complex",
    "chi_polynomials",
]

Word = Tuple[str, ...]


@dataclass(frozen=True)
class Generator:
    """One DGA generator: a crossing or a right cusp of the front."""

    id: str
    kind: str  # "crossing" | "right_cusp"
    degree: int
    over_component: int
    under_component: int
    event: int  # event index in the source diagram


@dataclass(frozen=True)
class Augmentation:
    """A Z/2 point of the DGA: generator id -> 0/1, killed by del."""

    values: Mapping[str, int]

    def __call__(self, gen_id: str) -> int:
        return self.values[gen_id]


@dataclass(frozen=True)
class LinkDGA:
    """The free Z/2 algebra on the generators with its differential.

    ``differential`` maps a generator id to the words of its boundary;
    a word is a tuple of generator ids and the empty tuple is the unit.
    ``unit_elements`` names the per-component idempotents e_i that
    replace the unit in the diagonal blocks of the split theory.
    """

    diagram: fr.FrontDiagram
    generators: Tuple[Generator, ...]
    differential: Mapping[str, Tuple[Word, ...]]
    num_components: int
    unit_elements: Tuple[str, ...]
    by_id: Mapping[str, Generator] = field(repr=False, default=None)  # type: ignore[assignment]

    def part(self, gen_id: str) -> Tuple[int, int]:
        g = self.by_id[gen_id]
        return (g.over_component, g.under_component)


@dataclass(frozen=True)
class LinearizedComplex:
    """One block of the augmentation-twisted linear differential."""

    part: Tuple[int, int]
    basis: Tuple[str, ...]
    degrees: Mapping[str, int]
    matrix: Mapping[str, Tuple[str, ...]]  # basis id -> image basis ids


@dataclass(frozen=True)
class SplitPolynomials:
    """Component-split homology polynomials for one augmentation."""

    chi: Mapping[Tuple[int, int], laurent.LaurentPoly]
    chi_minus_normalized: laurent.LaurentPoly


# ---------------------------------------------------------------------------
# resolution graph
#
# Attachment points are ("nu"|"nl", t) for the two stubs of a left-cusp
# nose and ("nw"|"sw"|"ne"|"se", t) for the four ports of a crossing or
# right-cusp node.  Every arc joins a western attachment (a nose stub or
# an eastern port of a crossing) to an eastern attachment (a western
# port of some node).  Right-cusp nodes have no eastern arcs: their two
# eastern ports are joined by the cap, handled in the sweep itself.
# ---------------------------------------------------------------------------

Attachment = Tuple[str, int]


class _Resolution:
    def __init__(self, d: fr.FrontDiagram) -> None:
        arcs: List[List[Optional[Attachment]]] = []
        east_of: Dict[Attachment, int] = {}  # west attachment -> arc
        west_of: Dict[Attachment, int] = {}  # east attachment -> arc
        node_kind: Dict[int, str] = {}
        occupancy: List[Tuple[int, ...]] = [()]
        pending: List[int] = []  # open arc ids, top to bottom

        def open_arc(att: Attachment) -> int:
            aid = len(arcs)
            arcs.append([att, None])
            east_of[att] = aid
            return aid

        def close_arc(aid: int, att: Attachment) -> None:
            arcs[aid][1] = att
            west_of[att] = aid

        for t, ev in enumerate(d.events):
            i = ev.slot
            if isinstance(ev, fr.LeftCusp):
                pending[i - 1 : i - 1] = [open_arc(("nu", t)), open_arc(("nl", t))]
            elif isinstance(ev, fr.Crossing):
                node_kind[t] = "x"
                close_arc(pending[i - 1], ("nw", t))
                close_arc(pending[i], ("sw", t))
                pending[i - 1] = open_arc(("ne", t))
                pending[i] = open_arc(("se", t))
            else:  # right cusp: the cap needs no arc
                node_kind[t] = "rc"
                close_arc(pending[i - 1], ("nw", t))
                close_arc(pending[i], ("sw", t))
                del pending[i - 1 : i + 1]
            occupancy.append(tuple(pending))

        self.arcs = [(a[0], a[1]) for a in arcs]
        self.east_of = east_of
        self.west_of = west_of
        self.node_kind = node_kind
        self.occupancy = occupancy


# A sweep state is (sheets, mate, tails, heads, cornered, closed,
# nletters, turning, chi):
#
#   sheets   sheet id -> (arc id, direction); +1 heads east, -1 west.
#            A sheet is one crossing of the boundary circle with the
#            sweep line; the disk lies above eastbound sheets and below
#            westbound ones.
#   mate     sheet id -> sheet id, pairing the two sheets that bound one
#            vertical slice of the disk: the westbound sheet on top, the
#            eastbound one underneath, always strictly in that order.
#   tails    tail sheet id -> (head sheet id, word).  Every swept arc of
#            the circle runs from an eastbound sheet to a westbound one,
#            carrying its letters in circle order.  The marker -1 stands
#            for the positive corner.
#   heads    head sheet id -> tail sheet id, the inverse index.
#   cornered frozen set of (event, quadrant): no quadrant corners twice.
#   closed   the full cyclic word once the circle has closed, else None.
#   nletters running letter count, checked against the corner budget.
#   turning  quarter turns of the boundary so far: +4 at the positive
#            corner and at every inward wrap of a cap or nose, -4 at
#            every outward one.  A disk boundary turns through one full
#            counterclockwise revolution, a total of 8.
#   chi      slice births and deaths minus slice splits and merges.  The
#            swept surface deformation-retracts onto the graph of its
#            slices, so it is a disk exactly when the boundary is a
#            single circle and this count ends at 2.

_MARKER = -1

_State = Tuple[
    Dict[int, Tuple[int, int]],
    Dict[int, int],
    Dict[int, Tuple[int, Word]],
    Dict[int, int],
    frozenset,
    Optional[Tuple[int, ...]],
    int,
    int,
    int,
]


def _disk_words(res: _Resolution, start: int, max_corners: int) -> List[Word]:
    """All boundary words of disks whose positive corner sits at ``start``.

    Words are event-index tuples here; parity of identical words is
    taken mod 2.  The sweep walks the events east to west, carrying the
    slice structure of every disk candidate across each gap: the
    boundary sheets together with their pairing into vertical slices.
    A slice always keeps its westbound sheet strictly above its
    eastbound one, which rejects pinched or inverted surfaces the
    moment they appear.
    """

    num_events = len(res.occupancy) - 1
    pos_in: List[Dict[int, int]] = [
        {a: i for i, a in enumerate(row)} for row in res.occupancy
    ]
    found: Dict[Tuple[int, ...], int] = {}
    budget = [10_000_000]
    fresh = itertools.count()

    # Every boundary sheet is eventually consumed at a nose, so a sheet
    # sitting on an arc from which no nose is reachable (moving west,
    # through passes and corners) dooms its whole state.  Tabulate, per
    # gap, which (arc, direction) pairs can still reach one.
    alive: List[Dict[Tuple[int, int], bool]] = [
        {} for _ in range(num_events + 1)
    ]
    for g in range(1, num_events + 1):
        e = g - 1
        kind = res.node_kind.get(e)
        row, prev = alive[g], alive[e]
        for arc in res.occupancy[g]:
            if kind == "lc" and arc in (
                res.east_of[("nu", e)],
                res.east_of[("nl", e)],
            ):
                row[(arc, +1)] = row[(arc, -1)] = True
            elif kind == "x" and arc == res.east_of[("ne", e)]:
                nw = res.west_of[("nw", e)]
                sw = res.west_of[("sw", e)]
                row[(arc, +1)] = prev.get((sw, +1), False) or prev.get(
                    (nw, +1), False
                )
                row[(arc, -1)] = prev.get((sw, -1), False)
            elif kind == "x" and arc == res.east_of[("se", e)]:
                nw = res.west_of[("nw", e)]
                sw = res.west_of[("sw", e)]
                row[(arc, +1)] = prev.get((nw, +1), False)
                row[(arc, -1)] = prev.get((nw, -1), False) or prev.get(
                    (sw, -1), False
                )
            else:
                row[(arc, +1)] = prev.get((arc, +1), False)
                row[(arc, -1)] = prev.get((arc, -1), False)

    def slices_ok(
        sheets: Dict[int, Tuple[int, int]],
        mate: Dict[int, int],
        sids: Iterable[int],
        gap: int,
    ) -> bool:
        pos = pos_in[gap]
        for sid in sids:
            arc_a, dir_a = sheets[sid]
            arc_b, _ = sheets[mate[sid]]
            top, bot = (arc_a, arc_b) if dir_a < 0 else (arc_b, arc_a)
            if pos[top] >= pos[bot]:
                return False
        return True

    def join(
        sheets: Dict[int, Tuple[int, int]],
        tails: Dict[int, Tuple[int, Word]],
        heads: Dict[int, int],
        closed: Optional[Tuple[int, ...]],
        head_sid: int,
        tail_sid: int,
    ) -> Optional[Tuple[Dict, Dict, Dict, Optional[Tuple[int, ...]]]]:
        # At a nose the swept arc ending in one sheet is spliced to the
        # arc leaving the other.  When they are the same arc the circle
        # closes, which is only a disk boundary if nothing else is left.
        a_tail = heads.pop(head_sid)
        b_head, b_word = tails.pop(tail_sid)
        del sheets[head_sid]
        del sheets[tail_sid]
        if a_tail == tail_sid:
            if closed is not None or sheets:
                return None
            return sheets, tails, heads, b_word
        _, a_word = tails[a_tail]
        tails[a_tail] = (b_head, a_word + b_word)
        heads[b_head] = a_tail
        return sheets, tails, heads, closed

    def expand_crossing(t: int, state: _State) -> Iterable[_State]:
        sheets, mate, tails, heads, cornered, closed, nletters, turning, chi = state
        ne = res.east_of[("ne", t)]
        se = res.east_of[("se", t)]
        nw = res.west_of[("nw", t)]
        sw = res.west_of[("sw", t)]

        movers = [sid for sid, (arc, _) in sheets.items() if arc in (ne, se)]
        choices = []
        for sid in movers:
            arc, direction = sheets[sid]
            if arc == ne and direction > 0:
                choices.append(((sw, +1, None), (nw, +1, "n")))
            elif arc == ne:
                choices.append((((sw, -1, None),)))
            elif direction < 0:
                choices.append(((nw, -1, None), (sw, -1, "s")))
            else:
                choices.append(((nw, +1, None),))

        for combo in itertools.product(*choices):
            quads = [q for (_, _, q) in combo if q]
            if len(quads) != len(set(quads)) or any(
                (t, q) in cornered for q in quads
            ):
                continue
            n2 = nletters + len(quads)
            if n2 > max_corners:
                raise DiskSearchLimit(
                    "boundary search exceeded %d corners at event %d"
                    % (max_corners, start)
                )
            s2 = dict(sheets)
            t2 = dict(tails)
            h2 = dict(heads)
            for sid, (arc, direction, quad) in zip(movers, combo):
                s2[sid] = (arc, direction)
                if quad is None:
                    continue
                if direction > 0:  # an eastbound sheet tails its arc
                    head, word = t2[sid]
                    t2[sid] = (head, (t,) + word)
                else:  # a westbound sheet heads its arc
                    tail = h2[sid]
                    head, word = t2[tail]
                    t2[tail] = (head, word + (t,))
            c2 = cornered.union((t, q) for q in quads)
            m2, turn2, chi2 = mate, turning, chi
            touched = list(movers)
            if t == start:
                if closed is not None:
                    continue
                s_head = next(fresh)
                s_tail = next(fresh)
                s2[s_head] = (nw, -1)
                s2[s_tail] = (sw, +1)
                t2[s_tail] = (s_head, (_MARKER,))
                h2[s_head] = s_tail
                m2 = dict(mate)
                m2[s_head] = s_tail
                m2[s_tail] = s_head
                turn2 += 4
                chi2 += 1
                touched.append(s_head)
            if slices_ok(s2, m2, touched, t):
                yield s2, m2, t2, h2, c2, closed, n2, turn2, chi2

    def expand_right_cusp(t: int, state: _State) -> Iterable[_State]:
        sheets, mate, tails, heads, cornered, closed, nletters, turning, chi = state
        nw = res.west_of[("nw", t)]
        sw = res.west_of[("sw", t)]
        pos = pos_in[t]
        if t == start and closed is not None:
            return

        def attach(bspecs, k, s2, m2, t2, h2, turn2, chi2, last_key):
            # Place the remaining birth pairs one at a time.  Each new
            # pair either starts a slice of its own or splits an existing
            # slice around the cap; indistinguishable births take their
            # targets in a fixed order so that every unordered placement
            # is produced exactly once.
            if k == len(bspecs):
                yield s2, m2, t2, h2, turn2, chi2
                return
            nb_arc, nt_arc, word, dturn = bspecs[k]
            same = k > 0 and bspecs[k - 1] == bspecs[k]
            targets: List[Optional[int]] = []
            if pos[nt_arc] < pos[nb_arc]:
                targets.append(None)
            for top, bot in m2.items():
                if s2[top][1] >= 0:
                    continue
                if pos[s2[top][0]] < pos[nb_arc] and pos[nt_arc] < pos[s2[bot][0]]:
                    targets.append(top)
            for target in targets:
                key = -1 if target is None else target
                if same and key < last_key:
                    continue
                nb = next(fresh)
                nt = next(fresh)
                s3 = dict(s2)
                m3 = dict(m2)
                t3 = dict(t2)
                h3 = dict(h2)
                s3[nb] = (nb_arc, +1)
                s3[nt] = (nt_arc, -1)
                t3[nb] = (nt, word)
                h3[nt] = nb
                if target is None:
                    m3[nt] = nb
                    m3[nb] = nt
                    chi3 = chi2 + 1
                else:
                    bot = m3[target]
                    m3[target] = nb
                    m3[nb] = target
                    m3[nt] = bot
                    m3[bot] = nt
                    chi3 = chi2 - 1
                yield from attach(
                    bspecs, k + 1, s3, m3, t3, h3, turn2 + dturn, chi3, key
                )

        # Nothing arrives from the east, but the boundary may wrap the
        # cap: inward wraps cover its wedge and continue around the cusp
        # body, outward wraps pass it north or south, possibly cornering
        # at the node.  An outward wrap's two corner choices are the two
        # ways a disk picks up this cusp as a letter.
        for n_in, n_out in itertools.product(range(3), repeat=2):
            if (n_in or n_out) and closed is not None:
                continue
            corner_menu = (
                ((None, None),)
                if not n_out
                else tuple(itertools.product((None, "n"), (None, "s")))
            )
            for out_corners in itertools.combinations_with_replacement(
                corner_menu, n_out
            ):
                quads = [q for pair in out_corners for q in pair if q]
                if len(quads) != len(set(quads)) or any(
                    (t, q) in cornered for q in quads
                ):
                    continue
                n2 = nletters + len(quads)
                if n2 > max_corners:
                    raise DiskSearchLimit(
                        "boundary search exceeded %d corners at event %d"
                        % (max_corners, start)
                    )
                bspecs = [(nw, sw, (), +4)] * n_in
                for n_quad, s_quad in out_corners:
                    word: Word = ()
                    if n_quad:
                        word = (t,) + word
                    if s_quad:
                        word = word + (t,)
                    bspecs.append(
                        (nw if n_quad else sw, sw if s_quad else nw, word, -4)
                    )
                c2 = cornered.union((t, q) for q in quads)
                for s2, m2, t2, h2, turn2, chi2 in attach(
                    tuple(bspecs),
                    0,
                    dict(sheets),
                    dict(mate),
                    dict(tails),
                    dict(heads),
                    turning,
                    chi,
                    -1,
                ):
                    if t == start:
                        s_head = next(fresh)
                        s_tail = next(fresh)
                        s2[s_head] = (nw, -1)
                        s2[s_tail] = (sw, +1)
                        t2[s_tail] = (s_head, (_MARKER,))
                        h2[s_head] = s_tail
                        m2[s_head] = s_tail
                        m2[s_tail] = s_head
                        turn2 += 4
                        chi2 += 1
                    yield s2, m2, t2, h2, c2, closed, n2, turn2, chi2

    def expand_left_cusp(t: int, state: _State) -> Iterable[_State]:
        sheets, mate, tails, heads, cornered, closed, nletters, turning, chi = state
        nu = res.east_of[("nu", t)]
        nl = res.east_of[("nl", t)]

        upper_w: List[int] = []
        upper_e: List[int] = []
        lower_w: List[int] = []
        lower_e: List[int] = []
        for sid, (arc, direction) in sheets.items():
            if arc == nu:
                (upper_w if direction < 0 else upper_e).append(sid)
            elif arc == nl:
                (lower_w if direction < 0 else lower_e).append(sid)

        # A slice pinching at the nose dies there, so a westbound upper
        # sheet must be mated to an eastbound lower one and that join is
        # forced.  Eastbound upper sheets instead merge their slice with
        # a westbound lower sheet's around the outside of the nose, in
        # any matching.
        if {mate[h] for h in upper_w} != set(lower_e):
            return
        if len(upper_e) != len(lower_w):
            return
        turn2 = turning + 4 * (len(upper_w) - len(upper_e))
        chi2 = chi + len(upper_w) - len(upper_e)
        forced = [(h, mate[h]) for h in upper_w]
        for matching in itertools.permutations(lower_w):
            s2 = dict(sheets)
            m2 = dict(mate)
            t2 = dict(tails)
            h2 = dict(heads)
            closed2 = closed
            parts: Optional[Tuple[Dict, Dict, Dict, Optional[Tuple[int, ...]]]]
            for head_sid, tail_sid in forced:
                parts = join(s2, t2, h2, closed2, head_sid, tail_sid)
                if parts is None:
                    break
                s2, t2, h2, closed2 = parts
                del m2[head_sid]
                del m2[tail_sid]
            else:
                for head_sid, tail_sid in zip(matching, upper_e):
                    top = m2.pop(tail_sid)
                    bot = m2.pop(head_sid)
                    parts = join(s2, t2, h2, closed2, head_sid, tail_sid)
                    if parts is None:
                        break
                    s2, t2, h2, closed2 = parts
                    m2[top] = bot
                    m2[bot] = top
                else:
                    yield s2, m2, t2, h2, cornered, closed2, nletters, turn2, chi2

    def sweep(t: int, state: _State) -> None:
        budget[0] -= 1
        if budget[0] < 0:
            raise DiskSearchLimit(
                "disk sweep explored too many states at event %d" % start
            )
        if t < 0:
            closed, turning, chi = state[5], state[7], state[8]
            if closed is not None and turning == 8 and chi == 2:
                cut = closed.index(_MARKER)
                word = closed[cut + 1 :] + closed[:cut]
                found[word] = found.get(word, 0) ^ 1
            return
        kind = res.node_kind.get(t)
        if kind == "x":
            successors = expand_crossing(t, state)
        elif kind == "rc":
            successors = expand_right_cusp(t, state)
        else:
            successors = expand_left_cusp(t, state)
        live = alive[t]
        for nxt in successors:
            if all(live[s] for s in nxt[0].values()):
                sweep(t - 1, nxt)

    sweep(num_events - 1, ({}, {}, {}, {}, frozenset(), None, 0, 0, 0))

    words = [w for w, parity in found.items() if parity]
    if res.node_kind[start] == "rc":
        # the formal unit of a right cusp; its degenerate empty-interior
        # disk is not counted on top of it
        words = [w for w in words if w] + [()]
    return sorted(words, key=lambda w: (len(w), w))


# ---------------------------------------------------------------------------
# build and verify
# ---------------------------------------------------------------------------


def _verify(dga: LinkDGA) -> None:
    degree = {g.id: g.degree for g in dga.generators}
    tags = {g.id: (g.over_component, g.under_component) for g in dga.generators}

    for gid, words in dga.differential.items():
        over, under = tags[gid]
        for w in words:
            total = sum(degree[x] for x in w)
            if total != degree[gid] - 1:
                raise DSquaredNonzero(
                    "word %r in del(%s) has degree %d, expected %d"
                    % (w, gid, total, degree[gid] - 1)
                )
            chain = [over] + [tags[x][1] for x in w]
            along = [tags[x][0] for x in w] + [under]
            if chain != along:
                raise DSquaredNonzero(
                    "word %r in del(%s) is not composable" % (w, gid)
                )

    # del applied twice must cancel mod 2, by the Leibniz rule
    for gid, words in dga.differential.items():
        parity: Dict[Word, int] = {}
        for w in words:
            for p, letter in enumerate(w):
                for inner in dga.differential[letter]:
                    spliced = w[:p] + inner + w[p + 1 :]
                    parity[spliced] = parity.get(spliced, 0) ^ 1
        bad = [w for w, odd in parity.items() if odd]
        if bad:
            raise DSquaredNonzero(
                "del^2(%s) has %d surviving words, e.g. %r" % (gid, len(bad), bad[0])
            )


def build_dga(
    d: fr.FrontDiagram,
    pot: fr.MaslovPotential,
    labels: Optional[Mapping[int, str]] = None,
    max_disk_corners: int = 64,
) -> LinkDGA:
    """Compute the link DGA of a valid front with one or two components.

    ``labels`` optionally names generators by event index; unnamed
    crossings become q_1, q_2, ... and unnamed right cusps c_1, c_2, ...
    in west-to-east order.  Raises ``DiskSearchLimit`` if some boundary
    walk exceeds ``max_disk_corners`` corners, ``InconsistentPotential``
    if the potential does not grade the diagram, and ``DSquaredNonzero``
    if the computed differential fails any internal check.
    """

    problems = fr.validate(d)
    if problems:
        raise fr.InvalidDiagram("; ".join(problems))
    labeling = fr.components(d)
    if labeling.num_components not in (1, 2):
        raise TwoComponentsRequired(
            "link DGAs are computed for 1 or 2 components, got %d"
            % labeling.num_components
        )
    degrees = fr.grading(d, pot)

    names: Dict[int, str] = {}
    nq = nc = 0
    for t, ev in enumerate(d.events):
        if isinstance(ev, fr.LeftCusp):
            continue
        if labels is not None and t in labels:
            names[t] = labels[t]
        elif isinstance(ev, fr.Crossing):
            nq += 1
            names[t] = "q_%d" % nq
        else:
            nc += 1
            names[t] = "c_%d" % nc
    if len(set(names.values())) != len(names):
        raise fr.InvalidDiagram("generator labels are not distinct")

    generators: List[Generator] = []
    for t, ev in enumerate(d.events):
        if isinstance(ev, fr.LeftCusp):
            continue
        i = ev.slot
        upper = labeling.branch_component[d.branch_at(t, i)]
        if isinstance(ev, fr.Crossing):
            under = labeling.branch_component[d.branch_at(t, i + 1)]
            generators.append(
                Generator(names[t], "crossing", degrees[t], upper, under, t)
            )
        else:
            generators.append(
                Generator(names[t], "right_cusp", degrees[t], upper, upper, t)
            )

    res = _Resolution(d)
    differential = {
        names[t]: tuple(
            tuple(names[s] for s in w)
            for w in _disk_words(res, t, max_disk_corners)
        )
        for t in sorted(names)
    }

    dga = LinkDGA(
        diagram=d,
        generators=tuple(generators),
        differential=differential,
        num_components=labeling.num_components,
        unit_elements=tuple("e_%d" % i for i in range(labeling.num_components)),
        by_id={g.id: g for g in generators},
    )
    _verify(dga)
    return dga


# ---------------------------------------------------------------------------
# augmentations
# ---------------------------------------------------------------------------


def _eps_kills(dga: LinkDGA, values: Mapping[str, int]) -> bool:
    for words in dga.differential.values():
        parity = 0
        for w in words:
            prod = 1
            for letter in w:
                if not values[letter]:
                    prod = 0
                    break
            parity ^= prod
        if parity:
            return False
    return True


def enumerate_augmentations(
    dga: LinkDGA, ungraded: bool = False, max_candidates: int = 1 << 24
) -> List[Augmentation]:
    """All Z/2 augmentations, graded unless ``ungraded`` is set.

    Graded augmentations may only be nonzero on degree-0 generators, so
    the search space is every 0/1 assignment on those; the ungraded
    variant searches assignments on all generators.  Raises
    ``AugmentationSearchLimit`` rather than scanning more than
    ``max_candidates`` assignments.
    """

    free = sorted(
        g.id for g in dga.generators if ungraded or g.degree == 0
    )
    if 1 << len(free) > max_candidates:
        raise AugmentationSearchLimit(
            "2^%d assignments exceed the cap of %d" % (len(free), max_candidates)
        )
    fixed = {g.id: 0 for g in dga.generators if g.id not in set(free)}

    out: List[Augmentation] = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        values = dict(fixed)
        values.update(zip(free, bits))
        if _eps_kills(dga, values):
            out.append(Augmentation(values=values))
    return out


def _check_augmentation(dga: LinkDGA, eps: Augmentation) -> None:
    ids = {g.id for g in dga.generators}
    if set(eps.values) != ids:
        raise InvalidAugmentation("augmentation keys do not match the generators")
    if any(v not in (0, 1) for v in eps.values.values()):
        raise InvalidAugmentation("augmentation values must be 0 or 1")
    if not _eps_kills(dga, eps.values):
        raise InvalidAugmentation("the assignment does not kill the differential")


# ---------------------------------------------------------------------------
# linearization and split polynomials
# ---------------------------------------------------------------------------


def linearized_complex(
    dga: LinkDGA, eps: Augmentation, part: Tuple[int, int]
) -> LinearizedComplex:
    """The (i, j) block of the differential linearized at ``eps``.

    The basis is the generators whose over/under components are exactly
    ``part``; the diagonal blocks also carry the idempotent e_i, an
    isolated degree-0 element.  A word contributes its letter at
    position p when that letter sits in this block and every other
    letter is eps-evaluated to 1.
    """

    _check_augmentation(dga, eps)
    i, j = part
    if not (0 <= i < dga.num_components and 0 <= j < dga.num_components):
        raise InvalidAugmentation(
            "part %r is not valid for %d components" % ((i, j), dga.num_components)
        )

    basis = [g.id for g in dga.generators if dga.part(g.id) == part]
    degrees = {gid: dga.by_id[gid].degree for gid in basis}
    matrix: Dict[str, Tuple[str, ...]] = {}
    for gid in basis:
        image: Dict[str, int] = {}
        for w in dga.differential[gid]:
            for p, letter in enumerate(w):
                if dga.part(letter) != part:
                    continue
                if all(eps.values[x] for k, x in enumerate(w) if k != p):
                    image[letter] = image.get(letter, 0) ^ 1
        matrix[gid] = tuple(sorted(x for x, odd in image.items() if odd))

    if i == j:
        e_name = dga.unit_elements[i]
        basis.append(e_name)
        degrees[e_name] = 0
        matrix[e_name] = ()

    return LinearizedComplex(
        part=part, basis=tuple(basis), degrees=degrees, matrix=matrix
    )


def _betti(cx: LinearizedComplex) -> Dict[int, int]:
    # composing the matrix with itself must vanish before any counting
    for a in cx.basis:
        parity: Dict[str, int] = {}
        for b in cx.matrix[a]:
            for c in cx.matrix[b]:
                parity[c] = parity.get(c, 0) ^ 1
        if any(parity.values()):
            raise DSquaredNonzero(
                "linearized differential does not square to zero at %s" % a
            )

    by_degree: Dict[int, List[str]] = {}
    for gid in cx.basis:
        by_degree.setdefault(cx.degrees[gid], []).append(gid)

    def outgoing_rank(k: int) -> int:
        below = {gid: n for n, gid in enumerate(by_degree.get(k - 1, []))}
        rows = []
        for gid in by_degree.get(k, []):
            row = 0
            for img in cx.matrix[gid]:
                row |= 1 << below[img]
            rows.append(row)
        return _gf2.rank(rows)

    betti: Dict[int, int] = {}
    for k, gens in by_degree.items():
        betti[k] = len(gens) - outgoing_rank(k) - outgoing_rank(k + 1)
    return betti


def chi_polynomials(dga: LinkDGA, eps: Augmentation) -> SplitPolynomials:
    """Poincare polynomials of every split block, with chi^- normalized.

    chi^{i,j} sums betti_k * lambda^k over the block's homology.  For a
    two-component link the (1, 0) block's polynomial, shifted to degree
    zero, is ``chi_minus_normalized``; ``ZeroPolynomial`` is raised if
    that block's homology vanishes outright, and
    ``TwoComponentsRequired`` if the link is a knot.  The diagonal
    blocks include the idempotents e_i and are exploratory.
    """

    parts = [
        (i, j)
        for i in range(dga.num_components)
        for j in range(dga.num_components)
    ]
    chi: Dict[Tuple[int, int], laurent.LaurentPoly] = {}
    for part in parts:
        betti = _betti(linearized_complex(dga, eps, part))
        chi[part] = laurent.from_terms(
            [(k, b) for k, b in betti.items() if b]
        )

    if dga.num_components != 2:
        raise TwoComponentsRequired(
            "chi^- needs a two-component link, got %d component(s)"
            % dga.num_components
        )
    try:
        normalized, _ = laurent.normalize_degree_zero(chi[(1, 0)])
    except ZeroPolynomial:
        raise ZeroPolynomial(
            "the (1, 0) homology vanishes; chi^- cannot be normalized"
        ) from None
    return SplitPolynomials(chi=chi, chi_minus_normalized=normalized)

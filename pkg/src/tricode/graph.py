"""Forty-vertex carry digraph and the closed-walk emptiness argument.

Reading the gain sequence of a pair (a, b) backwards digit by digit traces
a closed walk on a small digraph whose vertices remember the two current
input bits, one older input bit and the carry.  The window law for gains
then becomes a statement about walks: no closed walk can pay out more
weight than its length at every prefix.  This module builds the digraph,
reproduces its frozen arc tables, and searches for such walks directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

from .carry import GainSequence


class Vertex(NamedTuple):
    """Digit-position state: both current input bits, the second input's
    bit from two positions back, and the carry."""

    x: int
    y: int
    z: int
    u: int


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex
    weight: int


MAX_CARRY = 4

#: Vertices with no outgoing arcs.  A walk reaching one of these cannot
#: continue, which is what several case splits below lean on.
TERMINAL_VERTICES = frozenset(
    {Vertex(1, 1, 0, 0), Vertex(1, 0, 1, 0), Vertex(0, 1, 1, 0), Vertex(1, 1, 1, 0)}
)

_ENV1 = frozenset(
    {Vertex(0, 0, 0, 0), Vertex(0, 0, 1, 0), Vertex(0, 1, 0, 0), Vertex(1, 0, 0, 0), Vertex(0, 1, 0, 1)}
)
_ENV2 = _ENV1 | {Vertex(0, 0, 0, 1), Vertex(0, 0, 1, 1), Vertex(1, 0, 0, 1)}
_ENV3 = _ENV2 | {Vertex(1, 0, 1, 1), Vertex(0, 1, 1, 1), Vertex(1, 1, 0, 1)}

#: Nested vertex sets that trap every bounded-deficit expansion; keyed by
#: how far the deficit is allowed to drop below one.
ENVELOPES = {1: _ENV1, 2: _ENV2, 3: _ENV3}


def admits_arc(tail: Vertex, head: Vertex) -> bool:
    """Whether consecutive digit states are compatible.

    The carry recurrence at the tail's position forces
    2u1 - u2 = x1 + y1 + z1 + x2 + z2 - s for a binary output digit s,
    so the combination below must be 0 or 1.  The head's second
    coordinate is unconstrained here; it is pinned two steps later.
    """
    return (tail.x + tail.y + tail.z + head.x + head.z - 2 * tail.u + head.u) in (0, 1)


def arc_weight(tail: Vertex, head: Vertex) -> int:
    """Gain paid out at the tail's digit position."""
    return tail.x + tail.y + tail.z + head.x + head.y + head.z - tail.u - head.u


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    arcs: tuple

    def arcs_from(self, tail: Vertex, exclude_terminal_heads: bool = False):
        out = self._out.get(tail, ())
        if exclude_terminal_heads:
            return tuple(a for a in out if a.head not in TERMINAL_VERTICES)
        return out

    @property
    def _out(self):
        out = self.__dict__.get("_out_cache")
        if out is None:
            out = {}
            for a in self.arcs:
                out.setdefault(a.tail, []).append(a)
            out = {t: tuple(sorted(v)) for t, v in out.items()}
            self.__dict__["_out_cache"] = out
        return out


def build_digraph() -> Digraph:
    vertices = tuple(
        Vertex(x, y, z, u)
        for x in (0, 1)
        for y in (0, 1)
        for z in (0, 1)
        for u in range(MAX_CARRY + 1)
    )
    arcs = tuple(
        Arc(p, q, arc_weight(p, q)) for p in vertices for q in vertices if admits_arc(p, q)
    )
    return Digraph(vertices=vertices, arcs=arcs)


def arc_weight_histogram(digraph: Digraph) -> dict:
    hist = {}
    for a in digraph.arcs:
        hist[a.weight] = hist.get(a.weight, 0) + 1
    return dict(sorted(hist.items()))


def zero_outdegree_vertices(digraph: Digraph) -> tuple:
    tails = {a.tail for a in digraph.arcs}
    return tuple(v for v in digraph.vertices if v not in tails)


def classified_arcs(digraph: Digraph) -> dict:
    """Partition the weight >= 2 arcs three ways.

    Heads in TERMINAL_VERTICES stop a walk outright; the rest split by
    whether the tail sits inside the largest envelope.  Every weight >= 2
    arc lands in exactly one class.
    """
    heads_terminal = []
    tails_outside = []
    tails_inside = []
    for a in digraph.arcs:
        if a.weight < 2:
            continue
        if a.head in TERMINAL_VERTICES:
            heads_terminal.append(a)
        elif a.tail in ENVELOPES[3]:
            tails_inside.append(a)
        else:
            tails_outside.append(a)
    return {
        "heads_terminal": tuple(sorted(heads_terminal)),
        "tails_outside_envelope": tuple(sorted(tails_outside)),
        "tails_inside_envelope": tuple(sorted(tails_inside)),
    }


#: The seventeen tails whose outgoing arcs (terminal heads excluded) have a
#: frozen fixture table.
TABLED_TAILS = (
    Vertex(0, 0, 0, 0),
    Vertex(0, 0, 0, 1),
    Vertex(1, 0, 0, 0),
    Vertex(1, 0, 0, 1),
    Vertex(0, 1, 0, 0),
    Vertex(0, 1, 0, 1),
    Vertex(1, 1, 0, 1),
    Vertex(1, 1, 0, 2),
    Vertex(0, 0, 1, 0),
    Vertex(0, 0, 1, 1),
    Vertex(1, 0, 1, 1),
    Vertex(1, 0, 1, 2),
    Vertex(0, 1, 1, 1),
    Vertex(0, 1, 1, 2),
    Vertex(1, 1, 1, 1),
    Vertex(1, 1, 1, 2),
    Vertex(1, 1, 1, 3),
)


def _format_arc(a: Arc) -> str:
    t, h = a.tail, a.head
    return f"{t.x},{t.y},{t.z},{t.u} -> {h.x},{h.y},{h.z},{h.u} : {a.weight}"


def _parse_arc(line: str) -> Arc:
    lhs, w = line.split(":")
    tail_s, head_s = lhs.split("->")
    tail = Vertex(*(int(v) for v in tail_s.strip().split(",")))
    head = Vertex(*(int(v) for v in head_s.strip().split(",")))
    return Arc(tail, head, int(w.strip()))


def load_arc_fixture(name: str) -> tuple:
    """Read one of the frozen arc lists shipped with the package."""
    text = resources.files("tricode.fixtures").joinpath(name).read_text()
    arcs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        arcs.append(_parse_arc(line))
    return tuple(arcs)


def arc_tables_by_tail(digraph: Digraph) -> dict:
    """Regenerate the per-tail arc tables, terminal heads excluded."""
    return {
        t: tuple(sorted(digraph.arcs_from(t, exclude_terminal_heads=True)))
        for t in TABLED_TAILS
    }


def verify_arc_tables(digraph: Digraph) -> dict:
    """Diff the regenerated tables against every frozen fixture.

    Returns {fixture_name: (ok, missing, extra)} with arc tuples in the
    diffs; all-ok means every fixture is reproduced exactly.
    """
    results = {}

    def diff(name, generated):
        frozen = set(load_arc_fixture(name))
        gen = set(generated)
        results[name] = (
            gen == frozen,
            tuple(sorted(frozen - gen)),
            tuple(sorted(gen - frozen)),
        )

    tables = arc_tables_by_tail(digraph)
    diff("arc_tables_by_tail.txt", [a for arcs in tables.values() for a in arcs])
    classes = classified_arcs(digraph)
    diff("arcs_weight2_heads_terminal.txt", classes["heads_terminal"])
    diff("arcs_weight2_tails_outside_envelope.txt", classes["tails_outside_envelope"])
    diff("arcs_weight2_tails_inside_envelope.txt", classes["tails_inside_envelope"])
    return results


def load_histogram_fixture() -> dict:
    text = resources.files("tricode.fixtures").joinpath("arc_weight_histogram.txt").read_text()
    hist = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        w, c = line.split()
        hist[int(w)] = int(c)
    return hist


def walk_from_carry_data(digraph: Digraph, seq: GainSequence) -> tuple:
    """Closed walk traced by a gain sequence, validated arc by arc.

    Vertex j of the walk packages the digit data at position m-1-j; the
    walk steps toward lower positions and wraps.  Raises AssertionError
    if any step is not an arc of the digraph or its weight differs from
    the gain at that position, so a successful return certifies that the
    digraph faithfully encodes the carry recurrence for this pair.
    """
    m, a, b, c = seq.m, seq.a, seq.b, seq.carries

    def vertex(i):
        i %= m
        return Vertex((a >> i) & 1, (b >> i) & 1, (b >> ((i - 2) % m)) & 1, c[i])

    out = digraph._out
    walk = [vertex(m - 1)]
    for j in range(m):
        tail = vertex(m - 1 - j)
        head = vertex(m - 2 - j)
        arc = Arc(tail, head, arc_weight(tail, head))
        if arc not in out.get(tail, ()):
            raise AssertionError(f"step {j}: {tail} -> {head} is not an arc")
        expected = seq.gains[(m - 1 - j) % m]
        if arc.weight != expected:
            raise AssertionError(f"step {j}: arc weight {arc.weight} != gain {expected}")
        walk.append(head)
    if walk[0] != walk[-1]:
        raise AssertionError("walk failed to close")
    if sum(arc_weight(walk[j], walk[j + 1]) for j in range(m)) != seq.total:
        raise AssertionError("walk weight does not match the gain total")
    return tuple(walk)


@dataclass(frozen=True)
class WalkState:
    """Position in a constrained walk.

    previous_third remembers the z coordinate of the vertex before the
    current one; the next head's y must reproduce it.  The deficit starts
    at 2 and each arc of weight w moves it by 1 - w, so it measures how
    much weight the remaining steps still owe.
    """

    current: Vertex
    previous_third: int | None
    step_index: int
    total_weight: int

    @property
    def deficit(self) -> int:
        return 2 + self.step_index - self.total_weight


def constrained_successors(digraph: Digraph, state: WalkState, require_weight_rule: bool = True):
    """Arcs a constrained walk may take next, with the resulting states."""
    res = []
    for arc in digraph.arcs_from(state.current, exclude_terminal_heads=True):
        if state.previous_third is not None and arc.head.y != state.previous_third:
            continue
        if require_weight_rule and arc.weight < state.deficit:
            continue
        res.append(
            (
                arc,
                WalkState(
                    current=arc.head,
                    previous_third=state.current.z,
                    step_index=state.step_index + 1,
                    total_weight=state.total_weight + arc.weight,
                ),
            )
        )
    return res


def expand_segments(
    digraph: Digraph,
    start: Vertex,
    previous_third: int | None,
    deficit: int,
    cap: int = 100_000,
):
    """Vertices reachable under the weight rule from one starting deficit.

    Explores (vertex, remembered bit, deficit) states exactly; the rule
    w >= deficit keeps the deficit bounded above by 1 after the first
    step, so the expansion is finite.  Returns (frozenset of reached
    vertices, number of states visited).  The start vertex is included
    only if some arc returns to it.
    """
    seen = set()
    stack = [(start, previous_third, deficit)]
    reached = set()
    while stack:
        item = stack.pop()
        if item in seen:
            continue
        seen.add(item)
        if len(seen) > cap:
            raise RuntimeError("expansion exceeded the state cap")
        cur, eta, om = item
        for arc in digraph.arcs_from(cur, exclude_terminal_heads=True):
            if eta is not None and arc.head.y != eta:
                continue
            if arc.weight < om:
                continue
            reached.add(arc.head)
            nxt = (arc.head, cur.z, om + 1 - arc.weight)
            if nxt not in seen:
                stack.append(nxt)
    return frozenset(reached), len(seen)


def search_closed_walks(
    digraph: Digraph,
    max_length: int = 40,
    require_weight_rule: bool = True,
    starts=None,
) -> tuple:
    """Hunt for closed walks that outpay their length at every prefix.

    A walk is admissible when it avoids terminal heads, respects the
    two-step memory constraint, and (under the weight rule) every arc's
    weight covers the current deficit; closing requires returning to the
    start with both wraparound memory constraints satisfied.  The search
    runs breadth-first over exact (vertex, memory, deficit, first-step
    memory) states; deficits below 2 - (w_max - 1) * max_length are
    unreachable within max_length steps, so pruning there loses nothing.
    With the rule off the deficit is dropped from the state, giving a
    finite control search whose witnesses are deduplicated by closing
    state.  Returns the closed walks found, each as a vertex tuple with
    the start repeated at the end.
    """
    wmax = max(a.weight for a in digraph.arcs if a.head not in TERMINAL_VERTICES)
    floor = 2 - (wmax - 1) * max_length
    found = []
    if starts is None:
        starts = [v for v in digraph.vertices if v not in TERMINAL_VERTICES]
    for v0 in starts:
        init = (v0, None, 2 if require_weight_rule else None, None)
        seen = {init}
        parent = {init: None}
        queue = deque([init])
        while queue:
            state = queue.popleft()
            cur, eta, om, first = state
            for arc in digraph.arcs_from(cur, exclude_terminal_heads=True):
                head, w = arc.head, arc.weight
                if eta is not None and head.y != eta:
                    continue
                if om is not None and w < om:
                    continue
                first2 = head.y if first is None else first
                if head == v0 and cur.z == first2:
                    path = [head]
                    back = state
                    while back is not None:
                        path.append(back[0])
                        back = parent[back]
                    found.append(tuple(reversed(path)))
                    continue
                nom = None if om is None else om + 1 - w
                if nom is not None and nom < floor:
                    continue
                nxt = (head, cur.z, nom, first2)
                if nxt not in seen:
                    seen.add(nxt)
                    parent[nxt] = state
                    queue.append(nxt)
    return tuple(found)


def validate_all_carry_walks(digraph: Digraph, m: int) -> int:
    """Trace and validate the walk of every admissible pair at one m.

    Returns the number of pairs checked; raises on the first pair whose
    gain data fails to embed as a closed walk.
    """
    from .carry import gain_sequence

    full = (1 << m) - 1
    checked = 0
    for a in range(full):
        for b in range(full):
            if a == 0 and b == 0:
                continue
            walk_from_carry_data(digraph, gain_sequence(m, a, b))
            checked += 1
    return checked

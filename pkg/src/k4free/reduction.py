"""Degree-<=2 reduction rules, reduced cores, and transversal lifting.

Three size-preserving operations drive everything here:

* delete a vertex of degree at most 1,
* delete a degree-2 vertex whose neighbors are adjacent,
* contract an edge at a degree-2 vertex whose neighbors are not adjacent.

A graph has no K4 minor exactly when these reduce it to the empty graph.
Applying them exhaustively yields the reduced core, unique up to
isomorphism regardless of order; `reduce_core` fixes a deterministic
order so traces and tests are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .graph import Graph


class StepKind(Enum):
    DeleteLowDegree = "D"
    DeleteTriangleDeg2 = "T"
    ContractDeg2 = "C"


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    removed: int
    # For ContractDeg2: (u, v, fresh) where v is the degree-2 vertex that
    # was merged with its neighbor u into the fresh vertex.
    merged_from: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    start: Graph
    end: Graph

    def replay(self) -> Graph:
        """Re-apply the steps to `start`; must reproduce `end`."""
        g = self.start
        for st in self.steps:
            g = apply_step(g, st)
        return g


def _step_for(g: Graph, v: int) -> ReductionStep | None:
    """The applicable reduction step at v, or None if deg(v) > 2."""
    ns = g.neighbors(v)
    if len(ns) <= 1:
        return ReductionStep(StepKind.DeleteLowDegree, v)
    if len(ns) == 2:
        a, b = sorted(ns)
        if g.has_edge(a, b):
            return ReductionStep(StepKind.DeleteTriangleDeg2, v)
        return ReductionStep(StepKind.ContractDeg2, v, (a, v, g.next_id))
    return None


def applicable_steps(g: Graph) -> list[ReductionStep]:
    """All reduction steps applicable to g, ascending by vertex id.

    For ContractDeg2 the contracted neighbor is the smaller-id one, as in
    `reduce_core`.
    """
    out = []
    for v in g.sorted_vertices():
        st = _step_for(g, v)
        if st is not None:
            out.append(st)
    return out


def apply_step(g: Graph, step: ReductionStep) -> Graph:
    v = step.removed
    if step.kind in (StepKind.DeleteLowDegree, StepKind.DeleteTriangleDeg2):
        return g.delete_vertex(v)
    u = step.merged_from[0]
    h, w = g.contract_edge(u, v)
    if w != step.merged_from[2]:
        raise DomainError(f"trace fresh id {step.merged_from[2]} != {w}")
    return h


def reduce_core(g: Graph, rng: random.Random | None = None) -> ReductionTrace:
    """Exhaustively apply the three reduction rules.

    Deterministic by default: the smallest-id eligible vertex is reduced
    first, and a contraction uses its smaller-id neighbor.  Passing an
    `rng` picks a random eligible vertex and random neighbor instead
    (used to test order independence of the core).
    """
    steps = []
    cur = g
    while True:
        if rng is None:
            step = None
            for v in cur.sorted_vertices():
                step = _step_for(cur, v)
                if step is not None:
                    break
        else:
            eligible = [v for v in cur.sorted_vertices() if cur.degree(v) <= 2]
            if not eligible:
                step = None
            else:
                v = rng.choice(eligible)
                step = _step_for(cur, v)
                if step is not None and step.kind is StepKind.ContractDeg2:
                    u = rng.choice(sorted(cur.neighbors(v)))
                    step = ReductionStep(StepKind.ContractDeg2, v, (u, v, cur.next_id))
        if step is None:
            break
        cur = apply_step(cur, step)
        steps.append(step)
    return ReductionTrace(tuple(steps), g, cur)


def is_k4_minor_free(g: Graph) -> bool:
    """True iff the reduction rules take g all the way to the empty graph."""
    return reduce_core(g).end.n == 0


def lift_transversal(trace: ReductionTrace, s_end) -> frozenset[int]:
    """Map a transversal of trace.end back to one of trace.start.

    Replays the steps backwards: deletions change nothing; for a
    contraction that merged u and v (v the degree-2 vertex) into w, a
    selected w is replaced by u.  Deleting u strands v as a pendant, so
    the pre-step remainder is the post-step remainder plus a pendant and
    stays K4-minor-free; picking v instead would leave u with all its
    other edges and is not sound.  The result has the same size and is a
    transversal of the start graph whenever s_end is one of the end graph.
    """
    s = set(s_end)
    for v in s:
        if not trace.end.has_vertex(v):
            raise DomainError(f"vertex {v} not in end graph")
    for st in reversed(trace.steps):
        if st.kind is StepKind.ContractDeg2:
            u, v, w = st.merged_from
            if w in s:
                s.remove(w)
                s.add(u)
    return frozenset(s)


@dataclass(frozen=True)
class DrdWitness:
    """Rounds of per-component deletions interleaved with full reduction."""

    rounds: tuple[frozenset[int], ...]

    @property
    def depth(self) -> int:
        return len(self.rounds)


def _map_forward(trace: ReductionTrace, pending: list[int]) -> list[int]:
    """Track vertices through a reduction: deleted ones drop out, merged
    ones follow the fresh vertex.  Order of first appearance is kept."""
    cur = list(pending)
    for st in trace.steps:
        if st.kind is StepKind.ContractDeg2:
            u, v, w = st.merged_from
            if u in cur or v in cur:
                cur = [x for x in cur if x not in (u, v)]
                cur.append(w)
        else:
            cur = [x for x in cur if x != st.removed]
    return cur


def drd_witness_from_transversal(g: Graph, x) -> DrdWitness:
    """Greedy delete-reduction-depth witness from an ordered transversal.

    Each round removes at most one (mapped) transversal vertex per
    component of the current reduced graph, then reduces again.  The
    witness depth is at most len(x).
    """
    x = list(x)
    trace = reduce_core(g)
    cur = trace.end
    pending = _map_forward(trace, x)
    rounds = []
    while cur.n > 0:
        comps = cur.components()
        chosen = set()
        for comp in comps:
            for v in pending:
                if v in comp:
                    chosen.add(v)
                    break
        if not chosen:
            raise DomainError("vertex list is not a transversal of g")
        pending = [v for v in pending if v not in chosen]
        rounds.append(frozenset(chosen))
        nxt = cur
        for v in sorted(chosen):
            nxt = nxt.delete_vertex(v)
        t = reduce_core(nxt)
        cur = t.end
        pending = _map_forward(t, pending)
    w = DrdWitness(tuple(rounds))
    if w.depth > len(x):
        raise DomainError("witness deeper than the transversal size")
    return w


# -- trace serialization ----------------------------------------------
#
# One step per line: "D v" (low degree delete), "T v" (triangle degree-2
# delete), "C u v w" (contract u and degree-2 vertex v into fresh w).


def format_trace(trace: ReductionTrace) -> str:
    out = []
    for st in trace.steps:
        if st.kind is StepKind.ContractDeg2:
            u, v, w = st.merged_from
            out.append(f"C {u} {v} {w}")
        else:
            out.append(f"{st.kind.value} {st.removed}")
    return "\n".join(out) + ("\n" if out else "")


def parse_trace_steps(text: str) -> tuple[ReductionStep, ...]:
    steps = []
    for ln in text.splitlines():
        if not ln.strip() or ln.lstrip().startswith("#"):
            continue
        parts = ln.split()
        if parts[0] == "C":
            if len(parts) != 4:
                raise DomainError(f"bad trace line: {ln!r}")
            u, v, w = map(int, parts[1:])
            steps.append(ReductionStep(StepKind.ContractDeg2, v, (u, v, w)))
        elif parts[0] in ("D", "T") and len(parts) == 2:
            kind = StepKind.DeleteLowDegree if parts[0] == "D" else StepKind.DeleteTriangleDeg2
            steps.append(ReductionStep(kind, int(parts[1])))
        else:
            raise DomainError(f"bad trace line: {ln!r}")
    return tuple(steps)

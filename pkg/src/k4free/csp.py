"""Max-2-CSP instances, degree-<=2 variable elimination, and the
branch-on-transversal polynomial-space solver.

An instance maximizes

    constant + sum_v unary[v][x_v] + sum_{uv} binary[uv][x_u][x_v]

over assignments x: variables -> {0..r-1}.  A variable of degree at most
2 in the constraint graph can be maxed out and folded into its neighbors'
tables, which solves K4-minor-free constraint graphs outright; otherwise
the solver enumerates all r^|X| assignments of a transversal X and solves
each K4-minor-free remainder, using only polynomial space.

Scores are exact rationals (ints or fractions.Fraction); no floating
point is involved anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .graph import Graph
from .oracle import exact_s
from .potential import greedy_fifth_transversal
from .reduction import is_k4_minor_free

Score = int | Fraction


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CspInstance:
    r: int
    variables: frozenset[int]
    unary: dict[int, tuple[Score, ...]]
    binary: dict[tuple[int, int], tuple[tuple[Score, ...], ...]]
    constant: Score = 0

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"domain size must be >= 1, got {self.r}")
        unary = dict(self.unary)
        for v in self.variables:
            scores = unary.get(v, tuple([0] * self.r))
            if len(scores) != self.r:
                raise DomainError(f"unary table of {v} has wrong length")
            unary[v] = tuple(scores)
        object.__setattr__(self, "unary", unary)
        binary = {}
        for key, table in self.binary.items():
            u, v = key
            if u == v or _pair(u, v) != key:
                raise DomainError(f"binary key {key} must be an ordered pair u < v")
            if u not in self.variables or v not in self.variables:
                raise DomainError(f"binary key {key} uses unknown variable")
            if len(table) != self.r or any(len(row) != self.r for row in table):
                raise DomainError(f"binary table {key} is not {self.r}x{self.r}")
            binary[key] = tuple(tuple(row) for row in table)
        object.__setattr__(self, "binary", binary)

    def constraint_graph(self) -> Graph:
        return Graph.from_edges(self.variables, self.binary.keys())

    def degree(self, v: int) -> int:
        return sum(1 for key in self.binary if v in key)

    def neighbors(self, v: int) -> list[int]:
        return sorted(u for key in self.binary if v in key for u in key if u != v)

    def binary_between(self, u: int, v: int):
        """Score table oriented as rows = values of u, cols = values of v."""
        table = self.binary[_pair(u, v)]
        if u < v:
            return table
        return tuple(tuple(table[b][a] for b in range(self.r)) for a in range(self.r))

    def evaluate(self, values: dict[int, int]) -> Score:
        total = self.constant
        for v in self.variables:
            total += self.unary[v][values[v]]
        for (u, v), table in self.binary.items():
            total += table[values[u]][values[v]]
        return total


@dataclass(frozen=True)
class Assignment:
    values: dict[int, int]
    objective: Score

    def vector(self) -> tuple[int, ...]:
        return tuple(self.values[v] for v in sorted(self.values))


@dataclass(frozen=True)
class ReconstructionRule:
    """Argmax table of an eliminated variable: given the values of its
    (at most two) surviving neighbors, the best value for it."""

    variable: int
    neighbors: tuple[int, ...]
    table: dict[tuple[int, ...], int]

    def choose(self, values: dict[int, int]) -> int:
        return self.table[tuple(values[u] for u in self.neighbors)]


def eliminate_low_degree_variable(
    inst: CspInstance, v: int
) -> tuple[CspInstance, ReconstructionRule]:
    """Fold a degree-<=2 variable into its neighbors' tables.

    The optimum objective is unchanged; argmax choices (ties toward the
    smallest value) are recorded so an optimal value for v can be
    reconstructed from any optimal assignment of the rest.
    """
    if v not in inst.variables:
        raise DomainError(f"unknown variable {v}")
    nbrs = inst.neighbors(v)
    if len(nbrs) > 2:
        raise DomainError(f"variable {v} has degree {len(nbrs)} > 2")
    r = inst.r
    uv = inst.unary[v]
    new_unary = {x: inst.unary[x] for x in inst.variables if x != v}
    new_binary = {k: t for k, t in inst.binary.items() if v not in k}
    constant = inst.constant
    table: dict[tuple[int, ...], int] = {}

    if len(nbrs) == 0:
        best = max(range(r), key=lambda c: (uv[c], -c))
        constant += uv[best]
        table[()] = best
    elif len(nbrs) == 1:
        u = nbrs[0]
        t_uv = inst.binary_between(u, v)
        folded = []
        for a in range(r):
            best = max(range(r), key=lambda c: (uv[c] + t_uv[a][c], -c))
            table[(a,)] = best
            folded.append(inst.unary[u][a] + uv[best] + t_uv[a][best])
        new_unary[u] = tuple(folded)
    else:
        u, w = nbrs
        t_uv = inst.binary_between(u, v)
        t_vw = inst.binary_between(v, w)
        old = inst.binary.get(_pair(u, w))
        folded = [[0] * r for _ in range(r)]
        for a in range(r):
            for b in range(r):
                best = max(range(r), key=lambda c: (uv[c] + t_uv[a][c] + t_vw[c][b], -c))
                table[(a, b)] = best
                add = uv[best] + t_uv[a][best] + t_vw[best][b]
                if u < w:
                    base = old[a][b] if old else 0
                    folded[a][b] = base + add
                else:
                    base = old[b][a] if old else 0
                    folded[b][a] = base + add
        new_binary[_pair(u, w)] = tuple(tuple(row) for row in folded)

    reduced = CspInstance(
        r,
        inst.variables - {v},
        new_unary,
        new_binary,
        constant,
    )
    return reduced, ReconstructionRule(v, tuple(nbrs), table)


def solve_treewidth2(inst: CspInstance) -> Assignment:
    """Optimal assignment when the constraint graph is K4-minor-free."""
    if not is_k4_minor_free(inst.constraint_graph()):
        raise DomainError("constraint graph has a K4 minor")
    rules = []
    cur = inst
    while cur.variables:
        v = min(x for x in cur.variables if cur.degree(x) <= 2)
        cur, rule = eliminate_low_degree_variable(cur, v)
        rules.append(rule)
    values: dict[int, int] = {}
    for rule in reversed(rules):
        values[rule.variable] = rule.choose(values)
    return Assignment(values, inst.evaluate(values))


def _fix_variable(inst: CspInstance, v: int, value: int) -> CspInstance:
    """Condition on v = value: fold its tables into neighbors/constant."""
    constant = inst.constant + inst.unary[v][value]
    new_unary = {}
    for x in inst.variables:
        if x == v:
            continue
        scores = inst.unary[x]
        if _pair(x, v) in inst.binary:
            t = inst.binary_between(x, v)
            scores = tuple(scores[a] + t[a][value] for a in range(inst.r))
        new_unary[x] = scores
    new_binary = {k: t for k, t in inst.binary.items() if v not in k}
    return CspInstance(inst.r, inst.variables - {v}, new_unary, new_binary, constant)


@dataclass
class SolveStats:
    transversal: frozenset[int] = frozenset()
    branch_count: int = 0


def solve(inst: CspInstance, transversal_method: str = "exact", stats: SolveStats | None = None) -> Assignment:
    """Optimal assignment for an arbitrary instance.

    Finds a transversal X of the constraint graph (exact_s or the m/5
    greedy), enumerates all r^|X| assignments of X, and solves each
    K4-minor-free remainder by elimination.  Memory stays polynomial; no
    tables are shared across branches.  Ties go to the lexicographically
    smallest assignment vector (by ascending variable id).
    """
    cg = inst.constraint_graph()
    if transversal_method == "exact":
        x = exact_s(cg).vertices
    elif transversal_method == "greedy":
        x = greedy_fifth_transversal(cg).vertices
    else:
        raise DomainError(f"unknown transversal method {transversal_method!r}")
    if stats is not None:
        stats.transversal = x
    xs = sorted(x)
    best: Assignment | None = None
    for combo in itertools.product(range(inst.r), repeat=len(xs)):
        if stats is not None:
            stats.branch_count += 1
        sub = inst
        for var, val in zip(xs, combo):
            sub = _fix_variable(sub, var, val)
        partial = solve_treewidth2(sub)
        values = dict(partial.values)
        values.update(zip(xs, combo))
        cand = Assignment(values, inst.evaluate(values))
        if (
            best is None
            or cand.objective > best.objective
            or (cand.objective == best.objective and cand.vector() < best.vector())
        ):
            best = cand
    assert best is not None  # the empty product still yields one branch
    return best


def encode_maxcut(g: Graph) -> CspInstance:
    """Max Cut as a binary Max-2-CSP: 1 per edge cut."""
    cut = ((0, 1), (1, 0))
    return CspInstance(
        2,
        g.vertices,
        {},
        {(u, v): cut for u, v in g.edges()},
        0,
    )


# -- file format --------------------------------------------------------
#
# Line-oriented: '#' comments; fields in any order except that `r` and
# `variables` must precede the tables.  Rationals as p/q or integers.
#
#   r 2
#   variables 3
#   unary 0  1 -2
#   binary 0 1  0 1 1 0
#   constant 1/2


def _parse_score(tok: str) -> Score:
    if "/" in tok:
        return Fraction(tok)
    return int(tok)


def _format_score(x: Score) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def parse_csp(text: str) -> CspInstance:
    r = None
    nvars = None
    unary = {}
    binary = {}
    constant: Score = 0
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        key = parts[0]
        if key == "r":
            r = int(parts[1])
        elif key == "variables":
            nvars = int(parts[1])
        elif key == "constant":
            constant = _parse_score(parts[1])
        elif key == "unary":
            if r is None:
                raise DomainError("unary before r")
            v = int(parts[1])
            scores = tuple(_parse_score(t) for t in parts[2:])
            if len(scores) != r:
                raise DomainError(f"unary line for {v} needs {r} scores")
            unary[v] = scores
        elif key == "binary":
            if r is None:
                raise DomainError("binary before r")
            u, v = int(parts[1]), int(parts[2])
            scores = [_parse_score(t) for t in parts[3:]]
            if len(scores) != r * r:
                raise DomainError(f"binary line {u} {v} needs {r * r} scores")
            table = tuple(tuple(scores[a * r + b] for b in range(r)) for a in range(r))
            binary[_pair(u, v)] = table if u < v else tuple(
                tuple(table[b][a] for b in range(r)) for a in range(r)
            )
        else:
            raise DomainError(f"bad csp line: {ln!r}")
    if r is None or nvars is None:
        raise DomainError("csp file must declare r and variables")
    return CspInstance(r, frozenset(range(nvars)), unary, binary, constant)


def format_csp(inst: CspInstance) -> str:
    nvars = len(inst.variables)
    if inst.variables != frozenset(range(nvars)):
        raise DomainError("only instances with variables 0..n-1 can be serialized")
    out = [f"r {inst.r}", f"variables {nvars}"]
    for v in sorted(inst.variables):
        out.append("unary " + str(v) + " " + " ".join(_format_score(x) for x in inst.unary[v]))
    for (u, v), table in sorted(inst.binary.items()):
        flat = " ".join(_format_score(x) for row in table for x in row)
        out.append(f"binary {u} {v} {flat}")
    out.append("constant " + _format_score(inst.constant))
    return "\n".join(out) + "\n"


def read_csp(path) -> CspInstance:
    with open(path) as f:
        return parse_csp(f.read())

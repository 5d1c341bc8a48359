"""Certify that a list of cycles is an exact edge partition of a graph."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .errors import BadCycle
from .graphs import GraphFamily, edge, materialize

VALID = "VALID"
INVALID = "INVALID"

MISSING_EDGE = "MissingEdge"
DUPLICATE_EDGE = "DuplicateEdge"
FOREIGN_EDGE = "ForeignEdge"
BAD_CYCLE = "BadCycle"

MAX_VIOLATIONS = 1000


@dataclass(frozen=True)
class Decomposition:
    """Cycles claimed to partition the edges of ``family``.

    ``k`` is the common cycle length, or 0 when mixed lengths are allowed.
    """

    family: GraphFamily
    k: int
    cycles: Tuple[Tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))

    def __len__(self):
        return len(self.cycles)

    def length_counts(self) -> Dict[int, int]:
        return dict(sorted(Counter(len(c) for c in self.cycles).items()))


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class Certificate:
    status: str
    edge_count: int
    cycle_count: int
    violations: Tuple[Violation, ...] = ()
    length_counts: Dict[int, int] = field(default_factory=dict)
    truncated: bool = False

    @property
    def valid(self) -> bool:
        return self.status == VALID

    def count(self, kind: str) -> int:
        return sum(1 for v in self.violations if v.kind == kind)

    def summary(self) -> str:
        lines = [f"{self.status}: {self.cycle_count} cycles, {self.edge_count} edges"]
        if self.length_counts and len(self.length_counts) > 1:
            lines[0] += " (" + ", ".join(
                f"{n} of length {k}" for k, n in self.length_counts.items()) + ")"
        lines.extend(f"{v.kind}: {v.detail}" for v in self.violations)
        if self.truncated:
            lines.append(f"... truncated after {MAX_VIOLATIONS} violations")
        return "\n".join(lines)


def cycle_edges(cycle: Sequence) -> List[tuple]:
    n = len(cycle)
    return [edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


def cycle_problem(cycle: Sequence, k: int = 0, vertices=None):
    """Return a description of what is wrong with ``cycle``, or None."""
    if len(cycle) < 3:
        return f"cycle {list(cycle)} has fewer than 3 vertices"
    if k and len(cycle) != k:
        return f"cycle {list(cycle)} has length {len(cycle)}, expected {k}"
    if vertices is not None:
        unknown = [v for v in cycle if v not in vertices]
        if unknown:
            return f"cycle {list(cycle)} uses unknown vertices {unknown}"
    if len(set(cycle)) != len(cycle):
        return f"cycle {list(cycle)} repeats a vertex"
    return None


def verify(dec: Decomposition) -> Certificate:
    """Check ``dec`` edge by edge and report every violation found."""
    target = materialize(dec.family)
    vertices = frozenset(target.vertices)
    violations: List[Violation] = []
    used: Counter = Counter()
    for cycle in dec.cycles:
        problem = cycle_problem(cycle, dec.k, vertices)
        if problem:
            violations.append(Violation(BAD_CYCLE, problem))
            continue
        used.update(cycle_edges(cycle))

    for e, mult in sorted(used.items()):
        if e not in target.edges:
            violations.append(Violation(FOREIGN_EDGE, f"{list(e)} is not an edge of the graph"))
        elif mult > 1:
            violations.append(Violation(DUPLICATE_EDGE, f"{list(e)} covered {mult} times"))
    for e in sorted(target.edges - used.keys()):
        violations.append(Violation(MISSING_EDGE, f"{list(e)} is not covered"))

    truncated = len(violations) > MAX_VIOLATIONS
    return Certificate(
        status=INVALID if violations else VALID,
        edge_count=len(target.edges),
        cycle_count=len(dec.cycles),
        violations=tuple(violations[:MAX_VIOLATIONS]),
        length_counts=dec.length_counts(),
        truncated=truncated,
    )


def canonical_cycle(cycle: Sequence) -> tuple:
    """Rotate to start at the smallest vertex; orient so cycle[1] < cycle[-1]."""
    problem = cycle_problem(cycle)
    if problem:
        raise BadCycle(problem)
    i = min(range(len(cycle)), key=cycle.__getitem__)
    rotated = tuple(cycle[i:]) + tuple(cycle[:i])
    if rotated[1] > rotated[-1]:
        rotated = (rotated[0],) + rotated[:0:-1]
    return rotated


def canonicalize(dec: Decomposition) -> Decomposition:
    return Decomposition(dec.family, dec.k, tuple(sorted(canonical_cycle(c) for c in dec.cycles)))

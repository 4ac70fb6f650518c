"""Canonical path classes between vertex 0 and a target vertex.

Every walk in C_n(1, s) mixes unit steps along the ring (outer edges, +-1)
with chord steps (inner edges, +-s).  Up to reordering and cancellation,
a walk from 0 to i is summarized by a *class*: how many outer and inner
edges it uses and in which direction each kind points.  Six families of
classes, read off from integer divisions of i, t*n + i and t*n - i by s,
are guaranteed to contain a shortest path; distance computation is then a
minimum over their lengths.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from math import gcd
from typing import Iterator

from .params import CirculantParams, check_vertex


class InconsistentClassError(ValueError):
    """Raised when a class is realized against a vertex it does not reach."""


class Direction(Enum):
    """Traversal sense around the ring: '+' is clockwise (increasing ids)."""

    CLOCKWISE = "+"
    COUNTERCLOCKWISE = "-"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.CLOCKWISE else -1


CW = Direction.CLOCKWISE
CCW = Direction.COUNTERCLOCKWISE


class Family(IntEnum):
    """The six canonical families; numeric order is the argmin tie-break order.

    P1 takes the leftover unit steps forward then chords forward; P2 overshoots
    with one extra chord and walks back.  The T variants wrap the ring t extra
    times before resolving; P3T/P4T resolve t*n - i with backward chords.
    """

    P1 = 0
    P2 = 1
    P1T = 2
    P2T = 3
    P3T = 4
    P4T = 5


@dataclass(frozen=True)
class PathClass:
    """One canonical class: counts and directions of each edge kind.

    Zero-count segments are canonicalized to clockwise so that structural
    equality is well defined.  family/t record which construction produced
    the class; they are None for classes recovered from raw walks.
    """

    outer_count: int
    outer_dir: Direction
    inner_count: int
    inner_dir: Direction
    family: Family | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        if self.outer_count == 0 and self.outer_dir is not CW:
            object.__setattr__(self, "outer_dir", CW)
        if self.inner_count == 0 and self.inner_dir is not CW:
            object.__setattr__(self, "inner_dir", CW)

    @property
    def length(self) -> int:
        return self.outer_count + self.inner_count

    def __str__(self) -> str:
        outer = f"{self.outer_count}a{self.outer_dir.value}" if self.outer_count else "0"
        inner = f"{self.inner_count}c{self.inner_dir.value}" if self.inner_count else "0"
        return f"({outer}, {inner})"


@dataclass(frozen=True)
class ResidueDecomposition:
    """Quotients/remainders of i, t*n + i and t*n - i by s for one (i, t)."""

    q: int
    r: int
    q_t: int
    r_t: int
    qbar_t: int
    rbar_t: int


def residues(p: CirculantParams, i: int, t: int) -> ResidueDecomposition:
    """Divisions by s that parameterize the six families at wrap count t."""
    q, r = divmod(i, p.s)
    q_t, r_t = divmod(t * p.n + i, p.s)
    qbar_t, rbar_t = divmod(t * p.n - i, p.s)
    return ResidueDecomposition(q=q, r=r, q_t=q_t, r_t=r_t, qbar_t=qbar_t, rbar_t=rbar_t)


@dataclass(frozen=True)
class WalkSpec:
    """Step counts of an arbitrary 0 -> i walk, one field per edge kind."""

    plus_outer: int
    minus_outer: int
    plus_inner: int
    minus_inner: int

    @property
    def length(self) -> int:
        return self.plus_outer + self.minus_outer + self.plus_inner + self.minus_inner


def t_range(p: CirculantParams) -> int:
    """Number of wrap counts to enumerate: floor(s / gcd(n, s)).

    Beyond this many wraps the residue pattern repeats, so no new classes
    arise.  When s divides n the range collapses to {1}.
    """
    return p.s // gcd(p.n, p.s)


def class_entries(
    p: CirculantParams, i: int, t_limit: int
) -> Iterator[tuple[PathClass, int]]:
    """Yield the canonical classes for i with wrap counts 1..t_limit.

    The two wrap-free classes come first: P1 spends the residue of i by s
    on forward unit steps and the quotient on forward chords; P2 overshoots
    with one extra chord and walks the complement backward.  Each wrap
    count t then contributes four classes from the divisions of t*n + i
    (forward chords) and t*n - i (backward chords) by s.
    """
    s = p.s
    q, r = divmod(i, s)
    yield PathClass(r, CW, q, CW, Family.P1), r + q
    yield PathClass(s - r, CCW, q + 1, CW, Family.P2), 1 + s - r + q
    for t in range(1, t_limit + 1):
        q_t, r_t = divmod(t * p.n + i, s)
        q_b, r_b = divmod(t * p.n - i, s)
        yield PathClass(r_t, CW, q_t, CW, Family.P1T, t), r_t + q_t
        yield PathClass(s - r_t, CCW, q_t + 1, CW, Family.P2T, t), 1 + s - r_t + q_t
        yield PathClass(r_b, CCW, q_b, CCW, Family.P3T, t), r_b + q_b
        yield PathClass(s - r_b, CW, q_b + 1, CCW, Family.P4T, t), 1 + s - r_b + q_b


def canonical_classes(p: CirculantParams, i: int) -> list[tuple[PathClass, int]]:
    """All 2 + 4*t_range(p) canonical classes from 0 to i, with lengths.

    Contains a shortest path for every i; some entries may realize as
    walks that revisit a vertex, but such entries are never strict minima.
    """
    check_vertex(p, i)
    return list(class_entries(p, i, t_range(p)))


def realize_path(p: CirculantParams, pc: PathClass, i: int) -> tuple[list[int], bool]:
    """Expand a class into its vertex sequence, outer steps first.

    Returns (sequence, is_genuine_path) where the flag is False when some
    vertex repeats (the class realizes as a walk, not a path).  Raises
    InconsistentClassError if the expansion does not end at i mod n.
    """
    check_vertex(p, i)
    n = p.n
    seq = [0]
    v = 0
    step = pc.outer_dir.sign
    for _ in range(pc.outer_count):
        v = (v + step) % n
        seq.append(v)
    step = pc.inner_dir.sign * p.s
    for _ in range(pc.inner_count):
        v = (v + step) % n
        seq.append(v)
    if v != i % n:
        raise InconsistentClassError(f"class {pc} ends at {v}, not {i}")
    return seq, len(set(seq)) == len(seq)


def reduce_walk(p: CirculantParams, w: WalkSpec) -> PathClass:
    """Cancel opposing steps of a walk; net counts keep the majority direction.

    The result has the same endpoint as the walk and length at most the
    walk's length.  family/t are None: the reduction forgets provenance.
    """
    net_outer = w.plus_outer - w.minus_outer
    net_inner = w.plus_inner - w.minus_inner
    return PathClass(
        abs(net_outer),
        CW if net_outer >= 0 else CCW,
        abs(net_inner),
        CW if net_inner >= 0 else CCW,
    )


def translate_endpoints(p: CirculantParams, i: int, j: int) -> int:
    """Shift a path between i and j to start at 0: returns (j - i) mod n."""
    check_vertex(p, i)
    check_vertex(p, j)
    return (j - i) % p.n


def classes_equivalent(
    p: CirculantParams,
    first: PathClass,
    second: PathClass,
    first_endpoints: tuple[int, int] | None = None,
    second_endpoints: tuple[int, int] | None = None,
) -> bool:
    """Structural equality of two classes between the same translated endpoints.

    True iff lengths, per-kind edge counts and directions all agree.  When
    endpoint pairs are supplied they are translated to 0 -> k form first and
    distinct targets make the classes inequivalent outright; without them the
    caller vouches that both classes address the same target.
    """
    if first_endpoints is not None and second_endpoints is not None:
        k1 = translate_endpoints(p, *first_endpoints)
        k2 = translate_endpoints(p, *second_endpoints)
        if k1 != k2:
            return False
    return (
        first.length == second.length
        and first.outer_count == second.outer_count
        and first.inner_count == second.inner_count
        and first.outer_dir is second.outer_dir
        and first.inner_dir is second.inner_dir
    )


def render_path(seq: list[int], pc: PathClass) -> str:
    """Debug/CLI rendering: '0 ->a+ 1 ->a+ 2 ->c+ 6'."""
    if len(seq) == 1:
        return str(seq[0])
    labels = [f"a{pc.outer_dir.value}"] * pc.outer_count + [
        f"c{pc.inner_dir.value}"
    ] * pc.inner_count
    parts = [str(seq[0])]
    for label, v in zip(labels, seq[1:]):
        parts.append(f"->{label}")
        parts.append(str(v))
    return " ".join(parts)

"""Parameter validation and the integer decompositions behind every formula.

A circulant graph C_n(1, s) has vertex set Z_n with i ~ j iff the circular
distance |i - j|_n is 1 or s.  All questions about its metric reduce to
integer arithmetic on the quotients and remainders collected here.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class OutOfRangeError(ValueError):
    """Raised when (n, s) violates n >= 5 or 2 <= s <= (n-1)//2."""


class VertexOutOfRangeError(ValueError):
    """Raised when a vertex id falls outside [0, n)."""


@dataclass(frozen=True)
class CirculantParams:
    """Validated parameters of C_n(1, s).

    Invariants: n >= 5 and 2 <= s <= (n-1)//2.  Construction fails on
    anything else, so holding an instance certifies the constraints.
    """

    n: int
    s: int

    def __post_init__(self) -> None:
        if self.n < 5:
            raise OutOfRangeError(f"n={self.n}: need n >= 5")
        if self.s < 2 or self.s > (self.n - 1) // 2:
            raise OutOfRangeError(
                f"s={self.s}: need 2 <= s <= (n-1)//2 = {(self.n - 1) // 2}"
            )

    @property
    def half(self) -> int:
        """Largest index that must be inspected explicitly: floor(n/2)."""
        return self.n // 2


def validate_params(n: int, s: int) -> CirculantParams:
    """Check raw integers and wrap them; raises OutOfRangeError otherwise."""
    return CirculantParams(int(n), int(s))


@dataclass(frozen=True)
class DecompositionContext:
    """Derived integers of a valid (n, s).

    lam and gamma are quotient and remainder of n by s (n = lam*s + gamma,
    0 <= gamma < s).  When gamma > 0 the chord length splits in turn as
    s = a*gamma + b with 0 <= b < gamma.  When additionally b > 0 the four
    auxiliary midpoints p0..p3 and their combination e1 are available; they
    drive the closed form for the lam <= gamma regime.  Applicability of
    any particular closed form is decided elsewhere; this record is pure
    arithmetic.
    """

    lam: int
    gamma: int
    g: int
    a: int | None = None
    b: int | None = None
    p0: int | None = None
    p1: int | None = None
    p2: int | None = None
    p3: int | None = None
    e1: int | None = None


def decompose(p: CirculantParams) -> DecompositionContext:
    """Compute all derived quantities for p.

    Fields a, b exist iff gamma > 0; p0..p3 and e1 exist iff additionally
    b > 0.  All arithmetic stays within 64-bit signed range for n <= 2**31.
    """
    n, s = p.n, p.s
    lam, gamma = divmod(n, s)
    g = gcd(n, s)
    if gamma == 0:
        return DecompositionContext(lam=lam, gamma=gamma, g=g)
    a, b = divmod(s, gamma)
    if b == 0:
        return DecompositionContext(lam=lam, gamma=gamma, g=g, a=a, b=b)
    p0 = (lam + gamma) // 2
    p1 = (gamma - b + (a + 1) * lam + 1) // 2
    p2 = (gamma + b + (a - 1) * lam + 1) // 2
    p3 = (b + a * lam + 1) // 2
    e1 = min(max(p1, p3), max(p0, p2))
    return DecompositionContext(
        lam=lam, gamma=gamma, g=g, a=a, b=b, p0=p0, p1=p1, p2=p2, p3=p3, e1=e1
    )


def check_vertex(p: CirculantParams, i: int) -> int:
    """Validate a vertex id against [0, n); returns it unchanged."""
    if not 0 <= i < p.n:
        raise VertexOutOfRangeError(f"vertex {i} outside [0, {p.n})")
    return i

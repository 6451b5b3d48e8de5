"""
Temperley-Lieb diagrams of types A and B in linearized (folded) form.

An n-strand diagram has bottom points b_1..b_n and top points t_1..t_n.  We fold
the top row down to the right so that all 2n points sit on a line:

    b_k -> k,        t_k -> 2n + 1 - k.

A diagram is then a non-crossing perfect matching on 1..2n.  The identity is
{(k, 2n+1-k)}, and the U/R labelling of left/right arc endpoints is a Dyck path.
Type B diagrams may carry a dot on arcs that are not nested inside any other
arc (these are exactly the arcs touching the left wall of the strand picture).
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator

from .paths import DottedPath, DyckPath, PathError
from .scalar import DOT_MERGE, DOTTED_LOOP, LOOP, Scalar

Arc = tuple[int, int]

FLAVORS = ("A", "B")


class DiagramError(ValueError):
    pass


def check_flavor(flavor: str) -> str:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be 'A' or 'B', got {flavor!r}")
    return flavor


def _validate(n: int, arcs: tuple[Arc, ...], dots: tuple[Arc, ...]) -> list[int]:
    if n < 0:
        raise DiagramError(f"strand count must be non-negative, got {n}")
    partner = [0] * (2 * n + 1)
    for i, j in arcs:
        for p in (i, j):
            if not 1 <= p <= 2 * n:
                raise DiagramError(f"arc ({i},{j}): point {p} outside 1..{2 * n}")
            if partner[p]:
                raise DiagramError(f"arc ({i},{j}): point {p} is used twice")
        if i == j:
            raise DiagramError(f"arc ({i},{j}) joins a point to itself")
        partner[i], partner[j] = j, i
    missing = [p for p in range(1, 2 * n + 1) if not partner[p]]
    if missing:
        raise DiagramError(f"points {missing} are not matched")
    stack: list[int] = []
    depth = {}
    for p in range(1, 2 * n + 1):
        if partner[p] > p:
            depth[p] = len(stack)
            stack.append(p)
        elif stack.pop() != partner[p]:
            raise DiagramError(f"arc ({partner[p]},{p}) crosses another arc")
    arcset = set(arcs)
    for i, j in dots:
        if (i, j) not in arcset:
            raise DiagramError(f"dot on ({i},{j}), which is not an arc")
        if depth[i]:
            raise DiagramError(f"dotted arc ({i},{j}) is not outermost")
    return partner


@dataclass(frozen=True, order=True)
class Diagram:
    """A basis diagram: n strands, sorted arcs (i < j), sorted dotted arcs."""

    n: int
    arcs: tuple[Arc, ...]
    dots: tuple[Arc, ...] = ()
    _partner: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        arcs = tuple(sorted((min(a), max(a)) for a in self.arcs))
        dots = tuple(sorted((min(a), max(a)) for a in self.dots))
        if len(set(dots)) != len(dots):
            raise DiagramError("an arc carries more than one dot")
        partner = _validate(self.n, arcs, dots)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "dots", dots)
        object.__setattr__(self, "_partner", tuple(partner))

    @property
    def is_dotted(self) -> bool:
        return bool(self.dots)

    def partner(self, p: int) -> int:
        return self._partner[p]

    def outermost_arcs(self) -> tuple[Arc, ...]:
        out, depth = [], 0
        for p in range(1, 2 * self.n + 1):
            if self._partner[p] > p:
                if depth == 0:
                    out.append((p, self._partner[p]))
                depth += 1
            else:
                depth -= 1
        return tuple(out)

    def key(self) -> str:
        return format_diagram(self)

    def __str__(self):
        return format_diagram(self)


def identity(n: int) -> Diagram:
    if n < 0:
        raise DiagramError(f"strand count must be non-negative, got {n}")
    return Diagram(n, tuple((k, 2 * n + 1 - k) for k in range(1, n + 1)))


def generator(flavor: str, n: int, i: int) -> Diagram:
    """The generator e_i of TL_n (e_0 only for type B)."""
    check_flavor(flavor)
    lo = 0 if flavor == "B" else 1
    if not lo <= i <= n - 1:
        raise DiagramError(f"generator index {i} out of range {lo}..{n - 1} for type {flavor}, n={n}")
    if i == 0:
        return Diagram(n, identity(n).arcs, ((1, 2 * n),))
    arcs = [(i, i + 1), (2 * n - i, 2 * n - i + 1)]
    arcs += [(k, 2 * n + 1 - k) for k in range(1, n + 1) if k not in (i, i + 1)]
    return Diagram(n, tuple(arcs))


def g_diagram(flavor: str, n: int, i: int) -> Diagram:
    """
    g_{n,i}: a bottom cap at position i, one cup at the top right and n-2
    through strands.  g_{n,n} is the identity and, for type B, g_{n,0} is
    g_{n,1} with the bottom-left cap dotted.
    """
    check_flavor(flavor)
    lo = 0 if flavor == "B" else 1
    if not lo <= i <= n or n < 1:
        raise DiagramError(f"g-index {i} out of range {lo}..{n} for type {flavor}, n={n}")
    if i == n:
        return identity(n)
    if i == 0:
        base = g_diagram("A", n, 1)
        return Diagram(n, base.arcs, ((1, 2),))
    bottoms = [k for k in range(1, n + 1) if k not in (i, i + 1)]
    tops = [2 * n + 1 - k for k in range(1, n - 1)]
    arcs = [(i, i + 1), (n + 1, n + 2)] + list(zip(bottoms, tops))
    return Diagram(n, tuple(arcs))


@functools.lru_cache(maxsize=None)
def _loop_factor(loops: int, merges: int, dotted_loops: int) -> Scalar:
    return LOOP ** loops * DOT_MERGE ** merges * DOTTED_LOOP ** dotted_loops


@functools.lru_cache(maxsize=1 << 18)
def compose(upper: Diagram, lower: Diagram) -> tuple[Scalar, Diagram]:
    """
    The product upper * lower: stack ``upper`` on top of ``lower`` and reduce.

    Closed loops give -[2]; k >= 1 dots on one component collapse to a single
    dot with factor (-[1]_s)^(k-1); a loop left with one dot gives qs^-1 + q^-1 s.
    """
    n = lower.n
    if upper.n != n:
        raise DiagramError(f"cannot compose diagrams with {upper.n} and {n} strands")
    m = 2 * n + 1
    up, lo = upper._partner, lower._partner
    up_dots = {p for arc in upper.dots for p in arc}
    lo_dots = {p for arc in lower.dots for p in arc}
    # middle row: bottom point k of upper is glued to top point t_k = m - k of lower
    seen_middle = [False] * (n + 1)
    arcs, dots = [], []
    merges = 0

    def walk(start: int, in_upper: bool) -> tuple[int, int]:
        p, dotcount = start, 0
        while True:
            if in_upper:
                r = up[p]
                dotcount += p in up_dots
                if r > n:
                    return r, dotcount
                seen_middle[r] = True
                p, in_upper = m - r, False
            else:
                r = lo[p]
                dotcount += p in lo_dots
                if r <= n:
                    return r, dotcount
                seen_middle[m - r] = True
                p, in_upper = m - r, True

    done = set()
    for start, in_upper in itertools.chain(
        ((p, False) for p in range(1, n + 1)), ((p, True) for p in range(n + 1, m))
    ):
        if start in done:
            continue
        end, k = walk(start, in_upper)
        done.update((start, end))
        arc = (min(start, end), max(start, end))
        arcs.append(arc)
        if k:
            dots.append(arc)
            merges += k - 1

    loops = dotted_loops = 0
    for k in range(1, n + 1):
        if seen_middle[k]:
            continue
        # trace the closed loop through middle point k
        count, p, in_upper = 0, k, True
        while True:
            seen_middle[p if in_upper else m - p] = True
            if in_upper:
                count += p in up_dots
                r = up[p]
                p, in_upper = m - r, False
            else:
                count += p in lo_dots
                r = lo[p]
                p, in_upper = m - r, True
            if in_upper and p == k:
                break
        if count:
            dotted_loops += 1
            merges += count - 1
        else:
            loops += 1

    try:
        result = Diagram(n, tuple(arcs), tuple(dots))
    except DiagramError as exc:
        raise DiagramError(f"product {upper} * {lower} left the basis: {exc}") from None
    return _loop_factor(loops, merges, dotted_loops), result


def to_path(d: Diagram) -> DottedPath:
    steps = ["R"] * (2 * d.n)
    for i, _ in d.arcs:
        steps[i - 1] = "U"
    return DottedPath(DyckPath("".join(steps)), d.dots)


def from_path(p: DottedPath | DyckPath | str, dots=()) -> Diagram:
    if isinstance(p, str):
        p = DyckPath(p)
    if isinstance(p, DyckPath):
        p = DottedPath(p, tuple(dots))
    partner = p.path.matching()
    arcs = tuple((i, j) for i, j in partner.items() if i < j)
    return Diagram(p.n, arcs, p.dotted)


def innermost_caps(d: Diagram) -> tuple[int, ...]:
    """
    Removal sites for the coefficient recurrences: undotted arcs (i, i+1) with
    1 <= i <= n (i = n is the rightmost through strand), plus 0 when the
    arc (1, 2) exists and is dotted.
    """
    dotted = set(d.dots)
    out = []
    if (1, 2) in dotted:
        out.append(0)
    for i in range(1, d.n + 1):
        if d._partner[i] == i + 1 and (i, i + 1) not in dotted:
            out.append(i)
    return tuple(out)


def remove_cap(d: Diagram, i: int) -> Diagram:
    if i not in innermost_caps(d):
        raise DiagramError(f"{i} is not an innermost cap position of {d}")
    lo = 1 if i == 0 else i

    def shift(p):
        return p - 2 if p > lo + 1 else p

    arcs = tuple((shift(a), shift(b)) for a, b in d.arcs if a != lo)
    dots = tuple((shift(a), shift(b)) for a, b in d.dots if a != lo)
    return Diagram(d.n - 1, arcs, dots)


def _matchings(points: int) -> Iterator[list[Arc]]:
    """All non-crossing perfect matchings of 1..points, by first-point partner."""
    def rec(lo, hi):
        if lo > hi:
            yield []
            return
        for j in range(lo + 1, hi + 1, 2):
            for inner in rec(lo + 1, j - 1):
                for outer in rec(j + 1, hi):
                    yield [(lo, j)] + inner + outer
    yield from rec(1, points)


@functools.lru_cache(maxsize=None)
def all_diagrams(flavor: str, n: int) -> tuple[Diagram, ...]:
    """Every basis diagram of TL_n, sorted by arc list then dot set."""
    check_flavor(flavor)
    if n < 0:
        raise DiagramError(f"strand count must be non-negative, got {n}")
    out = []
    for arcs in _matchings(2 * n):
        base = Diagram(n, tuple(arcs))
        if flavor == "A":
            out.append(base)
            continue
        outer = base.outermost_arcs()
        for r in range(len(outer) + 1):
            for chosen in itertools.combinations(outer, r):
                out.append(Diagram(n, base.arcs, chosen))
    return tuple(sorted(out))


_ARC_RE = re.compile(r"\((\d+),(\d+)\)(\*?)")


def parse_diagram(text: str, n: int | None = None) -> Diagram:
    """
    Parse ``(1,2)*(3,6)(4,5)(7,8)``: arcs in any order, ``*`` marks a dot.
    The strand count defaults to half the number of points.
    """
    pos, arcs, dots = 0, [], []
    while pos < len(text):
        m = _ARC_RE.match(text, pos)
        if not m:
            raise DiagramError(f"position {pos}: expected '(i,j)' near {text[pos:pos + 8]!r}")
        arc = (int(m.group(1)), int(m.group(2)))
        if arc[0] >= arc[1]:
            raise DiagramError(f"position {pos}: arc {m.group(0)!r} must have i < j")
        arcs.append(arc)
        if m.group(3):
            dots.append(arc)
        pos = m.end()
    if n is None:
        points = 2 * len(arcs)
        n = points // 2
    try:
        return Diagram(n, tuple(arcs), tuple(dots))
    except DiagramError as exc:
        raise DiagramError(f"invalid diagram {text!r}: {exc}") from None


def format_diagram(d: Diagram) -> str:
    dotted = set(d.dots)
    return "".join(f"({i},{j})" + ("*" if (i, j) in dotted else "") for i, j in d.arcs)


def path_of(d: Diagram) -> DyckPath:
    return to_path(d).path


__all__ = [
    "Diagram", "DiagramError", "PathError", "identity", "generator", "g_diagram",
    "compose", "to_path", "from_path", "innermost_caps", "remove_cap",
    "all_diagrams", "parse_diagram", "format_diagram", "check_flavor",
]

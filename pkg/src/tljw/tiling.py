"""
Cover-inclusive Dyck tilings between a Dyck path mu and the top path U^n R^n.

Cells are unit diamonds addressed by their centre (x, y) with x + y odd; a
cell lies in the region R(mu) when mu(x) < y < min(x, 2n - x).  A Dyck tile is
a ribbon whose cell centres trace a Dyck word: it is stored as its leftmost
(and lowest) centre plus that word, so a single cell is the size-0 tile with
empty profile.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .diagram import all_diagrams, check_flavor, to_path
from .paths import DottedPath, DyckPath
from .projector import coeff_recursive, jw_morrison, jw_wenzl
from .report import Report, timed
from .scalar import ONE, ZERO, Scalar, quantum

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class DyckTile:
    h: int
    start_x: int
    profile: str = ""

    @property
    def size(self) -> int:
        return len(self.profile) // 2

    @property
    def cells(self) -> tuple[Cell, ...]:
        x, y = self.start_x, self.h
        out = [(x, y)]
        for step in self.profile:
            x += 1
            y += 1 if step == "U" else -1
            out.append((x, y))
        return tuple(out)

    @property
    def end_x(self) -> int:
        return self.start_x + len(self.profile)

    def to_json(self) -> dict:
        return {"h": self.h, "start_x": self.start_x, "profile": self.profile}

    @classmethod
    def from_json(cls, data) -> DyckTile:
        return cls(int(data["h"]), int(data["start_x"]), data.get("profile", ""))


@dataclass(frozen=True, order=True)
class Tiling:
    mu: DyckPath
    tiles: tuple[DyckTile, ...]

    def heights(self) -> tuple[int, ...]:
        return tuple(sorted(t.h for t in self.tiles))

    def cells(self) -> int:
        return sum(len(t.cells) for t in self.tiles)


def _in_region(x: int, y: int, heights: tuple[int, ...], n: int) -> bool:
    return 0 <= x <= 2 * n and heights[x] < y < min(x, 2 * n - x)


def region_cells(mu: DyckPath) -> frozenset[Cell]:
    n, hts = mu.n, mu.heights()
    return frozenset(
        (x, y)
        for x in range(1, 2 * n)
        for y in range(hts[x] + 1, min(x, 2 * n - x), 2)
    )


def _tile_profiles(x: int, y: int, free) -> Iterator[str]:
    """All Dyck words whose ribbon starting at cell (x, y) uses only free cells."""
    def rec(cx, cy, word):
        if cy == y:
            yield word
        if free((cx + 1, cy + 1)):
            yield from rec(cx + 1, cy + 1, word + "U")
        if cy > y and free((cx + 1, cy - 1)):
            yield from rec(cx + 1, cy - 1, word + "R")
    yield from rec(x, y, "")


def _shift_owners(tile: DyckTile, owner: dict, heights, partial: bool = False) -> set:
    """
    Tiles met by ``tile`` moved down by 2.  The shift must land either wholly
    strictly below mu (empty set) or wholly inside one tile (a singleton); any
    mixture is reported as a set of two sentinels.  With ``partial`` set,
    uncovered cells above mu are taken to be covered later.
    """
    owners, below, pending = set(), False, False
    for x, y in tile.cells:
        y2 = y - 2
        if y2 < heights[x]:
            below = True
            continue
        o = owner.get((x, y2))
        if o is None:
            if not partial:
                raise AssertionError("shifted cell above mu is not covered")
            pending = True
            continue
        owners.add(o)
    if below and (owners or pending):
        return _MIXED
    return owners


_MIXED = {-1, -2}


@functools.lru_cache(maxsize=4096)
def enumerate_tilings(mu: DyckPath) -> tuple[Tiling, ...]:
    """
    Every cover-inclusive Dyck tiling of R(mu), sorted.

    Cells are scanned in (y, x) order; the first uncovered cell must be the
    leftmost cell of the tile covering it, so we branch over all tiles starting
    there.  A tile is rejected at placement when the already-decided part of
    its downward shift mixes cells below mu with covered cells or meets two
    tiles; the full rule is checked once the region is covered.
    """
    n, heights = mu.n, mu.heights()
    order = sorted(region_cells(mu), key=lambda c: (c[1], c[0]))
    owner: dict[Cell, int] = {}
    placed: list[DyckTile] = []
    results: list[Tiling] = []

    def free(c):
        return _in_region(c[0], c[1], heights, n) and c not in owner

    def rec(idx):
        while idx < len(order) and order[idx] in owner:
            idx += 1
        if idx == len(order):
            if all(len(_shift_owners(t, owner, heights)) <= 1 for t in placed):
                results.append(Tiling(mu, tuple(sorted(placed))))
            return
        x, y = order[idx]
        for profile in _tile_profiles(x, y, free):
            tile = DyckTile(y, x, profile)
            if len(_shift_owners(tile, owner, heights, partial=True)) > 1:
                continue
            k = len(placed)
            placed.append(tile)
            for c in tile.cells:
                owner[c] = k
            rec(idx + 1)
            for c in tile.cells:
                del owner[c]
            placed.pop()

    rec(0)
    return tuple(sorted(results))


def validate_tiling(t: Tiling) -> list[str]:
    """Independent check of a tiling; returns a list of problems (empty if valid)."""
    problems = []
    region = region_cells(t.mu)
    heights = t.mu.heights()
    owner: dict[Cell, int] = {}
    for k, tile in enumerate(t.tiles):
        cells = tile.cells
        if len(cells) != 2 * tile.size + 1:
            problems.append(f"tile {k} has {len(cells)} cells, expected {2 * tile.size + 1}")
        if min(y for _, y in cells) != tile.h or cells[-1][1] != tile.h:
            problems.append(f"tile {k} does not start and end at its minimal height")
        for c in cells:
            if c not in region:
                problems.append(f"tile {k} cell {c} lies outside R(mu)")
            if c in owner:
                problems.append(f"cell {c} covered by tiles {owner[c]} and {k}")
            owner[c] = k
    missing = region - owner.keys()
    if missing:
        problems.append(f"cells {sorted(missing)} are not covered")
    if problems:
        return problems
    for k, tile in enumerate(t.tiles):
        shifted = [(x, y - 2) for x, y in tile.cells]
        if all(y < heights[x] for x, y in shifted):
            continue
        containers = {owner.get(c) for c in shifted}
        if len(containers) != 1 or None in containers:
            problems.append(f"tile {k} shifted down is neither below mu nor inside one tile")
    return problems


def _ratio(flavor: str, h: int) -> Scalar:
    return quantum(flavor, h) / quantum(flavor, h + 1)


@functools.lru_cache(maxsize=None)
def _height_weight(flavor: str, heights: tuple[int, ...]) -> Scalar:
    out = ONE
    for h in heights:
        out = out * _ratio(flavor, h)
    return out


def tiling_weight(t: Tiling, flavor: str = "A") -> Scalar:
    """Product over tiles of [h]/[h+1] (type A) or [h]_s/[h+1]_s (type B)."""
    check_flavor(flavor)
    return _height_weight(flavor, t.heights())


def _weighted_sum(tilings: Iterable[Tiling], flavor: str) -> Scalar:
    counts = Counter(t.heights() for t in tilings)
    total = ZERO
    for hs, k in sorted(counts.items()):
        total = total + _height_weight(flavor, hs) * k
    return total


def _as_path(mu) -> DyckPath:
    return DyckPath(mu) if isinstance(mu, str) else mu


def gf_A(mu: DyckPath | str) -> Scalar:
    """Generating function Z(mu) of the cover-inclusive Dyck tilings above mu."""
    return _weighted_sum(enumerate_tilings(_as_path(mu)), "A")


def base_humps(tile: DyckTile) -> list[tuple[int, int, int]]:
    """(first x, last x, size) of each primitive piece of the tile along its base."""
    out, start, height = [], 0, 0
    for k, step in enumerate(tile.profile):
        height += 1 if step == "U" else -1
        if height == 0:
            out.append((tile.start_x + start, tile.start_x + k + 1, (k + 1 - start) // 2))
            start = k + 1
    return out


def admissible(t: Tiling, dotted: Iterable[tuple[int, int]]) -> bool:
    """
    No tile of size l(c) above a dotted cap c = (i, j): no tile has a primitive
    base piece of size l(c) spanning exactly the columns i-1..j of the cap.
    """
    blocked = {(i - 1, j, (j - i + 1) // 2) for i, j in dotted}
    if not blocked:
        return True
    return not any(h in blocked for tile in t.tiles for h in base_humps(tile))


def admissible_tilings(p: DottedPath) -> tuple[Tiling, ...]:
    return tuple(t for t in enumerate_tilings(p.path) if admissible(t, p.dotted))


def gf_B(p: DottedPath | DyckPath | str) -> Scalar:
    """(1/[1]_s)^(#dots) times the type-B weight sum over admissible tilings."""
    if isinstance(p, (str, DyckPath)):
        p = DottedPath(_as_path(p))
    total = _weighted_sum(admissible_tilings(p), "B")
    return total * quantum("B", 1) ** (-len(p.dotted))


def gf(flavor: str, p: DottedPath) -> Scalar:
    if check_flavor(flavor) == "A":
        if p.dotted:
            raise ValueError("type A generating function takes an undotted path")
        return gf_A(p.path)
    return gf_B(p)


def verify_equivalence(flavor: str, n: int, full: bool | None = None) -> Report:
    """
    For every basis diagram D of size n compare the tiling generating function
    of its path with the recursive coefficient and, when ``full``, with the
    coefficient read off both projection recurrences.
    """
    check_flavor(flavor)
    if full is None:
        full = n <= (6 if flavor == "A" else 4)
    report = Report(f"tilings vs coefficients, type {flavor}, n={n}")
    if full:
        pw, pm = jw_wenzl(flavor, max(n, 0 if flavor == "B" else 1)), jw_morrison(flavor, max(n, 0 if flavor == "B" else 1))
    for d in all_diagrams(flavor, n):
        if flavor == "A" and n == 0:
            break
        with timed() as t:
            z = gf(flavor, to_path(d))
            c = coeff_recursive(flavor, d)
            ok = z == c
            detail = ""
            if full:
                w, m = pw.coeff(d), pm.coeff(d)
                ok = ok and w == c and m == c
                detail = "recursive, tilings, wenzl, morrison"
        report.add(f"{flavor}{n}:{d}", ok, c, z, t[0], detail)
    return report


def tiling_to_json(t: Tiling, flavor: str = "A", dotted=()) -> dict:
    out = {"tiles": [tile.to_json() for tile in t.tiles], "weight": tiling_weight(t, flavor).to_json()}
    if dotted:
        out["admissible"] = admissible(t, dotted)
    return out


def tilings_json(p: DottedPath, flavor: str = "A") -> dict:
    return {
        "mu": p.path.steps,
        "dots": [list(c) for c in p.dotted],
        "tilings": [tiling_to_json(t, flavor, p.dotted) for t in enumerate_tilings(p.path)],
    }


def tiling_tikz(t: Tiling) -> str:
    """TikZ picture: the two bounding paths plus each tile's outline."""
    n = t.mu.n
    lines = ["\\begin{tikzpicture}[scale=0.4]", f"\\draw(0,0)--({n},{n})--({2 * n},0);"]
    hts = t.mu.heights()
    lines.append("\\draw" + "--".join(f"({x},{h})" for x, h in enumerate(hts)) + ";")
    for tile in t.tiles:
        edges = Counter()
        for x, y in tile.cells:
            corners = [(x - 1, y), (x, y + 1), (x + 1, y), (x, y - 1)]
            for a, b in zip(corners, corners[1:] + corners[:1]):
                edges[tuple(sorted((a, b)))] += 1
        for (a, b), k in sorted(edges.items()):
            if k == 1:
                lines.append(f"\\draw({a[0]},{a[1]})--({b[0]},{b[1]});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)

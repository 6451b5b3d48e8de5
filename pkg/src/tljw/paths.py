"""Dyck paths and dotted Dyck paths (the folded form of cap diagrams)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class PathError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for k, c in enumerate(self.steps, start=1):
            if c == "U":
                height += 1
            elif c == "R":
                height -= 1
            else:
                raise PathError(f"step {k}: expected 'U' or 'R', got {c!r}")
            if height < 0:
                raise PathError(f"step {k}: path goes below height 0")
        if height != 0:
            raise PathError(f"path ends at height {height}, not 0")

    @classmethod
    def top(cls, n: int) -> DyckPath:
        return cls("U" * n + "R" * n)

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> tuple[int, ...]:
        """Heights at abscissas 0..2n."""
        out = [0]
        for c in self.steps:
            out.append(out[-1] + (1 if c == "U" else -1))
        return tuple(out)

    def matching(self) -> dict[int, int]:
        """Map each step position (1-based) to the position of its matched partner."""
        stack, partner = [], {}
        for k, c in enumerate(self.steps, start=1):
            if c == "U":
                stack.append(k)
            else:
                i = stack.pop()
                partner[i], partner[k] = k, i
        return partner

    def __str__(self):
        return self.steps


@dataclass(frozen=True, order=True)
class DottedPath:
    """A Dyck path with some outermost matched U-R pairs carrying a dot."""

    path: DyckPath
    dotted: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        dotted = tuple(sorted(set(tuple(p) for p in self.dotted)))
        if len(dotted) != len(self.dotted):
            raise PathError("a pair is dotted more than once")
        object.__setattr__(self, "dotted", dotted)
        partner = self.path.matching()
        heights = self.path.heights()
        for i, j in dotted:
            if partner.get(i) != j or i > j:
                raise PathError(f"dotted pair {i}-{j} is not a matched U-R pair")
            if heights[i - 1] != 0:
                raise PathError(f"dotted pair {i}-{j} is not outermost")

    @property
    def n(self) -> int:
        return self.path.n

    @staticmethod
    def cap_size(cap: tuple[int, int]) -> int:
        i, j = cap
        return (j - i + 1) // 2

    def __str__(self):
        if not self.dotted:
            return self.path.steps
        return f"{self.path.steps} [{format_dots(self.dotted)}]"


def parse_dots(text: str) -> tuple[tuple[int, int], ...]:
    """Parse ``"3-6,1-2"`` into pairs; the empty string means no dots."""
    text = text.strip()
    if not text:
        return ()
    pairs = []
    for k, item in enumerate(text.split(","), start=1):
        try:
            a, b = item.split("-")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise PathError(f"dot entry {k} ({item!r}) is not of the form i-j") from None
    return tuple(pairs)


def format_dots(pairs: Iterable[tuple[int, int]]) -> str:
    return ",".join(f"{i}-{j}" for i, j in pairs)

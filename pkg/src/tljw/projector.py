"""
Linear combinations of diagrams and the Jones-Wenzl projections.

P^(n) (type A) and Q^(n) (type B) are built two ways: Wenzl's recurrence
X^(n+1) = X^(n) + [n]/[n+1] X^(n) e_n X^(n), and Morrison's form
X^(n+1) = X^(n) (sum_i [i] g_{n+1,i}) / [n+1].  Single coefficients come from
the innermost-cap recurrence in ``coeff_recursive`` without building the
projection at all.
"""

from __future__ import annotations

import functools
import json
import threading
from collections import deque
from pathlib import Path
from typing import Iterable, Mapping

from .diagram import (
    Diagram,
    DiagramError,
    all_diagrams,
    check_flavor,
    compose,
    format_diagram,
    g_diagram,
    generator,
    identity,
    innermost_caps,
    parse_diagram,
    remove_cap,
)
from .report import Report, timed
from .scalar import ONE, ZERO, Scalar, quantum


class ElementError(ValueError):
    pass


class Element:
    """A finite linear combination of basis diagrams of TL^flavor_n."""

    __slots__ = ("flavor", "n", "_terms")

    def __init__(self, flavor: str, n: int, terms: Mapping[Diagram, Scalar] | None = None):
        self.flavor = check_flavor(flavor)
        self.n = n
        clean = {}
        for d, c in (terms or {}).items():
            self._check_diagram(d)
            c = Scalar.coerce(c)
            if c:
                clean[d] = c
        self._terms = clean

    def _check_diagram(self, d: Diagram) -> None:
        if d.n != self.n:
            raise ElementError(f"diagram {d} has {d.n} strands, element has {self.n}")
        if self.flavor == "A" and d.dots:
            raise ElementError(f"type A element cannot contain dotted diagram {d}")

    @classmethod
    def _trusted(cls, flavor, n, terms) -> Element:
        e = cls.__new__(cls)
        e.flavor, e.n, e._terms = flavor, n, terms
        return e

    @classmethod
    def basis(cls, flavor: str, d: Diagram, coeff=ONE) -> Element:
        return cls(flavor, d.n, {d: coeff})

    @classmethod
    def one(cls, flavor: str, n: int) -> Element:
        return cls.basis(flavor, identity(n))

    @classmethod
    def zero(cls, flavor: str, n: int) -> Element:
        return cls(flavor, n)

    @classmethod
    def gen(cls, flavor: str, n: int, i: int) -> Element:
        return cls.basis(flavor, generator(flavor, n, i))

    @property
    def terms(self) -> Mapping[Diagram, Scalar]:
        return dict(self._terms)

    def items(self) -> list[tuple[Diagram, Scalar]]:
        return sorted(self._terms.items(), key=lambda t: t[0])

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, d: Diagram) -> Scalar:
        self._check_diagram(d)
        return self._terms.get(d, ZERO)

    def _same_algebra(self, other: Element) -> None:
        if self.flavor != other.flavor or self.n != other.n:
            raise ElementError(
                f"mismatched algebras: TL^{self.flavor}_{self.n} vs TL^{other.flavor}_{other.n}"
            )

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same_algebra(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            v = out.get(d, ZERO) + c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return Element._trusted(self.flavor, self.n, out)

    def __neg__(self):
        return Element._trusted(self.flavor, self.n, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> Element:
        c = Scalar.coerce(c)
        if not c:
            return Element.zero(self.flavor, self.n)
        return Element._trusted(self.flavor, self.n, {d: c * v for d, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self._product(other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def _product(self, other: Element) -> Element:
        self._same_algebra(other)
        acc: dict[Diagram, Scalar] = {}
        for d2, c2 in other._terms.items():
            # group by the left factor's diagram-product so each accumulated sum
            # is multiplied by c2 once
            partial: dict[Diagram, Scalar] = {}
            for d1, c1 in self._terms.items():
                f, d = compose(d1, d2)
                partial[d] = partial.get(d, ZERO) + c1 * f
            for d, v in partial.items():
                acc[d] = acc.get(d, ZERO) + v * c2
        return Element._trusted(self.flavor, self.n, {d: c for d, c in acc.items() if c})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if (self.flavor, self.n) != (other.flavor, other.n):
            return False
        if self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[d] for d, c in self._terms.items())

    __hash__ = None

    def __repr__(self):
        return f"Element({self.flavor}, n={self.n}, terms={len(self._terms)})"

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "n": self.n,
            "terms": [
                {
                    "arcs": [list(a) for a in d.arcs],
                    "dots": [list(a) for a in d.dots],
                    "coeff": c.to_json(),
                }
                for d, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Element:
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            d = Diagram(n, tuple(tuple(a) for a in t["arcs"]), tuple(tuple(a) for a in t.get("dots", ())))
            terms[d] = Scalar.from_json(t["coeff"])
        return cls(data["flavor"], n, terms)

    def format_text(self) -> str:
        if not self._terms:
            return "0"
        lines = []
        for d, c in self.items():
            word = generator_word(self.flavor, d)
            label = format_diagram(d) if d.n else "()"
            if word is not None:
                label += f"  [{word or '1'}]"
            lines.append(f"{c.format()}  *  {label}")
        return "\n".join(lines)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for d, c in self.items():
            body = latex_diagram(self.flavor, d)
            if c.is_one():
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c.format(latex=True)}\\,{body}")
        return " + ".join(pieces)


def extend_diagram(d: Diagram, m: int) -> Diagram:
    """Add m - n through strands on the right."""
    n = d.n
    if m < n:
        raise DiagramError(f"cannot extend a {n}-strand diagram to {m} strands")
    shift = 2 * (m - n)

    def f(p):
        return p if p <= n else p + shift

    arcs = [(f(a), f(b)) for a, b in d.arcs]
    arcs += [(k, 2 * m + 1 - k) for k in range(n + 1, m + 1)]
    dots = [(f(a), f(b)) for a, b in d.dots]
    return Diagram(m, tuple(arcs), tuple(dots))


def extend(e: Element, m: int) -> Element:
    if m < e.n:
        raise ElementError(f"cannot extend an element of TL_{e.n} to TL_{m}")
    if m == e.n:
        return e
    return Element._trusted(e.flavor, m, {extend_diagram(d, m): c for d, c in e._terms.items()})


def _check_jw_range(flavor: str, n: int) -> None:
    check_flavor(flavor)
    lo = 1 if flavor == "A" else 0
    if not isinstance(n, int) or n < lo:
        raise ValueError(f"Jones-Wenzl projection of type {flavor} needs n >= {lo}, got {n}")


def _base(flavor: str) -> tuple[int, Element]:
    start = 1 if flavor == "A" else 0
    return start, Element.one(flavor, start)


@functools.lru_cache(maxsize=None)
def jw_wenzl(flavor: str, n: int) -> Element:
    """Jones-Wenzl projection by Wenzl's recurrence."""
    _check_jw_range(flavor, n)
    start, _ = _base(flavor)
    if n == start:
        return _base(flavor)[1]
    prev = extend(jw_wenzl(flavor, n - 1), n)
    k = n - 1
    e = Element.gen(flavor, n, k)
    ratio = quantum(flavor, k) / quantum(flavor, n)
    return prev + (prev * e * prev).scale(ratio)


@functools.lru_cache(maxsize=None)
def jw_morrison(flavor: str, n: int) -> Element:
    """Jones-Wenzl projection by Morrison's g-sum recurrence."""
    _check_jw_range(flavor, n)
    start, base = _base(flavor)
    if n == start:
        return base
    prev = extend(jw_morrison(flavor, n - 1), n)
    lo = 1 if flavor == "A" else 0
    gsum = Element(flavor, n, {g_diagram(flavor, n, i): quantum(flavor, i) for i in range(lo, n + 1)})
    return (prev * gsum).scale(quantum(flavor, n).inv())


def jw(flavor: str, n: int, method: str = "wenzl") -> Element:
    if method == "wenzl":
        return jw_wenzl(flavor, n)
    if method == "morrison":
        return jw_morrison(flavor, n)
    raise ValueError(f"unknown method {method!r}; expected 'wenzl' or 'morrison'")


def coeff(e: Element, d: Diagram) -> Scalar:
    return e.coeff(d)


class CoeffCache:
    """Memo table for ``coeff_recursive``; safe to share between threads."""

    def __init__(self):
        self._lock = threading.Lock()
        self._tables: dict[str, dict[Diagram, Scalar]] = {"A": {}, "B": {}}

    def get(self, flavor: str, d: Diagram) -> Scalar | None:
        with self._lock:
            return self._tables[flavor].get(d)

    def put(self, flavor: str, d: Diagram, value: Scalar) -> None:
        with self._lock:
            self._tables[flavor][d] = value

    def __len__(self):
        with self._lock:
            return sum(len(t) for t in self._tables.values())

    def clear(self) -> None:
        with self._lock:
            for t in self._tables.values():
                t.clear()

    def to_json(self, flavor: str) -> dict:
        with self._lock:
            items = sorted(self._tables[flavor].items())
        return {f"{d.n}:{format_diagram(d)}": c.to_json() for d, c in items}

    def load_json(self, flavor: str, data: Mapping) -> None:
        for key, value in data.items():
            n, text = key.split(":", 1)
            self.put(flavor, parse_diagram(text, int(n)), Scalar.from_json(value))

    def save(self, directory: str | Path) -> None:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        for flavor in ("A", "B"):
            (directory / f"coeff-{flavor}.json").write_text(json.dumps(self.to_json(flavor), sort_keys=True))

    def load(self, directory: str | Path) -> None:
        for flavor in ("A", "B"):
            path = Path(directory) / f"coeff-{flavor}.json"
            if path.exists():
                self.load_json(flavor, json.loads(path.read_text()))


COEFF_CACHE = CoeffCache()


def coeff_recursive(flavor: str, d: Diagram, cache: CoeffCache | None = None) -> Scalar:
    """
    Coefficient of d in the projection via the innermost-cap recurrence:
    Coeff^(n)(D) = sum_i [i]/[n] Coeff^(n-1)(D_i), Coeff^(0)(empty) = 1,
    with [i]_s in place of [i] for type B (i = 0 removes the dotted cap (1,2)).
    """
    check_flavor(flavor)
    if flavor == "A" and d.dots:
        raise DiagramError(f"type A diagram cannot carry dots: {d}")
    cache = COEFF_CACHE if cache is None else cache
    return _coeff_rec(flavor, d, cache)


def _coeff_rec(flavor: str, d: Diagram, cache: CoeffCache) -> Scalar:
    if d.n == 0:
        return ONE
    hit = cache.get(flavor, d)
    if hit is not None:
        return hit
    total = ZERO
    top = quantum(flavor, d.n)
    for i in innermost_caps(d):
        total = total + quantum(flavor, i) / top * _coeff_rec(flavor, remove_cap(d, i), cache)
    cache.put(flavor, d, total)
    return total


def generator_indices(flavor: str, n: int) -> range:
    return range(0 if flavor == "B" else 1, n)


def verify_projector(e: Element, prop43: bool | None = None) -> Report:
    """
    Check the defining properties: E*E = E, e_i E = E e_i = 0 for every
    generator, identity coefficient 1.  For type B additionally (by default)
    the squaring identities for e_n Q and Q e_n Q inside TL_{n+1}.
    """
    flavor, n = e.flavor, e.n
    report = Report(f"projector properties, type {flavor}, n={n}")
    with timed() as t:
        ok = e * e == e
    report.add(f"{flavor}{n}-idempotent", ok, seconds=t[0])
    for i in generator_indices(flavor, n):
        g = Element.gen(flavor, n, i)
        with timed() as t:
            left, right = (g * e).is_zero(), (e * g).is_zero()
        report.add(f"{flavor}{n}-annihilate-left-e{i}", left, seconds=t[0])
        report.add(f"{flavor}{n}-annihilate-right-e{i}", right, seconds=t[0])
    c = e.coeff(identity(n))
    report.add(f"{flavor}{n}-identity-coeff", c == ONE, ONE, c)
    if prop43 is None:
        prop43 = flavor == "B"
    if prop43:
        report.extend(squaring_identities(e))
    return report


def squaring_identities(e: Element) -> Report:
    """(e_n X)^2 = -[n+1]/[n] e_n X and (X e_n X)^2 = -[n+1]/[n] X e_n X in TL_{n+1}."""
    flavor, n = e.flavor, e.n
    report = Report(f"squaring identities, type {flavor}, n={n}")
    if flavor == "A" and n < 1:
        return report
    big = extend(e, n + 1)
    en = Element.gen(flavor, n + 1, n)
    factor = -(quantum(flavor, n + 1) / quantum(flavor, n))
    with timed() as t:
        x = en * big
        ok1 = x * x == x.scale(factor)
    report.add(f"{flavor}{n}-square-enX", ok1, seconds=t[0])
    with timed() as t:
        y = big * en * big
        ok2 = y * y == y.scale(factor)
    report.add(f"{flavor}{n}-square-XenX", ok2, seconds=t[0])
    return report


@functools.lru_cache(maxsize=None)
def _word_table(flavor: str, n: int) -> dict[Diagram, tuple[int, ...]]:
    """Shortest generator words reaching each diagram with factor exactly 1."""
    start = identity(n)
    table = {start: ()}
    queue = deque([start])
    gens = [(i, generator(flavor, n, i)) for i in generator_indices(flavor, n)]
    while queue:
        d = queue.popleft()
        for i, g in gens:
            f, r = compose(d, g)
            if r not in table and f.is_one():
                table[r] = table[d] + (i,)
                queue.append(r)
    return table


def generator_word(flavor: str, d: Diagram, max_n: int = 7) -> str | None:
    """E.g. ``"e_1e_2"`` for a product of generators, ``""`` for the identity."""
    if d.n > max_n:
        return None
    word = _word_table(flavor, d.n).get(d)
    if word is None:
        return None
    return "".join(f"e_{i}" for i in word)


def latex_diagram(flavor: str, d: Diagram) -> str:
    word = generator_word(flavor, d)
    if word == "" or d.n == 0:
        return "\\mathbf{1}"
    if word is not None:
        return "".join(f"e_{{{i}}}" for i in word.split("e_")[1:])
    dotted = set(d.dots)
    arcs = "".join(f"({i},{j})" + ("^{\\bullet}" if (i, j) in dotted else "") for i, j in d.arcs)
    return f"\\langle {arcs}\\rangle"


def g_family_report(flavor: str, n: int, method: str = "recursive") -> Report:
    """Coefficient of g_{n,i} against [i]/[n] (or [i]_s/[n]_s) for every i."""
    report = Report(f"g-family coefficients, type {flavor}, n={n}")
    lo = 1 if flavor == "A" else 0
    for i in range(lo, n + 1):
        g = g_diagram(flavor, n, i)
        expected = quantum(flavor, i) / quantum(flavor, n)
        with timed() as t:
            if method == "recursive":
                got = coeff_recursive(flavor, g)
            else:
                got = jw(flavor, n, method).coeff(g)
        report.add(f"{flavor}-g({n},{i})-{method}", got == expected, expected, got, t[0])
    return report


def all_coefficients(flavor: str, n: int) -> Iterable[tuple[Diagram, Scalar]]:
    for d in all_diagrams(flavor, n):
        yield d, coeff_recursive(flavor, d)

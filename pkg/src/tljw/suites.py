"""Verification suites (relations, projector, equivalence) and the worked-example checks."""

from __future__ import annotations

from .diagram import g_diagram, parse_diagram, to_path
from .paths import DottedPath, DyckPath
from .projector import (
    Element,
    coeff_recursive,
    g_family_report,
    generator_indices,
    jw_morrison,
    jw_wenzl,
    verify_projector,
)
from .report import Report, timed
from .scalar import DOT_MERGE, DOTTED_LOOP, LOOP, Scalar, qint, qint_b
from .tiling import (
    DyckTile,
    Tiling,
    admissible_tilings,
    enumerate_tilings,
    gf_A,
    gf_B,
    tiling_weight,
    validate_tiling,
    verify_equivalence,
)

SUITES = ("relations", "projector", "equivalence", "all")


def relations_report(flavor: str, n: int) -> Report:
    """Defining relations of TL^flavor_n evaluated on basis diagrams."""
    report = Report(f"relations, type {flavor}, n={n}")
    e = {i: Element.gen(flavor, n, i) for i in generator_indices(flavor, n)}

    def check(name, lhs, rhs):
        report.add(f"{flavor}{n}-{name}", lhs == rhs)

    for i, ei in e.items():
        if i == 0:
            check("e0^2", ei * ei, ei.scale(DOT_MERGE))
        else:
            check(f"e{i}^2", ei * ei, ei.scale(LOOP))
    for i in e:
        for j in e:
            if i == 0 or j == 0:
                continue
            if abs(i - j) == 1:
                check(f"e{i}e{j}e{i}", e[i] * e[j] * e[i], e[i])
            elif i < j:
                check(f"e{i}e{j}=e{j}e{i}", e[i] * e[j], e[j] * e[i])
    if flavor == "B":
        if 1 in e:
            check("e1e0e1", e[1] * e[0] * e[1], e[1].scale(DOTTED_LOOP))
        for i in e:
            if i >= 2:
                check(f"e0e{i}=e{i}e0", e[0] * e[i], e[i] * e[0])
    return report


def projector_report(flavor: str, n: int) -> Report:
    report = Report(f"projector suite, type {flavor}, n={n}")
    with timed() as t:
        same = jw_wenzl(flavor, n) == jw_morrison(flavor, n)
    report.add(f"{flavor}{n}-wenzl=morrison", same, seconds=t[0])
    report.extend(verify_projector(jw_wenzl(flavor, n)))
    if n >= 1:
        report.extend(g_family_report(flavor, n))
    return report


def run_suite(flavor: str, max_n: int, suite: str = "all") -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    report = Report(f"verify type {flavor} up to n={max_n}, suite {suite}")
    lo = 1 if flavor == "A" else 0
    for n in range(lo, max_n + 1):
        if suite in ("relations", "all"):
            report.extend(relations_report(flavor, n))
        if suite in ("projector", "all"):
            report.extend(projector_report(flavor, n))
        if suite in ("equivalence", "all") and n >= 1:
            report.extend(verify_equivalence(flavor, n))
    return report


def _q(n):
    return Scalar(qint(n))


def _qs(n):
    return Scalar(qint_b(n))


def _product(flavor, n, *indices) -> Element:
    out = Element.one(flavor, n)
    for i in indices:
        out = out * Element.gen(flavor, n, i)
    return out


def expected_projections() -> dict[str, Element]:
    """The small projections written out by hand."""
    one = Element.one
    p2 = one("A", 2) + _product("A", 2, 1).scale(_q(2).inv())
    p3 = (
        one("A", 3)
        + (_product("A", 3, 1) + _product("A", 3, 2)).scale(_q(2) / _q(3))
        + (_product("A", 3, 2, 1) + _product("A", 3, 1, 2)).scale(_q(3).inv())
    )
    q1 = one("B", 1) + _product("B", 1, 0).scale(_qs(1).inv())
    q2 = (
        one("B", 2)
        + _product("B", 2, 0).scale(_qs(1).inv())
        + _product("B", 2, 1).scale(_qs(1) / _qs(2))
        + (_product("B", 2, 1, 0) + _product("B", 2, 0, 1)).scale(_qs(2).inv())
        + _product("B", 2, 0, 1, 0).scale((_qs(2) * _qs(1)).inv())
    )
    return {"P2": p2, "P3": p3, "Q1": q1, "Q2": q2}


# two tilings above (UR)^5, as (h, leftmost x, profile)
FIG_TILINGS = {
    "D1": ((1, 2, "UR"), (1, 6, "UR"), (2, 5, ""), (3, 4, ""), (3, 6, ""), (4, 5, "")),
    "D2": ((1, 2, ""), (1, 4, "UR"), (1, 8, ""), (2, 3, ""), (2, 7, ""), (3, 4, "UR")),
}


def reproduce() -> Report:
    """One named check per worked value, each against its hand-derived target."""
    report = Report("worked examples")

    def add(name, expected, thunk):
        with timed() as t:
            actual = thunk()
        report.add(name, actual == expected, expected, actual, t[0])

    targets = expected_projections()
    for name, flavor, n in (("P2", "A", 2), ("P3", "A", 3), ("Q1", "B", 1), ("Q2", "B", 2)):
        for method, fn in (("wenzl", jw_wenzl), ("morrison", jw_morrison)):
            with timed() as t:
                got = fn(flavor, n)
            report.add(f"{name}-{method}", got == targets[name], len(targets[name]), len(got), t[0],
                       "term-by-term comparison; values are term counts")

    # Example product D e_3 e_5
    d = parse_diagram("(1,12)(2,5)(3,4)(6,9)(7,8)(10,11)")
    prod = Element.basis("A", d) * _product("A", 6, 3, 5)
    want = Element.basis("A", parse_diagram("(1,12)(2,9)(3,4)(5,6)(7,8)(10,11)"), LOOP)
    report.add("D*e3*e5", prod == want)
    report.add("fold(D)", str(to_path(d)) == "UUURRUURRURR", "UUURRUURRURR", str(to_path(d)))

    e1 = parse_diagram("(1,2)(3,4)(5,6)")
    target = _q(2) / _q(3)
    add("coeff3(e1)-recursive", target, lambda: coeff_recursive("A", e1))
    add("coeff3(e1)-tilings", target, lambda: gf_A(to_path(e1).path))
    add("coeff3(e1)-wenzl", target, lambda: jw_wenzl("A", 3).coeff(e1))
    add("coeff3(e1)-morrison", target, lambda: jw_morrison("A", 3).coeff(e1))

    fig_mu = DyckPath("UR" * 5)
    all_fig = enumerate_tilings(fig_mu)
    add("tiling-count-(UR)^5", 12, lambda: len(all_fig))
    add("tilings-(UR)^5-valid", True, lambda: all(not validate_tiling(t) for t in all_fig))
    fig_weights = {"D1": _q(3) / (_q(2) * _q(4) * _q(5)), "D2": (_q(2) * _q(3) * _q(4)).inv()}
    for name, tiles in FIG_TILINGS.items():
        tiling = Tiling(fig_mu, tuple(sorted(DyckTile(*t) for t in tiles)))
        report.add(f"tiling-{name}-present", tiling in all_fig)
        add(f"tiling-weight-{name}", fig_weights[name], lambda: tiling_weight(tiling, "A"))
    add("Z((UR)^5)=coeff", coeff_recursive("A", parse_diagram("(1,2)(3,4)(5,6)(7,8)(9,10)")),
        lambda: gf_A(fig_mu))

    add("tiling-count(URURUR)", 2, lambda: len(enumerate_tilings(DyckPath("URURUR"))))
    add("Z(URURUR)", _q(2) / _q(3), lambda: gf_A("URURUR"))

    for n in range(1, 6):
        for i in range(1, n + 1):
            add(f"coeff{n}(g{n},{i})", _q(i) / _q(n), lambda: coeff_recursive("A", g_diagram("A", n, i)))
    for i in range(0, 5):
        add(f"coeffB4(g4,{i})", _qs(i) / _qs(4), lambda: coeff_recursive("B", g_diagram("B", 4, i)))

    dotted = parse_diagram("(1,2)(3,6)*(4,5)(7,8)")
    target_b = _q(2) * _qs(1) / (_qs(4) * _qs(2))
    add("coeffB4-recursive", target_b, lambda: coeff_recursive("B", dotted))
    add("coeffB4-wenzl", target_b, lambda: jw_wenzl("B", 4).coeff(dotted))
    add("coeffB3-first-summand", _qs(2) / _qs(3) * _qs(2).inv(),
        lambda: coeff_recursive("B", parse_diagram("(1,4)*(2,3)(5,6)")))
    add("coeffB3-second-summand", _qs(1) / (_qs(3) * _qs(2)),
        lambda: coeff_recursive("B", parse_diagram("(1,2)(3,4)*(5,6)")))
    p = to_path(dotted)
    add("path(dotted-D)", "URUURRUR [3-6]", lambda: str(p))
    add("tiling-count(URUURRUR)", 3, lambda: len(enumerate_tilings(p.path)))
    add("admissible-count(URUURRUR;3-6)", 2, lambda: len(admissible_tilings(p)))
    add("ZB(URUURRUR;3-6)", target_b, lambda: gf_B(p))
    add("ZB(URUR;1-2,3-4)", (_qs(2) * _qs(1)).inv(),
        lambda: gf_B(DottedPath(DyckPath("URUR"), ((1, 2), (3, 4)))))
    return report

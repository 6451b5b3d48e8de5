from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import catalan
from tljw.diagram import (
    Diagram,
    DiagramError,
    all_diagrams,
    compose,
    format_diagram,
    from_path,
    g_diagram,
    generator,
    identity,
    innermost_caps,
    parse_diagram,
    remove_cap,
    to_path,
)
from tljw.paths import DottedPath, DyckPath, PathError, parse_dots
from tljw.scalar import DOT_MERGE, DOTTED_LOOP, LOOP, ONE, Scalar, qint_b


def D(text, n=None):
    return parse_diagram(text, n)


class TestConstructors:
    def test_identity(self):
        assert identity(1) == D("(1,2)")
        assert identity(3) == D("(1,6)(2,5)(3,4)")

    def test_generators(self):
        assert generator("A", 2, 1) == D("(1,2)(3,4)")
        assert generator("B", 2, 0) == D("(1,4)*(2,3)")
        assert generator("A", 3, 1) == D("(1,2)(3,4)(5,6)")
        assert generator("A", 3, 2) == D("(1,6)(2,3)(4,5)")

    def test_g_diagrams(self):
        assert g_diagram("A", 4, 4) == identity(4)
        assert g_diagram("B", 4, 0) == D("(1,2)*(3,8)(4,7)(5,6)")
        assert g_diagram("A", 4, 2) == D("(1,8)(2,3)(4,7)(5,6)")
        assert g_diagram("A", 3, 1) == D("(1,2)(3,6)(4,5)")
        assert g_diagram("A", 3, 2) == generator("A", 3, 2)

    @pytest.mark.parametrize("args", [("A", 3, 0), ("A", 3, 3), ("B", 2, -1), ("C", 2, 1)])
    def test_generator_out_of_range(self, args):
        with pytest.raises((DiagramError, ValueError)):
            generator(*args)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_type_a_count_is_catalan(self, n):
        assert len(all_diagrams("A", n)) == catalan(n)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_type_b_count_is_central_binomial(self, n):
        assert len(all_diagrams("B", n)) == comb(2 * n, n)

    def test_type_b_dots_only_outermost(self):
        for d in all_diagrams("B", 5):
            assert set(d.dots) <= set(d.outermost_arcs())


class TestValidation:
    @pytest.mark.parametrize(
        "text",
        ["(1,3)(2,4)", "(1,2)(1,4)", "(1,2)", "(1,4)(2,3)*", "(2,1)(3,4)", "(1,2)(3,5)"],
    )
    def test_invalid_diagrams(self, text):
        with pytest.raises(DiagramError):
            D(text, 2)

    def test_parse_error_cites_position(self):
        with pytest.raises(DiagramError, match="position 10"):
            D("(1,6)(2,5)(3,x)")

    def test_round_trip_text(self):
        for d in all_diagrams("B", 4):
            assert D(format_diagram(d), d.n) == d


class TestComposition:
    def test_loop_removal(self):
        e1 = generator("A", 2, 1)
        assert compose(e1, e1) == (LOOP, e1)

    def test_dot_merge(self):
        e0 = generator("B", 1, 0)
        assert compose(e0, e0) == (DOT_MERGE, e0)
        assert DOT_MERGE == -Scalar(qint_b(1))

    def test_dotted_loop(self):
        e0, e1 = generator("B", 2, 0), generator("B", 2, 1)
        f1, mid = compose(e0, e1)
        f2, out = compose(e1, mid)
        assert f1 * f2 == DOTTED_LOOP and out == e1

    def test_worked_product(self):
        d = D("(1,12)(2,5)(3,4)(6,9)(7,8)(10,11)")
        f1, de3 = compose(d, generator("A", 6, 3))
        f2, out = compose(de3, generator("A", 6, 5))
        assert f1 * f2 == LOOP
        assert out == D("(1,12)(2,9)(3,4)(5,6)(7,8)(10,11)")

    @pytest.mark.parametrize("flavor,n", [("A", 4), ("B", 3)])
    def test_unit_law(self, flavor, n):
        for d in all_diagrams(flavor, n):
            assert compose(identity(n), d) == (ONE, d)
            assert compose(d, identity(n)) == (ONE, d)

    @given(st.data())
    def test_associativity(self, data):
        flavor, n = data.draw(st.sampled_from([("A", 4), ("A", 5), ("B", 3), ("B", 4)]))
        pool = all_diagrams(flavor, n)
        a, b, c = (data.draw(st.sampled_from(pool)) for _ in range(3))
        f_ab, ab = compose(a, b)
        f_left, left = compose(ab, c)
        f_bc, bc = compose(b, c)
        f_right, right = compose(a, bc)
        assert left == right
        assert f_ab * f_left == f_bc * f_right

    def test_size_mismatch(self):
        with pytest.raises(DiagramError):
            compose(identity(2), identity(3))


class TestFolding:
    def test_examples(self):
        assert str(to_path(D("(1,12)(2,5)(3,4)(6,9)(7,8)(10,11)")).path) == "UUURRUURRURR"
        assert to_path(identity(4)).path == DyckPath.top(4)
        p = to_path(D("(1,2)(3,6)*(4,5)(7,8)"))
        assert p.path.steps == "URUURRUR" and p.dotted == ((3, 6),)

    def test_from_path(self):
        assert from_path("UURR") == identity(2)
        assert from_path("URUR") == D("(1,2)(3,4)")
        assert from_path("URUURRUR", [(3, 6)]) == D("(1,2)(3,6)*(4,5)(7,8)")

    @pytest.mark.parametrize("flavor,top", [("A", 8), ("B", 5)])
    def test_round_trip(self, flavor, top):
        for n in range(top + 1):
            seen = set()
            for d in all_diagrams(flavor, n):
                p = to_path(d)
                assert from_path(p) == d
                seen.add(p)
            assert len(seen) == len(all_diagrams(flavor, n))

    def test_bad_paths(self):
        with pytest.raises(PathError):
            DyckPath("RU")
        with pytest.raises(PathError):
            DyckPath("UUR")
        with pytest.raises(PathError):
            DottedPath(DyckPath("UURR"), ((2, 3),))
        with pytest.raises(PathError):
            parse_dots("3-x")


class TestCaps:
    def test_innermost(self):
        assert innermost_caps(identity(5)) == (5,)
        assert set(innermost_caps(D("(1,2)(3,6)*(4,5)(7,8)"))) == {1, 4}
        assert innermost_caps(generator("B", 1, 0)) == (0,)

    def test_remove_cap(self):
        assert remove_cap(identity(4), 4) == identity(3)
        d = D("(1,2)(3,6)*(4,5)(7,8)")
        assert remove_cap(d, 4) == D("(1,2)(3,4)*(5,6)")
        assert remove_cap(d, 1) == D("(1,4)*(2,3)(5,6)")

    def test_removal_keeps_validity(self):
        for d in all_diagrams("B", 4):
            for i in innermost_caps(d):
                out = remove_cap(d, i)
                assert isinstance(out, Diagram) and out.n == 3

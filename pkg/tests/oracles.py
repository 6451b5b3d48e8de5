"""Independent reference computations used by the tests."""

from fractions import Fraction

# rational sample points: no [k] or [k]_s with k <= 40 vanishes at any of them
POINTS = [(Fraction(2), Fraction(3)), (Fraction(3, 2), Fraction(-5, 7)), (Fraction(-7, 3), Fraction(4, 11))]


def eval_poly(poly, q, s):
    return sum((Fraction(c) * q**a * s**b for (a, b), c in poly.terms.items()), Fraction(0))


def eval_scalar(x, q, s):
    return eval_poly(x.num, q, s) / eval_poly(x.den, q, s)


def qint_value(n, q):
    """[n] from the closed form (q^n - q^-n)/(q - q^-1)."""
    return (q**n - q**-n) / (q - 1 / q)


def qint_b_value(n, q, s):
    return Fraction(1) if n == 0 else q ** (n - 1) * s + q ** (1 - n) / s


def catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)

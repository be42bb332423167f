"""Independent oracle for frozen test values.

Expands the double-sum representation of P_n(x) symbolically with sympy and
prints coefficient rows plus the derived Q_n / R_n coefficients. The C++ test
suite freezes the printed values; rerun this script to regenerate them.
"""
import sys

from sympy import Rational, binomial, expand, factorial, Poly, symbols

x = symbols("x")


def p_double_sum(n):
    total = 0
    for j in range(n + 1):
        for k in range(n - j + 1):
            total += (binomial(2 * n + 1, 2 * j) * binomial(n - j, k)
                      * binomial(2 * k + 2 * j, k + j)
                      * (x + 1) ** j * (x - 1) ** k / Rational(2) ** (3 * (k + j)))
    return Poly(expand(total), x)


def row(n):
    p = p_double_sum(n)
    return [p.coeff_monomial(x ** i) for i in range(n + 1)]


def fmt(values):
    return "[" + ", ".join(str(v) for v in values) + "]"


if __name__ == "__main__":
    for n in [int(a) for a in sys.argv[1:]] or [3, 5, 10]:
        d = row(n)
        print(f"d({n}) = {fmt(d)}")
        print(f"Q_{n} = {fmt([v / factorial(i) for i, v in enumerate(d)])}")
        print(f"R_{n} = {fmt([v / factorial(i + 2) for i, v in enumerate(d)])}")

"""Independent oracles, built on sympy rather than on the package's arithmetic.

A quaternion algebra (a, b) embeds in 2x2 matrices over Q(sqrt a):

    x0 + x1 i + x2 j + x3 k  ->  [[x0 + x1 r,   b (x2 + x3 r)],
                                  [x2 - x3 r,   x0 - x1 r    ]],   r = sqrt(a)

so products and inverses can be computed by ordinary commutative linear
algebra and mapped back.
"""

from fractions import Fraction

import sympy

from hermorita.algebra import QUATERNION, AlgebraElement
from hermorita.matrices import Matrix


def _r(desc):
    return sympy.sqrt(sympy.Rational(str(desc.a)))


def quaternion_to_2x2(x: AlgebraElement) -> sympy.Matrix:
    desc = x.descriptor
    assert desc.kind == QUATERNION
    r = _r(desc)
    b = sympy.Rational(str(desc.b))
    x0, x1, x2, x3 = (sympy.Rational(str(c)) for c in x.coords)
    return sympy.Matrix([[x0 + x1 * r, b * (x2 + x3 * r)], [x2 - x3 * r, x0 - x1 * r]])


def quaternion_from_2x2(m: sympy.Matrix, desc) -> AlgebraElement:
    r = _r(desc)
    b = sympy.Rational(str(desc.b))
    x0 = (m[0, 0] + m[1, 1]) / 2
    x1 = (m[0, 0] - m[1, 1]) / (2 * r)
    x2 = (m[1, 0] + m[0, 1] / b) / 2
    x3 = (m[0, 1] / b - m[1, 0]) / (2 * r)
    coords = []
    for v in (x0, x1, x2, x3):
        v = sympy.expand(sympy.radsimp(sympy.expand(v)))
        assert v.is_rational, v
        coords.append(str(v))
    return desc.element(coords)


def _embed_fraction(x: AlgebraElement):
    """The 2x2 image with entries ``(p, q)`` meaning ``p + q sqrt(a)``, over Fractions."""
    b = Fraction(str(x.descriptor.b))
    x0, x1, x2, x3 = (Fraction(str(c)) for c in x.coords)
    return [[(x0, x1), (b * x2, b * x3)], [(x2, -x3), (x0, -x1)]]


def quaternion_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Multiply via the 2x2 embedding using plain Fraction arithmetic."""
    a = Fraction(str(x.descriptor.a))
    b = Fraction(str(x.descriptor.b))

    def mul(u, v):
        return (u[0] * v[0] + a * u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def add(u, v):
        return (u[0] + v[0], u[1] + v[1])

    X, Y = _embed_fraction(x), _embed_fraction(y)
    m = [[add(mul(X[i][0], Y[0][j]), mul(X[i][1], Y[1][j])) for j in range(2)] for i in range(2)]
    x0 = (m[0][0][0] + m[1][1][0]) / 2
    x1 = (m[0][0][1] - m[1][1][1]) / 2
    x2 = (m[1][0][0] + m[0][1][0] / b) / 2
    x3 = (m[0][1][1] / b - m[1][0][1]) / 2
    assert m[0][0][1] == -m[1][1][1] and m[0][1][0] / b == m[1][0][0]
    return x.descriptor.element([str(v) for v in (x0, x1, x2, x3)])


def quaternion_matrix_inverse(a: Matrix) -> Matrix:
    """Invert over D by inverting the 2n x 2n block image over Q(sqrt a)."""
    desc = a.descriptor
    n = a.rows
    big = sympy.zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            big[2 * i:2 * i + 2, 2 * j:2 * j + 2] = quaternion_to_2x2(a[i, j])
    inv = big.inv()
    return Matrix(desc, [
        [quaternion_from_2x2(inv[2 * i:2 * i + 2, 2 * j:2 * j + 2], desc) for j in range(n)]
        for i in range(n)
    ])


def naive_matmul(a: Matrix, b: Matrix) -> Matrix:
    """Triple loop with the left factor kept on the left."""
    desc = a.descriptor
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = desc.zero()
            for t in range(a.cols):
                acc = acc + a[i, t] * b[t, j]
            row.append(acc)
        out.append(row)
    return Matrix(desc, out)

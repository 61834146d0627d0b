import random

import pytest

from hermorita.algebra import quaternion_algebra, rational_field
from hermorita.errors import DescriptorMismatch, NotEpsilonHermitian, ShapeMismatch, Singular
from hermorita.involutions import apply_involution, involution_from_S, transpose_involution
from hermorita.matrices import Matrix, bar_transpose
from hermorita.randoms import admits_nonsingular, random_involution, random_matrix

from conftest import ALGEBRAS


def test_identity_S_is_hermitian(algebra):
    spec = involution_from_S(Matrix.identity(algebra, 3))
    assert spec.epsilon0 == 1
    X = random_matrix(random.Random(1), algebra, 3, 3)
    assert apply_involution(spec, X) == bar_transpose(X)


def test_symplectic_S_over_q():
    Q = rational_field()
    spec = involution_from_S(Matrix.from_values(Q, [[0, 1], [-1, 0]]))
    assert spec.epsilon0 == -1


def test_diag_S_over_quaternions():
    H = quaternion_algebra(-1, -1)
    assert involution_from_S(Matrix.diagonal(H, [1, -1])).epsilon0 == 1
    assert involution_from_S(Matrix.diagonal(H, [H.gen("i"), H.gen("j")])).epsilon0 == -1


def test_symplectic_adjoint_hand_computed():
    # S X^t S^-1 with S = [[0,1],[-1,0]], X = [[1,2],[3,4]]:
    # X^t = [[1,3],[2,4]], S X^t = [[2,4],[-1,-3]], S^-1 = [[0,-1],[1,0]]
    Q = rational_field()
    spec = involution_from_S(Matrix.from_values(Q, [[0, 1], [-1, 0]]))
    X = Matrix.from_values(Q, [[1, 2], [3, 4]])
    assert apply_involution(spec, X) == Matrix.from_values(Q, [[4, -2], [-3, 1]])


def test_rejects_bad_S(H):
    with pytest.raises(NotEpsilonHermitian):
        involution_from_S(Matrix.from_values(H, [[1, 2], [3, 4]]))
    with pytest.raises(Singular):
        involution_from_S(Matrix.from_values(H, [[1, 1], [1, 1]]))
    with pytest.raises(ShapeMismatch):
        involution_from_S(Matrix.zeros(H, 1, 2))


def test_apply_checks_shape_and_algebra(H):
    spec = transpose_involution(H, 2)
    with pytest.raises(ShapeMismatch):
        apply_involution(spec, Matrix.identity(H, 3))
    with pytest.raises(DescriptorMismatch):
        apply_involution(spec, Matrix.identity(rational_field(), 2))


def _specs(desc, n, rng):
    for eps0 in (1, -1):
        if admits_nonsingular(desc, n, eps0):
            yield random_involution(rng, desc, n, eps0)


@pytest.mark.parametrize("desc", ALGEBRAS, ids=str)
def test_involution_axioms(desc):
    rng = random.Random(31)
    for n in (1, 2, 3):
        for spec in _specs(desc, n, rng):
            for _ in range(3):
                X = random_matrix(rng, desc, n, n)
                Y = random_matrix(rng, desc, n, n)
                star = spec
                assert star(star(X)) == X
                assert star(X @ Y) == star(Y) @ star(X)
                q = rng.randint(-5, 5)
                assert star(q * Matrix.identity(desc, n)) == q * Matrix.identity(desc, n)


@pytest.mark.parametrize("desc", ALGEBRAS, ids=str)
@pytest.mark.parametrize("lam", [2, 3, -1, 7])
def test_lambda_S_defines_same_involution(desc, lam):
    rng = random.Random(lam)
    for spec in _specs(desc, 2, rng):
        scaled = involution_from_S(lam * spec.S)
        assert scaled.epsilon0 == spec.epsilon0
        for _ in range(5):
            X = random_matrix(rng, desc, 2, 2)
            assert apply_involution(scaled, X) == apply_involution(spec, X)

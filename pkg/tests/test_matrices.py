import random

import pytest

from hermorita.algebra import quaternion_algebra, rational_field
from hermorita.errors import DescriptorMismatch, IndexOutOfRange, NotDivision, ShapeMismatch, Singular
from hermorita.matrices import (
    Matrix,
    bar_transpose,
    block_diagonal,
    mat_add,
    mat_eq,
    mat_inv,
    mat_mul,
    mat_scale_left,
    unit_matrix,
)
from hermorita.randoms import random_matrix

from conftest import ALGEBRAS
from oracles import naive_matmul, quaternion_matrix_inverse


def test_eq1_example(algebra):
    k, n = 2, 3
    e = unit_matrix(k, n, 1, 2, algebra)
    E = unit_matrix(n, n, 2, 3, algebra)
    assert mat_mul(e, E) == unit_matrix(k, n, 1, 3, algebra)


@pytest.mark.parametrize("desc", ALGEBRAS, ids=str)
def test_eq1_exhaustive(desc):
    for k in range(1, 5):
        for n in range(1, 5):
            for i in range(1, k + 1):
                for f in range(1, n + 1):
                    e_if = unit_matrix(k, n, i, f, desc)
                    if i <= n:
                        assert e_if == unit_matrix(k, n, i, i, desc) @ unit_matrix(n, n, i, f, desc)
                    for ell in range(1, n + 1):
                        assert e_if @ unit_matrix(n, n, f, ell, desc) == unit_matrix(k, n, i, ell, desc)


def test_identity_is_neutral(algebra):
    rng = random.Random(3)
    X = random_matrix(rng, algebra, 3, 2)
    assert Matrix.identity(algebra, 3) @ X == X
    assert X @ Matrix.identity(algebra, 2) == X


def test_quaternion_products(H):
    i, j, k = (Matrix.from_values(H, [[H.gen(g)]]) for g in "ijk")
    assert i @ j == k
    assert j @ i == -k


def test_product_matches_naive(algebra):
    rng = random.Random(11)
    for _ in range(10):
        A = random_matrix(rng, algebra, 2, 3, density=0.7)
        B = random_matrix(rng, algebra, 3, 2, density=0.7)
        assert A @ B == naive_matmul(A, B)


def test_bar_transpose_of_unit_is_transposed_unit(algebra):
    assert bar_transpose(unit_matrix(2, 3, 1, 2, algebra)) == unit_matrix(3, 2, 2, 1, algebra)


def test_bar_transpose_over_q_is_transpose():
    Q = rational_field()
    A = Matrix.from_values(Q, [[1, 2, 3], [4, 5, 6]])
    assert bar_transpose(A) == Matrix.from_values(Q, [[1, 4], [2, 5], [3, 6]])


def test_bar_transpose_conjugates(H):
    A = Matrix.from_values(H, [[H.gen("i"), 1]])
    assert bar_transpose(A) == Matrix.from_values(H, [[-H.gen("i")], [1]])


def test_unit_matrix_example():
    Q = rational_field()
    assert unit_matrix(2, 2, 1, 2, Q) == Matrix.from_values(Q, [[0, 1], [0, 0]])
    with pytest.raises(IndexOutOfRange):
        unit_matrix(2, 2, 3, 1, Q)
    with pytest.raises(IndexOutOfRange):
        unit_matrix(2, 2, 1, 0, Q)


def test_unit_matrix_row_and_column_picking(algebra):
    rng = random.Random(5)
    n = 3
    for _ in range(5):
        C = random_matrix(rng, algebra, n, n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                E = unit_matrix(n, n, i, j, algebra)
                left = E @ C
                right = C @ E
                for r in range(n):
                    for c in range(n):
                        assert left[r, c] == (C[j - 1, c] if r == i - 1 else algebra.zero())
                        assert right[r, c] == (C[r, i - 1] if c == j - 1 else algebra.zero())


def test_inverse_identity(algebra):
    ident = Matrix.identity(algebra, 3)
    assert mat_inv(ident) == ident


def test_inverse_diag(H):
    i, j = H.gen("i"), H.gen("j")
    assert mat_inv(Matrix.diagonal(H, [i, j])) == Matrix.diagonal(H, [-i, -j])


def test_inverse_frozen_quaternion_example(H):
    i, j, k = H.gen("i"), H.gen("j"), H.gen("k")
    M = Matrix.from_values(H, [[1, i], [j, k]])
    inv = mat_inv(M)
    ident = Matrix.identity(H, 2)
    assert M @ inv == ident and inv @ M == ident
    # frozen from the 2x2-embedding oracle
    expected = Matrix.from_values(H, [[["1/2", 0, 0, 0], [0, 0, "-1/2", 0]],
                                      [[0, "-1/2", 0, 0], [0, 0, 0, "-1/2"]]])
    assert inv == expected


@pytest.mark.parametrize("seed", range(3))
def test_inverse_against_embedding_oracle(seed):
    H = quaternion_algebra(-1, -3)
    rng = random.Random(seed)
    M = random_matrix(rng, H, 2, 2)
    assert mat_inv(M) == quaternion_matrix_inverse(M)


def test_inverse_needs_pivoting(algebra):
    P = Matrix.from_values(algebra, [[0, 1], [1, 0]])
    assert mat_inv(P) == P


def test_singular(algebra):
    A = Matrix.from_values(algebra, [[1, 2], [2, 4]])
    with pytest.raises(Singular):
        mat_inv(A)
    with pytest.raises(ShapeMismatch):
        mat_inv(Matrix.zeros(algebra, 2, 3))


def test_zero_divisor_pivot_is_loud():
    M = quaternion_algebra(1, 1)
    A = Matrix.from_values(M, [[1 + M.gen("i")]])
    with pytest.raises(NotDivision):
        mat_inv(A)


def test_entrywise_helpers(H):
    rng = random.Random(2)
    A = random_matrix(rng, H, 2, 2)
    assert mat_add(A, -A) == Matrix.zeros(H, 2, 2)
    assert mat_scale_left(H.one(), A) == A
    assert mat_scale_left(H.gen("i"), Matrix.from_values(H, [[H.gen("j")]])) == Matrix.from_values(H, [[H.gen("k")]])
    assert mat_eq(A, A) and not mat_eq(A, -A)


def test_mismatches(H):
    Q = rational_field()
    with pytest.raises(DescriptorMismatch):
        Matrix.identity(H, 2) @ Matrix.identity(Q, 2)
    with pytest.raises(ShapeMismatch):
        Matrix.identity(H, 2) @ Matrix.identity(H, 3)
    with pytest.raises(ShapeMismatch):
        Matrix.identity(H, 2) + Matrix.identity(H, 3)


def test_block_diagonal(algebra):
    A = Matrix.from_values(algebra, [[1]])
    B = Matrix.from_values(algebra, [[-1]])
    assert block_diagonal(A, B) == Matrix.diagonal(algebra, [1, -1])


@pytest.mark.parametrize("desc", ALGEBRAS, ids=str)
def test_ring_laws(desc):
    rng = random.Random(17)
    for _ in range(15):
        a, b, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        A = random_matrix(rng, desc, a, b)
        B = random_matrix(rng, desc, b, c)
        C = random_matrix(rng, desc, c, 2)
        assert (A @ B) @ C == A @ (B @ C)
        assert bar_transpose(A @ B) == bar_transpose(B) @ bar_transpose(A)
        assert bar_transpose(bar_transpose(A)) == A


@pytest.mark.parametrize("desc", ALGEBRAS, ids=str)
def test_inverse_two_sided_random(desc):
    rng = random.Random(23)
    for _ in range(10):
        A = random_matrix(rng, desc, 3, 3)
        try:
            inv = mat_inv(A)
        except (Singular, NotDivision):
            continue
        ident = Matrix.identity(desc, 3)
        assert inv @ A == ident and A @ inv == ident

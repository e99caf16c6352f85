import random

import pytest

from core.errors import RaggedMatrix
from core.linalg import kernel_solve, mat_vec
from core.ratfn import RatFn
from strategies import random_ratfn


def consts(rows, p=5):
    return [[RatFn.constant(c, 2, p) for c in row] for row in rows]


def test_ragged_rejected():
    m = consts([[1, 2], [3]])
    with pytest.raises(RaggedMatrix):
        kernel_solve(m)
    with pytest.raises(RaggedMatrix):
        kernel_solve([])


def test_full_rank_has_no_kernel():
    assert kernel_solve(consts([[1, 0], [0, 1]])) is None


def test_kernel_vector_convention():
    # x1 + 2 x2 + 3 x3 = 0; the first free column is set to 1
    v = kernel_solve(consts([[1, 2, 3]]))
    assert v == [RatFn.constant(-2, 2, 5), RatFn.one(2, 5), RatFn.zero(2, 5)]


def test_zero_matrix_kernel():
    v = kernel_solve(consts([[0, 0], [0, 0]]))
    assert v == [RatFn.one(2, 5), RatFn.zero(2, 5)]


def test_random_singular_systems():
    rng = random.Random(5)
    for k in range(30):
        p = (2, 3, 5)[k % 3]
        rows = [[random_ratfn(rng, p, deg=2, den_deg=1) for _ in range(3)] for _ in range(2)]
        # append a dependent row so the rank stays below the column count
        rows.append([a + b for a, b in zip(rows[0], rows[1])])
        v = kernel_solve(rows)
        assert v is not None
        assert any(not e.is_zero for e in v)
        assert all(e.is_zero for e in mat_vec(rows, v))


def test_kernel_solve_is_deterministic():
    rng = random.Random(6)
    for k in range(15):
        p = (2, 3, 5)[k % 3]
        rows = [[random_ratfn(rng, p, deg=2, den_deg=1) for _ in range(4)] for _ in range(3)]
        again = [[RatFn(e.num, e.den) for e in row] for row in rows]
        assert kernel_solve(rows) == kernel_solve(again)

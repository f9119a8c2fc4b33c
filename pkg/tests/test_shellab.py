from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from conftest import all_valid
from monosig.classify import ALLOWED_SEMISIMPLE, check_semisimple
from monosig.search import random_valid_signature
from monosig.shellab import (
    LambdaMatrix,
    NotRealizableError,
    emit_lambda,
    find_shelling_order,
    is_shellable_order,
    lambda_matrix,
    parse_lambda,
    signature_from_lambda,
)
from monosig.sigcore import (
    PreconditionError,
    SigFormatError,
    SignatureFunction,
    invert,
    relabel,
)
from monosig.stats import side_count


def test_lambda_matrix_triangle():
    lam = lambda_matrix(SignatureFunction(3, "+"))
    assert lam[(1, 2)] == 1 and lam[(2, 1)] == 0
    assert lam[(1, 3)] == 0 and lam[(3, 1)] == 1
    assert lam[(2, 3)] == 1 and lam[(3, 2)] == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lambda_antisymmetry(n):
    for sigma in all_valid(n, "semisimple"):
        lam = lambda_matrix(sigma)
        for i in range(1, n + 1):
            assert lam[(i, i)] == 0
            for j in range(1, n + 1):
                if i != j:
                    assert 0 <= lam[(i, j)] <= n - 2
                    assert lam[(i, j)] + lam[(j, i)] == n - 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_k_edge_consistency_with_side_counts(n):
    for sigma in all_valid(n, "semisimple"):
        lam = lambda_matrix(sigma)
        for i, j in combinations(range(1, n + 1), 2):
            assert {lam[(i, j)], lam[(j, i)]} == set(side_count(sigma, i, j))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_lambda_round_trip_exhaustive(n):
    for sigma in all_valid(n, "semisimple"):
        assert signature_from_lambda(lambda_matrix(sigma)) == sigma


def test_lambda_round_trip_sampled_n7():
    rng = random.Random(7)
    for _ in range(50):
        sigma = random_valid_signature(7, "semisimple", rng)
        assert signature_from_lambda(lambda_matrix(sigma)) == sigma


def test_all_one_matrix_is_rejected():
    lam = LambdaMatrix(
        4, tuple(tuple(0 if i == j else 1 for j in range(4)) for i in range(4))
    )
    with pytest.raises(NotRealizableError):
        signature_from_lambda(lam)


def test_inconsistent_matrices_are_rejected():
    with pytest.raises(NotRealizableError):
        signature_from_lambda(
            LambdaMatrix(3, ((0, 1, 1), (1, 0, 1), (1, 1, 0)))
        )
    with pytest.raises(NotRealizableError):
        signature_from_lambda(LambdaMatrix(3, ((1, 1, 0), (0, 0, 1), (1, 0, 0))))


def test_lambda_relabel_equivariance():
    # the reversal permutation always preserves validity (it is the
    # composition of the two reflections), so the property is never vacuous
    rng = random.Random(13)
    reversal = tuple(range(6, 0, -1))
    for _ in range(10):
        sigma = random_valid_signature(6, "semisimple", rng)
        pi = list(range(1, 7))
        rng.shuffle(pi)
        for perm in (reversal, tuple(pi)):
            relabeled = relabel(sigma, perm)
            if not check_semisimple(relabeled).valid:
                continue  # orientations relabel; validity need not survive
            lam = lambda_matrix(sigma)
            lam2 = lambda_matrix(relabeled)
            for i, j in combinations(range(1, 7), 2):
                assert lam2[(perm[i - 1], perm[j - 1])] == lam[(i, j)]
                assert lam2[(perm[j - 1], perm[i - 1])] == lam[(j, i)]


def test_lambda_text_format_round_trip():
    lam = lambda_matrix(SignatureFunction(3, "+"))
    text = emit_lambda(lam)
    assert text == "lam v1\nn 3\n0 1 0\n0 0 1\n1 0 0\n"
    assert parse_lambda(text) == lam


@pytest.mark.parametrize(
    "data",
    [
        "lam v2\nn 3\n0 1 0\n0 0 1\n1 0 0\n",
        "lam v1\nn 3\n0 1\n0 0 1\n1 0 0\n",
        "lam v1\nn 3\n0 1 0\n0 0 1\n",
        "lam v1\nn x\n",
    ],
)
def test_lambda_parse_rejects_malformed(data):
    with pytest.raises(SigFormatError):
        parse_lambda(data)


def test_identity_is_a_shelling_order():
    for sigma in all_valid(5, "semisimple")[::9]:
        assert is_shellable_order(sigma, (1, 2, 3, 4, 5))


def test_find_returns_identity_first():
    for sigma in all_valid(5, "semisimple")[::25]:
        assert find_shelling_order(sigma) == (1, 2, 3, 4, 5)


def test_shellable_orders_match_relabel_scan():
    sigma = SignatureFunction(4, "+++-")
    for perm in permutations(range(1, 5)):
        expected = check_semisimple(relabel(sigma, invert(perm))).valid
        assert is_shellable_order(sigma, perm) == expected


def test_shellable_forbidden_set_is_the_semisimple_one():
    # the four alternating patterns barred from shelling orders are exactly
    # the complement of the allowed semisimple forms
    from itertools import product

    patterns = set()
    for form in ("".join(p) for p in product("+-", repeat=4)):
        s1, s2, s3, s4 = form
        if (s1 == s3 != s2) or (s2 == s4 != s3):
            patterns.add(form)
    assert patterns.isdisjoint(ALLOWED_SEMISIMPLE)
    assert len(patterns) + len(ALLOWED_SEMISIMPLE) == 16


def test_center_vertex_order_type_is_rejected_at_the_precondition():
    sigma = SignatureFunction(4, "+-++")
    assert not check_semisimple(sigma).valid
    with pytest.raises(PreconditionError):
        find_shelling_order(sigma)
    with pytest.raises(PreconditionError):
        is_shellable_order(sigma, (1, 2, 3, 4))


def test_shelling_precondition():
    with pytest.raises(PreconditionError):
        lambda_matrix(SignatureFunction(4, "+-+-"))

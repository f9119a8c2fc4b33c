from __future__ import annotations

import pytest

from conftest import all_valid
from monosig.classify import check_simple
from monosig.sigcore import PreconditionError, SignatureFunction, all_plus
from monosig.stats import convex_quad_count
from monosig.transform import (
    FLIP_V1VN,
    HORIZONTAL_REFLECT,
    SHIFT_V1,
    SWITCH_CONSECUTIVE,
    VERTICAL_REFLECT,
    SwitchOp,
    all_ops,
    applicable,
    apply_op,
    canonical,
    canonical_map,
    equivalence_class,
)


def test_switch_op_validation():
    with pytest.raises(ValueError):
        SwitchOp(SWITCH_CONSECUTIVE)
    with pytest.raises(ValueError):
        SwitchOp(VERTICAL_REFLECT, j=2)
    with pytest.raises(ValueError):
        SwitchOp("rotate")


def test_vertical_reflect_negates_every_sign():
    sigma = SignatureFunction(4, "+++-")
    assert apply_op(sigma, SwitchOp(VERTICAL_REFLECT)).signs == "---+"


def test_horizontal_reflect_is_an_involution():
    for sigma in all_valid(5, "simple")[:40]:
        op = SwitchOp(HORIZONTAL_REFLECT)
        assert apply_op(apply_op(sigma, op), op) == sigma


def test_flip_v1vn_on_convex_k4():
    out = apply_op(all_plus(4), SwitchOp(FLIP_V1VN))
    assert out.sign(1, 2, 4) == "-"
    assert out.sign(1, 3, 4) == "-"
    assert out.sign(1, 2, 3) == "+"
    assert out.sign(2, 3, 4) == "+"


def test_applicability_examples():
    assert applicable(all_plus(5), SwitchOp(SHIFT_V1))
    assert applicable(all_plus(5), SwitchOp(SWITCH_CONSECUTIVE, 1))
    # non-constant signs on the edge (1, n) block the flip
    from monosig.sigcore import triple_rank

    signs = ["+"] * 10
    signs[triple_rank(5, 1, 3, 5)] = "-"
    sigma = SignatureFunction(5, "".join(signs))
    assert not applicable(sigma, SwitchOp(FLIP_V1VN))


def test_shift_v1_applicability_is_per_edge():
    # edge (1,4) entirely below, edge (1,3) entirely above: still shiftable
    sigma = SignatureFunction(4, "+--+")
    assert check_simple(sigma).valid
    assert applicable(sigma, SwitchOp(SHIFT_V1))


def test_shift_v1_keeps_convex_position():
    assert apply_op(all_plus(5), SwitchOp(SHIFT_V1)) == all_plus(5)


def test_shift_v1_on_planar_k4():
    assert apply_op(SignatureFunction(4, "+++-"), SwitchOp(SHIFT_V1)).signs == "-+++"


def test_apply_requires_applicability():
    from monosig.sigcore import triple_rank

    signs = ["+"] * 10
    signs[triple_rank(5, 1, 3, 5)] = "-"
    sigma = SignatureFunction(5, "".join(signs))
    with pytest.raises(PreconditionError):
        apply_op(sigma, SwitchOp(FLIP_V1VN))


def test_operations_preserve_validity_and_crossings_exhaustively():
    for sigma in all_valid(5, "simple"):
        count = convex_quad_count(sigma)
        for op in all_ops(5):
            if not applicable(sigma, op):
                continue
            image = apply_op(sigma, op)
            assert check_simple(image).valid, (sigma.signs, str(op))
            assert convex_quad_count(image) == count, (sigma.signs, str(op))


def test_parameterless_involutions():
    sample = all_valid(5, "simple")[::7]
    for sigma in sample:
        for kind in (VERTICAL_REFLECT, HORIZONTAL_REFLECT):
            op = SwitchOp(kind)
            assert apply_op(apply_op(sigma, op), op) == sigma
        if applicable(sigma, SwitchOp(FLIP_V1VN)):
            once = apply_op(sigma, SwitchOp(FLIP_V1VN))
            assert applicable(once, SwitchOp(FLIP_V1VN))
            assert apply_op(once, SwitchOp(FLIP_V1VN)) == sigma
        for j in range(1, 5):
            op = SwitchOp(SWITCH_CONSECUTIVE, j)
            if applicable(sigma, op):
                once = apply_op(sigma, op)
                assert applicable(once, op)
                assert apply_op(once, op) == sigma


def test_equivalence_class_of_the_triangle():
    cls = equivalence_class(SignatureFunction(3, "+"))
    assert cls.members == frozenset({"+", "-"})
    assert cls.representative == "+"
    assert cls.dropped == ()


def test_class_members_all_simple_and_share_the_crossing_count():
    seen: set[str] = set()
    for sigma in all_valid(5, "simple"):
        if sigma.signs in seen:
            continue
        cls = equivalence_class(sigma)
        seen |= cls.members
        counts = {convex_quad_count(SignatureFunction(5, s)) for s in cls.members}
        assert len(counts) == 1
        assert cls.dropped == ()
        assert cls.representative in cls.members
        assert cls.representative == min(cls.members)


def test_canonical_is_idempotent_and_class_invariant():
    for sigma in all_valid(5, "simple")[::11]:
        rep = canonical(sigma)
        assert canonical(rep) == rep
        for op in all_ops(5):
            if applicable(sigma, op):
                assert canonical(apply_op(sigma, op)) == rep


def test_canonical_identifies_the_two_triangle_signatures():
    assert canonical(SignatureFunction(3, "+")) == canonical(SignatureFunction(3, "-"))


def test_canonical_map_matches_canonical():
    sigmas = list(all_valid(4, "simple"))
    mapping = canonical_map(sigmas)
    for sigma in sigmas:
        assert mapping[sigma.signs] == canonical(sigma).signs


def test_equivalence_class_requires_simple():
    with pytest.raises(PreconditionError):
        equivalence_class(SignatureFunction(5, "+-+--++--+"))

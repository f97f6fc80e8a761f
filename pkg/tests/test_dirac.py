import pytest

from mongeops.errors import DegenerateMetric, InadmissibleAxis
from mongeops.exactalg import Context
from mongeops.geometry import MongeMetric, check_conditions_lower
from mongeops.dirac import (
    AmbientLocalOperator,
    admissible_axes,
    compare,
    dirac_reduce_closed,
    dirac_reduce_symbolic,
)

from conftest import matrix

U3 = Context(["u1", "u2", "u3"])
G4 = [["-2*u2", "u1", "0"], ["u1", "0", "0"], ["0", "0", "1"]]
G5 = [["-2*u2", "u1", "1"], ["u1", "1", "0"], ["1", "0", "0"]]
G6 = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def ambient(ctx, rows):
    return AmbientLocalOperator(MongeMetric(ctx, matrix(ctx, rows)))


def test_identity_reduces_to_flat_local_operator():
    result = dirac_reduce_closed(ambient(U3, G6), 0)
    assert result.operator.n == 2
    assert result.operator.metric.g == matrix(result.operator.ctx, [["1", "0"], ["0", "1"]])
    assert result.tail.is_zero()
    assert compare(result, dirac_reduce_symbolic(ambient(U3, G6), 0)).equal


def test_reduce_g4_along_third_coordinate():
    A = ambient(U3, G4)
    closed = dirac_reduce_closed(A, 2)
    ctx = closed.operator.ctx
    assert ctx.coordinates == ("u1", "u2")
    assert closed.operator.metric.g == matrix(ctx, [["-2*u2", "u1"], ["u1", "0"]])
    assert check_conditions_lower(closed.operator).passed
    assert compare(closed, dirac_reduce_symbolic(A, 2)).equal


@pytest.mark.parametrize("rows", [G4, G5, G6])
def test_two_paths_agree_on_every_admissible_axis(rows):
    A = ambient(U3, rows)
    axes = admissible_axes(A)
    assert axes
    for axis in axes:
        closed = dirac_reduce_closed(A, axis)
        symbolic = dirac_reduce_symbolic(A, axis)
        assert compare(closed, symbolic).equal
        assert check_conditions_lower(symbolic.operator).passed


def test_vanishing_g00_is_rejected():
    # G^{11} = 0 for g^(5)
    A = ambient(U3, G5)
    assert A.metric.inverse[0][0].is_zero()
    with pytest.raises(InadmissibleAxis):
        dirac_reduce_closed(A, 0)
    assert 0 not in admissible_axes(A)


def test_random_constant_ambients(rng):
    ctx = Context(["u1", "u2", "u3", "u4"])
    checked = 0
    while checked < 5:
        entries = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
        rows = [[str(entries[min(i, j)][max(i, j)]) for j in range(4)] for i in range(4)]
        try:
            A = ambient(ctx, rows)
        except DegenerateMetric:
            continue
        axis = rng.randrange(4)
        if A.metric.inverse[axis][axis].is_zero():
            continue
        try:
            closed = dirac_reduce_closed(A, axis)
        except DegenerateMetric:
            continue
        assert compare(closed, dirac_reduce_symbolic(A, axis)).equal
        assert closed.tail.is_zero()
        checked += 1

import pytest
from hypothesis import assume, given, settings, strategies as st

from mongeops.errors import DegenerateMetric, NotMonge, SymbolNotComputable
from mongeops.exactalg import Context, parse_expr
from mongeops.geometry import (
    MongeMetric,
    OperatorData,
    WForm,
    check_conditions_lower,
    check_conditions_upper,
    classify2,
    curvature_check,
    derive_c,
    derive_w,
    is_monge,
    metric_from_lift,
    monge_lift,
    projective_transform,
    singular_variety,
    w_constraint_system,
)
from mongeops.geometry.classify import (
    A_DEGENERATE_CLASS,
    CONSTANT_CLASS,
    MONGE_AMPERE_CLASS,
    NONLOCAL_CLASS,
    WKI_CLASS,
)
from mongeops.geometry.segre import parse_segre, same_segre

from conftest import matrix

PQ = Context(["p", "q"])
U = Context(["u1", "u2", "u3"])

WKI = [["q^2+1", "-p*q"], ["-p*q", "p^2+1"]]
IDENTITY3 = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
G15 = [["0", "1", "2*u3"], ["1", "-2*u3", "u2"], ["2*u3", "u2", "-4*u1"]]
G24 = [["1", "0", "u3"], ["0", "1", "0"], ["u3", "0", "-2*u1"]]
G33 = [["0", "1", "1"], ["1", "-2*u3", "u2+u3"], ["1", "u2+u3", "-2*u2"]]
G123 = [["-2*u2", "u1", "1"], ["u1", "1", "0"], ["1", "0", "0"]]


def metric(ctx, rows):
    return MongeMetric(ctx, matrix(ctx, rows))


def operator(ctx, rows, rho=None, radicand="1"):
    g = metric(ctx, rows)
    tails = []
    if rho is not None:
        tails.append(WForm(matrix(ctx, rho), parse_expr(radicand, ctx)))
    return OperatorData(g, derive_c(g), tails)


def wki_operator(with_tail=True):
    if not with_tail:
        return operator(PQ, WKI)
    return operator(PQ, WKI, [["0", "1"], ["-1", "0"]], "1/(p^2+q^2+1)")


def op15():
    rho = [["0", "0", "1"], ["0", "0", "u3"], ["-1", "-u3", "0"]]
    return operator(U, G15, rho, "1/(u1+u2*u3+2*u3^3)")


# ------------------ Monge metrics and connections ------------------

def test_is_monge_examples():
    assert is_monge(metric(U, IDENTITY3)) == (True, [])
    assert is_monge(metric(PQ, WKI))[0]
    u12 = Context(["u1", "u2"])
    assert is_monge(metric(u12, [["1", "0"], ["0", "u1^2"]])) == (False, [(2, 2, 1)])


def test_degenerate_metric_is_rejected():
    with pytest.raises(DegenerateMetric):
        metric(PQ, [["p^2", "p*q"], ["p*q", "q^2"]])
    with pytest.raises(DegenerateMetric):
        is_monge(matrix(PQ, [["0", "0"], ["0", "0"]]))


def test_derive_c_rejects_non_monge():
    u12 = Context(["u1", "u2"])
    with pytest.raises(NotMonge) as err:
        derive_c(metric(u12, [["1", "0"], ["0", "u1^2"]]))
    assert err.value.triples == [(2, 2, 1)]


def test_derive_c_constant_metric_is_zero():
    c = derive_c(metric(U, IDENTITY3))
    assert all(e.is_zero() for a in c.upper for b in a for e in b)


def test_derive_c_wki_vanishes_at_origin():
    c = derive_c(metric(PQ, WKI))
    assert all(e.at_point((0, 0)).is_zero() for a in c.upper for b in a for e in b)
    assert any(not e.is_zero() for a in c.upper for b in a for e in b)


def test_lowered_connection_is_totally_skew():
    c = derive_c(metric(U, G15)).lower
    rng = range(3)
    for i in rng:
        for j in rng:
            for k in rng:
                assert c[i][j][k] == -c[i][k][j]
                assert c[i][j][k] == -c[j][i][k]
    assert any(not c[i][j][k].is_zero() for i in rng for j in rng for k in rng)


# ------------------ Hamiltonian conditions ------------------

def test_wki_operator_passes_both_forms():
    op = wki_operator()
    assert check_conditions_upper(op).passed
    assert check_conditions_lower(op).passed


def test_constant_metric_passes():
    op = operator(U, IDENTITY3)
    assert check_conditions_upper(op).passed
    assert check_conditions_lower(op).passed


def test_wki_without_tail_fails_curvature_condition():
    op = wki_operator(with_tail=False)
    upper = check_conditions_upper(op)
    lower = check_conditions_lower(op)
    assert upper.failing_numbers() == [7]
    assert lower.failing_numbers() == [6]
    assert upper.first_failure.residual


def test_case_15_passes_lower_conditions():
    assert check_conditions_lower(op15()).passed
    assert check_conditions_upper(op15()).passed


def test_flipped_tail_still_passes():
    op = op15()
    flipped = op.with_tails([w.negated() for w in op.tails])
    assert check_conditions_lower(flipped).passed


def test_curvature_of_wki():
    report = curvature_check(wki_operator())
    assert report.vanishes
    assert report.component(1, 2, 2, 1) == parse_expr("1/(p^2+q^2+1)", PQ)
    assert not curvature_check(wki_operator(with_tail=False)).vanishes
    assert curvature_check(operator(U, IDENTITY3)).vanishes


# ------------------ Tail reconstruction ------------------

def test_derive_w_wki():
    w = derive_w(metric(PQ, WKI))
    assert w.rho[0][1] == 1
    assert w.radicand == parse_expr("1/(p^2+q^2+1)", PQ)


def test_derive_w_constant_metric_is_local():
    assert derive_w(metric(U, IDENTITY3)).is_zero()


def test_derive_w_case_15_matches_up_to_sign():
    expected = op15().tails[0]
    w = derive_w(metric(U, G15))
    assert w.same_up_to_sign(expected)


# random quadratic forms in e = p dq - q dp, dp, dq
@st.composite
def quadratic_forms(draw):
    a, b, c, alpha, beta, gamma = (draw(st.integers(-2, 2)) for _ in range(6))
    return [
        [f"({a})*q^2 - 2*({b})*q + ({alpha})", f"-({a})*p*q + ({b})*p - ({c})*q + ({beta})"],
        [f"-({a})*p*q + ({b})*p - ({c})*q + ({beta})", f"({a})*p^2 + 2*({c})*p + ({gamma})"],
    ]


@settings(max_examples=20, derandomize=True, deadline=None)
@given(quadratic_forms())
def test_random_two_component_metrics(rows):
    try:
        g = metric(PQ, rows)
    except DegenerateMetric:
        assume(False)
    assert is_monge(g)[0]
    local = OperatorData(g, derive_c(g))
    assert check_conditions_upper(local).passed == check_conditions_lower(local).passed

    w = derive_w(g)
    full = local.with_tails([w])
    assert check_conditions_upper(full).passed
    assert check_conditions_lower(full).passed
    assert check_conditions_lower(local.with_tails([w.negated()])).passed


# random symmetric Q on the six line-complex differentials, made trace-orthogonal to P
@st.composite
def line_complexes(draw):
    import sympy
    from mongeops.geometry.segre import plucker

    entries = [draw(st.integers(-2, 2)) for _ in range(21)]
    Q = sympy.zeros(6, 6)
    k = 0
    for a in range(6):
        for b in range(a, 6):
            Q[a, b] = Q[b, a] = entries[k]
            k += 1
    P = plucker()
    return Q - (Q * P).trace() / 6 * P


@pytest.mark.slow
@settings(max_examples=15, derandomize=True, deadline=None)
@given(line_complexes())
def test_random_three_component_lifts(Q):
    try:
        g = MongeMetric(U, metric_from_lift(U, Q))
    except DegenerateMetric:
        assume(False)
    assert is_monge(g)[0]
    local = OperatorData(g, derive_c(g))
    upper = check_conditions_upper(local)
    lower = check_conditions_lower(local)
    assert not [k for k in upper.failing_numbers() if k <= 4]
    assert not [k for k in lower.failing_numbers() if k <= 4]
    assert upper.passed == lower.passed

    try:
        data = monge_lift(g)
    except SymbolNotComputable:
        return
    assert (data.Q - Q).applyfunc(lambda e: e.expand()).is_zero_matrix


# ------------------ Projective action ------------------

def test_projective_identity_is_identity():
    op = wki_operator()
    one, zero = PQ.one, PQ.zero
    M = [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
    out = projective_transform(op, M)
    assert out.metric == op.metric
    assert out.tails == op.tails


def test_projective_translation_of_wki():
    M = matrix(PQ, [["1", "0", "1"], ["0", "1", "2"], ["0", "0", "1"]])
    out = projective_transform(wki_operator(), M)
    assert out.metric.g[0][0] == parse_expr("(q-2)^2+1", PQ)
    assert check_conditions_lower(out).passed
    assert check_conditions_upper(out).passed


def test_projective_case_15_stays_hamiltonian():
    M = matrix(U, [["1", "0", "0", "0"], ["0", "2", "0", "1"], ["0", "0", "1", "0"], ["1", "0", "0", "1"]])
    out = projective_transform(op15(), M)
    assert is_monge(out.metric)[0]
    assert all(e.is_poly() and e.degree() <= 2 for row in out.metric.g for e in row)
    assert check_conditions_lower(out).passed


def test_projective_rejects_singular_matrix():
    from mongeops.errors import SingularTransform
    M = matrix(PQ, [["1", "0", "0"], ["2", "0", "0"], ["0", "0", "1"]])
    with pytest.raises(SingularTransform):
        projective_transform(wki_operator(), M)


# ------------------ Invariants ------------------

def test_singular_variety_examples():
    v5 = singular_variety(metric(U, G123))
    assert v5.det == -1 and v5.degree == 0
    kappa, root = v5.square_part
    assert kappa == -1 and root == 1

    v24 = singular_variety(metric(U, G24))
    assert v24.det == parse_expr("-2*u1-u3^2", U)
    assert v24.degree == 2 and v24.square_part is None

    v33 = singular_variety(metric(U, G33))
    assert v33.det == parse_expr("4*(u2+u3)", U)
    assert not v33.is_double


def test_lift_of_identity_is_222():
    data = monge_lift(metric(U, IDENTITY3))
    assert same_segre(data.groups, parse_segre("[(222)]"))
    assert data.symbol == "[(222)]"


@pytest.mark.parametrize("rows, label", [(G24, "[(24)]"), (G15, "[(15)]"), (G33, "[(33)]")])
def test_lift_symbols(rows, label):
    data = monge_lift(metric(U, rows))
    assert same_segre(data.groups, parse_segre(label))


@pytest.mark.parametrize("rows", [IDENTITY3, G15, G24, G33, G123])
def test_lift_round_trip(rows):
    g = metric(U, rows)
    data = monge_lift(g)
    assert [list(r) for r in g.g] == metric_from_lift(U, data.Q)
    assert (data.Q * data.P).trace() == 0


def test_lift_with_irrational_eigenvalues():
    rows = [
        ["1+2*u2^2+2*u3^2", "-2*u1*u2", "-2*u1*u3"],
        ["-2*u1*u2", "1+2*u1^2+2*u3^2", "-2*u2*u3"],
        ["-2*u1*u3", "-2*u2*u3", "1+2*u1^2+2*u2^2"],
    ]
    with pytest.raises(SymbolNotComputable) as err:
        monge_lift(metric(U, rows))
    assert err.value.charpoly is not None


def test_segre_labels_compare_as_multisets():
    assert same_segre(parse_segre("[111(12)]"), parse_segre("[(12)111]"))
    assert not same_segre(parse_segre("[(11)22]"), parse_segre("[11(22)]"))


# ------------------ Two components ------------------

@pytest.mark.parametrize("rows, label", [
    (WKI, WKI_CLASS),
    ([["q^2+1", "-p*q"], ["-p*q", "p^2"]], A_DEGENERATE_CLASS),
    ([["-2*q", "p"], ["p", "1"]], NONLOCAL_CLASS),
    ([["-2*q", "p"], ["p", "0"]], MONGE_AMPERE_CLASS),
    ([["1", "0"], ["0", "1"]], CONSTANT_CLASS),
])
def test_classify2(rows, label):
    assert classify2(metric(PQ, rows)).label == label


def test_classify2_translation_kills_linear_terms():
    result = classify2(metric(PQ, [["q^2-2*q+1", "-p*q+p"], ["-p*q+p", "p^2+1"]]))
    assert result.label == WKI_CLASS
    assert result.constants["b"] == 1
    assert result.translation == (PQ.zero, PQ.one)


# ------------------ Linear system for w ------------------

def test_w_system_constant_metric_is_trivial():
    system = w_constraint_system(metric(U, IDENTITY3))
    assert system.trivial
    assert system.kernel_dimension == 3


def test_w_system_wki():
    system = w_constraint_system(metric(PQ, WKI))
    assert system.kernel_dimension == 1
    assert system.contains(wki_operator().tails[0])


def test_w_system_case_15():
    system = w_constraint_system(metric(U, G15))
    assert system.kernel_dimension == 1
    assert system.contains(op15().tails[0])

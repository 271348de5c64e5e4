import io
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bramble.bramble import validate_bramble
from bramble.hitting_set import bramble_order
from decomposition.exact import exact_treewidth
from graphs.connectivity import is_connected_subset
from graphs.core import cartesian_product, copy_of_g, copy_of_h
from graphs.exceptions import ElementSpecError, ParseError, PreconditionError
from graphs.generators import complete, cycle, path, path_power
from product_bramble.certify import certify_lower_bound
from product_bramble.refuter import (
    AvoidingElement,
    SizeCertificate,
    check_outcome,
    refute_hitting_set,
)
from product_bramble.sampling import DeletionPolicy, enumerate_family, sample_elements
from product_bramble.theorem import (
    ElementSpec,
    check_factors,
    make_element,
    q_graph_check,
    theorem_bound,
    theorem_lower_bound,
    touching_certificate,
)
from product_bramble.transcript import (
    Transcript,
    format_transcript,
    parse_transcript,
    verify_transcript,
)
from utils.provenance import Provenance


@pytest.mark.parametrize(
    "k, n, value",
    [(1, 4, 3), (1, 5, 4), (2, 5, 5), (2, 6, 7), (2, 4, 3), (3, 4, -1)],
)
def test_theorem_bound(k, n, value):
    assert theorem_bound(k, n) == value


def test_vacuous_regime_is_flagged():
    assert theorem_lower_bound(3, 4).provenance is Provenance.VACUOUS
    assert theorem_lower_bound(3, 4).display_value == 0
    assert theorem_lower_bound(2, 5).provenance is Provenance.FORMULA


def test_check_factors_names_the_offender():
    with pytest.raises(PreconditionError, match="factor H"):
        check_factors(cartesian_product(cycle(5), path(5)), 2)
    with pytest.raises(PreconditionError, match="factor G"):
        check_factors(cartesian_product(complete(2), complete(5)), 2)
    check_factors(cartesian_product(cycle(5), cycle(5)), 2)


def test_element_size():
    p = cartesian_product(path_power(5, 2), path_power(5, 2))
    spec = ElementSpec.build(2, [0, 1, 2], [0, 1, 2], h_deletions={0: {p.flat(0, 4)}})
    element = make_element(p, spec)
    assert len(element) == 3 * 5 + 3 * 5 - 9 - 1
    assert is_connected_subset(p.base, element)


def test_k1_element_is_a_cross(p5_square):
    element = make_element(p5_square, ElementSpec.build(1, [2], [3]))
    assert element == copy_of_h(p5_square, 2) | copy_of_g(p5_square, 3)
    assert len(element) == 9


def test_element_spec_errors():
    p = cartesian_product(path_power(5, 2), path_power(5, 2))
    with pytest.raises(ElementSpecError):
        make_element(p, ElementSpec.build(2, [0, 1], [0, 1, 2]))
    # (0, 0) and (0, 1) both lie in H_0
    too_many = ElementSpec.build(2, [0, 1, 2], [0, 1, 2], h_deletions={0: {0, 1}})
    with pytest.raises(ElementSpecError):
        make_element(p, too_many)
    # one deletion listed under H_0 and another under G_0, both in H_0
    shared = ElementSpec.build(
        2, [0, 1, 2], [0, 3, 4], h_deletions={0: {1}}, g_deletions={0: {0}}
    )
    with pytest.raises(ElementSpecError):
        make_element(p, shared)
    with pytest.raises(ElementSpecError):
        make_element(p, ElementSpec.build(2, [0, 1, 2], [0, 1, 2], h_deletions={3: {15}}))


def test_q_graph_at_maximum_deletions():
    p = cartesian_product(path_power(7, 2), path_power(7, 2))
    s, t = [1, 3, 5], [0, 2, 6]
    deleted = {p.flat(s[i], t[(i + 1) % 3]) for i in range(3)}
    spec = ElementSpec.build(
        2, s, t, h_deletions={v: {x for x in deleted if p.pair(x)[0] == v} for v in s}
    )
    element = make_element(p, spec)
    report = q_graph_check(p, spec, element)
    assert report.min_degree >= 2
    assert report.connected


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("policy", list(DeletionPolicy))
def test_element_lemmas(k, policy):
    n = 2 * k + 3
    p = cartesian_product(path_power(n, k), path_power(n, k))
    samples = sample_elements(p, k, 500, policy=policy, seed=k)
    for spec, element in samples:
        assert is_connected_subset(p.base, element)
        q = q_graph_check(p, spec, element)
        assert q.min_degree >= k and q.connected
    rng = np.random.default_rng(100 + k)
    pairs = rng.choice(len(samples), size=(3000, 2))
    for i, j in pairs:
        (a, ea), (b, eb) = samples[i], samples[j]
        x = touching_certificate(p, a, b)
        assert x in ea and x in eb


def test_sampling_is_seeded():
    p = cartesian_product(path_power(7, 2), path_power(7, 2))
    first = [e for _, e in sample_elements(p, 2, 20, "random", seed=5)]
    again = [e for _, e in sample_elements(p, 2, 20, "random", seed=5)]
    assert first == again


def test_tiny_family_is_a_bramble_of_order_two():
    p = cartesian_product(complete(3), complete(3))
    family = enumerate_family(p, 2)
    assert len(family) == 34
    assert validate_bramble(family).ok
    order = bramble_order(family).size
    assert order == 2 > theorem_bound(2, 3)
    assert order - 1 <= exact_treewidth(p.base).treewidth


def test_cross_family_matches_grid_treewidth_bound():
    p = cartesian_product(path(4), path(4))
    family = enumerate_family(p, 1)
    assert len(family) == 16
    order = bramble_order(family).size
    assert order == 4
    assert order - 1 <= exact_treewidth(p.base).treewidth


@pytest.mark.parametrize(
    "g, h, k, order",
    [(complete(3), complete(3), 1, 3), (complete(3), cycle(4), 1, 3), (cycle(4), cycle(4), 2, 4)],
)
def test_family_order_respects_duality(g, h, k, order):
    p = cartesian_product(g, h)
    family = enumerate_family(p, k)
    assert validate_bramble(family).ok
    hs = bramble_order(family)
    assert hs.certified_minimum and hs.size == order
    assert order - 1 <= exact_treewidth(p.base).treewidth


def test_refuter_completeness_small_sets(p5_square):
    for size in range(4):
        for js in combinations(range(25), size):
            outcome = refute_hitting_set(p5_square, 1, js)
            assert isinstance(outcome, AvoidingElement)
            assert not outcome.vertices & set(js)


def test_refuter_completeness_at_the_bound(pp6_square):
    rng = np.random.default_rng(2024)
    size = theorem_bound(2, 6)
    assert size == 7
    for _ in range(1000):
        js = rng.choice(36, size, replace=False).tolist()
        outcome = refute_hitting_set(pp6_square, 2, js)
        assert isinstance(outcome, AvoidingElement)
        assert check_outcome(pp6_square, 2, js, outcome) == []


@pytest.mark.parametrize("k, product", [(1, "p5_square"), (2, "pp6_square")])
def test_refuter_soundness(k, product, request):
    p = request.getfixturevalue(product)
    rng = np.random.default_rng(7)
    total = p.base.vertex_count
    for _ in range(1000):
        size = int(rng.integers(0, total + 1))
        js = rng.choice(total, size, replace=False).tolist()
        outcome = refute_hitting_set(p, k, js)
        assert check_outcome(p, k, js, outcome) == []
        if isinstance(outcome, SizeCertificate):
            assert len(js) >= k * (p.n - 2 * k + 2)


def test_size_certificate_for_a_full_row(p5_square):
    js = sorted(p5_square.copy_of_h(0))
    outcome = refute_hitting_set(p5_square, 1, js)
    assert isinstance(outcome, SizeCertificate)
    assert outcome.axis == "columns"
    assert outcome.copies == (0, 1, 2, 3, 4)
    assert outcome.implied_bound == 5


def test_refuter_is_deterministic(pp6_square):
    js = [0, 7, 14, 21, 28, 35, 3]
    a = refute_hitting_set(pp6_square, 2, js)
    b = refute_hitting_set(pp6_square, 2, js)
    assert a.vertices == b.vertices
    assert a.spec.s == frozenset({1, 2, 3})
    assert a.spec.t == frozenset({0, 1, 2})


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(0, 35), max_size=20))
def test_transcripts_verify(js):
    p = cartesian_product(path_power(6, 2), path_power(6, 2))
    outcome = refute_hitting_set(p, 2, js)
    tr = Transcript.from_outcome(6, 6, 2, js, outcome)
    parsed = parse_transcript(io.StringIO(format_transcript(tr)))
    assert parsed == tr
    assert verify_transcript(parsed, p.base).ok


def test_tampered_transcript_is_rejected(pp6_square):
    js = [0, 7, 14]
    tr = Transcript.from_outcome(6, 6, 2, js, refute_hitting_set(pp6_square, 2, js))
    tr.element = tr.element + (0,)
    check = verify_transcript(tr, pp6_square.base)
    assert "element meets J" in check.violations


def test_certify_exact_on_tiny_product():
    cert = certify_lower_bound(cartesian_product(path(4), path(4)), 1)
    assert cert.bound.value == 3
    assert cert.bound.provenance is Provenance.CERTIFIED
    assert cert.family is not None


def test_certify_by_refutation(pp6_square):
    cert = certify_lower_bound(pp6_square, 2, seed=3)
    assert cert.bound.value == 7
    assert cert.bound.provenance is Provenance.CERTIFIED
    js, outcome = cert.probe
    assert len(js) == 7 and isinstance(outcome, AvoidingElement)


def test_certify_vacuous():
    cert = certify_lower_bound(cartesian_product(complete(4), complete(4)), 3)
    assert cert.bound.provenance is Provenance.VACUOUS
    assert cert.bound.value == -1


@pytest.mark.parametrize(
    "js, dropped",
    [
        ([0, 7, 14], "element"),
        ([0, 7, 14], "s"),
        ([0, 1, 6, 7, 12, 13, 18, 19], "axis"),
        ([0, 1, 6, 7, 12, 13, 18, 19], "bound"),
    ],
)
def test_transcript_missing_a_record_is_rejected(pp6_square, js, dropped):
    tr = Transcript.from_outcome(6, 6, 2, js, refute_hitting_set(pp6_square, 2, js))
    text = "".join(
        line
        for line in format_transcript(tr).splitlines(keepends=True)
        if line.split()[0] != dropped
    )
    with pytest.raises(ParseError, match=f"'{dropped}'"):
        parse_transcript(io.StringIO(text))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from owakit.core import WeightVector, dual, owa_aggregate
from owakit.errors import DimensionError, ValidationError
from owakit.quantifier import (
    All,
    Convexity,
    Exists,
    Identity,
    Power,
    Quantifier,
    ThresholdStep,
    convexity_class,
    dominates,
    dual_quantifier_orness,
    example_mixture,
    mixture,
    olympic_quantifier,
)
from owakit.weightgen import (
    ProbabilityVector,
    dual_weights_from_quantifier,
    dual_wowa_aggregate,
    dual_wowa_weights,
    weights_from_quantifier,
    wowa_weights,
)

SEED = 20240611

probability_vectors = st.lists(st.floats(0.0, 1.0), min_size=1, max_size=10).filter(
    lambda xs: sum(xs) > 1e-3
).map(lambda xs: ProbabilityVector(np.asarray(xs) / sum(xs)))

QUANTIFIERS = [
    Identity(),
    All(),
    Exists(),
    Power(0.3),
    Power(2),
    ThresholdStep(0.4),
    olympic_quantifier(6),
    mixture([Power(3), Exists(), Identity()], [0.5, 0.2, 0.3]),
]
quantifiers = st.sampled_from(QUANTIFIERS)


def yager_oracle(q, n):
    # straight from the definition, no shared helpers
    return [q(i / n) - q((i - 1) / n) for i in range(1, n + 1)]


class TestProbabilityVector:
    def test_rejects_negative(self):
        with pytest.raises(ValidationError):
            ProbabilityVector([1.2, -0.2])

    def test_rejects_sum(self):
        with pytest.raises(ValidationError):
            ProbabilityVector([0.3, 0.3])

    def test_partial_sums_pinned(self):
        s = ProbabilityVector([0.1] * 10).partial_sums()
        assert s[0] == 0.0 and s[-1] == 1.0


class TestDirectWeights:
    def test_identity_uniform(self):
        np.testing.assert_allclose(weights_from_quantifier(Identity(), 5).values, [0.2] * 5, atol=1e-15)

    def test_all_gives_min(self):
        assert weights_from_quantifier(All(), 4) == WeightVector.min_vector(4)

    def test_exists_gives_max(self):
        assert weights_from_quantifier(Exists(), 4) == WeightVector.max_vector(4)

    def test_power_two(self):
        np.testing.assert_allclose(
            weights_from_quantifier(Power(2), 4).values, [1 / 16, 3 / 16, 5 / 16, 7 / 16], atol=1e-15
        )

    @pytest.mark.parametrize("q", QUANTIFIERS, ids=repr)
    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    def test_matches_definition(self, q, n):
        np.testing.assert_allclose(weights_from_quantifier(q, n).values, yager_oracle(q, n), atol=1e-15)

    def test_bad_n(self):
        with pytest.raises(ValidationError):
            weights_from_quantifier(Identity(), 0)

    def test_non_monotone_evaluator_rejected(self):
        class Wobbly(Quantifier):
            def _eval(self, x):
                return {0.5: 0.8, 0.75: 0.6}.get(x, x)

        with pytest.raises(ValidationError, match="negative weight"):
            weights_from_quantifier(Wobbly(), 4)


class TestDualWeights:
    def test_identity_uniform(self):
        np.testing.assert_allclose(dual_weights_from_quantifier(Identity(), 5).values, [0.2] * 5, atol=1e-15)

    def test_power_two(self):
        np.testing.assert_allclose(
            dual_weights_from_quantifier(Power(2), 4).values, [7 / 16, 5 / 16, 3 / 16, 1 / 16], atol=1e-15
        )

    def test_all_gives_max(self):
        assert dual_weights_from_quantifier(All(), 4) == WeightVector.max_vector(4)

    @pytest.mark.parametrize("q", QUANTIFIERS, ids=repr)
    @pytest.mark.parametrize("n", range(1, 13))
    def test_exact_reversal(self, q, n):
        assert dual_weights_from_quantifier(q, n) == dual(weights_from_quantifier(q, n))

    def test_olympic(self):
        q = example_mixture([0, 0, 0, 0, 1], 5, 2)
        np.testing.assert_allclose(
            dual_weights_from_quantifier(q, 5).values, [0, 1 / 3, 1 / 3, 1 / 3, 0], atol=1e-12
        )


def printed_example_weights(alpha, n, k):
    """The closed form printed alongside the five-part mixture example."""
    a1, a2, a3, a4, a5 = alpha
    w = []
    for i in range(1, n + 1):
        if i == 1:
            w.append(a1 / n + a3)
        elif i == n:
            w.append(a1 / n + a2)
        elif i == k:
            w.append(a1 / n + a4 + a5 / (n - 2))
        else:
            w.append(a1 / n + a5 / (n - 2))
    return w


class TestExampleMixture:
    """The five-part mixture: identity, all, exists, step at (n-k)/n, olympic."""

    def test_printed_form_golden(self):
        np.testing.assert_allclose(
            printed_example_weights([0.2, 0.1, 0.3, 0.2, 0.2], 4, 2), [0.35, 0.35, 0.15, 0.15], atol=1e-15
        )

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_printed_form_describes_direct_weights(self, data):
        # evaluated from the component definitions, the printed closed form
        # is the direct weighting with the step landing on rank n-k
        n = data.draw(st.integers(3, 12))
        k = data.draw(st.integers(1, n - 1))
        raw = data.draw(st.lists(st.floats(0.0, 1.0), min_size=5, max_size=5).filter(lambda x: sum(x) > 1e-3))
        alpha = [x / sum(raw) for x in raw]
        if n - k == 1:
            # rank 1 is handled by the i == 1 branch of the printed form
            return
        q = example_mixture(alpha, n, k)
        np.testing.assert_allclose(
            weights_from_quantifier(q, n).values, printed_example_weights(alpha, n, n - k), atol=1e-12
        )

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_dual_aggregate_decomposition(self, data):
        n = data.draw(st.integers(3, 12))
        k = data.draw(st.integers(1, n - 1))
        raw = data.draw(st.lists(st.floats(0.0, 1.0), min_size=5, max_size=5).filter(lambda x: sum(x) > 1e-3))
        alpha = [x / sum(raw) for x in raw]
        a = data.draw(st.lists(st.floats(-10, 10), min_size=n, max_size=n))
        s = sorted(a, reverse=True)
        q = example_mixture(alpha, n, k)
        got = owa_aggregate(a, dual_weights_from_quantifier(q, n))
        expected = (
            alpha[0] * sum(a) / n
            + alpha[1] * s[0]  # "all" reads as max under the dual weighting
            + alpha[2] * s[-1]  # "exists" reads as min
            + alpha[3] * s[k]  # step lands on rank k+1
            + alpha[4] * sum(s[1:-1]) / (n - 2)
        )
        assert abs(got - expected) < 1e-10


class TestWowa:
    def test_identity_returns_p(self):
        p = [0.1, 0.4, 0.2, 0.3]
        np.testing.assert_allclose(wowa_weights(Identity(), p).values, p, atol=1e-15)
        np.testing.assert_allclose(dual_wowa_weights(Identity(), p).values, p, atol=1e-15)

    def test_power_two_halves(self):
        np.testing.assert_allclose(wowa_weights(Power(2), [0.5, 0.5]).values, [0.25, 0.75], atol=1e-15)
        np.testing.assert_allclose(dual_wowa_weights(Power(2), [0.5, 0.5]).values, [0.75, 0.25], atol=1e-15)

    @pytest.mark.parametrize("q", QUANTIFIERS, ids=repr)
    @pytest.mark.parametrize("n", [1, 3, 4, 7])
    def test_uniform_p_reduces(self, q, n):
        p = ProbabilityVector.uniform(n)
        np.testing.assert_allclose(wowa_weights(q, p).values, weights_from_quantifier(q, n).values, atol=1e-12)
        np.testing.assert_allclose(
            dual_wowa_weights(q, p).values, dual_weights_from_quantifier(q, n).values, atol=1e-12
        )

    def test_power_uniform_four(self):
        np.testing.assert_allclose(
            wowa_weights(Power(2), ProbabilityVector.uniform(4)).values,
            [1 / 16, 3 / 16, 5 / 16, 7 / 16],
            atol=1e-15,
        )

    @given(quantifiers, probability_vectors)
    def test_sum_to_one(self, q, p):
        assert abs(wowa_weights(q, p).values.sum() - 1) < 1e-12
        assert abs(dual_wowa_weights(q, p).values.sum() - 1) < 1e-12


class TestDualWowaAggregate:
    def test_mean(self):
        assert dual_wowa_aggregate(Identity(), ProbabilityVector.uniform(3), [1, 2, 3]) == pytest.approx(2.0, abs=1e-15)

    def test_power_two(self):
        assert dual_wowa_aggregate(Power(2), [0.5, 0.5], [0.2, 0.8]) == pytest.approx(0.65, abs=1e-15)

    @given(quantifiers, st.floats(-5, 5), st.integers(1, 8))
    def test_idempotent(self, q, c, n):
        assert dual_wowa_aggregate(q, ProbabilityVector.uniform(n), [c] * n) == pytest.approx(c, abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            dual_wowa_aggregate(Identity(), [0.5, 0.5], [1, 2, 3])

    @given(st.data())
    def test_telescoped_form(self, data):
        q = data.draw(quantifiers)
        p = data.draw(probability_vectors)
        a = data.draw(st.lists(st.floats(-100, 100), min_size=len(p), max_size=len(p)))
        assert abs(dual_wowa_aggregate(q, p, a) - owa_aggregate(a, dual_wowa_weights(q, p))) < 1e-10


class TestTheorems:
    def test_dominance_orders_dual_aggregates(self):
        rng = np.random.default_rng(SEED)
        pairs = [(Identity(), Power(2)), (Power(0.5), Identity()), (Exists(), Power(3)), (Power(2), All())]
        for q1, q2 in pairs:
            assert dominates(q1, q2)
            # larger quantifier -> smaller dual orness and smaller dual aggregate
            assert dual_quantifier_orness(q1) <= dual_quantifier_orness(q2) + 2e-6
            for _ in range(100):
                n = int(rng.integers(1, 10))
                p = rng.dirichlet(np.ones(n))
                a = rng.normal(size=n)
                assert dual_wowa_aggregate(q1, p, a) <= dual_wowa_aggregate(q2, p, a) + 1e-10

    def test_indicator_vectors_recover_grid_dominance(self):
        # unit vectors expose Q1 - Q2 at every partial sum of p
        q1, q2 = Power(2), Identity()
        n = 8
        p = ProbabilityVector.uniform(n)
        diffs = []
        for i in range(n):
            e = np.zeros(n)
            e[i] = 1.0
            diffs.append(dual_wowa_aggregate(q1, p, e) - dual_wowa_aggregate(q2, p, e))
        assert all(d >= -1e-12 for d in diffs)

    @pytest.mark.parametrize("r", [1.5, 2, 3, 5])
    def test_convex_dual_above_mean(self, r):
        q = Power(r)
        assert convexity_class(q) is Convexity.CONVEX
        assert dual_quantifier_orness(q) >= 0.5 - 2e-6
        rng = np.random.default_rng(SEED + int(r * 10))
        for _ in range(200):
            n = int(rng.integers(1, 12))
            a = rng.uniform(-1, 1, size=n)
            assert owa_aggregate(a, dual_weights_from_quantifier(q, n)) >= a.mean() - 1e-10

    @pytest.mark.parametrize("r", [0.2, 0.5, 0.75])
    def test_concave_dual_below_mean(self, r):
        q = Power(r)
        assert convexity_class(q) is Convexity.CONCAVE
        assert dual_quantifier_orness(q) <= 0.5 + 2e-6
        rng = np.random.default_rng(SEED + int(r * 10))
        for _ in range(200):
            n = int(rng.integers(1, 12))
            a = rng.uniform(-1, 1, size=n)
            assert owa_aggregate(a, dual_weights_from_quantifier(q, n)) <= a.mean() + 1e-10

    @pytest.mark.parametrize("r", [0.25, 0.5, 0.8, 1.5, 2, 3])
    @pytest.mark.parametrize("n", range(2, 15))
    def test_monotone_weights_uniform_p(self, r, n):
        q = Power(r)
        p = ProbabilityVector.uniform(n)
        wd = np.diff(wowa_weights(q, p).values)
        dd = np.diff(dual_wowa_weights(q, p).values)
        if r > 1:
            # convex: direct weights increase, dual weights decrease
            assert np.all(wd >= -1e-12) and np.all(dd <= 1e-12)
        else:
            assert np.all(wd <= 1e-12) and np.all(dd >= -1e-12)

    def test_monotone_weights_need_equal_spacing(self):
        # the second difference of a concave Q is only signed on equally
        # spaced points; uneven partial sums can break the ordering
        q = Power(0.25)
        w = wowa_weights(q, [0.0, 1.0]).values
        assert w[1] > w[0]
        w = wowa_weights(q, [0.05, 0.9, 0.05]).values
        assert not np.all(np.diff(w) <= 0)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phrasekit.evaluation import (
    ConfusionCounts,
    accuracy,
    class_skew,
    match_count,
    metrics_from_counts,
    score_corpus,
    score_counts,
)

counts_strategy = st.builds(
    ConfusionCounts,
    a=st.integers(0, 500),
    b=st.integers(0, 500),
    c=st.integers(0, 500),
)


class TestMatchCount:
    def test_inflected_variant_matches(self):
        counts = match_count(["neural networks"], ["neural network"])
        assert (counts.a, counts.b, counts.c) == (1, 0, 0)

    def test_subphrase_does_not_match(self):
        counts = match_count(["networks"], ["neural networks"])
        assert (counts.a, counts.b, counts.c) == (0, 1, 1)

    def test_order_matters(self):
        counts = match_count(["skiing helicopter"], ["helicopter skiing"])
        assert counts.a == 0

    def test_case_insensitive(self):
        assert match_count(["Consciousness"], ["consciousness"]).a == 1

    def test_machine_duplicates_count_once(self):
        counts = match_count(
            ["neural network", "neural networks"], ["neural network"]
        )
        assert (counts.a, counts.b, counts.c) == (1, 1, 0)

    def test_empty_lists(self):
        counts = match_count([], [])
        assert (counts.a, counts.b, counts.c) == (0, 0, 0)

    @given(
        st.lists(st.sampled_from(["plan", "plans", "market", "neural nets", "x y z"]),
                 max_size=6),
        st.lists(st.sampled_from(["plan", "markets", "neural net", "a b c"]),
                 max_size=6),
    )
    def test_swap_preserves_a_and_swaps_b_c(self, machine, human):
        forward = match_count(machine, human)
        backward = match_count(human, machine)
        assert forward.a == backward.a
        assert (forward.b, forward.c) == (backward.c, backward.b)
        assert forward.a <= min(len(machine), len(human))


class TestMetrics:
    def test_worked_example_unbalanced(self):
        m = metrics_from_counts(ConfusionCounts(3, 2, 5))
        assert m.precision == pytest.approx(0.600, abs=1e-3)
        assert m.recall == pytest.approx(0.375, abs=1e-3)
        assert m.f_measure == pytest.approx(0.462, abs=1e-3)

    def test_worked_example_word_processor(self):
        m = metrics_from_counts(ConfusionCounts(3, 2, 3))
        assert m.f_measure == pytest.approx(0.545, abs=1e-3)

    def test_balanced_counts_equalize(self):
        m = metrics_from_counts(ConfusionCounts(3, 3, 3))
        assert m.precision == m.recall == m.f_measure == 0.5

    def test_degenerate_machine_side(self):
        m = metrics_from_counts(ConfusionCounts(0, 0, 4))
        assert m == metrics_from_counts(ConfusionCounts(0, 0, 4))
        assert m.precision == 0.0 and m.recall == 0.0 and m.f_measure == 0.0
        assert m.degenerate

    def test_degenerate_human_side(self):
        m = metrics_from_counts(ConfusionCounts(0, 4, 0))
        assert m.recall == 0.0
        assert m.degenerate

    def test_not_degenerate(self):
        assert not metrics_from_counts(ConfusionCounts(1, 1, 1)).degenerate

    @given(counts_strategy)
    def test_f_never_exceeds_average_exactly(self, counts):
        a, b, c = counts.a, counts.b, counts.c
        if a + b == 0 or a + c == 0:
            return
        precision = Fraction(a, a + b)
        recall = Fraction(a, a + c)
        f_exact = Fraction(2 * a, 2 * a + b + c)
        average = (precision + recall) / 2
        assert f_exact <= average
        assert (f_exact == average) == (precision == recall)
        m = metrics_from_counts(counts)
        assert m.f_measure == pytest.approx(float(f_exact), abs=1e-12)

    @given(counts_strategy)
    def test_average_minus_squared_imbalance_identity(self, counts):
        m = metrics_from_counts(counts)
        if m.degenerate:
            return
        average = (m.precision + m.recall) / 2
        delta = abs(m.precision - average)
        if average > 0:
            assert m.f_measure == pytest.approx(average - delta**2 / average, abs=1e-12)


class TestAccuracyAndSkew:
    def test_empty_guess_on_skewed_counts(self):
        assert accuracy(ConfusionCounts(0, 0, 6, 2494)) == pytest.approx(0.9976)

    def test_perfect_single(self):
        assert accuracy(ConfusionCounts(1, 0, 0, 0)) == 1.0

    def test_small_example(self):
        assert accuracy(ConfusionCounts(2, 1, 1, 6)) == pytest.approx(0.8)

    def test_accuracy_requires_d(self):
        with pytest.raises(ValueError):
            accuracy(ConfusionCounts(1, 2, 3))

    def test_accuracy_all_zero(self):
        with pytest.raises(ValueError):
            accuracy(ConfusionCounts(0, 0, 0, 0))

    def test_skew_of_typical_document(self):
        skew = class_skew(ConfusionCounts(0, 0, 6, 2494))
        assert round(1 / skew) == 416

    def test_skew_balanced(self):
        assert class_skew(ConfusionCounts(1, 0, 0, 1)) == 1.0

    def test_skew_small_example(self):
        assert class_skew(ConfusionCounts(2, 3, 2, 13)) == pytest.approx(0.25)

    def test_skew_requires_negatives(self):
        with pytest.raises(ValueError):
            class_skew(ConfusionCounts(1, 0, 1, 0))

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            ConfusionCounts(-1, 0, 0)


class TestScoreCorpus:
    def test_single_document_micro_equals_document(self):
        score = score_corpus([(["neural networks"], ["neural network", "plans"])])
        doc = score.per_document[0]
        assert score.micro == doc.metrics
        assert score.pooled == doc.counts

    def test_micro_pools_counts(self):
        score = score_counts(
            [ConfusionCounts(1, 1, 1), ConfusionCounts(0, 2, 2)]
        )
        assert score.micro.precision == pytest.approx(0.25)
        assert score.micro.recall == pytest.approx(0.25)
        assert score.micro.f_measure == pytest.approx(0.25)

    def test_golden_per_document_f_values(self):
        score = score_counts(
            [ConfusionCounts(1, 4, 7), ConfusionCounts(0, 5, 17), ConfusionCounts(3, 2, 3)]
        )
        per_doc_f = [s.metrics.f_measure for s in score.per_document]
        assert per_doc_f == pytest.approx([0.154, 0.000, 0.545], abs=1e-3)

    def test_macro_is_mean_of_documents(self):
        score = score_counts([ConfusionCounts(1, 0, 0), ConfusionCounts(0, 1, 1)])
        assert score.macro.precision == pytest.approx(0.5)
        assert score.macro.f_measure == pytest.approx(0.5)

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            score_corpus([])

    def test_degenerate_documents_flag_macro_but_not_micro_counts(self):
        score = score_counts([ConfusionCounts(1, 1, 1), ConfusionCounts(0, 0, 2)])
        assert score.macro.degenerate
        assert score.pooled == ConfusionCounts(1, 1, 3)

"""Column profiles, pair tests, plot recommendation, heatmap ordering."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from dataprep.errors import EmptyColumn, LengthMismatch, SingleClass, TooFewNumericColumns
from dataprep.profiling import (
    DistributionShape,
    PlotMetaRow,
    PlotType,
    RelationLabel,
    builtin_plot_meta_rows,
    correlation_matrix,
    encode_meta_features,
    hierarchical_order,
    profile_column,
    profile_pair,
    recommend_plot,
    train_plot_svm,
)
from dataprep.tabular import MISSING, Column, VariableType
from util import cat_col, dataset, num_col


class TestProfileColumn:
    def test_symmetric_is_normal(self):
        p = profile_column(num_col("x", [1, 2, 3, 4, 5]))
        assert p.skewness == pytest.approx(0.0, abs=1e-12)
        assert p.shape is DistributionShape.NORMAL
        assert p.mean == 3.0
        assert p.median == 3.0

    def test_lognormal_skewed_right(self):
        rng = np.random.default_rng(42)
        x = np.exp(rng.standard_normal(1000))
        expected = oracles.adjusted_skewness(x)
        assert expected > 0.5
        p = profile_column(num_col("x", x))
        assert p.skewness == pytest.approx(expected, rel=1e-12)
        assert p.shape is DistributionShape.SKEWED_RIGHT

    def test_binary_categorical(self):
        p = profile_column(cat_col("g", ["Male", "Female", "Male"]))
        assert p.shape is DistributionShape.BINARY
        assert p.mode == "Male"
        assert p.distinct_count == 2

    def test_binary_numeric(self):
        p = profile_column(num_col("f", [0, 1, 0, 1, 1]))
        assert p.shape is DistributionShape.BINARY

    def test_uniform_detected(self):
        rng = np.random.default_rng(1)
        p = profile_column(num_col("u", rng.uniform(0, 1, size=500)))
        assert p.shape is DistributionShape.UNIFORM

    def test_normal_not_uniform(self):
        rng = np.random.default_rng(2)
        p = profile_column(num_col("n", rng.standard_normal(1000)))
        assert p.shape is DistributionShape.NORMAL

    def test_varied_categorical(self):
        p = profile_column(cat_col("c", ["a", "b", "c", "a"]))
        assert p.shape is DistributionShape.VARIED

    def test_missing_counted(self):
        p = profile_column(num_col("x", [1, None, 3]))
        assert p.missing_count == 1
        assert p.count == 3
        assert p.mean == 2.0

    def test_empty_column_raises(self):
        with pytest.raises(EmptyColumn):
            profile_column(num_col("x", [None, None]))

    def test_skewness_antisymmetry(self):
        rng = np.random.default_rng(3)
        x = np.exp(rng.standard_normal(200))
        a = profile_column(num_col("x", x)).skewness
        b = profile_column(num_col("x", -x)).skewness
        assert a == pytest.approx(-b, rel=1e-12)


class TestProfilePair:
    def test_exact_positive_linear(self):
        p = profile_pair(num_col("a", [1, 2, 3]), num_col("b", [2, 4, 6]))
        assert p.pearson_r == pytest.approx(1.0, abs=1e-12)
        assert p.relation is RelationLabel.POSITIVE_LINEAR

    def test_balanced_contingency_no_relation(self):
        a = cat_col("a", ["x", "x", "y", "y"])
        b = cat_col("b", ["u", "v", "u", "v"])
        p = profile_pair(a, b)
        assert p.chi_square_p == pytest.approx(1.0)
        assert p.relation is RelationLabel.NO_RELATION

    def test_negative_linear_with_noise(self):
        rng = np.random.default_rng(7)
        x = rng.standard_normal(300)
        y = -x + rng.standard_normal(300) * 0.05
        expected_r = oracles.pearson_direct(x, y)
        assert expected_r < -0.9
        p = profile_pair(num_col("a", x), num_col("b", y))
        assert p.pearson_r == pytest.approx(expected_r, rel=1e-12)
        assert p.relation is RelationLabel.NEGATIVE_LINEAR

    def test_cat_numeric_anova(self):
        cat = cat_col("g", ["a"] * 30 + ["b"] * 30)
        num = num_col("x", [1.0] * 30 + [5.0] * 30)
        p = profile_pair(cat, num)
        assert p.anova_p is not None
        assert p.anova_p < 0.05
        assert p.relation is RelationLabel.POSITIVE_RELATION

    def test_degenerate_flagged_not_raised(self):
        p = profile_pair(num_col("a", [1, 1, 1]), num_col("b", [1, 2, 3]))
        assert p.degenerate
        assert p.relation is RelationLabel.NO_RELATION

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            profile_pair(num_col("a", [1, 2]), num_col("b", [1, 2, 3]))

    def test_pearson_affine_invariance(self):
        rng = np.random.default_rng(9)
        x = rng.standard_normal(100)
        y = rng.standard_normal(100)
        r1 = profile_pair(num_col("a", x), num_col("b", y)).pearson_r
        r2 = profile_pair(num_col("a", 3.5 * x + 11.0), num_col("b", y)).pearson_r
        assert r1 == pytest.approx(r2, abs=1e-12)

    def test_pairwise_complete(self):
        a = num_col("a", [1, 2, None, 4])
        b = num_col("b", [2, 4, 6, None])
        p = profile_pair(a, b)
        assert p.pearson_r == pytest.approx(1.0, abs=1e-12)


class TestPlotRecommendation:
    @pytest.fixture(scope="class")
    def model(self):
        return train_plot_svm(builtin_plot_meta_rows())

    def test_training_rows_are_separable(self):
        rows = builtin_plot_meta_rows()
        X = [encode_meta_features(r) for r in rows]
        y = [r.label.value for r in rows]
        assert oracles.perceptron_separable(X, y)

    def test_reproduces_all_builtin_labels(self, model):
        for row in builtin_plot_meta_rows():
            assert model.predict_row(row) is row.label

    def test_scatter_for_linear_pair(self, model):
        p1 = profile_column(num_col("age", np.linspace(20, 60, 100)))
        rng = np.random.default_rng(0)
        income = np.exp(rng.standard_normal(100)) + np.linspace(0, 5, 100)
        p2 = profile_column(num_col("income", income))
        pair = profile_pair(
            num_col("age", np.linspace(20, 60, 100)), num_col("income", income)
        )
        row_meta = PlotMetaRow(
            "continuous", "normal", "continuous", "skewed_right",
            "positive_linear", "high_positive", PlotType.HISTOGRAM,
        )
        assert model.predict_row(row_meta) is PlotType.SCATTER_PLOT

    def test_violin_for_cat_numeric(self, model):
        meta = PlotMetaRow(
            "categorical", "varied", "continuous", "normal",
            "positive_relation", "low_or_na", PlotType.HISTOGRAM,
        )
        assert model.predict_row(meta) is PlotType.VIOLIN_PLOT

    def test_line_graph_for_negative_linear(self, model):
        meta = PlotMetaRow(
            "continuous", "normal", "continuous", "normal",
            "negative_linear", "high_negative", PlotType.HISTOGRAM,
        )
        assert model.predict_row(meta) is PlotType.LINE_GRAPH

    def test_rule_fallbacks(self):
        numeric = profile_column(num_col("x", [1.5, 2.5, 3.5]))
        categorical = profile_column(cat_col("c", ["a", "b", "a"]))
        assert recommend_plot(numeric).plot_type is PlotType.HISTOGRAM
        assert recommend_plot(categorical).plot_type is PlotType.BAR_CHART
        pair_nn = profile_pair(num_col("x", [1, 2, 3]), num_col("y", [2, 1, 3]))
        assert (
            recommend_plot(numeric, profile_column(num_col("y", [2.5, 1.5, 3.5])), pair_nn).plot_type
            is PlotType.SCATTER_PLOT
        )
        pair_cn = profile_pair(cat_col("c", ["a", "b", "a"]), num_col("x", [1, 2, 3]))
        assert (
            recommend_plot(categorical, numeric, pair_cn).plot_type is PlotType.VIOLIN_PLOT
        )
        pair_cc = profile_pair(cat_col("c", ["a", "b", "a"]), cat_col("d", ["u", "v", "u"]))
        assert (
            recommend_plot(categorical, profile_column(cat_col("d", ["u", "v", "u"])), pair_cc).plot_type
            is PlotType.BAR_CHART
        )

    def test_pair_requires_both(self):
        numeric = profile_column(num_col("x", [1.5, 2.5, 3.5]))
        with pytest.raises(ValueError):
            recommend_plot(numeric, profile_column(num_col("y", [1, 2, 3])), None)

    def test_svm_score_in_unit_interval(self, model):
        for row in builtin_plot_meta_rows():
            p1 = profile_column(num_col("x", [1.0, 2.0, 3.0]))
            p2 = profile_column(num_col("y", [1.0, 2.0, 3.0]))
            pair = profile_pair(num_col("x", [1, 2, 3]), num_col("y", [1, 2, 3]))
            rec = recommend_plot(p1, p2, pair, model=model)
            assert rec.source == "svm"
            assert 0.0 <= rec.score <= 1.0

    def test_identical_rows_single_label(self):
        rows = [
            PlotMetaRow("continuous", "normal", "continuous", "normal",
                        "no_relation", "low_or_na", PlotType.SCATTER_PLOT)
        ] * 2 + [
            PlotMetaRow("categorical", "varied", "categorical", "varied",
                        "no_relation", "low_or_na", PlotType.BAR_CHART)
        ]
        model = train_plot_svm(rows)
        assert model.predict_row(rows[0]) is PlotType.SCATTER_PLOT

    def test_single_class_raises(self):
        rows = [
            PlotMetaRow("continuous", "normal", "continuous", "normal",
                        "no_relation", "low_or_na", PlotType.SCATTER_PLOT)
        ] * 3
        with pytest.raises(SingleClass):
            train_plot_svm(rows)


class TestCorrelationMatrix:
    def test_identical_columns(self):
        d = dataset(num_col("a", [1, 2, 3]), num_col("b", [1, 2, 3]))
        m, names = correlation_matrix(d)
        assert names == ["a", "b"]
        assert m[0, 1] == pytest.approx(1.0, abs=1e-12)

    def test_negation(self):
        d = dataset(num_col("a", [1, 2, 3]), num_col("b", [-1, -2, -3]))
        m, _ = correlation_matrix(d)
        assert m[0, 1] == pytest.approx(-1.0, abs=1e-12)

    def test_matches_direct_formula(self):
        rng = np.random.default_rng(21)
        cols = [num_col(f"c{i}", rng.standard_normal(50)) for i in range(3)]
        m, _ = correlation_matrix(dataset(*cols))
        for i in range(3):
            for j in range(3):
                if i == j:
                    assert m[i, j] == 1.0
                else:
                    expected = oracles.pearson_direct(
                        cols[i].to_numpy(), cols[j].to_numpy()
                    )
                    assert abs(m[i, j] - expected) < 1e-12

    def test_exactly_symmetric(self):
        rng = np.random.default_rng(22)
        cols = [num_col(f"c{i}", rng.standard_normal(30)) for i in range(4)]
        m, _ = correlation_matrix(dataset(*cols))
        assert np.array_equal(m, m.T)

    def test_too_few(self):
        with pytest.raises(TooFewNumericColumns):
            correlation_matrix(dataset(num_col("a", [1, 2, 3])))


class TestHierarchicalOrder:
    def test_identical_columns_adjacent(self):
        rng = np.random.default_rng(30)
        base = rng.standard_normal(40)
        cols = [
            num_col("c0", rng.standard_normal(40)),
            num_col("c1", base),
            num_col("c2", rng.standard_normal(40)),
            num_col("c3", base),
            num_col("c4", rng.standard_normal(40)),
        ]
        m, _ = correlation_matrix(dataset(*cols))
        order = hierarchical_order(m)
        i1, i3 = order.index(1), order.index(3)
        assert abs(i1 - i3) == 1

    def test_single_column(self):
        assert hierarchical_order(np.array([[1.0]])) == [0]

    def test_identity_preserves_input_order(self):
        assert hierarchical_order(np.eye(4)) == [0, 1, 2, 3]

    def test_output_is_permutation(self):
        rng = np.random.default_rng(31)
        cols = [num_col(f"c{i}", rng.standard_normal(25)) for i in range(6)]
        m, _ = correlation_matrix(dataset(*cols))
        assert sorted(hierarchical_order(m)) == list(range(6))


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.floats(min_value=-1e6, max_value=1e6), min_size=3, max_size=60),
    st.floats(min_value=0.1, max_value=100.0),
    st.floats(min_value=-1e3, max_value=1e3),
)
def test_pearson_affine_invariance_property(values, alpha, beta):
    x = np.array(values)
    rng = np.random.default_rng(0)
    y = rng.standard_normal(len(x))
    a1, a2 = num_col("a", x), num_col("a2", alpha * x + beta)
    b = num_col("b", y)
    p1 = profile_pair(a1, b)
    p2 = profile_pair(a2, b)
    if p1.degenerate or p2.degenerate:
        return
    assert p1.pearson_r == pytest.approx(p2.pearson_r, abs=1e-9)

"""Encoders, scalers, Box-Cox, discretize, recommender, propagation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from dataprep.errors import (
    CardinalityTooHigh,
    DegenerateLabels,
    EmptyName,
    IncompleteOrder,
    MixedProviders,
    NonCategorical,
    NonPositiveValues,
    UnsortedEdges,
    ZeroRange,
    ZeroVariance,
)
from dataprep.pipeline import StepOrigin, StepRecord
from dataprep.profiling import profile_column
from dataprep.tabular import MISSING, VariableType
from dataprep.transform import (
    PropagationConfig,
    RecommendContext,
    boxcox,
    boxcox_loglik,
    builtin_preproc_meta_rows,
    cosine_distance,
    discretize,
    embed_attribute,
    fit_boxcox_lambda,
    frequency_encode,
    invert_boxcox,
    invert_scaler,
    label_decode,
    label_encode,
    minmax,
    one_hot_encode,
    power_transform,
    propagate_steps,
    recommend_preprocessing,
    train_preproc_gbm,
    zscore,
)
from util import cat_col, num_col, text_col


class TestLabelEncode:
    def test_with_order(self):
        col, enc = label_encode(
            cat_col("q", ["low", "high", "medium"], order=["low", "medium", "high"])
        )
        assert col.cells == (0.0, 2.0, 1.0)
        assert enc.mapping == {"low": 0.0, "medium": 1.0, "high": 2.0}

    def test_binary(self):
        col, _ = label_encode(cat_col("g", ["Male", "Female"]))
        assert col.cells == (0.0, 1.0)

    def test_incomplete_order(self):
        with pytest.raises(IncompleteOrder):
            label_encode(cat_col("q", ["low", "high"]), order=["low"])

    def test_decode_round_trip(self):
        src = cat_col("c", ["a", "b", None, "a"])
        col, enc = label_encode(src)
        back = label_decode(col, enc)
        assert back.cells == src.cells

    def test_non_categorical(self):
        with pytest.raises(NonCategorical):
            label_encode(num_col("x", [1, 2]))


class TestOneHot:
    def test_basic(self):
        cols, enc = one_hot_encode(cat_col("c", ["a", "b", "a"]))
        assert [c.name for c in cols] == ["c=a", "c=b"]
        assert cols[0].cells == (1.0, 0.0, 1.0)
        assert cols[1].cells == (0.0, 1.0, 0.0)

    def test_row_sums_one(self):
        cols, _ = one_hot_encode(cat_col("g", ["x", "y", "x", "z"]))
        for i in range(4):
            assert sum(c.cells[i] for c in cols) == 1.0

    def test_missing_row_all_missing(self):
        cols, _ = one_hot_encode(cat_col("c", ["a", None, "b"]))
        assert all(c.cells[1] is MISSING for c in cols)

    def test_cardinality_cap(self):
        values = [f"cat{i}" for i in range(100)]
        with pytest.raises(CardinalityTooHigh):
            one_hot_encode(cat_col("city", values), cap=50)


class TestFrequencyEncode:
    def test_basic(self):
        col, enc = frequency_encode(cat_col("c", ["a", "a", "b"]))
        assert col.cells == pytest.approx((2 / 3, 2 / 3, 1 / 3))

    def test_single_category(self):
        col, _ = frequency_encode(cat_col("c", ["z", "z"]))
        assert col.cells == (1.0, 1.0)

    def test_decode_reencode_identity(self):
        src = cat_col("c", ["a", "a", "b", None])
        col, enc = frequency_encode(src)
        reverse = {v: k for k, v in enc.mapping.items()}
        decoded = [MISSING if c is MISSING else reverse[c] for c in col.cells]
        assert tuple(decoded) == src.cells


class TestScalers:
    def test_zscore_fixed_point(self):
        col, params = zscore(num_col("x", [-1, 0, 1]))
        assert col.cells == (-1.0, 0.0, 1.0)
        assert params.mu == 0.0
        assert params.sigma == 1.0

    def test_zscore_contract(self):
        rng = np.random.default_rng(0)
        col, _ = zscore(num_col("x", rng.normal(5, 3, size=100)))
        x = col.to_numpy()
        assert abs(x.mean()) < 1e-12
        assert abs(np.var(x, ddof=1) - 1.0) < 1e-12

    def test_zscore_constant_rejected(self):
        with pytest.raises(ZeroVariance):
            zscore(num_col("x", [3, 3, 3]))

    def test_minmax_unit(self):
        col, _ = minmax(num_col("x", [0, 5, 10]))
        assert col.cells == (0.0, 0.5, 1.0)

    def test_minmax_symmetric(self):
        col, _ = minmax(num_col("x", [0, 5, 10]), range_=(-1.0, 1.0))
        assert col.cells == (-1.0, 0.0, 1.0)

    def test_minmax_constant_rejected(self):
        with pytest.raises(ZeroRange):
            minmax(num_col("x", [2, 2]))

    def test_minmax_inverse_round_trip(self):
        rng = np.random.default_rng(1)
        src = num_col("x", rng.uniform(-50, 50, size=40))
        col, params = minmax(src)
        back = invert_scaler(col, params)
        np.testing.assert_allclose(back.to_numpy(), src.to_numpy(), atol=1e-12)

    def test_zscore_inverse_round_trip(self):
        rng = np.random.default_rng(2)
        src = num_col("x", rng.normal(10, 4, size=40))
        col, params = zscore(src)
        back = invert_scaler(col, params)
        np.testing.assert_allclose(back.to_numpy(), src.to_numpy(), atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(min_value=-1e5, max_value=1e5), min_size=2, max_size=50))
def test_zscore_property(values):
    col = num_col("x", values)
    try:
        out, _ = zscore(col)
    except ZeroVariance:
        return
    x = out.to_numpy()
    assert abs(x.mean()) < 1e-9
    assert abs(np.var(x, ddof=1) - 1.0) < 1e-9


class TestBoxCox:
    def test_lognormal_recovers_log(self):
        rng = np.random.default_rng(3)
        x = np.exp(rng.standard_normal(2000))
        col, params = boxcox(num_col("x", x))
        assert -0.1 <= params.lam <= 0.1
        grid = oracles.grid_boxcox_lambda(x)
        assert abs(params.lam - grid) <= 0.02

    def test_normal_data_lambda_near_one(self):
        rng = np.random.default_rng(4)
        x = rng.standard_normal(2000) + 10.0
        col, params = boxcox(num_col("x", x))
        assert 0.5 <= params.lam <= 1.5
        grid = oracles.grid_boxcox_lambda(x)
        assert abs(params.lam - grid) <= 0.02

    def test_non_positive_rejected(self):
        with pytest.raises(NonPositiveValues):
            boxcox(num_col("x", [1.0, 0.0, 2.0]))

    def test_local_optimality(self):
        rng = np.random.default_rng(5)
        x = np.exp(rng.standard_normal(500) * 0.5)
        params = fit_boxcox_lambda(x)
        ll = boxcox_loglik(x, params.lam)
        assert ll >= boxcox_loglik(x, params.lam + 0.01) - 1e-9
        assert ll >= boxcox_loglik(x, params.lam - 0.01) - 1e-9

    def test_inverse_round_trip(self):
        rng = np.random.default_rng(6)
        src = num_col("x", rng.uniform(0.5, 20.0, size=100))
        col, params = boxcox(src)
        if params.lam != 0.0:
            back = invert_boxcox(col, params.lam)
            np.testing.assert_allclose(back.to_numpy(), src.to_numpy(), atol=1e-9)

    def test_power_conveniences(self):
        col = num_col("x", [1.0, 4.0, 9.0])
        assert power_transform(col, "sqrt").cells == (1.0, 2.0, 3.0)
        assert power_transform(col, "square").cells == (1.0, 16.0, 81.0)
        np.testing.assert_allclose(
            power_transform(col, "log").to_numpy(), np.log([1, 4, 9])
        )
        np.testing.assert_allclose(
            power_transform(col, "log10").to_numpy(), np.log10([1, 4, 9])
        )


class TestDiscretize:
    def test_age_groups(self):
        col = discretize(num_col("age", [15, 25, 40]), [0, 18, 65])
        assert col.cells == ("[0,18)", "[18,65]", "[18,65]")
        assert col.vtype is VariableType.ORDINAL

    def test_out_of_range_missing(self):
        col = discretize(num_col("x", [-1, 5]), [0, 10])
        assert col.cells[0] is MISSING
        assert col.cells[1] == "[0,10]"

    def test_single_interval(self):
        col = discretize(num_col("x", [1, 2, 3]), [0, 10])
        assert set(col.cells) == {"[0,10]"}

    def test_unsorted_edges(self):
        with pytest.raises(UnsortedEdges):
            discretize(num_col("x", [1]), [5, 1])


class TestPreprocGbm:
    def test_reproduces_all_builtin_rows(self):
        rows = builtin_preproc_meta_rows()
        model = train_preproc_gbm(rows)
        for row in rows:
            assert model.predict(row.inputs()) == row.labels(), row.name

    def test_identical_rows_predicted(self):
        rows = [builtin_preproc_meta_rows()[0]] * 2
        model = train_preproc_gbm(rows)
        assert model.predict(rows[0].inputs()) == rows[0].labels()

    def test_constant_labels_constant_predictor(self):
        rows = [builtin_preproc_meta_rows()[0], builtin_preproc_meta_rows()[0]]
        model = train_preproc_gbm(rows)
        for hist_list in model.loss_histories.values():
            assert hist_list == []  # constant fields train no ensembles

    def test_single_row_rejected(self):
        with pytest.raises(DegenerateLabels):
            train_preproc_gbm([builtin_preproc_meta_rows()[0]])

    def test_loss_monotone(self):
        model = train_preproc_gbm(builtin_preproc_meta_rows())
        for histories in model.loss_histories.values():
            for history in histories:
                assert all(b <= a + 1e-12 for a, b in zip(history, history[1:]))


class TestRecommendRules:
    def test_high_cardinality_frequency(self):
        values = [f"city{i}" for i in range(120)]
        profile = profile_column(cat_col("City", values))
        steps = recommend_preprocessing(profile)
        assert [s.op for s in steps] == ["frequency_encode"]

    def test_skewed_positive_power_then_scale(self):
        rng = np.random.default_rng(7)
        x = np.exp(rng.standard_normal(300))
        profile = profile_column(num_col("Experience", x))
        steps = recommend_preprocessing(profile)
        assert [s.op for s in steps] == ["boxcox", "zscore"]

    def test_skewed_with_missing_gets_median(self):
        rng = np.random.default_rng(8)
        x = list(np.exp(rng.standard_normal(300)))
        x[5] = None
        profile = profile_column(num_col("v", x))
        steps = recommend_preprocessing(profile)
        assert steps[0].op == "impute"
        assert steps[0].params["strategy"] == "median"

    def test_wide_range_regression_target_minmax(self):
        rng = np.random.default_rng(9)
        x = rng.uniform(10, 1_000_000, size=200)
        profile = profile_column(num_col("Salary", x))
        steps = recommend_preprocessing(
            profile, RecommendContext(analysis_type="regression", is_target=True)
        )
        assert [s.op for s in steps] == ["minmax"]
        assert steps[0].params["range"] == [0.0, 1.0]

    def test_binary_label_encoded(self):
        profile = profile_column(cat_col("Gender", ["M", "F", "M", "F"]))
        steps = recommend_preprocessing(profile)
        assert [s.op for s in steps] == ["label_encode"]

    def test_moderate_nominal_one_hot(self):
        profile = profile_column(cat_col("Zone", ["a", "b", "c", "a", "b"]))
        steps = recommend_preprocessing(profile)
        assert [s.op for s in steps] == ["one_hot_encode"]

    def test_already_standardized_no_steps(self):
        rng = np.random.default_rng(10)
        x = rng.standard_normal(500)
        x = (x - x.mean()) / x.std(ddof=1)
        profile = profile_column(num_col("z", x))
        assert recommend_preprocessing(profile) == []

    def test_model_path_matches_labels(self):
        model = train_preproc_gbm(builtin_preproc_meta_rows())
        values = [f"city{i}" for i in range(120)]
        profile = profile_column(cat_col("City", values))
        steps = recommend_preprocessing(profile, model=model)
        assert any(s.op == "frequency_encode" for s in steps)


class TestEmbedding:
    def test_deterministic(self):
        a = embed_attribute("SalePrice", ["100", "200"])
        b = embed_attribute("SalePrice", ["100", "200"])
        np.testing.assert_array_equal(a.vector, b.vector)

    def test_unit_norm(self):
        e = embed_attribute("anything", ["x", "y"])
        assert np.linalg.norm(e.vector) == pytest.approx(1.0, abs=1e-12)

    def test_name_variants_close(self):
        a = embed_attribute("SalePrice")
        b = embed_attribute("Sale_Price")
        assert cosine_distance(a, b) < 0.3

    def test_unrelated_names_far(self):
        a = embed_attribute("SalePrice")
        b = embed_attribute("Neighborhood")
        assert cosine_distance(a, b) > 0.25

    def test_empty_name_rejected(self):
        with pytest.raises(EmptyName):
            embed_attribute("")


class TestPropagation:
    def make_step(self, column):
        return StepRecord(id=f"s-{column}", op="one_hot_encode", columns=(column,))

    def test_near_identical_names_inherit(self):
        steps = {"Condition1": [self.make_step("Condition1")], "Condition2": []}
        embeddings = {
            "Condition1": embed_attribute("Condition1", ["Norm", "Feedr"]),
            "Condition2": embed_attribute("Condition2", ["Norm", "Feedr"]),
        }
        vtypes = {
            "Condition1": VariableType.NOMINAL,
            "Condition2": VariableType.NOMINAL,
        }
        out = propagate_steps(steps, embeddings, vtypes)
        assert len(out["Condition2"]) == 1
        inherited = out["Condition2"][0]
        assert inherited.op == "one_hot_encode"
        assert inherited.columns == ("Condition2",)
        assert inherited.origin is StepOrigin.PROPAGATED
        assert inherited.provenance["from"] == "Condition1"

    def test_zero_threshold_requires_identical(self):
        steps = {"a_col": [self.make_step("a_col")], "b_col": []}
        embeddings = {
            "a_col": embed_attribute("a_col"),
            "b_col": embed_attribute("b_col"),
        }
        vtypes = {"a_col": VariableType.NOMINAL, "b_col": VariableType.NOMINAL}
        out = propagate_steps(
            steps, embeddings, vtypes, PropagationConfig(threshold=0.0)
        )
        assert out["b_col"] == []

    def test_different_vtype_never_propagates(self):
        steps = {"Cond1": [self.make_step("Cond1")], "Cond2": []}
        embeddings = {
            "Cond1": embed_attribute("Cond1"),
            "Cond2": embed_attribute("Cond2"),
        }
        vtypes = {"Cond1": VariableType.NOMINAL, "Cond2": VariableType.CONTINUOUS}
        out = propagate_steps(steps, embeddings, vtypes)
        assert out["Cond2"] == []

    def test_no_clobber(self):
        explicit = [StepRecord(id="keep", op="zscore", columns=("b",))]
        steps = {"a": [self.make_step("a")], "b": explicit}
        embeddings = {"a": embed_attribute("a"), "b": embed_attribute("a")}
        vtypes = {"a": VariableType.NOMINAL, "b": VariableType.NOMINAL}
        out = propagate_steps(steps, embeddings, vtypes)
        assert out["b"] == explicit

    def test_mixed_providers_rejected(self):
        from dataprep.transform import AttributeEmbedding

        e1 = embed_attribute("a")
        e2 = AttributeEmbedding(name="b", vector=e1.vector, provider="other")
        with pytest.raises(MixedProviders):
            propagate_steps({"a": [], "b": []}, {"a": e1, "b": e2}, {})

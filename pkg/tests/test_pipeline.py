"""Plan construction, execution, constraint repair, export."""

import numpy as np
import pytest

from dataprep.cleaning import (
    ConstraintSet,
    DomainMembership,
    NotNull,
    Range,
    Unique,
    validate_constraints,
)
from dataprep.errors import ConstraintViolationAfterRepair, FingerprintMismatch
from dataprep.pipeline import (
    BuildOptions,
    CleaningPlan,
    StepRecord,
    build_plan,
    execute_plan,
    fingerprint_bytes,
)
from dataprep.tabular import MISSING, parse_csv, serialize_csv
from util import cat_col, dataset, num_col


def make_plan(steps, constraints=ConstraintSet(), seed=0):
    return CleaningPlan(
        fingerprint="", seed=seed, constraints=constraints, steps=tuple(steps)
    )


class TestBuildPlan:
    def test_clean_prescaled_dataset_only_profiling(self):
        # Pre-standardized regular grid: fully observed, no duplicates, no
        # density outliers, already scaled -> nothing to recommend.
        gx, gy = np.meshgrid(np.arange(8.0), np.arange(8.0))
        x, y = gx.ravel(), gy.ravel() + 0.01 * gx.ravel()
        x = (x - x.mean()) / x.std(ddof=1)
        y = (y - y.mean()) / y.std(ddof=1)
        d = dataset(num_col("a", x), num_col("b", y))
        plan = build_plan(d)
        assert [s.op for s in plan.steps] == ["profile"]

    def test_house_plan_covers_expected_ops(self, house_dataset, house_csv):
        d, _ = house_dataset
        plan = build_plan(
            d,
            options=BuildOptions(target="SalePrice", analysis_type="regression"),
            fingerprint=fingerprint_bytes(house_csv),
        )
        by_op = {}
        for s in plan.steps:
            by_op.setdefault(s.op, []).append(s)
        assert "drop_rows_by_missing" in by_op
        one_hot_cols = {s.columns[0] for s in by_op["one_hot_encode"]}
        assert {"MSZoning", "Neighborhood", "Condition1", "Condition2"} <= one_hot_cols
        label_cols = {s.columns[0] for s in by_op["label_encode"]}
        assert {"OverallCond", "OverallQual", "HeatingQC"} <= label_cols
        assert "remove_outliers" in by_op
        assert by_op["remove_outliers"][0].params["detector"] == "dbscan"
        assert "boxcox" in by_op
        assert "zscore" in by_op
        assert by_op["minmax"][0].columns == ("SalePrice",)

    def test_air_plan_covers_expected_ops(self, air_dataset, air_csv):
        d, _ = air_dataset
        plan = build_plan(
            d,
            options=BuildOptions(target="AQI", analysis_type="regression"),
            fingerprint=fingerprint_bytes(air_csv),
        )
        by_op = {}
        for s in plan.steps:
            by_op.setdefault(s.op, []).append(s)
        assert {s.columns[0] for s in by_op["one_hot_encode"]} == {"City"}
        assert {s.columns[0] for s in by_op["label_encode"]} == {"AQI_Bucket"}
        scaled = {s.columns[0] for s in by_op["zscore"]}
        assert {"PM2.5", "PM10", "NO2"} <= scaled | {
            s.columns[0] for s in by_op.get("boxcox", [])
        }
        # too many rows for multivariate outlier removal
        assert "remove_outliers" not in by_op

    def test_plan_round_trips_through_json(self, house_dataset):
        d, _ = house_dataset
        plan = build_plan(d, options=BuildOptions(target="SalePrice"))
        again = CleaningPlan.from_json(plan.to_json())
        assert again == plan


class TestExecutePlan:
    def test_empty_plan_identity(self):
        d = dataset(num_col("a", [1, 2, 3]))
        out, report = execute_plan(d, make_plan([]))
        assert out == d
        assert report.rows_before == report.rows_after == 3
        assert report.cells_changed == 0
        assert report.applied_steps == []

    def test_drop_rows_by_missing_counts(self):
        d = dataset(
            num_col("a", [1, None, None, 4, None]),
            cat_col("b", ["x", None, None, "y", None]),
        )
        plan = make_plan(
            [StepRecord(id="s1", op="drop_rows_by_missing", params={"threshold": 0.0})]
        )
        out, report = execute_plan(d, plan)
        assert out.row_count == 2
        assert report.applied_steps[0]["result"]["rows_removed"] == 3

    def test_replay_byte_identical(self):
        src = b"a,b,c\n1,x,5\n2,y,\n3,x,7\n1,x,5\n900,z,8\n"
        d, inference = parse_csv(src)
        plan = build_plan(d, fingerprint=fingerprint_bytes(src))
        runs = []
        for _ in range(2):
            d2, inf2 = parse_csv(src)
            out, report = execute_plan(
                d2, plan, input_fingerprint=fingerprint_bytes(src), type_inference=inf2
            )
            runs.append((serialize_csv(out), report.to_json()))
        assert runs[0][0] == runs[1][0]
        assert runs[0][1] == runs[1][1]

    def test_fingerprint_mismatch(self):
        d = dataset(num_col("a", [1, 2]))
        plan = CleaningPlan(fingerprint="deadbeef", steps=())
        with pytest.raises(FingerprintMismatch):
            execute_plan(d, plan, input_fingerprint="cafebabe")

    def test_step_results_recorded(self):
        d = dataset(num_col("a", [1, None, 3]))
        plan = make_plan(
            [StepRecord(id="s1", op="impute", params={"strategy": "mean"}, columns=("a",))]
        )
        out, report = execute_plan(d, plan)
        assert out.column("a").cells == (1.0, 2.0, 3.0)
        assert report.applied_steps[0]["result"] == {
            "cells_changed": 1,
            "fill_value": 2.0,
        }


class TestConstraintRepair:
    def test_not_null_imputed(self):
        d = dataset(num_col("age", [30.0, None, 50.0]))
        cs = ConstraintSet((NotNull("age"),))
        plan = make_plan(
            [StepRecord(id="s1", op="enforce_constraints")], constraints=cs
        )
        out, report = execute_plan(d, plan)
        assert validate_constraints(out, cs) == []
        assert out.column("age").cells[1] == 40.0
        assert report.violations_before != []
        assert report.violations_after == []

    def test_range_clamped(self):
        d = dataset(num_col("age", [30.0, 999.0, -5.0]))
        cs = ConstraintSet((Range("age", 0, 120),))
        plan = make_plan(
            [StepRecord(id="s1", op="enforce_constraints")], constraints=cs
        )
        out, _ = execute_plan(d, plan)
        assert out.column("age").cells == (30.0, 120.0, 0.0)

    def test_unique_dropped(self):
        d = dataset(num_col("id", [1, 2, 1, 3, 2]))
        cs = ConstraintSet((Unique(("id",)),))
        plan = make_plan(
            [StepRecord(id="s1", op="enforce_constraints")], constraints=cs
        )
        out, _ = execute_plan(d, plan)
        assert out.column("id").cells == (1.0, 2.0, 3.0)

    def test_domain_replaced_with_mode(self):
        d = dataset(cat_col("g", ["a", "zz", "a", "b"]))
        cs = ConstraintSet((DomainMembership("g", frozenset({"a", "b"})),))
        plan = make_plan(
            [StepRecord(id="s1", op="enforce_constraints")], constraints=cs
        )
        out, _ = execute_plan(d, plan)
        assert out.column("g").cells == ("a", "a", "a", "b")

    def test_violation_without_repair_step_fails(self):
        d = dataset(num_col("age", [30.0, None]))
        cs = ConstraintSet((NotNull("age"),))
        plan = make_plan([], constraints=cs)
        with pytest.raises(ConstraintViolationAfterRepair):
            execute_plan(d, plan)

    def test_build_plan_places_enforcement_after_repairs(self):
        d = dataset(num_col("age", [30.0, None, 50.0]), cat_col("g", ["a", "b", "a"]))
        cs = ConstraintSet((NotNull("age"),))
        plan = build_plan(d, cs)
        ops = [s.op for s in plan.steps]
        enforce_at = ops.index("enforce_constraints")
        assert enforce_at > ops.index("impute")
        # preprocessing (encoders/scalers) runs after the constraint checkpoint
        encode_positions = [i for i, op in enumerate(ops) if op in ("one_hot_encode", "zscore")]
        assert all(i > enforce_at for i in encode_positions)
        out, report = execute_plan(d, plan)
        assert report.violations_after == []


class TestExport:
    def test_round_trip_through_file(self, tmp_path):
        from dataprep.pipeline import export_csv

        d, _ = parse_csv(b"a,b\n1.5,x\n,y\n2.25,z\n")
        path = tmp_path / "out.csv"
        export_csv(d, path)
        d2, _ = parse_csv(path.read_bytes())
        for c1, c2 in zip(d.columns, d2.columns):
            assert c1.cells == c2.cells

    def test_header_only_for_empty_dataset(self, tmp_path):
        from dataprep.pipeline import export_csv
        from dataprep.tabular import Column, Dataset, VariableType

        d = Dataset(
            name="empty",
            columns=(
                Column(name="a", vtype=VariableType.CONTINUOUS, cells=()),
                Column(name="b", vtype=VariableType.TEXT, cells=()),
            ),
        )
        path = tmp_path / "empty.csv"
        export_csv(d, path)
        assert path.read_text() == "a,b\n"

    def test_noop_report_sections_empty(self):
        d = dataset(num_col("a", [1, 2, 3]))
        out, report = execute_plan(d, make_plan([]))
        payload = report.to_dict()
        assert payload["shape"]["cells_changed"] == 0
        assert payload["outlier_reports"] == []
        assert payload["merge_log"] == {"records": []}
        assert payload["violations_after"] == []


class TestMissingMonotonicity:
    def test_no_new_missing_after_missing_stage(self, house_dataset, house_csv):
        d, inference = house_dataset
        plan = build_plan(
            d,
            options=BuildOptions(target="SalePrice", analysis_type="regression"),
            fingerprint=fingerprint_bytes(house_csv),
        )
        out, _ = execute_plan(
            d, plan, input_fingerprint=fingerprint_bytes(house_csv), type_inference=inference
        )
        total_missing = sum(c.missing_count for c in out.columns)
        assert total_missing == 0

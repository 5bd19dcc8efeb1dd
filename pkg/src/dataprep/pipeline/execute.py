"""Plan construction and deterministic execution.

Stage order is fixed: profile -> missing handling -> outliers -> dedupe ->
encode/transform/scale -> constraint enforcement. Users may reorder steps
through the session API; this order is the recommended default.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..cleaning import (
    ConstraintSet,
    DomainMembership,
    ImputeStrategy,
    IsolationForestConfig,
    MiceConfig,
    NotNull,
    Range,
    SimilarityModel,
    Unique,
    dedupe,
    detect_dbscan,
    detect_iqr,
    detect_isolation_forest,
    detect_lof,
    drop_rows_by_missing,
    exact_duplicate_model,
    find_missing,
    impute_mice,
    impute_simple,
    validate_constraints,
    winsorize,
)
from ..errors import (
    AllMissing,
    ConstraintViolationAfterRepair,
    FingerprintMismatch,
    NonNumericAxis,
    StepExecutionError,
    UnknownColumn,
    ZeroVariance,
)
from ..mining import ForestConfig, mine_apriori, rank_features, transactionize
from ..profiling import (
    builtin_plot_meta_rows,
    correlation_matrix,
    hierarchical_order,
    profile_column,
    profile_pair,
    recommend_plot,
    train_plot_svm,
)
from ..tabular import MISSING, Column, Dataset, TypeInferenceReport, VariableType
from ..transform import (
    GbmConfig,
    PropagationConfig,
    RecommendContext,
    apply_boxcox,
    builtin_preproc_meta_rows,
    discretize,
    embed_attribute,
    fit_boxcox_lambda,
    frequency_encode,
    label_encode,
    minmax,
    one_hot_encode,
    power_transform,
    propagate_steps,
    recommend_preprocessing,
    train_preproc_gbm,
    zscore,
)
from .plan import CleaningPlan
from .report import RunReport
from .steps import StepOrigin, StepRecord

#: datasets larger than this skip multivariate outlier removal in the plan
OUTLIER_ROW_CAP = 20_000
#: at most this many top-correlated pairs profiled in the report
REPORT_PAIR_CAP = 5
#: report-stage feature ranking runs on a stride subsample with a bounded
#: forest; direct rank_features calls keep the full-size defaults
REPORT_RANK_ROW_CAP = 1_000
REPORT_RANK_CONFIG = dict(n_trees=20, max_depth=10)
#: items above this support are near-constant and excluded from rule mining
MINE_MAX_ITEM_SUPPORT = 0.9
#: the report keeps positively-associated rules only, capped
REPORT_RULE_MIN_LIFT = 1.1
REPORT_RULE_CAP = 200


@dataclass(frozen=True)
class BuildOptions:
    seed: int = 0
    target: str | None = None
    analysis_type: str = "any"  # "any" | "classification" | "regression"
    row_drop_threshold: float = 0.5
    outlier_detector: str = "dbscan"  # "dbscan" | "iqr" | "none"
    outlier_axes: tuple[str, str] | None = None
    min_pts: int = 5
    dedupe_mode: str = "exact"  # "exact" | "off"
    use_model_recommender: bool = False
    mine_rules: bool = True
    min_support: float = 0.3
    min_confidence: float = 0.7
    propagation_threshold: float = 0.25

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "target": self.target,
            "analysis_type": self.analysis_type,
            "row_drop_threshold": self.row_drop_threshold,
            "outlier_detector": self.outlier_detector,
            "outlier_axes": list(self.outlier_axes) if self.outlier_axes else None,
            "min_pts": self.min_pts,
            "dedupe_mode": self.dedupe_mode,
            "use_model_recommender": self.use_model_recommender,
            "mine_rules": self.mine_rules,
            "min_support": self.min_support,
            "min_confidence": self.min_confidence,
            "propagation_threshold": self.propagation_threshold,
        }


# --------------------------------------------------------------------------
# plan construction
# --------------------------------------------------------------------------


def _auto_axes(d: Dataset, target: str | None) -> tuple[str, str] | None:
    """Two numeric axes for multivariate outlier detection: the target plus
    its best-correlated predictor, else the two highest-variance numerics."""
    numerics = [
        c for c in d.numeric_columns() if len(set(c.observed_values().tolist())) > 1
    ]
    if len(numerics) < 2:
        return None
    if target is not None and any(c.name == target for c in numerics):
        tcol = d.column(target)
        best_name, best_r = None, -1.0
        for c in numerics:
            if c.name == target:
                continue
            pair = profile_pair(c, tcol)
            r = abs(pair.pearson_r) if pair.pearson_r is not None else 0.0
            if r > best_r:
                best_name, best_r = c.name, r
        if best_name is not None:
            return (best_name, target)
    by_variance = sorted(
        numerics, key=lambda c: (-float(np.var(c.observed_values())), c.name)
    )
    return (by_variance[0].name, by_variance[1].name)


def build_plan(
    d: Dataset,
    constraints: ConstraintSet | None = None,
    options: BuildOptions | None = None,
    fingerprint: str = "",
    parse_options=None,
) -> CleaningPlan:
    """Profile the dataset and emit the recommended, unapplied plan."""
    from ..tabular import ParseOptions

    options = options or BuildOptions()
    constraints = constraints or ConstraintSet()
    parse_options = parse_options or ParseOptions()

    steps: list[StepRecord] = []
    counter = 0

    def add(op, columns=(), params=None, origin=StepOrigin.RECOMMENDED, provenance=None):
        nonlocal counter
        counter += 1
        steps.append(
            StepRecord(
                id=f"s{counter:03d}",
                op=op,
                params=params or {},
                columns=tuple(columns),
                origin=origin,
                provenance=provenance,
            )
        )

    add("profile", params={"options": options.to_dict()})

    # --- missing stage ----------------------------------------------------
    report = find_missing(d)
    if any(f > options.row_drop_threshold for f in report.row_fractions):
        add("drop_rows_by_missing", params={"threshold": options.row_drop_threshold})

    profiles = {}
    for col in d.columns:
        if col.missing_count == len(col.cells):
            continue  # entirely missing: nothing to profile or prepare
        profiles[col.name] = profile_column(col)

    model = None
    if options.use_model_recommender:
        model = train_preproc_gbm(builtin_preproc_meta_rows(), GbmConfig(seed=options.seed))

    recommended: dict[str, list[StepRecord]] = {}
    for name, profile in profiles.items():
        context = RecommendContext(
            analysis_type=options.analysis_type,
            is_target=(name == options.target),
        )
        recommended[name] = recommend_preprocessing(profile, context, model=model)

    for name in [c.name for c in d.columns]:
        for step in recommended.get(name, []):
            if step.op == "impute":
                add("impute", columns=(name,), params=step.params)

    # --- outlier stage ------------------------------------------------------
    for name in [c.name for c in d.columns]:
        for step in recommended.get(name, []):
            if step.op == "winsorize":
                add("winsorize", columns=(name,), params=step.params)
    if options.outlier_detector == "iqr":
        for col in d.numeric_columns():
            if col.name in profiles and detect_iqr_applicable(col):
                rep = detect_iqr(col)
                if rep.flags:
                    add("winsorize", columns=(col.name,), params={"lo_pct": 5.0, "hi_pct": 95.0})
    elif options.outlier_detector == "dbscan" and d.row_count <= OUTLIER_ROW_CAP:
        axes = options.outlier_axes or _auto_axes(d, options.target)
        if axes is not None:
            # Probe now; recommend removal only when something is flagged.
            probe, _ = detect_dbscan(
                _standardized_points(d, axes), eps=None, min_pts=options.min_pts
            )
            if probe.flags:
                add(
                    "remove_outliers",
                    columns=axes,
                    params={
                        "detector": "dbscan",
                        "min_pts": options.min_pts,
                        "eps": None,
                        "standardize": True,
                    },
                )

    # --- dedupe stage -------------------------------------------------------
    if options.dedupe_mode == "exact" and _has_exact_duplicates(d):
        add("dedupe", params={"mode": "exact"})

    # --- constraint enforcement (ends the repair stage) -----------------------
    # Constraints speak the source schema, so the repaired dataset is
    # validated before encoders and scalers reshape columns and values.
    if len(constraints):
        add("enforce_constraints", params={})

    # --- preprocessing stage (with semantic propagation) ----------------------
    prep: dict[str, list[StepRecord]] = {}
    for name, recs in recommended.items():
        prep[name] = [s for s in recs if s.op not in ("impute", "winsorize")]
    embeddings = {}
    vtypes = {}
    for col in d.columns:
        if col.name not in profiles:
            continue
        samples = [c for c in col.cells[:50] if c is not MISSING][:20]
        embeddings[col.name] = embed_attribute(col.name, samples)
        vtypes[col.name] = col.vtype
    propagated = propagate_steps(
        prep,
        embeddings,
        vtypes,
        PropagationConfig(threshold=options.propagation_threshold),
    )
    for name in [c.name for c in d.columns]:
        for step in propagated.get(name, []):
            add(
                step.op,
                columns=(name,),
                params=step.params,
                origin=step.origin,
                provenance=step.provenance,
            )

    return CleaningPlan(
        fingerprint=fingerprint,
        seed=options.seed,
        source_name=d.name,
        parse_options=parse_options,
        constraints=constraints,
        steps=tuple(steps),
    )


def detect_iqr_applicable(col: Column) -> bool:
    return len(col.observed_values()) >= 4


def _has_exact_duplicates(d: Dataset) -> bool:
    seen: set = set()
    for i in range(d.row_count):
        key = tuple(c.cells[i] for c in d.columns)
        if key in seen:
            return True
        seen.add(key)
    return False


# --------------------------------------------------------------------------
# execution
# --------------------------------------------------------------------------


@dataclass
class _ExecContext:
    plan: CleaningPlan
    report: RunReport
    step_index: int = 0

    def step_seed(self) -> int:
        return (self.plan.seed * 100_003 + self.step_index) % (2**31 - 1)


def _count_cell_changes(before: Dataset, after: Dataset) -> int:
    changed = 0
    for col in after.columns:
        if before.has_column(col.name):
            old = before.column(col.name).cells
            if len(old) == len(col.cells):
                changed += sum(1 for a, b in zip(old, col.cells) if a is not b and a != b)
    return changed


def _exec_profile(d: Dataset, step: StepRecord, ctx: _ExecContext):
    report = ctx.report
    profiles = {}
    for col in d.columns:
        if col.missing_count == len(col.cells):
            continue
        profiles[col.name] = profile_column(col)
    report.profiles = [p.to_dict() for p in profiles.values()]
    report.missing = find_missing(d).to_dict()

    svm = train_plot_svm(builtin_plot_meta_rows())
    for name, profile in profiles.items():
        rec = recommend_plot(profile)
        report.plot_recommendations.append({"x": name, "y": None, **rec.to_dict()})

    numerics = [c for c in d.numeric_columns() if c.name in profiles]
    if len(numerics) >= 2:
        matrix, names = correlation_matrix(d)
        order = hierarchical_order(matrix)
        report.correlation = {
            "columns": names,
            "matrix": [[float(v) for v in row] for row in matrix],
            "ordering": order,
        }
        pairs = []
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                pairs.append((abs(matrix[i][j]), names[i], names[j]))
        pairs.sort(key=lambda t: (-t[0], t[1], t[2]))
        for _, a, b in pairs[:REPORT_PAIR_CAP]:
            pp = profile_pair(d.column(a), d.column(b))
            report.pair_profiles.append(pp.to_dict())
            rec = recommend_plot(profiles[a], profiles[b], pp, model=svm)
            report.plot_recommendations.append({"x": a, "y": b, **rec.to_dict()})

    options = step.params.get("options", {})
    target = options.get("target")
    if target and d.has_column(target):
        try:
            ranking = rank_features(
                _stride_sample(d, REPORT_RANK_ROW_CAP),
                target,
                ForestConfig(seed=ctx.plan.seed, **REPORT_RANK_CONFIG),
            )
            report.importance = ranking.to_dict()
        except Exception:
            report.importance = None
    if options.get("mine_rules", True) and d.categorical_columns():
        transactions = transactionize(d)
        transactions = _drop_near_constant_items(transactions, MINE_MAX_ITEM_SUPPORT)
        if any(transactions):
            rules = mine_apriori(
                transactions,
                options.get("min_support", 0.3),
                options.get("min_confidence", 0.7),
            )
            kept = [r for r in rules if r.lift >= REPORT_RULE_MIN_LIFT]
            kept.sort(key=lambda r: (-r.lift, r.antecedent, r.consequent))
            report.association_rules = [r.to_dict() for r in kept[:REPORT_RULE_CAP]]
    return d, {}


def _stride_sample(d: Dataset, cap: int) -> Dataset:
    if d.row_count <= cap:
        return d
    stride = -(-d.row_count // cap)  # ceil
    keep = range(0, d.row_count, stride)
    columns = tuple(
        c.replace_cells([c.cells[i] for i in keep]) for c in d.columns
    )
    return Dataset(name=d.name, columns=columns)


def _drop_near_constant_items(transactions: list[set], max_support: float) -> list[set]:
    """Near-constant categories dominate every rule; drop them up front."""
    n = len(transactions)
    counts: dict[str, int] = {}
    for t in transactions:
        for item in t:
            counts[item] = counts.get(item, 0) + 1
    keep = {item for item, c in counts.items() if c / n <= max_support}
    return [t & keep for t in transactions]


def _exec_drop_rows_by_missing(d: Dataset, step: StepRecord, ctx: _ExecContext):
    threshold = step.params.get("threshold", 0.5)
    out, removed = drop_rows_by_missing(d, threshold)
    return out, {"rows_removed": len(removed), "rows": list(removed)}


def _exec_impute(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    col = d.column(name)
    if col.missing_count == 0:
        return d, {"cells_changed": 0}
    strategy = ImputeStrategy(step.params.get("strategy", "mean"))
    try:
        filled, fill = impute_simple(col, strategy)
    except AllMissing:
        out, removed = d.drop_rows(list(np.flatnonzero(col.missing_mask)))
        return out, {"rows_removed": removed, "note": "column all missing; rows dropped"}
    return d.replace_column(name, filled), {
        "cells_changed": col.missing_count,
        "fill_value": fill if fill is not MISSING else None,
    }


def _exec_impute_mice(d: Dataset, step: StepRecord, ctx: _ExecContext):
    config = MiceConfig(
        iterations=step.params.get("iterations", 10), seed=ctx.plan.seed
    )
    before = find_missing(d).total_missing
    out = impute_mice(d, config)
    return out, {"cells_changed": before}


def _exec_winsorize(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    col = d.column(name)
    out = winsorize(
        col, step.params.get("lo_pct", 5.0), step.params.get("hi_pct", 95.0)
    )
    changed = sum(1 for a, b in zip(col.cells, out.cells) if a != b)
    return d.replace_column(name, out), {"cells_changed": changed}


def _standardized_points(d: Dataset, axes) -> np.ndarray:
    columns = []
    for name in axes:
        col = d.column(name)
        if not col.vtype.is_numeric:
            raise NonNumericAxis(f"outlier axis {name!r} is {col.vtype.value}")
        x = col.to_numpy().copy()
        nan = np.isnan(x)
        if nan.any():
            fill = float(np.nanmean(x)) if not nan.all() else 0.0
            x[nan] = fill
        std = float(x.std(ddof=1)) if len(x) > 1 else 0.0
        if std > 0:
            x = (x - x.mean()) / std
        columns.append(x)
    return np.column_stack(columns)


def _exec_remove_outliers(d: Dataset, step: StepRecord, ctx: _ExecContext):
    detector = step.params.get("detector", "dbscan")
    axes = step.columns
    points = (
        _standardized_points(d, axes)
        if step.params.get("standardize", True)
        else np.column_stack([d.column(n).to_numpy() for n in axes])
    )
    if detector == "dbscan":
        rep, labels = detect_dbscan(
            points, eps=step.params.get("eps"), min_pts=step.params.get("min_pts", 5),
            columns=tuple(axes),
        )
    elif detector == "isolation_forest":
        rep = detect_isolation_forest(
            points,
            IsolationForestConfig(
                trees=step.params.get("trees", 100),
                subsample=step.params.get("subsample", 256),
                seed=step.params.get("seed", ctx.step_seed()),
                score_threshold=step.params.get("score_threshold", 0.6),
            ),
            columns=tuple(axes),
        )
    elif detector == "lof":
        rep = detect_lof(
            points,
            k=step.params.get("k", 20),
            score_threshold=step.params.get("score_threshold", 1.5),
            columns=tuple(axes),
        )
    else:
        raise ValueError(f"unknown outlier detector {detector!r}")
    ctx.report.outlier_reports.append(rep.to_dict())
    out, removed = d.drop_rows(rep.flagged_rows)
    return out, {
        "rows_removed": removed,
        "rows": list(rep.flagged_rows),
        "detector_params": rep.params,
    }


def _exec_drop_rows(d: Dataset, step: StepRecord, ctx: _ExecContext):
    rows = step.params.get("rows", [])
    out, removed = d.drop_rows(rows)
    return out, {"rows_removed": removed, "rows": sorted(rows)}


def _exec_dedupe(d: Dataset, step: StepRecord, ctx: _ExecContext):
    mode = step.params.get("mode", "exact")
    if mode == "exact":
        model = exact_duplicate_model(
            [c.name for c in d.columns], {c.name: c.vtype for c in d.columns}
        )
    else:
        model = SimilarityModel.from_dict(step.params["model"])
    out, log = dedupe(
        d,
        model,
        all_pairs=step.params.get("all_pairs", False),
        window=step.params.get("window", 10),
    )
    ctx.report.merge_log["records"].extend(log.to_dict()["records"])
    return out, {
        "rows_removed": d.row_count - out.row_count,
        "substitutions": len(log.substitutions),
    }


def _exec_label_encode(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    col, enc = label_encode(d.column(name), order=step.params.get("order"))
    return d.replace_column(name, col), {"mapping": enc.mapping}


def _exec_one_hot(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    cols, enc = one_hot_encode(d.column(name), cap=step.params.get("cap", 50))
    return d.replace_column_with(name, cols), {"mapping": enc.mapping}


def _exec_frequency(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    col, enc = frequency_encode(d.column(name))
    return d.replace_column(name, col), {"mapping": enc.mapping}


def _exec_zscore(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    try:
        col, params = zscore(d.column(name))
    except ZeroVariance:
        return d, {"skipped": "zero variance"}
    return d.replace_column(name, col), {"params": params.to_dict()}


def _exec_minmax(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    range_ = tuple(step.params.get("range", (0.0, 1.0)))
    from ..errors import ZeroRange

    try:
        col, params = minmax(d.column(name), range_=range_)
    except ZeroRange:
        return d, {"skipped": "zero range"}
    return d.replace_column(name, col), {"params": params.to_dict()}


def _exec_boxcox(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    col = d.column(name)
    lam = step.params.get("lam")
    if lam is None:
        params = fit_boxcox_lambda(col.observed_values())
        lam = params.lam
        fitted = params.to_dict()
    else:
        fitted = {"lam": lam}
    out = apply_boxcox(col, lam)
    return d.replace_column(name, out), {"params": fitted}


def _exec_power(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    kind = step.params.get("kind", "sqrt")
    out = power_transform(d.column(name), kind)
    return d.replace_column(name, out), {"kind": kind}


def _exec_discretize(d: Dataset, step: StepRecord, ctx: _ExecContext):
    (name,) = step.columns
    out = discretize(d.column(name), step.params["edges"])
    return d.replace_column(name, out), {"edges": step.params["edges"]}


def _repair_constraints(d: Dataset, constraints: ConstraintSet) -> tuple[Dataset, list[dict]]:
    """Deterministic repair: impute/clamp/replace, then drop what remains."""
    actions: list[dict] = []
    for constraint in constraints.constraints:
        if isinstance(constraint, NotNull):
            col = d.column(constraint.column)
            if col.missing_count == 0:
                continue
            strategy = (
                ImputeStrategy.MEAN if col.vtype.is_numeric else ImputeStrategy.MODE
            )
            try:
                filled, fill = impute_simple(col, strategy)
                d = d.replace_column(constraint.column, filled)
                actions.append(
                    {
                        "constraint": constraint.to_dict(),
                        "action": "impute",
                        "cells_changed": col.missing_count,
                    }
                )
            except AllMissing:
                rows = list(np.flatnonzero(col.missing_mask))
                d, removed = d.drop_rows(rows)
                actions.append(
                    {
                        "constraint": constraint.to_dict(),
                        "action": "drop_rows",
                        "rows_removed": removed,
                    }
                )
        elif isinstance(constraint, Range):
            col = d.column(constraint.column)
            if not col.vtype.is_numeric:
                continue
            cells = tuple(
                cell
                if cell is MISSING
                else float(min(max(cell, constraint.lo), constraint.hi))
                for cell in col.cells
            )
            changed = sum(1 for a, b in zip(col.cells, cells) if a != b)
            if changed:
                d = d.replace_column(constraint.column, col.replace_cells(cells))
                actions.append(
                    {
                        "constraint": constraint.to_dict(),
                        "action": "clamp",
                        "cells_changed": changed,
                    }
                )
        elif isinstance(constraint, DomainMembership):
            col = d.column(constraint.column)
            members = [
                c for c in col.cells if c is not MISSING and str(c) in constraint.allowed
            ]
            bad_rows = [
                i
                for i, c in enumerate(col.cells)
                if c is not MISSING and str(c) not in constraint.allowed
            ]
            if not bad_rows:
                continue
            if members:
                counts: dict = {}
                for m in members:
                    counts[m] = counts.get(m, 0) + 1
                best = max(counts.values())
                fill = next(m for m, k in counts.items() if k == best)
                cells = list(col.cells)
                for i in bad_rows:
                    cells[i] = fill
                d = d.replace_column(constraint.column, col.replace_cells(cells))
                actions.append(
                    {
                        "constraint": constraint.to_dict(),
                        "action": "replace_with_mode",
                        "cells_changed": len(bad_rows),
                    }
                )
            else:
                d, removed = d.drop_rows(bad_rows)
                actions.append(
                    {
                        "constraint": constraint.to_dict(),
                        "action": "drop_rows",
                        "rows_removed": removed,
                    }
                )

    # Unique constraints after value repairs (repairs can create duplicates).
    for constraint in constraints.constraints:
        if isinstance(constraint, Unique):
            cols = [d.column(n) for n in constraint.columns]
            seen: set = set()
            doomed = []
            for i in range(d.row_count):
                key = tuple(c.cells[i] for c in cols)
                if key in seen:
                    doomed.append(i)
                else:
                    seen.add(key)
            if doomed:
                d, removed = d.drop_rows(doomed)
                actions.append(
                    {
                        "constraint": constraint.to_dict(),
                        "action": "drop_duplicate_rows",
                        "rows_removed": removed,
                    }
                )

    # Final sweep: drop any rows still violating anything.
    remaining = validate_constraints(d, constraints)
    if remaining:
        rows = sorted({r for v in remaining for r in v.rows})
        d, removed = d.drop_rows(rows)
        actions.append({"action": "drop_violating_rows", "rows_removed": removed})
    return d, actions


def _exec_enforce_constraints(d: Dataset, step: StepRecord, ctx: _ExecContext):
    constraints = ctx.plan.constraints
    out, actions = _repair_constraints(d, constraints)
    return out, {"actions": actions}


_EXECUTORS = {
    "profile": _exec_profile,
    "drop_rows_by_missing": _exec_drop_rows_by_missing,
    "impute": _exec_impute,
    "impute_mice": _exec_impute_mice,
    "winsorize": _exec_winsorize,
    "remove_outliers": _exec_remove_outliers,
    "drop_rows": _exec_drop_rows,
    "dedupe": _exec_dedupe,
    "label_encode": _exec_label_encode,
    "one_hot_encode": _exec_one_hot,
    "frequency_encode": _exec_frequency,
    "zscore": _exec_zscore,
    "minmax": _exec_minmax,
    "boxcox": _exec_boxcox,
    "power": _exec_power,
    "discretize": _exec_discretize,
    "enforce_constraints": _exec_enforce_constraints,
}


def execute_plan(
    d: Dataset,
    plan: CleaningPlan,
    input_fingerprint: str | None = None,
    type_inference: TypeInferenceReport | None = None,
) -> tuple[Dataset, RunReport]:
    """Apply plan steps in order; fails if constraints still do not hold."""
    if (
        input_fingerprint is not None
        and plan.fingerprint
        and input_fingerprint != plan.fingerprint
    ):
        raise FingerprintMismatch(
            f"plan was built for {plan.fingerprint[:12]}..., input is "
            f"{input_fingerprint[:12]}..."
        )

    report = RunReport(
        fingerprint=plan.fingerprint,
        seed=plan.seed,
        source_name=plan.source_name,
        rows_before=d.row_count,
        columns_before=d.column_count,
    )
    if type_inference is not None:
        report.type_inference = type_inference.to_dict()
    if len(plan.constraints):
        report.violations_before = [
            v.to_dict() for v in validate_constraints(d, plan.constraints)
        ]

    ctx = _ExecContext(plan=plan, report=report)
    current = d
    cells_changed = 0
    enforce_indices = [
        i for i, s in enumerate(plan.steps) if s.op == "enforce_constraints"
    ]
    checkpoint = enforce_indices[-1] if enforce_indices else None
    for index, step in enumerate(plan.steps):
        ctx.step_index = index
        executor = _EXECUTORS.get(step.op)
        if executor is None:
            raise StepExecutionError(step.id, ValueError(f"unknown op {step.op!r}"), report)
        for name in step.columns:
            if not current.has_column(name):
                raise StepExecutionError(
                    step.id, UnknownColumn(f"step references missing column {name!r}"), report
                )
        try:
            after, result = executor(current, step, ctx)
        except Exception as exc:
            report.applied_steps.append(step.with_result({"error": str(exc)}).to_dict())
            raise StepExecutionError(step.id, exc, report) from exc
        cells_changed += result.get("cells_changed", 0)
        report.applied_steps.append(step.with_result(result).to_dict())
        current = after
        if index == checkpoint and len(plan.constraints):
            # The repaired dataset must satisfy the constraint set here,
            # before preprocessing reshapes columns and value ranges.
            violations = validate_constraints(current, plan.constraints)
            report.violations_after = [v.to_dict() for v in violations]
            if violations:
                raise ConstraintViolationAfterRepair(violations)

    if checkpoint is None and len(plan.constraints):
        violations = validate_constraints(current, plan.constraints)
        report.violations_after = [v.to_dict() for v in violations]
        if violations:
            raise ConstraintViolationAfterRepair(violations)

    report.rows_after = current.row_count
    report.columns_after = current.column_count
    report.cells_changed = cells_changed
    return current, report

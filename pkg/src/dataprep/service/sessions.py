"""In-memory session store with optimistic versioning.

A session pins the original upload (bytes + fingerprint + parsed dataset)
and tracks a working snapshot plus the evolving plan. Interactive actions
apply to the snapshot immediately and are recorded as plan steps positioned
before the recommended stages, so replaying the plan from the original file
reproduces the session's final output byte-for-byte (service/CLI
equivalence).

Every mutating call carries the snapshot version it saw; a mismatch raises
StaleVersion and changes nothing. Mutations are serialized per store.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field, replace

import numpy as np

from ..cleaning import ConstraintSet
from ..errors import (
    FileTooLarge,
    IndexOutOfRange,
    InvalidEdit,
    NonNumericAxis,
    SessionExpired,
    StaleVersion,
    UnknownSession,
    UnknownStep,
)
from ..pipeline import (
    BuildOptions,
    CleaningPlan,
    StepOrigin,
    StepRecord,
    build_plan,
    execute_plan,
    fingerprint_bytes,
)
from ..pipeline.execute import _standardized_points  # shared axis handling
from ..cleaning import detect_dbscan, detect_iqr, detect_isolation_forest, detect_lof
from ..cleaning import IsolationForestConfig
from ..profiling import profile_column
from ..tabular import Dataset, ParseOptions, TypeInferenceReport, parse_csv, serialize_csv

DEFAULT_MAX_UPLOAD = 100 * 1024 * 1024
DEFAULT_EXPIRY_SECONDS = 3600.0
UNDO_DEPTH = 50


@dataclass(frozen=True)
class Snapshot:
    dataset: Dataset
    plan: CleaningPlan


@dataclass
class Artifacts:
    csv: bytes
    report: bytes
    rows: int


@dataclass
class Session:
    id: str
    raw: bytes
    fingerprint: str
    parse_options: ParseOptions
    inference: TypeInferenceReport
    original: Dataset
    snapshot: Snapshot
    created: float
    last_access: float
    version: int = 0
    interactive_steps: int = 0
    undo_stack: list[Snapshot] = field(default_factory=list)
    redo_stack: list[Snapshot] = field(default_factory=list)
    artifacts: Artifacts | None = None

    @property
    def dataset(self) -> Dataset:
        return self.snapshot.dataset

    @property
    def plan(self) -> CleaningPlan:
        return self.snapshot.plan


@dataclass
class StoreConfig:
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD
    expiry_seconds: float = DEFAULT_EXPIRY_SECONDS
    build_options: BuildOptions = field(default_factory=BuildOptions)


class SessionStore:
    """Holds live sessions; the clock is injectable for expiry tests."""

    def __init__(self, config: StoreConfig | None = None, clock=time.monotonic):
        self.config = config or StoreConfig()
        self.clock = clock
        self._sessions: dict[str, Session] = {}
        self._lock = threading.RLock()

    # -- lifecycle ---------------------------------------------------------

    def create(
        self,
        upload: bytes,
        name: str = "dataset",
        constraints: ConstraintSet | None = None,
        options: BuildOptions | None = None,
    ) -> Session:
        if len(upload) > self.config.max_upload_bytes:
            raise FileTooLarge(
                f"upload is {len(upload)} bytes, cap is {self.config.max_upload_bytes}"
            )
        parse_options = ParseOptions()
        dataset, inference = parse_csv(upload, parse_options, name=name)
        build_options = options or self.config.build_options
        plan = build_plan(
            dataset,
            constraints or ConstraintSet(),
            build_options,
            fingerprint=fingerprint_bytes(upload),
            parse_options=parse_options,
        )
        now = self.clock()
        session = Session(
            id=secrets.token_hex(16),
            raw=upload,
            fingerprint=fingerprint_bytes(upload),
            parse_options=parse_options,
            inference=inference,
            original=dataset,
            snapshot=Snapshot(dataset=dataset, plan=plan),
            created=now,
            last_access=now,
        )
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise UnknownSession(f"no session {session_id!r}")
            if self.clock() - session.last_access > self.config.expiry_seconds:
                del self._sessions[session_id]
                raise SessionExpired(f"session {session_id!r} expired")
            session.last_access = self.clock()
            return session

    def drop(self, session_id: str):
        with self._lock:
            self._sessions.pop(session_id, None)

    # -- versioned mutation --------------------------------------------------

    def _mutate(self, session_id: str, expected_version: int, fn):
        """Run fn(session) -> Snapshot under the store lock; push undo."""
        with self._lock:
            session = self.get(session_id)
            if expected_version != session.version:
                raise StaleVersion(expected=session.version, got=expected_version)
            new_snapshot = fn(session)
            session.undo_stack.append(session.snapshot)
            if len(session.undo_stack) > UNDO_DEPTH:
                session.undo_stack.pop(0)
            session.redo_stack.clear()
            session.snapshot = new_snapshot
            session.version += 1
            return session

    # -- interactive operations ------------------------------------------------

    def remove_points(self, session_id: str, expected_version: int, rows: list[int]) -> Session:
        def apply(session: Session) -> Snapshot:
            dataset = session.dataset
            for r in rows:
                if not 0 <= r < dataset.row_count:
                    raise IndexOutOfRange(f"row {r} outside current snapshot")
            new_dataset, _ = dataset.drop_rows(rows)
            step = StepRecord(
                id=f"u{session.version + 1:03d}",
                op="drop_rows",
                params={"rows": sorted(int(r) for r in rows)},
                origin=StepOrigin.USER_ACCEPTED,
            )
            steps = list(session.plan.steps)
            insert_at = 1 + session.interactive_steps  # after profile + prior edits
            steps.insert(min(insert_at, len(steps)), step)
            session.interactive_steps += 1
            return Snapshot(dataset=new_dataset, plan=session.plan.with_steps(steps))

        return self._mutate(session_id, expected_version, apply)

    def retype_column(
        self, session_id: str, expected_version: int, column: str, vtype: str
    ) -> Session:
        """Override a column's inferred type: re-parse the original upload
        with the override, rebuild the recommended plan, and re-apply the
        session's interactive row removals. Plan edits are regenerated."""
        with self._lock:
            session = self.get(session_id)
            if expected_version != session.version:
                raise StaleVersion(expected=session.version, got=expected_version)
            if not session.original.has_column(column):
                raise InvalidEdit(f"no column {column!r}")
            options = session.parse_options.with_override(column, vtype)
            dataset, inference = parse_csv(session.raw, options, name=session.original.name)
            plan = build_plan(
                dataset,
                session.plan.constraints,
                self.config.build_options,
                fingerprint=session.fingerprint,
                parse_options=options,
            )
            interactive = [
                s for s in session.plan.steps if s.origin is StepOrigin.USER_ACCEPTED
            ]
            steps = list(plan.steps)
            snapshot_dataset = dataset
            for offset, step in enumerate(interactive):
                steps.insert(1 + offset, step)
                if step.op == "drop_rows":
                    snapshot_dataset, _ = snapshot_dataset.drop_rows(
                        step.params.get("rows", [])
                    )
            # A schema change invalidates old snapshots: not undoable.
            session.undo_stack.clear()
            session.redo_stack.clear()
            session.parse_options = options
            session.original = dataset
            session.inference = inference
            session.interactive_steps = len(interactive)
            session.snapshot = Snapshot(
                dataset=snapshot_dataset, plan=plan.with_steps(steps)
            )
            session.version += 1
            return session

    def patch_step(
        self,
        session_id: str,
        expected_version: int,
        step_id: str,
        action: str,
        params: dict | None = None,
        position: int | None = None,
    ) -> Session:
        def apply(session: Session) -> Snapshot:
            steps = list(session.plan.steps)
            index = next((i for i, s in enumerate(steps) if s.id == step_id), None)
            if index is None:
                raise UnknownStep(f"no step {step_id!r}")
            step = steps[index]
            if action == "reject":
                del steps[index]
            elif action == "accept":
                steps[index] = replace(step, origin=StepOrigin.USER_ACCEPTED)
            elif action == "edit":
                if params is None:
                    raise InvalidEdit("edit requires params")
                merged = {**step.params, **params}
                for name in step.columns:
                    if not session.dataset.has_column(name):
                        raise InvalidEdit(f"step references dropped column {name!r}")
                steps[index] = step.edited(merged)
            elif action == "move":
                if position is None or not 0 <= position < len(steps):
                    raise InvalidEdit(f"move needs a position in 0..{len(steps) - 1}")
                del steps[index]
                steps.insert(position, step)
            else:
                raise InvalidEdit(f"unknown action {action!r}")
            return Snapshot(dataset=session.dataset, plan=session.plan.with_steps(steps))

        return self._mutate(session_id, expected_version, apply)

    def undo(self, session_id: str, expected_version: int) -> Session:
        with self._lock:
            session = self.get(session_id)
            if expected_version != session.version:
                raise StaleVersion(expected=session.version, got=expected_version)
            if not session.undo_stack:
                raise InvalidEdit("nothing to undo")
            session.redo_stack.append(session.snapshot)
            restored = session.undo_stack.pop()
            if restored.plan.steps != session.snapshot.plan.steps:
                interactive = sum(
                    1 for s in restored.plan.steps if s.op == "drop_rows"
                )
                session.interactive_steps = interactive
            session.snapshot = restored
            session.version += 1
            return session

    def redo(self, session_id: str, expected_version: int) -> Session:
        with self._lock:
            session = self.get(session_id)
            if expected_version != session.version:
                raise StaleVersion(expected=session.version, got=expected_version)
            if not session.redo_stack:
                raise InvalidEdit("nothing to redo")
            session.undo_stack.append(session.snapshot)
            restored = session.redo_stack.pop()
            session.interactive_steps = sum(
                1 for s in restored.plan.steps if s.op == "drop_rows"
            )
            session.snapshot = restored
            session.version += 1
            return session

    # -- reads -------------------------------------------------------------------

    def profiles(self, session_id: str) -> list[dict]:
        session = self.get(session_id)
        out = []
        for col in session.dataset.columns:
            if col.missing_count == len(col.cells):
                continue
            out.append(profile_column(col).to_dict())
        return out

    def outliers(self, session_id: str, detector: str, x: str, y: str, params: dict) -> dict:
        session = self.get(session_id)
        dataset = session.dataset
        for axis in (x, y):
            col = dataset.column(axis)
            if not col.vtype.is_numeric:
                raise NonNumericAxis(f"axis {axis!r} is {col.vtype.value}")
        points = _standardized_points(dataset, (x, y))
        if detector == "dbscan":
            report, _ = detect_dbscan(
                points,
                eps=params.get("eps"),
                min_pts=int(params.get("min_pts", 5)),
                columns=(x, y),
            )
            scores = [0.0] * dataset.row_count
            for flag in report.flags:
                scores[flag.row] = flag.score
        elif detector == "isolation_forest":
            report = detect_isolation_forest(
                points,
                IsolationForestConfig(seed=int(params.get("seed", 0))),
                columns=(x, y),
            )
            scores = list(report.scores)
        elif detector == "lof":
            report = detect_lof(points, k=int(params.get("k", 20)), columns=(x, y))
            scores = list(report.scores)
        elif detector == "iqr":
            rep_x = detect_iqr(dataset.column(x), k=float(params.get("k", 1.5)))
            rep_y = detect_iqr(dataset.column(y), k=float(params.get("k", 1.5)))
            scores = [0.0] * dataset.row_count
            flagged_rows = set()
            for rep in (rep_x, rep_y):
                for flag in rep.flags:
                    flagged_rows.add(flag.row)
                    scores[flag.row] = max(scores[flag.row], flag.score)
            report = rep_x
            flagged = flagged_rows
        else:
            raise InvalidEdit(f"unknown detector {detector!r}")
        if detector != "iqr":
            flagged = set(report.flagged_rows)

        xs = dataset.column(x).to_numpy()
        ys = dataset.column(y).to_numpy()
        pts = []
        for i in range(dataset.row_count):
            pts.append(
                {
                    "row": i,
                    "x": None if np.isnan(xs[i]) else float(xs[i]),
                    "y": None if np.isnan(ys[i]) else float(ys[i]),
                    "flagged": i in flagged,
                    "score": float(scores[i]),
                }
            )
        return {
            "detector": detector,
            "params": report.params,
            "x": x,
            "y": y,
            "version": session.version,
            "points": pts,
        }

    # -- finalize ------------------------------------------------------------------

    def finalize(self, session_id: str, expected_version: int) -> Session:
        with self._lock:
            session = self.get(session_id)
            if expected_version != session.version:
                raise StaleVersion(expected=session.version, got=expected_version)
            cleaned, report = execute_plan(
                session.original,
                session.plan,
                input_fingerprint=session.fingerprint,
                type_inference=session.inference,
            )
            session.artifacts = Artifacts(
                csv=serialize_csv(cleaned, session.parse_options),
                report=report.to_json().encode("utf-8"),
                rows=cleaned.row_count,
            )
            session.version += 1
            return session

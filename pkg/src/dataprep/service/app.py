"""HTTP API for the interactive cleaning studio (versioned under /v1).

Uploads arrive as multipart/form-data (parsed by a minimal RFC 7578 reader;
the package mirror lacks python-multipart) or as a raw CSV body. Responses
are JSON mirroring the report schema. When a built frontend exists next to
the package (frontend/dist), its static assets are served at /.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse

from ..errors import (
    ConstraintViolationAfterRepair,
    DataPrepError,
    DuplicateHeader,
    EmptyInput,
    FileTooLarge,
    IndexOutOfRange,
    InvalidEdit,
    MalformedCsv,
    NonNumericAxis,
    SessionExpired,
    StaleVersion,
    StepExecutionError,
    UnknownColumn,
    UnknownSession,
    UnknownStep,
)
from ..profiling import (
    builtin_plot_meta_rows,
    profile_column,
    profile_pair,
    recommend_plot,
    train_plot_svm,
)
from .sessions import Session, SessionStore, StoreConfig

_STATUS = {
    UnknownSession: 404,
    UnknownStep: 404,
    UnknownColumn: 404,
    SessionExpired: 410,
    StaleVersion: 409,
    ConstraintViolationAfterRepair: 409,
    FileTooLarge: 413,
    MalformedCsv: 400,
    EmptyInput: 400,
    DuplicateHeader: 400,
    NonNumericAxis: 400,
    InvalidEdit: 400,
    IndexOutOfRange: 400,
}


def _error_response(exc: DataPrepError) -> JSONResponse:
    status = 500
    for cls, code in _STATUS.items():
        if isinstance(exc, cls):
            status = code
            break
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, StaleVersion):
        payload["expected_version"] = exc.expected
    if isinstance(exc, ConstraintViolationAfterRepair):
        payload["violations"] = [v.to_dict() for v in exc.violations]
    if isinstance(exc, MalformedCsv) and exc.row is not None:
        payload["row"] = exc.row
    return JSONResponse(status_code=status, content=payload)


def parse_multipart(body: bytes, content_type: str) -> tuple[bytes, str]:
    """Extract the first file part; returns (bytes, filename)."""
    marker = "boundary="
    if marker not in content_type:
        raise MalformedCsv("multipart body without boundary")
    boundary = content_type.split(marker, 1)[1].split(";", 1)[0].strip().strip('"')
    delimiter = b"--" + boundary.encode()
    for part in body.split(delimiter):
        part = part.strip(b"\r\n")
        if not part or part == b"--":
            continue
        if b"\r\n\r\n" not in part:
            continue
        raw_headers, content = part.split(b"\r\n\r\n", 1)
        headers = raw_headers.decode("utf-8", "replace").lower()
        if "content-disposition" not in headers:
            continue
        filename = "upload.csv"
        for piece in raw_headers.decode("utf-8", "replace").split(";"):
            piece = piece.strip()
            if piece.startswith("filename="):
                filename = piece.split("=", 1)[1].strip('"')
        return content, filename
    raise MalformedCsv("multipart body contained no file part")


def _session_summary(session: Session, store: SessionStore) -> dict:
    return {
        "session_id": session.id,
        "version": session.version,
        "row_count": session.dataset.row_count,
        "column_count": session.dataset.column_count,
        "fingerprint": session.fingerprint,
        "columns": [
            {"name": c.name, "vtype": c.vtype.value} for c in session.dataset.columns
        ],
    }


def _plan_payload(session: Session) -> dict:
    return {"version": session.version, "plan": session.plan.to_dict()}


def create_app(
    store: SessionStore | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    store = store or SessionStore(StoreConfig())
    app = FastAPI(title="dataprep studio service", version="1")
    app.state.store = store

    @app.exception_handler(DataPrepError)
    async def handle_engine_error(request: Request, exc: DataPrepError):
        if isinstance(exc, StepExecutionError):
            inner = exc.cause
            if isinstance(inner, DataPrepError):
                return _error_response(inner)
        return _error_response(exc)

    # -- session lifecycle -------------------------------------------------

    @app.post("/v1/sessions")
    async def create_session(request: Request, name: str = Query(default=None)):
        body = await request.body()
        content_type = request.headers.get("content-type", "")
        if content_type.startswith("multipart/form-data"):
            data, filename = parse_multipart(body, content_type)
        else:
            data, filename = body, "upload.csv"
        upload_name = name or Path(filename).stem or "dataset"
        session = store.create(data, name=upload_name)
        return {
            **_session_summary(session, store),
            "type_inference": session.inference.to_dict(),
            "profiles": store.profiles(session.id),
            "plan": session.plan.to_dict(),
            "preview": _preview_rows(session),
        }

    def _preview_rows(session: Session, limit: int = 100) -> list[dict]:
        from ..tabular import MISSING, format_cell

        dataset = session.original
        rows = []
        for i in range(min(limit, dataset.row_count)):
            rows.append(
                {
                    c.name: (None if c.cells[i] is MISSING else format_cell(c.cells[i], c.vtype))
                    for c in dataset.columns
                }
            )
        return rows

    @app.get("/v1/sessions/{sid}")
    async def get_session(sid: str):
        return _session_summary(store.get(sid), store)

    @app.get("/v1/sessions/{sid}/profile")
    async def get_profiles(sid: str):
        session = store.get(sid)
        return {
            "version": session.version,
            "type_inference": session.inference.to_dict(),
            "profiles": store.profiles(sid),
        }

    @app.get("/v1/sessions/{sid}/plot")
    async def get_plot(sid: str, x: str, y: str | None = None):
        session = store.get(sid)
        dataset = session.dataset
        p1 = profile_column(dataset.column(x))
        if y is None:
            rec = recommend_plot(p1)
            pair_dict = None
        else:
            p2 = profile_column(dataset.column(y))
            pair = profile_pair(dataset.column(x), dataset.column(y))
            model = train_plot_svm(builtin_plot_meta_rows())
            rec = recommend_plot(p1, p2, pair, model=model)
            pair_dict = pair.to_dict()
        return {
            "version": session.version,
            "x": x,
            "y": y,
            "recommendation": rec.to_dict(),
            "pair": pair_dict,
            "spec": _plot_spec(session, x, y, rec.plot_type.value),
        }

    def _column_summary(session: Session, name: str) -> dict:
        import numpy as np

        from ..tabular import MISSING

        col = session.dataset.column(name)
        if col.vtype.is_numeric:
            values = col.observed_values()
            if len(values) == 0:
                return {"kind": "numeric", "bins": {"edges": [], "counts": []}}
            counts, edges = np.histogram(values, bins=12)
            return {
                "kind": "numeric",
                "min": float(values.min()),
                "max": float(values.max()),
                "bins": {
                    "edges": [float(e) for e in edges],
                    "counts": [int(c) for c in counts],
                },
            }
        counts: dict = {}
        for cell in col.cells:
            if cell is not MISSING:
                counts[cell] = counts.get(cell, 0) + 1
        top = sorted(counts.items(), key=lambda kv: (-kv[1], str(kv[0])))[:50]
        return {"kind": "categorical", "counts": {str(k): v for k, v in top}}

    def _plot_spec(session: Session, x: str, y: str | None, plot_type: str) -> dict:
        """Declarative plot spec: type, variables, and server-side summaries
        (the UI renders these numbers, it never computes its own)."""
        import numpy as np

        from ..tabular import MISSING

        dataset = session.dataset
        spec: dict = {
            "plot_type": plot_type,
            "x": x,
            "y": y,
            "x_summary": _column_summary(session, x),
        }
        if y is None:
            return spec
        spec["y_summary"] = _column_summary(session, y)
        xcol, ycol = dataset.column(x), dataset.column(y)
        if xcol.vtype.is_numeric and ycol.vtype.is_numeric:
            xs, ys = xcol.to_numpy(), ycol.to_numpy()
            mask = ~(np.isnan(xs) | np.isnan(ys))
            idx = np.flatnonzero(mask)
            stride = max(1, len(idx) // 500)
            idx = idx[::stride]
            spec["points"] = [[float(xs[i]), float(ys[i])] for i in idx]
        elif ycol.vtype.is_numeric:
            groups: dict = {}
            for cat, value in zip(xcol.cells, ycol.cells):
                if cat is MISSING or value is MISSING:
                    continue
                bucket = groups.setdefault(str(cat), [0.0, 0])
                bucket[0] += float(value)
                bucket[1] += 1
            spec["groups"] = {
                cat: {"mean": total / n, "count": n}
                for cat, (total, n) in sorted(groups.items())[:50]
            }
        return spec

    @app.get("/v1/sessions/{sid}/correlation")
    async def get_correlation(sid: str):
        from ..errors import TooFewNumericColumns
        from ..profiling import correlation_matrix, hierarchical_order

        session = store.get(sid)
        try:
            matrix, names = correlation_matrix(session.dataset)
        except TooFewNumericColumns as exc:
            return JSONResponse(
                status_code=400,
                content={"error": "TooFewNumericColumns", "message": str(exc)},
            )
        ordering = hierarchical_order(matrix)
        return {
            "version": session.version,
            "columns": names,
            "matrix": [[float(v) for v in row] for row in matrix],
            "ordering": ordering,
        }

    @app.get("/v1/sessions/{sid}/outliers")
    async def get_outliers(
        sid: str,
        x: str,
        y: str,
        detector: str = "dbscan",
        eps: float | None = None,
        min_pts: int = 5,
        k: int = 20,
        seed: int = 0,
    ):
        params = {"eps": eps, "min_pts": min_pts, "k": k, "seed": seed}
        return store.outliers(sid, detector, x, y, params)

    @app.get("/v1/sessions/{sid}/plan")
    async def get_plan(sid: str):
        return _plan_payload(store.get(sid))

    # -- mutations ------------------------------------------------------------

    @app.post("/v1/sessions/{sid}/rows:remove")
    async def remove_rows(sid: str, request: Request):
        payload = json.loads(await request.body())
        session = store.remove_points(
            sid, int(payload["version"]), [int(r) for r in payload["rows"]]
        )
        return {
            "version": session.version,
            "row_count": session.dataset.row_count,
            "undo_token": session.version - 1,
        }

    @app.post("/v1/sessions/{sid}/columns:retype")
    async def retype_column(sid: str, request: Request):
        payload = json.loads(await request.body())
        session = store.retype_column(
            sid, int(payload["version"]), payload["column"], payload["vtype"]
        )
        return {
            **_session_summary(session, store),
            "type_inference": session.inference.to_dict(),
            "profiles": store.profiles(sid),
            "plan": session.plan.to_dict(),
        }

    @app.patch("/v1/sessions/{sid}/plan/steps/{step_id}")
    async def patch_step(sid: str, step_id: str, request: Request):
        payload = json.loads(await request.body())
        session = store.patch_step(
            sid,
            int(payload["version"]),
            step_id,
            payload.get("action", "edit"),
            params=payload.get("params"),
            position=payload.get("position"),
        )
        return _plan_payload(session)

    @app.post("/v1/sessions/{sid}:undo")
    async def undo(sid: str, request: Request):
        payload = json.loads(await request.body())
        session = store.undo(sid, int(payload["version"]))
        return {"version": session.version, "row_count": session.dataset.row_count}

    @app.post("/v1/sessions/{sid}:redo")
    async def redo(sid: str, request: Request):
        payload = json.loads(await request.body())
        session = store.redo(sid, int(payload["version"]))
        return {"version": session.version, "row_count": session.dataset.row_count}

    @app.post("/v1/sessions/{sid}:finalize")
    async def finalize(sid: str, request: Request):
        payload = json.loads(await request.body())
        session = store.finalize(sid, int(payload["version"]))
        return {
            "version": session.version,
            "row_count": session.artifacts.rows,
            "csv_url": f"/v1/sessions/{sid}/export/csv",
            "report_url": f"/v1/sessions/{sid}/export/report",
        }

    # -- exports ------------------------------------------------------------------

    @app.get("/v1/sessions/{sid}/export/{artifact}")
    async def export(sid: str, artifact: str):
        session = store.get(sid)
        if artifact == "plan":
            return Response(
                content=session.plan.to_json(), media_type="application/json"
            )
        if session.artifacts is None:
            return JSONResponse(
                status_code=409,
                content={"error": "NotFinalized", "message": "finalize the session first"},
            )
        if artifact == "csv":
            return Response(content=session.artifacts.csv, media_type="text/csv")
        if artifact == "report":
            return Response(
                content=session.artifacts.report, media_type="application/json"
            )
        return JSONResponse(status_code=404, content={"error": "UnknownArtifact"})

    # -- static frontend -------------------------------------------------------

    static = Path(static_dir) if static_dir else Path(__file__).resolve().parents[3] / "frontend" / "dist"
    if static.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static), html=True), name="studio")

    return app

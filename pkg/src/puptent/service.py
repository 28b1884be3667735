"""Stateless HTTP JSON API over the torus constructions.

Endpoints (all GET, all pure functions of their query string):

    /api/domain                      boundary polylines of the parameter domain
    /api/torus?x&y&t[&mode]          full TorusReport (t=0 -> golden tent)
    /api/slice?x&y&t&plane&offset    unordered mesh/plane intersection segments
    /api/probe?x&y[&ts]              flattening diagnostics over a t-list

Out-of-domain parameters give 400 with a region diagnosis; solver
failures give 422 with the residual trace.
"""

from __future__ import annotations

import json
import math
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .errors import DomainError, PupTentError, SolverError
from . import report as report_mod
from .flatten import convergence_probe
from .golden import HEX_CORNER, classify
from .report import plane_slice, torus_report

DEFAULT_PROBE_TS = (1 / 8, 1 / 16, 1 / 32, 1 / 64)


def domain_polylines(y_max=3.0, n_arc=128, n_edge=64):
    """Boundary of the modular domain as plain polylines.

    Pieces: the left edge x = 0, the right ray x = 1/2 from the hex
    corner up, the circular arc |z - 1| = 1 from 0 to the corner, and the
    two distinguished points.
    """
    hx, hy = HEX_CORNER
    left = [[0.0, y] for y in _linspace(1e-6, y_max, n_edge)]
    right = [[0.5, y] for y in _linspace(hy, y_max, n_edge)]
    # arc: z = 1 + exp(i a), a from pi (z=0) down to 2*pi/3 (hex corner)
    arc = []
    for a in _linspace(math.pi, 2.0 * math.pi / 3.0, n_arc):
        arc.append([1.0 + math.cos(a), math.sin(a)])
    return {
        "left_edge": left,
        "right_edge": right,
        "arc": arc,
        "hex_vertex": [hx, hy],
        "square_point": [0.0, 1.0],
        "y_max": y_max,
    }


def _linspace(a, b, n):
    if n == 1:
        return [a]
    step = (b - a) / (n - 1)
    return [a + i * step for i in range(n)]


class _BadRequest(Exception):
    def __init__(self, payload, status=400):
        self.payload = payload
        self.status = status


def _param(qs, name, cast=float, default=None, required=False):
    if name not in qs:
        if required:
            raise _BadRequest({"error": f"missing query parameter {name!r}"})
        return default
    try:
        return cast(qs[name][0])
    except (TypeError, ValueError):
        raise _BadRequest({"error": f"cannot parse parameter {name!r}"})


def _classified(qs):
    x = _param(qs, "x", required=True)
    y = _param(qs, "y", required=True)
    try:
        z = classify(x, y)
    except DomainError as exc:
        raise _BadRequest({"error": str(exc), "region": "invalid"})
    if z.region == "outside":
        raise _BadRequest(
            {"error": f"parameter ({x}, {y}) is outside the domain", "region": z.region}
        )
    return z


def handle_api(path, qs):
    """Route one API request; returns (status, payload dict)."""
    if path == "/api/domain":
        return 200, domain_polylines()
    if path == "/api/torus":
        z = _classified(qs)
        t = _param(qs, "t", default=0.0)
        mode = _param(qs, "mode", cast=str, default=None)
        try:
            return 200, torus_report(z, t, mode=mode)
        except SolverError as exc:
            raise _BadRequest(
                {"error": str(exc), "trace": exc.trace, "region": z.region}, status=422
            )
        except DomainError as exc:
            raise _BadRequest({"error": str(exc), "region": z.region})
    if path == "/api/slice":
        z = _classified(qs)
        t = _param(qs, "t", default=0.0)
        plane = _param(qs, "plane", cast=str, default="XZ")
        offset = _param(qs, "offset", default=0.0)
        mode = _param(qs, "mode", cast=str, default=None)
        try:
            rep = torus_report(z, t, mode=mode)
        except SolverError as exc:
            raise _BadRequest(
                {"error": str(exc), "trace": exc.trace, "region": z.region}, status=422
            )
        except DomainError as exc:
            raise _BadRequest({"error": str(exc), "region": z.region})
        import numpy as np

        segs = plane_slice(np.array(rep["vertices"]), plane, offset)
        return 200, {
            "z": rep["z"],
            "t": t,
            "plane": plane,
            "offset": offset,
            "segments": segs,
        }
    if path == "/api/probe":
        z = _classified(qs)
        if not z.interior:
            raise _BadRequest(
                {"error": "probe needs an interior parameter", "region": z.region}
            )
        ts_raw = _param(qs, "ts", cast=str, default=None)
        ts = (
            [float(v) for v in ts_raw.split(",")] if ts_raw else list(DEFAULT_PROBE_TS)
        )
        table = convergence_probe(z, ts)
        return 200, table.as_dict()
    raise _BadRequest({"error": f"unknown endpoint {path!r}"}, status=404)


def make_handler(static_dir=None):
    static_root = Path(static_dir).resolve() if static_dir else None

    class Handler(BaseHTTPRequestHandler):
        server_version = "puptent"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send_json(self, status, payload):
            body = report_mod.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Cache-Control", "public, max-age=86400")
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):
            parsed = urlparse(self.path)
            if parsed.path.startswith("/api/"):
                try:
                    status, payload = handle_api(parsed.path, parse_qs(parsed.query))
                except _BadRequest as exc:
                    status, payload = exc.status, exc.payload
                except PupTentError as exc:
                    status, payload = 422, {"error": str(exc)}
                self._send_json(status, payload)
                return
            if static_root is not None:
                self._serve_static(parsed.path)
                return
            self._send_json(404, {"error": "no static directory configured"})

        def _serve_static(self, path):
            rel = path.lstrip("/") or "index.html"
            target = (static_root / rel).resolve()
            if not str(target).startswith(str(static_root)) or not target.is_file():
                self._send_json(404, {"error": f"not found: {path}"})
                return
            ctype = {
                ".html": "text/html",
                ".js": "text/javascript",
                ".css": "text/css",
                ".json": "application/json",
                ".svg": "image/svg+xml",
            }.get(target.suffix, "application/octet-stream")
            body = target.read_bytes()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

    return Handler


def make_server(port=0, static_dir=None):
    return ThreadingHTTPServer(("127.0.0.1", port), make_handler(static_dir))


def serve(port=8787, static_dir=None, announce=None):
    """Run the API server until interrupted; port 0 picks a free port.

    The announce line is flushed immediately so wrappers reading a pipe
    can pick up the bound port."""
    httpd = make_server(port=port, static_dir=static_dir)
    if announce is None:
        announce = lambda msg: print(msg, flush=True)
    announce(f"serving on http://127.0.0.1:{httpd.server_address[1]}")
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()


def serve_background(port=0, static_dir=None):
    """Start the server on a daemon thread; returns (server, base_url)."""
    httpd = make_server(port=port, static_dir=static_dir)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    return httpd, f"http://127.0.0.1:{httpd.server_address[1]}"

"""HTTP solve service: games in, equilibria out.

Solvers run server-side on a bounded worker pool; each request carries its
game (XML or matrix text), an algorithm choice, and CLI-style options.  A
request that exceeds its timeout answers 408 and cancels its job
cooperatively, so the worker is freed at the next pivot; the health
endpoint exposes the active-job count.  Sessions are isolated because each
job works on its own parsed game value.

Run locally with:  python -m nasheq.service [--port 8080]
"""

from __future__ import annotations

import os
import random
import threading
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeout

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import ComputationCancelled, GameError, InputError, UnsupportedGameError
from .pathfollow import lemke_howson, lemke_prior, random_prior
from .reporting import (
    payoff_blocks,
    render,
    single_equilibrium_report,
    solve_enumerate,
    structured,
)
from .seqform import build_sequence_form, render_sequence_form
from .strategic import BimatrixGame, MixedStrategy, expected_payoffs, game_from_text
from .tree import GameTree
from .treexml import read_game_xml, strategic_to_xml, to_xml

DEFAULT_TIMEOUT = 120.0


class SolveOptions(BaseModel):
    label: str | None = None
    prior: str | None = None
    seed: int | None = None
    mode: str = "both"
    timeout: float | None = None
    zero_sum: bool = False
    symmetric: bool = False


class SolveRequest(BaseModel):
    game: str
    format: str = "auto"
    algorithm: str = Field(pattern="^(enum|lh|lemke)$")
    options: SolveOptions = SolveOptions()
    session: str | None = None


class ConvertRequest(BaseModel):
    game: str
    format: str = "auto"
    target: str = Field(pattern="^(strategic|sequence|xml)$")


class _Jobs:
    def __init__(self):
        self._lock = threading.Lock()
        self._active = 0

    def __enter__(self):
        with self._lock:
            self._active += 1

    def __exit__(self, *exc):
        with self._lock:
            self._active -= 1

    @property
    def active(self) -> int:
        with self._lock:
            return self._active


def _parse_game(text: str, fmt: str, options: SolveOptions):
    fmt = fmt or "auto"
    if fmt == "auto":
        fmt = "xml" if text.lstrip().startswith("<") else "matrix"
    if fmt == "xml":
        return read_game_xml(text)
    return game_from_text(text, zero_sum=options.zero_sum, symmetric=options.symmetric)


def _as_strategic(loaded) -> BimatrixGame:
    if isinstance(loaded, GameTree):
        return loaded.to_strategic_form()
    return loaded


def _solve(loaded, req: SolveRequest, should_stop):
    options = req.options
    if req.algorithm == "enum":
        game = _as_strategic(loaded)
        report = solve_enumerate(game, should_stop=should_stop)
        return render(report, mode=options.mode), structured(report)
    if req.algorithm == "lh":
        game = _as_strategic(loaded)
        if not options.label:
            raise InputError("algorithm lh needs options.label")
        hits = []
        if options.label in game.row_names:
            hits.append((1, game.row_names.index(options.label)))
        if options.label in game.col_names:
            hits.append((2, game.col_names.index(options.label)))
        if len(hits) != 1:
            raise InputError(f"strategy label {options.label!r} not found or ambiguous")
        ee = lemke_howson(game, hits[0], should_stop=should_stop)
    else:
        game = _as_strategic(loaded)
        if options.prior:
            from .cli import _parse_prior

            prior1, prior2 = _parse_prior(game, options.prior)
        elif options.seed is not None:
            rng = random.Random(options.seed)
            prior1 = MixedStrategy(1, random_prior(game.m, rng))
            prior2 = MixedStrategy(2, random_prior(game.n, rng))
        else:
            prior1 = prior2 = None
        x, y = lemke_prior(game, prior1, prior2, should_stop=should_stop)
        from .enumeration import ExtremeEquilibrium

        u, v = expected_payoffs(game, x, y)
        ee = ExtremeEquilibrium(x=x.probs, y=y.probs, u=u, v=v, idx1=1, idx2=1)
    text = single_equilibrium_report(game, ee, mode=options.mode)
    payload = {
        "equilibria": [
            {
                "ee": 1,
                "p1": {"index": 1, "probs": [str(p) for p in ee.x], "payoff": str(ee.u)},
                "p2": {"index": 1, "probs": [str(q) for q in ee.y], "payoff": str(ee.v)},
            }
        ],
        "components": [],
    }
    return text, payload


def create_app(max_workers: int | None = None, default_timeout: float = DEFAULT_TIMEOUT) -> FastAPI:
    app = FastAPI(title="nasheq solve service")
    pool = ThreadPoolExecutor(max_workers=max_workers or os.cpu_count() or 2)
    jobs = _Jobs()

    def run_job(fn, timeout):
        cancel = threading.Event()

        def body():
            with jobs:
                return fn(cancel.is_set)

        future = pool.submit(body)
        try:
            return future.result(timeout=timeout)
        except FutureTimeout:
            cancel.set()
            raise ComputationCancelled("request timed out")

    @app.get("/api/health")
    def health():
        return {"status": "ok", "active_jobs": jobs.active}

    @app.post("/api/solve")
    def solve(req: SolveRequest):
        timeout = req.options.timeout or default_timeout
        try:
            loaded = _parse_game(req.game, req.format, req.options)
            report_text, payload = run_job(
                lambda stop: _solve(loaded, req, stop), timeout
            )
        except ComputationCancelled:
            return JSONResponse(
                status_code=408,
                content={"status": "timeout", "report_text": "", "structured": None,
                         "session": req.session},
            )
        except UnsupportedGameError as exc:
            return JSONResponse(
                status_code=422,
                content={"status": "error", "error": str(exc), "session": req.session},
            )
        except GameError as exc:
            return JSONResponse(
                status_code=400,
                content={"status": "error", "error": str(exc), "session": req.session},
            )
        return {
            "status": "ok",
            "report_text": report_text,
            "structured": payload,
            "session": req.session,
        }

    @app.post("/api/convert")
    def convert(req: ConvertRequest):
        try:
            loaded = _parse_game(req.game, req.format, SolveOptions())
            if req.target == "strategic":
                text = payoff_blocks(_as_strategic(loaded)) + "\n"
            elif req.target == "sequence":
                if not isinstance(loaded, GameTree):
                    raise InputError("sequence form needs an extensive-form game")
                text = render_sequence_form(build_sequence_form(loaded)) + "\n"
            else:
                text = (
                    to_xml(loaded)
                    if isinstance(loaded, GameTree)
                    else strategic_to_xml(loaded)
                )
        except UnsupportedGameError as exc:
            return JSONResponse(status_code=422, content={"status": "error", "error": str(exc)})
        except GameError as exc:
            return JSONResponse(status_code=400, content={"status": "error", "error": str(exc)})
        return {"status": "ok", "text": text}

    return app


app = create_app()


def main() -> None:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="Run the nasheq solve service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8080)
    parser.add_argument("--workers", type=int, default=None, help="solver pool size")
    args = parser.parse_args()
    uvicorn.run(create_app(max_workers=args.workers), host=args.host, port=args.port)


if __name__ == "__main__":
    main()

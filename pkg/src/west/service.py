"""Stateless HTTP facade over the library for the interactive UI.

Every response is a pure function of the request (given fixed server
configuration), except the wall-clock `ms` diagnostic on /api/regex.
Configuration comes from the environment:

    WEST_BIND              host:port for the bundled runner (default 127.0.0.1:8000)
    WEST_TIME_BUDGET       per-request seconds before 422 (default 5)
    WEST_EXPANSION_BUDGET  max concrete regexes per equivalence side (default 2**24)
    WEST_UI_DIR            directory of the built UI bundle to serve at /
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .equivalence import formula_equivalence
from .formula import IntervalError, complen, num_vars, semantics
from .limits import BudgetExceededError, deadline
from .regexes import match, regex_to_text
from .syntax import (
    FormulaGenParams,
    ParseError,
    parse_formula,
    parse_trace,
    pretty,
    random_formula,
)
from .transform import simp_pad_west_reg, west_reg

__all__ = ["ServiceConfig", "create_app", "app"]


@dataclass(frozen=True)
class ServiceConfig:
    bind: str = "127.0.0.1:8000"
    time_budget: float = 5.0
    expansion_budget: int = 1 << 24
    ui_dir: str | None = None

    @staticmethod
    def from_env() -> "ServiceConfig":
        return ServiceConfig(
            bind=os.environ.get("WEST_BIND", "127.0.0.1:8000"),
            time_budget=float(os.environ.get("WEST_TIME_BUDGET", "5")),
            expansion_budget=int(
                os.environ.get("WEST_EXPANSION_BUDGET", str(1 << 24))
            ),
            ui_dir=os.environ.get("WEST_UI_DIR"),
        )


class RegexRequest(BaseModel):
    formula: str
    pad: bool = False


class MatchRequest(BaseModel):
    formula: str
    trace: str
    pad: bool = False


class EquivRequest(BaseModel):
    formula1: str
    formula2: str
    budget: int | None = None


def _api_error(status: int, code: str, message: str,
               position: tuple[int, int] | None = None) -> JSONResponse:
    body = {"code": code, "message": message}
    if position is not None:
        body["position"] = list(position)
    return JSONResponse(body, status_code=status)


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    app = FastAPI(title="MLTL regex validation service", docs_url=None,
                  redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return _api_error(400, "parse_error", str(exc.errors()[:1]))

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        # Keep the one-ApiError-per-error contract even for route misses.
        return _api_error(exc.status_code, "internal", str(exc.detail))

    @app.exception_handler(ParseError)
    async def parse_error(request: Request, exc: ParseError):
        code = "interval_error" if exc.kind == "interval" else "parse_error"
        return _api_error(400, code, str(exc), (exc.line, exc.column))

    @app.exception_handler(IntervalError)
    async def interval_error(request: Request, exc: IntervalError):
        return _api_error(400, "interval_error", str(exc))

    @app.exception_handler(BudgetExceededError)
    async def budget_exceeded(request: Request, exc: BudgetExceededError):
        return _api_error(422, "budget_exceeded", str(exc))

    @app.exception_handler(Exception)
    async def internal(request: Request, exc: Exception):
        return _api_error(500, "internal", f"{type(exc).__name__}: {exc}")

    @app.post("/api/regex")
    def api_regex(body: RegexRequest):
        phi = parse_formula(body.formula)
        start = time.perf_counter()
        with deadline(config.time_budget):
            regex = simp_pad_west_reg(phi) if body.pad else west_reg(phi)
        ms = (time.perf_counter() - start) * 1000.0
        return JSONResponse({
            "regex": regex_to_text(regex),
            "nvars": num_vars(phi),
            "complen": complen(phi),
            "alternatives": len(regex),
            "ms": ms,
        })

    @app.post("/api/match")
    def api_match(body: MatchRequest):
        phi = parse_formula(body.formula)
        trace = parse_trace(body.trace, num_vars(phi))
        with deadline(config.time_budget):
            regex = simp_pad_west_reg(phi) if body.pad else west_reg(phi)
            matched = match(trace, regex)
            satisfies = semantics(trace, phi)
        return JSONResponse({
            "match": matched,
            "satisfies": satisfies,
            "complen": complen(phi),
        })

    @app.post("/api/equiv")
    def api_equiv(body: EquivRequest):
        budget = body.budget
        if budget is None or budget > config.expansion_budget:
            budget = config.expansion_budget
        with deadline(config.time_budget):
            verdict = formula_equivalence(
                parse_formula(body.formula1),
                parse_formula(body.formula2),
                budget=budget,
            )
        payload: dict = {"verdict": verdict.outcome}
        if verdict.witness is not None:
            payload["witness"] = regex_to_text([verdict.witness])
        return JSONResponse(payload)

    @app.get("/api/random")
    def api_random(nvars: int = 1, depth: int = 0, bound: int = 0,
                   seed: int = 0, count: int = 10):
        try:
            params = FormulaGenParams(nvars=nvars, depth=depth, bound=bound,
                                      seed=seed, count=count)
        except ValueError as e:
            return _api_error(400, "parse_error", str(e))
        if count > 10_000:
            return _api_error(400, "parse_error", "count too large")
        return JSONResponse({
            "formulas": [pretty(phi) for phi in random_formula(params)],
        })

    ui_dir = config.ui_dir
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


app = create_app()


def main() -> None:
    import uvicorn

    config = ServiceConfig.from_env()
    host, _, port = config.bind.rpartition(":")
    uvicorn.run(create_app(config), host=host or "127.0.0.1", port=int(port))


if __name__ == "__main__":
    main()

"""FastAPI service exposing every library operation over JSON.

Run with ``spectral-tiles serve`` or ``uvicorn spectral_tiles.api:app``.
Domain failures map to 400 with {"error": code, "detail": ...}; schema
violations get FastAPI's standard 422.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse

from . import schemas as sch
from . import service
from .errors import SpectralTilesError

app = FastAPI(
    title="spectral-tiles",
    description=(
        "Spectra of finite integer sets, local translation groups, "
        "tiling complements and the continuum group on unions of unit intervals."
    ),
    version="0.1.0",
)


@app.exception_handler(SpectralTilesError)
async def _domain_error(request, exc: SpectralTilesError):
    return JSONResponse(status_code=400, content={"error": exc.code, "detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request, exc: ValueError):
    return JSONResponse(status_code=400, content={"error": "invalid_input", "detail": str(exc)})


@app.get("/healthz")
async def healthz():
    return {"status": "ok"}


@app.post("/verify", response_model=sch.VerifyResponse)
def verify(req: sch.VerifyRequest):
    return service.verify(req)


@app.post("/search", response_model=sch.SearchResponse)
def search(req: sch.SearchRequest):
    return service.search(req)


@app.post("/ltm", response_model=sch.MatrixResponse)
def ltm(req: sch.PairRequest):
    return service.translation_matrix(req)


@app.post("/group", response_model=sch.MatrixResponse)
def group(req: sch.GroupRequest):
    return service.group(req)


@app.post("/theta", response_model=sch.ThetaResponse)
def theta(req: sch.PairRequest):
    return service.theta(req)


@app.post("/complements", response_model=sch.ComplementsResponse)
def complements(req: sch.ComplementsRequest):
    return service.complements(req)


@app.post("/period", response_model=sch.PeriodResponse)
def period(req: sch.PeriodRequest):
    return service.period(req)


@app.post("/classify", response_model=sch.ClassifyResponse)
def classify(req: sch.ClassifyRequest):
    return service.classify(req)


@app.post("/match4", response_model=sch.MatchN4Response)
def match4(req: sch.MatchN4Request):
    return service.match4(req)


@app.post("/fuglede", response_model=sch.FugledeResponse)
def fuglede(req: sch.FugledeRequest):
    return service.fuglede(req)


@app.post("/translate", response_model=sch.SampledFunctionModel)
def do_translate(req: sch.TranslateRequest):
    return service.do_translate(req)


@app.post("/trajectory")
def do_trajectory(req: sch.TrajectoryRequest):
    """JSON frames/rows by default; RFC-4180 CSV when output == "csv"."""
    if req.output == "csv":
        return PlainTextResponse(service.do_trajectory_csv(req), media_type="text/csv")
    return JSONResponse(service.do_trajectory(req).model_dump(by_alias=True))

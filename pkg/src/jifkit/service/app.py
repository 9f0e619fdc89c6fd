"""HTTP frontend: a FastAPI application exposing the service core.

Endpoints accept the request models from :mod:`jifkit.service.schemas`
and return the matching response models; operation failures surface as
JSON error bodies carrying the same error code and CLI exit code that
the in-process frontend uses.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import core, schemas


def create_app() -> FastAPI:
    application = FastAPI(
        title="jifkit",
        version=__version__,
        description="Journal impact indicators: computation, ranking, "
                    "correlation, validation and scatter export.",
    )

    @application.exception_handler(core.ServiceError)
    async def _service_error(_: Request, exc: core.ServiceError) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status, content=exc.to_body())

    @application.get("/v1/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @application.get("/v1/datasets", response_model=schemas.DatasetListResponse)
    async def datasets() -> schemas.DatasetListResponse:
        return core.list_builtins()

    @application.get("/v1/indicators")
    async def indicators() -> dict:
        return {"indicators": core.registered_indicators()}

    @application.post("/v1/compute", response_model=schemas.TableResponse)
    async def compute(req: schemas.ComputeRequest) -> schemas.TableResponse:
        return core.compute(req)

    @application.post("/v1/correlate", response_model=schemas.CorrelationResponse)
    async def correlate(req: schemas.CorrelateRequest) -> schemas.CorrelationResponse:
        return core.correlate(req)

    @application.post("/v1/rank", response_model=schemas.RankResponse)
    async def rank(req: schemas.RankRequest) -> schemas.RankResponse:
        return core.rank(req)

    @application.post("/v1/validate", response_model=schemas.ValidateResponse)
    async def validate(req: schemas.ValidateRequest) -> schemas.ValidateResponse:
        return core.validate(req)

    @application.post("/v1/scatter", response_model=schemas.ScatterResponse)
    async def scatter(req: schemas.ScatterRequest) -> schemas.ScatterResponse:
        return core.scatter(req)

    return application


app = create_app()

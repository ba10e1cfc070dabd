"""Read-only HTTP API over a loaded index, plus static UI hosting.

Every response is a deterministic function of (index, lexicons, query):
payloads carry no timestamps, so identical requests return byte-identical
bodies. Errors use one machine-readable shape:
``{"error": {"code": ..., "message": ...}}``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal, Mapping

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import analytics, stats
from .choropleth import DEFAULT_BINS, ChoroplethSpec, bin_quantile
from .errors import (
    ExternalVectorError,
    GeolexError,
    InsufficientDataError,
    NoDataError,
    NotFoundError,
    UndefinedCorrelationError,
)
from .geometry import topojson_bytes
from .index import CorpusIndex
from .lexicon import Matcher
from .states import STATES

API_PREFIX = "/api/v1"


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _spec_payload(spec: ChoroplethSpec) -> dict:
    return {
        "values": list(spec.values),
        "denominator": None if spec.denominator is None else list(spec.denominator),
        "bins": list(spec.bins),
        "bin_edges": list(spec.bin_edges),
        "legend": {
            "min": spec.legend.min,
            "max": spec.legend.max,
            "bins": spec.legend.bins,
        },
    }


def _corr_payload(r: stats.CorrelationResult) -> dict:
    return {"rho": r.rho, "p_value": r.p_value, "n": r.n}


def create_app(
    index: CorpusIndex | None,
    lexicons: Mapping[str, Matcher] | None = None,
    default_bins: int = DEFAULT_BINS,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the FastAPI app around one immutable index and lexicon set."""
    lexicons = dict(lexicons or {})
    app = FastAPI(title="geolex", docs_url=None, redoc_url=None, openapi_url=None)

    def require_index() -> CorpusIndex:
        if index is None:
            raise _NoIndex()
        return index

    class _NoIndex(Exception):
        pass

    def get_matcher(name: str) -> Matcher:
        m = lexicons.get(name)
        if m is None:
            raise NotFoundError(f"unknown lexicon {name!r}")
        return m

    def get_category(name: str, category: str):
        m = get_matcher(name)
        c = m.lexicon.category_by_name(category)
        if c is None:
            raise NotFoundError(f"no category {category!r} in lexicon {name!r}")
        return m, c

    def parse_selector(token: str) -> tuple[Matcher, object]:
        if ":" not in token:
            raise RequestValidationError(
                [{"msg": f"selector {token!r} must be 'lexicon:category'"}]
            )
        lex, cat = token.split(":", 1)
        return get_category(lex, cat)

    @app.exception_handler(_NoIndex)
    async def _no_index(request: Request, exc: _NoIndex):
        return _error(503, "index_not_loaded", "no corpus index is loaded")

    @app.exception_handler(NotFoundError)
    async def _not_found(request: Request, exc: NotFoundError):
        return _error(404, "not_found", str(exc))

    @app.exception_handler(NoDataError)
    async def _no_data(request: Request, exc: NoDataError):
        return _error(422, "no_data", str(exc))

    @app.exception_handler(InsufficientDataError)
    async def _insufficient(request: Request, exc: InsufficientDataError):
        return _error(422, "insufficient_data", str(exc))

    @app.exception_handler(UndefinedCorrelationError)
    async def _undefined(request: Request, exc: UndefinedCorrelationError):
        return _error(422, "undefined_correlation", str(exc))

    @app.exception_handler(ExternalVectorError)
    async def _bad_vector(request: Request, exc: ExternalVectorError):
        return _error(422, "malformed_vector", str(exc))

    @app.exception_handler(GeolexError)
    async def _generic(request: Request, exc: GeolexError):
        return _error(422, "data_error", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _invalid(request: Request, exc: RequestValidationError):
        msgs = "; ".join(str(e.get("msg", e)) for e in exc.errors())
        return _error(422, "invalid_request", msgs)

    @app.get(API_PREFIX + "/meta")
    def meta():
        idx = require_index()
        return JSONResponse({
            "doc_count": idx.doc_count,
            "user_total": sum(idx.user_counts),
            "token_total": sum(idx.token_totals),
            "states": [{"usps": s.usps, "name": s.name} for s in STATES],
            "lexicons": {
                name: [c.name for c in m.lexicon.categories]
                for name, m in sorted(lexicons.items())
            },
            "default_bins": default_bins,
            "warnings": dict(sorted(idx.warnings.items())),
        })

    @app.get(API_PREFIX + "/map/word/{word}")
    def map_word(word: str, bins: int = Query(default_bins, ge=2, le=12)):
        idx = require_index()
        spec = bin_quantile(analytics.word_map(idx, word), bins)
        return JSONResponse({"kind": "word", "word": word.casefold(),
                             "map": _spec_payload(spec)})

    @app.get(API_PREFIX + "/map/category/{lexicon}/{category}")
    def map_category(lexicon: str, category: str,
                     bins: int = Query(default_bins, ge=2, le=12)):
        idx = require_index()
        m, c = get_category(lexicon, category)
        spec = bin_quantile(analytics.category_map(idx, m, c.id), bins)
        return JSONResponse({"kind": "category", "lexicon": lexicon,
                             "category": c.name, "map": _spec_payload(spec)})

    @app.get(API_PREFIX + "/map/facet")
    def map_facet(kind: Literal["gender", "industry"], value: str,
                  bins: int = Query(default_bins, ge=2, le=12)):
        idx = require_index()
        spec = bin_quantile(analytics.facet_map(idx, kind, value), bins)
        return JSONResponse({"kind": "facet", "facet": kind, "value": value,
                             "map": _spec_payload(spec)})

    @app.get(API_PREFIX + "/map/density")
    def map_density(threshold: int = Query(100, ge=1),
                    bins: int = Query(default_bins, ge=2, le=12)):
        idx = require_index()
        spec = bin_quantile(analytics.density_map(idx), bins)
        cities = [
            {"city": d.city, "usps": d.state.usps, "count": d.count}
            for d in analytics.city_density(idx, threshold)
        ]
        return JSONResponse({"kind": "density", "threshold": threshold,
                             "map": _spec_payload(spec), "cities": cities})

    @app.get(API_PREFIX + "/compare")
    def compare(a: str, b: str, bins: int = Query(default_bins, ge=2, le=12)):
        idx = require_index()
        ma, ca = parse_selector(a)
        mb, cb = parse_selector(b)
        va, vb, result = stats.compare_categories(idx, ma, ca.id, mb, cb.id)
        return JSONResponse({
            "a": {"lexicon": ma.lexicon.name, "category": ca.name,
                  "map": _spec_payload(bin_quantile(va, bins))},
            "b": {"lexicon": mb.lexicon.name, "category": cb.name,
                  "map": _spec_payload(bin_quantile(vb, bins))},
            "correlation": _corr_payload(result),
        })

    @app.get(API_PREFIX + "/correlations/extremes")
    def extremes(k: int = Query(3, ge=1), lexicon: str | None = None):
        idx = require_index()
        if lexicon is None:
            if len(lexicons) == 1:
                lexicon = next(iter(lexicons))
            else:
                raise RequestValidationError(
                    [{"msg": "lexicon parameter required when several are loaded"}]
                )
        m = get_matcher(lexicon)
        report = stats.correlation_extremes(idx, m, k)
        def rows(items):
            return [
                {"pair": list(r.pair), **_corr_payload(r.result)} for r in items
            ]
        return JSONResponse({
            "lexicon": lexicon,
            "k": k,
            "top": rows(report.top),
            "bottom": rows(report.bottom),
            "skipped_undefined": report.skipped_undefined,
        })

    @app.post(API_PREFIX + "/correlate/external")
    async def correlate_external(request: Request):
        idx = require_index()
        body = (await request.body()).decode("utf-8", errors="replace")
        external = stats.read_state_vector_csv(body)
        result = stats.spearman(external, analytics.density_map(idx))
        return JSONResponse(_corr_payload(result))

    @app.get("/assets/us-states.topo.json")
    def state_geometry():
        return Response(content=topojson_bytes(), media_type="application/json")

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app

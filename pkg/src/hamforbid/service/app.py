"""FastAPI service wrapping the core package.

Run with ``uvicorn hamforbid.service.app:app``. The CLI talks to these same
endpoints (in-process by default, over the wire with --server).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import HamforbidError, InternalConsistencyError
from ..graphs import Graph, encode_graph6, parse_graph6
from ..invariants import invariant_report
from ..surgery import replay
from ..verifier import ExhaustiveCorpus, hypothesis, lemma_suite, verify
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="hamforbid",
        description=(
            "Exact graph invariants, Hamiltonicity verdicts, and "
            "cycle-surgery replays for small graphs."
        ),
    )

    @app.exception_handler(HamforbidError)
    async def _domain_error(request: Request, exc: HamforbidError) -> JSONResponse:
        status = 500 if isinstance(exc, InternalConsistencyError) else 400
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": "ValueError", "detail": str(exc)},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/invariants", response_model=schemas.InvariantsResponse)
    def invariants(req: schemas.InvariantsRequest):
        g = parse_graph6(req.graph6)
        return invariant_report(g, req.k, req.max_n).to_json()

    @app.post("/codec/encode", response_model=schemas.EncodeResponse)
    def encode(req: schemas.EncodeRequest):
        g = Graph(req.n, req.edges)
        return {"graph6": encode_graph6(g)}

    @app.post("/codec/decode", response_model=schemas.DecodeResponse)
    def decode(req: schemas.DecodeRequest):
        g = parse_graph6(req.graph6)
        return {
            "n": g.n,
            "edges": sorted(g.edges()),
            "degrees": [g.degree(v) for v in range(g.n)],
        }

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def run_verify(req: schemas.VerifyRequest):
        h = hypothesis(req.hypothesis.name, req.hypothesis.k)
        diagnostics: list[str] = []
        if req.corpus.exhaustive_n is not None:
            corpus = ExhaustiveCorpus(req.corpus.exhaustive_n)
        else:
            graphs = []
            for lineno, text in enumerate(req.corpus.graph6_lines, start=1):
                if not text.strip():
                    continue
                try:
                    graphs.append(parse_graph6(text.strip()))
                except HamforbidError as exc:
                    diagnostics.append(f"line {lineno}: {exc}")
            corpus = graphs
        report = verify(corpus, h, jobs=req.jobs, seed=req.seed)
        payload = report.to_json()
        payload["diagnostics"] = diagnostics
        return payload

    @app.post("/replay", response_model=schemas.ReplayResponse)
    def run_replay(req: schemas.ReplayRequest):
        g = parse_graph6(req.graph6)
        return replay(g, req.k).to_json()

    @app.post("/lemmas", response_model=schemas.LemmasResponse)
    def run_lemmas(req: schemas.LemmasRequest):
        return lemma_suite(req.trials, req.seed).to_json()

    return app


app = create_app()

"""Command-line front end; a thin client of the HTTP service.

Every subcommand builds a request, posts it to the service (in-process by
default, or a remote instance via --server), and formats the response.
Exit codes: 0 success/verified, 1 usage or resource errors, 2 counterexample.
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Any

import click
import httpx

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2


class ServiceClient:
    def __init__(self, server: str | None) -> None:
        self.server = server

    def post(self, path: str, payload: dict) -> dict:
        if self.server:
            resp = httpx.post(self.server.rstrip("/") + path, json=payload, timeout=None)
        else:
            resp = self._post_inprocess(path, payload)
        body = resp.json()
        if resp.status_code >= 400:
            detail = body.get("detail", body)
            raise click.ClickException(f"{body.get('error', resp.status_code)}: {detail}")
        return body

    @staticmethod
    def _post_inprocess(path: str, payload: dict) -> httpx.Response:
        from .service.app import app

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://hamforbid.local"
            ) as client:
                return await client.post(path, json=payload)

        return asyncio.run(go())


def _echo_config(ctx: click.Context, **params: Any) -> None:
    words = " ".join(f"{k}={v}" for k, v in params.items() if v is not None)
    click.echo(f"# {ctx.command.name} {words}", err=True)


def _emit(data: dict, as_json: bool, human) -> None:
    if as_json:
        click.echo(json.dumps(data, sort_keys=True))
    else:
        human(data)


def _read_graph6(graph6: str | None, path: str | None) -> str:
    if (graph6 is None) == (path is None):
        raise click.UsageError("provide exactly one of --graph6 or --file")
    if graph6 is not None:
        return graph6.strip()
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                return line.strip()
    raise click.UsageError(f"no graph6 record in {path}")


@click.group()
@click.option("--server", default=None, help="base URL of a running service; default runs in-process")
@click.option("--json", "as_json", is_flag=True, help="emit JSON instead of tables")
@click.pass_context
def cli(ctx: click.Context, server: str | None, as_json: bool) -> None:
    """Exact toughness/freeness invariants, Hamiltonicity verdicts, and
    structural replays for small graphs."""
    ctx.obj = {"client": ServiceClient(server), "json": as_json}


@cli.command()
@click.option("--graph6", default=None, help="inline graph6 record")
@click.option("--file", "path", default=None, type=click.Path(exists=True))
@click.option("--k", required=True, type=int)
@click.option("--max-n", default=None, type=int, help="raise enumeration caps")
@click.pass_context
def invariants(ctx, graph6, path, k, max_n):
    """Exact invariant report for one graph."""
    text = _read_graph6(graph6, path)
    _echo_config(ctx, graph6=text, k=k, max_n=max_n)
    body = ctx.obj["client"].post(
        "/invariants", {"graph6": text, "k": k, "max_n": max_n}
    )

    def human(data: dict) -> None:
        click.echo(f"n         {data['n']}")
        click.echo(f"kappa     {data['kappa']}")
        click.echo(f"toughness {_fmt_rat(data['toughness'])}")
        click.echo(f"alpha_e   {data['alpha_e']}")
        for idx, val in sorted(data["mu"].items()):
            click.echo(f"mu_{idx}      {_fmt_rat(val)}")
        for idx, val in sorted(data["freeness"].items()):
            click.echo(f"free@{idx}    {val}")

    _emit(body, ctx.obj["json"], human)


def _fmt_rat(val) -> str:
    if val == "inf":
        return "inf"
    num, den = val["num"], val["den"]
    return str(num) if den == 1 else f"{num}/{den}"


@cli.command()
@click.option("--exhaustive-n", default=None, type=int, help="sweep all labeled graphs on n vertices")
@click.option("--file", "path", default=None, type=click.Path(exists=True), help="graph6 corpus file")
@click.option("--k", required=True, type=int)
@click.option(
    "--hypothesis",
    "hyp",
    default="thm-main",
    type=click.Choice(["thm-main", "cor-tough", "cor-alpha", "xcheck-conn", "xcheck-mindeg"]),
)
@click.option("--jobs", default=None, type=int, help="worker processes; default = available parallelism")
@click.option("--seed", default=0, type=int, show_default=True)
@click.pass_context
def verify(ctx, exhaustive_n, path, k, hyp, jobs, seed):
    """Filter a corpus and verify every passing graph; exit 2 on counterexample."""
    if (exhaustive_n is None) == (path is None):
        raise click.UsageError("provide exactly one of --exhaustive-n or --file")
    _echo_config(
        ctx, hypothesis=hyp, k=k, exhaustive_n=exhaustive_n, file=path, jobs=jobs, seed=seed
    )
    if exhaustive_n is not None:
        corpus = {"exhaustive_n": exhaustive_n}
    else:
        with open(path, "r", encoding="ascii", errors="replace") as fh:
            corpus = {"graph6_lines": [line.rstrip("\n") for line in fh]}
    body = ctx.obj["client"].post(
        "/verify",
        {"hypothesis": {"name": hyp, "k": k}, "corpus": corpus, "jobs": jobs, "seed": seed},
    )

    def human(data: dict) -> None:
        click.echo(f"corpus            {data['corpus_size']}")
        click.echo(f"filtered          {data['filtered']}")
        click.echo(f"hamiltonian       {data['hamiltonian_count']}")
        click.echo(f"exceptions        {data['exceptions']}")
        click.echo(f"counterexamples   {data['counterexamples']}")
        for cond, cnt in sorted(data["per_condition_rejects"].items()):
            click.echo(f"rejected@{cond:<12} {cnt}")
        for diag in data["diagnostics"]:
            click.echo(f"diagnostic: {diag}")
        click.echo(f"runtime_ms        {data['runtime_ms']}")

    _emit(body, ctx.obj["json"], human)
    if body["counterexamples"]:
        ctx.exit(EXIT_COUNTEREXAMPLE)


@cli.command()
@click.option("--graph6", default=None)
@click.option("--file", "path", default=None, type=click.Path(exists=True))
@click.option("--k", required=True, type=int)
@click.pass_context
def replay(ctx, graph6, path, k):
    """Structural replay of a non-Hamiltonian hypothesis-passing graph."""
    text = _read_graph6(graph6, path)
    _echo_config(ctx, graph6=text, k=k)
    body = ctx.obj["client"].post("/replay", {"graph6": text, "k": k})

    def human(data: dict) -> None:
        for entry in data["trace"]:
            rest = {kk: vv for kk, vv in entry.items() if kk != "step"}
            click.echo(f"{entry['step']:<24} {rest}")
        if data["kind"] == "certificate":
            cert = data["certificate"]
            click.echo(
                f"outcome: petersen_exception (t={cert['t']}, k={cert['k']}, "
                f"m={cert['m']}, petersen={cert['petersen']})"
            )
        else:
            click.echo(f"outcome: longer cycle {data['longer_cycle']}")

    _emit(body, ctx.obj["json"], human)


@cli.command()
@click.option("--trials", default=1000, type=int, show_default=True)
@click.option("--seed", default=0, type=int, show_default=True)
@click.pass_context
def lemmas(ctx, trials, seed):
    """Seeded randomized property trials of the independence machinery."""
    _echo_config(ctx, trials=trials, seed=seed)
    body = ctx.obj["client"].post("/lemmas", {"trials": trials, "seed": seed})

    def human(data: dict) -> None:
        for key in ("independent_union", "neighbor_count", "exterior_structure"):
            sec = data[key]
            status = "vacuous" if sec["vacuous"] else f"{sec['passes']}/{sec['valid_trials']}"
            click.echo(f"{key:<20} {status}")
        click.echo(f"all_pass            {data['all_pass']}")

    _emit(body, ctx.obj["json"], human)
    if not body["all_pass"]:
        ctx.exit(EXIT_ERROR)


@cli.command()
@click.option("--n", required=True, type=int)
@click.option("--edges", default="", help="edge list like '0-1,1-2,2-0'")
@click.pass_context
def encode(ctx, n, edges):
    """Encode an edge list as graph6."""
    _echo_config(ctx, n=n, edges=edges)
    pairs = []
    for token in edges.replace(",", " ").split():
        a, _, b = token.partition("-")
        pairs.append((int(a), int(b)))
    body = ctx.obj["client"].post("/codec/encode", {"n": n, "edges": pairs})
    _emit(body, ctx.obj["json"], lambda d: click.echo(d["graph6"]))


@cli.command()
@click.option("--graph6", required=True)
@click.pass_context
def decode(ctx, graph6):
    """Decode a graph6 record to an edge list."""
    _echo_config(ctx, graph6=graph6)
    body = ctx.obj["client"].post("/codec/decode", {"graph6": graph6})

    def human(data: dict) -> None:
        click.echo(f"n = {data['n']}")
        click.echo("edges = " + ",".join(f"{u}-{v}" for u, v in data["edges"]))
        click.echo("degrees = " + " ".join(map(str, data["degrees"])))

    _emit(body, ctx.obj["json"], human)


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, standalone_mode=False)
        return rv if isinstance(rv, int) else EXIT_OK
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return EXIT_ERROR
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except httpx.HTTPError as exc:
        click.echo(f"transport error: {exc}", err=True)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

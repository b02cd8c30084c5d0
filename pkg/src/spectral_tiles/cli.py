"""Command-line front end: a thin client over the service layer.

Every subcommand builds the same request model the HTTP endpoint accepts,
runs it in-process by default, or posts it to a running server when
``--url`` is given.  Output is UTF-8 JSON (or RFC-4180 CSV for
trajectories); exit codes follow a stable contract: 0 for an affirmative
verdict or plain success, 1 for a negative verdict, 2 for malformed input
or a domain error.

Sets ride on the command line as comma-separated integers, rationals as
``p/q`` strings (use the ``--t=-1/2`` form for negative values), and
indicator functions as ``branch:[start,end)``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Callable

from pydantic import BaseModel, ValidationError

from . import schemas as sch
from . import service
from .errors import SpectralTilesError


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from exc


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip() != ""]


_INDICATOR_RE = re.compile(r"^(-?\d+):\[([^,\]]+),([^,\)\]]+)[\)\]]$")


def _indicator(text: str) -> dict:
    m = _INDICATOR_RE.match(text.strip())
    if not m:
        raise ValueError(f"indicator must look like '0:[0,1)': got {text!r}")
    return {"branch": int(m.group(1)), "start": m.group(2), "end": m.group(3)}


@dataclass(frozen=True)
class _Command:
    path: str
    model: type[BaseModel]
    handler: Callable
    payload: Callable[[argparse.Namespace], dict]
    verdict: Callable[[dict], bool] = lambda d: True
    csv: Callable[[argparse.Namespace], bool] = lambda a: False


def _function_fields(args) -> dict:
    return {"indicator": _indicator(args.indicator), "resolution": args.resolution}


_COMMANDS: dict[str, _Command] = {
    "verify": _Command(
        "/verify",
        sch.VerifyRequest,
        service.verify,
        lambda a: {"set": _int_list(a.set), "spectrum": _str_list(a.spectrum), "mode": a.mode, "tol": a.tol},
        verdict=lambda d: d["spectral"],
    ),
    "search": _Command(
        "/search",
        sch.SearchRequest,
        service.search,
        lambda a: {"set": _int_list(a.set), "max_denominator": a.max_denominator, "jobs": a.jobs},
        verdict=lambda d: bool(d["spectra"]),
    ),
    "ltm": _Command(
        "/ltm",
        sch.PairRequest,
        service.translation_matrix,
        lambda a: {"set": _int_list(a.set), "spectrum": _str_list(a.spectrum)},
    ),
    "group": _Command(
        "/group",
        sch.GroupRequest,
        service.group,
        lambda a: {"set": _int_list(a.set), "spectrum": _str_list(a.spectrum), "t": a.t},
    ),
    "theta": _Command(
        "/theta",
        sch.PairRequest,
        service.theta,
        lambda a: {"set": _int_list(a.set), "spectrum": _str_list(a.spectrum)},
    ),
    "complements": _Command(
        "/complements",
        sch.ComplementsRequest,
        service.complements,
        lambda a: {
            "set": _int_list(a.set),
            "spectrum": _str_list(a.spectrum),
            "all_translates": a.all_translates,
            "jobs": a.jobs,
        },
        verdict=lambda d: bool(d["certificates"]),
    ),
    "period": _Command(
        "/period",
        sch.PeriodRequest,
        service.period,
        lambda a: {"set": _int_list(a.set), "spectrum": _str_list(a.spectrum), "d": a.d},
        verdict=lambda d: d["periodic"],
    ),
    "classify": _Command(
        "/classify",
        sch.ClassifyRequest,
        service.classify,
        lambda a: {"set": _int_list(a.set)},
        verdict=lambda d: d["spectral"],
    ),
    "match4": _Command(
        "/match4",
        sch.MatchN4Request,
        service.match4,
        lambda a: {"set": _int_list(a.set), "l": _int_list(a.l), "r": a.r},
        verdict=lambda d: d["match"],
    ),
    "fuglede": _Command(
        "/fuglede",
        sch.FugledeRequest,
        service.fuglede,
        lambda a: {"n": a.n, "max_size": a.max_size, "jobs": a.jobs},
        verdict=lambda d: not d["discrepancies"],
    ),
    "translate": _Command(
        "/translate",
        sch.TranslateRequest,
        service.do_translate,
        lambda a: {
            "set": _int_list(a.set),
            "spectrum": _str_list(a.spectrum),
            "t": a.t,
            **_function_fields(a),
        },
    ),
    "trajectory": _Command(
        "/trajectory",
        sch.TrajectoryRequest,
        service.do_trajectory,
        lambda a: {
            "set": _int_list(a.set),
            "spectrum": _str_list(a.spectrum),
            "t_start": a.t0,
            "t_end": a.t1,
            "steps": a.steps,
            "output": a.output,
            **_function_fields(a),
        },
        csv=lambda a: a.output == "csv",
    ),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-tiles",
        description="Spectra, local translation groups and tilings of finite integer sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="read the request as JSON from a file, or '-' for stdin")
        p.add_argument("--url", help="post the request to a running spectral-tiles server")

    def add(name, helptext):
        p = sub.add_parser(name, help=helptext)
        common(p)
        return p

    p = add("verify", "is the given spectrum a spectrum for the set?")
    p.add_argument("--set", help="comma-separated integers, e.g. 0,1,4,5")
    p.add_argument("--spectrum", help="comma-separated rationals, e.g. 0,1/8,1/2,5/8")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", type=float, default=None)

    p = add("search", "exhaustively list spectra with a given denominator")
    p.add_argument("--set")
    p.add_argument("--max-denominator", type=int, dest="max_denominator")
    p.add_argument("--jobs", type=int, default=1, help="parallelism hint; output order is fixed")

    p = add("ltm", "local translation matrix of a spectral pair")
    p.add_argument("--set")
    p.add_argument("--spectrum")

    p = add("group", "one-parameter group U(t) of a spectral pair")
    p.add_argument("--set")
    p.add_argument("--spectrum")
    p.add_argument("--t", default="1", help="time; 'p/q' stays exact (use --t=-1/2 for negatives)")

    p = add("theta", "obstruction residues of the local translation matrix")
    p.add_argument("--set")
    p.add_argument("--spectrum")

    p = add("complements", "tiling complements mod the spectrum's lattice modulus")
    p.add_argument("--set")
    p.add_argument("--spectrum")
    p.add_argument("--all-translates", action="store_true", dest="all_translates")
    p.add_argument("--jobs", type=int, default=1)

    p = add("period", "does the local translation matrix satisfy B^d = I?")
    p.add_argument("--set")
    p.add_argument("--spectrum")
    p.add_argument("--d", type=int)

    p = add("classify", "spectrality verdict for sets of size 2, 3 or 5")
    p.add_argument("--set")

    p = add("match4", "match a size-4 pair against the Hadamard-pair pattern")
    p.add_argument("--set")
    p.add_argument("--l")
    p.add_argument("--r", type=int)

    p = add("fuglede", "tile-vs-spectral desk check on Z_n")
    p.add_argument("--n", type=int)
    p.add_argument("--max-size", type=int, default=None, dest="max_size")
    p.add_argument("--jobs", type=int, default=1)

    p = add("translate", "apply U(t) to a sampled function on A+[0,1]")
    p.add_argument("--set")
    p.add_argument("--spectrum")
    p.add_argument("--t", default="0")
    p.add_argument("--indicator", default="0:[0,1)", help="branch:[start,end), endpoints on the grid")
    p.add_argument("--resolution", type=int, default=256)

    p = add("trajectory", "frames of U(t) f at uniformly spaced times")
    p.add_argument("--set")
    p.add_argument("--spectrum")
    p.add_argument("--t0", default="0")
    p.add_argument("--t1", default="0")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--indicator", default="0:[0,1)")
    p.add_argument("--resolution", type=int, default=256)
    p.add_argument("--output", choices=("json", "csv"), default="json")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _load_input(source: str) -> dict:
    raw = sys.stdin.read() if source == "-" else open(source, "r", encoding="utf-8").read()
    payload = json.loads(raw)
    if not isinstance(payload, dict):
        raise ValueError("request JSON must be an object")
    return payload


def _error_exit(code: str, detail: str) -> int:
    print(json.dumps({"error": code, "detail": detail}))
    return 2


def _run_remote(cmd: _Command, request: BaseModel, url: str, want_csv: bool) -> int:
    import httpx

    resp = httpx.post(
        url.rstrip("/") + cmd.path,
        json=request.model_dump(by_alias=True, mode="json"),
        timeout=600.0,
    )
    if resp.status_code >= 300:
        print(resp.text)
        return 2
    if want_csv:
        sys.stdout.write(resp.text)
        return 0
    print(resp.text)
    return 0 if cmd.verdict(resp.json()) else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .api import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    cmd = _COMMANDS[args.command]
    try:
        payload = _load_input(args.input) if args.input else cmd.payload(args)
        request = cmd.model.model_validate(payload)
    except (ValidationError, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        return _error_exit("invalid_input", str(exc))

    want_csv = cmd.csv(args) or getattr(request, "output", None) == "csv"
    try:
        if args.url:
            return _run_remote(cmd, request, args.url, want_csv)
        if want_csv:
            sys.stdout.write(service.do_trajectory_csv(request))
            return 0
        response = cmd.handler(request)
    except SpectralTilesError as exc:
        return _error_exit(exc.code, str(exc))
    except ValueError as exc:
        return _error_exit("invalid_input", str(exc))

    print(response.model_dump_json(by_alias=True, indent=2))
    return 0 if cmd.verdict(response.model_dump(by_alias=True)) else 1


if __name__ == "__main__":
    raise SystemExit(main())

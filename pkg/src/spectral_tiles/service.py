"""Request/response handlers wrapping the core library.

Both fronts go through these functions: the FastAPI app mounts them as
endpoints, the CLI calls them in-process (or posts the same payloads to a
remote server).  Handlers accept and return the pydantic models from
``schemas``; domain failures propagate as SpectralTilesError subclasses
and malformed semantics as ValueError, leaving transport concerns to the
caller.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import schemas as sch
from .classification import classify_small, fuglede_zn, match_n4
from .continuum import (
    SampledFunction,
    indicator,
    trajectory,
    trajectory_to_csv,
    trajectory_to_records,
    translate,
)
from .matrices import RootTable
from .spectra import IntSet, Spectrum, first_nonorthogonal_pair, is_spectrum, search_spectra
from .tiling import TilingCertificate, lattice_of_spectrum, period_check, theta_set, tiling_complements, verify_tiling
from .translations import local_group, local_translation_matrix


# ---------------------------------------------------------------- parsing


def parse_fraction(text: str | int) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_spectrum(values: list[str]) -> Spectrum:
    return Spectrum(parse_fraction(v) for v in values)


def parse_time(t: str | float | int):
    """Rational times stay exact; floats go down the float path."""
    if isinstance(t, bool):
        raise ValueError("t must be a number or a 'p/q' string")
    if isinstance(t, int):
        return t
    if isinstance(t, float):
        return t
    text = str(t).strip()
    if "/" in text:
        return parse_fraction(text)
    if any(c in text for c in ".eE"):
        return float(text)
    return int(text)


def spectrum_model(gamma: Spectrum) -> sch.SpectrumModel:
    return sch.SpectrumModel(spectrum=[str(f) for f in gamma])


def matrix_model(m) -> sch.MatrixResponse:
    if isinstance(m, RootTable):
        mirror = m.to_complex()
        order = m.order
        scale = str(m.scale) if m.root == 1 else None
    else:
        mirror = np.asarray(m, dtype=complex)
        order = None
        scale = None
    n = mirror.shape[0]
    entries = [(float(v.real), float(v.imag)) for v in mirror.reshape(-1)]
    return sch.MatrixResponse(n=n, entries=entries, order=order, scale=scale)


def _function_from_request(req, a: IntSet) -> SampledFunction:
    if req.indicator is not None:
        spec = req.indicator
        return indicator(
            a, req.resolution, spec.branch, (parse_fraction(spec.start), parse_fraction(spec.end))
        )
    values = np.array([[complex(re, im) for re, im in row] for row in req.values])
    return SampledFunction(a, req.resolution, values)


def _sampled_model(f: SampledFunction) -> sch.SampledFunctionModel:
    values = [
        [(float(v.real), float(v.imag)) for v in row]
        for row in f.values
    ]
    return sch.SampledFunctionModel(
        set=list(f.a), resolution=f.resolution, values=values, norm_squared=f.norm_squared
    )


# ---------------------------------------------------------------- handlers


def verify(req: sch.VerifyRequest) -> sch.VerifyResponse:
    a = IntSet(req.set_)
    if req.mode == "exact":
        fracs = [parse_fraction(v) for v in req.spectrum]
        spectral = is_spectrum(a, fracs, mode="exact")
        witness = None
        if not spectral and len(fracs) == len(set(fracs)) == len(a):
            pair = first_nonorthogonal_pair(a, sorted(fracs))
            if pair is not None:
                witness = [str(pair[0]), str(pair[1])]
        return sch.VerifyResponse(spectral=spectral, mode="exact", certified=spectral, witness=witness)
    values = [float(parse_fraction(v)) if isinstance(v, str) else float(v) for v in req.spectrum]
    spectral = is_spectrum(a, values, mode="float", tol=req.tol)
    return sch.VerifyResponse(spectral=spectral, mode="float", certified=False, witness=None)


def search(req: sch.SearchRequest) -> sch.SearchResponse:
    a = IntSet(req.set_)
    spectra = search_spectra(a, req.max_denominator)
    return sch.SearchResponse(spectra=[spectrum_model(g) for g in spectra])


def translation_matrix(req: sch.PairRequest) -> sch.MatrixResponse:
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    return matrix_model(local_translation_matrix(a, gamma).matrix)


def group(req: sch.GroupRequest) -> sch.MatrixResponse:
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    return matrix_model(local_group(a, gamma, parse_time(req.t)))


def theta(req: sch.PairRequest) -> sch.ThetaResponse:
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    ts = theta_set(a, gamma)
    lattice = lattice_of_spectrum(gamma)
    return sch.ThetaResponse(
        modulus=ts.modulus,
        residues=list(ts.residues),
        lattice=sch.LatticeModel(r=lattice.r, d=lattice.d),
    )


def complements(req: sch.ComplementsRequest) -> sch.ComplementsResponse:
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    found = tiling_complements(a, gamma, all_translates=req.all_translates)
    d = lattice_of_spectrum(gamma).d
    certs = [
        sch.TilingCertificateModel(
            A=list(a),
            T=list(t),
            d=d,
            verified=verify_tiling(TilingCertificate(a, t, d)),
        )
        for t in found
    ]
    return sch.ComplementsResponse(d=d, certificates=certs)


def period(req: sch.PeriodRequest) -> sch.PeriodResponse:
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    return sch.PeriodResponse(periodic=period_check(a, gamma, req.d), d=req.d)


def classify(req: sch.ClassifyRequest) -> sch.ClassifyResponse:
    verdict = classify_small(IntSet(req.set_))
    return sch.ClassifyResponse(
        spectral=verdict.spectral,
        witness=None if verdict.witness is None else [str(f) for f in verdict.witness],
        power=verdict.power,
        reduced_set=list(verdict.reduced_set),
        sweep_bound=verdict.sweep_bound,
    )


def match4(req: sch.MatchN4Request) -> sch.MatchN4Response:
    params = match_n4(IntSet(req.set_), IntSet(req.l), req.r)
    if params is None:
        return sch.MatchN4Response(match=False, params=None)
    return sch.MatchN4Response(
        match=True,
        params=sch.N4ParamsModel(
            set_shift=params.set_shift,
            freq_shift=params.freq_shift,
            gap=params.gap,
            set_odds=params.set_odds,
            freq_odds=params.freq_odds,
            extra=params.extra,
            scaling_factor=params.scaling_factor,
        ),
    )


def fuglede(req: sch.FugledeRequest) -> sch.FugledeResponse:
    max_size = req.n if req.max_size is None else req.max_size
    report = fuglede_zn(req.n, max_size)

    def record_model(rec) -> sch.FugledeRecordModel:
        return sch.FugledeRecordModel(
            A=list(rec.a),
            tiles=rec.tiles,
            complement=None if rec.complement is None else list(rec.complement),
            spectral=rec.spectral,
            spectrum=None if rec.spectrum is None else [str(f) for f in rec.spectrum],
        )

    return sch.FugledeResponse(
        n=report.n,
        max_size=report.max_size,
        records=[record_model(r) for r in report.records],
        discrepancies=[record_model(r) for r in report.discrepancies],
    )


def do_translate(req: sch.TranslateRequest) -> sch.SampledFunctionModel:
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    f = _function_from_request(req, a)
    return _sampled_model(translate(f, gamma, parse_time(req.t)))


def _trajectory_frames(req: sch.TrajectoryRequest):
    a = IntSet(req.set_)
    gamma = parse_spectrum(req.spectrum)
    f = _function_from_request(req, a)
    return trajectory(f, gamma, parse_time(req.t_start), parse_time(req.t_end), req.steps)


def do_trajectory(req: sch.TrajectoryRequest) -> sch.TrajectoryResponse:
    frames = _trajectory_frames(req)
    rows = [sch.TrajectoryRowModel.model_validate(row) for row in trajectory_to_records(frames)]
    return sch.TrajectoryResponse(
        frames=[sch.TrajectoryFrameModel(t=fr.t, norm_squared=fr.norm_squared) for fr in frames],
        rows=rows,
    )


def do_trajectory_csv(req: sch.TrajectoryRequest) -> str:
    return trajectory_to_csv(_trajectory_frames(req))

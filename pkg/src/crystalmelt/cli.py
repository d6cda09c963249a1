"""Command-line front end.

Subcommands map one-to-one onto the computational engines plus the spectral
checks and the verification battery. Reports are deterministic: term order,
key order, and whitespace are fixed, so byte-identical output means
byte-identical results.

Exit codes: 0 success or agreement, 1 a check or cross-engine comparison
failed, 2 invalid input, 3 an internal guard tripped (stabilization cap or
oracle size).
"""

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .chambers import ChamberSpec, c3_chamber, conifold_index, conifold_theta
from .enumeration import enumerate_z
from .errors import (
    DimensionError,
    InvalidGraphError,
    NonTerminatingProductError,
    NotInvertibleError,
    OracleTooLargeError,
    SingularParametersError,
    StabilizationFailureError,
    UnsupportedChamberError,
)
from .lgv import lgv_det, walker_graph
from .matrixmodel import c3_symbol, conifold_symbol, prefactor_cn, stabilized_toeplitz
from .products import conifold_product, macmahon
from .serialize import (
    chamber_from_json_dict,
    chamber_to_json_dict,
    series_from_json_dict,
    series_to_json_dict,
    series_to_tsv,
)
from .spectral import (
    CurveParams,
    mirror_map,
    random_curve_params,
    s3_equivariance_check,
    spp_identity_squared,
    spp_limit_check,
)
from .verify import DEFAULT_SEED, verify_all

ENGINES = ("enumerate", "product", "toeplitz", "lgv")

_INVALID_INPUT = (
    UnsupportedChamberError,
    InvalidGraphError,
    SingularParametersError,
    DimensionError,
    NotInvertibleError,
    ValueError,
    ZeroDivisionError,
)
_INTERNAL_LIMIT = (
    StabilizationFailureError,
    OracleTooLargeError,
    NonTerminatingProductError,
)


@dataclass(frozen=True)
class JobConfig:
    geometry: str
    chamber: object = 0
    degree: int = 0
    engines: Tuple[str, ...] = ("enumerate",)
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.geometry not in ("c3", "conifold", "general"):
            raise ValueError(f"unknown geometry {self.geometry!r}")
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        if not self.engines:
            raise ValueError("at least one engine is required")
        for name in self.engines:
            if name not in ENGINES:
                raise ValueError(f"unknown engine {name!r}")
        if len(set(self.engines)) != len(self.engines):
            raise ValueError("duplicate engine in list")
        if self.output_format not in ("json", "tsv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.output_format == "tsv" and len(self.engines) != 1:
            raise ValueError("tsv output supports exactly one engine")

    def resolve_chamber(self) -> ChamberSpec:
        if self.geometry == "c3":
            if self.chamber not in (0, None):
                raise ValueError("the c3 geometry has a single chamber; omit --chamber")
            return c3_chamber()
        if self.geometry == "conifold":
            n = self.chamber
            if not isinstance(n, int) or n < 0:
                raise ValueError("conifold chamber must be an integer n >= 0")
            return conifold_theta(n)
        if not isinstance(self.chamber, dict):
            raise ValueError("general geometry needs an explicit chamber object")
        return chamber_from_json_dict(self.chamber)


def _engine_series(name, cfg: JobConfig, spec: ChamberSpec):
    """Run one engine; returns (series, extras dict)."""
    d = cfg.degree
    if name == "enumerate":
        return enumerate_z(spec, d), {}
    if name == "product":
        if cfg.geometry == "c3":
            return macmahon(d), {}
        n = conifold_index(spec)
        if n is None:
            raise UnsupportedChamberError("no closed product form is wired for this chamber")
        return conifold_product(n, d), {}
    if name == "toeplitz":
        if cfg.geometry == "c3":
            res = stabilized_toeplitz(c3_symbol(d), d)
            return res.value, {"stabilized_at": res.stabilized_at}
        n = conifold_index(spec)
        if n is None:
            raise UnsupportedChamberError("the determinant route is wired for c3 and conifold chambers")
        res = stabilized_toeplitz(conifold_symbol(n, d), d)
        return prefactor_cn(n, d) * res.value, {"stabilized_at": res.stabilized_at}
    if name == "lgv":
        return lgv_det(walker_graph(spec, max(d, 1), d)), {}
    raise ValueError(f"unknown engine {name!r}")


def run_job(cfg: JobConfig) -> dict:
    """Run the configured engines and compare their series pairwise."""
    spec = cfg.resolve_chamber()
    engines = {}
    series = {}
    for name in cfg.engines:
        value, extras = _engine_series(name, cfg, spec)
        series[name] = value
        entry = {"series": series_to_json_dict(value)}
        entry.update(extras)
        engines[name] = entry
    pairwise = []
    agree = True
    for a, b in itertools.combinations(sorted(cfg.engines), 2):
        equal = series[a] == series[b]
        agree = agree and equal
        pairwise.append({"engines": [a, b], "equal": equal})
    chamber_echo = cfg.chamber
    if cfg.geometry == "general":
        chamber_echo = chamber_to_json_dict(spec)
    return {
        "agreement": agree,
        "config": {
            "chamber": chamber_echo,
            "degree": cfg.degree,
            "engines": list(cfg.engines),
            "geometry": cfg.geometry,
            "seed": cfg.seed,
        },
        "engines": engines,
        "pairwise": pairwise,
    }


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _engine_command(args, default_engine: str) -> int:
    chamber = _parse_chamber(args.geometry, args.chamber)
    engines = _parse_engines(args.engines, default_engine)
    cfg = JobConfig(
        geometry=args.geometry,
        chamber=chamber,
        degree=args.degree,
        engines=engines,
        output_format=args.format,
        seed=args.seed,
    )
    report = run_job(cfg)
    if cfg.output_format == "tsv":
        only = cfg.engines[0]
        series = report["engines"][only]["series"]
        text = _tsv_from_json_terms(series)
    else:
        text = _dump_json(report)
    _emit(text, args.out)
    return 0 if report["agreement"] else 1


def _tsv_from_json_terms(series_dict) -> str:
    return series_to_tsv(series_from_json_dict(series_dict))


def _parse_chamber(geometry: str, raw: Optional[str]):
    if raw is None:
        return 0 if geometry != "general" else None
    raw = raw.strip()
    if geometry == "general":
        parsed = json.loads(raw)
        if not isinstance(parsed, dict):
            raise ValueError("general chamber must be a JSON object with L, rho, theta")
        return parsed
    return int(raw)


def _parse_engines(raw: Optional[str], default_engine: str) -> Tuple[str, ...]:
    if raw is None:
        return (default_engine,)
    raw = raw.strip()
    if raw == "all":
        return ENGINES
    names = tuple(part.strip() for part in raw.split(",") if part.strip())
    return names


def _parse_fraction(label: str, raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{label} is not a rational number: {raw!r}") from exc


def _spectral_command(args) -> int:
    rng_params = CurveParams(
        _parse_fraction("--q", args.q),
        _parse_fraction("--mu", args.mu),
        _parse_fraction("--eps2", args.eps2),
    )
    rng = random.Random(args.seed)
    report = {"check": args.check, "seed": args.seed}
    if args.check == "mirror":
        coeffs = mirror_map(rng_params)
        report["params"] = {
            "Q": str(rng_params.Q),
            "mu": str(rng_params.mu),
            "eps2": str(rng_params.eps2),
        }
        report["coefficients"] = {
            "Q1": str(coeffs.Q1),
            "Q2": str(coeffs.Q2),
            "Q3": str(coeffs.Q3),
        }
        report["passed"] = True
    elif args.check in ("s3", "spp-limit"):
        failures = []
        checker = s3_equivariance_check if args.check == "s3" else spp_limit_check
        trials = [rng_params] + [random_curve_params(rng) for _ in range(args.trials)]
        for i, p in enumerate(trials):
            res = checker(p)
            if not res:
                entry = {"trial": i, "Q": str(p.Q), "mu": str(p.mu), "eps2": str(p.eps2)}
                perm = getattr(res, "permutation", None)
                if perm is not None:
                    entry["permutation"] = perm
                failures.append(entry)
        report["trials"] = len(trials)
        report["failures"] = failures
        report["passed"] = not failures
    else:
        ok = spp_identity_squared(args.chamber, args.degree)
        report["chamber"] = args.chamber
        report["degree"] = args.degree
        report["passed"] = bool(ok)
    _emit(_dump_json(report), args.out)
    return 0 if report["passed"] else 1


def _verify_command(args) -> int:
    results = verify_all(args.degree, args.chamber, seed=args.seed)
    passed = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "passed": passed,
            "results": [
                {
                    "counterexamples": r.counterexamples,
                    "detail": r.detail,
                    "name": r.name,
                    "passed": r.passed,
                }
                for r in results
            ],
        }
        text = _dump_json(payload)
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
            if not r.passed:
                for entry in r.counterexamples:
                    lines.append(f"    {json.dumps(entry, sort_keys=True)}")
        lines.append(f"{'all checks passed' if passed else 'SOME CHECKS FAILED'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if passed else 1


def _add_engine_parser(sub, name: str, blurb: str):
    p = sub.add_parser(name, help=blurb)
    p.add_argument("--geometry", choices=("c3", "conifold", "general"), default="c3")
    p.add_argument("--chamber", help="chamber index n, or a JSON object for --geometry general")
    p.add_argument("--degree", type=int, default=6, help="truncation degree D")
    p.add_argument("--engines", help="comma list from {enumerate,product,toeplitz,lgv}, or 'all'")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.set_defaults(func=lambda args, default=name: _engine_command(args, default))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalmelt",
        description="Exact partition functions of melting crystals, computed several ways",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_engine_parser(sub, "enumerate", "sweep partition evolutions directly")
    _add_engine_parser(sub, "product", "expand the closed product form")
    _add_engine_parser(sub, "toeplitz", "stabilized Toeplitz determinant route")
    _add_engine_parser(sub, "lgv", "non-intersecting walker determinant route")

    sp = sub.add_parser("spectral", help="rational checks on the mirror curve coefficients")
    sp.add_argument(
        "--check", choices=("mirror", "s3", "spp-limit", "spp-identity"), required=True
    )
    sp.add_argument("--q", default="2/3", help="Kaehler parameter Q as a fraction")
    sp.add_argument("--mu", default="1/5", help="mass parameter as a fraction")
    sp.add_argument("--eps2", default="1/7", help="refinement parameter as a fraction")
    sp.add_argument("--trials", type=int, default=20, help="extra random parameter triples")
    sp.add_argument("--chamber", type=int, default=1, help="chamber index for spp-identity")
    sp.add_argument("--degree", type=int, default=6, help="truncation degree for spp-identity")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=_spectral_command)

    vp = sub.add_parser("verify", help="run the full cross-representation battery")
    vp.add_argument("--degree", type=int, default=12, help="degree cap for every check")
    vp.add_argument("--chamber", type=int, default=2, help="largest conifold chamber index")
    vp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vp.add_argument("--format", choices=("text", "json"), default="text")
    vp.add_argument("--out")
    vp.set_defaults(func=_verify_command)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    try:
        return args.func(args)
    except _INTERNAL_LIMIT as exc:
        _print_error(exc)
        return 3
    except _INVALID_INPUT as exc:
        _print_error(exc)
        return 2


def _print_error(exc: BaseException) -> None:
    payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.exit(main())

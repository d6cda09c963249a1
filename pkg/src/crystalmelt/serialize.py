"""Byte-stable JSON and TSV forms for the value types.

Term order is lexicographic in the exponent vector and coefficients travel as
decimal strings, so equal objects always produce identical bytes and huge
integers survive consumers that only have doubles.
"""

from .chambers import ChamberSpec
from .partitions import as_partition
from .series import TruncatedSeries


def series_to_json_dict(series: TruncatedSeries) -> dict:
    return {
        "vars": [f"q{i}" for i in range(series.num_vars)],
        "cutoff": series.cutoff,
        "terms": [
            {"exp": list(exp), "coef": str(coef)}
            for exp, coef in sorted(series.terms.items())
        ],
    }


def series_from_json_dict(data: dict) -> TruncatedSeries:
    num_vars = len(data["vars"])
    terms = {}
    for term in data["terms"]:
        exp = tuple(int(e) for e in term["exp"])
        if len(exp) != num_vars:
            raise ValueError("exponent arity disagrees with the vars list")
        terms[exp] = int(term["coef"])
    return TruncatedSeries(num_vars, int(data["cutoff"]), terms)


def series_to_tsv(series: TruncatedSeries) -> str:
    columns = [f"exp_{i}" for i in range(series.num_vars)] + ["coefficient"]
    lines = ["\t".join(columns)]
    for exp, coef in sorted(series.terms.items()):
        lines.append("\t".join([str(e) for e in exp] + [str(coef)]))
    return "\n".join(lines) + "\n"


def chamber_to_json_dict(spec: ChamberSpec) -> dict:
    return {"L": spec.L, "rho": list(spec.rho), "theta": list(spec.theta)}


def chamber_from_json_dict(data: dict) -> ChamberSpec:
    return ChamberSpec(
        int(data["L"]),
        tuple(int(r) for r in data["rho"]),
        tuple(int(t) for t in data["theta"]),
    )


def partition_to_json(lam) -> list:
    return list(lam)


def partition_from_json(data) -> tuple:
    return as_partition(data)

"""JSON and CSV encodings for the documented external interfaces."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from .equivalence import Verdict
from .errors import ParseError
from .lattice import Monomial, parse_rational
from .selfsimilar import ContractionSystem, CutSet, MatchReport, build_system

VERSION = "0.1.0"
CSV_HEADER = f"# frobenius-lipschitz v{VERSION}"


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def ratios_from_json(doc: dict):
    """Decode the ratio-list input schema.

    Either ``{"rationals": ["1/2", "1/3"]}`` or
    ``{"generators": ["a", "b"], "monomials": [[1,0],[0,1]]}``.
    """
    if "rationals" in doc:
        return [parse_rational(t) for t in doc["rationals"]]
    if "generators" in doc and "monomials" in doc:
        gens = list(doc["generators"])
        out = []
        for exps in doc["monomials"]:
            if len(exps) != len(gens):
                raise ParseError("monomial exponent length mismatch")
            out.append(Monomial.make(dict(zip(gens, map(int, exps)))))
        return out
    raise ParseError("expected 'rationals' or 'generators'+'monomials'")


def load_system(path: str) -> ContractionSystem:
    """Read a ratio-list or serialized-system JSON file and build from it."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    if "input" in doc:
        doc = doc["input"]
    if "rationals" in doc or "monomials" in doc:
        return build_system(ratios_from_json(doc))
    raise ParseError(f"{path}: unrecognized system document")


def ratio_input_doc(system: ContractionSystem) -> dict:
    """Canonical ratio-list document reproducing the system on reload."""
    if not system.is_symbolic:
        return {"rationals": [_frac_str(r) for r in system.ratios]}
    gens = sorted({g for r in system.ratios for g in r.generators})
    return {
        "generators": gens,
        "monomials": [[r.as_dict().get(g, 0) for g in gens]
                      for r in system.ratios],
    }


def system_to_json(system: ContractionSystem) -> dict:
    basis = [
        _frac_str(v) if isinstance(v, Fraction) else str(v)
        for v in system.basis.values
    ]
    ratios = [
        _frac_str(r) if isinstance(r, Fraction) else str(r)
        for r in system.ratios
    ]
    return {
        "input": ratio_input_doc(system),
        "ratios": ratios,
        "basis": basis,
        "exponents": [list(v) for v in system.exponents],
        "delta": system.delta,
        "alpha": [_frac_str(a) for a in system.alpha],
    }


def verdict_to_json(v: Verdict) -> dict:
    cert = None
    if v.certificate is not None:
        cert = dict(v.certificate)
        if "permutation" in cert and cert["permutation"] is not None:
            cert["permutation"] = list(cert["permutation"])
    return {
        "result": v.result,
        "reason": v.reason,
        "certificate": cert,
        "diagnostics": v.diagnostics,
    }


def cutset_to_json(cs: CutSet) -> list:
    out = []
    for word, exp, ratio in zip(cs.words, cs.exponents, cs.ratios):
        out.append({
            "word": "".join(map(str, word)),
            "exponent_vector": list(exp),
            "ratio_as_string": _frac_str(ratio) if isinstance(ratio, Fraction)
            else str(ratio),
        })
    return out


def match_report_to_json(report: MatchReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = [["".join(map(str, wi)), "".join(map(str, wj))]
                   for wi, wj in report.witness]
    return {
        "feasible": report.feasible,
        "m0": report.m0,
        "relation_size": report.relation_size,
        "witness": witness,
    }


def table_csv_lines(table) -> list:
    """CSV rows ``z_1,...,z_s,m(z)`` with decimal big integers."""
    s = table.data.dim
    lines = [CSV_HEADER,
             ",".join([f"z_{i + 1}" for i in range(s)] + ["m"])]
    for z in sorted(table.counts):
        m = table.counts[z]
        if m >= 1:
            lines.append(",".join([str(c) for c in z] + [str(m)]))
    return lines


def sweep_csv_lines(rows: Sequence[dict], s: int) -> list:
    """Direction-sweep CSV with analytic and empirical columns."""
    header = [f"theta_{i + 1}" for i in range(s)]
    header += ["gamma_analytic", "gamma_empirical", "stderr"]
    lines = [CSV_HEADER, ",".join(header)]
    for row in rows:
        cells = [f"{t:.6f}" for t in row["theta"]]
        ga: Optional[float] = row.get("gamma_analytic")
        ge: Optional[float] = row.get("gamma_empirical")
        cells.append("" if ga is None else f"{ga:.6f}")
        cells.append("" if ge is None else f"{ge:.6f}")
        se = row.get("stderr")
        cells.append("" if se is None else f"{se:.6f}")
        lines.append(",".join(cells))
    return lines

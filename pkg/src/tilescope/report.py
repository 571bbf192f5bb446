"""Full analysis pipeline and its frozen JSON report schema.

``analyze_digit_set`` runs normalize -> tile decision -> chain
stabilization -> decomposition -> cyclotomic flags -> spectral data ->
measure convergence, stopping early where a stage rules the rest out and
recording the stopping stage machine-readably.  The returned report is a
plain JSON-compatible dict with deterministic key order and content:
identical inputs give byte-identical serializations.

Schema evolution is additive only; field names are documented in the
README and pinned by the test suite.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import expand, normalize
from .cyclotomic import check_t1, check_t2, laba_spectrum, support
from .geometry import measure_report
from .skewform import SkewDecomposition, skew_decompose, verify_decomposition
from .spectral import AnLaiReport, SpectralConditionError, build_spectral_data
from .tiling import (
    is_tile,
    self_replicating_tiling,
    stabilization_exponent,
    tile_measure,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

# measure_report levels default to min(6, work-cap limit for the base)
_MEASURE_VALUE_CAP = 20_000


def default_k_max(base: int) -> int:
    k = 1
    while base ** (k + 1) <= _MEASURE_VALUE_CAP and k < 6:
        k += 1
    return k


def _frac(x: Fraction) -> str:
    return str(x)


def _spectrum_json(elements, denominator: int) -> dict[str, Any]:
    return {
        "denominator": denominator,
        "elements": [str(e) for e in elements],
    }


def _cyclo_part(values, strict_gate: bool) -> dict[str, Any]:
    """Support, (T1)/(T2) flags, and the spectrum when the gate passes."""
    supp = support(values)
    t1 = check_t1(values)
    t2 = check_t2(values)
    t2_strict = check_t2(values, strict=True)
    part: dict[str, Any] = {
        "set": sorted(values),
        "support": list(supp.entries),
        "t1": t1,
        "t2": t2,
        "t2_strict": t2_strict,
    }
    gate = t1 and t2 and (t2_strict or not strict_gate)
    if gate:
        spec = laba_spectrum(values)
        part["spectrum"] = _spectrum_json(spec.elements, spec.denominator)
    else:
        part["spectrum"] = None
    return part


def _decomposition_json(dec: SkewDecomposition, verified: bool) -> dict[str, Any]:
    return {
        "base": dec.base,
        "stage": dec.stage,
        "s": dec.s,
        "A": list(dec.A),
        "classes": [
            {"a": a, "B": list(b)} for a, b in zip(dec.A, dec.Bs)
        ],
        "verified": verified,
    }


def _spectral_json(rep: AnLaiReport) -> dict[str, Any]:
    return {
        "modulus": rep.modulus,
        "support_A": list(rep.support_a),
        "support_B": list(rep.support_b),
        "lcm_A": rep.lcm_a,
        "lcm_B": rep.lcm_b,
        "L1": list(rep.l1),
        "L2": list(rep.l2),
        "hadamard_A": rep.hadamard_a,
        "hadamard_B": list(rep.hadamard_b),
        "hadamard_joint": list(rep.hadamard_joint),
        "counting_identity": rep.counting_identity,
        "all_ok": rep.all_ok,
    }


def analyze_digit_set(
    base: int,
    digits: list[int],
    m_max: int = 12,
    k_max: int | None = None,
    strict_t2: bool = False,
) -> tuple[dict[str, Any], int]:
    """Run the whole pipeline; returns (report dict, exit code)."""
    d, offset, scale = normalize(digits, base)
    if k_max is None:
        k_max = default_k_max(base)
    report: dict[str, Any] = {
        "command": "analyze",
        "input": {"base": base, "digits": sorted(digits)},
        "normalization": {
            "digits": list(d.digits),
            "offset": offset,
            "scale": scale,
        },
        "tile": None,
        "stabilization": None,
        "tiling_set": None,
        "measure": None,
        "decomposition": None,
        "cyclotomic": None,
        "spectral": None,
        "measure_report": None,
        "stopped_after": None,
    }

    tile, witness = is_tile(d)
    report["tile"] = {
        "is_tile": tile,
        "witness": None
        if witness is None
        else {
            "level": witness.level,
            "left": list(witness.left),
            "right": list(witness.right),
            "value": witness.value,
        },
    }
    if not tile:
        report["stopped_after"] = "tile_check"
        return report, EXIT_OK

    m = stabilization_exponent(d, m_max)
    report["stabilization"] = {
        "m": m,
        "m_max": m_max,
        "inconclusive": m is None,
    }
    if m is None:
        report["stopped_after"] = "stabilization"
        return report, EXIT_INCONCLUSIVE

    j = self_replicating_tiling(d, m)
    report["tiling_set"] = {
        "period": j.period,
        "residues": list(j.residues),
        "density": _frac(j.density()),
        "self_replicating": True,
    }
    report["measure"] = _frac(tile_measure(j))

    level_values = expand(d, m).values
    dec = skew_decompose(level_values, d.base**m, 1)
    if dec is None:
        raise RuntimeError(
            f"stabilized at m={m} but level-{m} decomposition failed: "
            f"{list(d.digits)}"
        )
    report["decomposition"] = _decomposition_json(
        dec, verify_decomposition(dec, level_values)
    )

    report["cyclotomic"] = {
        "full": _cyclo_part(d.digits, strict_t2),
        "A": _cyclo_part(dec.A, strict_t2),
        "B": [_cyclo_part(b, strict_t2) for b in dec.Bs],
    }

    try:
        strict_block = strict_t2 and not all(
            part["t2_strict"]
            for part in [report["cyclotomic"]["A"], *report["cyclotomic"]["B"]]
        )
        if strict_block:
            report["spectral"] = {
                "available": False,
                "reason": "strict (T2) fails for a decomposition part",
            }
        else:
            rep = build_spectral_data(dec)
            report["spectral"] = {"available": True, **_spectral_json(rep)}
    except SpectralConditionError as err:
        report["spectral"] = {"available": False, "reason": str(err)}

    mr = measure_report(d, k_max, j)
    report["measure_report"] = {
        "k_max": k_max,
        "lengths": [_frac(x) for x in mr.lengths],
        "target": _frac(mr.target) if mr.target is not None else None,
        "gap": _frac(mr.gap) if mr.gap is not None else None,
    }
    return report, EXIT_OK


def report_to_json(report: dict[str, Any]) -> str:
    """Canonical serialization: stable key order, two-space indent."""
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def render_text(report: dict[str, Any]) -> str:
    """Short human-readable summary of an analysis report."""
    lines = []
    inp = report["input"]
    norm = report["normalization"]
    lines.append(f"digit set: base {inp['base']}, digits {inp['digits']}")
    if norm["offset"] != 0 or norm["scale"] != 1:
        lines.append(
            f"normalized: {norm['digits']} "
            f"(offset {norm['offset']}, scale {norm['scale']})"
        )
    tile = report["tile"]
    if not tile["is_tile"]:
        w = tile["witness"]
        lines.append("tile: no")
        lines.append(
            f"collision at level {w['level']}: digits {w['left']} and "
            f"{w['right']} share value {w['value']}"
        )
        return "\n".join(lines) + "\n"
    lines.append("tile: yes")
    stab = report["stabilization"]
    if stab["inconclusive"]:
        lines.append(f"stabilization: none found with m <= {stab['m_max']}")
        return "\n".join(lines) + "\n"
    lines.append(f"stabilization exponent m: {stab['m']}")
    ts = report["tiling_set"]
    lines.append(
        f"tiling set: period {ts['period']}, residues {ts['residues']} "
        f"(density {ts['density']})"
    )
    lines.append(f"tile measure: {report['measure']}")
    dec = report["decomposition"]
    lines.append(
        f"decomposition (stage {dec['stage']}, modulus {dec['base']}): "
        f"A = {dec['A']}"
    )
    for cls in dec["classes"]:
        lines.append(f"  class a={cls['a']}: B = {cls['B']}")
    spec = report["spectral"]
    if spec["available"]:
        lines.append(
            f"spectral data: L1 = {spec['L1']}, L2 = {spec['L2']}, "
            f"all_ok = {spec['all_ok']}"
        )
    else:
        lines.append(f"spectral data unavailable: {spec['reason']}")
    mr = report["measure_report"]
    lines.append(
        f"cover lengths (k=1..{mr['k_max']}): {mr['lengths']} "
        f"-> target {mr['target']}"
    )
    return "\n".join(lines) + "\n"

"""Problem files and trace documents.

A problem file is JSON with fields n, q, r (expression string), base_point
and sample_points (arrays of coordinate strings), optional caps, radical
mode, and persistence radius.  A trace document is the versioned, fully
deterministic record of a run: problem echo, per-step records with
certificates, sampling reports, and the final status.  Machine output is
canonical JSON (sorted keys), so equal runs give byte-equal documents.
"""

from __future__ import annotations

import json
from dataclasses import replace
from fractions import Fraction
from typing import Any

from .ideals import ClosureCaps, RadicalCertificate
from .kohn import (EngineCaps, KohnTrace, PersistenceReport, ProblemSpec,
                   ProblemValidationError, VarietyReport, persistence_check,
                   run, variety_sample)
from .parser import parse_expression, parse_scalar
from .poly import Point, Poly

TRACE_VERSION = 1

DEFAULT_PERSISTENCE_RADIUS = Fraction(1, 10)


def _require(data: dict, key: str):
    if key not in data:
        raise ProblemValidationError(f"missing field {key!r}")
    return data[key]


def _coerce_int(value, name: str, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ProblemValidationError(f"field {name!r} must be an integer >= {minimum}")
    return value


def _parse_point(coords, n: int, what: str) -> Point:
    if not isinstance(coords, (list, tuple)) or len(coords) != n:
        raise ProblemValidationError(f"{what} must have exactly {n} coordinates")
    return Point(tuple(parse_scalar(str(c)) for c in coords))


def load_problem(data: dict):
    """Build (ProblemSpec, persistence radius) from problem-file JSON."""
    if not isinstance(data, dict):
        raise ProblemValidationError("problem file must be a JSON object")
    n = _coerce_int(_require(data, "n"), "n", minimum=2)
    q = _coerce_int(_require(data, "q"), "q")
    r_text = _require(data, "r")
    if not isinstance(r_text, str):
        raise ProblemValidationError("field 'r' must be an expression string")
    r = parse_expression(r_text, n)
    base = _parse_point(_require(data, "base_point"), n, "base point")
    samples = tuple(_parse_point(p, n, f"sample point {i}")
                    for i, p in enumerate(data.get("sample_points", ())))

    caps_data = data.get("caps", {})
    if not isinstance(caps_data, dict):
        raise ProblemValidationError("field 'caps' must be an object")
    closure_data = caps_data.get("closure", {})
    closure = ClosureCaps(
        candidate_degree=_coerce_int(closure_data.get("candidate_degree", 4),
                                     "candidate_degree"),
        rounds=_coerce_int(closure_data.get("rounds", 8), "rounds"),
        gram_size=_coerce_int(closure_data.get("gram_size", 64), "gram_size"),
        power_cap=_coerce_int(closure_data.get("power_cap", 8), "power_cap"),
    )
    caps = EngineCaps(
        closure=closure,
        max_steps=_coerce_int(caps_data.get("max_steps", 10), "max_steps"),
        tuple_cap=_coerce_int(caps_data.get("tuple_cap", 200), "tuple_cap"),
    )
    mode = data.get("radical_mode", "full")
    radius_text = data.get("persistence_radius")
    if radius_text is None:
        radius = DEFAULT_PERSISTENCE_RADIUS
    else:
        try:
            radius = Fraction(str(radius_text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemValidationError("field 'persistence_radius' must be a fraction") from exc
        if radius <= 0:
            raise ProblemValidationError("field 'persistence_radius' must be positive")
    spec = ProblemSpec(n=n, q=q, r=r, base_point=base, sample_points=samples,
                       caps=caps, radical_mode=mode)
    return spec, radius


# ---------------------------------------------------------------------------
# Document construction.


def _caps_dict(caps: EngineCaps) -> dict:
    return {
        "max_steps": caps.max_steps,
        "tuple_cap": caps.tuple_cap,
        "closure": {
            "candidate_degree": caps.closure.candidate_degree,
            "rounds": caps.closure.rounds,
            "gram_size": caps.closure.gram_size,
            "power_cap": caps.closure.power_cap,
        },
    }


def _cofactor_list(pairs) -> list:
    return [[g.to_text(), c.to_text()] for g, c in pairs]


def _certificate_dict(cert: RadicalCertificate) -> dict:
    out: dict[str, Any] = {
        "element": cert.element.to_text(),
        "kind": cert.kind,
        "exponent": cert.exponent,
        "context": [g.to_text() for g in cert.context],
    }
    if cert.kind == "radical-power":
        out["cofactors"] = _cofactor_list(cert.witness)
    elif cert.kind == "sos-split":
        target, decomposition, cofactors = cert.witness
        out["target"] = target.to_text()
        out["decomposition"] = [[str(c), h.to_text()] for c, h in decomposition]
        out["target_cofactors"] = _cofactor_list(cofactors)
    else:
        out["cofactors"] = _cofactor_list(cert.witness)
    return out


def build_document(trace: KohnTrace, variety: VarietyReport | None,
                   persistence: PersistenceReport | None,
                   radius: Fraction) -> dict:
    spec = trace.spec
    unit_generator = None
    if trace.status.kind == "terminated":
        final = trace.steps[-1].ideal
        for g in final.generators:
            if not g.evaluate(spec.base_point).is_zero():
                unit_generator = g.to_text()
                break
    steps = []
    for step in trace.steps:
        steps.append({
            "index": step.index,
            "pre_generators": [g.to_text() for g in step.pre_ideal.generators],
            "tuples": [{
                "members": [m.to_text() for m in t.members],
                "determinants": [d.to_text() for d in t.determinants],
                "pruned": t.pruned,
            } for t in step.tuples],
            "generators": [g.to_text() for g in step.ideal.generators],
            "certificates": [_certificate_dict(c) for c in step.certificates],
            "unit_at_base": step.unit_at_base,
            "truncated": step.truncated,
            "truncation_reasons": list(step.truncation_reasons),
        })
    document: dict[str, Any] = {
        "trace_version": TRACE_VERSION,
        "problem": {
            "n": spec.n,
            "q": spec.q,
            "r": spec.r.to_text(),
            "base_point": spec.base_point.to_texts(),
            "sample_points": [p.to_texts() for p in spec.sample_points],
            "radical_mode": spec.radical_mode,
            "caps": _caps_dict(spec.caps),
            "persistence_radius": str(radius),
        },
        "steps": steps,
        "status": {
            "kind": trace.status.kind,
            "step": trace.status.step,
            "unit_generator": unit_generator,
        },
    }
    if variety is not None:
        document["variety_sample"] = {
            "points": [p.to_texts() for p in variety.points],
            "in_variety": [list(row) for row in variety.in_variety],
        }
    if persistence is not None:
        document["persistence"] = {
            "radius": str(persistence.radius),
            "base_verdicts": list(persistence.base_verdicts),
            "points": [p.to_texts() for p in persistence.points],
            "verdicts": [list(v) for v in persistence.verdicts],
            "consistent": persistence.consistent,
            "caveat": persistence.caveat,
        }
    return document


def run_problem(data: dict, max_steps: int | None = None,
                radical_mode: str | None = None) -> dict:
    """Load, run, and report; returns the trace document."""
    spec, radius = load_problem(data)
    if max_steps is not None or radical_mode is not None:
        caps = spec.caps
        if max_steps is not None:
            caps = replace(caps, max_steps=_coerce_int(max_steps, "max_steps"))
        mode = radical_mode if radical_mode is not None else spec.radical_mode
        spec = ProblemSpec(n=spec.n, q=spec.q, r=spec.r,
                           base_point=spec.base_point,
                           sample_points=spec.sample_points,
                           caps=caps, radical_mode=mode)
    trace = run(spec)
    variety = persistence = None
    if spec.sample_points:
        variety = variety_sample(trace)
        persistence = persistence_check(trace, radius)
    return build_document(trace, variety, persistence, radius)


# ---------------------------------------------------------------------------
# Emission.


def emit_machine(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _point_text(coords) -> str:
    return "(" + ", ".join(coords) + ")"


def emit_human(document: dict) -> str:
    lines: list[str] = []
    problem = document["problem"]
    caps = problem["caps"]
    closure = caps["closure"]
    lines.append(f"multiplier ideal run (trace version {document['trace_version']})")
    lines.append(f"problem: n={problem['n']}, q={problem['q']}, radical mode {problem['radical_mode']}")
    lines.append(f"r = {problem['r']}")
    lines.append(f"base point: {_point_text(problem['base_point'])}")
    lines.append(
        "caps: max_steps=%d, tuple_cap=%d; closure: candidate_degree=%d, "
        "rounds=%d, gram_size=%d, power_cap=%d" % (
            caps["max_steps"], caps["tuple_cap"], closure["candidate_degree"],
            closure["rounds"], closure["gram_size"], closure["power_cap"]))
    for step in document["steps"]:
        lines.append("")
        lines.append(f"step {step['index']}")
        lines.append("  pre-ideal generators:")
        for g in step["pre_generators"]:
            lines.append(f"    {g}")
        if step["tuples"]:
            lines.append("  determinant tuples:")
            for t in step["tuples"]:
                members = "(" + ", ".join(t["members"]) + ")"
                if t["pruned"]:
                    lines.append(f"    {members}: pruned (all determinants reduce to zero)")
                else:
                    dets = ", ".join(t["determinants"]) if t["determinants"] else "none"
                    lines.append(f"    {members}: determinants {dets}")
        lines.append("  closed ideal generators:")
        for g in step["generators"]:
            lines.append(f"    {g}")
        if step["certificates"]:
            lines.append("  certificates:")
            for cert in step["certificates"]:
                if cert["kind"] == "radical-power":
                    detail = (f"power m={cert['exponent']}" if cert["exponent"] is not None
                              else "extended-ring radical test")
                    lines.append(f"    {cert['element']}: radical-power ({detail})")
                elif cert["kind"] == "sos-split":
                    squares = " + ".join(f"{c}*|{h}|^2" for c, h in cert["decomposition"])
                    lines.append(f"    {cert['element']}: sos-split of {cert['target']} = {squares}")
                else:
                    lines.append(f"    {cert['element']}: linear-combination over the context")
        if step["truncated"]:
            lines.append("  truncated: " + ", ".join(step["truncation_reasons"]))
        lines.append("  unit at base point: " + ("yes" if step["unit_at_base"] else "no"))
    if "variety_sample" in document:
        lines.append("")
        lines.append("variety sample")
        sample = document["variety_sample"]
        for coords, row in zip(sample["points"], sample["in_variety"]):
            marks = ", ".join(f"step {k + 1}: {'in' if flag else 'out'}"
                              for k, flag in enumerate(row))
            lines.append(f"  {_point_text(coords)}: {marks}")
    if "persistence" in document:
        pers = document["persistence"]
        lines.append("")
        lines.append(f"persistence check (radius {pers['radius']})")
        base = ", ".join(f"step {k + 1}: {'unit' if flag else 'no unit'}"
                         for k, flag in enumerate(pers["base_verdicts"]))
        lines.append(f"  base point verdicts: {base}")
        if pers["points"]:
            for coords, row in zip(pers["points"], pers["verdicts"]):
                ok = "matches" if tuple(row) == tuple(pers["base_verdicts"]) else "DIFFERS"
                lines.append(f"  {_point_text(coords)}: {ok}")
        else:
            lines.append("  no sample points within the radius")
        lines.append("  consistent: " + ("yes" if pers["consistent"] else "no"))
        lines.append(f"  caveat: {pers['caveat']}")
    lines.append("")
    status = document["status"]
    if status["kind"] == "terminated":
        lines.append(f"result: terminated at step {status['step']}; "
                     f"unit generator: {status['unit_generator']}")
    elif status["kind"] == "stabilized-undetermined":
        lines.append(f"result: stabilized without a unit at step {status['step']}; "
                     "termination undetermined at this closure strength")
    else:
        lines.append(f"result: step cap exhausted after step {status['step']} without a unit")
    return "\n".join(lines) + "\n"


def emit_report(document: dict, format: str = "machine") -> str:
    if format == "machine":
        return emit_machine(document)
    if format == "human":
        return emit_human(document)
    raise ValueError("unknown report format")

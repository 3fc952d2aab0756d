"""Driver for the multiplier-ideal procedure on a polynomial hypersurface.

Step 1 closes the ideal generated by the defining function r and the Levi
determinants coeff{dr ∧ dbar r ∧ (ddbar r)^(n-q)}.  Each later step wedges in
holomorphic differentials of tuples of current generators, adjoins the new
determinant coefficients, and closes again.  The chain is increasing by
construction; the run stops when a unit appears at the base point, when the
chain stalls, or when the step cap is hit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .forms import levi_determinants
from .ideals import (ClosureCaps, Ideal, contains_unit_at, ideal_equal,
                     normal_form, real_radical_closure)
from .poly import Point, Poly


class ProblemValidationError(ValueError):
    """Raised when a problem statement is inconsistent."""


@dataclass(frozen=True)
class EngineCaps:
    closure: ClosureCaps = field(default_factory=ClosureCaps)
    max_steps: int = 10
    tuple_cap: int = 200


@dataclass(frozen=True)
class ProblemSpec:
    """A validated problem: ambient dimension, form level q, and r.

    The base point must lie on {r = 0} with nonvanishing complex gradient,
    and every sample point must lie on {r = 0}.
    """

    n: int
    q: int
    r: Poly
    base_point: Point
    sample_points: tuple = ()
    caps: EngineCaps = field(default_factory=EngineCaps)
    radical_mode: str = "full"

    def __post_init__(self):
        object.__setattr__(self, "sample_points", tuple(self.sample_points))
        _validate(self)


def _validate(spec: ProblemSpec) -> None:
    if spec.n < 2:
        raise ProblemValidationError("ambient dimension must be at least 2")
    if not 1 <= spec.q <= spec.n - 1:
        raise ProblemValidationError("q out of range")
    if spec.r.n != spec.n:
        raise ProblemValidationError("ambient dimension mismatch")
    if spec.base_point.n != spec.n:
        raise ProblemValidationError("ambient dimension mismatch")
    if spec.r.is_zero() or not spec.r.is_real():
        raise ProblemValidationError("defining function must be real-valued and nonzero")
    if spec.radical_mode not in ("full", "radical-only", "sos-only"):
        raise ProblemValidationError("unknown radical mode")
    if not spec.r.evaluate(spec.base_point).is_zero():
        raise ProblemValidationError("defining function does not vanish at the base point")
    gradient = [spec.r.partial_z(i).evaluate(spec.base_point)
                for i in range(1, spec.n + 1)]
    if all(g.is_zero() for g in gradient):
        raise ProblemValidationError(
            "complex gradient vanishes at the base point; r is not a local defining function there")
    for idx, point in enumerate(spec.sample_points):
        if point.n != spec.n:
            raise ProblemValidationError("ambient dimension mismatch")
        if not spec.r.evaluate(point).is_zero():
            raise ProblemValidationError(
                f"sample point {idx} does not lie on the zero set of r")


@dataclass(frozen=True)
class TupleRecord:
    """Determinants contributed by one multiplier tuple.

    Step 1 uses a single record with an empty tuple for the base
    determinants.  A record is pruned when every determinant reduces to zero
    modulo the ideal the tuple was drawn from.
    """

    members: tuple
    determinants: tuple
    pruned: bool


@dataclass(frozen=True)
class StepRecord:
    index: int
    pre_ideal: Ideal
    tuples: tuple
    ideal: Ideal
    certificates: tuple
    truncated: bool
    truncation_reasons: tuple
    unit_at_base: bool


@dataclass(frozen=True)
class TraceStatus:
    kind: str      # "terminated" | "stabilized-undetermined" | "cap-exhausted"
    step: int


@dataclass(frozen=True)
class KohnTrace:
    spec: ProblemSpec
    steps: tuple
    status: TraceStatus

    def final_ideal(self) -> Ideal:
        return self.steps[-1].ideal


def _close_step(spec: ProblemSpec, index: int, pre_gens, tuples,
                extra_reasons=()) -> StepRecord:
    pre_ideal = Ideal(tuple(pre_gens), n=spec.n)
    closure = real_radical_closure(pre_ideal, spec.caps.closure, spec.radical_mode)
    reasons = tuple(sorted(set(closure.truncation_reasons) | set(extra_reasons)))
    return StepRecord(
        index=index,
        pre_ideal=pre_ideal,
        tuples=tuple(tuples),
        ideal=closure.ideal,
        certificates=closure.certificates,
        truncated=bool(reasons),
        truncation_reasons=reasons,
        unit_at_base=contains_unit_at(closure.ideal, spec.base_point),
    )


def step1(spec: ProblemSpec) -> StepRecord:
    """Close (r, base Levi determinants)."""
    determinants = levi_determinants(spec.r, spec.q)
    record = TupleRecord(members=(), determinants=tuple(determinants), pruned=False)
    pre_gens: list[Poly] = [spec.r]
    for det in determinants:
        if not det.is_zero() and det not in pre_gens:
            pre_gens.append(det)
    return _close_step(spec, 1, pre_gens, (record,))


def step_next(spec: ProblemSpec, previous: StepRecord) -> StepRecord:
    """One refinement step: wedge in tuples of current generators."""
    current = previous.ideal
    basis = current.groebner_basis()
    max_len = spec.n - spec.q
    records: list[TupleRecord] = []
    kept: list[Poly] = []
    capped = False
    count = 0
    for size in range(1, max_len + 1):
        for members in combinations(basis, size):
            if count >= spec.caps.tuple_cap:
                capped = True
                break
            count += 1
            dets = levi_determinants(spec.r, spec.q, members)
            pruned = all(normal_form(d, basis).is_zero() for d in dets)
            records.append(TupleRecord(members=members,
                                       determinants=tuple(dets),
                                       pruned=pruned))
            if not pruned:
                for d in dets:
                    if not d.is_zero() and d not in kept:
                        kept.append(d)
        if capped:
            break
    pre_gens = list(current.generators)
    for d in kept:
        if d not in pre_gens:
            pre_gens.append(d)
    extra = ("tuple cap",) if capped else ()
    return _close_step(spec, previous.index + 1, pre_gens, records, extra)


def run(spec: ProblemSpec) -> KohnTrace:
    """Run the procedure until termination, stabilization, or the step cap."""
    steps = [step1(spec)]
    if steps[0].unit_at_base:
        return KohnTrace(spec, tuple(steps), TraceStatus("terminated", 1))
    while len(steps) < spec.caps.max_steps:
        nxt = step_next(spec, steps[-1])
        steps.append(nxt)
        if nxt.unit_at_base:
            return KohnTrace(spec, tuple(steps), TraceStatus("terminated", nxt.index))
        if ideal_equal(nxt.ideal, steps[-2].ideal):
            return KohnTrace(spec, tuple(steps),
                             TraceStatus("stabilized-undetermined", nxt.index))
    return KohnTrace(spec, tuple(steps),
                     TraceStatus("cap-exhausted", steps[-1].index))


@dataclass(frozen=True)
class VarietyReport:
    """Which sample points still defeat each step ideal (no unit there)."""

    points: tuple
    in_variety: tuple  # per point, per step: True when no generator is nonzero


def variety_sample(trace: KohnTrace) -> VarietyReport:
    points = trace.spec.sample_points
    table = []
    for point in points:
        table.append(tuple(not contains_unit_at(step.ideal, point)
                           for step in trace.steps))
    return VarietyReport(points=tuple(points), in_variety=tuple(table))


PERSISTENCE_CAVEAT = (
    "Verdicts are compared only at the finitely many sampled surface points "
    "within the radius; sheaf-theoretic statements about the multiplier "
    "ideals are not reproducible by finite computation and are not checked.")


@dataclass(frozen=True)
class PersistenceReport:
    radius: Fraction
    base_verdicts: tuple
    points: tuple
    verdicts: tuple
    consistent: bool
    caveat: str = PERSISTENCE_CAVEAT


def _squared_distance(a: Point, b: Point) -> Fraction:
    total = Fraction(0)
    for x, y in zip(a.coordinates, b.coordinates):
        d = x - y
        total += d.re * d.re + d.im * d.im
    return total


def persistence_check(trace: KohnTrace, radius: Fraction) -> PersistenceReport:
    """Compare unit verdicts at sampled surface points near the base point.

    A point qualifies when its exact squared distance to the base point is at
    most radius squared.  The report is consistent when every qualifying
    point reproduces the base point's per-step unit/no-unit verdicts.
    """
    radius = Fraction(radius)
    spec = trace.spec
    base = tuple(step.unit_at_base for step in trace.steps)
    near = [p for p in spec.sample_points
            if _squared_distance(p, spec.base_point) <= radius * radius]
    verdicts = []
    for point in near:
        verdicts.append(tuple(contains_unit_at(step.ideal, point)
                              for step in trace.steps))
    consistent = all(v == base for v in verdicts)
    return PersistenceReport(radius=radius, base_verdicts=base,
                             points=tuple(near), verdicts=tuple(verdicts),
                             consistent=consistent)

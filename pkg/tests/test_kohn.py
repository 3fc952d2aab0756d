"""End-to-end runs of the multiplier-ideal procedure on model domains."""

import random
from fractions import Fraction

import pytest

from kohnalg.ideals import contains, is_subideal, verify_certificate
from kohnalg.kohn import (EngineCaps, KohnTrace, ProblemSpec,
                          ProblemValidationError, persistence_check, run,
                          variety_sample)
from kohnalg.ideals import ClosureCaps
from kohnalg.parser import parse_expression, parse_scalar
from kohnalg.poly import Point, Poly

from oracles import random_defining_function


def pt(*texts):
    return Point(tuple(parse_scalar(t) for t in texts))


def make_spec(r_text, n=2, q=1, base=None, samples=(), **kwargs):
    r = parse_expression(r_text, n)
    if base is None:
        base = Point.origin(n)
    return ProblemSpec(n=n, q=q, r=r, base_point=base,
                       sample_points=samples, **kwargs)


def test_strictly_pseudoconvex_terminates_at_step_one():
    trace = run(make_spec("2*Re(z2) + abs2(z1)"))
    assert trace.status.kind == "terminated"
    assert trace.status.step == 1
    assert len(trace.steps) == 1
    step = trace.steps[0]
    assert [d.to_text() for d in step.tuples[0].determinants] == ["-1"]
    assert step.ideal.generators == (Poly.one(2),)
    assert step.unit_at_base


def test_degenerate_quartic_terminates_at_step_two():
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2"))
    assert trace.status.kind == "terminated"
    assert trace.status.step == 2
    step1, step2 = trace.steps
    assert [d.to_text() for d in step1.tuples[0].determinants] == ["-4*z1*zbar1"]
    assert [g.to_text() for g in step1.ideal.generators] == ["zbar1", "z2 + zbar2", "z1"]
    assert not step1.unit_at_base
    # the tuple (z1) contributes a unit determinant
    by_members = {tuple(m.to_text() for m in rec.members): rec
                  for rec in step2.tuples}
    z1_rec = by_members[("z1",)]
    assert not z1_rec.pruned
    assert "1" in [d.to_text() for d in z1_rec.determinants]
    assert by_members[("zbar1",)].pruned
    assert step2.ideal.generators == (Poly.one(2),)


def test_levi_flat_stabilizes_without_unit():
    trace = run(make_spec("2*Re(z2)"))
    assert trace.status.kind == "stabilized-undetermined"
    assert trace.status.step == 2
    step1, step2 = trace.steps
    assert step1.tuples[0].determinants == ()
    assert [g.to_text() for g in step1.ideal.generators] == ["z2 + zbar2"]
    assert [g.to_text() for g in step2.ideal.generators] == ["z2 + zbar2"]
    assert all(rec.pruned for rec in step2.tuples)
    assert not step2.unit_at_base


def test_crossed_quartics_in_dimension_three():
    trace = run(make_spec("2*Re(z3) + abs2(z1)^2 + abs2(z2)^2", n=3))
    assert trace.status.kind == "terminated"
    assert trace.status.step == 3
    z1 = Poly.z(3, 1)
    z2 = Poly.z(3, 2)
    step1 = trace.steps[0]
    assert contains(step1.ideal, z1 * z2)
    assert not contains(step1.ideal, z1)
    assert not contains(step1.ideal, z2)
    step2 = trace.steps[1]
    assert contains(step2.ideal, z1)
    assert contains(step2.ideal, z2)
    assert not step2.unit_at_base
    assert trace.steps[2].unit_at_base


def test_level_two_ball_terminates_immediately():
    trace = run(make_spec("2*Re(z3) + abs2(z1) + abs2(z2)", n=3, q=2))
    assert trace.status.kind == "terminated"
    assert trace.status.step == 1


def test_validation_errors():
    with pytest.raises(ProblemValidationError, match="q out of range"):
        make_spec("2*Re(z2) + abs2(z1)", q=2)
    with pytest.raises(ProblemValidationError, match="real-valued"):
        make_spec("z1 + z2")
    with pytest.raises(ProblemValidationError, match="does not vanish"):
        make_spec("2*Re(z2) + abs2(z1) + 1")
    with pytest.raises(ProblemValidationError, match="gradient vanishes"):
        make_spec("abs2(z1) + abs2(z2)^2")
    with pytest.raises(ProblemValidationError, match="sample point 0"):
        make_spec("2*Re(z2) + abs2(z1)", samples=(pt("1", "1"),))
    with pytest.raises(ProblemValidationError, match="unknown radical mode"):
        make_spec("2*Re(z2) + abs2(z1)", radical_mode="fast")
    with pytest.raises(ProblemValidationError, match="at least 2"):
        ProblemSpec(n=1, q=1, r=Poly.z(1, 1) + Poly.zbar(1, 1),
                    base_point=Point.origin(1))


def test_chain_is_increasing_and_sound():
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2"))
    assert contains(trace.steps[0].ideal, trace.spec.r)
    for rec in trace.steps[0].tuples:
        for det in rec.determinants:
            assert contains(trace.steps[0].ideal, det)
    for prev, nxt in zip(trace.steps, trace.steps[1:]):
        assert is_subideal(prev.ideal, nxt.ideal)
        for rec in nxt.tuples:
            for det in rec.determinants:
                assert contains(nxt.ideal, det)
    for step in trace.steps:
        for cert in step.certificates:
            assert verify_certificate(cert)


def test_random_runs_keep_invariants():
    # sos-only with tight caps keeps worst-case closures tractable; the
    # invariants checked here do not depend on closure strength
    rng = random.Random(501)
    caps = EngineCaps(closure=ClosureCaps(rounds=2, gram_size=24, power_cap=3),
                      max_steps=2, tuple_cap=8)
    for _ in range(8):
        r = random_defining_function(rng, 2, degree=3, terms=2)
        spec = ProblemSpec(n=2, q=1, r=r, base_point=Point.origin(2), caps=caps,
                           radical_mode="sos-only")
        trace = run(spec)
        assert trace.status.kind in ("terminated", "stabilized-undetermined",
                                     "cap-exhausted")
        assert contains(trace.steps[0].ideal, r)
        for prev, nxt in zip(trace.steps, trace.steps[1:]):
            assert is_subideal(prev.ideal, nxt.ideal)
        if trace.status.kind == "terminated":
            assert trace.steps[-1].unit_at_base


def test_runs_are_deterministic():
    spec = make_spec("2*Re(z2) + abs2(z1)^2")
    first = run(spec)
    second = run(spec)
    assert first == second
    assert isinstance(first, KohnTrace)


def test_step_cap_exhaustion():
    caps = EngineCaps(max_steps=1)
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2", caps=caps))
    assert trace.status.kind == "cap-exhausted"
    assert trace.status.step == 1


def test_tuple_cap_is_reported():
    caps = EngineCaps(tuple_cap=1)
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2", caps=caps))
    step2 = trace.steps[1]
    assert step2.truncated
    assert "tuple cap" in step2.truncation_reasons
    assert len(step2.tuples) == 1


def test_variety_sample_tracks_points():
    samples = (pt("0", "1/20i"), pt("1/2", "-1/32+1/2i"))
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2", samples=samples))
    report = variety_sample(trace)
    assert report.points == samples
    # z1 = 0 point stays in the variety until the ideal becomes the unit
    assert report.in_variety[0] == (True, False)
    # z1 = 1/2 point already escapes the step-1 ideal
    assert report.in_variety[1] == (False, False)


def test_persistence_consistent_on_the_locus():
    samples = (pt("0", "1/20i"), pt("0", "-3/100i"), pt("1/2", "-1/32+1/2i"))
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2", samples=samples))
    report = persistence_check(trace, Fraction(1, 10))
    assert report.radius == Fraction(1, 10)
    # the far point is outside the radius
    assert report.points == samples[:2]
    assert report.base_verdicts == (False, True)
    assert report.verdicts == ((False, True), (False, True))
    assert report.consistent
    assert "finitely many sampled surface points" in report.caveat


def test_persistence_flags_off_locus_divergence():
    # on the zero set but off the degeneracy locus z1 = 0, inside the radius:
    # the step-1 ideal already carries a unit there, unlike at the base point
    samples = (pt("1/20", "-1/320000+1/50i"),)
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2", samples=samples))
    report = persistence_check(trace, Fraction(1, 10))
    assert report.points == samples
    assert report.verdicts == ((True, True),)
    assert not report.consistent


def test_persistence_radius_filters_everything():
    samples = (pt("1/2", "-1/32+1/2i"),)
    trace = run(make_spec("2*Re(z2) + abs2(z1)^2", samples=samples))
    report = persistence_check(trace, Fraction(1, 100))
    assert report.points == ()
    assert report.consistent

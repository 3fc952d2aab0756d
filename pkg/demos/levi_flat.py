"""
A Levi-flat boundary and the undetermined verdict
=================================================

r = 2*Re(z2) has identically vanishing Levi form; the hypersurface is
foliated by complex hyperplanes and no subelliptic estimate holds at the
origin.  The procedure cannot prove that (finite computation cannot
exhaust all multipliers), but it reports the honest outcome: the ideal
chain stabilizes without ever containing a unit, so termination is
undetermined at this closure strength.
"""

from fractions import Fraction

from kohnalg.kohn import ProblemSpec, persistence_check, run
from kohnalg.parser import parse_expression, parse_scalar
from kohnalg.poly import Point

r = parse_expression("2*Re(z2)", 2)


def pt(*texts):
    return Point(tuple(parse_scalar(t) for t in texts))


spec = ProblemSpec(n=2, q=1, r=r, base_point=Point.origin(2),
                   sample_points=(pt("1/20", "1/30i"), pt("1/50", "0")))
trace = run(spec)

for step in trace.steps:
    gens = [g.to_text() for g in step.ideal.generators]
    print(f"step {step.index}: ideal = {gens}, unit at base = {step.unit_at_base}")

# the step-2 ideal equals the step-1 ideal: a fixpoint, and every later
# step would reproduce it verbatim
print("status:", trace.status.kind, "reported at step", trace.status.step)

# nearby surface points within radius 1/10 see the same no-unit verdicts,
# the computable shadow of the generators generating nearby stalks too
report = persistence_check(trace, Fraction(1, 10))
print("persistence consistent:", report.consistent)
print("caveat:", report.caveat)

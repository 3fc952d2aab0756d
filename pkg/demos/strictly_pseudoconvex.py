"""
The strictly pseudoconvex model domain
======================================

r = 2*Re(z2) + |z1|^2 defines the Siegel half-space in C^2.  The Levi form
is positive definite on the complex tangent space, so the procedure should
certify subellipticity immediately: the very first determinant is already a
unit, and the run terminates at step 1.
"""

from kohnalg.kohn import ProblemSpec, run
from kohnalg.parser import parse_expression
from kohnalg.poly import Point

# the defining function, parsed into an exact polynomial in z1, z2 and
# their conjugates
r = parse_expression("2*Re(z2) + abs2(z1)", 2)
print("defining function:", r)

spec = ProblemSpec(n=2, q=1, r=r, base_point=Point.origin(2))
trace = run(spec)

# step 1 wedges dr ∧ dbar r ∧ (d dbar r)^(n-1) and reads off the single
# coefficient; for this r a short hand computation gives the constant -1
step = trace.steps[0]
record = step.tuples[0]
print("step-1 determinants:", [d.to_text() for d in record.determinants])

# -1 is a unit, so the closed multiplier ideal is the whole ring and the
# run stops with a termination verdict
print("closed step-1 ideal:", [g.to_text() for g in step.ideal.generators])
print("status:", trace.status.kind, "at step", trace.status.step)
assert trace.status.kind == "terminated"
assert trace.status.step == 1

"""
A degenerate boundary: r = 2*Re(z2) + |z1|^4
============================================

The Levi form degenerates along z1 = 0, so step 1 cannot produce a unit.
Instead the first determinant is -4*z1*zbar1, and the real-radical closure
extracts z1, zbar1, and 2*Re(z2) from it with explicit certificates.  At
step 2 the tuple (z1) contributes the determinant coefficient 1, a unit,
and the run terminates.
"""

from kohnalg.ideals import verify_certificate
from kohnalg.kohn import ProblemSpec, run
from kohnalg.parser import parse_expression
from kohnalg.poly import Point

r = parse_expression("2*Re(z2) + abs2(z1)^2", 2)
spec = ProblemSpec(n=2, q=1, r=r, base_point=Point.origin(2))
trace = run(spec)

step1, step2 = trace.steps

# the raw determinant vanishes on the degenerate locus
print("step-1 determinant:", step1.tuples[0].determinants[0])

# the closure splits |z1|^4 into conjugate square halves and divides the
# power, recording a checkable certificate for every adjoined generator
print("closed step-1 ideal:", [g.to_text() for g in step1.ideal.generators])
for cert in step1.certificates:
    ok = verify_certificate(cert)
    print(f"  {cert.element.to_text():12s} via {cert.kind:18s} verified={ok}")

# step 2 draws tuples from the step-1 basis; wedging d(z1) into the frame
# replaces the degenerate direction and produces the unit determinant
for record in step2.tuples:
    members = tuple(m.to_text() for m in record.members)
    dets = [d.to_text() for d in record.determinants]
    print(f"tuple {members}: pruned={record.pruned} determinants={dets}")

print("status:", trace.status.kind, "at step", trace.status.step)
assert trace.status.step == 2

"""
Forms playground: wedges, differentials, and the Levi determinant
=================================================================

The engine's geometry lives in a small exterior algebra over the
polynomial ring in z1..zn, zbar1..zbarn.  This script builds a few forms
by hand and checks the identities the pipeline relies on, then recovers
the classical bordered-Hessian determinant from the wedge expansion.
"""

from kohnalg.forms import (Form, d_antiholo, d_antiholo_form, d_holo,
                           d_holo_form, ddbar, levi_determinants)
from kohnalg.parser import parse_expression
from kohnalg.poly import Poly

n = 2
f = parse_expression("z1^2*zbar2 + 3*z2", n)
g = parse_expression("z1*zbar1 + z2*zbar2", n)

# first-order differentials are (1,0) and (0,1) forms
df = d_holo(f)
print("df      =", df)
print("dbar f  =", d_antiholo(f))

# wedge products anticommute in total degree 1
dg = d_holo(g)
print("df ^ dg =", df.wedge(dg))
assert df.wedge(dg) == -dg.wedge(df)

# the differentials square to zero and anticommute with each other
assert d_holo_form(df).is_zero()
assert d_antiholo_form(d_antiholo(f)).is_zero()
assert d_holo_form(d_antiholo(f)) == -d_antiholo_form(d_holo(f))

# for a real function the mixed Hessian form is hermitian
r = parse_expression("2*Re(z2) + abs2(z1)^2", n)
hess = ddbar(r)
for i in (1, 2):
    for j in (1, 2):
        assert hess.coefficient((i,), (j,)) == hess.coefficient((j,), (i,)).conjugate()
print("ddbar r =", hess)

# the q=1 Levi determinant is the single coefficient of the top wedge
# dr ^ dbar r ^ ddbar r; for n=2 it matches the bordered Hessian
# | 0     r_zbar1  r_zbar2 |
# | r_z1  r_z1zb1  r_z1zb2 |
# | r_z2  r_z2zb1  r_z2zb2 |
# up to a universal sign, expanded here by minors along the first row
rz = [r.partial_z(i) for i in (1, 2)]
rzb = [r.partial_zbar(j) for j in (1, 2)]
mixed = [[r.partial_z(i).partial_zbar(j) for j in (1, 2)] for i in (1, 2)]
bordered = (-(rzb[0]) * (rz[0] * mixed[1][1] - rz[1] * mixed[0][1])
            + rzb[1] * (rz[0] * mixed[1][0] - rz[1] * mixed[0][0]))

det = levi_determinants(r, 1)[0]
print("levi determinant =", det)
assert det == bordered or det == -bordered

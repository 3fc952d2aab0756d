"""
Real-radical closure certificates
=================================

Every generator the closure adjoins carries a certificate that can be
re-verified independently of the closure run.  Three kinds appear:

  radical-power       element^m lies in the ideal (cofactors recorded)
  sos-split           element is a conjugate-square half of a member that
                      decomposes as a hermitian sum of squares
  linear-combination  element is already a member (cofactors recorded)
"""

import dataclasses

from kohnalg.ideals import Ideal, real_radical_closure, verify_certificate
from kohnalg.parser import parse_expression


def ideal(*texts, n=2):
    return Ideal(tuple(parse_expression(t, n) for t in texts))


def show(closed):
    print("  closed ideal:", [g.to_text() for g in closed.ideal.generators])
    for cert in closed.certificates:
        ok = verify_certificate(cert)
        extra = f" exponent={cert.exponent}" if cert.exponent else ""
        print(f"    {cert.element.to_text():10s} {cert.kind}{extra} verified={ok}")


# a pure power: z1 enters because z1^2 is a member
print("closure of (z1^2):")
show(real_radical_closure(ideal("z1^2")))

# a hermitian square: |z1|^2 = z1 * conj(z1) splits into both halves
print("closure of (z1*zbar1):")
show(real_radical_closure(ideal("z1*zbar1")))

# the quartic model's step-1 input shows all three kinds at once:
# z1, zbar1 by sos-split, then 2*Re(z2) = r - |z1|^4 by linear combination
print("closure of (2*Re(z2) + abs2(z1)^2, -4*z1*zbar1):")
closed = real_radical_closure(ideal("2*Re(z2) + abs2(z1)^2", "-4*z1*zbar1"))
show(closed)

# certificates are bound to their element and context; altering either
# makes verification fail
cert = closed.certificates[0]
forged = dataclasses.replace(cert, element=parse_expression("z2", 2))
print("forged certificate verifies:", verify_certificate(forged))

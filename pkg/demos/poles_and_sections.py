"""
Rational series with poles at roots of unity
============================================

"""

from multgf.exactnum import UniPoly, cyclotomic_poly, zeta
from multgf.multfun import SarkozyForm, list_dirichlet_characters
from multgf.ratrec import (RationalFunction, multisection, pade_reconstruct, poles_at_roots_of_unity,
                           sarkozy_series, universal_denominator)

# the character mod 5 sending 2 to i
chi = [c for c in list_dirichlet_characters(5) if c(2) == zeta(4)][0]
F = sarkozy_series(SarkozyForm(1, chi))
print("F =", F)
cert = poles_at_roots_of_unity(F)
print("cyclotomic factors (d, degree):", cert.factors, "ok:", cert.ok)

# recover it from 60 coefficients alone
s = F.series(60)
G = pade_reconstruct(s, F.numer.degree, F.denom.degree)
print("recovered:", G == F)

# coefficients n for n = 1 mod 3
n = RationalFunction(UniPoly([0, 1]), UniPoly([1, -1]) ** 2)
print(multisection(n, 3, 1))
print(multisection(n, 3, 1).coefficients(6))

# a pole at 1/2 is not allowed
print(poles_at_roots_of_unity(RationalFunction(UniPoly([1]), UniPoly([1, -2]))).ok)

C = universal_denominator(2)
print("deg C_2 =", C.degree, " Phi_12 | C_4:", divmod(universal_denominator(4), cyclotomic_poly(12))[1].is_zero())

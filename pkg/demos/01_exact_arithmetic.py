"""
Exact cyclotomic arithmetic
===========================

Coordinates and trigonometric values of rational multiples of pi, with
exact zero tests and sign determination.  No floats are trusted
anywhere; floats appear only as a display convenience.
"""
from fractions import Fraction

from tilegate import CycloReal, cos_pi, sin_pi

# cos(pi/12) as an element of the real subfield of Q(zeta_24).  The
# canonical form is a coefficient vector over the power basis, reduced
# modulo the cyclotomic polynomial; equal values always have equal
# coefficient vectors.
c = cos_pi(1, 12, 24)
print("cos(pi/12) =", float(c))
print("canonical form:", c.to_obj())

# The Pythagorean identity reduces to the zero vector, not to a number
# that is merely small.
s = sin_pi(1, 12, 24)
identity = c * c + s * s - CycloReal.one(24)
print("cos^2 + sin^2 - 1 is exactly zero:", identity.is_zero())

# Angle addition, done two ways, lands on the same canonical form bit
# for bit: cos(5pi/12) versus the expansion of cos(pi/12 + pi/3).
lhs = cos_pi(5, 12, 24)
rhs = c * cos_pi(4, 12, 24) - s * sin_pi(4, 12, 24)
print("rewrite has identical canonical form:", lhs.key() == rhs.key())

# Sign determination works even when two values are close: the symbolic
# zero test runs first, then interval arithmetic is refined until it
# separates.  cos(pi/7) vs the golden-ratio-flavored 9/10: the gap is
# only ~0.0009.
x = cos_pi(1, 7, 28) - CycloReal.from_rational(Fraction(9, 10), 28)
print("cos(pi/7) - 9/10 has sign", x.sign(), "(value ~ %.6f)" % float(x))

# Mixed moduli combine through the least common modulus automatically.
y = cos_pi(1, 5, 20) + cos_pi(1, 6, 12)
print("cos(pi/5) + cos(pi/6) lives in modulus", y.modulus,
      "and is ~ %.6f" % float(y))

# Serialization round-trips losslessly.
doc = y.to_obj()
print("round trip intact:", CycloReal.from_obj(doc) == y)

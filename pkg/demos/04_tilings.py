"""
Concrete tilings and the exact verifier
=======================================

The trivial tiling (center joined to the vertices, apothems dropped) is
generated with exact coordinates, verified against every condition the
impossibility argument uses, and then mutated to show the verifier
catching defects.
"""
from fractions import Fraction

from tilegate import CycloReal, Point, Tiling, Triangle
from tilegate import classify_point, gen_trivial, regularity_class, verify

# 16 congruent right triangles with smaller angle pi/8 tile the 8-gon.
tiling = gen_trivial(8)
print(f"trivial 8-gon tiling: {len(tiling.triangles)} triangles, "
      f"a = {tiling.alpha}, modulus {tiling.modulus}")

report = verify(tiling)
for name, result in report.checks.items():
    print(f"  {name}: {result.status}")
na, nb, nr = report.certificate
print(f"  certificate: {na} smaller, {nb} larger, {nr} right corners")

# The ledger shows the three kinds of meeting point and their angle
# budgets: the center absorbs 16 smaller angles, each polygon vertex
# two larger ones, each apothem foot two right ones.
print("\nledger (class, p, q, r):")
seen = set()
for entry in report.ledger:
    row = (str(entry.point_class), *entry.solution)
    if row not in seen:
        seen.add(row)
        print("  ", row)

# No point has matching counts of the two acute kinds, so the trivial
# tiling is irregular in all three senses.
print("regularity classes:", sorted(regularity_class(tiling, report)) or "none")

# A vertex may lie in the interior of another triangle's side.  Split
# one triangle at the foot of its altitude: the foot is such a T-joint,
# and the verifier books a straight angle (two right corners) there.
o, v, f = tiling.triangles[0].vertices
d = f.x * v.x + f.y * v.y
h = Point(d * v.x, d * v.y)
tris = list(tiling.triangles)
tris[0:1] = [Triangle(o, h, f), Triangle(h, v, f)]
split = Tiling(tiling.n, tiling.alpha, tiling.modulus, tris)
split_report = verify(split)
print("\naltitude-split variant verdict:",
      "pass" if split_report.verdict else "fail")
print("T-joint class:", str(classify_point(h, split)))

# Mutations never pass.  Deleting a triangle leaves an exact area
# deficit; nudging a single vertex by 1/64 breaks the angle check.
short = Tiling(tiling.n, tiling.alpha, tiling.modulus, tiling.triangles[1:])
print("\ndeletion mutant first failure:", verify(short).first_failure)

pt = tiling.triangles[0].vertices[1]
moved = Point(pt.x + CycloReal.from_rational(Fraction(1, 64), tiling.modulus), pt.y)
vs = list(tiling.triangles[0].vertices)
vs[1] = moved
tris = list(tiling.triangles)
tris[0] = Triangle(*vs)
mutant = Tiling(tiling.n, tiling.alpha, tiling.modulus, tris)
print("vertex-nudge mutant first failure:", verify(mutant).first_failure)

"""
Which right triangles can tile a regular n-gon
==============================================

For every n the library reports the short list of smaller acute angles
not excluded by the counting argument, and can replay the argument for
any concrete (n, a) as a checkable trace.
"""
from fractions import Fraction

from tilegate import candidates, impossibility_audit

# The classification is piecewise in n.  Large n pin the angle to
# exactly pi/n; middle n allow pi/n and 2pi/n; a handful of small n
# get a third value, and n = 8 is special.
for n in (5, 8, 12, 26, 28, 30, 100):
    cs = candidates(n)
    angles = ", ".join(
        f"{c.a}{'' if c.feasible else ' (infeasible)'}" for c in cs.candidates
    )
    print(f"n = {n:>3} [{cs.provenance.value:>13}]: a in {{{angles}}}")

# Feasibility matters: a candidate a > 1/2 cannot be the smaller acute
# angle of any right triangle, so the list can shrink to nothing but
# the published set keeps the value for fidelity.

# Replaying the argument for an excluded angle produces the chain of
# counting steps that kills it.
print("\naudit of n = 8, a = 1/8:")
verdict = impossibility_audit(8, Fraction(1, 8))
print("  outcome:", verdict.outcome.value)
for step in verdict.trace:
    lemma = f" [{step.lemma}]" if step.lemma else ""
    print(f"  - {step.kind}{lemma}")

# The one place the finite analysis genuinely cannot decide: the 28-gon
# with a = 3/7.  The corner analysis is clean but the exceptional-angle
# fallback finds no contradiction, so the angle is merely Not Excluded.
print("\naudit of n = 28, a = 3/7:")
verdict = impossibility_audit(28, Fraction(3, 7))
print("  outcome:", verdict.outcome.value)
for step in verdict.trace:
    print(f"  - {step.kind}: {step.claim}")

"""Matching pennies: what failure looks like, honestly reported.

The classic 2x2 game with payoffs +1/-1 has no pure saddle point.  The
hypothesis checker pinpoints why the existence argument does not apply
(the argmin map crosses, so it is not increasing upward), enumeration
returns the empty set, and a forced solve raises instead of inventing an
answer.

Run with: python3 demos/04_negative_control.py
"""

from ordeq import parse_instance
from ordeq.errors import HypothesisFailed, NoSolution

inst = parse_instance("fixtures/i3_matching_pennies.json")

print("payoff table:")
for x in inst.C.ordered():
    print("  ", [str(inst.T.value(x, y)) for y in inst.D.ordered()])

print("\nglobal argmin per row:", {x: sorted(inst.phi(x)) for x in inst.C.ordered()})
hyp = inst.check_hypotheses(("c0", "d0"))
print("phi increasing upward:", hyp.phi_monotonicity.increasing_upward)
print("failures:", hyp.failures())

print("\nsolution set:", set(inst.solution_set))

try:
    inst.solve_maximal(("c0", "d0"))
except HypothesisFailed as exc:
    print("unforced solve:", type(exc).__name__)

try:
    inst.solve_maximal(("c0", "d0"), force=True)
except NoSolution as exc:
    print("forced solve:", type(exc).__name__, "-", exc)

"""The order-optimization maps phi and psi, and their monotonicity flags.

phi(x) collects the feasible columns whose objective value is minimal for
row x; psi(y) the feasible rows whose value is maximal for column y.  Their
product gamma(x, y) = psi(y) x phi(x) drives the solver: its fixed points
are exactly the constrained equilibria.

Run with: python3 demos/02_order_optimization_maps.py
"""

from ordeq import (
    ObjectiveMap,
    ProblemInstance,
    SetValuedMap,
    load_poset,
    monotonicity_report,
)

X = load_poset(["c0", "c1"], [("c0", "c1")])
Y = load_poset(["d0", "d1"], [("d0", "d1")])
U = load_poset(["-1", "0", "1"], [("-1", "0"), ("0", "1")])
C, D = X.full_subset(), Y.full_subset()

# Payoff i - j; the row player is constrained by F, the column player by G.
T = ObjectiveMap(U, {(f"c{i}", f"d{j}"): str(i - j) for i in range(2) for j in range(2)})
F = SetValuedMap(C, D, {"c0": {"d0"}, "c1": {"d0", "d1"}})
G = SetValuedMap(D, C, {"d0": {"c0", "c1"}, "d1": {"c1"}})
inst = ProblemInstance(C, D, T, F, G)

for x in C.ordered():
    print(f"phi({x}) = {sorted(inst.phi(x))}   (feasible argmin of row {x})")
for y in D.ordered():
    print(f"psi({y}) = {sorted(inst.psi(y))}   (feasible argmax of column {y})")

print("\ngamma(c0, d0) =", sorted(inst.gamma("c0", "d0")))

# Removing the constraints changes the optimizers: the global argmin of
# row c0 is d1, but F(c0) = {d0} pins the constrained argmin to d0.
print("global phi(c0) =", sorted(inst.global_phi("c0")), "vs phi(c0) =", sorted(inst.phi("c0")))

# The monotonicity taxonomy is evaluated exhaustively over comparable pairs.
print("\nF:", monotonicity_report(inst.F))
print("phi:", monotonicity_report(inst.phi_map))
print("psi:", monotonicity_report(inst.psi_map))

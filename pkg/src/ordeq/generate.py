"""Deterministic, seeded generation of posets and problem instances.

Everything is a pure function of the GenSpec: the same spec yields the same
artifact, byte for byte after serialization.  Random posets are built by
sampling a strict upper-triangular edge set over a shuffled element order
and closing transitively, which guarantees acyclicity by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .equilibrium import ObjectiveMap, ProblemInstance
from .errors import FilterExhausted, InvalidSpec
from .maps import SetValuedMap
from .poset import Poset, Subset, grid_poset, load_poset

POSET_KINDS = ("chain", "antichain", "boolean_lattice", "grid", "random_poset")
KINDS = POSET_KINDS + ("random_instance",)


@dataclass(frozen=True)
class GenSpec:
    """What to generate and from which seed.

    sizes: per kind, (n,) for chain/antichain/random_poset, (k,) for
    boolean_lattice, grid extents for grid, (|C|, |D|, |U|) for
    random_instance.  filter is "none" or "require_hypotheses"; the latter
    rejection-samples instances until check_hypotheses passes for some seed
    pair, which is then recorded on the instance.
    """

    kind: str
    sizes: tuple
    rng_seed: int = 0
    density: float = 0.35
    monotone_bias: bool = False
    filter: str = "none"
    poset_kind: str = "random_poset"  # shape of C and D in random instances
    max_retries: int = 200
    caps: tuple = (6, 6, 12)

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.filter not in ("none", "require_hypotheses"):
            raise InvalidSpec(f"unknown filter {self.filter!r}")
        if self.poset_kind not in POSET_KINDS:
            raise InvalidSpec(f"unknown poset_kind {self.poset_kind!r}")
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise InvalidSpec(f"sizes must be positive, got {self.sizes}")
        if self.kind in ("chain", "antichain", "boolean_lattice", "random_poset"):
            if len(self.sizes) != 1:
                raise InvalidSpec(f"{self.kind} takes a single size, got {self.sizes}")
        elif self.kind == "random_instance" and len(self.sizes) != 3:
            raise InvalidSpec(
                f"random_instance needs sizes (|C|, |D|, |U|), got {self.sizes}"
            )
        if not 0.0 <= self.density <= 1.0:
            raise InvalidSpec(f"density must lie in [0, 1], got {self.density}")


def _poset(kind: str, sizes: tuple, rng: random.Random, prefix: str,
           density: float) -> Poset:
    if kind == "chain":
        (n,) = sizes
        names = [f"{prefix}{i}" for i in range(n)]
        return load_poset(names, list(zip(names, names[1:])))
    if kind == "antichain":
        (n,) = sizes
        return load_poset([f"{prefix}{i}" for i in range(n)])
    if kind == "boolean_lattice":
        (k,) = sizes
        names = [f"{prefix}{i:0{k}b}" for i in range(2 ** k)]
        edges = [
            (names[i], names[j])
            for i in range(2 ** k)
            for j in range(2 ** k)
            if i != j and i & j == i
        ]
        return load_poset(names, edges, edge_kind="full")
    if kind == "grid":
        return grid_poset(sizes)
    if kind == "random_poset":
        (n,) = sizes
        names = [f"{prefix}{i}" for i in range(n)]
        order = list(range(n))
        rng.shuffle(order)
        edges = [
            (names[order[i]], names[order[j]])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < density
        ]
        return load_poset(names, edges)
    raise InvalidSpec(f"{kind!r} does not generate a poset")


def gen_poset(spec: GenSpec) -> Poset:
    """Generate a validated poset; deterministic in spec.rng_seed."""
    if spec.kind not in POSET_KINDS:
        raise InvalidSpec(f"kind {spec.kind!r} does not generate a poset")
    rng = random.Random(spec.rng_seed)
    return _poset(spec.kind, spec.sizes, rng, "e", spec.density)


def _nonempty_subset(rng: random.Random, pool: tuple) -> frozenset:
    k = rng.randint(1, len(pool))
    return frozenset(rng.sample(pool, k))


def _monotone_score(rng: random.Random, poset: Poset, members: tuple) -> dict:
    # sum of positive weights over the down-set: nondecreasing along the order
    weights = {e: rng.uniform(0.5, 2.0) for e in members}
    return {
        e: sum(weights[z] for z in members if poset.leq(z, e)) for e in members
    }


def _build_instance(spec: GenSpec, attempt_seed: int) -> ProblemInstance:
    rng = random.Random(attempt_seed)
    n_c, n_d, n_u = spec.sizes
    X = _poset(spec.poset_kind, _poset_sizes(spec.poset_kind, n_c), rng, "c", spec.density)
    Y = _poset(spec.poset_kind, _poset_sizes(spec.poset_kind, n_d), rng, "d", spec.density)
    C = X.full_subset()
    D = Y.full_subset()
    u_names = [f"u{i}" for i in range(n_u)]
    if spec.monotone_bias:
        U = load_poset(u_names, list(zip(u_names, u_names[1:])))
    else:
        U = _poset("random_poset", (n_u,), rng, "u", spec.density)

    cs = C.ordered()
    ds = D.ordered()
    if spec.monotone_bias:
        f = _monotone_score(rng, X, cs)
        g = _monotone_score(rng, Y, ds)
        raw = {(x, y): f[x] - g[y] for x in cs for y in ds}
        levels = sorted(set(raw.values()))
        pick = lambda v: u_names[levels.index(v) * n_u // len(levels)]
        table = {pair: pick(v) for pair, v in raw.items()}
    else:
        table = {(x, y): rng.choice(u_names) for x in cs for y in ds}
    T = ObjectiveMap(U, table)

    def constraint(dom: Subset, cod: Subset) -> SetValuedMap:
        pool = cod.ordered()
        if spec.monotone_bias and rng.random() < 0.7:
            base = _nonempty_subset(rng, pool)
            return SetValuedMap(dom, cod, {x: base for x in dom.members})
        return SetValuedMap(dom, cod, {x: _nonempty_subset(rng, pool) for x in dom.ordered()})

    F = constraint(C, D)
    G = constraint(D, C)
    return ProblemInstance(C, D, T, F, G)


def _poset_sizes(kind: str, n: int) -> tuple:
    if kind == "grid":
        # split n into two extents, keeps |elements| == n for composite n
        for a in range(int(n ** 0.5), 0, -1):
            if n % a == 0:
                return (a, n // a)
    if kind == "boolean_lattice":
        k = max(1, n.bit_length() - 1)
        return (k,)
    return (n,)


def gen_instance(spec: GenSpec) -> ProblemInstance:
    """Generate a valid problem instance; deterministic in spec.rng_seed.

    With filter "require_hypotheses" the generator retries (up to
    spec.max_retries fresh attempts) until some seed pair passes
    check_hypotheses; the passing pair is recorded as the instance seed.
    Raises FilterExhausted honestly when the cap is hit.
    """
    if spec.kind != "random_instance":
        raise InvalidSpec(f"kind {spec.kind!r} does not generate an instance")
    if len(spec.sizes) != 3:
        raise InvalidSpec(f"random_instance needs sizes (|C|, |D|, |U|), got {spec.sizes}")
    caps = spec.caps
    if any(s > c for s, c in zip(spec.sizes, caps)):
        raise InvalidSpec(f"sizes {spec.sizes} exceed the caps {caps}")

    master = random.Random(spec.rng_seed)
    attempts = spec.max_retries if spec.filter == "require_hypotheses" else 1
    for _ in range(attempts):
        inst = _build_instance(spec, master.getrandbits(63))
        if spec.filter == "none":
            return inst
        if not (
            inst.phi_monotonicity.increasing_upward
            and inst.psi_monotonicity.increasing_upward
        ):
            continue  # seed-independent part failed; next attempt
        for x in inst.C.ordered():
            for y in inst.D.ordered():
                if inst.check_hypotheses((x, y)).passes:
                    return ProblemInstance(
                        inst.C, inst.D, inst.T, inst.F, inst.G, seed=(x, y)
                    )
    raise FilterExhausted(
        f"no instance passing check_hypotheses found in {attempts} attempts "
        f"(spec seed {spec.rng_seed})"
    )

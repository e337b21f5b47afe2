"""Set-valued mappings between posets and their order-monotonicity taxonomy."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional

from .errors import UnknownElement, ValidationError
from .poset import Subset


@dataclass(frozen=True)
class SetValuedMap:
    """A total map from a domain subset to nonempty subsets of a codomain subset."""

    domain: Subset
    codomain: Subset
    table: Mapping

    def __post_init__(self):
        tbl = {}
        for x in self.domain.ordered():
            if x not in self.table:
                raise ValidationError(f"set-valued map has no entry for {x!r}")
            value = frozenset(self.table[x])
            if not value:
                raise ValidationError(
                    f"set-valued map value at {x!r} is empty; values must be nonempty"
                )
            stray = value - self.codomain.members
            if stray:
                raise ValidationError(
                    f"value at {x!r} contains non-codomain elements {sorted(map(repr, stray))}"
                )
            tbl[x] = value
        extra = set(self.table) - self.domain.members
        if extra:
            raise ValidationError(
                f"table has entries outside the domain: {sorted(map(repr, extra))}"
            )
        object.__setattr__(self, "table", MappingProxyType(tbl))

    def __call__(self, x) -> frozenset:
        try:
            return self.table[x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not in the map's domain") from None

    def entries(self):
        """(x, value) pairs in domain order."""
        return tuple((x, self.table[x]) for x in self.domain.ordered())

    def ordered_value(self, x) -> tuple:
        return tuple(e for e in self.codomain.parent.elements if e in self(x))

    def is_singleton_valued(self) -> bool:
        return all(len(v) == 1 for _, v in self.entries())


def constant_map(domain: Subset, codomain: Subset) -> SetValuedMap:
    """The map sending every domain element to the full codomain."""
    return SetValuedMap(domain, codomain, {x: codomain.members for x in domain.members})


@dataclass(frozen=True)
class MonotonicityReport:
    """Exhaustively evaluated monotonicity flags of a set-valued map.

    ``strictly_increasing``/``strictly_decreasing`` are evaluated only for
    singleton-valued maps (None otherwise): they compare the single values
    strictly across strictly comparable domain pairs.
    """

    increasing_upward: bool
    increasing_downward: bool
    decreasing_upward: bool
    decreasing_downward: bool
    strictly_increasing: Optional[bool] = None
    strictly_decreasing: Optional[bool] = None

    @property
    def increasing(self) -> bool:
        return self.increasing_upward and self.increasing_downward

    @property
    def decreasing(self) -> bool:
        return self.decreasing_upward and self.decreasing_downward


def monotonicity_report(m: SetValuedMap) -> MonotonicityReport:
    """Evaluate all monotonicity flags over every comparable domain pair.

    Increasing upward: for x <= y, each value at x is dominated by some
    value at y.  Increasing downward: for x <= y, each value at y dominates
    some value at x.  The decreasing flags are the order-reversed clauses.
    No sampling: every quantifier is checked exhaustively.
    """
    dom_poset = m.domain.parent
    cod = m.codomain.parent
    members = m.domain.ordered()
    pairs = [
        (x, y) for x in members for y in members if dom_poset.leq(x, y)
    ]

    def holds(at_smaller: bool, witness_above: bool) -> bool:
        # at_smaller: quantify over values at the smaller point of each pair;
        # witness_above: the witness must dominate the quantified value
        for x, y in pairs:
            quantified, witnesses = (m(x), m(y)) if at_smaller else (m(y), m(x))
            for z in quantified:
                if witness_above:
                    ok = any(cod.leq(z, w) for w in witnesses)
                else:
                    ok = any(cod.leq(w, z) for w in witnesses)
                if not ok:
                    return False
        return True

    inc_up = holds(at_smaller=True, witness_above=True)
    inc_down = holds(at_smaller=False, witness_above=False)
    dec_up = holds(at_smaller=True, witness_above=False)
    dec_down = holds(at_smaller=False, witness_above=True)

    strict_inc = strict_dec = None
    if m.is_singleton_valued():
        single = {x: next(iter(m(x))) for x in members}
        strict_pairs = [(x, y) for x, y in pairs if x != y]
        strict_inc = all(cod.lt(single[x], single[y]) for x, y in strict_pairs)
        strict_dec = all(cod.lt(single[y], single[x]) for x, y in strict_pairs)

    return MonotonicityReport(
        increasing_upward=inc_up,
        increasing_downward=inc_down,
        decreasing_upward=dec_up,
        decreasing_downward=dec_down,
        strictly_increasing=strict_inc,
        strictly_decreasing=strict_dec,
    )


def is_constant(m: SetValuedMap):
    """(True, the common value) if all entries agree as sets, else (False, None)."""
    values = {v for _, v in m.entries()}
    if len(values) == 1:
        return True, next(iter(values))
    return False, None

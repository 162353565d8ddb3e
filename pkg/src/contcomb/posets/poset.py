"""Finite posets, their order complexes and the complementation formula."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations

from ..simplicial.chains import HomologyResult
from ..simplicial.complex import SimplicialComplex, join, order_complex_from_up, suspension, wedge


class PosetError(ValueError):
    pass


class AntichainError(PosetError):
    pass


class SizeGuardError(ValueError):
    pass


class FinitePoset:
    """A finite partial order given by covering (or any generating) pairs.

    ``relations`` are pairs ``(a, b)`` meaning ``a < b``; the order is their
    transitive closure.  Elements are re-listed in a linear extension, which
    is stable with respect to the given element order.
    """

    def __init__(self, elements, relations=(), rank=None):
        elements = list(elements)
        pos = {e: i for i, e in enumerate(elements)}
        if len(pos) != len(elements):
            raise PosetError("duplicate elements")
        succ = [set() for _ in elements]
        indeg = [0] * len(elements)
        for a, b in relations:
            try:
                i, j = pos[a], pos[b]
            except KeyError as exc:
                raise PosetError(f"unknown element {exc.args[0]!r}") from None
            if i == j:
                raise PosetError(f"relation {a!r} < {a!r} is not strict")
            if j not in succ[i]:
                succ[i].add(j)
                indeg[j] += 1
        # Kahn's algorithm, always taking the earliest available element
        ready = [i for i, d in enumerate(indeg) if d == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            i = heapq.heappop(ready)
            order.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(ready, j)
        if len(order) != len(elements):
            raise PosetError("relation has a cycle")
        new = {old: k for k, old in enumerate(order)}
        self.elements = tuple(elements[i] for i in order)
        self._pos = {e: k for k, e in enumerate(self.elements)}
        self._succ = [sorted(new[j] for j in succ[i]) for i in order]
        up = [0] * len(order)
        for k in range(len(order) - 1, -1, -1):
            bits = 0
            for j in self._succ[k]:
                bits |= (1 << j) | up[j]
            up[k] = bits
        self._up = up
        down = [0] * len(order)
        for k, bits in enumerate(up):
            b = bits
            while b:
                low = b & -b
                down[low.bit_length() - 1] |= 1 << k
                b ^= low
        self._down = down
        self.rank = None
        if rank is not None:
            self.rank = dict(rank)
            for a, b in self.covers():
                if not self.rank[a] < self.rank[b]:
                    raise PosetError(f"rank is not strictly monotone on {a!r} < {b!r}")

    # --- queries -----------------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"FinitePoset(size={len(self)})"

    def index(self, e):
        return self._pos[e]

    def _bits(self, items):
        b = 0
        for e in items:
            b |= 1 << self._pos[e]
        return b

    def _from_bits(self, bits):
        out = []
        while bits:
            low = bits & -bits
            out.append(self.elements[low.bit_length() - 1])
            bits ^= low
        return out

    def lt(self, a, b) -> bool:
        return bool(self._up[self._pos[a]] >> self._pos[b] & 1)

    def leq(self, a, b) -> bool:
        return a == b or self.lt(a, b)

    def comparable(self, a, b):
        return self.leq(a, b) or self.leq(b, a)

    def upper(self, x):
        """Elements strictly above ``x``."""
        return self._from_bits(self._up[self._pos[x]])

    def lower(self, x):
        """Elements strictly below ``x``."""
        return self._from_bits(self._down[self._pos[x]])

    def covers(self):
        out = []
        for i, bits in enumerate(self._up):
            b = bits
            while b:
                low = b & -b
                j = low.bit_length() - 1
                b ^= low
                # j covers i iff nothing strictly between
                if not (bits & self._down[j]):
                    out.append((self.elements[i], self.elements[j]))
        return out

    def minimal(self):
        return [e for i, e in enumerate(self.elements) if not self._down[i]]

    def maximal(self):
        return [e for i, e in enumerate(self.elements) if not self._up[i]]

    def is_antichain(self, items) -> bool:
        items = list(items)
        return all(not self.comparable(a, b) for a, b in combinations(items, 2))

    def is_ideal(self, items) -> bool:
        s = set(items)
        return all(set(self.lower(x)) <= s for x in s)

    def subposet(self, items) -> "FinitePoset":
        """Induced order on ``items``."""
        keep = [e for e in self.elements if e in set(items)]
        bits = self._bits(keep)
        rel = []
        for e in keep:
            for f in self._from_bits(self._up[self._pos[e]] & bits):
                rel.append((e, f))
        rank = {e: self.rank[e] for e in keep} if self.rank else None
        return FinitePoset(keep, rel, rank)

    def open_below(self, x):
        return self.subposet(self.lower(x))

    def open_above(self, x):
        return self.subposet(self.upper(x))

    def interval(self, a, b):
        """Open interval ``(a, b)``."""
        return self.subposet(self._from_bits(self._up[self._pos[a]] & self._down[self._pos[b]]))

    def without(self, items):
        drop = set(items)
        return self.subposet([e for e in self.elements if e not in drop])

    def with_bounds(self, bottom=True, top=False, names=("0^", "1^")):
        elements = list(self.elements)
        rel = [(a, b) for a, b in self.covers()]
        if bottom:
            rel += [(names[0], e) for e in self.elements]
            elements = [names[0]] + elements
        if top:
            rel += [(e, names[1]) for e in self.elements]
            elements.append(names[1])
        if bottom and top:
            rel.append((names[0], names[1]))
        return FinitePoset(elements, rel)

    def meet(self, a, b):
        """Greatest lower bound, or None when it does not exist."""
        common = (self._down[self._pos[a]] | 1 << self._pos[a]) & (self._down[self._pos[b]] | 1 << self._pos[b])
        return self._extremum(common, self._down)

    def join(self, a, b):
        common = (self._up[self._pos[a]] | 1 << self._pos[a]) & (self._up[self._pos[b]] | 1 << self._pos[b])
        return self._extremum(common, self._up)

    def _extremum(self, bits, away):
        # the element of ``bits`` from which every other member lies in ``away``
        for e in self._from_bits(bits):
            i = self._pos[e]
            if (bits & ~(1 << i)) & ~away[i] == 0:
                return e
        return None

    def bottom(self):
        m = self.minimal()
        return m[0] if len(m) == 1 and not (set(self.elements) - {m[0]} - set(self.upper(m[0]))) else None

    def top(self):
        m = self.maximal()
        return m[0] if len(m) == 1 and not (set(self.elements) - {m[0]} - set(self.lower(m[0]))) else None

    def complements(self, y):
        """Elements x with x ∧ y = 0̂ and x ∨ y = 1̂ (bounded posets only)."""
        lo, hi = self.bottom(), self.top()
        if lo is None or hi is None:
            raise PosetError("complements need a bounded poset")
        return [x for x in self.elements if self.meet(x, y) == lo and self.join(x, y) == hi]

    def proper_part(self):
        drop = {self.bottom(), self.top()} - {None}
        return self.without(drop)

    def up_lists(self):
        out = []
        for bits in self._up:
            out.append(_bit_indices(bits))
        return out

    def to_json(self):
        return {
            "elements": [_json(e) for e in self.elements],
            "covers": [[_json(a), _json(b)] for a, b in self.covers()],
        }

    @classmethod
    def from_json(cls, data):
        elements = [_unjson(e) for e in data["elements"]]
        covers = [(_unjson(a), _unjson(b)) for a, b in data.get("covers", ())]
        return cls(elements, covers)


def _bit_indices(bits):
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def _json(e):
    if isinstance(e, (tuple, list, frozenset)):
        return [_json(x) for x in e]
    return e


def _unjson(e):
    if isinstance(e, list):
        return tuple(_unjson(x) for x in e)
    return e


def order_complex(P: FinitePoset) -> SimplicialComplex:
    """Chains of P as a simplicial complex; vertex order is a linear extension."""
    return order_complex_from_up(list(P.elements), P.up_lists())


# --- partition lattices and configuration posets ------------------------------

def set_partitions(items):
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1:]


def _canon(part):
    return tuple(sorted(tuple(sorted(b)) for b in part))


def partition_lattice(n, truncated=False, max_n=8) -> FinitePoset:
    """Set partitions of {1..n}; ``p < q`` when q strictly refines p.

    With ``truncated`` the one-block and discrete partitions are removed.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SizeGuardError(f"partition lattice of [{n}] exceeds the size guard n <= {max_n}")
    parts = sorted({_canon(p) for p in set_partitions(range(1, n + 1))}, key=lambda p: (len(p), p))
    rel = []
    for p in parts:
        for i, block in enumerate(p):
            if len(block) < 2:
                continue
            rest = p[:i] + p[i + 1:]
            head, tail = block[0], block[1:]
            # split the block in two, the piece holding ``head`` first
            for r in range(0, len(tail)):
                for chosen in combinations(tail, r):
                    a = (head,) + chosen
                    b = tuple(x for x in tail if x not in chosen)
                    rel.append((p, _canon(rest + (a, b))))
    rank = {p: len(p) - 1 for p in parts}
    P = FinitePoset(parts, rel, rank)
    if truncated:
        P = P.proper_part()
    return P


def exp_poset(m, n) -> FinitePoset:
    """Nonempty subsets of {1..m} with at most n elements, under inclusion."""
    if not (1 <= n <= m <= 12):
        raise SizeGuardError("exp_poset needs 1 <= n <= m <= 12")
    elems = [c for k in range(1, n + 1) for c in combinations(range(1, m + 1), k)]
    rel = []
    for c in elems:
        if len(c) < n:
            for x in range(1, m + 1):
                if x not in c:
                    rel.append((c, tuple(sorted(c + (x,)))))
    return FinitePoset(elems, rel, {c: len(c) for c in elems})


def boolean_lattice(n, proper=False) -> FinitePoset:
    elems = [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    rel = [(c, tuple(sorted(c + (x,)))) for c in elems for x in range(1, n + 1) if x not in c]
    P = FinitePoset(elems, rel, {c: len(c) for c in elems})
    return P.proper_part() if proper else P


def chain_poset(n) -> FinitePoset:
    return FinitePoset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain_poset(n) -> FinitePoset:
    return FinitePoset(range(n))


# --- complementation formula ---------------------------------------------------

@dataclass
class HCFReport:
    antichain: tuple
    quotient: HomologyResult
    wedge: HomologyResult
    passed: bool

    def as_dict(self):
        return {
            "antichain": [_json(x) for x in self.antichain],
            "quotient": self.quotient.as_dict(),
            "wedge": self.wedge.as_dict(),
            "passed": self.passed,
        }


def hcf_quotient_check(P: FinitePoset, X, coefficients="Z") -> HCFReport:
    """Compare ``Δ(P)/Δ(P∖X)`` with ``⋁_{x∈X} Σ(Δ(P_<x) * Δ(P_>x))``.

    The quotient side is the relative homology of the pair; the wedge side
    is reduced homology of an explicit simplicial model.
    """
    X = list(X)
    if not P.is_antichain(X):
        raise AntichainError("X is not an antichain")
    K = order_complex(P)
    rest = order_complex(P.without(X))
    left = K.homology(coefficients, subcomplex=rest)
    pieces = [suspension(join(order_complex(P.open_below(x)), order_complex(P.open_above(x)))) for x in X]
    W = wedge(pieces)
    right = W.homology(coefficients, reduced=True)
    return HCFReport(tuple(X), left, right, left.same_as(right))

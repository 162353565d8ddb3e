"""Diagrams of simplicial complexes over finite posets and their hocolims."""

from __future__ import annotations

from itertools import combinations

from ..simplicial.complex import SimplicialComplex, complex_from_json, complex_to_json, order_complex_from_up
from .poset import FinitePoset, _json, _unjson


class DiagramInvalidError(ValueError):
    pass


class SpaceDiagram:
    """A functor from a finite poset to simplicial complexes.

    Maps point downward: ``maps[(p, q)]`` for ``p < q`` is a vertex map
    ``D_q -> D_p`` given as ``{vertex of D_q: vertex of D_p}``.  Maps only
    need to be given on covers; the rest are composed, and any supplied
    non-cover maps must agree with the composite.
    """

    def __init__(self, base: FinitePoset, spaces, maps=None):
        self.base = base
        self.spaces = {p: spaces[p] for p in base.elements}
        given = {tuple(k): dict(v) for k, v in (maps or {}).items()}
        for (p, q) in given:
            if not base.lt(p, q):
                raise DiagramInvalidError(f"map given for non-relation {p!r} < {q!r}")
        self.maps = {}
        # fill in p < q in order of increasing interval length
        pairs = [(p, q) for p in base.elements for q in base.upper(p)]
        pairs.sort(key=lambda pq: len(base.interval(*pq)))
        for p, q in pairs:
            mids = [m for m in base.upper(p) if base.lt(m, q)]
            if mids:
                m = mids[0]
                dpm, dmq = self.maps[(p, m)], self.maps[(m, q)]
                comp = {v: dpm[dmq[v]] for v in self.spaces[q].vertices}
                if (p, q) in given and given[(p, q)] != comp:
                    raise DiagramInvalidError(f"map {p!r}<{q!r} disagrees with the composite through {m!r}")
                self.maps[(p, q)] = comp
            else:
                if (p, q) not in given:
                    raise DiagramInvalidError(f"missing map for cover {p!r} < {q!r}")
                self.maps[(p, q)] = given[(p, q)]
        self.validate()

    def map(self, p, q):
        if p == q:
            return {v: v for v in self.spaces[p].vertices}
        return self.maps[(p, q)]

    def image(self, p, q, simplex_labels):
        d = self.map(p, q)
        return frozenset(d[v] for v in simplex_labels)

    def validate(self):
        """Simpliciality of every map and d_pq ∘ d_qr = d_pr on every chain."""
        for (p, q), d in self.maps.items():
            Dq, Dp = self.spaces[q], self.spaces[p]
            if set(d) != set(Dq.vertices):
                raise DiagramInvalidError(f"map {p!r}<{q!r} is not defined on every vertex")
            for f in Dq.facets():
                img = {d[v] for v in Dq.labels(f)}
                if not Dp.contains(img):
                    raise DiagramInvalidError(f"map {p!r}<{q!r} is not simplicial")
        for p in self.base.elements:
            for q in self.base.upper(p):
                for r in self.base.upper(q):
                    dpq, dqr, dpr = self.maps[(p, q)], self.maps[(q, r)], self.maps[(p, r)]
                    if any(dpq[dqr[v]] != dpr[v] for v in self.spaces[r].vertices):
                        raise DiagramInvalidError(f"functoriality fails on {p!r} < {q!r} < {r!r}")

    def restrict(self, items):
        sub = self.base.subposet(items)
        return SpaceDiagram(sub, {p: self.spaces[p] for p in sub.elements},
                            {(p, q): self.maps[(p, q)] for p in sub.elements for q in sub.upper(p)})

    def grothendieck(self):
        """Elements ``(p, σ)`` in a linear extension, with strict upper lists."""
        elems = []
        for p in self.base.elements:
            D = self.spaces[p]
            for s in D.all_simplices():
                elems.append((p, D.labels(s)))
        pos = {e: i for i, e in enumerate(elems)}
        up = [[] for _ in elems]
        for (q, tau) in elems:
            j = pos[(q, tau)]
            for p in [q] + self.base.lower(q):
                img = sorted(self.image(p, q, tau), key=self.spaces[p].vertex_index)
                for k in range(1, len(img) + 1):
                    for sigma in combinations(img, k):
                        i = pos[(p, sigma)]
                        if i != j:
                            up[i].append(j)
        for lst in up:
            lst.sort()
        return elems, up

    def to_json(self):
        data = self.base.to_json()
        data["spaces"] = {_key(p): complex_to_json(self.spaces[p]) for p in self.base.elements}
        data["maps"] = [
            {"lower": _json(p), "upper": _json(q), "vertex_map": [[_json(a), _json(b)] for a, b in d.items()]}
            for (p, q), d in self.maps.items()
            if (p, q) in set(self.base.covers())
        ]
        return data

    @classmethod
    def from_json(cls, data):
        base = FinitePoset.from_json(data)
        spaces = {p: complex_from_json(data["spaces"][_key(p)]) for p in base.elements}
        maps = {
            (_unjson(m["lower"]), _unjson(m["upper"])): {_unjson(a): _unjson(b) for a, b in m["vertex_map"]}
            for m in data.get("maps", ())
        }
        return cls(base, spaces, maps)


def _key(p):
    import json

    return p if isinstance(p, str) else json.dumps(_json(p))


def hocolim(D: SpaceDiagram) -> SimplicialComplex:
    """Order complex of the Grothendieck poset: (p,σ) ⊑ (q,τ) iff p ≤ q and σ ⊆ d_pq(τ)."""
    elems, up = D.grothendieck()
    return order_complex_from_up(elems, up)


def constant_diagram(P: FinitePoset, X: SimplicialComplex) -> SpaceDiagram:
    ident = {v: v for v in X.vertices}
    return SpaceDiagram(P, {p: X for p in P.elements}, {c: ident for c in P.covers()})


def cone_diagram(X: SimplicialComplex) -> SpaceDiagram:
    P = FinitePoset(["base", "top"], [("base", "top")])
    pt = SimplicialComplex([["*"]])
    return SpaceDiagram(P, {"top": X, "base": pt}, {("base", "top"): {v: "*" for v in X.vertices}})


def suspension_diagram(X: SimplicialComplex) -> SpaceDiagram:
    P = FinitePoset(["south", "north", "top"], [("south", "top"), ("north", "top")])
    pt = SimplicialComplex([["*"]])
    collapse = {v: "*" for v in X.vertices}
    return SpaceDiagram(P, {"top": X, "south": pt, "north": pt},
                        {("south", "top"): collapse, ("north", "top"): collapse})

"""Finite group actions on simplicial complexes and their orbit cell complexes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import CellComplex
from .complex import SimplicialComplex, barycentric_subdivision


class ActionInvalidError(ValueError):
    """A permutation does not define a simplicial action."""


def _compose(g, h):
    return tuple(g[i] for i in h)


class SimplicialAction:
    """A finite group acting on the vertices of ``K`` by simplicial maps.

    ``generators`` are mappings ``label -> label``.  The full group is
    generated by closure; elements are stored as index permutations with
    the identity first.
    """

    def __init__(self, K: SimplicialComplex, generators=(), max_order=100_000):
        self.complex = K
        n = len(K.vertices)
        gens = []
        for g in generators:
            try:
                perm = tuple(K.vertex_index(g.get(v, v)) for v in K.vertices)
            except KeyError as exc:
                raise ActionInvalidError(f"image {exc.args[0]!r} is not a vertex") from None
            if sorted(perm) != list(range(n)):
                raise ActionInvalidError("generator is not a bijection on vertices")
            gens.append(perm)
        for perm in gens:
            for k in range(K.dim + 1):
                simps = K.index_of(k)
                for s in K.simplices(k):
                    if tuple(sorted(perm[i] for i in s)) not in simps:
                        raise ActionInvalidError(f"simplex {K.labels(s)!r} is not mapped to a simplex")
        identity = tuple(range(n))
        elements = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    gh = _compose(g, h)
                    if gh not in seen:
                        if len(seen) >= max_order:
                            raise ActionInvalidError("group is larger than the size guard")
                        seen.add(gh)
                        elements.append(gh)
                        nxt.append(gh)
            frontier = nxt
        self.generators = gens
        self.elements = elements

    @classmethod
    def trivial(cls, K):
        return cls(K, ())

    @property
    def order(self):
        return len(self.elements)

    def image(self, g, simplex):
        return tuple(sorted(g[i] for i in simplex))

    def label_map(self, g):
        V = self.complex.vertices
        return {V[i]: V[g[i]] for i in range(len(V))}

    def is_free_on_vertices(self):
        return all(all(g[i] != i for i in range(len(g))) for g in self.elements[1:])

    def stabilizers_fix_pointwise(self) -> bool:
        """True when any element mapping a simplex to itself fixes its vertices."""
        K = self.complex
        for g in self.elements[1:]:
            for s in K.all_simplices():
                img = [g[i] for i in s]
                if sorted(img) == list(s) and img != list(s):
                    return False
        return True

    def orbits_separate_simplices(self, vertex_orbit) -> bool:
        return all(
            len({vertex_orbit[i] for i in s}) == len(s)
            for k in range(1, self.complex.dim + 1)
            for s in self.complex.simplices(k)
        )

    def vertex_orbits(self):
        orbit = [-1] * len(self.complex.vertices)
        count = 0
        for v in range(len(orbit)):
            if orbit[v] < 0:
                for g in self.elements:
                    orbit[g[v]] = count
                count += 1
        return orbit

    def on_subdivision(self, sd: SimplicialComplex) -> "SimplicialAction":
        """The induced action on ``barycentric_subdivision(self.complex)``."""
        K = self.complex
        gens = []
        for g in self.generators:
            gens.append({t: K.labels(self.image(g, K.simplex_of(t))) for t in sd.vertices})
        return SimplicialAction(sd, gens)


@dataclass
class Quotient:
    """Orbit cell structure of ``complex`` under ``action``.

    ``reps[k]`` lists one simplex per k-cell, ``orbit_of[s] = (k, cell)``
    and ``transport[s]`` is the index of a group element carrying the
    representative of ``s``'s orbit onto ``s``.
    """

    complex: SimplicialComplex
    action: SimplicialAction
    cells: CellComplex
    reps: dict
    orbit_of: dict
    transport: dict
    vertex_orbit: list
    subdivisions: int = 0
    notes: list = field(default_factory=list)

    def homology(self, coefficients="Z", reduced=False):
        return self.cells.homology(coefficients, reduced)

    def euler_characteristic(self):
        return self.cells.euler_characteristic()


def quotient_by_action(K, action=None, generators=None, require_ordered=False, max_subdivisions=3) -> Quotient:
    """Orbit complex ``|K|/G``.

    Subdivides until every simplex stabilizer fixes its simplex pointwise;
    with ``require_ordered`` it also subdivides until the vertices of each
    simplex lie in distinct orbits, so the result is an ordered
    Delta-complex on which cup products can be evaluated.
    """
    if action is None:
        action = SimplicialAction(K, generators or ())
    elif action.complex is not K:
        raise ActionInvalidError("action is defined on a different complex")
    rounds = 0
    while True:
        vorb = action.vertex_orbits()
        ok = action.stabilizers_fix_pointwise()
        ordered = ok and action.orbits_separate_simplices(vorb)
        if ok and (ordered or not require_ordered):
            break
        if rounds >= max_subdivisions:
            raise ActionInvalidError("subdivision did not produce a regular action")
        sd = barycentric_subdivision(K)
        action = action.on_subdivision(sd)
        K = sd
        rounds += 1

    orbit_of, transport, reps = {}, {}, {}
    for k in range(K.dim + 1):
        reps[k] = []
        for s in K.simplices(k):
            if s in orbit_of:
                continue
            cell = len(reps[k])
            reps[k].append(s)
            for gi, g in enumerate(action.elements):
                t = action.image(g, s)
                if t not in orbit_of:
                    orbit_of[t] = (k, cell)
                    transport[t] = gi
    sizes = [len(reps[k]) for k in range(K.dim + 1)]
    faces = {}
    signs = None if ordered else {}
    for k in range(1, len(sizes)):
        fl, sl = [], []
        for r in reps[k]:
            if ordered:
                verts = sorted(r, key=lambda v: vorb[v])
                fl.append(tuple(orbit_of[tuple(sorted(verts[:i] + verts[i + 1:]))][1] for i in range(k + 1)))
            else:
                cells, sg = [], []
                for i in range(k + 1):
                    f = r[:i] + r[i + 1:]
                    _, c = orbit_of[f]
                    g = action.elements[transport[f]]
                    moved = [g[v] for v in reps[k - 1][c]]
                    cells.append(c)
                    sg.append((-1) ** i * _perm_sign(moved))
                fl.append(tuple(cells))
                sl.append(tuple(sg))
        faces[k] = fl
        if signs is not None:
            signs[k] = sl
    cells = CellComplex(sizes, faces, signs)
    return Quotient(K, action, cells, reps, orbit_of, transport, vorb, rounds)


def _perm_sign(seq):
    """Sign of the permutation sorting ``seq`` (distinct entries, short)."""
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv & 1 else 1

"""The cohomological Z/2-index of free involutions and Sarkaria-type bounds."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .posets.diagram import SpaceDiagram, hocolim
from .posets.poset import FinitePoset, order_complex
from .simplicial.complex import SimplicialComplex, antipodal_map, cross_polytope_boundary, cycle, join
from .simplicial.cup import cup_square_power
from .simplicial.quotient import Quotient, SimplicialAction, quotient_by_action


class FreenessError(ValueError):
    """The involution has a fixed point on the geometric realization."""


class InvarianceError(ValueError):
    pass


class FreeZ2Complex:
    """A simplicial complex with a free simplicial involution.

    Freeness is checked in the strong form ``σ ∩ τσ = ∅`` for every simplex.
    """

    def __init__(self, K: SimplicialComplex, involution):
        inv = {v: involution[v] for v in K.vertices} if K.vertices else {}
        for v, w in inv.items():
            if w not in inv:
                raise FreenessError(f"{w!r} is not a vertex")
            if inv[w] != v:
                raise FreenessError(f"involution does not square to the identity at {v!r}")
        for k in range(K.dim + 1):
            for s in K.simplices(k):
                labels = K.labels(s)
                img = {inv[v] for v in labels}
                if img & set(labels):
                    raise FreenessError(f"simplex {labels!r} meets its image")
                if not K.contains(img):
                    raise FreenessError(f"image of {labels!r} is not a simplex")
        self.complex = K
        self.involution = inv

    def restrict(self, L: SimplicialComplex) -> "FreeZ2Complex":
        """Restriction to an invariant subcomplex."""
        for s in L.all_simplices():
            labels = L.labels(s)
            if not self.complex.contains(labels):
                raise InvarianceError(f"{labels!r} is not a simplex of the ambient complex")
            if not L.contains({self.involution[v] for v in labels}):
                raise InvarianceError(f"subcomplex is not invariant at {labels!r}")
        return FreeZ2Complex(L, {v: self.involution[v] for v in L.vertices})

    def complement_order_complex(self, L: SimplicialComplex) -> "FreeZ2Complex":
        """Δ of the poset of simplices not in L, with the induced involution."""
        K = self.complex
        inside = L.label_simplices() if L is not None else set()
        elems = [frozenset(K.labels(s)) for s in K.all_simplices() if frozenset(K.labels(s)) not in inside]
        keyed = sorted(elems, key=lambda f: (len(f), sorted(K.vertex_index(v) for v in f)))
        labels = [tuple(sorted(f, key=K.vertex_index)) for f in keyed]
        rel = [(a, b) for a in labels for b in labels if len(a) + 1 == len(b) and set(a) < set(b)]
        P = FinitePoset(labels, rel)
        Delta = order_complex(P)
        inv = {lab: tuple(sorted((self.involution[v] for v in lab), key=K.vertex_index)) for lab in labels}
        return FreeZ2Complex(Delta, inv)


@dataclass
class DoubleCover:
    quotient: Quotient
    w: list
    lift: dict = field(default_factory=dict)


def double_cover_class(L: FreeZ2Complex) -> DoubleCover:
    """Quotient Delta-complex and the mod-2 class of the double cover.

    A spanning forest of the quotient 1-skeleton is lifted; an edge gets
    ``w = 1`` exactly when its lift from the chosen sheet ends on the other
    sheet.
    """
    K = L.complex
    action = SimplicialAction(K, [L.involution])
    Q = quotient_by_action(K, action, require_ordered=True)
    if Q.complex is not K:
        raise FreenessError("action needed subdivision, so it is not free")
    tau = action.elements[1] if action.order == 2 else None
    nv = Q.cells.sizes[0] if Q.cells.sizes else 0
    vert_cell = [Q.orbit_of[(v,)][1] for v in range(len(K.vertices))]
    rep_vertex = [Q.reps[0][c][0] for c in range(nv)]
    edges = Q.cells.faces.get(1, [])
    incident = [[] for _ in range(nv)]
    for e, (head, tail) in enumerate(edges):
        incident[tail].append(e)
        incident[head].append(e)

    def other_end(e, start_vertex):
        a, b = Q.reps[1][e]
        if start_vertex in (a, b):
            return b if start_vertex == a else a
        ta, tb = tau[a], tau[b]
        return tb if start_vertex == ta else ta

    lift = [None] * nv
    for root in range(nv):
        if lift[root] is not None:
            continue
        lift[root] = rep_vertex[root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for e in incident[u]:
                end = other_end(e, lift[u])
                v = vert_cell[end]
                if lift[v] is None:
                    lift[v] = end
                    queue.append(v)
    w = []
    for e, (head, tail) in enumerate(edges):
        w.append(0 if other_end(e, lift[tail]) == lift[head] else 1)
    return DoubleCover(Q, w, {K.vertices[lift[c]]: c for c in range(nv)})


def z2_index(L: FreeZ2Complex) -> int:
    """Largest m with ``w^m != 0``; -1 for the empty complex."""
    if L.complex.is_empty():
        return -1
    dc = double_cover_class(L)
    return cup_square_power(dc.quotient.cells, dc.w)


def antipodal_sphere(n) -> FreeZ2Complex:
    """Boundary of the (n+1)-dimensional cross-polytope, a model of S^n."""
    return FreeZ2Complex(cross_polytope_boundary(n + 1), antipodal_map(n + 1))


def join_free(A: FreeZ2Complex, B: FreeZ2Complex) -> FreeZ2Complex:
    J = join(A.complex, B.complex)
    inv = {(0, v): (0, A.involution[v]) for v in A.complex.vertices}
    inv.update({(1, v): (1, B.involution[v]) for v in B.complex.vertices})
    return FreeZ2Complex(J, inv)


# --- Sarkaria's inequality ------------------------------------------------------

@dataclass
class SarkariaReport:
    name: str
    ind_sub: int
    ind_total: int
    ind_complement: int
    bound: int
    passed: bool
    tight: bool

    def as_dict(self):
        return dict(self.__dict__)


def sarkaria_check(L0: FreeZ2Complex, L: SimplicialComplex, name="pair") -> SarkariaReport:
    """``Ind(L) >= Ind(L0) - Ind(Δ(L0 ∖ L)) - 1``."""
    sub = L0.restrict(L)
    a = z2_index(sub)
    b = z2_index(L0)
    c = z2_index(L0.complement_order_complex(L))
    bound = b - c - 1
    return SarkariaReport(name, a, b, c, bound, a >= bound, a == bound)


class Z2Diagram:
    """A diagram with an involution ``τ`` on the base poset and maps
    ``φ_p : D_p -> D_{τp}`` (vertex maps) forming a Z/2-action.

    Compatibility: ``φ_{τp} ∘ φ_p = id`` and ``φ_p ∘ d_pq = d_{τp,τq} ∘ φ_q``.
    """

    def __init__(self, D: SpaceDiagram, poset_map, space_maps):
        P = D.base
        self.diagram = D
        self.tau = {p: poset_map.get(p, p) for p in P.elements}
        self.phi = {p: dict(space_maps[p]) for p in P.elements}
        for p in P.elements:
            tp = self.tau[p]
            if self.tau[tp] != p:
                raise InvarianceError(f"poset map is not an involution at {p!r}")
            for q in P.upper(p):
                if not P.lt(tp, self.tau[q]):
                    raise InvarianceError(f"poset map is not order preserving on {p!r} < {q!r}")
            Dp, Dtp = D.spaces[p], D.spaces[tp]
            if set(self.phi[p]) != set(Dp.vertices):
                raise InvarianceError(f"φ_{p!r} is not defined on every vertex")
            for f in Dp.facets():
                if not Dtp.contains({self.phi[p][v] for v in Dp.labels(f)}):
                    raise InvarianceError(f"φ_{p!r} is not simplicial")
        for p in P.elements:
            back = self.phi[self.tau[p]]
            if any(back[self.phi[p][v]] != v for v in D.spaces[p].vertices):
                raise InvarianceError(f"φ does not square to the identity at {p!r}")
            for q in P.upper(p):
                left = D.map(self.tau[p], self.tau[q])
                dpq = D.map(p, q)
                for v in D.spaces[q].vertices:
                    if self.phi[p][dpq[v]] != left[self.phi[q][v]]:
                        raise InvarianceError(f"φ is not compatible with d on {p!r} < {q!r}")

    def restrict(self, items):
        items = list(items)
        if set(self.tau[p] for p in items) != set(items):
            raise InvarianceError("restriction to a non-invariant subset")
        Dsub = self.diagram.restrict(items)
        return Z2Diagram(Dsub, {p: self.tau[p] for p in items}, {p: self.phi[p] for p in items})

    def hocolim(self) -> FreeZ2Complex:
        D = self.diagram
        H = hocolim(D)
        inv = {}
        for p, sigma in H.vertices:
            tp = self.tau[p]
            img = tuple(sorted((self.phi[p][v] for v in sigma), key=D.spaces[tp].vertex_index))
            inv[(p, sigma)] = (tp, img)
        fixed = [x for x, y in inv.items() if x == y]
        if fixed:
            raise FreenessError(f"induced involution fixes {fixed[0]!r}")
        return FreeZ2Complex(H, inv)


@dataclass
class DiagramSarkariaReport:
    name: str
    ind_ideal: int
    ind_total: int
    ind_rest: int
    bound: int
    passed: bool
    tight: bool

    def as_dict(self):
        return dict(self.__dict__)


def diagram_sarkaria_check(Z: Z2Diagram, P0, name="diagram") -> DiagramSarkariaReport:
    """``Ind(‖D_0‖) >= Ind(‖D‖) - Ind(‖D_1‖) - 1`` for an invariant ideal P0."""
    P = Z.diagram.base
    P0 = list(P0)
    if not P.is_ideal(P0):
        raise InvarianceError("P0 is not an ideal")
    rest = [p for p in P.elements if p not in set(P0)]
    total = z2_index(Z.hocolim())
    ideal = z2_index(Z.restrict(P0).hocolim())
    other = z2_index(Z.restrict(rest).hocolim())
    bound = total - other - 1
    return DiagramSarkariaReport(name, ideal, total, other, bound, ideal >= bound, ideal == bound)


# --- fixed corpus ------------------------------------------------------------------

def _cross_sub(n, coords):
    """Subcomplex of ∂♦^n spanned by the given coordinates."""
    K = cross_polytope_boundary(n)
    facets = [f for f in (K.labels(s) for s in K.facets()) if f]
    keep = [tuple(v for v in f if v[0] in coords) for f in facets]
    return K.subcomplex([f for f in keep if f])


def pair_corpus():
    """``(name, L0, L)`` instances for the simplicial-pair inequality."""
    out = []
    sq = antipodal_sphere(1)
    out.append(("circle/antipodal-points", sq, _cross_sub(2, {0})))
    for n in (2, 3):
        S = antipodal_sphere(n)
        K = S.complex
        out.append((f"S{n}/empty", S, SimplicialComplex([], [])))
        out.append((f"S{n}/whole", S, K))
        out.append((f"S{n}/equator", S, _cross_sub(n + 1, set(range(n)))))
        out.append((f"S{n}/poles", S, _cross_sub(n + 1, {0})))
    S3 = antipodal_sphere(3)
    out.append(("S3/circle", S3, _cross_sub(4, {0, 1})))
    edge = ((0, 1), (1, 1))
    out.append(("S3/edge-pair", S3, S3.complex.subcomplex([edge, tuple(S3.involution[v] for v in edge)])))
    S2 = antipodal_sphere(2)
    tri = ((0, 1), (1, 1), (2, 1))
    out.append(("S2/facet-pair", S2, S2.complex.subcomplex([tri, tuple(S2.involution[v] for v in tri)])))
    hexagon = FreeZ2Complex(cycle(6), {i: (i + 3) % 6 for i in range(6)})
    out.append(("hexagon/antipodal-points", hexagon, hexagon.complex.subcomplex([(0,), (3,)])))
    J = join_free(antipodal_sphere(1), antipodal_sphere(1))
    out.append(("circle*circle/first-factor", J, J.complex.induced([(0, v) for v in sq.complex.vertices])))
    return out


def _point():
    return SimplicialComplex([["*"]])


def diagram_corpus():
    """``(name, Z2Diagram, P0)`` instances for the diagram inequality."""
    out = []
    S2 = antipodal_sphere(2)
    single = SpaceDiagram(FinitePoset(["p"]), {"p": S2.complex}, {})
    Z = Z2Diagram(single, {}, {"p": S2.involution})
    out.append(("single/empty-ideal", Z, []))
    out.append(("single/whole", Z, ["p"]))

    S1 = antipodal_sphere(1)
    ident = {v: v for v in S1.complex.vertices}
    twin = SpaceDiagram(FinitePoset(["a", "b"]), {"a": S1.complex, "b": S1.complex}, {})
    Z = Z2Diagram(twin, {"a": "b", "b": "a"}, {"a": ident, "b": ident})
    out.append(("swapped-circles/empty-ideal", Z, []))
    out.append(("swapped-circles/whole", Z, ["a", "b"]))

    P = FinitePoset(["south", "north", "top"], [("south", "top"), ("north", "top")])
    collapse = {v: "*" for v in S1.complex.vertices}
    susp = SpaceDiagram(P, {"top": S1.complex, "south": _point(), "north": _point()},
                        {("south", "top"): collapse, ("north", "top"): collapse})
    Z = Z2Diagram(susp, {"south": "north", "north": "south"},
                  {"top": S1.involution, "south": {"*": "*"}, "north": {"*": "*"}})
    out.append(("suspension/poles", Z, ["south", "north"]))
    out.append(("suspension/empty-ideal", Z, []))
    out.append(("suspension/whole", Z, ["south", "north", "top"]))

    chain = FinitePoset([0, 1], [(0, 1)])
    const = SpaceDiagram(chain, {0: S1.complex, 1: S1.complex}, {(0, 1): ident})
    Z = Z2Diagram(const, {}, {0: S1.involution, 1: S1.involution})
    out.append(("constant-chain/bottom", Z, [0]))
    return out

"""Finite simplicial complexes on labelled vertex sets."""

from __future__ import annotations

from itertools import combinations


class SimplicialComplex:
    """A downward closed family of nonempty vertex sets.

    Vertices carry arbitrary hashable labels.  The vertex order is fixed at
    construction (``vertices`` if given, otherwise the sorted labels when
    they are comparable, otherwise first appearance) and simplices are stored
    internally as increasing tuples of vertex indices.
    """

    def __init__(self, facets=(), vertices=None):
        facets = [tuple(f) for f in facets]
        if any(len(f) == 0 for f in facets):
            raise ValueError("simplices must be nonempty")
        if vertices is None:
            seen = {}
            for f in facets:
                for v in f:
                    seen.setdefault(v, None)
            labels = list(seen)
            try:
                labels = sorted(labels)
            except TypeError:
                pass
        else:
            labels = list(vertices)
            if len(set(labels)) != len(labels):
                raise ValueError("duplicate vertex labels")
        self.vertices = tuple(labels)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        tops = set()
        for f in facets:
            try:
                idx = tuple(sorted({self._index[v] for v in f}))
            except KeyError as exc:
                raise ValueError(f"facet uses unknown vertex {exc.args[0]!r}") from None
            tops.add(idx)
        # every listed vertex is at least a 0-simplex
        for i in range(len(self.vertices)):
            tops.add((i,))
        by_dim = {}
        for t in tops:
            for k in range(1, len(t) + 1):
                bucket = by_dim.setdefault(k - 1, set())
                if k == len(t):
                    bucket.add(t)
                else:
                    bucket.update(combinations(t, k))
        self._by_dim = {k: sorted(v) for k, v in by_dim.items()}
        self._lookup = None
        self._facets = None

    @classmethod
    def from_closed(cls, vertices, simplices_by_dim):
        """Build from an already downward closed family of index tuples."""
        obj = cls.__new__(cls)
        obj.vertices = tuple(vertices)
        obj._index = {v: i for i, v in enumerate(obj.vertices)}
        obj._by_dim = {k: sorted(v) for k, v in simplices_by_dim.items() if v}
        obj._lookup = None
        obj._facets = None
        return obj

    # --- basic queries -------------------------------------------------
    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices(self, k):
        """Index tuples of the k-simplices, lexicographically sorted."""
        return self._by_dim.get(k, [])

    def all_simplices(self):
        for k in sorted(self._by_dim):
            yield from self._by_dim[k]

    def f_vector(self):
        return tuple(len(self._by_dim.get(k, ())) for k in range(self.dim + 1))

    def __len__(self):
        return sum(len(v) for v in self._by_dim.values())

    def index_of(self, k):
        if self._lookup is None:
            self._lookup = {}
        if k not in self._lookup:
            self._lookup[k] = {s: i for i, s in enumerate(self.simplices(k))}
        return self._lookup[k]

    def vertex_index(self, label):
        return self._index[label]

    def labels(self, simplex):
        return tuple(self.vertices[i] for i in simplex)

    def simplex_of(self, labels):
        """Index tuple for a set of labels (raises KeyError if absent)."""
        idx = tuple(sorted(self._index[v] for v in labels))
        if idx not in self.index_of(len(idx) - 1):
            raise KeyError(f"{labels!r} is not a simplex")
        return idx

    def contains(self, labels) -> bool:
        try:
            self.simplex_of(labels)
        except KeyError:
            return False
        return True

    def facets(self):
        if self._facets is None:
            covered = set()
            for k in range(1, self.dim + 1):
                for s in self.simplices(k):
                    covered.update(combinations(s, k))
            self._facets = [s for s in self.all_simplices() if s not in covered]
        return self._facets

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(v) for k, v in self._by_dim.items())

    def reduced_euler_characteristic(self) -> int:
        return self.euler_characteristic() - 1

    def is_empty(self):
        return not self.vertices

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.label_simplices() == other.label_simplices()

    def __hash__(self):
        return hash(frozenset(self.label_simplices()))

    def label_simplices(self):
        return {frozenset(self.labels(s)) for s in self.all_simplices()}

    def __repr__(self):
        return f"SimplicialComplex(n_vertices={len(self.vertices)}, f={self.f_vector()})"

    # --- derived objects -----------------------------------------------
    def subcomplex(self, simplices_labels):
        """Closure of the given label sets, with this complex's vertex order."""
        facets = [tuple(s) for s in simplices_labels]
        for f in facets:
            self.simplex_of(f)
        used = {v for f in facets for v in f}
        return SimplicialComplex(facets, [v for v in self.vertices if v in used])

    def induced(self, keep):
        """Full subcomplex on the vertices whose labels are in ``keep``."""
        keep_idx = {self._index[v] for v in keep}
        by_dim = {}
        for k, simps in self._by_dim.items():
            by_dim[k] = [s for s in simps if all(i in keep_idx for i in s)]
        order = sorted(keep_idx)
        new = {old: new for new, old in enumerate(order)}
        by_dim = {k: [tuple(new[i] for i in s) for s in v] for k, v in by_dim.items()}
        return SimplicialComplex.from_closed([self.vertices[i] for i in order], by_dim)

    def relabel(self, mapping):
        """Copy with labels replaced by ``mapping[label]``, same vertex order."""
        new_labels = [mapping[v] for v in self.vertices]
        if len(set(new_labels)) != len(new_labels):
            raise ValueError("relabelling is not injective")
        return SimplicialComplex.from_closed(new_labels, self._by_dim)

    def chain_complex(self, subcomplex=None):
        from .chains import simplicial_chain_complex

        return simplicial_chain_complex(self, subcomplex)

    def cell_complex(self):
        from .chains import CellComplex

        return CellComplex.from_simplicial(self)

    def homology(self, coefficients="Z", reduced=False, subcomplex=None):
        return self.chain_complex(subcomplex).homology(coefficients, reduced=reduced and subcomplex is None)

    def to_json(self):
        return complex_to_json(self)


# --- constructions -------------------------------------------------------

def simplex(n, labels=None):
    """The full n-simplex."""
    labels = list(range(n + 1)) if labels is None else list(labels)
    return SimplicialComplex([labels], labels)


def simplex_boundary(n, labels=None):
    """Boundary of the n-simplex, a triangulated (n-1)-sphere."""
    labels = list(range(n + 1)) if labels is None else list(labels)
    return SimplicialComplex(list(combinations(labels, n)), labels)


def point():
    return SimplicialComplex([(0,)])


def empty_complex():
    return SimplicialComplex([], [])


def cross_polytope_boundary(n):
    """Boundary of the n-dimensional cross-polytope.

    Vertices are ``(i, s)`` for coordinate ``i`` and sign ``s = +1/-1``;
    simplices are sets using each coordinate at most once.
    """
    verts = [(i, s) for i in range(n) for s in (1, -1)]
    facets = []
    for signs in range(2 ** n):
        facets.append(tuple((i, 1 if (signs >> i) & 1 else -1) for i in range(n)))
    return SimplicialComplex(facets, verts)


def antipodal_map(n):
    return {(i, s): (i, -s) for i in range(n) for s in (1, -1)}


def cycle(m, labels=None):
    labels = list(range(m)) if labels is None else list(labels)
    return SimplicialComplex([(labels[i], labels[(i + 1) % m]) for i in range(m)], labels)


def rp2_six_vertex():
    """The 6-vertex triangulation of the real projective plane."""
    facets = [
        (1, 2, 4), (2, 3, 4), (1, 3, 5), (2, 3, 5), (1, 4, 5),
        (3, 4, 6), (1, 2, 6), (1, 3, 6), (2, 5, 6), (4, 5, 6),
    ]
    # 10 triangles, 15 edges, 6 vertices
    return SimplicialComplex(facets)


def torus_seven_vertex():
    """Möbius' 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(facets)


def join(*complexes):
    """Join of complexes with vertices relabelled ``(position, label)``.

    Simplices are unions of one simplex (or the empty set) from each factor,
    not all empty.
    """
    vertices = [(p, v) for p, K in enumerate(complexes) for v in K.vertices]
    offsets = []
    total = 0
    for K in complexes:
        offsets.append(total)
        total += len(K.vertices)
    parts = []
    for K, off in zip(complexes, offsets):
        opts = [()]
        opts += [tuple(i + off for i in s) for s in K.all_simplices()]
        parts.append(opts)
    by_dim = {}
    acc = [()]
    for opts in parts:
        acc = [a + b for a in acc for b in opts]
    for s in acc:
        if s:
            by_dim.setdefault(len(s) - 1, []).append(s)
    return SimplicialComplex.from_closed(vertices, by_dim)


def suspension(K):
    """``K * S^0`` with apex labels ``('apex', 0)`` and ``('apex', 1)``."""
    return join(K, SimplicialComplex([[("apex", 0)], [("apex", 1)]], [("apex", 0), ("apex", 1)]))


def disjoint_union(*complexes):
    vertices = [(p, v) for p, K in enumerate(complexes) for v in K.vertices]
    by_dim = {}
    off = 0
    for K in complexes:
        for k, simps in K._by_dim.items():
            by_dim.setdefault(k, []).extend(tuple(i + off for i in s) for s in simps)
        off += len(K.vertices)
    return SimplicialComplex.from_closed(vertices, by_dim)


def wedge(complexes, basepoints=None):
    """Wedge sum: disjoint union with one shared basepoint vertex.

    ``basepoints[i]`` is a vertex label of ``complexes[i]`` (default: the
    first vertex).  Empty complexes contribute nothing.
    """
    shared = "*"
    vertices = [shared]
    by_dim = {}
    for p, K in enumerate(complexes):
        if K.is_empty():
            continue
        base = K.vertices[0] if basepoints is None else basepoints[p]
        mapping = {}
        for v in K.vertices:
            if v == base:
                mapping[K.vertex_index(v)] = 0
            else:
                mapping[K.vertex_index(v)] = len(vertices)
                vertices.append((p, v))
        for k, simps in K._by_dim.items():
            by_dim.setdefault(k, set()).update(tuple(sorted(mapping[i] for i in s)) for s in simps)
    return SimplicialComplex.from_closed(vertices, by_dim)


def order_complex_from_up(labels, up):
    """Order complex of a poset given by strict upper sets.

    ``labels`` must be listed in a linear extension and ``up[i]`` holds the
    indices ``j > i`` with ``labels[i] < labels[j]``.  Chains are enumerated
    once each, so the cost is linear in the output.
    """
    by_dim = {}
    stack = [(i,) for i in range(len(labels))]
    while stack:
        chain = stack.pop()
        by_dim.setdefault(len(chain) - 1, []).append(chain)
        for j in up[chain[-1]]:
            stack.append(chain + (j,))
    return SimplicialComplex.from_closed(labels, by_dim)


def face_poset_up(K):
    """Simplices of K in (dimension, lexicographic) order with strict upper sets."""
    order = list(K.all_simplices())
    pos = {s: i for i, s in enumerate(order)}
    up = [[] for _ in order]
    for t in order:
        ti = pos[t]
        for k in range(1, len(t)):
            for f in combinations(t, k):
                up[pos[f]].append(ti)
    for lst in up:
        lst.sort()
    return order, up


def barycentric_subdivision(K):
    """Order complex of the face poset of K.

    New vertices are labelled by the label tuples of the old simplices and
    ordered by dimension first.
    """
    order, up = face_poset_up(K)
    labels = [K.labels(s) for s in order]
    return order_complex_from_up(labels, up)


def complex_to_json(K):
    verts = list(K.vertices)
    return {
        "vertices": [_json_label(v) for v in verts],
        "facets": [[_json_label(v) for v in K.labels(f)] for f in sorted(K.facets())],
    }


def complex_from_json(data):
    def lab(x):
        return tuple(lab(y) for y in x) if isinstance(x, list) else x

    vertices = [lab(v) for v in data["vertices"]]
    facets = [[lab(v) for v in f] for f in data["facets"]]
    return SimplicialComplex(facets, vertices)


def _json_label(v):
    if isinstance(v, (tuple, list, frozenset)):
        return [_json_label(x) for x in v]
    return v

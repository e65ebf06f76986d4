"""Up operator, one-point constructions, and graph-derived complexes."""

from itertools import combinations

from .core import (
    CapacityError,
    Complex,
    DomainError,
    SetFamily,
    bits,
    is_paving,
    k_submasks,
    mask_of,
)
from .lattice import MooreFamily, flats, j_complex


def up(C):
    """Faces I union {p} over all faces I and points p (plus H itself)."""
    gens = set(C.facets)
    for f in C.facets:
        for p in range(C.n):
            gens.add(f | (1 << p))
    return Complex(C.n, gens, C.labels)


def up_scan(C):
    """Second route to the up operator: complement characterization.

    A nonempty X is missing from H-up exactly when every X minus a point
    is missing from H. Scans all subsets, so small n only.
    """
    if C.n > 20:
        raise CapacityError(f"scan over 2^{C.n} subsets is out of range")
    faces = C.faces
    out = [0]
    for X in range(1, 1 << C.n):
        if any((X ^ (1 << x)) in faces for x in bits(X)):
            out.append(X)
    return Complex(C.n, out, C.labels)


def up_iter(C, m):
    for _ in range(m):
        C = up(C)
    return C


def up_iter_paving(C, m):
    """Iterated up of a paving complex in one step.

    Keeps everything of size <= d+m, plus the (d+m+1)-sets containing at
    least one (d+1)-face of H.
    """
    d = is_paving(C)
    if d is None:
        raise DomainError("closed form for iterated up requires a paving complex")
    if m < 0:
        raise DomainError("m must be >= 0")
    full = C.full_mask
    top = [f for f in C.faces if f.bit_count() == d + 1]
    k = d + m + 1
    gens = set(k_submasks(full, min(k - 1, C.n)))
    if k <= C.n:
        for X in k_submasks(full, k):
            if any(t & ~X == 0 for t in top):
                gens.add(X)
    return Complex(C.n, gens, C.labels)


def _fresh_label(C, label):
    if label is None:
        ints = [l for l in C.labels if isinstance(l, int)]
        label = (max(ints) + 1) if len(ints) == C.n else f"p{C.n}"
    if label in C.labels:
        raise DomainError(f"label {label!r} already used")
    return label


def plus_point(C, label=None):
    """Add an isolated point: faces unchanged."""
    label = _fresh_label(C, label)
    return Complex(C.n + 1, C.facets, C.labels + (label,))


def oplus_point(C, label=None):
    """Cone: every face may pick up the new point."""
    label = _fresh_label(C, label)
    p = 1 << C.n
    gens = {f | p for f in C.facets}
    return Complex(C.n + 1, gens, C.labels + (label,))


def family_boxplus(fam):
    """Replace V by V plus the new point, and adjoin the singleton new point."""
    full = (1 << fam.n) - 1
    p = 1 << fam.n
    members = {m for m in fam.members if m != full}
    members.add(full | p)
    members.add(p)
    return MooreFamily(fam.n + 1, members, validate=False)


def boxplus_point(C, label=None):
    """Transversal complex of the flats with V inflated by a new point.

    Cross-checked against the direct face description: old faces, the new
    point alone or with one old vertex, and I plus the new point whenever
    the closure of I is proper.
    """
    from .lattice import is_boolean_representable

    label = _fresh_label(C, label)
    ok, _ = is_boolean_representable(C)
    if not ok:
        raise DomainError("boxplus_point requires a boolean representable complex")
    fl = flats(C)
    out = j_complex(family_boxplus(fl), C.labels + (label,))

    p = 1 << C.n
    direct = set(C.faces)
    direct.add(p)
    for v in range(C.n):
        direct.add((1 << v) | p)
    full = C.full_mask
    for I in C.faces:
        if fl.closure(I) != full:
            direct.add(I | p)
    assert out.faces == frozenset(direct)
    return out


def b_d(n, L, d, labels=None):
    """Everything of size <= d, plus the (d+1)-sets meeting L in d points."""
    full = (1 << n) - 1
    if L & ~full:
        raise DomainError("L uses vertices outside 0..n-1")
    if not 2 <= d <= L.bit_count() or L == full:
        raise DomainError("b_d requires 2 <= d <= |L| < |V|")
    gens = set(k_submasks(full, d))
    for X in k_submasks(full, d + 1):
        if (X & L).bit_count() == d:
            gens.add(X)
    return Complex(n, gens, labels)


def graph_complex(n, edges, labels=None):
    """A graph as a dim <= 1 complex: singletons plus the given edges."""
    for e in edges:
        if e.bit_count() != 2:
            raise DomainError("edges must be 2-element masks")
    return Complex(n, set(edges), labels)


def is_graphic_boolean(C):
    """Whether H is the up of a graph; returns (ok, edge family).

    The only candidate edge set is the pairs all of whose one-point
    extensions are faces.
    """
    full = C.full_mask
    edges = set()
    for e in k_submasks(full, 2):
        if all(C.has(e | (1 << p)) for p in bits(full & ~e)):
            edges.add(e)
    G = graph_complex(C.n, edges, C.labels)
    ok = up(G) == C
    return ok, (SetFamily(C.n, edges) if ok else None)


class GraphClass:
    """A hereditary graph property used to carve complexes out of a graph."""

    __slots__ = ("kind", "bound")

    def __init__(self, kind, bound=None):
        if kind not in ("edgeless", "forests", "triangle_free", "no_cycle_upto"):
            raise DomainError(f"unknown graph class {kind!r}")
        if kind == "no_cycle_upto":
            if bound is None or bound < 3:
                raise DomainError("cycle bound must be >= 3")
        elif bound is not None:
            raise DomainError(f"{kind} takes no bound")
        self.kind = kind
        self.bound = bound

    def allows(self, W, adj):
        """Does the induced subgraph on W belong to the class?"""
        verts = list(bits(W))
        deg_edges = sum((adj[v] & W).bit_count() for v in verts) // 2
        if self.kind == "edgeless":
            return deg_edges == 0
        if self.kind == "forests":
            return deg_edges == len(verts) - _component_count(W, adj)
        if self.kind == "triangle_free":
            return not _has_short_cycle(W, adj, 3)
        return not _has_short_cycle(W, adj, self.bound)


def _component_count(W, adj):
    count = 0
    seen = 0
    for s in bits(W):
        if seen >> s & 1:
            continue
        count += 1
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v] & W
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
    return count


def _has_short_cycle(W, adj, bound):
    """Any cycle of length <= bound in the induced subgraph on W."""
    for s in bits(W):
        # BFS from s; a cross or back edge at depth sums <= bound closes one
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        while queue:
            nxt_queue = []
            for v in queue:
                for w in bits(adj[v] & W):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt_queue.append(w)
                    elif w != parent[v]:
                        cyc = dist[v] + dist[w] + 1
                        if cyc <= bound:
                            return True
            queue = nxt_queue
    return False


def class_complex(n, edges, graph_class, labels=None):
    """Faces are the vertex sets whose induced subgraph lies in the class."""
    if n > 20:
        raise CapacityError(f"scan over 2^{n} subsets is out of range")
    adj = [0] * n
    for e in edges:
        if e.bit_count() != 2:
            raise DomainError("edges must be 2-element masks")
        u, v = tuple(bits(e))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    allowed = {W for W in range(1 << n) if graph_class.allows(W, adj)}
    gens = [
        W
        for W in allowed
        if all(W >> v & 1 or (W | (1 << v)) not in allowed for v in range(n))
    ]
    return Complex(n, gens, labels)


def anticliques_of_size(n, edges, k):
    """All k-subsets inducing no edge."""
    adj = [0] * n
    for e in edges:
        u, v = tuple(bits(e))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    out = []
    for X in k_submasks((1 << n) - 1, k):
        if all(adj[v] & X == 0 for v in bits(X)):
            out.append(X)
    return out

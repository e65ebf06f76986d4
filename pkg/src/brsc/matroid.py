"""Matroid and near-matroid structure.

Exchange checks, the flat-rank map rho, representations of truncations, the
pure-complex verdicts, matroid extension search one dimension up, shellability,
and the line complex H* for paving complexes.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .core import (
    CapacityError,
    Complex,
    DomainError,
    SetFamily,
    bits,
    compress,
    is_paving,
    k_submasks,
    mask_of,
    pure_part,
    restriction,
    truncate,
)
from .lattice import MooreFamily, flats, is_boolean_representable, j_complex
from .t_operator import is_tbrsc, jt_complex


def is_matroid(C):
    """Exchange check over all face pairs with |I| = |J| + 1.

    Returns (ok, pair) where pair = (I, J) admits no exchange point when the
    check fails, None otherwise.
    """
    faces = C.faces
    fset = set(faces)
    full = C.full_mask
    # good[J] = points p outside J keeping J + p a face
    good = {}
    for J in faces:
        g = 0
        for p in bits(full & ~J):
            if J | (1 << p) in fset:
                g |= 1 << p
        good[J] = g
    by_size = defaultdict(list)
    for f in faces:
        by_size[f.bit_count()].append(f)
    for k in sorted(by_size):
        for I in by_size.get(k + 1, ()):
            for J in by_size[k]:
                if I & ~J & good[J] == 0:
                    return False, (I, J)
    return True, None


def _closure_size_consistent(C, include_full):
    """Faces sharing a closure must share cardinality; closures equal to V
    are exempt unless include_full is set.  Returns (ok, face pair)."""
    fl = flats(C)
    full = C.full_mask
    seen = {}
    for X in sorted(C.faces, key=int.bit_count):
        F = fl.closure(X)
        if F == full and not include_full:
            continue
        if F in seen:
            if seen[F].bit_count() != X.bit_count():
                return False, (seen[F], X)
        else:
            seen[F] = X
    return True, None


def is_near_matroid(C):
    """Whether closure-equal faces always share cardinality, proper closures
    only.  Returns (ok, violating face pair)."""
    return _closure_size_consistent(C, include_full=False)


@dataclass(frozen=True)
class RhoMap:
    """Size of any face whose closure is the given proper flat."""

    values: Dict[int, int]

    def __getitem__(self, F):
        if F not in self.values:
            raise DomainError("rho is defined on the proper flats only")
        return self.values[F]

    def __contains__(self, F):
        return F in self.values

    def items(self):
        return self.values.items()


def rho(C):
    """The flat-rank map of a near-matroid: F -> |X| for any face X with
    closure F, over the flats other than V.

    Totality and strict monotonicity along flat chains are asserted.
    """
    ok, pair = is_near_matroid(C)
    if not ok:
        raise DomainError(f"rho needs a near-matroid; faces {pair} break it")
    fl = flats(C)
    full = C.full_mask
    vals = {}
    for X in C.faces:
        F = fl.closure(X)
        if F != full:
            vals[F] = X.bit_count()
    for F in fl:
        # every proper flat arises as the closure of a face
        assert F == full or F in vals
    for F in vals:
        for G in vals:
            if F != G and F & ~G == 0:
                assert vals[F] < vals[G]
    return RhoMap(vals)


def _chain_flats(members, k):
    """Members lying on some chain with k+1 members, by longest-chain DP."""
    members = sorted(members, key=int.bit_count)
    up = {}
    for F in members:
        up[F] = 1 + max(
            (up[G] for G in members if G != F and G & ~F == 0), default=0
        )
    down = {}
    for F in reversed(members):
        down[F] = 1 + max(
            (down[G] for G in members if G != F and F & ~G == 0), default=0
        )
    return {F for F in members if up[F] + down[F] - 1 == k + 1}


def truncation_is_brsc_for_near_matroid(C, k):
    """Whether the rho-calibrated flat families represent H_k and pure(H_k).

    F_k keeps the flats of rank below k (plus V); F'_k keeps those lying on
    maximal chains of F_k.  The verdict is the conjunction of J(F_k) == H_k
    and J(F'_k) == pure(H_k).
    """
    okbr, _ = is_boolean_representable(C)
    if not okbr:
        raise DomainError("a boolean representable near-matroid is required")
    if not 1 <= k <= C.dim + 1:
        raise DomainError("truncation level must be between 1 and dim + 1")
    rm = rho(C)
    full = C.full_mask
    Fk = {F for F, r in rm.items() if r < k} | {full}
    fam = MooreFamily(C.n, Fk)
    HK = truncate(C, k)
    if j_complex(fam) != HK:
        return False
    fam2 = MooreFamily(C.n, _chain_flats(Fk, k))
    JP = j_complex(fam2)
    top = [f for f in HK.facets if f.bit_count() == HK.dim + 1]
    covered = 0
    for f in top:
        covered |= f
    for f in JP.facets:
        if f.bit_count() > 1 and f & ~covered:
            return False
    return restriction(JP, covered) == pure_part(HK)


def check_pure_conjecture(C, k):
    """BR and TBRSC verdicts for the pure part of the k-truncation."""
    okbr, _ = is_boolean_representable(C)
    if not okbr:
        raise DomainError("the pure-complex check expects a BRSC")
    P = pure_part(truncate(C, k))
    brsc, _ = is_boolean_representable(P)
    return {"pure_k_is_brsc": brsc, "pure_k_is_tbrsc": is_tbrsc(P)}


def matroid_extension_candidate(C):
    """J(T(H)) together with a proper-matroid-extension verdict.

    Codimension 1 is decided by inspecting the candidate; codimension 0
    admits no proper extension at all; higher codimension stays open.
    """
    ok, _ = is_matroid(C)
    if not ok:
        raise DomainError("the extension candidate is defined for matroids")
    JT = jt_complex(C)
    cd = JT.dim - C.dim
    if cd == 0:
        return JT, "no_extension"
    if cd >= 2:
        return JT, "inconclusive"
    okm, _ = is_matroid(JT)
    if okm:
        assert truncate(JT, C.dim + 1) == C
        return JT, "unique_extension"
    return JT, "no_extension"


@dataclass
class ExtensionSearch:
    """Outcome of the one-dimension-up matroid extension search."""

    extensions: List[Complex]
    complete: bool
    nodes: int


_IN, _OUT = 1, 2


def search_matroid_extensions(C, budget=10**8):
    """All matroids one dimension up whose truncation gives C back.

    An extension is determined by the set S of (d+2)-subsets made
    independent; each must have all its (d+1)-subsets in H, and the exchange
    property reduces to clauses "X in S and J a top face not inside X force
    J + i in S for some i in X - J".  DFS over in/out decisions with unit
    propagation; every assignment costs one node of budget, and exhausting
    the budget is reported on the result, never silently.
    """
    ok, _ = is_matroid(C)
    if not ok:
        raise DomainError("the extension search starts from a matroid")
    n = C.n
    d1 = C.dim + 1
    fset = set(C.faces)
    tops = sorted(C.faces_of_size(d1))
    cands = []
    for comb in combinations(range(n), d1 + 1):
        X = mask_of(comb)
        if all(s in fset for s in k_submasks(X, d1)):
            cands.append(X)

    index = {X: ci for ci, X in enumerate(cands)}
    raw = []
    for X in cands:
        cls = []
        for J in tops:
            if J & ~X == 0:
                continue
            cls.append(
                [index[J | (1 << i)] for i in bits(X & ~J) if J | (1 << i) in index]
            )
        raw.append(cls)

    # a candidate owning a clause with no possible options can never be chosen
    possible = [True] * len(cands)
    changed = True
    while changed:
        changed = False
        for ci, cls in enumerate(raw):
            if possible[ci] and any(
                all(not possible[o] for o in opts) for opts in cls
            ):
                possible[ci] = False
                changed = True

    live = [ci for ci in range(len(cands)) if possible[ci]]
    remap = {ci: t for t, ci in enumerate(live)}
    masks = [cands[ci] for ci in live]
    M = len(masks)

    clauses = []
    clauses_of = [[] for _ in range(M)]
    occurs = [[] for _ in range(M)]
    for t, ci in enumerate(live):
        for opts in raw[ci]:
            lopts = tuple(remap[o] for o in opts if possible[o])
            k = len(clauses)
            clauses.append((t, lopts))
            clauses_of[t].append(k)
            for o in lopts:
                occurs[o].append(k)

    # a matroid extension is pure: every top face of C needs a chosen superset
    cover_sets = []
    cover_occ = [[] for _ in range(M)]
    for J in tops:
        opts = tuple(t for t in range(M) if J & ~masks[t] == 0)
        if not opts:
            return ExtensionSearch([], True, 0)
        j = len(cover_sets)
        cover_sets.append(opts)
        for o in opts:
            cover_occ[o].append(j)

    state = [0] * M
    trail = []
    nodes = 0
    out_of_budget = False
    solutions = []

    def recheck_clause(k, queue):
        owner, opts = clauses[k]
        free = None
        cnt = 0
        for o in opts:
            s = state[o]
            if s == _IN:
                return True
            if s == 0:
                cnt += 1
                free = o
        if cnt == 0:
            if state[owner] == _IN:
                return False
            queue.append((owner, _OUT))
            return True
        if cnt == 1 and state[owner] == _IN:
            queue.append((free, _IN))
        return True

    def recheck_cover(j, queue):
        free = None
        cnt = 0
        for o in cover_sets[j]:
            s = state[o]
            if s == _IN:
                return True
            if s == 0:
                cnt += 1
                free = o
        if cnt == 0:
            return False
        if cnt == 1:
            queue.append((free, _IN))
        return True

    def assign(t, val):
        nonlocal nodes
        queue = [(t, val)]
        while queue:
            v, val = queue.pop()
            if state[v]:
                if state[v] != val:
                    return False
                continue
            nodes += 1
            state[v] = val
            trail.append(v)
            if val == _IN:
                for k in clauses_of[v]:
                    if not recheck_clause(k, queue):
                        return False
            else:
                for k in occurs[v]:
                    if not recheck_clause(k, queue):
                        return False
                for j in cover_occ[v]:
                    if not recheck_cover(j, queue):
                        return False
        return True

    def undo(mark):
        while len(trail) > mark:
            state[trail.pop()] = 0

    def dfs():
        nonlocal out_of_budget
        if nodes >= budget:
            out_of_budget = True
            return
        t = next((i for i in range(M) if state[i] == 0), None)
        if t is None:
            chosen = {masks[i] for i in range(M) if state[i] == _IN}
            if chosen:
                ext = Complex(C.n, set(C.facets) | chosen, C.labels)
                okx, _ = is_matroid(ext)
                assert okx and truncate(ext, d1) == C
                solutions.append(ext)
            return
        for val in (_IN, _OUT):
            mark = len(trail)
            if assign(t, val):
                dfs()
            undo(mark)
            if out_of_budget:
                return

    dfs()
    return ExtensionSearch(solutions, not out_of_budget, nodes)


@dataclass(frozen=True)
class Shelling:
    """A facet order with, per step, the facets of the intersection with the
    union of the earlier ones."""

    order: Tuple[int, ...]
    certificates: Tuple[Tuple[int, ...], ...]


def _step_certificate(placed, B):
    """Maximal intersections of B with the placed facets when they are all of
    size |B| - 1, else None."""
    inters = {B & A for A in placed}
    maxi = [x for x in inters if not any(y != x and x & ~y == 0 for y in inters)]
    want = B.bit_count() - 1
    if all(x.bit_count() == want for x in maxi):
        return tuple(sorted(maxi))
    return None


def shelling_certificates(C, order):
    """Certificates for a given facet order, or None when it fails the
    step-purity condition."""
    if sorted(order) != sorted(C.facets):
        raise DomainError("the order must enumerate the facets exactly once")
    placed = []
    certs = []
    for B in order:
        cert = _step_certificate(placed, B)
        if cert is None:
            return None
        certs.append(cert)
        placed.append(B)
    return tuple(certs)


def is_shellable(C):
    """Search for a shelling and return it, or None.

    Only facet orders of nonincreasing dimension are explored; a shellable
    complex always has one of that shape.
    """
    facets = sorted(C.facets)
    if len(facets) > 35:
        raise CapacityError("shelling search supported for <= 35 facets")
    failed = set()

    def rec(placed, remaining, order, certs):
        if not remaining:
            return Shelling(tuple(order), tuple(certs))
        key = frozenset(remaining)
        if key in failed:
            return None
        top = max(f.bit_count() for f in remaining)
        for B in sorted(remaining):
            if B.bit_count() != top:
                continue
            cert = _step_certificate(placed, B)
            if cert is None:
                continue
            out = rec(
                placed + [B], remaining - {B}, order + [B], certs + [cert]
            )
            if out is not None:
                return out
        failed.add(key)
        return None

    return rec([], set(facets), [], [])


def _bpav_dim(C):
    d = is_paving(C)
    if d is None or d < 2:
        raise DomainError("a paving complex of dimension >= 2 is required")
    okbr, _ = is_boolean_representable(C)
    if not okbr:
        raise DomainError("a boolean representable paving complex is required")
    return d


def lines(C):
    """Flats F with d <= |F| < |V|, as a SetFamily.

    The flat structure of the input decomposes into the small sets, the
    lines, and V; this and the pairwise-intersection bound are asserted.
    """
    d = _bpav_dim(C)
    fl = set(flats(C).members)
    out = {F for F in fl if d <= F.bit_count() < C.n}
    small = {m for m in range(1 << C.n) if m.bit_count() <= d - 1}
    assert fl == small | out | {C.full_mask}
    for L in out:
        for L2 in out:
            if L != L2:
                assert (L & L2).bit_count() <= d - 1
    return SetFamily(C.n, out)


def l_mu(C, L):
    """Faces I + p with I a d-subset of the line L and p outside L."""
    d = _bpav_dim(C)
    if L not in lines(C):
        raise DomainError("L must be a line")
    out = set()
    for I in k_submasks(L, d):
        for p in bits(C.full_mask & ~L):
            out.add(I | (1 << p))
    return SetFamily(C.n, out)


def h_star(C):
    """The line complex: vertex set the union of the lines, faces the
    P_{<=d} slices of the individual lines.

    The top facets of the input are asserted to decompose through the lines.
    """
    d = _bpav_dim(C)
    ls = lines(C)
    top = {f for f in C.facets if f.bit_count() == d + 1}
    mu = set()
    for L in ls:
        mu.update(l_mu(C, L).members)
    assert top == mu
    vstar = 0
    gens = set()
    for L in ls:
        vstar |= L
        if L.bit_count() == d:
            gens.add(L)
        else:
            gens.update(k_submasks(L, d))
    labels = tuple(C.labels[i] for i in bits(vstar))
    return Complex(vstar.bit_count(), {compress(g, vstar) for g in gens}, labels)

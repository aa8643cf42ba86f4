"""Pure simplicial complexes on point configurations.

A :class:`Triangulation` stores its facets as a read-only integer array with
sorted rows in lexicographic order, so facet ``0`` of every connected component
of the dual graph is the lexicographically smallest one there. That fact fixes
the black/white convention used by :func:`bipartition`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .errors import (
    DegenerateSimplex,
    DisconnectedDualGraph,
    NotBipartite,
    NotFoldable,
    NotPure,
    RidgeSharedByThree,
)
from .lattice import PointConfiguration
from .lifting import TwoLevelLifting
from .linalg import batch_det

BLACK, WHITE = 0, 1


class Triangulation:
    """A pure simplicial complex whose facets are full-dimensional simplices.

    Parameters
    ----------
    config:
        The point configuration the vertex indices refer to.
    facets:
        Iterable of vertex-index collections, all of size ``config.dim + 1``.
    coloring:
        Optional colour in ``range(dim + 1)`` for every point of ``config``.
    lifting:
        Optional :class:`TwoLevelLifting` (or a plain sequence of heights).
    """

    def __init__(self, config: PointConfiguration, facets, coloring=None, lifting=None):
        self.config = config
        k = config.dim + 1
        if isinstance(facets, np.ndarray) and facets.ndim == 2:
            arr = facets.astype(np.int64, copy=True)
            if arr.shape[1] != k and arr.size:
                raise ValueError(f"facets must have {k} vertices in dimension {config.dim}")
        else:
            rows = [tuple(sorted(int(v) for v in f)) for f in facets]
            sizes = {len(r) for r in rows}
            if len(sizes) > 1:
                raise NotPure(f"facets of several sizes: {sorted(sizes)}")
            if rows and len(rows[0]) != k:
                raise ValueError(f"facets must have {k} vertices in dimension {config.dim}")
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), k)
        arr.sort(axis=1)
        if arr.size:
            if arr.min() < 0 or arr.max() >= len(config):
                raise IndexError("facet vertex index out of range")
            if k > 1 and (arr[:, 1:] == arr[:, :-1]).any():
                raise DegenerateSimplex("facet with a repeated vertex")
            arr = np.unique(arr, axis=0)
        arr.setflags(write=False)
        self.facets = arr
        if coloring is not None:
            coloring = tuple(int(c) for c in coloring)
            if len(coloring) != len(config):
                raise ValueError("coloring must assign a colour to every point")
        self.coloring = coloring
        if lifting is not None and not isinstance(lifting, TwoLevelLifting):
            lifting = TwoLevelLifting(lifting)
        if lifting is not None and len(lifting) != len(config):
            raise ValueError("lifting must give a height to every point")
        self.lifting = lifting

    @property
    def dim(self) -> int:
        return self.config.dim

    def __len__(self):
        return len(self.facets)

    def __repr__(self):
        return f"Triangulation(dim={self.dim}, points={len(self.config)}, facets={len(self)})"

    def facet_list(self) -> list[tuple[int, ...]]:
        return [tuple(r) for r in self.facets.tolist()]

    def with_(self, **changes) -> "Triangulation":
        """Copy with some of ``coloring`` / ``lifting`` replaced (facets are shared)."""
        out = Triangulation.__new__(Triangulation)
        out.config = self.config
        out.facets = self.facets
        out.coloring = changes.get("coloring", self.coloring)
        lifting = changes.get("lifting", self.lifting)
        if lifting is not None and not isinstance(lifting, TwoLevelLifting):
            lifting = TwoLevelLifting(lifting)
        out.lifting = lifting
        for key in ("dual_graph", "volumes"):
            if key in self.__dict__:
                out.__dict__[key] = self.__dict__[key]
        return out

    @cached_property
    def volumes(self) -> np.ndarray:
        """Normalized volume of every facet."""
        if not len(self):
            return np.zeros(0, dtype=np.int64)
        h = self.config.homogeneous
        out = []
        for start in range(0, len(self), 20000):
            chunk = self.facets[start:start + 20000]
            out.append(np.abs(batch_det(h[chunk])))
        vols = np.concatenate(out)
        if (vols == 0).any():
            bad = int(np.nonzero(vols == 0)[0][0])
            raise DegenerateSimplex(f"facet {tuple(self.facets[bad])} is degenerate")
        return vols

    @cached_property
    def dual_graph(self) -> "DualGraph":
        return dual_graph(self)

    def used_vertices(self) -> np.ndarray:
        return np.unique(self.facets)


@dataclass(frozen=True)
class DualGraph:
    """Facet adjacency across shared ridges.

    ``edges[e] = (a, b)`` with ``a < b``; ``opposite[e] = (u, w)`` where ``u`` is
    the vertex of facet ``a`` missing from ``b`` and ``w`` the vertex of ``b``
    missing from ``a``; ``ridges[e]`` is the shared ridge.
    """

    n_nodes: int
    edges: np.ndarray
    opposite: np.ndarray
    ridges: np.ndarray

    def adjacency(self):
        n = self.n_nodes
        e = self.edges
        data = np.ones(len(e), dtype=np.int8)
        return coo_matrix((data, (e[:, 0], e[:, 1])), shape=(n, n)).tocsr()

    def neighbours(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for a, b in self.edges.tolist():
            nbrs[a].append(b)
            nbrs[b].append(a)
        return nbrs

    @cached_property
    def components(self) -> np.ndarray:
        if self.n_nodes == 0:
            return np.zeros(0, dtype=np.int64)
        _, labels = connected_components(self.adjacency(), directed=False)
        return labels

    @property
    def n_components(self) -> int:
        return int(self.components.max()) + 1 if self.n_nodes else 0


def dual_graph(K: Triangulation) -> DualGraph:
    """Dual graph of ``K`` found by sorting all ridges."""
    facets = K.facets
    n, k = facets.shape if facets.ndim == 2 else (0, 0)
    if n == 0 or k < 2:
        empty = np.zeros((0, 2), dtype=np.int64)
        return DualGraph(n, empty, empty.copy(), np.zeros((0, max(k - 1, 0)), dtype=np.int64))
    ridges = np.concatenate([np.delete(facets, r, axis=1) for r in range(k)])
    owner = np.tile(np.arange(n), k)
    opp = np.concatenate([facets[:, r] for r in range(k)])
    order = np.lexsort(ridges.T[::-1])
    ridges, owner, opp = ridges[order], owner[order], opp[order]
    same = (ridges[1:] == ridges[:-1]).all(axis=1)
    triple = same[1:] & same[:-1]
    if triple.any():
        i = int(np.nonzero(triple)[0][0])
        raise RidgeSharedByThree(ridges[i].tolist(), owner[i:i + 3].tolist())
    idx = np.nonzero(same)[0]
    a, b = owner[idx], owner[idx + 1]
    oa, ob = opp[idx], opp[idx + 1]
    swap = a > b
    edges = np.stack([np.where(swap, b, a), np.where(swap, a, b)], axis=1)
    opposite = np.stack([np.where(swap, ob, oa), np.where(swap, oa, ob)], axis=1)
    return DualGraph(n, edges, opposite, ridges[idx])


def _bfs(graph: DualGraph, roots=None):
    """BFS order and parent of every node, one tree per component."""
    labels = graph.components
    n_comp = graph.n_components
    chosen = {}
    if roots is not None:
        for r in roots:
            chosen.setdefault(int(labels[r]), int(r))
    adj = graph.adjacency()
    order_all: list[int] = []
    parent = np.full(graph.n_nodes, -1, dtype=np.int64)
    first = np.full(n_comp, -1, dtype=np.int64)
    for node in range(graph.n_nodes - 1, -1, -1):
        first[labels[node]] = node
    for comp in range(n_comp):
        root = chosen.get(comp, int(first[comp]))
        order, pred = breadth_first_order(adj, root, directed=False, return_predecessors=True)
        order_all.extend(order.tolist())
        nodes = order[1:]
        parent[nodes] = pred[nodes]
    return order_all, parent


@dataclass(frozen=True)
class Bipartition:
    """``color[f]`` is ``BLACK`` (0) or ``WHITE`` (1) for every facet ``f``."""

    color: np.ndarray

    def black(self) -> np.ndarray:
        return np.nonzero(self.color == BLACK)[0]

    def white(self) -> np.ndarray:
        return np.nonzero(self.color == WHITE)[0]


def _tree_path(parent, node):
    path = [node]
    while parent[path[-1]] >= 0:
        path.append(int(parent[path[-1]]))
    return path


def bipartition(K: Triangulation, roots=None) -> Bipartition:
    """Two-colour the dual graph by breadth-first search.

    By default the lexicographically smallest facet of each component is black.
    ``roots`` may name other start facets (one per component); the colouring is
    then normalised back to the default convention, so the result never depends
    on the traversal.
    """
    graph = K.dual_graph
    order, parent = _bfs(graph, roots)
    parity = np.zeros(graph.n_nodes, dtype=np.int8)
    par = parent.tolist()
    pl = parity.tolist()
    for node in order:
        p = par[node]
        if p >= 0:
            pl[node] = pl[p] ^ 1
    parity = np.array(pl, dtype=np.int8)
    e = graph.edges
    bad = np.nonzero(parity[e[:, 0]] == parity[e[:, 1]])[0] if len(e) else np.zeros(0, int)
    if bad.size:
        a, b = (int(x) for x in e[bad[0]])
        pa, pb = _tree_path(parent, a), _tree_path(parent, b)
        common = set(pa) & set(pb)
        pa = pa[: next(i for i, x in enumerate(pa) if x in common) + 1]
        pb = pb[: next(i for i, x in enumerate(pb) if x in common)]
        raise NotBipartite(pa + pb[::-1])
    labels = graph.components
    if graph.n_nodes:
        firsts = np.full(graph.n_components, -1, dtype=np.int64)
        for node in range(graph.n_nodes - 1, -1, -1):
            firsts[labels[node]] = node
        flip = parity[firsts][labels]
        parity = parity ^ flip
    return Bipartition(parity)


def odd_mask(K: Triangulation) -> np.ndarray:
    return (K.volumes % 2).astype(bool)


def signed_signature(K: Triangulation, subset=None, roots=None) -> int:
    """``#odd black - #odd white`` over the facets selected by ``subset``.

    ``subset`` is a predicate on facet vertex tuples, a boolean mask, or an
    iterable of facet indices; ``None`` selects every facet.
    """
    colors = bipartition(K, roots).color
    odd = odd_mask(K)
    if subset is None:
        mask = np.ones(len(K), dtype=bool)
    elif callable(subset):
        mask = np.array([bool(subset(f)) for f in K.facet_list()], dtype=bool)
    else:
        sel = np.asarray(list(subset) if not isinstance(subset, np.ndarray) else subset)
        if sel.dtype == bool:
            mask = sel
        else:
            mask = np.zeros(len(K), dtype=bool)
            mask[sel.astype(np.int64)] = True
    mask = mask & odd
    return int((mask & (colors == BLACK)).sum()) - int((mask & (colors == WHITE)).sum())


def signature(K: Triangulation, roots=None) -> int:
    """``|#odd black - #odd white|``; only defined for a connected dual graph."""
    if K.dual_graph.n_components > 1:
        raise DisconnectedDualGraph(
            f"dual graph has {K.dual_graph.n_components} components; signature undefined"
        )
    return abs(signed_signature(K, roots=roots))


def fold(K: Triangulation) -> tuple[int, ...]:
    """Colour the vertices with ``dim + 1`` colours by propagation through the dual graph.

    Each component starts at its lexicographically smallest facet, whose
    vertices take colours ``0..dim`` in index order (vertices already coloured
    by an earlier component keep their colour). Crossing a ridge forces the new
    vertex to take the one colour missing from the ridge. Points not used by any
    facet get colour 0.
    """
    graph = K.dual_graph
    m = K.dim
    order, parent = _bfs(graph)
    facets = K.facet_list()
    color: list[int | None] = [None] * len(K.config)
    full = set(range(m + 1))
    par = parent.tolist()
    for node in order:
        f = facets[node]
        p = par[node]
        if p < 0:
            taken = {color[v] for v in f if color[v] is not None}
            free = iter(sorted(full - taken))
            for v in f:
                if color[v] is None:
                    color[v] = next(free, None)
            if len({color[v] for v in f}) != m + 1 or None in (color[v] for v in f):
                raise NotFoldable((node, node), f[0], [color[v] for v in f if color[v] is not None])
            continue
        pf = set(facets[p])
        (new,) = [v for v in f if v not in pf]
        ridge_colors = {color[v] for v in f if v != new}
        (missing,) = full - ridge_colors
        if color[new] is None:
            color[new] = missing
        elif color[new] != missing:
            raise NotFoldable((p, node), new, (color[new], missing))
    out = tuple(0 if c is None else c for c in color)
    if not check_coloring(K, out):
        raise NotFoldable((-1, -1), -1, ())
    return out


def check_coloring(K: Triangulation, coloring) -> bool:
    """Whether every facet sees ``dim + 1`` distinct colours in ``range(dim + 1)``."""
    if coloring is None:
        return False
    col = np.asarray(coloring, dtype=np.int64)
    if not len(K):
        return True
    c = np.sort(col[K.facets], axis=1)
    return bool((c == np.arange(K.dim + 1)).all())


def is_foldable(K: Triangulation) -> bool:
    try:
        fold(K)
    except NotFoldable:
        return False
    return True


def f_vector(K: Triangulation) -> tuple[int, ...]:
    """Number of faces of each dimension ``0..dim``."""
    k = K.dim + 1
    faces: list[set] = [set() for _ in range(k)]
    for f in K.facet_list():
        for size in range(1, k + 1):
            faces[size - 1].update(combinations(f, size))
    return tuple(len(s) for s in faces)


def bfs_distances(graph: DualGraph, source: int) -> dict[int, int]:
    nbrs = graph.neighbours()
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist

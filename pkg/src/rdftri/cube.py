"""Regular dense foldable triangulations of cubes with large signature."""

from __future__ import annotations

import math
from importlib import resources
from dataclasses import dataclass, field

import numpy as np

from .complex import Triangulation, bipartition, check_coloring, fold, signature
from .errors import (
    DegenerateLifting,
    IncompatibleMatching,
    MissingTemplateS,
    NotBipartite,
    NotFoldable,
    NotLocallyConvex,
    RidgeSharedByThree,
    TemplateInvalid,
    TriangulationError,
)
from .lattice import cube, product_configuration, simplex
from .product import make_ordering, simplicial_product, square_bipyramid
from .lifting import TwoLevelLifting
from .regularity import induces_triangulation
from .shapes import unit_segment

C4_FACETS = (
    "01248 12358 12458 13589 2378b 23578 24578 24678 "
    "2678e 278be 28abe 35789 3789b 4578c 4678c 5789d "
    "578cd 678ce 789bd 78bcd 78bce 7bcef 7bcdf"
).split()
C4_LIFTING = (0, 0, 0, 4, 0, 2, 8, 8, 10, 11, 19, 19, 10, 19, 24, 31)
# vertex 8 at height 10 makes 14 ridges of the facet list fold downwards; at 0 or 1 they are convex
C4_LIFTING_CORRECTED = C4_LIFTING[:8] + (0,) + C4_LIFTING[9:]
C4_COLOR_LABELS = (0, 1, 2, 4, 4, 0, 0, 1, 8, 2, 1, 0, 2, 4, 4, 8)


def c3_min() -> Triangulation:
    """The 3-cube with its four odd corners cut off the central tetrahedron.

    Heights are 1 on even-weight vertices and 0 on odd-weight ones.
    """
    central = (1, 2, 4, 7)
    corners = [(0, 1, 2, 4), (1, 2, 3, 7), (1, 4, 5, 7), (2, 4, 6, 7)]
    lifting = [1 - bin(h).count("1") % 2 for h in range(8)]
    K = Triangulation(cube(3), [central] + corners, lifting=lifting)
    return K.with_(coloring=fold(K))


def c4_table(lifting: str = "table") -> Triangulation:
    """The 23-facet triangulation of the 4-cube with signature 2.

    Hex digit ``h`` is the vertex whose coordinate ``x_{i+1}`` is bit ``i`` of
    ``h``. Colour labels ``0, 1, 2, 4, 8`` become ranks ``0..4``. ``lifting``
    selects the reference heights (``"table"``, which do not induce this
    facet list) or the repaired heights (``"corrected"``, which do).
    """
    heights = {"table": C4_LIFTING, "corrected": C4_LIFTING_CORRECTED}[lifting]
    facets = [tuple(int(c, 16) for c in label) for label in C4_FACETS]
    ranks = {label: r for r, label in enumerate(sorted(set(C4_COLOR_LABELS)))}
    coloring = [ranks[c] for c in C4_COLOR_LABELS]
    return Triangulation(cube(4), facets, coloring=coloring, lifting=heights)


def sample_template_s() -> Triangulation:
    """A signature-2 rdf-triangulation of ``simplex(4) × square`` for :func:`compose_c6`.

    Found by a random search over generic integer liftings
    (``scripts/find_template_s.py``); it is sample input, not reference data.
    """
    from . import io

    text = resources.files("rdftri").joinpath("data/template_s.json").read_text()
    return io.loads(text)


def claimed_signature(d: int) -> int:
    """Signature guaranteed by the recursive cube constructions."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if d == 1:
        return 1
    if d == 2:
        return 0
    if d % 2:
        return 2 ** ((d + 1) // 2) * math.factorial((d - 1) // 2)
    if d % 4 == 0:
        return math.factorial(d // 2)
    return 2 * math.factorial(d // 2) // 3


@dataclass
class CubeConstruction:
    d: int
    recipe: str
    claimed_signature: int
    triangulation: Triangulation
    factors: tuple = field(default=(), repr=False)


@dataclass
class RdfReport:
    dense: bool
    volume: bool
    foldable: bool
    bipartite: bool
    regular: bool
    signature: int | None

    @property
    def ok(self) -> bool:
        return self.dense and self.volume and self.foldable and self.bipartite and self.regular


def certify_rdf(K: Triangulation) -> RdfReport:
    """Check density, total volume, foldability, bipartiteness and the lifting."""
    dense = len(K.used_vertices()) == len(K.config)
    volume = K.config.volume is not None and int(K.volumes.sum()) == K.config.volume
    if K.coloring is not None and check_coloring(K, K.coloring):
        foldable = True
    else:
        try:
            fold(K)
            foldable = True
        except NotFoldable:
            foldable = False
    try:
        bipartition(K)
        bipartite = True
    except NotBipartite:
        bipartite = False
    regular = False
    if K.lifting is not None:
        try:
            induces_triangulation(K)
            regular = True
        except (NotLocallyConvex, DegenerateLifting):
            pass
    sig = signature(K) if bipartite and K.dual_graph.n_components == 1 else None
    return RdfReport(dense, volume, foldable, bipartite, regular, sig)


def _base_construction(d: int, template_s=None) -> CubeConstruction:
    builders = {
        1: ("C1", unit_segment),
        2: ("C2", square_bipyramid),
        3: ("C3", c3_min),
        4: ("C4[h8=0]", lambda: c4_table("corrected")),
    }
    if d in builders:
        name, build = builders[d]
        return CubeConstruction(d, name, claimed_signature(d), build())
    if d == 6:
        if template_s is None:
            raise MissingTemplateS("the 6-cube needs a triangulation S of simplex(4) x square")
        return CubeConstruction(6, "C6 = C4[h8=0] x C2 refined by S", claimed_signature(6), compose_c6(template_s))
    raise ValueError(d)


def rdf_cube(d: int, template_s=None) -> CubeConstruction:
    """Recursive rdf-triangulation of ``[0, 1]^d``.

    Odd ``d`` multiplies ``C_{d-2}`` with the square under its symmetric
    ordering, ``d ≡ 0 (mod 4)`` multiplies the 23-facet 4-cube with
    ``C_{d-4}``, and ``d ≡ 2 (mod 4)`` starts from the 6-cube assembled from the
    template ``S`` by :func:`compose_c6`.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    if d <= 4 or d == 6:
        return _base_construction(d, template_s)
    if d % 2:
        left = rdf_cube(d - 2, template_s)
        right = _base_construction(2)
        kinds = ("color_consecutive", "symmetric", "lexrev")
    elif d % 4 == 0:
        left = _base_construction(4)
        right = rdf_cube(d - 4, template_s)
        kinds = ("color_consecutive", "color_consecutive", "color")
    else:
        left = _base_construction(6, template_s)
        right = rdf_cube(d - 6, template_s)
        kinds = ("color_consecutive", "color_consecutive", "color")
    K, L = left.triangulation, right.triangulation
    product = simplicial_product(K, make_ordering(K, kinds[0]), L, make_ordering(L, kinds[1]), lifting=kinds[2])
    recipe = f"C{d} = ({left.recipe})[{kinds[0]}] x ({right.recipe})[{kinds[1]}]"
    return CubeConstruction(d, recipe, claimed_signature(d), product, (left, right))


def _boundary_ridge(points: np.ndarray) -> bool:
    return bool(((points == points[0]).all(axis=0)).any())


def compose_c6(S: Triangulation, matching=None, check_signature: bool = True) -> Triangulation:
    """Refine every cell ``f × C_2`` of ``C_4^λ × C_2`` by a copy of ``S``.

    ``S`` triangulates ``simplex(4) × square`` (point ``k * 4 + w``). By default
    vertex ``k`` of the simplex goes to the vertex of ``f`` with colour ``k``;
    ``matching`` may instead map each facet index of the 4-cube triangulation
    to the list of its vertices playing ``e_0, ..., e_4``. The lifting is the
    4-cube's lifting plus ε times the transported lifting of ``S``.
    """
    target = product_configuration(simplex(4), cube(2))
    if S.config.points != target.points or S.dim != 6:
        raise TemplateInvalid("S must triangulate simplex(4) x square with the standard point order")
    if int(S.volumes.sum()) != target.volume:
        raise TemplateInvalid(f"S has total volume {int(S.volumes.sum())}, expected {target.volume}")
    try:
        fold(S)
        bipartition(S)
    except (NotFoldable, NotBipartite) as exc:
        raise TemplateInvalid(f"S is not foldable and bipartite: {exc}") from exc
    if S.lifting is None or not S.lifting.single_level:
        raise TemplateInvalid("S needs a single-level lifting")
    try:
        induces_triangulation(S)
    except TriangulationError as exc:
        raise TemplateInvalid(f"the lifting of S does not induce it: {exc}") from exc
    if check_signature and signature(S) != 2:
        raise TemplateInvalid(f"S has signature {signature(S)}, expected 2")

    C4 = c4_table("corrected")
    config = product_configuration(C4.config, cube(2))
    sf = S.facets
    pieces = []
    for i, f in enumerate(C4.facet_list()):
        if matching is None:
            verts = sorted(f, key=lambda v: C4.coloring[v])
        else:
            verts = list(matching[i])
            if sorted(verts) != list(f):
                raise IncompatibleMatching(f"matching for facet {i} is not a vertex order of {f}")
        image = np.array([verts[k] * 4 + w for k in range(5) for w in range(4)], dtype=np.int64)
        pieces.append(image[sf])
    facets = np.concatenate(pieces)
    lam = C4.lifting.base
    color = C4.coloring
    base = [lam[v] for v in range(16) for _ in range(4)]
    eps = [S.lifting.base[color[v] * 4 + w] for v in range(16) for w in range(4)]
    coloring = None
    if matching is None:
        sc = fold(S) if S.coloring is None else S.coloring
        coloring = [sc[color[v] * 4 + w] for v in range(16) for w in range(4)]
    try:
        C6 = Triangulation(config, facets, coloring=coloring, lifting=TwoLevelLifting(base, eps))
        C6.dual_graph
    except RidgeSharedByThree as exc:
        raise IncompatibleMatching(str(exc)) from exc
    _check_closed(C6)
    return C6


def _check_closed(K: Triangulation) -> None:
    """Every ridge owned by a single facet must lie on the boundary of the cube."""
    counts: dict = {}
    for f in K.facet_list():
        for r in range(len(f)):
            key = f[:r] + f[r + 1:]
            counts[key] = counts.get(key, 0) + 1
    coords = K.config.coords
    for ridge, c in counts.items():
        if c == 1 and not _boundary_ridge(coords[list(ridge)]):
            raise IncompatibleMatching(f"interior ridge {ridge} belongs to one facet only")

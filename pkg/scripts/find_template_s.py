"""Search generic liftings of simplex(4) x square for a foldable triangulation of signature 2.

Lower hulls come from qhull in floating point; every hit is then certified
exactly (volume, fold, signature, regularity) before it is written out.

    python3 scripts/find_template_s.py --seed 1 --out template_s.json
"""

import argparse
import sys

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from rdftri import Triangulation, fold, io, is_regular, signature
from rdftri.errors import NotBipartite, NotFoldable
from rdftri.lattice import cube, product_configuration, simplex


def lower_facets(points, heights):
    lifted = np.column_stack([np.asarray(points, float), np.asarray(heights, float)])
    try:
        hull = ConvexHull(lifted)
    except QhullError:
        return None
    out = []
    for simplex_, eq in zip(hull.simplices, hull.equations):
        if eq[-2] < -1e-9:
            if (np.abs(lifted @ eq[:-1] + eq[-1]) < 1e-7).sum() != len(simplex_):
                return None
            out.append(tuple(sorted(int(v) for v in simplex_)))
    return out


def search(seed: int, tries: int, target: int = 2):
    config = product_configuration(simplex(4), cube(2))
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        heights = rng.integers(0, 10**6, size=len(config)).tolist()
        facets = lower_facets(config.points, heights)
        if facets is None:
            continue
        S = Triangulation(config, facets, lifting=heights)
        if int(S.volumes.sum()) != config.volume:
            continue
        try:
            coloring = fold(S)
            if signature(S) != target:
                continue
        except (NotFoldable, NotBipartite):
            continue
        if is_regular(S):
            return S.with_(coloring=coloring)
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--tries", type=int, default=5000)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    S = search(args.seed, args.tries)
    if S is None:
        print("nothing found", file=sys.stderr)
        sys.exit(1)
    if args.out == "-":
        sys.stdout.write(io.dumps(S))
    else:
        io.write(S, args.out)


if __name__ == "__main__":
    main()

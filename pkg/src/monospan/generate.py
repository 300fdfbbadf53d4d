"""Deterministic random general-position instances for tests and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GenerationFailed
from .geometry import PointSet, validate_general_position

# denominator chosen so lattice products stay far inside int64
_DENOM = 2**28
_MAX_ATTEMPTS = 200


def gen(n: int, k: int = 0, seed: int = 0) -> tuple[PointSet, list[int]]:
    """n pseudo-random rational points in [0,1]^2 in general position, k of them roots.

    Rejection-resamples until the set passes general-position validation and
    all y-coordinates are pairwise distinct; same (n, k, seed) always yields
    the same output.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    for _ in range(_MAX_ATTEMPTS):
        coords = [
            (Fraction(rng.randrange(_DENOM + 1), _DENOM), Fraction(rng.randrange(_DENOM + 1), _DENOM))
            for _ in range(n)
        ]
        ps = PointSet.from_coords(coords)
        ys = [p.y for p in ps]
        if len(set(ys)) != len(ys):
            continue
        if not validate_general_position(ps).ok:
            continue
        roots = sorted(rng.sample(range(n), k))
        return ps, roots
    raise GenerationFailed(f"no valid instance after {_MAX_ATTEMPTS} attempts")

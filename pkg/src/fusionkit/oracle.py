"""Independent cross-check for the closed-form rules.

Tensor products are recomputed from the adjoint weight system by reflecting
shifted weights back into the dominant chamber and accumulating signs; fusion
adds the single affine wall at (x, theta) = level + dual Coxeter number.
Nothing here shares logic with the rule modules beyond the root-system data.
"""

from __future__ import annotations

from .algebra import RootSystem
from .errors import LevelTooSmall
from .weights import AffineWeight, Weight


def adjoint_weight_system(rs: RootSystem) -> list[Weight]:
    """Weights of the adjoint representation, with multiplicity (zero r times)."""
    out = [beta.labels for beta in rs.roots]
    out.extend([(0,) * rs.rank] * rs.rank)
    return out


def finite_fold(rs: RootSystem, x: Weight) -> tuple[int, Weight | None]:
    """Reflect the strictly-shifted weight x into the open chamber.

    Returns (sign, folded) with sign in {+1, -1}, or (0, None) when x lands on
    a wall and the orbit contributes nothing.
    """
    sign = 1
    limit = 10 * len(rs.positive_roots)
    for _ in range(limit):
        worst = min(range(rs.rank), key=lambda i: x[i])
        if x[worst] > 0:
            return sign, x
        if x[worst] == 0:
            return 0, None
        x = rs.reflect(x, worst)
        sign = -sign
    raise AssertionError(f"folding did not terminate for {x}")


def affine_fold(rs: RootSystem, x: Weight, level: int) -> tuple[int, Weight | None]:
    """Fold x into the shifted affine alcove at the given level."""
    wall = level + rs.dual_coxeter
    sign = 1
    limit = 10 * len(rs.positive_roots) * (level + rs.dual_coxeter)
    for _ in range(limit):
        worst = min(range(rs.rank), key=lambda i: x[i])
        if x[worst] < 0:
            x = rs.reflect(x, worst)
            sign = -sign
            continue
        if x[worst] == 0:
            return 0, None
        s = rs.theta_pairing(x)
        if s == wall:
            return 0, None
        if s > wall:
            theta = rs.highest_root.labels
            x = tuple(a - (s - wall) * t for a, t in zip(x, theta))
            sign = -sign
            continue
        return sign, x
    raise AssertionError(f"affine folding did not terminate for {x}")


def racah_speiser_tensor(rs: RootSystem, mu: Weight) -> dict[Weight, int]:
    """theta (x) mu as a tensor product, summed over the adjoint weight system."""
    if any(v < 0 for v in mu):
        raise ValueError(f"{mu} is not dominant")
    rho = rs.weyl_vector
    acc: dict[Weight, int] = {}
    for w in adjoint_weight_system(rs):
        x = tuple(m + wi + 1 for m, wi in zip(mu, w))
        sign, folded = finite_fold(rs, x)
        if sign == 0:
            continue
        nu = tuple(f - 1 for f in folded)
        acc[nu] = acc.get(nu, 0) + sign
    for nu, c in acc.items():
        assert c >= 0, (mu, nu, c)
    return {nu: c for nu, c in acc.items() if c != 0}


def kac_walton_fusion(rs: RootSystem, mu: AffineWeight, level: int | None = None) -> dict[Weight, int]:
    """theta (x) mu in the level-k fusion ring, by folding into the alcove."""
    k = mu.level if level is None else level
    if k < 2:
        raise LevelTooSmall(f"adjoint fusion needs level >= 2, got {k}")
    if any(v < 0 for v in mu.labels):
        raise ValueError(f"{mu} is not dominant")
    acc: dict[Weight, int] = {}
    for w in adjoint_weight_system(rs):
        x = tuple(m + wi + 1 for m, wi in zip(mu.finite, w))
        sign, folded = affine_fold(rs, x, k)
        if sign == 0:
            continue
        nu = tuple(f - 1 for f in folded)
        acc[nu] = acc.get(nu, 0) + sign
    for nu, c in acc.items():
        assert c >= 0, (mu, nu, c)
        assert rs.theta_pairing(nu) <= k, (mu, nu)
    return {nu: c for nu, c in acc.items() if c != 0}

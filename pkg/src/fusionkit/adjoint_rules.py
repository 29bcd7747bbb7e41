"""Closed-form rules for tensoring and fusing with the adjoint representation.

The product of the adjoint weight theta with a dominant weight mu decomposes
with multiplicities that never exceed the rank:

* diagonal (nu = mu): the multiplicity counts nonzero Dynkin labels, dropping
  one for the affine zeroth label in the fusion case;
* off-diagonal (nu = mu + beta for a root beta): the multiplicity is 0 or 1,
  decided by comparing the labels of mu against the root-string depths of
  beta.  Dominance of mu and nu already forces mu_i >= max(0, -beta_i), so
  only the few (beta, i) with depth exceeding that bound ever decide anything;
  those are the "nontrivial conditions" tabulated per family below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraId, Root, RootSystem, build
from .errors import LevelMismatch, LevelTooSmall
from .weights import AffineWeight, Weight, nonzero_affine_labels


@dataclass
class FusionDecomposition:
    """Multiset of dominant weights with multiplicities; level None = tensor."""

    algebra: AlgebraId
    level: int | None
    entries: dict[Weight, int]

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items())

    def multiplicity(self, nu: Weight) -> int:
        return self.entries.get(tuple(nu), 0)

    def total(self) -> int:
        return sum(self.entries.values())


@dataclass(frozen=True)
class NontrivialCondition:
    """A root-string condition not implied by dominance.

    For nu = mu + beta the coefficient needs mu[index] >= threshold_plus, and
    for nu = mu - beta it needs mu[index] >= threshold_minus.  `root` holds
    the simple-root coordinates of the positive root beta.
    """

    root: tuple[int, ...]
    index: int
    threshold_plus: int
    threshold_minus: int


def _check_dominant(lam: Weight, what: str) -> None:
    if any(x < 0 for x in lam):
        raise ValueError(f"{what} {lam} is not dominant")


def diag_tensor(rs: RootSystem, mu: Weight) -> int:
    """Multiplicity of mu itself inside theta (x) mu."""
    _check_dominant(mu, "weight")
    return sum(1 for x in mu if x != 0)


def diag_fusion(rs: RootSystem, mu: AffineWeight) -> int:
    """Multiplicity of mu in the level-k fusion theta (x) mu; needs k >= 2."""
    if mu.level < 2:
        raise LevelTooSmall(f"adjoint fusion needs level >= 2, got {mu.level}")
    _check_dominant(mu.labels, "affine weight")
    return nonzero_affine_labels(mu) - 1


def offdiag_tensor(rs: RootSystem, mu: Weight, nu: Weight) -> int:
    """Multiplicity of nu != mu inside theta (x) mu (0 or 1)."""
    _check_dominant(mu, "weight")
    _check_dominant(nu, "target")
    diff = tuple(a - b for a, b in zip(nu, mu))
    beta = rs.root_from_labels(diff)
    if beta is None:
        return 0
    hit = all(mu[i] >= rs.string_depth(beta, i) for i in range(rs.rank))
    if __debug__:
        # same answer from the endpoint form of the string conditions
        if all(c >= 0 for c in beta.coords):
            blocked = any(
                _shift_is_positive_root(rs, beta, i, mu[i] + 1) for i in range(rs.rank)
            )
        else:
            blocked = any(
                _shift_is_negative_root(rs, beta, i, nu[i] + 1) for i in range(rs.rank)
            )
        assert hit == (not blocked), (mu, nu, beta)
    return int(hit)


def _shift_is_positive_root(rs: RootSystem, beta: Root, i: int, steps: int) -> bool:
    coords = list(beta.coords)
    coords[i] += steps
    return rs.is_root(tuple(coords)) and all(c >= 0 for c in coords)


def _shift_is_negative_root(rs: RootSystem, beta: Root, i: int, steps: int) -> bool:
    coords = list(beta.coords)
    coords[i] -= steps
    return rs.is_root(tuple(coords)) and all(c <= 0 for c in coords)


def offdiag_fast(rs: RootSystem, mu: Weight, nu: Weight) -> int:
    """Same as offdiag_tensor but consulting only the nontrivial conditions."""
    diff = tuple(a - b for a, b in zip(nu, mu))
    beta = rs.root_from_labels(diff)
    if beta is None:
        return 0
    cond = _condition_map(rs.algebra).get(beta.coords)
    if cond is not None:
        i, threshold = cond
        if mu[i] < threshold:
            return 0
    return 1


def offdiag_fusion(rs: RootSystem, mu: AffineWeight, nu: AffineWeight) -> int:
    """Multiplicity of nu != mu in the level-k fusion theta (x) mu.

    Equals the tensor coefficient for dominant pairs: the extra affine
    condition mu_0 >= (theta, beta) is already forced by nu_0 >= 0.  The
    debug build re-checks that claim against the full affine-reflection form.
    """
    if mu.level != nu.level:
        raise LevelMismatch(f"levels differ: {mu.level} != {nu.level}")
    if mu.level < 2:
        raise LevelTooSmall(f"adjoint fusion needs level >= 2, got {mu.level}")
    _check_dominant(mu.labels, "affine weight")
    _check_dominant(nu.labels, "affine target")
    c = offdiag_tensor(rs, mu.finite, nu.finite)
    if __debug__:
        assert c == _offdiag_affine_full(rs, mu, nu), (mu, nu)
    return c


def _offdiag_affine_full(rs: RootSystem, mu: AffineWeight, nu: AffineWeight) -> int:
    # raw form: nu - r_i . mu must avoid the roots and zero for every affine i
    diff = tuple(a - b for a, b in zip(nu.finite, mu.finite))
    if rs.root_from_labels(diff) is None:
        return 0
    zero = (0,) * rs.rank
    for i in range(rs.rank):
        ref = rs.shifted_reflect(mu.finite, i)
        rel = tuple(a - b for a, b in zip(nu.finite, ref))
        if rel == zero or rs.root_from_labels(rel) is not None:
            return 0
    # i = 0: r_0 . mu = mu + (mu_0 + 1) theta
    c0 = mu.labels[0] + 1
    theta = rs.highest_root.labels
    ref0 = tuple(x + c0 * t for x, t in zip(mu.finite, theta))
    rel0 = tuple(a - b for a, b in zip(nu.finite, ref0))
    if rel0 == zero or rs.root_from_labels(rel0) is not None:
        return 0
    return 1


def decompose_tensor(rs: RootSystem, mu: Weight) -> FusionDecomposition:
    """Full decomposition of theta (x) mu as a tensor product."""
    _check_dominant(mu, "weight")
    entries: dict[Weight, int] = {}
    d = diag_tensor(rs, mu)
    if d:
        entries[tuple(mu)] = d
    for beta in rs.roots:
        nu = tuple(a + b for a, b in zip(mu, beta.labels))
        if any(x < 0 for x in nu):
            continue
        if offdiag_tensor(rs, mu, nu):
            entries[nu] = 1
    return FusionDecomposition(rs.algebra, None, entries)


def decompose(rs: RootSystem, mu: AffineWeight) -> FusionDecomposition:
    """Full decomposition of theta (x) mu in the level-k fusion ring."""
    if mu.level < 2:
        raise LevelTooSmall(f"adjoint fusion needs level >= 2, got {mu.level}")
    _check_dominant(mu.labels, "affine weight")
    k = mu.level
    entries: dict[Weight, int] = {}
    d = diag_fusion(rs, mu)
    if d:
        entries[mu.finite] = d
    for beta in rs.roots:
        nu = tuple(a + b for a, b in zip(mu.finite, beta.labels))
        if any(x < 0 for x in nu) or rs.theta_pairing(nu) > k:
            continue
        nu_aff = AffineWeight(k, (k - rs.theta_pairing(nu),) + nu)
        if offdiag_fusion(rs, mu, nu_aff):
            entries[nu] = 1
    return FusionDecomposition(rs.algebra, k, entries)


# --- nontrivial conditions ---------------------------------------------


def nontrivial_conditions(rs: RootSystem) -> tuple[NontrivialCondition, ...]:
    """All root-string conditions that dominance does not already imply.

    Nontriviality is sign-symmetric (d_i(-beta) = d_i(beta) + beta_i), so each
    condition is recorded once on the positive root with both thresholds.
    """
    out = []
    for beta in rs.positive_roots:
        for i in range(rs.rank):
            dp = rs.string_depth(beta, i)
            dm = rs.string_height(beta, i)  # = depth of -beta
            if dp > max(0, -beta.labels[i]) or dm > max(0, beta.labels[i]):
                out.append(NontrivialCondition(beta.coords, i, dp, dm))
    return tuple(sorted(out, key=lambda c: (c.root, c.index)))


def reference_nontrivial_conditions(algebra: AlgebraId) -> tuple[NontrivialCondition, ...]:
    """Hand-tabulated nontrivial conditions, for checking the generated ones."""
    f, r = algebra.family, algebra.rank
    out: list[NontrivialCondition] = []
    if f == "B":
        # short roots e_m = a_m + ... + a_{r-1}, pinched at the short node
        for m in range(r - 1):
            coords = tuple(0 if j < m else 1 for j in range(r))
            out.append(NontrivialCondition(coords, r - 1, 1, 1))
    elif f == "C":
        # e_m + e_{m+1}, pinched at node m
        for m in range(r - 1):
            coords = [0] * r
            coords[m] = 1
            for j in range(m + 1, r - 1):
                coords[j] = 2
            coords[r - 1] = 1
            out.append(NontrivialCondition(tuple(coords), m, 1, 1))
    elif f == "F":
        for coords, i in (
            ((0, 1, 1, 0), 2),
            ((1, 1, 1, 0), 2),
            ((1, 2, 3, 2), 2),
            ((0, 1, 2, 1), 3),
            ((1, 1, 2, 1), 3),
            ((1, 2, 2, 1), 3),
        ):
            out.append(NontrivialCondition(coords, i, 1, 1))
    elif f == "G":
        out.append(NontrivialCondition((1, 1), 1, 2, 1))
        out.append(NontrivialCondition((1, 2), 1, 1, 2))
    # A, D, E: every condition follows from dominance
    return tuple(sorted(out, key=lambda c: (c.root, c.index)))


@lru_cache(maxsize=None)
def _condition_map(algebra: AlgebraId) -> dict[tuple[int, ...], tuple[int, int]]:
    """Signed root coords -> (index, threshold) for the fast off-diagonal path."""
    rs = build(algebra)
    table: dict[tuple[int, ...], tuple[int, int]] = {}
    for cond in nontrivial_conditions(rs):
        table[cond.root] = (cond.index, cond.threshold_plus)
        table[tuple(-c for c in cond.root)] = (cond.index, cond.threshold_minus)
    return table


# --- worked tables for the rank-2 and rank-4 exceptional algebras --------

# One row per root beta of G2: simple-root coordinates, the minimal affine
# weight (t0; t1, t2) whose orbit theta (x) mu reaches mu + beta, which finite
# node (if any) carries a condition beyond dominance, and the label shift
# from mu-hat to nu-hat.
G2_OFFDIAG_TABLE: tuple[tuple[tuple[int, int], tuple[int, int, int], int | None, tuple[int, int, int]], ...] = (
    ((1, 0), (1, 0, 3), None, (-1, 2, -3)),
    ((1, 1), (1, 0, 2), 1, (-1, 1, -1)),
    ((2, 3), (2, 0, 0), None, (-2, 1, 0)),
    ((1, 2), (1, 0, 1), 1, (-1, 0, 1)),
    ((1, 3), (1, 1, 0), None, (-1, -1, 3)),
    ((0, 1), (0, 1, 0), None, (0, -1, 2)),
    ((-1, 0), (0, 2, 0), None, (1, -2, 3)),
    ((-1, -1), (0, 1, 1), 1, (1, -1, 1)),
    ((-2, -3), (0, 1, 0), None, (2, -1, 0)),
    ((-1, -2), (0, 0, 2), 1, (1, 0, -1)),
    ((-1, -3), (0, 0, 3), None, (1, 1, -3)),
    ((0, -1), (0, 0, 2), None, (0, 1, -2)),
)


def g2_offdiag_row(
    rs: RootSystem, coords: tuple[int, int]
) -> tuple[tuple[int, int, int], int | None, tuple[int, int, int]]:
    """Recompute one G2 table row from the root-string data."""
    beta = rs.root_at(coords)
    pairing = rs.theta_pairing(beta.labels)
    t0 = max(0, pairing)
    thresholds = tuple(
        max(0, -beta.labels[i], rs.string_depth(beta, i)) for i in range(2)
    )
    star = None
    for i in range(2):
        if rs.string_depth(beta, i) > max(0, -beta.labels[i]):
            star = i
    delta = (-pairing,) + beta.labels
    return (t0,) + thresholds, star, delta


# The six F4 roots with a condition beyond dominance, shown with both ends of
# the alpha_i string through beta (as Dynkin labels of beta -/+ alpha_i).
F4_STRING_TABLE: tuple[tuple[tuple[int, int, int, int], int, tuple[int, ...], tuple[int, ...]], ...] = (
    ((0, 1, 1, 0), 2, (-1, 2, -2, 0), (-1, 0, 2, -2)),
    ((1, 1, 1, 0), 2, (1, 1, -2, 0), (1, -1, 2, -2)),
    ((1, 2, 3, 2), 2, (0, 1, -2, 2), (0, -1, 2, 0)),
    ((0, 1, 2, 1), 3, (-1, 0, 2, -2), (-1, 0, 0, 2)),
    ((1, 1, 2, 1), 3, (1, -1, 2, -2), (1, -1, 0, 2)),
    ((1, 2, 2, 1), 3, (0, 1, 0, -2), (0, 1, -2, 2)),
)


def f4_string_row(
    rs: RootSystem, coords: tuple[int, int, int, int], i: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Dynkin labels of beta - alpha_i and beta + alpha_i."""
    below = list(coords)
    below[i] -= 1
    above = list(coords)
    above[i] += 1
    return rs.labels_of(tuple(below)), rs.labels_of(tuple(above))

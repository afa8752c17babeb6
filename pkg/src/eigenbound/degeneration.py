"""One-parameter diagonal conjugation of matrix subspaces and limits t -> 0.

Conjugating by diag(t^w1, ..., t^wn) scales entry (i,j) by t^(wi - wj), so a
conjugated basis element is a Laurent polynomial in t with matrix (here:
vectorized) coefficients.  The limit of the spanned subspace is computed by
valuation-normalized reduction: shift every element so its lowest t-power is
t^0, keep the t^0 coefficient vectors if independent, otherwise eliminate the
dependency (which strictly raises a valuation) and repeat.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateFamilyError,
    NotPhiStableError,
    SizeMismatchError,
)
from .linalg import Vec, nullspace
from .matrices import Matrix
from .subspaces import MatrixSubspace, restrict_to_zero

_ZERO = Fraction(0)


class LaurentVec:
    """Vector-valued Laurent polynomial: exponent -> dense coefficient vector."""

    __slots__ = ("size", "layers")

    def __init__(self, size: int, layers: dict[int, Vec]):
        self.size = size
        self.layers: dict[int, Vec] = {
            e: tuple(v) for e, v in layers.items() if any(x != 0 for x in v)
        }

    @property
    def is_zero(self) -> bool:
        return not self.layers

    def valuation(self) -> int:
        if self.is_zero:
            raise ValueError("valuation of the zero vector")
        return min(self.layers)

    def max_exponent(self) -> int:
        if self.is_zero:
            raise ValueError("zero vector has no exponents")
        return max(self.layers)

    def layer(self, e: int) -> Vec:
        return self.layers.get(e, (_ZERO,) * self.size)

    def shifted(self, delta: int) -> "LaurentVec":
        return LaurentVec(self.size, {e + delta: v for e, v in self.layers.items()})

    def normalized(self) -> "LaurentVec":
        """Shift so the lowest exponent is 0."""
        return self.shifted(-self.valuation())

    @staticmethod
    def combine(coeffs: Sequence[Fraction], vecs: Sequence["LaurentVec"]) -> "LaurentVec":
        size = vecs[0].size
        acc: dict[int, list[Fraction]] = {}
        for c, lv in zip(coeffs, vecs):
            if c == 0:
                continue
            for e, layer in lv.layers.items():
                tgt = acc.setdefault(e, [_ZERO] * size)
                for idx, val in enumerate(layer):
                    if val != 0:
                        tgt[idx] += c * val
        return LaurentVec(size, {e: tuple(v) for e, v in acc.items()})


@dataclass(frozen=True)
class TFamily:
    """Basis of a subspace family parametrized by t (vectorized elements)."""

    n: int
    elements: tuple[LaurentVec, ...]


@dataclass(frozen=True)
class WeightComponent:
    """Members scaling exactly as t^j under the conjugation."""

    j: int
    component: MatrixSubspace


def entry_weight(weights: Sequence[int], i: int, j: int) -> int:
    return weights[i] - weights[j]


def corner_weights(n: int) -> tuple[int, ...]:
    """The weight vector (n-1, -1, ..., -1) isolating the first coordinate."""
    return (n - 1,) + (-1,) * (n - 1)


def one_param_family(v: MatrixSubspace, weights: Sequence[int]) -> TFamily:
    """Conjugate every basis element by diag(t^w1, ..., t^wn)."""
    n = v.n
    if len(weights) != n:
        raise SizeMismatchError(f"weight vector length {len(weights)} vs ambient {n}")
    elements = []
    for b in v.basis:
        layers: dict[int, list[Fraction]] = {}
        for i in range(n):
            for j in range(n):
                val = b[i, j]
                if val != 0:
                    e = weights[i] - weights[j]
                    layers.setdefault(e, [_ZERO] * (n * n))[i * n + j] = val
        elements.append(LaurentVec(n * n, {e: tuple(vec) for e, vec in layers.items()}))
    return TFamily(n, tuple(elements))


def grassmannian_limit(fam: TFamily) -> MatrixSubspace:
    """The subspace spanned by the family at t -> 0.

    Maintains the family basis with every element normalized to valuation 0;
    when the t^0 coefficient vectors are dependent, replaces one participating
    element by the dependency combination, whose valuation is >= 1.  The
    minimal nonzero-minor valuation drops by at least one per elimination, so
    the loop ends within (basis size) x (exponent spread) rounds.
    """
    n = fam.n
    m = len(fam.elements)
    if m == 0:
        return MatrixSubspace.zero(n)
    if any(lv.is_zero for lv in fam.elements):
        raise DegenerateFamilyError("family contains the zero element")
    work = [lv.normalized() for lv in fam.elements]
    spread = max(lv.max_exponent() for lv in work)
    budget = m * spread + 1
    for _ in range(budget + 1):
        leading = [lv.layer(0) for lv in work]
        kernel = nullspace([[row[i] for row in leading] for i in range(n * n)], m)
        if not kernel:
            return MatrixSubspace.span(
                [Matrix.from_vector(n, n, vec) for vec in leading], n
            )
        combo = kernel[0]
        target = max(i for i, c in enumerate(combo) if c != 0)
        replacement = LaurentVec.combine(combo, work)
        if replacement.is_zero:
            raise DegenerateFamilyError("family is dependent over the Laurent field")
        work[target] = replacement.normalized()
    raise RuntimeError("limit reduction exceeded its valuation budget (internal bug)")


def weight_decomposition(
    v: MatrixSubspace, weights: Sequence[int]
) -> list[WeightComponent]:
    """Split a conjugation-stable subspace into its weight components.

    Stability is checked first by recomputing the Grassmannian limit of the
    conjugated family; a stable space is the direct sum of the homogeneous
    parts of its basis elements, grouped here by weight.
    """
    n = v.n
    if len(weights) != n:
        raise SizeMismatchError(f"weight vector length {len(weights)} vs ambient {n}")
    if grassmannian_limit(one_param_family(v, weights)) != v:
        raise NotPhiStableError("subspace is not fixed by this one-parameter conjugation")
    buckets: dict[int, list[Matrix]] = {}
    for b in v.basis:
        split: dict[int, Matrix] = {}
        for i in range(n):
            for j in range(n):
                val = b[i, j]
                if val != 0:
                    e = weights[i] - weights[j]
                    split[e] = split.get(e, Matrix.zeros(n)) + Matrix.unit(n, i, j).scale(val)
        for e, part in split.items():
            buckets.setdefault(e, []).append(part)
    components = [
        WeightComponent(j, MatrixSubspace.span(mats, n)) for j, mats in sorted(buckets.items())
    ]
    if sum(c.component.dim for c in components) != v.dim:
        raise RuntimeError("weight components do not add up to the space (internal bug)")
    return components


def component_dims(components: Iterable[WeightComponent]) -> dict[int, int]:
    return {c.j: c.component.dim for c in components}


@dataclass(frozen=True)
class BorderProfile:
    """Dimensions of the first-row / first-column weight components of a
    space stable under the corner weights, plus the dimensions after zeroing
    the first k-2 border coordinates."""

    row_dim: int
    col_dim: int
    row_primed_dim: int
    col_primed_dim: int


def border_profile(v: MatrixSubspace, k: int) -> BorderProfile:
    """Border component dimensions of v under corner_weights(v.n).

    The weight n component is supported on row 0, weight -n on column 0; the
    primed dimensions zero out the border coordinates at positions 1..k-2
    (0-based), matching the restricted border spaces of the dimension bounds.
    """
    n = v.n
    comps = {c.j: c.component for c in weight_decomposition(v, corner_weights(n))}
    row = comps.get(n, MatrixSubspace.zero(n))
    col = comps.get(-n, MatrixSubspace.zero(n))
    row_coords = [(0, c) for c in range(1, k - 1)]
    col_coords = [(r, 0) for r in range(1, k - 1)]
    return BorderProfile(
        row_dim=row.dim,
        col_dim=col.dim,
        row_primed_dim=restrict_to_zero(row, row_coords).dim,
        col_primed_dim=restrict_to_zero(col, col_coords).dim,
    )

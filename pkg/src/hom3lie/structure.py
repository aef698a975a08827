"""Series, solvability and the metric reconstruction of dual-space extensions.

The derived series iterates S -> [S, S, L], the central descending
series S -> [S, L, L], and the central ascending series grows by the
relative centraliser C(I) = { a : [a, L, L] <= I }.  Solvable and
nilpotent lengths are the first step at which the corresponding series
hits zero.

The reconstruction direction: a 2k-dimensional algebra carrying a
symmetric, invariant, non-degenerate form together with a k-dimensional
abelian isotropic ideal is isometric to a dual-space extension of its
quotient by the ideal.  The construction here follows the hyperbolic
geometry of the form explicitly and re-verifies its own output instead
of assuming it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebras import (
    Hom3LieAlgebra,
    increasing_triples,
    is_ideal,
    quotient,
    subspace_bracket,
)
from .errors import (
    AbelianIdealRequired,
    ComplementInvalid,
    DimensionMismatch,
    HalfDimensionRequired,
    IdealRequired,
    IsotropicRequired,
    MetricRequired,
)
from .extensions import BilinForm, Cocycle, is_isometry, t_star_extension, verify_metric
from .linalg import (
    Mat,
    Subspace,
    Vec,
    inverse,
    nullspace,
    residual_matrix,
    solve,
    subspace_sum,
    vstack,
)

SERIES_KINDS = ("derived", "central_descending", "central_ascending")


@dataclass(frozen=True)
class SeriesResult:
    """Terms of one of the three canonical series.

    ``length`` is the first index realising termination (zero subspace
    for the decreasing series, the full space for the ascending one),
    or None when the series stabilises without terminating.
    """

    kind: str
    terms: tuple[Subspace, ...]
    stabilized: bool
    length: Optional[int]


def _centralizer(L: Hom3LieAlgebra, target: Subspace) -> Subspace:
    """C(I) = { a : [a, e_j, e_k] in I for all j < k }, by one nullspace."""
    n = L.dim
    res = residual_matrix(target)
    blocks = []
    for j, k in itertools.combinations(range(n), 2):
        action = Mat.from_cols([L.bracket_basis(a, j, k) for a in range(n)])
        blocks.append(res @ action)
    if not blocks:
        return Subspace.full(n)
    return nullspace(vstack(blocks))


def series(L: Hom3LieAlgebra, kind: str, max_steps: int = 64) -> SeriesResult:
    """Compute a canonical series until stabilisation or ``max_steps``."""
    if kind not in SERIES_KINDS:
        raise ValueError(f"unknown series kind {kind!r}")
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    n = L.dim
    full = Subspace.full(n)
    ascending = kind == "central_ascending"
    terms = [Subspace.zero(n) if ascending else full]
    stabilized = False
    for _ in range(max_steps):
        cur = terms[-1]
        if kind == "derived":
            nxt = subspace_bracket(L, cur, cur, full)
        elif kind == "central_descending":
            nxt = subspace_bracket(L, cur, full, full)
        else:
            nxt = _centralizer(L, cur)
        if nxt == cur:
            stabilized = True
            break
        terms.append(nxt)
    target = n if ascending else 0
    length = next((i for i, t in enumerate(terms) if t.dim == target), None)
    return SeriesResult(kind=kind, terms=tuple(terms), stabilized=stabilized, length=length)


def is_solvable(L: Hom3LieAlgebra, max_steps: int = 64) -> Optional[int]:
    """Smallest k with vanishing k-th derived term, or None."""
    return series(L, "derived", max_steps).length


def is_nilpotent(L: Hom3LieAlgebra, max_steps: int = 64) -> Optional[int]:
    """Smallest k with vanishing k-th central descending term, or None."""
    return series(L, "central_descending", max_steps).length


def is_isotropic(form: BilinForm, s: Subspace) -> bool:
    """True iff the form vanishes on all pairs from the subspace."""
    if form.dim != s.ambient_dim:
        raise DimensionMismatch("form and subspace dimensions differ")
    return all(
        form.eval(a, b) == 0 for a in s.basis for b in s.basis
    )


def _symmetric_nondegenerate(form: BilinForm) -> bool:
    return form.gram == form.gram.transpose() and nullspace(form.gram).dim == 0


def isotropic_complement(form: BilinForm, iso: Subspace) -> Subspace:
    """An isotropic complement of a maximal isotropic subspace.

    Hyperbolic completion: pick dual vectors f_j with B(i_l, f_j) equal
    to the Kronecker delta, then straighten

        f_j <- f_j - (1/2) B(f_j, f_j) i_j - sum_{l<j} B(f_j, f_l) i_l

    which keeps duality (corrections lie in the isotropic subspace) and
    kills all products among the f's.  Needs characteristic zero.
    """
    n = form.dim
    k = iso.dim
    if n != 2 * k:
        raise HalfDimensionRequired("complement needs an isotropic subspace of half dimension")
    if not _symmetric_nondegenerate(form):
        raise MetricRequired("complement needs a symmetric non-degenerate form")
    if not is_isotropic(form, iso):
        raise IsotropicRequired("complement needs an isotropic subspace")
    gram = form.gram
    pair_rows = Mat.from_rows([list(gram.apply(b)) for b in iso.basis], cols=n)
    duals: list[Vec] = []
    for j in range(k):
        f = solve(pair_rows, Vec.basis(k, j))
        if f is None:
            raise MetricRequired("form is degenerate on the given data")
        half = Fraction(1, 2) * form.eval(f, f)
        f = f - iso.basis[j].scale(half)
        for l in range(j):
            f = f - iso.basis[l].scale(form.eval(f, duals[l]))
        duals.append(f)
    return Subspace.span(n, duals)


@dataclass(frozen=True)
class ReconstructionResult:
    """Dual-space extension data recovered from a metric algebra."""

    quotient: Hom3LieAlgebra
    theta: Cocycle
    tstar: Hom3LieAlgebra
    sigma: Mat
    isometry_ok: bool


def reconstruct_t_star(
    g: Hom3LieAlgebra,
    form: BilinForm,
    ideal: Subspace,
    complement: Optional[Subspace] = None,
) -> ReconstructionResult:
    """Present a metric algebra as a dual-space extension of its quotient.

    Preconditions (each with its own error): the form is a metric for
    the algebra; the subspace is a twist-stable ideal, isotropic, of
    exactly half the dimension, and brackets to zero against itself and
    anything ([I, I, G] = 0).  A supplied complement must be isotropic
    and complementary; otherwise one is completed from the form.

    The quotient L = G/I, the pairing delta(i) = B(i, .), the recovered
    cocycle theta(x1,x2,x3) = delta of the ideal component of the
    bracket of the complement lifts, and the map sigma = projection on
    the quotient plus delta on the ideal are assembled exactly as in
    the underlying isometry argument; the verdict is re-checked and
    returned as ``isometry_ok``.
    """
    n2 = g.dim
    k = ideal.dim
    if n2 != 2 * k:
        raise HalfDimensionRequired("reconstruction needs an ideal of half the dimension")
    if not verify_metric(g, form).metric_ok:
        raise MetricRequired("reconstruction needs a symmetric invariant non-degenerate form")
    if not is_ideal(g, ideal):
        raise IdealRequired("reconstruction needs a twist-stable ideal")
    if not is_isotropic(form, ideal):
        raise IsotropicRequired("reconstruction needs an isotropic ideal")
    full = Subspace.full(n2)
    if subspace_bracket(g, ideal, ideal, full).dim != 0:
        raise AbelianIdealRequired("reconstruction needs [I, I, G] = 0")
    if complement is None:
        comp = isotropic_complement(form, ideal)
    else:
        comp = complement
        if (
            comp.ambient_dim != n2
            or comp.dim != k
            or not is_isotropic(form, comp)
            or subspace_sum(comp, ideal).dim != n2
        ):
            raise ComplementInvalid("supplied complement is not an isotropic complement")

    lq, proj = quotient(g, ideal)

    # Lift the quotient basis into the complement: columns of the
    # complement basis weighted by the inverse of proj restricted to it.
    phi = Mat.from_cols([proj.apply(b) for b in comp.basis])
    phi_inv = inverse(phi)
    assert phi_inv is not None, "complement must project isomorphically onto the quotient"
    comp_mat = Mat.from_cols(list(comp.basis))
    lift = comp_mat @ phi_inv  # 2k x k, lift of each quotient basis vector

    # Coordinates along comp and ideal: invert the change of basis.
    cmat = Mat.from_cols(list(comp.basis) + list(ideal.basis))
    cinv = inverse(cmat)
    assert cinv is not None
    ideal_coords = Mat.from_rows([list(cinv.row(i)) for i in range(k, n2)], cols=n2)

    # delta : I -> L*, delta(i)(xbar) = B(i, x) on ideal coordinates.
    gram = form.gram
    delta = Mat.from_rows(
        [[ideal.basis[c].dot(gram.apply(lift.col(r))) for c in range(k)] for r in range(k)],
        cols=k,
    )

    table = {}
    for p, q, r in increasing_triples(k):
        br = g.bracket(lift.col(p), lift.col(q), lift.col(r))
        value = delta.apply(ideal_coords.apply(br))
        if not value.is_zero():
            table[(p, q, r)] = value
    theta = Cocycle(k, k, table)

    tstar, qform = t_star_extension(lq, theta)
    sigma = vstack([proj, delta @ ideal_coords])
    ok = is_isometry(g, form, tstar, qform, sigma)
    return ReconstructionResult(quotient=lq, theta=theta, tstar=tstar, sigma=sigma, isometry_ok=ok)


@dataclass(frozen=True)
class TstarSolvabilityReport:
    """Solvable/nilpotent lengths of an algebra and its dual-space extension."""

    solvable_length: Optional[int]
    nilpotent_length: Optional[int]
    tstar_solvable_length: Optional[int]
    tstar_nilpotent_length: Optional[int]

    @property
    def solvable_implication_ok(self) -> bool:
        return self.solvable_length is None or self.tstar_solvable_length is not None

    @property
    def solvable_bound_ok(self) -> bool:
        if self.solvable_length is None:
            return True
        return (
            self.tstar_solvable_length is not None
            and self.tstar_solvable_length <= self.solvable_length + 1
        )

    @property
    def nilpotent_implication_ok(self) -> bool:
        return self.nilpotent_length is None or self.tstar_nilpotent_length is not None


def tstar_solvability_check(L: Hom3LieAlgebra, th: Cocycle, max_steps: int = 64) -> TstarSolvabilityReport:
    """Compare solvability and nilpotency of L with its dual-space extension."""
    alg, _ = t_star_extension(L, th)
    return TstarSolvabilityReport(
        solvable_length=is_solvable(L, max_steps),
        nilpotent_length=is_nilpotent(L, max_steps),
        tstar_solvable_length=is_solvable(alg, max_steps),
        tstar_nilpotent_length=is_nilpotent(alg, max_steps),
    )

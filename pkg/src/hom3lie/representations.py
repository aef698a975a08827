"""Representations of multiplicative hom 3-Lie algebras.

A representation of (L, bracket, alpha) on a module V with twist A is a
skew bilinear map rho from pairs of algebra elements to endomorphisms
of V, subject to three identities checked by :func:`verify_representation`:

  (R1)  rho(a x, a y) A = A rho(x, y)
  (R2)  rho([x,y,z], a u) A = rho(a y, a z) rho(x, u)
                            + rho(a z, a x) rho(y, u)
                            + rho(a x, a y) rho(z, u)
  (R3)  rho(a x, a y) rho(z, u) = rho(a z, a u) rho(x, y)
                                + rho([x,y,z], a u) A
                                + rho(a z, [x,y,u]) A

The adjoint action of the algebra on itself always satisfies these for
a multiplicative algebra; the dual of a representation is verified per
instance rather than assumed, because it can fail for twists that do
not commute with the action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebras import Hom3LieAlgebra
from .errors import DimensionMismatch, RepresentationInvalid
from .linalg import Mat, Vec


@dataclass(frozen=True)
class Representation:
    """Skew bilinear action of an algebra on a module.

    ``table`` maps increasing 0-based pairs (i, j) to the endomorphism
    rho(e_i, e_j); zero matrices are omitted.  ``twist`` is the module
    twist A.
    """

    algebra_dim: int
    module_dim: int
    twist: Mat
    table: dict[tuple[int, int], Mat]

    def __post_init__(self) -> None:
        m = self.module_dim
        if (self.twist.rows, self.twist.cols) != (m, m):
            raise DimensionMismatch("module twist must be square of the module dimension")
        clean: dict[tuple[int, int], Mat] = {}
        for (i, j), mat in self.table.items():
            if not (0 <= i < j < self.algebra_dim):
                raise DimensionMismatch(f"action key {(i, j)} is not strictly increasing in range")
            if (mat.rows, mat.cols) != (m, m):
                raise DimensionMismatch(f"action value for {(i, j)} has the wrong shape")
            if not mat.is_zero():
                clean[(i, j)] = mat
        object.__setattr__(self, "table", clean)

    def rho_basis(self, i: int, j: int) -> Mat:
        """rho on two basis vectors, in any order, with sign extension."""
        if i == j:
            return Mat.zero(self.module_dim, self.module_dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        mat = self.table.get((i, j))
        if mat is None:
            return Mat.zero(self.module_dim, self.module_dim)
        return mat if sign == 1 else -mat

    def apply(self, x: Vec, y: Vec) -> Mat:
        """Bilinear skew extension rho(x, y) for arbitrary vectors."""
        if len(x) != self.algebra_dim or len(y) != self.algebra_dim:
            raise DimensionMismatch("action arguments must match the algebra dimension")
        acc = Mat.zero(self.module_dim, self.module_dim)
        for i, xi in x.nonzero():
            for j, yj in y.nonzero():
                if i == j:
                    continue
                mat = self.rho_basis(i, j)
                if not mat.is_zero():
                    acc = acc + mat.scale(xi * yj)
        return acc


def rho_apply(r: Representation, x: Vec, y: Vec) -> Mat:
    return r.apply(x, y)


@dataclass(frozen=True)
class RepresentationReport:
    """Per-identity outcome of the representation sweep."""

    twist_ok: bool
    bracket_action_ok: bool
    exchange_ok: bool
    witnesses: tuple[tuple[str, tuple[int, ...]], ...]
    violations_total: int

    @property
    def ok(self) -> bool:
        return self.twist_ok and self.bracket_action_ok and self.exchange_ok


def verify_representation(L: Hom3LieAlgebra, r: Representation) -> RepresentationReport:
    """Sweep (R1) over basis pairs and (R2)-(R3) over basis quadruples."""
    if r.algebra_dim != L.dim:
        raise DimensionMismatch("representation is over a different algebra dimension")
    n = L.dim
    acols = L.twist_cols()
    a = r.twist
    raa = {(i, j): r.apply(acols[i], acols[j]) for i in range(n) for j in range(n)}
    rho = r.rho_basis

    witnesses: list[tuple[str, tuple[int, ...]]] = []
    totals = [0, 0, 0]

    def note(slot: int, name: str, idx: tuple[int, ...]) -> None:
        totals[slot] += 1
        if len(witnesses) < 16:
            witnesses.append((name, idx))

    for i in range(n):
        for j in range(n):
            if raa[(i, j)] @ a != a @ rho(i, j):
                note(0, "twist", (i, j))

    for x, y, z, u in itertools.product(range(n), repeat=4):
        rbr = r.apply(L.bracket_basis(x, y, z), acols[u])
        lhs = rbr @ a
        rhs = raa[(y, z)] @ rho(x, u) + raa[(z, x)] @ rho(y, u) + raa[(x, y)] @ rho(z, u)
        if lhs != rhs:
            note(1, "bracket_action", (x, y, z, u))
        lhs3 = raa[(x, y)] @ rho(z, u)
        rhs3 = raa[(z, u)] @ rho(x, y) + rbr @ a + r.apply(acols[z], L.bracket_basis(x, y, u)) @ a
        if lhs3 != rhs3:
            note(2, "exchange", (x, y, z, u))

    return RepresentationReport(
        twist_ok=totals[0] == 0,
        bracket_action_ok=totals[1] == 0,
        exchange_ok=totals[2] == 0,
        witnesses=tuple(witnesses),
        violations_total=sum(totals),
    )


def adjoint_rep(L: Hom3LieAlgebra) -> Representation:
    """The algebra acting on itself by ad(x, y) = [x, y, .]."""
    n = L.dim
    table = {}
    for i, j in itertools.combinations(range(n), 2):
        mat = Mat.from_cols([L.bracket_basis(i, j, c) for c in range(n)])
        if not mat.is_zero():
            table[(i, j)] = mat
    return Representation(n, n, L.twist, table)


def dual_rep(r: Representation) -> Representation:
    """Dual module: rho*(x, y) = -rho(x, y)^T with twist A^T.

    In dual coordinates, (rho*(x,y) f)(v) = -f(rho(x,y) v) and the
    twist acts by precomposition, whose matrix is the transpose.
    """
    table = {key: -mat.transpose() for key, mat in r.table.items()}
    return Representation(r.algebra_dim, r.module_dim, r.twist.transpose(), table)


def coadjoint_rep(L: Hom3LieAlgebra) -> Representation:
    """Dual of the adjoint action: ad*(x, y) f = -f([x, y, .])."""
    return dual_rep(adjoint_rep(L))


def semidirect_product(L: Hom3LieAlgebra, r: Representation) -> Hom3LieAlgebra:
    """Algebra on L + V with bracket

        [u+X, v+Y, w+Z] = [u,v,w] + rho(u,v) Z + rho(w,u) Y + rho(v,w) X

    and block-diagonal twist.  The sign pattern is skew-consistent, so
    the result is an ordinary structure-constant table.
    """
    rep = verify_representation(L, r)
    if not rep.ok:
        raise RepresentationInvalid(
            f"action fails the representation identities ({rep.violations_total} violations)"
        )
    return _semidirect_table(L, r)


def _semidirect_table(L: Hom3LieAlgebra, r: Representation) -> Hom3LieAlgebra:
    """Unchecked semidirect-product table; see :func:`semidirect_product`."""
    n, m = L.dim, r.module_dim
    table: dict[tuple[int, int, int], Vec] = {}
    zmod = Vec.zero(m)
    for key, value in L.table.items():
        table[key] = value.concat(zmod)
    zalg = Vec.zero(n)
    for (i, j), mat in r.table.items():
        for c in range(m):
            col = mat.col(c)
            if not col.is_zero():
                table[(i, j, n + c)] = zalg.concat(col)
    return Hom3LieAlgebra(n + m, table, L.twist.block_diag(r.twist))

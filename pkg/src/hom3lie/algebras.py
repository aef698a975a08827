"""Hom 3-Lie algebras with exact rational structure constants.

An algebra is a triple (L, [.,.,.], alpha): a ternary bracket that is
skew-symmetric and trilinear, together with a linear twist map alpha
entering the twisted fundamental (hom-Jacobi) identity

    [a(x), a(y), [u, v, w]] = [[x, y, u], a(v), a(w)]
                            + [a(u), [x, y, v], a(w)]
                            + [a(u), a(v), [x, y, w]].

Structure constants are stored only on strictly increasing basis
triples; the full bracket is the unique skew trilinear extension, so
skew-symmetry holds by construction and cannot be violated by input.
Basis indices are 0-based throughout the Python API (the JSON file
formats are 1-based).

Verification sweeps run over basis tuples, which suffices by
multilinearity: the hom-Jacobi sweep uses all ordered pairs (x, y) and
all strictly increasing triples (u, v, w).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

from .errors import DimensionMismatch, IdealRequired
from .linalg import (
    Mat,
    Subspace,
    Vec,
    rank,
    subspace_contains,
)

MAX_WITNESSES = 16

BracketTable = Mapping[tuple[int, int, int], Vec]


def sort3(i: int, j: int, k: int) -> Optional[tuple[int, tuple[int, int, int]]]:
    """Sort a triple of indices, returning (sign, sorted) or None on repeats."""
    if i == j or j == k or i == k:
        return None
    s = 1
    a, b, c = i, j, k
    if a > b:
        a, b, s = b, a, -s
    if b > c:
        b, c, s = c, b, -s
    if a > b:
        a, b, s = b, a, -s
    return s, (a, b, c)


def increasing_triples(n: int) -> Iterable[tuple[int, int, int]]:
    return itertools.combinations(range(n), 3)


@dataclass(frozen=True)
class Hom3LieAlgebra:
    """Finite-dimensional hom 3-Lie algebra over the exact rationals.

    ``table`` maps strictly increasing 0-based triples (i, j, k) to the
    value of [e_i, e_j, e_k]; triples with zero value are omitted.
    ``twist`` is the matrix of alpha in the same basis.
    """

    dim: int
    table: dict[tuple[int, int, int], Vec]
    twist: Mat

    def __post_init__(self) -> None:
        n = self.dim
        if self.twist.rows != n or self.twist.cols != n:
            raise DimensionMismatch("twist must be a square matrix of the algebra dimension")
        clean: dict[tuple[int, int, int], Vec] = {}
        for key, value in self.table.items():
            i, j, k = key
            if not (0 <= i < j < k < n):
                raise DimensionMismatch(f"bracket key {key} is not strictly increasing in range")
            if len(value) != n:
                raise DimensionMismatch(f"bracket value for {key} has wrong length")
            if not value.is_zero():
                clean[key] = value
        object.__setattr__(self, "table", clean)

    def bracket_basis(self, i: int, j: int, k: int) -> Vec:
        """Bracket of three basis vectors, in any order, with sign extension."""
        s = sort3(i, j, k)
        if s is None:
            return Vec.zero(self.dim)
        sign, key = s
        value = self.table.get(key)
        if value is None:
            return Vec.zero(self.dim)
        return value if sign == 1 else -value

    def bracket(self, x: Vec, y: Vec, z: Vec) -> Vec:
        """Trilinear skew extension of the structure constants."""
        n = self.dim
        if len(x) != n or len(y) != n or len(z) != n:
            raise DimensionMismatch("bracket arguments must match the algebra dimension")
        acc = [v for v in Vec.zero(n)]
        for i, xi in x.nonzero():
            for j, yj in y.nonzero():
                if j == i:
                    continue
                xy = xi * yj
                for k, zk in z.nonzero():
                    if k == i or k == j:
                        continue
                    val = self.bracket_basis(i, j, k)
                    if val.is_zero():
                        continue
                    c = xy * zk
                    for t, vt in val.nonzero():
                        acc[t] += c * vt
        return Vec(tuple(acc))

    def twist_cols(self) -> list[Vec]:
        """Images alpha(e_i) of the basis, as columns."""
        return [self.twist.col(i) for i in range(self.dim)]

    def is_abelian(self) -> bool:
        return not self.table


@dataclass(frozen=True)
class Violation:
    """One failed instance of an identity, with both evaluated sides."""

    identity: str
    indices: tuple[int, ...]
    left: Vec
    right: Vec


@dataclass(frozen=True)
class AlgebraReport:
    """Outcome of verification sweeps over an algebra.

    Flags are None when the corresponding identity was not checked.
    Witnesses are capped at MAX_WITNESSES; ``violations_total`` is the
    exact count.
    """

    skew_ok: Optional[bool] = None
    hom_jacobi_ok: Optional[bool] = None
    multiplicative_ok: Optional[bool] = None
    regular_ok: Optional[bool] = None
    violations: tuple[Violation, ...] = ()
    violations_total: int = 0

    @property
    def ok(self) -> bool:
        """True when every checked identity holds."""
        return not any(
            flag is False
            for flag in (self.skew_ok, self.hom_jacobi_ok, self.multiplicative_ok, self.regular_ok)
        )

    def merged(self, other: "AlgebraReport") -> "AlgebraReport":
        def pick(a: Optional[bool], b: Optional[bool]) -> Optional[bool]:
            if a is None:
                return b
            if b is None:
                return a
            return a and b

        witnesses = (self.violations + other.violations)[:MAX_WITNESSES]
        return AlgebraReport(
            skew_ok=pick(self.skew_ok, other.skew_ok),
            hom_jacobi_ok=pick(self.hom_jacobi_ok, other.hom_jacobi_ok),
            multiplicative_ok=pick(self.multiplicative_ok, other.multiplicative_ok),
            regular_ok=pick(self.regular_ok, other.regular_ok),
            violations=witnesses,
            violations_total=self.violations_total + other.violations_total,
        )


class WitnessLog:
    """Bounded violation collector with an exact total count."""

    def __init__(self) -> None:
        self.items: list[Violation] = []
        self.total = 0

    def add(self, identity: str, indices: tuple[int, ...], left: Vec, right: Vec) -> None:
        self.total += 1
        if len(self.items) < MAX_WITNESSES:
            self.items.append(Violation(identity, indices, left, right))

    @property
    def clean(self) -> bool:
        return self.total == 0


def skew_violations(dim: int, value_at: Callable[[int, int, int], Vec]) -> WitnessLog:
    """Check a full ordered-triple table for skew-symmetry.

    ``value_at`` gives the table on arbitrary ordered basis triples.
    Repeated indices must yield zero; permutations must flip sign.
    """
    w = WitnessLog()
    for i, j, k in itertools.product(range(dim), repeat=3):
        if len({i, j, k}) < 3:
            v = value_at(i, j, k)
            if not v.is_zero():
                w.add("skew", (i, j, k), v, Vec.zero(len(v)))
            continue
        if not (i < j < k):
            continue
        base = value_at(i, j, k)
        for perm in itertools.permutations((i, j, k)):
            s = sort3(*perm)
            assert s is not None
            sign, _ = s
            expected = base if sign == 1 else -base
            got = value_at(*perm)
            if got != expected:
                w.add("skew", perm, got, expected)
    return w


def verify_hom_jacobi(L: Hom3LieAlgebra) -> AlgebraReport:
    """Sweep the hom-Jacobi identity over all basis instantiations.

    (x, y) ranges over all ordered pairs and (u, v, w) over strictly
    increasing triples; by multilinearity and skewness this is
    equivalent to the identity on arbitrary vectors.
    """
    n = L.dim
    acols = L.twist_cols()
    w = WitnessLog()
    for a in range(n):
        for b in range(n):
            ax, ay = acols[a], acols[b]
            for u, v, wi in increasing_triples(n):
                inner = L.bracket_basis(u, v, wi)
                lhs = L.bracket(ax, ay, inner)
                rhs = (
                    L.bracket(L.bracket_basis(a, b, u), acols[v], acols[wi])
                    + L.bracket(acols[u], L.bracket_basis(a, b, v), acols[wi])
                    + L.bracket(acols[u], acols[v], L.bracket_basis(a, b, wi))
                )
                if lhs != rhs:
                    w.add("hom_jacobi", (a, b, u, v, wi), lhs, rhs)
    return AlgebraReport(hom_jacobi_ok=w.clean, violations=tuple(w.items), violations_total=w.total)


def verify_multiplicative(L: Hom3LieAlgebra) -> AlgebraReport:
    """Check alpha([e_i,e_j,e_k]) = [alpha e_i, alpha e_j, alpha e_k] on all i<j<k."""
    acols = L.twist_cols()
    w = WitnessLog()
    for i, j, k in increasing_triples(L.dim):
        lhs = L.twist.apply(L.bracket_basis(i, j, k))
        rhs = L.bracket(acols[i], acols[j], acols[k])
        if lhs != rhs:
            w.add("multiplicative", (i, j, k), lhs, rhs)
    return AlgebraReport(
        multiplicative_ok=w.clean, violations=tuple(w.items), violations_total=w.total
    )


def verify_regular(L: Hom3LieAlgebra) -> AlgebraReport:
    """Regular = multiplicative with an invertible twist."""
    rep = verify_multiplicative(L)
    invertible = rank(L.twist) == L.dim
    return AlgebraReport(
        multiplicative_ok=rep.multiplicative_ok,
        regular_ok=bool(rep.multiplicative_ok) and invertible,
        violations=rep.violations,
        violations_total=rep.violations_total,
    )


def is_subalgebra(L: Hom3LieAlgebra, s: Subspace) -> bool:
    """True iff s is twist-stable and closed under the bracket."""
    if s.ambient_dim != L.dim:
        raise DimensionMismatch("subspace ambient dimension does not match the algebra")
    for v in s.basis:
        if not subspace_contains(s, L.twist.apply(v)):
            return False
    for a, b, c in itertools.combinations(s.basis, 3):
        if not subspace_contains(s, L.bracket(a, b, c)):
            return False
    return True


def is_ideal(L: Hom3LieAlgebra, s: Subspace) -> bool:
    """True iff s is twist-stable and [s, L, L] lies in s.

    Twist stability is required so the quotient twist is well defined.
    """
    if s.ambient_dim != L.dim:
        raise DimensionMismatch("subspace ambient dimension does not match the algebra")
    for v in s.basis:
        if not subspace_contains(s, L.twist.apply(v)):
            return False
    n = L.dim
    for v in s.basis:
        for j in range(n):
            for k in range(j + 1, n):
                if not subspace_contains(s, L.bracket(v, Vec.basis(n, j), Vec.basis(n, k))):
                    return False
    return True


def direct_sum(L: Hom3LieAlgebra, G: Hom3LieAlgebra) -> Hom3LieAlgebra:
    """Componentwise bracket on L + G with block-diagonal twist."""
    n, m = L.dim, G.dim
    table: dict[tuple[int, int, int], Vec] = {}
    zpad = Vec.zero(m)
    for key, value in L.table.items():
        table[key] = value.concat(zpad)
    zlead = Vec.zero(n)
    for (i, j, k), value in G.table.items():
        table[(i + n, j + n, k + n)] = zlead.concat(value)
    return Hom3LieAlgebra(n + m, table, L.twist.block_diag(G.twist))


def is_morphism(phi: Mat, L: Hom3LieAlgebra, G: Hom3LieAlgebra) -> bool:
    """True iff phi carries brackets to brackets and intertwines the twists."""
    if phi.cols != L.dim or phi.rows != G.dim:
        raise DimensionMismatch("morphism candidate has the wrong shape")
    if phi @ L.twist != G.twist @ phi:
        return False
    cols = [phi.col(i) for i in range(L.dim)]
    for i, j, k in increasing_triples(L.dim):
        if phi.apply(L.bracket_basis(i, j, k)) != G.bracket(cols[i], cols[j], cols[k]):
            return False
    return True


def graph(phi: Mat, L: Hom3LieAlgebra, G: Hom3LieAlgebra) -> Subspace:
    """Span of { e_i + phi(e_i) } inside the direct sum of L and G."""
    if phi.cols != L.dim or phi.rows != G.dim:
        raise DimensionMismatch("graph candidate has the wrong shape")
    gens = [Vec.basis(L.dim, i).concat(phi.col(i)) for i in range(L.dim)]
    return Subspace.span(L.dim + G.dim, gens)


def quotient(L: Hom3LieAlgebra, ideal: Subspace) -> tuple[Hom3LieAlgebra, Mat]:
    """Quotient algebra by a twist-stable ideal, plus the projection matrix.

    The quotient basis consists of the non-pivot coordinates of the
    ideal's canonical basis, which makes the output deterministic.
    """
    if not is_ideal(L, ideal):
        raise IdealRequired("quotient needs a twist-stable ideal")
    n = L.dim
    pivots = ideal.pivots()
    comp = [c for c in range(n) if c not in pivots]
    q = len(comp)
    proj = Mat.from_rows(
        [[ideal.reduce(Vec.basis(n, g))[c] for g in range(n)] for c in comp], cols=n
    )
    table: dict[tuple[int, int, int], Vec] = {}
    for a, b, c in increasing_triples(q):
        value = proj.apply(L.bracket_basis(comp[a], comp[b], comp[c]))
        if not value.is_zero():
            table[(a, b, c)] = value
    twist = Mat.from_cols([proj.apply(L.twist.col(comp[a])) for a in range(q)]) if q else Mat.zero(0, 0)
    return Hom3LieAlgebra(q, table, twist), proj


def subspace_bracket(L: Hom3LieAlgebra, s1: Subspace, s2: Subspace, s3: Subspace) -> Subspace:
    """Canonical span of all brackets of basis triples from the three subspaces."""
    for s in (s1, s2, s3):
        if s.ambient_dim != L.dim:
            raise DimensionMismatch("subspace ambient dimension does not match the algebra")
    gens = []
    for a in s1.basis:
        for b in s2.basis:
            for c in s3.basis:
                v = L.bracket(a, b, c)
                if not v.is_zero():
                    gens.append(v)
    return Subspace.span(L.dim, gens)

"""Cocycles, module extensions and invariant bilinear forms.

A 3-cocycle for a representation (V, rho, A) is a skew trilinear map
theta from algebra triples to V satisfying the twisted cocycle identity
(checked over all basis 5-tuples by :func:`verify_cocycle`).  Adding a
cocycle to the semidirect-product bracket gives the theta-extension on
L + V; specialising V to the dual module of the adjoint action gives
the dual-space extension on L + L*, whose canonical hyperbolic pairing
q((x,f), (y,g)) = f(y) + g(x) is always non-degenerate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebras import (
    MAX_WITNESSES,
    AlgebraReport,
    Hom3LieAlgebra,
    increasing_triples,
    is_morphism,
    sort3,
    verify_hom_jacobi,
    verify_multiplicative,
)
from .errors import CocycleInvalid, DimensionMismatch, RepresentationInvalid
from .linalg import Mat, Vec, hstack, rank, vstack
from .representations import Representation, _semidirect_table, coadjoint_rep, verify_representation


@dataclass(frozen=True)
class Cocycle:
    """Skew trilinear map from algebra triples into a module.

    ``table`` maps increasing 0-based triples to module vectors; zero
    values are omitted and the full map is the skew extension.
    """

    algebra_dim: int
    module_dim: int
    table: dict[tuple[int, int, int], Vec]

    def __post_init__(self) -> None:
        clean: dict[tuple[int, int, int], Vec] = {}
        for key, value in self.table.items():
            i, j, k = key
            if not (0 <= i < j < k < self.algebra_dim):
                raise DimensionMismatch(f"cocycle key {key} is not strictly increasing in range")
            if len(value) != self.module_dim:
                raise DimensionMismatch(f"cocycle value for {key} has the wrong length")
            if not value.is_zero():
                clean[key] = value
        object.__setattr__(self, "table", clean)

    @staticmethod
    def zero(algebra_dim: int, module_dim: int) -> "Cocycle":
        return Cocycle(algebra_dim, module_dim, {})

    def value_basis(self, i: int, j: int, k: int) -> Vec:
        s = sort3(i, j, k)
        if s is None:
            return Vec.zero(self.module_dim)
        sign, key = s
        value = self.table.get(key)
        if value is None:
            return Vec.zero(self.module_dim)
        return value if sign == 1 else -value

    def apply(self, x: Vec, y: Vec, z: Vec) -> Vec:
        if len(x) != self.algebra_dim or len(y) != self.algebra_dim or len(z) != self.algebra_dim:
            raise DimensionMismatch("cocycle arguments must match the algebra dimension")
        acc = [c for c in Vec.zero(self.module_dim)]
        for i, xi in x.nonzero():
            for j, yj in y.nonzero():
                if j == i:
                    continue
                xy = xi * yj
                for k, zk in z.nonzero():
                    if k == i or k == j:
                        continue
                    val = self.value_basis(i, j, k)
                    if val.is_zero():
                        continue
                    c = xy * zk
                    for t, vt in val.nonzero():
                        acc[t] += c * vt
        return Vec(tuple(acc))

    def __add__(self, other: "Cocycle") -> "Cocycle":
        if (self.algebra_dim, self.module_dim) != (other.algebra_dim, other.module_dim):
            raise DimensionMismatch("cocycle shapes differ")
        table = dict(self.table)
        for key, value in other.table.items():
            table[key] = table[key] + value if key in table else value
        return Cocycle(self.algebra_dim, self.module_dim, table)


@dataclass(frozen=True)
class BilinForm:
    """Bilinear form given by its Gram matrix."""

    dim: int
    gram: Mat

    def __post_init__(self) -> None:
        if (self.gram.rows, self.gram.cols) != (self.dim, self.dim):
            raise DimensionMismatch("Gram matrix must be square of the stated dimension")

    def eval(self, x: Vec, y: Vec) -> Fraction:
        return x.dot(self.gram.apply(y))


def hyperbolic_form(n: int) -> BilinForm:
    """The pairing q((x,f),(y,g)) = f(y) + g(x) on L + L*: Gram [[0,I],[I,0]]."""
    rows = [[1 if j == i + n or i == j + n else 0 for j in range(2 * n)] for i in range(2 * n)]
    return BilinForm(2 * n, Mat.from_rows(rows, cols=2 * n))


@dataclass(frozen=True)
class CocycleReport:
    ok: bool
    witnesses: tuple[tuple[int, ...], ...]
    violations_total: int


def verify_cocycle(L: Hom3LieAlgebra, r: Representation, th: Cocycle) -> CocycleReport:
    """Sweep the twisted cocycle identity over all basis 5-tuples.

    For each (x, y, z, u, v) the sum

        theta([x,u,v], ay, az) + theta([y,u,v], az, ax)
        + theta(ax, ay, [z,u,v]) - theta([x,y,z], au, av)
        + rho(ay, az) theta(x,u,v) + rho(az, ax) theta(y,u,v)
        + rho(ax, ay) theta(z,u,v) - rho(au, av) theta(x,y,z)

    must vanish.
    """
    n = L.dim
    if th.algebra_dim != n or r.algebra_dim != n or th.module_dim != r.module_dim:
        raise DimensionMismatch("algebra, representation and cocycle dimensions must agree")
    acols = L.twist_cols()
    raa = {(i, j): r.apply(acols[i], acols[j]) for i in range(n) for j in range(n)}
    witnesses: list[tuple[int, ...]] = []
    total = 0
    for x, y, z, u, v in itertools.product(range(n), repeat=5):
        s = (
            th.apply(L.bracket_basis(x, u, v), acols[y], acols[z])
            + th.apply(L.bracket_basis(y, u, v), acols[z], acols[x])
            + th.apply(acols[x], acols[y], L.bracket_basis(z, u, v))
            - th.apply(L.bracket_basis(x, y, z), acols[u], acols[v])
            + raa[(y, z)].apply(th.value_basis(x, u, v))
            + raa[(z, x)].apply(th.value_basis(y, u, v))
            + raa[(x, y)].apply(th.value_basis(z, u, v))
            - raa[(u, v)].apply(th.value_basis(x, y, z))
        )
        if not s.is_zero():
            total += 1
            if len(witnesses) < MAX_WITNESSES:
                witnesses.append((x, y, z, u, v))
    return CocycleReport(ok=total == 0, witnesses=tuple(witnesses), violations_total=total)


def coboundary(L: Hom3LieAlgebra, r: Representation, f: Mat) -> Cocycle:
    """The cocycle of a linear map f: L -> V,

        theta_f(x,y,z) = f([x,y,z]) - rho(x,y) f(z) - rho(z,x) f(y) - rho(y,z) f(x).
    """
    n = L.dim
    if f.cols != n or f.rows != r.module_dim:
        raise DimensionMismatch("coboundary map has the wrong shape")
    fc = [f.col(i) for i in range(n)]
    table = {}
    for i, j, k in increasing_triples(n):
        value = (
            f.apply(L.bracket_basis(i, j, k))
            - r.rho_basis(i, j).apply(fc[k])
            - r.rho_basis(k, i).apply(fc[j])
            - r.rho_basis(j, k).apply(fc[i])
        )
        if not value.is_zero():
            table[(i, j, k)] = value
    return Cocycle(n, r.module_dim, table)


def _t_theta_table(L: Hom3LieAlgebra, r: Representation, th: Cocycle) -> Hom3LieAlgebra:
    """Unchecked theta-extension table: semidirect bracket plus theta."""
    alg = _semidirect_table(L, r)
    table = dict(alg.table)
    n, m = L.dim, r.module_dim
    zmod = Vec.zero(m)
    for key, value in th.table.items():
        base = table.get(key, Vec.zero(n + m))
        combined = base + Vec.zero(n).concat(value)
        if combined.is_zero():
            table.pop(key, None)
        else:
            table[key] = combined
    return Hom3LieAlgebra(n + m, table, alg.twist)


def t_theta_extension(
    L: Hom3LieAlgebra, r: Representation, th: Cocycle, check: bool = True
) -> tuple[Hom3LieAlgebra, AlgebraReport]:
    """Extension of L by the module V along a 3-cocycle.

    The bracket is the semidirect-product bracket with theta(x1,x2,x3)
    added in the module component; the twist stays block-diagonal.  The
    construction is re-verified and the report returned rather than
    assumed, since the compatibility hypotheses behind it are not
    enforceable for a general module.

    With ``check`` set, the representation and cocycle identities are
    preconditions and violations raise.
    """
    if check:
        rep = verify_representation(L, r)
        if not rep.ok:
            raise RepresentationInvalid(
                f"action fails the representation identities ({rep.violations_total} violations)"
            )
        co = verify_cocycle(L, r, th)
        if not co.ok:
            raise CocycleInvalid(
                f"map fails the cocycle identity ({co.violations_total} violations)"
            )
    alg = _t_theta_table(L, r, th)
    report = verify_hom_jacobi(alg).merged(verify_multiplicative(alg))
    report = AlgebraReport(
        skew_ok=True,
        hom_jacobi_ok=report.hom_jacobi_ok,
        multiplicative_ok=report.multiplicative_ok,
        violations=report.violations,
        violations_total=report.violations_total,
    )
    return alg, report


def t_star_extension(L: Hom3LieAlgebra, th: Cocycle) -> tuple[Hom3LieAlgebra, BilinForm]:
    """Extension of L by its dual space along theta, with the hyperbolic form.

    The module is L* with the dual of the adjoint action and twist
    f -> f . alpha; the bracket is

        [x1+f1, x2+f2, x3+f3] = [x1,x2,x3] + theta(x1,x2,x3)
                              + ad*(x1,x2) f3 + ad*(x3,x1) f2 + ad*(x2,x3) f1.

    Returns the 2n-dimensional algebra and the pairing q, whose Gram
    matrix [[0,I],[I,0]] is non-degenerate for every input.
    """
    n = L.dim
    if th.algebra_dim != n or th.module_dim != n:
        raise DimensionMismatch("dual-space extension needs a cocycle with values in L*")
    alg = _t_theta_table(L, coadjoint_rep(L), th)
    return alg, hyperbolic_form(n)


def theta_cyclic_ok(L: Hom3LieAlgebra, th: Cocycle) -> bool:
    """Decide theta(x1,x2,x3)(x4) + theta(x1,x2,x4)(x3) = 0 on the basis.

    Sweeping increasing triples against every fourth index is complete:
    together with skewness of theta it forces the full identity.
    """
    n = L.dim
    if th.algebra_dim != n or th.module_dim != n:
        raise DimensionMismatch("cyclicity concerns cocycles with values in L*")
    for i, j, k in increasing_triples(n):
        for l in range(n):
            if th.value_basis(i, j, k)[l] + th.value_basis(i, j, l)[k] != 0:
                return False
    return True


def cyclic_part(th: Cocycle) -> Cocycle:
    """Project onto the maps satisfying the cyclic pairing identity.

    Viewing theta as a 4-tensor W(i,j,k,l) = theta(i,j,k)(l), the
    identity says W is antisymmetric in (k, l); combined with skewness
    in (i,j,k) that makes W totally antisymmetric, so the projector is
    full alternation over the symmetric group S4.
    """
    n = th.algebra_dim
    if th.module_dim != n:
        raise DimensionMismatch("cyclic projection concerns cocycles with values in L*")
    table = {}
    denom = Fraction(1, 24)
    perms = [(p, _parity(p)) for p in itertools.permutations(range(4))]
    for i, j, k in increasing_triples(n):
        entries = []
        for l in range(n):
            base = (i, j, k, l)
            s = Fraction(0)
            for p, sgn in perms:
                a, b, c, d = (base[p[0]], base[p[1]], base[p[2]], base[p[3]])
                s += sgn * th.value_basis(a, b, c)[d]
            entries.append(s * denom)
        value = Vec(tuple(entries))
        if not value.is_zero():
            table[(i, j, k)] = value
    return Cocycle(n, n, table)


def _parity(p: tuple[int, ...]) -> int:
    inversions = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class MetricReport:
    """Symmetry, non-degeneracy and invariance of a form on an algebra.

    ``twist_invariant_ok`` reports compatibility with the twist as an
    extra, informational flag; it does not enter ``metric_ok``.
    """

    symmetric_ok: bool
    nondegenerate_ok: bool
    invariant_ok: bool
    twist_invariant_ok: bool
    witnesses: tuple[tuple[int, ...], ...]
    violations_total: int

    @property
    def metric_ok(self) -> bool:
        return self.symmetric_ok and self.nondegenerate_ok and self.invariant_ok


def verify_metric(alg: Hom3LieAlgebra, form: BilinForm) -> MetricReport:
    """Check B([x1,x2,x3], x4) + B([x1,x2,x4], x3) = 0 over basis 4-tuples."""
    n = alg.dim
    if form.dim != n:
        raise DimensionMismatch("form dimension does not match the algebra")
    gram = form.gram
    symmetric = gram == gram.transpose()
    nondeg = rank(gram) == n
    gt = gram.transpose()
    witnesses: list[tuple[int, ...]] = []
    total = 0
    for a, b in itertools.product(range(n), repeat=2):
        # paired(c)[d] = B([e_a, e_b, e_c], e_d)
        paired = [gt.apply(alg.bracket_basis(a, b, c)) for c in range(n)]
        for c in range(n):
            for dd in range(n):
                if paired[c][dd] + paired[dd][c] != 0:
                    total += 1
                    if len(witnesses) < MAX_WITNESSES:
                        witnesses.append((a, b, c, dd))
    twist_inv = alg.twist.transpose() @ gram @ alg.twist == gram
    return MetricReport(
        symmetric_ok=symmetric,
        nondegenerate_ok=nondeg,
        invariant_ok=total == 0,
        twist_invariant_ok=twist_inv,
        witnesses=tuple(witnesses),
        violations_total=total,
    )


def shift_isomorphism(
    L: Hom3LieAlgebra, r: Representation, th: Cocycle, f: Mat
) -> tuple[Mat, bool]:
    """The shift x + v -> x + f(x) + v between theta- and (theta+theta_f)-extensions.

    Returns the block map [[I, 0], [f, I]] together with the verdict of
    checking it as an algebra morphism between the two extensions
    (bracket preservation and twist intertwining) plus invertibility.
    """
    n, m = L.dim, r.module_dim
    if f.cols != n or f.rows != m:
        raise DimensionMismatch("shift map has the wrong shape")
    src = _t_theta_table(L, r, th)
    dst = _t_theta_table(L, r, th + coboundary(L, r, f))
    sigma = vstack([hstack([Mat.identity(n), Mat.zero(n, m)]),
                    hstack([f, Mat.identity(m)])])
    ok = rank(sigma) == n + m and is_morphism(sigma, src, dst)
    return sigma, ok


def is_isometry(
    g: Hom3LieAlgebra, b: BilinForm, gp: Hom3LieAlgebra, bp: BilinForm, sigma: Mat
) -> bool:
    """Invertible, bracket-preserving and form-preserving linear map."""
    if g.dim != gp.dim or b.dim != g.dim or bp.dim != gp.dim:
        raise DimensionMismatch("isometry candidates must share one dimension")
    if (sigma.rows, sigma.cols) != (g.dim, g.dim):
        raise DimensionMismatch("isometry candidate has the wrong shape")
    if rank(sigma) != g.dim:
        return False
    cols = [sigma.col(i) for i in range(g.dim)]
    for i, j, k in increasing_triples(g.dim):
        if sigma.apply(g.bracket_basis(i, j, k)) != gp.bracket(cols[i], cols[j], cols[k]):
            return False
    return sigma.transpose() @ bp.gram @ sigma == b.gram

"""A small catalog of hom 3-Lie algebras used across the test-suite.

Every catalog entry passes the hom-Jacobi and multiplicativity sweeps
(asserted in CI).  The same structures are shipped as JSON data files
and emitted by the ``fixtures`` CLI subcommand.
"""

from __future__ import annotations

from .algebras import Hom3LieAlgebra
from .linalg import Mat, Scalar, Vec, rat


def ab3() -> Hom3LieAlgebra:
    """3-dimensional abelian algebra with identity twist."""
    return Hom3LieAlgebra(3, {}, Mat.identity(3))


def ab3s() -> Hom3LieAlgebra:
    """3-dimensional abelian algebra with twist diag(2, 3, 5)."""
    return Hom3LieAlgebra(3, {}, Mat.diagonal([2, 3, 5]))


def l3() -> Hom3LieAlgebra:
    """[e1, e2, e3] = e1 with identity twist."""
    return Hom3LieAlgebra(3, {(0, 1, 2): Vec.of(1, 0, 0)}, Mat.identity(3))


def l3h(a: Scalar) -> Hom3LieAlgebra:
    """The L3 bracket with twist diag(a, 1, 1); singular when a = 0."""
    return Hom3LieAlgebra(3, {(0, 1, 2): Vec.of(1, 0, 0)}, Mat.diagonal([rat(a), 1, 1]))


def n4() -> Hom3LieAlgebra:
    """Nilpotent 4-dimensional algebra: [e1, e2, e3] = e4, identity twist."""
    return Hom3LieAlgebra(4, {(0, 1, 2): Vec.of(0, 0, 0, 1)}, Mat.identity(4))


def a4() -> Hom3LieAlgebra:
    """The 4-dimensional simple 3-Lie algebra with identity twist.

    [e1,e2,e3] = e4, [e1,e2,e4] = -e3, [e1,e3,e4] = e2, [e2,e3,e4] = -e1.
    """
    return Hom3LieAlgebra(
        4,
        {
            (0, 1, 2): Vec.of(0, 0, 0, 1),
            (0, 1, 3): Vec.of(0, 0, -1, 0),
            (0, 2, 3): Vec.of(0, 1, 0, 0),
            (1, 2, 3): Vec.of(-1, 0, 0, 0),
        },
        Mat.identity(4),
    )


def catalog() -> dict[str, Hom3LieAlgebra]:
    """All named fixtures; L3h is instantiated at a = 2."""
    return {
        "AB3": ab3(),
        "AB3s": ab3s(),
        "L3": l3(),
        "L3h2": l3h(2),
        "N4": n4(),
        "A4": a4(),
    }

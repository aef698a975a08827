"""Survey the bundled algebras: axioms, derivation grades, series.

Usage: python scripts/survey_fixtures.py [--max-k K]
"""

import argparse

from hom3lie.algebras import verify_hom_jacobi, verify_multiplicative, verify_regular
from hom3lie.derivations import derivation_space, fixed_space, inner_space
from hom3lie.fixtures import catalog
from hom3lie.structure import is_nilpotent, is_solvable, series


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=2)
    args = parser.parse_args()

    for name, alg in catalog().items():
        jac = verify_hom_jacobi(alg).hom_jacobi_ok
        mult = verify_multiplicative(alg).multiplicative_ok
        reg = verify_regular(alg).regular_ok
        print(f"== {name} (dim {alg.dim})")
        print(f"   hom-Jacobi {jac}  multiplicative {mult}  regular {reg}")
        dims = [derivation_space(alg, k).dimension for k in range(args.max_k + 1)]
        print(f"   derivation grades 0..{args.max_k}: {dims}")
        print(f"   twist-fixed subspace dim: {fixed_space(alg).dim}")
        print(f"   inner grade-1 dim: {inner_space(alg, 1).dimension}")
        derived = series(alg, "derived")
        descending = series(alg, "central_descending")
        print(f"   derived series dims: {[t.dim for t in derived.terms]}")
        print(f"   descending series dims: {[t.dim for t in descending.terms]}")
        print(f"   solvable length: {is_solvable(alg)}  nilpotent length: {is_nilpotent(alg)}")


if __name__ == "__main__":
    main()

"""JSON codecs for every value the command line reads or writes.

Rationals serialize as strings ``"p/q"`` (or ``"p"`` when the
denominator is one); plain integers are accepted as shorthand on input
and floats are rejected.  Basis indices are 1-based in files and
0-based in the Python API.  Output is canonical: sorted keys, two-space
indent, a single trailing newline, so equal values produce identical
bytes.

Schemas
-------
algebra         {"dim": n, "alpha": [[rat]], "brackets":
                 [{"args": [i,j,k], "value": {"idx": rat}}]}
representation  {"algebra": path, "module_dim": m, "A": [[rat]],
                 "rho": [{"args": [i,j], "matrix": [[rat]]}]}
cocycle         {"algebra": path, "module_dim": m, "theta":
                 [{"args": [i,j,k], "value": {"idx": rat}}]}
matrix          {"matrix": [[rat]]}
form            {"dim": n, "gram": [[rat]]}
subspace        {"ambient_dim": n, "basis": [[rat]]}

The ``algebra`` entry of representation and cocycle files is a path
relative to the referencing file; it is only resolved when the file is
loaded standalone, an explicitly supplied algebra always wins.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .algebras import Hom3LieAlgebra
from .extensions import BilinForm, Cocycle
from .linalg import Mat, Subspace, Vec
from .representations import Representation


class FileFormatError(ValueError):
    """Malformed input; the message names the offending location."""

    def __init__(self, message: str, location: str = "") -> None:
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def format_rat(x: Fraction) -> str:
    return str(x)


def parse_rat(x: Any, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise FileFormatError(f"expected an exact rational, got {x!r}", where)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise FileFormatError(f"bad rational literal {x!r}", where) from exc
    raise FileFormatError(f"expected an exact rational, got {type(x).__name__}", where)


def _expect(d: Any, key: str, where: str) -> Any:
    if not isinstance(d, dict):
        raise FileFormatError("expected an object", where)
    if key not in d:
        raise FileFormatError(f"missing key {key!r}", where)
    return d[key]


def _expect_int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FileFormatError(f"expected an integer, got {x!r}", where)
    return x


def vec_to_sparse(v: Vec) -> dict[str, str]:
    return {str(i + 1): format_rat(x) for i, x in v.nonzero()}


def vec_from_sparse(d: Any, n: int, where: str) -> Vec:
    if not isinstance(d, dict):
        raise FileFormatError("expected an object of index -> rational", where)
    entries = [Fraction(0)] * n
    for key, raw in d.items():
        try:
            idx = int(key)
        except ValueError as exc:
            raise FileFormatError(f"bad index {key!r}", where) from exc
        if not (1 <= idx <= n):
            raise FileFormatError(f"index {idx} out of range 1..{n}", where)
        entries[idx - 1] = parse_rat(raw, f"{where}[{key}]")
    return Vec(tuple(entries))


def vec_to_dense(v: Vec) -> list[str]:
    return [format_rat(x) for x in v]


def vec_from_dense(raw: Any, where: str, length: Optional[int] = None) -> Vec:
    if not isinstance(raw, list):
        raise FileFormatError("expected a list of rationals", where)
    if length is not None and len(raw) != length:
        raise FileFormatError(f"expected {length} entries, got {len(raw)}", where)
    return Vec(tuple(parse_rat(x, f"{where}[{i}]") for i, x in enumerate(raw)))


def mat_to_lists(m: Mat) -> list[list[str]]:
    return [[format_rat(m.at(r, c)) for c in range(m.cols)] for r in range(m.rows)]


def mat_from_lists(raw: Any, where: str,
                   rows: Optional[int] = None, cols: Optional[int] = None) -> Mat:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise FileFormatError("expected a non-empty list of rows", where)
    ncols = len(raw[0])
    if any(len(r) != ncols for r in raw):
        raise FileFormatError("ragged rows", where)
    if rows is not None and len(raw) != rows:
        raise FileFormatError(f"expected {rows} rows, got {len(raw)}", where)
    if cols is not None and ncols != cols:
        raise FileFormatError(f"expected {cols} columns, got {ncols}", where)
    return Mat.from_rows(
        [[parse_rat(x, f"{where}[{r}][{c}]") for c, x in enumerate(row)]
         for r, row in enumerate(raw)],
        cols=ncols,
    )


def _args_tuple(raw: Any, count: int, n: int, where: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != count:
        raise FileFormatError(f"expected {count} indices", where)
    idx = tuple(_expect_int(x, where) for x in raw)
    for x in idx:
        if not (1 <= x <= n):
            raise FileFormatError(f"index {x} out of range 1..{n}", where)
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise FileFormatError(f"indices {list(idx)} must be strictly increasing", where)
    return tuple(x - 1 for x in idx)


# -- algebra ---------------------------------------------------------------


def algebra_to_dict(L: Hom3LieAlgebra) -> dict:
    brackets = [
        {"args": [i + 1, j + 1, k + 1], "value": vec_to_sparse(v)}
        for (i, j, k), v in sorted(L.table.items())
    ]
    return {"dim": L.dim, "alpha": mat_to_lists(L.twist), "brackets": brackets}


def algebra_from_dict(d: Any, where: str = "algebra") -> Hom3LieAlgebra:
    n = _expect_int(_expect(d, "dim", where), f"{where}.dim")
    if n < 1:
        raise FileFormatError("dimension must be positive", f"{where}.dim")
    alpha = mat_from_lists(_expect(d, "alpha", where), f"{where}.alpha", rows=n, cols=n)
    raw_brackets = _expect(d, "brackets", where)
    if not isinstance(raw_brackets, list):
        raise FileFormatError("expected a list", f"{where}.brackets")
    table: dict[tuple[int, int, int], Vec] = {}
    for pos, entry in enumerate(raw_brackets):
        loc = f"{where}.brackets[{pos}]"
        args = _args_tuple(_expect(entry, "args", loc), 3, n, f"{loc}.args")
        if args in table:
            raise FileFormatError(f"duplicate bracket for {list(a + 1 for a in args)}", loc)
        table[args] = vec_from_sparse(_expect(entry, "value", loc), n, f"{loc}.value")
    return Hom3LieAlgebra(n, table, alpha)


# -- representation --------------------------------------------------------


def representation_to_dict(r: Representation, algebra_ref: str) -> dict:
    rho = [
        {"args": [i + 1, j + 1], "matrix": mat_to_lists(m)}
        for (i, j), m in sorted(r.table.items())
    ]
    return {
        "algebra": algebra_ref,
        "module_dim": r.module_dim,
        "A": mat_to_lists(r.twist),
        "rho": rho,
    }


def representation_from_dict(
    d: Any, algebra: Hom3LieAlgebra, where: str = "representation"
) -> Representation:
    m = _expect_int(_expect(d, "module_dim", where), f"{where}.module_dim")
    if m < 1:
        raise FileFormatError("module dimension must be positive", f"{where}.module_dim")
    twist = mat_from_lists(_expect(d, "A", where), f"{where}.A", rows=m, cols=m)
    raw = _expect(d, "rho", where)
    if not isinstance(raw, list):
        raise FileFormatError("expected a list", f"{where}.rho")
    table: dict[tuple[int, int], Mat] = {}
    for pos, entry in enumerate(raw):
        loc = f"{where}.rho[{pos}]"
        i, j = _args_tuple(_expect(entry, "args", loc), 2, algebra.dim, f"{loc}.args")
        if (i, j) in table:
            raise FileFormatError(f"duplicate action for {[i + 1, j + 1]}", loc)
        table[(i, j)] = mat_from_lists(_expect(entry, "matrix", loc), f"{loc}.matrix",
                                       rows=m, cols=m)
    return Representation(algebra.dim, m, twist, table)


# -- cocycle ---------------------------------------------------------------


def cocycle_to_dict(th: Cocycle, algebra_ref: str) -> dict:
    theta = [
        {"args": [i + 1, j + 1, k + 1], "value": vec_to_sparse(v)}
        for (i, j, k), v in sorted(th.table.items())
    ]
    return {"algebra": algebra_ref, "module_dim": th.module_dim, "theta": theta}


def cocycle_from_dict(d: Any, algebra: Hom3LieAlgebra, where: str = "cocycle") -> Cocycle:
    m = _expect_int(_expect(d, "module_dim", where), f"{where}.module_dim")
    if m < 1:
        raise FileFormatError("module dimension must be positive", f"{where}.module_dim")
    raw = _expect(d, "theta", where)
    if not isinstance(raw, list):
        raise FileFormatError("expected a list", f"{where}.theta")
    table: dict[tuple[int, int, int], Vec] = {}
    for pos, entry in enumerate(raw):
        loc = f"{where}.theta[{pos}]"
        args = _args_tuple(_expect(entry, "args", loc), 3, algebra.dim, f"{loc}.args")
        if args in table:
            raise FileFormatError(f"duplicate value for {[a + 1 for a in args]}", loc)
        table[args] = vec_from_sparse(_expect(entry, "value", loc), m, f"{loc}.value")
    return Cocycle(algebra.dim, m, table)


# -- simple wrappers -------------------------------------------------------


def matrix_to_dict(m: Mat) -> dict:
    return {"matrix": mat_to_lists(m)}


def matrix_from_dict(d: Any, where: str = "matrix") -> Mat:
    return mat_from_lists(_expect(d, "matrix", where), f"{where}.matrix")


def form_to_dict(b: BilinForm) -> dict:
    return {"dim": b.dim, "gram": mat_to_lists(b.gram)}


def form_from_dict(d: Any, where: str = "form") -> BilinForm:
    n = _expect_int(_expect(d, "dim", where), f"{where}.dim")
    return BilinForm(n, mat_from_lists(_expect(d, "gram", where), f"{where}.gram",
                                       rows=n, cols=n))


def subspace_to_dict(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "basis": [vec_to_dense(v) for v in s.basis]}


def subspace_from_dict(d: Any, where: str = "subspace") -> Subspace:
    n = _expect_int(_expect(d, "ambient_dim", where), f"{where}.ambient_dim")
    raw = _expect(d, "basis", where)
    if not isinstance(raw, list):
        raise FileFormatError("expected a list of vectors", f"{where}.basis")
    vecs = [vec_from_dense(row, f"{where}.basis[{i}]", length=n) for i, row in enumerate(raw)]
    return Subspace.span(n, vecs)


# -- files -----------------------------------------------------------------


def canonical_dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def read_json(path: Union[str, Path]) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(str(exc), str(p)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}", str(p)) from exc


def write_json(path: Union[str, Path], payload: Any) -> None:
    Path(path).write_text(canonical_dumps(payload), encoding="utf-8")


def load_algebra(path: Union[str, Path]) -> Hom3LieAlgebra:
    return algebra_from_dict(read_json(path), where=str(path))


def save_algebra(path: Union[str, Path], L: Hom3LieAlgebra) -> None:
    write_json(path, algebra_to_dict(L))


def load_representation(
    path: Union[str, Path], algebra: Optional[Hom3LieAlgebra] = None
) -> tuple[Hom3LieAlgebra, Representation]:
    p = Path(path)
    d = read_json(p)
    if algebra is None:
        ref = _expect(d, "algebra", str(p))
        if not isinstance(ref, str):
            raise FileFormatError("algebra reference must be a path string", str(p))
        algebra = load_algebra(p.parent / ref)
    return algebra, representation_from_dict(d, algebra, where=str(p))


def load_cocycle(
    path: Union[str, Path], algebra: Optional[Hom3LieAlgebra] = None
) -> tuple[Hom3LieAlgebra, Cocycle]:
    p = Path(path)
    d = read_json(p)
    if algebra is None:
        ref = _expect(d, "algebra", str(p))
        if not isinstance(ref, str):
            raise FileFormatError("algebra reference must be a path string", str(p))
        algebra = load_algebra(p.parent / ref)
    return algebra, cocycle_from_dict(d, algebra, where=str(p))


def load_matrix(path: Union[str, Path]) -> Mat:
    return matrix_from_dict(read_json(path), where=str(path))


def load_form(path: Union[str, Path]) -> BilinForm:
    return form_from_dict(read_json(path), where=str(path))


def load_subspace(path: Union[str, Path]) -> Subspace:
    return subspace_from_dict(read_json(path), where=str(path))

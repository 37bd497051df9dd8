"""JSON readers and writers for algebras, maps, coverings and specs.

Rationals travel as ``"p/q"`` strings (or integers) so no float ever touches
an exact computation.  Complex scalars are ``[re, im]`` pairs or strings such
as ``"1+2i"``.  Every reader raises :class:`InputError` with the JSON path of
the offending value.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import CommutativeAlgebra, LinearMap, make_function_algebra
from .coverings import FiniteCovering, IntervalCoveringSpec, Multiset
from .errors import InputError
from .groups import PermutationGroup
from .partitions import SetPartition
from .polycover import PolynomialCovering
from .scalars import field_from_name


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load(path):
    try:
        with open(path) as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def need(obj, key, where):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object")
    if key not in obj:
        raise InputError(f"{where}: missing key {key!r}")
    return obj[key]


def _list(x, where):
    if not isinstance(x, list):
        raise InputError(f"{where}: expected a list")
    return x


def _scalar(field, x, where):
    if isinstance(x, list) and len(x) == 2 and not field.exact:
        x = complex(x[0], x[1])
    try:
        return field.coerce(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: bad scalar {x!r} ({exc})") from None


def parse_algebra(obj, field=None, where="$"):
    """Either ``{"points": [...]}`` for a function algebra or explicit
    ``{"dim", "labels", "structure_constants", "unit"}``."""
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an algebra object")
    if field is None:
        field = field_from_name(obj.get("scalar", "rational"))
    if "points" in obj:
        pts = _list(obj["points"], f"{where}.points")
        try:
            return make_function_algebra([str(p) for p in pts], field=field)
        except ValueError as exc:
            raise InputError(f"{where}.points: {exc}") from None
    c = _list(need(obj, "structure_constants", where), f"{where}.structure_constants")
    d = obj.get("dim", len(c))
    if d != len(c):
        raise InputError(f"{where}.dim: {d} does not match structure constants of size {len(c)}")
    sc = []
    for i, plane in enumerate(c):
        rows = []
        for j, row in enumerate(_list(plane, f"{where}.structure_constants[{i}]")):
            path = f"{where}.structure_constants[{i}][{j}]"
            rows.append([_scalar(field, v, f"{path}[{k}]") for k, v in enumerate(_list(row, path))])
        sc.append(rows)
    unit = [_scalar(field, v, f"{where}.unit[{k}]") for k, v in enumerate(_list(need(obj, "unit", where), f"{where}.unit"))]
    try:
        return CommutativeAlgebra(sc, unit, labels=obj.get("labels"), field=field)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def dump_algebra(A: CommutativeAlgebra):
    from .report import serialize

    if hasattr(A, "points"):
        return {"points": list(A.points), "scalar": A.field.name}
    return {
        "dim": A.dim,
        "labels": list(A.labels),
        "structure_constants": serialize(A.c),
        "unit": serialize(A.unit_coords),
        "scalar": A.field.name,
    }


def parse_matrix(rows, A, B, where):
    rows = _list(rows, where)
    out = []
    for r, row in enumerate(rows):
        out.append([_scalar(B.field, v, f"{where}[{r}][{c}]") for c, v in enumerate(_list(row, f"{where}[{r}]"))])
    try:
        return LinearMap(A, B, out)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_map(obj, field=None, where="$"):
    """``{"domain": algebra, "codomain": algebra, "matrix": rows}``.  The
    codomain defaults to the domain; the string ``"scalars"`` gives the
    one-dimensional algebra."""
    A = parse_algebra(need(obj, "domain", where), field, f"{where}.domain")
    cod = obj.get("codomain")
    if cod is None:
        B = A
    elif cod == "scalars":
        B = make_function_algebra(["*"], field=A.field)
    else:
        B = parse_algebra(cod, A.field, f"{where}.codomain")
    return parse_matrix(need(obj, "matrix", where), A, B, f"{where}.matrix")


def parse_covering(obj, where="$") -> FiniteCovering:
    X = [str(x) for x in _list(need(obj, "X", where), f"{where}.X")]
    Y = [str(y) for y in _list(need(obj, "Y", where), f"{where}.Y")]
    n = need(obj, "n", where)
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{where}.n: expected a positive integer")
    h = need(obj, "h", where)
    if not isinstance(h, dict):
        raise InputError(f"{where}.h: expected an object")
    t = {}
    for y, m in need(obj, "t", where).items():
        if isinstance(m, list):
            ms = Multiset([str(x) for x in m])
        elif isinstance(m, dict):
            if any(not isinstance(v, int) or v < 0 for v in m.values()):
                raise InputError(f"{where}.t.{y}: multiplicities must be nonnegative integers")
            ms = Multiset({str(x): v for x, v in m.items() if v})
        else:
            raise InputError(f"{where}.t.{y}: expected a list or an object")
        t[str(y)] = ms
    try:
        return FiniteCovering(X, Y, n, {str(x): str(y) for x, y in h.items()}, t)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def dump_covering(c: FiniteCovering):
    return {
        "X": [str(x) for x in c.X],
        "Y": [str(y) for y in c.Y],
        "h": {str(x): str(c.h[x]) for x in c.X},
        "t": {str(y): {str(x): m for x, m in c.t[y].items()} for y in c.Y},
        "n": c.n,
    }


def parse_interval_spec(obj, where="$") -> IntervalCoveringSpec:
    n = need(obj, "n", where)
    parts = _list(need(obj, "partitions", where), f"{where}.partitions")
    ps = []
    for r, blocks in enumerate(parts):
        try:
            ps.append(SetPartition([[str(x) for x in b] for b in _list(blocks, f"{where}.partitions[{r}]")]))
        except InputError as exc:
            raise InputError(f"{where}.partitions[{r}]: {exc}") from None
    try:
        return IntervalCoveringSpec(n, ps, obj.get("breakpoints"))
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_group_action(obj, where="$"):
    """``{"points": [...], "generators": [...], "subgroup_generators": [...]}``.

    A generator is either ``{point: image}`` (unlisted points fixed) or the
    list of images of the points in order.
    """
    points = [str(p) for p in _list(need(obj, "points", where), f"{where}.points")]

    def gens(key):
        out = []
        for i, g in enumerate(_list(obj.get(key, []), f"{where}.{key}")):
            if isinstance(g, dict):
                g = {str(a): str(b) for a, b in g.items()}
            elif isinstance(g, list):
                g = dict(zip(points, [str(b) for b in g]))
                if len(g) != len(points):
                    raise InputError(f"{where}.{key}[{i}]: expected {len(points)} images")
            else:
                raise InputError(f"{where}.{key}[{i}]: expected an object or list")
            if set(g) - set(points) or set(g.values()) - set(points):
                raise InputError(f"{where}.{key}[{i}]: unknown point")
            full = [g.get(p, p) for p in points]
            if sorted(full) != sorted(points):
                raise InputError(f"{where}.{key}[{i}]: not a permutation")
            out.append(g)
        return out

    G = PermutationGroup.from_generators(points, gens("generators"))
    H = None
    if "subgroup_generators" in obj:
        H = PermutationGroup.from_generators(points, gens("subgroup_generators"))
        if not H.is_subgroup_of(G):
            raise InputError(f"{where}.subgroup_generators: not a subgroup")
    return G, H


def parse_polynomial(obj, epsilon=None, where="$"):
    """``{"coefficients": [...low to high...], "samples": [...]}``."""
    from .scalars import ComplexField

    cx = ComplexField()
    coeffs = []
    for k, c in enumerate(_list(need(obj, "coefficients", where), f"{where}.coefficients")):
        if isinstance(c, (int, str)) and _is_rational(c):
            coeffs.append(Fraction(c))
        else:
            coeffs.append(_scalar(cx, c, f"{where}.coefficients[{k}]"))
    samples = [_scalar(cx, w, f"{where}.samples[{k}]") for k, w in enumerate(obj.get("samples", []))]
    kw = {}
    if epsilon is not None:
        kw["root_tol"] = epsilon
    if "cluster_radius" in obj:
        kw["cluster_radius"] = float(obj["cluster_radius"])
    try:
        return PolynomialCovering(coeffs, **kw), samples
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def _is_rational(c):
    try:
        Fraction(c)
        return True
    except (ValueError, ZeroDivisionError):
        return False

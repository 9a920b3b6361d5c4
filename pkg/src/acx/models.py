"""Built-in invariant models and the JSON model-file format.

The file format:

    {
      "dim": 4,
      "brackets": [{"i": 2, "j": 3, "out": [[4, "1", "0"]]}],
      "J": [["0", "-1", "0", "0"], ...],
      "params": {"a": "4*pi"}          # optional
    }

brackets lists only i < j (antisymmetry is filled in); "out" entries are
[k, re, im] with rational-string components; J is row-major with J[r][c] the
e_{r+1} component of J(e_{c+1}), rational strings.  params.a, when present,
is 'q*pi' or 'generic'; J entries of parametric models may then also use the
symbol, as 'a', '-a', 'r*a', or 'r/a' for a rational literal r.

A file whose algebra, J, and parameter match the nilmanifold family exactly
is loaded as that preset, character blocks included.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InputError
from .lie import ACStructure, Character, LieACS, LieAlgebra
from .scalars import PiParam, Scalar, SymScalar, parse_rational


def kt_algebra() -> LieAlgebra:
    """dim 4, [e_2, e_3] = e_4, all other brackets zero."""
    return LieAlgebra(4, {(2, 3): {4: 1}}, name="kt")


def kt_J(a: PiParam) -> ACStructure:
    """J(e_1) = e_2, J(e_2) = -e_1, J(e_3) = (1/a) e_4, J(e_4) = -a e_3."""
    av = a.a_value()
    z = SymScalar.const(0)
    one = SymScalar.const(1)
    return ACStructure([
        [z, -one, z, z],
        [one, z, z, z],
        [z, z, z, -av],
        [z, z, one / av, z],
    ])


def _kt_character(alg: LieAlgebra, k: Fraction, l: Fraction) -> Character:
    # lambda = 2 pi i (k e^1 + l e^2); the symbol is pi on this branch
    two_i_k = Scalar(0, 2 * k)
    two_i_l = Scalar(0, 2 * l)
    return Character(alg, [
        SymScalar.symbol(coeff=two_i_k),
        SymScalar.symbol(coeff=two_i_l),
        SymScalar.const(0),
        SymScalar.const(0),
    ])


def kt_model(a: PiParam) -> LieACS:
    """The nilmanifold model with its closed-form Fourier character candidates.

    On the rational branch a = q*pi the solvable torus modes sit at k = 0,
    l = +-(q/4) or +-(m q/4); those integer candidates are supplied as
    character blocks.  The generic branch has no nontrivial candidates.
    """
    alg = kt_algebra()

    def characters(bundle_power: int):
        out = []
        if a.kind != "rational_pi":
            return out
        q = a.q
        seen = set()
        for l in (q / 4, bundle_power * q / 4):
            if l == 0 or l.denominator != 1:
                continue
            for sign in (1, -1):
                key = (0, sign * l)
                if key not in seen:
                    seen.add(key)
                    out.append(_kt_character(alg, Fraction(0), sign * l))
        return out

    return LieACS(
        alg, kt_J(a),
        name="kt", symbol=a.symbol_name, param=a, characters=characters,
    )


def abelian_model(n: int) -> LieACS:
    """The 2n-torus with the standard constant structure J(e_{2i-1}) = e_{2i}."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"bad complex dimension {n!r}")
    dim = 2 * n
    alg = LieAlgebra(dim, {}, name=f"abelian{n}")
    z = SymScalar.const(0)
    one = SymScalar.const(1)
    rows = [[z] * dim for _ in range(dim)]
    for k in range(n):
        rows[2 * k][2 * k + 1] = -one
        rows[2 * k + 1][2 * k] = one
    return LieACS(alg, ACStructure(rows), name=f"abelian{n}", symbol="x")


def _parse_j_entry(text, param: PiParam | None) -> SymScalar:
    """A J entry: a rational string, or a rational multiple of 'a' or '1/a'."""
    s = str(text).strip().replace(" ", "")
    if "a" not in s:
        return SymScalar.const(parse_rational(s))
    if param is None:
        raise InputError(
            f"J entry {text!r} uses the symbol 'a' but params.a is missing"
        )
    negate = s.startswith("-")
    if negate:
        s = s[1:]
    av = param.a_value()
    if s == "a":
        value = av
    elif s == "1/a":
        value = SymScalar.const(1) / av
    elif s.endswith("*a"):
        value = SymScalar.const(parse_rational(s[:-2])) * av
    elif s.endswith("/a"):
        value = SymScalar.const(parse_rational(s[:-2])) / av
    else:
        raise InputError(
            f"bad J entry {text!r}: want a rational string, "
            "optionally 'r*a' or 'r/a'"
        )
    return -value if negate else value


def model_from_json(obj) -> tuple[LieACS, PiParam | None]:
    if not isinstance(obj, dict):
        raise InputError("model file must be a JSON object")
    try:
        dim = obj["dim"]
        j_rows = obj["J"]
    except KeyError as exc:
        raise InputError(f"model file missing key {exc}") from exc
    if not isinstance(dim, int) or dim < 2 or dim % 2:
        raise InputError(f"model dim must be a positive even integer, got {dim!r}")
    brackets = {}
    for entry in obj.get("brackets", []):
        try:
            i, j = entry["i"], entry["j"]
            out = entry["out"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad bracket entry {entry!r}") from exc
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= dim):
            raise InputError(f"bracket indices must satisfy 1 <= i < j <= dim, got ({i},{j})")
        vec = {}
        for item in out:
            if not (isinstance(item, (list, tuple)) and len(item) == 3):
                raise InputError(f"bracket output entries are [k, re, im], got {item!r}")
            k, re, im = item
            if not (isinstance(k, int) and 1 <= k <= dim):
                raise InputError(f"bracket output index {k!r} out of range")
            vec[k] = SymScalar.const(Scalar(parse_rational(re), parse_rational(im)))
        if (i, j) in brackets:
            raise InputError(f"duplicate bracket entry ({i},{j})")
        brackets[(i, j)] = vec
    if not (isinstance(j_rows, list) and len(j_rows) == dim
            and all(isinstance(r, list) and len(r) == dim for r in j_rows)):
        raise InputError("J must be a dim x dim matrix of rational strings")
    param = None
    params = obj.get("params", {})
    if "a" in params:
        try:
            param = PiParam.parse(params["a"])
        except ValueError as exc:
            raise InputError(f"params.a: {exc}") from exc
    J = ACStructure([[_parse_j_entry(c, param) for c in row] for row in j_rows])
    alg = LieAlgebra(dim, brackets, name=str(obj.get("name", "custom")))
    if (
        param is not None
        and alg.dim == 4
        and alg.brackets == kt_algebra().brackets
        and J.matrix == kt_J(param).matrix
    ):
        return kt_model(param), param
    model = LieACS(alg, J, name=alg.name, symbol=param.symbol_name if param else "x",
                   param=param)
    return model, param


def load_model_file(path: str) -> tuple[LieACS, PiParam | None]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read model file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"model file {path} is not valid JSON: {exc}") from exc
    return model_from_json(obj)

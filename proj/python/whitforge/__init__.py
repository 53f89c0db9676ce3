"""Exact toolkit for nilpotent orbits and Whittaker pairs.

Matrices are given either as E-notation strings (``"E21+E43"``, with ``n``)
or as nested lists of rational strings/integers. Results are plain Python
data; rationals are returned as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import MathError, ParseError

__all__ = [
    "MathError",
    "ParseError",
    "parse_matrix",
    "jordan_partition",
    "sl_class",
    "dominance_leq",
    "oht_admissible",
    "find_z",
    "chain",
    "quasi_criticals",
    "deform_gl",
    "deform_sl",
    "compar",
    "run",
]


def _partition(parts):
    if isinstance(parts, str):
        return parts
    return ",".join(str(int(p)) for p in parts)


def _matrix_json(m):
    if isinstance(m, str):
        return json.dumps(m)
    return json.dumps([[str(x) for x in row] for row in m])


def _pair_json(S, f, n=None, h=None):
    doc = {"S": json.loads(_matrix_json(S)), "f": json.loads(_matrix_json(f))}
    if n is not None:
        doc["n"] = int(n)
    if h is not None:
        doc["h"] = json.loads(_matrix_json(h))
    return json.dumps(doc)


def _fractions(obj):
    """Turn "p/q" strings inside decoded JSON into Fractions."""
    if isinstance(obj, dict):
        return {k: _fractions(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v) for v in obj]
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            return obj
    return obj


def _decode(text):
    return _fractions(json.loads(text))


def parse_matrix(text, n):
    """Parse E-notation into a list of rows of Fractions."""
    return _decode(_core.parse_matrix(text, int(n)))


def jordan_partition(matrix, n=None):
    return _core.jordan_partition(_matrix_json(matrix), n)


def sl_class(matrix, n=None):
    """SL_n orbit data: partition, d = gcd of parts, and the class of a."""
    out = json.loads(_core.sl_class(_matrix_json(matrix), n))
    out["a_class"] = Fraction(out["a_class"])
    return out


def dominance_leq(mu, lam):
    return _core.dominance_leq(_partition(mu), _partition(lam))


def oht_admissible(lam):
    return _core.oht_admissible(_partition(lam))


def find_z(S, f, n=None):
    """Echelon-first decomposition S = h + Z of a Whittaker pair."""
    return _decode(_core.find_z(_pair_json(S, f, n)))


def chain(S, f, n=None):
    """Deformation chain certificate of the Whittaker pair (S, f)."""
    return _decode(_core.chain(_pair_json(S, f, n)))


def quasi_criticals(S, f, n=None, h=None, rule="weight-two"):
    return _decode(_core.quasi_criticals(_pair_json(S, f, n, h), rule))


def deform_gl(mu, lam):
    return _decode(_core.deform_gl(_partition(mu), _partition(lam)))


def deform_sl(mu, lam, a=1, b=1):
    """Returns a certificate, or {"condition_not_met": {...}} when a and b
    are not compatible with the target orbit."""
    return _decode(_core.deform_sl(_partition(mu), _partition(lam), str(Fraction(a)), str(Fraction(b))))


def compar(mu, lam):
    return _decode(_core.compar(_partition(mu), _partition(lam)))


def run(args, stdin=""):
    """Run the command-line interface in-process. Returns (status, stdout, stderr)."""
    return _core.run([str(a) for a in args], stdin)

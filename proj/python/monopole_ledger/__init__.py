"""Python front end for the monopole-ledger calculator.

Reports come back as dicts (parsed from the same JSON the command line tool prints);
rationals stay as "p/q" strings, use ``to_fraction`` to convert.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import _core
from ._core import MonopoleError, suite_names

__all__ = [
    "MonopoleError",
    "check",
    "compute",
    "fixture",
    "jacobi",
    "link_constant",
    "segre_classes",
    "suite_names",
    "to_fraction",
    "walls",
]


def to_fraction(text: str) -> Fraction:
    return Fraction(text)


def _dump(obj: Any) -> str:
    return obj if isinstance(obj, str) else json.dumps(obj)


def compute(manifest: Any, request: Any, method: Optional[str] = None) -> tuple[dict, int]:
    """Manifest and request as dicts or JSON text; returns (report, exit code)."""
    text, code = _core.compute(_dump(manifest), _dump(request), method)
    return json.loads(text), code


def check(suite: str, grid_bound: Optional[int] = None, literal_segre: bool = False,
          seed: Optional[int] = None) -> tuple[dict, int]:
    kwargs = {} if seed is None else {"seed": seed}
    text, code = _core.check(suite, grid_bound, literal_segre, **kwargs)
    return json.loads(text), code


def walls(manifest: Any, w: Sequence[int], p1: int, level_max: int, bound: int,
          lambda_: Optional[Sequence[int]] = None,
          omega: Optional[Sequence[str]] = None) -> tuple[dict, int]:
    text, code = _core.walls(_dump(manifest), list(w), p1, level_max, bound,
                             None if lambda_ is None else list(lambda_),
                             None if omega is None else [str(x) for x in omega])
    return json.loads(text), code


def fixture(kind: str, n: int = 3) -> tuple[dict, dict]:
    manifest, request = _core.fixture(kind, n)
    return json.loads(manifest), json.loads(request)


def link_constant(ns2: int, ns1: int, delta_p: int, d: int, method: str = "both") -> Fraction:
    direct = Fraction(_core.link_constant_direct(ns2, ns1, delta_p, d))
    closed = Fraction(_core.link_constant_closed(ns2, ns1, delta_p, d))
    if method == "direct":
        return direct
    if method == "closed":
        return closed
    if direct != closed:
        raise MonopoleError(f"link constant routes disagree: {direct} != {closed}", 3, "")
    return direct


def jacobi(a: int, b: int, n: int, xi: Any) -> Fraction:
    return Fraction(_core.jacobi(a, b, n, str(Fraction(xi))))


def segre_classes(ns1: int, ns2: int, imax: int) -> list[Fraction]:
    return [Fraction(s) for s in _core.segre_classes(ns1, ns2, imax)]

# Copyright 2026 The wynerdof Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Cell association for the Wyner linear network at DoF level.

Associations, plans and results are plain dicts in the JSON schema used by the
wynerdof command-line tool. Rational fields ("p/q" strings) are returned as
fractions.Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional

try:
    from . import _wynerdof as _core
except ImportError:  # in-tree build: extension sits next to the package
    import _wynerdof as _core

InputError = _core.InputError
SizeLimitError = _core.SizeLimitError
VerificationError = _core.VerificationError

# Keys whose values are rationals serialized as "p" or "p/q".
_RATIONAL_KEYS = frozenset(
    {
        "claimed_dl_dof",
        "claimed_ul_dof",
        "value",
        "per_user",
        "avg_per_user",
        "avg_sum",
        "tau",
        "tau_d",
        "relation_rhs",
        "achieved",
        "delta",
        "bound",
    }
)

__all__ = [
    "InputError",
    "SizeLimitError",
    "VerificationError",
    "association",
    "validate_association",
    "scheme",
    "certify_plan",
    "decide_downlink",
    "uplink_feasible",
    "max_downlink_dof",
    "max_uplink_dof",
    "bound",
    "exhaustive_search",
    "compare_with_theorem",
    "render",
]


def _rational(text: str) -> Fraction:
    return Fraction(text)


def _decode(node: Any, key: Optional[str] = None) -> Any:
    if isinstance(node, dict):
        return {k: _decode(v, k) for k, v in node.items()}
    if isinstance(node, list):
        return [_decode(v) for v in node]
    if key in _RATIONAL_KEYS and isinstance(node, str):
        return _rational(node)
    return node


def _encode(node: Any) -> Any:
    if isinstance(node, Fraction):
        return str(node)
    if isinstance(node, dict):
        return {k: _encode(v) for k, v in node.items()}
    if isinstance(node, (list, tuple)):
        return [_encode(v) for v in node]
    return node


def _dump(obj: Any) -> str:
    return obj if isinstance(obj, str) else json.dumps(_encode(obj))


def _load(text: str) -> Any:
    return _decode(json.loads(text))


def association(cells: Iterable[Iterable[int]], nc: int) -> dict:
    """Builds an association dict; cells[i-1] is the set of base stations of terminal i."""
    cells = [sorted(set(c)) for c in cells]
    return {"k": len(cells), "nc": nc, "cells": cells}


def validate_association(assoc: Any) -> list[str]:
    """Reasons the association is invalid; empty when it is valid."""
    return list(_core.validate_association(_dump(assoc)))


def scheme(kind: str, k: int, nc: int = 2) -> dict:
    """kind is "avg", "downlink" (plans) or "pair" (an association)."""
    return _load(_core.scheme(kind, k, nc))


def certify_plan(plan: Any) -> dict:
    return _load(_core.certify_plan(_dump(plan)))


def decide_downlink(assoc: Any, active: Iterable[int], seeds: Iterable[int] = (1, 2, 3)) -> dict:
    return _load(_core.decide_downlink(_dump(assoc), list(active), list(seeds)))


def uplink_feasible(assoc: Any, active: Iterable[int]) -> Optional[dict]:
    """A decoding order serving every active terminal, or None."""
    order = _core.uplink_feasible(_dump(assoc), list(active))
    return None if order is None else _load(order)


def max_downlink_dof(
    assoc: Any, seeds: Iterable[int] = (1, 2, 3), exact_limit: int = 16, greedy: bool = False
) -> dict:
    return _load(_core.max_downlink_dof(_dump(assoc), list(seeds), exact_limit, greedy))


def max_uplink_dof(assoc: Any, exact_limit: int = 20, greedy: bool = False) -> dict:
    return _load(_core.max_uplink_dof(_dump(assoc), exact_limit, greedy))


def bound(kind: str, assoc: Any, nc: Optional[int] = None) -> dict:
    """Converse certificate of the given kind; nc defaults to the association budget."""
    if nc is None:
        nc = assoc["nc"] if isinstance(assoc, dict) else json.loads(assoc)["nc"]
    return _load(_core.bound(kind, _dump(assoc), nc))


def exhaustive_search(
    k: int,
    nc: int,
    window: int = 0,
    objective: str = "avg",
    cap: int = 5_000_000,
    workers: int = 1,
    seeds: Iterable[int] = (1, 2, 3),
) -> dict:
    return _load(_core.exhaustive_search(k, nc, window, objective, cap, workers, list(seeds)))


def compare_with_theorem(nc: int) -> dict:
    return _load(_core.compare_with_theorem(nc))


def render(assoc: Any, fmt: str = "ascii", plan: Any = None) -> str:
    return _core.render(_dump(assoc), fmt, None if plan is None else _dump(plan))

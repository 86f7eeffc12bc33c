"""Structured-text records for spaces, bundles, kernels and classes.

Spaces::

    {"kind": "projective", "n": 2}
    {"kind": "curve", "genus": 1}
    {"kind": "product", "factors": [<space>, <space>, ...]}   # folded left
    {"kind": "point"}

or the shorthand ``P2``, ``C1``/``E``, ``pt`` and ``x``-joined products such
as ``P1xE``. Classes are ``{basis name: "p/q"}`` maps.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .characteristic import BundleData, direct_sum, tensor_product
from .graded_ring import HodgeClass
from .hochschild import HHClass
from .spaces import SpaceModel, curve, line_bundle_class, point, product, projective_space
from .transforms import Kernel, identity_kernel, line_bundle_kernel, random_kernel, rank_one_kernel


class RecordError(ValueError):
    pass


_ATOM = re.compile(r"^(?:P(\d+)|C(\d+)|E|pt)$")


def _load(text_or_record):
    if isinstance(text_or_record, str):
        text = text_or_record.strip()
        if text.startswith("{"):
            try:
                return json.loads(text)
            except json.JSONDecodeError as exc:
                raise RecordError(f"malformed JSON record: {exc}") from None
        return text
    return text_or_record


def parse_space(record) -> SpaceModel:
    record = _load(record)
    if isinstance(record, str):
        parts = record.split("x")
        spaces = []
        for part in parts:
            m = _ATOM.match(part)
            if not m:
                raise RecordError(f"cannot parse space {record!r}")
            if m.group(1):
                spaces.append(projective_space(int(m.group(1))))
            elif m.group(2):
                spaces.append(curve(int(m.group(2))))
            elif part == "E":
                spaces.append(curve(1))
            else:
                spaces.append(point())
        return _fold(spaces)
    if not isinstance(record, dict) or "kind" not in record:
        raise RecordError("space record needs a 'kind'")
    kind = record["kind"]
    try:
        if kind == "projective":
            return projective_space(int(record["n"]))
        if kind == "curve":
            return curve(int(record["genus"]))
        if kind == "point":
            return point()
        if kind == "product":
            return _fold([parse_space(f) for f in record["factors"]])
    except KeyError as exc:
        raise RecordError(f"space record is missing {exc}") from None
    raise RecordError(f"unknown space kind {kind!r}")


def _fold(spaces):
    if not spaces:
        raise RecordError("a product needs at least one factor")
    out = spaces[0]
    for s in spaces[1:]:
        out = product(out, s)
    return out


def parse_bundle(record, space: SpaceModel) -> BundleData:
    """``{"kind": "line", "twist": d}``, ``{"kind": "tangent"}`` or
    ``{"kind": "sum" | "tensor", "parts": [...]}``."""
    record = _load(record)
    kind = record.get("kind") if isinstance(record, dict) else None
    if kind == "line":
        return BundleData.line(line_bundle_class(space, record["twist"]))
    if kind == "tangent":
        return BundleData.from_ch(space.tangent_ch)
    if kind in ("sum", "tensor"):
        parts = [parse_bundle(p, space) for p in record["parts"]]
        if not parts:
            raise RecordError("empty bundle list")
        combine = direct_sum if kind == "sum" else tensor_product
        out = parts[0]
        for p in parts[1:]:
            out = combine(out, p)
        return out
    raise RecordError(f"unknown bundle record {record!r}")


def parse_class(record, space: SpaceModel) -> HodgeClass:
    record = _load(record)
    if not isinstance(record, dict):
        raise RecordError("a class is a {basis name: rational} map")
    try:
        return space.element({k: Fraction(v) for k, v in record.items()})
    except ValueError as exc:
        raise RecordError(str(exc)) from None


def class_to_record(x: HodgeClass) -> dict[str, str]:
    return x.to_dict()


def parse_kernel(record, source: SpaceModel, target: SpaceModel) -> Kernel:
    """``{"kind": "identity"}``, ``{"kind": "rank_one", "left": cls, "right": cls}``,
    ``{"kind": "line_bundle", "a": a, "b": b}`` or ``{"kind": "random", "seed": s}``."""
    record = _load(record)
    kind = record.get("kind") if isinstance(record, dict) else None
    if kind == "identity":
        if source is not target:
            raise RecordError("the identity kernel needs source == target")
        return identity_kernel(source)
    if kind == "rank_one":
        left = HHClass(source, parse_class(record["left"], source))
        right = HHClass(target, parse_class(record["right"], target))
        return rank_one_kernel(left, right)
    if kind == "line_bundle":
        return line_bundle_kernel(source, target, record.get("a", 0), record.get("b", 0))
    if kind == "random":
        return random_kernel(source, target, record.get("seed", 0))
    raise RecordError(f"unknown kernel record {record!r}")

"""Problem-document ingestion: JSON bytes in, validated DecisionProblem out.

Document schema (version "1"), field by field:

* ``schema_version`` — required, the string ``"1"``.
* ``frame`` — optional, must be ``["IS", "NS"]`` (the only frame in v1).
* ``alternatives`` — required, non-empty list of unique labels.
* ``criteria`` — required, non-empty list of unique labels.
* ``scales`` — optional mapping of user-defined linguistic scales:
  ``{name: {"kind": "interval" | "tfn", "terms": {label: value}}}`` where an
  interval value is ``[lo, hi]`` and a tfn value is ``[a, b, c]``. Names may
  not shadow the built-in scales (``interval-default``, ``kaufmann-tfn``).
* ``decision_makers`` — required, non-empty list of
  ``{"name": ..., "weight": W, "criterion_weights": [W, ...]}`` with one
  criterion weight per criterion.
* ``ratings`` — required mapping decision maker -> alternative -> criterion
  -> ``[m_IS, m_NS, m_ISNS]``. Keys must cover exactly the declared labels.

A weight ``W`` is a crisp number ``x`` (read as ``[x, x]``), an interval
``[lo, hi]``, or a linguistic reference ``{"term": ..., "scale": ...}``.
Terms from tfn scales are bridged to intervals by the alpha-cut passed to
:func:`load_problem`.

Rating triples rounded to the few decimals typical of published tables may
miss a unit sum by up to 1e-3; they are rescaled on ingestion. Larger
deviations are rejected.

Errors: :class:`ParseError` for malformed input (with line/column),
:class:`SchemaError` for structural violations, :class:`ValidationError` for
value-level violations; all three carry the coordinates of the offending
field.
"""

from __future__ import annotations

import json
import math
from importlib.resources import files

from .errors import (
    IntervalFusionError,
    InvalidAlpha,
    InvalidInterval,
    ParseError,
    SchemaError,
    UnknownTerm,
    ValidationError,
)
from .evidence import Frame, MassFunction
from .fuzzy import (
    INTERVAL_KIND,
    TFN_KIND,
    LinguisticScale,
    TriangularFuzzyNumber,
    as_interval,
    builtin_scales,
    crisp_to_interval,
)
from .intervals import Interval
from .pipeline import DecisionProblem

SCHEMA_VERSION = "1"
FRAME_LABELS = ("IS", "NS")

#: Unit-sum slack granted to rating triples at ingestion (display rounding).
RATING_SUM_TOLERANCE = 1e-3

_REQUIRED_KEYS = frozenset({"schema_version", "alternatives", "criteria", "decision_makers", "ratings"})
_OPTIONAL_KEYS = frozenset({"frame", "scales"})

BUNDLED_DATASET = "supplier-selection.json"


def bundled_dataset_bytes(name: str = BUNDLED_DATASET) -> bytes:
    """Raw bytes of a dataset shipped with the package."""
    return (files("intervalfusion") / "data" / name).read_bytes()


class _NonFiniteNumber(Exception):
    pass


def _reject_constant(token: str):
    raise _NonFiniteNumber(token)


def load_problem(source, fmt: str = "json", *, alpha: float = 0.0) -> DecisionProblem:
    """Parse and fully validate a problem document.

    ``source`` may be bytes, text, or a readable binary/text stream.
    ``alpha`` is the alpha-cut level used to bridge tfn-scale terms.
    """
    if fmt != "json":
        raise ValueError(f"unsupported format {fmt!r}; only 'json' is available")
    if isinstance(alpha, bool) or not isinstance(alpha, (int, float)) or not 0.0 <= alpha <= 1.0:
        raise InvalidAlpha(f"alpha must lie in [0, 1], got {alpha!r}")

    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            text = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    elif isinstance(source, str):
        text = source
    else:
        raise TypeError(f"source must be bytes, str or a stream, got {type(source).__name__}")

    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except _NonFiniteNumber as exc:
        raise ParseError(f"non-finite number literal {exc.args[0]!r} is not allowed") from exc
    except RecursionError as exc:
        raise ParseError("document nesting is too deep") from exc

    try:
        return _build_problem(doc, float(alpha))
    except (ParseError, SchemaError, ValidationError):
        raise
    except IntervalFusionError as exc:
        # Backstop: domain errors surfacing from constructors become
        # validation diagnostics rather than leaking internal classes.
        raise ValidationError(str(exc)) from exc


# --- structural helpers -------------------------------------------------------


def _expect_dict(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _expect_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected an array, got {type(value).__name__}")
    return value


def _expect_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(f"{where}: expected a string, got {type(value).__name__}")
    return value


def _expect_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where}: expected a number, got {type(value).__name__}")
    x = float(value)
    if not math.isfinite(x):
        raise ValidationError(f"{where}: number must be finite, got {value!r}")
    return x


def _label_list(value, where: str) -> tuple[str, ...]:
    items = _expect_list(value, where)
    if not items:
        raise SchemaError(f"{where}: must not be empty")
    labels = tuple(_expect_str(item, f"{where}[{i}]") for i, item in enumerate(items))
    for i, label in enumerate(labels):
        if not label:
            raise SchemaError(f"{where}[{i}]: label must not be empty")
    if len(set(labels)) != len(labels):
        raise SchemaError(f"{where}: labels must be unique")
    return labels


def _check_keys(obj: dict, required: frozenset, optional: frozenset, where: str) -> None:
    keys = set(obj)
    missing = sorted(required - keys)
    if missing:
        raise SchemaError(f"{where}: missing required field(s): {', '.join(missing)}")
    extra = sorted(keys - required - optional)
    if extra:
        raise SchemaError(f"{where}: unknown field(s): {', '.join(extra)}")


# --- scales -------------------------------------------------------------------


def _parse_scales(value, where: str) -> dict[str, LinguisticScale]:
    scales = builtin_scales()
    for name, body in _expect_dict(value, where).items():
        scale_where = f"{where}[{name!r}]"
        if not name:
            raise SchemaError(f"{where}: scale names must not be empty")
        if name in scales:
            raise SchemaError(f"{scale_where}: shadows a built-in scale")
        body = _expect_dict(body, scale_where)
        _check_keys(body, frozenset({"kind", "terms"}), frozenset(), scale_where)
        kind = _expect_str(body["kind"], f"{scale_where}.kind")
        if kind not in (INTERVAL_KIND, TFN_KIND):
            raise SchemaError(
                f"{scale_where}.kind: must be {INTERVAL_KIND!r} or {TFN_KIND!r}, got {kind!r}"
            )
        terms_obj = _expect_dict(body["terms"], f"{scale_where}.terms")
        if not terms_obj:
            raise SchemaError(f"{scale_where}.terms: must not be empty")
        terms = []
        for label, raw in terms_obj.items():
            term_where = f"{scale_where}.terms[{label!r}]"
            arity = 2 if kind == INTERVAL_KIND else 3
            numbers = _number_list(raw, arity, term_where)
            try:
                if kind == INTERVAL_KIND:
                    terms.append((label, Interval(*numbers)))
                else:
                    terms.append((label, TriangularFuzzyNumber(*numbers)))
            except IntervalFusionError as exc:
                raise ValidationError(f"{term_where}: {exc}") from exc
        scales[name] = LinguisticScale(name=name, kind=kind, terms=tuple(terms))
    return scales


def _number_list(value, arity: int, where: str) -> list[float]:
    items = _expect_list(value, where)
    if len(items) != arity:
        raise SchemaError(f"{where}: expected {arity} numbers, got {len(items)}")
    return [_expect_number(item, f"{where}[{i}]") for i, item in enumerate(items)]


# --- weights ------------------------------------------------------------------


def _parse_weight(value, scales: dict[str, LinguisticScale], alpha: float, where: str) -> Interval:
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected a weight, got a boolean")
    if isinstance(value, (int, float)):
        x = _expect_number(value, where)
        try:
            return crisp_to_interval(x)
        except InvalidInterval as exc:
            raise ValidationError(f"{where}: {exc}") from exc
    if isinstance(value, list):
        lo, hi = _number_list(value, 2, where)
        try:
            iv = Interval(lo, hi)
        except IntervalFusionError as exc:
            raise ValidationError(f"{where}: {exc}") from exc
        if iv.lo < 0:
            raise ValidationError(f"{where}: weight must be non-negative, got [{iv.lo}, {iv.hi}]")
        return iv
    if isinstance(value, dict):
        _check_keys(value, frozenset({"term", "scale"}), frozenset(), where)
        term = _expect_str(value["term"], f"{where}.term")
        scale_name = _expect_str(value["scale"], f"{where}.scale")
        scale = scales.get(scale_name)
        if scale is None:
            raise ValidationError(
                f"{where}.scale: unknown scale {scale_name!r}; "
                f"known scales: {', '.join(sorted(scales))}"
            )
        try:
            iv = as_interval(scale.lookup(term), alpha)
        except UnknownTerm as exc:
            raise ValidationError(f"{where}.term: {exc}") from exc
        if iv.lo < 0:
            raise ValidationError(
                f"{where}: weight must be non-negative, got [{iv.lo}, {iv.hi}]"
            )
        return iv
    raise SchemaError(
        f"{where}: a weight must be a number, an interval pair, or a term reference"
    )


# --- ratings ------------------------------------------------------------------


def _parse_rating(value, frame: Frame, where: str) -> MassFunction:
    numbers = _number_list(value, 3, where)
    for i, x in enumerate(numbers):
        if x < 0:
            raise ValidationError(f"{where}[{i}]: mass must be non-negative, got {x}")
    total = math.fsum(numbers)
    if abs(total - 1.0) > RATING_SUM_TOLERANCE:
        raise ValidationError(f"{where}: masses sum to {total!r}, expected 1")
    if total != 1.0:
        numbers = [x / total for x in numbers]
    masks = {0b01: numbers[0], 0b10: numbers[1], 0b11: numbers[2]}
    return MassFunction(frame, masks)


def _build_problem(doc, alpha: float) -> DecisionProblem:
    root = _expect_dict(doc, "document")
    _check_keys(root, _REQUIRED_KEYS, _OPTIONAL_KEYS, "document")

    version = _expect_str(root["schema_version"], "schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version: unsupported version {version!r}, expected {SCHEMA_VERSION!r}")

    if "frame" in root:
        frame_labels = _label_list(root["frame"], "frame")
        if frame_labels != FRAME_LABELS:
            raise SchemaError(f"frame: must be {list(FRAME_LABELS)!r} in schema version 1")
    frame = Frame(FRAME_LABELS)

    alternatives = _label_list(root["alternatives"], "alternatives")
    criteria = _label_list(root["criteria"], "criteria")
    scales = _parse_scales(root.get("scales", {}), "scales")

    dm_entries = _expect_list(root["decision_makers"], "decision_makers")
    if not dm_entries:
        raise SchemaError("decision_makers: must not be empty")
    dm_names: list[str] = []
    dm_weights: list[Interval] = []
    criterion_weights: list[tuple[Interval, ...]] = []
    for i, entry in enumerate(dm_entries):
        where = f"decision_makers[{i}]"
        entry = _expect_dict(entry, where)
        _check_keys(entry, frozenset({"name", "weight", "criterion_weights"}), frozenset(), where)
        name = _expect_str(entry["name"], f"{where}.name")
        if not name:
            raise SchemaError(f"{where}.name: must not be empty")
        if name in dm_names:
            raise SchemaError(f"{where}.name: duplicate decision maker {name!r}")
        dm_names.append(name)
        dm_weights.append(_parse_weight(entry["weight"], scales, alpha, f"{where}.weight"))
        ws = _expect_list(entry["criterion_weights"], f"{where}.criterion_weights")
        if len(ws) != len(criteria):
            raise SchemaError(
                f"{where}.criterion_weights: expected {len(criteria)} entries, got {len(ws)}"
            )
        criterion_weights.append(
            tuple(
                _parse_weight(w, scales, alpha, f"{where}.criterion_weights[{c}]")
                for c, w in enumerate(ws)
            )
        )

    ratings_obj = _expect_dict(root["ratings"], "ratings")
    _require_exact_keys(ratings_obj, dm_names, "ratings", "decision maker")
    ratings: list[tuple[tuple[MassFunction, ...], ...]] = []
    for name in dm_names:
        dm_obj = _expect_dict(ratings_obj[name], f"ratings[{name!r}]")
        _require_exact_keys(dm_obj, alternatives, f"ratings[{name!r}]", "alternative")
        rows: list[tuple[MassFunction, ...]] = []
        for alt in alternatives:
            alt_obj = _expect_dict(dm_obj[alt], f"ratings[{name!r}][{alt!r}]")
            _require_exact_keys(alt_obj, criteria, f"ratings[{name!r}][{alt!r}]", "criterion")
            rows.append(
                tuple(
                    _parse_rating(alt_obj[crit], frame, f"ratings[{name!r}][{alt!r}][{crit!r}]")
                    for crit in criteria
                )
            )
        ratings.append(tuple(rows))

    return DecisionProblem(
        alternatives=alternatives,
        criteria=criteria,
        decision_makers=tuple(dm_names),
        dm_weights=tuple(dm_weights),
        criterion_weights=tuple(criterion_weights),
        ratings=tuple(ratings),
    )


def _require_exact_keys(obj: dict, expected, where: str, what: str) -> None:
    keys = set(obj)
    wanted = set(expected)
    missing = sorted(wanted - keys)
    if missing:
        raise SchemaError(f"{where}: missing {what}(s): {', '.join(map(repr, missing))}")
    extra = sorted(keys - wanted)
    if extra:
        raise SchemaError(f"{where}: unknown {what}(s): {', '.join(map(repr, extra))}")

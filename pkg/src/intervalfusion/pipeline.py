"""Interval-weighted evidence fusion and ranking.

The five-step method implemented here:

1. ingest classical BPAs rating each alternative against each criterion
   (generation of those BPAs from raw performance data is out of scope);
2. normalize criterion weights by the largest endpoint of the weight group
   and discount each rating into an interval BPA — a pair of classical BPAs
   built from the weight's lower and upper bound;
3. fuse the interval BPAs across criteria (left parts together, right parts
   together), then discount each decision maker's fused result by the
   normalized decision-maker weight and fuse across decision makers;
4. collapse each alternative's final interval BPA by combining its left and
   right part into one classical BPA;
5. rank alternatives by pignistic belief in the ideal hypothesis.

Frame convention: ratings live on a two-element frame whose first element is
the "ideal" hypothesis and whose second is the "negative ideal" one; mass on
the full frame is uncommitted belief. Rating triples are always ordered
(first singleton, second singleton, full frame).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AllZeroWeights,
    EmptyEvidenceList,
    FrameMismatch,
    IntervalFusionError,
    InvalidWeight,
    MassSumViolation,
    ValidationError,
)
from .evidence import Frame, MassFunction, combine_all
from .intervals import Interval

#: Criterion weights pooled across all decision makers form one
#: normalization group (the default), or each decision maker's weights
#: normalize within their own group.
POOLED = "pooled"
PER_DM = "per-dm"

#: Subset masks on a two-element frame.
_FIRST = 0b01
_SECOND = 0b10
_BOTH = 0b11

#: A discount complement may dip below zero by at most this much of
#: floating-point residue before it is an input error.
_COMPLEMENT_EPS = 1e-9


@dataclass(frozen=True)
class IntervalBPA:
    """An interval-valued belief assignment, stored as its two bounding
    classical BPAs over the same two-element frame.

    ``left`` is built from the lower weight bound, ``right`` from the upper.
    Freshly discounted pairs satisfy ``left(singleton) <= right(singleton)``;
    fusion does not preserve that ordering, so it is not a type invariant.
    """

    left: MassFunction
    right: MassFunction

    def __post_init__(self) -> None:
        if self.left.frame != self.right.frame:
            raise FrameMismatch(
                f"parts use different frames: {self.left.frame.elements!r} "
                f"vs {self.right.frame.elements!r}"
            )
        if len(self.left.frame) != 2:
            raise FrameMismatch(
                f"interval BPAs require a two-element frame, got {self.left.frame.elements!r}"
            )

    @property
    def frame(self) -> Frame:
        return self.left.frame

    def triples(self) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
        """Both parts as (first singleton, second singleton, full frame) triples."""
        return part_triple(self.left), part_triple(self.right)

    def mass_bounds(self) -> tuple[tuple[float, float], tuple[float, float], tuple[float, float]]:
        """Display-only (left, right) bound pairs per focal set. The full-frame
        pair may be order-inverted (left complement above right complement);
        the two-part representation is the authoritative one."""
        lt, rt = self.triples()
        return tuple(zip(lt, rt))


def part_triple(m: MassFunction) -> tuple[float, float, float]:
    """Masses of ({first}, {second}, {first, second}) on a two-element frame."""
    return m.mass_of_mask(_FIRST), m.mass_of_mask(_SECOND), m.mass_of_mask(_BOTH)


def bet_ideal(m: MassFunction) -> float:
    """Pignistic belief in the first frame element: m({first}) + m(full)/2."""
    return m.mass_of_mask(_FIRST) + m.mass_of_mask(_BOTH) / 2.0


def normalize_weight_group(weights: Iterable[Interval]) -> list[Interval]:
    """Divide every interval in the group by the largest endpoint found in
    the whole group, so all normalized upper bounds are <= 1."""
    group = list(weights)
    if not group:
        raise AllZeroWeights("cannot normalize an empty weight group")
    for w in group:
        if w.lo < 0.0:
            raise InvalidWeight(f"weights must be non-negative, got [{w.lo}, {w.hi}]")
    a_max = max(w.hi for w in group)
    if a_max <= 0.0:
        raise AllZeroWeights("all weights in the group are zero")
    return [w / a_max for w in group]


def _check_weight(w: Interval) -> None:
    if w.lo < 0.0 or w.hi > 1.0:
        raise InvalidWeight(f"discount weight must lie within [0, 1], got [{w.lo}, {w.hi}]")


def _discount_part(m: MassFunction, w: float) -> MassFunction:
    """Scale both singleton masses by ``w`` and send the remainder to the
    full frame: (p, q, r) -> (w*p, w*q, 1 - w*p - w*q)."""
    first = m.mass_of_mask(_FIRST) * w
    second = m.mass_of_mask(_SECOND) * w
    rest = 1.0 - first - second
    if rest < 0.0:
        if rest < -_COMPLEMENT_EPS:
            raise MassSumViolation(
                f"discounted masses exceed 1 ({first} + {second}); invalid input mass"
            )
        rest = 0.0
    return MassFunction(m.frame, {_FIRST: first, _SECOND: second, _BOTH: rest})


def discount_to_interval_bpa(m: MassFunction, w: Interval) -> IntervalBPA:
    """Discount a classical BPA by an interval weight: the left part uses the
    lower bound, the right part the upper bound."""
    _check_weight(w)
    if len(m.frame) != 2:
        raise FrameMismatch(f"discounting requires a two-element frame, got {m.frame.elements!r}")
    return IntervalBPA(_discount_part(m, w.lo), _discount_part(m, w.hi))


def discount_interval_bpa(ib: IntervalBPA, w: Interval) -> IntervalBPA:
    """Discount an existing interval BPA: left part by the lower bound,
    right part by the upper bound."""
    _check_weight(w)
    return IntervalBPA(_discount_part(ib.left, w.lo), _discount_part(ib.right, w.hi))


def fuse_interval_bpas(ibs: Iterable[IntervalBPA]) -> IntervalBPA:
    """Fuse interval BPAs from several sources: all left parts combine into
    the new left part, all right parts into the new right part."""
    items = list(ibs)
    if not items:
        raise EmptyEvidenceList("need at least one interval BPA to fuse")
    return IntervalBPA(
        combine_all(ib.left for ib in items),
        combine_all(ib.right for ib in items),
    )


def collapse_interval_bpa(ib: IntervalBPA) -> MassFunction:
    """Combine the left and right part into a single classical BPA."""
    return ib.left.combine(ib.right)


def _as_tuple(value):
    return tuple(value)


def _unique_labels(labels: Sequence[str], what: str) -> None:
    if not labels:
        raise ValidationError(f"{what} must not be empty")
    if any(not isinstance(x, str) or not x for x in labels):
        raise ValidationError(f"{what} must be non-empty strings")
    if len(set(labels)) != len(labels):
        raise ValidationError(f"{what} must be unique, got {labels!r}")


@dataclass(frozen=True)
class DecisionProblem:
    """A rectangular multi-decision-maker, multi-criterion rating problem.

    ``criterion_weights[d][c]`` weighs criterion ``c`` for decision maker
    ``d``; ``ratings[d][a][c]`` is the classical BPA rating alternative ``a``
    on criterion ``c`` according to decision maker ``d``. All ratings share
    one two-element frame.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    decision_makers: tuple[str, ...]
    dm_weights: tuple[Interval, ...]
    criterion_weights: tuple[tuple[Interval, ...], ...]
    ratings: tuple[tuple[tuple[MassFunction, ...], ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", _as_tuple(self.alternatives))
        object.__setattr__(self, "criteria", _as_tuple(self.criteria))
        object.__setattr__(self, "decision_makers", _as_tuple(self.decision_makers))
        object.__setattr__(self, "dm_weights", _as_tuple(self.dm_weights))
        object.__setattr__(
            self, "criterion_weights", tuple(_as_tuple(ws) for ws in self.criterion_weights)
        )
        object.__setattr__(
            self, "ratings", tuple(tuple(_as_tuple(row) for row in dm) for dm in self.ratings)
        )

        _unique_labels(self.alternatives, "alternative labels")
        _unique_labels(self.criteria, "criterion labels")
        _unique_labels(self.decision_makers, "decision maker labels")

        n_dm, n_alt, n_crit = len(self.decision_makers), len(self.alternatives), len(self.criteria)
        if len(self.dm_weights) != n_dm:
            raise ValidationError(
                f"expected {n_dm} decision maker weights, got {len(self.dm_weights)}"
            )
        if len(self.criterion_weights) != n_dm or any(
            len(ws) != n_crit for ws in self.criterion_weights
        ):
            raise ValidationError(
                f"criterion weights must be a {n_dm} x {n_crit} grid of intervals"
            )
        if len(self.ratings) != n_dm or any(
            len(dm) != n_alt or any(len(row) != n_crit for row in dm) for dm in self.ratings
        ):
            raise ValidationError(
                f"ratings must be a {n_dm} x {n_alt} x {n_crit} grid of mass functions"
            )

        for w in self.dm_weights:
            if w.lo < 0.0:
                raise InvalidWeight(f"decision maker weights must be non-negative, got [{w.lo}, {w.hi}]")
        for ws in self.criterion_weights:
            for w in ws:
                if w.lo < 0.0:
                    raise InvalidWeight(f"criterion weights must be non-negative, got [{w.lo}, {w.hi}]")
        if max(w.hi for w in self.dm_weights) <= 0.0:
            raise AllZeroWeights("decision maker weights are all zero")
        if max(w.hi for ws in self.criterion_weights for w in ws) <= 0.0:
            raise AllZeroWeights("criterion weights are all zero")

        frame = self.ratings[0][0][0].frame
        if len(frame) != 2:
            raise FrameMismatch(f"ratings require a two-element frame, got {frame.elements!r}")
        for dm in self.ratings:
            for row in dm:
                for m in row:
                    if m.frame != frame:
                        raise FrameMismatch("all ratings must share one frame")

    @property
    def frame(self) -> Frame:
        return self.ratings[0][0][0].frame


@dataclass(frozen=True)
class RankingReport:
    """Traced output of :func:`rank_alternatives`.

    Intermediate tables are indexed like the problem: ``cell_bpas[d][a][c]``,
    ``dm_fused[d][a]``, ``final_bpas[a]``, ``collapsed[a]``, ``bets[a]``.
    ``ranking`` lists alternative labels by non-increasing ``bets`` value,
    ties broken by input order.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    decision_makers: tuple[str, ...]
    criterion_normalization: str
    normalized_criterion_weights: tuple[tuple[Interval, ...], ...]
    normalized_dm_weights: tuple[Interval, ...]
    cell_bpas: tuple[tuple[tuple[IntervalBPA, ...], ...], ...]
    dm_fused: tuple[tuple[IntervalBPA, ...], ...]
    final_bpas: tuple[IntervalBPA, ...]
    collapsed: tuple[MassFunction, ...]
    bets: tuple[float, ...]
    ranking: tuple[str, ...]

    def __post_init__(self) -> None:
        if sorted(self.ranking) != sorted(self.alternatives):
            raise ValidationError("ranking must be a permutation of the alternatives")
        by_label = dict(zip(self.alternatives, self.bets))
        ordered = [by_label[label] for label in self.ranking]
        if any(a < b for a, b in zip(ordered, ordered[1:])):
            raise ValidationError("bet values along the ranking must be non-increasing")

    @property
    def frame(self) -> Frame:
        return self.collapsed[0].frame


def _located(exc: IntervalFusionError, where: str) -> IntervalFusionError:
    return type(exc)(f"{where}: {exc}")


def rank_alternatives(
    problem: DecisionProblem, *, criterion_normalization: str = POOLED
) -> RankingReport:
    """Run the full pipeline and rank the alternatives.

    ``criterion_normalization`` chooses the normalization group for criterion
    weights: ``"pooled"`` divides every decision maker's criterion weights by
    the single largest endpoint across all of them; ``"per-dm"`` normalizes
    each decision maker's weights within their own group. Decision-maker
    weights always normalize as one group. Failures raise the underlying
    error annotated with the (decision maker, alternative, criterion)
    coordinates of the failing cell.
    """
    if criterion_normalization not in (POOLED, PER_DM):
        raise ValueError(
            f"criterion_normalization must be {POOLED!r} or {PER_DM!r}, "
            f"got {criterion_normalization!r}"
        )

    n_dm = len(problem.decision_makers)
    n_alt = len(problem.alternatives)
    n_crit = len(problem.criteria)

    if criterion_normalization == POOLED:
        flat = [w for ws in problem.criterion_weights for w in ws]
        normalized = normalize_weight_group(flat)
        crit_weights = tuple(
            tuple(normalized[d * n_crit : (d + 1) * n_crit]) for d in range(n_dm)
        )
    else:
        per_dm: list[tuple[Interval, ...]] = []
        for d, dm in enumerate(problem.decision_makers):
            try:
                per_dm.append(tuple(normalize_weight_group(problem.criterion_weights[d])))
            except IntervalFusionError as exc:
                raise _located(exc, f"decision maker {dm!r} criterion weights") from exc
        crit_weights = tuple(per_dm)
    dm_weights = tuple(normalize_weight_group(problem.dm_weights))

    cell_bpas: list[tuple[tuple[IntervalBPA, ...], ...]] = []
    dm_fused: list[tuple[IntervalBPA, ...]] = []
    for d, dm in enumerate(problem.decision_makers):
        dm_cells: list[tuple[IntervalBPA, ...]] = []
        dm_rows: list[IntervalBPA] = []
        for a, alt in enumerate(problem.alternatives):
            cells: list[IntervalBPA] = []
            for c, crit in enumerate(problem.criteria):
                try:
                    cells.append(
                        discount_to_interval_bpa(problem.ratings[d][a][c], crit_weights[d][c])
                    )
                except IntervalFusionError as exc:
                    raise _located(
                        exc, f"decision maker {dm!r}, alternative {alt!r}, criterion {crit!r}"
                    ) from exc
            try:
                dm_rows.append(fuse_interval_bpas(cells))
            except IntervalFusionError as exc:
                raise _located(exc, f"decision maker {dm!r}, alternative {alt!r}") from exc
            dm_cells.append(tuple(cells))
        cell_bpas.append(tuple(dm_cells))
        dm_fused.append(tuple(dm_rows))

    final_bpas: list[IntervalBPA] = []
    collapsed: list[MassFunction] = []
    bets: list[float] = []
    for a, alt in enumerate(problem.alternatives):
        discounted: list[IntervalBPA] = []
        for d, dm in enumerate(problem.decision_makers):
            try:
                discounted.append(discount_interval_bpa(dm_fused[d][a], dm_weights[d]))
            except IntervalFusionError as exc:
                raise _located(exc, f"decision maker {dm!r}, alternative {alt!r}") from exc
        try:
            final = fuse_interval_bpas(discounted)
            final_mass = collapse_interval_bpa(final)
        except IntervalFusionError as exc:
            raise _located(exc, f"alternative {alt!r}") from exc
        final_bpas.append(final)
        collapsed.append(final_mass)
        bets.append(bet_ideal(final_mass))

    order = sorted(range(n_alt), key=lambda i: -bets[i])
    ranking = tuple(problem.alternatives[i] for i in order)

    return RankingReport(
        alternatives=problem.alternatives,
        criteria=problem.criteria,
        decision_makers=problem.decision_makers,
        criterion_normalization=criterion_normalization,
        normalized_criterion_weights=crit_weights,
        normalized_dm_weights=dm_weights,
        cell_bpas=tuple(cell_bpas),
        dm_fused=tuple(dm_fused),
        final_bpas=tuple(final_bpas),
        collapsed=tuple(collapsed),
        bets=tuple(bets),
        ranking=ranking,
    )

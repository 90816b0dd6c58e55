"""Common languages, translation fixed points and comparative awareness."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Algebra, Prop, implies, join, meet, negate
from .errors import (
    CharacterizationMismatchError,
    DegenerateCommonLanguageError,
    InconsistentInputError,
)
from .reports import AxiomCheck, AxiomReport
from .semantics import JointStateSpace
from .translation import Translation

_CHUNK = 512


def _direction(side: int) -> tuple[str, str]:
    return ("1>2", "2>1") if side == 1 else ("2>1", "1>2")


def perfect_translations(t: Translation, side: int) -> set[Prop]:
    """Propositions translated without ambiguity.

    Four characterizations must coincide: inner equals outer, existence of a
    mutually implied partner, and recovery under each double outer / double
    inner round trip.  A mismatch can only mean a bug or an inconsistent
    translation, never a valid state.
    """
    if not t.is_consistent():
        raise InconsistentInputError("translation fails its axioms")
    fwd, back = _direction(side)
    src, dst = t.endpoints(fwd)
    inner_f = t.array(fwd, "inner")
    outer_f = t.array(fwd, "outer")
    inner_b = t.array(back, "inner")
    outer_b = t.array(back, "outer")
    n = src.full_mask + 1
    lam = np.arange(n, dtype=np.int64)

    set_a = inner_f[:n] == outer_f[:n]

    nd = dst.full_mask + 1
    eta = np.arange(nd, dtype=np.int64)
    outer_props, inner_props = outer_f[:n], inner_f[:n]
    set_b = np.zeros(n, dtype=bool)
    for start in range(0, n, _CHUNK):
        upper = (outer_props[start:start + _CHUNK, None] & ~eta[None, :]) == 0
        lower = (eta[None, :] & ~inner_props[start:start + _CHUNK, None]) == 0
        set_b[start:start + _CHUNK] = (upper & lower).any(axis=1)

    set_c = outer_b[outer_f[:n]] == lam
    set_d = inner_b[inner_f[:n]] == lam

    if not (np.array_equal(set_a, set_b) and np.array_equal(set_a, set_c)
            and np.array_equal(set_a, set_d)):
        raise CharacterizationMismatchError(
            "the characterizations of the perfect set disagree"
        )
    return {Prop(src, int(m)) for m in np.flatnonzero(set_a)}


def fixed_points(t: Translation, side: int) -> set[Prop]:
    """Propositions recovered exactly by both round trips through the
    other language; contains the perfect set, often strictly."""
    if not t.is_consistent():
        raise InconsistentInputError("translation fails its axioms")
    fwd, back = _direction(side)
    src, _ = t.endpoints(fwd)
    inner_f = t.array(fwd, "inner")
    outer_f = t.array(fwd, "outer")
    inner_b = t.array(back, "inner")
    outer_b = t.array(back, "outer")
    n = src.full_mask + 1
    lam = np.arange(n, dtype=np.int64)
    fixed = (outer_b[inner_f[:n]] == lam) & (inner_b[outer_f[:n]] == lam)
    return {Prop(src, int(m)) for m in np.flatnonzero(fixed)}


@dataclass
class CommonLanguage:
    """The perfect set hosted in one algebra, with its partner bijection."""

    host: Algebra
    partner_algebra: Algebra
    members: tuple[Prop, ...]
    partner: dict[Prop, Prop]

    @property
    def top(self) -> Prop:
        return self.members[-1]

    @property
    def bottom(self) -> Prop:
        return self.members[0]

    def embed(self, side_of_host: bool, member: Prop) -> Prop:
        return member if side_of_host else self.partner[member]

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "host": self.host.name,
            "partner": self.partner_algebra.name,
            "size": len(self.members),
            "top": self.host.formula_text(self.top),
            "bottom": self.host.formula_text(self.bottom),
            "members": [
                {
                    "host": self.host.formula_text(m),
                    "partner": self.partner_algebra.formula_text(self.partner[m]),
                }
                for m in self.members
            ],
        }


def common_language(t: Translation, host_side: int = 1) -> CommonLanguage:
    """Assemble the common language from the perfect set.

    Verifies the closure laws (meets, relative complements, distinct top and
    bottom) and that the partner bijection preserves implication both ways.
    """
    fwd, _ = _direction(host_side)
    src, dst = t.endpoints(fwd)
    perfect = perfect_translations(t, host_side)
    if len(perfect) < 2:
        raise DegenerateCommonLanguageError(
            "only the contradiction translates exactly"
        )
    members = tuple(sorted(perfect, key=lambda p: p.mask))
    outer_f = t.array(fwd, "outer")
    partner = {m: Prop(dst, int(outer_f[m.mask])) for m in members}

    for a in members:
        for b in members:
            if meet(a, b) not in perfect or meet(negate(a), b) not in perfect:
                raise CharacterizationMismatchError(
                    "perfect set is not closed under meet / relative complement"
                )
            if implies(a, b) != implies(partner[a], partner[b]):
                raise CharacterizationMismatchError(
                    "partner bijection does not preserve implication"
                )
    top = members[0]
    for m in members:
        top = join(top, m)
    if top not in perfect or top == src.bottom:
        raise CharacterizationMismatchError("common language lacks a distinct top")
    return CommonLanguage(src, dst, members, partner)


def joint_embeddings(t: Translation, space: JointStateSpace) -> AxiomReport:
    """Check the embedding diagram around the joint state-space.

    Both algebras must embed injectively, preserving meets and relative
    complements; the common language must land on the same events through
    either leg; and routing a common member through an inner or an outer
    operator must not change where it lands.
    """
    report = AxiomReport()
    for side in (1, 2):
        algebra = space.algebra(side)
        ev = space.event_array(side)
        n = len(ev)
        injective = len(set(int(v) for v in ev)) == n
        report.checks.append(
            AxiomCheck(f"embedding-injective:{side}", injective,
                       () if injective else ((algebra.bottom,),))
        )
        masks = np.arange(n, dtype=np.int64)
        witness = None
        for start in range(0, n, _CHUNK):
            rows = masks[start:start + _CHUNK]
            rows_ev = ev[start:start + _CHUNK]
            meets_ok = ev[rows[:, None] & masks[None, :]] == (
                rows_ev[:, None] & ev[None, :]
            )
            full = np.int64(algebra.full_mask)
            relneg_ok = ev[(full ^ rows)[:, None] & masks[None, :]] == (
                ev[None, :] & ~rows_ev[:, None]
            )
            bad = np.argwhere(~(meets_ok & relneg_ok))
            if bad.size:
                i, j = (int(v) for v in bad[0])
                witness = (Prop(algebra, start + i), Prop(algebra, j))
                break
        report.checks.append(
            AxiomCheck(f"embedding-homomorphism:{side}", witness is None,
                       () if witness is None else (witness,))
        )

    try:
        common = common_language(t, host_side=1)
    except DegenerateCommonLanguageError:
        common = None
    if common is not None:
        diagram_witness = None
        legs_witness = None
        for m in common.members:
            partner = common.partner[m]
            target = space.valuation(m)
            if space.valuation(partner) != target:
                diagram_witness = diagram_witness or (m, partner)
            for direction, start_prop in (("1>2", m), ("2>1", partner)):
                for mode in ("inner", "outer"):
                    image = t.apply(direction, mode, start_prop)
                    if not isinstance(image, Prop) or space.valuation(image) != target:
                        legs_witness = legs_witness or (start_prop,)
        report.checks.append(
            AxiomCheck("common-diagram-commutes", diagram_witness is None,
                       () if diagram_witness is None else (diagram_witness,))
        )
        report.checks.append(
            AxiomCheck("translation-legs-agree", legs_witness is None,
                       () if legs_witness is None else (legs_witness,))
        )
    return report


@dataclass
class AwarenessVerdict:
    """How the two languages compare, with the evidence that decided it."""

    classification: str
    summary: str
    evidence: dict = field(default_factory=dict)
    equivalence_divergences: list = field(default_factory=list)

    def less_aware(self, i: int, j: int) -> bool:
        return self.evidence[f"sigma{i}_subset_of_sigma{j}"]

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "classification": self.classification,
            "summary": self.summary,
            "evidence": self.evidence,
            "equivalence_divergences": self.equivalence_divergences,
        }


def classify_awareness(t: Translation, space: JointStateSpace) -> AwarenessVerdict:
    """Compare expressiveness through the joint state-space.

    For each ordered pair the verdict tests event-field inclusion, then the
    pure forms: coarsening (same total event, coarser field) and restriction
    (exact agreement below the smaller total event).  It also audits, per
    direction, that field inclusion, totality of the perfect set and
    pointwise inner = outer agree, reporting any divergence instead of
    assuming the equivalence.
    """
    if not t.is_consistent():
        raise InconsistentInputError("translation fails its axioms")
    sigma = {side: space.events(side) for side in (1, 2)}
    tops = {
        side: int(space.event_array(side)[space.algebra(side).full_mask])
        for side in (1, 2)
    }
    evidence = {}
    divergences = []
    flags = {}
    for i, j in ((1, 2), (2, 1)):
        included = sigma[i] <= sigma[j]
        coarsening = included and tops[i] == tops[j]
        restriction = sigma[i] == {e & tops[i] for e in sigma[j]}
        perfect_total = len(perfect_translations(t, i)) == (
            space.algebra(i).full_mask + 1
        )
        d = f"{i}>{j}"
        inner = t.array(d, "inner")
        outer = t.array(d, "outer")
        pointwise = bool((inner[:-1] == outer[:-1]).all())
        flags[(i, j)] = (included, coarsening, restriction)
        evidence[f"sigma{i}_subset_of_sigma{j}"] = bool(included)
        evidence[f"{i}_pure_coarsening_of_{j}"] = bool(coarsening)
        evidence[f"{i}_pure_restriction_of_{j}"] = bool(restriction)
        evidence[f"perfect_set_{i}_is_whole_algebra"] = bool(perfect_total)
        evidence[f"inner_equals_outer_{d}"] = pointwise
        if not (included == perfect_total == pointwise):
            divergences.append(
                f"direction {d}: field inclusion {included}, "
                f"perfect totality {perfect_total}, pointwise {pointwise}"
            )
    evidence["total_events_equal"] = tops[1] == tops[2]

    if sigma[1] == sigma[2]:
        classification = "equal"
        summary = "the languages express the same events"
    else:
        classification = "incomparable"
        summary = "neither event field contains the other"
        for i, j in ((1, 2), (2, 1)):
            included, coarsening, restriction = flags[(i, j)]
            if not included:
                continue
            if coarsening:
                classification = f"{i}-pure-coarsening-of-{j}"
                summary = (
                    f"language {i} less aware than language {j} (pure coarsening)"
                )
            elif restriction:
                classification = f"{i}-pure-restriction-of-{j}"
                summary = (
                    f"language {i} less aware than language {j} (pure restriction)"
                )
            else:
                classification = f"{i}-less-aware-than-{j}"
                summary = f"language {i} less aware than language {j}"
            break
    return AwarenessVerdict(classification, summary, evidence, divergences)

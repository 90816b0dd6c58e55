"""Seeded random instances for the property suites and demos."""

from __future__ import annotations

import random

from .algebra import Algebra, Prop, Star
from .language import And, LanguageSpec, Not, Or, parse_formula
from .translation import (
    Translation,
    check_consistency,
    translation_from_atom_outers,
)


def make_cell_spec(name: str, cells: list[str]) -> LanguageSpec:
    """A language whose models are 'exactly one cell true' assignments."""
    beliefs = []
    at_least_one = None
    for cell in cells:
        atom = parse_formula(cell)
        at_least_one = atom if at_least_one is None else Or(at_least_one, atom)
    beliefs.append(at_least_one)
    for i, a in enumerate(cells):
        for b in cells[i + 1:]:
            beliefs.append(Not(And(parse_formula(a), parse_formula(b))))
    return LanguageSpec(name, tuple(cells), tuple(beliefs))


_CELL_CACHE: dict[tuple, Algebra] = {}


def cell_algebra(name: str, n_cells: int, prefix: str = "c") -> Algebra:
    key = (name, n_cells, prefix)
    if key not in _CELL_CACHE:
        _CELL_CACHE[key] = Algebra.from_spec(
            make_cell_spec(name, [f"{prefix}{i}" for i in range(n_cells)])
        )
    return _CELL_CACHE[key]


def random_star_prop(rng: random.Random, algebra: Algebra,
                     star_weight: float = 0.08) -> Prop | Star:
    """A random outer image: usually a small join of atoms, sometimes star."""
    if rng.random() < star_weight:
        return algebra.star
    m = algebra.model_count
    size = min(m, _pick_size(rng))
    bits = rng.sample(range(m), size)
    mask = 0
    for b in bits:
        mask |= 1 << b
    return Prop(algebra, mask)


def _pick_size(rng: random.Random) -> int:
    roll = rng.random()
    if roll < 0.60:
        return 1
    if roll < 0.85:
        return 2
    if roll < 0.96:
        return 3
    return 4


def random_atom_outer_translation(rng: random.Random, a1: Algebra,
                                  a2: Algebra) -> Translation:
    outer12 = {atom: random_star_prop(rng, a2) for atom in a1.atoms()}
    outer21 = {atom: random_star_prop(rng, a1) for atom in a2.atoms()}
    return translation_from_atom_outers(a1, a2, outer12, outer21)


def random_consistent_translation(
    rng: random.Random,
    max_atoms: int = 5,
    max_tries: int = 100_000,
) -> Translation:
    """Rejection-sample atom-outer translations until the check suite passes."""
    for _ in range(max_tries):
        m1 = rng.randint(1, max_atoms)
        m2 = rng.randint(1, max_atoms)
        a1 = cell_algebra("left", m1, "a")
        a2 = cell_algebra("right", m2, "b")
        t = random_atom_outer_translation(rng, a1, a2)
        if check_consistency(t).passed:
            t._consistency = True
            return t
    raise RuntimeError(f"no consistent translation found in {max_tries} tries")


def mutate_one_value(rng: random.Random, t: Translation) -> Translation:
    """Copy the translation with exactly one operator value changed."""
    direction = rng.choice(["1>2", "2>1"])
    mode = rng.choice(["inner", "outer"])
    src, dst = t.endpoints(direction)
    lam = Prop(src, rng.randrange(src.full_mask + 1))
    old = t.apply(direction, mode, lam)
    while True:
        candidates = list(range(dst.full_mask + 1))
        pick = rng.choice(candidates + [-1])
        new = dst.star if pick == -1 else Prop(dst, pick)
        if new != old:
            return t.replace(direction, mode, lam, new)


def random_formula(rng: random.Random, spec: LanguageSpec, depth: int = 3):
    """A random formula over the declared atoms (for parser round-trips)."""
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.1:
            return parse_formula("true")
        if roll < 0.2:
            return parse_formula("false")
        return parse_formula(rng.choice(spec.elementary))
    kind = rng.choice(["not", "and", "or", "arrow"])
    if kind == "not":
        return Not(random_formula(rng, spec, depth - 1))
    left = random_formula(rng, spec, depth - 1)
    right = random_formula(rng, spec, depth - 1)
    if kind == "and":
        return And(left, right)
    if kind == "or":
        return Or(left, right)
    from .language import Arrow

    return Arrow(left, right)

"""Finite Boolean algebras of propositions, built from a language spec.

The quotient by logical equivalence is computed extensionally: a proposition
is the set of models that satisfy it, packed into an ``int`` bitmask (bit i
set means model i satisfies it).  The distinguished element ``star`` sits
above the tautology; joining anything with it gives it back, meeting gives
the other operand, and it has no negation.
"""

from __future__ import annotations

from .errors import (
    AlgebraTooLargeError,
    AtomCapError,
    ContradictionError,
    CrossAlgebraError,
    StarNegationError,
)
from .language import (
    And,
    Arrow,
    Atom,
    FalseLit,
    Formula,
    LanguageSpec,
    Not,
    Or,
    TrueLit,
    parse_formula,
)

DEFAULT_ATOM_CAP = 20

# lattice-wide enumeration (2**n_models propositions) is only attempted below
# this many models
ENUMERABLE_MODEL_LIMIT = 16


class Model:
    """One truth assignment, identified by its index into the assignment grid."""

    __slots__ = ("spec", "key")

    def __init__(self, spec: LanguageSpec, key: int):
        self.spec = spec
        self.key = key

    def value(self, atom: str) -> int:
        j = self.spec.elementary.index(atom)
        return (self.key >> (len(self.spec.elementary) - 1 - j)) & 1

    @property
    def values(self) -> tuple[int, ...]:
        n = len(self.spec.elementary)
        return tuple((self.key >> (n - 1 - j)) & 1 for j in range(n))

    def __repr__(self):
        bits = "".join(str(v) for v in self.values)
        return f"Model({bits})"

    def __eq__(self, other):
        return (
            isinstance(other, Model)
            and self.key == other.key
            and self.spec.name == other.spec.name
        )

    def __hash__(self):
        return hash((self.spec.name, self.key))


def _atom_column(bit: int, n: int) -> int:
    """Truth column of one elementary proposition over all 2**n assignments."""
    block = ((1 << (1 << bit)) - 1) << (1 << bit)
    width = 1 << (bit + 1)
    total = 1 << n
    while width < total:
        block |= block << width
        width <<= 1
    return block


def _evaluate(formula: Formula, columns: dict[str, int], full: int) -> int:
    if isinstance(formula, Atom):
        return columns[formula.name]
    if isinstance(formula, TrueLit):
        return full
    if isinstance(formula, FalseLit):
        return 0
    if isinstance(formula, Not):
        return full ^ _evaluate(formula.child, columns, full)
    if isinstance(formula, And):
        return _evaluate(formula.left, columns, full) & _evaluate(
            formula.right, columns, full
        )
    if isinstance(formula, Or):
        return _evaluate(formula.left, columns, full) | _evaluate(
            formula.right, columns, full
        )
    if isinstance(formula, Arrow):
        return (full ^ _evaluate(formula.left, columns, full)) | _evaluate(
            formula.right, columns, full
        )
    raise TypeError(f"not a formula node: {formula!r}")


def enumerate_models(spec: LanguageSpec, max_atoms: int = DEFAULT_ATOM_CAP) -> list[Model]:
    """All assignments satisfying every belief, in lexicographic atom order."""
    n = len(spec.elementary)
    if n > max_atoms:
        raise AtomCapError(
            f"{spec.name!r} declares {n} atoms, above the cap of {max_atoms}"
        )
    full = (1 << (1 << n)) - 1
    columns = {
        name: _atom_column(n - 1 - j, n) for j, name in enumerate(spec.elementary)
    }
    surviving = full
    for belief in spec.beliefs:
        surviving &= _evaluate(belief, columns, full)
        if surviving == 0:
            raise ContradictionError(f"beliefs of {spec.name!r} admit no model")
    keys = []
    while surviving:
        low = surviving & -surviving
        keys.append(low.bit_length() - 1)
        surviving ^= low
    return [Model(spec, key) for key in keys]


class Prop:
    """A proposition of one algebra: the bitmask of its satisfying models."""

    __slots__ = ("algebra", "mask")

    def __init__(self, algebra: "Algebra", mask: int):
        if not 0 <= mask <= algebra.full_mask:
            raise ValueError(f"mask {mask:#x} outside algebra {algebra.name!r}")
        self.algebra = algebra
        self.mask = mask

    def __eq__(self, other):
        return (
            isinstance(other, Prop)
            and self.mask == other.mask
            and self.algebra.name == other.algebra.name
        )

    def __hash__(self):
        return hash((self.algebra.name, self.mask))

    def __repr__(self):
        return f"<{self.algebra.name}: {self.algebra.formula_text(self)}>"

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __invert__(self):
        return negate(self)

    def implies(self, other) -> bool:
        return implies(self, other)

    @property
    def is_atom(self) -> bool:
        return self.mask != 0 and self.mask & (self.mask - 1) == 0

    def atoms_below(self) -> list["Prop"]:
        """The atoms whose join is this proposition."""
        out = []
        mask = self.mask
        while mask:
            low = mask & -mask
            out.append(Prop(self.algebra, low))
            mask ^= low
        return out


class Star:
    """The all-encompassing element above the tautology of one algebra."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: "Algebra"):
        self.algebra = algebra

    def __eq__(self, other):
        return isinstance(other, Star) and self.algebra.name == other.algebra.name

    def __hash__(self):
        return hash((self.algebra.name, "*"))

    def __repr__(self):
        return f"<{self.algebra.name}: *>"


StarProp = Prop | Star


def _require_same(x: StarProp, y: StarProp):
    if x.algebra.name != y.algebra.name:
        raise CrossAlgebraError(
            f"operands from different algebras: {x.algebra.name!r} and {y.algebra.name!r}"
        )


def meet(x: StarProp, y: StarProp) -> StarProp:
    _require_same(x, y)
    if isinstance(x, Star):
        return y
    if isinstance(y, Star):
        return x
    return Prop(x.algebra, x.mask & y.mask)


def join(x: StarProp, y: StarProp) -> StarProp:
    _require_same(x, y)
    if isinstance(x, Star) or isinstance(y, Star):
        return x.algebra.star
    return Prop(x.algebra, x.mask | y.mask)


def negate(x: StarProp) -> Prop:
    if isinstance(x, Star):
        raise StarNegationError("the undefined element has no negation")
    return Prop(x.algebra, x.algebra.full_mask ^ x.mask)


def implies(x: StarProp, y: StarProp) -> bool:
    _require_same(x, y)
    if isinstance(y, Star):
        return True
    if isinstance(x, Star):
        return False
    return x.mask & ~y.mask == 0


class Algebra:
    """The algebra of one language, ordered by implication, plus its star."""

    def __init__(self, spec: LanguageSpec, models: list[Model]):
        if not models:
            raise ContradictionError(f"{spec.name!r} has no models")
        self.spec = spec
        self.name = spec.name
        self.models = list(models)
        self.full_mask = (1 << len(models)) - 1
        self.star = Star(self)
        n = len(spec.elementary)
        self._columns = {}
        for j, atom in enumerate(spec.elementary):
            col = 0
            for i, model in enumerate(models):
                col |= ((model.key >> (n - 1 - j)) & 1) << i
            self._columns[atom] = col
        self._atom_labels = None

    @classmethod
    def from_spec(cls, spec: LanguageSpec, max_atoms: int = DEFAULT_ATOM_CAP) -> "Algebra":
        return cls(spec, enumerate_models(spec, max_atoms))

    # --- basic elements ---

    @property
    def model_count(self) -> int:
        return len(self.models)

    def prop(self, mask: int) -> Prop:
        return Prop(self, mask)

    @property
    def top(self) -> Prop:
        return Prop(self, self.full_mask)

    @property
    def bottom(self) -> Prop:
        return Prop(self, 0)

    def atoms(self) -> list[Prop]:
        return [Prop(self, 1 << i) for i in range(len(self.models))]

    def all_props(self):
        """Every proposition, ordered by mask.  Only for small algebras."""
        if self.model_count > ENUMERABLE_MODEL_LIMIT:
            raise AlgebraTooLargeError(
                f"{self.name!r} has {self.model_count} models; enumerating "
                f"2**{self.model_count} propositions is not supported"
            )
        return [Prop(self, mask) for mask in range(self.full_mask + 1)]

    def star_lattice(self):
        """All propositions followed by the star (the canonical index order)."""
        return self.all_props() + [self.star]

    # --- denotation ---

    def denote(self, formula: Formula) -> Prop:
        return Prop(self, _evaluate(formula, self._columns, self.full_mask))

    def denote_text(self, text: str) -> Prop:
        return self.denote(parse_formula(text, self.spec))

    # --- canonical printing ---

    def _labels(self):
        if self._atom_labels is None:
            by_mask = {}
            for name, col in self._columns.items():
                by_mask.setdefault(col, name)
            labels = []
            n = len(self.spec.elementary)
            for i, model in enumerate(self.models):
                mask = 1 << i
                if mask in by_mask:
                    labels.append(by_mask[mask])
                else:
                    lits = []
                    for j, atom in enumerate(self.spec.elementary):
                        val = (model.key >> (n - 1 - j)) & 1
                        lits.append(atom if val else "!" + atom)
                    labels.append(" & ".join(lits))
            self._atom_labels = labels
        return self._atom_labels

    def formula_text(self, x: StarProp) -> str:
        """Canonical rendering: ``false``, ``true``, ``*`` or a join of atoms."""
        if isinstance(x, Star):
            return "*"
        _require_same(x, self.top)
        if x.mask == 0:
            return "false"
        if x.mask == self.full_mask:
            return "true"
        labels = self._labels()
        return " | ".join(labels[i] for i in range(self.model_count) if x.mask >> i & 1)

    def __repr__(self):
        return f"Algebra({self.name!r}, {self.model_count} models)"

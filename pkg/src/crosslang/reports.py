"""Pass/fail reports produced by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one named condition, with the first violating tuple if any."""

    name: str
    passed: bool
    witnesses: tuple = ()
    detail: str = ""

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            raise ValueError(f"failing check {self.name!r} must carry a witness")


@dataclass
class AxiomReport:
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def merged(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.checks + other.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witnesses": [
                        [x.algebra.formula_text(x) for x in witness]
                        for witness in c.witnesses
                    ],
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name}"
            if not c.passed:
                rendered = ", ".join(
                    x.algebra.formula_text(x) for x in c.witnesses[0]
                )
                line += f"  witness: ({rendered})"
                if c.detail:
                    line += f"  [{c.detail}]"
            lines.append(line)
        return lines

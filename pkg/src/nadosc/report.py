"""Check reports shared by every ``verify``-style operation.

A ``CHECK`` row is asserted: it decides pass/fail of the run. A ``FINDING``
row records a measured value (typically a discrepancy between a reference
closed form and a direct computation) and never affects the outcome.
"""

from dataclasses import dataclass, field

CHECK = "CHECK"
FINDING = "FINDING"


@dataclass(frozen=True)
class CheckRow:
    name: str
    residual: float
    passed: bool
    kind: str = CHECK
    note: str = ""


@dataclass
class CheckReport:
    title: str = ""
    rows: list = field(default_factory=list)

    def check(self, name, residual, passed, note=""):
        self.rows.append(CheckRow(name, float(residual), bool(passed), CHECK, note))

    def check_le(self, name, residual, tol, note=""):
        """Asserted row passing when ``residual <= tol``."""
        self.check(name, residual, residual <= tol, note)

    def finding(self, name, value, note=""):
        self.rows.append(CheckRow(name, float(value), True, FINDING, note))

    def extend(self, other):
        self.rows.extend(other.rows)
        return self

    @property
    def checks(self):
        return [r for r in self.rows if r.kind == CHECK]

    @property
    def findings(self):
        return [r for r in self.rows if r.kind == FINDING]

    @property
    def passed(self):
        return all(r.passed for r in self.checks)

    def __getitem__(self, name):
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def render(self):
        lines = [self.title] if self.title else []
        for r in self.rows:
            if r.kind == CHECK:
                status = "pass" if r.passed else "FAIL"
                text = f"CHECK    {r.name}: {status} (residual={r.residual:.3e})"
            else:
                text = f"FINDING  {r.name}: value={r.residual:.17g}"
            if r.note:
                text += f"  # {r.note}"
            lines.append(text)
        return "\n".join(lines)

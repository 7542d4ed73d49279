"""
Validation reports: one entry per axiom, in a fixed order.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom; witness is the basis tuple where it broke."""
    name: str
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    detail: str = ""


@dataclass
class ValidationReport:
    """Ordered list of axiom checks for a structure."""
    subject: str
    checks: List[AxiomCheck] = field(default_factory=list)

    def record(self, name: str, witness: Optional[Tuple[int, ...]] = None, detail: str = ""):
        self.checks.append(AxiomCheck(name, witness is None, witness, detail))

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def __bool__(self):
        return self.ok

    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> AxiomCheck:
        for entry in self.checks:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def lines(self) -> List[str]:
        result = [f"{self.subject}: {'all axioms pass' if self.ok else 'FAILED'}"]
        for entry in self.checks:
            if entry.passed:
                result.append(f"  {entry.name}: pass")
            else:
                witness = ",".join(str(i) for i in entry.witness)
                suffix = f" ({entry.detail})" if entry.detail else ""
                result.append(f"  {entry.name}: FAIL at ({witness}){suffix}")
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {
                    "name": entry.name,
                    "passed": entry.passed,
                    "witness": list(entry.witness) if entry.witness is not None else None,
                    "detail": entry.detail,
                }
                for entry in self.checks
            ],
        }

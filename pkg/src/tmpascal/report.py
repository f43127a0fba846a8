"""Pass/fail reporting shared by all verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one suite: case count, failures, and free-form notes.

    A failure is (identifier, expected, actual), all stringified at record
    time so reports stay printable regardless of the value types involved.
    """

    suite: str
    cases: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ident: str, expected, actual) -> bool:
        """Record one case; keep a failure entry when the values differ."""
        self.cases += 1
        if expected != actual:
            self.failures.append((ident, str(expected), str(actual)))
            return False
        return True

    def check_that(self, ident: str, ok: bool, detail: str = "") -> bool:
        """Record one predicate case with an optional detail string."""
        self.cases += 1
        if not ok:
            self.failures.append((ident, "holds", detail or "violated"))
        return ok

    def lines(self, max_failures: int = 20) -> list[str]:
        """Line-oriented rendering ending in a machine-readable PASS/FAIL."""
        out = [f"suite: {self.suite}", f"cases: {self.cases}", f"failures: {len(self.failures)}"]
        for ident, expected, actual in self.failures[:max_failures]:
            out.append(f"  FAIL {ident}: expected {expected}, got {actual}")
        if len(self.failures) > max_failures:
            out.append(f"  ... {len(self.failures) - max_failures} more")
        for note in self.notes:
            out.append(f"note: {note}")
        out.append("PASS" if self.passed else "FAIL")
        return out

"""Check records and verification reports with a stable serialization.

A report is a flat list of named checks.  Each check carries an anchor (a
stable slug naming the claim being verified), a four-valued status, the
witness data that makes a verdict auditable, and the bound or budget the
verdict holds under.  Serialization order is fixed so identical runs give
identical output up to the timing fields.
"""

from dataclasses import dataclass, field
import json
import time

SCHEMA_VERSION = "1"

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "bounded-inconclusive"
SKIPPED = "skipped-hypothesis"
STATUSES = (PASS, FAIL, INCONCLUSIVE, SKIPPED)


def _plain(value):
    """JSON-safe copy: containers recurse, exotic leaves become strings."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((_plain(v) for v in value), key=repr)
    return str(value)


@dataclass
class CheckResult:
    name: str
    anchor: str
    status: str
    witness: object = None
    bound: object = None
    ms: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json_dict(self):
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "witness": _plain(self.witness),
            "bound": _plain(self.bound),
            "ms": round(self.ms, 3),
        }


@dataclass
class VerificationReport:
    suite: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    version: str = SCHEMA_VERSION

    def add(self, name, anchor, status, witness=None, bound=None, ms=0.0):
        result = CheckResult(name, anchor, status, witness, bound, ms)
        self.checks.append(result)
        return result

    def run(self, name, anchor, fn, bound=None):
        """Time fn() -> (status, witness) and record the outcome."""
        t0 = time.perf_counter()
        status, witness = fn()
        ms = (time.perf_counter() - t0) * 1000.0
        return self.add(name, anchor, status, witness, bound, ms)

    def counts(self):
        out = {s: 0 for s in STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def overall(self):
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def warnings(self):
        """Number of bounded-inconclusive checks; they never mask a fail."""
        return self.counts()[INCONCLUSIVE]

    def to_json_dict(self):
        return {
            "version": self.version,
            "suite": self.suite,
            "params": _plain(self.params),
            "checks": [c.to_json_dict() for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_text(self):
        lines = [f"suite {self.suite}  (schema {self.version})"]
        if self.params:
            pairs = " ".join(f"{k}={v}" for k, v in sorted(
                self.params.items()))
            lines.append(f"params: {pairs}")
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.name}  <{c.anchor}>"
                         f"  ({c.ms:.1f} ms)")
            if c.bound is not None:
                lines.append(f"      bound: {_plain(c.bound)}")
            if c.witness is not None:
                lines.append(f"      {_plain(c.witness)}")
        cts = self.counts()
        tally = ", ".join(f"{v} {k}" for k, v in cts.items() if v)
        lines.append(f"overall: {self.overall} ({tally or 'no checks'})")
        return "\n".join(lines) + "\n"


def emit_report(report, format="json"):
    if format == "json":
        return report.to_json()
    if format == "text":
        return report.to_text()
    raise ValueError(f"unknown format {format!r}")

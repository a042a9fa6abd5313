"""Verification report shared by identity, theorem and congruence checks."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from typing import Optional


@dataclass
class VerificationReport:
    """Outcome of one bounded check.

    ``first_failure`` is the smallest exponent (or argument of c) where the
    check broke; it is None exactly when ``status == "pass"``.
    """

    id: str
    order: int
    status: str
    first_failure: Optional[int] = None
    elapsed_ms: Optional[float] = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self):
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = round((time.perf_counter() - self.t0) * 1000, 3)


def report(cid, order, bad, timer) -> VerificationReport:
    return VerificationReport(cid, order, "pass" if bad is None else "fail", bad, timer.ms)

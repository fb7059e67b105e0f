from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A boolean decision together with the evidence behind it.

    Truthiness follows ``value`` so verdicts can be used directly in
    conditions. ``certainty`` is ``"exact"`` when the decision procedure is
    complete for the backend and ``"bounded"`` when it searched a truncated
    family.
    """

    value: bool
    witness: Any = None
    certainty: str = "exact"
    note: str = ""
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return bool(self.value)

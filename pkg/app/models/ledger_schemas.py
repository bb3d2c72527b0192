from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class SearchOutcome(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_OUT = "budget_out"


class LedgerEntry(BaseModel):
    canonical: str = Field(..., description="graph6 string of the canonical labelling")
    n: int
    edges: int
    chi: Optional[int] = Field(None, description="Exact chromatic number, when computed")
    outcome: SearchOutcome
    elapsed: float = Field(..., ge=0, description="Seconds spent on this graph")
    note: Optional[str] = None


class ScanLedger(BaseModel):
    entries: List[LedgerEntry] = Field(default_factory=list)
    halted: bool = Field(False, description="True when a counterexample candidate stopped the scan")

    @property
    def counterexample_candidates(self) -> List[LedgerEntry]:
        return [e for e in self.entries if e.outcome == SearchOutcome.EXHAUSTED]

    def to_text(self) -> str:
        lines = [
            f"graph {e.canonical} n={e.n} m={e.edges} chi={e.chi} "
            f"outcome={e.outcome.value} elapsed={e.elapsed:.3f}"
            + (f" note={e.note}" if e.note else "")
            for e in self.entries
        ]
        lines.append(
            f"summary graphs={len(self.entries)} "
            f"counterexample_candidates={len(self.counterexample_candidates)} "
            f"halted={str(self.halted).lower()}"
        )
        return "\n".join(lines) + "\n"

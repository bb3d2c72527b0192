from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class Witness(BaseModel):
    path_index: Optional[int] = Field(
        None, description="Index into certificate.paths, when the failure is path-local"
    )
    detail: str = Field(..., description="Concrete evidence, e.g. the reused edge")


class CheckResult(BaseModel):
    name: str
    passed: bool
    witnesses: List[Witness] = Field(default_factory=list)


class VerificationReport(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "checks": [
                    {"name": "terminals", "passed": True, "witnesses": []},
                    {
                        "name": "totally_odd",
                        "passed": False,
                        "witnesses": [{"path_index": 2, "detail": "pair (0, 2) has length 2"}],
                    },
                ],
                "overall": False,
            }
        }
    )

    @computed_field
    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_text(self) -> str:
        lines = []
        for check in self.checks:
            lines.append(f"check {check.name} {'pass' if check.passed else 'fail'}")
            lines.extend(f"  witness {w.detail}" for w in check.witnesses)
        lines.append(f"overall {'pass' if self.overall else 'fail'}")
        return "\n".join(lines) + "\n"


class ChiBoundReport(BaseModel):
    m: int = Field(..., ge=1)
    base_chi: int = Field(..., description="χ(L(H)), exact")
    value: int = Field(..., description="χ(L(mH)), or a greedy upper bound when not exact")
    bound: int = Field(..., description="m·χ(L(H))")
    exact: bool = Field(..., description="False when the budget forced the greedy bound")

    @computed_field
    @property
    def passed(self) -> bool:
        return self.value <= self.bound

    def to_text(self) -> str:
        evidence = "exact" if self.exact else "greedy upper bound"
        return (
            f"chi {self.value} ({evidence})\n"
            f"bound {self.bound} = {self.m} * {self.base_chi}\n"
            f"result {'pass' if self.passed else 'fail'}\n"
        )

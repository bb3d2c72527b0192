from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config import DEFAULT_BUDGET, DEFAULT_MAX_PATHS_PER_PAIR, DEFAULT_TIME_LIMIT


class InvocationConfig(BaseModel):
    """Options shared by every subcommand."""

    output_format: Literal["text", "json"] = Field(
        "text", description="Encoding of reports, ledgers, colorings and maps"
    )
    budget: int = Field(DEFAULT_BUDGET, gt=0, description="Branch-node budget")
    time_limit: float = Field(DEFAULT_TIME_LIMIT, gt=0, description="Oracle limit in seconds")
    max_paths_per_pair: int = Field(DEFAULT_MAX_PATHS_PER_PAIR, gt=0)
    progress: bool = Field(False, description="Show a progress bar on stderr")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "output_format": "json",
                "budget": 1000000,
                "time_limit": 30,
                "max_paths_per_pair": 10000,
                "progress": False,
            }
        }
    )


class VerifyTarget(BaseModel):
    """Where the verifier takes its host graph from."""

    graph: Optional[Path] = None
    line_graph_of: Optional[Path] = None

    @model_validator(mode="after")
    def at_most_one_source(self):
        if self.graph is not None and self.line_graph_of is not None:
            raise ValueError("--graph and --line-graph-of are mutually exclusive")
        return self


class ScanSource(BaseModel):
    """Exactly one stream of graphs for the scanner."""

    corpus: Optional[Path] = None
    generate: Optional[int] = Field(None, ge=1, description="Largest order to enumerate")
    random: Optional[int] = Field(None, ge=1, description="Number of random graphs")
    vertices: int = Field(8, ge=1)
    edge_probability: float = Field(0.5, ge=0, le=1)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def exactly_one_source(self):
        chosen = [
            name
            for name in ("corpus", "generate", "random")
            if getattr(self, name) is not None
        ]
        if len(chosen) != 1:
            raise ValueError("give exactly one of --corpus, --generate, --random")
        return self

from __future__ import annotations

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.models.graph import Multigraph


class HostGraph(BaseModel):
    n: int = Field(..., ge=0, description="Number of host vertices (0-based ids)")
    edges: List[Tuple[int, int]] = Field(
        default_factory=list, description="Host edges as [u, v] pairs"
    )

    @classmethod
    def from_graph(cls, graph: Multigraph) -> HostGraph:
        return cls(n=graph.vertex_count, edges=graph.pairs())

    def to_graph(self) -> Multigraph:
        return Multigraph.from_edges(self.n, self.edges)


class PairPath(BaseModel):
    pair: Tuple[int, int] = Field(..., description="The two terminals this path joins")
    vertices: List[int] = Field(..., description="Host vertices from pair[0] to pair[1]")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


class CertificateProperties(BaseModel):
    strong: bool = Field(..., description="No terminal is interior to any path")
    totally_odd: bool = Field(..., description="Every path has odd length")


class Provenance(BaseModel):
    case: str = Field(..., description="Construction case tag, e.g. 'j=2,d>=4' or 'star'")
    steps: List[str] = Field(
        default_factory=list, description="Later transformations, e.g. 'repair'"
    )


class ImmersionCertificate(BaseModel):
    """Terminals plus one path per terminal pair, replayable by the verifier."""

    host: HostGraph
    t: int = Field(..., ge=0, description="Order of the immersed clique")
    terminals: List[int] = Field(..., description="Terminal vertices (0-based)")
    paths: List[PairPath] = Field(default_factory=list)
    properties: CertificateProperties
    provenance: Provenance

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "host": {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]},
                "t": 3,
                "terminals": [0, 1, 2],
                "paths": [
                    {"pair": [0, 1], "vertices": [0, 1]},
                    {"pair": [1, 2], "vertices": [1, 2]},
                    {"pair": [0, 2], "vertices": [0, 4, 3, 2]},
                ],
                "properties": {"strong": True, "totally_odd": True},
                "provenance": {"case": "odd-cycle", "steps": []},
            }
        }
    )

    def with_steps(self, *steps: str) -> ImmersionCertificate:
        return self.model_copy(
            update={
                "provenance": Provenance(
                    case=self.provenance.case, steps=[*self.provenance.steps, *steps]
                )
            }
        )

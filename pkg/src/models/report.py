"""Report, verdict and configuration models."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .graph import Matching, VertexSet
from .structure import ConstructionPlan, GallaiEdmonds

SCHEMA_VERSION = 1


class Regime(str, Enum):
    """Which construction produced a report."""

    DEFICIENCY_AT_MOST_ONE = "deficiency<=1"
    SIMPLE = "simple-k"
    MULTI_4 = "multi-4"
    MULTI_5 = "multi-5"
    MULTI_LOW = "multi-low"
    MULTI_HIGH = "multi-high"
    ORACLE = "oracle"


class GraphFormat(str, Enum):
    """Supported graph text formats."""

    GRAPH6 = "graph6"
    MEL = "mel"


class Command(str, Enum):
    """CLI commands."""

    CONSTRUCT = "construct"
    VERIFY = "verify"
    DECOMPOSE = "decompose"
    ORACLE = "oracle"
    SCAN = "scan"
    GEN = "gen"


class ComponentChoice(BaseModel):
    """Per-component summary of a construction."""

    index: int = Field(..., description="Component index in H order")
    vertices: VertexSet = Field(..., description="Vertices of Q_i")
    edges_to_a: int = Field(..., description="|[Q_i, A]|")
    good_vertices: VertexSet = Field(
        default=(), description="Vertices with no neighbor outside Q_i"
    )
    avoid: Optional[int] = Field(None, description="Vertex left unsaturated inside Q_i")
    degree_class: str = Field(default="tail", description="'W', 'U' or 'tail'")


class ConstructionReport(BaseModel):
    """Outcome of a construction: M*, its unsaturated vertices and the verdict."""

    matching: Matching = Field(..., description="M*")
    unsaturated: VertexSet = Field(..., description="M*-unsaturated vertices")
    property_holds: bool = Field(..., description="Maximum and no shared neighbor")
    regime: Regime = Field(..., description="Construction regime")
    k: Optional[int] = Field(None, description="Regularity of the input")
    decomposition: GallaiEdmonds = Field(..., description="Gallai-Edmonds partition")
    components: List[ComponentChoice] = Field(default_factory=list)
    plan: Optional[ConstructionPlan] = Field(None, description="Plan when a pipeline ran")
    duration_seconds: float = Field(default=0.0, description="Wall-clock duration")


class DecompositionReport(BaseModel):
    """Gallai-Edmonds partition with per-component detail for reporting."""

    decomposition: GallaiEdmonds = Field(...)
    k: Optional[int] = Field(None, description="Regularity, when regular")
    components: List[ComponentChoice] = Field(default_factory=list)


class VerifyReport(BaseModel):
    """Verdict of the property check for a given matching."""

    size: int = Field(..., description="|M|")
    nu: int = Field(..., description="Maximum matching size of the graph")
    is_maximum: bool = Field(...)
    property_holds: bool = Field(...)
    unsaturated: VertexSet = Field(default=())
    shared_neighbor: Optional[Tuple[int, int, int]] = Field(
        None,
        description="(u, v, w) with u, v unsaturated and w a common neighbor",
    )


class OracleVerdict(BaseModel):
    """Brute-force decision of whether a good maximum matching exists."""

    nu: int = Field(..., description="Maximum matching size found by enumeration")
    maximum_matching_count: int = Field(..., description="Number of maximum matchings")
    good_exists: bool = Field(..., description="Some maximum matching is good")
    witness: Optional[Matching] = Field(None, description="A good maximum matching")


class ScanRecord(BaseModel):
    """One scanned graph."""

    index: int = Field(..., description="Position in the scan")
    n: int = Field(...)
    k: int = Field(...)
    simple: bool = Field(...)
    mel: str = Field(..., description="MEL serialization")
    nu: int = Field(..., description="Engine maximum matching size")
    oracle_nu: Optional[int] = Field(
        None,
        description="Oracle maximum matching size; None when over budget",
    )
    good_exists: Optional[bool] = Field(None, description="Oracle verdict; None when over budget")
    regime: Optional[str] = Field(None, description="Construction regime or 'unsupported'")
    construct_property: Optional[bool] = Field(None)
    discrepancies: List[str] = Field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return not self.discrepancies


class ScanSummary(BaseModel):
    """Aggregate over a scan."""

    mode: str = Field(..., description="'exhaustive' or 'random'")
    k: int = Field(...)
    simple: bool = Field(...)
    n_max: int = Field(...)
    total: int = Field(default=0)
    discrepancy_count: int = Field(default=0)
    regimes: Dict[str, int] = Field(default_factory=dict)


class RunConfig(BaseModel):
    """Tunables read from a YAML configuration file."""

    enumeration_edge_budget: int = Field(
        default=24,
        ge=1,
        description="Maximum simple-support edges for brute-force enumeration",
    )
    generator_retry_budget: int = Field(
        default=10000,
        ge=1,
        description="Rejection-sampling attempts for random multigraphs and barrier graphs",
    )
    oracle_fallback_max_n: int = Field(
        default=12,
        ge=0,
        description="Largest n for which low-degree constructions fall back to the oracle",
    )
    scan_workers: int = Field(default=1, ge=1, description="Worker processes for scans")
    scan_trials: int = Field(default=500, ge=1, description="Graphs per random scan")
    scan_seed: int = Field(default=0, description="Seed for random scans")
    dedupe_isomorphs: bool = Field(
        default=True,
        description="Drop isomorphic duplicates in exhaustive scans",
    )
    log_level: str = Field(default="WARNING", description="Logging level name")


class CliConfig(BaseModel):
    """One CLI invocation."""

    command: Command = Field(...)
    input: Optional[str] = Field(None, description="Graph path or '-' for stdin")
    matching: Optional[str] = Field(None, description="Matching file for verify")
    format: Optional[GraphFormat] = Field(None, description="Input format; auto when unset")
    json_output: bool = Field(default=False)
    seed: int = Field(default=0)
    n: Optional[int] = Field(None)
    k: Optional[int] = Field(None)
    simple: bool = Field(default=True)
    trials: Optional[int] = Field(None)
    n_max: Optional[int] = Field(None)
    random_scan: bool = Field(default=False)
    hubs: Optional[int] = Field(None, description="Barrier hubs; draws deficiency >= 2 graphs")
    out_format: GraphFormat = Field(default=GraphFormat.MEL)
    fixture: Optional[str] = Field(None, description="Named fixture for gen")
    matching_out: Optional[str] = Field(None, description="Where construct writes M* as text")
    run: RunConfig = Field(default_factory=RunConfig)

"""Shared domain types for the intent pipeline.

Everything that crosses an agent boundary is defined here: the user intent,
the junior analysis proposal, topology specs with their structural
validator, weighted topologies, validation reports and routing decisions.
All types are immutable value objects; the canonical wire form of each is a
JSON document whose keys are the lower_snake_case field names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Iterable, Mapping


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


def canonical_json(doc: Any) -> str:
    """Stable serialization used wherever byte-identical output matters."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


class ServiceType(Enum):
    EMBB = "eMBB"
    URLLC = "URLLC"
    MMTC = "mMTC"

    @classmethod
    def parse(cls, text: str) -> "ServiceType":
        normalized = str(text).strip().lower()
        for member in cls:
            if member.value.lower() == normalized or member.name.lower() == normalized:
                return member
        raise ValueError(f"unknown service type: {text!r}")


class TopologyKind(Enum):
    FULL_MESH = "full_mesh"
    PARTIAL_MESH = "partial_mesh"
    HUB_AND_SPOKE = "hub_and_spoke"

    @classmethod
    def parse(cls, text: str) -> "TopologyKind":
        normalized = str(text).strip().lower().replace("-", "_").replace(" ", "_")
        aliases = {
            "full_mesh": cls.FULL_MESH,
            "fullmesh": cls.FULL_MESH,
            "mesh": cls.FULL_MESH,
            "partial_mesh": cls.PARTIAL_MESH,
            "partialmesh": cls.PARTIAL_MESH,
            "hub_and_spoke": cls.HUB_AND_SPOKE,
            "hub_spoke": cls.HUB_AND_SPOKE,
            "star": cls.HUB_AND_SPOKE,
        }
        if normalized in aliases:
            return aliases[normalized]
        raise ValueError(f"unknown topology kind: {text!r}")


class NodeRole(Enum):
    SWITCH = "switch"
    ROUTER = "router"
    HOST = "host"


INFRASTRUCTURE_ROLES = frozenset({NodeRole.SWITCH, NodeRole.ROUTER})


class RoutingStrategy(Enum):
    SPF = "SPF"
    DUAL = "DUAL"


def link_key(endpoint_a: str, endpoint_b: str) -> str:
    """Canonical undirected link identifier (endpoint order-insensitive)."""
    a, b = sorted((endpoint_a, endpoint_b))
    return f"{a}~{b}"


@dataclass(frozen=True)
class Intent:
    intent_id: str
    raw_text: str
    submitted_at: str
    source: str = "cli"

    def to_dict(self) -> dict:
        return {
            "intent_id": self.intent_id,
            "raw_text": self.raw_text,
            "submitted_at": self.submitted_at,
            "source": self.source,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Intent":
        return cls(
            intent_id=doc["intent_id"],
            raw_text=doc["raw_text"],
            submitted_at=doc.get("submitted_at", utc_now_iso()),
            source=doc.get("source", "cli"),
        )

    @classmethod
    def new(cls, raw_text: str, intent_id: str, source: str = "cli") -> "Intent":
        if not raw_text or not raw_text.strip():
            raise ValueError("intent raw_text must be non-empty")
        return cls(intent_id=intent_id, raw_text=raw_text, submitted_at=utc_now_iso(), source=source)


@dataclass(frozen=True)
class LinkAttributes:
    latency_ms: float
    bandwidth_mbps: float
    load: float
    reliability: float

    def range_errors(self) -> list[str]:
        problems = []
        if self.latency_ms < 0:
            problems.append(f"latency_ms {self.latency_ms} < 0")
        if self.bandwidth_mbps <= 0:
            problems.append(f"bandwidth_mbps {self.bandwidth_mbps} <= 0")
        if not 0.0 <= self.load <= 1.0:
            problems.append(f"load {self.load} outside [0,1]")
        if not 0.0 < self.reliability <= 1.0:
            problems.append(f"reliability {self.reliability} outside (0,1]")
        return problems

    def to_dict(self) -> dict:
        return {
            "latency_ms": self.latency_ms,
            "bandwidth_mbps": self.bandwidth_mbps,
            "load": self.load,
            "reliability": self.reliability,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "LinkAttributes":
        return cls(
            latency_ms=float(doc["latency_ms"]),
            bandwidth_mbps=float(doc["bandwidth_mbps"]),
            load=float(doc["load"]),
            reliability=float(doc["reliability"]),
        )


@dataclass(frozen=True)
class Node:
    node_id: str
    role: NodeRole
    domain_id: str = "d1"

    def to_dict(self) -> dict:
        return {"node_id": self.node_id, "role": self.role.value, "domain_id": self.domain_id}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Node":
        return cls(node_id=doc["node_id"], role=NodeRole(doc["role"]), domain_id=doc.get("domain_id", "d1"))


@dataclass(frozen=True)
class Link:
    endpoint_a: str
    endpoint_b: str
    attrs: LinkAttributes

    @property
    def key(self) -> str:
        return link_key(self.endpoint_a, self.endpoint_b)

    def to_dict(self) -> dict:
        return {"endpoint_a": self.endpoint_a, "endpoint_b": self.endpoint_b, "attrs": self.attrs.to_dict()}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Link":
        return cls(
            endpoint_a=doc["endpoint_a"],
            endpoint_b=doc["endpoint_b"],
            attrs=LinkAttributes.from_dict(doc["attrs"]),
        )


@dataclass(frozen=True)
class TopologySpec:
    kind: TopologyKind
    nodes: tuple[Node, ...]
    links: tuple[Link, ...]

    def node_ids(self) -> list[str]:
        return [n.node_id for n in self.nodes]

    def infrastructure_nodes(self) -> list[Node]:
        return [n for n in self.nodes if n.role in INFRASTRUCTURE_ROLES]

    def host_nodes(self) -> list[Node]:
        return [n for n in self.nodes if n.role is NodeRole.HOST]

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {n.node_id: [] for n in self.nodes}
        for link in self.links:
            if link.endpoint_a in adj and link.endpoint_b in adj:
                adj[link.endpoint_a].append(link.endpoint_b)
                adj[link.endpoint_b].append(link.endpoint_a)
        return adj

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "nodes": [n.to_dict() for n in self.nodes],
            "links": [l.to_dict() for l in self.links],
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "TopologySpec":
        return cls(
            kind=TopologyKind(doc["kind"]),
            nodes=tuple(Node.from_dict(n) for n in doc["nodes"]),
            links=tuple(Link.from_dict(l) for l in doc["links"]),
        )


@dataclass(frozen=True)
class JuniorProposal:
    agent_id: str
    intent_id: str
    service_type: ServiceType
    topology: TopologySpec
    service_config: dict
    model_raw_output: str = ""

    def to_dict(self) -> dict:
        return {
            "agent_id": self.agent_id,
            "intent_id": self.intent_id,
            "service_type": self.service_type.value,
            "topology": self.topology.to_dict(),
            "service_config": self.service_config,
            "model_raw_output": self.model_raw_output,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "JuniorProposal":
        return cls(
            agent_id=doc["agent_id"],
            intent_id=doc["intent_id"],
            service_type=ServiceType(doc["service_type"]),
            topology=TopologySpec.from_dict(doc["topology"]),
            service_config=dict(doc["service_config"]),
            model_raw_output=doc.get("model_raw_output", ""),
        )


@dataclass(frozen=True)
class WeightedTopology:
    spec: TopologySpec
    weights: Mapping[str, float]

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))

    def to_dict(self) -> dict:
        return {"spec": self.spec.to_dict(), "weights": {k: self.weights[k] for k in sorted(self.weights)}}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "WeightedTopology":
        return cls(spec=TopologySpec.from_dict(doc["spec"]), weights={k: float(v) for k, v in doc["weights"].items()})


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


@dataclass(frozen=True)
class ValidationOutcome:
    passed: bool
    violations: tuple[Violation, ...] = ()

    def to_dict(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_dict() for v in self.violations]}


@dataclass(frozen=True)
class ValidationReport:
    attempt: int
    passed: bool
    violations: tuple[Violation, ...]
    timestamp: str = field(default_factory=utc_now_iso)

    def to_dict(self) -> dict:
        return {
            "attempt": self.attempt,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "ValidationReport":
        return cls(
            attempt=int(doc["attempt"]),
            passed=bool(doc["passed"]),
            violations=tuple(Violation(v["code"], v["message"]) for v in doc["violations"]),
            timestamp=doc.get("timestamp", utc_now_iso()),
        )


@dataclass(frozen=True)
class MetricCoefficients:
    w_latency: float
    w_load: float
    w_reliability: float
    hop_count: bool = False

    def __post_init__(self):
        if min(self.w_latency, self.w_load, self.w_reliability) < 0:
            raise ValueError("metric coefficients must be non-negative")
        if self.w_latency + self.w_load + self.w_reliability <= 0:
            raise ValueError("metric coefficients must not all be zero")

    def normalized(self) -> "MetricCoefficients":
        total = self.w_latency + self.w_load + self.w_reliability
        return MetricCoefficients(
            w_latency=self.w_latency / total,
            w_load=self.w_load / total,
            w_reliability=self.w_reliability / total,
            hop_count=self.hop_count,
        )

    def to_dict(self) -> dict:
        return {
            "w_latency": self.w_latency,
            "w_load": self.w_load,
            "w_reliability": self.w_reliability,
            "hop_count": self.hop_count,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "MetricCoefficients":
        return cls(
            w_latency=float(doc["w_latency"]),
            w_load=float(doc["w_load"]),
            w_reliability=float(doc["w_reliability"]),
            hop_count=bool(doc.get("hop_count", False)),
        )


@dataclass(frozen=True)
class RoutingDecision:
    strategy: RoutingStrategy
    metric_coefficients: MetricCoefficients
    rationale: str

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "metric_coefficients": self.metric_coefficients.to_dict(),
            "rationale": self.rationale,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "RoutingDecision":
        return cls(
            strategy=RoutingStrategy(doc["strategy"]),
            metric_coefficients=MetricCoefficients.from_dict(doc["metric_coefficients"]),
            rationale=doc.get("rationale", ""),
        )


def _connected_component(start: str, adjacency: Mapping[str, list[str]]) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        current = stack.pop()
        for neighbor in adjacency.get(current, ()):
            if neighbor not in seen:
                seen.add(neighbor)
                stack.append(neighbor)
    return seen


def validate_topology_spec(spec: TopologySpec) -> ValidationOutcome:
    """Structural validation of a topology spec.

    Pure and deterministic: the same spec always yields the same violation
    list, in check order. Violations are data, not exceptions.
    """
    violations: list[Violation] = []

    if not spec.nodes:
        return ValidationOutcome(False, (Violation("EMPTY", "topology has no nodes"),))

    node_ids = spec.node_ids()
    known = set(node_ids)
    seen_ids: set[str] = set()
    for node_id in node_ids:
        if node_id in seen_ids:
            violations.append(Violation("DUPLICATE_NODE_ID", f"node id {node_id!r} repeated"))
        seen_ids.add(node_id)

    seen_links: set[str] = set()
    for link in spec.links:
        if link.endpoint_a not in known or link.endpoint_b not in known:
            violations.append(
                Violation("UNKNOWN_ENDPOINT", f"link {link.endpoint_a}-{link.endpoint_b} references unknown node")
            )
            continue
        if link.endpoint_a == link.endpoint_b:
            violations.append(Violation("SELF_LOOP", f"self-loop on {link.endpoint_a}"))
            continue
        if link.key in seen_links:
            violations.append(Violation("DUPLICATE_LINK", f"link {link.key} repeated"))
        seen_links.add(link.key)
        for problem in link.attrs.range_errors():
            violations.append(Violation("ATTR_RANGE", f"link {link.key}: {problem}"))

    # Hosts attach to the fabric with exactly one access link to an infra node.
    role_of = {n.node_id: n.role for n in spec.nodes}
    adjacency = spec.adjacency()
    for host in spec.host_nodes():
        neighbors = adjacency[host.node_id]
        if len(neighbors) != 1:
            violations.append(
                Violation("HOST_ACCESS", f"host {host.node_id} has degree {len(neighbors)}, expected 1")
            )
        elif role_of[neighbors[0]] is NodeRole.HOST:
            violations.append(
                Violation("HOST_ACCESS", f"host {host.node_id} attaches to host {neighbors[0]}, not the fabric")
            )

    reachable = _connected_component(node_ids[0], adjacency)
    if len(reachable) != len(known):
        missing = sorted(known - reachable)
        violations.append(Violation("DISCONNECTED", f"unreachable nodes: {', '.join(missing)}"))

    violations.extend(_kind_conformance(spec, adjacency, role_of))

    return ValidationOutcome(passed=not violations, violations=tuple(violations))


def _kind_conformance(
    spec: TopologySpec, adjacency: Mapping[str, list[str]], role_of: Mapping[str, NodeRole]
) -> list[Violation]:
    """Kind rules cover the transport fabric: infra nodes and infra-infra links."""
    infra = [n.node_id for n in spec.infrastructure_nodes()]
    n = len(infra)
    if n == 0:
        return [Violation("KIND_CONFORMANCE", "no infrastructure nodes")]

    infra_set = set(infra)
    fabric_links = {
        link.key
        for link in spec.links
        if link.endpoint_a in infra_set and link.endpoint_b in infra_set and link.endpoint_a != link.endpoint_b
    }
    count = len(fabric_links)
    degree = {
        node: sum(1 for peer in adjacency[node] if peer in infra_set) for node in infra
    }

    if spec.kind is TopologyKind.FULL_MESH:
        expected = n * (n - 1) // 2
        if count != expected:
            return [
                Violation(
                    "KIND_CONFORMANCE",
                    f"full mesh over {n} infra nodes needs {expected} links, found {count}",
                )
            ]
        return []

    if spec.kind is TopologyKind.HUB_AND_SPOKE:
        if n < 2:
            return [Violation("KIND_CONFORMANCE", "hub-and-spoke needs at least 2 infra nodes")]
        hubs = [node for node in infra if degree[node] == n - 1]
        spokes_ok = all(degree[node] == 1 for node in infra if node not in hubs)
        # n == 2 degenerates to a single link where both ends qualify as hub.
        hub_ok = len(hubs) == 1 or (n == 2 and len(hubs) == 2)
        if count != n - 1 or not hub_ok or not spokes_ok:
            return [
                Violation(
                    "KIND_CONFORMANCE",
                    f"hub-and-spoke over {n} infra nodes needs one hub of degree {n - 1}, "
                    f"{n - 1} links and all spokes degree 1",
                )
            ]
        return []

    # Partial mesh: connectivity is checked globally; here only the strict
    # link-count band (n-1, n(n-1)/2) applies.
    lower, upper = n - 1, n * (n - 1) // 2
    if not lower < count < upper:
        return [
            Violation(
                "KIND_CONFORMANCE",
                f"partial mesh over {n} infra nodes needs link count strictly between {lower} and {upper}, found {count}",
            )
        ]
    return []

"""Cluster configuration and the plain-text config file formats.

Three file grammars live here (documented in FORMAT.md): the cluster config
(key = value lines plus one `node ...` line per replica), the latency matrix
and the fault script used by the simulator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ordercast import quorum

CLASSIC = "classic"
WEIGHTED = "weighted"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class NodeEntry:
    node_id: int
    host: str = "127.0.0.1"
    port: int = 0
    weight: int = 1
    pubkey_path: str = ""
    site: str = ""


@dataclass(frozen=True)
class ClusterConfig:
    """Replica count, fault threshold, vote weights and batching knobs."""

    n: int
    f: int
    delta: int = 0
    mode: str = CLASSIC
    weights: dict = field(default_factory=dict)
    batch_limit: int = 400
    batch_timeout_ms: float = 20.0
    block_size: int = 10
    flush_timeout_ms: float = 1000.0
    signing_workers: int = 2
    checkpoint_period: int = 1024
    nodes: tuple = ()

    def __post_init__(self):
        if self.f < 1:
            raise ConfigError("f must be >= 1")
        if self.n != 3 * self.f + 1 + self.delta:
            raise ConfigError("n must equal 3f + 1 + delta")
        if self.mode not in (CLASSIC, WEIGHTED):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.mode == CLASSIC and self.delta != 0:
            raise ConfigError("classic mode requires delta = 0")
        weights = dict(self.weights)
        if not weights:
            if self.mode == WEIGHTED:
                weights = quorum.assign_weights(range(self.n), self.f, self.delta)
            else:
                weights = {i: 1 for i in range(self.n)}
        object.__setattr__(self, "weights", weights)
        self._check_weights()

    def _check_weights(self):
        if len(self.weights) != self.n:
            raise ConfigError("one weight per replica required")
        if self.mode == CLASSIC:
            if any(w != 1 for w in self.weights.values()):
                raise ConfigError("classic mode requires unit weights")
        else:
            vmax = quorum.weighted_vmax(self.f, self.delta)
            n_max = sum(1 for w in self.weights.values() if w == vmax)
            n_min = sum(1 for w in self.weights.values() if w == 1)
            if vmax == 1:
                if n_min != self.n:
                    raise ConfigError("weights must all be 1 when delta = 0")
            elif n_max != 2 * self.f or n_max + n_min != self.n:
                raise ConfigError(
                    f"weighted mode requires exactly 2f={2 * self.f} replicas at "
                    f"weight {vmax} and the rest at 1"
                )

    @property
    def node_ids(self) -> list[int]:
        return sorted(self.weights)

    @property
    def quorum_threshold(self) -> int:
        """Vote units needed for the WRITE and ACCEPT rounds."""
        if self.mode == WEIGHTED:
            return quorum.weighted_threshold(self.f, self.delta)
        return quorum.classic_threshold(self.n, self.f)

    @property
    def tentative_execution(self) -> bool:
        return self.mode == WEIGHTED

    def leader_of(self, regency: int) -> int:
        return regency % self.n

    def weight_of(self, node_id: int) -> int:
        try:
            return self.weights[node_id]
        except KeyError:
            raise quorum.UnknownVoterError(node_id) from None


_INT_KEYS = {"n", "f", "delta", "batch_limit", "block_size", "signing_workers",
             "checkpoint_period"}
_FLOAT_KEYS = {"batch_timeout_ms", "flush_timeout_ms"}


def parse_cluster_config(text: str) -> ClusterConfig:
    values: dict = {}
    nodes: list[NodeEntry] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("node "):
            nodes.append(_parse_node_line(line, lineno))
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in _INT_KEYS:
            values[key] = int(value)
        elif key in _FLOAT_KEYS:
            values[key] = float(value)
        elif key == "mode":
            values[key] = value.lower()
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    if nodes:
        if sorted(e.node_id for e in nodes) != list(range(len(nodes))):
            raise ConfigError("node ids must be 0..n-1")
        values["weights"] = {e.node_id: e.weight for e in nodes}
        values["nodes"] = tuple(sorted(nodes, key=lambda e: e.node_id))
    return ClusterConfig(**values)


def _parse_node_line(line: str, lineno: int) -> NodeEntry:
    parts = line.split()
    try:
        node_id = int(parts[1])
    except (IndexError, ValueError):
        raise ConfigError(f"line {lineno}: node line needs an integer id") from None
    fields: dict = {"node_id": node_id}
    for item in parts[2:]:
        if "=" not in item:
            raise ConfigError(f"line {lineno}: malformed node attribute {item!r}")
        key, _, value = item.partition("=")
        if key in ("host", "site"):
            fields[key] = value
        elif key in ("port", "weight"):
            fields[key] = int(value)
        elif key == "pubkey":
            fields["pubkey_path"] = value
        else:
            raise ConfigError(f"line {lineno}: unknown node attribute {key!r}")
    return NodeEntry(**fields)


def load_cluster_config(path) -> ClusterConfig:
    return parse_cluster_config(Path(path).read_text())


@dataclass(frozen=True)
class LatencyMatrix:
    """One-way latency mean/jitter (ms) between named sites; not symmetric."""

    sites: tuple
    mean_ms: dict  # (from_site, to_site) -> float
    jitter_ms: dict

    def latency_params(self, src_site: str, dst_site: str) -> tuple[float, float]:
        key = (src_site, dst_site)
        if key not in self.mean_ms:
            raise ConfigError(f"no latency entry for {src_site}->{dst_site}")
        return self.mean_ms[key], self.jitter_ms[key]

    @classmethod
    def uniform(cls, sites, mean_ms: float, jitter_ms: float = 0.0) -> "LatencyMatrix":
        sites = tuple(sites)
        mean = {}
        jitter = {}
        for a in sites:
            for b in sites:
                mean[(a, b)] = 0.0 if a == b else mean_ms
                jitter[(a, b)] = 0.0 if a == b else jitter_ms
        return cls(sites, mean, jitter)


def parse_latency_matrix(text: str) -> LatencyMatrix:
    """Tabular grammar: `sites: a b c`, then `a b mean jitter` per direction.

    Missing self-links default to 0; missing directed pairs mirror the
    reverse direction when present.
    """
    sites: tuple = ()
    mean: dict = {}
    jitter: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("sites:"):
            sites = tuple(line.split(":", 1)[1].split())
            continue
        parts = line.split()
        if len(parts) not in (3, 4):
            raise ConfigError(f"line {lineno}: expected `from to mean [jitter]`")
        a, b = parts[0], parts[1]
        if not sites or a not in sites or b not in sites:
            raise ConfigError(f"line {lineno}: unknown site in {a!r}->{b!r}")
        m = float(parts[2])
        j = float(parts[3]) if len(parts) == 4 else 0.0
        if m < 0 or j < 0:
            raise ConfigError(f"line {lineno}: latencies must be >= 0")
        mean[(a, b)] = m
        jitter[(a, b)] = j
    for a in sites:
        mean.setdefault((a, a), 0.0)
        jitter.setdefault((a, a), 0.0)
    for a in sites:
        for b in sites:
            if (a, b) not in mean:
                if (b, a) in mean:
                    mean[(a, b)] = mean[(b, a)]
                    jitter[(a, b)] = jitter[(b, a)]
                else:
                    raise ConfigError(f"no latency for {a}->{b}")
    return LatencyMatrix(sites, mean, jitter)


def load_latency_matrix(path) -> LatencyMatrix:
    return parse_latency_matrix(Path(path).read_text())


# Illustrative one-way latencies (ms) between the five benchmark regions and
# the client-only region; approximate public inter-region figures, not
# measurements.
DEFAULT_WAN_SITES = ("oregon", "ireland", "sydney", "saopaulo", "virginia", "canada")

_WAN_ONE_WAY_MS = {
    ("oregon", "ireland"): 62, ("oregon", "sydney"): 70, ("oregon", "saopaulo"): 89,
    ("oregon", "virginia"): 33, ("oregon", "canada"): 30,
    ("ireland", "sydney"): 128, ("ireland", "saopaulo"): 92, ("ireland", "virginia"): 38,
    ("ireland", "canada"): 36,
    ("sydney", "saopaulo"): 156, ("sydney", "virginia"): 99, ("sydney", "canada"): 105,
    ("saopaulo", "virginia"): 58, ("saopaulo", "canada"): 63,
    ("virginia", "canada"): 7,
}


def default_wan_matrix(jitter_fraction: float = 0.05) -> LatencyMatrix:
    mean: dict = {}
    jitter: dict = {}
    for a in DEFAULT_WAN_SITES:
        for b in DEFAULT_WAN_SITES:
            if a == b:
                m = 0.0
            elif (a, b) in _WAN_ONE_WAY_MS:
                m = float(_WAN_ONE_WAY_MS[(a, b)])
            else:
                m = float(_WAN_ONE_WAY_MS[(b, a)])
            mean[(a, b)] = m
            jitter[(a, b)] = m * jitter_fraction
    return LatencyMatrix(DEFAULT_WAN_SITES, mean, jitter)


@dataclass(frozen=True)
class FaultDirective:
    kind: str  # crash | partition | byzantine
    at_ms: float = 0.0
    until_ms: float = float("inf")
    node: int | None = None
    groups: tuple = ()  # for partition: tuple of frozensets of node ids
    behavior: str = ""  # for byzantine: equivocate-propose | alter-block | mute


BYZANTINE_BEHAVIORS = ("equivocate-propose", "alter-block", "mute")


def parse_fault_script(text: str) -> list[FaultDirective]:
    """Lines: `crash NODE AT_MS`, `partition A,B|C,D FROM_MS TO_MS`,
    `byzantine NODE BEHAVIOR`."""
    directives = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "crash":
                directives.append(FaultDirective("crash", node=int(parts[1]),
                                                 at_ms=float(parts[2])))
            elif parts[0] == "partition":
                groups = tuple(frozenset(int(x) for x in grp.split(","))
                               for grp in parts[1].split("|"))
                directives.append(FaultDirective("partition", groups=groups,
                                                 at_ms=float(parts[2]),
                                                 until_ms=float(parts[3])))
            elif parts[0] == "byzantine":
                if parts[2] not in BYZANTINE_BEHAVIORS:
                    raise ConfigError(f"line {lineno}: unknown behavior {parts[2]!r}")
                directives.append(FaultDirective("byzantine", node=int(parts[1]),
                                                 behavior=parts[2]))
            else:
                raise ConfigError(f"line {lineno}: unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: malformed directive: {raw!r}") from None
    return directives


def load_fault_script(path) -> list[FaultDirective]:
    return parse_fault_script(Path(path).read_text())

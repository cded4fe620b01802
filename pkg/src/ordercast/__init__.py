"""Byzantine fault-tolerant total-order broadcast with a blockchain ordering
layer: three-phase consensus (classic or weighted quorums with tentative
execution), per-channel blockcutters producing hash-chained signed blocks,
frontends assembling matching block copies, a deterministic network simulator
and a benchmark CLI."""

from ordercast.types import (
    Block,
    BlockHeader,
    ChainCheck,
    Envelope,
    GENESIS_PREV_HASH,
    make_block,
    sha256,
    verify_chain,
)
from ordercast.config import ClusterConfig, LatencyMatrix, CLASSIC, WEIGHTED
from ordercast.crypto import (
    PublicKeyDirectory,
    SigningKey,
    VerifyKey,
    sign_header,
    verify_header_sig,
)
from ordercast.quorum import quorum_reached

__all__ = [
    "Block",
    "BlockHeader",
    "ChainCheck",
    "ClusterConfig",
    "Envelope",
    "GENESIS_PREV_HASH",
    "LatencyMatrix",
    "PublicKeyDirectory",
    "SigningKey",
    "VerifyKey",
    "CLASSIC",
    "WEIGHTED",
    "make_block",
    "quorum_reached",
    "sha256",
    "sign_header",
    "verify_chain",
    "verify_header_sig",
]

__version__ = "0.1.0"

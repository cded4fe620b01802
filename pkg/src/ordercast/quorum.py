"""Vote weights and quorum thresholds for classic and weighted modes.

Classic mode: all replicas weigh 1 and the decision threshold is
ceil((n+f+1)/2) matching votes.  Weighted mode adds `delta` spare replicas
beyond 3f+1 and gives the 2f fastest replicas weight v_max = 1 + delta/f
(the rest weigh v_min = 1); the threshold becomes 2f*v_max + 1 vote units.
With delta = 0 the weighted threshold reduces exactly to the classic one.
"""

from __future__ import annotations

import math


class UnknownVoterError(KeyError):
    """A vote was cast by a node id outside the configured cluster."""


def classic_threshold(n: int, f: int) -> int:
    return math.ceil((n + f + 1) / 2)


def weighted_vmax(f: int, delta: int) -> int:
    if delta % f != 0:
        raise ValueError("delta must be divisible by f")
    return 1 + delta // f


def weighted_threshold(f: int, delta: int) -> int:
    return 2 * f * weighted_vmax(f, delta) + 1


def assign_weights(node_ids, f: int, delta: int, fast_nodes=None) -> dict[int, int]:
    """Give v_max to exactly 2f replicas (`fast_nodes` or the lowest ids)."""
    node_ids = list(node_ids)
    vmax = weighted_vmax(f, delta)
    if fast_nodes is None:
        fast_nodes = node_ids[: 2 * f]
    fast = set(fast_nodes)
    if len(fast) != 2 * f or not fast.issubset(node_ids):
        raise ValueError(f"exactly 2f={2 * f} cluster members must hold v_max")
    return {nid: (vmax if nid in fast else 1) for nid in node_ids}


def vote_weight(voters, digest, votes, weights) -> int:
    """Total weight of `voters` whose recorded vote equals `digest`."""
    total = 0
    for node_id in voters:
        if node_id not in weights:
            raise UnknownVoterError(node_id)
        if votes[node_id] == digest:
            total += weights[node_id]
    return total


def quorum_reached(votes: dict[int, bytes], digest: bytes, weights: dict[int, int],
                   threshold: int) -> bool:
    """True iff the weights of nodes voting for `digest` meet the threshold."""
    total = 0
    for node_id, voted in votes.items():
        if node_id not in weights:
            raise UnknownVoterError(node_id)
        if voted == digest:
            total += weights[node_id]
    return total >= threshold

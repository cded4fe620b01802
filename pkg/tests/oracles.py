"""Independent oracles shared by the unit and acceptance suites.

These deliberately avoid the library's own quorum/threshold code paths:
plain enumeration over subsets.
"""

from itertools import combinations


def all_weight_subsets(weights: dict, min_weight: int):
    """Every subset of node ids whose total weight meets min_weight."""
    ids = sorted(weights)
    out = []
    for r in range(len(ids) + 1):
        for combo in combinations(ids, r):
            if sum(weights[i] for i in combo) >= min_weight:
                out.append(frozenset(combo))
    return out


def min_pairwise_intersection(subsets) -> int:
    """Smallest replica-count intersection over all pairs (incl. self-pairs)."""
    best = None
    for a in subsets:
        for b in subsets:
            size = len(a & b)
            if best is None or size < best:
                best = size
    return best if best is not None else 0


def minimal_safe_threshold(weights: dict, f: int) -> int:
    """Smallest T achieving both BFT quorum properties by brute force:

    - intersection: every pair of weight->=T subsets shares >= f+1 replicas;
    - availability: the correct replicas alone can reach T even after the
      worst-case f failures.
    """
    total = sum(weights.values())
    heaviest = sorted(weights.values(), reverse=True)
    worst_loss = sum(heaviest[:f])
    for t in range(1, total + 1):
        subsets = all_weight_subsets(weights, t)
        if not subsets:
            break
        if min_pairwise_intersection(subsets) >= f + 1 and total - worst_loss >= t:
            return t
    raise AssertionError("no safe threshold exists for these weights")

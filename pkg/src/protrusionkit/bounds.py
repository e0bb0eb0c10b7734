"""Closed-form size bounds for sparse graph classes and the kernels built on them.

All logarithms are base 2.  The constants come from the sparsity results for
graphs excluding a clique (topological) minor; bounds return reals and
callers ceiling them when comparing against counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SparsityConstants:
    beta: float = 10.0
    tau: float = 4.51
    alpha: float = 0.320
    mu: float = 11.355


CONSTANTS = SparsityConstants()


def _require_r(r: int) -> None:
    if r <= 2:
        raise ValueError("bound requires r > 2")


def topo_edge_bound(r: int, n: float) -> float:
    """Edge bound for n-vertex graphs with no K_r topological minor."""
    _require_r(r)
    return 0.5 * CONSTANTS.beta * r * r * n


def topo_clique_bound(r: int, n: float) -> float:
    """Clique-census bound for n-vertex graphs with no K_r topological minor."""
    _require_r(r)
    return 2.0 ** (CONSTANTS.tau * r * math.log2(r)) * n


def alpha_r(r: int) -> float:
    return CONSTANTS.alpha * r * math.sqrt(math.log2(r))


def mu_r(r: int) -> float:
    _require_r(r)
    return 2.0 ** (CONSTANTS.mu * r * math.log2(math.log2(r)))


def minor_edge_bound(r: int, n: int) -> float:
    """Edge bound for n-vertex graphs with no K_r minor."""
    return alpha_r(r) * n


def minor_clique_bound(r: int, n: int) -> float:
    """Clique-census bound for n-vertex graphs with no K_r minor."""
    return mu_r(r) * n


def kernel_size_bound(s_k: int, t: int, r: int, protd: int) -> float:
    """Kernel size from a modulator bound s_k, width t, clique cap r, and a
    caller-supplied protrusion size limit."""
    if min(s_k, t, r, protd) < 0:
        raise ValueError("arguments must be non-negative")
    x_k = s_k + 2 * t * (topo_edge_bound(r, s_k) if s_k else 0.0)
    f_cl = topo_clique_bound(r, x_k) if x_k else 0.0
    return x_k + (f_cl + x_k + 1) * protd


def eds_kernel_bound(k: int, r: int) -> float:
    """The explicit Edge Dominating Set kernel size bound, evaluated as printed."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _require_r(r)
    e = r * math.log2(r)
    return 4 * k * (1 + 20 * r * r
                    + (20.8 ** (e + 1) * 20 * r * r + 20.8 ** e + 20 * r * r) * (r - 1)) + r


def marked_bags_bound(k: int, r: int, t_f: int) -> float:
    """Separating-part size bound for a planted disjoint solution of size k."""
    return k + 2 * t_f * (1 + alpha_r(r)) * k


def cluster_count_bound(k: int, r: int, t_f: int) -> float:
    """Cluster count bound on yes-branches of the disjoint solver."""
    return 5 * t_f * alpha_r(r) * mu_r(r) * k

"""Johnson graph construction.

The Johnson graph J(n,k) has the k-element subsets of {0, ..., n-1} as
vertices, two subsets being adjacent when they share exactly k-1 elements.
This module provides the exact combinatorial side of the project: vertex
enumeration, the dense brute-force adjacency matrix, and distance
classification around a marked vertex.  Everything here is meant to be
small and obviously correct; the brute-force graph serves as the oracle
against which the reduced model is validated.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import VertexCapError

#: Default ceiling on C(n,k) for brute-force construction.  Dense storage and
#: full eigendecompositions stay comfortable below this size.
DEFAULT_VERTEX_CAP = 4000


def _check_params(n: int, k: int) -> None:
    if not isinstance(n, (int, np.integer)) or not isinstance(k, (int, np.integer)):
        raise ValueError("n and k must be integers")
    if not 1 <= k < n:
        raise ValueError(f"require 1 <= k < n, got n={n}, k={k}")


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n,k).

    Thin validation wrapper over ``math.comb``, which already implements the
    overflow-free multiplicative algorithm on arbitrary-precision integers.
    """
    if not isinstance(n, (int, np.integer)) or not isinstance(k, (int, np.integer)):
        raise ValueError("binomial arguments must be integers")
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"require 0 <= k <= n, got n={n}, k={k}")
    return math.comb(int(n), int(k))


def enumerate_vertices(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {0,...,n-1} as sorted tuples, in lexicographic order.

    The position of a subset in this list is its vertex index everywhere in
    the package; vertex 0 is always {0, ..., k-1}.
    """
    _check_params(n, k)
    return list(itertools.combinations(range(n), k))


@dataclass(frozen=True, eq=False)
class FullGraph:
    """Brute-force Johnson graph: vertex list plus dense adjacency matrix."""

    n: int
    k: int
    vertices: list[tuple[int, ...]]
    adjacency: np.ndarray = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


def full_adjacency(n: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> FullGraph:
    """Construct J(n,k) explicitly as a dense 0/1 adjacency matrix.

    Two k-subsets are adjacent iff their intersection has k-1 elements.  The
    matrix is built from the vertex membership matrix M (one row per vertex,
    one column per symbol): (M M^T)[u,v] is the intersection size, so the
    adjacency is just an equality test against k-1.

    Raises :class:`VertexCapError` when C(n,k) exceeds ``cap``.
    """
    _check_params(n, k)
    n_vertices = binomial(n, k)
    if n_vertices > cap:
        raise VertexCapError(n_vertices, cap)
    vertices = enumerate_vertices(n, k)
    membership = np.zeros((n_vertices, n), dtype=np.int8)
    for i, subset in enumerate(vertices):
        membership[i, list(subset)] = 1
    overlaps = membership @ membership.T
    adjacency = (overlaps == k - 1).astype(np.int8)
    return FullGraph(n=n, k=k, vertices=vertices, adjacency=adjacency)


def distance_classes(graph: FullGraph, w: int = 0) -> list[np.ndarray]:
    """Vertex indices grouped by graph distance from vertex ``w``.

    On a Johnson graph the distance between two vertices is k minus the size
    of the subset intersection, so no traversal is needed; class i holds the
    vertices at distance i and there are min(k, n-k) + 1 classes.
    """
    if not 0 <= w < graph.n_vertices:
        raise ValueError(f"marked vertex index {w} out of range")
    n, k = graph.n, graph.k
    w_set = set(graph.vertices[w])
    dist = np.array([k - len(w_set.intersection(v)) for v in graph.vertices])
    n_classes = min(k, n - k) + 1
    return [np.nonzero(dist == i)[0] for i in range(n_classes)]


def class_sizes(n: int, k: int) -> list[int]:
    """Sizes |d_i| = C(k,i) * C(n-k,i) of the k+1 distance classes.

    Requires n >= 2k so that all k+1 classes are nonempty and the reduced
    model below has full dimension k+1.
    """
    _check_params(n, k)
    if n < 2 * k:
        raise ValueError(f"class_sizes requires n >= 2k, got n={n}, k={k}")
    return [binomial(k, i) * binomial(n - k, i) for i in range(k + 1)]

"""Test corpora: every connected graph up to a small order, or graphs from a graph6 file."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .graph import Graph, canonical_form
from .io import read_graph6_lines

DEFAULT_MAX_N = 7


class CorpusTooLarge(ValueError):
    pass


@lru_cache(maxsize=None)
def _connected_of_order(n: int) -> tuple[Graph, ...]:
    """One canonical representative per class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    extending each connected (n-1)-vertex graph by a vertex with a non-empty
    neighbourhood reaches every class.
    """
    if n <= 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict = {}
    for base in _connected_of_order(n - 1):
        for nb in range(1, 1 << (n - 1)):
            adj = [a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(base.adj)]
            adj.append(nb)
            cand = Graph(n, tuple(adj))
            cert = canonical_form(cand)
            if cert not in seen:
                seen[cert] = Graph(n, cert[1])
    return tuple(sorted(seen.values(), key=lambda g: (g.num_edges(), g.adj)))


def connected_graphs(n: int, max_n_guard: int = DEFAULT_MAX_N) -> tuple[Graph, ...]:
    if n > max_n_guard:
        raise CorpusTooLarge(
            f"generated corpus is capped at n={max_n_guard}; feed larger corpora from a graph6 file")
    return _connected_of_order(n)


def enumerate_connected(max_n: int, min_n: int = 1, max_n_guard: int = DEFAULT_MAX_N
                        ) -> list[Graph]:
    """All connected graphs with ``min_n <= n <= max_n``, up to isomorphism,
    ordered by order, then size."""
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n, max_n_guard))
    return out


def read_corpus(path: str, max_n: Optional[int] = None) -> Iterator[Graph]:
    with open(path) as fh:
        for g in read_graph6_lines(fh):
            if max_n is None or g.n <= max_n:
                yield g

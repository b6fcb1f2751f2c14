import itertools
from typing import Iterable, List, Set, Tuple

import networkx as nx

from torfan.fan import Fan


class CommutationGraph:
    """Presentation graph of a right-angled Coxeter group.

    Vertices 0..d-1 are the involutive generators; an edge {i, j} means
    s_i s_j = s_j s_i. A missing edge means the pair generates an infinite
    dihedral group.
    """

    def __init__(self, generator_count: int, edges: Iterable[Tuple[int, int]] = ()):
        if generator_count < 0:
            raise ValueError("generator count must be non-negative")
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(generator_count))
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at generator {i}")
            if not (0 <= i < generator_count and 0 <= j < generator_count):
                raise ValueError(f"edge ({i}, {j}) references a missing generator")
            self.graph.add_edge(i, j)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "CommutationGraph":
        """Wrap a graph whose nodes are labelled 0..d-1 in some order."""
        labels = {node: k for k, node in enumerate(sorted(graph.nodes))}
        return cls(len(labels), [(labels[a], labels[b]) for a, b in graph.edges])

    @property
    def generator_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return sorted((min(a, b), max(a, b)) for a, b in self.graph.edges)

    def commutes(self, i: int, j: int) -> bool:
        return i == j or self.graph.has_edge(i, j)

    def non_neighbors(self, j: int) -> Set[int]:
        return set(self.graph.nodes) - set(self.graph.adj[j]) - {j}

    def non_edges(self) -> List[Tuple[int, int]]:
        return [
            (i, j)
            for i, j in itertools.combinations(range(self.generator_count), 2)
            if not self.graph.has_edge(i, j)
        ]

    def is_clique(self, letters: Iterable[int]) -> bool:
        letters = list(letters)
        if len(set(letters)) != len(letters):
            return False
        return all(self.graph.has_edge(a, b) for a, b in itertools.combinations(letters, 2))

    def __repr__(self) -> str:
        return f"CommutationGraph(d={self.generator_count}, edges={self.edges})"


def graph_from_fan(fan: Fan) -> CommutationGraph:
    """Generator s_j per ray; s_i and s_j commute iff rays i, j span a 2-cone."""
    return CommutationGraph(fan.ray_count, fan.faces(2))


def commutator_abelian(graph: CommutationGraph) -> bool:
    """[W, W] is abelian iff every generator fails to commute with at most one other."""
    return all(len(graph.non_neighbors(j)) <= 1 for j in range(graph.generator_count))

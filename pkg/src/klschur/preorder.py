"""Preorders generated by a relation, and their equivalence classes (cells)."""

from __future__ import annotations

from typing import Hashable, Iterable

import networkx as nx


class Preorder:
    """The reflexive-transitive closure of ``a <= b`` for each edge ``(b, a)``.

    Edges point from the larger to the smaller element, so ``a <= b`` exactly
    when ``a`` is reachable from ``b``.  Classes are the strongly connected
    components, listed in order of their smallest member (``order`` gives the
    ranking of nodes).
    """

    def __init__(self, nodes: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]):
        self.nodes = list(nodes)
        rank = {x: i for i, x in enumerate(self.nodes)}
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from((b, a) for b, a in edges if a != b)
        self.graph = graph
        self._below = {x: frozenset(nx.descendants(graph, x)) | {x} for x in self.nodes}
        comps = [sorted(c, key=rank.__getitem__) for c in nx.strongly_connected_components(graph)]
        comps.sort(key=lambda c: rank[c[0]])
        self.classes: list[list[Hashable]] = comps
        self.class_of = {x: k for k, c in enumerate(comps) for x in c}

    def leq(self, a, b) -> bool:
        return a in self._below[b]

    def below(self, b) -> frozenset:
        return self._below[b]

    def equiv(self, a, b) -> bool:
        return self.class_of[a] == self.class_of[b]

    def cell(self, a) -> list:
        return self.classes[self.class_of[a]]

    def __len__(self):
        return len(self.classes)

    def relabel(self, names) -> "Preorder":
        """The same preorder with node ``k`` renamed to ``names[k]``."""
        out = Preorder.__new__(Preorder)
        out.nodes = [names[x] for x in self.nodes]
        out.graph = nx.relabel_nodes(self.graph, {x: names[x] for x in self.nodes})
        out._below = {names[x]: frozenset(names[y] for y in b) for x, b in self._below.items()}
        out.classes = [[names[x] for x in c] for c in self.classes]
        out.class_of = {names[x]: k for x, k in self.class_of.items()}
        return out

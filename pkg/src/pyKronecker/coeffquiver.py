"""
INTENDED FOR KRONECKER REPRESENTATION USE
Coefficient quivers: given bases of M_1, M_2 and of the arrow space, the
bipartite graph with a vertex per basis vector and an edge labelled i from
top vertex c to bottom vertex r whenever entry (r, c) of the i-th matrix is
non-zero. Also holds the tree, path and cycle tests, DOT export, and the
exhaustive search for bases turning a module into a tree module.

copyright October 2026
"""

# pylint: disable=C0103
import dataclasses
import logging
from typing import Tuple

import networkx as nx
import numpy as np

from pyKronecker import exactalg as ea
from pyKronecker.config import resolve
from pyKronecker.errors import refuse
from pyKronecker.rep import arrow_change, base_change

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CoeffQuiver(object):
    """ Top vertices 0..n_top-1, bottom vertices 0..n_bottom-1 and edges
    (top, bottom, arrow). """

    n_top: int
    n_bottom: int
    edges: Tuple[Tuple[int, int, int], ...]

    @property
    def n_vertices(self):
        return self.n_top + self.n_bottom

    def graph(self):
        """ networkx MultiDiGraph; nodes ('t', i) and ('b', j). """
        G = nx.MultiDiGraph()
        G.add_nodes_from((('t', i) for i in range(self.n_top)), row='top')
        G.add_nodes_from((('b', j) for j in range(self.n_bottom)),
                         row='bottom')
        for top, bottom, arrow in self.edges:
            G.add_edge(('t', top), ('b', bottom), arrow=arrow)
        return G


def coefficient_quiver(M, b1=None, b2=None, g=None):
    """ Coefficient quiver of M for the bases b1 of M_1, b2 of M_2 (as
    columns) and the arrow basis given by the rows of g; standard bases
    where omitted. """
    field = M.field
    if g is not None:
        M = arrow_change(M, g)
    if b1 is not None or b2 is not None:
        b1 = field.identity(M.d1) if b1 is None else field.array(b1)
        b2 = field.identity(M.d2) if b2 is None else field.array(b2)
        M = base_change(M, b1, b2)
    edges = []
    for arrow, mat in enumerate(M.mats):
        rows, cols = np.nonzero(ea.to_ints(mat))
        for r, c in zip(rows.tolist(), cols.tolist()):
            edges.append((c, r, arrow))
    return CoeffQuiver(M.d1, M.d2, tuple(sorted(edges)))


def is_tree(cq):
    """ Connected with one edge fewer than vertices. """
    if cq.n_vertices == 0:
        return False
    if len(cq.edges) != cq.n_vertices - 1:
        return False
    return nx.is_tree(cq.graph())


def is_type_a(cq):
    """ A tree in which no vertex has more than two neighbours. """
    if not is_tree(cq):
        return False
    G = cq.graph()
    return max(dict(G.degree()).values(), default=0) <= 2


def cycle_report(cq):
    """ Edge, vertex and component counts with the cycle rank
    E - V + C. """
    G = cq.graph()
    components = nx.number_weakly_connected_components(G) \
        if cq.n_vertices else 0
    return {'edges': len(cq.edges),
            'vertices': cq.n_vertices,
            'components': components,
            'cycle_rank': len(cq.edges) - cq.n_vertices + components}


def to_dot(cq):
    """ DOT digraph: top vertices as boxes, bottom vertices as circles,
    edges labelled by arrow index. """
    G = nx.MultiDiGraph()
    for i in range(cq.n_top):
        G.add_node('t%d' % i, shape='box')
    for j in range(cq.n_bottom):
        G.add_node('b%d' % j, shape='circle')
    for top, bottom, arrow in cq.edges:
        G.add_edge('t%d' % top, 'b%d' % bottom, label=str(arrow))
    G.graph['name'] = 'coeffquiver'
    return nx.nx_pydot.to_pydot(G).to_string()


@dataclasses.dataclass
class TreeWitness(object):
    """ Bases b1, b2 and arrow change g with a tree coefficient quiver. """

    b1: np.ndarray
    b2: np.ndarray
    g: np.ndarray
    quiver: CoeffQuiver

    def to_dict(self):
        return {'b1': ea.to_ints(self.b1).tolist(),
                'b2': ea.to_ints(self.b2).tolist(),
                'g': ea.to_ints(self.g).tolist(),
                'edges': [list(e) for e in self.quiver.edges]}


def tree_search_size(M):
    field = M.field
    size = 1
    for n in (M.d1, M.d2, M.n_arrows):
        size *= ea.gl_order(n, field.q) // (field.q - 1) if n else 1
    return size


def tree_module_search(M, config=None):
    """ Exhaustive search over base changes of M_1, M_2 and the arrow space,
    each up to scalars, for a tree coefficient quiver. None means M is not
    a tree module over this field. """
    config = resolve(config)
    field = M.field
    size = tree_search_size(M)
    if size > config.tree_search_bound:
        refuse('tree module search', size, config.tree_search_bound)
    if M.is_zero():
        return None

    target = M.total - 1
    tops = ea.enumerate_gl_ints(M.d1, field, projective=True)
    # inverses of a set of coset representatives are again representatives
    bottoms_inv = ea.enumerate_gl_ints(M.d2, field, projective=True)
    arrows = ea.enumerate_gl_ints(M.n_arrows, field, projective=True)
    for g in arrows:
        changed = ea.to_ints(arrow_change(M, field.GF(g)).stacked_col()) \
            .reshape(M.n_arrows, M.d2, M.d1)
        # (P2, n, d2, d1) then (P2, P1, n, d2, d1)
        left = ea.batched_matmul_ints(field, bottoms_inv[:, None, :, :],
                                      changed[None, :, :, :])
        full = ea.batched_matmul_ints(field, left[:, None, :, :, :],
                                      tops[None, :, None, :, :])
        counts = np.count_nonzero(full, axis=(2, 3, 4))
        for i2, i1 in zip(*np.nonzero(counts == target)):
            b1 = field.GF(tops[i1])
            b2 = ea.inverse(field.GF(bottoms_inv[i2]))
            cq = coefficient_quiver(M, b1, b2, field.GF(g))
            if is_tree(cq):
                logger.debug('tree coefficient quiver with %d edges',
                             len(cq.edges))
                return TreeWitness(b1, b2, field.GF(g), cq)
    return None

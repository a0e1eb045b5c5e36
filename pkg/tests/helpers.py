"""Shared instance builders for the test suite.

Random generators are all seeded, so every run sees the same corpus.
"""

from monomials.core import Clutter, Graph, MonomialIdeal


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def two_disjoint_triangles():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def triangles_joined_by_edge():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])


def triangles_joined_by_path(length):
    """Two triangles joined by a path with `length` edges between them."""
    # triangle 0,1,2 ... path from 2 ... triangle at the end
    path_inner = length - 1
    base = 3 + path_inner
    edges = [(0, 1), (1, 2), (0, 2)]
    prev = 2
    for i in range(path_inner):
        edges.append((prev, 3 + i))
        prev = 3 + i
    edges += [(prev, base), (base, base + 1), (base + 1, base + 2), (base, base + 2)]
    return Graph(base + 3, edges)


def bowtie_figure_graph():
    """A 5-cycle and a triangle joined by a path of length 2."""
    return Graph(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5), (5, 6), (6, 7), (6, 8), (7, 8)],
    )


def q6_clutter():
    return Clutter(6, [(0, 1, 4), (0, 2, 3), (1, 2, 5), (3, 4, 5)])


def q6_ideal():
    return q6_clutter().edge_ideal()


def random_graph(rng, s, p=0.5, connected=False, nonbipartite=False):
    while True:
        edges = [
            (i, j)
            for i in range(s)
            for j in range(i + 1, s)
            if rng.random() < p
        ]
        if not edges:
            continue
        g = Graph(s, edges)
        if connected and not g.is_connected():
            continue
        if nonbipartite and g.is_bipartite():
            continue
        if any(g.degree(v) == 0 for v in range(s)):
            continue
        return g


def random_bipartite_graph(rng, s, p=0.5):
    while True:
        sides = [rng.randrange(2) for _ in range(s)]
        edges = [
            (i, j)
            for i in range(s)
            for j in range(i + 1, s)
            if sides[i] != sides[j] and rng.random() < p
        ]
        if edges and not any(
            all(v not in e for e in edges) for v in range(s)
        ):
            return Graph(s, edges)


def random_ideal(rng, s, max_exp=3, max_gens=5):
    while True:
        gens = set()
        for _ in range(rng.randint(1, max_gens)):
            g = tuple(rng.randint(0, max_exp) for _ in range(s))
            if any(g):
                gens.add(g)
        if gens:
            return MonomialIdeal(s, gens)


def random_squarefree_ideal(rng, s, max_edge=3, num_edges=4):
    while True:
        edges = set()
        for _ in range(num_edges):
            size = rng.randint(1, min(max_edge, s))
            edges.add(tuple(sorted(rng.sample(range(s), size))))
        minimal = []
        for e in sorted(edges, key=len):
            if not any(set(m) <= set(e) for m in minimal):
                minimal.append(e)
        if minimal:
            try:
                cl = Clutter(s, minimal)
            except Exception:
                continue
            if cl.has_isolated_vertex():
                continue
            return cl.edge_ideal()


def random_clutter_height2(rng, s, max_edge=3, num_edges=4):
    """Clutter with no isolated vertex and covering number >= 2."""
    from monomials.core import covering_number

    while True:
        ideal = random_squarefree_ideal(rng, s, max_edge, num_edges)
        cl = ideal.clutter()
        if covering_number(cl) >= 2:
            return cl


def random_zero_dim_2var(rng, max_exp=9, extra=3):
    a = rng.randint(2, max_exp)
    b = rng.randint(2, max_exp)
    gens = {(a, 0), (0, b)}
    for _ in range(rng.randint(0, extra)):
        gens.add((rng.randint(1, a - 1), rng.randint(1, b - 1)))
    return MonomialIdeal(2, gens)


def random_point_set(rng, q, s, size):
    from monomials.codes import GF, PointSetOverFq

    field = GF(q)
    seen = set()
    pts = []
    attempts = 0
    while len(pts) < size and attempts < 2000:
        attempts += 1
        p = tuple(rng.randrange(q) for _ in range(s))
        if not any(p):
            continue
        inv = field.inv[next(x for x in p if x)]
        norm = tuple(field.mul[inv][x] for x in p)
        if norm in seen:
            continue
        seen.add(norm)
        pts.append(norm)
    return PointSetOverFq(q, s, pts)


def connected_atlas_graphs(max_nodes=6):
    """All connected graphs with at least one edge, up to isomorphism."""
    from networkx.generators.atlas import graph_atlas_g
    import networkx as nx

    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n < 2 or n > max_nodes:
            continue
        if g.number_of_edges() == 0 or not nx.is_connected(g):
            continue
        mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
        edges = [(mapping[a], mapping[b]) for a, b in g.edges()]
        out.append(Graph(n, edges))
    return out

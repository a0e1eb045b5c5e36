"""Monomial ideals, clutters and graphs over exact integers.

Monomials are exponent vectors: plain tuples of non-negative ints of a
fixed length ``s``.  A :class:`MonomialIdeal` stores the divisibility-minimal
generating set in a canonical sorted order, so equal ideals compare equal.
The unit and zero ideals are never represented; operations that can collapse
to them return the :data:`UNIT` / :data:`ZERO` sentinels instead.
"""

import itertools

from monomials.errors import BudgetExceededError, PreconditionError


def divides(a, b):
    """Componentwise a <= b, i.e. t^a divides t^b."""
    return all(x <= y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub_clamped(a, b):
    """Componentwise max(a - b, 0)."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(a):
    """Indices of the non-zero entries."""
    return frozenset(i for i, x in enumerate(a) if x)


def _minimalize(vectors):
    """Divisibility-minimal subset of a set of exponent vectors.

    Sorting by total degree first means a vector can only be divided by an
    earlier one, so one forward pass suffices.
    """
    vecs = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept = []
    for v in vecs:
        if not any(divides(u, v) for u in kept):
            kept.append(v)
    return sorted(kept)


class _Sentinel:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return f"<{self.name} ideal>"


#: Returned by :func:`minor` when a substitution turns a generator into 1.
UNIT = _Sentinel("unit")
#: Returned by :func:`minor` when every generator is sent to 0.
ZERO = _Sentinel("zero")


class MonomialIdeal:
    """A proper monomial ideal, stored by its minimal generating set.

    The constructor minimalizes and canonically sorts the generators, so
    construction is idempotent and equality is structural.
    """

    __slots__ = ("s", "gens")

    def __init__(self, s, gens):
        gens = [tuple(int(x) for x in g) for g in gens]
        if not gens:
            raise PreconditionError("a monomial ideal needs at least one generator")
        if s < 1:
            raise PreconditionError("ambient variable count must be >= 1")
        for g in gens:
            if len(g) != s:
                raise PreconditionError(
                    f"generator {g} has length {len(g)}, expected {s}"
                )
            if any(x < 0 for x in g):
                raise PreconditionError(f"negative exponent in {g}")
        if any(all(x == 0 for x in g) for g in gens):
            raise PreconditionError("the unit ideal is not represented")
        self.s = s
        self.gens = tuple(_minimalize(gens))

    # -- structural ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.s == other.s
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.s, self.gens))

    def __repr__(self):
        terms = []
        for g in self.gens:
            factors = [
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(g)
                if e
            ]
            terms.append("*".join(factors))
        return "MonomialIdeal(" + ", ".join(terms) + ")"

    @property
    def num_generators(self):
        return len(self.gens)

    def incidence_matrix(self):
        """The s x m matrix A whose columns are the exponent vectors."""
        return tuple(tuple(g[i] for g in self.gens) for i in range(self.s))

    def is_squarefree(self):
        return all(all(x <= 1 for x in g) for g in self.gens)

    def is_uniform(self):
        degs = {sum(g) for g in self.gens}
        return len(degs) == 1

    def generator_degree(self):
        degs = {sum(g) for g in self.gens}
        if len(degs) != 1:
            raise PreconditionError("ideal is not uniform")
        return degs.pop()

    def max_exponents(self):
        """Componentwise maximum over the generators."""
        return tuple(max(g[i] for g in self.gens) for i in range(self.s))

    def has_zero_row(self):
        """True when some variable appears in no generator."""
        return any(all(g[i] == 0 for g in self.gens) for i in range(self.s))

    def contains_monomial(self, a):
        """t^a in I, i.e. some generator divides a."""
        return any(divides(g, a) for g in self.gens)

    def contains_ideal(self, other):
        """other subseteq self, tested generator-wise."""
        return all(self.contains_monomial(g) for g in other.gens)

    def clutter(self):
        """The clutter of supports; only meaningful for squarefree ideals."""
        if not self.is_squarefree():
            raise PreconditionError("clutter view requires a squarefree ideal")
        return Clutter(self.s, [support(g) for g in self.gens])

    def height(self):
        """ht(I) = covering number of the support clutter."""
        return covering_number(Clutter(self.s, [support(g) for g in self.gens]))

    def minimal_primes(self):
        """Minimal vertex covers of the support clutter, as index tuples."""
        cl = Clutter(self.s, [support(g) for g in self.gens])
        return cl.minimal_covers()

    def big_height(self):
        """Largest cardinality of a minimal prime (squarefree ideals)."""
        if not self.is_squarefree():
            raise PreconditionError("big height implemented for squarefree ideals")
        return max(len(c) for c in self.minimal_primes())

    def intersect(self, other):
        """Intersection of two monomial ideals via pairwise lcms."""
        if self.s != other.s:
            raise PreconditionError("ambient mismatch")
        lcms = {
            tuple(max(x, y) for x, y in zip(g, h))
            for g in self.gens
            for h in other.gens
        }
        return MonomialIdeal(self.s, lcms)


def minimal_generating_set(gens, s=None):
    """Canonicalize a set of exponent vectors into a MonomialIdeal."""
    gens = [tuple(g) for g in gens]
    if not gens:
        raise PreconditionError("empty generating set")
    if s is None:
        s = len(gens[0])
    return MonomialIdeal(s, gens)


def ideal_power(ideal, n):
    """I^n, generated by the n-fold sums of generator vectors."""
    if n < 1:
        raise PreconditionError("ideal_power requires n >= 1 (I^0 is the unit ideal)")
    if n == 1:
        return ideal
    sums = set()
    for combo in itertools.combinations_with_replacement(ideal.gens, n):
        total = combo[0]
        for g in combo[1:]:
            total = vec_add(total, g)
        sums.add(total)
    return MonomialIdeal(ideal.s, sums)


def colon_monomial(ideal, a):
    """(I : t^a); generators are max(v_i - a, 0), minimalized.

    When t^a lies in I the colon is the unit ideal; the UNIT sentinel is
    returned in that case.
    """
    a = tuple(a)
    if len(a) != ideal.s:
        raise PreconditionError("shape mismatch in colon")
    gens = [vec_sub_clamped(g, a) for g in ideal.gens]
    if any(not any(g) for g in gens):
        return UNIT
    return MonomialIdeal(ideal.s, gens)


def alexander_dual(ideal):
    """Ideal of covers I^vee: monomials of the minimal vertex covers."""
    if not ideal.is_squarefree():
        raise PreconditionError("Alexander dual requires a squarefree ideal")
    covers = ideal.clutter().minimal_covers()
    gens = [tuple(1 if i in c else 0 for i in range(ideal.s)) for c in covers]
    return MonomialIdeal(ideal.s, gens)


def minor(ideal, assignment):
    """Substitute variables by 0 or 1 and minimalize.

    ``assignment`` maps variable indices to 0 or 1.  Variables set to 1 are
    dropped from the ambient ring, so a proper minor lives on the unassigned
    variables.  Returns :data:`UNIT` if a generator becomes 1 and
    :data:`ZERO` if every generator vanishes; neither is a minor.
    """
    for i, val in assignment.items():
        if not 0 <= i < ideal.s or val not in (0, 1):
            raise PreconditionError(f"bad assignment {i}->{val}")
    keep = [i for i in range(ideal.s) if i not in assignment]
    new_gens = []
    for g in ideal.gens:
        if any(g[i] > 0 and assignment[i] == 0 for i in assignment):
            continue  # generator killed by a 0-substitution
        reduced = tuple(g[i] for i in keep)
        if all(x == 0 for x in reduced):
            return UNIT
        new_gens.append(reduced)
    if not new_gens or not keep:
        return ZERO
    return MonomialIdeal(len(keep), new_gens)


class Clutter:
    """A family of pairwise inclusion-incomparable non-empty vertex subsets."""

    __slots__ = ("s", "edges")

    def __init__(self, s, edges, check=True):
        edges = sorted({tuple(sorted(set(e))) for e in edges})
        if check:
            if any(not e for e in edges):
                raise PreconditionError("clutter edges must be non-empty")
            if any(not 0 <= v < s for e in edges for v in e):
                raise PreconditionError("vertex index out of range")
            for e, f in itertools.combinations(edges, 2):
                if set(e) <= set(f) or set(f) <= set(e):
                    raise PreconditionError(
                        f"edges {e} and {f} are inclusion-comparable"
                    )
        self.s = s
        self.edges = tuple(edges)

    def __eq__(self, other):
        return (
            isinstance(other, Clutter)
            and self.s == other.s
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.s, self.edges))

    def __repr__(self):
        return f"Clutter(s={self.s}, edges={list(self.edges)})"

    def has_isolated_vertex(self):
        used = set()
        for e in self.edges:
            used.update(e)
        return len(used) < self.s

    def edge_ideal(self):
        gens = [
            tuple(1 if i in set(e) else 0 for i in range(self.s)) for e in self.edges
        ]
        return MonomialIdeal(self.s, gens)

    def minimal_covers(self):
        """All minimal transversals, by Berge expansion with minimality filter."""
        covers = [frozenset()]
        for e in self.edges:
            es = set(e)
            nxt = set()
            for c in covers:
                if c & es:
                    nxt.add(c)
                else:
                    for v in es:
                        nxt.add(c | {v})
            # prune non-minimal partial transversals
            pruned = []
            for c in sorted(nxt, key=lambda c: (len(c), sorted(c))):
                if not any(k <= c for k in pruned):
                    pruned.append(c)
            covers = pruned
        return sorted(tuple(sorted(c)) for c in covers)

    def blocker(self):
        return Clutter(self.s, self.minimal_covers())


def covering_number(clutter, limit=20):
    """Exact minimum vertex cover size, by branch and bound."""
    if clutter.s > limit:
        raise BudgetExceededError(
            f"covering_number limited to s <= {limit}, got {clutter.s}",
            needed=clutter.s,
            budget=limit,
        )
    edges = [set(e) for e in clutter.edges]
    if not edges:
        return 0
    best = [min(len(set().union(*edges)), clutter.s)]

    def search(remaining, size):
        if size >= best[0]:
            return
        if not remaining:
            best[0] = size
            return
        e = min(remaining, key=lambda x: (len(x), sorted(x)))
        for v in sorted(e):
            search([f for f in remaining if v not in f], size + 1)

    search(edges, 0)
    return best[0]


def matching_number(clutter, limit=20):
    """Maximum number of pairwise disjoint edges, by branch and bound."""
    if clutter.s > limit:
        raise BudgetExceededError(
            f"matching_number limited to s <= {limit}, got {clutter.s}",
            needed=clutter.s,
            budget=limit,
        )
    edges = [set(e) for e in clutter.edges]
    best = [0]

    def search(idx, used, size):
        if size + (len(edges) - idx) <= best[0]:
            return
        if idx == len(edges):
            best[0] = max(best[0], size)
            return
        e = edges[idx]
        if not (e & used):
            search(idx + 1, used | e, size + 1)
        search(idx + 1, used, size)

    search(0, set(), 0)
    return best[0]


def is_konig(clutter, limit=20):
    return covering_number(clutter, limit) == matching_number(clutter, limit)


def has_packing_property(ideal, limit=12):
    """All minors (including the ideal itself) satisfy the Koenig property.

    Minors are enumerated lexicographically over assignment vectors in
    {keep, 0, 1}^s; assignments collapsing to the unit or zero ideal are not
    minors and are skipped.  Duplicate minors are deduplicated.
    """
    if not ideal.is_squarefree():
        raise PreconditionError("packing property requires a squarefree ideal")
    if ideal.s > limit:
        raise BudgetExceededError(
            f"has_packing_property limited to s <= {limit}, got {ideal.s}",
            needed=ideal.s,
            budget=limit,
        )
    seen = set()
    for pattern in itertools.product((None, 0, 1), repeat=ideal.s):
        assignment = {i: v for i, v in enumerate(pattern) if v is not None}
        result = minor(ideal, assignment)
        if result is UNIT or result is ZERO:
            continue
        keep = tuple(i for i in range(ideal.s) if i not in assignment)
        key = (keep, result.gens)
        if key in seen:
            continue
        seen.add(key)
        if not is_konig(result.clutter()):
            return False
    return True


class Graph:
    """A simple graph given by 2-element edges; loops only in multigraph mode.

    In multigraph mode a loop at v is stored as the singleton edge (v,) and
    is treated as an odd cycle of length 1 by the cycle-based criteria.
    """

    __slots__ = ("s", "edges", "loops", "multigraph", "_adj")

    def __init__(self, s, edges, multigraph=False):
        pairs = set()
        loops = set()
        for e in edges:
            e = tuple(sorted(set(e)))
            if len(e) == 2:
                pairs.add(e)
            elif len(e) == 1:
                if not multigraph:
                    raise PreconditionError(
                        f"loop at {e[0]} only allowed in multigraph mode"
                    )
                loops.add(e[0])
            else:
                raise PreconditionError(f"not a graph edge: {e}")
        if any(not 0 <= v < s for e in pairs for v in e):
            raise PreconditionError("vertex index out of range")
        if any(not 0 <= v < s for v in loops):
            raise PreconditionError("vertex index out of range")
        self.s = s
        self.edges = tuple(sorted(pairs))
        self.loops = tuple(sorted(loops))
        self.multigraph = multigraph
        adj = [set() for _ in range(s)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = tuple(frozenset(x) for x in adj)

    def __repr__(self):
        return f"Graph(s={self.s}, edges={list(self.edges)})"

    def neighbors(self, v):
        return self._adj[v]

    def adjacent(self, a, b):
        return b in self._adj[a]

    def degree(self, v):
        return len(self._adj[v])

    def clutter(self):
        edges = list(self.edges) + [(v,) for v in self.loops]
        return Clutter(self.s, edges)

    def edge_ideal(self):
        gens = []
        for a, b in self.edges:
            g = [0] * self.s
            g[a] = 1
            g[b] = 1
            gens.append(tuple(g))
        for v in self.loops:
            g = [0] * self.s
            g[v] = 2
            gens.append(tuple(g))
        if not gens:
            raise PreconditionError("graph has no edges; edge ideal is zero")
        return MonomialIdeal(self.s, gens)

    def components(self):
        """Vertex sets of the connected components (isolated vertices count)."""
        seen = [False] * self.s
        comps = []
        for v0 in range(self.s):
            if seen[v0]:
                continue
            comp = []
            stack = [v0]
            seen[v0] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self):
        return len(self.components()) == 1

    def induced(self, vertices):
        vertices = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[a], index[b]) for a, b in self.edges if a in index and b in index
        ]
        loops = [(index[v],) for v in self.loops if v in index]
        return Graph(len(vertices), edges + loops, multigraph=self.multigraph)

    def two_coloring(self, vertices=None):
        """A proper 2-coloring of the induced subgraph, or None."""
        if vertices is None:
            vertices = range(self.s)
        color = {}
        for v0 in vertices:
            if v0 in color:
                continue
            color[v0] = 0
            stack = [v0]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite(self):
        if self.loops:
            return False
        return self.two_coloring() is not None

    def maximal_stable_sets(self):
        """All maximal independent sets (exact, for well-coveredness tests)."""
        sets = []

        def extend(candidates, current):
            if not candidates:
                if not any(current < set(m) for m in sets):
                    sets.append(set(current))
                return
            v = min(candidates)
            extend(candidates - {v} - self._adj[v], current | {v})
            # skip v only if some neighbor can still justify maximality
            extend(candidates - {v}, current)

        extend(set(range(self.s)), set())
        # drop non-maximal duplicates picked up by the skip branch
        out = []
        for m in sets:
            if not any(m < other for other in sets):
                out.append(tuple(sorted(m)))
        return sorted(set(out))

    def is_well_covered(self):
        sizes = {len(m) for m in self.maximal_stable_sets()}
        return len(sizes) == 1

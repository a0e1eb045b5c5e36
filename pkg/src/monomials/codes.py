"""Evaluation codes from projective point sets over small finite fields.

Fields up to q = 9 are table-driven (prime fields mod p, prime powers via a
fixed irreducible polynomial).  Codes are stored by a generator matrix whose
rows are the evaluations of the degree-d monomial basis; weights come from
exhaustive enumeration, v-numbers from rank drops when a point is removed.
"""

import itertools

from monomials.core import MonomialIdeal, colon_monomial, covering_number, UNIT
from monomials.errors import (
    BudgetExceededError,
    InternalConsistencyError,
    PreconditionError,
)

_IRREDUCIBLE = {
    4: (2, 2, (1, 1, 1)),   # x^2 + x + 1 over F_2
    8: (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1 over F_2
    9: (3, 2, (1, 0, 1)),   # x^2 + 1 over F_3
}

_PRIMES = {2, 3, 5, 7}


class GF:
    """Arithmetic tables for F_q, q <= 9."""

    def __init__(self, q):
        if q in _PRIMES:
            self.q = q
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        elif q in _IRREDUCIBLE:
            p, e, poly = _IRREDUCIBLE[q]
            self.q = q

            def digits(a):
                return [(a // p**i) % p for i in range(e)]

            def undigits(ds):
                return sum(d * p**i for i, d in enumerate(ds))

            def polymul(a, b):
                da, db = digits(a), digits(b)
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for i in range(2 * e - 2, e - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        for j in range(e):
                            prod[i - e + j] = (prod[i - e + j] - c * poly[j]) % p
                return undigits(prod[:e])

            self.add = [
                [
                    undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])
                    for b in range(q)
                ]
                for a in range(q)
            ]
            self.mul = [[polymul(a, b) for b in range(q)] for a in range(q)]
        else:
            raise PreconditionError(f"only prime powers q <= 9 supported, got {q}")
        self.neg = [0] * q
        self.inv = [0] * q
        for a in range(q):
            for b in range(q):
                if self.add[a][b] == 0:
                    self.neg[a] = b
                if self.mul[a][b] == 1:
                    self.inv[a] = b

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    def pow(self, a, n):
        out = 1
        for _ in range(n):
            out = self.mul[out][a]
        return out

    def dot(self, u, v):
        out = 0
        for x, y in zip(u, v):
            out = self.add[out][self.mul[x][y]]
        return out


def rref(field, rows):
    """Reduced row echelon form over the field; returns (rows, pivots)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv[mat[r][c]]
        mat[r] = [field.mul[inv][x] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [
                    field.sub(x, field.mul[f][y]) for x, y in zip(mat[i], mat[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def gf_rank(field, rows):
    return len(rref(field, rows)[0]) if rows else 0


def monomial_basis(s, d):
    """Exponent vectors of the degree-d monomials, lexicographic."""
    out = []

    def rec(prefix, left):
        if len(prefix) == s - 1:
            out.append(tuple(prefix) + (left,))
            return
        for x in range(left, -1, -1):
            rec(prefix + [x], left - x)

    rec([], d)
    return out


class PointSetOverFq:
    """Distinct projective points with cached evaluation matrices.

    Representatives are scaled so the first non-zero coordinate is 1 unless
    ``normalize=False`` (used for affine point sets embedded at height 1,
    where the given representatives are kept).
    """

    def __init__(self, q, s, points, normalize=True):
        self.field = GF(q)
        self.q = q
        self.s = s
        pts = []
        for pt in points:
            pt = tuple(int(x) % q for x in pt)
            if len(pt) != s:
                raise PreconditionError("point length mismatch")
            if not any(pt):
                raise PreconditionError("the zero vector is not a projective point")
            if normalize:
                lead = next(x for x in pt if x)
                inv = self.field.inv[lead]
                pt = tuple(self.field.mul[inv][x] for x in pt)
            pts.append(pt)
        if len(set(pts)) != len(pts):
            raise PreconditionError("points must be distinct projective points")
        self.points = tuple(pts)
        self._matrices = {}

    def __len__(self):
        return len(self.points)

    def evaluate_monomial(self, exps, point):
        f = self.field
        out = 1
        for e, x in zip(exps, point):
            out = f.mul[out][f.pow(x, e)]
        return out

    def evaluation_matrix(self, d):
        """Rows: degree-d monomials; columns: points."""
        if d not in self._matrices:
            rows = []
            for exps in monomial_basis(self.s, d):
                rows.append(
                    tuple(self.evaluate_monomial(exps, p) for p in self.points)
                )
            self._matrices[d] = tuple(rows)
        return self._matrices[d]

    def hilbert_function(self, d):
        if d == 0:
            return 1
        return gf_rank(self.field, list(self.evaluation_matrix(d)))

    def regularity_threshold(self):
        """First degree where the Hilbert function reaches |X|."""
        d = 1
        while self.hilbert_function(d) < len(self):
            d += 1
        return d


class EvaluationCode:
    """The image of the degree-d evaluation map, with a reduced basis."""

    __slots__ = ("points", "degree", "field", "matrix", "basis", "length",
                 "dimension")

    def __init__(self, points, degree):
        if degree < 1:
            raise PreconditionError("degree must be >= 1")
        if len(points) < 2:
            raise PreconditionError("weight computations need at least 2 points")
        self.points = points
        self.degree = degree
        self.field = points.field
        self.matrix = points.evaluation_matrix(degree)
        basis, _ = rref(self.field, list(self.matrix))
        self.basis = tuple(basis)
        self.length = len(points)
        self.dimension = len(basis)


def build_code(points, degree):
    return EvaluationCode(points, degree)


def _codewords_projective(code):
    """One codeword per scalar class (first non-zero coefficient 1)."""
    f = code.field
    k = code.dimension
    for lead in range(k):
        for tail in itertools.product(range(code.field.q), repeat=k - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            word = [0] * code.length
            for c, row in zip(coeffs, code.basis):
                if c:
                    for i, x in enumerate(row):
                        word[i] = f.add[word[i]][f.mul[c][x]]
            yield tuple(word)


def minimum_distance(code):
    """Exact minimum weight by scalar-class codeword enumeration."""
    best = code.length
    for word in _codewords_projective(code):
        w = sum(1 for x in word if x)
        if w and w < best:
            best = w
    return best


def generalized_weight(code, r):
    """r-th generalized Hamming weight.

    delta_r = m - max{ |T| : rank of the T-columns <= k - r }: a subcode of
    dimension r vanishing on T exists iff the column rank on T drops to
    k - r, so scanning all column subsets is an exhaustive search over
    supports.
    """
    k = code.dimension
    m = code.length
    if not 1 <= r <= k:
        raise PreconditionError(f"need 1 <= r <= dim = {k}")
    cols = list(zip(*code.basis))
    best_t = 0
    for size in range(m - 1, -1, -1):
        if size <= best_t:
            break
        for subset in itertools.combinations(range(m), size):
            sub = [cols[i] for i in subset]
            if gf_rank(code.field, sub) <= k - r:
                best_t = size
                break
        if best_t == size:
            break
    return m - best_t


def weight_hierarchy(code):
    return [generalized_weight(code, r) for r in range(1, code.dimension + 1)]


def _r_subspaces(field, k, r):
    """All r-dimensional subspaces of F_q^k as RREF basis matrices."""
    q = field.q
    for pivots in itertools.combinations(range(k), r):
        free_positions = []
        for i, p in enumerate(pivots):
            for c in range(k):
                if c in pivots or c < p:
                    continue
                free_positions.append((i, c))
        for values in itertools.product(range(q), repeat=len(free_positions)):
            mat = [[0] * k for _ in range(r)]
            for i, p in enumerate(pivots):
                mat[i][p] = 1
            for (i, c), v in zip(free_positions, values):
                mat[i][c] = v
            yield [tuple(row) for row in mat]


def gmd_and_vasconcelos(points, d, r, budget=200_000):
    """(delta_I(d,r), theta_I(d,r)) by enumerating r-sets of forms.

    Form sets are enumerated as r-subspaces of the evaluation image (the
    functions carry all the data); sets without a common zero fall outside
    the defining family and both functions default to |X| when none
    qualifies.  Point counts follow the colon/sum degree formulas.
    """
    code = EvaluationCode(points, d)
    f = code.field
    k = code.dimension
    m = code.length
    if r > k:
        return len(points), len(points)
    count = 1
    for i in range(r):
        count = count * (f.q**k - f.q**i) // (f.q**r - f.q**i)
    if count > budget:
        raise BudgetExceededError(
            f"subspace enumeration needs {count} subspaces (k={k}, r={r})",
            needed=count,
            budget=budget,
        )
    best_delta = None
    best_theta = None
    for mat in _r_subspaces(f, k, r):
        rows = []
        for coeffs in mat:
            word = [0] * m
            for c, row in zip(coeffs, code.basis):
                if c:
                    for i, x in enumerate(row):
                        word[i] = f.add[word[i]][f.mul[c][x]]
            rows.append(word)
        zero_positions = sum(
            1 for i in range(m) if all(row[i] == 0 for row in rows)
        )
        if zero_positions == 0:
            continue  # (I : F) = I, not in the defining family
        nonzero = m - zero_positions
        if best_delta is None or zero_positions > best_delta:
            best_delta = zero_positions
        if best_theta is None or nonzero < best_theta:
            best_theta = nonzero
    if best_delta is None:
        return len(points), len(points)
    return m - best_delta, best_theta


class WeightReport:
    """Per-degree weight table, v-number and regularity threshold of a set.

    Construction enforces the structural laws: the minimum distance strictly
    decreases with the degree until it hits 1 and stays there, the first
    degree where it equals 1 is the v-number, and beyond the threshold the
    r-th weight is r.
    """

    __slots__ = ("points", "weights", "v_number", "threshold")

    def __init__(self, points, max_r=3):
        self.points = points
        self.threshold = points.regularity_threshold()
        self.v_number = v_number_points(points)
        table = {}
        for d in range(1, self.threshold + 1):
            code = EvaluationCode(points, d)
            table[d] = tuple(
                generalized_weight(code, r)
                for r in range(1, min(max_r, code.dimension) + 1)
            )
        self.weights = table
        firsts = [table[d][0] for d in sorted(table)]
        ones = [d for d in sorted(table) if table[d][0] == 1]
        if not ones or ones[0] != self.v_number:
            raise InternalConsistencyError(
                "v-number must be the first degree with distance one"
            )
        for a, b in zip(firsts, firsts[1:]):
            if a != 1 and not a > b:
                raise InternalConsistencyError("distance must strictly decrease")
            if a == 1 and b != 1:
                raise InternalConsistencyError("distance must stay at one")
        for r, w in enumerate(self.weights[self.threshold], start=1):
            if w != r:
                raise InternalConsistencyError(
                    "weights beyond the threshold must be trivial"
                )


def weight_report(points, max_r=3):
    return WeightReport(points, max_r=max_r)


def v_number_points(points):
    """Least d such that some hyperplane-like form isolates one point.

    For each point P, a degree-d form vanishing on X minus P but not at P
    exists iff removing P drops the rank of the evaluation matrix.  Bounded
    by the regularity threshold.
    """
    if len(points) < 2:
        raise PreconditionError("v-number needs at least two points")
    cap = points.regularity_threshold()
    f = points.field
    for d in range(1, cap + 1):
        mat = points.evaluation_matrix(d)
        full = gf_rank(f, list(mat))
        for drop in range(len(points)):
            reduced = [
                tuple(x for i, x in enumerate(row) if i != drop) for row in mat
            ]
            if gf_rank(f, reduced) < full:
                return d
    raise InternalConsistencyError(
        "v-number must appear by the regularity threshold"
    )


# ---------------------------------------------------------------------------
# v-numbers of monomial ideals
# ---------------------------------------------------------------------------

def irreducible_components(ideal):
    """Irredundant irreducible decomposition of a monomial ideal.

    Splits a mixed generator into its pure-power parts recursively; the
    supports of the components are the associated primes.
    """
    target = ideal
    work = [tuple(sorted(ideal.gens))]
    components = []
    while work:
        gens = work.pop()
        split = None
        for g in gens:
            nz = [i for i, x in enumerate(g) if x]
            if len(nz) > 1:
                split = g
                break
        if split is None:
            components.append(gens)
            continue
        nz = [i for i, x in enumerate(split) if x]
        rest = [h for h in gens if h != split]
        for i in nz:
            part = [0] * len(split)
            part[i] = split[i]
            work.append(
                tuple(sorted(set(rest + [tuple(part)])))
            )
    ideals = []
    seen = set()
    for gens in components:
        comp = MonomialIdeal(target.s, gens)
        if comp not in seen:
            seen.add(comp)
            ideals.append(comp)
    # drop redundant components one at a time until the list is irredundant
    changed = True
    while changed and len(ideals) > 1:
        changed = False
        for i, comp in enumerate(ideals):
            others = [c for j, c in enumerate(ideals) if j != i]
            inter = others[0]
            for c in others[1:]:
                inter = inter.intersect(c)
            if comp.contains_ideal(inter):
                ideals.pop(i)
                changed = True
                break
    return ideals


def associated_primes(ideal):
    """Supports of an irredundant irreducible decomposition."""
    if ideal.is_squarefree():
        return [frozenset(c) for c in ideal.minimal_primes()]
    return sorted(
        {frozenset(i for i, x in enumerate(c.max_exponents()) if x)
         for c in irreducible_components(ideal)},
        key=sorted,
    )


def _is_variable_prime(ideal):
    """Is the ideal generated by distinct variables?"""
    return all(sum(g) == 1 for g in ideal.gens)


def v_number_monomial(ideal, degree_cap=None):
    """Least degree of a monomial f with (I : f) an associated prime.

    A prime of the form (I : f) is automatically associated, so the search
    just looks for the least-degree monomial f outside I whose colon is
    generated by variables.  Exponents beyond the generator maxima never
    change the colon, which bounds the candidate box; the witness search is
    restricted to monomials (the colon stays monomial, so the test is
    exact).  Raises BudgetExceededError when the cap is passed.
    """
    bounds = ideal.max_exponents()
    if degree_cap is None:
        degree_cap = sum(bounds)
    candidates = sorted(
        itertools.product(*[range(b + 1) for b in bounds]),
        key=lambda m: (sum(m), m),
    )
    for m in candidates:
        if sum(m) > degree_cap:
            break
        if ideal.contains_monomial(m):
            continue
        quot = colon_monomial(ideal, m)
        if quot is not UNIT and _is_variable_prime(quot):
            return sum(m)
    raise BudgetExceededError(
        f"no v-number witness of degree <= {degree_cap}", budget=degree_cap
    )


def w2_test(graph, degree_cap=None):
    """Is the graph in W2?  Combinatorial and v-number routes must agree.

    Combinatorially: well-covered and still well-covered after deleting any
    single vertex.  Algebraically: v(I(G)) = dim S/I = s - cover number.
    """
    if any(graph.degree(v) == 0 for v in range(graph.s)):
        raise PreconditionError("isolated vertices are excluded from W2")
    combinatorial = graph.is_well_covered() and all(
        graph.induced([u for u in range(graph.s) if u != v]).is_well_covered()
        for v in range(graph.s)
    )
    ideal = graph.edge_ideal()
    v_num = v_number_monomial(ideal, degree_cap)
    algebraic = v_num == graph.s - covering_number(graph.clutter())
    if combinatorial != algebraic:
        raise InternalConsistencyError(
            f"W2 routes disagree: combinatorial={combinatorial}, "
            f"v-number={v_num}"
        )
    return combinatorial

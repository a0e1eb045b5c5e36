"""Exact rational polyhedral kernel.

Provides the linear programming entry points, cone machinery (double
description, pulling triangulation, fundamental-parallelepiped lattice
points, Hilbert bases), vertex enumeration for polyhedra, lattice-point
counting with pruning, Ehrhart interpolation, and Smith invariants.

Currently everything is sequential; operations are pure, so callers may
parallelize over independent inputs if they wish.
"""

import itertools
from fractions import Fraction
from math import ceil, comb, factorial, floor

from monomials import linalg
from monomials import lp
from monomials.errors import (
    BudgetExceededError,
    InternalConsistencyError,
    NonPointedConeError,
    PreconditionError,
)
from monomials.linalg import clear_denominators, primitive, vec_dot

DEFAULT_POINT_BUDGET = 5_000_000
DEFAULT_SUBSYSTEM_BUDGET = 300_000


# ---------------------------------------------------------------------------
# linear programming entry points (membership tests live on top of these)
# ---------------------------------------------------------------------------

def lp_optimize(a_matrix, alpha, sense="max", verify=True):
    """Solve one of the two covering/packing programs from the membership test.

    ``sense="max"``: maximize y_1+...+y_m subject to A y <= alpha, y >= 0.
    ``sense="min"``: minimize alpha.x subject to x A >= 1, x >= 0.

    A is given by rows (s x m).  With ``verify`` the other program is solved
    too and exact strong duality is asserted.
    """
    rows = [list(map(Fraction, r)) for r in a_matrix]
    alpha = [Fraction(x) for x in alpha]
    m = len(rows[0]) if rows else 0
    if sense == "max":
        res = lp.exact_lp([1] * m, a_ub=rows, b_ub=alpha, maximize=True)
    elif sense == "min":
        cols = [[-rows[i][j] for i in range(len(rows))] for j in range(m)]
        res = lp.exact_lp(alpha, a_ub=cols, b_ub=[-1] * m, maximize=False)
    else:
        raise PreconditionError(f"unknown sense {sense!r}")
    if res.status == lp.UNBOUNDED:
        raise PreconditionError("linear program is unbounded")
    if res.status == lp.INFEASIBLE:
        raise PreconditionError("linear program is infeasible")
    if verify:
        other = lp_optimize(a_matrix, alpha, "min" if sense == "max" else "max",
                            verify=False)
        if other[0] != res.value:
            raise InternalConsistencyError(
                f"strong duality violated: {res.value} vs {other[0]}"
            )
    return res.value, res.x


# ---------------------------------------------------------------------------
# double description
# ---------------------------------------------------------------------------

def extreme_rays_of_inequalities(rows):
    """Extreme rays of the pointed cone {x : row.x >= 0 for all rows}.

    Incremental double description with the combinatorial adjacency test.
    Raises NonPointedConeError when rank(rows) < dim (lineality present).
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        raise NonPointedConeError("no constraints: cone is all of space")
    n = len(rows[0])
    base_idx = []
    chosen = []
    for i, r in enumerate(rows):
        if linalg.rank(chosen + [r]) > len(chosen):
            chosen.append(r)
            base_idx.append(i)
            if len(chosen) == n:
                break
    if len(chosen) < n:
        raise NonPointedConeError("constraint matrix is rank deficient")
    inv = linalg.invert(chosen)
    rays = []
    for j in range(n):
        col = tuple(inv[i][j] for i in range(n))
        ray = clear_denominators(col)
        mask = 0
        for k, bi in enumerate(base_idx):
            if k != j:
                mask |= 1 << bi
        rays.append((ray, mask))
    for i, row in enumerate(rows):
        if i in base_idx:
            continue
        vals = [vec_dot(row, r) for r, _ in rays]
        plus = [k for k, v in enumerate(vals) if v > 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        minus = [k for k, v in enumerate(vals) if v < 0]
        if not minus:
            rays = [
                (r, mask | (1 << i) if k in zero else mask)
                for k, (r, mask) in enumerate(rays)
            ]
            continue
        new_rays = []
        for k in plus:
            new_rays.append(rays[k])
        for k in zero:
            r, mask = rays[k]
            new_rays.append((r, mask | (1 << i)))
        seen = {r for r, _ in new_rays}
        for kp in plus:
            rp, zp = rays[kp]
            for km in minus:
                rm, zm = rays[km]
                common = zp & zm
                adjacent = True
                for ko, (_, zo) in enumerate(rays):
                    if ko in (kp, km):
                        continue
                    if common & zo == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = tuple(
                    vals[kp] * x - vals[km] * y for x, y in zip(rm, rp)
                )
                w = primitive(w)
                if w in seen:
                    continue
                seen.add(w)
                new_rays.append((w, (common | (1 << i))))
        rays = new_rays
    return sorted(r for r, _ in rays)


def cone_facets(generators):
    """Facet description of cone(generators) inside its linear span.

    Returns (equations, facets): integer vectors with
    cone = {x : e.x = 0 for e in equations, f.x >= 0 for f in facets}.
    """
    gens = [tuple(g) for g in generators if any(g)]
    if not gens:
        raise PreconditionError("cone has no non-zero generators")
    n = len(gens[0])
    r = linalg.rank(gens)
    equations = [
        clear_denominators(v) for v in linalg.nullspace(gens, ncols=n)
    ]
    if r == n:
        facets = extreme_rays_of_inequalities(gens)
        return sorted(equations), [tuple(f) for f in facets]
    sat = linalg.saturation_basis(gens)
    coords = []
    for g in gens:
        c = linalg.coordinates_in_basis(g, sat)
        if c is None:
            raise InternalConsistencyError("saturation basis does not span generator")
        coords.append(c)
    inner = extreme_rays_of_inequalities(coords)
    facets = []
    for f in inner:
        amb = linalg.solve(sat, f)
        if amb is None:
            raise InternalConsistencyError("cannot lift facet normal to ambient space")
        facets.append(clear_denominators(amb))
    return sorted(equations), sorted(facets)


def cone_contains(point, equations, facets):
    return all(vec_dot(e, point) == 0 for e in equations) and all(
        vec_dot(f, point) >= 0 for f in facets
    )


def is_pointed(generators):
    """No non-trivial non-negative combination of the generators is zero."""
    gens = [tuple(g) for g in generators if any(g)]
    if not gens:
        return True
    cols = list(zip(*gens))
    k = len(gens)
    res = lp.exact_lp(
        [1] * k,
        a_ub=[[int(i == j) for j in range(k)] for i in range(k)],
        b_ub=[1] * k,
        a_eq=[list(row) for row in cols],
        b_eq=[0] * len(cols),
    )
    return res.status == lp.OPTIMAL and res.value == 0


def extreme_ray_generators(generators):
    """The subset of (primitivized) generators spanning extreme rays."""
    prim = sorted({primitive(g) for g in generators if any(g)})
    extreme = []
    for g in prim:
        others = [h for h in prim if h != g]
        if not others or not lp.in_cone(g, others):
            extreme.append(g)
    return extreme


# ---------------------------------------------------------------------------
# triangulation and parallelepiped points
# ---------------------------------------------------------------------------

def pulling_triangulation(rays):
    """Split cone(rays) into simplicial cones on subsets of the rays.

    Rays must be the extreme rays.  Recursively joins the first ray to the
    triangulated facets that do not contain it.
    """
    memo = {}

    def tri(rs):
        if rs in memo:
            return memo[rs]
        d = linalg.rank(rs)
        if len(rs) == d:
            out = [rs]
        else:
            _, facets = cone_facets(rs)
            apex = rs[0]
            out = []
            for f in facets:
                if vec_dot(f, apex) == 0:
                    continue
                sub = tuple(g for g in rs if vec_dot(f, g) == 0)
                for simp in tri(sub):
                    out.append((apex,) + simp)
        memo[rs] = out
        return out

    return tri(tuple(tuple(r) for r in rays))


def parallelepiped_points(rays):
    """Lattice points of {sum c_i r_i : 0 <= c_i < 1} for independent rays."""
    rays = [tuple(map(int, r)) for r in rays]
    d = len(rays)
    n = len(rays[0])
    if linalg.rank(rays) != d:
        raise PreconditionError("parallelepiped rays must be independent")
    if d < n:
        sat = linalg.saturation_basis(rays)
        coords = [linalg.coordinates_in_basis(r, sat) for r in rays]
        inner = parallelepiped_points(coords)
        out = []
        for c in inner:
            pt = tuple(
                sum(c[i] * sat[i][j] for i in range(d)) for j in range(n)
            )
            out.append(pt)
        return out
    cols = [tuple(r[i] for r in rays) for i in range(n)]  # matrix with ray columns
    u, _, _, factors = linalg.smith_normal_form(cols)
    if any(f == 0 for f in factors):
        raise PreconditionError("rays are dependent")
    uinv = linalg.invert(u)
    rinv = linalg.invert(cols)
    pts = []
    for c in itertools.product(*[range(f) for f in factors]):
        x = [sum(uinv[i][j] * c[j] for j in range(n)) for i in range(n)]
        lam = [sum(rinv[i][j] * x[j] for j in range(n)) for i in range(n)]
        frac = [l - floor(l) for l in lam]
        pt = tuple(
            int(sum(frac[j] * cols[i][j] for j in range(n))) for i in range(n)
        )
        pts.append(pt)
    return pts


# ---------------------------------------------------------------------------
# Hilbert bases
# ---------------------------------------------------------------------------

class RationalCone:
    """A rational cone given by integer generators, with cached structure."""

    def __init__(self, generators):
        gens = sorted({tuple(int(x) for x in g) for g in generators if any(g)})
        if not gens:
            raise PreconditionError("cone needs at least one non-zero generator")
        self.generators = tuple(gens)
        self.dim = len(gens[0])
        self._facets = None
        self._hilbert = None

    def is_pointed(self):
        return is_pointed(self.generators)

    def facet_description(self):
        if self._facets is None:
            self._facets = cone_facets(self.generators)
        return self._facets

    def contains(self, point):
        eqs, facets = self.facet_description()
        return cone_contains(point, eqs, facets)

    def hilbert_basis(self):
        if self._hilbert is None:
            self._hilbert = hilbert_basis(self.generators, cone=self)
        return self._hilbert


def hilbert_basis(generators, cone=None):
    """Minimal Hilbert basis of the pointed cone spanned by the generators.

    Normaliz-style pipeline: triangulate the extreme rays (pulling order),
    collect fundamental-parallelepiped lattice points of each simplicial
    piece, then discard every reducible candidate.
    """
    gens = sorted({tuple(int(x) for x in g) for g in generators if any(g)})
    if not gens:
        return ()
    if not is_pointed(gens):
        raise NonPointedConeError("Hilbert basis requires a pointed cone")
    rays = extreme_ray_generators(gens)
    candidates = set(gens) | set(rays)
    for simplex in pulling_triangulation(rays):
        for pt in parallelepiped_points(simplex):
            if any(pt):
                candidates.add(pt)
    eqs, facets = (cone.facet_description() if cone is not None
                   else cone_facets(gens))
    orthant = all(x >= 0 for g in gens for x in g)
    cands = sorted(candidates, key=lambda v: (sum(v), v))
    basis = []
    for h in cands:
        reducible = False
        for g in cands:
            if g == h:
                continue
            if orthant and not all(x <= y for x, y in zip(g, h)):
                continue
            diff = tuple(x - y for x, y in zip(h, g))
            if not any(diff):
                continue
            if cone_contains(diff, eqs, facets):
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return tuple(sorted(basis))


def monoid_decompose(point, basis, max_terms=64):
    """Express a lattice point as an N-combination of basis elements.

    Depth-first certificate search; returns the list of summands or None.
    Used to witness-check Hilbert bases.
    """
    point = tuple(point)
    basis = [tuple(b) for b in basis]
    orthant = all(x >= 0 for b in basis for x in b)
    dead = set()

    def search(p, depth):
        if not any(p):
            return []
        if depth >= max_terms or p in dead:
            return None
        for b in basis:
            if orthant and not all(x <= y for x, y in zip(b, p)):
                continue
            sub = search(tuple(x - y for x, y in zip(p, b)), depth + 1)
            if sub is not None:
                return [b] + sub
        dead.add(p)
        return None

    return search(point, 0)


# ---------------------------------------------------------------------------
# polyhedra
# ---------------------------------------------------------------------------

class RationalPolyhedron:
    """{x : normal.x >= offset} over exact rationals."""

    def __init__(self, dim, inequalities):
        self.dim = dim
        self.inequalities = tuple(
            (tuple(Fraction(c) for c in normal), Fraction(offset))
            for normal, offset in inequalities
        )
        self._vertices = None

    def contains(self, point):
        return all(
            vec_dot(normal, point) >= off for normal, off in self.inequalities
        )

    def vertices(self, budget=DEFAULT_SUBSYSTEM_BUDGET):
        """All vertices, by enumerating n x n tight subsystems."""
        if self._vertices is not None:
            return self._vertices
        n = self.dim
        m = len(self.inequalities)
        if comb(m, n) > budget:
            raise BudgetExceededError(
                f"vertex enumeration needs {comb(m, n)} subsystems",
                needed=comb(m, n),
                budget=budget,
            )
        verts = set()
        for subset in itertools.combinations(range(m), n):
            rows = [self.inequalities[i][0] for i in subset]
            rhs = [self.inequalities[i][1] for i in subset]
            if linalg.rank(rows) < n:
                continue
            x = linalg.solve(rows, rhs)
            if x is not None and self.contains(x):
                verts.add(tuple(x))
        self._vertices = sorted(verts)
        return self._vertices

    def is_integral(self):
        return all(
            all(x.denominator == 1 for x in v) for v in self.vertices()
        )


def inequalities_from_v_description(vertices, rays=()):
    """Inequality description of conv(vertices) + cone(rays).

    Homogenizes at height 1 and reads facets of the resulting cone.
    Returns (equations, inequalities) with entries (normal, offset), meaning
    normal.x = offset resp. normal.x >= offset.
    """
    lifted = [tuple(v) + (1,) for v in vertices]
    lifted += [tuple(r) + (0,) for r in rays]
    eqs, facets = cone_facets(lifted)
    eq_out = [(e[:-1], -e[-1]) for e in eqs]
    ineq_out = [(f[:-1], -f[-1]) for f in facets]
    return eq_out, ineq_out


# ---------------------------------------------------------------------------
# covering polyhedron and Rees cone of a monomial ideal
# ---------------------------------------------------------------------------

def covering_polyhedron(ideal):
    """Q(I) = {x >= 0 : x A >= 1}."""
    if ideal.has_zero_row():
        raise PreconditionError(
            "covering polyhedron requires every variable to appear"
        )
    s = ideal.s
    ineqs = []
    for i in range(s):
        e = [0] * s
        e[i] = 1
        ineqs.append((tuple(e), 0))
    for g in ideal.gens:
        ineqs.append((g, 1))
    return RationalPolyhedron(s, ineqs)


def rees_cone(ideal):
    """RC(I), generated by the unit vectors and the lifted generators."""
    s = ideal.s
    gens = []
    for i in range(s):
        e = [0] * (s + 1)
        e[i] = 1
        gens.append(tuple(e))
    for g in ideal.gens:
        gens.append(tuple(g) + (1,))
    return RationalCone(gens)


class ReesRepresentation:
    """Irreducible representation of the Rees cone of an ideal.

    ``gamma_d`` lists the facet normals (gamma_i, -d_i) with d_i >= 1, as
    (gamma tuple, d) pairs sorted with d = 1 first; ``r`` counts those with
    d = 1, ``p`` all of them.  The remaining facets have last coordinate
    >= 0 (the unit-vector-type supports).
    """

    def __init__(self, ideal):
        self.ideal = ideal
        cone = rees_cone(ideal)
        eqs, facets = cone.facet_description()
        if eqs:
            raise InternalConsistencyError("Rees cone should be full-dimensional")
        self.facets = tuple(facets)
        gd = []
        others = []
        for f in facets:
            if f[-1] < 0:
                gd.append((f[:-1], -f[-1]))
            else:
                others.append(f)
        gd.sort(key=lambda t: (t[1], t[0]))
        self.gamma_d = tuple(gd)
        self.other_facets = tuple(others)
        self.r = sum(1 for _, d in gd if d == 1)
        self.p = len(gd)

    @property
    def integral(self):
        return self.r == self.p

    def vertices(self):
        """Vertices of Q(I): gamma_i / d_i."""
        return sorted(
            tuple(Fraction(x, d) for x in gamma) for gamma, d in self.gamma_d
        )

    def newton_polyhedron_contains(self, point, level=1):
        """Is point/level in NP(I)?  Tested as (point, level) in RC(I)."""
        lifted = tuple(point) + (level,)
        return all(vec_dot(f, lifted) >= 0 for f in self.facets)


def rees_cone_representation(ideal):
    return ReesRepresentation(ideal)


def covering_vertices(ideal):
    """Vertex set of Q(I), read off the Rees cone facets."""
    return ReesRepresentation(ideal).vertices()


# ---------------------------------------------------------------------------
# lattice point enumeration
# ---------------------------------------------------------------------------

def _fold_single_variable(eqs, ineqs, lo, hi):
    """Fold +-c*e_i constraints into the box; returns surviving constraints."""
    lo = list(lo)
    hi = list(hi)
    rest_eq = []
    rest_ineq = []
    for coeffs, rhs, is_eq in (
        [(c, r, True) for c, r in eqs] + [(c, r, False) for c, r in ineqs]
    ):
        nz = [i for i, c in enumerate(coeffs) if c]
        if len(nz) == 1:
            i = nz[0]
            c = coeffs[i]
            if is_eq:
                if rhs % c == 0:
                    v = rhs // c
                    lo[i] = max(lo[i], v)
                    hi[i] = min(hi[i], v)
                else:
                    hi[i] = lo[i] - 1  # infeasible
            elif c > 0:
                lo[i] = max(lo[i], -(-rhs // c))  # ceil
            else:
                hi[i] = min(hi[i], rhs // c)  # floor for negative coefficient
        elif is_eq:
            rest_eq.append((coeffs, rhs))
        else:
            rest_ineq.append((coeffs, rhs))
    return rest_eq, rest_ineq, lo, hi


def _count_box_sum(lo, hi, coeff, rhs):
    """Count integer x with lo<=x<=hi and coeff*sum(x) = rhs, by DP."""
    if rhs % coeff:
        return 0
    total = rhs // coeff
    shift = sum(lo)
    target = total - shift
    if target < 0:
        return 0
    dp = [0] * (target + 1)
    dp[0] = 1
    for i in range(len(lo)):
        width = hi[i] - lo[i]
        ndp = [0] * (target + 1)
        run = 0
        # prefix-sum window of width+1
        for t in range(target + 1):
            run += dp[t]
            if t - width - 1 >= 0:
                run -= dp[t - width - 1]
            ndp[t] = run
        dp = ndp
    return dp[target]


def lattice_points_system(eqs, ineqs, lo, hi, collect=True,
                          budget=DEFAULT_POINT_BUDGET):
    """Integer points in a box satisfying exact linear constraints.

    ``eqs``/``ineqs`` are (integer coefficient tuple, integer rhs) pairs for
    coeff.x = rhs resp. coeff.x >= rhs.  Recursion over coordinates with
    interval pruning; when, after folding single-variable constraints into
    the box, a lone all-equal-coefficient sum equality remains, counting
    falls back to exact dynamic programming.
    """
    n = len(lo)
    eqs, ineqs, lo, hi = _fold_single_variable(eqs, ineqs, lo, hi)
    if any(l > h for l, h in zip(lo, hi)):
        return 0 if not collect else []
    if not collect and not ineqs and len(eqs) == 1:
        coeffs, rhs = eqs[0]
        vals = {c for c in coeffs}
        if len(vals) == 1:
            c = vals.pop()
            if c > 0:
                return _count_box_sum(lo, hi, c, rhs)
    cons = [(c, r, True) for c, r in eqs] + [(c, r, False) for c, r in ineqs]
    # suffix extremes per constraint per depth
    suffix_min = []
    suffix_max = []
    for coeffs, _, _ in cons:
        mins = [0] * (n + 1)
        maxs = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            c = coeffs[i]
            lo_c = min(c * lo[i], c * hi[i])
            hi_c = max(c * lo[i], c * hi[i])
            mins[i] = mins[i + 1] + lo_c
            maxs[i] = maxs[i + 1] + hi_c
        suffix_min.append(mins)
        suffix_max.append(maxs)

    found = []
    counter = [0]
    visited = [0]

    def rec(depth, partials, prefix):
        visited[0] += 1
        if visited[0] > budget:
            raise BudgetExceededError(
                "lattice point enumeration exceeded budget", budget=budget
            )
        for ci, (coeffs, rhs, is_eq) in enumerate(cons):
            p = partials[ci]
            if p + suffix_max[ci][depth] < rhs:
                return
            if is_eq and p + suffix_min[ci][depth] > rhs:
                return
        if depth == n:
            if collect:
                found.append(tuple(prefix))
            else:
                counter[0] += 1
            return
        for v in range(lo[depth], hi[depth] + 1):
            nxt = [
                p + cons[ci][0][depth] * v for ci, p in enumerate(partials)
            ]
            prefix.append(v)
            rec(depth + 1, nxt, prefix)
            prefix.pop()

    rec(0, [0] * len(cons), [])
    return found if collect else counter[0]


def _special_count(verts, dilation):
    """Closed-form dilation counts for hypersimplices and dilated simplices.

    Returns None when the vertex set has neither shape; exactness of both
    formulas is covered by agreement tests against the generic enumerator.
    """
    vs = set(verts)
    n = len(next(iter(vs)))
    sums = {sum(v) for v in vs}
    if len(sums) != 1:
        return None
    k = sums.pop()
    if k <= 0:
        return None
    if all(set(v) <= {0, 1} for v in vs) and len(vs) == comb(n, k):
        # every 0/1 vector of weight k: the hypersimplex; dilated points are
        # exactly {0 <= x_i <= dilation, sum x = dilation*k}
        return _count_box_sum([0] * n, [dilation] * n, 1, dilation * k)
    simplex = {tuple(k if i == j else 0 for i in range(n)) for j in range(n)}
    if vs == simplex:
        return comb(dilation * k + n - 1, n - 1)
    return None


def lattice_points(polytope_vertices, dilation=1, collect=True,
                   budget=DEFAULT_POINT_BUDGET):
    """Lattice points (or their count) of ``dilation * conv(vertices)``."""
    verts = [tuple(v) for v in polytope_vertices]
    if any(
        Fraction(x).denominator != 1 for v in verts for x in v
    ):
        raise PreconditionError("lattice polytope expected")
    verts = [tuple(int(x) for x in v) for v in verts]
    n = len(verts[0])
    k = dilation
    if k == 0:
        origin = tuple(0 for _ in range(n))
        return [origin] if collect else 1
    if not collect:
        special = _special_count(verts, k)
        if special is not None:
            return special
    eqs_h, facets_h = _homogenization(verts)
    eqs = [(e[:-1], -e[-1] * k) for e in eqs_h]
    ineqs = [(f[:-1], -f[-1] * k) for f in facets_h]
    lo = [k * min(v[i] for v in verts) for i in range(n)]
    hi = [k * max(v[i] for v in verts) for i in range(n)]
    return lattice_points_system(eqs, ineqs, lo, hi, collect=collect,
                                 budget=budget)


def lattice_points_of_polyhedron(poly, dilation=1, collect=True,
                                 budget=DEFAULT_POINT_BUDGET):
    """Integer points of ``dilation * P`` for a bounded RationalPolyhedron.

    Works from the inequality description (cleared to integers), so rational
    vertices are fine; the bounding box comes from the vertex enumeration.
    """
    verts = poly.vertices()
    if not verts:
        raise PreconditionError("polyhedron is empty")
    n = poly.dim
    k = dilation
    lo = []
    hi = []
    for i in range(n):
        values = [v[i] * k for v in verts]
        lo.append(ceil(min(values)))
        hi.append(floor(max(values)))
    ineqs = []
    for normal, offset in poly.inequalities:
        # clearing denominators scales by a positive rational: direction kept
        row = clear_denominators(tuple(normal) + (offset * k,))
        ineqs.append((row[:-1], row[-1]))
    return lattice_points_system([], ineqs, lo, hi, collect=collect,
                                 budget=budget)


_HOMOG_CACHE = {}


def _homogenization(verts):
    key = tuple(sorted(verts))
    if key not in _HOMOG_CACHE:
        lifted = [v + (1,) for v in key]
        _HOMOG_CACHE[key] = cone_facets(lifted)
    return _HOMOG_CACHE[key]


# ---------------------------------------------------------------------------
# Ehrhart interpolation
# ---------------------------------------------------------------------------

class EhrhartData:
    """Counts, interpolated polynomial and h-vector of a lattice polytope."""

    __slots__ = ("vertices", "dim", "counts", "coefficients", "h_vector")

    def __init__(self, vertices, dim, counts, coefficients, h_vector):
        self.vertices = vertices
        self.dim = dim
        self.counts = counts
        self.coefficients = coefficients  # low degree first
        self.h_vector = h_vector

    def evaluate(self, n):
        return sum(c * n**i for i, c in enumerate(self.coefficients))

    @property
    def leading_coefficient(self):
        return self.coefficients[-1]

    @property
    def relative_volume(self):
        return self.leading_coefficient

    @property
    def normalized_volume(self):
        return sum(self.h_vector)

    @property
    def h_degree(self):
        nz = [j for j, h in enumerate(self.h_vector) if h != 0]
        return max(nz)


def ehrhart_polynomial(polytope_vertices, budget=DEFAULT_POINT_BUDGET):
    """Interpolate the Ehrhart polynomial from d+1 exact dilation counts.

    Also computes the h-vector by the (1-x)^{d+1} transform and verifies
    the interpolation against a direct count at dilation d+1, plus Stanley
    non-negativity of the h-vector.
    """
    if any(
        Fraction(x).denominator != 1 for v in polytope_vertices for x in v
    ):
        raise PreconditionError("Ehrhart interpolation needs a lattice polytope")
    verts = [tuple(int(x) for x in v) for v in polytope_vertices]
    base = verts[0]
    diffs = [tuple(x - y for x, y in zip(v, base)) for v in verts[1:]]
    d = linalg.rank(diffs) if diffs else 0
    counts = [
        lattice_points(verts, dilation=nn, collect=False, budget=budget)
        for nn in range(d + 1)
    ]
    # exact Vandermonde solve
    rows = [[Fraction(nn**j) for j in range(d + 1)] for nn in range(d + 1)]
    coeffs = linalg.solve(rows, [Fraction(c) for c in counts])
    check = lattice_points(verts, dilation=d + 1, collect=False, budget=budget)
    predicted = sum(c * (d + 1) ** i for i, c in enumerate(coeffs))
    if predicted != check:
        raise InternalConsistencyError(
            f"Ehrhart interpolation failed self-check: {predicted} != {check}"
        )
    h = []
    for j in range(d + 1):
        hj = sum((-1) ** (j - i) * comb(d + 1, j - i) * counts[i]
                 for i in range(j + 1))
        h.append(int(hj))
    if any(x < 0 for x in h):
        raise InternalConsistencyError(f"negative h-vector entry: {h}")
    return EhrhartData(tuple(verts), d, tuple(counts), tuple(coeffs), tuple(h))


def h_vector(polytope_vertices, budget=DEFAULT_POINT_BUDGET):
    return ehrhart_polynomial(polytope_vertices, budget=budget).h_vector


def polytope_volume(points):
    """Ambient-dimension volume of conv(points), by pulling triangulation."""
    pts = [tuple(int(x) for x in p) for p in points]
    n = len(pts[0])
    lifted = [p + (1,) for p in pts]
    if linalg.rank(lifted) < n + 1:
        return Fraction(0)
    rays = extreme_ray_generators(lifted)  # (v, 1) is already primitive
    total = Fraction(0)
    for simplex in pulling_triangulation(tuple(rays)):
        total += abs(linalg.det(list(simplex)))
    return total / factorial(n)


# ---------------------------------------------------------------------------
# Smith invariants
# ---------------------------------------------------------------------------

def smith_invariant(matrix, r=None):
    """Delta_r: gcd of the non-zero r x r minors, via invariant factors.

    Returns (delta_r, rank).  With r omitted, uses r = rank.
    """
    rows = [tuple(map(int, row)) for row in matrix]
    if not rows or not any(any(row) for row in rows):
        raise PreconditionError("smith_invariant requires a non-zero matrix")
    factors = linalg.invariant_factors(rows)
    rk = sum(1 for f in factors if f != 0)
    if r is None:
        r = rk
    if r < 1 or r > rk:
        raise PreconditionError(f"r={r} out of range for rank {rk}")
    delta = 1
    for f in factors[:r]:
        delta *= f
    return delta, rk

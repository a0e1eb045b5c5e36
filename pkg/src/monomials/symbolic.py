"""Symbolic powers, Simis/MFMC tests, ic-resurgence and containment.

For a squarefree monomial ideal the n-th symbolic power is cut out by the
minimal vertex covers: t^a lies in I^(n) exactly when every cover collects
total degree at least n from a.  That makes symbolic powers, containments
and the Schenzel function finite computations.
"""

import itertools
from fractions import Fraction
from math import ceil

from monomials import closure as closure_mod
from monomials import polyhedra
from monomials.core import MonomialIdeal, divides, ideal_power
from monomials.errors import (
    BudgetExceededError,
    InternalConsistencyError,
    PreconditionError,
)
from monomials.linalg import vec_dot


def _covers(ideal):
    if not ideal.is_squarefree():
        raise PreconditionError("symbolic machinery requires a squarefree ideal")
    return ideal.minimal_primes()


class SymbolicPowerCache:
    """Write-once map n -> minimal generators of I^(n), plus minimal primes."""

    __slots__ = ("ideal", "primes", "powers")

    def __init__(self, ideal):
        self.ideal = ideal
        self.primes = _covers(ideal)
        self.powers = {}


_SYMBOLIC_CACHE = {}


def symbolic_cache(ideal):
    cache = _SYMBOLIC_CACHE.get(ideal)
    if cache is None:
        cache = SymbolicPowerCache(ideal)
        _SYMBOLIC_CACHE[ideal] = cache
    return cache


def symbolic_power(ideal, n, verify=False, budget=closure_mod.DEFAULT_BOX_BUDGET):
    """Minimal generators of I^(n), via the covering polyhedron of the dual.

    Candidates live in [0, n]^s (larger entries can be reduced); with
    ``verify`` the result is recomputed by intersecting cover-prime powers.
    """
    if n < 1:
        raise PreconditionError("symbolic power needs n >= 1")
    cache = symbolic_cache(ideal)
    result = cache.powers.get(n)
    if result is None:
        covers = cache.primes
        s = ideal.s
        if (n + 1) ** s > budget:
            raise BudgetExceededError(
                f"symbolic power box has {(n + 1) ** s} points", budget=budget
            )
        masks = [tuple(1 if i in set(c) else 0 for i in range(s)) for c in covers]
        kept = []
        for a in sorted(
            itertools.product(range(n + 1), repeat=s), key=lambda p: (sum(p), p)
        ):
            if any(divides(g, a) for g in kept):
                continue
            if all(vec_dot(m, a) >= n for m in masks):
                kept.append(a)
        result = MonomialIdeal(s, kept)
        cache.powers[n] = result
    if verify:
        check = symbolic_power_via_primes(ideal, n)
        if check != result:
            raise InternalConsistencyError(
                f"symbolic power routes disagree for n={n}"
            )
    return result


def symbolic_power_via_primes(ideal, n):
    """I^(n) as the intersection of the n-th powers of the minimal primes."""
    covers = _covers(ideal)
    result = None
    for cover in covers:
        gens = []
        for combo in itertools.combinations_with_replacement(cover, n):
            g = [0] * ideal.s
            for v in combo:
                g[v] += 1
            gens.append(tuple(g))
        prime_power = MonomialIdeal(ideal.s, gens)
        result = prime_power if result is None else result.intersect(prime_power)
    return result


def is_simis(ideal, budget=closure_mod.DEFAULT_BOX_BUDGET):
    """I^n = I^(n) for all n: normal Rees algebra plus integral Q(I)."""
    _covers(ideal)  # squarefree guard
    rep = closure_mod.rees_representation(ideal)
    if not rep.integral:
        return False
    return bool(closure_mod.is_normal(ideal, method="hilbert", budget=budget))


def has_mfmc(ideal, budget=closure_mod.DEFAULT_BOX_BUDGET):
    """Max-flow min-cut property; decided through the Simis equivalence."""
    return is_simis(ideal, budget=budget)


def mfmc_spot_check(ideal, max_entry=3):
    """Directly verify integral optima of the LP-duality equation.

    For every non-negative alpha with entries <= max_entry, both the
    covering minimum and the packing maximum must be attained integrally.
    Exponential in s; evidence only, the equivalence test is has_mfmc.
    """
    s = ideal.s
    gens = ideal.gens
    covers = _covers(ideal)
    for alpha in itertools.product(range(max_entry + 1), repeat=s):
        lp_value, _ = polyhedra.lp_optimize(
            ideal.incidence_matrix(), alpha, sense="max", verify=True
        )
        best_cover = min(sum(alpha[i] for i in c) for c in covers)
        if Fraction(best_cover) != lp_value:
            return False
        best_packing = _integer_packing(gens, alpha)
        if Fraction(best_packing) != lp_value:
            return False
    return True


def _integer_packing(gens, alpha):
    """max |y| over natural y with sum y_j v_j <= alpha componentwise."""
    best = [0]

    def rec(j, remaining, size):
        if size + _packing_bound(gens, j, remaining) <= best[0]:
            return
        if j == len(gens):
            best[0] = max(best[0], size)
            return
        g = gens[j]
        cap = min(
            (r // x for r, x in zip(remaining, g) if x),
            default=0,
        )
        for use in range(cap, -1, -1):
            nxt = tuple(r - use * x for r, x in zip(remaining, g))
            rec(j + 1, nxt, size + use)

    rec(0, tuple(alpha), 0)
    return best[0]


def _packing_bound(gens, j, remaining):
    left = sum(remaining)
    degs = [sum(g) for g in gens[j:]]
    if not degs:
        return 0
    return left // min(degs)


def symbolic_rees_generators(ideal, budget=closure_mod.DEFAULT_BOX_BUDGET):
    """Hilbert basis of the Simis cone: the symbolic Rees algebra generators.

    The Simis cone sits in R^{s+1}, cut out by non-negativity and by
    (u, -1) over the integral vertices u of Q(I) (the covers).  Every basis
    element (a, n) with n >= 1 is certified to satisfy a/n in Q(I^vee).
    """
    covers = _covers(ideal)
    s = ideal.s
    rows = []
    for i in range(s + 1):
        e = [0] * (s + 1)
        e[i] = 1
        rows.append(tuple(e))
    masks = []
    for c in covers:
        mask = tuple(1 if i in set(c) else 0 for i in range(s))
        masks.append(mask)
        rows.append(mask + (-1,))
    rays = polyhedra.extreme_rays_of_inequalities(rows)
    basis = polyhedra.hilbert_basis(rays)
    for h in basis:
        a, n = h[:-1], h[-1]
        if n >= 1 and not all(vec_dot(m, a) >= n for m in masks):
            raise InternalConsistencyError(f"Simis cone element fails membership: {h}")
    return tuple((h[:-1], h[-1]) for h in basis)


class ResurgenceReport:
    """Exact ic-resurgence with the minimizing vertex pair as certificate."""

    __slots__ = ("rho", "pair", "ceiling", "q_integral", "q_dual_integral")

    def __init__(self, rho, pair, q_integral, q_dual_integral):
        self.rho = rho
        self.pair = pair
        self.ceiling = ceil(rho)
        self.q_integral = q_integral
        self.q_dual_integral = q_dual_integral

    def __repr__(self):
        return f"ResurgenceReport(rho={self.rho}, pair={self.pair})"


def ic_resurgence(ideal):
    """rho_ic(I) by the vertex-pairing duality: 1/rho = min <u, v>.

    u runs over the vertices of Q(I), v over those of Q(I^vee).  The report
    records the minimizing pair and the integrality of both polyhedra.
    Consistency guards: rho >= 1, equality iff Q(I) integral, and the
    big-height bound rho <= bight - 1/s on both sides.
    """
    from monomials.core import alexander_dual

    covers = _covers(ideal)
    if ideal.has_zero_row():
        raise PreconditionError("every variable must appear in some generator")
    dual = alexander_dual(ideal)
    rep = closure_mod.rees_representation(ideal)
    rep_dual = closure_mod.rees_representation(dual)
    best = None
    pair = None
    for u in rep.vertices():
        for v in rep_dual.vertices():
            val = vec_dot(u, v)
            if best is None or val < best:
                best = val
                pair = (u, v)
    rho = Fraction(1) / best
    if rho < 1:
        raise InternalConsistencyError(f"ic-resurgence below 1: {rho}")
    if (rho == 1) != rep.integral:
        raise InternalConsistencyError(
            "rho_ic = 1 must coincide with integrality of Q(I)"
        )
    h = ideal.big_height()
    h_dual = dual.big_height()
    if h >= 2 and h_dual >= 2:
        bound = min(
            Fraction(h) - Fraction(1, ideal.s),
            Fraction(h_dual) - Fraction(1, ideal.s),
        )
        if rho > bound:
            raise InternalConsistencyError(
                f"ic-resurgence {rho} above the big-height bound {bound}"
            )
    return ResurgenceReport(rho, pair, rep.integral, rep_dual.integral)


def contains_power(ideal_power_target, symbolic):
    """symbolic subseteq target, generator-wise."""
    return all(
        ideal_power_target.contains_monomial(g) for g in symbolic.gens
    )


def containment_function(ideal, r, budget=closure_mod.DEFAULT_BOX_BUDGET):
    """Schenzel function f(r): least n with I^(n) inside I^r.

    Ascending search from n = r; bounded by r * bight by the uniform
    containment theorem.
    """
    if r < 1:
        raise PreconditionError("containment function needs r >= 1")
    power = ideal_power(ideal, r)
    bound = r * ideal.big_height()
    for n in range(r, bound + 1):
        if contains_power(power, symbolic_power(ideal, n, budget=budget)):
            return n
    raise InternalConsistencyError(
        f"no containment up to the uniform bound {bound}"
    )


def resurgence_one_test(ideal, budget=closure_mod.DEFAULT_BOX_BUDGET):
    """rho(I) = 1 iff Q(I) integral and I^(r+1) in I^r for r = 1..s-1."""
    rep = closure_mod.rees_representation(ideal)
    if not rep.integral:
        return False
    for r in range(1, ideal.s):
        if not contains_power(
            ideal_power(ideal, r), symbolic_power(ideal, r + 1, budget=budget)
        ):
            return False
    return True


def uniform_containment_ceiling(ideal, spot_powers=4,
                                budget=closure_mod.DEFAULT_BOX_BUDGET):
    """ceil(rho_ic): least h with I^(hn) inside closure(I^n) for all n.

    Returns the ceiling from the exact resurgence and spot-verifies the
    containment for n <= spot_powers via the Rees-cone facets.
    """
    rho = ic_resurgence(ideal).rho
    h = ceil(rho)
    rep = closure_mod.rees_representation(ideal)
    for n in range(1, spot_powers + 1):
        sym = symbolic_power(ideal, h * n, budget=budget)
        for g in sym.gens:
            if not rep.newton_polyhedron_contains(g, n):
                raise InternalConsistencyError(
                    f"I^({h}*{n}) escapes the closure of I^{n} at {g}"
                )
    return h

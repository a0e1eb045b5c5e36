"""Integral closures of powers of monomial ideals.

Membership in the closure of I^n is the linear condition that the lifted
exponent vector lies in the Rees cone, so after computing the Rees cone
facets once per ideal, closures of powers reduce to filtered staircase
extraction over an explicit candidate box.  The LP membership test is kept
alongside because it produces rational witnesses.
"""

import itertools
from fractions import Fraction
from math import lcm

from monomials import polyhedra
from monomials.core import MonomialIdeal, divides, ideal_power, vec_add
from monomials.errors import (
    BudgetExceededError,
    InternalConsistencyError,
    PreconditionError,
)
DEFAULT_BOX_BUDGET = 2_000_000

_REES_CACHE = {}


def rees_representation(ideal):
    """Cached irreducible representation of RC(I)."""
    rep = _REES_CACHE.get(ideal)
    if rep is None:
        rep = polyhedra.rees_cone_representation(ideal)
        _REES_CACHE[ideal] = rep
    return rep


def membership(a, ideal, n=1, witness=True, verify=False):
    """Is t^a in the closure of I^n?  LP route with rational witness.

    The optimum of max{|y| : A y <= a, y >= 0} is compared against n; the
    optimal y is the witness.  With ``verify`` the answer is checked against
    the Rees-cone facet test.
    """
    a = tuple(a)
    if len(a) != ideal.s:
        raise PreconditionError("exponent length mismatch")
    if n < 1:
        raise PreconditionError("power must be >= 1")
    value, y = polyhedra.lp_optimize(
        ideal.incidence_matrix(), a, sense="max", verify=False
    )
    answer = value >= n
    if verify:
        facet_answer = rees_representation(ideal).newton_polyhedron_contains(a, n)
        if facet_answer != answer:
            raise InternalConsistencyError(
                f"LP and facet membership disagree at {a}, n={n}"
            )
    if witness:
        return answer, (y if answer else None)
    return answer


def power_oracle(a, ideal, n, max_p=None):
    """The (t^a)^p in I^{pn} oracle for closure membership.

    Searches p = 1..max_p; max_p defaults to a witness-denominator bound
    when a witness exists, else a small constant.  Independent of the
    polyhedral route; used to cross-examine it.
    """
    a = tuple(a)
    if max_p is None:
        ok, y = membership(a, ideal, n, witness=True)
        if not ok:
            max_p = 4
        else:
            max_p = lcm(*[Fraction(v).denominator for v in y]) if y else 1
            max_p = max(max_p, 1)
    for p in range(1, max_p + 1):
        target = tuple(p * x for x in a)
        if ideal_power(ideal, p * n).contains_monomial(target):
            return True, p
    return False, None


def closure_of_power(ideal, n, budget=DEFAULT_BOX_BUDGET):
    """Minimal generators of the integral closure of I^n.

    Candidates live in the box prod [0, n*max_i v_i[j]]; anything outside
    has a slack coordinate and cannot be a minimal generator.  Points are
    scanned by increasing degree, skipping multiples of kept generators.
    """
    if n < 1:
        raise PreconditionError("power must be >= 1")
    rep = rees_representation(ideal)
    bounds = tuple(n * m for m in ideal.max_exponents())
    size = 1
    for b in bounds:
        size *= b + 1
    if size > budget:
        raise BudgetExceededError(
            f"closure candidate box has {size} points", needed=size, budget=budget
        )
    kept = []
    points = sorted(
        itertools.product(*[range(b + 1) for b in bounds]),
        key=lambda p: (sum(p), p),
    )
    for a in points:
        if any(divides(g, a) for g in kept):
            continue
        if rep.newton_polyhedron_contains(a, n):
            kept.append(a)
    if not kept:
        raise InternalConsistencyError("closure of a proper power came out empty")
    return MonomialIdeal(ideal.s, kept)


def ideal_product(a, b):
    """Minimal generators of the product of two monomial ideals."""
    sums = {vec_add(g, h) for g in a.gens for h in b.gens}
    return MonomialIdeal(a.s, sums)


class NormalityReport:
    """Verdict of the normality test with the method(s) that produced it.

    ``witness_power``/``witness_monomial`` identify the smallest failing
    power and a monomial in the closure gap when the ideal is not normal.
    """

    __slots__ = ("normal", "methods", "witness_power", "witness_monomial")

    def __init__(self, normal, methods, witness_power=None, witness_monomial=None):
        self.normal = normal
        self.methods = methods
        self.witness_power = witness_power
        self.witness_monomial = witness_monomial

    def __bool__(self):
        return self.normal

    def __repr__(self):
        tag = "normal" if self.normal else (
            f"not normal (n={self.witness_power}, witness={self.witness_monomial})"
        )
        return f"NormalityReport({tag}, methods={self.methods})"


def _normal_by_hilbert(ideal):
    cone = polyhedra.rees_cone(ideal)
    basis = polyhedra.hilbert_basis(cone.generators, cone=cone)
    gens = set(cone.generators)
    extra = [h for h in basis if h not in gens]
    if not extra:
        return True, None, None
    extra.sort(key=lambda h: (h[-1], h))
    worst = extra[0]
    return False, worst[-1], worst[:-1]


def _normal_by_powers(ideal, budget):
    for n in range(1, ideal.s):
        closed = closure_of_power(ideal, n, budget=budget)
        power = ideal_power(ideal, n)
        if closed != power:
            gap = [g for g in closed.gens if not power.contains_monomial(g)]
            return False, n, gap[0]
    return True, None, None


def is_normal(ideal, method="both", budget=DEFAULT_BOX_BUDGET):
    """Is every power of I integrally closed?

    ``method`` selects the Hilbert-basis route (RC(I) Hilbert basis equal to
    its generator set), the power route (I^n closed for n <= s-1, which
    suffices by the normality descent for monomial ideals), or both.  When
    the power route would overrun its box budget under ``method="both"`` the
    verdict is tagged with the methods that actually ran; disagreement
    between routes raises.
    """
    if method not in ("hilbert", "powers", "both"):
        raise PreconditionError(f"unknown method {method!r}")
    ran = []
    results = []
    if method in ("hilbert", "both"):
        results.append(_normal_by_hilbert(ideal))
        ran.append("hilbert")
    if method in ("powers", "both"):
        try:
            results.append(_normal_by_powers(ideal, budget))
            ran.append("powers")
        except BudgetExceededError:
            if method == "powers":
                raise
    verdicts = {r[0] for r in results}
    if len(verdicts) != 1:
        raise InternalConsistencyError(
            f"normality methods disagree on {ideal}: "
            + ", ".join(f"{m}={r[0]}" for m, r in zip(ran, results))
        )
    normal = verdicts.pop()
    witness = next((r for r in results if r[1] is not None), results[0])
    return NormalityReport(normal, tuple(ran), witness[1], witness[2])


def normalization_index(ideal, budget=DEFAULT_BOX_BUDGET):
    """Smallest N with closure(I^{n+1}) = I * closure(I^n) for all n >= N.

    Checks n = 0..s-1 directly; stabilization beyond s-1 is guaranteed for
    monomial ideals, which also caps the answer at s-1 (asserted).
    """
    s = ideal.s
    closures = {n: closure_of_power(ideal, n, budget=budget) for n in range(1, s + 1)}
    failing = -1
    # n = 0: closure(I) = I * closure(I^0) = I
    if closures[1] != ideal:
        failing = 0
    for n in range(1, s):
        if closures[n + 1] != ideal_product(ideal, closures[n]):
            failing = n
    index = failing + 1
    if index > max(s - 1, 0):
        raise InternalConsistencyError(
            f"normalization index {index} exceeds the dimension bound {s - 1}"
        )
    return index


class ClosureReport:
    """Closure generators per power, normality verdict, normalization index.

    Invariants enforced on construction: a normal verdict forces every
    reported closure to equal the plain power, and the normalization index
    respects the dimension bound.
    """

    __slots__ = ("ideal", "closures", "normality", "normalization_index")

    def __init__(self, ideal, closures, normality, index):
        self.ideal = ideal
        self.closures = closures
        self.normality = normality
        self.normalization_index = index
        if normality.normal:
            for n, closed in closures.items():
                if closed != ideal_power(ideal, n):
                    raise InternalConsistencyError(
                        f"normal verdict but closure gap at power {n}"
                    )
        if index > max(ideal.s - 1, 0):
            raise InternalConsistencyError("normalization index out of bounds")

    def __repr__(self):
        return (
            f"ClosureReport(powers={sorted(self.closures)}, "
            f"normal={self.normality.normal}, N={self.normalization_index})"
        )


def closure_report(ideal, up_to=None, method="both", budget=DEFAULT_BOX_BUDGET):
    """Bundle per-power closures, the normality verdict and N(I)."""
    if up_to is None:
        up_to = max(ideal.s - 1, 1)
    closures = {
        n: closure_of_power(ideal, n, budget=budget)
        for n in range(1, up_to + 1)
    }
    verdict = is_normal(ideal, method=method, budget=budget)
    index = normalization_index(ideal, budget=budget)
    return ClosureReport(ideal, closures, verdict, index)


def is_gr_reduced(ideal, budget=DEFAULT_BOX_BUDGET):
    """Reducedness of the associated graded ring: normal Rees algebra and r=p."""
    if not ideal.is_squarefree():
        raise PreconditionError("gr-reducedness test requires a squarefree ideal")
    if ideal.height() < 2:
        raise PreconditionError("gr-reducedness test requires height >= 2")
    rep = rees_representation(ideal)
    if not rep.integral:
        return False
    return bool(is_normal(ideal, method="hilbert", budget=budget))

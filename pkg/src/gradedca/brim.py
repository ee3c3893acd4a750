"""Buchsbaum-Rim functions and coefficients.

For a module E ⊆ F = R^r given by a matrix of forms, E^n is realized as
the span of degree-n products of the linear forms g_j = Σ_i φ_ij T_i
inside R[T₁..T_r]; λ(Fⁿ/Eⁿ) is accumulated per ring degree by a rank
count in the standard-monomial basis of R, with no power-ideal bases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gb import GBError, SubmoduleGB
from .hilbert import (_solve_exact, _std_monomial_count, binom_poly,
                      dim_module)
from .homology import is_unmixed, local_cohomology_lengths
from .modules import FreeModule, GradedModule
from .poly import grevlex_key, mon_deg, monomials_of_degree


class BrimError(GBError):
    pass


@dataclass(frozen=True)
class ParameterModule:
    ring: object            # the ambient polynomial ring S
    ring_rels: tuple        # R = S/(ring_rels)
    rank: int               # r, the rank of F
    columns: tuple          # tuple of columns, each a tuple of r Polys

    @property
    def gens_count(self):
        return len(self.columns)

    @property
    def base_dim(self):
        return dim_module(GradedModule.quotient_ring(self.ring, list(self.ring_rels)))

    @property
    def is_parameter(self):
        return self.gens_count == self.base_dim + self.rank - 1

    @property
    def column_degrees(self):
        out = []
        for col in self.columns:
            degs = {e.total_degree() for e in col if not e.is_zero()}
            out.append(degs.pop())
        return out


def make_parameter_module(ring, ring_rels, columns) -> ParameterModule:
    """Validate a matrix of forms as generators of E ⊆ R^r."""
    cols = []
    rank = None
    for col in columns:
        col = tuple(col)
        if rank is None:
            rank = len(col)
        elif len(col) != rank:
            raise BrimError("ragged generator matrix")
        degs = set()
        for e in col:
            if e.is_zero():
                continue
            if not e.is_homogeneous():
                raise BrimError("generator entries must be homogeneous")
            if e.total_degree() == 0:
                raise BrimError("generators must lie inside m·F")
            degs.add(e.total_degree())
        if len(degs) != 1:
            raise BrimError("each generator column must be a vector of forms "
                            "of one common degree")
        cols.append(col)
    if not cols:
        raise BrimError("no generators")
    return ParameterModule(ring=ring, ring_rels=tuple(ring_rels),
                           rank=rank, columns=tuple(cols))


def _ring_gb(pm: ParameterModule):
    amb = FreeModule(pm.ring, [0])
    return SubmoduleGB(amb, [amb.element([p]) for p in pm.ring_rels]), amb


def _nf_poly(p, gb, amb):
    if not gb.generators:
        return p
    v = gb.normal_form(amb.element([p]))
    return v.coordinates()[0]


class _BigradeTracker:
    """Incremental rank over the field, rows keyed by (T-monomial, monomial)."""

    def __init__(self, fld):
        self.fld = fld
        self.rows = {}

    @staticmethod
    def _key(term):
        alpha, mon = term
        return (alpha, grevlex_key(mon))

    def add(self, terms):
        fld = self.fld
        work = dict(terms)
        while work:
            pivot = max(work, key=self._key)
            row = self.rows.get(pivot)
            if row is None:
                inv = fld.inv(work[pivot])
                self.rows[pivot] = {t: fld.mul(v, inv) for t, v in work.items()}
                return True
            c = work[pivot]
            for t, v in row.items():
                s = fld.sub(work.get(t, fld.zero()), fld.mul(v, c))
                if s == 0:
                    work.pop(t, None)
                else:
                    work[t] = s
        return False


def _products(pm: ParameterModule, n, gb, amb):
    """Degree-n products of the g_j as {T-exponent: poly}, with degrees."""
    ring = pm.ring
    base = []
    for j, col in enumerate(pm.columns):
        g = {}
        for i, e in enumerate(col):
            if not e.is_zero():
                alpha = tuple(1 if k == i else 0 for k in range(pm.rank))
                g[alpha] = e
        base.append(g)
    degs = pm.column_degrees
    out = {(): ({(0,) * pm.rank: ring.one()}, 0)}
    for _ in range(n):
        nxt = {}
        for key, (p, dp) in out.items():
            start = key[-1] if key else 0
            for j in range(start, pm.gens_count):
                nk = key + (j,)
                if nk in nxt:
                    continue
                q = {}
                for alpha, c in p.items():
                    for beta, e in base[j].items():
                        gamma = tuple(a + b for a, b in zip(alpha, beta))
                        cur = q.get(gamma)
                        prod = c * e
                        q[gamma] = prod if cur is None else cur + prod
                q = {a: _nf_poly(c, gb, amb) for a, c in q.items()}
                q = {a: c for a, c in q.items() if not c.is_zero()}
                nxt[nk] = (q, dp + degs[j])
        out = nxt
    return [(p, dp) for p, dp in out.values() if p]


def br_value(pm: ParameterModule, n: int, _cache=None) -> int:
    """λ(Fⁿ/Eⁿ)."""
    if n == 0:
        return 0
    ring = pm.ring
    fld = ring.field
    gb, amb = _ring_gb(pm)
    lead = [mon for (_, mon) in gb.leading_terms()]
    prods = _products(pm, n, gb, amb)
    nvars = ring.num_vars
    n_tmons = comb(n + pm.rank - 1, pm.rank - 1)
    total = 0
    t = 0
    while True:
        std = _std_monomial_count(lead, nvars, t)
        dim_free = n_tmons * std
        tracker = _BigradeTracker(fld)
        rank = 0
        for p, dp in prods:
            rem = t - dp
            if rem < 0:
                continue
            for mon in monomials_of_degree(nvars, rem):
                terms = {}
                for alpha, c in p.items():
                    red = _nf_poly(c.mul_monomial(mon, fld.one()), gb, amb)
                    for m2, cc in red.terms.items():
                        terms[(alpha, m2)] = cc
                if terms and tracker.add(terms):
                    rank += 1
                    if rank == dim_free:
                        break
            if rank == dim_free:
                break
        total += dim_free - rank
        if dim_free - rank == 0:
            return total
        t += 1
        if t > 400:
            raise BrimError("λ(F^%d/E^%d) appears infinite: generators do not "
                            "have finite colength" % (n, n))


def br_table(pm: ParameterModule, N: int):
    return [br_value(pm, n) for n in range(N + 1)]


@dataclass
class BRReport:
    table: list
    degree: int
    coefficients: list
    br: int
    br1: int
    equality_case: bool
    pointwise_bound_ok: bool


def _fit_br(values, n0, deg):
    a = []
    b = []
    for k in range(deg + 1):
        n = n0 + k
        a.append([(-1) ** i * binom_poly(n - 1, deg - i) for i in range(deg + 1)])
        b.append(Fraction(values[n]))
    return _solve_exact(a, b)


def br_coefficients(pm: ParameterModule, n_max=None) -> BRReport:
    """Fit of λ(Fⁿ/Eⁿ) in the binomial basis of degree d + r − 1."""
    deg = pm.base_dim + pm.rank - 1
    if n_max is None:
        n_max = deg + 8
    values = []

    def need(upto):
        while len(values) <= upto:
            values.append(br_value(pm, len(values)))

    n0 = 0
    while n0 + deg + 2 <= n_max:
        need(n0 + deg + 2)
        c1 = _fit_br(values, n0, deg)
        c2 = _fit_br(values, n0 + 1, deg)
        if c1 is not None and c1 == c2 and all(c.denominator == 1 for c in c1):
            pred = sum((-1) ** i * c1[i] * binom_poly(n0 + deg + 1, deg - i)
                       for i in range(deg + 1))
            if pred == values[n0 + deg + 2]:
                coeffs = [int(c) for c in c1]
                br, br1 = coeffs[0], coeffs[1]
                bound_ok = all(
                    values[n] >= br * binom_poly(n - 1, deg)
                    for n in range(len(values)))
                eq = any(values[n] == br * binom_poly(n - 1, deg)
                         for n in range(1, len(values)))
                if pm.is_parameter:
                    assert br >= 1
                    assert br1 <= 0, "br1 must be nonpositive on parameter modules"
                    assert bound_ok, "pointwise Buchsbaum-Rim bound violated"
                    if eq:
                        assert all(values[n] == br * binom_poly(n - 1, deg)
                                   for n in range(len(values))), \
                            "equality at one n must propagate to all n"
                return BRReport(table=list(values), degree=deg,
                                coefficients=coeffs, br=br, br1=br1,
                                equality_case=eq, pointwise_bound_ok=bound_ok)
        n0 += 1
    raise BrimError("Buchsbaum-Rim table did not stabilize within n <= %d"
                    % n_max)


@dataclass
class ConjectureProbe:
    is_cm: bool
    unmixed: bool
    br1: int
    alert: bool


def probe_conjecture_9_5(pm: ParameterModule) -> ConjectureProbe:
    """Evidence for: R unmixed and br₁(U) = 0 ⟹ R Cohen-Macaulay."""
    base = GradedModule.quotient_ring(pm.ring, list(pm.ring_rels))
    prof = local_cohomology_lengths(base)
    cm = prof.depth == prof.dim
    unm = is_unmixed(base)
    rep = br_coefficients(pm)
    alert = unm and rep.br1 == 0 and not cm
    return ConjectureProbe(is_cm=cm, unmixed=unm, br1=rep.br1, alert=alert)

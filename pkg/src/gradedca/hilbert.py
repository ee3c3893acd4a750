"""Dimension, length, Hilbert functions and Hilbert-Samuel coefficients.

The Hilbert-Samuel values λ(M/Q^{n+1}M) are computed degree by degree:
normal forms of a spanning set of Q^{n+1}·F₀ against the cached basis of
the relation submodule, then a rank count over the coefficient field.
Coefficients are extracted by solving the binomial-basis linear system
exactly (Fractions) on a stabilized tail of the table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .gb import (GBError, SubmoduleGB, colon_submodule, module_gb,
                 quotient_by_ideal, reduce_vector, subquotient)
from .modules import GradedModule, term_key
from .poly import Poly, mon_deg, mon_div, monomials_of_degree

NEG_INF = float("-inf")


class HilbertError(GBError):
    pass


# ---------------------------------------------------------------------------
# dimension and length


def _lead_monomials_by_position(module: GradedModule):
    gb = module_gb(module)
    by_pos = {i: [] for i in range(module.ambient.rank)}
    for pos, mon in gb.leading_terms():
        by_pos[pos].append(mon)
    return by_pos


def _monomial_quotient_dim(mons, num_vars):
    """Krull dimension of S/(monomial ideal); None for the zero quotient."""
    if any(mon_deg(m) == 0 for m in mons):
        return None
    supports = [frozenset(k for k, e in enumerate(m) if e > 0) for m in mons]
    best = 0
    for size in range(num_vars, 0, -1):
        for cand in itertools.combinations(range(num_vars), size):
            cs = set(cand)
            if all(not s <= cs for s in supports):
                return size
    return best


def dim_module(module: GradedModule):
    """Krull dimension; −inf for the zero module."""
    if "dim" in module._cache:
        return module._cache["dim"]
    by_pos = _lead_monomials_by_position(module)
    num_vars = module.ring.num_vars
    dims = []
    for pos in range(module.ambient.rank):
        d = _monomial_quotient_dim(by_pos[pos], num_vars)
        if d is not None:
            dims.append(d)
    out = max(dims) if dims else NEG_INF
    module._cache["dim"] = out
    return out


def _position_growth_witness(module: GradedModule):
    """A (position, variable set) along which the module grows forever."""
    by_pos = _lead_monomials_by_position(module)
    num_vars = module.ring.num_vars
    names = module.ring.var_names
    for pos in range(module.ambient.rank):
        mons = by_pos[pos]
        if any(mon_deg(m) == 0 for m in mons):
            continue
        supports = [set(k for k, e in enumerate(m) if e > 0) for m in mons]
        for size in range(num_vars, 0, -1):
            for cand in itertools.combinations(range(num_vars), size):
                cs = set(cand)
                if all(not s <= cs for s in supports):
                    return pos, [names[k] for k in cand]
    return None


def _std_monomial_count(mons, num_vars, deg):
    if deg < 0:
        return 0
    return sum(1 for m in monomials_of_degree(num_vars, deg)
               if all(mon_div(m, g) is None for g in mons))


def hilbert_function(module: GradedModule, n: int) -> int:
    """Dimension over the coefficient field of the degree-n component."""
    by_pos = _lead_monomials_by_position(module)
    num_vars = module.ring.num_vars
    total = 0
    for pos in range(module.ambient.rank):
        total += _std_monomial_count(by_pos[pos], num_vars, n - module.ambient.twists[pos])
    return total


def module_length(module: GradedModule):
    """Total length, or None when infinite (positive dimension)."""
    if "length" in module._cache:
        return module._cache["length"]
    d = dim_module(module)
    if d == NEG_INF:
        out = 0
    elif d > 0:
        out = None
    else:
        twists = module.ambient.twists
        t = min(twists)
        tmax = max(twists)
        out = 0
        while True:
            h = hilbert_function(module, t)
            out += h
            if h == 0 and t >= tmax:
                break
            t += 1
            if t > tmax + 10000:
                raise HilbertError("length summation did not terminate")
    module._cache["length"] = out
    return out


# ---------------------------------------------------------------------------
# parameter ideals


@dataclass(frozen=True)
class ParameterIdeal:
    gens: tuple
    degrees: tuple
    colength_certificate: int

    def __iter__(self):
        return iter(self.gens)


def make_parameter_ideal(module: GradedModule, gens) -> ParameterIdeal:
    """Validate gens as a system of parameters for the module."""
    gens = tuple(gens)
    r = dim_module(module)
    if r == NEG_INF:
        raise HilbertError("zero module has no parameter ideals")
    if len(gens) != r:
        raise HilbertError(
            "parameter ideal needs %d generators (dim M), got %d" % (r, len(gens)))
    for g in gens:
        if g.is_zero() or not g.is_homogeneous():
            raise HilbertError("parameter ideal generators must be nonzero homogeneous")
    lam = colength(module, gens)
    return ParameterIdeal(gens, tuple(g.total_degree() for g in gens), lam)


def colength(module: GradedModule, gens):
    """λ(M/(gens)M); raises naming a growth direction when infinite."""
    quo = quotient_by_ideal(module, list(gens))
    lam = module_length(quo)
    if lam is None:
        witness = _position_growth_witness(quo)
        pos, direction = witness if witness else (0, [])
        raise HilbertError(
            "quotient not Artinian: infinite growth at position %d along (%s)"
            % (pos, ", ".join(direction)))
    return lam


# ---------------------------------------------------------------------------
# Hilbert-Samuel table


@dataclass
class HilbertSamuelTable:
    values: list
    N: int


def _power_products(gens, n):
    """All products of n generators (with repetition), as polynomials."""
    gens = list(gens)
    out = {(): gens[0].ring.one()} if gens else {}
    for _ in range(n):
        nxt = {}
        for key, p in out.items():
            start = key[-1] if key else 0
            for j in range(start, len(gens)):
                nk = key + (j,)
                if nk not in nxt:
                    nxt[nk] = p * gens[j]
        out = nxt
    return list(out.values())


class _RankTracker:
    """Incremental Gaussian elimination over the coefficient field."""

    def __init__(self, fld):
        self.fld = fld
        self.rows = {}

    def add(self, terms):
        fld = self.fld
        work = dict(terms)
        while work:
            pivot = max(work, key=term_key)
            row = self.rows.get(pivot)
            if row is None:
                c = work[pivot]
                inv = fld.inv(c)
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


def _hs_value(module: GradedModule, q_gens, n):
    """λ(M/Q^{n+1}M) by per-degree rank counts."""
    ring = module.ring
    fld = ring.field
    one = fld.one()
    gb = module_gb(module)
    amb = module.ambient
    by_pos = _lead_monomials_by_position(module)
    powers = _power_products(q_gens, n + 1)
    bases = []  # normal forms of q * e_i, bucketed by degree
    for q in powers:
        for i in range(amb.rank):
            v = reduce_vector(amb.basis(i).poly_mul(q), gb.basis)
            if not v.is_zero():
                bases.append((v, q.total_degree() + amb.twists[i]))
    tmin = min(amb.twists)
    tmax = max(amb.twists)
    total = 0
    t = tmin
    while True:
        std = sum(_std_monomial_count(by_pos[i], ring.num_vars, t - amb.twists[i])
                  for i in range(amb.rank))
        if std == 0:
            if t >= tmax:
                break
            t += 1
            continue
        tracker = _RankTracker(fld)
        rank = 0
        for v, dv in bases:
            rem = t - dv
            if rem < 0:
                continue
            for m in monomials_of_degree(ring.num_vars, rem):
                w = reduce_vector(v.mul_term(m, one), gb.basis)
                if not w.is_zero() and tracker.add(w.terms):
                    rank += 1
                    if rank == std:
                        break
            if rank == std:
                break
        total += std - rank
        if std - rank == 0 and t >= tmax:
            break
        t += 1
        if t > tmax + 10000:
            raise HilbertError("Hilbert-Samuel summation did not terminate")
    return total


def hilbert_samuel(module: GradedModule, q_gens, N: int) -> HilbertSamuelTable:
    """Table of λ(M/Q^{n+1}M) for n = 0..N."""
    gens = list(q_gens)
    colength(module, gens)  # certifies the Artinian property once
    values = [_hs_value(module, gens, n) for n in range(N + 1)]
    return HilbertSamuelTable(values=values, N=N)


# ---------------------------------------------------------------------------
# coefficient extraction


def binom_poly(n, s):
    """binom(n+s, s) as a polynomial expression in n (exact, any n)."""
    out = Fraction(1)
    for k in range(1, s + 1):
        out *= Fraction(n + k, k)
    return out


def _solve_exact(a, b):
    """Gaussian elimination over Fractions; returns None if singular."""
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    size = len(m)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][size] for r in range(size)]


def _fit_window(values, n0, r):
    """Fit λ(n) = Σ (−1)^i e_i binom(n+r−i, r−i) on points n0..n0+r."""
    a = []
    b = []
    for k in range(r + 1):
        n = n0 + k
        a.append([(-1) ** i * binom_poly(n, r - i) for i in range(r + 1)])
        b.append(Fraction(values[n]))
    return _solve_exact(a, b)


def _predict(e, n, r):
    return sum((-1) ** i * e[i] * binom_poly(n, r - i) for i in range(r + 1))


@dataclass
class HilbertCoefficients:
    e: list
    r: int
    stabilized_at: int
    table: HilbertSamuelTable = field(repr=False, default=None)


def hilbert_coefficients(module: GradedModule, q_gens, n_max=40,
                         fit_dim=None) -> HilbertCoefficients:
    """Stabilized coefficients e₀..e_r of n ↦ λ(M/Q^{n+1}M).

    Two consecutive (r+1)-point windows must yield the same integer
    coefficient vector, cross-validated on one further point.  fit_dim
    overrides the fit degree (default: dim M), for quotients where the
    generating set is larger than the dimension of the module.
    """
    gens = list(q_gens)
    r = dim_module(module) if fit_dim is None else fit_dim
    if r == NEG_INF:
        raise HilbertError("zero module has no Hilbert coefficients")
    colength(module, gens)
    values = []

    def need(upto):
        while len(values) <= upto:
            values.append(_hs_value(module, gens, len(values)))

    n0 = 0
    while n0 + r + 2 <= n_max:
        need(n0 + r + 2)
        e1 = _fit_window(values, n0, r)
        e2 = _fit_window(values, n0 + 1, r)
        if e1 is not None and e1 == e2 and all(c.denominator == 1 for c in e1):
            if _predict(e1, n0 + r + 2, r) == values[n0 + r + 2]:
                e = [int(c) for c in e1]
                table = HilbertSamuelTable(values=list(values), N=len(values) - 1)
                assert e[0] >= 1, "leading Hilbert coefficient must be positive"
                if len(gens) == dim_module(module) and r >= 1:
                    assert e[1] <= 0, "first Hilbert coefficient of a parameter ideal must be <= 0"
                return HilbertCoefficients(e=e, r=r, stabilized_at=n0, table=table)
        n0 += 1
    raise HilbertError(
        "Hilbert-Samuel table did not stabilize within n <= %d; raise n_max" % n_max)


# ---------------------------------------------------------------------------
# superficial elements


def colon_module(module: GradedModule, h: Poly) -> GradedModule:
    """(0 :_M h) as a graded module."""
    rels = module.relations()
    k_gens = colon_submodule(rels, h, module.ambient)
    out, _ = subquotient(k_gens, rels, module.ambient)
    return out


@dataclass
class SuperficialReport:
    passed: bool
    e_module: list
    e_quotient: list
    colon_length: int
    detail: str


def superficial_check(module: GradedModule, q: ParameterIdeal, h: Poly) -> SuperficialReport:
    """Coefficient transfer under a superficial element.

    Checks e_i(M) = e_i(M/hM) for i < r−1 and
    e_{r−1}(M) = e_{r−1}(M/hM) + (−1)^r λ(0 :_M h).
    """
    r = dim_module(module)
    col = colon_module(module, h)
    lam = module_length(col)
    if lam is None:
        return SuperficialReport(False, [], [], -1, "0:_M h has infinite length")
    quo = quotient_by_ideal(module, [h])
    dq = dim_module(quo)
    if dq != r - 1:
        return SuperficialReport(False, [], [], lam,
                                 "dim M/hM = %s, expected %d" % (dq, r - 1))
    em = hilbert_coefficients(module, q.gens).e
    eq = hilbert_coefficients(quo, q.gens, fit_dim=r - 1).e
    ok = all(em[i] == eq[i] for i in range(r - 1))
    ok = ok and em[r - 1] == eq[r - 1] + (-1) ** r * lam
    detail = "" if ok else "coefficient identities failed"
    return SuperficialReport(ok, em, eq, lam, detail)

"""Homological degree, torsions, Buchsbaum data, d-sequences and the
Hilbert characteristic."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .gb import GBError, SubmoduleGB, colon_submodule, quotient_by_ideal
from .hilbert import (NEG_INF, colength, dim_module, hilbert_coefficients,
                      module_length)
from .homology import local_cohomology_lengths
from .koszul import chi1_serre
from .modules import GradedModule


class InvariantError(GBError):
    pass


def _qkey(gens):
    return tuple(sorted(repr(g) for g in gens))


def multiplicity(module: GradedModule, q_gens) -> int:
    """e₀ of the Q-adic filtration, fitted at the dimension of the module."""
    r = dim_module(module)
    if r == NEG_INF:
        return 0
    if r == 0:
        return module_length(module)
    return hilbert_coefficients(module, list(q_gens), fit_dim=r).e[0]


def hdeg(module: GradedModule, q_gens) -> int:
    """Homological degree: e₀ plus binomially weighted hdeg of the duals."""
    gens = list(q_gens)
    key = ("hdeg", _qkey(gens))
    if key in module._cache:
        return module._cache[key]
    r = dim_module(module)
    if r == NEG_INF:
        out = 0
    elif r <= 0:
        out = module_length(module)
    else:
        prof = local_cohomology_lengths(module)
        out = multiplicity(module, gens)
        for j in range(r):
            sub = hdeg(prof.duals[j], gens)
            out += comb(r - 1, j) * sub
    module._cache[key] = out
    return out


def torsion(module: GradedModule, q_gens, i: int) -> int:
    """T^(i): binomially weighted hdeg of the positive duals."""
    r = dim_module(module)
    if not (1 <= i <= r - 1):
        raise InvariantError("torsion index must satisfy 1 <= i <= dim-1")
    prof = local_cohomology_lengths(module)
    return sum(comb(r - i - 1, j - 1) * hdeg(prof.duals[j], q_gens)
               for j in range(1, r - i + 1))


@dataclass
class HdegReport:
    hdeg: int
    deg: int
    torsions: list


def hdeg_report(module: GradedModule, q_gens) -> HdegReport:
    gens = list(q_gens)
    r = dim_module(module)
    h = hdeg(module, gens)
    d = multiplicity(module, gens)
    ts = [torsion(module, gens, i) for i in range(1, max(r, 1))]
    assert h >= d
    if ts:
        assert h > ts[0] or h == d == module_length(module)
        assert all(a >= b for a, b in zip(ts, ts[1:]))
    return HdegReport(hdeg=h, deg=d, torsions=ts)


@dataclass
class BoundReport:
    passed: bool
    lhs: int
    rhs: int

    @property
    def slack(self):
        return self.rhs - self.lhs


def check_e1_torsion_bound(module: GradedModule, q_gens) -> BoundReport:
    """−e₁(Q,M) ≤ T^(1)(M), both sides computed independently."""
    gens = list(q_gens)
    e1 = hilbert_coefficients(module, gens).e[1]
    t1 = torsion(module, gens, 1)
    return BoundReport(passed=(-e1 <= t1), lhs=-e1, rhs=t1)


def check_chi1_hdeg_bound(module: GradedModule, q_gens) -> BoundReport:
    """χ₁(Q;M) ≤ hdeg_Q(M) − deg_Q(M)."""
    gens = list(q_gens)
    chi1 = chi1_serre(module, gens)
    h = hdeg(module, gens)
    d = multiplicity(module, gens)
    return BoundReport(passed=(chi1 <= h - d), lhs=chi1, rhs=h - d)


# ---------------------------------------------------------------------------
# d-sequences and the Hilbert characteristic


def _same_submodule(a_gens, b_gens, ambient) -> bool:
    ga = SubmoduleGB(ambient, a_gens)
    gb_ = SubmoduleGB(ambient, b_gens)
    return (all(gb_.contains(v) for v in ga.basis)
            and all(ga.contains(v) for v in gb_.basis))


def is_d_sequence(module: GradedModule, forms) -> bool:
    """((x₁..x_i)M : x_{i+1}x_k) = ((x₁..x_i)M : x_k) for all i < k."""
    forms = list(forms)
    amb = module.ambient
    for i in range(len(forms)):
        base = list(module.relations())
        for f in forms[:i]:
            base += [amb.basis(b).poly_mul(f) for b in range(amb.rank)]
        for k in range(i, len(forms)):
            lhs = colon_submodule(base, forms[i] * forms[k], amb)
            rhs = colon_submodule(base, forms[k], amb)
            if not _same_submodule(lhs, rhs, amb):
                return False
    return True


def hilbert_characteristic(module: GradedModule, q_gens) -> int:
    """Alternating sum Σ (−1)^i e_i of the fitted coefficients."""
    e = hilbert_coefficients(module, list(q_gens)).e
    return sum((-1) ** i * v for i, v in enumerate(e))


@dataclass
class BettiBoundReport:
    passed: bool
    betti: list
    colength: int
    field_betti: list


def betti_bound_check(module: GradedModule, forms) -> BettiBoundReport:
    """β_i(M) ≤ λ(M/(x)M)·β_i(k) with β_i(k) = binom(d, i)."""
    from .gb import betti_numbers
    betti = betti_numbers(module)
    lam = colength(module, list(forms))
    d = module.ring.num_vars
    fb = [comb(d, i) for i in range(len(betti))]
    ok = all(b <= lam * f for b, f in zip(betti, fb))
    return BettiBoundReport(passed=ok, betti=betti, colength=lam, field_betti=fb)


# ---------------------------------------------------------------------------
# Buchsbaum data and classification


@dataclass
class StandardnessSample:
    q_gens: tuple
    deviation: int  # λ(M/QM) − e₀(Q,M)
    e1: int
    is_standard: bool


@dataclass
class BuchsbaumData:
    I_M: int
    bound_s: int
    samples: list

    def all_standard(self):
        return all(s.is_standard for s in self.samples)

    def constant_e1(self):
        return len({s.e1 for s in self.samples}) <= 1


def buchsbaum_invariant(module: GradedModule):
    """(I(M), s(M)) from the cohomology profile; None when not genCM."""
    prof = local_cohomology_lengths(module)
    r = prof.dim
    if not prof.finite_below_top():
        return None, None
    i_m = sum(comb(r - 1, i) * prof.h[i] for i in range(r))
    bound_s = sum(comb(r - 2, i - 1) * prof.h[i] for i in range(1, r)) if r >= 2 \
        else (prof.h[0] if r == 1 else 0)
    return i_m, bound_s


def standardness_data(module: GradedModule, ideals) -> BuchsbaumData:
    """Deviation λ(M/QM) − e₀ for each sampled parameter ideal."""
    i_m, bound_s = buchsbaum_invariant(module)
    samples = []
    for q in ideals:
        gens = list(q)
        lam = colength(module, gens)
        hc = hilbert_coefficients(module, gens)
        dev = lam - hc.e[0]
        e1 = hc.e[1] if len(hc.e) > 1 else 0
        samples.append(StandardnessSample(
            q_gens=tuple(gens), deviation=dev, e1=e1,
            is_standard=(i_m is not None and dev == i_m)))
    return BuchsbaumData(I_M=i_m, bound_s=bound_s, samples=samples)


def classify(module: GradedModule, ideals) -> str:
    """CM / Buchsbaum (sampled) / generalized CM / general, by sampling."""
    prof = local_cohomology_lengths(module)
    if prof.depth == prof.dim:
        return "cohen-macaulay"
    if not prof.finite_below_top():
        return "general"
    data = standardness_data(module, ideals)
    if data.all_standard():
        return "buchsbaum (sampled)"
    return "generalized cohen-macaulay"

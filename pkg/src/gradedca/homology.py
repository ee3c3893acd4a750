"""Ext duals, local-cohomology lengths, depth, and the unmixed component.

Local cohomology enters only through graded duality: the j-th dual
M_j = Ext^{d−j}_S(M, S) carries the dimension and (when finite) the
length of H^j_m(M), and no twist normalization is needed downstream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gb import (GBError, annihilator, kernel_of_map, minimal_free_resolution,
                 minimal_presentation, quotient_module, subquotient)
from .gb import depth as resolution_depth
from .gb import is_zero_module
from .hilbert import NEG_INF, dim_module, module_length
from .modules import FreeModule, GradedModule, ModuleMap, Vector

POS_INF = float("inf")


class HomologyError(GBError):
    pass


def _zero_module(ring) -> GradedModule:
    return GradedModule.free(ring, [])


def ext_module(module: GradedModule, k: int) -> GradedModule:
    """Ext^k_S(M, S) from the dualized minimal free resolution."""
    key = ("ext", k)
    if key in module._cache:
        return module._cache[key]
    ring = module.ring
    if is_zero_module(module) or k < 0:
        out = _zero_module(ring)
        module._cache[key] = out
        return out
    maps = minimal_free_resolution(module)
    pd = len(maps)
    if k > pd:
        out = _zero_module(ring)
        module._cache[key] = out
        return out
    duals = [m.transpose() for m in maps]  # duals[i] : F_i^* -> F_{i+1}^*
    if k < pd:
        ambient = duals[k].source
        cycles = kernel_of_map(duals[k])
    else:
        ambient = duals[pd - 1].target if pd else minimal_presentation(module).ambient
        if pd == 0:
            ambient = FreeModule(ring, [-t for t in ambient.twists])
        cycles = [ambient.basis(i) for i in range(ambient.rank)]
    boundaries = [c for c in duals[k - 1].columns()] if k >= 1 else []
    out, _ = subquotient(cycles, boundaries, ambient)
    module._cache[key] = out
    return out


def ext_dual(module: GradedModule, j: int) -> GradedModule:
    """M_j: the module carrying H^j_m(M) under graded duality."""
    d = module.ring.num_vars
    if not (0 <= j <= d):
        raise HomologyError("dual index out of range")
    return ext_module(module, d - j)


@dataclass
class CohomologyProfile:
    duals: list
    h: list
    depth: float
    dim: float

    def finite_below_top(self):
        return all(v is not None for v in self.h)


def local_cohomology_lengths(module: GradedModule) -> CohomologyProfile:
    """Profile of h^j = λ(H^j_m(M)) for j < dim, with depth."""
    if "profile" in module._cache:
        return module._cache["profile"]
    r = dim_module(module)
    if r == NEG_INF:
        out = CohomologyProfile(duals=[], h=[], depth=POS_INF, dim=NEG_INF)
        module._cache["profile"] = out
        return out
    duals = []
    h = []
    dep = None
    for j in range(r + 1):
        mj = ext_dual(module, j)
        dj = dim_module(mj)
        assert dj == NEG_INF or dj <= j, "dual dimension exceeds its index"
        duals.append(mj)
        if dep is None and dj != NEG_INF:
            dep = j
        if j < r:
            h.append(module_length(mj) if dj <= 0 else None)
    assert dep is not None, "top-dimensional dual of a nonzero module vanished"
    out = CohomologyProfile(duals=duals, h=h, depth=dep, dim=r)
    module._cache["profile"] = out
    return out


def depth(module: GradedModule):
    """Smallest j with a nonvanishing cohomological dual."""
    return local_cohomology_lengths(module).depth


def is_generalized_cm(module: GradedModule) -> bool:
    """All local cohomology below the top of finite length."""
    return local_cohomology_lengths(module).finite_below_top()


def is_cohen_macaulay(module: GradedModule) -> bool:
    prof = local_cohomology_lengths(module)
    return prof.depth == prof.dim


# ---------------------------------------------------------------------------
# unmixed component


def _regular_sequence_in(polys, ring, count, rng, retries=50):
    """count forms inside the ideal (polys) cutting the dimension by count."""
    if count == 0:
        return []
    target_deg = max(p.total_degree() for p in polys)
    chosen = []
    d = ring.num_vars
    for i in range(count):
        for attempt in range(retries):
            f = ring.zero()
            for p in polys:
                extra = target_deg - p.total_degree()
                f = f + ring.random_form(extra, rng) * p
            if f.is_zero():
                continue
            quo = GradedModule.quotient_ring(ring, chosen + [f])
            if dim_module(quo) == d - (i + 1):
                chosen.append(f)
                break
        else:
            raise HomologyError("failed to cut the annihilator down to a "
                                "complete intersection")
    return chosen


def _hom_into_ci_quotient(module: GradedModule, ci):
    """Generators of Hom_{S/(ci)}(M, S/(ci)) as rows over the ambient."""
    pres = minimal_presentation(module)
    t = pres.presentation.transpose()
    rels = []
    for f in ci:
        for k in range(t.target.rank):
            rels.append(t.target.basis(k).poly_mul(f))
    return kernel_of_map(t, target_relations=rels), pres


def unmixed_component(module: GradedModule, rng=None):
    """(U, N): U the largest submodule of lower dimension, N = M/U.

    U is the kernel of the biduality map into the dual over a complete
    intersection S/(f) ⊆ Ann(M) of codimension d − dim M; elements of U
    are exactly the ones killed by every hom into S/(f).
    """
    key = "unmixed"
    if key in module._cache:
        return module._cache[key]
    ring = module.ring
    if is_zero_module(module):
        out = (_zero_module(ring), module)
        module._cache[key] = out
        return out
    rng = rng or random.Random(7)
    r = dim_module(module)
    c = ring.num_vars - r
    ci = _regular_sequence_in(annihilator(module), ring, c, rng) if c else []
    homs, pres = _hom_into_ci_quotient(module, ci)
    amb = pres.ambient
    if not homs:
        # no homs at all: everything is lower-dimensional torsion over S/(f)
        raise HomologyError("dual over the complete intersection is zero")
    target = FreeModule(ring, [-h.degree() for h in homs])
    cols = []
    for b in range(amb.rank):
        terms = {}
        for i, h in enumerate(homs):
            coord = h.coordinates()[b]
            for m, cc in coord.terms.items():
                terms[(i, m)] = cc
        cols.append(Vector(target, terms))
    psi = ModuleMap.from_columns(amb, target, cols)
    rels = []
    for f in ci:
        for k in range(target.rank):
            rels.append(target.basis(k).poly_mul(f))
    u_gens = kernel_of_map(psi, target_relations=rels)
    w = pres.relations()
    u_mod, _ = subquotient(u_gens, w, amb)
    n_mod = quotient_module(pres, u_gens)
    out = (u_mod, n_mod)
    module._cache[key] = out
    return out


def is_unmixed(module: GradedModule) -> bool:
    u, _ = unmixed_component(module)
    return is_zero_module(u)

"""Groebner bases for submodules of graded free modules.

Buchberger with degree-first pair selection over the position-over-term
extension of grevlex.  Kernels, intersections and colons all go through
one elimination primitive: a Groebner basis in target ⊕ source where the
target block dominates.
"""

from __future__ import annotations

from .modules import FreeModule, GradedModule, ModuleMap, Vector, term_key
from .poly import Poly, PolyError, mon_deg, mon_div, mon_lcm


class GBError(PolyError):
    pass


def reduce_vector(v: Vector, basis, lts=None):
    """Full normal form of v against a list of monic vectors."""
    if lts is None:
        lts = [b.leading_term()[0] for b in basis]
    fld = v.module.ring.field
    out = {}
    work = dict(v.terms)
    while work:
        term = max(work, key=term_key)
        coeff = work[term]
        pos, mon = term
        hit = None
        for b, (bpos, bmon) in zip(basis, lts):
            if bpos == pos:
                q = mon_div(mon, bmon)
                if q is not None:
                    hit = (b, q)
                    break
        if hit is None:
            out[term] = coeff
            del work[term]
            continue
        b, q = hit
        for (bp, bm), bc in b.terms.items():
            t = (bp, tuple(x + y for x, y in zip(bm, q)))
            s = fld.sub(work.get(t, fld.zero()), fld.mul(bc, coeff))
            if s == 0:
                work.pop(t, None)
            else:
                work[t] = s
    return Vector(v.module, out)


def _spair(f, g):
    (pos, mf), _ = f.leading_term()
    (_, mg), _ = g.leading_term()
    lcm = mon_lcm(mf, mg)
    one = f.module.ring.field.one()
    qf = tuple(a - b for a, b in zip(lcm, mf))
    qg = tuple(a - b for a, b in zip(lcm, mg))
    return f.mul_term(qf, one) - g.mul_term(qg, one)


def buchberger(gens):
    """Reduced Groebner basis of the submodule generated by gens.

    Input vectors must be homogeneous; returns monic, auto-reduced basis
    sorted by decreasing leading term.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    module = gens[0].module
    for g in gens:
        if not g.is_homogeneous():
            raise GBError("inhomogeneous generator")
    basis = []
    lts = []
    for g in gens:
        r = reduce_vector(g, basis, lts)
        if not r.is_zero():
            basis.append(r.monic())
            lts.append(r.leading_term()[0])

    rank1 = module.rank == 1
    pairs = set()

    def lcm_of(i, j):
        return mon_lcm(lts[i][1], lts[j][1])

    def add_pairs(j):
        for i in range(j):
            if lts[i][0] != lts[j][0]:
                continue
            # product criterion is only valid in the ideal case
            if rank1 and mon_lcm(lts[i][1], lts[j][1]) == tuple(
                    a + b for a, b in zip(lts[i][1], lts[j][1])):
                continue
            pairs.add((i, j))

    for j in range(len(basis)):
        add_pairs(j)

    while pairs:
        i, j = min(pairs, key=lambda p: (mon_deg(lcm_of(*p)), p))
        pairs.remove((i, j))
        # chain criterion: some k whose leading monomial divides the lcm,
        # with both sub-pairs already handled (not pending)
        lcm = lcm_of(i, j)
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or lts[k][0] != lts[i][0]:
                continue
            if mon_div(lcm, lts[k][1]) is not None:
                pi = (min(i, k), max(i, k))
                pj = (min(j, k), max(j, k))
                if pi not in pairs and pj not in pairs:
                    skip = True
                    break
        if skip:
            continue
        r = reduce_vector(_spair(basis[i], basis[j]), basis, lts)
        if not r.is_zero():
            basis.append(r.monic())
            lts.append(r.leading_term()[0])
            add_pairs(len(basis) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i, lt in enumerate(lts):
        redundant = any(k != i and lts[k][0] == lt[0]
                        and mon_div(lt[1], lts[k][1]) is not None
                        and (lts[k] != lt or k < i)
                        for k in range(len(basis)))
        if not redundant:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # interreduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(reduce_vector(g, others).monic())
    reduced.sort(key=lambda g: term_key(g.leading_term()[0]), reverse=True)
    return reduced


class SubmoduleGB:
    """A submodule of a free module together with its reduced basis."""

    def __init__(self, ambient: FreeModule, generators):
        self.ambient = ambient
        self.generators = list(generators)
        self.basis = buchberger(self.generators)
        self._lts = [b.leading_term()[0] for b in self.basis]

    def normal_form(self, v: Vector) -> Vector:
        if v.module.ring != self.ambient.ring or v.module.rank != self.ambient.rank:
            raise GBError("ambient mismatch")
        return reduce_vector(v, self.basis, self._lts)

    def contains(self, v: Vector) -> bool:
        return self.normal_form(v).is_zero()

    def leading_terms(self):
        return list(self._lts)

    def is_zero(self):
        return not self.basis


def _block_module(ring, first: FreeModule, second: FreeModule):
    return FreeModule(ring, first.twists + second.twists)


def _embed(v: Vector, block: FreeModule, offset: int):
    return Vector(block, {(i + offset, m): c for (i, m), c in v.terms.items()})


def _project(v: Vector, module: FreeModule, offset: int):
    terms = {}
    for (i, m), c in v.terms.items():
        if i >= offset:
            terms[(i - offset, m)] = c
    return Vector(module, terms)


def _first_block_zero(v: Vector, offset: int):
    return all(i >= offset for (i, m) in v.terms)


def kernel_of_map(f: ModuleMap, target_relations=()):
    """Generators of ker(source -> target/<target_relations>).

    Elimination: Groebner basis of the graph vectors (f(e_j), e_j) plus
    (w, 0) for the relations, in target ⊕ source with the target block
    dominating; basis elements with zero target block project to kernel
    generators (in fact a Groebner basis of the kernel).
    """
    ring = f.source.ring
    block = _block_module(ring, f.target, f.source)
    offset = f.target.rank
    gens = []
    for j in range(f.source.rank):
        g = _embed(f.column(j), block, 0) + _embed(f.source.basis(j), block, offset)
        gens.append(g)
    for w in target_relations:
        gens.append(_embed(w, block, 0))
    basis = buchberger(gens)
    out = []
    for b in basis:
        if _first_block_zero(b, offset):
            out.append(_project(b, f.source, offset))
    return out


def image_gens(f: ModuleMap):
    return [c for c in f.columns() if not c.is_zero()]


def syzygies(gens, ambient: FreeModule) -> ModuleMap:
    """Map whose image is the syzygy module of the given generators."""
    gens = list(gens)
    twists = []
    for g in gens:
        if g.is_zero():
            twists.append(0)
        else:
            twists.append(g.degree())
    source = FreeModule(ambient.ring, twists)
    f = ModuleMap.from_columns(source, ambient, [
        g if not g.is_zero() else ambient.zero() for g in gens])
    ker = kernel_of_map(f)
    ksrc = FreeModule(ambient.ring, [k.degree() for k in ker])
    return ModuleMap.from_columns(ksrc, source, ker)


def intersect(a_gens, b_gens, ambient: FreeModule):
    """Generators of the intersection of two submodules."""
    ring = ambient.ring
    block = _block_module(ring, ambient, ambient)
    offset = ambient.rank
    gens = [_embed(a, block, 0) + _embed(a, block, offset) for a in a_gens]
    gens += [_embed(b, block, 0) for b in b_gens]
    basis = buchberger(gens)
    return [_project(g, ambient, offset) for g in basis
            if _first_block_zero(g, offset)]


def colon_submodule(n_gens, f: Poly, ambient: FreeModule):
    """Generators of (N :_F f) = {v in F : f*v in N}."""
    if f.is_zero():
        raise GBError("colon by zero")
    if not f.is_homogeneous():
        raise GBError("colon by inhomogeneous element")
    d = f.total_degree()
    shifted = FreeModule(ambient.ring, [t + d for t in ambient.twists])
    cols = [ambient.basis(i).poly_mul(f) for i in range(ambient.rank)]
    mul = ModuleMap.from_columns(shifted, ambient, cols)
    ker = kernel_of_map(mul, target_relations=list(n_gens))
    return [Vector(ambient, dict(k.terms)) for k in ker]


def colon_ideal(w_gens, ambient: FreeModule, pos: int):
    """Polynomials f with f * e_pos in <w_gens>."""
    ring = ambient.ring
    src = FreeModule(ring, [ambient.twists[pos]])
    f = ModuleMap.from_columns(src, ambient, [ambient.basis(pos)])
    ker = kernel_of_map(f, target_relations=list(w_gens))
    return [k.coordinates()[0] for k in ker]


def intersect_ideals(i_polys, j_polys, ring):
    amb = FreeModule(ring, [0])
    a = [amb.element([p]) for p in i_polys]
    b = [amb.element([p]) for p in j_polys]
    return [v.coordinates()[0] for v in intersect(a, b, amb)]


def annihilator(module: GradedModule):
    """Generators of Ann(M) as polynomials."""
    if "annihilator" in module._cache:
        return module._cache["annihilator"]
    rels = module.relations()
    amb = module.ambient
    ann = None
    for pos in range(amb.rank):
        cur = colon_ideal(rels, amb, pos)
        ann = cur if ann is None else intersect_ideals(ann, cur, amb.ring)
    if ann is None:  # rank-0 ambient: zero module, Ann = S
        ann = [module.ring.one()]
    module._cache["annihilator"] = ann
    return ann


def minimal_generators(gens):
    """Greedy minimal generating subset (graded Nakayama, by degree)."""
    gens = [g for g in gens if not g.is_zero()]
    gens.sort(key=lambda g: g.degree())
    kept = []
    basis = []
    for g in gens:
        r = reduce_vector(g, basis)
        if not r.is_zero():
            kept.append(g)
            basis = buchberger(basis + [r])
    return kept


def module_gb(module: GradedModule) -> SubmoduleGB:
    if "gb" not in module._cache:
        module._cache["gb"] = SubmoduleGB(module.ambient, module.relations())
    return module._cache["gb"]


def is_zero_module(module: GradedModule) -> bool:
    gb = module_gb(module)
    return all(gb.contains(module.ambient.basis(i))
               for i in range(module.ambient.rank))


def quotient_module(module: GradedModule, extra_relations) -> GradedModule:
    """M / <extra relations>, presented over the same ambient."""
    rels = module.relations() + [r for r in extra_relations if not r.is_zero()]
    return GradedModule.from_relations(module.ambient, rels)


def quotient_by_ideal(module: GradedModule, polys) -> GradedModule:
    extra = []
    for p in polys:
        if p.is_zero():
            continue
        for i in range(module.ambient.rank):
            extra.append(module.ambient.basis(i).poly_mul(p))
    return quotient_module(module, extra)


def minimize_presentation(pres: ModuleMap) -> ModuleMap:
    """Cancel unit entries and redundant columns; result has entries in m."""
    ring = pres.source.ring
    target_twists = list(pres.target.twists)
    columns = [c for c in pres.columns() if not c.is_zero()]
    while True:
        columns = minimal_generators(columns)
        unit = None
        for j, col in enumerate(columns):
            for (i, m), c in col.terms.items():
                if mon_deg(m) == 0:
                    unit = (i, j, c)
                    break
            if unit:
                break
        if unit is None:
            break
        i, j, c = unit
        fld = ring.field
        pivot = columns[j]
        new_cols = []
        for k, col in enumerate(columns):
            if k == j:
                continue
            # clear the whole i-th coordinate, not just the constant part
            coord = col.coordinates()[i]
            if not coord.is_zero():
                factor = coord.scale(fld.inv(c))
                col = col - pivot.poly_mul(factor)
            new_cols.append(col)
        # drop target coordinate i
        del target_twists[i]
        new_amb = FreeModule(ring, target_twists)
        def drop(v):
            terms = {}
            for (p, m), cc in v.terms.items():
                if p == i:
                    continue
                terms[(p - 1 if p > i else p, m)] = cc
            return Vector(new_amb, terms)
        columns = [drop(col) for col in new_cols]
        columns = [col for col in columns if not col.is_zero()]
    new_amb = FreeModule(ring, target_twists)
    columns = [Vector(new_amb, dict(c.terms)) for c in columns]
    src = FreeModule(ring, [c.degree() for c in columns])
    return ModuleMap.from_columns(src, new_amb, columns)


def minimal_presentation(module: GradedModule) -> GradedModule:
    if "minimal" not in module._cache:
        pres = minimize_presentation(module.presentation)
        out = GradedModule(pres)
        out._cache["minimal"] = out
        module._cache["minimal"] = out
    return module._cache["minimal"]


def minimal_free_resolution(module: GradedModule, max_len=None):
    """Differentials d1, d2, ... of a minimal graded free resolution.

    Over the polynomial ring this terminates within num_vars steps
    (Hilbert syzygy theorem); max_len only truncates earlier.
    """
    full = module._cache.get(("resolution", None))
    if full is not None:
        return full if max_len is None else full[:max_len]
    mod = minimal_presentation(module)
    d1 = mod.presentation
    maps = []
    if d1.source.rank > 0:
        maps.append(d1)
    limit = module.ring.num_vars + 1
    while maps:
        if len(maps) > limit:
            raise GBError("resolution did not terminate (internal error)")
        last = maps[-1]
        ker = kernel_of_map(last)
        ker = minimal_generators(ker)
        if not ker:
            break
        src = FreeModule(module.ring, [k.degree() for k in ker])
        maps.append(ModuleMap.from_columns(src, last.source, ker))
    module._cache[("resolution", None)] = maps
    return maps if max_len is None else maps[:max_len]


def betti_numbers(module: GradedModule):
    """[beta_0, beta_1, ...] of the minimal free resolution."""
    mod = minimal_presentation(module)
    maps = minimal_free_resolution(module)
    return [mod.ambient.rank] + [m.source.rank for m in maps]


def projective_dimension(module: GradedModule):
    if is_zero_module(module):
        return None
    betti = betti_numbers(module)
    return len(betti) - 1


def depth(module: GradedModule):
    """Auslander-Buchsbaum: num_vars - projective dimension."""
    pd = projective_dimension(module)
    if pd is None:
        return float("inf")
    return module.ring.num_vars - pd


def subquotient(k_gens, i_gens, ambient: FreeModule):
    """Present K/I for submodules I ⊆ K of a free module.

    Returns (module, kept) where kept are the chosen generator
    representatives in the ambient (one per ambient basis vector of the
    presentation of the result).
    """
    i_gens = [g for g in i_gens if not g.is_zero()]
    gb_i = SubmoduleGB(ambient, i_gens)
    cands = []
    for g in k_gens:
        nf = gb_i.normal_form(g)
        if not nf.is_zero():
            cands.append((g, nf))
    cands.sort(key=lambda t: t[0].degree())
    kept = []
    basis = [b for b in gb_i.basis]
    for g, nf in cands:
        r = reduce_vector(nf, basis)
        if not r.is_zero():
            kept.append(g)
            basis = buchberger(basis + [r])
    if not kept:
        ring = ambient.ring
        zero_amb = FreeModule(ring, [])
        return GradedModule(ModuleMap(FreeModule(ring, []), zero_amb, [])), []
    g0 = FreeModule(ambient.ring, [g.degree() for g in kept])
    psi = ModuleMap.from_columns(g0, ambient, kept)
    rels = kernel_of_map(psi, target_relations=i_gens)
    rels = [r for r in rels if not r.is_zero()]
    src = FreeModule(ambient.ring, [r.degree() for r in rels])
    return GradedModule(ModuleMap.from_columns(src, g0, rels)), kept

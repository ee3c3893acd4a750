"""Graded free modules, homogeneous vectors, maps, and finite presentations.

A vector in a free module F = ⊕ S(-twist_i) is a sparse dict
(position, monomial) -> coefficient.  The degree of a term (i, m) is
deg(m) + twists[i]; homogeneous vectors have all terms in one degree.
"""

from __future__ import annotations

from .poly import (Poly, PolyRing, PolyError, RingMismatch, grevlex_key,
                   mon_deg, mon_mul)


class FreeModule:
    """Free graded module with per-basis-vector degree shifts."""

    def __init__(self, ring: PolyRing, twists):
        self.ring = ring
        self.twists = tuple(twists)
        self.rank = len(self.twists)

    def zero(self):
        return Vector(self, {})

    def basis(self, i):
        if not 0 <= i < self.rank:
            raise PolyError(f"basis index {i} out of range")
        return Vector(self, {(i, self.ring.zero_mon): self.ring.field.one()})

    def element(self, polys):
        """Vector from a list of rank Poly coordinates."""
        polys = list(polys)
        if len(polys) != self.rank:
            raise PolyError("coordinate count does not match rank")
        terms = {}
        for i, p in enumerate(polys):
            if p is None:
                continue
            for m, c in p.terms.items():
                terms[(i, m)] = c
        return Vector(self, terms)

    def __eq__(self, other):
        return (isinstance(other, FreeModule) and self.ring == other.ring
                and self.twists == other.twists)

    def __hash__(self):
        return hash((self.ring, self.twists))

    def __repr__(self):
        return f"Free({self.ring}, twists={list(self.twists)})"


def term_key(term):
    """Position-over-term order: lower position dominates, grevlex inside."""
    pos, mon = term
    return (-pos, grevlex_key(mon))


class Vector:
    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = terms

    def _check(self, other):
        if self.module != other.module:
            raise RingMismatch("vectors live in different free modules")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        fld = self.module.ring.field
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = fld.add(out.get(t, fld.zero()), c)
            if s == 0:
                out.pop(t, None)
            else:
                out[t] = s
        return Vector(self.module, out)

    def __neg__(self):
        fld = self.module.ring.field
        return Vector(self.module, {t: fld.neg(c) for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        fld = self.module.ring.field
        c = fld.coerce(c)
        if c == 0:
            return self.module.zero()
        return Vector(self.module, {t: fld.mul(cc, c) for t, cc in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return self.poly_mul(other)
        return self.scale(other)

    def poly_mul(self, p: Poly):
        fld = self.module.ring.field
        out = {}
        for (i, m1), c1 in self.terms.items():
            for m2, c2 in p.terms.items():
                t = (i, mon_mul(m1, m2))
                s = fld.add(out.get(t, fld.zero()), fld.mul(c1, c2))
                if s == 0:
                    out.pop(t, None)
                else:
                    out[t] = s
        return Vector(self.module, out)

    def mul_term(self, mon, coeff):
        """Multiply by coeff * x^mon."""
        fld = self.module.ring.field
        return Vector(self.module, {(i, mon_mul(m, mon)): fld.mul(c, coeff)
                                    for (i, m), c in self.terms.items()})

    def leading_term(self):
        if not self.terms:
            raise PolyError("zero vector has no leading term")
        t = max(self.terms, key=term_key)
        return t, self.terms[t]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self.scale(self.module.ring.field.inv(c))

    def term_degree(self, term):
        i, m = term
        return mon_deg(m) + self.module.twists[i]

    def degree(self):
        """Degree of a homogeneous vector, None for zero."""
        if not self.terms:
            return None
        degs = {self.term_degree(t) for t in self.terms}
        if len(degs) != 1:
            raise PolyError("vector is not homogeneous")
        return degs.pop()

    def is_homogeneous(self):
        return len({self.term_degree(t) for t in self.terms}) <= 1

    def coordinates(self):
        """List of Poly coordinates."""
        ring = self.module.ring
        coords = [{} for _ in range(self.module.rank)]
        for (i, m), c in self.terms.items():
            coords[i][m] = c
        return [Poly(ring, d) for d in coords]

    def __repr__(self):
        return "(" + ", ".join(map(repr, self.coordinates())) + ")"


class ModuleMap:
    """Graded map between free modules, matrix of polynomials.

    matrix[i][j] is the i-th coordinate of the image of source basis j.
    """

    def __init__(self, source: FreeModule, target: FreeModule, matrix):
        self.source = source
        self.target = target
        self.matrix = [list(row) for row in matrix]
        if len(self.matrix) != target.rank or any(len(r) != source.rank
                                                  for r in self.matrix):
            raise PolyError("matrix shape does not match ranks")
        for i in range(target.rank):
            for j in range(source.rank):
                entry = self.matrix[i][j]
                if entry.is_zero():
                    continue
                want = source.twists[j] - target.twists[i]
                if not entry.is_homogeneous() or entry.total_degree() != want:
                    raise PolyError(
                        f"entry ({i},{j}) not homogeneous of degree {want}")

    @classmethod
    def from_columns(cls, source, target, columns):
        ring = target.ring
        matrix = [[ring.zero()] * source.rank for _ in range(target.rank)]
        for j, col in enumerate(columns):
            for i, p in enumerate(col.coordinates()):
                matrix[i][j] = p
        return cls(source, target, matrix)

    def column(self, j):
        return self.target.element([self.matrix[i][j]
                                    for i in range(self.target.rank)])

    def columns(self):
        return [self.column(j) for j in range(self.source.rank)]

    def apply(self, v: Vector) -> Vector:
        if v.module != self.source:
            raise RingMismatch("vector not in source module")
        out = self.target.zero()
        for (j, m), c in v.terms.items():
            out = out + self.column(j).mul_term(m, c)
        return out

    def transpose(self):
        """Dual map Hom(target, S) -> Hom(source, S); twists negate."""
        ring = self.source.ring
        dual_src = FreeModule(ring, [-t for t in self.target.twists])
        dual_tgt = FreeModule(ring, [-t for t in self.source.twists])
        matrix = [[self.matrix[i][j] for i in range(self.target.rank)]
                  for j in range(self.source.rank)]
        return ModuleMap(dual_src, dual_tgt, matrix)

    def compose(self, other):
        """self ∘ other."""
        cols = [self.apply(other.column(j)) for j in range(other.source.rank)]
        return ModuleMap.from_columns(other.source, self.target, cols)

    def is_zero(self):
        return all(e.is_zero() for row in self.matrix for e in row)

    def __repr__(self):
        return f"ModuleMap({self.source.rank} -> {self.target.rank})"


def zero_map(source, target):
    z = target.ring.zero()
    return ModuleMap(source, target,
                     [[z] * source.rank for _ in range(target.rank)])


class GradedModule:
    """Finitely presented graded module: cokernel of a graded map.

    Immutable; expensive derived data (Groebner basis of the relation
    submodule, dimension, resolutions, Ext duals) is cached lazily.
    """

    def __init__(self, presentation: ModuleMap):
        self.presentation = presentation
        self.ambient = presentation.target
        self.ring = presentation.target.ring
        self._cache = {}

    @classmethod
    def from_relations(cls, ambient: FreeModule, relations):
        """Module = ambient / <relations>; relation degrees set the twists."""
        rels = [r for r in relations if not r.is_zero()]
        twists = []
        for r in rels:
            if not r.is_homogeneous():
                raise PolyError("relations must be homogeneous")
            twists.append(r.degree())
        source = FreeModule(ambient.ring, twists)
        return cls(ModuleMap.from_columns(source, ambient, rels))

    @classmethod
    def quotient_ring(cls, ring: PolyRing, polys):
        """S/I as a module over S."""
        ambient = FreeModule(ring, [0])
        rels = [ambient.element([p]) for p in polys]
        return cls.from_relations(ambient, rels)

    @classmethod
    def free(cls, ring: PolyRing, twists=(0,)):
        ambient = FreeModule(ring, twists)
        source = FreeModule(ring, [])
        return cls(ModuleMap(source, ambient, [[] for _ in range(ambient.rank)]))

    def relations(self):
        return self.presentation.columns()

    def direct_sum(self, other):
        if self.ring != other.ring:
            raise RingMismatch("direct sum over different rings")
        amb = FreeModule(self.ring, self.ambient.twists + other.ambient.twists)
        rels = []
        for r in self.relations():
            rels.append(Vector(amb, dict(r.terms)))
        shift = self.ambient.rank
        for r in other.relations():
            rels.append(Vector(amb, {(i + shift, m): c
                                     for (i, m), c in r.terms.items()}))
        return GradedModule.from_relations(amb, rels)

    def __repr__(self):
        return (f"GradedModule(ambient rank {self.ambient.rank}, "
                f"{self.presentation.source.rank} relations)")

"""Job files: JSON schema, validation, and the operation runner.

A job describes one graded module (ring, twists, relation matrix), named
ideals, and a list of operations.  Corpus files reuse the same format
plus a "claims" object of expected values checked by the check suite.
"""

from __future__ import annotations

import dataclasses
import platform
import time
from fractions import Fraction

import jsonschema

from . import __version__, brim, homology, invariants, koszul, sampler
from . import gb as gbmod
from . import hilbert as hb
from .modules import FreeModule, GradedModule
from .poly import CoeffField, PolyError, PolyRing

_POLY_LIST = {"type": "array", "items": {"type": "string"}}

JOB_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["ring"],
    "properties": {
        "name": {"type": "string"},
        "ring": {
            "type": "object",
            "additionalProperties": False,
            "required": ["variables"],
            "properties": {
                "characteristic": {"type": ["integer", "null"]},
                "variables": {"type": "array", "items": {"type": "string"},
                              "minItems": 1},
            },
        },
        "module": {
            "type": "object",
            "additionalProperties": False,
            "required": ["twists"],
            "properties": {
                "twists": {"type": "array", "items": {"type": "integer"},
                           "minItems": 1},
                "relations": {"type": "array", "items": _POLY_LIST},
            },
        },
        "ideals": {"type": "object", "additionalProperties": _POLY_LIST},
        "ops": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["op"],
                "properties": {
                    "op": {"type": "string"},
                    "ideal": {"type": "string"},
                    "h": {"type": "string"},
                    "N": {"type": "integer", "minimum": 0},
                    "forms": _POLY_LIST,
                    "powers": {"type": "array", "items": {"type": "integer"}},
                    "columns": {"type": "array", "items": _POLY_LIST},
                    "ring_relations": _POLY_LIST,
                },
            },
        },
        "sample": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "seed": {"type": "integer"},
                "count": {"type": "integer", "minimum": 1},
                "degree_bounds": {"type": "array",
                                  "items": {"type": "integer", "minimum": 1}},
                "retry_limit": {"type": "integer", "minimum": 1},
            },
        },
        "brim": {
            "type": "object",
            "additionalProperties": False,
            "required": ["columns"],
            "properties": {
                "columns": {"type": "array", "items": _POLY_LIST},
                "ring_relations": _POLY_LIST,
                "claims": {"type": "object"},
            },
        },
        "claims": {"type": "object"},
    },
}


class JobError(PolyError):
    """Invalid job input (schema-level); maps to exit code 2."""


def validate_job(raw):
    try:
        jsonschema.validate(raw, JOB_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise JobError("job schema violation at %s: %s"
                       % ("/".join(str(p) for p in exc.absolute_path), exc.message))


@dataclasses.dataclass
class Job:
    raw: dict
    ring: PolyRing
    module: GradedModule
    ideals: dict
    ops: list
    sample: sampler.SampleConfig
    claims: dict
    name: str


def build_job(raw, default_char=32003, seed_override=None) -> Job:
    validate_job(raw)
    rspec = raw["ring"]
    char = rspec.get("characteristic", default_char)
    ring = PolyRing(CoeffField(char), rspec["variables"])
    mspec = raw.get("module", {"twists": [0]})
    twists = mspec["twists"]
    amb = FreeModule(ring, twists)
    rels = []
    for row in mspec.get("relations", []):
        if len(row) != len(twists):
            raise JobError("relation vector length %d != %d twists"
                           % (len(row), len(twists)))
        rels.append(amb.element([ring.poly(s) for s in row]))
    module = GradedModule.from_relations(amb, rels)
    ideals = {name: [ring.poly(s) for s in polys]
              for name, polys in raw.get("ideals", {}).items()}
    sspec = dict(raw.get("sample", {}))
    if seed_override is not None:
        sspec["seed"] = seed_override
    if "degree_bounds" in sspec:
        sspec["degree_bounds"] = tuple(sspec["degree_bounds"])
    cfg = sampler.SampleConfig(**sspec)
    return Job(raw=raw, ring=ring, module=module, ideals=ideals,
               ops=raw.get("ops", []), sample=cfg,
               claims=raw.get("claims", {}), name=raw.get("name", "job"))


def plain(obj):
    """Recursively convert results to JSON-serializable structures."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: plain(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        if obj == float("inf"):
            return "infinite"
        if obj == float("-inf"):
            return "-infinite"
        return obj
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return repr(obj)


def _ideal(job: Job, opspec, key="ideal"):
    name = opspec.get(key)
    if name is None:
        raise JobError("op %r requires an %r field" % (opspec["op"], key))
    if name not in job.ideals:
        raise JobError("unknown ideal %r" % name)
    return job.ideals[name]


def _parameter_module(job: Job, spec):
    rels = spec.get("ring_relations")
    if rels is None:
        if job.module.ambient.rank == 1:
            rels = [v.coordinates()[0] for v in job.module.relations()]
        else:
            rels = []
    else:
        rels = [job.ring.poly(s) for s in rels]
    cols = [[job.ring.poly(s) for s in col] for col in spec["columns"]]
    return brim.make_parameter_module(job.ring, rels, cols)


def execute_op(job: Job, opspec):
    op = opspec["op"]
    m = job.module
    if op == "dim":
        return plain(hb.dim_module(m))
    if op == "length":
        lam = hb.module_length(m)
        return lam if lam is not None else "infinite"
    if op == "betti":
        return gbmod.betti_numbers(m)
    if op == "cohomology":
        prof = homology.local_cohomology_lengths(m)
        return {"h": ["infinite" if v is None else v for v in prof.h],
                "depth": plain(prof.depth), "dim": plain(prof.dim)}
    if op == "unmixed":
        u, n = homology.unmixed_component(m)
        return {"unmixed": homology.is_unmixed(m),
                "component_dim": plain(hb.dim_module(u)),
                "component_length": plain(hb.module_length(u)),
                "quotient_dim": plain(hb.dim_module(n))}
    if op == "classify":
        qs = sampler.sample_parameter_ideals(m, job.sample)
        return invariants.classify(m, [q.gens for q in qs])
    if op == "hilbert-samuel":
        gens = _ideal(job, opspec)
        return plain(hb.hilbert_samuel(m, gens, opspec.get("N", 6)))
    if op == "hilbert-coefficients":
        return plain(hb.hilbert_coefficients(m, _ideal(job, opspec)))
    if op == "koszul-homology":
        return plain(koszul.koszul_homology(m, _ideal(job, opspec)))
    if op == "chi1-serre":
        return koszul.chi1_serre(m, _ideal(job, opspec))
    if op == "chi1-recursion":
        return plain(koszul.chi1_recursion_check(m, _ideal(job, opspec)))
    if op == "hdeg":
        return plain(invariants.hdeg_report(m, _ideal(job, opspec)))
    if op == "e1-torsion-bound":
        return plain(invariants.check_e1_torsion_bound(m, _ideal(job, opspec)))
    if op == "chi1-hdeg-bound":
        return plain(invariants.check_chi1_hdeg_bound(m, _ideal(job, opspec)))
    if op == "superficial-check":
        gens = _ideal(job, opspec)
        q = hb.make_parameter_ideal(m, gens)
        if "h" not in opspec:
            raise JobError("superficial-check requires an 'h' field")
        return plain(hb.superficial_check(m, q, job.ring.poly(opspec["h"])))
    if op == "d-sequence":
        return invariants.is_d_sequence(m, _ideal(job, opspec))
    if op == "hilbert-characteristic":
        gens = _ideal(job, opspec)
        return {"h": invariants.hilbert_characteristic(m, gens),
                "colength": hb.colength(m, gens)}
    if op == "betti-bound":
        return plain(invariants.betti_bound_check(m, _ideal(job, opspec)))
    if op == "estimate-lambda":
        return plain(sampler.estimate_lambda(m, job.sample))
    if op == "estimate-xi":
        return plain(sampler.estimate_xi(m, job.sample))
    if op == "lambda-sweep":
        gens = _ideal(job, opspec)
        powers = opspec.get("powers", [1, 2, 3])
        return [[l, e] for l, e in sampler.lambda_sweep(m, gens, powers)]
    if op == "buchsbaum-rim":
        pm = _parameter_module(job, opspec)
        return plain(brim.br_coefficients(pm))
    if op == "probe-9-5":
        pm = _parameter_module(job, opspec)
        return plain(brim.probe_conjecture_9_5(pm))
    raise JobError("unknown op %r" % op)


def run_job(raw, default_char=32003, seed_override=None, with_timings=True):
    """Execute a job dict and return the report document."""
    job = build_job(raw, default_char, seed_override)
    results = []
    timings = {}
    for k, opspec in enumerate(job.ops):
        t0 = time.perf_counter()
        results.append({"op": opspec, "result": execute_op(job, opspec)})
        timings["%d:%s" % (k, opspec["op"])] = round(time.perf_counter() - t0, 4)
    report = {
        "name": job.name,
        "inputs": raw,
        "seed": job.sample.seed,
        "versions": {"gradedca": __version__,
                     "python": platform.python_version()},
        "results": results,
    }
    if with_timings:
        report["timings"] = timings
    return report

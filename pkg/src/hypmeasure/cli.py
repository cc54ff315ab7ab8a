"""Batch front door: JSON in, JSON out, seeded verification.

Subcommands map one-to-one onto the library's operation families:

- ``decompose``: Jordan, Hahn, polar and Lebesgue decompositions of a
  hyperbolic measure, with every identity re-checked.
- ``integrate``: a single integral (with modulus inequality report) or
  a dominated-convergence run when the document has a ``sequence``.
- ``pushforward``: image of a D-probability under a self-map.
- ``find-invariant``: averaged-orbit invariant measure plus the
  brute-force basis of the invariant cone.
- ``verify``: the named property suites over seeded random instances.
- ``gen``: seeded instance generation for all input kinds.

Exit codes: 0 on success, 2 on schema or usage violations (with a
dotted document location on stderr), 3 on internal invariant
violations or failing verification suites (with a counterexample
dump on stderr).

Outputs are canonical JSON (sorted keys, two-space indent, trailing
newline), so identical inputs and flags produce byte-identical bytes.
The only exception is ``verify``, whose report includes per-suite
wall times; everything else in it is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
from numpy.random import default_rng

from . import generators as gen_mod
from .codec import (
    bicomplex_to_obj,
    dumps_canonical,
    function_to_obj,
    hyperbolic_to_obj,
    map_to_obj,
    mask_to_obj,
    measure_to_obj,
    parse_function,
    parse_map,
    parse_mask,
    parse_measure,
    space_to_obj,
)
from .decomposition import (
    abs_continuous,
    hahn,
    jordan,
    lebesgue_radon_nikodym,
    mutually_singular,
    polar_density,
)
from .dynamics import (
    cesaro_invariant,
    in_invariant_hull,
    invariant_basis_bruteforce,
    is_invariant,
    pushforward_iter,
)
from .errors import InternalInvariantError, SchemaError
from .integration import check_modulus_inequality, dct_run, in_l1, integrate
from .measures import TMeasure, probability_variant, variation_measure
from .verify import run_verify

__all__ = ["RunConfig", "main"]

GEN_KINDS = (
    "t-measure",
    "d-measure",
    "signed-measure",
    "d-probability",
    "function",
    "map",
    "interval-map-discretization",
)


@dataclass(frozen=True)
class RunConfig:
    """Flags shared by every subcommand."""

    command: str
    input_path: Optional[str]
    output_path: Optional[str]
    seed: int
    tol: float
    cases: int
    suite: str
    kind: Optional[str] = None
    atoms: int = 4
    mode: str = "float"

    def __post_init__(self) -> None:
        if self.tol <= 0.0:
            raise SchemaError("tol", "must be positive")
        if self.cases <= 0:
            raise SchemaError("cases", "must be positive")
        if self.seed < 0:
            raise SchemaError("seed", "must be a nonnegative integer")
        if self.atoms < 1:
            raise SchemaError("atoms", "must be at least 1")


def _read_doc(config: RunConfig) -> Any:
    try:
        if config.input_path is None:
            text = sys.stdin.read()
        else:
            with open(config.input_path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise SchemaError("input", str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("input", f"invalid JSON: {exc}") from None


def _write_doc(config: RunConfig, obj: Any) -> None:
    text = dumps_canonical(obj)
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _masses_obj(mu: TMeasure) -> dict:
    return {
        label: bicomplex_to_obj(mu.atom(i))
        for i, label in enumerate(mu.space.atoms)
    }


# ---------------------------------------------------------------- commands


def _cmd_decompose(config: RunConfig) -> dict:
    doc = _read_doc(config)
    mu = parse_measure(doc, "input")
    if not mu.is_real():
        raise SchemaError(
            "input.measure", "decompose needs hyperbolic (real-component) masses"
        )
    if not mu.is_finite():
        raise SchemaError("input.measure", "decompose needs finite masses")
    space = mu.space
    if isinstance(doc, dict) and "reference" in doc:
        ref = parse_measure(
            {"measure": doc["reference"]}, "input.reference", space
        )
        if not ref.is_d_measure():
            raise SchemaError(
                "input.reference", "reference must be a D-measure"
            )
    else:
        ref = variation_measure(mu)

    pair = jordan(mu)
    var = variation_measure(mu)
    hahn_res = hahn(mu, tol=config.tol)
    h = polar_density(mu)
    lrn = lebesgue_radon_nikodym(mu, ref)

    recon = TMeasure(space, h.e1 * np.abs(mu.e1), h.e2 * np.abs(mu.e2))
    dens = TMeasure(
        space, lrn.density.e1 * ref.e1.real, lrn.density.e2 * ref.e2.real
    )
    checks = {
        "jordan_difference": (pair.mu_plus - pair.mu_minus).equal_exact(mu),
        "jordan_variation": (pair.mu_plus + pair.mu_minus).isclose(var, config.tol),
        "hahn_mu_plus": hahn_res.mu_plus_check,
        "hahn_mu_minus": hahn_res.mu_minus_check,
        "polar_unimodular": bool(
            np.all(np.abs(np.abs(h.e1) - 1.0) <= config.tol)
            and np.all(np.abs(np.abs(h.e2) - 1.0) <= config.tol)
        ),
        "polar_reconstruction": recon.isclose(mu, config.tol),
        "lrn_sum": (lrn.lambda_ac + lrn.lambda_sing).equal_exact(mu),
        "lrn_abs_continuous": abs_continuous(lrn.lambda_ac, ref),
        "lrn_singular": mutually_singular(lrn.lambda_sing, ref),
        "lrn_density": dens.isclose(lrn.lambda_ac, config.tol),
    }
    result = {
        "space": space_to_obj(space),
        "jordan": {
            "mu_plus": _masses_obj(pair.mu_plus),
            "mu_minus": _masses_obj(pair.mu_minus),
        },
        "hahn": {
            "A": mask_to_obj(hahn_res.partition.A),
            "B": mask_to_obj(hahn_res.partition.B),
            "C": mask_to_obj(hahn_res.partition.C),
            "D": mask_to_obj(hahn_res.partition.D),
        },
        "polar_h": function_to_obj(h, with_space=False),
        "lrn": {
            "reference": _masses_obj(ref),
            "absolutely_continuous": _masses_obj(lrn.lambda_ac),
            "singular": _masses_obj(lrn.lambda_sing),
            "density": function_to_obj(lrn.density, with_space=False),
        },
        "checks": checks,
    }
    if not all(checks.values()):
        raise InternalInvariantError(
            "decomposition identity failed",
            {"checks": checks, "input": doc},
        )
    return result


def _cmd_integrate(config: RunConfig) -> dict:
    doc = _read_doc(config)
    mu = parse_measure(doc, "input")
    if not mu.is_d_measure():
        raise SchemaError("input.measure", "integration needs a D-measure")
    space = mu.space

    if isinstance(doc, dict) and "sequence" in doc:
        seq_obj = doc["sequence"]
        if not isinstance(seq_obj, list) or not seq_obj:
            raise SchemaError(
                "input.sequence", "expected a nonempty list of functions"
            )
        seq = [
            parse_function(item, f"input.sequence[{i}]", space)
            for i, item in enumerate(seq_obj)
        ]
        if "limit" not in doc:
            raise SchemaError("input.limit", "missing limit function")
        if "dominator" not in doc:
            raise SchemaError("input.dominator", "missing dominating function")
        limit = parse_function(doc["limit"], "input.limit", space)
        dominator = parse_function(doc["dominator"], "input.dominator", space)
        tol = doc.get("tol", config.tol)
        if not isinstance(tol, (int, float)) or isinstance(tol, bool) or tol <= 0:
            raise SchemaError("input.tol", "expected a positive number")
        try:
            report = dct_run(seq, limit, dominator, mu, float(tol))
        except ValueError as exc:
            raise SchemaError("input", str(exc)) from None
        return {
            "domination_ok": report.domination_ok,
            "l1_limit": [hyperbolic_to_obj(g) for g in report.l1_limit],
            "integral_trace": [
                bicomplex_to_obj(v) for v in report.integral_trace
            ],
            "final_gap": hyperbolic_to_obj(report.final_gap),
            "success": report.success,
        }

    f = parse_function(doc, "input", space)
    mask = None
    if isinstance(doc, dict) and "set" in doc:
        mask = parse_mask(doc["set"], space, "input.set")
    value = integrate(f, mu, mask)
    mod = check_modulus_inequality(f, mu)
    return {
        "integral": bicomplex_to_obj(value),
        "in_l1": in_l1(f, mu),
        "modulus": {
            "integral_modulus": hyperbolic_to_obj(mod.lhs),
            "integral_of_modulus": hyperbolic_to_obj(mod.rhs),
            "holds": mod.holds,
        },
    }


def _cmd_pushforward(config: RunConfig) -> dict:
    doc = _read_doc(config)
    mu = parse_measure(doc, "input")
    f = parse_map(doc, "input", mu.space)
    iterations = doc.get("iterations", 1)
    if not isinstance(iterations, int) or isinstance(iterations, bool) or iterations < 1:
        raise SchemaError("input.iterations", "expected a positive integer")
    try:
        out = pushforward_iter(f, mu, iterations)
    except ValueError as exc:
        raise SchemaError("input.measure", str(exc)) from None
    return measure_to_obj(out)


def _cmd_find_invariant(config: RunConfig) -> dict:
    doc = _read_doc(config)
    f = parse_map(doc, "input")
    space = f.space
    if isinstance(doc, dict) and "measure" in doc:
        mu0 = parse_measure(doc, "input", space)
    else:
        uniform = np.full(space.size, 1.0 / space.size)
        mu0 = TMeasure(space, uniform, uniform.copy())
    try:
        probability_variant(mu0)
    except ValueError as exc:
        raise SchemaError("input.measure", str(exc)) from None
    max_iter = doc.get("max_iter", 256)
    if not isinstance(max_iter, int) or isinstance(max_iter, bool) or max_iter < 1:
        raise SchemaError("input.max_iter", "expected a positive integer")

    trace = cesaro_invariant(f, mu0, max_iter=max_iter, tol=config.tol)
    basis = invariant_basis_bruteforce(f)
    limit = trace.iterates[-1]
    return {
        "space": space_to_obj(space),
        "burn_in": trace.burn_in,
        "converged": trace.converged,
        "iterations": len(trace.iterates),
        "gaps": [hyperbolic_to_obj(g) for g in trace.gaps],
        "limit": _masses_obj(limit),
        "limit_is_invariant": is_invariant(f, limit, config.tol),
        "limit_in_hull": in_invariant_hull(f, limit),
        "basis": [_masses_obj(m) for m in basis],
    }


def _cmd_verify(config: RunConfig) -> int:
    try:
        report = run_verify(config.seed, config.cases, config.suite)
    except ValueError as exc:
        raise SchemaError("suite", str(exc)) from None
    _write_doc(config, report.to_obj())
    if report.all_passed:
        return 0
    dump = {
        "error": "verification failure",
        "failed_suites": [s.name for s in report.suites if not s.passed],
        "counterexamples": [
            s.first_counterexample for s in report.suites if not s.passed
        ],
    }
    sys.stderr.write(dumps_canonical(dump))
    return 3


def _default_breakpoints() -> list[tuple[float, float]]:
    return [(0.0, 0.0), (0.5, 1.0), (1.0, 0.0)]


def _cmd_gen(config: RunConfig) -> dict:
    if config.kind is None:
        raise SchemaError("kind", "missing --kind")
    rng = default_rng(config.seed)
    kind = config.kind
    if kind == "interval-map-discretization":
        breakpoints = _default_breakpoints()
        if config.input_path is not None:
            doc = _read_doc(config)
            doc_bp = doc.get("breakpoints") if isinstance(doc, dict) else None
            if not isinstance(doc_bp, list):
                raise SchemaError(
                    "input.breakpoints", "expected a list of [x, y] pairs"
                )
            breakpoints = []
            for i, pt in enumerate(doc_bp):
                if (
                    not isinstance(pt, list)
                    or len(pt) != 2
                    or not all(isinstance(c, (int, float)) for c in pt)
                ):
                    raise SchemaError(
                        f"input.breakpoints[{i}]", "expected an [x, y] pair"
                    )
                breakpoints.append((float(pt[0]), float(pt[1])))
        try:
            _, pm = gen_mod.gen_interval_map_discretization(
                config.atoms, breakpoints
            )
        except ValueError as exc:
            raise SchemaError("input.breakpoints", str(exc)) from None
        return map_to_obj(pm)

    space = gen_mod.make_space(config.atoms)
    if kind == "t-measure":
        return measure_to_obj(gen_mod.gen_t_measure(rng, space, config.mode))
    if kind == "d-measure":
        return measure_to_obj(gen_mod.gen_d_measure(rng, space, config.mode))
    if kind == "signed-measure":
        return measure_to_obj(
            gen_mod.gen_signed_measure(rng, space, config.mode)
        )
    if kind == "d-probability":
        return measure_to_obj(
            gen_mod.gen_d_probability(
                rng, space, dyadic=(config.mode == "dyadic")
            )
        )
    if kind == "function":
        return function_to_obj(gen_mod.gen_function(rng, space, config.mode))
    if kind == "map":
        return map_to_obj(gen_mod.gen_map(rng, space))
    raise SchemaError("kind", f"unknown kind {kind!r}")


# ------------------------------------------------------------------ driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypmeasure",
        description="Hyperbolic-measure toolbox: decompose, integrate, "
        "push forward, find invariant measures, verify, generate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_input in (
        ("decompose", True),
        ("integrate", True),
        ("pushforward", True),
        ("find-invariant", True),
        ("verify", False),
        ("gen", False),
    ):
        p = sub.add_parser(name)
        if needs_input or name == "gen":
            p.add_argument("--input", default=None, help="input JSON path (default stdin)")
        p.add_argument("--output", default=None, help="output JSON path (default stdout)")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--cases", type=int, default=1000)
        if name == "verify":
            p.add_argument("--suite", default="*", help="suite name glob")
        if name == "gen":
            p.add_argument("--kind", choices=GEN_KINDS, required=True)
            p.add_argument("--atoms", type=int, default=4)
            p.add_argument(
                "--mode",
                choices=("float", "integer", "dyadic"),
                default="float",
                help="value distribution for generated instances",
            )
    return parser


_COMMANDS = {
    "decompose": _cmd_decompose,
    "integrate": _cmd_integrate,
    "pushforward": _cmd_pushforward,
    "find-invariant": _cmd_find_invariant,
    "gen": _cmd_gen,
}


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            input_path=getattr(args, "input", None),
            output_path=args.output,
            seed=args.seed,
            tol=args.tol,
            cases=args.cases,
            suite=getattr(args, "suite", "*"),
            kind=getattr(args, "kind", None),
            atoms=getattr(args, "atoms", 4),
            mode=getattr(args, "mode", "float"),
        )
        if config.command == "verify":
            return _cmd_verify(config)
        result = _COMMANDS[config.command](config)
        _write_doc(config, result)
        return 0
    except SchemaError as exc:
        sys.stderr.write(
            dumps_canonical(
                {"error": "schema violation", "location": exc.location, "message": exc.message}
            )
        )
        return 2
    except InternalInvariantError as exc:
        sys.stderr.write(
            json.dumps(
                {"error": "internal invariant violation", "message": str(exc), "payload": exc.payload},
                default=repr,
                sort_keys=True,
                indent=2,
            )
            + "\n"
        )
        return 3


if __name__ == "__main__":
    sys.exit(main())

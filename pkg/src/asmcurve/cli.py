"""Batch verification driver.

Runs the full per-(p, e, c) check suite and emits a deterministic report
(JSON or markdown).  Exit codes: 0 all pass, 1 at least one fail, 2 invalid
configuration.  Timing lives under a separate key excluded from the
determinism hash, so identical configs hash identically.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .ff import subfield_member, trace_q
from .symbolic import pivot_order_sequence
from . import adjoint as adjoint_mod
from . import aut as aut_mod
from . import classic as classic_mod
from . import curve as curve_mod
from . import model as model_mod


@dataclass
class RunConfig:
    p: int
    e: int
    c_spec: list = field(default_factory=lambda: [1])
    seed: int = 42
    samples: int = 500
    precision_override: int | None = None
    format: str = "json"
    checks: list | None = None


@dataclass
class CheckResult:
    id: str
    status: str  # pass | fail | reported
    expected: object
    observed: object
    claim: str


def _result(check_id, expected, observed, claim, reported=False):
    if reported:
        status = "reported"
    else:
        status = "pass" if expected == observed else "fail"
    return CheckResult(id=check_id, status=status, expected=expected,
                       observed=observed, claim=claim)


# ---------------------------------------------------------------------------
# individual checks; each returns a list of CheckResult

def check_point_count(params, cfg):
    q = params.q
    affine = len(curve_mod.enumerate_points(params, 2))
    places = affine + len(curve_mod.infinite_places(params))
    return [
        _result("point_count_affine_q2", (q - 1) * q ** 2, affine,
                "affine F_{q^2} points number (q-1)q^2"),
        _result("point_count_total_q2", (q - 1) * q ** 2 + 2 * q, places,
                "counts (q-1)q^2+2q"),
    ]


def check_genus(params, cfg):
    q = params.q
    rep = curve_mod.singularity_and_genus(params)
    return [
        _result("genus", (q - 1) ** 2, rep.genus, "genus g=(q-1)^2"),
        _result("singularities",
                [("X_inf", q, q), ("Y_inf", q, q)],
                rep.singular_points,
                "exactly two singular points of multiplicity q"),
        _result("tangent_cones", True, rep.tangent_cones_split,
                "ordinary singularities: q distinct trace-zero tangents"),
        _result("no_affine_singularity", True, rep.no_affine_singularity,
                "all affine points are nonsingular"),
    ]


def check_branch_forms(params, cfg):
    q = params.q
    n_pts = max(100, cfg.samples // 5)
    rng = random.Random(cfg.seed)
    pts = curve_mod.sample_points(params, n_pts, rng, level=4)
    N = cfg.precision_override or (q + 3)
    low_ok = True
    rel_q = True
    rel_q1 = True
    agree_q = 0
    agree_q1 = 0
    for P in pts:
        br = curve_mod.affine_branch(params, P, N)
        low_ok &= all(br.closed_form_agreement[i] for i in range(1, q))
        rel_q &= br.linear_relation_q
        rel_q1 &= br.linear_relation_q1
        agree_q += br.high_index_alt_agreement[q]
        agree_q1 += br.closed_form_agreement.get(q + 1, False)
    table = {"points": len(pts),
             "alt_form_at_q_agrees": agree_q,
             "first_form_at_q_plus_1_agrees": agree_q1}
    return [
        _result("branch_low_coefficients", True, low_ok,
                "v_i = (-1)^i (v^q+v)/(u^q+u)^i for 1 <= i <= q-1"),
        _result("branch_relation_q", True, rel_q,
                "v^q+v+v_q(u^q+u)+v_1^q(u^q+u)+v_{q-1}=0"),
        _result("branch_relation_q_plus_1", True, rel_q1,
                "v_1+v_1^q+v_q+v_{q+1}(u^q+u)=0"),
        _result("branch_high_index_table", None, table,
                "closed forms at i in {q, q+1}: per-characteristic agreement",
                reported=True),
    ]


def check_osculation(params, cfg):
    q = params.q
    rng = random.Random(cfg.seed)
    pts = curve_mod.sample_points(params, cfg.samples, rng, level=4)
    pts += curve_mod.enumerate_points(params, 2)[: 2 * q]  # guaranteed specials
    dichotomy = True
    special_q1 = True
    measured = set()
    for P in pts:
        rec = classic_mod.osculation_order(params, P)
        if (rec.multiplicity == q) == rec.special_flag:
            dichotomy = False
        if rec.special_flag:
            measured.add(rec.multiplicity)
            if rec.multiplicity != q + 1:
                special_q1 = False
    out = [_result("osculation_dichotomy", True, dichotomy,
                   "I(P) = q iff c^{-1}Tr(u)^2 not in F_q")]
    if params.p != 2:
        out.append(_result("special_multiplicity", True, special_q1,
                           "I(P)=q+1 if and only if c^{-1}Tr(u)^2 in F_q"))
    else:
        out.append(_result("special_multiplicity_char2", None,
                           sorted(measured),
                           "characteristic-2 special-point multiplicities, measured",
                           reported=True))
    return out


def check_frobenius(params, cfg):
    rng = random.Random(cfg.seed)
    pts = curve_mod.sample_points(params, cfg.samples, rng, level=4)
    on_curve = all(classic_mod.frobenius_checks(params, P).on_curve_image
                   for P in pts)
    results = [_result("frobenius_image_on_curve", True, on_curve,
                       "the image by the Frobenius map over F_{q^2} is also a point")]
    if subfield_member(params.c, 1):
        on_conic = all(classic_mod.frobenius_checks(params, P).on_conic_image
                       for P in pts)
        results.append(_result("frobenius_image_on_conic", True, on_conic,
                               "Frobenius non-classical with respect to conics"))
    return results


def check_z_representation(params, cfg):
    rep = classic_mod.z_representation(params)
    one_plus_c = (params.tower.one + params.c).i
    literal = rep.literal_variant_residual
    literal_const = (literal.coefficient((0, 0)).i
                     if set(literal.terms) <= {(0, 0)} else None)
    return [
        _result("z_identity", True, rep.identity_residual.is_zero(),
                "z0^q+z1^qX+z2^qY+z4^qXY equals the curve polynomial"),
        _result("z_literal_variant", one_plus_c, literal_const,
                "the 1+XY variant misses by the constant 1+c"),
    ]


def check_adjoint(params, cfg):
    q = params.q
    sys_ = adjoint_mod.adjoint_system(params)
    expected_monos = {(0, 0, q), (1, 0, q - 1), (0, 1, q - 1), (1, 1, q - 2)}
    basis_monos = set()
    split_ok = True
    for b in sys_.basis:
        basis_monos |= set(b.terms)
        try:
            _, conic = adjoint_mod.decompose_adjoint(b, q)
            split_ok &= adjoint_mod.conic_through_infinity(conic)
        except ValueError:
            split_ok = False
    div = adjoint_mod.divisor_check(params)
    return [
        _result("adjoint_dimension", 4, sys_.vector_dimension,
                "the adjoint system has vector dimension 4, l(G)=4"),
        _result("adjoint_basis", expected_monos, basis_monos,
                "basis X3^q, X1X3^{q-1}, X2X3^{q-1}, X1X2X3^{q-2}"),
        _result("adjoint_splitting", True, split_ok,
                "splits into the line at infinity counted (q-2) times and a conic"),
        _result("divisor_degrees", (2 * q, 2 * q * (q - 1), True),
                (div.deg_G, div.deg_D, div.b_is_zero),
                "deg|G| = 2q^2-2q(q-1) = 2q and B is the zero divisor"),
    ]


def check_space_model(params, cfg):
    q = params.q
    rep = model_mod.omega_prime_report(params)
    inj = model_mod.nonsingularity_check(params, level=2)
    N = cfg.precision_override or (3 * q)
    inf_ok = all(
        model_mod.space_order_sequence(
            params, model_mod.infinite_space_branch(params, place, N))
        == [0, 1, q, q + 1]
        for place in curve_mod.infinite_places(params)
    )
    results = [
        _result("omega_prime",
                (2 * q, True, True, False),
                (rep.union_size, rep.collinear1, rep.collinear2, rep.meet_on_model),
                "two collinear q-sets meeting at Z_inf=(0,0,1,0), off the model"),
        _result("tau_injective", True, inj,
                "different points are taken by tau to different points"),
        _result("infinity_order_sequences", True, inf_ok,
                "order sequence (0,1,q,q+1) at the infinity branches"),
    ]
    if q >= 5:
        rng = random.Random(cfg.seed)
        generic = curve_mod.sample_points(
            params, max(25, cfg.samples // 20), rng, level=4,
            predicate=lambda P: not classic_mod.is_special_point(params, P))
        gen_ok = all(
            model_mod.space_order_sequence(
                params, model_mod.affine_space_branch(params, P, N))
            == [0, 1, 2, q]
            for P in generic
        )
        results.append(_result("generic_order_sequence", True, gen_ok,
                               "non-classical with order sequence (0,1,2,q)"))
        rational = curve_mod.enumerate_points(params, 2)
        seqs = {tuple(model_mod.space_order_sequence(
            params, model_mod.affine_space_branch(params, P, N)))
            for P in rational}
        if params.p != 2:
            results.append(_result("special_order_sequence", {(0, 1, 2, q + 1)},
                                   seqs,
                                   "order sequence (0,1,2,q+1) at special points"))
        else:
            results.append(_result("special_order_sequence_char2", None,
                                   sorted(seqs),
                                   "characteristic-2 special-point sequences, measured",
                                   reported=True))
    return results


def check_group(params, cfg):
    q = params.q
    rep = aut_mod.closure_and_structure(params)
    invariant = all(aut_mod.symbolic_invariance(params, g) for g in rep.elements)
    orb = aut_mod.orbit_analysis(params, seed=cfg.seed)
    sample_pts = curve_mod.enumerate_points(params, 2)[: 4 * q]
    matrices = [model_mod.induced_space_matrix(params, g, validate_points=sample_pts[:4])
                for g in rep.elements]
    pattern_ok = all(
        model_mod.matrix_fixes_infinity_structure(params, g, m)
        for g, m in zip(rep.elements, matrices))
    pointset_ok = model_mod.pointset_invariant(params, matrices, level=2)
    fixed_match = ({(P.u.i, P.v.i) for P in orb.xi_fixed_points}
                   == {(P.u.i, P.v.i) for P in orb.xi_fixed_points_expected})
    return [
        _result("group_order", 2 * q * q * (q - 1), rep.order,
                "order 2q^2(q-1)"),
        _result("group_structure",
                (q * q, True, True, True, 2 * (q - 1), True),
                (rep.delta_order, rep.delta_normal, rep.delta_elementary_abelian,
                 rep.dihedral_relations, rep.dihedral_order, rep.semidirect_verified),
                "semidirect product of an elementary abelian group of order q^2 "
                "with a dihedral group of order 2(q-1)"),
        _result("group_invariance", True, invariant,
                "every group element preserves the curve polynomial exactly"),
        _result("orbit_sizes", sorted([2 * q, (q - 1) * q ** 2]), orb.orbit_sizes,
                "splits into two orbits, Omega_1 u Omega_2 and Sigma"),
        _result("sharp_transitivity", True, orb.sigma_sharply_transitive,
                "acts on Sigma as a sharply transitive permutation group"),
        _result("xi_fixed_points", True, fixed_match,
                "fixes each point P(a,a) with Tr(a)^2=c"),
        _result("matrix_pattern", True, pattern_ok,
                "induced matrices fix Z_inf and stabilize/swap the infinity lines"),
        _result("matrix_pointset", True, pointset_ok,
                "induced matrices leave the model pointset invariant"),
    ]


CHECKS = [
    ("point_count", check_point_count),
    ("genus", check_genus),
    ("branch_forms", check_branch_forms),
    ("osculation", check_osculation),
    ("frobenius", check_frobenius),
    ("z_representation", check_z_representation),
    ("adjoint", check_adjoint),
    ("space_model", check_space_model),
    ("group", check_group),
]


def _serialize(value):
    if isinstance(value, CheckResult):
        return {"id": value.id, "status": value.status,
                "expected": _serialize(value.expected),
                "observed": _serialize(value.observed),
                "claim": value.claim}
    if isinstance(value, (set, frozenset)):
        return sorted(_serialize(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_serialize(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _serialize(v) for k, v in value.items()}
    if hasattr(value, "i"):  # FieldElement
        return list(value.coefficients)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return repr(value)


def run_report(config: RunConfig) -> tuple[dict, int]:
    try:
        params = curve_mod.asm_curve(config.p, config.e, config.c_spec)
    except (ValueError, ArithmeticError) as exc:
        return {"error": str(exc)}, 2

    selected = CHECKS
    if config.checks:
        wanted = set(config.checks)
        unknown = wanted - {name for name, _ in CHECKS}
        if unknown:
            return {"error": f"unknown checks: {sorted(unknown)}"}, 2
        selected = [(n, f) for n, f in CHECKS if n in wanted]

    results = []
    timing = {}
    for name, fn in selected:
        t0 = time.monotonic()
        results.extend(fn(params, config))
        timing[name] = round(time.monotonic() - t0, 6)

    results.sort(key=lambda r: r.id)
    summary = {
        "pass": sum(r.status == "pass" for r in results),
        "fail": sum(r.status == "fail" for r in results),
        "reported": sum(r.status == "reported" for r in results),
    }
    report = {
        "params": {"p": config.p, "e": config.e, "q": params.q,
                   "c": list(params.c.coefficients)},
        "results": [_serialize(r) for r in results],
        "summary": summary,
        "seed": config.seed,
        "samples": config.samples,
        "version": __version__,
    }
    report["determinism_hash"] = determinism_hash(report)
    report["timing"] = timing
    code = 1 if summary["fail"] else 0
    return report, code


def determinism_hash(report: dict) -> str:
    stable = {k: v for k, v in report.items()
              if k not in ("timing", "determinism_hash")}
    blob = json.dumps(stable, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def render_markdown(report: dict) -> str:
    if "error" in report:
        return f"# verification failed\n\n{report['error']}\n"
    lines = [
        f"# ASM curve verification (p={report['params']['p']}, "
        f"e={report['params']['e']}, q={report['params']['q']})",
        "",
        "| check | status | expected | observed |",
        "|---|---|---|---|",
    ]
    for r in report["results"]:
        lines.append(f"| {r['id']} | {r['status']} | "
                     f"{r['expected']} | {r['observed']} |")
    s = report["summary"]
    lines += ["",
              f"pass {s['pass']}, fail {s['fail']}, reported {s['reported']}",
              f"determinism hash: `{report['determinism_hash']}`", ""]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="asm-verify",
        description="Verify the geometry of (X^q+X)(Y^q+Y)=c over F_{p^e} towers.")
    ap.add_argument("--p", type=int, required=True, help="prime characteristic")
    ap.add_argument("--e", type=int, default=1, help="exponent, q = p^e")
    ap.add_argument("--c", type=int, nargs="+", default=[1],
                    help="coefficients of c over the tower generator")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--precision", type=int, default=None)
    ap.add_argument("--format", choices=("json", "markdown"), default="json")
    ap.add_argument("--checks", type=str, default=None,
                    help="comma-separated subset of check groups")
    ap.add_argument("--out", type=str, default=None)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    cfg = RunConfig(
        p=ns.p, e=ns.e, c_spec=list(ns.c), seed=ns.seed, samples=ns.samples,
        precision_override=ns.precision, format=ns.format,
        checks=ns.checks.split(",") if ns.checks else None,
    )
    report, code = run_report(cfg)
    if code == 2:
        print(report.get("error", "invalid configuration"), file=sys.stderr)
        return 2
    if cfg.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = render_markdown(report)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

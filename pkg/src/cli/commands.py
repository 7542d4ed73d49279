"""
Subcommand handlers. Each takes the parsed arguments and the session and
returns a Report; failures of the input raise toolkit exceptions, which
the dispatcher maps to exit codes.
"""

import logging
import os
from typing import List, Optional, Sequence

from config import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK
from src.builders import (
    HopfExample, ake, cyclic_rep, degraded_pi, evaluation_rep, character_span_injectivity,
    find_element, function_algebra, group_algebra, group_from_name, is_projective_generating_family,
    pi_q, standard_comodule, symmetric_group_table, taft
)
from src.cli.report import Report, format_vector, matrix_data, matrix_lines
from src.data.interchange import (
    cocycle_from_document, comodules_from_document, comodules_to_document, grouplikes_to_document,
    hopf_from_document, hopf_to_document, load_hopf, load_representation, read_document,
    representation_from_document, representation_to_document, twist_from_document,
    vector_to_list, vectors_from_document, write_document
)
from src.data.session import SessionConfig
from src.field.cyclotomic import suggest_conductor
from src.field.parsing import parse_scalar
from src.hopf.algebra import is_commutative
from src.hopf.structure import HopfAlgebraData, is_cocommutative, tensor_hopf, validate
from src.image.hopf_image import hopf_image
from src.image.representation import Representation, tensor_rep, validate_rep
from src.linalg.matrix import Vector
from src.pointed.grouplikes import find_grouplikes, verify_grouplikes
from src.pointed.primitives import pointed_criterion, skew_primitives
from src.tannaka.comodule import Comodule
from src.tannaka.criteria import (
    level_two_criterion, tannaka_equality_check, truncated_fixedpoint_criterion
)
from src.twisting.cocycle import check_cocycle, cotwist_hopf
from src.twisting.twist import TWIST, check_pseudo_twist, twist_hopf
from src.utils.error_handling import ConfigurationException, DimensionMismatch, safe_execute


logger = logging.getLogger(__name__)


# Loading helpers

def _load_rep(args, session: SessionConfig, hopf: Optional[HopfAlgebraData] = None) -> Representation:
    return load_representation(args.rep, session, hopf)


def _load_comodules(path: str, host: HopfAlgebraData, session: SessionConfig) -> List[Comodule]:
    comodules = comodules_from_document(host, read_document(path), session, path)
    if not comodules:
        raise ConfigurationException(f"{path}: no comodules")
    return comodules


def _grouplike_set(path: str, host: HopfAlgebraData, session: SessionConfig):
    document = read_document(path)
    vectors = vectors_from_document(host, document, session, path)
    return verify_grouplikes(host, vectors, complete=bool(document.get("complete", True)))


def parse_vector(text: str, h: HopfAlgebraData) -> Vector:
    """A basis label, or comma-separated scalars in the canonical grammar."""
    if text in h.labels:
        return h.basis_vector(h.labels.index(text))
    parts = text.split(",")
    if len(parts) != h.dim:
        raise DimensionMismatch(f"vector {text!r} has {len(parts)} entries, expected {h.dim} "
                                f"(or one of the labels {', '.join(h.labels)})")
    return tuple(parse_scalar(p, h.ctx) for p in parts)


# Core commands

def cmd_validate(args, session: SessionConfig) -> Report:
    report = Report("validate")
    document = read_document(args.file)
    if "matrix" in document:
        r = representation_from_document(document, session, args.file, os.path.dirname(args.file))
        checks = [validate(r.source), validate_rep(r)]
    else:
        h = hopf_from_document(document, session, args.file)
        checks = [validate(h)]
        report.add("commutative", is_commutative(h.algebra))
        report.add("cocommutative", is_cocommutative(h))
    for check in checks:
        report.lines.extend(check.lines())
    report.data["reports"] = [check.to_dict() for check in checks]
    report.data["ok"] = all(check.ok for check in checks)
    report.exit_code = EXIT_OK if report.data["ok"] else EXIT_INPUT_ERROR
    return report


def cmd_hopf_image(args, session: SessionConfig) -> Report:
    report = Report("hopf-image")
    h = load_hopf(args.hopf, session)
    r = _load_rep(args, session, h)
    result = hopf_image(r)
    report.add("dim_H", h.dim, f"dim H = {h.dim}")
    report.add("dim_I", result.ideal.dim, f"dim I_pi = {result.ideal.dim}")
    report.add("dim_H_pi", result.dim, f"dim H_pi = {result.dim}")
    report.add("antipode_trace", list(result.closure.antipode_trace),
               f"antipode rounds: {' '.join(map(str, result.closure.antipode_trace))}")
    report.add("closure_trace", list(result.closure.trace),
               f"closure rounds: {' '.join(map(str, result.closure.trace))}")
    report.lines.append("projection p: H -> H_pi")
    report.lines.extend(matrix_lines(result.projection.matrix))
    report.data["projection"] = matrix_data(result.projection.matrix)
    report.document = hopf_to_document(result.image)
    return report


def cmd_inner_faithful(args, session: SessionConfig) -> Report:
    report = Report("inner-faithful")
    h = load_hopf(args.hopf, session)
    r = _load_rep(args, session, h)
    result = hopf_image(r)
    faithful = result.ideal.is_zero()
    report.add("dim_I", result.ideal.dim, f"dim I_pi = {result.ideal.dim}")
    report.add("dim_H_pi", result.dim, f"dim H_pi = {result.dim}")
    report.add("inner_faithful", faithful, f"inner faithful: {'yes' if faithful else 'no'}")
    report.exit_code = EXIT_OK if faithful else EXIT_NEGATIVE
    return report


def cmd_grouplikes(args, session: SessionConfig) -> Report:
    report = Report("grouplikes")
    h = load_hopf(args.hopf, session)
    candidates = []
    if args.candidates:
        candidates = vectors_from_document(h, read_document(args.candidates), session, args.candidates)
    gl = find_grouplikes(h, candidates)
    status = "complete" if gl.complete else "possibly incomplete"
    report.add("count", len(gl), f"group-likes: {len(gl)} ({status})")
    report.add("complete", gl.complete, "")
    rows = []
    for a, g in enumerate(gl.elements):
        order = gl.order_of(a)
        report.lines.append(f"  g{a}  order {order}  {format_vector(g)}")
        rows.append({"index": a, "order": order, "vector": vector_to_list(g)})
    report.data["grouplikes"] = rows
    if args.out:
        report.document = grouplikes_to_document(gl)
    return report


def cmd_skew_primitives(args, session: SessionConfig) -> Report:
    report = Report("skew-primitives")
    h = load_hopf(args.hopf, session)
    g = parse_vector(args.g, h)
    k = parse_vector(args.h, h)
    space = skew_primitives(h, g, k)
    report.add("dim", space.dim, f"dim P_(g,h) = {space.dim}")
    report.data["basis"] = [vector_to_list(v) for v in space.space.basis]
    for v in space.space.basis:
        report.lines.append(f"  {format_vector(v)}")
    return report


def cmd_pointed_criterion(args, session: SessionConfig) -> Report:
    report = Report("pointed-criterion")
    h = load_hopf(args.hopf, session)
    r = _load_rep(args, session, h)
    gl = _grouplike_set(args.grouplikes, h, session)
    verdict = pointed_criterion(r, gl, side=args.side)
    report.add("side", verdict.side, f"side: {verdict.side}")
    report.add("holds", verdict.holds,
               f"pi injective on skew-primitives: {'yes' if verdict.holds else 'no'}")
    if not verdict.holds:
        report.add("grouplike", verdict.grouplike, f"fails at group-like g{verdict.grouplike}")
        report.add("witness", format_vector(verdict.witness), f"witness: {format_vector(verdict.witness)}")
    report.exit_code = EXIT_OK if verdict.holds else EXIT_NEGATIVE
    return report


def cmd_twist(args, session: SessionConfig) -> Report:
    report = Report("twist")
    h = load_hopf(args.hopf, session)
    t = twist_from_document(h, read_document(args.twist), session, args.twist)
    verdict = check_pseudo_twist(t)
    report.add("classification", verdict.kind, f"classification: {verdict.kind}")
    if verdict.witness:
        report.add("witness", verdict.witness, f"first failing identity: {verdict.witness}")
    if verdict.kind == TWIST:
        report.document = hopf_to_document(twist_hopf(t))
    else:
        report.exit_code = EXIT_NEGATIVE
    return report


def cmd_cotwist(args, session: SessionConfig) -> Report:
    report = Report("cotwist")
    h = load_hopf(args.hopf, session)
    c = cocycle_from_document(h, read_document(args.cocycle), session, args.cocycle)
    verdict = check_cocycle(c)
    report.add("cocycle", verdict.holds, f"2-cocycle: {'yes' if verdict.holds else 'no'}")
    if verdict.holds:
        report.document = hopf_to_document(cotwist_hopf(c))
    else:
        report.add("failed", verdict.failed, f"failed: {verdict.failed}")
        report.add("witness", list(verdict.witness or ()), f"witness: {verdict.witness}")
        report.exit_code = EXIT_NEGATIVE
    return report


def cmd_tensor(args, session: SessionConfig) -> Report:
    report = Report("tensor")
    h = load_hopf(args.hopf1, session)
    l = load_hopf(args.hopf2, session)
    product = tensor_hopf(h, l)
    report.add("dim", product.dim, f"dim = {product.dim}")
    report.document = hopf_to_document(product)
    return report


def cmd_tensor_rep(args, session: SessionConfig) -> Report:
    report = Report("tensor-rep")
    r = load_representation(args.rep1, session)
    s = load_representation(args.rep2, session)
    product = tensor_rep(r, s)
    report.add("dim_source", product.source.dim, f"dim H (x) L = {product.source.dim}")
    report.add("dim_target", product.target.dim, f"dim A (x) B = {product.target.dim}")
    report.document = representation_to_document(product)
    return report


def cmd_pi_hom(args, session: SessionConfig) -> Report:
    report = Report("pi-hom")
    r = _load_rep(args, session)
    u = _load_comodules(args.comod1, r.source, session)[0]
    v = _load_comodules(args.comod2, r.source, session)[0]
    row = tannaka_equality_check(r, [(u, v)]).rows[0]
    report.add("dim_hom_H", row.dim_host, f"dim Hom_H(U, V) = {row.dim_host}")
    report.add("dim_hom_H_pi", row.dim_image, f"dim Hom_H_pi(U, V) = {row.dim_image}")
    report.add("dim_hom_pi", row.dim_pi, f"dim Hom(U_pi, V_pi) = {row.dim_pi}")
    report.add("image_equals_pi", row.image_equals_pi,
               f"Hom_H_pi = Hom(U_pi, V_pi): {'yes' if row.image_equals_pi else 'no'}")
    return report


def cmd_level_two(args, session: SessionConfig) -> Report:
    report = Report("thm92")
    r = _load_rep(args, session)
    gl = _grouplike_set(args.grouplikes, r.source, session)
    twodim = _load_comodules(args.comodules, r.source, session)
    result = level_two_criterion(r, gl, twodim)
    conditions = []
    for number, (name, passed, detail) in enumerate(result.conditions, start=1):
        suffix = f" ({detail})" if detail else ""
        report.lines.append(f"{number}. {name}: {'pass' if passed else 'FAIL'}{suffix}")
        conditions.append({"name": name, "passed": passed, "detail": detail})
    report.data["conditions"] = conditions
    report.add("holds", result.holds, f"all conditions hold: {'yes' if result.holds else 'no'}")
    report.add("engine_inner_faithful", result.engine_inner_faithful,
               f"engine: inner faithful = {result.engine_inner_faithful}")
    report.exit_code = EXIT_OK if result.holds else EXIT_NEGATIVE
    return report


def cmd_truncated(args, session: SessionConfig) -> Report:
    report = Report("truncated-criterion")
    r = _load_rep(args, session)
    u = _load_comodules(args.comod, r.source, session)[0]
    verdict = truncated_fixedpoint_criterion(r, u, args.max_len, True if args.self_dual else None)
    report.add("verdict", verdict.describe(), f"verdict: {verdict.describe()}")
    report.add("words_checked", verdict.words_checked, f"words checked: {verdict.words_checked}")
    report.add("faithful_comodule", verdict.faithful_comodule,
               f"coefficients generate H: {'yes' if verdict.faithful_comodule else 'no'}")
    if verdict.violated:
        report.exit_code = EXIT_NEGATIVE
    else:
        report.lines.append("no violation found; this does not prove inner faithfulness")
    return report


# Builders

def _emit_companions(args, report: Report, example: HopfExample, rep: Optional[Representation] = None,
                     comodules: Sequence[Comodule] = ()):
    h = example.hopf
    report.document = hopf_to_document(h)
    report.add("dim", h.dim, f"dim = {h.dim}")
    report.add("grouplikes", len(example.grouplikes),
               f"group-likes: {len(example.grouplikes)}"
               f"{'' if example.grouplikes.complete else ' (incomplete)'}")
    for note in example.notes:
        report.lines.append(f"note: {note}")
    comodules = tuple(comodules) or example.comodules
    report.add("comodules", [u.name for u in comodules],
               f"comodules: {', '.join(u.name for u in comodules) or 'none'}")
    if args.grouplikes_out:
        write_document(grouplikes_to_document(example.grouplikes), args.grouplikes_out)
    if args.comodules_out:
        write_document(comodules_to_document(h, comodules), args.comodules_out)
    if args.rep_out:
        if rep is None:
            raise ConfigurationException(f"builder {args.family} has no representation for these options")
        reference = None
        if args.out:
            reference = os.path.relpath(args.out, os.path.dirname(os.path.abspath(args.rep_out)))
        write_document(representation_to_document(rep, reference), args.rep_out)


def _require_roots(ctx, orders: Sequence[int]):
    """Fail early, suggesting a conductor, when the field lacks a requested root order."""
    missing = [n for n in orders if ctx.conductor % n]
    if missing:
        suggested = suggest_conductor([ctx.conductor] + list(orders))
        raise ConfigurationException(
            f"Q(zeta_{ctx.conductor}) lacks roots of order {missing}; try --conductor {suggested}"
        )


def _points(t, labels: Sequence[str]) -> List[int]:
    return [find_element(t, label) for label in labels]


def cmd_builder(args, session: SessionConfig) -> Report:
    report = Report(f"builder {args.family}")
    ctx = session.context
    rep = None
    comodules = ()
    if args.family == "group-algebra":
        t = group_from_name(args.group)
        example = group_algebra(t, ctx)
        if args.cyclic_power is not None:
            if len(t.cyclic_factors) != 1:
                raise ConfigurationException(f"--cyclic-power needs a cyclic group, got {t.name}")
            n = t.order
            _require_roots(ctx, [n])
            rep = cyclic_rep(n, ctx.root(n, args.cyclic_power), example)
    elif args.family in ("function-algebra", "sym"):
        t = symmetric_group_table(args.n) if args.family == "sym" else group_from_name(args.group)
        example = function_algebra(t, ctx)
        if t.elements and len(t.elements[0]) >= 3:
            comodules = (standard_comodule(example),)
        if t.characters:
            for name, values in t.characters:
                report.lines.append(f"character {name}: {' '.join(map(str, values))}")
        if args.points:
            points = _points(t, args.points)
            rep = evaluation_rep(example, points)
            generating = len(t.generated_subgroup(points)) == t.order
            report.add("generating", generating, f"points generate {t.name}: {'yes' if generating else 'no'}")
            report.add("projective_generating", is_projective_generating_family(t, points), "")
            ok, injective = safe_execute(character_span_injectivity, example, rep)
            if ok:
                report.add("character_injective", injective,
                           f"injective on characters: {'yes' if injective else 'no'}")
    elif args.family == "taft":
        _require_roots(ctx, [args.n])
        q = parse_scalar(args.q, ctx) if args.q else ctx.root(args.n)
        example = taft(args.n, q)
    else:
        example = ake(args.k, args.e, ctx)
        if args.degraded:
            rep = degraded_pi(example)
        elif args.q_order:
            _require_roots(ctx, [args.q_order])
            rep = pi_q(example, ctx.root(args.q_order))
    _emit_companions(args, report, example, rep, comodules)
    return report


COMMANDS = {
    "validate": cmd_validate,
    "hopf-image": cmd_hopf_image,
    "inner-faithful": cmd_inner_faithful,
    "grouplikes": cmd_grouplikes,
    "skew-primitives": cmd_skew_primitives,
    "pointed-criterion": cmd_pointed_criterion,
    "twist": cmd_twist,
    "cotwist": cmd_cotwist,
    "tensor": cmd_tensor,
    "tensor-rep": cmd_tensor_rep,
    "pi-hom": cmd_pi_hom,
    "thm92": cmd_level_two,
    "level-two-criterion": cmd_level_two,
    "truncated-criterion": cmd_truncated,
    "builder": cmd_builder,
}

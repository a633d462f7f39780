"""One report model per CLI command, rendered to text or JSON."""

from __future__ import annotations

import itertools
import json

from .algebra import ConcreteAlgebra
from .connections import ConnectionPartition
from .decomposition import (
    Decomposition,
    cross_products_zero,
    is_ideal,
    v_part_intersections,
)
from .linalg import Vec, fmt_vec, from_row
from .minimality import MinimalDecompositionReport, MinimalityVerdict
from .symbols import fmt_ext


def render_json(model: dict) -> str:
    return json.dumps(model, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _fmt_rows(alg: ConcreteAlgebra, rows, order) -> list[str]:
    return [fmt_vec(from_row(r, order), order) for r in rows]


def _fmt_product(alg: ConcreteAlgebra, vec: Vec) -> str:
    return fmt_vec(vec, alg.all_ids)


def classes_report(label: str, partition: ConnectionPartition) -> tuple[str, dict]:
    text = f"classes: {partition.describe()}\n"
    model = {"algebra": label, "classes": [sorted(c) for c in partition.classes]}
    return text, model


def decompose_report(label: str, alg: ConcreteAlgebra, decomp: Decomposition) -> tuple[str, dict]:
    lines = [f"algebra: {label}", f"classes: {decomp.partition.describe()}"]
    ideals_model = []
    ideals_ok = True
    for cls, ideal in zip(decomp.partition.classes, decomp.ideals):
        basis = _fmt_rows(alg, ideal.v_rows, alg.v_ids)
        lines.append(f"class {{{','.join(sorted(cls))}}}: V-dim {ideal.v_dim}, V-basis [{'; '.join(basis)}]")
        ok, witness = is_ideal(alg, ideal)
        ideals_ok &= ok
        ideals_model.append({
            "w_part": sorted(ideal.w_part),
            "v_dim": ideal.v_dim,
            "v_basis": basis,
            "v_rows": [[str(c) for c in row] for row in ideal.v_rows],
            "is_ideal": ok,
        })
    u_basis = _fmt_rows(alg, decomp.u_rows, alg.v_ids)
    lines.append(f"U: dim {decomp.u_dim}, basis [{'; '.join(u_basis)}]")
    inters = v_part_intersections(decomp)
    nonzero = {k: d for k, d in inters.items() if d}
    if nonzero:
        pretty = ", ".join(f"({a},{b})={d}" for (a, b), d in sorted(nonzero.items()))
        lines.append(f"v-part intersections: {pretty}")
    else:
        lines.append("v-part intersections: all zero")
    orth_ok = True
    for a, b in itertools.combinations(range(len(decomp.ideals)), 2):
        ok, _ = cross_products_zero(alg, decomp.ideals[a], decomp.ideals[b])
        orth_ok &= ok
    lines.append(f"checks: ideals {'ok' if ideals_ok else 'FAIL'}; orthogonality {'ok' if orth_ok else 'FAIL'}")
    model = {
        "algebra": label,
        "classes": [sorted(c) for c in decomp.partition.classes],
        "ideals": ideals_model,
        "u_dim": decomp.u_dim,
        "u_basis": u_basis,
        "v_part_intersections": {f"{a},{b}": d for (a, b), d in sorted(inters.items())},
        "checks": {"ideals_ok": ideals_ok, "orthogonality_ok": orth_ok},
    }
    return "\n".join(lines) + "\n", model


def center_report(label: str, alg: ConcreteAlgebra, rows) -> tuple[str, dict]:
    basis = _fmt_rows(alg, rows, alg.all_ids)
    text = f"center: dim {len(rows)}, basis [{'; '.join(basis)}]\n"
    model = {"algebra": label, "dim": len(rows), "basis": basis}
    return text, model


def tight_report(label: str, ok: bool, witness: str | None) -> tuple[str, dict]:
    text = "tight: true\n" if ok else f"tight: false (witness {witness})\n"
    return text, {"algebra": label, "tight": ok, "witness": witness}


def mu_qm_report(label: str, ok: bool, witness) -> tuple[str, dict]:
    if ok:
        return "mu-quasi-multiplicative: true\n", {"algebra": label, "mu_quasi_multiplicative": True}
    text = f"mu-quasi-multiplicative: false ({witness.describe()})\n"
    model = {
        "algebra": label,
        "mu_quasi_multiplicative": False,
        "witness": {
            "index": witness.index,
            "head": fmt_ext(witness.head),
            "tail": [fmt_ext(t) for t in witness.tail],
        },
    }
    return text, model


def _verdict_lines(alg: ConcreteAlgebra, tag: str, verdict: MinimalityVerdict) -> list[str]:
    lines = []
    if verdict.verdict == "hypotheses-not-met":
        lines.append(f"{tag}: hypotheses-not-met ({', '.join(verdict.failed_hypotheses)})")
        if verdict.mu_witness is not None:
            lines.append(f"  mu witness: {verdict.mu_witness.describe()}")
        if verdict.notes:
            lines.append(f"  note: {verdict.notes}")
    else:
        lines.append(f"{tag}: {verdict.verdict}")
        if verdict.witness_ideal is not None:
            lines.append(f"  witness: {verdict.witness_ideal.describe(alg)}")
        if verdict.notes:
            lines.append(f"  note: {verdict.notes}")
    return lines


def minimal_report(label: str, alg: ConcreteAlgebra,
                   theorem: MinimalityVerdict | None,
                   oracle: MinimalityVerdict | None,
                   oracle_error: str | None = None) -> tuple[str, dict, int]:
    lines = [f"minimal: {label}"]
    model: dict = {"algebra": label}
    verdicts = []
    for tag, verdict in (("theorem", theorem), ("oracle", oracle)):
        if verdict is None:
            continue
        lines.extend(_verdict_lines(alg, tag, verdict))
        entry = {"verdict": verdict.verdict}
        if verdict.failed_hypotheses:
            entry["failed_hypotheses"] = verdict.failed_hypotheses
        if verdict.witness_ideal is not None:
            entry["witness"] = {
                "w_part": sorted(verdict.witness_ideal.w_part),
                "v_basis": _fmt_rows(alg, verdict.witness_ideal.v_rows, alg.v_ids),
            }
        if verdict.notes:
            entry["notes"] = verdict.notes
        model[tag] = entry
        verdicts.append(verdict.verdict)
    if oracle_error:
        lines.append(f"oracle: skipped ({oracle_error})")
        model["oracle"] = {"verdict": "skipped", "reason": oracle_error}
    established = bool(verdicts) and all(v == "minimal" for v in verdicts)
    overall = "minimal" if established else ("not-minimal" if "not-minimal" in verdicts else "not-established")
    lines.append(f"verdict: {overall}")
    model["verdict"] = overall
    return "\n".join(lines) + "\n", model, 0 if established else 1


def minimal_decomposition_report(label: str, alg: ConcreteAlgebra,
                                 report: MinimalDecompositionReport) -> tuple[str, dict]:
    lines = [f"minimal decomposition: {label}"]
    model: dict = {"algebra": label, "status": report.status}
    if report.status != "ok":
        lines.append(f"hypotheses-not-met ({', '.join(report.failed_hypotheses)})")
        model["failed_hypotheses"] = report.failed_hypotheses
        return "\n".join(lines) + "\n", model
    lines.append(f"direct sum: {'yes' if report.sum_direct else 'NO'}")
    comps = []
    for comp in report.components:
        tag = "{" + ",".join(comp.cls) + "}"
        oracle = comp.oracle.verdict if comp.oracle else f"skipped ({comp.oracle_skipped})"
        lines.append(f"component {tag}: theorem {comp.theorem.verdict}, oracle {oracle}")
        comps.append({
            "class": list(comp.cls),
            "theorem": comp.theorem.verdict,
            "oracle": comp.oracle.verdict if comp.oracle else "skipped",
        })
    model["sum_direct"] = report.sum_direct
    model["components"] = comps
    return "\n".join(lines) + "\n", model


def identity_report(label: str, alg: ConcreteAlgebra, scheme_name: str, result) -> tuple[str, dict]:
    if result.ok:
        text = f"identity {scheme_name}: holds ({result.checked} tuples)\n"
        return text, {"algebra": label, "scheme": scheme_name, "ok": True, "checked": result.checked}
    first = result.first
    lines = [
        f"identity {scheme_name}: fails ({len(result.violations)} of {result.checked} tuples)",
        f"  first: {first.identity} at ({','.join(first.assignment)}): "
        f"lhs = {_fmt_product(alg, first.lhs)}, rhs = {_fmt_product(alg, first.rhs)}",
    ]
    model = {
        "algebra": label,
        "scheme": scheme_name,
        "ok": False,
        "checked": result.checked,
        "violations": [
            {
                "identity": v.identity,
                "assignment": list(v.assignment),
                "lhs": _fmt_product(alg, v.lhs),
                "rhs": _fmt_product(alg, v.rhs),
            }
            for v in result.violations
        ],
    }
    return "\n".join(lines) + "\n", model


def check_ideal_report(label: str, alg: ConcreteAlgebra, ok: bool, witness) -> tuple[str, dict]:
    if ok:
        return "ideal: true\n", {"algebra": label, "ideal": True}
    text = (f"ideal: false (sigma={witness.sigma} args=({', '.join(witness.args)}) "
            f"-> {_fmt_product(alg, witness.product)})\n")
    model = {
        "algebra": label,
        "ideal": False,
        "witness": {
            "sigma": list(witness.sigma),
            "args": list(witness.args),
            "product": _fmt_product(alg, witness.product),
        },
    }
    return text, model

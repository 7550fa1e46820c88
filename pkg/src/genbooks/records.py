"""Structured reports: one JSON object per line, keys sorted, versioned.

Every record carries ``schema`` (currently ``genbooks/1``) and ``kind``.
Graphs are graph6 strings and vertex lists are 0-based.  The human table
is rendered from the same records, with vertex lists shifted to 1-based.
Wall-clock timings are kept out of records so identical invocations give
byte-identical output.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Iterable, Optional

from .graph import Graph, VertexSet, serialize_graph6
from .lower_bound import BookBound, KmBound, LbParams, TrialStats
from .ramsey import ArrowingVerdict, RamseyCertificate
from .stability import StabilityConstants, StabilityResult

SCHEMA = "genbooks/1"

# record fields holding 0-based vertex lists
VERTEX_FIELDS = frozenset(
    {"base", "pages", "deleted", "witness_x", "witness_y", "clique", "a", "b", "coloring_classes"}
)


def _plain(value: Any) -> Any:
    if isinstance(value, Graph):
        return serialize_graph6(value)
    if isinstance(value, VertexSet):
        return value.to_list()
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, float):
        if math.isinf(value):
            return "-inf" if value < 0 else "inf"
        return float(repr(value))
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def record(kind: str, **fields: Any) -> dict[str, Any]:
    out = {"schema": SCHEMA, "kind": kind}
    out.update({k: _plain(v) for k, v in fields.items()})
    return out


def dumps(rec: dict[str, Any]) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def loads(line: str) -> dict[str, Any]:
    rec = json.loads(line)
    if rec.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {rec.get('schema')!r}")
    if "kind" not in rec:
        raise ValueError("record has no kind")
    return rec


def render_human(records: Iterable[dict[str, Any]]) -> str:
    blocks = []
    for rec in records:
        lines = [f"[{rec['kind']}]"]
        keys = sorted(k for k in rec if k not in ("schema", "kind"))
        width = max((len(k) for k in keys), default=0)
        for k in keys:
            v = rec[k]
            if k in VERTEX_FIELDS and isinstance(v, list):
                v = [x + 1 for x in v]
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True)
            lines.append(f"  {k.ljust(width)} : {v}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + ("\n" if blocks else "")


# -- domain objects -> records -------------------------------------------------


def constants_record(k: StabilityConstants) -> dict[str, Any]:
    fields: dict[str, Any] = dict(
        p=k.p,
        c0=k.c0,
        c=k.c,
        lower=k.lower,
        upper=k.upper,
        approx=k.approx,
        ratio_to_approx=k.c / k.approx,
        residual=k.residual,
        sandwich_holds=k.sandwich_holds,
        cube_root_inequality_holds=k.cube_root_inequality_at(k.c),
    )
    if k.p == 2:
        fields["upper_is_20_cubed_inverse"] = k.upper == 20.0**-3
    return record("constants", **fields)


def stability_record(res: StabilityResult, graph: Graph) -> dict[str, Any]:
    return record(
        "stability",
        graph=graph,
        n=graph.n,
        m=graph.edge_count,
        p=res.p,
        alpha=res.alpha,
        epsilon=res.epsilon,
        threshold=res.threshold,
        deleted=res.deleted,
        kept_order=res.kept_graph.n,
        kept_min_degree=res.kept_graph.min_degree(),
        edge_condition_met=res.edge_condition_met,
        alpha_admissible=res.alpha_admissible,
        clique_free=res.clique_free,
        hypothesis_met=res.hypothesis_met,
        size_bound_met=res.size_bound_met,
        degree_bound_met=res.degree_bound_met,
        p_chromatic="unchecked" if res.p_chromatic is None else res.p_chromatic,
    )


def arrowing_record(v: ArrowingVerdict) -> dict[str, Any]:
    return record(
        "arrowing",
        n=v.n,
        p=v.p,
        q=v.q,
        r=v.r,
        arrows=v.arrows,
        counterexample=v.counterexample,
        graphs_examined=v.graphs_examined,
    )


def certificate_records(cert: RamseyCertificate, n_cap: Optional[int] = None) -> list[dict[str, Any]]:
    head = record(
        "ramsey",
        p=cert.p,
        q=cert.q,
        r=cert.r,
        n_cap=n_cap,
        value=cert.value,
        formula=cert.formula,
        matches_formula=cert.matches_formula,
        witness=cert.witness,
        witness_order=cert.witness.n,
    )
    return [head] + [arrowing_record(v) for v in cert.search_log]


def lb_records(
    params: LbParams, km: KmBound, book: BookBound, stats: Optional[TrialStats], q_target: int
) -> list[dict[str, Any]]:
    out = [
        record(
            "lb-params",
            m=params.m,
            k=params.k,
            r=params.r,
            C=params.C,
            c=params.c,
            c_times_C_pow_r=params.c * params.C**params.r,
            N=params.N,
            edge_prob_complement=params.edge_prob_complement,
        ),
        record(
            "lb-bounds",
            km_value=km.value,
            km_log_value=km.log_value,
            km_weak_form=km.weak_form,
            km_log_weak_form=km.log_weak_form,
            book_value=book.value,
            book_log_value=book.log_value,
            last_factor=book.last_factor,
            last_factor_le_e_over_3=book.last_factor <= math.e / 3,
        ),
    ]
    if stats is not None:
        out.append(
            record(
                "lb-trials",
                q_target=q_target,
                trials=stats.trials,
                seed=stats.seed,
                clique_hits=stats.clique_hits,
                book_hits=stats.book_hits,
                witnesses=stats.witnesses,
                best_trial=stats.best_trial,
                best_witness=stats.best_witness,
            )
        )
    return out

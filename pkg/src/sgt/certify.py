"""Loop-certificate documents and from-scratch verification.

The verifier shares no code path with the construction: lengths are re-summed
from raw edge data, the rank is recomputed by an independent elimination
(Fractions, rightmost pivot columns first, rows in reverse order), and the
bound is re-derived from (b, n, total length).  A certificate embeds the
graph's content hash so it cannot be checked against the wrong graph.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Optional, Sequence

from .graph import (
    BasedLoop,
    GraphError,
    MetricGraph,
    content_hash,
    format_length,
    parse_length,
)
from .loops import LENGTH_TOLERANCE, LoopCertificate

CERTIFICATE_FORMAT = "sgt-loop-certificate/1"


def certificate_document(
    g: MetricGraph, cert: LoopCertificate, metadata: Optional[dict] = None
) -> str:
    doc = {
        "format": CERTIFICATE_FORMAT,
        "graph_sha256": content_hash(g),
        "base": cert.base,
        "n": cert.n,
        "branch": cert.branch,
        "bound": cert.bound,
        "rank": cert.rank_certificate.rank,
        "pivot_edges": list(cert.rank_certificate.pivot_edges),
        "loops": [
            {
                "steps": [[eid, 1 if fwd else -1] for eid, fwd in lp.steps],
                "length": format_length(lp.length),
                "length_float": float(lp.length),
            }
            for lp in cert.loops
        ],
    }
    if cert.branch == "clustered":
        doc["cluster_index"] = cert.cluster_index
        doc["threshold"] = format_length(cert.threshold)
    if metadata:
        doc["metadata"] = metadata
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def parse_certificate(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed certificate document: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != CERTIFICATE_FORMAT:
        raise GraphError("not a loop-certificate document")
    return doc


def _independent_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Gaussian elimination over Q, pivoting right-to-left on reversed rows."""
    rows = [[Fraction(x) for x in vec] for vec in reversed(list(vectors))]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols - 1, -1, -1):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] / prow[col]
                for c in range(ncols):
                    rows[r][c] -= f * prow[c]
        rank += 1
    return rank


def verify_certificate(g: MetricGraph, doc: dict) -> tuple[bool, list[str]]:
    """Re-verify every claim in a certificate document against the graph.

    Returns (ok, list of failure reasons); an empty list means the
    certificate is sound.
    """
    reasons: list[str] = []
    if doc.get("graph_sha256") != content_hash(g):
        return False, ["graph hash mismatch: certificate belongs to a different graph"]
    b = g.betti()
    n = doc["n"]
    total = g.total_length()
    if not (g.is_connected and b >= 2 and 1 <= n <= b):
        reasons.append("graph/certificate out of contract (connectivity, b or n)")
        return False, reasons
    expected_bound = 24.0 * (math.log(b) + n) * float(total / b)
    if abs(doc["bound"] - expected_bound) > 1e-9 * max(1.0, expected_bound):
        reasons.append(
            f"stated bound {doc['bound']} disagrees with recomputed {expected_bound}"
        )
    base = doc["base"]
    vectors = []
    if len(doc["loops"]) != n:
        reasons.append(f"certificate carries {len(doc['loops'])} loops, expected {n}")
    for i, entry in enumerate(doc["loops"]):
        steps = tuple((eid, sign > 0) for eid, sign in entry["steps"])
        try:
            seq = g.walk_vertices(base, steps)
        except GraphError as exc:
            reasons.append(f"loop {i}: {exc}")
            continue
        if seq[-1] != base:
            reasons.append(f"loop {i} is not closed at the base")
            continue
        length = g.walk_length(steps)
        if length != parse_length(entry["length"]):
            reasons.append(f"loop {i}: stated length {entry['length']} != re-summed {length}")
        if float(length) > doc["bound"] + LENGTH_TOLERANCE:
            reasons.append(f"loop {i}: length {float(length)} exceeds bound {doc['bound']}")
        coeffs = [0] * len(g.edges)
        for eid, fwd in steps:
            coeffs[eid] += 1 if fwd else -1
        vectors.append(coeffs)
    if len(vectors) == n:
        recomputed = _independent_rank(vectors)
        if recomputed != n:
            reasons.append(f"recomputed rank {recomputed} != n = {n}")
        if doc["rank"] != n:
            reasons.append(f"stated rank {doc['rank']} != n = {n}")
    return not reasons, reasons

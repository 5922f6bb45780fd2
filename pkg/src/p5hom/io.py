"""File formats: graph6, the JSON edge-list object, and witness JSON.

Graph input autodetects between a JSON object {"n": ..., "edges":
[[u,v], ...]} and a graph6 line.  Induced subgraphs are emitted as the
same JSON plus a "labels" array mapping new indices back to the parent
graph.  Witnesses serialize to {"kind": ..., ...} and round-trip through
witness_from_json for independent re-verification.
"""

from __future__ import annotations

import json

from . import cotree
from .graph import Graph, PairWitness, bits, mask_of
from .witness import (
    CographWitness,
    F4Witness,
    HomWitness,
    P4Witness,
    P5Witness,
    Witness,
)

_G6_MAX = 258047


def graph6_encode(g: Graph) -> str:
    if g.n > _G6_MAX:
        raise ValueError(f"graph6 writer supports n <= {_G6_MAX}")
    out: list[int] = []
    if g.n <= 62:
        out.append(g.n + 63)
    else:
        out.append(126)
        out.extend(((g.n >> shift) & 63) + 63 for shift in (12, 6, 0))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return "".join(chr(c) for c in out)


def graph6_decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("invalid graph6 characters")
    if not data:
        raise ValueError("empty graph6 line")
    if data[0] == 63:  # 126 - 63
        if len(data) < 4:
            raise ValueError("truncated graph6 size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise ValueError("truncated graph6 body")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            group, offset = divmod(k, 6)
            if body[group] >> (5 - offset) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def graph_to_json(g: Graph, labels: tuple[int, ...] | None = None) -> dict:
    out: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if labels is not None:
        out["labels"] = list(labels)
    return out


def graph_from_json(data: dict) -> Graph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('expected {"n": int, "edges": [[u,v], ...]}')
    return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def load_graph_text(text: str) -> Graph:
    """Autodetect a JSON edge-list object or a graph6 line."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(stripped))
    first = stripped.splitlines()[0] if stripped else ""
    return graph6_decode(first)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return load_graph_text(fh.read())


def witness_to_json(w: Witness) -> dict:
    if isinstance(w, P5Witness):
        return {"kind": "p5", "vertices": list(w.vertices)}
    if isinstance(w, P4Witness):
        return {"kind": "p4", "vertices": list(w.vertices)}
    if isinstance(w, F4Witness):
        return {"kind": "f4", "vertices": list(w.vertices)}
    if isinstance(w, HomWitness):
        return {"kind": w.kind, "vertices": sorted(bits(w.members))}
    if isinstance(w, CographWitness):
        return {
            "kind": "cograph",
            "vertices": sorted(bits(w.members)),
            "cotree": cotree.to_json(w.tree),
        }
    if isinstance(w, PairWitness):
        return {
            "kind": "pair",
            "color": w.color,
            "left": sorted(bits(w.left)),
            "right": sorted(bits(w.right)),
        }
    raise TypeError(f"unknown witness {type(w).__name__}")


def witness_from_json(data: dict) -> Witness:
    kind = data.get("kind")
    if kind == "p5":
        return P5Witness(tuple(data["vertices"]))
    if kind == "p4":
        return P4Witness(tuple(data["vertices"]))
    if kind == "f4":
        return F4Witness(tuple(data["vertices"]))
    if kind in ("clique", "independent"):
        return HomWitness(members=mask_of(data["vertices"]), kind=kind)
    if kind == "cograph":
        return CographWitness(
            members=mask_of(data["vertices"]), tree=cotree.from_json(data["cotree"])
        )
    if kind == "pair":
        return PairWitness(
            left=mask_of(data["left"]),
            right=mask_of(data["right"]),
            color=data["color"],
        )
    raise ValueError(f"unknown witness kind {kind!r}")

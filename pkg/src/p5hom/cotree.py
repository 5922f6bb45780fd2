"""Canonical cotrees: the certificate format for cographs.

A cotree is either a leaf (a plain vertex label, int) or an internal
node ``(op, children)`` with ``op`` one of "union" / "join" and at least
two children.  Canonical form: no child shares its parent's op, no
internal node has fewer than two children, and children are sorted by
their smallest leaf.  Two canonical cotrees are equal iff they realize
the same labelled cograph, which is what golden tests compare.
"""

from __future__ import annotations

from typing import Iterator, Union

from .graph import Graph, mask_of

UNION = "union"
JOIN = "join"

CotreeNode = Union[int, tuple]  # leaf, or (op, tuple-of-children)


def is_leaf(t: CotreeNode) -> bool:
    return isinstance(t, int)


def node(op: str, children: list) -> CotreeNode:
    """Build a canonical internal node, splicing same-op children."""
    if op not in (UNION, JOIN):
        raise ValueError(f"bad cotree op {op!r}")
    flat: list[CotreeNode] = []
    for ch in children:
        if not is_leaf(ch) and ch[0] == op:
            flat.extend(ch[1])
        else:
            flat.append(ch)
    if not flat:
        raise ValueError("cotree node needs children")
    if len(flat) == 1:
        return flat[0]
    flat.sort(key=min_leaf)
    return (op, tuple(flat))


def min_leaf(t: CotreeNode) -> int:
    while not is_leaf(t):
        t = t[1][0]
    return t


def leaves(t: CotreeNode) -> Iterator[int]:
    if is_leaf(t):
        yield t
        return
    for ch in t[1]:
        yield from leaves(ch)


def leaf_mask(t: CotreeNode) -> int:
    return mask_of(leaves(t))


def order(t: CotreeNode) -> int:
    return 1 if is_leaf(t) else sum(order(ch) for ch in t[1])


def is_canonical(t: CotreeNode) -> bool:
    if is_leaf(t):
        return True
    op, children = t
    if len(children) < 2:
        return False
    if any(not is_leaf(ch) and ch[0] == op for ch in children):
        return False
    if [min_leaf(ch) for ch in children] != sorted(min_leaf(ch) for ch in children):
        return False
    return all(is_canonical(ch) for ch in children)


def relabel(t: CotreeNode, mapping: dict[int, int]) -> CotreeNode:
    if is_leaf(t):
        return mapping[t]
    return node(t[0], [relabel(ch, mapping) for ch in t[1]])


def substitute_leaves(t: CotreeNode, inner: dict[int, CotreeNode]) -> CotreeNode:
    """Replace each leaf by a whole cotree (used for bucketed combining)."""
    if is_leaf(t):
        return inner.get(t, t)
    return node(t[0], [substitute_leaves(ch, inner) for ch in t[1]])


def realize(t: CotreeNode) -> Graph:
    """Graph the cotree denotes, on its leaf labels compressed to 0..k-1.

    Leaves are renumbered in increasing label order, matching the label
    convention of ``graph.induced``, so a witness checks out via
    ``realize(cotree) == induced(g, members)[0]``.
    """
    labels = sorted(leaves(t))
    if len(labels) != len(set(labels)):
        raise ValueError("duplicate leaf labels")
    index = {old: i for i, old in enumerate(labels)}
    rows = [0] * len(labels)

    def walk(sub: CotreeNode) -> int:
        if is_leaf(sub):
            return 1 << index[sub]
        op, children = sub
        groups = [walk(ch) for ch in children]
        union = 0
        for grp in groups:
            union |= grp
        if op == JOIN:
            for grp in groups:
                rest = union & ~grp
                m = grp
                while m:
                    low = m & -m
                    rows[low.bit_length() - 1] |= rest
                    m ^= low
        return union

    walk(t)
    return Graph(len(labels), rows)


def to_json(t: CotreeNode):
    if is_leaf(t):
        return t
    return [t[0]] + [to_json(ch) for ch in t[1]]


def from_json(data) -> CotreeNode:
    if isinstance(data, int):
        return data
    if isinstance(data, list) and len(data) >= 3 and data[0] in (UNION, JOIN):
        return node(data[0], [from_json(ch) for ch in data[1:]])
    raise ValueError(f"malformed cotree json: {data!r}")

"""Persistent vertex sequences with O(1) concatenation, lazy flip, and
single-vertex substitution.

The Pareto drawers splice partial embeddings into each other thousands of
times; ropes keep every splice O(1) and defer the flattening to one final
pass at the root.

Node encodings (plain tuples, cheap to build and pickle):

    ("one", v)                      a single vertex
    ("cat", (r1, r2, ...))          concatenation, left to right
    ("flip", r)                     lazy reversal
    ("blk", order, repl, skip)      a block order; each vertex v is emitted
                                    as repl[v] when present, dropped when
                                    v == skip
"""

from __future__ import annotations


def one(v):
    return ("one", v)


def cat(*ropes):
    return ("cat", tuple(ropes))


def flip(rope):
    if rope[0] == "flip":
        return rope[1]
    return ("flip", rope)


def blk(order, repl=None, skip=None):
    return ("blk", tuple(order), repl, skip)


def skipping(rope, vertex):
    """A copy of a block rope that drops ``vertex`` from its own order.

    Used when splicing a child embedding whose first vertex is already
    present in the host order.  Only valid on (possibly flipped) blk nodes.
    """
    if rope[0] == "flip":
        return ("flip", skipping(rope[1], vertex))
    if rope[0] != "blk":
        raise ValueError("can only skip inside a block rope")
    _, order, repl, skip = rope
    if skip is not None and skip != vertex:
        raise ValueError("rope already skips a different vertex")
    return ("blk", order, repl, vertex)


def materialize(rope):
    """Flatten a rope into the list of vertices it denotes."""
    out = []
    stack = [(rope, False)]
    while stack:
        node, flipped = stack.pop()
        kind = node[0]
        if kind == "one":
            out.append(node[1])
        elif kind == "flip":
            stack.append((node[1], not flipped))
        elif kind == "cat":
            parts = node[1]
            if flipped:
                stack.extend((p, True) for p in parts)
            else:
                stack.extend((p, False) for p in reversed(parts))
        else:  # blk
            _, order, repl, skip = node
            seq = reversed(order) if flipped else order
            if repl:
                frames = []
                for v in seq:
                    if v == skip:
                        continue
                    r = repl.get(v)
                    frames.append((r, flipped) if r is not None else v)
                for item in reversed(frames):
                    stack.append(item if isinstance(item, tuple) else (("one", item), False))
            else:
                out.extend(v for v in seq if v != skip)
    return out

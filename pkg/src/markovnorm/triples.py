"""Exact arithmetic on Markov triples and the binary tree that generates them.

A Markov triple is a positive integer solution of x^2 + y^2 + z^2 = 3xyz.
Each coordinate can be flipped to the other root of its quadratic, which
organises all solutions into a tree: (1,1,1) -> (1,1,2) -> (1,2,5) is a
singular spine (the flips there coincide), and below (1,2,5) every triple
has exactly two distinct children.  The companion form a^2 + b^2 + c^2 = abc
is the same tree scaled by 3.
"""

from __future__ import annotations

import logging
from typing import Iterator, NamedTuple

from .errors import NotMarkovError, OutOfRangeError

log = logging.getLogger(__name__)

ROOT = (1, 1, 1)
SPINE = ((1, 1, 1), (1, 1, 2))
BINARY_ROOT = (1, 2, 5)


def cubic_defect(x: int, y: int, z: int) -> int:
    """x^2 + y^2 + z^2 - 3xyz; zero exactly on Markov triples."""
    return x * x + y * y + z * z - 3 * x * y * z


def kappa(a: int, b: int, c: int) -> int:
    """a^2 + b^2 + c^2 - abc; zero exactly on tripled Markov triples."""
    return a * a + b * b + c * c - a * b * c


def is_markov(t) -> bool:
    """True when t is a positive integer triple with cubic_defect == 0."""
    if len(t) != 3:
        return False
    x, y, z = t
    ok_types = all(isinstance(n, int) and n > 0 for n in (x, y, z))
    return ok_types and cubic_defect(x, y, z) == 0


def is_kappa_triple(t) -> bool:
    """True when t is a positive integer triple with kappa == 0."""
    if len(t) != 3:
        return False
    a, b, c = t
    ok_types = all(isinstance(n, int) and n > 0 for n in (a, b, c))
    return ok_types and kappa(a, b, c) == 0


def vieta_flip(t, position: int):
    """Replace coordinate ``position`` (1-based) by 3*(product of the others) - it.

    The result is again a Markov triple; applying the same flip twice
    returns the input.
    """
    if not is_markov(t):
        raise NotMarkovError(f"not a Markov triple: {t!r}")
    if position not in (1, 2, 3):
        raise OutOfRangeError(f"position must be 1, 2 or 3, got {position!r}")
    x, y, z = t
    if position == 1:
        return (3 * y * z - x, y, z)
    if position == 2:
        return (x, 3 * x * z - y, z)
    return (x, y, 3 * x * y - z)


def kappa_flip(t, position: int):
    """Replace coordinate ``position`` (1-based) by (product of the others) - it.

    Same tree as vieta_flip after scaling by 3: kappa_flip(3t) == 3*vieta_flip(t).
    """
    if not is_kappa_triple(t):
        raise NotMarkovError(f"not a zero of the kappa form: {t!r}")
    if position not in (1, 2, 3):
        raise OutOfRangeError(f"position must be 1, 2 or 3, got {position!r}")
    a, b, c = t
    if position == 1:
        return (b * c - a, b, c)
    if position == 2:
        return (a, a * c - b, c)
    return (a, b, a * b - c)


class OrderedTriple(NamedTuple):
    small: int
    mid: int
    max: int


def as_ordered(t) -> OrderedTriple:
    """Sort a Markov triple ascending.

    Repeated entries only occur on the spine triples (1,1,1) and (1,1,2);
    a repeat anywhere else would contradict uniqueness of the tree labels,
    so it is logged loudly rather than silently ordered.
    """
    if not is_markov(t):
        raise NotMarkovError(f"not a Markov triple: {t!r}")
    s = OrderedTriple(*sorted(t))
    if len(set(s)) < 3 and s not in SPINE:
        log.error("unexpected repeated entry in Markov triple %r", s)
    return s


def _flip_max(o: OrderedTriple) -> OrderedTriple:
    """Parent of an ordered triple: flip the largest coordinate down."""
    d = 3 * o.small * o.mid - o.max
    return OrderedTriple(*sorted((o.small, o.mid, d)))


def reduction_chain(t) -> list[OrderedTriple]:
    """Ordered triples visited while flipping the max down to (1,1,1).

    Every step strictly decreases the max because each ordered non-(1,1,1)
    triple satisfies 3*small*mid < 2*max.
    """
    o = as_ordered(t)
    chain = [o]
    while o != ROOT:
        assert o == (1, 1, 2) or 3 * o.small * o.mid < 2 * o.max, o
        o = _flip_max(o)
        chain.append(o)
    return chain


def _oriented_children(node):
    """Children of an internal node carried as (u, v, w) = (kept-left, kept-right, mediant)."""
    u, v, w = node
    return (u, w, 3 * u * w - v), (w, v, 3 * v * w - u)


def _orient(target: OrderedTriple):
    """Walk the oriented tree from (1,2,5) down to ``target``.

    Returns (letters, node) where letters are the L/R choices below the
    binary root and node is the oriented form of ``target``.
    """
    chain = reduction_chain(target)
    if OrderedTriple(*BINARY_ROOT) not in chain:
        raise NotMarkovError(f"triple {target!r} does not reduce through (1,2,5)")
    descent = list(reversed(chain[: chain.index(OrderedTriple(*BINARY_ROOT)) + 1]))
    node = BINARY_ROOT
    letters = []
    for step in descent[1:]:
        left, right = _oriented_children(node)
        if tuple(sorted(left)) == step:
            node, letter = left, "L"
        elif tuple(sorted(right)) == step:
            node, letter = right, "R"
        else:
            raise NotMarkovError(f"reduction step {step!r} is not a child of {node!r}")
        letters.append(letter)
    return letters, node


def reduce_to_root(t) -> str:
    """Flip sequence carrying t back to (1,1,1), one letter per flip.

    Letters are the L/R labels of the corresponding tree edges, read from
    the root; on the spine the two flips coincide and are written 'L'.
    Replaying the word from (1,1,1) with ``children`` regenerates t up to
    coordinate order.
    """
    o = as_ordered(t)
    if o == ROOT:
        return ""
    if o == (1, 1, 2):
        return "L"
    letters, _ = _orient(o)
    return "LL" + "".join(letters)


def children(t) -> tuple[OrderedTriple, ...]:
    """Tree children of an ordered triple, left child first.

    Below (1,2,5) the two children flip the two smaller coordinates; which
    flip is the left child is fixed by the Farey labels of the tree (the
    left child keeps the left endpoint value of the node's Farey interval).
    On the spine both flips agree and the single child is returned once.
    """
    o = as_ordered(t)
    if o == ROOT:
        return (OrderedTriple(1, 1, 2),)
    if o == (1, 1, 2):
        return (OrderedTriple(1, 2, 5),)
    _, node = _orient(o)
    left, right = _oriented_children(node)
    return (OrderedTriple(*sorted(left)), OrderedTriple(*sorted(right)))


def enumerate_tree(depth: int) -> Iterator[tuple[str, OrderedTriple]]:
    """Yield (path, triple) for every node with path length <= depth.

    Level d holds 2^d nodes; levels are emitted in order and left-to-right
    within a level, starting from ("", (1,2,5)).  Entries grow roughly
    doubly exponentially along balanced paths, so deep levels are huge.
    """
    if depth < 0:
        raise OutOfRangeError(f"depth must be >= 0, got {depth!r}")
    level = [("", BINARY_ROOT)]
    for d in range(depth + 1):
        for path, node in level:
            yield path, OrderedTriple(*sorted(node))
        if d == depth:
            return
        nxt = []
        for path, node in level:
            left, right = _oriented_children(node)
            nxt.append((path + "L", left))
            nxt.append((path + "R", right))
        level = nxt

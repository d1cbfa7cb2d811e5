"""Ready-made Majid bimodule actions on cyclic-group Hopf quivers.

For Z_n with one arrow per vertex (ramification concentrated on the class of
a single power g^c with multiplicity one), an action is determined by its
generator seeds

    g . a_i = x_i * a_(i+1),      a_i . g = y_i * a_(i+1),

and the quasi-associativity relations propagate the seeds to the action of
every power of g.  The propagation closes up (action of g^n = identity) only
for compatible seeds; `cyclic_action_from_seeds` raises otherwise.  The
classical Taft-type data is the constant-seed case with trivial cocycle.
"""

from __future__ import annotations

from .cyclotomic import FieldContext, Scalar
from .groups import Cocycle3
from .majid import BimoduleAction
from .pathcoalg import Element
from .quiver import HopfQuiver


def _cyclic_layout(quiver: HopfQuiver) -> tuple[int, int, list[int]]:
    """Return (n, c, arrow index by source) for a one-arrow-per-vertex
    cyclic-group quiver; raise if the quiver has a different shape."""
    group = quiver.group
    n = group.order
    if any(group.mul(i, j) != (i + j) % n for i in range(n) for j in range(n)):
        raise ValueError("quiver group is not the standard cyclic table")
    if len(quiver.arrows) != n:
        raise ValueError("expected exactly one arrow per vertex")
    by_source = [-1] * n
    cs = set()
    for a in quiver.arrows:
        if by_source[a.source] != -1:
            raise ValueError("expected exactly one arrow per vertex")
        by_source[a.source] = a.index
        cs.add(a.class_elt)
    if len(cs) != 1:
        raise ValueError("expected a single ramified class")
    return n, cs.pop(), by_source


def cyclic_action_from_seeds(
    quiver: HopfQuiver,
    phi: Cocycle3,
    left_seeds: list[Scalar],
    right_seeds: list[Scalar],
) -> BimoduleAction:
    """Build full action tables on a Z_n one-class quiver from generator seeds.

    left_seeds[i] scales g . a_i and right_seeds[i] scales a_i . g.  The
    remaining powers follow from the quasi-associativity recursions

        lam(j+1, i) = x_i * lam(j, i+1) * Phi(j, 1, i)   / Phi(j, 1, c+i)
        rho(j+1, i) = rho(j, i) * y_(i+j) * Phi(c+i, j, 1) / Phi(i, j, 1)

    (indices mod n; c is the ramified power).  Raises ValueError when the
    recursion fails to close at j = n, i.e. the seeds admit no action.
    """
    ctx = phi.ctx
    n, c, by_source = _cyclic_layout(quiver)
    if len(left_seeds) != n or len(right_seeds) != n:
        raise ValueError(f"need exactly {n} seeds per side")
    one = ctx.one()

    lam = [[one] * n, list(left_seeds)]
    for j in range(1, n):
        prev = lam[j]
        lam.append([
            left_seeds[i] * prev[(i + 1) % n] * phi(j, 1, i) / phi(j, 1, (c + i) % n)
            for i in range(n)
        ])
    if any(v != one for v in lam[n]):
        raise ValueError("left seeds do not close up over the full cycle")

    rho = [[one] * n, list(right_seeds)]
    for j in range(1, n):
        prev = rho[j]
        rho.append([
            prev[i] * right_seeds[(i + j) % n] * phi((c + i) % n, j, 1) / phi(i, j, 1)
            for i in range(n)
        ])
    if any(v != one for v in rho[n]):
        raise ValueError("right seeds do not close up over the full cycle")

    left = {}
    right = {}
    for j in range(n):
        for i in range(n):
            a = by_source[i]
            shifted = quiver.arrow_path(by_source[(i + j) % n])
            left[(j, a)] = Element(ctx, {shifted: lam[j][i]})
            right[(a, j)] = Element(ctx, {shifted: rho[j][i]})
    return BimoduleAction(ctx, quiver, left, right)


def taft_action(quiver: HopfQuiver, phi: Cocycle3, q: Scalar) -> BimoduleAction:
    """The Taft-type Hopf bimodule on a cyclic quiver with trivial cocycle:
    g^j . a_i = q^j a_(i+j) and a_i . g^j = a_(i+j).  Needs q^n = 1."""
    n, _, _ = _cyclic_layout(quiver)
    one = phi.ctx.one()
    return cyclic_action_from_seeds(quiver, phi, [q] * n, [one] * n)


def trivial_loop_action(quiver: HopfQuiver, ctx: FieldContext) -> BimoduleAction:
    """The identity-only action on a one-vertex (multi-loop) quiver."""
    if quiver.group.order != 1:
        raise ValueError("trivial loop action needs a one-vertex quiver")
    one = ctx.one()
    left = {}
    right = {}
    for a in quiver.arrows:
        val = Element(ctx, {quiver.arrow_path(a.index): one})
        left[(0, a.index)] = val
        right[(a.index, 0)] = val
    return BimoduleAction(ctx, quiver, left, right)


def translation_loop_action(quiver: HopfQuiver, ctx: FieldContext) -> BimoduleAction:
    """On a quiver ramified only at the identity class (one loop per vertex,
    over any group, abelian or not), the actions that translate loops along
    the group: g . loop_x = loop_(gx) and loop_x . g = loop_(xg).  A Hopf
    bimodule for the trivial cocycle."""
    group = quiver.group
    by_vertex = {}
    for a in quiver.arrows:
        if a.source != a.target or a.slot != 0:
            raise ValueError("expected exactly one loop per vertex")
        by_vertex[a.source] = a.index
    if len(by_vertex) != group.order:
        raise ValueError("expected exactly one loop per vertex")
    one = ctx.one()
    left = {}
    right = {}
    for g in group.elements():
        for x, idx in by_vertex.items():
            left[(g, idx)] = Element(
                ctx, {quiver.arrow_path(by_vertex[group.mul(g, x)]): one}
            )
            right[(idx, g)] = Element(
                ctx, {quiver.arrow_path(by_vertex[group.mul(x, g)]): one}
            )
    return BimoduleAction(ctx, quiver, left, right)

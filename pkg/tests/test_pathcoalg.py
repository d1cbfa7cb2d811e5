"""Path coalgebra: comultiplication splittings, counit, tensor powers.

The iterated comultiplication is cross-checked against a hand-written
oracle that expands Delta of each component and interleaves directly.
"""

from hypothesis import given, settings
from hypothesis import strategies as st

from hopfquiver import (
    Element,
    RamificationData,
    TensorElement,
    comultiply,
    counit,
    cyclic_group,
    field_context,
    hopf_quiver,
    iterated_comultiply,
    paths_up_to,
    symmetric_group,
)
from hopfquiver.pathcoalg import (
    element_from_json,
    graded_component,
    path_splits,
)


def z2_quiver():
    g = cyclic_group(2)
    return hopf_quiver(g, RamificationData.from_class_reps(g, [(1, 1)]))


def test_comultiply_vertex():
    ctx = field_context(1)
    q = z2_quiver()
    v = q.vertex_path(1)
    assert comultiply(ctx, q, v) == TensorElement.of(ctx, (v, v))


def test_comultiply_arrow():
    ctx = field_context(1)
    q = z2_quiver()
    a = q.arrow_path(0)
    t, s = q.vertex_path(1), q.vertex_path(0)
    expected = TensorElement(ctx, 2, {(t, a): ctx.one(), (a, s): ctx.one()})
    assert comultiply(ctx, q, a) == expected


def test_comultiply_length_two():
    ctx = field_context(1)
    q = z2_quiver()
    p = q.path(0, [0, 1])  # e -> g -> e
    t, s = q.vertex_path(0), q.vertex_path(0)
    a01 = q.arrow_path(0)
    a10 = q.arrow_path(1)
    expected = TensorElement(
        ctx,
        2,
        {
            (t, p): ctx.one(),
            (a10, a01): ctx.one(),
            (p, s): ctx.one(),
        },
    )
    assert comultiply(ctx, q, p) == expected


def test_counit():
    ctx = field_context(1)
    q = z2_quiver()
    g0, g1 = q.vertex_path(0), q.vertex_path(1)
    a = q.arrow_path(0)
    x = Element(
        ctx,
        {
            g0: ctx.scalar(3),
            g1: ctx.scalar(-2),
            a: ctx.scalar(5),
        },
    )
    assert counit(x) == ctx.one()
    assert counit(Element.of_path(ctx, a)).is_zero()
    assert counit(Element.of_path(ctx, g0)).is_one()


def oracle_tensor_comultiply(ctx, quiver, tensor):
    """Independent one-step expansion: Delta on each component, interleaved."""
    out = {}
    for tup, coeff in tensor.terms.items():
        choices = [[(l, r) for l, r in path_splits(quiver, p)] for p in tup]
        stack = [((), ())]
        for ch in choices:
            stack = [(ls + (l,), rs + (r,)) for ls, rs in stack for l, r in ch]
        for ls, rs in stack:
            key = ls + rs
            out[key] = out.get(key, ctx.zero()) + coeff
    return TensorElement(ctx, 2 * tensor.arity, out)


def test_iterated_comultiply_steps_zero_identity():
    ctx = field_context(1)
    q = z2_quiver()
    t = TensorElement.of(ctx, (q.arrow_path(0), q.vertex_path(0)))
    assert iterated_comultiply(q, t, 0) == t


def test_iterated_comultiply_grouplikes():
    ctx = field_context(1)
    q = z2_quiver()
    g = q.vertex_path(1)
    res = iterated_comultiply(q, TensorElement.of(ctx, (g, g)), 1)
    assert res == TensorElement.of(ctx, (g, g, g, g))


def test_iterated_comultiply_arrow_pair_against_oracle():
    ctx = field_context(1)
    q = z2_quiver()
    a, b = q.arrow_path(0), q.arrow_path(1)
    t = TensorElement.of(ctx, (a, b))
    got = iterated_comultiply(q, t, 1)
    assert got == oracle_tensor_comultiply(ctx, q, t)
    assert len(got.terms) == 4


def test_iterated_comultiply_two_steps_against_oracle():
    ctx = field_context(1)
    q = z2_quiver()
    p = q.path(0, [0, 1])
    t = TensorElement.of(ctx, (p, q.arrow_path(0)))
    one_step = oracle_tensor_comultiply(ctx, q, t)
    # the oracle iterates on the rightmost block just like the implementation
    two_oracle = {}
    for tup, c in one_step.terms.items():
        inner = oracle_tensor_comultiply(
            ctx, q, TensorElement(ctx, 2, {tup[2:]: c})
        )
        for key, cc in inner.terms.items():
            full = tup[:2] + key
            two_oracle[full] = two_oracle.get(full, ctx.zero()) + cc
    assert iterated_comultiply(q, t, 2) == TensorElement(ctx, 6, two_oracle)


def test_graded_component_partition():
    ctx = field_context(1)
    q = z2_quiver()
    x = Element(
        ctx,
        {
            q.vertex_path(0): ctx.one(),
            q.arrow_path(0): ctx.scalar(2),
            q.path(0, [0, 1]): ctx.scalar(-1),
        },
    )
    assert graded_component(x, 0) == Element.of_path(ctx, q.vertex_path(0))
    assert graded_component(x, 1) == Element.of_path(ctx, q.arrow_path(0), 2)
    total = Element.zero(ctx)
    for n in range(4):
        total = total + graded_component(x, n)
    assert total == x


def _suite_quivers():
    out = []
    for n in (2, 3, 4):
        g = cyclic_group(n)
        out.append(hopf_quiver(g, RamificationData.from_class_reps(g, [(1, 1)])))
    s3 = symmetric_group(3)
    cls = next(i for i, c in enumerate(s3.classes) if len(c) == 3)
    out.append(hopf_quiver(s3, RamificationData.from_dict({cls: 1})))
    return out


def test_coalgebra_laws_exhaustive():
    """Coassociativity, counit laws, grading, term counts for paths <= 5."""
    ctx = field_context(1)
    for quiver in _suite_quivers():
        for degree_list in paths_up_to(quiver, 5):
            for p in degree_list:
                delta = comultiply(ctx, quiver, p)
                n = len(p.arrows)
                # n+1 terms, all coefficients 1
                assert len(delta.terms) == n + 1
                assert all(c.is_one() for c in delta.terms.values())
                # grading: leg lengths sum to the path length
                for (l, r) in delta.terms:
                    assert len(l.arrows) + len(r.arrows) == n
                # coassociativity via leftmost- vs rightmost-leg iteration
                right = iterated_comultiply(quiver, TensorElement.of(ctx, (p,)), 2)
                left_terms = {}
                for (l, r), c in delta.terms.items():
                    for (ll, lr), cc in comultiply(ctx, quiver, l).terms.items():
                        key = (ll, lr, r)
                        left_terms[key] = left_terms.get(key, ctx.zero()) + c * cc
                assert right == TensorElement(ctx, 3, left_terms)
                # counit laws
                eps_id = Element.zero(ctx)
                id_eps = Element.zero(ctx)
                for (l, r), c in delta.terms.items():
                    if l.is_vertex():
                        eps_id = eps_id + Element.of_path(ctx, r, c)
                    if r.is_vertex():
                        id_eps = id_eps + Element.of_path(ctx, l, c)
                assert eps_id == Element.of_path(ctx, p)
                assert id_eps == Element.of_path(ctx, p)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.fractions(min_value=-3, max_value=3, max_denominator=4)), max_size=4))
def test_counit_linearity(entries):
    ctx = field_context(1)
    q = z2_quiver()
    x = Element.zero(ctx)
    expected = ctx.zero()
    for v, c in entries:
        coeff = ctx.scalar(c)
        x = x + Element.of_path(ctx, q.vertex_path(v), coeff)
        expected = expected + coeff
    assert counit(x) == expected


def test_element_json_roundtrip():
    ctx = field_context(4)
    q = z2_quiver()
    x = Element(
        ctx,
        {
            q.path(0, [0, 1]): ctx.zeta,
            q.vertex_path(1): ctx.scalar("1/3"),
        },
    )
    assert element_from_json(ctx, q, x.to_json()) == x


def test_tensor_swap():
    ctx = field_context(1)
    q = z2_quiver()
    a, g0 = q.arrow_path(0), q.vertex_path(0)
    t = TensorElement.of(ctx, (a, g0))
    assert t.swap() == TensorElement.of(ctx, (g0, a))

#!/usr/bin/env python3
"""Regenerate the bundled problem files in specs/ from the worked examples.

Run from the repository root:  python3 scripts/build_bundled_specs.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hopfquiver import (  # noqa: E402
    RamificationData,
    cyclic_group,
    field_context,
    hopf_quiver,
    standard_cyclic_cocycle,
    symmetric_group,
    trivial_cocycle,
)
from hopfquiver.actions import (  # noqa: E402
    cyclic_action_from_seeds,
    taft_action,
    translation_loop_action,
    trivial_loop_action,
)

OUT = Path(__file__).resolve().parents[1] / "specs"


def action_json(action):
    return action.to_json()


def write(name: str, payload: dict):
    OUT.mkdir(exist_ok=True)
    path = OUT / name
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    print(f"wrote {path}")


def taft_spec(n: int, m: int, q_power: int, tasks, cap=4, class_rep=1):
    ctx = field_context(m)
    group = cyclic_group(n)
    ram = RamificationData.from_class_reps(group, [(class_rep, 1)])
    quiver = hopf_quiver(group, ram)
    q = ctx.root_of_unity(q_power)
    action = taft_action(quiver, trivial_cocycle(group, ctx), q)
    return {
        "schema": 1,
        "field_order": m,
        "group": {"mult": [list(r) for r in group.mult]},
        "cocycle": {"kind": "trivial"},
        "ramification": [{"class_rep": class_rep, "mult": 1}],
        "action": action_json(action),
        "degree_cap": cap,
        "tasks": list(tasks),
    }


def main():
    # Z_n Taft-type data with trivial cocycle, q a primitive n-th root
    write("z2_taft.json", taft_spec(2, 2, 1, ["verify"]))
    write("z3_taft.json", taft_spec(3, 3, 1, ["verify"]))
    write("z4_taft.json", taft_spec(4, 4, 1, ["verify"]))

    # Z_2 with the nontrivial cocycle (value -1 on the triple of the
    # generator) and the sign-corrected action over Q(i)
    ctx = field_context(4)
    group = cyclic_group(2)
    phi = standard_cyclic_cocycle(2, ctx.scalar(-1))
    ram = RamificationData.from_class_reps(group, [(1, 1)])
    quiver = hopf_quiver(group, ram)
    action = cyclic_action_from_seeds(
        quiver, phi, [ctx.one(), ctx.scalar(-1)], [ctx.zeta, ctx.zeta]
    )
    write(
        "z2_nontrivial_cocycle.json",
        {
            "schema": 1,
            "field_order": 4,
            "group": {"mult": [list(r) for r in group.mult]},
            "cocycle": {"kind": "cyclic_standard", "n": 2, "zeta_power": 1},
            "ramification": [{"class_rep": 1, "mult": 1}],
            "action": action_json(action),
            "degree_cap": 4,
            "tasks": ["verify"],
        },
    )

    # Z_4 ramified at g^2 (two blocks), trivial cocycle, q = i
    spec = taft_spec(4, 4, 1, ["verify", "decompose", "crossed_product"], cap=3, class_rep=2)
    write("z4_two_blocks_trivial.json", spec)

    # Z_4 ramified at g^2 with the standard cocycle; the action seeds need a
    # primitive 8th root of unity
    ctx8 = field_context(8)
    group4 = cyclic_group(4)
    phi4 = standard_cyclic_cocycle(4, ctx8.root_of_unity(2))
    ram4 = RamificationData.from_class_reps(group4, [(2, 1)])
    quiver4 = hopf_quiver(group4, ram4)
    z = ctx8.zeta
    action4 = cyclic_action_from_seeds(
        quiver4,
        phi4,
        [ctx8.one(), ctx8.one(), ctx8.one(), ctx8.scalar(-1)],
        [z, z, z ** 7, z ** 3],
    )
    write(
        "z4_two_blocks_standard_cocycle.json",
        {
            "schema": 1,
            "field_order": 8,
            "group": {"mult": [list(r) for r in group4.mult]},
            "cocycle": {"kind": "cyclic_standard", "n": 4, "zeta_power": 1},
            "ramification": [{"class_rep": 2, "mult": 1}],
            "action": action_json(action4),
            "degree_cap": 3,
            "tasks": ["verify", "decompose", "crossed_product"],
        },
    )

    # nonabelian example: S_3 with one loop per vertex, translation action
    s3 = symmetric_group(3)
    ctx_s3 = field_context(1)
    ram_s3 = RamificationData.from_class_reps(s3, [(s3.identity, 1)])
    quiver_s3 = hopf_quiver(s3, ram_s3)
    action_s3 = translation_loop_action(quiver_s3, ctx_s3)
    write(
        "s3_loops.json",
        {
            "schema": 1,
            "field_order": 1,
            "group": {"mult": [list(r) for r in s3.mult]},
            "cocycle": {"kind": "trivial"},
            "ramification": [{"class_rep": s3.identity, "mult": 1}],
            "action": action_s3.to_json(),
            "degree_cap": 2,
            "tasks": ["verify", "decompose", "crossed_product"],
        },
    )

    # one-vertex quivers with one and two loops
    for nloops in (1, 2):
        ctx1 = field_context(1)
        g1 = cyclic_group(1)
        ram1 = RamificationData.from_class_reps(g1, [(0, nloops)])
        q1 = hopf_quiver(g1, ram1)
        act1 = trivial_loop_action(q1, ctx1)
        write(
            f"one_vertex_{nloops}_loop.json",
            {
                "schema": 1,
                "field_order": 1,
                "group": {"mult": [[0]]},
                "cocycle": {"kind": "trivial"},
                "ramification": [{"class_rep": 0, "mult": nloops}],
                "action": action_json(act1),
                "degree_cap": 3,
                "tasks": ["verify", "primitives"],
            },
        )


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Survey the block structure of Hopf quivers over all small groups.

For every group of order <= 12 and every single-class ramification datum,
print the component count, the generated normal subgroup, and whether the
quiver is connected.  A quick sanity sweep of the coset decomposition
picture, and a handy table when hunting for interesting two-block examples.

Usage:  python3 scripts/survey_small_groups.py [--max-order N]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hopfquiver import (  # noqa: E402
    RamificationData,
    connected_components,
    hopf_quiver,
    small_groups,
    subgroup_generated,
)


def survey(max_order: int):
    print(f"{'group':10s} {'class rep':>9s} {'|C|':>4s} {'arrows':>7s} "
          f"{'|N|':>4s} {'blocks':>7s} connected")
    for name, g in small_groups(max_order):
        for cls_index, cls in enumerate(g.classes):
            ram = RamificationData.from_dict({cls_index: 1})
            quiver = hopf_quiver(g, ram)
            comps = connected_components(quiver)
            sub, index = subgroup_generated(g, cls)
            assert len(comps.components) == index
            print(
                f"{name:10s} {cls[0]:9d} {len(cls):4d} {len(quiver.arrows):7d} "
                f"{len(sub):4d} {index:7d} {'yes' if index == 1 else 'no'}"
            )


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-order", type=int, default=12)
    args = parser.parse_args()
    survey(args.max_order)

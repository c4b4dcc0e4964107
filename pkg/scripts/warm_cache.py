"""Populate the group cache for every group the test suite enumerates.

One-time helper: the acceptance sweep rebuilds from cache in seconds once
this has run.  Order is by expected size so rate problems show up early.
"""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from stb import matgrp

CACHE = os.environ.get("STB_CACHE_DIR") or os.path.expanduser("~/.cache/stb")
CAP = matgrp.DEFAULT_CAP


def targets():
    out = []
    for q in (2, 3, 5):
        for dim in range(1, 7):
            kinds = ["O", "SO", "Omega"]
            if dim % 2 == 0:
                kinds.append("Sp")
            if q == 2 and dim == 1:
                continue
            for kind in kinds:
                signs = (1, -1) if (dim % 2 == 0 and kind != "Sp") else (1,)
                for sign in signs:
                    try:
                        n = matgrp.group_order(kind, dim, q, sign)
                    except (ValueError, ZeroDivisionError):
                        continue
                    if n > CAP:
                        continue
                    out.append((n, kind, dim, q, sign))
    out.sort()
    return out


def main():
    for n, kind, dim, q, sign in targets():
        t0 = time.time()
        G = matgrp.build_group(kind, dim, q, sign=sign, cache_dir=CACHE)
        dt = time.time() - t0
        print(f"{G.name:14s} order {n:>12d} {dt:8.1f}s", flush=True)
        del G


if __name__ == "__main__":
    main()

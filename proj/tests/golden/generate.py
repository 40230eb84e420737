#!/usr/bin/env python3
"""Regenerate tests/golden/catalog/*.json.

Blocks come from `frc catalog dump`; the supported file sizes are computed here
by enumerating every subset of blocks with numpy, independently of the C++
search code.

usage: generate.py path/to/frc
"""
import json
import pathlib
import subprocess
import sys

import numpy as np


def popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return ((x * np.uint64(0x0101010101010101)) >> np.uint64(56)).astype(np.uint8)


def min_unions(theta, blocks):
    assert theta <= 64
    unions = np.zeros(1, dtype=np.uint64)
    sizes = np.zeros(1, dtype=np.uint8)
    for b in blocks:
        mask = np.uint64(sum(1 << p for p in b))
        unions = np.concatenate([unions, unions | mask])
        sizes = np.concatenate([sizes, sizes + np.uint8(1)])
    counts = popcount64(unions)
    return [int(counts[sizes == k].min()) for k in range(len(blocks) + 1)]


def main():
    frc = sys.argv[1]
    out_dir = pathlib.Path(__file__).resolve().parent / "catalog"
    listing = json.loads(subprocess.check_output([frc, "catalog", "list"]))
    for entry in listing:
        name = entry["name"]
        dumped = json.loads(subprocess.check_output([frc, "catalog", "dump", name]))
        m = min_unions(dumped["theta"], dumped["blocks"])
        golden = {
            "name": name,
            "params": entry["params"],
            "theta": dumped["theta"],
            "blocks": dumped["blocks"],
            "M": m,
        }
        (out_dir / f"{name}.json").write_text(json.dumps(golden, sort_keys=True) + "\n")
        print(name, m)


if __name__ == "__main__":
    main()

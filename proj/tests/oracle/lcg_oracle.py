#!/usr/bin/env python3
"""Standalone oracle for the per-PE random number generator.

Independent reference used to pin golden constants in the C++ tests and to
generate the stream files consumed by the acceptance suite. Run:

    python3 lcg_oracle.py            # print pinned constants
    python3 lcg_oracle.py streams    # write golden stream files to ../golden/
"""

import sys
import os

MASK = (1 << 64) - 1
STREAM_OFFSET = 0x9E3779B97F4A7C15
MUL = 6364136223846793005
INC = 1442695040888963407


def seed_for(seed, pe):
    return (seed + (pe + 1) * STREAM_OFFSET) & MASK


def step(state):
    return (state * MUL + INC) & MASK


def next_int(state):
    state = step(state)
    return state, state >> 33


def next_float(state):
    state = step(state)
    return state, (state >> 11) * 2.0 ** -53


def main():
    if len(sys.argv) > 1 and sys.argv[1] == "streams":
        out_dir = os.path.join(os.path.dirname(__file__), "..", "golden")
        for seed in (0, 1):
            for pe in (0, 1, 2):
                path = os.path.join(out_dir, f"rng_seed{seed}_pe{pe}.txt")
                with open(path, "w") as f:
                    s = seed_for(seed, pe)
                    for _ in range(1000):
                        s, i = next_int(s)
                        s, x = next_float(s)
                        f.write(f"{i} {x.hex()}\n")
                print("wrote", path)
        return

    for seed in (0, 1):
        for pe in (0, 1, 2):
            s0 = seed_for(seed, pe)
            s, i0 = next_int(s0)
            s, f0 = next_float(s)
            s2, f_first = next_float(s0)
            print(f"seed={seed} pe={pe} state0={s0:#018x} "
                  f"first_int={i0} second_float={f0!r} first_float={f_first!r}")


if __name__ == "__main__":
    main()

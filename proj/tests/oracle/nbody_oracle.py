#!/usr/bin/env python3
"""Independent reference for the parallel 2D n-body corpus program.

Simulates all PEs in lockstep with plain Python floats (IEEE double), using
the same per-PE LCG as lcg_oracle.py and the same expression-tree evaluation
order as the interpreter, so results are expected to be bit-exact. The force
accumulation squares dx/dy before reusing them as direction components; that
is what the program computes, so the oracle does the same.

    python3 nbody_oracle.py [npes] [seed] > ../golden/nbody_np2_seed0.txt
"""

import math
import sys

from lcg_oracle import seed_for, next_float

N = 32
STEPS = 10
DT = 0.001


def fmt(v):
    """Shortest round-trip decimal, matching the runtime's float display:
    fixed form when -4 <= X < P (X = decimal exponent, P = digit count),
    scientific otherwise; integral fixed values get a trailing .0."""
    if v != v or v in (float("inf"), float("-inf")):
        raise ValueError("non-finite coordinate")
    sign = "-" if math.copysign(1.0, v) < 0 else ""
    r = repr(abs(v))
    if "e" in r:
        mant, exp = r.split("e")
        exp = int(exp)
    else:
        mant, exp = r, 0
    if "." in mant:
        whole, frac = mant.split(".")
    else:
        whole, frac = mant, ""
    digits = (whole + frac).lstrip("0")
    point = len(whole) + exp  # digits before the decimal point
    lead_zeros = len(whole + frac) - len(digits)
    digits = digits.rstrip("0") or "0"
    x = point - lead_zeros - 1  # exponent of first significant digit
    p = len(digits)
    if digits == "0":
        return sign + "0.0"
    if -4 <= x < p:
        if x >= 0:
            whole_part = digits[: x + 1]
            frac_part = digits[x + 1:]
        else:
            whole_part = "0"
            frac_part = "0" * (-x - 1) + digits
        return sign + whole_part + "." + (frac_part or "0")
    mant_out = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
    return sign + mant_out + "e" + ("+" if x >= 0 else "-") + "%02d" % abs(x)


def run(npes, seed):
    rng = [seed_for(seed, pe) for pe in range(npes)]
    pos_x = [[0.0] * N for _ in range(npes)]
    pos_y = [[0.0] * N for _ in range(npes)]
    vel_x = [[0.0] * N for _ in range(npes)]
    vel_y = [[0.0] * N for _ in range(npes)]
    tmp_x = [[0.0] * N for _ in range(npes)]
    tmp_y = [[0.0] * N for _ in range(npes)]
    out = [[] for _ in range(npes)]

    for pe in range(npes):
        out[pe].append("HAI ITZ %d I HAS PARTICLZ 2 MUV" % pe)
        for i in range(N):
            rng[pe], r = next_float(rng[pe])
            pos_x[pe][i] = float(pe) + r
            rng[pe], r = next_float(rng[pe])
            pos_y[pe][i] = float(pe) + r
            rng[pe], r = next_float(rng[pe])
            vel_x[pe][i] = (float(pe) + r) / 1000.0
            rng[pe], r = next_float(rng[pe])
            vel_y[pe][i] = (float(pe) + r) / 1000.0

    for _ in range(STEPS):
        # compute phase: reads pos of every PE, writes tmp/vel locally;
        # the program separates this from the commit with a barrier
        for pe in range(npes):
            for i in range(N):
                x = pos_x[pe][i]
                y = pos_y[pe][i]
                vx = vel_x[pe][i]
                vy = vel_y[pe][i]
                ax = 0.0
                ay = 0.0
                for j in range(N):
                    if i != j:
                        dx = pos_x[pe][i] - pos_x[pe][j]
                        dy = pos_y[pe][i] - pos_y[pe][j]
                        dx = dx * dx
                        dy = dy * dy
                        inv_d = 1.0 / math.sqrt(dx + dy)
                        f = inv_d * (inv_d * inv_d)
                        ax = ax + dx * f
                        ay = ay + dy * f
                for k in range(npes):
                    if k != pe:
                        for j in range(N):
                            dx = pos_x[pe][i] - pos_x[k][j]
                            dy = pos_y[pe][i] - pos_y[k][j]
                            dx = dx * dx
                            dy = dy * dy
                            inv_d = 1.0 / math.sqrt(dx + dy)
                            f = inv_d * (inv_d * inv_d)
                            ax = ax + dx * f
                            ay = ay + dy * f
                x = x + (vx * DT + 0.5 * (ax * (DT * DT)))
                y = y + (vy * DT + 0.5 * (ay * (DT * DT)))
                vx = vx + ax * DT
                vy = vy + ay * DT
                tmp_x[pe][i] = x
                tmp_y[pe][i] = y
                vel_x[pe][i] = vx
                vel_y[pe][i] = vy
        for pe in range(npes):
            for i in range(N):
                pos_x[pe][i] = tmp_x[pe][i]
                pos_y[pe][i] = tmp_y[pe][i]

    for pe in range(npes):
        out[pe].append("O HAI ITZ %d, MAH PARTICLZ IZ:" % pe)
        for i in range(N):
            out[pe].append(fmt(pos_x[pe][i]) + " " + fmt(pos_y[pe][i]))
    return out


def main():
    npes = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    for pe, lines in enumerate(run(npes, seed)):
        print("=== PE %d ===" % pe)
        for line in lines:
            print(line)


if __name__ == "__main__":
    main()

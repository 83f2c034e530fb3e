#!/usr/bin/env python3
"""Writes before/after diagram pairs for the triangle moves R3, V3 and V4.

Three strands A, B, C meet pairwise near the origin. C is bent slightly
towards one side of the A-B intersection; bending it to the other side
reverses the order of the crossings along every strand, which is the local
move. The strands are closed up by polyline routes that stay away from the
triangle, and every crossing is found geometrically, so both diagrams are
planar. Crossing signs and virtual frame bits are read off the directions.
"""

import argparse
import math
import random
from fractions import Fraction

DIRECTIONS = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (-1, 2), (2, -1), (3, 1), (1, -3)]
L = 40


class Degenerate(Exception):
    pass


def det(a, b):
    return a[0] * b[1] - a[1] * b[0]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def intersect(p1, p2, q1, q2):
    """Parameters (t, u) of a proper crossing of two segments, or None."""
    r, s = sub(p2, p1), sub(q2, q1)
    den = det(r, s)
    qp = sub(q1, p1)
    if den == 0:
        if det(qp, r) == 0:
            # collinear: reject any overlap
            lo, hi = sorted((0, 1))
            dot = r[0] * r[0] + r[1] * r[1]
            ts = [Fraction(sub(q, p1)[0] * r[0] + sub(q, p1)[1] * r[1], dot) for q in (q1, q2)]
            if max(ts) >= lo and min(ts) <= hi:
                raise Degenerate()
        return None
    t = Fraction(det(qp, s), den)
    u = Fraction(det(qp, r), den)
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    if t in (0, 1) or u in (0, 1):
        raise Degenerate()
    return t, u


def token(kind, cid, sign=None, frame=None):
    if kind == "V":
        return f"V{cid}{'x' if frame else 'y'}"
    return f"{kind}{cid}{'+' if sign > 0 else '-'}"


def route(rng, start, end, d_out, d_in):
    """Stub out, sweep around the triangle at a large radius, stub in."""
    a = (start[0] + 2 * d_out[0] * L, start[1] + 2 * d_out[1] * L)
    b = (end[0] - 2 * d_in[0] * L, end[1] - 2 * d_in[1] * L)
    ta, tb = math.atan2(a[1], a[0]), math.atan2(b[1], b[0])
    delta = (tb - ta) % (2 * math.pi)
    if rng.random() < 0.5:
        delta -= 2 * math.pi
    steps = max(1, math.ceil(abs(delta) / (math.pi / 6)))
    pts = [start, a]
    for k in range(1, steps):
        angle = ta + delta * k / steps
        r = rng.uniform(6 * L, 10 * L)
        pts.append((round(r * math.cos(angle)), round(r * math.sin(angle))))
    pts += [b, end]
    return pts


def encode(segs, kind_of, ids):
    """Pass tokens along a closed chain of segments.

    kind_of(i, j) is ("V",) or ("C", index of the over segment).
    """
    n = len(segs)
    hits = {}
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            hit = intersect(*segs[i], *segs[j])
            if hit is None:
                continue
            hits.setdefault(i, []).append((hit[0], j))
            hits.setdefault(j, []).append((hit[1], i))
    toks = []
    for i, (p1, p2) in enumerate(segs):
        params = sorted(hits.get(i, []))
        if len(set(t for t, _ in params)) != len(params):
            raise Degenerate()
        for _, j in params:
            d_this = sub(p2, p1)
            d_other = sub(segs[j][1], segs[j][0])
            kind = kind_of(min(i, j), max(i, j))
            cid = ids[(min(i, j), max(i, j))]
            if kind[0] == "V":
                toks.append(token("V", cid, frame=det(d_this, d_other) > 0))
            else:
                over = kind[1]
                d_over, d_under = (d_this, d_other) if over == i else (d_other, d_this)
                sign = 1 if det(d_over, d_under) > 0 else -1
                toks.append(token("O" if over == i else "U", cid, sign=sign))
    return toks


def make_pair(rng, move, index):
    names = list("ABC")
    while True:
        picked = rng.sample(DIRECTIONS, 3)
        if all(det(a, b) != 0 for i, a in enumerate(picked) for b in picked[i + 1:]):
            break
    dirs = {n: (d if rng.random() < 0.5 else (-d[0], -d[1])) for n, d in zip(names, picked)}
    heights = dict(zip(names, rng.sample(range(3), 3)))
    virtual_strand = rng.choice(names)
    order = names[:]
    rng.shuffle(order)
    dc = dirs["C"]
    normal = next(
        v
        for v in ((-dc[1], dc[0]), (dc[0] - dc[1], dc[0] + dc[1]), (-dc[0] - dc[1], dc[0] - dc[1]))
        if all(det(v, dirs[n]) != 0 for n in names)
    )

    def strand_points(s, offset):
        d = dirs[s]
        a, b = (-L * d[0], -L * d[1]), (L * d[0], L * d[1])
        if s == "C":
            return [a, (offset * normal[0], offset * normal[1]), b]
        return [a, b]

    def chain(routes, offset):
        pts, owner = [], []
        for k, s in enumerate(order):
            strand = strand_points(s, offset)
            pts += strand[:-1]
            owner += [s] * (len(strand) - 1)
            pts += routes[k][:-1]
            owner += [None] * (len(routes[k]) - 1)
        pts.append(pts[0])
        return list(zip(pts, pts[1:])), owner

    for _ in range(1000):
        routes = []
        for k, s in enumerate(order):
            d, dn = dirs[s], dirs[order[(k + 1) % 3]]
            routes.append(route(rng, (L * d[0], L * d[1]), (-L * dn[0], -L * dn[1]), d, dn))
        try:
            sides = {side: chain(routes, offset) for side, offset in (("before", 1), ("after", -1))}
            # routes keep clear of the triangle strands, so only the triangle changes
            for segs, owner in sides.values():
                n = len(segs)
                for i in range(n):
                    for j in range(n):
                        if owner[i] is None or owner[j] is not None:
                            continue
                        if abs(i - j) == 1 or {i, j} == {0, n - 1}:
                            continue
                        if intersect(*segs[i], *segs[j]) is not None:
                            raise Degenerate()
            segs, owner = sides["before"]
            n = len(segs)
            ids, route_kinds = {}, {}
            triangle_ids = {"AB": 1, "AC": 2, "BC": 3}
            next_id = 4
            for i in range(n):
                for j in range(i + 1, n):
                    if owner[i] is not None and owner[j] is not None and owner[i] != owner[j]:
                        ids[(i, j)] = triangle_ids["".join(sorted(owner[i] + owner[j]))]
                    elif owner[i] is None and owner[j] is None:
                        ids[(i, j)] = next_id
                        next_id += 1
                        route_kinds[(i, j)] = ("V",) if rng.random() < 0.4 else ("C", rng.choice((i, j)))

            def kind_of(i, j):
                if (i, j) in route_kinds:
                    return route_kinds[(i, j)]
                pair = "".join(sorted(owner[i] + owner[j]))
                if move == "V3" or (move == "V4" and virtual_strand in pair):
                    return ("V",)
                return ("C", i if heights[owner[i]] > heights[owner[j]] else j)

            out = {side: encode(s_segs, kind_of, ids) for side, (s_segs, _) in sides.items()}
            used = sorted({int(t[1:-1]) for t in out["before"]})
            remap = {old: new for new, old in enumerate(used, start=1)}
            if [remap.get(c) for c in (1, 2, 3)] != [1, 2, 3]:
                raise Degenerate()
            text = {
                side: " ".join(t[0] + str(remap[int(t[1:-1])]) + t[-1] for t in toks)
                for side, toks in out.items()
            }
            return f"{move.lower()}_{index:02d}", text
        except Degenerate:
            continue
    raise RuntimeError("no nondegenerate routing found")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20240607)
    ap.add_argument("--per-move", type=int, default=8)
    ap.add_argument("--out", default="fixtures/moves.vkd")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    lines = [
        "# Triangle move pairs (R3, V3, V4), one before/after pair per label.",
        f"# Generated by tools/gen_move_fixtures.py --seed {args.seed} --per-move {args.per_move}",
        "",
    ]
    for move in ("R3", "V3", "V4"):
        for i in range(1, args.per_move + 1):
            label, sides = make_pair(rng, move, i)
            for side in ("before", "after"):
                lines.append(f"name: {label}/{side}")
                lines.append(f"code: {sides[side]}")
            lines.append("")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines))


if __name__ == "__main__":
    main()

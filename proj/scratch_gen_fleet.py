#!/usr/bin/env python3
# One-off generator for data/fleet.csv. Frozen output is committed; this
# script is deleted afterwards.
from fractions import Fraction

psets = [14000, 13000, 12000, 11000, 10500, 9500, 9000, 8000, 7000, 6000]

# band letter, K/pset ratio (exact tenths), fuel pattern, headroom fraction pattern
# fuel entries: (fuel, droop, deadband, responsive)
bands = [
    ("a", Fraction(32, 10), [
        ("gas",   0.04, 0.017, True), ("gas",   0.05, 0.017, True),
        ("steam", 0.05, 0.017, True), ("gas",   0.05, 0.025, True),
        ("gas",   0.04, 0.017, True), ("steam", 0.05, 0.017, True),
        ("gas",   0.05, 0.036, True), ("gas",   0.05, 0.017, True),
        ("steam", 0.05, 0.017, True), ("gas",   0.04, 0.017, True)],
     [0.10, 0.08, 0.06, 0.09, 0.12, 0.07, 0.08, 0.10, 0.06, 0.09]),
    ("b", Fraction(39, 10), [
        ("steam", 0.05, 0.017, True), ("gas",   0.05, 0.017, True),
        ("steam", 0.05, 0.025, True), ("steam", 0.05, 0.017, True),
        ("gas",   0.04, 0.017, True), ("steam", 0.05, 0.017, True),
        ("gas",   0.05, 0.017, True), ("steam", 0.05, 0.036, True),
        ("steam", 0.05, 0.017, True), ("gas",   0.05, 0.017, True)],
     [0.07, 0.09, 0.06, 0.08, 0.10, 0.06, 0.08, 0.07, 0.06, 0.08]),
    ("c", Fraction(45, 10), [
        ("steam", 0.05, 0.017, True), ("steam", 0.05, 0.017, True),
        ("steam", 0.05, 0.025, True), ("steam", 0.00, 0.000, False),
        ("steam", 0.05, 0.017, True), ("steam", 0.05, 0.017, True),
        ("steam", 0.04, 0.017, True), ("steam", 0.05, 0.036, True),
        ("steam", 0.05, 0.017, True), ("steam", 0.05, 0.017, True)],
     [0.06, 0.07, 0.05, 0.00, 0.08, 0.06, 0.07, 0.05, 0.06, 0.07]),
    ("d", Fraction(38, 10), [
        ("steam", 0.05, 0.017, True), ("gas",   0.05, 0.017, True),
        ("steam", 0.05, 0.017, True), ("steam", 0.05, 0.025, True),
        ("gas",   0.04, 0.017, True), ("steam", 0.05, 0.017, True),
        ("steam", 0.05, 0.017, True), ("gas",   0.05, 0.017, True),
        ("steam", 0.05, 0.036, True), ("steam", 0.05, 0.017, True)],
     [0.07, 0.09, 0.06, 0.06, 0.10, 0.07, 0.06, 0.09, 0.05, 0.07]),
    ("e", Fraction(39, 10), [
        ("other", 0.00, 0.000, False), ("hydro", 0.05, 0.036, True),
        ("other", 0.00, 0.000, False), ("hydro", 0.05, 0.036, True),
        ("steam", 0.05, 0.017, True), ("hydro", 0.04, 0.036, True),
        ("other", 0.00, 0.000, False), ("steam", 0.05, 0.017, True),
        ("hydro", 0.05, 0.036, True), ("gas",   0.05, 0.017, True)],
     [0.00, 0.12, 0.00, 0.11, 0.07, 0.12, 0.00, 0.06, 0.10, 0.09]),
]

rows = []
rank = 0
for letter, ratio, fuels, hfracs in bands:
    for j in range(10):
        rank += 1
        pset = psets[j]
        K = ratio * pset  # MVA*s, exact
        assert K.denominator == 1
        K = K.numerator
        fuel, droop, db, resp = fuels[j]
        headroom = int(round(hfracs[j] * pset / 100.0)) * 100 if resp else 0
        pmax = pset + headroom
        # find H = m/8 (descending from min(5, K/pmax)) with rated = 8K/m integer >= pmax
        chosen = None
        m_hi = int(8 * min(Fraction(5), Fraction(K, pmax)))
        for m in range(m_hi, 15, -1):  # H from high toward 2.0
            if (8 * K) % m == 0:
                rated = (8 * K) // m
                if rated >= pmax:
                    chosen = (Fraction(m, 8), rated)
                    break
        if chosen is None:
            # fall back: search rated >= pmax dividing 8K
            for rated in range(pmax, int(2.5 * pmax)):
                if (8 * K) % rated == 0:
                    chosen = (Fraction(8 * K, rated) / 8, rated)
                    break
        assert chosen, (letter, j, K, pmax)
        H, rated = chosen
        assert H * rated == K and float(H) * float(rated) == float(K)
        rows.append(dict(id=f"g{rank:02d}", fuel=fuel, rated=rated, pmax=pmax, pset=pset,
                         H=float(H), droop=droop, db=db, resp=resp, committed=True,
                         rank=rank, band=letter, K=K))

# exactness checks
tot_K = sum(r["K"] for r in rows)
assert tot_K == 1_930_000, tot_K
anchors = {}
removed = 0
for i, (letter, ratio, _, _) in enumerate(bands):
    removed += sum(r["K"] for r in rows if r["band"] == letter)
    anchors[letter] = tot_K - removed
print("anchors after removing bands:", anchors)
assert anchors["a"] == 1_610_000 and anchors["b"] == 1_220_000
assert anchors["c"] == 770_000 and anchors["d"] == 390_000

tot_pset = sum(r["pset"] for r in rows)
assert tot_pset == 500_000
frr = sum(r["pmax"] - r["pset"] for r in rows if r["resp"])
print("total pset:", tot_pset, " total responsive headroom:", frr)
print("float total inertia:", sum(float(r["H"]) * r["rated"] for r in rows))

resp_pmax = sum(r["pmax"] for r in rows if r["resp"])
print("responsive pmax:", resp_pmax)
per_fuel = {}
for r in rows:
    if r["resp"]:
        f = per_fuel.setdefault(r["fuel"], [0, 0])
        f[0] += r["pmax"]
        f[1] += r["pmax"] - r["pset"]
print("per-fuel responsive pmax/headroom:", per_fuel)

avg = (12.00 + 15.92 + 12.76) / 3
print("avg price:", repr(avg), "== 13.56:", avg == 13.56)

with open("data/fleet.csv", "w") as f:
    f.write("id,fuel_type,rated_mva,pmax_mw,pset_mw,inertia_h_s,droop_pu,deadband_hz,"
            "responsive,committed,merit_rank\n")
    for r in rows:
        f.write(f"{r['id']},{r['fuel']},{r['rated']},{r['pmax']},{r['pset']},{r['H']},"
                f"{r['droop']},{r['db']},{'true' if r['resp'] else 'false'},true,{r['rank']}\n")
print("wrote data/fleet.csv")

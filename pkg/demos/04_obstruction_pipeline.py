# The full pipeline over the (g, n) range covered by d <= 3.

from collections import Counter

from lattice_obstruction import obstruct, theorem_range

verdicts = Counter()
for g, n, d in theorem_range(3):
    rep = obstruct(g, n)
    verdicts[rep.verdict] += 1
    used = rep.cap.d if rep.cap else None
    print(f"(g={g}, n={n}) smallest d={d}: {rep.verdict}, decided with d={used}")
print(dict(verdicts))

print(obstruct(6, 13).to_json(indent=2)[:600], "...")

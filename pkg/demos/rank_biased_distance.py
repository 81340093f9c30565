"""Rank-biased distance on small drafts: where the weight sits and why swaps near the top hurt more."""

from mockdraft import MetricParams, build_ranking, mae, prefix_weight, rbd, rbo_ext

actual = build_ranking(["Ant", "Bee", "Cat", "Dog", "Elk", "Fox", "Gnu", "Hen"])

# identical forecasts score 0, forecasts with nothing in common score 1
print(rbd(actual, actual))
print(rbd(actual, build_ranking(["Yak", "Zebu"])))

# same mistake, different depth: swapping picks 1-2 vs picks 6-7
early = build_ranking(["Bee", "Ant", "Cat", "Dog", "Elk", "Fox", "Gnu", "Hen"])
late = build_ranking(["Ant", "Bee", "Cat", "Dog", "Elk", "Gnu", "Fox", "Hen"])
print("early swap", rbd(actual, early))
print("late swap ", rbd(actual, late))

# plain MAE can't tell them apart
print("mae", mae(early, actual), mae(late, actual))

# a short mock is extrapolated, not punished for stopping early
short = build_ranking(["Ant", "Bee", "Cat"])
parts = rbo_ext(short, actual)
print(parts)

# how much of the total weight the first d ranks carry
for q in (0.9, 0.98):
    print(q, [round(prefix_weight(q, d), 3) for d in (1, 5, 14, 30, 60)])

# a smaller q pushes almost everything onto the first few picks
shallow = MetricParams(q=0.5)
print("q=0.5", rbd(actual, early, shallow), rbd(actual, late, shallow))

"""Five "greatest of all time" top-5 lists, combined two ways.

Borda adds up positional points, so one list that puts Robert Horry first
lifts him to fifth overall.  Ranked-choice aggregation runs a small runoff for
every pick, and one enthusiast can't win a majority, so he falls to seventh.
"""

from mockdraft import borda, build_ranking, rca

lists = {
    "A": ["Michael Jordan", "LeBron James", "Kareem Abdul-Jabbar", "Bill Russell", "Kobe Bryant"],
    "B": ["Michael Jordan", "LeBron James", "Kareem Abdul-Jabbar", "Bill Russell", "Earvin Johnson"],
    "C": ["Michael Jordan", "LeBron James", "Bill Russell", "Kareem Abdul-Jabbar", "Earvin Johnson"],
    "D": ["Michael Jordan", "LeBron James", "Bill Russell", "Kobe Bryant", "Kareem Abdul-Jabbar"],
    "E": ["Robert Horry", "Kareem Abdul-Jabbar", "Michael Jordan", "Scottie Pippen", "Kobe Bryant"],
}
mocks = [build_ranking(v) for v in lists.values()]

result = borda(mocks, draft_length=5)
for player in result.ordering:
    print(result.rank_of(player), player, result.scores[player])
print("ties:", [sorted(g) for g in result.tie_groups])

trace = rca(mocks, num_picks=8)
print()
for pick, player in enumerate(trace.ordering, start=1):
    print(pick, player)

# the runoff behind each pick
print()
for r in trace.rounds:
    action = f"win {r.winner}" if r.winner else f"drop {r.eliminated}"
    print(f"pick {r.pick}: {r.ballots} ballots {r.counts} -> {action}")

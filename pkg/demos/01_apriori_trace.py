"""
Level-wise mining on a small basket database
============================================

Nine shopping baskets over five items, mined with a minimum support count
of two. We print every candidate level with its counts, so the join and
prune steps can be followed by eye.
"""
from assocnb.apriori import TransactionDB, generate_rules, mine
from assocnb.datasets import toy_transactions

rows = toy_transactions()
for i, row in enumerate(rows, start=1):
    print(f"T{i}00", ", ".join(row))

db = TransactionDB(rows)
result = mine(db, min_sup=2 / 9)
print("\nminimum support count:", result.support_threshold_count)

###############################################################################
# Candidates and survivors, level by level. The last candidate level is
# empty: nothing of size four survives the prune, so mining stops there.
for k, counted in enumerate(result.candidates, start=1):
    print(f"\nC{k}:" + (" empty" if not counted else ""))
    for s in counted:
        keep = "kept" if s.support_count >= result.support_threshold_count else ""
        print(f"  {','.join(s.items):<12} {s.support_count}  {keep}")

print("\nmaximal frequent itemsets:")
for s in result.maximal:
    print(" ", s, s.support_count)

###############################################################################
# Rules with confidence 1: whenever the left side is in a basket, so is the right.
for r in generate_rules(result, min_conf=1.0, db=db):
    print(f"{r.antecedent} => {r.consequent}  support {r.support:.3f}")

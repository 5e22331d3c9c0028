"""
Association rules between words
===============================

Five documents reduced to their frequent words behave exactly like
baskets. At support 0.4 and confidence 1.0 the miner recovers rules such
as ``design => system``.
"""
from assocnb.apriori import TransactionDB, generate_rules, mine
from assocnb.datasets import text_transactions

db = TransactionDB(text_transactions())
result = mine(db, min_sup=0.4)

print("frequent word sets of two or more words:")
for s in result.frequent():
    if len(s) > 1:
        print(f"  {s}  ({s.support_count} of {db.size})")

print("\nrules:")
for r in generate_rules(result, min_conf=1.0, db=db):
    print(f"  {r.antecedent} => {r.consequent}")

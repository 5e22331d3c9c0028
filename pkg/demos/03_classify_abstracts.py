"""
Classifying two abstracts with a hand-built model
=================================================

The reference model holds 107 word sets over three categories, with the
occurrence counts written out in ``assocnb.datasets``. We classify one
control-theory abstract plainly and one graph-algorithm abstract with
partial matches weighted by the matched fraction.
"""
from assocnb.classify import classify, format_report
from assocnb.datasets import CONTROL_ABSTRACT, SPANNER_ABSTRACT, reference_model
from assocnb.model import conditional
from assocnb.preprocess import RawDocument

model = reference_model()
for name in model.category_names:
    print(f"prior {name:<25} {model.priors[name]:.3f}")

###############################################################################
# Plain scoring: each matched word set contributes its full conditional.
r = classify(RawDocument("control", CONTROL_ABSTRACT), model, mode="plain")
print()
print(format_report(r))
for m in r.matches:
    row = "  ".join(f"{conditional(m.vocab_itemset, c, model):.4f}" for c in model.category_names)
    print(f"{','.join(m.matched_subset):<22} {row}")

###############################################################################
# Fractional scoring: a match of two words out of a three-word set counts
# with exponent 2/3.
r = classify(RawDocument("spanner", SPANNER_ABSTRACT), model, mode="fractional")
print()
print(format_report(r))

"""
At most once, known multiple, or undetermined
=============================================

"""

from absemigroup import classify, classify_bounds, sg_from_generators, union_with

cases = {
    "<4;9>": sg_from_generators((4, 9)),
    "<4;9> + {14,19,23}": union_with(sg_from_generators((4, 9)), {14, 19, 23}),
    "<3;7>": sg_from_generators((3, 7)),
    "<3;8>": sg_from_generators((3, 8)),
    "<5;7> + {22,23}": union_with(sg_from_generators((5, 7)), {22, 23}),
}
for name, H in cases.items():
    v = classify(H)
    print(f"{name:22s} {v.kind.value:14s} {', '.join(v.established())}")

# each outcome carries its evidence
for o in classify(cases["<4;9>"]).outcomes:
    print(f"  {o.rule.value:26s} {o.status.value:14s} {o.evidence}")

# only (a, b, g) known: genus bounds
for g in (14, 15, 16):
    print("a=5 b=11 g=%d ->" % g, classify_bounds(5, 11, g).kind.value)

"""
Every semigroup of genus g containing <a; b>
============================================

"""

from collections import Counter

from absemigroup import census_classify, classify, family_4_1, family_4_2, family_4_3, two_gen_params

p = two_gen_params(4, 13)
for g in range(p.full_genus, p.full_genus - 7, -1):
    rows = census_classify(p, g)
    kinds = Counter(r.verdict.kind.value for r in rows)
    tags = [r.family_tag for r in rows if r.family_tag]
    print(f"g={g:2d} rows={len(rows):2d} {dict(kinds)} tags={tags}")

for n in range(2, 5):
    print("4.1 n=%d:" % n, [classify(family_4_1(n, m)).kind.value for m in range(2 * n)])

H = family_4_2(4, 8, 8)
print("4.2 (4,8,8): genus", H.genus, classify(H).kind.value)

for n in range(2, 6):
    H = family_4_3(n)
    print(f"4.3 n={n}: genus {H.genus} {classify(H).kind.value}")

"""
Numerical semigroups from generators and from gap sets
======================================================

"""

from absemigroup import sg_from_gaps, sg_from_generators, two_gen_params, union_with

# <4, 9>: everything from 24 on is a member, twelve integers below are not
H = sg_from_generators((4, 9))
print(H.canonical())
print("conductor", H.conductor, "multiplicity", H.multiplicity)

# the membership table is a plain numpy bool array over [0, conductor]
print(H.membership.astype(int))

# adding elements re-validates closure; 14 alone fails because 14 + 9 = 23 is a gap
S = union_with(H, {14, 19, 23})
print(S.canonical())
try:
    union_with(H, {14})
except ValueError as exc:
    print("rejected:", exc)

# gap sets round trip
assert sg_from_gaps(S.gaps) == S
print(sg_from_gaps({1, 2, 4, 5, 7, 10}))

# (a, b) -> b = na + r and the genus (a-1)(b-1)/2
p = two_gen_params(5, 13)
print(p, "full genus", p.full_genus, "sharp genus", p.sharp_genus)

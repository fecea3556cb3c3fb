"""
Delta invariant of a (nu, mu) cusp
==================================

"""

from absemigroup import CuspType, delta_closed, euclid_sequence, sg_from_generators

# the blow-up multiplicities are the Euclidean remainders of (mu, nu)
for nu, mu in [(2, 3), (4, 9), (8, 13), (7, 30)]:
    c = CuspType(nu, mu)
    seq = euclid_sequence(c)
    genus = sg_from_generators((nu, mu)).genus
    print(f"({nu},{mu})  cs={list(seq.cs)}  ns={list(seq.ns)}  "
          f"delta={seq.delta}  closed={delta_closed(c)}  genus<{nu},{mu}>={genus}")

"""
Semigroups forced at a second point of the degree-a pencil
==========================================================

"""

from absemigroup import sharp_semigroup_S, trivial_new_nongaps, two_gen_params, window_profiles, ws_of_Q_full_genus

# at full genus the semigroup at Q fills each window (ta, (t+1)a) from the top
p = two_gen_params(3, 7)
for w in window_profiles(p):
    print(f"t={w.t} s={w.s} members at Q: {list(w.q_nongaps)}")
print("WS(Q) =", ws_of_Q_full_genus(p).canonical())

# the n(m) table and the values i*b - m*a it produces
tn = trivial_new_nongaps(two_gen_params(6, 13))
print("mu =", tn.mu, "n(m):", tn.n_table)
print("values:", tn.values, "count", len(tn.values), "=", tn.expected_count)

# with mu = a - r these values close up <a; b> into the sharp semigroup
for a, b in [(4, 9), (5, 11), (6, 13)]:
    S = sharp_semigroup_S(two_gen_params(a, b))
    print(f"S({a},{b}) genus {S.genus}: {S.canonical()}")

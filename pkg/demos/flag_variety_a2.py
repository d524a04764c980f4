"""A walk through K(G/B) for G = SL3: Weyl group, Demazure operators, lifts, products."""
from kschubert import (
    demazure,
    euler_char,
    format_word,
    mono,
    ordinary_constants,
    ordinary_partial,
    schubert_lift_r,
    weyl_group,
)

W = weyl_group("A2")
print("|W| =", len(W), " w0 =", format_word(W.longest.word))

# Bruhat order: covers only
for u in W:
    ups = [format_word(w.word) for w in W if w.length == u.length + 1 and W.bruhat_leq(u, w)]
    print(f"  {format_word(u.word):>9} < {', '.join(ups)}")

# the operator kills 1 and sends e^omega1 to -e^(omega1 - alpha1)
print(demazure(W, mono((0, 0)), W.simple(0)))
print(demazure(W, mono((1, 0)), W.simple(0)))

# Euler characteristics of line bundles on the full flag variety are Weyl dimensions
for lam in [(0, 0), (-1, 0), (-1, -1), (-2, -1)]:
    print("chi(G/B, L", lam, ") =", euler_char(W, W.longest, lam))

# Lifts of Schubert classes to the representation ring
for v in W:
    print(f"r_{format_word(v.word):<9}", schubert_lift_r(W, v))

# K-theoretic Monk rule: [O_s1][O_s2] = [O_s1s2] + [O_s2s1] - [O_w0]
row = ordinary_constants(W, W.simple(0), W.simple(1))
print({format_word(z.word): c for z, c in row.items()})

# The projective plane as G/P with P generated by s2: h^2 = pt, h^3 = 0
I = (1,)
e, h, pt = W.min_coset_reps(I)
print("h*h  =", {format_word(z.word): c for z, c in ordinary_partial(W, I, h, h).items()})
print("h*pt =", ordinary_partial(W, I, h, pt))

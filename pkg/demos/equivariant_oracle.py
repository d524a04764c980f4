"""Equivariant structure constants and the evaluation check on a torus orbit."""
from kschubert import equivariant_constants, format_word, generic_point, tensor_lift, weyl_group
from kschubert.oracle import expand_by_evaluation, orbit_points

W = weyl_group("A1")
s = W.longest
print("A1: C_{s,s} =", {format_word(z.word): v for z, v in equivariant_constants(W, s, s).items()})

W = weyl_group("B2")
lift = tensor_lift(W)
print("B2 tensor lift determinant:", lift.det)

x, y = W.simple(0), W.simple(1)
row = equivariant_constants(W, x, y)
for z, v in row.items():
    print(f"  C^{{{format_word(z.word)}}} = {v}")

# Specialize the first tensor slot at a generic point and solve on its W-orbit
t = generic_point(W, seed=3)
pts = orbit_points(W, t)
basis = [lift.Uw[w].specialize_first(t.values) for w in W]
target = (lift.Uw[x] * lift.Uw[y]).specialize_first(t.values)
coords = expand_by_evaluation(W, t, target, basis, pts)
expected = [row[w].evaluate(t.values) if w in row else 0 for w in W]
print("t =", [str(v) for v in t.values], "agrees:", coords == expected)

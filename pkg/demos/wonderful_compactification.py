"""The ring K(X)_Q of the wonderful compactification of PGL2 and PGL3."""
from kschubert import format_word, gamma, kdec_basis_check, kx_multiply, lambda_class, weyl_group
from kschubert.wonderful import check_associativity, associativity_triples, gamma_product


def show(W, elem):
    parts = []
    for w, coeff in elem.comps.items():
        cs = " + ".join(f"{c}[O_{format_word(z.word)}]" for z, c in coeff.coeffs.items())
        parts.append(f"({cs}) g_{format_word(w.word)}")
    return " + ".join(parts) or "0"


W = weyl_group("A1")
s = W.longest
print("lambda_alpha =", lambda_class(W, {0}).coeffs)
print("g_s * g_s =", show(W, gamma_product(W, s, s)))
print("g_e * g_s =", show(W, kx_multiply(W, gamma(W, W.identity), gamma(W, s))))

W = weyl_group("A2")
for v in W:
    print(f"{format_word(v.word):>9} tagged by {[i + 1 for i in W.tag(v)]}")
s1, s2 = W.simple(0), W.simple(1)
print("g_s1 * g_s2 =", show(W, gamma_product(W, s1, s2)))
print("g_s1 * g_s1 =", show(W, gamma_product(W, s1, s1)))

triples = associativity_triples(W, 200, seed=1)
print("associativity failures:", len(check_associativity(W, triples)))

report = kdec_basis_check(W)
print("congruence:", report["congruence"]["ok"], " rank:", report["rank"]["rank"], " direct sum:", report["direct_sum"]["ok"])

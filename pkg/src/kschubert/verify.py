"""Verification suites producing deterministic JSON-ready reports.

Each suite returns ``{"suite", "group", "ok", "checks": [...]}`` where every
check is ``{"name", "ok", "detail"}``. Reports contain no timings or paths, so
two runs with the same arguments serialize to identical bytes.
"""
from __future__ import annotations

import random
from itertools import product

from .demazure import bar_w, demazure, demazure_all, demazure_simple, euler_char, euler_char_T
from .laurent import LaurentPoly, antisymmetrize, is_invariant, mono, one
from .lifts import TENSOR_LIFT_MAX_ORDER, invariance_report, schubert_lift_r, tensor_lift, u0_ordinary
from .oracle import (
    brute_bruhat,
    brute_mobius,
    dominant_representative,
    expand_by_evaluation,
    generic_point,
    orbit_points,
    reduce_many,
    weyl_dim,
)
from .structconst import (
    chevalley_table,
    equivariant_table,
    expand_line_bundle,
    forget,
    ordinary_partial,
    ordinary_table,
)
from .weyl import format_word, parabolic, weyl_group
from . import wonderful as wd

SUITES = ("demazure", "lifts", "constants", "equivariant", "wonderful")
DEFAULT_SEED = 20240601
MAX_FAILURES = 5


def _check(name, failures, **extra):
    failures = list(failures)
    detail = dict(extra)
    detail["failures"] = failures[:MAX_FAILURES]
    detail["failure_count"] = len(failures)
    return {"name": name, "ok": not failures, "detail": detail}


def _w(x):
    return format_word(x.word)


def weight_box(rank, bound):
    return list(product(range(-bound, bound + 1), repeat=rank))


def random_poly(rng, rank, terms=3, bound=3):
    f = LaurentPoly.zero(rank)
    for _ in range(terms):
        f = f + mono(tuple(rng.randint(-bound, bound) for _ in range(rank)), rng.randint(-5, 5))
    return f


# -- Demazure algebra -----------------------------------------------------------


def demazure_algebra_failures(group, bound=3):
    """Idempotency, composition, absorption and reduced-word independence on monomials."""
    W = weyl_group(group)
    words = {w: W.reduced_words(w) for w in W}
    bad = {"idempotent": [], "composition": [], "absorption": [], "reduced_words": []}
    for lam in weight_box(W.rank, bound):
        f = mono(lam)
        vals = demazure_all(W, f)
        for j in range(W.rank):
            g = demazure_simple(W, f, j)
            if demazure_simple(W, g, j) != g:
                bad["idempotent"].append([list(lam), j + 1])
        for w, val in vals.items():
            for j in range(W.rank):
                sw = W.mul(W.simple(j), w)
                lhs = demazure_simple(W, val, j)
                if sw.length > w.length:
                    if lhs != vals[sw]:
                        bad["composition"].append([list(lam), j + 1, _w(w)])
                elif lhs != val:
                    bad["absorption"].append([list(lam), j + 1, _w(w)])
        memo = {(): f}

        def apply(word):
            if word not in memo:
                memo[word] = demazure_simple(W, apply(word[1:]), word[0])
            return memo[word]

        for w in W:
            for word in words[w]:
                if apply(tuple(word)) != vals[w]:
                    bad["reduced_words"].append([list(lam), format_word(word)])
    return bad


def composition_pair_failures(group, bound=1):
    """``L_u L_v = L_{uv}`` for every length-additive pair."""
    W = weyl_group(group)
    bad = []
    for lam in weight_box(W.rank, bound):
        vals = demazure_all(W, mono(lam))
        for u in W:
            for v in W:
                uv = W.mul(u, v)
                if uv.length == u.length + v.length and demazure(W, vals[v], u) != vals[uv]:
                    bad.append([list(lam), _w(u), _w(v)])
    return bad


def longest_identity_failures(group, samples=50, seed=DEFAULT_SEED):
    """``L_{w0} f = e^-rho J(f) / J(e^-rho)`` on random ``f``."""
    W = weyl_group(group)
    neg_rho = tuple(-x for x in W.rs.rho)
    den = antisymmetrize(W, mono(neg_rho))
    rng = random.Random(seed)
    bad = []
    for k in range(samples):
        f = random_poly(rng, W.rank)
        rhs = antisymmetrize(W, f).exact_div(den).shift(neg_rho)
        if demazure(W, f, W.longest) != rhs:
            bad.append(k)
    return bad


def convention_failures(group, bound=3):
    W = weyl_group(group)
    bad = []
    if W.rs.label == "A1" and euler_char(W, W.longest, (-1,)) != 2:
        bad.append("chi(X_s, -omega) != 2")
    for lam in weight_box(W.rank, bound):
        if all(x <= 0 for x in lam):
            mu = dominant_representative(W, tuple(-x for x in lam))
            if euler_char(W, W.longest, lam) != weyl_dim(W, mu):
                bad.append(["dim", list(lam)])
        chi = euler_char_T(W, W.longest, lam)
        if not is_invariant(chi, W, range(W.rank)):
            bad.append(["invariant", list(lam)])
    return bad


def bruhat_failures(group):
    W = weyl_group(group)
    bad = []
    for u in W:
        for w in W:
            if brute_bruhat(W, u, w) != W.bruhat_leq(u, w):
                bad.append(["bruhat", _w(u), _w(w)])
            if (bar_w(W, w, u) == W.longest) != W.bruhat_leq(u, w):
                bad.append(["bar_w", _w(w), _w(u)])
    return bad


def mobius_failures(group):
    W = weyl_group(group)
    bad = []
    for I in W.subsets():
        reps = W.min_coset_reps(I)
        for v in reps:
            for w in reps:
                if W.mobius_WI(I, v, w) != brute_mobius(W, I, v, w):
                    bad.append([[i + 1 for i in I], _w(v), _w(w)])
    return bad


def suite_demazure(group, seed=DEFAULT_SEED, bound=3):
    W = weyl_group(group)
    alg = demazure_algebra_failures(W, bound)
    checks = [_check(f"demazure.{k}", v) for k, v in alg.items()]
    if len(W) <= 12:
        checks.append(_check("demazure.composition_pairs", composition_pair_failures(W)))
    checks += [
        _check("demazure.longest_identity", longest_identity_failures(W, seed=seed)),
        _check("demazure.convention", convention_failures(W, bound)),
        _check("weyl.bruhat", bruhat_failures(W)),
        _check("weyl.mobius", mobius_failures(W)),
    ]
    return checks


# -- lifts --------------------------------------------------------------------------


def kronecker_failures(group):
    W = weyl_group(group)
    vals = demazure_all(W, u0_ordinary(W.rs))
    return [_w(w) for w, v in vals.items() if v.augmentation() != (1 if w == W.longest else 0)]


def tensor_kronecker_failures(lift, group):
    W = weyl_group(group)
    rho = W.rs.rho
    neg_rho = tuple(-x for x in rho)
    bad = []
    for w in W:
        total = LaurentPoly.zero(W.rank)
        for a, b in zip(lift.a, lift.b):
            total = total + a * demazure(W, b.shift(neg_rho), w).shift(rho)
        if total != (one(W.rank) if w == W.longest else 0):
            bad.append(_w(w))
    return bad


def suite_lifts(group, seed=DEFAULT_SEED, allow_large=False):
    W = weyl_group(group)
    checks = [_check("lifts.kronecker_ordinary", kronecker_failures(W))]
    lift = None
    if len(W) <= TENSOR_LIFT_MAX_ORDER or allow_large:
        lift = tensor_lift(W, allow_large=allow_large)
        checks.append(_check("lifts.kronecker_tensor", tensor_kronecker_failures(lift, W), unit_det=len(lift.det) == 1))
    report = invariance_report(W, lift)
    bad = [[[i + 1 for i in I], _w(v)] for (I, v), ok in report.items() if not ok]
    checks.append(_check("lifts.invariance", bad, tensor=lift is not None))
    return checks


# -- ordinary constants -------------------------------------------------------------


def table_property_failures(table, group):
    """Integrality, symmetry, unit, support and sign-alternation of a c-table."""
    W = weyl_group(group)
    e = W.identity
    bad = {"integer": [], "symmetric": [], "unit": [], "support": [], "sign": []}
    for x in W:
        if table.row(e, x) != {x: 1}:
            bad["unit"].append(_w(x))
        for y in W:
            row = table.row(x, y)
            if row != table.row(y, x):
                bad["symmetric"].append([_w(x), _w(y)])
            for z, c in row.items():
                key = [_w(x), _w(y), _w(z)]
                if not isinstance(c, int):
                    bad["integer"].append(key)
                if not (W.bruhat_leq(x, z) and W.bruhat_leq(y, z)):
                    bad["support"].append(key)
                if c * (-1) ** (z.length - x.length - y.length) < 0:
                    bad["sign"].append(key)
    return bad


def window_oracle_failures(table, group):
    W = weyl_group(group)
    pairs = [(x, y) for x in W for y in W]
    targets = [schubert_lift_r(W, x) * schubert_lift_r(W, y) for x, y in pairs]
    bad = []
    for (x, y), sol in zip(pairs, reduce_many(W, targets)):
        got = {z: c for z, c in zip(W, sol) if c}
        if got != table.row(x, y):
            bad.append([_w(x), _w(y)])
    return bad


def chevalley_failures(group, bound=2):
    """Support, forgetful and line-bundle checks on Chevalley coefficients."""
    W = weyl_group(group)
    bad = []
    for lam in weight_box(W.rank, bound):
        q = chevalley_table(W, lam, "ordinary").entries
        Q = chevalley_table(W, lam, "equivariant").entries
        for (x, y), v in Q.items():
            if not W.bruhat_leq(x, y):
                bad.append(["support", list(lam), _w(x), _w(y)])
        forgot = {k: forget(v) for k, v in Q.items()}
        if {k: v for k, v in forgot.items() if v} != q:
            bad.append(["forget", list(lam)])
        row_e = {y: v for (x, y), v in q.items() if x == W.identity}
        if row_e != expand_line_bundle(W, mono(lam)):
            bad.append(["line_bundle", list(lam)])
    return bad


def suite_constants(group, seed=DEFAULT_SEED, jobs=1):
    W = weyl_group(group)
    table = ordinary_table(W, jobs=jobs)
    props = table_property_failures(table, W)
    checks = [_check(f"constants.{k}", v) for k, v in props.items()]
    if len(W) <= 12:
        checks.append(_check("constants.window_oracle", window_oracle_failures(table, W)))
    else:
        checks.append({"name": "constants.window_oracle", "ok": True, "detail": {"skipped": f"|W| = {len(W)} > 12"}})
    if len(W) <= 12:
        checks.append(_check("constants.chevalley", chevalley_failures(W, 1 if len(W) > 6 else 2)))
    return checks


# -- equivariant constants ----------------------------------------------------------


def evaluation_oracle_failures(etable, group, seeds=3, seed=DEFAULT_SEED):
    """``U_x U_y`` expanded in ``{U_w}`` at generic points equals ``C^z_{x,y}(t)``."""
    W = weyl_group(group)
    lift = tensor_lift(W)
    bad = []
    for k in range(seeds):
        t = generic_point(W, seed + k)
        pts = orbit_points(W, t)
        basis = [lift.Uw[w].specialize_first(t.values) for w in W]
        for x in W:
            for y in W:
                target = (lift.Uw[x] * lift.Uw[y]).specialize_first(t.values)
                got = expand_by_evaluation(W, t, target, basis, pts)
                want = [etable.value(x, y, z) for z in W]
                want = [v.evaluate(t.values) if isinstance(v, LaurentPoly) else v for v in want]
                if got != want:
                    bad.append([k, _w(x), _w(y)])
    return bad


def forget_failures(etable, otable):
    bad = []
    for key, v in etable.entries.items():
        if forget(v) != otable.entries.get(key, 0):
            bad.append([_w(k) for k in key])
    for key in otable.entries:
        if key not in etable.entries:
            bad.append([_w(k) for k in key])
    return bad


def suite_equivariant(group, seed=DEFAULT_SEED, seeds=3, jobs=1, allow_large=False):
    W = weyl_group(group)
    if len(W) > TENSOR_LIFT_MAX_ORDER and not allow_large:
        return [{"name": "equivariant.skipped", "ok": True, "detail": {"reason": f"|W| = {len(W)} needs allow_large"}}]
    etable = equivariant_table(W, jobs=jobs, allow_large=allow_large)
    otable = ordinary_table(W, jobs=jobs)
    checks = [_check("equivariant.forget", forget_failures(etable, otable))]
    if W.rs.label == "A1":
        s = W.longest
        alpha = W.rs.simple_roots[0]
        hand = etable.value(s, s, s) == one(1) - mono(tuple(-a for a in alpha)) and etable.value(s, s, W.identity) == 0
        checks.append(_check("equivariant.hand_values", [] if hand else ["C_{s,s}"]))
    if len(W) <= 6:
        checks.append(_check("equivariant.evaluation_oracle", evaluation_oracle_failures(etable, W, seeds, seed), seeds=seeds))
    return checks


# -- wonderful compactification -----------------------------------------------------


def suite_wonderful(group, seed=DEFAULT_SEED, samples=200):
    W = weyl_group(group)
    triples = wd.associativity_triples(W, None if len(W) <= 2 else samples, seed)
    kdec = wd.kdec_basis_check(W, seed)
    return [
        _check("wonderful.unit", wd.check_unit(W)),
        _check("wonderful.commutativity", wd.check_commutativity(W)),
        _check("wonderful.associativity", wd.check_associativity(W, triples), triples=len(triples)),
        _check("wonderful.lambda_multiplicativity", wd.check_lambda_multiplicativity(W)),
        _check(
            "wonderful.dimension",
            [] if wd.module_dimension(W) == len(W) ** 2 else [wd.module_dimension(W)],
            dimension=wd.module_dimension(W),
        ),
        _check("wonderful.kdec_congruence", kdec["congruence"]["failing"]),
        _check("wonderful.kdec_rank", [] if kdec["rank"]["ok"] else [kdec["rank"]["rank"]], rank=kdec["rank"]["rank"]),
        _check("wonderful.direct_sum", [c["I"] for c in kdec["direct_sum"]["counts"] if not c["ok"]]),
    ]


def partial_flag_checks(group):
    """The A2 relations of P^2 from the ``I = {alpha_2}`` table."""
    W = weyl_group(group)
    if W.rs.label != "A2":
        return []
    I = parabolic([1], 2)
    e, s1, s21 = W.min_coset_reps(I)
    want = {(s1, s1): {s21: 1}, (s1, s21): {}, (s21, s21): {}, (e, s1): {s1: 1}}
    bad = [[_w(x), _w(y)] for (x, y), row in want.items() if ordinary_partial(W, I, x, y) != row]
    return [_check("constants.projective_plane", bad)]


def run_suite(group, suite="all", seed=DEFAULT_SEED, seeds=1, jobs=1, allow_large=False) -> dict:
    W = weyl_group(group)
    names = SUITES if suite == "all" else (suite,)
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    checks = []
    for name in names:
        if name == "demazure":
            checks += suite_demazure(W, seed)
        elif name == "lifts":
            checks += suite_lifts(W, seed, allow_large)
        elif name == "constants":
            checks += suite_constants(W, seed, jobs) + partial_flag_checks(W)
        elif name == "equivariant":
            checks += suite_equivariant(W, seed, max(seeds, 1), jobs, allow_large)
        else:
            checks += suite_wonderful(W, seed)
    return {
        "suite": suite,
        "group": W.rs.label,
        "seed": seed,
        "seeds": seeds,
        "ok": all(c["ok"] for c in checks),
        "checks": checks,
    }

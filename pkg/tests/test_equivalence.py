import random

from permeq.equivalence import (Verdict, canonical_greedy, canonical_greedy_by_swapping, equiv, flat,
                                oracle_equiv, oracle_search)
from permeq.logicality import flatten
from permeq.proofterm import MultistepReduction, parse_proofterm, to_reduction
from permeq.rewrite import lstring
from permeq.tragr import evaluate

from generators import random_case, random_linearization, random_term


def test_canonical_greedy_examples(running, gamma, gamma_prime):
    assert canonical_greedy(gamma) == to_reduction(gamma_prime)
    assert canonical_greedy(gamma_prime) == to_reduction(gamma_prime)
    assert canonical_greedy(parse_proofterm("A B A A B", running)) == MultistepReduction(lstring("A B A A B"), ())


def test_equiv_examples(gamma, gamma_prime, trace_system):
    assert equiv(gamma, gamma_prime)
    assert equiv(gamma, gamma)
    left = parse_proofterm("rho . sigma B . tau", trace_system)
    right = parse_proofterm("rho . B sigma . tau", trace_system)
    assert not equiv(left, right)


def test_equiv_needs_matching_endpoints(running):
    assert not equiv(parse_proofterm("alpha", running), parse_proofterm("B B", running))


def test_oracle_examples(running, gamma, gamma_prime):
    p = parse_proofterm("A alpha A A B . A A beta", running)
    q = parse_proofterm("A alpha beta . A A B A A B", running)
    assert oracle_equiv(p, q, 10_000) is Verdict.EQUIVALENT
    assert oracle_equiv(p, p, 1) is Verdict.EQUIVALENT
    verdict, expanded = oracle_search(gamma, gamma_prime, 10_000)
    assert verdict is Verdict.EQUIVALENT and expanded <= 10_000
    assert equiv(gamma, gamma_prime)


def test_oracle_cannot_prove_the_counterexample(trace_system):
    left = parse_proofterm("rho . sigma B . tau", trace_system)
    right = parse_proofterm("rho . B sigma . tau", trace_system)
    assert oracle_equiv(left, right, 10_000) is Verdict.NOT_PROVEN


def test_flat_form_absorbs_units_and_associativity(running):
    a = parse_proofterm("(A alpha) (eps A A B) . A A beta", running)
    b = parse_proofterm("A (alpha A (A B)) . (A A beta . A A B A A B)", running)
    assert flat(a) == flat(b)


def test_oracle_soundness_on_random_pairs():
    rng = random.Random(11)
    found = 0
    for seed in range(600):
        system, p = random_case(seed, budget=2)
        q = random_term(rng, system, p.src, 2)
        if q.tgt != p.tgt:
            continue
        verdict = oracle_equiv(p, q, 2_000)
        if verdict is Verdict.EQUIVALENT:
            found += 1
            assert equiv(p, q)
    assert found > 50


def test_equiv_is_an_equivalence_relation():
    rng = random.Random(5)
    for seed in range(200):
        _, p = random_case(seed)
        g = evaluate(p)
        family = [p, flatten(p).to_term(), canonical_greedy(p).to_term(),
                  random_linearization(rng, g).to_term()]
        assert all(equiv(x, x) for x in family)
        assert all(equiv(family[0], y) and equiv(y, family[0]) for y in family[1:])
        assert equiv(family[1], family[3])  # transitivity through p
        assert canonical_greedy_by_swapping(p) == canonical_greedy(p)


def test_equiv_distinguishes_different_classes():
    rng = random.Random(3)
    distinct = 0
    for seed in range(300):
        system, p = random_case(seed, budget=3)
        q = random_term(rng, system, p.src, 3)
        if q.tgt != p.tgt:
            continue
        same = equiv(p, q)
        assert same == (canonical_greedy(p) == canonical_greedy(q))
        if not same:
            distinct += 1
            assert evaluate(p) != evaluate(q)
    assert distinct > 0

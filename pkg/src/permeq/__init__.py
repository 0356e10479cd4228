"""Proof terms, trace graphs and greedy normal forms for string rewriting.

Permutation equivalent proof terms are recognised by comparing canonical
representatives: the trace graph (`evaluate`) or, equivalently, the greedy
multistep reduction read back from it (`canonical_greedy`).
"""

from .equivalence import canonical_greedy, canonical_greedy_by_swapping, equiv, oracle_equiv
from .logicality import embed, flatten
from .proofterm import (Comp, Empty, Juxt, Kind, Lit, Multistep, MultistepReduction, RuleSym,
                        classify, parse_proofterm, pretty_print, src_tgt, to_multistep,
                        to_reduction)
from .residuals import (find_loath, greedy_normalize, is_greedy, loath_pairs, residual,
                        rule_intervals, select, sr_measure, swap)
from .rewrite import (RewriteError, RewriteSystem, Rule, concat, lstring, make_system,
                      parse_system)
from .toposort import minimal_layer, ts, ts_stages
from .tragr import (Tragr, evaluate, juxt_tragr, parse_tragr, serialize_tragr, to_dot,
                    tragr_eq, vcomp_tragr)

__all__ = [
    "Comp", "Empty", "Juxt", "Kind", "Lit", "Multistep", "MultistepReduction", "RewriteError",
    "RewriteSystem", "Rule", "RuleSym", "Tragr", "canonical_greedy",
    "canonical_greedy_by_swapping", "classify", "concat", "embed", "equiv", "evaluate",
    "find_loath", "flatten", "greedy_normalize", "is_greedy", "juxt_tragr", "loath_pairs",
    "lstring", "make_system", "minimal_layer", "oracle_equiv", "parse_proofterm",
    "parse_system", "parse_tragr", "pretty_print", "residual", "rule_intervals", "select",
    "serialize_tragr", "sr_measure", "src_tgt", "swap", "to_dot", "to_multistep",
    "to_reduction", "tragr_eq", "ts", "ts_stages", "vcomp_tragr",
]

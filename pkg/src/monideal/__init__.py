"""Exact computations with monomial ideals: powers, decompositions,
associated primes, integral closure and bounded property checks."""

from .closure import (ClosureReport, check_normal, integral_closure, is_integrally_closed,
                      newton_certificate, newton_membership, power_membership_oracle)
from .combinatorics import (Clutter, Graph, alexander_dual, complement_clutter, complete, cone,
                            cover_ideal, cycle, dominating_ideal, edge_ideal, graph_from_pairs,
                            helm, is_bipartite, parse_clutter_text, path, wheel)
from .decomposition import (Decomposition, IrreducibleComponent, PrimeIdeal, associated_primes,
                            associated_primes_bruteforce, embedded_primes, irreducible_decomposition,
                            irreducible_decomposition_split, minimal_primes, witness_for_prime)
from .errors import (MonIdealError, NotSquarefreeError, ResourceLimitError, RingMismatchError,
                     UnitIdealError, ZeroIdealError, budget)
from .ideal import (MonomialIdeal, colon_by_ideal, colon_by_monomial, delete_variable,
                    independence_number, intersection, power, product, radical, saturation)
from .properties import (AssTable, Prop, PropertyReport, Verdict, ass_table,
                         check_normally_torsion_free, check_persistence, check_strong_persistence,
                         check_symbolic_strong_persistence, check_well_nearly_ntf,
                         classify_nearly_ntf, stability_observation, symbolic_power)
from .ring import Monomial, RingCtx
from .transforms import ExpansionSpec, PolarizationMap, depolarize, expand, polarize

__version__ = "0.1.0"

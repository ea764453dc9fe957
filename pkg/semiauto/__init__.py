"""semiauto - automatic structures for semigroups.

Relation algebra over padded pair alphabets, uniform decision procedures,
Rees matrix decompositions and the Turing machine encoding of right
invertibility.
"""

__version__ = "0.4.0"
__app_name__ = "semiauto"
__license__ = "MIT"

"""Ramification data for elementary abelian p-extensions of local fields.

Everything is re-exported from the compiled _ramlab module: break sequences
and Hasse-Herbrand data, different/discriminant valuations, Artin-Schreier
class reduction over F_q((pi)), and p-adic norm congruence checks.  All values
are exact (python ints, however large).
"""

try:
    from ramlab._ramlab import *  # noqa: F401,F403
except ImportError:  # running against an in-build extension on PYTHONPATH
    from _ramlab import *  # noqa: F401,F403

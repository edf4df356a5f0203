"""Strong standard bases over the integers, integers mod n and the rationals."""
__version__ = "0.1.0"

# cli and executor are not imported here; `python -m zbasis` loads them.
from zbasis.coeffring import RingDescriptor
from zbasis.config import EcartRule, StdConfig, Strategy
from zbasis.engine import std, std_with_stats
from zbasis.parser import IdealSource, format_ideal_source, format_polynomial, parse_ideal_file
from zbasis.polynomial import MonomialOrdering, Polynomial
from zbasis.precheck import pre_integer_check
from zbasis.verify import equivalent, in_ideal, is_strong_basis

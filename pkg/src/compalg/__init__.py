"""compalg: exact algebra for tower-constrained polynomial subrings and
monoid domains, plus the toy ciphers built on those structures.

Everything is desk-scale and oracle-grade: brute-force searches back
every criterion, all values are immutable, and all randomness threads
through explicit seeds.
"""

from .arith import is_prime, is_primitive_root
from .rings import (
    ExtensionField,
    Integers,
    IntegersMod,
    PrimeField,
    Ring,
    RingElement,
    default_extension_field,
    embed,
    has_embedding,
)
from .poly import (
    Factorization,
    Polynomial,
    all_polynomials,
    irreducible_monic_polynomials,
    monic_polynomials,
    search_inverse,
)
from .composite import (
    CompositeElement,
    DivisorChain,
    Tower,
    atomize,
    contains,
    divisor_chain,
    has_nontrivial_factorization,
)
from .monoid_domain import (
    IrreducibleCertificate,
    MonoidElement,
    NumericalMonoid,
    build_irreducible,
    is_irreducible_by_search,
)
from .ideals import (
    PrincipalIdeal,
    ideal,
    inverse_ideal,
    reduce_ideal,
    totient_ideal,
)
from .alphabet import (
    Alphabet,
    decode,
    encode,
    fixed_picker,
    seeded_picker,
    upper_latin,
    zero_picker,
)
from .errors import (
    CeilingError,
    CompalgError,
    EmbeddingError,
    FormatError,
    MembershipError,
    NotAUnitError,
    ParameterError,
    RingMismatchError,
)

__version__ = "0.1.0"

"""Exact arithmetic and fast inversion in Z_{2^n - 1}.

The ring layer provides fold-based Mersenne reduction, the order of 2,
and a division-free extended-gcd oracle; `inv.invert` computes inverses
by recursive reduction along the order of 2 modulo d; `families` holds
the closed-form inverses of the classical APN exponent families; and
`verify` supplies exhaustive small-field differential and Walsh ground
truth.
"""

from .bitseq import (BitSeq, complement, concat, from_string,
                     mersenne_multiple_decompose, to_seq, weight)
from .families import (FAMILY_NAMES, ConjectureProbe, ExponentSpec,
                       Invertibility, allones_inverse, closed_form_inverse,
                       dobbertin_doubled_support, dobbertin_inverse,
                       exponent_value, family_order, gold_inverse,
                       gold_nyberg_inverse, gold_shift_claim, is_invertible,
                       kasami_conjecture_probe, kasami_gold_bridge,
                       kasami_inverse, kasami_special_inverse, niho_inverse,
                       welch_inverse)
from .inv import (ConcatStructure, InverseResult, SQuantity, TraceStep,
                  concat_structure, invert, lift_inverse, lift_inverse_concat,
                  lift_inverse_direct, reflect_inverse, replay_trace,
                  s_quantity, weight_via_half_order)
from .ring import (MersenneRing, NotInvertible, Residue, euclid_inverse,
                   gcd_with_modulus, int_from_text, int_to_text, mul,
                   order_of_two, reduce)
from .verify import (IRREDUCIBLE, FieldCtx, algebraic_degree,
                     differential_spectrum, is_ab, is_apn, is_irreducible,
                     spectrum_report)

__version__ = "0.1.0"

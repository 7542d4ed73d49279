"""Twists, pseudo-twists and 2-cocycle deformations."""

from src.twisting.cocycle import (
    Cocycle, CocycleVerdict, bicharacter_cocycle, check_cocycle, convolution_inverse,
    cotwist_hopf, induced_cocycle, klein_bicharacter, make_cocycle, one_sided_twisted_algebras,
    trivial_cocycle
)
from src.twisting.twist import (
    NEITHER, PSEUDO_TWIST, TWIST, TransportVerdict, TwistElement, TwistVerdict,
    TwistedImageVerdict, check_pseudo_twist, group_twist, hopf_ideal_transport, make_twist,
    twist_hopf, twisted_hopf_image_check
)

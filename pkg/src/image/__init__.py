"""Representations, convolution closures and Hopf images."""

from src.image.closure import ConvolutionClosure, compute_closure, convolve
from src.image.hopf_image import (
    FactorizationVerdict, HopfImageResult, check_factorization, faithful_tensor_ideal,
    hopf_image, hopf_map_kernel_check, is_inner_faithful, is_projectively_inner_faithful,
    maximality_check, tensor_image_surjection
)
from src.image.representation import (
    Representation, compose_with_target_isomorphism, counit_rep, hopf_map_rep, identity_rep,
    is_algebra_isomorphism, tensor_rep, validate_rep
)

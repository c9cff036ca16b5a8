"""Exact computations in the two-parameter quantum groups U_{r,s}(gl_n) and U_{r,s}(sl_n)."""

from .scalars import ONE, ZERO, Scalar
from .presentation import Algebra, Element, Generator, normal_form, relations
from .hopf import TensorElement, antipode, coproduct, counit, tensor
from .pairing import dual_bases, f_form, get_context, graded_basis, pair_words, presentation_check
from .double import cross_product, phi, verify_double_iso
from .cat_o import Weight, WeightModule, act, verma
from .braiding import build_R, casimir, hexagon_check, qybe_check, theta
from .serialize import export_json

__version__ = "0.1.0"

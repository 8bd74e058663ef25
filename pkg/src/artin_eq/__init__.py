"""Word problem, center, roots and distinguishing sentences for Artin groups of type A, B, D, I2."""

from .center import center_data, center_generator, check_central, fundamental_element, verify_delta_identities
from .config import Caps, CapExceeded
from .coxeter import (
    Bipartition,
    CoxeterMatrix,
    FamilySpec,
    bipartition,
    build_diagram,
    parse_group_spec,
    validate,
)
from .coxgroup import (
    GroupTable,
    cox_length,
    cox_product,
    derive_coxeter_number,
    descents,
    element_order,
    enumerate_group,
)
from .mcg import distinguish_mcg, max_cyclic_order
from .monoid import (
    GroupElement,
    NormalForm,
    artin_monoid,
    equal_positive,
    equal_positive_bfs,
    lambda_length,
    normal_form,
    support,
)
from .roots import RootAnswer, RootSpectrum, explicit_root, has_kth_root, max_root_exponent, root_spectrum
from .theory import EquivalenceVerdict, Sentence, distinguish, eval_on_finite_group, holds_phi, is_kahr, phi, psi

__version__ = "0.1.0"

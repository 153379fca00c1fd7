"""modtwist: exact computations around the modular curves X(N,p), the
structure of their automorphism groups, and the Galois twists classifying
projective mod-p representations realized by quadratic twists of elliptic
curves."""

from .arith import (
    Discriminant,
    Level,
    class_number,
    class_number_primitive,
    divisors,
    euler_phi,
    kronecker,
    least_nonsquare,
    lift_sqrt_mod_p2,
    psi_index,
    sqrt_mod,
)
from .curves import (
    CuspData,
    GenusReport,
    al_fixed_points,
    cusps_X0,
    cusps_oracle,
    genus_AL_quotient,
    genus_X0,
    genus_XNp,
    genus_XNp_hurwitz,
    lemma_pairs,
    low_genus_XNp,
    xplus_verdict,
)
from .extgroup import (
    IntMat,
    InvolutionReport,
    WGroupReport,
    build_generators,
    involutions_extending_wN,
    verify_relations,
    wgroup,
)
from .galmodel import (
    Case,
    DegreeData,
    FiniteGaloisModel,
    FiniteGroup,
    QuadraticCharacter,
    classify,
    deg_p_character,
    det_varrho,
    oddness_check,
    validate_model,
    verify_splitting,
)
from .modelfile import ModelParseError, parse_and_validate, parse_model
from .moduli import (
    ModuliState,
    act_G,
    act_galois,
    act_w,
    normal_form,
    rationality_condition,
    verify_galois_conjugation,
    verify_w_rationality,
)
from .projgroup import (
    Mat2,
    MatGroup,
    ProjMat,
    center,
    centralizer,
    closure,
    hat,
    in_psl2,
    pgl2,
    proj_normalize,
    psl2,
)
from .twists import (
    Ambient,
    CentralizerVerdict,
    Cocycle,
    ParityError,
    TwistPlan,
    build_xi,
    centralizer_verdict,
    check_cocycle,
    cohomologous,
    eta,
    model_corpus,
    rho_star,
    twist_plan,
)

__version__ = "0.1.0"

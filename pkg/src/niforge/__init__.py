"""Negative-imaginary systems: certification and state-feedback synthesis."""

from .analysis import (NIVerdict, RiccatiData, Verdict, build_riccati_data,
                       hamiltonian_of, hamiltonian_singularity_check,
                       ni_frequency_check, ni_indicator, orthant_ni_check,
                       riccati_residual, sni_frequency_check, sni_riccati_check)
from .exceptions import (AssumptionError, DimensionError, ModelParseError,
                         NearPoleError, NIForgeError, NumericError,
                         PreconditionError, ScopeError)
from .linalg import (SchurSplit, eigenvalues, ordered_real_schur,
                     solve_stable_lyapunov, sym_min_eig)
from .statespace import (StateSpace, UncertainPlant, bode, close_loop,
                         freq_response, is_minimal, poles, shift)
from .synthesis import (SchurData, SynthesisResult, VerificationReport,
                        design_matrix, schur_pipeline, solve_TS, synthesize,
                        verify_synthesis)

__version__ = "0.1.0"

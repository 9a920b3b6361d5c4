"""Error taxonomy shared across modules.

InputError: the input is malformed or violates a structural precondition
(bad rational literal, J^2 != -I, Jacobi failure, non-unimodular algebra,
non-real coefficient data).  CLI exit code 2.

RefusalError: the input is well formed but outside the range of the exact
derivations this package implements (for example a torus structure whose
obstruction vanishes without the coefficients being constant).  The honest
answer is to refuse rather than guess.  CLI exit code 1.
"""


class InputError(ValueError):
    pass


class RefusalError(RuntimeError):
    pass

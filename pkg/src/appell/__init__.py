"""Exact computation of reciprocal Appell polynomials and Faulhaber-type polynomials."""
from .appell import (
    IdentityError,
    ReflectionRequired,
    ag_derivative,
    ag_derivative_at_one,
    appell_poly,
    ar_derivative_at_one,
    as_nk,
    as_poly,
    check_reflection,
    generalized_reciprocal,
    reciprocal_appell,
)
from .exact_arith import (
    PHI,
    QuadRational,
    Rational,
    binomial,
    falling_factorial,
    fibonacci,
    lah,
)
from .family import AppellFamily, load_family, make_family
from .faulhaber import (
    FaulhaberPoly,
    a_nk,
    faulhaber_decompose,
    fp_reconstruct,
    lambda_sum,
)
from .kernels import BACKEND
from .poly import (
    BivariatePolynomial,
    LaurentPolynomial,
    Polynomial,
    TruncatedSeries,
    palindrome_class,
    reciprocal_star,
)
from .powersum import (
    classical_faulhaber,
    power_sum_bernoulli,
    power_sum_direct,
    power_sum_faulhaber,
)
from .umbral import alpha_rs, ap_rs, ap_rs_bivariate

__version__ = "0.1.0"

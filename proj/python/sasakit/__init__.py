"""Sasaki-Einstein Reeb parameters and transverse Kahler-Einstein profiles.

Thin Python front end over the C++ core: exact rational quantities cross the
boundary as fraction strings, numerical ones as floats.
"""

from sasakit._core import (  # noqa: F401
    Chart,
    CheckResult,
    FanoBaseSpec,
    MomentData,
    MomentSample,
    ProfileRow,
    ProfileTable,
    ProfileTolerances,
    ReebSolution,
    VerificationReport,
    __version__,
    b_value,
    build_profile,
    evaluate_fiber_metric,
    f_derivative_value,
    f_value,
    fermat_hypersurface,
    futaki_obstruction,
    futaki_obstruction_float,
    grassmannian,
    invert_b,
    make_spec,
    moment_function,
    parse_spec_source,
    product_projective_spaces,
    solution_from_json,
    solve_reeb_parameter,
    spec_from_json,
    verify_profile,
)

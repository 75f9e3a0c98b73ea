from anisobolev.sobolev.terms import (  # noqa (API import)
    TildeProfile,
    SobolevTerms,
    sobolev_terms,
    tilde_profiles,
    gradient_profiles,
    multiplicative_rhs,
)

"""Exact constructions and irreducibility certificates for families of maps
with a preperiodic critical point.

The heavy lifting lives in the compiled extension ``_dynirr``; this package
decodes its JSON payloads into plain dicts and adds small conveniences.
"""

import json as _json

try:
    from . import _dynirr  # wheel layout: extension inside the package
except ImportError:
    import _dynirr  # build-tree layout: extension on sys.path

__version__ = _dynirr.__version__

default_budget = _dynirr.default_budget
verify_certificate = _dynirr.verify_certificate
is_irreducible_mod_p = lambda poly: _dynirr.is_irreducible_mod_p(_json.dumps(poly))


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    return call


cubic_build = _wrap(_dynirr.cubic_build)
cubic_verify = _wrap(_dynirr.cubic_verify)
cubic_certify = _wrap(_dynirr.cubic_certify)
quad_build = _wrap(_dynirr.quad_build)
quad_verify = _wrap(_dynirr.quad_verify)
quad_certify = _wrap(_dynirr.quad_certify)
uni_orbit_poly = _wrap(_dynirr.uni_orbit_poly)
uni_gleason_poly = _wrap(_dynirr.uni_gleason_poly)
uni_factor = _wrap(_dynirr.uni_factor)
uni_pipeline = _wrap(_dynirr.uni_pipeline)
uni_resultant_check = _wrap(_dynirr.uni_resultant_check)
uni_survey = _wrap(_dynirr.uni_survey)
uni_gleason_check = _wrap(_dynirr.uni_gleason_check)
validate_cubic_slice = _wrap(_dynirr.validate_cubic_slice)
validate_unicritical = _wrap(_dynirr.validate_unicritical)


def poly(var, coeffs):
    """Univariate polynomial in the JSON schema; coefficients may be ints."""
    return {"var": var, "coeffs": [str(c) for c in coeffs]}


def poly_mul(f, g):
    return _json.loads(_dynirr.poly_mul(_json.dumps(f), _json.dumps(g)))


def poly_exact_div(f, g):
    return _json.loads(_dynirr.poly_exact_div(_json.dumps(f), _json.dumps(g)))


def resultant(f, g):
    return int(_dynirr.resultant(_json.dumps(f), _json.dumps(g)))


def reduce_mod(f, p):
    return _json.loads(_dynirr.reduce_mod(_json.dumps(f), p))


def eisenstein_classic(f, p):
    return _json.loads(_dynirr.eisenstein_classic(_json.dumps(f), p))


def eisenstein_general(A, B, p):
    return _json.loads(_dynirr.eisenstein_general(_json.dumps(A), _json.dumps(B), p))


def all_roots(f):
    roots, converged = _dynirr.all_roots(_json.dumps(f))
    return [complex(z) for z in roots], converged

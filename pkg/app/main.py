import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from fastapi import FastAPI, HTTPException
import logging
from prometheus_fastapi_instrumentator import Instrumentator
from sympy import isprime

from app.schemas import BoundsRequest, DecideRequest, HealthResponse, PCurvatureRequest
from pcurv_algebraicity import config
from pcurv_algebraicity.bounds.dyadic import Dyadic
from pcurv_algebraicity.bounds.effective import effective_bounds
from pcurv_algebraicity.bounds.root_radius import cauchy_bound, root_radius_upper
from pcurv_algebraicity.cli.parser import parse_ratfun
from pcurv_algebraicity.cli.schemas import (
    BoundsOutput,
    DecideOutput,
    PCurvatureOutput,
    bounds_output,
    decide_output,
    pcurvature_output,
)
from pcurv_algebraicity.deciders.by_roots import decide_by_roots
from pcurv_algebraicity.deciders.honda import decide_honda
from pcurv_algebraicity.pcurvature.naive import curvature_naive
from pcurv_algebraicity.errors import NoOrdinaryPointError
from pcurv_algebraicity.pcurvature.prefix import (
    BAD_PRIME,
    ZERO,
    OutcomeKind,
    PCurvOutcome,
    curvature_outcome,
    curvature_prefix,
)
from pcurv_algebraicity.residues.normal_form import StructuralClass, classify, normalize
from pcurv_algebraicity.residues.resultants import delta_of, rothstein_trager

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

app = FastAPI(title="p-curvature algebraicity API")

# Instrument app for Prometheus metrics
Instrumentator().instrument(app).expose(app)

# A request without max_prime never scans past this
DEFAULT_MAX_PRIME = 10**5


def _admissible(expr: str):
    parsed = parse_ratfun(expr)
    nf = normalize(parsed.a_raw, parsed.b_raw)
    structure = classify(nf)
    if structure is not StructuralClass.ADMISSIBLE:
        raise ValueError(f"input is not admissible: {structure.value}")
    return nf


@app.get("/health", response_model=HealthResponse)
async def health():
    """Health check endpoint."""
    return HealthResponse(status="ok")


@app.post("/decide", response_model=DecideOutput, response_model_exclude_none=True)
def decide(request: DecideRequest):
    """Decide algebraicity of the solutions of y' = u y."""
    try:
        parsed = parse_ratfun(request.expr)
        if request.method == "roots":
            verdict = decide_by_roots(parsed.a_raw, parsed.b_raw)
            delta = delta_of(normalize(parsed.a_raw, parsed.b_raw).b) if parsed.a_raw else None
            return decide_output(verdict, request.method, delta)
        budget = request.max_prime or config.get_max_prime() or DEFAULT_MAX_PRIME
        verdict, report = decide_honda(
            parsed.a_raw,
            parsed.b_raw,
            budget=budget,
            n_jobs=config.get_threads(),
            rel_tol=config.get_root_tolerance(),
        )
        return decide_output(verdict, request.method, report.delta if report else None, report)

    except (ValueError, ZeroDivisionError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Decision error: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Decision failed: {str(e)}")


@app.post("/bounds", response_model=BoundsOutput)
def bounds(request: BoundsRequest):
    """Effective prime bound sigma and its ingredients."""
    try:
        nf = _admissible(request.expr)
        rt = rothstein_trager(nf.a, nf.b)
        B = root_radius_upper(rt.R, config.get_root_tolerance()).max(Dyadic.from_int(1))
        report = effective_bounds(rt.delta, B, config.get_frac_bits())
        return bounds_output(nf.degree, nf.height, report, cauchy_bound(rt.R))

    except (ValueError, ZeroDivisionError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Bounds error: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Bounds failed: {str(e)}")


@app.post("/pcurvature", response_model=PCurvatureOutput, response_model_exclude_none=True)
def pcurvature(request: PCurvatureRequest):
    """Nullity of one p-curvature of the normal form a/b."""
    try:
        if not isprime(request.p):
            raise ValueError(f"{request.p} is not a prime")
        nf = _admissible(request.expr)
        delta = delta_of(nf.b)
        if not request.naive:
            try:
                prefix, outcome = curvature_prefix(nf.a, nf.b, request.p, delta)
            except NoOrdinaryPointError:
                return pcurvature_output(request.p, curvature_outcome(nf.a, nf.b, request.p, delta))
            return pcurvature_output(request.p, outcome, prefix)
        if delta % request.p == 0:
            outcome = BAD_PRIME
        elif curvature_naive(nf.a, nf.b, request.p).is_zero():
            outcome = ZERO
        else:
            outcome = PCurvOutcome(OutcomeKind.NONZERO)
        return pcurvature_output(request.p, outcome)

    except (ValueError, ZeroDivisionError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"p-curvature error: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"p-curvature failed: {str(e)}")

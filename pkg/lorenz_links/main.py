# CHECKPOINT_10_API_INTEGRATION
"""
FastAPI Main Application
========================
REST surface for the Lorenz link verifier.
"""

import time
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from lorenz_links.api import battery, links
from lorenz_links.config import config_summary, settings, validate_config
from lorenz_links.topology.errors import InvariantError
from lorenz_links.utils.logger import setup_logging

logger = setup_logging()


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Application lifespan manager.
    Validates configuration on startup.
    """
    logger.info(f"Starting {settings.APP_NAME} API...")
    try:
        validate_config()
        logger.info(f"✓ Configuration validated: {config_summary()}")
    except ValueError as e:
        logger.error(f"✗ Configuration error: {e}")
        raise

    yield

    logger.info("Shutting down application...")


# ============================================
# Create FastAPI App
# ============================================

app = FastAPI(
    title=settings.APP_NAME,
    version=settings.APP_VERSION,
    description="Lorenz links, T-links and diagonal grid diagrams cross-checked by link invariants",
    lifespan=lifespan,
    docs_url="/docs",
    redoc_url="/redoc",
)


@app.middleware("http")
async def add_process_time_header(request: Request, call_next):
    """Add processing time to response headers"""
    start_time = time.time()
    response = await call_next(request)
    response.headers["X-Process-Time"] = str(time.time() - start_time)
    return response


# ============================================
# Error Handlers
# ============================================

@app.exception_handler(RequestValidationError)
async def request_validation_handler(request: Request, exc: RequestValidationError):
    """Malformed request bodies are input errors"""
    logger.error(f"Request validation error: {exc.errors()}")
    return JSONResponse(
        status_code=400,
        content={"error": "Validation Error", "detail": str(exc.errors()[0]["msg"])},
    )


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    """Handle input errors"""
    logger.error(f"Validation error: {exc}")
    return JSONResponse(status_code=400, content={"error": "Validation Error", "detail": str(exc)})


@app.exception_handler(InvariantError)
async def invariant_error_handler(request: Request, exc: InvariantError):
    """An identity that must hold did not"""
    logger.error(f"Invariant error: {exc}", exc_info=True)
    return JSONResponse(status_code=500, content={"error": "Invariant Error", "detail": str(exc)})


@app.exception_handler(Exception)
async def general_exception_handler(request: Request, exc: Exception):
    """Handle unexpected errors"""
    logger.error(f"Unexpected error: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content={"error": "Internal Server Error", "detail": "An unexpected error occurred"},
    )


# ============================================
# Root Endpoints
# ============================================

@app.get("/")
async def root():
    """API root endpoint"""
    return {
        "name": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "status": "running",
        "docs": "/docs",
        "endpoints": {
            "links": f"{settings.API_PREFIX}/links",
            "battery": f"{settings.API_PREFIX}/battery",
        },
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "environment": settings.ENVIRONMENT,
        "bracket_method": settings.BRACKET_METHOD,
        "version": settings.APP_VERSION,
    }


# ============================================
# API Routers
# ============================================

app.include_router(links.router, prefix=settings.API_PREFIX, tags=["Links"])
app.include_router(battery.router, prefix=settings.API_PREFIX, tags=["Battery"])

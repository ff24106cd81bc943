"""The single error envelope every non-2xx response uses.

Body shape: {"error": {"code": UPPER_SNAKE, "message": str, "details": ...}}.
Storage and auth exceptions are translated here so route handlers mostly
just let them propagate.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..auth import AuthError, ValidationFailed
from ..domain import InvalidBloodGroup
from ..storage import errors as store_errors


class ApiError(Exception):
    """Raised by handlers for request-level failures."""

    def __init__(self, status_code: int, code: str, message: str, details=None):
        super().__init__(message)
        self.status_code = status_code
        self.code = code
        self.message = message
        self.details = details


def envelope(status_code: int, code: str, message: str, details=None) -> JSONResponse:
    body: dict = {"error": {"code": code, "message": message}}
    if details is not None:
        body["error"]["details"] = details
    return JSONResponse(status_code=status_code, content=body)


_STORE_STATUS = {
    "DUPLICATE_EMAIL": 409,
    "FIELD_TOO_LONG": 422,
    "UNKNOWN_USER": 404,
    "UNKNOWN_DONOR": 404,
    "UNKNOWN_PATIENT": 404,
    "UNKNOWN_REQUEST": 404,
    "UNKNOWN_RECIPIENT": 404,
    "UNKNOWN_NOTIFICATION": 404,
    "FUTURE_DATE": 422,
    "ILLEGAL_REQUEST_STATE": 409,
    "INVALID_ROLE_PAYLOAD": 422,
    "INVALID_QUANTITY": 422,
    "EMPTY_BODY": 422,
    "BODY_TOO_LONG": 422,
    "SELF_MESSAGE": 422,
    "PAYLOAD_TOO_LONG": 422,
    "MIGRATION_ERROR": 500,
    "STORE_UNREACHABLE": 503,
}

_AUTH_STATUS = {
    "VALIDATION_FAILED": 422,
    "PASSWORD_POLICY": 422,
    "INVALID_CREDENTIALS": 401,
}

_HTTP_CODES = {
    400: "BAD_REQUEST",
    401: "UNAUTHORIZED",
    403: "FORBIDDEN",
    404: "NOT_FOUND",
    405: "METHOD_NOT_ALLOWED",
    422: "VALIDATION_FAILED",
}


def install_error_handlers(app: FastAPI) -> None:
    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return envelope(exc.status_code, exc.code, exc.message, exc.details)

    @app.exception_handler(store_errors.StoreError)
    async def on_store_error(request: Request, exc: store_errors.StoreError):
        status = _STORE_STATUS.get(exc.code, 500)
        return envelope(status, exc.code, str(exc))

    @app.exception_handler(InvalidBloodGroup)
    async def on_bad_group(request: Request, exc: InvalidBloodGroup):
        return envelope(422, exc.code, str(exc))

    @app.exception_handler(AuthError)
    async def on_auth_error(request: Request, exc: AuthError):
        status = _AUTH_STATUS.get(exc.code, 400)
        details = exc.report.as_dict() if isinstance(exc, ValidationFailed) else None
        return envelope(status, exc.code, str(exc), details)

    @app.exception_handler(RequestValidationError)
    async def on_request_validation(request: Request, exc: RequestValidationError):
        problems = exc.errors()
        if any(p.get("type") == "json_invalid" for p in problems):
            return envelope(400, "BAD_REQUEST", "request body is not valid JSON")
        details = [
            {"loc": [str(part) for part in p.get("loc", [])], "message": p.get("msg", "")}
            for p in problems
        ]
        return envelope(422, "VALIDATION_FAILED", "request did not match the endpoint schema", details)

    @app.exception_handler(StarletteHTTPException)
    async def on_http_exception(request: Request, exc: StarletteHTTPException):
        code = _HTTP_CODES.get(exc.status_code, "HTTP_ERROR")
        return envelope(exc.status_code, code, str(exc.detail))

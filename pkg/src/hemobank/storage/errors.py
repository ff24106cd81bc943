"""Typed storage failures. `code` is the stable machine-readable error code."""


class StoreError(Exception):
    code = "STORE_ERROR"

    def __init__(self, message: str | None = None):
        super().__init__(message or self.code.replace("_", " ").lower())


class DuplicateEmail(StoreError):
    code = "DUPLICATE_EMAIL"


class FieldTooLong(StoreError):
    code = "FIELD_TOO_LONG"


class UnknownUser(StoreError):
    code = "UNKNOWN_USER"


class UnknownDonor(StoreError):
    code = "UNKNOWN_DONOR"


class UnknownPatient(StoreError):
    code = "UNKNOWN_PATIENT"


class UnknownRequest(StoreError):
    code = "UNKNOWN_REQUEST"


class UnknownRecipient(StoreError):
    code = "UNKNOWN_RECIPIENT"


class UnknownNotification(StoreError):
    code = "UNKNOWN_NOTIFICATION"


class FutureDate(StoreError):
    code = "FUTURE_DATE"


class IllegalRequestState(StoreError):
    code = "ILLEGAL_REQUEST_STATE"


class InvalidRolePayload(StoreError):
    code = "INVALID_ROLE_PAYLOAD"


class InvalidQuantity(StoreError):
    code = "INVALID_QUANTITY"


class EmptyBody(StoreError):
    code = "EMPTY_BODY"


class BodyTooLong(StoreError):
    code = "BODY_TOO_LONG"


class SelfMessage(StoreError):
    code = "SELF_MESSAGE"


class PayloadTooLong(StoreError):
    code = "PAYLOAD_TOO_LONG"


class MigrationError(StoreError):
    code = "MIGRATION_ERROR"


class StoreUnreachable(StoreError):
    code = "STORE_UNREACHABLE"

"""User-to-user messaging and in-app notifications."""

from __future__ import annotations

from fastapi import APIRouter, Query, Request

from ..auth import Session
from .deps import require_session
from .errors import ApiError
from .schemas import ConversationOut, MessageIn, MessageOut, NotificationOut

router = APIRouter(tags=["social"])


def _message_payload(row) -> dict:
    return {
        "message_id": row.message_id,
        "sender_user_id": row.sender_user_id,
        "recipient_user_id": row.recipient_user_id,
        "body": row.body,
        "sent_at": row.sent_at,
        "read": row.read,
    }


@router.post("/messages", status_code=201, response_model=MessageOut)
def send_message(body: MessageIn, request: Request):
    session = require_session(request)
    state = request.app.state
    if state.store.get_user(body.recipient_user_id) is None:
        raise ApiError(404, "UNKNOWN_RECIPIENT", f"no user {body.recipient_user_id}")
    row = state.store.insert_message(session.user_id, body.recipient_user_id, body.body)
    return _message_payload(row)


@router.get("/messages/conversations", response_model=list[ConversationOut])
def list_conversations(request: Request):
    session = require_session(request)
    summaries = request.app.state.store.list_conversation_partners(session.user_id)
    return [
        {
            "user_id": s.user_id,
            "name": s.name,
            "last_message_at": s.last_message_at,
            "unread_count": s.unread_count,
        }
        for s in summaries
    ]


@router.get("/messages/with/{user_id}", response_model=list[MessageOut])
def get_conversation(
    user_id: int,
    request: Request,
    offset: int = Query(default=0),
    limit: int = Query(default=50),
):
    session = require_session(request)
    state = request.app.state
    if state.store.get_user(user_id) is None:
        raise ApiError(404, "UNKNOWN_USER", f"no user {user_id}")
    if not (1 <= limit <= 100):
        raise ApiError(422, "VALIDATION_FAILED", "limit must be in [1, 100]")
    if offset < 0:
        raise ApiError(422, "VALIDATION_FAILED", "offset must be >= 0")
    page = state.store.list_conversation(session.user_id, user_id, offset=offset, limit=limit)
    # Fetching a page of the thread counts as reading the incoming messages.
    incoming = [m.message_id for m in page if m.recipient_user_id == session.user_id and not m.read]
    if incoming:
        state.store.mark_messages_read(incoming)
        page = state.store.list_conversation(session.user_id, user_id, offset=offset, limit=limit)
    return [_message_payload(m) for m in page]


@router.get("/notifications", response_model=list[NotificationOut])
def list_notifications(request: Request):
    session = require_session(request)
    rows = request.app.state.store.list_notifications(session.user_id)
    return [
        {
            "notification_id": n.notification_id,
            "kind": n.kind.value,
            "payload": n.payload,
            "created_at": n.created_at,
            "read": n.read,
        }
        for n in rows
    ]


@router.post("/notifications/{notification_id}/read", response_model=NotificationOut)
def mark_notification_read(notification_id: int, request: Request):
    session = require_session(request)
    row = request.app.state.store.mark_notification_read(notification_id, session.user_id)
    return {
        "notification_id": row.notification_id,
        "kind": row.kind.value,
        "payload": row.payload,
        "created_at": row.created_at,
        "read": row.read,
    }

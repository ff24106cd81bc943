"""Operations CLI: migrate, seed, create-admin, serve.

Exit codes: 0 success, 1 operational failure, 2 usage error.
"""

from __future__ import annotations

import secrets

import click

from .auth import PasswordHasher
from .config import AppConfig
from .domain import validate_required
from .seeds import SEED_PROFILES, seed_profile
from .storage import RoleKind, create_store
from .storage.errors import DuplicateEmail, StoreError

_db_option = click.option(
    "--database-url",
    envvar="DATABASE_URL",
    required=True,
    help="Store connection string (memory:// or sqlite:///path.db). Env: DATABASE_URL.",
)


def _open_store(database_url: str):
    try:
        return create_store(database_url)
    except (ValueError, StoreError) as exc:
        raise click.ClickException(str(exc)) from exc


def _require_migrated(store):
    if store.schema_version() is None:
        raise click.ClickException("store is not migrated; run `hemobank migrate` first")


@click.group()
def main():
    """Blood donation service operations tool."""


@main.command()
@_db_option
def migrate(database_url: str):
    """Create or verify the database schema."""
    store = _open_store(database_url)
    try:
        already = store.schema_version()
        version = store.migrate()
    except StoreError as exc:
        raise click.ClickException(str(exc)) from exc
    if already is None:
        click.echo(f"migrated to version {version}")
    else:
        click.echo(f"already at version {version}")


@main.command()
@_db_option
@click.option("--profile", type=click.Choice(SEED_PROFILES), default="fig6", show_default=True)
@click.option("--hash-cost", envvar="PASSWORD_HASH_COST", type=int, default=None, hidden=True)
def seed(database_url: str, profile: str, hash_cost: int | None):
    """Load a demo data profile (idempotent by email)."""
    store = _open_store(database_url)
    _require_migrated(store)
    hasher = PasswordHasher(iterations=hash_cost) if hash_cost else PasswordHasher()
    try:
        created = seed_profile(store, profile, hasher)
    except StoreError as exc:
        raise click.ClickException(str(exc)) from exc
    if not created:
        click.echo("nothing to do")
        return
    click.echo(f"seeded {len(created)} account(s); passwords are shown once:")
    for email, password in created.items():
        click.echo(f"  {email}  password: {password}")


@main.command("create-admin")
@click.argument("name")
@click.argument("email")
@_db_option
@click.option("--hash-cost", envvar="PASSWORD_HASH_COST", type=int, default=None, hidden=True)
def create_admin(name: str, email: str, database_url: str, hash_cost: int | None):
    """Create the bootstrap admin account; prints its one-time password."""
    report = validate_required({"name": name, "email": email})
    if not report.ok:
        problems = list(report.missing_fields) + [f for f, _ in report.malformed_fields]
        raise click.ClickException(f"invalid field(s): {', '.join(problems)}")
    store = _open_store(database_url)
    _require_migrated(store)
    hasher = PasswordHasher(iterations=hash_cost) if hash_cost else PasswordHasher()
    password = secrets.token_urlsafe(9)
    try:
        user = store.insert_user(name.strip(), email.strip(), hasher.hash(password))
        store.upsert_role(user.user_id, RoleKind.ADMIN, {})
    except DuplicateEmail as exc:
        raise click.ClickException(str(exc)) from exc
    except StoreError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(f"admin created: {email} (user {user.user_id})")
    click.echo(f"one-time password: {password}")


@main.command()
@_db_option
@click.option("--port", envvar="PORT", type=int, default=8080, show_default=True)
@click.option("--host", default="0.0.0.0", show_default=True)
def serve(database_url: str, port: int, host: str):
    """Run the HTTP service until terminated; drains in-flight requests on shutdown."""
    import signal

    import uvicorn

    from .service import create_app

    config = AppConfig.from_env(database_url=database_url, port=port)
    store = _open_store(database_url)
    if store.schema_version() is None:
        if database_url.startswith("memory"):
            store.migrate()  # an in-process store has no other migration path
        else:
            raise click.ClickException("store is not migrated; run `hemobank migrate` first")
    app = create_app(store=store, config=config)
    server = uvicorn.Server(uvicorn.Config(app, host=host, port=config.port, log_level="info"))

    # uvicorn drains and then re-raises the termination signal with the
    # pre-run handler restored; make that handler benign so a signalled
    # shutdown still exits 0.
    def request_shutdown(signum, frame):
        server.should_exit = True

    signal.signal(signal.SIGTERM, request_shutdown)
    signal.signal(signal.SIGINT, request_shutdown)
    try:
        server.run()
    except (OSError, SystemExit) as exc:
        if isinstance(exc, SystemExit) and not exc.code:
            return
        raise click.ClickException(f"server failed to start: {exc}") from exc


if __name__ == "__main__":
    main()

import functools
import json
from pathlib import Path
from typing import Optional

import click
from pydantic import BaseModel, ValidationError

from app.config import logger
from app.exceptions import BudgetExceededError, ImmersionError
from app.models.certificate_schemas import ImmersionCertificate

GRAPH_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)
OUTPUT_FILE = click.Path(dir_okay=False, writable=True, path_type=Path)


class CommandFailed(click.ClickException):
    """Negative answer or input error; exit status 1."""

    exit_code = 1


class BudgetExhausted(click.ClickException):
    exit_code = 3


def handle_errors(func):
    """Map library exceptions onto exit statuses."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BudgetExceededError as e:
            logger.warning(f"⚠️ {e}")
            raise BudgetExhausted(str(e)) from e
        except ImmersionError as e:
            logger.error(f"❌ {e}")
            raise CommandFailed(str(e)) from e

    return wrapper


def validated(model: type[BaseModel], **values) -> BaseModel:
    """Build an option model; validation failures are usage errors (exit 2)."""
    try:
        return model(**values)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise click.UsageError(messages) from e


def load_certificate(path: Path) -> ImmersionCertificate:
    try:
        return ImmersionCertificate.model_validate_json(Path(path).read_text())
    except ValidationError as e:
        raise CommandFailed(f"{path}: not a certificate document ({e.error_count()} errors)")


def certificate_text(certificate: ImmersionCertificate) -> str:
    return certificate.model_dump_json(indent=2) + "\n"


def json_text(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def emit(text: str, output: Optional[Path] = None):
    """Write a document to ``output``, or to stdout when none is given."""
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text)
        logger.info(f"Wrote {output}")

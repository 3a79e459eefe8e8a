import hashlib
import json
import random
from datetime import datetime, timezone
from importlib.metadata import PackageNotFoundError, version


def get_digest(payload) -> str:
    """
    Returns the sha256 of the canonical JSON form of `payload`.

    :return: str.
    """
    canonical = json.dumps(
        payload, sort_keys=True, separators=(',', ':'), default=str
    )
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def get_rng(seed: int) -> random.Random:
    """
    Returns an isolated random generator; global state is never touched.

    :return: random.Random.
    """
    return random.Random(seed)


def get_timestamp() -> str:
    """
    Returns the current UTC time in ISO format.

    :return: str.
    """
    return datetime.now(timezone.utc).isoformat()


def get_package_version() -> str:
    try:
        return version('hf-workbench')
    except PackageNotFoundError:
        return '0.0.0'

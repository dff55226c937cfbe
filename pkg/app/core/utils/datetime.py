from datetime import datetime, timezone


def get_utc_now() -> datetime:
    return datetime.now(timezone.utc)


def format_datetime(dt: datetime) -> str:
    """ISO 8601 in UTC with millisecond precision, e.g. 2024-05-01T12:00:00.123Z."""
    return dt.astimezone(timezone.utc).isoformat(timespec="milliseconds").replace("+00:00", "Z")


def utc_timestamp() -> str:
    """Current time for response bodies and decision log lines."""
    return format_datetime(get_utc_now())

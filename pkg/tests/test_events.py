import logging

import pytest

from app.events.dispatcher import handlers, register_handler
from app.events.publisher import EventPublisher, event_publisher
from app.exceptions import EventPublishingError


def test_published_events_are_kept_in_history():
    """The history records the event type and payload"""
    event_publisher.publish_event("certificate.lifted", {"m": 2, "t": 6, "source_t": 3})
    assert event_publisher.events() == [
        {"event": "certificate.lifted", "m": 2, "t": 6, "source_t": 3}
    ]
    assert event_publisher.events("certificate.repaired") == []


def test_history_is_bounded():
    """Old events fall off the end"""
    publisher = EventPublisher(history_size=2)
    for t in range(3):
        publisher.publish_event("certificate.assembled", {"t": t, "case": "star", "steps": []})
    assert [e["t"] for e in publisher.events()] == [1, 2]


def test_unknown_event_is_logged(caplog):
    """Events without a handler only produce a warning"""
    caplog.set_level(logging.WARNING, logger="app")
    event_publisher.publish_event("certificate.unknown", {})
    assert "No handler registered for event: certificate.unknown" in caplog.text


def test_failing_handler_is_wrapped():
    """Handler errors surface as EventPublishingError"""
    original = handlers.get("certificate.lifted")

    def broken(event):
        raise RuntimeError("handler down")

    register_handler("certificate.lifted", broken)
    try:
        with pytest.raises(EventPublishingError) as info:
            event_publisher.publish_event("certificate.lifted", {"m": 2})
        assert info.value.event_type == "certificate.lifted"
    finally:
        register_handler("certificate.lifted", original)


def test_counterexample_is_logged_as_error(caplog):
    """A counterexample candidate is an ERROR record"""
    caplog.set_level(logging.INFO, logger="app")
    event_publisher.publish_event(
        "scan.counterexample_candidate", {"canonical": "D??", "chi": 3, "n": 5}
    )
    assert any(r.levelno == logging.ERROR and "D??" in r.getMessage() for r in caplog.records)

from app.config import logger

from app.events.handlers import (
    handle_certificate_assembled,
    handle_strongness_violated,
    handle_certificate_repaired,
    handle_repair_failed,
    handle_certificate_lifted,
    handle_scan_entry,
    handle_counterexample_candidate,
)

handlers = {}


def register_handler(event_type: str, handler_func):
    handlers[event_type] = handler_func
    logger.debug(f"Registered handler for event: {event_type}")


def dispatch_event(event: dict):
    event_type = event.get("event")
    if event_type in handlers:
        return handlers[event_type](event)
    else:
        logger.warning(f"No handler registered for event: {event_type}")


register_handler("certificate.assembled", handle_certificate_assembled)
register_handler("certificate.strongness_violated", handle_strongness_violated)
register_handler("certificate.repaired", handle_certificate_repaired)
register_handler("certificate.repair_failed", handle_repair_failed)
register_handler("certificate.lifted", handle_certificate_lifted)
register_handler("scan.entry_recorded", handle_scan_entry)
register_handler("scan.counterexample_candidate", handle_counterexample_candidate)

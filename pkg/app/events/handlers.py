from app.config import logger


def handle_certificate_assembled(event: dict):
    """A construction produced a certificate that passed verification."""
    logger.info(
        f"✅ K_{event.get('t')} certificate assembled (case {event.get('case')}, "
        f"steps {event.get('steps') or []})"
    )


def handle_strongness_violated(event: dict):
    """The assembled paths are an odd immersion but some terminal sits inside a path."""
    logger.warning(
        f"⚠️ Strongness violated in case {event.get('case')}: {event.get('witnesses')}"
    )


def handle_certificate_repaired(event: dict):
    logger.info(
        f"✅ Repaired certificate from case {event.get('case')} by {event.get('method')} "
        f"(paths {event.get('rerouted') or 'all'})"
    )


def handle_repair_failed(event: dict):
    logger.error(f"❌ Repair failed for case {event.get('case')}: {event.get('failed')}")


def handle_certificate_lifted(event: dict):
    logger.info(
        f"✅ Lifted K_{event.get('source_t')} to K_{event.get('t')} in L({event.get('m')}H)"
    )


def handle_scan_entry(event: dict):
    logger.info(
        f"Scanned {event.get('canonical')}: chi={event.get('chi')} outcome={event.get('outcome')}"
    )


def handle_counterexample_candidate(event: dict):
    """Exhaustive search found no certificate. This is a finding, not a bug."""
    logger.error(
        f"❌ Counterexample candidate {event.get('canonical')}: no totally odd strong "
        f"K_{event.get('chi')} immersion; scan halted"
    )

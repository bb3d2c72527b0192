from collections import deque

from app.config import logger
from app.events.dispatcher import dispatch_event
from app.exceptions import EventPublishingError


class EventPublisher:
    """In-process event bus; keeps a bounded history for inspection."""

    def __init__(self, history_size=256):
        self.history = deque(maxlen=history_size)

    def publish_event(self, event_type, data):
        """Records the event and hands it to the registered handler"""
        event = {"event": event_type, **data}
        self.history.append(event)
        logger.debug(f"📡 Event published: {event_type} - {data}")
        try:
            dispatch_event(event)
        except Exception as e:
            error_message = EventPublishingError(event_type, e)
            logger.error(f"❌ {error_message}")
            raise error_message from e

    def events(self, event_type=None):
        return [e for e in self.history if event_type is None or e["event"] == event_type]

    def clear(self):
        self.history.clear()


event_publisher = EventPublisher()

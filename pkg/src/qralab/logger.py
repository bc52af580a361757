import logging

logger = logging.getLogger("qralab")

import logging
import os
import sys

from src.config import PROJECT_ROOT, config


def setup_logging():
    log_level = config.get("logging", "level", "INFO")
    log_file = config.get("logging", "log_file")

    # stdout is reserved for reports
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        if not os.path.isabs(log_file):
            log_file = os.path.join(PROJECT_ROOT, log_file)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )

    return logging.getLogger("gradedpi")

logger = setup_logging()

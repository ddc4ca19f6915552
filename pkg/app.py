#!/usr/bin/env python3
import logging
import sys

from stringy_zeta.cli import main
from stringy_zeta.config import load_config
from stringy_zeta.errors import ConfigError

# Log level from stringy.json or STRINGY_LOG_LEVEL; --config is honoured by main()
try:
    log_level = load_config().log_level
except ConfigError:
    log_level = "WARNING"

logging.basicConfig(
    level=log_level,
    format="%(asctime)s %(name)s %(levelname)s %(message)s",
    stream=sys.stderr,
)

sys.exit(main())

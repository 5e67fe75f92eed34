import json
import os

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class Config:
    def __init__(self, config_path=None):
        if config_path is None:
            config_path = os.environ.get("GRADEDPI_CONFIG") or os.path.join(PROJECT_ROOT, "config.json")
        self.path = config_path
        with open(config_path, 'r') as f:
            self.settings = json.load(f)

    def get(self, section, key, default=None):
        value = self.settings.get(section, {}).get(key)
        return default if value is None else value

    def workers(self, override=None):
        """--workers flag, then GRADEDPI_WORKERS, then the search section."""
        if override is not None:
            return max(1, int(override))
        env = os.environ.get("GRADEDPI_WORKERS")
        if env:
            return max(1, int(env))
        return max(1, int(self.get("search", "workers", 1)))

# Global config instance
config = Config()

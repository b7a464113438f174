import os
import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)


class Settings:
    """Manages the numerical knobs and user preferences."""

    def __init__(self, config_dir=None):
        """Initialize settings with default values.

        Args:
            config_dir: Directory holding settings.json; defaults to
                $MARKOVCALC_CONFIG_DIR or ~/.config/markovcalc
        """
        # Default settings
        self.defaults = {
            "mode": "exact",
            "ratio": "1/2",
            "depth_exact": 12,
            "depth_float": 40,
            "max_depth": 40,
            "tol_abs": 1e-9,
            "tol_rel": 1e-7,
            "divergence_bound": 1e12,
            "classifier_tol": 1e-7,
            "probe_count": 3,
            "oracle_points": 16,
            "log_level": "WARNING",
        }

        # Current settings (start with defaults)
        self.current = self.defaults.copy()

        if config_dir is None:
            config_dir = os.environ.get("MARKOVCALC_CONFIG_DIR") or os.path.join(
                str(Path.home()), ".config", "markovcalc"
            )
        self.config_dir = config_dir
        self.config_file = os.path.join(self.config_dir, "settings.json")

        logger.debug("Settings initialized, config file: %s", self.config_file)

        # Load existing settings
        self.load()

    def load(self):
        """Load settings from file."""
        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, "r", encoding="utf-8") as f:
                    loaded = json.load(f)
                if not isinstance(loaded, dict):
                    raise ValueError("settings file must hold a JSON object")
                unknown = sorted(set(loaded) - set(self.defaults))
                if unknown:
                    logger.warning("Ignoring unknown settings: %s", ", ".join(unknown))
                self.current.update({k: v for k, v in loaded.items() if k in self.defaults})
                logger.debug("Settings loaded: %s", self.current)
            else:
                logger.debug("No settings file found, using defaults")
        except (OSError, ValueError) as e:
            logger.warning("Error loading settings from %s: %s", self.config_file, e)

    def save(self):
        """Save current settings to file."""
        try:
            os.makedirs(self.config_dir, exist_ok=True)
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(self.current, f, indent=2, sort_keys=True)
                f.flush()
                os.fsync(f.fileno())
            logger.info("Settings saved to %s", self.config_file)
        except OSError as e:
            logger.error("Error saving settings: %s", e)

    def get(self, key, default=None):
        """Get a setting value.

        Args:
            key: Setting key
            default: Default value if setting doesn't exist

        Returns:
            The setting value
        """
        return self.current.get(key, default)

    def set(self, key, value):
        """Set a setting value and save settings.

        Args:
            key: Setting key
            value: Setting value
        """
        if key not in self.defaults:
            raise KeyError(f"unknown setting {key!r}")
        old_value = self.current.get(key)
        if old_value != value:
            logger.info("Setting '%s' changed: %s -> %s", key, old_value, value)
            self.current[key] = value
            self.save()

    def reset(self):
        """Reset settings to defaults."""
        logger.info("Resetting all settings to defaults")
        self.current = self.defaults.copy()
        self.save()


# Singleton instance
settings = Settings()

import logging
import os


class Settings:
    # Largest radius enumerate_ball will accept
    BALL_RADIUS_CAP = int(os.environ.get("TORFAN_BALL_RADIUS", "8"))

    # Conjugator length used by the normal-closure smoke test
    CONJUGATOR_RADIUS = int(os.environ.get("TORFAN_CONJUGATOR_RADIUS", "4"))

    # Logging settings
    HUMANIZE_LOGS = os.environ.get("HUMANIZE_LOGS", "false") == "true"
    LOG_LEVEL_STR = os.environ.get("LOG_LEVEL", "WARNING")
    LOG_LEVEL = getattr(logging, LOG_LEVEL_STR.upper(), logging.WARNING)

    def refresh_from_environment(self) -> None:
        """Re-read the environment; the CLI calls this before each invocation."""
        self.BALL_RADIUS_CAP = int(
            os.environ.get("TORFAN_BALL_RADIUS", self.BALL_RADIUS_CAP)
        )
        self.CONJUGATOR_RADIUS = int(
            os.environ.get("TORFAN_CONJUGATOR_RADIUS", self.CONJUGATOR_RADIUS)
        )
        self.HUMANIZE_LOGS = os.environ.get("HUMANIZE_LOGS", "false") == "true"
        self.LOG_LEVEL_STR = os.environ.get("LOG_LEVEL", self.LOG_LEVEL_STR)
        self.LOG_LEVEL = getattr(logging, self.LOG_LEVEL_STR.upper(), logging.WARNING)


settings = Settings()

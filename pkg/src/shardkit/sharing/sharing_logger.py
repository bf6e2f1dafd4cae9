import logging


class SharingLogger:

    def __init__(self):
        # Handlers are installed by utils.logging_policy, never here.
        self.deal_logger = logging.getLogger("shardkit.deal")
        self.reconstruct_logger = logging.getLogger("shardkit.reconstruct")
        self.access_logger = logging.getLogger("shardkit.access")
        self.error_logger = logging.getLogger("shardkit.error")

        for logger in (self.deal_logger, self.reconstruct_logger,
                       self.access_logger, self.error_logger):
            if not logger.handlers:
                logger.addHandler(logging.NullHandler())

    # Never pass secrets, coefficients or share values to these methods.

    def log_deal(self, scheme_id: str, holders: int, shares: int, duration: float):
        self.deal_logger.info(
            f"Dealt {shares} shares to {holders} holders for scheme {scheme_id} in {duration:.4f}s"
        )

    def log_reconstruct_success(self, scheme_id: str, holders: int, duration: float):
        self.reconstruct_logger.info(
            f"Reconstructed scheme {scheme_id} from {holders} holders in {duration:.4f}s"
        )

    def log_reconstruct_failure(self, scheme_id: str, error: Exception):
        self.error_logger.warning(
            f"Reconstruction of scheme {scheme_id} failed: {error}"
        )

    def log_enumeration(self, kind: str, items: int, duration: float):
        rate = items / duration if duration > 0 else 0
        self.access_logger.info(
            f"Enumerated {items} {kind} in {duration:.2f}s ({rate:.0f}/s)"
        )

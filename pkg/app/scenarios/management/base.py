from django.core.management.base import BaseCommand, CommandError

from quadrature.stats import stats
from utils.exceptions import ConfigurationError

from ..config import apply_overrides, load_config


class ScenarioCommand(BaseCommand):
    """Shared options of the scenario commands"""

    def add_arguments(self, parser):
        parser.add_argument("config", help="Path of the YAML scenario file")
        parser.add_argument(
            "--tolerance", type=float, help="Relative quadrature tolerance for every integral"
        )
        parser.add_argument("--out", help="Output directory (overrides the file's output key)")
        parser.add_argument(
            "--quadrature-stats",
            action="store_true",
            help="Report quadrature request and evaluation counts when done",
        )

    def load(self, options):
        try:
            config = load_config(options["config"])
            return apply_overrides(config, options["tolerance"], options["out"])
        except ConfigurationError as exc:
            for messages in exc.errors.values():
                for message in messages:
                    self.stderr.write(message)
            raise CommandError(str(exc), returncode=1)

    def execute(self, *args, **options):
        stats.reset()
        return super().execute(*args, **options)

    def report_stats(self, options):
        if not options["quadrature_stats"]:
            return
        snapshot = stats.snapshot()
        self.stdout.write(
            f"quadrature: {snapshot['requests']} requests, "
            f"{snapshot['evaluations']} evaluations, {snapshot['failures']} failures"
        )
        for strategy, count in snapshot["strategies"].items():
            self.stdout.write(f"  {strategy}: {count}")

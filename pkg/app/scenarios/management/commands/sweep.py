"""
Command to sweep one parameter of a scenario file
"""

from django.core.management.base import CommandError

from scenarios.choices import SweepAxis
from scenarios.management.base import ScenarioCommand
from scenarios.runner import run_sweep
from utils.exceptions import ConfigurationError


class Command(ScenarioCommand):
    help = "Evaluate a scenario at every value of one axis and tabulate the points"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--axis", choices=SweepAxis.values, help="Parameter to sweep")
        parser.add_argument(
            "--values", type=float, nargs="+", help="Values taken by the swept parameter"
        )

    def handle(self, *args, **options):
        config = self.load(options)
        plan = config.get("sweep", {})
        axis = options["axis"] or plan.get("axis")
        values = options["values"] or plan.get("values")
        if not axis or not values:
            raise CommandError(
                "a sweep needs --axis and --values or a sweep section", returncode=1
            )

        try:
            outcome = run_sweep(config, SweepAxis(axis), values)
        except ConfigurationError as exc:
            raise CommandError(str(exc), returncode=1)
        self.report_stats(options)

        if outcome.partial:
            for value, detail in outcome.failures:
                self.stderr.write(f"{axis}={value:g}: {detail}")
            raise CommandError(
                f"{len(outcome.failures)} of {len(outcome.rows)} points failed; "
                f"see {outcome.directory / 'summary.txt'}",
                returncode=2,
            )
        message = f"swept {axis} over {len(outcome.rows)} points -> {outcome.directory}"
        self.stdout.write(self.style.SUCCESS(message))

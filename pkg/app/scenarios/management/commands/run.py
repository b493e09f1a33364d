"""
Command to evaluate one scenario file
"""

from django.core.management.base import CommandError

from scenarios.choices import PointStatus
from scenarios.management.base import ScenarioCommand
from scenarios.runner import run_scenario


class Command(ScenarioCommand):
    help = "Evaluate the analyses of a scenario file and write their tables"

    def handle(self, *args, **options):
        config = self.load(options)
        result = run_scenario(config)
        self.report_stats(options)
        if result.status == PointStatus.FAILED:
            raise CommandError(f"{result.name}: {result.detail}", returncode=2)

        for warning in result.warnings:
            self.stderr.write(self.style.WARNING(warning))
        self.stdout.write(
            self.style.SUCCESS(f"{result.name}: {result.status} -> {config['output']}")
        )

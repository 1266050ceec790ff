"""Module with additional classes
for the management commands of the application.
"""
import json
import logging
import time

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from rest_framework.serializers import ValidationError as FormatError

from linalg.exceptions import CorruptionError

from . import conf
from .reports import RunReport
from .serializers import RunReportSerializer
from .services import render_json

logger = logging.getLogger(__name__)


def describe_format_error(detail, path=''):
    """Flattens a DRF error detail into `field: message` lines."""
    if isinstance(detail, dict):
        return [
            line
            for key, value in detail.items()
            for line in describe_format_error(
                value, f'{path}.{key}' if path else str(key)
            )
        ]
    if isinstance(detail, list):
        if all(not isinstance(item, (dict, list)) for item in detail):
            return [f'{path or "input"}: {item}' for item in detail]
        return [
            line
            for index, item in enumerate(detail)
            for line in describe_format_error(item, f'{path}[{index}]')
        ]
    return [f'{path or "input"}: {detail}']


class ReportCommandMixin:
    """
    Turns a management command into a report-producing one.

    The command fills a `RunReport` in `build_report`; the mixin times
    the run, writes the JSON report to standard output and a summary to
    standard error, and maps failures to exit codes:
    2 input/parse error, 3 validation error, 4 failed numeric check.
    Requires the `input_options` attribute naming the options to echo.

    Example:
        class Command(ReportCommandMixin, BaseCommand):
            input_options = ('t',)

            def add_command_arguments(self, parser):
                parser.add_argument('--t', type=float, default=1.0)

            def build_report(self, report, **options):
                ...
                report.check('gap', gap, conf.ODE_AGREEMENT_TOLERANCE)
    """

    input_options = ()

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def add_arguments(self, parser):
        parser.add_argument(
            '--wall-time', action='store_true', help=conf.HELP_WALL_TIME
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def build_report(self, report, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        """Runs `build_report` and emits the report.

        Raises:
            CommandError: With the exit code of the failure.
        """
        report = RunReport(
            command=self.command_name,
            inputs={name: options.get(name) for name in self.input_options},
        )
        logger.info('running %s with %s', report.command, report.inputs)
        started = time.perf_counter()
        try:
            self.build_report(report, **options)
        except FormatError as error:
            raise CommandError(
                'input error: '
                + '; '.join(describe_format_error(error.detail)),
                returncode=conf.EXIT_INPUT,
            ) from error
        except (json.JSONDecodeError, OSError) as error:
            raise CommandError(
                f'input error: {error}', returncode=conf.EXIT_INPUT
            ) from error
        except ValidationError as error:
            raise CommandError(
                'validation error: ' + '; '.join(error.messages),
                returncode=conf.EXIT_VALIDATION,
            ) from error
        except CorruptionError as error:
            raise CommandError(
                f'numerical check failed: {error}',
                returncode=conf.EXIT_CHECK,
            ) from error
        elapsed = time.perf_counter() - started

        if options.get('wall_time'):
            report.wall_time = elapsed
        self.stdout.write(render_json(RunReportSerializer(report).data))
        self.stderr.write(
            f'{report.command}: {report.status}, '
            f'{len(report.checks)} checks, '
            f'max deviation {report.max_deviation:.3e}, '
            f'{elapsed:.3f}s',
            style_func=str,
        )
        if not report.passed:
            logger.warning('%s: failed checks %s', report.command,
                           report.failed)
            raise CommandError(
                'failed checks: ' + ', '.join(report.failed),
                returncode=conf.EXIT_CHECK,
            )

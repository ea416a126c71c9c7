import os
import sys


def main(argv: list[str] | None = None):
    """
    Console entry point: `zonelab <analysis> <form file> [options]` runs the
    `zonelab` management command
    """
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.production")
    from django.core.management import execute_from_command_line

    arguments = sys.argv[1:] if argv is None else argv
    execute_from_command_line(["zonelab", "zonelab", *arguments])


if __name__ == "__main__":
    main()

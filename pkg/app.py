import logging
import sys

from cli.commands import COMMANDS, EXIT_DATA, EXIT_USAGE, build_parser
from config import configure_logging
from errors import HotspotError

logger = logging.getLogger(__name__)


class HotspotApp:
    """Shell ligero que interpreta argv y expone run()"""

    def __init__(self, argv: list[str]):
        self.parser = build_parser()
        self.args = self.parser.parse_args(argv)
        configure_logging(self.args.verbose)

    def run(self) -> int:
        command = COMMANDS[self.args.command]
        try:
            return command(self.args)
        except HotspotError as exc:
            logger.debug("%s falló", self.args.command, exc_info=True)
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DATA


def run_cli(argv: list[str]) -> int:
    try:
        app = HotspotApp(argv)
    except SystemExit as exc:
        # argparse: --help sale con 0, los errores de uso con 2
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return app.run()

'''
ANSI styling for messages written to standard error.

Standard output carries one JSON document and is never styled.
'''

import sys


class StderrStyle:
    '''
    Colors error and warning lines when stderr is a terminal and --no-color
    was not given.
    '''
    def __init__(self, enabled: bool = True):
        self.enabled = enabled and sys.stderr.isatty()

    def _paint(self, text: str, code: str) -> str:
        return f"\033[{code}m{text}\033[0m" if self.enabled else text

    def error(self, text: str) -> str:
        return self._paint(text, "31")

    def warning(self, text: str) -> str:
        return self._paint(text, "33")

    def report(self, message: str, *, level: str = "error") -> None:
        paint = self.error if level == "error" else self.warning
        print(paint(message), file=sys.stderr)

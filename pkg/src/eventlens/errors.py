"""Exception hierarchy shared by all eventlens modules."""


class EventLensError(Exception):
    """Base class for every error raised by eventlens."""


# corpus
class MalformedUrl(EventLensError, ValueError):
    pass


class EmptyRange(EventLensError, ValueError):
    pass


# timeseries
class MissingColumn(EventLensError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "missing column"


class UnparseableRow(EventLensError, ValueError):
    def __init__(self, row_number, message):
        super().__init__(f"row {row_number}: {message}")
        self.row_number = row_number


class EmptySeries(EventLensError, ValueError):
    pass


class NoOverlap(EventLensError, ValueError):
    pass


class InsufficientOverlap(EventLensError, ValueError):
    pass


class UnknownPair(EventLensError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown pair"


# correlation
class LengthMismatch(EventLensError, ValueError):
    pass


class ZeroVariance(EventLensError, ValueError):
    pass


class InvalidAlpha(EventLensError, ValueError):
    pass


class SeriesTooShort(EventLensError, ValueError):
    pass


# eventstudy
class InsufficientHistory(EventLensError, ValueError):
    pass


class EventDateNotTraded(EventLensError, ValueError):
    pass


class DegenerateVariance(EventLensError, ArithmeticError):
    pass


class MissingPair(EventLensError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "missing pair"


# topics
class EmptyCorpus(EventLensError, ValueError):
    pass


class KTooLarge(EventLensError, ValueError):
    pass


class BadTopicIndex(EventLensError, IndexError):
    pass


class NoDocumentsInWindow(EventLensError, ValueError):
    pass


# cli / fetch
class ConfigError(EventLensError, ValueError):
    pass


class NetworkError(EventLensError, OSError):
    pass


class HttpStatus(EventLensError):
    def __init__(self, code, pair, url):
        super().__init__(f"HTTP {code} fetching {pair} from {url}")
        self.code = code
        self.pair = pair
        self.url = url

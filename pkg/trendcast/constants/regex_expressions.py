# ISO-8601 timestamp at minute resolution, e.g. 2014-06-01T00:07.
ISO_MINUTE = r"^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}$"

# Integer count of minutes since 1970-01-01T00:00 (may be negative).
EPOCH_MINUTES = r"^[+-]?\d+$"

# Line number reported by pandas' CSV parser, e.g. "Expected 2 fields in line 4, saw 3".
PARSER_LINE = r"line (\d+)"

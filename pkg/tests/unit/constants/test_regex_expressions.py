import re

import pytest

from trendcast.constants.regex_expressions import EPOCH_MINUTES, ISO_MINUTE, PARSER_LINE


@pytest.mark.describe("🧪  Regex Expressions")
class TestRegexExpressions:
    @pytest.mark.it("✅  Should accept ISO timestamps at minute resolution")
    @pytest.mark.parametrize("stamp", ["2014-06-01T00:00", "1999-12-31T23:59"])
    def test_iso_minute_correct(self, stamp: str) -> None:
        assert re.match(ISO_MINUTE, stamp)

    @pytest.mark.it("❌  Should reject ISO timestamps with seconds, zones or spaces")
    @pytest.mark.parametrize(
        "stamp", ["2014-06-01T00:00:00", "2014-06-01T00:00Z", "2014-06-01 00:00", "12"]
    )
    def test_iso_minute_incorrect(self, stamp: str) -> None:
        assert not re.match(ISO_MINUTE, stamp)

    @pytest.mark.it("✅  Should accept signed integer minute counts")
    @pytest.mark.parametrize("stamp", ["0", "23140800", "-5", "+10"])
    def test_epoch_minutes_correct(self, stamp: str) -> None:
        assert re.match(EPOCH_MINUTES, stamp)

    @pytest.mark.it("❌  Should reject fractional or empty minute counts")
    @pytest.mark.parametrize("stamp", ["1.5", "", "1e3", "ten"])
    def test_epoch_minutes_incorrect(self, stamp: str) -> None:
        assert not re.match(EPOCH_MINUTES, stamp)

    @pytest.mark.it("✅  Should extract the line number from a parser message")
    def test_parser_line(self) -> None:
        found = re.search(PARSER_LINE, "Expected 2 fields in line 4, saw 3")

        assert found is not None
        assert found.group(1) == "4"

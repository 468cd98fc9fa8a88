#include "gwcount/errors.hpp"
#include "gwcount/series_io.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gwcount {
namespace {

TEST(ParseRational, AcceptsIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-3"), -3);
    EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
    EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
    EXPECT_EQ(parse_rational("0/7"), 0);
}

TEST(ParseRational, RejectsMalformed) {
    for (const char* bad : {"", "-", "1/0", "1/", "/2", "1.5", "a", "1/-2", " 1", "1 ", "--1", "1/2/3"}) {
        EXPECT_THROW(parse_rational(bad), FormatError) << bad;
    }
}

TEST(FormatRational, Canonical) {
    EXPECT_EQ(format_rational(Rational(6, -4)), "-3/2");
    EXPECT_EQ(format_rational(Rational(8, 4)), "2");
}

TEST(SeriesJson, ReadsDocument) {
    const auto s = parse_series_json(
        R"({"degree": 3, "basis": [["1","0","0","0"], ["0","1","0","0"], ["0","0","0","2/4"]]})");
    EXPECT_EQ(s.degree(), 3);
    EXPECT_EQ(s.row(2)[3], Rational(1, 2));
}

TEST(SeriesJson, WriterIsCanonical) {
    const auto s = parse_series_json(
        R"({"basis": [["2/2","0","0","0"], ["0","-6/4","0","0"], ["0","0","0","1"]], "degree": 3})");
    EXPECT_EQ(write_series_json(s),
              R"({"degree":3,"basis":[["1","0","0","0"],["0","-3/2","0","0"],["0","0","0","1"]]})");
}

TEST(SeriesJson, ReportsFieldOfBadCoefficient) {
    try {
        parse_series_json(R"({"degree": 2, "basis": [["1","0","0"], ["0","1/0","0"], ["0","0","1"]]})");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.location(), "basis[1][1]");
    }
}

TEST(SeriesJson, StructuralErrors) {
    EXPECT_THROW(parse_series_json("{"), FormatError);
    EXPECT_THROW(parse_series_json("[]"), FormatError);
    EXPECT_THROW(parse_series_json(R"({"basis": []})"), FormatError);
    EXPECT_THROW(parse_series_json(R"({"degree": "3", "basis": []})"), FormatError);
    EXPECT_THROW(parse_series_json(R"({"degree": 2, "basis": [["1","0","0"], ["0","1","0"]]})"),
                 FormatError);
    EXPECT_THROW(parse_series_json(R"({"degree": 2, "basis": [["1","0","0"], ["0","1"], ["0","0","1"]]})"),
                 FormatError);
    EXPECT_THROW(parse_series_json(R"({"degree": 2, "basis": [[1,0,0], ["0","1","0"], ["0","0","1"]]})"),
                 FormatError);
}

TEST(SeriesJson, RankDeficientIsNotAFormatError) {
    EXPECT_THROW(
        parse_series_json(R"({"degree": 2, "basis": [["1","0","0"], ["0","1","0"], ["2","3","0"]]})"),
        RankDeficientError);
}

TEST(SeriesJson, RoundTripProperty) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 6;
        std::array<PolySeries::Coefficients, 3> rows;
        for (auto& row : rows) {
            for (int i = 0; i <= d; ++i) {
                Rational r(num(rng), den(rng));
                r.canonicalize();
                row.push_back(r);
            }
        }
        if (series_rank(rows) != 3) {
            continue;
        }
        const PolySeries s(d, rows);
        const std::string text = write_series_json(s);
        const PolySeries back = parse_series_json(text);
        EXPECT_EQ(back.basis(), s.basis());
        EXPECT_EQ(write_series_json(back), text);
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

}  // namespace
}  // namespace gwcount

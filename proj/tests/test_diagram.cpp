#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "support/oracles.hpp"
#include "tnorm/contfrac.hpp"
#include "tnorm/diagram.hpp"
#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"

using tnorm::ContinuedFraction;
using tnorm::DomainError;
using tnorm::Fraction;
using tnorm::RationalDiagram;

namespace {

RationalDiagram T(std::vector<long long> coeffs, bool mirror = false) {
    return RationalDiagram(ContinuedFraction(std::move(coeffs)), mirror);
}

} // namespace

TEST_CASE("diagram construction") {
    CHECK(T({2, 3, 2}).fraction() == Fraction(7, 16));
    CHECK(T({2, 1, 4}).fraction() == Fraction(5, 14));
    CHECK(T({2, 1, 1, 6, 1}).fraction() == Fraction(15, 38));
    CHECK(RationalDiagram::from_fraction(Fraction(7, 16)).boxes.coeffs ==
          std::vector<long long>{2, 3, 2});
    CHECK_THROWS_AS(T({2, -3, 2}), DomainError);
    CHECK_THROWS_AS(T({2, 0, 2}), DomainError);

    // the mirror flag sends p/q to (q-p)/q
    CHECK(T({2, 1, 4}, true).fraction() == Fraction(9, 14));
}

TEST_CASE("strand trace") {
    // two components, each one rightward and one leftward strand
    for (auto coeffs : std::vector<std::vector<long long>>{
             {2}, {4}, {1, 1}, {2, 3, 2}, {2, 1, 4}, {2, 1, 1, 6, 1}, {3, 2, 3}}) {
        tnorm::ComponentTrace tr = tnorm::trace_components(T(coeffs));
        CHECK(tr.component == std::array<int, 4>{0, 0, 1, 1});
        CHECK(tr.direction == std::array<int, 4>{1, -1, 1, -1});
        CHECK(tr.boxes.size() == coeffs.size());
    }

    // odd denominators are knots and have no two-component trace
    CHECK_THROWS_AS(tnorm::trace_components(T({3})), DomainError);
    CHECK_THROWS_AS(tnorm::trace_components(T({2, 3})), DomainError);
    CHECK_THROWS_AS(tnorm::trace_components(T({2, 2})), DomainError);
    CHECK_THROWS_AS(tnorm::trace_components(RationalDiagram()), DomainError);
}

TEST_CASE("self-crossing boxes") {
    using Boxes = std::vector<std::pair<std::size_t, long long>>;
    CHECK(tnorm::self_crossing_boxes(T({2})) == Boxes{});
    CHECK(tnorm::self_crossing_boxes(T({1, 1})) == Boxes{});
    CHECK(tnorm::self_crossing_boxes(T({3, 2, 3})) == Boxes{});
    CHECK(tnorm::self_crossing_boxes(T({2, 3, 2})) == Boxes{{2, 3}});
    CHECK(tnorm::self_crossing_boxes(T({2, 1, 4})) == Boxes{{2, 1}});
    CHECK(tnorm::self_crossing_boxes(T({1, 1, 1, 4})) == Boxes{{3, 1}});
}

TEST_CASE("base type matches the trace") {
    CHECK(tnorm::is_base_type(T({2})));
    CHECK(tnorm::is_base_type(T({1, 1})));
    CHECK(tnorm::is_base_type(T({3, 2, 3})));
    CHECK(tnorm::is_base_type(T({1, 2, 2, 1})));
    CHECK(!tnorm::is_base_type(T({2, 3, 2})));
    CHECK(!tnorm::is_base_type(T({4, 1, 2})));
    CHECK(!tnorm::is_base_type(RationalDiagram()));

    // the coefficient pattern is exactly the absence of self-crossing boxes,
    // and self boxes are never adjacent or at the ends
    for (const auto& coeffs : oracles::compositions_up_to(12)) {
        RationalDiagram d = T(coeffs);
        if (d.fraction().den() % 2 != 0) continue;
        auto self = tnorm::self_crossing_boxes(d);
        if (tnorm::is_base_type(d) != self.empty()) {
            FAIL("base type disagrees with trace for " << d.boxes.str());
        }
        std::size_t prev = 0;
        for (auto [idx, label] : self) {
            if (idx == 1 || idx == coeffs.size() || idx == prev + 1) {
                FAIL("self box in an impossible position in " << d.boxes.str());
            }
            prev = idx;
        }
    }
}

TEST_CASE("linking numbers, frozen values") {
    CHECK(tnorm::linking_number(T({2})) == -1);
    CHECK(tnorm::linking_number(T({4})) == -2);
    CHECK(tnorm::linking_number(T({1, 1})) == -1);
    CHECK(tnorm::linking_number(T({3, 1})) == -2);
    CHECK(tnorm::linking_number(T({2, 3, 2})) == 0);
    CHECK(tnorm::linking_number(T({2, 1, 2})) == 0); // Whitehead
    CHECK(tnorm::linking_number(T({2, 1, 4})) == 1);
    CHECK(tnorm::linking_number(T({3, 2, 3})) == -4);
    CHECK(tnorm::linking_number(T({2, 1, 1, 6, 1})) == 3);

    // mirroring negates
    CHECK(tnorm::linking_number(T({2}, true)) == 1);
    CHECK(tnorm::linking_number(T({2, 1, 4}, true)) == -1);
    CHECK(tnorm::linking_number(T({2, 1, 1, 6, 1}, true)) == -3);
}

TEST_CASE("linking number agrees with the crossing-sign oracle") {
    long long checked = 0;
    for (const auto& coeffs : oracles::compositions_up_to(12)) {
        for (bool mirror : {false, true}) {
            RationalDiagram d = T(coeffs, mirror);
            if (d.fraction().den() % 2 != 0) continue;
            long long got = tnorm::linking_number(d);
            long long want = oracles::gauss_linking_number(d);
            if (got != want) {
                FAIL("lk mismatch for " << d.boxes.str() << (mirror ? " mirrored" : "")
                                        << ": traced " << got << ", oracle " << want);
            }
            ++checked;
        }
    }
    CHECK(checked > 2500);
}

TEST_CASE("linking number from the even expansion") {
    // minus the sum of the odd-position half-coefficients
    for (long long q = 2; q <= 120; q += 2) {
        for (long long p = 1; p < q; p += 2) {
            if (std::gcd(p, q) != 1) continue;
            Fraction f(p, q);
            ContinuedFraction even = tnorm::even_cf(f);
            long long want = 0;
            for (std::size_t i = 0; i < even.size(); i += 2) want -= even.coeffs[i] / 2;
            long long got = tnorm::linking_number(RationalDiagram::from_fraction(f));
            if (got != want) {
                FAIL("even-form law fails for " << f.str() << ": traced " << got
                                                << ", law " << want);
            }
        }
    }
}

TEST_CASE("representation independence of the linking number") {
    // the trailing-1 rewrite names the same link by a different diagram
    CHECK(T({2, 1, 3, 1}).fraction() == Fraction(5, 14));
    CHECK(tnorm::linking_number(T({2, 1, 3, 1})) == tnorm::linking_number(T({2, 1, 4})));
    CHECK(T({2, 1, 1, 1}).fraction() == Fraction(3, 8));
    CHECK(tnorm::linking_number(T({2, 1, 1, 1})) == tnorm::linking_number(T({2, 1, 2})));
}

TEST_CASE("splitting at self boxes") {
    SECTION("worked examples") {
        tnorm::SplitResult s = tnorm::split_diagram(T({2, 1, 4}));
        REQUIRE(s.pieces.size() == 2);
        CHECK(s.pieces[0].boxes.coeffs == std::vector<long long>{2});
        CHECK(s.pieces[1].boxes.coeffs == std::vector<long long>{4});
        CHECK(s.signs == std::vector<int>{1, -1});
        CHECK(s.self_boxes == std::vector<std::pair<std::size_t, long long>>{{2, 1}});

        s = tnorm::split_diagram(T({2, 3, 2}));
        REQUIRE(s.pieces.size() == 2);
        CHECK(s.pieces[0].boxes.coeffs == std::vector<long long>{2});
        CHECK(s.pieces[1].boxes.coeffs == std::vector<long long>{2});
        CHECK(s.signs == std::vector<int>{1, -1});

        s = tnorm::split_diagram(T({3, 2, 3}));
        REQUIRE(s.pieces.size() == 1);
        CHECK(s.pieces[0].boxes.coeffs == std::vector<long long>{3, 2, 3});
        CHECK(s.signs == std::vector<int>{1});

        // odd cut position: the odd label no longer flips, an even one does
        s = tnorm::split_diagram(T({1, 1, 1, 4}));
        REQUIRE(s.pieces.size() == 2);
        CHECK(s.self_boxes == std::vector<std::pair<std::size_t, long long>>{{3, 1}});
        CHECK(s.signs == std::vector<int>{1, 1});

        s = tnorm::split_diagram(T({1, 1, 2, 4}));
        REQUIRE(s.pieces.size() == 2);
        CHECK(s.self_boxes == std::vector<std::pair<std::size_t, long long>>{{3, 2}});
        CHECK(s.signs == std::vector<int>{1, -1});
    }

    SECTION("structural invariants over an enumeration") {
        for (const auto& coeffs : oracles::compositions_up_to(12)) {
            RationalDiagram d = T(coeffs);
            if (d.fraction().den() % 2 != 0) continue;
            tnorm::SplitResult s = tnorm::split_diagram(d);
            REQUIRE(s.pieces.size() == s.self_boxes.size() + 1);
            REQUIRE(s.signs.size() == s.pieces.size());

            // the pieces and self boxes interleave back into the original word
            std::vector<long long> rebuilt;
            for (std::size_t j = 0; j < s.pieces.size(); ++j) {
                rebuilt.insert(rebuilt.end(), s.pieces[j].boxes.coeffs.begin(),
                               s.pieces[j].boxes.coeffs.end());
                if (j < s.self_boxes.size()) rebuilt.push_back(s.self_boxes[j].second);
            }
            CHECK(rebuilt == coeffs);

            // signs start positive and flip exactly at cuts whose label plus
            // gap from the previous cut is odd
            int sign = 1;
            std::size_t prev = 0;
            CHECK(s.signs[0] == 1);
            for (std::size_t j = 0; j < s.self_boxes.size(); ++j) {
                auto [pos, label] = s.self_boxes[j];
                if ((label + static_cast<long long>(pos - prev)) % 2 != 0) sign = -sign;
                prev = pos;
                CHECK(s.signs[j + 1] == sign);
            }

            // every piece is base type (never empty: self boxes are isolated)
            for (const RationalDiagram& piece : s.pieces) {
                CHECK(!piece.empty());
                CHECK(tnorm::is_base_type(piece));
            }
        }
    }
}

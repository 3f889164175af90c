#include <gtest/gtest.h>

#include "pvc/errors.hpp"
#include "pvc/mso.hpp"

using namespace pvc;
using namespace pvc::mso;

namespace {

std::size_t occurrences(const std::string& text, const std::string& word) {
    std::size_t count = 0;
    for (auto pos = text.find(word); pos != std::string::npos; pos = text.find(word, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST(Emit, StructuralCounts) {
    const auto one = structural_check(emit_parity_colourable(1).ast, 1);
    EXPECT_TRUE(one.ok());
    EXPECT_EQ(one.set_variables, 1u);
    EXPECT_EQ(one.exclusion_clauses, 0u);
    EXPECT_EQ(one.oddtimes, 1u);

    const auto three = structural_check(emit_parity_colourable(3).ast, 3);
    EXPECT_TRUE(three.ok());
    EXPECT_EQ(three.exclusion_clauses, 3u);
    EXPECT_EQ(three.oddtimes, 3u);

    EXPECT_EQ(structural_check(emit_parity_colourable(4).ast, 4).exclusion_clauses, 6u);
    EXPECT_THROW(emit_parity_colourable(0), InvalidParameter);
}

TEST(Emit, SizeGrowsQuadratically) {
    std::vector<long> sizes;
    for (std::size_t k = 1; k <= 12; ++k) sizes.push_back(static_cast<long>(expanded_size(emit_parity_colourable(k).ast)));
    for (std::size_t i = 2; i < sizes.size(); ++i) {
        const long second = sizes[i] - 2 * sizes[i - 1] + sizes[i - 2];
        EXPECT_GT(second, 0);
    }
}

TEST(Emit, TextNamesOddtimesOncePerColour) {
    const std::string text = render(emit_parity_colourable(2).ast, Syntax::text);
    EXPECT_EQ(occurrences(text, "Oddtimes"), 2u);
    EXPECT_EQ(count_macros(emit_parity_colourable(2).ast, "Oddtimes"), 2u);
}

TEST(Emit, ClosedForEveryK) {
    for (std::size_t k = 1; k <= 8; ++k) {
        const auto report = structural_check(emit_parity_colourable(k).ast, k);
        EXPECT_TRUE(report.ok()) << (report.diagnostics.empty() ? "" : report.diagnostics.front());
    }
}

TEST(Syntax, RoundTripsBothSyntaxes) {
    for (std::size_t k = 1; k <= 5; ++k) {
        const Formula f = emit_parity_colourable(k).ast;
        for (Syntax s : {Syntax::sexpr, Syntax::text}) {
            EXPECT_EQ(parse(render(f, s), s), f);
            const Formula bare = strip_macros(f);
            EXPECT_EQ(parse(render(bare, s), s), bare);
        }
    }
}

TEST(Syntax, StripMacrosKeepsSize) {
    const Formula f = emit_parity_colourable(3).ast;
    EXPECT_EQ(expanded_size(strip_macros(f)), expanded_size(f));
    EXPECT_EQ(count_macros(strip_macros(f), "Oddtimes"), 0u);
}

TEST(Syntax, ParseErrors) {
    EXPECT_THROW(parse("(and", Syntax::sexpr), ParseError);
    EXPECT_THROW(parse("(frobnicate x)", Syntax::sexpr), ParseError);
    EXPECT_THROW(parse("(x ∈ ", Syntax::text), ParseError);
    EXPECT_THROW(parse("", Syntax::text), ParseError);
}

TEST(StructuralCheck, ReportsFreeVariable) {
    const Formula broken = exists(Binder::element, {"x"}, "V", in("x", "X"));
    const auto report = structural_check(broken);
    ASSERT_FALSE(report.ok());
    bool found = false;
    for (const auto& d : report.diagnostics) found |= d.find("free variable") != std::string::npos;
    EXPECT_TRUE(found);
}

TEST(StructuralCheck, ReportsSortMismatchAndStrayEven) {
    EXPECT_FALSE(structural_check(exists(Binder::set, {"X"}, "V", in("X", "X"))).ok());
    EXPECT_FALSE(structural_check(exists(Binder::set, {"X"}, "V", even("X"))).ok());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abscreen/errors.hpp"
#include "abscreen/prompt.hpp"
#include "abscreen/protocol.hpp"
#include "abscreen/verdict.hpp"

#include "helpers.hpp"

#include <random>
#include <set>

using namespace abscreen;
using namespace abscreen::protocol;

namespace {

ReviewProtocol sample_protocol() {
    ReviewProtocol p;
    p.review_id = "rev-1";
    p.review_title = "Aspirin for headache";
    p.inclusion_criteria = {"Randomized trials", "Adults"};
    p.exclusion_criteria = {"Animal studies"};
    p.search_year = 2023;
    return p;
}

PromptLibrary default_library() {
    return PromptLibrary::load(ABSCREEN_PROMPTS_FILE);
}

} // namespace

TEST_CASE("protocol JSON round trip") {
    const auto p = sample_protocol();
    const auto back = protocol_from_json(protocol_to_json(p));
    CHECK(back.review_id == p.review_id);
    CHECK(back.review_title == p.review_title);
    CHECK(back.inclusion_criteria == p.inclusion_criteria);
    CHECK(back.exclusion_criteria == p.exclusion_criteria);
    CHECK(back.search_year == p.search_year);
}

TEST_CASE("protocol validation requires an inclusion criterion") {
    auto p = sample_protocol();
    p.inclusion_criteria.clear();
    CHECK_THROWS_AS(validate(p), Error);
    CHECK_THROWS_AS(protocol_from_json("{\"review_id\":\"x\"}"), Error);
}

TEST_CASE("numbered_list renders 1..n lines") {
    CHECK(numbered_list({"a", "b"}) == "1. a\n2. b");
    CHECK(numbered_list({}) == "");
}

TEST_CASE("bias level names parse in both directions") {
    for (const auto level : kAllBiasLevels)
        CHECK(bias_level_from_string(to_string(level)) == level);
    CHECK(bias_level_from_string("TitleOnly") == BiasLevel::TitleOnly);
    CHECK(bias_level_from_string("HEAVY") == BiasLevel::Heavy);
    CHECK(bias_level_from_string("title_only") == BiasLevel::TitleOnly);
    CHECK_THROWS_AS(bias_level_from_string("severe"), Error);
    CHECK(BiasLevel::TitleOnly < BiasLevel::None);
    CHECK(BiasLevel::Heavy < BiasLevel::Extreme);
}

TEST_CASE("the shipped prompt file loads with six valid sections") {
    const auto lib = default_library();
    CHECK(lib.checksum().size() == 64);
    std::set<std::string> bodies;
    for (const auto level : kAllBiasLevels)
        bodies.insert(lib.template_for(level));
    CHECK(bodies.size() == 6);
    CHECK(lib.template_for(BiasLevel::Heavy).find("err on the side of inclusion") !=
          std::string::npos);
    CHECK(lib.template_for(BiasLevel::TitleOnly).find("{record_abstract}") == std::string::npos);
}

TEST_CASE("prompt file with a missing or duplicate section is rejected") {
    CHECK_THROWS_WITH_AS(PromptLibrary::from_text("=== none ===\nhello {record_title}\n"),
                         doctest::Contains("missing section"), Error);

    std::string dup = "=== none ===\nx\n=== none ===\ny\n";
    CHECK_THROWS_WITH_AS(PromptLibrary::from_text(dup), doctest::Contains("duplicate"), Error);
}

TEST_CASE("template validation enforces placeholder arity") {
    const auto lib = default_library();
    std::string text;
    for (const auto level : kAllBiasLevels) {
        text += std::string("=== ") + to_string(level) + " ===\n";
        text += lib.template_for(level) + "\n";
    }
    // Corrupt the heavy section: drop the abstract placeholder.
    auto broken = text;
    const auto pos = broken.find("{record_abstract}", broken.find("=== heavy ==="));
    REQUIRE(pos != std::string::npos);
    broken.erase(pos, std::string("{record_abstract}").size());
    CHECK_THROWS_WITH_AS(PromptLibrary::from_text(broken),
                         doctest::Contains("{record_abstract}"), Error);

    // A title-only section using the abstract is rejected too.
    auto title_broken = text;
    const auto tpos = title_broken.find("Title: {record_title}");
    REQUIRE(tpos != std::string::npos);
    title_broken.insert(tpos, "{record_abstract} ");
    CHECK_THROWS_AS(PromptLibrary::from_text(title_broken), Error);
}

TEST_CASE("render_prompt substitutes every placeholder") {
    const auto lib = default_library();
    const auto p = sample_protocol();
    const auto record = testutil::make_record("r1", "rev-1", corpus::GroundTruth::Unlabelled);

    const std::string text = render_prompt(lib.spec(BiasLevel::None), p, record);
    CHECK(text.find("1. Randomized trials") != std::string::npos);
    CHECK(text.find("2. Adults") != std::string::npos);
    CHECK(text.find(record.title) != std::string::npos);
    CHECK(text.find(*record.abstract) != std::string::npos);
    CHECK(text.find(p.review_title) != std::string::npos);
    for (const char* ph : {"{review_title}", "{inclusion_list}", "{exclusion_list}",
                           "{record_title}", "{record_abstract}"})
        CHECK(text.find(ph) == std::string::npos);

    CHECK(render_prompt(lib.spec(BiasLevel::None), p, record) == text);
}

TEST_CASE("title-only rendering works without an abstract") {
    const auto lib = default_library();
    const auto p = sample_protocol();
    auto record = testutil::make_record("r1", "rev-1", corpus::GroundTruth::Unlabelled);
    record.abstract.reset();

    const std::string text = render_prompt(lib.spec(BiasLevel::TitleOnly), p, record);
    CHECK(text.find(record.title) != std::string::npos);
    CHECK(text.find("Abstract") == std::string::npos);

    CHECK_THROWS_WITH_AS(render_prompt(lib.spec(BiasLevel::Mild), p, record),
                         doctest::Contains("MissingAbstract"), Error);
}

TEST_CASE("heavy and extreme renderings carry their bias clause verbatim") {
    const auto lib = default_library();
    const auto p = sample_protocol();
    const auto record = testutil::make_record("r1", "rev-1", corpus::GroundTruth::Unlabelled);

    CHECK(render_prompt(lib.spec(BiasLevel::Heavy), p, record)
              .find("If in doubt, err on the side of inclusion") != std::string::npos);
    CHECK(render_prompt(lib.spec(BiasLevel::Extreme), p, record)
              .find("any conceivable doubt") != std::string::npos);
}

TEST_CASE("the six bias levels render pairwise distinct prompts") {
    const auto lib = default_library();
    const auto p = sample_protocol();
    const auto record = testutil::make_record("r1", "rev-1", corpus::GroundTruth::Unlabelled);
    std::set<std::string> rendered;
    for (const auto level : kAllBiasLevels)
        rendered.insert(render_prompt(lib.spec(level), p, record));
    CHECK(rendered.size() == 6);
}

TEST_CASE("special-token dialect wraps the rendered text") {
    const auto lib = default_library();
    const auto p = sample_protocol();
    const auto record = testutil::make_record("r1", "rev-1", corpus::GroundTruth::Unlabelled);

    const auto spec = lib.spec(BiasLevel::None, PromptDialect::SpecialTokenWrapped);
    const std::string text =
        render_prompt(spec, p, record, std::make_pair<std::string>("<BEGIN>", "<END>"));
    CHECK(text.rfind("<BEGIN>", 0) == 0);
    CHECK(text.substr(text.size() - 5) == "<END>");

    const std::string plain = render_prompt(lib.spec(BiasLevel::None), p, record);
    CHECK(text == "<BEGIN>" + plain + "<END>");

    CHECK_THROWS_AS(render_prompt(spec, p, record), Error);
}

TEST_CASE("render length is bounded by template plus substitutions plus wrapper") {
    const auto lib = default_library();
    const auto p = sample_protocol();
    const auto record = testutil::make_record("r1", "rev-1", corpus::GroundTruth::Unlabelled);
    const auto spec = lib.spec(BiasLevel::None);
    const std::string text = render_prompt(spec, p, record);
    std::size_t bound = spec.template_text.size() + p.review_title.size() +
                        record.title.size() + record.abstract->size();
    for (const auto& c : p.inclusion_criteria)
        bound += c.size() + 8;
    for (const auto& c : p.exclusion_criteria)
        bound += c.size() + 8;
    CHECK(text.size() <= bound);
}

TEST_CASE("verdict parsing: prefix match on the first alphabetical token") {
    CHECK(parse_verdict("Include") == Verdict::Include);
    CHECK(parse_verdict("  EXCLUDE.") == Verdict::Exclude);
    CHECK(parse_verdict("include\n") == Verdict::Include);
    CHECK(parse_verdict("Included") == Verdict::Include);
    CHECK(parse_verdict("excluding") == Verdict::Exclude);
    CHECK(parse_verdict("\"Include\"") == Verdict::Include);
}

TEST_CASE("verdict parsing: refusals, hedges and noise are uninterpretable") {
    CHECK(parse_verdict("I'm sorry, I can't") == Verdict::Uninterpretable);
    CHECK(parse_verdict("") == Verdict::Uninterpretable);
    CHECK(parse_verdict("   \n\t") == Verdict::Uninterpretable);
    CHECK(parse_verdict("12345") == Verdict::Uninterpretable);
    CHECK(parse_verdict("maybe include") == Verdict::Uninterpretable);
    CHECK(parse_verdict("include or exclude") == Verdict::Uninterpretable);
    CHECK(parse_verdict("exclude, do not include") == Verdict::Uninterpretable);
    CHECK(parse_verdict("inclusion") == Verdict::Uninterpretable);
}

TEST_CASE("verdict parsing is total over random bytes") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const int len = static_cast<int>(rng() % 24);
        for (int j = 0; j < len; ++j)
            s.push_back(static_cast<char>(rng() % 256));
        const Verdict v = parse_verdict(s);
        CHECK((v == Verdict::Include || v == Verdict::Exclude ||
               v == Verdict::Uninterpretable));
        CHECK(parse_verdict(s) == v);
    }
}

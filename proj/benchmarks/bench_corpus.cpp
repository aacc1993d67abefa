#include <benchmark/benchmark.h>

#include "abscreen/corpus.hpp"
#include "abscreen/ris.hpp"
#include "abscreen/util.hpp"

#include <string>
#include <vector>

using namespace abscreen;

namespace {

std::string synthetic_ris(int records) {
    std::string text;
    for (int i = 0; i < records; ++i) {
        text += "TY  - JOUR\n";
        text += "TI  - Synthetic record number " + std::to_string(i) + " with a longish title\n";
        text += "AB  - Abstract sentence one for record " + std::to_string(i) + ".\n";
        text += "  Continued abstract line with more words to parse.\n";
        text += "PY  - 20" + std::to_string(10 + i % 15) + "\n";
        text += "AU  - Author, A.\n";
        text += "ER  - \n";
    }
    return text;
}

std::vector<corpus::Record> synthetic_corpus(int reviews, int per_review) {
    std::vector<corpus::Record> records;
    for (int r = 0; r < reviews; ++r) {
        for (int i = 0; i < per_review; ++i) {
            corpus::Record rec;
            rec.record_id = "r" + std::to_string(r) + "_" + std::to_string(i);
            rec.review_id = "rev" + std::to_string(r);
            rec.title = "Record " + std::to_string(i) + " of review " + std::to_string(r);
            rec.abstract = "Abstract.";
            rec.year = 2015;
            rec.ground_truth = i < 12 ? corpus::GroundTruth::IncludedInReview
                                      : corpus::GroundTruth::ExcludedFromReview;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

} // namespace

static void BM_ParseRis(benchmark::State& state) {
    const std::string text = synthetic_ris(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = corpus::parse_ris(text);
        benchmark::DoNotOptimize(result.drafts.data());
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseRis)->Arg(100)->Arg(10000);

static void BM_NormalizeTitle(benchmark::State& state) {
    const std::string title =
        "Pharmacological Interventions for Asymptomatic Carotid Stenosis: a Review.";
    for (auto _ : state)
        benchmark::DoNotOptimize(util::normalize_title(title));
}
BENCHMARK(BM_NormalizeTitle);

static void BM_Deduplicate(benchmark::State& state) {
    auto records = synthetic_corpus(10, static_cast<int>(state.range(0)) / 10);
    // Give a third of the records a duplicate partner.
    const std::size_t n = records.size();
    for (std::size_t i = 0; i < n / 3; ++i)
        records.push_back(records[i]);
    for (auto _ : state) {
        auto result = corpus::deduplicate(records);
        benchmark::DoNotOptimize(result.kept.data());
    }
}
BENCHMARK(BM_Deduplicate)->Arg(1000)->Arg(100000);

static void BM_BuildBalancedSubset(benchmark::State& state) {
    const auto records = synthetic_corpus(23, static_cast<int>(state.range(0)));
    corpus::SubsetSpec spec;
    for (auto _ : state) {
        auto subset = corpus::build_balanced_subset(records, spec);
        benchmark::DoNotOptimize(subset.data());
    }
}
BENCHMARK(BM_BuildBalancedSubset)->Arg(200)->Arg(5000);

BENCHMARK_MAIN();

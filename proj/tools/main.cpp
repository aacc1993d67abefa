#include "common.hpp"

#include <cstdio>
#include <cstring>
#include <string>

namespace {

void print_usage() {
    std::puts(
        "abscreen " ABSCREEN_VERSION " - systematic-review abstract screening pipeline\n"
        "\n"
        "Usage: abscreen <subcommand> [options]\n"
        "\n"
        "Subcommands:\n"
        "  ingest        Parse RIS exports into a cleaned, labelled corpus\n"
        "  sample        Draw the balanced evaluation subset from a corpus\n"
        "  screen        Run a model over a corpus and persist decisions\n"
        "  import-human  Import human screener verdicts from CSV\n"
        "  evaluate      Confusion matrices and metrics per source\n"
        "  ensemble      Series/parallel combination of two decision columns\n"
        "  kappa         Inter-rater agreement between two columns\n"
        "\n"
        "Run 'abscreen <subcommand> --help' for options.");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        print_usage();
        return 1;
    }
    const std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        print_usage();
        return 0;
    }
    if (cmd == "--version") {
        std::puts(ABSCREEN_VERSION);
        return 0;
    }

    using namespace abscreen::cli;
    if (cmd == "ingest")
        return run_ingest(argc - 1, argv + 1);
    if (cmd == "sample")
        return run_sample(argc - 1, argv + 1);
    if (cmd == "screen")
        return run_screen(argc - 1, argv + 1);
    if (cmd == "import-human")
        return run_import_human(argc - 1, argv + 1);
    if (cmd == "evaluate")
        return run_evaluate(argc - 1, argv + 1);
    if (cmd == "ensemble")
        return run_ensemble(argc - 1, argv + 1);
    if (cmd == "kappa")
        return run_kappa(argc - 1, argv + 1);

    std::fprintf(stderr, "abscreen: unknown subcommand '%s'\n", cmd.c_str());
    print_usage();
    return 1;
}

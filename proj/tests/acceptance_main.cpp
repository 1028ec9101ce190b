// Acceptance suite: one line per criterion, then criterion 13 by running the CLI.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "ndga/acceptance.hpp"

#ifndef NDGA_CLI_PATH
#define NDGA_CLI_PATH "ndga"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    std::string cmd = std::string(NDGA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    ndga::AcceptanceOptions opt;
    if (argc > 1) opt.filter = argv[1];
    bool all = true;
    for (const auto& s : ndga::run_acceptance(opt)) {
        std::cout << "criterion " << s.criterion << " [" << s.group << "] " << s.title << ": " << (s.pass ? "PASS" : "FAIL")
                  << " (" << s.seconds << " s)\n";
        for (const auto& c : s.checks)
            if (!c.pass) std::cout << "    failed: " << c.name << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
        all = all && s.pass;
    }
    if (opt.filter.empty() || opt.filter == "13") {
        auto start = std::chrono::steady_clock::now();
        Run a = run_cli("verify-paper --json");
        Run b = run_cli("verify-paper --json");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 2;
        bool pass = a.status == 0 && a.out == b.out && secs < 180;
        std::cout << "criterion 13 [cli] verify-paper end to end: " << (pass ? "PASS" : "FAIL") << " (" << secs << " s)\n";
        if (!pass)
            std::cout << "    exit status " << a.status << ", output " << (a.out == b.out ? "identical" : "differs")
                      << " across runs\n";
        all = all && pass;
    }
    return all ? 0 : 1;
}

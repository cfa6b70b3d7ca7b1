#pragma once

// Minimal subprocess capture for CLI tests: runs a command line through
// /bin/sh, collects stdout and stderr separately, reports the exit code.

#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline RunResult run_command(const std::string& command) {
    static std::atomic<int> counter{0};
    const std::string err_path = "/tmp/kumlat_test_" + std::to_string(getpid()) + "_" +
                                 std::to_string(counter++) + ".stderr";
    const std::string full = command + " 2>" + err_path;

    RunResult result;
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        throw std::runtime_error("popen failed for: " + command);
    }
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    if (FILE* ef = fopen(err_path.c_str(), "r")) {
        while ((got = fread(buf.data(), 1, buf.size(), ef)) > 0) {
            result.err.append(buf.data(), got);
        }
        fclose(ef);
        std::remove(err_path.c_str());
    }
    return result;
}

} // namespace testutil

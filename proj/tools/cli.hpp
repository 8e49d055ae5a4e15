#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <surfskew/surfskew.hpp>

namespace surfskew::cli {

// sysexits-style codes
enum Exit : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBoundsOnly = 2,
    kUsage = 64,
    kNoInput = 66,
    kCantCreate = 73,
};

struct ExitError {
    int code;
    std::string message;
};

// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ConstructionParams {
    std::optional<int> a, b, d, r;
    std::optional<std::int64_t> k;
};

struct Built {
    RotationSystem rs;
    DeletionCertificate cert;
    std::optional<Vdqc> vdqc;
};

const std::vector<std::string>& construction_names();
Built build_construction(const std::string& name, const ConstructionParams& p);

// Table text for a report suite; `rows` narrows the default parameter range.
struct Suite {
    std::string text;
    bool ok = true;
};
Suite report_suite(const std::string& name, std::optional<std::pair<int, int>> range);
const std::vector<std::string>& suite_names();

std::string pad(const std::string& s, std::size_t width);

}  // namespace surfskew::cli

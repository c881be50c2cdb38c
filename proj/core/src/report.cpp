#include "hvlab/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hvlab/subset.hpp"

namespace hvlab {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "PASS";
    case Verdict::Fail:
        return "FAIL";
    case Verdict::Skip:
        return "SKIP";
    }
    return "?";
}

std::size_t Witness::at(const std::string& role) const
{
    for (const auto& e : elements) {
        if (e.role == role) {
            return e.index;
        }
    }
    throw std::out_of_range("witness has no element with role " + role);
}

std::size_t max_carrier_size()
{
    constexpr std::size_t kDefault = 16;
    const char* env = std::getenv("HVLAB_MAX_CARRIER");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
        return kDefault;
    }
    return std::min<std::size_t>(static_cast<std::size_t>(v), kSubsetWordBits);
}

} // namespace hvlab

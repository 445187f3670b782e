#include "spectroham/tolerance.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spectroham {

namespace {

double read_eps()
{
    const char* raw = std::getenv("SPECTROHAM_EPS");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultEps;
    }
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value > 0.0)) {
        throw std::invalid_argument(std::string("SPECTROHAM_EPS must be a positive number, got '") +
                                    raw + "'");
    }
    return value;
}

}  // namespace

double eps()
{
    static const double value = read_eps();
    return value;
}

}  // namespace spectroham

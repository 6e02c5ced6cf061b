#include "fibnim/ext_nat.hpp"

#include <charconv>

namespace fibnim {

ExtNat ExtNat::parse(const std::string& text) {
    if (text == "inf" || text == "INF" || text == "Inf" || text == "∞") {
        return inf();
    }
    std::uint64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("expected a nonnegative integer or 'inf', got '" + text + "'");
    }
    return ExtNat{v};
}

}  // namespace fibnim

#include "tam/compilers.hpp"

namespace tam {

std::int64_t ce_spacing(const std::string& family, std::int64_t n) {
    if (family == "quadratic") return n * n;
    if (family == "identity") return n;
    throw std::invalid_argument("unsupported spacing family: " + family);
}

CompiledSystem compile_ce_bar(const TuringMachine& m, const CeBarOptions& opts) {
    (void)m;
    (void)opts;
    throw std::logic_error("cebar: not yet built");
}

}  // namespace tam

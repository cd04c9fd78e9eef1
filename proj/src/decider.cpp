#include "tam/compilers.hpp"

namespace tam {

CompiledSystem compile_decider_stack(const TuringMachine& m) {
    (void)m;
    throw std::logic_error("decider: not yet built");
}

}  // namespace tam

#ifndef DEDUCTIO_CORE_HPP
#define DEDUCTIO_CORE_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace deductio {

// Error categories map onto CLI exit codes: input-shaped problems exit 2,
// property violations exit 1.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

class cap_exceeded : public error {
public:
    explicit cap_exceeded(const std::string& what) : error("cap exceeded: " + what) {}
};

class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

struct Caps {
    int formulas = 20000;       // generated formula carriers
    int lattice = 64;           // directly presented lattices
    int powerset = 4096;        // powerset-derived carriers
    int tensor = 4096;          // tensor product carriers
    int hom_candidates = 4000000; // candidate assignments scanned per hom enumeration
    int universe = 4096;        // sequent universe carriers
    int idem_window = 8;        // variable window x1..xW for idempotency checks
};

// Default caps; DEDUCTIO_CAP=N raises (or lowers) every count-shaped cap to N.
inline const Caps& caps() {
    static const Caps c = [] {
        Caps c;
        if (const char* env = std::getenv("DEDUCTIO_CAP")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                c.formulas = static_cast<int>(v);
                c.powerset = static_cast<int>(v);
                c.tensor = static_cast<int>(v);
                c.universe = static_cast<int>(v);
                c.hom_candidates = static_cast<int>(v);
            }
        }
        return c;
    }();
    return c;
}

} // namespace deductio

#endif

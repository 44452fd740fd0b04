#ifndef QWALK_ERRORS_HPP
#define QWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwalk {

// Error categories, mapped to CLI exit codes:
//   domain/regime -> 2, accuracy -> 3, resource -> 4.
enum class Errc { domain, regime, accuracy, resource };

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
    Errc code;
};

inline int exit_code(Errc c) {
    switch (c) {
        case Errc::domain:
        case Errc::regime: return 2;
        case Errc::accuracy: return 3;
        case Errc::resource: return 4;
    }
    return 1;
}

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace qwalk

#endif

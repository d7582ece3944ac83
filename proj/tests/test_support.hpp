#pragma once

#include <string>

#include "spinal/spinal.hpp"

namespace testing_support {

/// EGS datum with e = (1,0) over p = 3: b = b[3,1], c = b[1,1].
inline spinal::Datum d3() { return spinal::make_special_datum(spinal::Family::EGS, 3, {{1, 0}}); }

inline spinal::GroupWord w(const std::string& text, const spinal::Datum& d) { return spinal::parse_word(text, d); }

template <class F>
spinal::ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const spinal::Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected a spinal::Error");
}

}  // namespace testing_support

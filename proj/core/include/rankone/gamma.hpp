#pragma once

#include <rankone/common.hpp>

namespace rankone {

/// Gamma function for complex argument (Lanczos, g = 7, 9 terms, ~15 digits).
Complex gamma(Complex z);

}  // namespace rankone

// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace helix {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace helix
